//! Exact check of the defining RTT relations on a module.

use super::Rep;
use crate::rmatrix::RMatrix;
use crate::superlinalg::superops::{parities, tensor_parities};
use crate::superlinalg::{Mat, OpMat, OpPoly, SeriesOp, Var};

/// Outcome of the relation checks; `None` where the relation does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RttReport {
    pub rss: bool,
    pub rtt: Option<bool>,
    pub rts: Option<bool>,
}

impl RttReport {
    pub fn all_hold(&self) -> bool {
        self.rss && self.rtt.unwrap_or(true) && self.rts.unwrap_or(true)
    }
}

/// `sum_ij x_ij(z) (x) E_ij (x) 1` (slot 2) or `(x) 1 (x) E_ij` (slot 3),
/// numerators only, in the variable at position `pos`.
fn embed(rep: &Rep, ops: &[SeriesOp], third: bool, pos: usize) -> OpPoly<2> {
    let n = rep.rank();
    let pv = parities(rep.sd);
    let pvv = tensor_parities(rep.sd, 2);
    let id: OpMat = Mat::identity(n);
    let mut out = OpPoly::zero(rep.dim() * n * n);
    for i in 0..n {
        for j in 0..n {
            let e = Mat::unit(n, i, j);
            let on_vv = if third {
                id.super_kron(&pv, &e, &pv)
            } else {
                e.kron(&id)
            };
            let o = &ops[i * n + j];
            let sgn = if o.var() == Var::Z { 1 } else { -1 };
            for (k, m) in o.num().iter().enumerate() {
                let mut ex = [0i32; 2];
                ex[pos] = sgn * k as i32;
                out.add_term(ex, m.super_kron(rep.parity(), &on_vv, &pvv));
            }
        }
    }
    out
}

/// `R23 X12(z) Y13(w) = Y13(w) X12(z) R23` with denominators cleared.
fn relation(rep: &Rep, r23: &OpPoly<2>, x: &[SeriesOp], y: &[SeriesOp]) -> bool {
    let x12 = embed(rep, x, false, 0);
    let y13 = embed(rep, y, true, 1);
    r23.mul(&x12).mul(&y13) == y13.mul(&x12).mul(r23)
}

/// Checks the relations `RSS = SSR`, `RTT = TTR` and `RTS = STR`.
pub fn check_rtt(rep: &Rep) -> RttReport {
    let rm = RMatrix::perk_schultz(rep.sd);
    let idw: OpMat = Mat::identity(rep.dim());
    let r23 = rm.spectral().map(|a| idw.kron(a));
    let rss = relation(rep, &r23, rep.s_all(), rep.s_all());
    let (rtt, rts) = match rep.t_all() {
        Some(t) => (
            Some(relation(rep, &r23, t, t)),
            Some(relation(rep, &r23, t, rep.s_all())),
        ),
        None => (None, None),
    };
    RttReport { rss, rtt, rts }
}

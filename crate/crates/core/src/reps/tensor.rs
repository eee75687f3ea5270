//! Tensor products through the coproduct of the generating series.

use super::{Rep, RepError, RepKind};
use crate::superlinalg::SeriesOp;

fn coproduct(
    n: usize,
    a: &[SeriesOp],
    pa: &[u8],
    b: &[SeriesOp],
    pb: &[u8],
    sd: crate::superlinalg::Superdim,
) -> Vec<SeriesOp> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc: Option<SeriesOp> = None;
            for k in 0..n {
                let (x, y) = (&a[i * n + k], &b[k * n + j]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let mut term = x.super_kron(pa, y, pb);
                let e = (sd.parity(i) ^ sd.parity(k)) & (sd.parity(k) ^ sd.parity(j));
                if e == 1 {
                    term = term.neg();
                }
                acc = Some(match acc {
                    None => term,
                    Some(s) => s.add(&term),
                });
            }
            out.push(acc.unwrap_or_else(|| {
                SeriesOp::zero(a[0].var(), pa.len() * pb.len())
            }));
        }
    }
    out
}

/// `A (x) B` with `Delta(s_ij) = sum_k (-1)^{(|i|+|k|)(|k|+|j|)} s_ik (x) s_kj`
/// and the same rule for `t`. A q-Yangian factor makes the product q-Yangian.
pub fn tensor(a: &Rep, b: &Rep) -> Result<Rep, RepError> {
    if a.sd != b.sd {
        return Err(RepError::AlgebraMismatch(a.sd, b.sd));
    }
    let kind = match (a.kind, b.kind) {
        (RepKind::FiniteType, RepKind::FiniteType) => RepKind::FiniteType,
        (RepKind::FiniteType, _) | (_, RepKind::FiniteType) => {
            return Err(RepError::Unsupported(
                "finite type modules only tensor with each other".into(),
            ))
        }
        (RepKind::Affine, RepKind::Affine) => RepKind::Affine,
        _ => RepKind::QYangian,
    };
    let n = a.rank();
    let (pa, pb) = (a.parity(), b.parity());
    let s = coproduct(n, a.s_all(), pa, b.s_all(), pb, a.sd);
    let t = match kind {
        RepKind::QYangian => None,
        _ => Some(coproduct(
            n,
            a.t_all().unwrap(),
            pa,
            b.t_all().unwrap(),
            pb,
            a.sd,
        )),
    };
    Rep::new(a.sd, a.space.tensor(&b.space), kind, s, t)
}

/// Left to right tensor product of a nonempty list.
pub fn tensor_all(factors: &[Rep]) -> Result<Rep, RepError> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| RepError::InvalidParameter("empty tensor product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| tensor(&acc, f))
}

//! The trigonometric R-matrix of `gl(M|N)` and its structural identities.

use crate::field::QRat;
use crate::superlinalg::superops::{
    braiding, koszul_twist, parities, supertranspose_both, tensor_parities,
};
use crate::superlinalg::{inverse, Mat, OpMat, OpPoly, Superdim};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RMatrixError {
    #[error("index out of range for {0}")]
    Index(Superdim),
    #[error("requested order {needed} exceeds truncation order {order}")]
    Truncation { needed: u32, order: u32 },
    #[error("R(1,0) is singular")]
    Singular,
}

/// `R(z,w) = z R - w R'` acting on `V (x) V`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    pub sd: Superdim,
    /// coefficient of `z`
    pub r: OpMat,
    /// minus the coefficient of `w`
    pub r_prime: OpMat,
}

fn q_i(sd: Superdim, i: usize) -> QRat {
    QRat::q_pow(sd.d(i))
}

fn q_diff(sd: Superdim, i: usize) -> QRat {
    q_i(sd, i).sub(&q_i(sd, i).inv().unwrap())
}

impl RMatrix {
    /// The standard solution built from elementary tensors.
    pub fn perk_schultz(sd: Superdim) -> Self {
        let n = sd.rank();
        let idx = |i: usize, k: usize| i * n + k;
        let mut zt = Vec::new();
        let mut wt = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // E_ii (x) E_jj
                let (r, c) = (idx(i, j), idx(i, j));
                if i == j {
                    zt.push((r, c, q_i(sd, i)));
                    wt.push((r, c, q_i(sd, i).inv().unwrap()));
                } else {
                    zt.push((r, c, QRat::one()));
                    wt.push((r, c, QRat::one()));
                }
                if i < j {
                    // z (q_i - q_i^{-1}) E_ji (x) E_ij
                    zt.push((idx(j, i), idx(i, j), q_diff(sd, i)));
                    // w (q_j - q_j^{-1}) E_ij (x) E_ji, entering R' with a minus sign
                    wt.push((idx(i, j), idx(j, i), q_diff(sd, j).neg()));
                }
            }
        }
        let r = koszul_twist(&Mat::from_triplets(n * n, n * n, zt), sd);
        let r_prime = koszul_twist(&Mat::from_triplets(n * n, n * n, wt), sd);
        RMatrix { sd, r, r_prime }
    }

    /// `R(z,w)` at given values of the spectral parameters.
    pub fn at(&self, z: &QRat, w: &QRat) -> OpMat {
        self.r.scale(z).sub(&self.r_prime.scale(w))
    }

    /// `R(z,w)` as a polynomial in `(z, w)`.
    pub fn spectral(&self) -> OpPoly<2> {
        let mut p = OpPoly::monomial([1, 0], self.r.clone());
        p.add_term([0, 1], self.r_prime.neg());
        p
    }

    /// Coefficients on `E_ij (x) E_kl` (row `(i,k)`, column `(j,l)`).
    pub fn elementary(&self) -> (OpMat, OpMat) {
        (
            koszul_twist(&self.r, self.sd),
            koszul_twist(&self.r_prime, self.sd),
        )
    }

    /// Image under `q -> q^{-1}`.
    pub fn q_inverted(&self) -> Self {
        RMatrix {
            sd: self.sd,
            r: self.r.map(QRat::subs_q_inv),
            r_prime: self.r_prime.map(QRat::subs_q_inv),
        }
    }

    /// Entry `R_{ab,cd}(z,w)` split into its `z` and `w` coefficients.
    pub fn entry(&self, a: usize, b: usize, c: usize, d: usize) -> (QRat, QRat) {
        let n = self.sd.rank();
        (
            self.r.get(a * n + b, c * n + d),
            self.r_prime.get(a * n + b, c * n + d).neg(),
        )
    }
}

/// Projectors onto the two eigenspaces `V+` and `V-` of the braided R-matrix.
pub fn projectors(sd: Superdim) -> (OpMat, OpMat) {
    let n = sd.rank();
    let q = QRat::q();
    let qi = q.inv().unwrap();
    let mut plus: Vec<Vec<(usize, QRat)>> = Vec::new();
    let mut minus: Vec<Vec<(usize, QRat)>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let s = QRat::from_int(if sd.parity(i) & sd.parity(j) == 1 { -1 } else { 1 });
            plus.push(vec![(i * n + j, q.clone()), (j * n + i, s.clone())]);
            minus.push(vec![(i * n + j, qi.clone()), (j * n + i, s.neg())]);
        }
        if i < sd.m {
            plus.push(vec![(i * n + i, QRat::one())]);
        } else {
            minus.push(vec![(i * n + i, QRat::one())]);
        }
    }
    let np = plus.len();
    let mut cols = plus;
    cols.extend(minus);
    for c in cols.iter_mut() {
        c.sort_by_key(|e| e.0);
    }
    let b = Mat::from_columns(n * n, cols);
    let binv = inverse(&b).expect("the two eigenspaces span V (x) V");
    let sel = |lo: usize, hi: usize| {
        Mat::diagonal(
            &(0..n * n)
                .map(|k| {
                    if k >= lo && k < hi {
                        QRat::one()
                    } else {
                        QRat::zero()
                    }
                })
                .collect::<Vec<_>>(),
        )
    };
    (
        b.mul(&sel(0, np)).mul(&binv),
        b.mul(&sel(np, n * n)).mul(&binv),
    )
}

/// The structural identities satisfied by the R-matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    YangBaxter,
    Unitarity,
    IceRule,
    TransposeSymmetry,
    SpectralSplit,
    Hecke,
    QInversion,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::YangBaxter,
        Property::Unitarity,
        Property::IceRule,
        Property::TransposeSymmetry,
        Property::SpectralSplit,
        Property::Hecke,
        Property::QInversion,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::YangBaxter => "yang-baxter",
            Property::Unitarity => "unitarity",
            Property::IceRule => "ice-rule",
            Property::TransposeSymmetry => "transpose-symmetry",
            Property::SpectralSplit => "spectral-split",
            Property::Hecke => "hecke",
            Property::QInversion => "q-inversion",
        };
        f.write_str(s)
    }
}

fn embed_12(a: &OpMat, sd: Superdim) -> OpMat {
    let pv = parities(sd);
    let p2 = tensor_parities(sd, 2);
    a.super_kron(&p2, &Mat::identity(sd.rank()), &pv)
}

fn embed_23(a: &OpMat, sd: Superdim) -> OpMat {
    let pv = parities(sd);
    let p2 = tensor_parities(sd, 2);
    Mat::identity(sd.rank()).super_kron(&pv, a, &p2)
}

/// `R(z_a, z_b)` placed on a pair of the three tensor factors.
fn three_site(rm: &RMatrix, slot: (usize, usize)) -> OpPoly<3> {
    let sd = rm.sd;
    let c23 = embed_23(&braiding(sd), sd);
    let place = |m: &OpMat| -> OpMat {
        match slot {
            (0, 1) => embed_12(m, sd),
            (1, 2) => embed_23(m, sd),
            (0, 2) => c23.mul(&embed_12(m, sd)).mul(&c23),
            _ => unreachable!(),
        }
    };
    let mut ez = [0; 3];
    ez[slot.0] = 1;
    let mut ew = [0; 3];
    ew[slot.1] = 1;
    let mut p = OpPoly::monomial(ez, place(&rm.r));
    p.add_term(ew, place(&rm.r_prime).neg());
    p
}

fn check_yang_baxter(rm: &RMatrix) -> bool {
    let r12 = three_site(rm, (0, 1));
    let r13 = three_site(rm, (0, 2));
    let r23 = three_site(rm, (1, 2));
    r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12)
}

fn swap_vars(p: &OpPoly<2>) -> OpPoly<2> {
    let mut r = OpPoly::zero(p.dim());
    for (e, a) in p.terms() {
        r.add_term([e[1], e[0]], a.clone());
    }
    r
}

fn check_unitarity(rm: &RMatrix) -> bool {
    let c = braiding(rm.sd);
    let n2 = c.rows();
    let rzw = rm.spectral();
    let rwz = swap_vars(&rzw);
    let lhs = rzw.mul(&rwz.sandwich(&c, &c));
    // (zq - wq^{-1})(wq - zq^{-1}) = -z^2 + (q^2 + q^{-2}) zw - w^2
    let id: OpMat = Mat::identity(n2);
    let mut rhs = OpPoly::monomial([2, 0], id.neg());
    rhs.add_term([0, 2], id.neg());
    rhs.add_term([1, 1], id.scale(&QRat::q_pow(2).add(&QRat::q_pow(-2))));
    lhs == rhs
}

fn check_ice_rule(rm: &RMatrix) -> bool {
    let n = rm.sd.rank();
    let ok = |m: &OpMat| {
        m.entries().all(|(r, c, _)| {
            let (a, b, x, y) = (r / n, r % n, c / n, c % n);
            (a == x && b == y) || (a == y && b == x)
        })
    };
    ok(&rm.r) && ok(&rm.r_prime)
}

fn check_transpose_symmetry(rm: &RMatrix) -> bool {
    let sd = rm.sd;
    let c = braiding(sd);
    [&rm.r, &rm.r_prime].iter().all(|m| {
        let lhs = koszul_twist(&c.mul(m).mul(&c), sd);
        let rhs = supertranspose_both(&koszul_twist(m, sd), sd);
        lhs == rhs
    })
}

fn check_spectral_split(rm: &RMatrix) -> bool {
    let c = braiding(rm.sd);
    let Some(rinv) = inverse(&rm.r) else {
        return false;
    };
    if c.mul(&rinv).mul(&c) != rm.r_prime {
        return false;
    }
    // R(z,w) = c((zq - w/q) P+ + (wq - z/q) P-)
    let (pp, pm) = projectors(rm.sd);
    let q = QRat::q();
    let qi = q.inv().unwrap();
    let zc = c.mul(&pp.scale(&q).sub(&pm.scale(&qi)));
    let wc = c.mul(&pm.scale(&q).sub(&pp.scale(&qi)));
    zc == rm.r && wc == rm.r_prime.neg()
}

fn check_hecke(rm: &RMatrix) -> bool {
    let c = braiding(rm.sd);
    let qq = QRat::q().sub(&QRat::q_pow(-1));
    rm.r.sub(&c.scale(&qq)) == rm.r_prime
}

fn check_q_inversion(rm: &RMatrix) -> bool {
    let inv = rm.q_inverted();
    let n2 = rm.r.rows();
    let id: OpMat = Mat::identity(n2);
    if rm.r.mul(&inv.r) != id || rm.r_prime.mul(&inv.r_prime) != id {
        return false;
    }
    // R_q(z,w) R_{1/q}(z,w) = (zq - w/q)(z/q - wq) Id
    let lhs = rm.spectral().mul(&inv.spectral());
    let mut rhs = OpPoly::monomial([2, 0], id.clone());
    rhs.add_term([0, 2], id.clone());
    rhs.add_term([1, 1], id.scale(&QRat::q_pow(2).add(&QRat::q_pow(-2)).neg()));
    lhs == rhs
}

/// Evaluates one identity on a given R-matrix.
pub fn check_property(rm: &RMatrix, p: Property) -> bool {
    match p {
        Property::YangBaxter => check_yang_baxter(rm),
        Property::Unitarity => check_unitarity(rm),
        Property::IceRule => check_ice_rule(rm),
        Property::TransposeSymmetry => check_transpose_symmetry(rm),
        Property::SpectralSplit => check_spectral_split(rm),
        Property::Hecke => check_hecke(rm),
        Property::QInversion => check_q_inversion(rm),
    }
}

/// All identities for the standard R-matrix of `gl(M|N)`.
pub fn check_properties(sd: Superdim) -> Vec<(Property, bool)> {
    let rm = RMatrix::perk_schultz(sd);
    Property::ALL
        .iter()
        .map(|&p| (p, check_property(&rm, p)))
        .collect()
}

/// Indices of a generator `s_ij^(n)` or `t_ij^(m)`, zero based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeIndex {
    pub i: usize,
    pub j: usize,
    pub mode: u32,
}

/// Default truncation order for series expansions.
pub const DEFAULT_TRUNC: u32 = 8;

/// `phi(s_ij^(n), t_ab^(m))`: the coefficient of `z^{-m} w^n` on
/// `E_ab (x) E_ij` in `R(z,w)/(zq - w q^{-1})`, expanded in `z^{-1}` and `w`.
pub fn hopf_pairing_value(
    sd: Superdim,
    s: ModeIndex,
    t: ModeIndex,
    trunc: u32,
) -> Result<QRat, RMatrixError> {
    let n = sd.rank();
    if [s.i, s.j, t.i, t.j].iter().any(|&x| x >= n) {
        return Err(RMatrixError::Index(sd));
    }
    let needed = s.mode.max(t.mode);
    if needed > trunc {
        return Err(RMatrixError::Truncation {
            needed,
            order: trunc,
        });
    }
    let rm = RMatrix::perk_schultz(sd);
    let (er, erp) = rm.elementary();
    // 1/(zq - w/q) = sum_k q^{-1-2k} z^{-1-k} w^k
    let mut series: OpPoly<2> = OpPoly::zero(n * n);
    for k in 0..=trunc as i32 {
        let c = QRat::q_pow(-1 - 2 * k);
        series.add_term([-k, k], er.scale(&c));
        series.add_term([-1 - k, k + 1], erp.scale(&c).neg());
    }
    let coeff = series.coeff(&[-(t.mode as i32), s.mode as i32]);
    Ok(coeff.get(t.i * n + s.i, t.j * n + s.j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_properties_small() {
        for (m, n) in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)] {
            for (p, ok) in check_properties(Superdim::new(m, n)) {
                assert!(ok, "{p} fails for gl({m}|{n})");
            }
        }
    }

    #[test]
    fn mutation_breaks_yang_baxter() {
        let sd = Superdim::new(2, 1);
        let mut rm = RMatrix::perk_schultz(sd);
        let n = sd.rank();
        let (r, c) = (1 * n, 1);
        let v = rm.r.get(r, c);
        let bump = Mat::from_triplets(n * n, n * n, [(r, c, v)]);
        rm.r = rm.r.add(&bump);
        assert!(!check_property(&rm, Property::YangBaxter));
    }

    #[test]
    fn pairing_closed_form() {
        // only equal modes pair; the value is read off R and R'
        let sd = Superdim::new(2, 1);
        let rm = RMatrix::perk_schultz(sd);
        let (er, erp) = rm.elementary();
        let n = sd.rank();
        for (i, j, a, b) in [(0, 0, 0, 0), (0, 1, 1, 0), (2, 2, 2, 2), (1, 2, 2, 1)] {
            for (nn, mm) in [(0u32, 0u32), (1, 1), (2, 2), (1, 2)] {
                let got = hopf_pairing_value(
                    sd,
                    ModeIndex { i, j, mode: nn },
                    ModeIndex { i: a, j: b, mode: mm },
                    8,
                )
                .unwrap();
                let mut want = QRat::zero();
                if nn == mm {
                    let k = nn as i32;
                    want = er.get(a * n + i, b * n + j).mul(&QRat::q_pow(-2 * k - 1));
                    if k >= 1 {
                        want = want.sub(&erp.get(a * n + i, b * n + j).mul(&QRat::q_pow(-2 * k + 1)));
                    }
                }
                assert_eq!(got, want);
            }
        }
    }
}

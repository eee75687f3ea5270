use super::{CycError, Mode};
use crate::field::{FactoredRatZ, PolyZ, QRat};
use crate::superlinalg::{det_bareiss, Mat, Superdim};

fn check_normalized(fs: &[FactoredRatZ]) -> Result<(), CycError> {
    if fs.iter().all(|f| f.scale().is_one()) {
        Ok(())
    } else {
        Err(CycError::NotNormalized)
    }
}

/// Zero/pole criterion for `V(f_1) (x) ... (x) V(f_s)` over `gl(1|1)`:
/// highest iff `P(f_i) ∩ Z(f_j) = ∅` for all `i < j`, lowest iff
/// `Z(f_i) ∩ P(f_j) = ∅` for all `i < j`.
pub fn web_predicate(fs: &[FactoredRatZ], mode: Mode) -> Result<bool, CycError> {
    check_normalized(fs)?;
    let zp: Vec<_> = fs.iter().map(FactoredRatZ::zeros_poles).collect();
    for i in 0..zp.len() {
        for j in i + 1..zp.len() {
            let ((zi, pi), (zj, pj)) = (&zp[i], &zp[j]);
            let clash = match mode {
                Mode::Highest => !pi.is_disjoint(zj),
                Mode::Lowest => !zi.is_disjoint(pj),
            };
            if clash {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Simplicity criterion: `P(f_i) ∩ Z(f_j) = ∅` for all `i != j`.
pub fn simplicity_gl11(fs: &[FactoredRatZ]) -> Result<bool, CycError> {
    let fwd = web_predicate(fs, Mode::Highest)?;
    let rev: Vec<FactoredRatZ> = fs.iter().rev().cloned().collect();
    Ok(fwd && web_predicate(&rev, Mode::Highest)?)
}

/// Criterion for `V(a_1) (x) ... (x) V(a_k)`: highest iff `a_i != a_j q_1^{-2}`,
/// lowest iff `a_i != a_j q_{M+N}^{-2}`, for all `i < j`.
pub fn natural_cyclicity(params: &[QRat], sd: Superdim, mode: Mode) -> bool {
    let idx = match mode {
        Mode::Highest => 0,
        Mode::Lowest => sd.rank() - 1,
    };
    let shift = QRat::q_pow(-2 * sd.d(idx));
    params.iter().enumerate().all(|(i, ai)| {
        params[i + 1..].iter().all(|aj| *ai != aj.mul(&shift))
    })
}

/// The hypothesis `x_1 >= x_2 >= ... >= x_k` under which a tensor product of
/// KR modules at `a q_r^{x_j}` is known to be cyclic.
pub fn kr_cyclicity_sufficient(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

/// `f_j(z) = prod_{i<j} (1 - z a_i) prod_{i>j} (1 - z a'_i)` for `j = 1..k`.
pub fn polynomial_family(a: &[QRat], a_prime: &[QRat]) -> Vec<PolyZ> {
    assert_eq!(a.len(), a_prime.len());
    let k = a.len();
    (0..k)
        .map(|j| {
            let left = a[..j].iter().fold(PolyZ::one(), |p, x| p.mul(&PolyZ::linear(x)));
            a_prime[j + 1..]
                .iter()
                .fold(left, |p, x| p.mul(&PolyZ::linear(x)))
        })
        .collect()
}

/// Determinant of the coefficients of the `f_j` in the basis `1, z, ..., z^{k-1}`.
pub fn polynomial_family_det(a: &[QRat], a_prime: &[QRat]) -> QRat {
    let fs = polynomial_family(a, a_prime);
    let k = fs.len();
    let rows: Vec<Vec<QRat>> = fs.iter().map(|f| (0..k).map(|m| f.coeff(m)).collect()).collect();
    det_bareiss(&Mat::from_dense(&rows))
}

/// `prod_{i<j} (a'_j - a_i)`.
pub fn wedge_product_formula(a: &[QRat], a_prime: &[QRat]) -> QRat {
    let k = a.len();
    let mut p = QRat::one();
    for j in 0..k {
        for ai in &a[..j] {
            p = p.mul(&a_prime[j].sub(ai));
        }
    }
    p
}

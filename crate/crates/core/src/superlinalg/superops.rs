//! Braiding, supertranspose and the dictionary between elements of
//! `End V (x) End V` and their action on `V (x) V`.

use super::mat::{Mat, OpMat};
use super::weight::Superdim;
use crate::field::QRat;

fn sign(neg: bool) -> QRat {
    QRat::from_int(if neg { -1 } else { 1 })
}

/// Parities of the standard basis of `V`.
pub fn parities(sd: Superdim) -> Vec<u8> {
    (0..sd.rank()).map(|i| sd.parity(i)).collect()
}

/// Parities of the basis of `V^{(x) k}`.
pub fn tensor_parities(sd: Superdim, k: usize) -> Vec<u8> {
    let p = parities(sd);
    let mut out = vec![0u8];
    for _ in 0..k {
        out = out
            .iter()
            .flat_map(|a| p.iter().map(move |b| a ^ b))
            .collect();
    }
    out
}

/// The braiding `v_i (x) v_j -> (-1)^{|i||j|} v_j (x) v_i`.
pub fn braiding(sd: Superdim) -> OpMat {
    let n = sd.rank();
    Mat::from_triplets(
        n * n,
        n * n,
        (0..n).flat_map(|i| {
            (0..n).map(move |j| {
                let s = sd.parity(i) & sd.parity(j) == 1;
                (j * n + i, i * n + j, sign(s))
            })
        }),
    )
}

/// Supertranspose `E_ij -> (-1)^{|i|(|i|+|j|)} E_ji` on `End V`.
pub fn supertranspose(a: &OpMat, sd: Superdim) -> OpMat {
    Mat::from_triplets(
        a.cols(),
        a.rows(),
        a.entries().map(|(i, j, v)| {
            let s = sd.parity(i) & (sd.parity(i) ^ sd.parity(j)) == 1;
            (j, i, if s { v.neg() } else { v.clone() })
        }),
    )
}

/// Converts between the action matrix of an element of `End V (x) End V`
/// on `V (x) V` and its coefficients on `E_ij (x) E_kl`, stored at row
/// `(i,k)` and column `(j,l)`. The map is an involution.
pub fn koszul_twist(m: &OpMat, sd: Superdim) -> OpMat {
    let n = sd.rank();
    Mat::from_triplets(
        m.rows(),
        m.cols(),
        m.entries().map(|(r, c, v)| {
            let (k, j, l) = (r % n, c / n, c % n);
            let s = (sd.parity(k) ^ sd.parity(l)) & sd.parity(j) == 1;
            (r, c, if s { v.neg() } else { v.clone() })
        }),
    )
}

/// `tau (x) tau` on the coefficient form of an element of `End V (x) End V`.
pub fn supertranspose_both(elem: &OpMat, sd: Superdim) -> OpMat {
    let n = sd.rank();
    let eps = |i: usize, j: usize| sd.parity(i) & (sd.parity(i) ^ sd.parity(j)) == 1;
    Mat::from_triplets(
        elem.rows(),
        elem.cols(),
        elem.entries().map(|(r, c, v)| {
            let (i, k, j, l) = (r / n, r % n, c / n, c % n);
            let s = eps(i, j) ^ eps(k, l);
            (j * n + l, i * n + k, if s { v.neg() } else { v.clone() })
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braiding_squares_to_one() {
        let sd = Superdim::new(1, 2);
        let c = braiding(sd);
        assert_eq!(c.mul(&c), Mat::identity(9));
    }

    #[test]
    fn twist_is_involution() {
        let sd = Superdim::new(1, 1);
        let c = braiding(sd);
        assert_eq!(koszul_twist(&koszul_twist(&c, sd), sd), c);
    }
}

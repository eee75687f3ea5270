//! Row reduction: incremental echelon bases, kernels, inverses, determinants.

use super::mat::{Mat, SVec};
use super::scalar::Scalar;
use std::collections::BTreeMap;

/// `a * v - c * b` on sparse vectors.
pub(crate) fn cross_combine<F: Scalar>(a: &F, v: &[(usize, F)], c: &F, b: &[(usize, F)]) -> SVec<F> {
    let mut out = Vec::with_capacity(v.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < v.len() || y < b.len() {
        if y >= b.len() || (x < v.len() && v[x].0 < b[y].0) {
            out.push((v[x].0, a.mul(&v[x].1)));
            x += 1;
        } else if x >= v.len() || b[y].0 < v[x].0 {
            out.push((b[y].0, c.mul(&b[y].1).neg()));
            y += 1;
        } else {
            let t = a.mul(&v[x].1).sub(&c.mul(&b[y].1));
            if !t.is_zero() {
                out.push((v[x].0, t));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

/// A growing set of linearly independent vectors kept in echelon form.
///
/// Each stored vector is keyed by its first nonzero index; reduction uses
/// cross multiplication so no division happens in the ring of entries.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: BTreeMap<usize, SVec<F>>,
}

impl<F: Scalar> Default for Echelon<F> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<F: Scalar> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SVec<F>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Remainder of `v` modulo the span, normalized; empty when `v` lies in it.
    pub fn reduce(&self, mut v: SVec<F>) -> SVec<F> {
        loop {
            let Some(&(p, _)) = v.iter().find(|(i, _)| self.rows.contains_key(i)) else {
                break;
            };
            let b = &self.rows[&p];
            let k = v.binary_search_by_key(&p, |e| e.0).unwrap();
            let c = v[k].1.clone();
            v = cross_combine(&b[0].1, &v, &c, b);
        }
        if !v.is_empty() {
            F::normalize_line(&mut v);
        }
        v
    }

    pub fn contains(&self, v: SVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` if it is independent; returns the reduced vector that was stored.
    pub fn insert(&mut self, v: SVec<F>) -> Option<&SVec<F>> {
        let r = self.reduce(v);
        if r.is_empty() {
            return None;
        }
        let p = r[0].0;
        self.rows.insert(p, r);
        self.rows.get(&p)
    }
}

/// Reduced row echelon form of a dense matrix over a field, in place.
/// Returns the pivot columns.
pub fn rref_dense<F: Scalar>(a: &mut [Vec<F>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..cols {
                    if !a[r][k].is_zero() {
                        let t = a[r][k].mul(&f);
                        a[i][k] = a[i][k].sub(&t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the null space `{x : A x = 0}`.
pub fn kernel<F: Scalar>(a: &Mat<F>) -> Vec<SVec<F>> {
    let mut d = a.to_dense();
    let pivots = rref_dense(&mut d);
    let n = a.cols();
    let mut is_pivot = vec![None; n];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|&c| is_pivot[c].is_none()) {
        let mut v: SVec<F> = Vec::new();
        for (r, &c) in pivots.iter().enumerate() {
            if !d[r][free].is_zero() {
                v.push((c, d[r][free].neg()));
            }
        }
        v.push((free, F::one()));
        v.sort_by_key(|e| e.0);
        out.push(v);
    }
    out
}

/// Stacks matrices with equal column count on top of each other.
pub fn vstack<F: Scalar>(mats: &[&Mat<F>]) -> Mat<F> {
    let cols = mats.first().map_or(0, |m| m.cols());
    let mut off = 0;
    let mut trip = Vec::new();
    for m in mats {
        assert_eq!(m.cols(), cols);
        trip.extend(m.entries().map(|(i, j, v)| (i + off, j, v.clone())));
        off += m.rows();
    }
    Mat::from_triplets(off, cols, trip)
}

pub fn rank<F: Scalar>(a: &Mat<F>) -> usize {
    let mut d = a.to_dense();
    rref_dense(&mut d).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Scalar>(a: &Mat<F>) -> Option<Mat<F>> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "inverse of non-square matrix");
    let mut d: Vec<Vec<F>> = a.to_dense();
    for (i, row) in d.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
    }
    let piv = rref_dense(&mut d);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(Mat::from_dense(
        &d.into_iter().map(|r| r[n..].to_vec()).collect::<Vec<_>>(),
    ))
}

/// Determinant by fraction free (Bareiss) elimination.
pub fn det_bareiss<F: Scalar>(a: &Mat<F>) -> F {
    let n = a.rows();
    assert_eq!(n, a.cols());
    if n == 0 {
        return F::one();
    }
    let mut m = a.to_dense();
    let mut sign_neg = false;
    let mut prev = F::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign_neg = !sign_neg;
                }
                None => return F::zero(),
            }
        }
        let pinv = prev.inv().expect("nonzero previous pivot");
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.mul(&pinv);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_neg {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QRat;

    fn q(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_and_det() {
        let a = Mat::from_dense(&[vec![q("q"), q("1")], vec![q("1"), q("q^-1")]]);
        assert!(inverse(&a).is_none());
        assert!(det_bareiss(&a).is_zero());
        let b = Mat::from_dense(&[vec![q("q"), q("1")], vec![q("0"), q("q^-1")]]);
        let bi = inverse(&b).unwrap();
        assert_eq!(b.mul(&bi), Mat::identity(2));
        assert_eq!(det_bareiss(&b), QRat::one());
    }

    #[test]
    fn echelon_membership() {
        let mut e: Echelon<QRat> = Echelon::new();
        e.insert(vec![(0, q("q")), (1, q("1"))]);
        assert!(e.contains(vec![(0, q("q^2")), (1, q("q"))]));
        assert!(!e.contains(vec![(1, q("1"))]));
    }

    #[test]
    fn kernel_basis() {
        let a = Mat::from_dense(&[vec![q("1"), q("q"), q("0")]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(a.apply(&v).is_empty());
        }
    }
}

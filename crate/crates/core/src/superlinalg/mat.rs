//! Column sparse matrices over a [`Scalar`].

use super::scalar::Scalar;
use crate::field::QRat;

/// Sparse vector as `(index, value)` pairs sorted by index, no zeros.
pub type SVec<F> = Vec<(usize, F)>;

/// Sparse matrix stored column by column with rows sorted and zeros dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<SVec<F>>,
}

/// Operator matrix over `Q(q)`.
pub type OpMat = Mat<QRat>;

/// Accumulates `sum c_j col_j` and returns the sorted sparse result.
pub(crate) struct Accum<F> {
    slots: Vec<Option<F>>,
    touched: Vec<usize>,
}

impl<F: Scalar> Accum<F> {
    pub(crate) fn new(n: usize) -> Self {
        Accum {
            slots: vec![None; n],
            touched: Vec::new(),
        }
    }

    pub(crate) fn add(&mut self, i: usize, v: F) {
        match &mut self.slots[i] {
            Some(x) => *x = x.add(&v),
            s @ None => {
                *s = Some(v);
                self.touched.push(i);
            }
        }
    }

    pub(crate) fn drain(&mut self) -> SVec<F> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(x) = self.slots[i].take() {
                if !x.is_zero() {
                    out.push((i, x));
                }
            }
        }
        self.touched.clear();
        out
    }
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![F::one(); n])
    }

    pub fn diagonal(d: &[F]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            if !v.is_zero() {
                m.data[i].push((i, v.clone()));
            }
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_triplets(n, n, [(i, j, F::one())])
    }

    /// Builds a matrix, summing repeated positions.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, F)>>(
        rows: usize,
        cols: usize,
        it: I,
    ) -> Self {
        let mut per_col: Vec<Vec<(usize, F)>> = vec![Vec::new(); cols];
        for (i, j, v) in it {
            assert!(i < rows && j < cols, "triplet out of range");
            if !v.is_zero() {
                per_col[j].push((i, v));
            }
        }
        let mut acc = Accum::new(rows);
        let data = per_col
            .into_iter()
            .map(|c| {
                for (i, v) in c {
                    acc.add(i, v);
                }
                acc.drain()
            })
            .collect();
        Mat { rows, cols, data }
    }

    pub fn from_columns(rows: usize, cols: Vec<SVec<F>>) -> Self {
        Mat {
            rows,
            cols: cols.len(),
            data: cols,
        }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_triplets(
            r,
            c,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut d = vec![vec![F::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> &[(usize, F)] {
        &self.data[j]
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        match self.data[j].binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.data[j][k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|c| c.iter().map(|(i, v)| (*i, v.neg())).collect())
                .collect(),
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|c| c.iter().map(|(i, v)| (*i, v.mul(k))).collect())
                .collect(),
        }
    }

    fn combine(&self, o: &Self, sub: bool) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (0, 0);
                while x < a.len() || y < b.len() {
                    let take_a = y >= b.len() || (x < a.len() && a[x].0 < b[y].0);
                    let take_b = x >= a.len() || (y < b.len() && b[y].0 < a[x].0);
                    if take_a {
                        out.push(a[x].clone());
                        x += 1;
                    } else if take_b {
                        let v = if sub { b[y].1.neg() } else { b[y].1.clone() };
                        out.push((b[y].0, v));
                        y += 1;
                    } else {
                        let v = if sub {
                            a[x].1.sub(&b[y].1)
                        } else {
                            a[x].1.add(&b[y].1)
                        };
                        if !v.is_zero() {
                            out.push((a[x].0, v));
                        }
                        x += 1;
                        y += 1;
                    }
                }
                out
            })
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    /// `self * v`.
    pub fn apply(&self, v: &[(usize, F)]) -> SVec<F> {
        let mut acc = Accum::new(self.rows);
        self.apply_into(v, &mut acc);
        acc.drain()
    }

    pub(crate) fn apply_into(&self, v: &[(usize, F)], acc: &mut Accum<F>) {
        for (j, c) in v {
            for (i, a) in &self.data[*j] {
                acc.add(*i, a.mul(c));
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut acc = Accum::new(self.rows);
        let data = o
            .data
            .iter()
            .map(|c| {
                self.apply_into(c, &mut acc);
                acc.drain()
            })
            .collect();
        Mat {
            rows: self.rows,
            cols: o.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.cols,
            self.rows,
            self.entries().map(|(i, j, v)| (j, i, v.clone())),
        )
    }

    /// Ordinary Kronecker product, basis `x (x) y` at `x * dim + y`.
    pub fn kron(&self, o: &Self) -> Self {
        self.kron_signed(o, |_, _, _| false)
    }

    /// Kronecker product with the Koszul sign: `(A (x) B)(x (x) y) =
    /// (-1)^{|B||x|} Ax (x) By`, where the parity of each entry of `B`
    /// is read off from its row and column parities.
    pub fn super_kron(&self, par_a: &[u8], o: &Self, par_b: &[u8]) -> Self {
        self.kron_signed(o, |x, k, l| (par_a[x] & (par_b[k] ^ par_b[l])) == 1)
    }

    fn kron_signed(&self, o: &Self, negate: impl Fn(usize, usize, usize) -> bool) -> Self {
        let rows = self.rows * o.rows;
        let cols = self.cols * o.cols;
        let mut data = vec![Vec::new(); cols];
        for x in 0..self.cols {
            for l in 0..o.cols {
                let col = &mut data[x * o.cols + l];
                for (i, a) in &self.data[x] {
                    for (k, b) in &o.data[l] {
                        let v = a.mul(b);
                        let v = if negate(x, *k, l) { v.neg() } else { v };
                        col.push((i * o.rows + k, v));
                    }
                }
                col.sort_by_key(|e| e.0);
            }
        }
        Mat { rows, cols, data }
    }

    /// Keeps the rows and columns listed, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.rows];
        for (a, &r) in rows.iter().enumerate() {
            pos[r] = a;
        }
        let data = cols
            .iter()
            .map(|&j| {
                let mut c: SVec<F> = self.data[j]
                    .iter()
                    .filter(|(i, _)| pos[*i] != usize::MAX)
                    .map(|(i, v)| (pos[*i], v.clone()))
                    .collect();
                c.sort_by_key(|e| e.0);
                c
            })
            .collect();
        Mat {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Entry-wise image in another ring; `None` if some entry has no image.
    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Mat<G>> {
        let mut data = Vec::with_capacity(self.cols);
        for c in &self.data {
            let mut out = Vec::with_capacity(c.len());
            for (i, v) in c {
                let g = f(v)?;
                if !g.is_zero() {
                    out.push((*i, g));
                }
            }
            data.push(out);
        }
        Some(Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        self.try_map(|v| Some(f(v))).unwrap()
    }

    /// Super commutator `AB - (-1)^{|A||B|} BA` for homogeneous operators.
    pub fn super_commutator(&self, o: &Self, odd_both: bool) -> Self {
        let ab = self.mul(o);
        let ba = o.mul(self);
        if odd_both {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Parity of a homogeneous operator, `None` for inhomogeneous or zero.
    pub fn parity(&self, par: &[u8]) -> Option<u8> {
        let mut p = None;
        for (i, j, _) in self.entries() {
            let e = par[i] ^ par[j];
            match p {
                None => p = Some(e),
                Some(x) if x != e => return None,
                _ => {}
            }
        }
        p
    }
}

impl OpMat {
    /// Multiplies by a common denominator so every entry is a Laurent polynomial.
    pub fn clear_denominators(&self) -> OpMat {
        let mut l = crate::field::ZPoly::one();
        for (_, _, v) in self.entries() {
            if !v.den().is_one() {
                let g = l.gcd(v.den());
                l = l.mul(&v.den().div_exact(&g).unwrap());
            }
        }
        if l.is_one() {
            return self.clone();
        }
        self.scale(&QRat::from_laurent(0, l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> OpMat {
        Mat::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| QRat::from_int(v)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[0, 3]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[3, 0]]));
        assert_eq!(a.transpose(), m(&[&[1, 0], &[2, 3]]));
        assert_eq!(a.sub(&a), Mat::zeros(2, 2));
    }

    #[test]
    fn koszul_sign() {
        // odd basis vector x, odd operator B: a minus sign appears
        let par = [0u8, 1];
        let e12: OpMat = Mat::unit(2, 0, 1);
        let id: OpMat = Mat::identity(2);
        let t = id.super_kron(&par, &e12, &par);
        // on v_2 (x) v_2 the result is -v_2 (x) v_1
        assert_eq!(t.get(2, 3), QRat::from_int(-1));
        assert_eq!(t.get(0, 1), QRat::from_int(1));
    }
}

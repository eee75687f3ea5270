//! Block LDU factorization `X(z) = F(z) K(z) E(z)` with graded signs.

use super::trunc::{Current, TruncSeries};
use super::GaussError;
use crate::reps::Rep;
use crate::superlinalg::{SeriesOp, Superdim};

/// Which generating matrix is factored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `S(z)`, a series in `z`
    S,
    /// `T(z)`, a series in `z^{-1}`
    T,
}

/// `(-1)^{(|i|+|k|)(|k|+|j|)}` as a boolean "negate".
fn koszul(sd: Superdim, i: usize, k: usize, j: usize) -> bool {
    (sd.parity(i) ^ sd.parity(k)) & (sd.parity(k) ^ sd.parity(j)) == 1
}

/// Unitriangular and diagonal factors of one generating matrix.
#[derive(Clone, Debug)]
pub struct GaussFactors {
    pub sd: Superdim,
    pub side: Side,
    order: usize,
    k: Vec<TruncSeries>,
    /// row major, strictly upper entries of `E`, strictly lower entries of `F`
    e: Vec<Option<TruncSeries>>,
    f: Vec<Option<TruncSeries>>,
}

/// Graded product of two operator valued matrices whose `(i,j)` entry has
/// parity `|i| + |j|`.
fn graded_product(sd: Superdim, a: &[TruncSeries], b: &[TruncSeries]) -> Vec<TruncSeries> {
    let n = sd.rank();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = TruncSeries::zero(a[0].dim(), a[0].order());
            for k in 0..n {
                let (x, y) = (&a[i * n + k], &b[k * n + j]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let p = x.mul(y);
                acc = if koszul(sd, i, k, j) { acc.sub(&p) } else { acc.add(&p) };
            }
            out.push(acc);
        }
    }
    out
}

impl GaussFactors {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `K_l(z)`, zero based.
    pub fn k(&self, l: usize) -> &TruncSeries {
        &self.k[l]
    }

    /// `e_ij(z)` for `i < j`.
    pub fn e(&self, i: usize, j: usize) -> Option<&TruncSeries> {
        self.e[i * self.sd.rank() + j].as_ref()
    }

    /// `f_ji(z)` for `j > i`.
    pub fn f(&self, j: usize, i: usize) -> Option<&TruncSeries> {
        self.f[j * self.sd.rank() + i].as_ref()
    }

    fn matrices(&self) -> [Vec<TruncSeries>; 3] {
        let n = self.sd.rank();
        let (d, ord) = (self.k[0].dim(), self.order);
        let mut fm = Vec::with_capacity(n * n);
        let mut km = Vec::with_capacity(n * n);
        let mut em = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let one = || TruncSeries::one(d, ord);
                let zero = || TruncSeries::zero(d, ord);
                fm.push(match i.cmp(&j) {
                    std::cmp::Ordering::Equal => one(),
                    std::cmp::Ordering::Greater => self.f(i, j).cloned().unwrap(),
                    std::cmp::Ordering::Less => zero(),
                });
                em.push(match i.cmp(&j) {
                    std::cmp::Ordering::Equal => one(),
                    std::cmp::Ordering::Less => self.e(i, j).cloned().unwrap(),
                    std::cmp::Ordering::Greater => zero(),
                });
                km.push(if i == j { self.k[i].clone() } else { zero() });
            }
        }
        [fm, km, em]
    }

    /// The graded product `F K E`, row major.
    pub fn reconstruct(&self) -> Vec<TruncSeries> {
        let [fm, km, em] = self.matrices();
        graded_product(self.sd, &graded_product(self.sd, &fm, &km), &em)
    }

    /// Number of coefficients (entry, order) where `F K E` differs from
    /// the factored matrix.
    pub fn residual(&self, rep: &Rep) -> usize {
        let target = side_matrix(rep, self.side, self.order).expect("side was available");
        self.reconstruct()
            .iter()
            .zip(&target)
            .map(|(a, b)| {
                a.coeffs()
                    .iter()
                    .zip(b.coeffs())
                    .filter(|(x, y)| x != y)
                    .count()
            })
            .sum()
    }
}

fn side_matrix(rep: &Rep, side: Side, order: usize) -> Result<Vec<TruncSeries>, GaussError> {
    let ops: &[SeriesOp] = match side {
        Side::S => rep.s_all(),
        Side::T => rep.t_all().ok_or(GaussError::NoLowerSeries)?,
    };
    Ok(ops.iter().map(|o| TruncSeries::from_series(o, order)).collect())
}

/// Factors `S(z)` or `T(z)` by graded Schur elimination:
/// `K_k = X_kk`, `e_kj = K_k^{-1} X_kj`, `f_ik = X_ik K_k^{-1}` and
/// `X_ij -= (-1)^{(|i|+|k|)(|k|+|j|)} f_ik K_k e_kj`.
pub fn gauss_decompose(rep: &Rep, side: Side, order: usize) -> Result<GaussFactors, GaussError> {
    let sd = rep.sd;
    let n = sd.rank();
    let mut x = side_matrix(rep, side, order)?;
    let mut k = Vec::with_capacity(n);
    let mut e = vec![None; n * n];
    let mut f = vec![None; n * n];
    for p in 0..n {
        let kp = x[p * n + p].clone();
        let kinv = kp.inv().map_err(|_| GaussError::Singular(p))?;
        for j in p + 1..n {
            e[p * n + j] = Some(kinv.mul(&x[p * n + j]));
        }
        for i in p + 1..n {
            f[i * n + p] = Some(x[i * n + p].mul(&kinv));
        }
        for i in p + 1..n {
            let fk = f[i * n + p].as_ref().unwrap().mul(&kp);
            for j in p + 1..n {
                let t = fk.mul(e[p * n + j].as_ref().unwrap());
                x[i * n + j] = if koszul(sd, i, p, j) {
                    x[i * n + j].add(&t)
                } else {
                    x[i * n + j].sub(&t)
                };
            }
        }
        k.push(kp);
    }
    Ok(GaussFactors {
        sd,
        side,
        order,
        k,
        e,
        f,
    })
}

/// Drinfeld currents extracted from the two Gauss factorizations.
#[derive(Clone, Debug)]
pub struct DrinfeldData {
    pub sd: Superdim,
    pub plus: GaussFactors,
    pub minus: GaussFactors,
    /// `X_i^+(z) = e_{i,i+1}^+(z) - e_{i,i+1}^-(z)`
    pub x_plus: Vec<Current>,
    /// `X_i^-(z) = f_{i+1,i}^-(z) - f_{i+1,i}^+(z)`
    pub x_minus: Vec<Current>,
    pub k_plus: Vec<Current>,
    pub k_minus: Vec<Current>,
}

impl DrinfeldData {
    pub fn order(&self) -> usize {
        self.plus.order
    }
}

pub fn drinfeld_currents(rep: &Rep, order: usize) -> Result<DrinfeldData, GaussError> {
    if rep.t_all().is_none() {
        return Err(GaussError::NoLowerSeries);
    }
    let plus = gauss_decompose(rep, Side::S, order)?;
    let minus = gauss_decompose(rep, Side::T, order)?;
    let n = rep.rank();
    let mut x_plus = Vec::new();
    let mut x_minus = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let ep = Current::from_trunc(plus.e(i, i + 1).unwrap(), 1);
        let em = Current::from_trunc(minus.e(i, i + 1).unwrap(), -1);
        x_plus.push(ep.sub(&em));
        let fm = Current::from_trunc(minus.f(i + 1, i).unwrap(), -1);
        let fp = Current::from_trunc(plus.f(i + 1, i).unwrap(), 1);
        x_minus.push(fm.sub(&fp));
    }
    let k_plus = (0..n).map(|l| Current::from_trunc(plus.k(l), 1)).collect();
    let k_minus = (0..n).map(|l| Current::from_trunc(minus.k(l), -1)).collect();
    Ok(DrinfeldData {
        sd: rep.sd,
        plus,
        minus,
        x_plus,
        x_minus,
        k_plus,
        k_minus,
    })
}

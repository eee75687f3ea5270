//! Truncated operator valued power series and two sided currents.

use super::GaussError;
use crate::field::QRat;
use crate::superlinalg::{inverse, Mat, OpMat, SeriesOp};

/// `sum_{n <= order} c_n x^n` with operator coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    dim: usize,
    coeffs: Vec<OpMat>,
}

impl TruncSeries {
    pub fn zero(dim: usize, order: usize) -> Self {
        TruncSeries {
            dim,
            coeffs: vec![Mat::zeros(dim, dim); order + 1],
        }
    }

    pub fn one(dim: usize, order: usize) -> Self {
        let mut s = Self::zero(dim, order);
        s.coeffs[0] = Mat::identity(dim);
        s
    }

    /// Leading terms of a rational series.
    pub fn from_series(s: &SeriesOp, order: usize) -> Self {
        let dim = s.dim();
        let coeffs = if s.is_zero() {
            vec![Mat::zeros(dim, dim); order + 1]
        } else {
            s.coefficients(order + 1)
        };
        TruncSeries { dim, coeffs }
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<OpMat>) -> Self {
        assert!(!coeffs.is_empty());
        TruncSeries { dim, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, n: usize) -> &OpMat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[OpMat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Mat::is_zero)
    }

    fn zip(&self, o: &Self, f: impl Fn(&OpMat, &OpMat) -> OpMat) -> Self {
        let n = self.coeffs.len().min(o.coeffs.len());
        TruncSeries {
            dim: self.dim,
            coeffs: (0..n).map(|k| f(&self.coeffs[k], &o.coeffs[k])).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, Mat::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, Mat::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(Mat::neg)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        self.map(|m| m.scale(c))
    }

    pub fn map(&self, f: impl Fn(&OpMat) -> OpMat) -> Self {
        TruncSeries {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Cauchy product, `self` on the left.
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.coeffs.len().min(o.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(Mat::zeros(self.dim, self.dim), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &o.coeffs[k - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(b))
                    }
                })
            })
            .collect();
        TruncSeries { dim: self.dim, coeffs }
    }

    /// Two sided inverse; needs an invertible constant term.
    pub fn inv(&self) -> Result<Self, GaussError> {
        let c0inv = inverse(&self.coeffs[0]).ok_or(GaussError::Singular(0))?;
        let mut out = vec![c0inv.clone()];
        for k in 1..self.coeffs.len() {
            let mut acc: OpMat = Mat::zeros(self.dim, self.dim);
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&out[k - i]));
                }
            }
            out.push(c0inv.mul(&acc).neg());
        }
        Ok(TruncSeries {
            dim: self.dim,
            coeffs: out,
        })
    }

    /// Formal logarithm of a series with constant term `1`. The coefficients
    /// are assumed to commute pairwise.
    pub fn log(&self) -> Result<Self, GaussError> {
        let id: OpMat = Mat::identity(self.dim);
        if self.coeffs[0] != id {
            return Err(GaussError::NotUnipotent);
        }
        let mut u = self.clone();
        u.coeffs[0] = Mat::zeros(self.dim, self.dim);
        let mut out = Self::zero(self.dim, self.order());
        let mut power = u.clone();
        for k in 1..=self.order() {
            let c = QRat::from_int(if k % 2 == 1 { 1 } else { -1 })
                .checked_div(&QRat::from_int(k as i64))
                .expect("nonzero");
            out = out.add(&power.scale(&c));
            power = power.mul(&u);
        }
        Ok(out)
    }

    /// Formal exponential of a series with vanishing constant term.
    pub fn exp(&self) -> Result<Self, GaussError> {
        if !self.coeffs[0].is_zero() {
            return Err(GaussError::NotUnipotent);
        }
        let mut out = Self::one(self.dim, self.order());
        let mut term = Self::one(self.dim, self.order());
        for k in 1..=self.order() {
            let c = QRat::from_int(k as i64).inv().expect("nonzero");
            term = term.mul(self).scale(&c);
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// Coefficients `c_n z^n` for `lo <= n <= hi`, together with what is known
/// outside that window.
#[derive(Clone, Debug)]
pub struct Current {
    lo: i32,
    coeffs: Vec<OpMat>,
    vanishes_below: bool,
    vanishes_above: bool,
    zero: OpMat,
}

impl Current {
    pub fn new(lo: i32, coeffs: Vec<OpMat>, vanishes_below: bool, vanishes_above: bool) -> Self {
        let d = coeffs.first().map_or(0, Mat::rows);
        Current {
            lo,
            coeffs,
            vanishes_below,
            vanishes_above,
            zero: Mat::zeros(d, d),
        }
    }

    /// A power series in `z` (`sign = 1`) or in `z^{-1}` (`sign = -1`).
    pub fn from_trunc(s: &TruncSeries, sign: i32) -> Self {
        let n = s.order() as i32;
        if sign > 0 {
            Current::new(0, s.coeffs().to_vec(), true, false)
        } else {
            Current::new(-n, s.coeffs().iter().rev().cloned().collect(), false, true)
        }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.coeffs.len() as i32 - 1
    }

    /// The coefficient of `z^n` if it is determined.
    pub fn get(&self, n: i32) -> Option<&OpMat> {
        if n < self.lo {
            self.vanishes_below.then_some(&self.zero)
        } else if n > self.hi() {
            self.vanishes_above.then_some(&self.zero)
        } else {
            Some(&self.coeffs[(n - self.lo) as usize])
        }
    }

    /// `self - o` on the common window.
    pub fn sub(&self, o: &Current) -> Current {
        let lo = self.lo.min(o.lo);
        let hi = self.hi().max(o.hi());
        let mut out = Vec::new();
        let mut start = None;
        for n in lo..=hi {
            if let (Some(a), Some(b)) = (self.get(n), o.get(n)) {
                start.get_or_insert(n);
                out.push(a.sub(b));
            } else if start.is_some() {
                break;
            }
        }
        Current::new(
            start.unwrap_or(lo),
            out,
            self.vanishes_below && o.vanishes_below,
            self.vanishes_above && o.vanishes_above,
        )
    }
}

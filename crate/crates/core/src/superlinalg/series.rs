//! Operator valued rational series in `z` or `z^{-1}`.

use super::echelon::Echelon;
use super::mat::{Mat, OpMat};
use crate::field::{FieldError, PolyZ, QRat, RatZ};

/// Expansion variable of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    /// power series in `z`
    Z,
    /// power series in `z^{-1}`
    ZInv,
}

/// `num(x) / den(x)` where `x` is `z` or `z^{-1}`, `num` has operator
/// coefficients and `den` is a scalar polynomial with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesOp {
    var: Var,
    dim: usize,
    num: Vec<OpMat>,
    den: PolyZ,
}

fn poly_times_mats(p: &PolyZ, a: &[OpMat], dim: usize) -> Vec<OpMat> {
    if p.is_zero() || a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Mat::zeros(dim, dim); p.len() + a.len() - 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, m) in a.iter().enumerate() {
            out[i + j] = out[i + j].add(&m.scale(c));
        }
    }
    trim(out)
}

fn trim(mut v: Vec<OpMat>) -> Vec<OpMat> {
    while matches!(v.last(), Some(m) if m.is_zero()) {
        v.pop();
    }
    v
}

fn mats_add(a: &[OpMat], b: &[OpMat], dim: usize) -> Vec<OpMat> {
    let n = a.len().max(b.len());
    let z = Mat::zeros(dim, dim);
    trim(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&z).add(b.get(k).unwrap_or(&z)))
            .collect(),
    )
}

impl SeriesOp {
    pub fn zero(var: Var, dim: usize) -> Self {
        SeriesOp {
            var,
            dim,
            num: Vec::new(),
            den: PolyZ::one(),
        }
    }

    pub fn constant(m: OpMat) -> Self {
        Self::polynomial(Var::Z, m.rows(), vec![m])
    }

    pub fn polynomial(var: Var, dim: usize, num: Vec<OpMat>) -> Self {
        SeriesOp {
            var,
            dim,
            num: trim(num),
            den: PolyZ::one(),
        }
    }

    /// `num / den`; the denominator must not vanish at the expansion point.
    pub fn rational(var: Var, dim: usize, num: Vec<OpMat>, den: PolyZ) -> Result<Self, FieldError> {
        let d0 = den.coeff(0);
        let inv = d0.inv()?;
        Ok(SeriesOp {
            var,
            dim,
            num: trim(num.into_iter().map(|m| m.scale(&inv)).collect()),
            den: den.scale(&inv),
        })
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num(&self) -> &[OpMat] {
        &self.num
    }

    pub fn den(&self) -> &PolyZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() <= 0
    }

    /// Coefficients of `x^0 .. x^n`.
    pub fn coefficients(&self, n: usize) -> Vec<OpMat> {
        let mut out: Vec<OpMat> = Vec::with_capacity(n + 1);
        let z = Mat::zeros(self.dim, self.dim);
        for k in 0..=n {
            let mut c = self.num.get(k).cloned().unwrap_or_else(|| z.clone());
            for j in 1..=k.min(self.den.len().saturating_sub(1)) {
                let dj = &self.den.coeffs()[j];
                if !dj.is_zero() && !out[k - j].is_zero() {
                    c = c.sub(&out[k - j].scale(dj));
                }
            }
            out.push(c);
        }
        out
    }

    pub fn coefficient(&self, n: usize) -> OpMat {
        self.coefficients(n).pop().unwrap()
    }

    /// Matrices spanning the same space as all coefficients of the series.
    ///
    /// Past the numerator degree the coefficients obey the recurrence given
    /// by the denominator, so the first `deg num + 1` of them suffice. Those
    /// are related to the numerator coefficients by a unitriangular change
    /// of basis (`den(0) = 1`), so the numerator itself can be returned.
    pub fn span_generators(&self) -> Vec<OpMat> {
        self.num.iter().filter(|m| !m.is_zero()).cloned().collect()
    }

    /// A basis of the span of all coefficients.
    pub fn coefficient_span(&self) -> Vec<OpMat> {
        let gens = self.span_generators();
        let d = self.dim;
        let mut ech: Echelon<QRat> = Echelon::new();
        let mut out = Vec::new();
        for g in gens {
            let mut flat: Vec<(usize, QRat)> =
                g.entries().map(|(i, j, v)| (i * d + j, v.clone())).collect();
            flat.sort_by_key(|e| e.0);
            if ech.insert(flat).is_some() {
                out.push(g);
            }
        }
        out
    }

    /// Multiplies by a scalar rational function in the same variable.
    pub fn mul_scalar_fn(&self, f: &RatZ) -> Result<Self, FieldError> {
        Self::rational(
            self.var,
            self.dim,
            poly_times_mats(f.num(), &self.num, self.dim),
            self.den.mul(f.den()),
        )
    }

    pub fn scale(&self, c: &QRat) -> Self {
        SeriesOp {
            var: self.var,
            dim: self.dim,
            num: trim(self.num.iter().map(|m| m.scale(c)).collect()),
            den: self.den.clone(),
        }
    }

    /// Operator product `self * o`.
    pub fn mul(&self, o: &SeriesOp) -> Self {
        assert_eq!(self.var, o.var, "series in different variables");
        let mut num = Vec::new();
        if !self.num.is_empty() && !o.num.is_empty() {
            num = vec![Mat::zeros(self.dim, o.dim); self.num.len() + o.num.len() - 1];
            for (i, a) in self.num.iter().enumerate() {
                for (j, b) in o.num.iter().enumerate() {
                    let p = a.mul(b);
                    if !p.is_zero() {
                        num[i + j] = num[i + j].add(&p);
                    }
                }
            }
        }
        SeriesOp {
            var: self.var,
            dim: self.dim,
            num: trim(num),
            den: self.den.mul(&o.den),
        }
    }

    pub fn add(&self, o: &SeriesOp) -> Self {
        assert_eq!(self.var, o.var, "series in different variables");
        if self.den == o.den {
            return SeriesOp {
                var: self.var,
                dim: self.dim,
                num: mats_add(&self.num, &o.num, self.dim),
                den: self.den.clone(),
            };
        }
        SeriesOp {
            var: self.var,
            dim: self.dim,
            num: mats_add(
                &poly_times_mats(&o.den, &self.num, self.dim),
                &poly_times_mats(&self.den, &o.num, self.dim),
                self.dim,
            ),
            den: self.den.mul(&o.den),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&QRat::from_int(-1))
    }

    /// Koszul tensor product of two series in the same variable.
    pub fn super_kron(&self, par_a: &[u8], o: &SeriesOp, par_b: &[u8]) -> Self {
        assert_eq!(self.var, o.var, "series in different variables");
        let dim = self.dim * o.dim;
        let mut num = Vec::new();
        if !self.num.is_empty() && !o.num.is_empty() {
            num = vec![Mat::zeros(dim, dim); self.num.len() + o.num.len() - 1];
            for (i, a) in self.num.iter().enumerate() {
                for (j, b) in o.num.iter().enumerate() {
                    let p = a.super_kron(par_a, b, par_b);
                    if !p.is_zero() {
                        num[i + j] = num[i + j].add(&p);
                    }
                }
            }
        }
        SeriesOp {
            var: self.var,
            dim,
            num: trim(num),
            den: self.den.mul(&o.den),
        }
    }

    /// Applies a linear map to every numerator coefficient.
    pub fn map_coeffs(&self, dim: usize, f: impl Fn(&OpMat) -> OpMat) -> Self {
        SeriesOp {
            var: self.var,
            dim,
            num: trim(self.num.iter().map(f).collect()),
            den: self.den.clone(),
        }
    }

    /// Exact equality as rational functions.
    pub fn same_as(&self, o: &SeriesOp) -> bool {
        if self.var != o.var && !(self.num.len() <= 1 && o.num.len() <= 1) {
            return false;
        }
        if self.den == o.den {
            return self.num == o.num;
        }
        poly_times_mats(&o.den, &self.num, self.dim) == poly_times_mats(&self.den, &o.num, self.dim)
    }

    /// Same series, relabelled as an expansion in `var` (only for constants).
    pub fn with_var(mut self, var: Var) -> Self {
        assert!(self.num.len() <= 1 && self.den.degree() <= 0);
        self.var = var;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let a: OpMat = Mat::unit(2, 0, 1);
        let den = PolyZ::linear(&QRat::q());
        let s = SeriesOp::rational(Var::Z, 2, vec![a.clone()], den).unwrap();
        let c = s.coefficients(3);
        assert_eq!(c[3], a.scale(&QRat::q_pow(3)));
        assert_eq!(s.coefficient_span().len(), 1);
        let back = s.mul_scalar_fn(&RatZ::from_poly(PolyZ::linear(&QRat::q()))).unwrap();
        assert!(back.same_as(&SeriesOp::constant(a)));
    }

    #[test]
    fn numerator_spans_all_coefficients() {
        let a: OpMat = Mat::from_dense(&[vec![QRat::one(), QRat::q()], vec![QRat::zero(), QRat::from_int(2)]]);
        let b: OpMat = Mat::unit(2, 1, 0);
        let den = PolyZ::linear(&QRat::q()).mul(&PolyZ::linear(&QRat::from_int(3)));
        let s = SeriesOp::rational(Var::Z, 2, vec![a, b], den).unwrap();
        let flat = |ms: &[OpMat]| -> Mat<QRat> {
            Mat::from_columns(
                4,
                ms.iter()
                    .map(|m| {
                        let mut v: Vec<(usize, QRat)> =
                            m.entries().map(|(i, j, x)| (i * 2 + j, x.clone())).collect();
                        v.sort_by_key(|e| e.0);
                        v
                    })
                    .collect(),
            )
        };
        let all = flat(&s.coefficients(10));
        let gens = s.span_generators();
        let both = flat(&[s.coefficients(10), gens.clone()].concat());
        assert_eq!(crate::superlinalg::rank(&flat(&gens)), crate::superlinalg::rank(&all));
        assert_eq!(crate::superlinalg::rank(&both), crate::superlinalg::rank(&all));
        assert_eq!(s.coefficient_span().len(), gens.len());
    }
}

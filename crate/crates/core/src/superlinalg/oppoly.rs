//! Laurent polynomials in several commuting variables with operator coefficients.

use super::mat::{Mat, OpMat};
use crate::field::QRat;
use std::collections::BTreeMap;

/// `sum_e A_e x^e` over exponent vectors `e` of length `K`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpPoly<const K: usize> {
    dim: usize,
    terms: BTreeMap<[i32; K], OpMat>,
}

impl<const K: usize> OpPoly<K> {
    pub fn zero(dim: usize) -> Self {
        OpPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(e: [i32; K], a: OpMat) -> Self {
        let mut p = Self::zero(a.rows());
        p.add_term(e, a);
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, e: [i32; K], a: OpMat) {
        if a.is_zero() {
            return;
        }
        let v = match self.terms.remove(&e) {
            Some(b) => b.add(&a),
            None => a,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32; K], &OpMat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32; K]) -> OpMat {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.dim, self.dim))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, a) in &o.terms {
            r.add_term(*e, a.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, a) in &o.terms {
            r.add_term(*e, a.neg());
        }
        r
    }

    pub fn scale(&self, c: &QRat) -> Self {
        let mut r = Self::zero(self.dim);
        for (e, a) in &self.terms {
            r.add_term(*e, a.scale(c));
        }
        r
    }

    /// Operator product `self * o`.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.dim);
        for (e, a) in &self.terms {
            for (f, b) in &o.terms {
                let mut g = [0; K];
                for k in 0..K {
                    g[k] = e[k] + f[k];
                }
                r.add_term(g, a.mul(b));
            }
        }
        r
    }

    /// Multiplies every coefficient on both sides by fixed operators.
    pub fn sandwich(&self, left: &OpMat, right: &OpMat) -> Self {
        let mut r = Self::zero(self.dim);
        for (e, a) in &self.terms {
            r.add_term(*e, left.mul(a).mul(right));
        }
        r
    }

    pub fn map(&self, f: impl Fn(&OpMat) -> OpMat) -> Self {
        let mut r = OpPoly {
            dim: 0,
            terms: BTreeMap::new(),
        };
        for (e, a) in &self.terms {
            let b = f(a);
            r.dim = b.rows();
            r.add_term(*e, b);
        }
        if r.terms.is_empty() {
            r.dim = self.dim;
        }
        r
    }

    /// Multiplies by the scalar polynomial `sum c_e x^e`.
    pub fn mul_scalar_poly(&self, p: &[([i32; K], QRat)]) -> Self {
        let mut r = Self::zero(self.dim);
        for (e, a) in &self.terms {
            for (f, c) in p {
                let mut g = [0; K];
                for k in 0..K {
                    g[k] = e[k] + f[k];
                }
                r.add_term(g, a.scale(c));
            }
        }
        r
    }
}

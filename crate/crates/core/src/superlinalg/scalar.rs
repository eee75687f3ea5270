//! Coefficient rings accepted by the linear algebra routines.

use crate::field::{Fp, PolyZ, QRat, RatZ, ZPoly};
use std::fmt::Debug;

/// A field with exact arithmetic.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Rescales a nonzero vector to a canonical representative of its line.
    ///
    /// Row reduction only uses cross multiplication, so this is where entry
    /// growth is controlled.
    fn normalize_line(v: &mut [(usize, Self)]);
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn inv(&self) -> Option<Self> {
        Fp::inv(*self)
    }
    fn normalize_line(v: &mut [(usize, Self)]) {
        if let Some((_, lead)) = v.first() {
            let li = lead.inv().expect("nonzero lead");
            for (_, x) in v.iter_mut() {
                *x = x.mul(li);
            }
        }
    }
}

impl Scalar for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn one() -> Self {
        QRat::one()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        QRat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QRat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QRat::mul(self, o)
    }
    fn neg(&self) -> Self {
        QRat::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        QRat::inv(self).ok()
    }

    /// Makes the entries coprime Laurent polynomials with a positive
    /// leading coefficient in the first entry.
    fn normalize_line(v: &mut [(usize, Self)]) {
        if v.is_empty() {
            return;
        }
        // common denominator
        if v.iter().any(|(_, x)| !x.is_laurent()) {
            let mut l = ZPoly::one();
            for (_, x) in v.iter() {
                if !x.den().is_one() {
                    let g = l.gcd(x.den());
                    l = l.mul(&x.den().div_exact(&g).unwrap());
                }
            }
            let lq = QRat::from_laurent(0, l);
            for (_, x) in v.iter_mut() {
                *x = QRat::mul(x, &lq);
            }
        }
        let min_shift = v.iter().map(|(_, x)| x.shift()).min().unwrap();
        let mut g = ZPoly::zero();
        for (_, x) in v.iter() {
            g = g.gcd(x.num());
            if g.is_one() {
                break;
            }
        }
        if v[0].1.num().lc().is_negative() {
            g = g.neg();
        }
        if g.is_one() && min_shift == 0 {
            return;
        }
        for (_, x) in v.iter_mut() {
            let n = x.num().div_exact(&g).expect("content divides");
            *x = QRat::from_laurent(x.shift() - min_shift, n);
        }
    }
}

impl Scalar for RatZ {
    fn zero() -> Self {
        RatZ::from_poly(PolyZ::zero())
    }
    fn one() -> Self {
        RatZ::one()
    }
    fn is_zero(&self) -> bool {
        RatZ::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatZ::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatZ::add(self, &o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        RatZ::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatZ::new(self.num().neg(), self.den().clone()).expect("nonzero denominator")
    }
    fn inv(&self) -> Option<Self> {
        RatZ::inv(self).ok()
    }
    fn normalize_line(v: &mut [(usize, Self)]) {
        if let Some((_, lead)) = v.first() {
            let li = RatZ::inv(lead).expect("nonzero lead");
            for (_, x) in v.iter_mut() {
                *x = RatZ::mul(x, &li);
            }
        }
    }
}

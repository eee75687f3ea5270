//! Exact elements of the rational function field in `q`.

use super::int::Int;
use super::poly::ZPoly;
use super::FieldError;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element `q^shift * num / den` of `Q(q)` in canonical form.
///
/// Neither polynomial is divisible by `q`, they are coprime over `Z[q]`,
/// and `den` has a positive leading coefficient. Zero is `0/1` with shift 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    shift: i32,
    num: ZPoly,
    den: ZPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat {
            shift: 0,
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_big_int(Int::from(v))
    }

    pub fn from_big_int(v: Int) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        QRat {
            shift: 0,
            num: ZPoly::constant(v),
            den: ZPoly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        QRat {
            shift: k,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        QRat {
            shift: k,
            num: ZPoly::from_i64(&[c]),
            den: ZPoly::one(),
        }
    }

    /// Builds `q^shift * num / den`, normalizing.
    pub fn from_parts(shift: i32, num: ZPoly, den: ZPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalize(shift, num, den))
    }

    /// Laurent polynomial `q^shift * num`.
    pub fn from_laurent(shift: i32, num: ZPoly) -> Self {
        Self::normalize(shift, num, ZPoly::one())
    }

    fn normalize(mut shift: i32, mut num: ZPoly, mut den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let v = num.valuation();
        if v > 0 {
            num.shift_down(v);
            shift += v as i32;
        }
        let w = den.valuation();
        if w > 0 {
            den.shift_down(w);
            shift -= w as i32;
        }
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides");
                den = den.div_exact(&g).expect("gcd divides");
            }
            if den.lc().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        QRat { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a power of `q`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    /// Returns `(c, k)` when the value is `c * q^k` with integer `c`.
    pub fn as_monomial(&self) -> Option<(Int, i32)> {
        if self.den.is_one() && self.num.is_constant() && !self.is_zero() {
            Some((self.num.coeff(0).clone(), self.shift))
        } else {
            None
        }
    }

    /// Returns `k` when the value is exactly `q^k`.
    pub fn as_q_power(&self) -> Option<i32> {
        match self.as_monomial() {
            Some((c, k)) if c.is_one() => Some(k),
            _ => None,
        }
    }

    pub fn neg(&self) -> QRat {
        QRat {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &QRat) -> QRat {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(o.shift);
        let a = self.num.shifted_up((self.shift - s) as usize);
        let b = o.num.shifted_up((o.shift - s) as usize);
        if self.den == o.den {
            return Self::normalize(s, a.add(&b), self.den.clone());
        }
        let num = a.mul(&o.den).add(&b.mul(&self.den));
        Self::normalize(s, num, self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &QRat) -> QRat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QRat) -> QRat {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            return QRat {
                shift,
                num: self.num.mul(&o.num),
                den: ZPoly::one(),
            };
        }
        let (mut n1, mut d2) = (self.num.clone(), o.den.clone());
        if !d2.is_one() {
            let g = n1.gcd(&d2);
            if !g.is_one() {
                n1 = n1.div_exact(&g).unwrap();
                d2 = d2.div_exact(&g).unwrap();
            }
        }
        let (mut n2, mut d1) = (o.num.clone(), self.den.clone());
        if !d1.is_one() {
            let g = n2.gcd(&d1);
            if !g.is_one() {
                n2 = n2.div_exact(&g).unwrap();
                d1 = d1.div_exact(&g).unwrap();
            }
        }
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        QRat { shift, num, den }
    }

    pub fn inv(&self) -> Result<QRat, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(QRat {
            shift: -self.shift,
            num,
            den,
        })
    }

    pub fn checked_div(&self, o: &QRat) -> Result<QRat, FieldError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<QRat, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = QRat::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        Ok(r)
    }

    /// The image under `q -> q^{-1}`.
    pub fn subs_q_inv(&self) -> QRat {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree() as i32;
        let dd = self.den.degree() as i32;
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        QRat {
            shift: -self.shift - dn + dd,
            num,
            den,
        }
    }

    /// Image in `Z/p` under `q -> x`; `None` when the denominator vanishes.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let n = self.num.eval_mod(x, p);
        let d = self.den.eval_mod(x, p);
        if d == 0 || x % p == 0 {
            return None;
        }
        let xs = if self.shift >= 0 {
            pow_mod(x, self.shift as u64, p)
        } else {
            pow_mod(inv_mod(x, p), (-self.shift) as u64, p)
        };
        Some(mul_mod(mul_mod(n, inv_mod(d, p), p), xs, p))
    }

    /// Floating point value at `q = x`, for diagnostics only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let ev = |p: &ZPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * x + c.to_string().parse::<f64>().unwrap_or(f64::NAN))
        };
        ev(&self.num) / ev(&self.den) * x.powi(self.shift)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QRat {
    fn from(v: i64) -> Self {
        QRat::from_int(v)
    }
}

impl Ord for QRat {
    fn cmp(&self, o: &Self) -> Ordering {
        self.shift
            .cmp(&o.shift)
            .then_with(|| self.num.cmp_structural(&o.num))
            .then_with(|| self.den.cmp_structural(&o.den))
    }
}

impl PartialOrd for QRat {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = if self.shift >= 0 {
            (self.num.shifted_up(self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shifted_up((-self.shift) as usize))
        };
        if den.is_one() {
            write!(f, "{}", num.fmt_in("q"))
        } else {
            write!(f, "({})/({})", num.fmt_in("q"), den.fmt_in("q"))
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for QRat {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, FieldError> {
        super::parse::parse_qrat(s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:expr) => {
        impl $tr<&QRat> for &QRat {
            type Output = QRat;
            fn $m(self, o: &QRat) -> QRat {
                $imp(self, o)
            }
        }
        impl $tr<QRat> for &QRat {
            type Output = QRat;
            fn $m(self, o: QRat) -> QRat {
                $imp(self, &o)
            }
        }
    };
}

forward_binop!(Add, add, QRat::add);
forward_binop!(Sub, sub, QRat::sub);
forward_binop!(Mul, mul, QRat::mul);
forward_binop!(Div, div, |a: &QRat, b: &QRat| a
    .checked_div(b)
    .expect("division by zero in Q(q)"));

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(p("q^2-1").to_string(), "q^2-1");
        assert_eq!(p("(q^2-1)/q").to_string(), "(q^2-1)/(q)");
        assert_eq!(p("q^-1").to_string(), "(1)/(q)");
        assert_eq!(p("-q").to_string(), "-q");
        assert_eq!(p("(q-q^-1)/(1-q^-2)").to_string(), "q");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("6/4").to_string(), "(3)/(2)");
    }

    #[test]
    fn arithmetic() {
        let a = p("q+1");
        let b = p("q-1");
        let c = &a / &b;
        assert_eq!(&c * &b, a);
        assert_eq!((&c - &c), QRat::zero());
        assert_eq!(p("q").subs_q_inv(), p("q^-1"));
        assert_eq!(p("(q+2)/(3*q-1)").subs_q_inv(), p("(q^-1+2)/(3*q^-1-1)"));
    }

    #[test]
    fn modular_image() {
        let pr = (1u64 << 61) - 1;
        let a = p("(q^2+1)/(q-3)");
        let x = 5;
        assert_eq!(a.eval_mod(x, pr), Some(mul_mod(26, inv_mod(2, pr), pr)));
        assert_eq!(p("1/(q-5)").eval_mod(5, pr), None);
    }
}

//! Polynomials and rational functions in the spectral variable `z`.

use super::parse::Parser;
use super::qrat::QRat;
use super::FieldError;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Polynomial in `z` with coefficients in `Q(q)`, ascending.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyZ {
    c: Vec<QRat>,
}

impl PolyZ {
    pub fn zero() -> Self {
        PolyZ { c: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZ {
            c: vec![QRat::one()],
        }
    }

    pub fn constant(v: QRat) -> Self {
        Self::from_coeffs(vec![v])
    }

    pub fn from_coeffs(c: Vec<QRat>) -> Self {
        let mut p = PolyZ { c };
        while matches!(p.c.last(), Some(v) if v.is_zero()) {
            p.c.pop();
        }
        p
    }

    /// The linear factor `1 - z a`.
    pub fn linear(a: &QRat) -> Self {
        Self::from_coeffs(vec![QRat::one(), a.neg()])
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.c.get(k).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn add(&self, o: &PolyZ) -> PolyZ {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &PolyZ) -> PolyZ {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> PolyZ {
        PolyZ {
            c: self.c.iter().map(QRat::neg).collect(),
        }
    }

    pub fn scale(&self, k: &QRat) -> PolyZ {
        Self::from_coeffs(self.c.iter().map(|v| v.mul(k)).collect())
    }

    pub fn mul(&self, o: &PolyZ) -> PolyZ {
        if self.is_zero() || o.is_zero() {
            return PolyZ::zero();
        }
        let mut c = vec![QRat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(c)
    }

    /// Division with remainder over the field `Q(q)`.
    pub fn div_rem(&self, d: &PolyZ) -> Result<(PolyZ, PolyZ), FieldError> {
        if d.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        let linv = d.c[dd].inv()?;
        if r.len() <= dd {
            return Ok((PolyZ::zero(), self.clone()));
        }
        let mut q = vec![QRat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let f = top.mul(&linv);
            for (i, v) in d.c.iter().enumerate() {
                r[k + i] = r[k + i].sub(&v.mul(&f));
            }
            q[k] = f;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Monic gcd over `Q(q)`.
    pub fn gcd(&self, o: &PolyZ) -> PolyZ {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> PolyZ {
        match self.c.last() {
            None => PolyZ::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero")),
        }
    }

    /// Evaluates at a value of `z`.
    pub fn eval(&self, z: &QRat) -> QRat {
        self.c
            .iter()
            .rev()
            .fold(QRat::zero(), |acc, c| acc.mul(z).add(c))
    }

    /// Power series quotient `self / d` modulo `z^(n+1)`; needs `d(0) != 0`.
    pub fn series_div(&self, d: &PolyZ, n: usize) -> Result<Vec<QRat>, FieldError> {
        let d0inv = d.coeff(0).inv()?;
        let mut out: Vec<QRat> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(d.c.len().saturating_sub(1)) {
                acc = acc.sub(&d.c[j].mul(&out[k - j]));
            }
            out.push(acc.mul(&d0inv));
        }
        Ok(out)
    }
}

/// Reduced quotient of two polynomials in `z`.
///
/// When the denominator does not vanish at `z = 0` it is scaled to have
/// constant term one, otherwise it is monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatZ {
    num: PolyZ,
    den: PolyZ,
}

impl RatZ {
    pub fn new(num: PolyZ, den: PolyZ) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatZ {
                num,
                den: PolyZ::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() > 0 {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        } else {
            (num, den)
        };
        let d0 = den.coeff(0);
        let norm = if d0.is_zero() {
            den.c.last().unwrap().clone()
        } else {
            d0
        };
        let ni = norm.inv()?;
        num = num.scale(&ni);
        den = den.scale(&ni);
        Ok(RatZ { num, den })
    }

    pub fn from_poly(p: PolyZ) -> Self {
        RatZ {
            num: p,
            den: PolyZ::one(),
        }
    }

    pub fn constant(v: QRat) -> Self {
        Self::from_poly(PolyZ::constant(v))
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    pub fn num(&self) -> &PolyZ {
        &self.num
    }

    pub fn den(&self) -> &PolyZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, o: &RatZ) -> RatZ {
        RatZ::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn add(&self, o: &RatZ) -> RatZ {
        RatZ::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<RatZ, FieldError> {
        RatZ::new(self.den.clone(), self.num.clone())
    }

    /// First `n + 1` power series coefficients at `z = 0`.
    pub fn series(&self, n: usize) -> Result<Vec<QRat>, FieldError> {
        self.num.series_div(&self.den, n)
    }
}

impl fmt::Display for RatZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &PolyZ| {
            if p.is_zero() {
                return "0".to_string();
            }
            let mut parts = Vec::new();
            for (k, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                parts.push(match k {
                    0 => format!("[{c}]"),
                    1 => format!("[{c}]*z"),
                    _ => format!("[{c}]*z^{k}"),
                });
            }
            parts.join(" + ")
        };
        write!(f, "({}) / ({})", show(&self.num), show(&self.den))
    }
}

/// A point of the projective line in the variable `z`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Point {
    Finite(QRat),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(v) => write!(f, "{v}"),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

/// `scale * prod (1 - z a) / prod (1 - z b)` with cancelled multisets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FactoredRatZ {
    scale: QRat,
    zeros: BTreeMap<QRat, u32>,
    poles: BTreeMap<QRat, u32>,
}

impl FactoredRatZ {
    /// Builds the function from its scale and the parameters `a` of the
    /// numerator factors and `b` of the denominator factors.
    pub fn new(scale: QRat, num_params: &[QRat], den_params: &[QRat]) -> Result<Self, FieldError> {
        if scale.is_zero() {
            return Err(FieldError::ZeroScale);
        }
        let mut zeros = BTreeMap::new();
        let mut poles = BTreeMap::new();
        for a in num_params.iter().filter(|a| !a.is_zero()) {
            *zeros.entry(a.clone()).or_insert(0) += 1;
        }
        for b in den_params.iter().filter(|b| !b.is_zero()) {
            match zeros.get_mut(b) {
                Some(m) if *m > 0 => {
                    *m -= 1;
                    if *m == 0 {
                        zeros.remove(b);
                    }
                }
                _ => *poles.entry(b.clone()).or_insert(0) += 1,
            }
        }
        Ok(FactoredRatZ {
            scale,
            zeros,
            poles,
        })
    }

    pub fn constant(scale: QRat) -> Result<Self, FieldError> {
        Self::new(scale, &[], &[])
    }

    pub fn one() -> Self {
        Self::constant(QRat::one()).unwrap()
    }

    /// `(1 - z a) / (1 - z b)`.
    pub fn prime(a: &QRat, b: &QRat) -> Self {
        Self::new(QRat::one(), &[a.clone()], &[b.clone()]).unwrap()
    }

    pub fn scale(&self) -> &QRat {
        &self.scale
    }

    /// Numerator parameters with multiplicity.
    pub fn num_params(&self) -> Vec<QRat> {
        expand(&self.zeros)
    }

    /// Denominator parameters with multiplicity.
    pub fn den_params(&self) -> Vec<QRat> {
        expand(&self.poles)
    }

    pub fn mul(&self, o: &FactoredRatZ) -> FactoredRatZ {
        let mut n = self.num_params();
        n.extend(o.num_params());
        let mut d = self.den_params();
        d.extend(o.den_params());
        Self::new(self.scale.mul(&o.scale), &n, &d).unwrap()
    }

    pub fn inv(&self) -> FactoredRatZ {
        Self::new(
            self.scale.inv().unwrap(),
            &self.den_params(),
            &self.num_params(),
        )
        .unwrap()
    }

    /// Zero and pole sets on the projective line, counting infinity.
    pub fn zeros_poles(&self) -> (BTreeSet<Point>, BTreeSet<Point>) {
        let mut z: BTreeSet<Point> = self
            .zeros
            .keys()
            .map(|a| Point::Finite(a.inv().unwrap()))
            .collect();
        let mut p: BTreeSet<Point> = self
            .poles
            .keys()
            .map(|b| Point::Finite(b.inv().unwrap()))
            .collect();
        let nz: u32 = self.zeros.values().sum();
        let np: u32 = self.poles.values().sum();
        if np > nz {
            z.insert(Point::Infinity);
        } else if nz > np {
            p.insert(Point::Infinity);
        }
        (z, p)
    }

    pub fn to_ratz(&self) -> RatZ {
        let num = self
            .zeros
            .iter()
            .fold(PolyZ::constant(self.scale.clone()), |acc, (a, &m)| {
                (0..m).fold(acc, |acc, _| acc.mul(&PolyZ::linear(a)))
            });
        let den = self.poles.iter().fold(PolyZ::one(), |acc, (b, &m)| {
            (0..m).fold(acc, |acc, _| acc.mul(&PolyZ::linear(b)))
        });
        RatZ::new(num, den).unwrap()
    }

    /// Value at `z = 0` is the scale.
    pub fn is_normalized(&self) -> bool {
        self.scale.is_one()
    }
}

fn expand(m: &BTreeMap<QRat, u32>) -> Vec<QRat> {
    m.iter()
        .flat_map(|(a, &k)| std::iter::repeat(a.clone()).take(k as usize))
        .collect()
}

impl fmt::Display for FactoredRatZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = |ps: Vec<QRat>| -> String { ps.iter().map(|a| format!("(1-z*{a})")).collect() };
        write!(f, "{}", self.scale)?;
        if !self.zeros.is_empty() {
            write!(f, " * {}", group(self.num_params()))?;
        }
        if !self.poles.is_empty() {
            write!(f, " / {}", group(self.den_params()))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FactoredRatZ {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, FieldError> {
        parse_factored(s)
    }
}

fn top_level_split(s: &str, sep: &str) -> Option<usize> {
    let mut depth = 0i32;
    let b = s.as_bytes();
    for i in 0..b.len() {
        match b[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            return Some(i);
        }
    }
    None
}

fn parse_groups(s: &str, offset: usize) -> Result<Vec<QRat>, FieldError> {
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    let perr = |pos: usize, msg: &str| FieldError::Parse {
        pos,
        msg: msg.to_string(),
    };
    while i < b.len() {
        if b[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if !s[i..].starts_with("(1-z*") {
            return Err(perr(offset + i, "expected factor (1-z*a)"));
        }
        let start = i + 5;
        let mut depth = 1;
        let mut j = i + 1;
        while j < b.len() && depth > 0 {
            match b[j] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                _ => {}
            }
            j += 1;
        }
        if depth != 0 {
            return Err(perr(offset + i, "unbalanced parentheses"));
        }
        let inner = &s[start..j - 1];
        let mut p = Parser::new(inner);
        let v = p.expr().map_err(|e| e.offset(offset + start))?;
        if !p.at_end() {
            return Err(perr(offset + start + p.pos, "trailing input in factor"));
        }
        out.push(v);
        i = j;
    }
    Ok(out)
}

pub fn parse_factored(s: &str) -> Result<FactoredRatZ, FieldError> {
    let (head, rest, rest_off) = match (top_level_split(s, " * "), top_level_split(s, " / ")) {
        (Some(i), _) => (&s[..i], Some((&s[i + 3..], true)), i + 3),
        (None, Some(i)) => (&s[..i], Some((&s[i + 3..], false)), i + 3),
        (None, None) => (s, None, 0),
    };
    let scale = super::parse::parse_qrat(head)?;
    let (mut num, mut den) = (Vec::new(), Vec::new());
    if let Some((r, has_num)) = rest {
        if has_num {
            match top_level_split(r, " / ") {
                Some(k) => {
                    num = parse_groups(&r[..k], rest_off)?;
                    den = parse_groups(&r[k + 3..], rest_off + k + 3)?;
                }
                None => num = parse_groups(r, rest_off)?,
            }
        } else {
            den = parse_groups(r, rest_off)?;
        }
    }
    FactoredRatZ::new(scale, &num, &den)
}

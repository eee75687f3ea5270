//! Dense univariate polynomials over the integers.

use super::int::Int;
use std::cmp::Ordering;

/// Integer polynomial stored by ascending degree, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ZPoly {
    c: Vec<Int>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly { c: vec![Int::ONE] }
    }

    pub fn constant(v: Int) -> Self {
        let mut p = ZPoly { c: vec![v] };
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<Int>) -> Self {
        let mut p = ZPoly { c };
        p.trim();
        p
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| Int::from(v)).collect())
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.c
    }

    fn trim(&mut self) {
        while matches!(self.c.last(), Some(v) if v.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lc(&self) -> &Int {
        self.c.last().unwrap_or(&Int::ZERO)
    }

    pub fn coeff(&self, k: usize) -> &Int {
        self.c.get(k).unwrap_or(&Int::ZERO)
    }

    /// Number of trailing factors of the variable.
    pub fn valuation(&self) -> usize {
        self.c.iter().take_while(|v| v.is_zero()).count()
    }

    pub fn shift_down(&mut self, k: usize) {
        self.c.drain(..k.min(self.c.len()));
    }

    pub fn shifted_up(&self, k: usize) -> ZPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Int::ZERO; k];
        c.extend(self.c.iter().cloned());
        ZPoly { c }
    }

    pub fn reversed(&self) -> ZPoly {
        let mut c = self.c.clone();
        c.reverse();
        ZPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            c: self.c.iter().map(Int::neg).collect(),
        }
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            c.push(self.coeff(k).add(o.coeff(k)));
        }
        ZPoly::from_coeffs(c)
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            c.push(self.coeff(k).sub(o.coeff(k)));
        }
        ZPoly::from_coeffs(c)
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut c = vec![Int::ZERO; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j].add_mul(a, b);
            }
        }
        ZPoly::from_coeffs(c)
    }

    pub fn scale(&self, k: &Int) -> ZPoly {
        if k.is_one() {
            return self.clone();
        }
        ZPoly::from_coeffs(self.c.iter().map(|v| v.mul(k)).collect())
    }

    pub fn div_int_exact(&self, k: &Int) -> ZPoly {
        if k.is_one() {
            return self.clone();
        }
        ZPoly {
            c: self.c.iter().map(|v| v.div_exact(k)).collect(),
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for v in &self.c {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content-free part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = g.neg();
        }
        self.div_int_exact(&g)
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        let dd = d.degree();
        let l = d.lc().clone();
        while !r.is_zero() && r.degree() >= dd {
            let shift = (r.degree() - dd) as usize;
            let lr = r.lc().clone();
            let mut c: Vec<Int> = r.c.iter().map(|v| v.mul(&l)).collect();
            for (k, v) in d.c.iter().enumerate() {
                c[k + shift] = c[k + shift].sub(&v.mul(&lr));
            }
            r = ZPoly::from_coeffs(c);
        }
        r
    }

    /// Exact division; `None` when `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if d.is_one() {
            return Some(self.clone());
        }
        if d.c.len() == 1 {
            let k = &d.c[0];
            if self.c.iter().all(|v| k.divides(v)) {
                return Some(self.div_int_exact(k));
            }
            return None;
        }
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        let l = d.lc();
        let mut q = vec![Int::ZERO; r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            if !l.divides(top) {
                return None;
            }
            let f = top.div_exact(l);
            for (i, v) in d.c.iter().enumerate() {
                r[k + i] = r[k + i].sub(&v.mul(&f));
            }
            q[k] = f;
        }
        if r.iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(ZPoly::from_coeffs(q))
    }

    /// Greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return o.primitive().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let cg = self.content().gcd(&o.content());
        if self.is_constant() || o.is_constant() {
            return ZPoly::constant(cg);
        }
        let (mut a, mut b) = if self.degree() >= o.degree() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
            if b.is_constant() && !b.is_zero() {
                return ZPoly::constant(cg);
            }
        }
        a.primitive().scale(&cg)
    }

    /// Evaluates at `x` modulo the prime `p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let mut acc: u128 = 0;
        for v in self.c.iter().rev() {
            acc = (acc * x as u128 + v.rem_u64(p) as u128) % p as u128;
        }
        acc as u64
    }

    pub fn cmp_structural(&self, o: &ZPoly) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| {
            for (a, b) in self.c.iter().rev().zip(o.c.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    x => return x,
                }
            }
            Ordering::Equal
        })
    }

    /// Writes the polynomial in the variable `var`, highest degree first.
    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, v) in self.c.iter().enumerate().rev() {
            if v.is_zero() {
                continue;
            }
            let neg = v.is_negative();
            let a = v.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            match (k, a.is_one()) {
                (0, _) => s.push_str(&a.to_string()),
                (_, true) => {}
                (_, false) => {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
            }
            match k {
                0 => {}
                1 => s.push_str(var),
                _ => {
                    s.push_str(var);
                    s.push('^');
                    s.push_str(&k.to_string());
                }
            }
        }
        s
    }
}

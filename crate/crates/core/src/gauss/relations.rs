//! Coefficientwise checks of the Drinfeld current relations.

use super::decompose::DrinfeldData;
use super::trunc::{Current, TruncSeries};
use crate::field::QRat;
use crate::superlinalg::{Mat, OpMat};
use std::fmt;

/// Result of checking one family of relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    /// number of coefficient identities compared
    pub checked: usize,
    /// `(power of z, power of w)` of every violated coefficient
    pub failures: Vec<(i32, i32)>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

impl fmt::Display for RelationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} coefficients", self.name, self.checked - self.failures.len(), self.checked)?;
        if let Some((a, b)) = self.failures.first() {
            write!(f, ", first violation at z^{a} w^{b}")?;
        }
        Ok(())
    }
}

/// `sum c z^dz w^dw`.
type Factor = [(QRat, i32, i32)];

/// Compares `lhs(z,w) A(z) B(w)` with `rhs(z,w) B(w) A(z)` on every
/// coefficient that the truncations determine.
fn exchange(name: String, a: &Current, b: &Current, lhs: &Factor, rhs: &Factor) -> RelationCheck {
    let mut checked = 0;
    let mut failures = Vec::new();
    let side = |terms: &Factor, p: i32, r: i32, ab: bool| -> Option<OpMat> {
        let mut acc: Option<OpMat> = None;
        for (c, dz, dw) in terms {
            let x = a.get(p - dz)?;
            let y = b.get(r - dw)?;
            let m = if ab { x.mul(y) } else { y.mul(x) }.scale(c);
            acc = Some(match acc {
                Some(s) => s.add(&m),
                None => m,
            });
        }
        acc
    };
    for p in a.lo() - 1..=a.hi() + 1 {
        for r in b.lo() - 1..=b.hi() + 1 {
            if let (Some(l), Some(rr)) = (side(lhs, p, r, true), side(rhs, p, r, false)) {
                checked += 1;
                if l != rr {
                    failures.push((p, r));
                }
            }
        }
    }
    RelationCheck {
        name,
        checked,
        failures,
    }
}

/// The Cartan block: `K K` commutativity and the exchange of `K_l^{±}(z)`
/// with `X_i^{±}(w)`.
pub fn cartan_relations(data: &DrinfeldData) -> Vec<RelationCheck> {
    let sd = data.sd;
    let n = sd.rank();
    let one = || QRat::one();
    let plain = [(one(), 0, 0)];
    let z_minus_w = [(one(), 1, 0), (one().neg(), 0, 1)];
    let mut out = Vec::new();
    let ks = |eps: usize| if eps == 0 { &data.k_plus } else { &data.k_minus };
    let sign = |eps: usize| if eps == 0 { '+' } else { '-' };
    for e1 in 0..2 {
        for e2 in 0..2 {
            for i in 0..n {
                for j in 0..n {
                    out.push(exchange(
                        format!("K{}{}(z) K{}{}(w) commute", i + 1, sign(e1), j + 1, sign(e2)),
                        &ks(e1)[i],
                        &ks(e2)[j],
                        &plain,
                        &plain,
                    ));
                }
            }
        }
    }
    for eps in 0..2 {
        for l in 0..n {
            for i in 0..n - 1 {
                for (pm, x) in [('+', &data.x_plus[i]), ('-', &data.x_minus[i])] {
                    // (a z - a^{-1} w) with a = q_l or q_{l}^{-1}
                    let weighted = |a: QRat| [(a.clone(), 1, 0), (a.inv().unwrap().neg(), 0, 1)];
                    let (lhs, rhs): (Vec<_>, Vec<_>) = if l == i {
                        let f = weighted(QRat::q_pow(sd.d(l)));
                        if pm == '+' {
                            (f.to_vec(), z_minus_w.to_vec())
                        } else {
                            (z_minus_w.to_vec(), f.to_vec())
                        }
                    } else if l == i + 1 {
                        let f = weighted(QRat::q_pow(-sd.d(l)));
                        if pm == '+' {
                            (f.to_vec(), z_minus_w.to_vec())
                        } else {
                            (z_minus_w.to_vec(), f.to_vec())
                        }
                    } else {
                        (plain.to_vec(), plain.to_vec())
                    };
                    out.push(exchange(
                        format!("K{}{}(z) X{}{}(w)", l + 1, sign(eps), i + 1, pm),
                        &ks(eps)[l],
                        x,
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
    }
    out
}

/// `[X_i^+(z), X_j^-(w)] = δ_ij (q_i - q_i^{-1}) δ(z/w) (Φ_i^+(z) - Φ_i^-(w))`
/// with `Φ_i^± = K_{i+1}^± (K_i^±)^{-1}`, compared on `z^m w^n`.
pub fn xx_relations(data: &DrinfeldData) -> Vec<RelationCheck> {
    let sd = data.sd;
    let n = sd.rank();
    let phi = |f: &super::GaussFactors, i: usize, sign: i32| -> Current {
        let ratio: TruncSeries = f.k(i + 1).mul(&f.k(i).inv().expect("pivots are invertible"));
        Current::from_trunc(&ratio, sign)
    };
    let mut out = Vec::new();
    for i in 0..n - 1 {
        let (pp, pm) = (phi(&data.plus, i, 1), phi(&data.minus, i, -1));
        let qi = QRat::q_pow(sd.d(i));
        let c = qi.sub(&qi.inv().unwrap());
        for j in 0..n - 1 {
            let (xp, xm) = (&data.x_plus[i], &data.x_minus[j]);
            let odd = (sd.parity(i) ^ sd.parity(i + 1)) & (sd.parity(j) ^ sd.parity(j + 1)) == 1;
            let mut checked = 0;
            let mut failures = Vec::new();
            for a in xp.lo()..=xp.hi() {
                for b in xm.lo()..=xm.hi() {
                    let lhs = xp.get(a).unwrap().super_commutator(xm.get(b).unwrap(), odd);
                    let rhs = if i == j {
                        match (pp.get(a + b), pm.get(a + b)) {
                            (Some(x), Some(y)) => x.sub(y).scale(&c),
                            _ => continue,
                        }
                    } else {
                        Mat::zeros(lhs.rows(), lhs.cols())
                    };
                    checked += 1;
                    if lhs != rhs {
                        failures.push((a, b));
                    }
                }
            }
            out.push(RelationCheck {
                name: format!("[X{}+(z), X{}-(w)]", i + 1, j + 1),
                checked,
                failures,
            });
        }
    }
    out
}

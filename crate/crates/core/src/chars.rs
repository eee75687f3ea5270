//! Weight multiplicities of modules and the combinatorial character of `L(ϖ_r)`.

use crate::reps::Rep;
use crate::superlinalg::{Superdim, Weight};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("r = {r} outside 1..={m}")]
    Range { r: usize, m: usize },
}

/// Finitely supported map weight -> multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character(BTreeMap<Weight, u64>);

impl Character {
    pub fn from_weights<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> Self {
        let mut m = BTreeMap::new();
        for w in ws {
            *m.entry(w.clone()).or_insert(0) += 1;
        }
        Character(m)
    }

    pub fn dim(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.0.iter().map(|(w, m)| (w, *m))
    }

    /// Character of a tensor product.
    pub fn mul(&self, o: &Character) -> Character {
        let mut m = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                *m.entry(a.add(b)).or_insert(0) += x * y;
            }
        }
        Character(m)
    }

    /// `self - o`, or `None` if some multiplicity would become negative.
    pub fn checked_sub(&self, o: &Character) -> Option<Character> {
        let mut m = self.0.clone();
        for (w, y) in &o.0 {
            let x = m.get_mut(w)?;
            *x = x.checked_sub(*y)?;
            if *x == 0 {
                m.remove(w);
            }
        }
        Some(Character(m))
    }
}

impl fmt::Display for Character {
    /// One `weight<TAB>multiplicity` line per weight, coordinates comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, m) in &self.0 {
            let coords: Vec<String> = w.0.iter().map(i32::to_string).collect();
            writeln!(f, "{}\t{m}", coords.join(","))?;
        }
        Ok(())
    }
}

pub fn character(rep: &Rep) -> Character {
    Character::from_weights(&rep.space.weight)
}

/// The index sequences `f(1) <= ... <= f(r)` with `f(i) < f(i+1)` whenever
/// `f(i)` is an even index (zero based).
pub fn bkk_tableaux(sd: Superdim, r: usize) -> Result<Vec<Vec<usize>>, CharError> {
    if r == 0 || r > sd.m {
        return Err(CharError::Range { r, m: sd.m });
    }
    let n = sd.rank();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(sd: Superdim, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let lo = match cur.last() {
            None => 0,
            Some(&p) if sd.parity(p) == 0 => p + 1,
            Some(&p) => p,
        };
        for v in lo..n {
            cur.push(v);
            rec(sd, n, r, cur, out);
            cur.pop();
        }
    }
    rec(sd, n, r, &mut cur, &mut out);
    Ok(out)
}

pub fn bkk_character(sd: Superdim, r: usize) -> Result<Character, CharError> {
    let n = sd.rank();
    let ws: Vec<Weight> = bkk_tableaux(sd, r)?
        .into_iter()
        .map(|f| f.into_iter().fold(Weight::zero(n), |w, i| w.add(&Weight::eps(n, i))))
        .collect();
    Ok(Character::from_weights(&ws))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{natural_finite, simple_finite_module, tensor};

    #[test]
    fn small_tableaux() {
        let sd = Superdim::new(2, 1);
        assert_eq!(
            bkk_tableaux(sd, 2).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 2]]
        );
        let c = bkk_character(Superdim::new(1, 1), 1).unwrap();
        assert_eq!(c, character(&natural_finite(Superdim::new(1, 1))));
        assert!(bkk_character(Superdim::new(1, 2), 2).is_err());
    }

    #[test]
    fn square_decomposition() {
        let sd = Superdim::new(2, 2);
        let v = natural_finite(sd);
        let sq = character(&tensor(&v, &v).unwrap());
        let l2 = bkk_character(sd, 2).unwrap();
        assert_eq!(character(&simple_finite_module(sd, 2).unwrap()), l2);
        let rest = sq.checked_sub(&l2).unwrap();
        assert_eq!(rest.dim() + l2.dim(), 16);
        assert_eq!(rest.multiplicity(&Weight(vec![2, 0, 0, 0])), 1);
        assert_eq!(rest.multiplicity(&Weight(vec![1, 1, 0, 0])), 1);
        assert_eq!(sq, character(&v).mul(&character(&v)));
    }
}

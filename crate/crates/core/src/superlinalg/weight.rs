//! Weights, parities and graded vector spaces.

use std::collections::BTreeMap;
use std::fmt;

/// The pair `(M, N)` fixing the superalgebra `gl(M|N)`.
///
/// Indices are zero based: `0..m` are even and `m..m+n` are odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Superdim {
    pub m: usize,
    pub n: usize,
}

impl Superdim {
    pub fn new(m: usize, n: usize) -> Self {
        Superdim { m, n }
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn parity(&self, i: usize) -> u8 {
        u8::from(i >= self.m)
    }

    /// The sign `d_i`, equal to `(eps_i, eps_i)`.
    pub fn d(&self, i: usize) -> i32 {
        if i < self.m {
            1
        } else {
            -1
        }
    }

    /// Exchanges the roles of even and odd indices.
    pub fn swapped(&self) -> Self {
        Superdim::new(self.n, self.m)
    }
}

impl fmt::Display for Superdim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// Integral weight in the basis `eps_1, ..., eps_{M+N}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn eps(len: usize, i: usize) -> Self {
        let mut w = Self::zero(len);
        w.0[i] = 1;
        w
    }

    /// `eps_i - eps_j`.
    pub fn root(len: usize, i: usize, j: usize) -> Self {
        let mut w = Self::zero(len);
        w.0[i] += 1;
        w.0[j] -= 1;
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// The invariant form `(lambda, mu) = sum d_i lambda_i mu_i`.
    pub fn form(&self, o: &Weight, sd: Superdim) -> i32 {
        self.0
            .iter()
            .zip(&o.0)
            .enumerate()
            .map(|(i, (a, b))| sd.d(i) * a * b)
            .sum()
    }

    /// Parity: the sum of the odd coordinates modulo two.
    pub fn parity(&self, sd: Superdim) -> u8 {
        (self.0[sd.m..].iter().sum::<i32>().rem_euclid(2)) as u8
    }

    /// Whether the weight is a non-negative integer combination of simple roots.
    pub fn in_positive_cone(&self) -> bool {
        let mut partial = 0;
        for &c in &self.0 {
            partial += c;
            if partial < 0 {
                return false;
            }
        }
        partial == 0
    }

    /// Dominance order: `self >= o`.
    pub fn dominates(&self, o: &Weight) -> bool {
        self.sub(o).in_positive_cone()
    }

    /// Height of an element of the root lattice (sum of simple root coefficients).
    pub fn height(&self) -> i64 {
        let mut partial = 0i64;
        let mut h = 0i64;
        for &c in &self.0[..self.0.len().saturating_sub(1)] {
            partial += c as i64;
            h += partial;
        }
        h
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A super vector space with a weight basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    pub parity: Vec<u8>,
    pub weight: Vec<Weight>,
    pub labels: Vec<String>,
}

impl GradedSpace {
    pub fn new(parity: Vec<u8>, weight: Vec<Weight>, labels: Vec<String>) -> Self {
        assert_eq!(parity.len(), weight.len());
        assert_eq!(parity.len(), labels.len());
        GradedSpace {
            parity,
            weight,
            labels,
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Tensor product with basis `x (x) y` at index `x * dim(other) + y`.
    pub fn tensor(&self, o: &GradedSpace) -> GradedSpace {
        let mut parity = Vec::with_capacity(self.dim() * o.dim());
        let mut weight = Vec::with_capacity(self.dim() * o.dim());
        let mut labels = Vec::with_capacity(self.dim() * o.dim());
        for x in 0..self.dim() {
            for y in 0..o.dim() {
                parity.push((self.parity[x] + o.parity[y]) % 2);
                weight.push(self.weight[x].add(&o.weight[y]));
                labels.push(format!("{}⊗{}", self.labels[x], o.labels[y]));
            }
        }
        GradedSpace {
            parity,
            weight,
            labels,
        }
    }

    /// Distinct weights in increasing order and the block index of each basis vector.
    pub fn weight_blocks(&self) -> (Vec<Weight>, Vec<usize>) {
        let mut ids: BTreeMap<&Weight, usize> = BTreeMap::new();
        for w in &self.weight {
            let n = ids.len();
            ids.entry(w).or_insert(n);
        }
        let mut sorted: Vec<&Weight> = ids.keys().copied().collect();
        sorted.sort();
        let pos: BTreeMap<&Weight, usize> =
            sorted.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let block = self.weight.iter().map(|w| pos[w]).collect();
        (sorted.into_iter().cloned().collect(), block)
    }

    /// Maximal weights with respect to dominance.
    pub fn maximal_weights(&self) -> Vec<Weight> {
        let (ws, _) = self.weight_blocks();
        ws.iter()
            .filter(|w| !ws.iter().any(|o| o != *w && o.dominates(w)))
            .cloned()
            .collect()
    }

    /// Minimal weights with respect to dominance.
    pub fn minimal_weights(&self) -> Vec<Weight> {
        let (ws, _) = self.weight_blocks();
        ws.iter()
            .filter(|w| !ws.iter().any(|o| o != *w && w.dominates(o)))
            .cloned()
            .collect()
    }

    pub fn indices_of_weight(&self, w: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.weight[i] == w).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_and_height() {
        let a = Weight(vec![1, 0, -1]);
        assert!(a.in_positive_cone());
        assert_eq!(a.height(), 2);
        assert!(!Weight(vec![-1, 1, 0]).in_positive_cone());
        assert!(!Weight(vec![1, 0, 0]).in_positive_cone());
    }

    #[test]
    fn form_signs() {
        let sd = Superdim::new(1, 1);
        let e2 = Weight::eps(2, 1);
        assert_eq!(e2.form(&e2, sd), -1);
        assert_eq!(Weight(vec![0, 1]).parity(sd), 1);
    }
}

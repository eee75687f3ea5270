//! Smallest subspace containing given vectors and stable under given operators.

use super::echelon::Echelon;
use super::mat::{Mat, SVec};
use super::scalar::Scalar;
use super::weight::GradedSpace;
use crate::field::{Fp, QRat, P61};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("operator {0} does not respect the weight grading")]
    InhomogeneousOperator(usize),
    #[error("generator {0} is not a weight vector")]
    InhomogeneousGenerator(usize),
    #[error("dimension mismatch: operator acts on {found}, space has {expected}")]
    Dimension { expected: usize, found: usize },
}

/// Partition of basis indices into weight blocks.
#[derive(Clone, Debug)]
pub struct Grading {
    block_of: Vec<usize>,
    block_dim: Vec<usize>,
}

impl Grading {
    pub fn from_space(space: &GradedSpace) -> Self {
        let (ws, block_of) = space.weight_blocks();
        let mut block_dim = vec![0; ws.len()];
        for &b in &block_of {
            block_dim[b] += 1;
        }
        Grading {
            block_of,
            block_dim,
        }
    }

    /// Everything in one block.
    pub fn trivial(n: usize) -> Self {
        Grading {
            block_of: vec![0; n],
            block_dim: vec![n],
        }
    }

    pub fn dim(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> usize {
        self.block_dim.len()
    }

    fn block_of_vec<F>(&self, v: &[(usize, F)]) -> Option<usize> {
        let b = self.block_of[v.first()?.0];
        v.iter().all(|(i, _)| self.block_of[*i] == b).then_some(b)
    }

    /// Block map of a homogeneous operator.
    fn targets<F: Scalar>(&self, op: &Mat<F>) -> Option<Vec<Option<usize>>> {
        let mut t = vec![None; self.blocks()];
        for (i, j, _) in op.entries() {
            let (src, dst) = (self.block_of[j], self.block_of[i]);
            match t[src] {
                None => t[src] = Some(dst),
                Some(d) if d != dst => return None,
                _ => {}
            }
        }
        Some(t)
    }
}

/// Result of a closure computation.
#[derive(Clone, Debug)]
pub struct Closure<F> {
    blocks: Vec<Echelon<F>>,
    pub dim: usize,
    pub ambient: usize,
}

impl<F: Scalar> Closure<F> {
    pub fn is_full(&self) -> bool {
        self.dim == self.ambient
    }

    /// Basis vectors, grouped by weight block.
    pub fn basis(&self) -> Vec<SVec<F>> {
        self.blocks
            .iter()
            .flat_map(|b| b.vectors().cloned())
            .collect()
    }

    pub fn block_bases(&self) -> impl Iterator<Item = &Echelon<F>> {
        self.blocks.iter()
    }

    pub fn contains(&self, v: SVec<F>, grading: &Grading) -> bool {
        if v.is_empty() {
            return true;
        }
        match grading.block_of_vec(&v) {
            Some(b) => self.blocks[b].contains(v),
            None => {
                // split into weight components: a graded subspace contains v
                // iff it contains every component
                let mut parts: Vec<SVec<F>> = vec![Vec::new(); grading.blocks()];
                for (i, x) in v {
                    parts[grading.block_of[i]].push((i, x));
                }
                parts
                    .into_iter()
                    .enumerate()
                    .all(|(b, p)| p.is_empty() || self.blocks[b].contains(p))
            }
        }
    }
}

/// Closure of the span of `gens` under `ops`.
///
/// With `stop_when_full` the search ends as soon as the whole space is
/// reached, in which case only the dimension is meaningful.
pub fn subspace_closure<F: Scalar>(
    gens: &[SVec<F>],
    ops: &[Mat<F>],
    grading: &Grading,
    stop_when_full: bool,
) -> Result<Closure<F>, ClosureError> {
    let n = grading.dim();
    let mut targets = Vec::with_capacity(ops.len());
    for (k, op) in ops.iter().enumerate() {
        if op.rows() != n || op.cols() != n {
            return Err(ClosureError::Dimension {
                expected: n,
                found: op.rows(),
            });
        }
        targets.push(
            grading
                .targets(op)
                .ok_or(ClosureError::InhomogeneousOperator(k))?,
        );
    }
    let mut blocks: Vec<Echelon<F>> = vec![Echelon::new(); grading.blocks()];
    let mut dim = 0;
    let mut queue: VecDeque<(usize, SVec<F>)> = VecDeque::new();
    for (k, g) in gens.iter().enumerate() {
        if g.is_empty() {
            continue;
        }
        let b = grading
            .block_of_vec(g)
            .ok_or(ClosureError::InhomogeneousGenerator(k))?;
        if let Some(v) = blocks[b].insert(g.clone()) {
            queue.push_back((b, v.clone()));
            dim += 1;
        }
    }
    while let Some((b, v)) = queue.pop_front() {
        if stop_when_full && dim == n {
            break;
        }
        for (op, t) in ops.iter().zip(&targets) {
            let Some(dst) = t[b] else { continue };
            if blocks[dst].rank() == grading.block_dim[dst] {
                continue;
            }
            let w = op.apply(&v);
            if w.is_empty() {
                continue;
            }
            if let Some(r) = blocks[dst].insert(w) {
                queue.push_back((dst, r.clone()));
                dim += 1;
            }
        }
    }
    Ok(Closure {
        blocks,
        dim,
        ambient: n,
    })
}

/// The value substituted for `q` in modular certificates.
pub const CERT_POINT: u64 = 1_000_000_007;

pub(crate) fn specialize(m: &Mat<QRat>) -> Option<Mat<Fp>> {
    m.try_map(|v| v.eval_mod(CERT_POINT, P61).map(Fp))
}

fn specialize_vec(v: &[(usize, QRat)]) -> Option<SVec<Fp>> {
    let mut out = Vec::with_capacity(v.len());
    for (i, x) in v {
        let y = x.eval_mod(CERT_POINT, P61)?;
        if y != 0 {
            out.push((*i, Fp(y)));
        }
    }
    Some(out)
}

/// Decides whether `gens` generate the whole space under `ops` over `Q(q)`.
///
/// A full closure after substituting a value for `q` proves fullness, since
/// specialization can only lower the rank. Otherwise the exact closure is
/// computed and returned.
pub fn generates_whole_space(
    gens: &[SVec<QRat>],
    ops: &[Mat<QRat>],
    grading: &Grading,
    use_certificate: bool,
) -> Result<(bool, Option<Closure<QRat>>), ClosureError> {
    if use_certificate {
        let sops: Option<Vec<Mat<Fp>>> = ops.iter().map(specialize).collect();
        let sgens: Option<Vec<SVec<Fp>>> = gens.iter().map(|g| specialize_vec(g)).collect();
        if let (Some(sops), Some(sgens)) = (sops, sgens) {
            let c = subspace_closure(&sgens, &sops, grading, true)?;
            if c.is_full() {
                return Ok((true, None));
            }
        }
    }
    let cleared: Vec<Mat<QRat>> = ops.iter().map(Mat::clear_denominators).collect();
    let c = subspace_closure(gens, &cleared, grading, false)?;
    Ok((c.is_full(), Some(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn shift_operator_closure() {
        // e: v0 -> v1 -> v2 generates from v0 but not from v1
        let e = Mat::from_triplets(3, 3, [(1, 0, q("q")), (2, 1, q("q+1"))]);
        let g = Grading::trivial(3);
        let c = subspace_closure(&[vec![(0, QRat::one())]], &[e.clone()], &g, false).unwrap();
        assert!(c.is_full());
        let c = subspace_closure(&[vec![(1, QRat::one())]], &[e.clone()], &g, false).unwrap();
        assert_eq!(c.dim, 2);
        let (full, _) = generates_whole_space(&[vec![(0, QRat::one())]], &[e], &g, true).unwrap();
        assert!(full);
    }
}

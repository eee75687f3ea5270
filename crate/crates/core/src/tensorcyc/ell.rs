use super::Mode;
use crate::field::{PolyZ, QRat, RatZ};
use crate::reps::Rep;
use crate::superlinalg::{kernel, vstack, OpMat, SVec, SeriesOp};

/// Eigen-series of the `s_ii(z)` on an ℓ-weight vector, with its parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllWeight {
    pub f: Vec<RatZ>,
    pub parity: u8,
}

impl EllWeight {
    /// Componentwise product, the ℓ-weight of a tensor of ℓ-weight vectors.
    pub fn mul(&self, o: &EllWeight) -> EllWeight {
        EllWeight {
            f: self.f.iter().zip(&o.f).map(|(a, b)| a.mul(b)).collect(),
            parity: self.parity ^ o.parity,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EllVector {
    pub vector: SVec<QRat>,
    /// `None` when the diagonal series do not act by scalars
    pub weight: Option<EllWeight>,
}

/// `f` with `o(z) v = f(z) v`, if `v` is a common eigenvector of the coefficients.
fn eigen_series(o: &SeriesOp, v: &SVec<QRat>) -> Option<RatZ> {
    let (p, x) = v.first()?;
    let mut coeffs = Vec::with_capacity(o.num().len());
    for m in o.num() {
        let w = m.apply(v);
        let c = w
            .iter()
            .find(|(i, _)| i == p)
            .map_or_else(QRat::zero, |(_, y)| y.checked_div(x).unwrap());
        let cv: SVec<QRat> = v.iter().map(|(i, y)| (*i, y.mul(&c))).filter(|(_, y)| !y.is_zero()).collect();
        if cv != w {
            return None;
        }
        coeffs.push(c);
    }
    Some(RatZ::new(PolyZ::from_coeffs(coeffs), o.den().clone()).expect("nonzero denominator"))
}

/// ℓ-weight of `v`, if it is an eigenvector of every `s_ii(z)`.
pub fn ell_weight_of(rep: &Rep, v: &SVec<QRat>) -> Option<EllWeight> {
    let parity = rep.space.parity[v.first()?.0];
    if v.iter().any(|(i, _)| rep.space.parity[*i] != parity) {
        return None;
    }
    let f = (0..rep.rank())
        .map(|i| eigen_series(rep.s(i, i), v))
        .collect::<Option<Vec<_>>>()?;
    Some(EllWeight { f, parity })
}

pub(crate) fn triangular_ops(rep: &Rep, mode: Mode) -> Vec<OpMat> {
    let n = rep.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let keep = match mode {
                Mode::Highest => i < j,
                Mode::Lowest => i > j,
            };
            if !keep {
                continue;
            }
            out.extend(rep.s(i, j).span_generators());
            if let Some(t) = rep.t(i, j) {
                out.extend(t.span_generators());
            }
        }
    }
    out
}

/// Basis of the vectors killed by the raising (or lowering) half, weight space
/// by weight space, with their ℓ-weights.
pub fn ell_vectors(rep: &Rep, mode: Mode) -> Vec<EllVector> {
    let ops = triangular_ops(rep, mode);
    let all: Vec<usize> = (0..rep.dim()).collect();
    let (weights, _) = rep.space.weight_blocks();
    let mut out = Vec::new();
    for w in &weights {
        let idx = rep.space.indices_of_weight(w);
        let kern = if ops.is_empty() {
            (0..idx.len()).map(|k| vec![(k, QRat::one())]).collect()
        } else {
            let blocks: Vec<OpMat> = ops.iter().map(|o| o.submatrix(&all, &idx)).collect();
            kernel(&vstack(&blocks.iter().collect::<Vec<_>>()))
        };
        for k in kern {
            let vector: SVec<QRat> = k.into_iter().map(|(c, x)| (idx[c], x)).collect();
            let weight = ell_weight_of(rep, &vector);
            out.push(EllVector { vector, weight });
        }
    }
    out
}

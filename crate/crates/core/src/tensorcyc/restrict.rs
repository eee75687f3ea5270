use super::CycError;
use crate::field::QRat;
use crate::reps::{restrict_to_subspace, Rep, RepKind};
use crate::superlinalg::{GradedSpace, SVec, Superdim, Weight};

/// The q-Yangian module obtained through `s_ab(z) -> s_{i_a i_b}(z)` on a
/// stable subspace.
///
/// The indices must be increasing with the even ones first, so that they
/// describe an embedded `gl(m'|n')`. Weights are projected onto the chosen
/// coordinates.
pub fn restrict_indices(rep: &Rep, indices: &[usize], basis: &[SVec<QRat>]) -> Result<Rep, CycError> {
    let sd = rep.sd;
    let n = sd.rank();
    if indices.is_empty() || indices.windows(2).any(|w| w[0] >= w[1]) || indices[indices.len() - 1] >= n {
        return Err(CycError::BadIndices(format!("{indices:?}")));
    }
    let m2 = indices.iter().filter(|&&i| sd.parity(i) == 0).count();
    let sub = Superdim::new(m2, indices.len() - m2);
    let k = indices.len();
    let s = (0..k)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .map(|(a, b)| rep.s(indices[a], indices[b]).clone())
        .collect();
    let weight = rep
        .space
        .weight
        .iter()
        .map(|w| Weight(indices.iter().map(|&i| w.0[i]).collect()))
        .collect();
    let space = GradedSpace::new(rep.space.parity.clone(), weight, rep.space.labels.clone());
    let whole = Rep::new(sub, space, RepKind::QYangian, s, None)?;
    Ok(restrict_to_subspace(&whole, basis)?)
}

/// Restriction to the corner `{1, M+N}`, a module over the q-Yangian of `gl(1|1)`.
pub fn restrict_gl11_corner(rep: &Rep, basis: &[SVec<QRat>]) -> Result<Rep, CycError> {
    let n = rep.rank();
    if rep.sd.m == 0 || rep.sd.n == 0 {
        return Err(CycError::BadIndices("corner needs M, N >= 1".into()));
    }
    restrict_indices(rep, &[0, n - 1], basis)
}

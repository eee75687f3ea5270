//! Finite type simple modules inside tensor powers and the KR modules built from them.

use super::{evaluation, flip, natural_finite, tensor_all, Rep, RepError, RepKind};
use crate::field::QRat;
use crate::superlinalg::{
    kernel, rref_dense, subspace_closure, vstack, GradedSpace, Grading, Mat, OpMat, SVec,
    SeriesOp, Superdim, Weight,
};

/// `L(ϖ_r)` for `1 <= r <= M`, cut out of `V^{(x) r}`.
///
/// The highest weight vector is the unique vector of weight `ϖ_r` killed by
/// the raising operators; the module is the closure of its line.
pub fn simple_finite_module(sd: Superdim, r: usize) -> Result<Rep, RepError> {
    if r == 0 || r > sd.m {
        return Err(RepError::InvalidParameter(format!(
            "r = {r} outside 1..={} for {sd}",
            sd.m
        )));
    }
    let n = sd.rank();
    let v = natural_finite(sd);
    let vr = tensor_all(&vec![v; r])?;
    let top = (0..r).fold(Weight::zero(n), |w, i| w.add(&Weight::eps(n, i)));
    let idx = vr.space.indices_of_weight(&top);
    let raising: Vec<OpMat> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| vr.s(i, j).coefficient(0).submatrix(&(0..vr.dim()).collect::<Vec<_>>(), &idx))
        .collect();
    // gl(1) has no raising operators and the whole weight space is highest
    let ker = if raising.is_empty() {
        vec![vec![(0, QRat::one())]]
    } else {
        kernel(&vstack(&raising.iter().collect::<Vec<_>>()))
    };
    if ker.len() != 1 {
        return Err(RepError::Unsupported(format!(
            "highest weight space of dimension {}",
            ker.len()
        )));
    }
    let seed: SVec<QRat> = ker[0].iter().map(|(k, x)| (idx[*k], x.clone())).collect();
    let ops: Vec<OpMat> = vr
        .generator_ops()
        .iter()
        .map(Mat::clear_denominators)
        .collect();
    let cl = subspace_closure(&[seed], &ops, &Grading::from_space(&vr.space), false)?;
    restrict_to_subspace(&vr, &cl.basis())
}

/// Coordinates of `w` on a reduced echelon basis, or `None` if `w` lies outside.
fn coordinates(w: &SVec<QRat>, rows: &[Vec<QRat>], pivots: &[usize]) -> Option<Vec<QRat>> {
    let c: Vec<QRat> = pivots
        .iter()
        .map(|&p| {
            w.iter()
                .find(|(i, _)| *i == p)
                .map_or_else(QRat::zero, |(_, x)| x.clone())
        })
        .collect();
    let mut res: Vec<QRat> = vec![QRat::zero(); rows.first().map_or(0, Vec::len)];
    for (i, x) in w {
        res[*i] = x.clone();
    }
    for (ck, row) in c.iter().zip(rows) {
        if ck.is_zero() {
            continue;
        }
        for (k, y) in row.iter().enumerate() {
            if !y.is_zero() {
                res[k] = res[k].sub(&ck.mul(y));
            }
        }
    }
    res.iter().all(QRat::is_zero).then_some(c)
}

/// The module induced on a stable subspace spanned by weight vectors.
///
/// The new basis is the reduced echelon form of `basis`; each new basis
/// vector takes the weight, parity and label of its pivot.
pub fn restrict_to_subspace(rep: &Rep, basis: &[SVec<QRat>]) -> Result<Rep, RepError> {
    let d = rep.dim();
    let mut rows: Vec<Vec<QRat>> = basis
        .iter()
        .map(|v| {
            let mut r = vec![QRat::zero(); d];
            for (i, x) in v {
                r[*i] = x.clone();
            }
            r
        })
        .collect();
    let pivots = rref_dense(&mut rows);
    rows.truncate(pivots.len());
    let sparse: Vec<SVec<QRat>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect()
        })
        .collect();
    for (k, &p) in pivots.iter().enumerate() {
        if sparse[k]
            .iter()
            .any(|(i, _)| rep.space.weight[*i] != rep.space.weight[p])
        {
            return Err(RepError::InvalidParameter(
                "basis is not made of weight vectors".into(),
            ));
        }
    }
    let e = pivots.len();
    let restrict = |a: &OpMat| -> Result<OpMat, RepError> {
        let mut cols = Vec::with_capacity(e);
        for v in &sparse {
            let w = a.apply(v);
            let c = coordinates(&w, &rows, &pivots).ok_or(RepError::NotStable)?;
            cols.push(
                c.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect(),
            );
        }
        Ok(Mat::from_columns(e, cols))
    };
    let restrict_series = |o: &SeriesOp| -> Result<SeriesOp, RepError> {
        let num = o.num().iter().map(&restrict).collect::<Result<Vec<_>, _>>()?;
        Ok(SeriesOp::rational(o.var(), e, num, o.den().clone())?)
    };
    let s = rep
        .s_all()
        .iter()
        .map(&restrict_series)
        .collect::<Result<Vec<_>, _>>()?;
    let t = match rep.t_all() {
        Some(t) => Some(t.iter().map(&restrict_series).collect::<Result<Vec<_>, _>>()?),
        None => None,
    };
    let space = GradedSpace::new(
        pivots.iter().map(|&p| rep.space.parity[p]).collect(),
        pivots.iter().map(|&p| rep.space.weight[p].clone()).collect(),
        pivots.iter().map(|&p| rep.space.labels[p].clone()).collect(),
    );
    Rep::new(rep.sd, space, rep.kind, s, t)
}

/// The Kirillov-Reshetikhin module `W^{(r)}_{1,a}`.
///
/// For `r > M` it is obtained from the module over `gl(N|M)` with index
/// `M + N - r` through the flip.
pub fn kr_module(sd: Superdim, r: usize, a: &QRat) -> Result<Rep, RepError> {
    let n = sd.rank();
    if r == 0 || r >= n {
        return Err(RepError::InvalidParameter(format!(
            "r = {r} outside 1..{n} for {sd}"
        )));
    }
    if a.is_zero() {
        return Err(RepError::InvalidParameter("a must be nonzero".into()));
    }
    if r <= sd.m {
        let w = evaluation(&simple_finite_module(sd, r)?, a)?;
        debug_assert_eq!(w.kind, RepKind::Affine);
        Ok(w)
    } else {
        let other = kr_module(sd.swapped(), n - r, a)?;
        flip(&other)
    }
}


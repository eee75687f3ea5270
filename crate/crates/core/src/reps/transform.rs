//! Operations producing new modules from old ones.

use super::{Rep, RepError};
use crate::field::{FactoredRatZ, PolyZ, QRat, RatZ};
use crate::superlinalg::{
    inverse, kernel, rank, Echelon, GradedSpace, Mat, OpMat, SVec, SeriesOp, Weight,
};

/// Tensoring with the odd line on the right: same matrices, opposite parities.
pub fn parity_shift(rep: &Rep) -> Rep {
    let mut space = rep.space.clone();
    for p in space.parity.iter_mut() {
        *p ^= 1;
    }
    Rep::from_parts_unchecked(
        rep.sd,
        space,
        rep.kind,
        rep.s_all().to_vec(),
        rep.t_all().map(<[SeriesOp]>::to_vec),
    )
}

/// Pull back along `t(z) -> f(z) t(z)`, `s(z) -> g(z) s(z)`.
///
/// `g` is a function of `z` and `f` a function of `z^{-1}`, both equal to one
/// at their expansion point. `f` is ignored for q-Yangian modules.
pub fn twist_series(rep: &Rep, f: &FactoredRatZ, g: &FactoredRatZ) -> Result<Rep, RepError> {
    if !f.scale().is_one() || !g.scale().is_one() {
        return Err(RepError::InvalidParameter(
            "twisting series must equal one at the expansion point".into(),
        ));
    }
    let (fr, gr) = (f.to_ratz(), g.to_ratz());
    let s = rep
        .s_all()
        .iter()
        .map(|o| o.mul_scalar_fn(&gr))
        .collect::<Result<Vec<_>, _>>()?;
    let t = match rep.t_all() {
        Some(t) => Some(
            t.iter()
                .map(|o| o.mul_scalar_fn(&fr))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    Rep::new(rep.sd, rep.space.clone(), rep.kind, s, t)
}

/// Pull back of a `gl(M|N)` module to `gl(N|M)` along
/// `s_ij -> (-1)^{|j|(|j|+|i|)} s_{j' i'}` with `i' = M+N-1-i`, same for `t`.
///
/// The map reverses the coproduct, so tensor factors come back in reverse order.
pub fn flip(rep: &Rep) -> Result<Rep, RepError> {
    let sd = rep.sd;
    let target = sd.swapped();
    let n = sd.rank();
    let bar = |i: usize| n - 1 - i;
    let family = |ops: &[SeriesOp]| -> Vec<SeriesOp> {
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (pi, pj) = (target.parity(i), target.parity(j));
                let o = &ops[bar(j) * n + bar(i)];
                out.push(if pj & (pi ^ pj) == 1 { o.neg() } else { o.clone() });
            }
        }
        out
    };
    let weight = rep
        .space
        .weight
        .iter()
        .map(|w| Weight((0..n).map(|i| -w.0[bar(i)]).collect()))
        .collect();
    let space = GradedSpace::new(rep.space.parity.clone(), weight, rep.space.labels.clone());
    Rep::new(
        target,
        space,
        rep.kind,
        family(rep.s_all()),
        rep.t_all().map(family),
    )
}

fn series_entry(o: &SeriesOp, r: usize, c: usize) -> RatZ {
    let num = PolyZ::from_coeffs(o.num().iter().map(|m| m.get(r, c)).collect());
    RatZ::new(num, o.den().clone()).expect("nonzero denominator")
}

/// Packs a matrix of rational functions into one series over a common denominator.
fn pack(var: crate::superlinalg::Var, dim: usize, entries: &[(usize, usize, RatZ)]) -> Result<SeriesOp, RepError> {
    let mut l = PolyZ::one();
    for (_, _, e) in entries {
        let g = l.gcd(e.den());
        l = l.mul(&e.den().div_rem(&g)?.0);
    }
    if l.coeff(0).is_zero() {
        return Err(RepError::Singular);
    }
    let mut deg = 0;
    let mut scaled = Vec::with_capacity(entries.len());
    for (r, c, e) in entries {
        let p = e.num().mul(&l.div_rem(e.den())?.0);
        deg = deg.max(p.len());
        scaled.push((*r, *c, p));
    }
    let num: Vec<OpMat> = (0..deg)
        .map(|k| {
            Mat::from_triplets(
                dim,
                dim,
                scaled.iter().map(|(r, c, p)| (*r, *c, p.coeff(k))),
            )
        })
        .collect();
    Ok(SeriesOp::rational(var, dim, num, l)?)
}

/// `x_ij -> (y_ij)^*` where `(y_ij)` is the inverse of `(x_ij)` as a matrix
/// with entries in `End W`, in the dual basis listed in reverse order.
fn dual_family(ops: &[SeriesOp], par_v: &[u8], par_w: &[u8]) -> Result<Vec<SeriesOp>, RepError> {
    let n = par_v.len();
    let d = par_w.len();
    let var = ops[0].var();
    let sign = |e: u8, x: RatZ| if e == 1 { crate::superlinalg::Scalar::neg(&x) } else { x };
    let mut trip = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let o = &ops[i * n + j];
            let mut seen = std::collections::BTreeSet::new();
            for m in o.num() {
                for (a, b, _) in m.entries() {
                    seen.insert((a, b));
                }
            }
            for (a, b) in seen {
                let e = series_entry(o, a, b);
                if !e.is_zero() {
                    trip.push((a * n + i, b * n + j, sign((par_v[i] ^ par_v[j]) & par_w[b], e)));
                }
            }
        }
    }
    let big = Mat::from_triplets(d * n, d * n, trip);
    let inv = inverse(&big).ok_or(RepError::Singular)?;
    let mut per: Vec<Vec<(usize, usize, RatZ)>> = vec![Vec::new(); n * n];
    for (r, c, v) in inv.entries() {
        let (a, i, b, j) = (r / n, r % n, c / n, c % n);
        let fpar = par_v[i] ^ par_v[j];
        let y = sign(fpar & par_w[b], v.clone());
        // [y*]_{kl} = (-1)^{|l||y|} y_{lk}; here l = a, k = b
        let ys = sign(par_w[a] & fpar, y);
        per[i * n + j].push((d - 1 - b, d - 1 - a, ys));
    }
    per.iter().map(|e| pack(var, d, e)).collect()
}

/// The dual module, through the antipode `S(z) -> S(z)^{-1}` and the graded
/// transpose. The dual basis is `(v_d^*, ..., v_1^*)`.
pub fn dual_module(rep: &Rep) -> Result<Rep, RepError> {
    let par_v: Vec<u8> = (0..rep.rank()).map(|i| rep.sd.parity(i)).collect();
    let par_w = rep.parity().to_vec();
    let s = dual_family(rep.s_all(), &par_v, &par_w)?;
    let t = match rep.t_all() {
        Some(t) => Some(dual_family(t, &par_v, &par_w)?),
        None => None,
    };
    let d = rep.dim();
    let rev = |k: usize| d - 1 - k;
    let space = GradedSpace::new(
        (0..d).map(|k| rep.space.parity[rev(k)]).collect(),
        (0..d).map(|k| rep.space.weight[rev(k)].neg()).collect(),
        (0..d).map(|k| format!("{}*", rep.space.labels[rev(k)])).collect(),
    );
    Rep::new(rep.sd, space, rep.kind, s, t)
}

/// Matrices `X` in `p * q` with `X A(x) = B(x) X` for the pair of series,
/// written as polynomial identities after clearing denominators.
fn intertwiner_rows(a: &SeriesOp, b: &SeriesOp, unknown: &[Vec<Option<usize>>], out: &mut Echelon<QRat>) {
    let d = unknown.len();
    let lift = |p: &PolyZ, ms: &[OpMat]| -> Vec<OpMat> {
        let len = (p.len() + ms.len()).saturating_sub(1);
        let mut acc = vec![Mat::zeros(d, d); len];
        for (i, c) in p.coeffs().iter().enumerate() {
            for (j, m) in ms.iter().enumerate() {
                acc[i + j] = acc[i + j].add(&m.scale(c));
            }
        }
        acc
    };
    let left = lift(b.den(), a.num());
    let right = lift(a.den(), b.num());
    let z = Mat::zeros(d, d);
    for k in 0..left.len().max(right.len()) {
        let (p, q) = (left.get(k).unwrap_or(&z), right.get(k).unwrap_or(&z));
        // (X P - Q X)[i][j] = sum_m X[i][m] P[m][j] - Q[i][m] X[m][j]
        for i in 0..d {
            for j in 0..d {
                let mut row: std::collections::BTreeMap<usize, QRat> = Default::default();
                for (m, v) in p.col(j) {
                    if let Some(u) = unknown[i][*m] {
                        let e = row.entry(u).or_insert_with(QRat::zero);
                        *e = e.add(v);
                    }
                }
                for (r, m, v) in q.entries() {
                    if r != i {
                        continue;
                    }
                    if let Some(u) = unknown[m][j] {
                        let e = row.entry(u).or_insert_with(QRat::zero);
                        *e = e.sub(v);
                    }
                }
                let row: SVec<QRat> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    out.insert(row);
                }
            }
        }
    }
}

/// An even isomorphism `X: A -> B` of modules, if one is found.
///
/// The space of even intertwiners is computed exactly; invertibility is
/// tested on a few fixed combinations of its basis.
pub fn isomorphism(a: &Rep, b: &Rep) -> Result<Option<OpMat>, RepError> {
    if a.sd != b.sd {
        return Err(RepError::AlgebraMismatch(a.sd, b.sd));
    }
    if a.dim() != b.dim() || a.kind != b.kind {
        return Ok(None);
    }
    let d = a.dim();
    let mut count = 0;
    let unknown: Vec<Vec<Option<usize>>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (b.space.parity[i] == a.space.parity[j]).then(|| {
                        count += 1;
                        count - 1
                    })
                })
                .collect()
        })
        .collect();
    let mut ech = Echelon::new();
    for (x, y) in a.s_all().iter().zip(b.s_all()) {
        intertwiner_rows(x, y, &unknown, &mut ech);
    }
    if let (Some(ta), Some(tb)) = (a.t_all(), b.t_all()) {
        for (x, y) in ta.iter().zip(tb) {
            intertwiner_rows(x, y, &unknown, &mut ech);
        }
    }
    let rows: Vec<SVec<QRat>> = ech.vectors().cloned().collect();
    let system = Mat::from_columns(count, rows).transpose();
    let sol = kernel(&system);
    if sol.is_empty() {
        return Ok(None);
    }
    let place = |v: &[QRat]| -> OpMat {
        let mut trip = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if let Some(u) = unknown[i][j] {
                    if !v[u].is_zero() {
                        trip.push((i, j, v[u].clone()));
                    }
                }
            }
        }
        Mat::from_triplets(d, d, trip)
    };
    for attempt in 0..4i64 {
        let mut v = vec![QRat::zero(); count];
        for (t, k) in sol.iter().enumerate() {
            let c = QRat::from_int(1 + (t as i64 + 1) * attempt * 7 + t as i64);
            for (u, x) in k {
                v[*u] = v[*u].add(&x.mul(&c));
            }
        }
        let x = place(&v);
        if rank(&x) == d {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

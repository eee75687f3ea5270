//! Exhaustive comparisons of the cyclicity criteria with the closure oracle
//! over parameter grids.

use super::oracle::{CyclicityOracle, CyclicityVerdict};
use super::predicates::{kr_cyclicity_sufficient, natural_cyclicity, simplicity_gl11, web_predicate};
use super::{CycError, Mode};
use crate::field::{FactoredRatZ, QRat};
use crate::par::Exec;
use crate::reps::{eval_natural, gl11_prime, kr_module, tensor, Rep};
use crate::superlinalg::Superdim;

/// `q^lo, ..., q^hi`.
pub fn q_powers(lo: i32, hi: i32) -> Vec<QRat> {
    (lo..=hi).map(QRat::q_pow).collect()
}

/// Ordered pairs `(a, b)`, `a != b`, from `{0} ∪ {q^m : |m| <= 3}`.
pub fn prime_parameters() -> Vec<(QRat, QRat)> {
    let mut pts = vec![QRat::zero()];
    pts.extend(q_powers(-3, 3));
    let mut out = Vec::new();
    for a in &pts {
        for b in &pts {
            if a != b {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// `c q^m` for `c in {1,2,3}`, `|m| <= 2`.
pub fn natural_parameters() -> Vec<QRat> {
    let mut out = Vec::new();
    for c in 1..=3 {
        for m in -2..=2 {
            out.push(QRat::monomial(c, m));
        }
    }
    out
}

/// All index tuples of length `1..=max_len` over `n` items, shortest first,
/// lexicographic within a length.
pub fn index_tuples(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Evaluates `f` on the tensor product of every tuple of factors up to
/// length three. Products of two factors are built once and reused.
pub fn tensor_sweep<R, F>(factors: &[Rep], max_len: usize, exec: Exec, f: F) -> Result<Vec<R>, CycError>
where
    R: Send,
    F: Fn(&[usize], &Rep) -> Result<R, CycError> + Sync + Send,
{
    assert!(max_len <= 3, "tuples longer than three are not cached");
    let n = factors.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let pair_reps: Vec<Rep> = if max_len >= 2 {
        exec.map(&pairs, |&(i, j)| tensor(&factors[i], &factors[j]))
            .into_iter()
            .collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let tuples = index_tuples(n, max_len);
    exec.map(&tuples, |t| match t.len() {
        1 => f(t, &factors[t[0]]),
        2 => f(t, &pair_reps[t[0] * n + t[1]]),
        _ => f(t, &tensor(&pair_reps[t[0] * n + t[1]], &factors[t[2]])?),
    })
    .into_iter()
    .collect()
}

/// Both oracles and all predicates on one tensor product of prime
/// `gl(1|1)` modules.
#[derive(Clone, Debug)]
pub struct WebRow {
    pub factors: Vec<(QRat, QRat)>,
    pub highest: CyclicityVerdict,
    pub lowest: CyclicityVerdict,
    pub simple_predicate: bool,
}

impl WebRow {
    pub fn simple_oracle(&self) -> bool {
        self.highest.oracle && self.lowest.oracle
    }

    pub fn consistent(&self) -> bool {
        self.highest.consistent()
            && self.lowest.consistent()
            && self.simple_predicate == self.simple_oracle()
    }
}

/// `V((1-z a_1)/(1-z b_1)) (x) ...` for all tuples of the given pairs.
pub fn web_sweep(params: &[(QRat, QRat)], max_len: usize, exec: Exec) -> Result<Vec<WebRow>, CycError> {
    let factors: Vec<Rep> = params
        .iter()
        .map(|(a, b)| gl11_prime(a, b))
        .collect::<Result<_, _>>()?;
    tensor_sweep(&factors, max_len, exec, |t, rep| {
        let fs: Vec<FactoredRatZ> = t.iter().map(|&i| FactoredRatZ::prime(&params[i].0, &params[i].1)).collect();
        let oracle = CyclicityOracle::new(rep);
        Ok(WebRow {
            factors: t.iter().map(|&i| params[i].clone()).collect(),
            highest: oracle.verdict(Mode::Highest, None)?.with_predicate(web_predicate(&fs, Mode::Highest)?),
            lowest: oracle.verdict(Mode::Lowest, None)?.with_predicate(web_predicate(&fs, Mode::Lowest)?),
            simple_predicate: simplicity_gl11(&fs)?,
        })
    })
}

/// Oracle and predicate for one tensor product of evaluation modules.
#[derive(Clone, Debug)]
pub struct NaturalRow {
    pub params: Vec<QRat>,
    pub highest: CyclicityVerdict,
    pub lowest: CyclicityVerdict,
}

impl NaturalRow {
    pub fn consistent(&self) -> bool {
        self.highest.consistent() && self.lowest.consistent()
    }
}

/// `V(a_1) (x) ... (x) V(a_k)` for all tuples from `params`, `k <= max_len`.
pub fn natural_sweep(sd: Superdim, params: &[QRat], max_len: usize, exec: Exec) -> Result<Vec<NaturalRow>, CycError> {
    let factors: Vec<Rep> = params
        .iter()
        .map(|a| eval_natural(sd, a))
        .collect::<Result<_, _>>()?;
    tensor_sweep(&factors, max_len, exec, |t, rep| {
        let ps: Vec<QRat> = t.iter().map(|&i| params[i].clone()).collect();
        let oracle = CyclicityOracle::new(rep);
        Ok(NaturalRow {
            highest: oracle
                .verdict(Mode::Highest, None)?
                .with_predicate(natural_cyclicity(&ps, sd, Mode::Highest)),
            lowest: oracle
                .verdict(Mode::Lowest, None)?
                .with_predicate(natural_cyclicity(&ps, sd, Mode::Lowest)),
            params: ps,
        })
    })
}

/// Oracle outcome for `W^{(r)}_{1,a q^{x_1}} (x) ... (x) W^{(r)}_{1,a q^{x_k}}`.
#[derive(Clone, Debug)]
pub struct KrRow {
    pub r: usize,
    pub xs: Vec<i64>,
    /// `x_1 >= x_2 >= ...`
    pub hypothesis: bool,
    pub highest: CyclicityVerdict,
}

impl KrRow {
    /// The sufficient condition may fail without contradiction.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.highest.oracle
    }
}

/// All `x` in `[-window, window]^k` for one `r`, with base parameter `a`.
pub fn kr_sweep(sd: Superdim, r: usize, a: &QRat, window: i64, k: usize, exec: Exec) -> Result<Vec<KrRow>, CycError> {
    let d = sd.d(r - 1);
    let xs: Vec<i64> = (-window..=window).collect();
    let factors: Vec<Rep> = xs
        .iter()
        .map(|&x| kr_module(sd, r, &a.mul(&QRat::q_pow(d * x as i32))))
        .collect::<Result<_, _>>()?;
    let rows = tensor_sweep(&factors, k, exec, |t, rep| {
        if t.len() != k {
            return Ok(None);
        }
        let x: Vec<i64> = t.iter().map(|&i| xs[i]).collect();
        Ok(Some(KrRow {
            r,
            hypothesis: kr_cyclicity_sufficient(&x),
            highest: CyclicityOracle::new(rep).verdict(Mode::Highest, None)?,
            xs: x,
        }))
    })?;
    Ok(rows.into_iter().flatten().collect())
}

//! Turning a parsed description plus grid bindings into concrete modules.

use crate::spec::{Factor, FactorKind, Modifier, Param, SpecFile};
use qloop_core::field::{FactoredRatZ, QRat};
use qloop_core::reps::{
    dual_module, eval_natural, flip, gl11_onedim, gl11_prime, kr_module, tensor_all, twist_series, OneDim, Rep,
    RepError,
};
use qloop_core::superlinalg::Superdim;
use qloop_core::tensorcyc::{
    kr_cyclicity_sufficient, natural_cyclicity, simplicity_gl11, web_predicate, CycError, Mode,
};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("line {line}: grid variable '{var}' has no value")]
    Unbound { line: usize, var: String },
    #[error("line {line}: {source}")]
    Rep { line: usize, source: RepError },
    #[error(transparent)]
    Tensor(#[from] RepError),
}

/// One assignment of values to grid variables, in declaration order.
pub type Binding = Vec<(String, QRat)>;

pub fn binding_label(b: &Binding) -> String {
    if b.is_empty() {
        return "-".into();
    }
    b.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

/// Cartesian product of the grids, first grid varying slowest.
pub fn expand(grids: &[(String, Vec<QRat>)]) -> Vec<Binding> {
    let mut out: Vec<Binding> = vec![Vec::new()];
    for (var, vals) in grids {
        out = out
            .into_iter()
            .flat_map(|b| {
                vals.iter().map(move |v| {
                    let mut c = b.clone();
                    c.push((var.clone(), v.clone()));
                    c
                })
            })
            .collect();
    }
    out
}

/// The zero/pole criterion that applies to a family, if any.
#[derive(Clone, Debug, PartialEq)]
pub enum Criterion {
    /// `V(f_i)` over `gl(1|1)` with `f_i = (1 - z a_i)/(1 - z b_i)`
    Web(Vec<FactoredRatZ>),
    /// evaluation modules `V(a_i)`
    Natural(Vec<QRat>),
    /// KR modules `W^(r)` at `a q_r^{x_j}`; only sufficient for highest cyclicity
    KrSufficient(Vec<i64>),
    None,
}

impl Criterion {
    pub fn label(&self) -> &'static str {
        match self {
            Criterion::Web(_) => "web",
            Criterion::Natural(_) => "natural",
            Criterion::KrSufficient(_) => "kr-sufficient",
            Criterion::None => "-",
        }
    }

    /// `None` when the criterion says nothing in this mode.
    pub fn evaluate(&self, sd: Superdim, mode: ModeSel) -> Result<Option<bool>, CycError> {
        Ok(match (self, mode) {
            (Criterion::Web(fs), ModeSel::Highest) => Some(web_predicate(fs, Mode::Highest)?),
            (Criterion::Web(fs), ModeSel::Lowest) => Some(web_predicate(fs, Mode::Lowest)?),
            (Criterion::Web(fs), ModeSel::Simple) => Some(simplicity_gl11(fs)?),
            (Criterion::Natural(a), ModeSel::Highest) => Some(natural_cyclicity(a, sd, Mode::Highest)),
            (Criterion::Natural(a), ModeSel::Lowest) => Some(natural_cyclicity(a, sd, Mode::Lowest)),
            (Criterion::Natural(a), ModeSel::Simple) => {
                Some(natural_cyclicity(a, sd, Mode::Highest) && natural_cyclicity(a, sd, Mode::Lowest))
            }
            (Criterion::KrSufficient(xs), ModeSel::Highest) => Some(kr_cyclicity_sufficient(xs)),
            _ => None,
        })
    }

    /// A sufficient criterion is only contradicted when it holds and the
    /// module is not cyclic.
    pub fn is_sufficient_only(&self) -> bool {
        matches!(self, Criterion::KrSufficient(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeSel {
    Highest,
    Lowest,
    Simple,
}

/// The modules of one instance, still as separate factors.
pub struct Instance {
    pub binding: Binding,
    pub factors: Vec<Rep>,
    pub criterion: Criterion,
}

impl Instance {
    pub fn product(&self) -> Result<Rep, BuildError> {
        Ok(tensor_all(&self.factors)?)
    }
}

fn value(p: &Param, env: &BTreeMap<String, QRat>, line: usize) -> Result<QRat, BuildError> {
    p.resolve(env).ok_or_else(|| match p {
        Param::Var(v) => BuildError::Unbound {
            line,
            var: v.clone(),
        },
        Param::Value(_) => unreachable!(),
    })
}

fn build_factor(sd: Superdim, fac: &Factor, env: &BTreeMap<String, QRat>) -> Result<Rep, BuildError> {
    let line = fac.line;
    let wrap = |source: RepError| BuildError::Rep { line, source };
    let flips = fac.modifiers.iter().filter(|m| **m == Modifier::Flip).count();
    // each flip swaps M and N, so start where the flips end up at `sd`
    let base_sd = if flips % 2 == 1 { sd.swapped() } else { sd };
    let mut rep = match &fac.kind {
        FactorKind::Kr { r, a } => kr_module(base_sd, *r, &value(a, env, line)?),
        FactorKind::Natural { a } => eval_natural(base_sd, &value(a, env, line)?),
        FactorKind::Gl11Prime { a, b } => gl11_prime(&value(a, env, line)?, &value(b, env, line)?),
        FactorKind::Parity { odd } => gl11_onedim(&OneDim::Parity(*odd)),
        FactorKind::Torus { a, b } => gl11_onedim(&OneDim::Torus(value(a, env, line)?, value(b, env, line)?)),
        FactorKind::Series { f } => gl11_onedim(&OneDim::Series(f.clone())),
    }
    .map_err(wrap)?;
    for m in &fac.modifiers {
        rep = match m {
            Modifier::Dual => dual_module(&rep),
            Modifier::Flip => flip(&rep),
            Modifier::Twist { f, g } => twist_series(&rep, f, g),
        }
        .map_err(wrap)?;
    }
    Ok(rep)
}

fn criterion(spec: &SpecFile, env: &BTreeMap<String, QRat>) -> Result<Criterion, BuildError> {
    if spec.factors.iter().any(|f| !f.modifiers.is_empty()) {
        return Ok(Criterion::None);
    }
    let fs = &spec.factors;
    if fs.iter().all(|f| matches!(f.kind, FactorKind::Gl11Prime { .. })) {
        let mut out = Vec::new();
        for f in fs {
            if let FactorKind::Gl11Prime { a, b } = &f.kind {
                out.push(FactoredRatZ::prime(&value(a, env, f.line)?, &value(b, env, f.line)?));
            }
        }
        return Ok(Criterion::Web(out));
    }
    if fs.iter().all(|f| matches!(f.kind, FactorKind::Natural { .. })) {
        let mut out = Vec::new();
        for f in fs {
            if let FactorKind::Natural { a } = &f.kind {
                out.push(value(a, env, f.line)?);
            }
        }
        return Ok(Criterion::Natural(out));
    }
    let mut kr = Vec::new();
    for f in fs {
        match &f.kind {
            FactorKind::Kr { r, a } => kr.push((*r, value(a, env, f.line)?)),
            _ => return Ok(Criterion::None),
        }
    }
    let r = kr[0].0;
    if kr.iter().any(|(s, _)| *s != r) {
        return Ok(Criterion::None);
    }
    // a_j = a_1 q_r^{x_j}, with q_r = q^{d_r}
    let d = spec.sd.d(r - 1);
    let base = kr[0].1.clone();
    if base.is_zero() {
        return Ok(Criterion::None);
    }
    let mut xs = Vec::new();
    for (_, a) in &kr {
        match a.checked_div(&base).ok().and_then(|t| t.as_q_power()) {
            Some(k) => xs.push(i64::from(k * d)),
            None => return Ok(Criterion::None),
        }
    }
    Ok(Criterion::KrSufficient(xs))
}

pub fn instantiate(spec: &SpecFile, binding: &Binding) -> Result<Instance, BuildError> {
    let env: BTreeMap<String, QRat> = binding.iter().cloned().collect();
    let factors = spec
        .factors
        .iter()
        .map(|f| build_factor(spec.sd, f, &env))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Instance {
        binding: binding.clone(),
        factors,
        criterion: criterion(spec, &env)?,
    })
}

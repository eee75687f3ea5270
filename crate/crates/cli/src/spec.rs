//! The line oriented module description format.
//!
//! ```text
//! algebra 2 1
//! factor kr r=2 a=q^3
//! factor natural a=x
//! modifier flip
//! grid x = q^-3..q^3
//! ```
//!
//! Modifier lines act on the factor above them. A parameter may name a grid
//! variable instead of an element of `Q(q)`.

use qloop_core::field::{parse_qrat, FactoredRatZ, Int, QRat};
use qloop_core::superlinalg::Superdim;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct SpecError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError {
        line,
        col,
        msg: msg.into(),
    })
}

/// A parameter: a literal or the name of a grid variable.
#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Value(QRat),
    Var(String),
}

impl Param {
    pub fn resolve(&self, env: &BTreeMap<String, QRat>) -> Option<QRat> {
        match self {
            Param::Value(v) => Some(v.clone()),
            Param::Var(name) => env.get(name).cloned(),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Value(v) => write!(f, "{v}"),
            Param::Var(n) => f.write_str(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FactorKind {
    Kr { r: usize, a: Param },
    Natural { a: Param },
    Gl11Prime { a: Param, b: Param },
    Parity { odd: bool },
    Torus { a: Param, b: Param },
    Series { f: FactoredRatZ },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Modifier {
    Dual,
    Flip,
    /// `t(z) -> f(z) t(z)`, `s(z) -> g(z) s(z)`
    Twist { f: FactoredRatZ, g: FactoredRatZ },
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub kind: FactorKind,
    pub modifiers: Vec<Modifier>,
    /// source line, for error messages; not part of the value
    pub line: usize,
}

impl PartialEq for Factor {
    fn eq(&self, o: &Self) -> bool {
        self.kind == o.kind && self.modifiers == o.modifiers
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub var: String,
    pub values: Vec<QRat>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecFile {
    pub sd: Superdim,
    pub factors: Vec<Factor>,
    pub grids: Vec<Grid>,
}

/// Whitespace separated tokens with their 1-based columns; double quotes
/// group a token containing spaces.
fn tokenize(line: &str, lno: usize) -> Result<Vec<(usize, String)>, SpecError> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    let mut quoted = false;
    for (i, ch) in line.char_indices() {
        let col = line[..i].chars().count() + 1;
        match ch {
            '"' => {
                if cur.is_empty() && !quoted {
                    start = col;
                }
                quoted = !quoted;
            }
            c if c.is_whitespace() && !quoted => {
                if !cur.is_empty() {
                    out.push((start, std::mem::take(&mut cur)));
                }
            }
            c => {
                if cur.is_empty() && !quoted {
                    start = col;
                }
                cur.push(c);
            }
        }
    }
    if quoted {
        return err(lno, line.chars().count() + 1, "unterminated quote");
    }
    if !cur.is_empty() {
        out.push((start, cur));
    }
    Ok(out)
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "q"
}

pub(crate) fn parse_param(text: &str, lno: usize, col: usize) -> Result<Param, SpecError> {
    if is_identifier(text) {
        return Ok(Param::Var(text.to_string()));
    }
    parse_qrat(text)
        .map(Param::Value)
        .or_else(|e| err(lno, col, format!("malformed element of Q(q) '{text}': {e}")))
}

fn parse_series(text: &str, lno: usize, col: usize) -> Result<FactoredRatZ, SpecError> {
    text.parse::<FactoredRatZ>()
        .or_else(|e| err(lno, col, format!("malformed factored series '{text}': {e}")))
}

/// `key=value` arguments of one line.
struct Args {
    lno: usize,
    items: Vec<(usize, String, String)>,
    head_col: usize,
}

impl Args {
    fn new(lno: usize, head_col: usize, toks: &[(usize, String)]) -> Result<Self, SpecError> {
        let mut items = Vec::new();
        for (col, t) in toks {
            match t.split_once('=') {
                Some((k, v)) if !k.is_empty() => items.push((*col, k.to_string(), v.to_string())),
                _ => return err(lno, *col, format!("expected key=value, found '{t}'")),
            }
        }
        Ok(Args {
            lno,
            items,
            head_col,
        })
    }

    fn take(&mut self, key: &str) -> Option<(usize, String)> {
        let pos = self.items.iter().position(|(_, k, _)| k == key)?;
        let (c, _, v) = self.items.remove(pos);
        Some((c, v))
    }

    fn required(&mut self, key: &str) -> Result<(usize, String), SpecError> {
        match self.take(key) {
            Some(x) => Ok(x),
            None => err(self.lno, self.head_col, format!("missing argument {key}=")),
        }
    }

    fn param(&mut self, key: &str) -> Result<Param, SpecError> {
        let (c, v) = self.required(key)?;
        parse_param(&v, self.lno, c)
    }

    fn finish(self) -> Result<(), SpecError> {
        match self.items.first() {
            Some((c, k, _)) => err(self.lno, *c, format!("unknown argument '{k}'")),
            None => Ok(()),
        }
    }
}

/// Values of a grid: `lo..hi` over `c q^m`, or a comma separated list.
pub fn parse_grid_values(text: &str, lno: usize, col: usize) -> Result<Vec<QRat>, SpecError> {
    if let Some((lo, hi)) = text.split_once("..") {
        let mono = |s: &str, c: usize| -> Result<(Int, i32), SpecError> {
            let v = parse_qrat(s.trim()).or_else(|e| err(lno, c, format!("malformed bound '{s}': {e}")))?;
            match v.as_monomial() {
                Some(m) => Ok(m),
                None => err(lno, c, format!("range bound '{s}' is not of the form c*q^m")),
            }
        };
        let (c1, e1) = mono(lo, col)?;
        let (c2, e2) = mono(hi, col + lo.len() + 2)?;
        if c1 != c2 {
            return err(lno, col, "range bounds must share the coefficient");
        }
        if e1 > e2 {
            return err(lno, col, "empty range");
        }
        let c = QRat::from_big_int(c1);
        return Ok((e1..=e2).map(|e| c.mul(&QRat::q_pow(e))).collect());
    }
    let mut out = Vec::new();
    let mut off = 0;
    for part in text.split(',') {
        let v = parse_qrat(part.trim())
            .or_else(|e| err(lno, col + off, format!("malformed grid value '{part}': {e}")))?;
        out.push(v);
        off += part.len() + 1;
    }
    Ok(out)
}

/// `name = values`, `name=values` or `name= values`.
pub fn parse_grid_decl(text: &str, lno: usize, col: usize) -> Result<Grid, SpecError> {
    let Some((name, values)) = text.split_once('=') else {
        return err(lno, col, "expected 'grid name = values'");
    };
    let var = name.trim().to_string();
    if !is_identifier(&var) {
        return err(lno, col, format!("invalid grid variable '{var}'"));
    }
    let vcol = col + name.len() + 1 + (values.len() - values.trim_start().len());
    Ok(Grid {
        var,
        values: parse_grid_values(values.trim(), lno, vcol)?,
    })
}

pub fn parse_spec(text: &str) -> Result<SpecFile, SpecError> {
    let mut sd: Option<Superdim> = None;
    let mut factors: Vec<Factor> = Vec::new();
    let mut grids: Vec<Grid> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokenize(line, lno)?;
        let Some(((kcol, keyword), rest)) = toks.split_first() else {
            continue;
        };
        if keyword != "algebra" && keyword != "grid" && sd.is_none() {
            return err(lno, *kcol, "the first directive must be 'algebra M N'");
        }
        match keyword.as_str() {
            "algebra" => {
                if sd.is_some() {
                    return err(lno, *kcol, "algebra declared twice");
                }
                let nums: Vec<usize> = rest
                    .iter()
                    .map(|(c, t)| t.parse().or_else(|_| err(lno, *c, format!("expected a size, found '{t}'"))))
                    .collect::<Result<_, _>>()?;
                if nums.len() != 2 {
                    return err(lno, *kcol, "expected 'algebra M N'");
                }
                if nums[0] + nums[1] == 0 {
                    return err(lno, *kcol, "M + N must be positive");
                }
                sd = Some(Superdim::new(nums[0], nums[1]));
            }
            "factor" => {
                let s = sd.unwrap();
                let Some(((ccol, kind), args)) = rest.split_first() else {
                    return err(lno, *kcol + 7, "missing factor kind");
                };
                let mut a = Args::new(lno, *ccol, args)?;
                let need_gl11 = |what: &str| -> Result<(), SpecError> {
                    if s != Superdim::new(1, 1) {
                        return err(lno, *ccol, format!("{what} factors need 'algebra 1 1'"));
                    }
                    Ok(())
                };
                let kind = match kind.as_str() {
                    "kr" => {
                        let (rc, rv) = a.required("r")?;
                        let r: usize = rv.parse().or_else(|_| err(lno, rc, format!("invalid r '{rv}'")))?;
                        if r == 0 || r >= s.rank() {
                            return err(lno, rc, format!("r={r} outside 1..={}", s.rank().saturating_sub(1)));
                        }
                        FactorKind::Kr { r, a: a.param("a")? }
                    }
                    "natural" => FactorKind::Natural { a: a.param("a")? },
                    "gl11prime" => {
                        need_gl11("gl11prime")?;
                        let (pa, pb) = (a.param("a")?, a.param("b")?);
                        if pa == pb {
                            return err(lno, *ccol, "gl11prime needs a != b");
                        }
                        FactorKind::Gl11Prime { a: pa, b: pb }
                    }
                    "onedim" => {
                        need_gl11("onedim")?;
                        if let Some((pc, p)) = a.take("parity") {
                            match p.as_str() {
                                "even" => FactorKind::Parity { odd: false },
                                "odd" => FactorKind::Parity { odd: true },
                                _ => return err(lno, pc, format!("parity must be even or odd, found '{p}'")),
                            }
                        } else if let Some((fc, f)) = a.take("f") {
                            FactorKind::Series { f: parse_series(&f, lno, fc)? }
                        } else {
                            FactorKind::Torus {
                                a: a.param("a")?,
                                b: a.param("b")?,
                            }
                        }
                    }
                    other => return err(lno, *ccol, format!("unknown factor kind '{other}'")),
                };
                a.finish()?;
                factors.push(Factor {
                    kind,
                    modifiers: Vec::new(),
                    line: lno,
                });
            }
            "modifier" => {
                let Some(((mcol, name), args)) = rest.split_first() else {
                    return err(lno, *kcol + 9, "missing modifier name");
                };
                let Some(last) = factors.last_mut() else {
                    return err(lno, *kcol, "modifier before any factor");
                };
                let mut a = Args::new(lno, *mcol, args)?;
                let m = match name.as_str() {
                    "dual" => Modifier::Dual,
                    "flip" => Modifier::Flip,
                    "twist" => {
                        let (gc, g) = a.required("g")?;
                        let f = match a.take("f") {
                            Some((fc, f)) => parse_series(&f, lno, fc)?,
                            None => FactoredRatZ::one(),
                        };
                        Modifier::Twist {
                            f,
                            g: parse_series(&g, lno, gc)?,
                        }
                    }
                    other => return err(lno, *mcol, format!("unknown modifier '{other}'")),
                };
                a.finish()?;
                last.modifiers.push(m);
            }
            "grid" => {
                let body_start = line.find("grid").unwrap() + 4;
                let body = &line[body_start..];
                let col = body_start + 1 + (body.len() - body.trim_start().len());
                let g = parse_grid_decl(body.trim(), lno, col)?;
                if grids.iter().any(|h| h.var == g.var) {
                    return err(lno, col, format!("grid variable '{}' declared twice", g.var));
                }
                grids.push(g);
            }
            other => return err(lno, *kcol, format!("unknown directive '{other}'")),
        }
    }
    let Some(sd) = sd else {
        return err(1, 1, "missing 'algebra M N'");
    };
    if factors.is_empty() {
        return err(text.lines().count().max(1), 1, "no factor lines");
    }
    Ok(SpecFile { sd, factors, grids })
}

fn quoted(f: &FactoredRatZ) -> String {
    format!("\"{f}\"")
}

impl fmt::Display for SpecFile {
    /// Canonical form: parsing it yields an equal `SpecFile`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {} {}", self.sd.m, self.sd.n)?;
        for fac in &self.factors {
            match &fac.kind {
                FactorKind::Kr { r, a } => writeln!(f, "factor kr r={r} a={a}")?,
                FactorKind::Natural { a } => writeln!(f, "factor natural a={a}")?,
                FactorKind::Gl11Prime { a, b } => writeln!(f, "factor gl11prime a={a} b={b}")?,
                FactorKind::Parity { odd } => {
                    writeln!(f, "factor onedim parity={}", if *odd { "odd" } else { "even" })?
                }
                FactorKind::Torus { a, b } => writeln!(f, "factor onedim a={a} b={b}")?,
                FactorKind::Series { f: s } => writeln!(f, "factor onedim f={}", quoted(s))?,
            }
            for m in &fac.modifiers {
                match m {
                    Modifier::Dual => writeln!(f, "modifier dual")?,
                    Modifier::Flip => writeln!(f, "modifier flip")?,
                    Modifier::Twist { f: t, g } => {
                        writeln!(f, "modifier twist g={} f={}", quoted(g), quoted(t))?
                    }
                }
            }
        }
        for g in &self.grids {
            let vs: Vec<String> = g.values.iter().map(QRat::to_string).collect();
            writeln!(f, "grid {} = {}", g.var, vs.join(","))?;
        }
        Ok(())
    }
}

impl SpecFile {
    /// Grid variables referenced by factors, in order of first use.
    pub fn variables(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        let mut push = |p: &Param| {
            if let Param::Var(v) = p {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        };
        for fac in &self.factors {
            match &fac.kind {
                FactorKind::Kr { a, .. } | FactorKind::Natural { a } => push(a),
                FactorKind::Gl11Prime { a, b } | FactorKind::Torus { a, b } => {
                    push(a);
                    push(b)
                }
                _ => {}
            }
        }
        out
    }
}

//! Command line front end: module descriptions in, versioned TSV out.

pub mod instance;
pub mod spec;

use clap::{Args, Parser, Subcommand, ValueEnum};
use instance::{binding_label, expand, instantiate, Binding, ModeSel};
use qloop_core::chars::character;
use qloop_core::field::QRat;
use qloop_core::gauss::{
    cartan_relations, drinfeld_currents, gauss_decompose, h_bracket_identity, xx_relations, zero_node_identity,
    Side, DEFAULT_ORDER,
};
use qloop_core::par::Exec;
use qloop_core::reps::Rep;
use qloop_core::rmatrix::{check_properties, hopf_pairing_value, ModeIndex};
use qloop_core::superlinalg::Superdim;
use qloop_core::tensorcyc::{CycError, CyclicityOracle, CyclicityVerdict, Mode};
use spec::{parse_grid_decl, parse_spec, SpecFile};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

/// Version of the TSV layout; bumped whenever columns change.
pub const TSV_VERSION: u32 = 1;

/// Environment variable overriding the default truncation order.
pub const TRUNC_ENV: &str = "QLOOP_TRUNC_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qloop", version, about = "Exact computations with RTT modules of quantum loop superalgebras")]
pub struct Cli {
    /// run every batch on one thread
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the R-matrix axioms, or evaluate one Hopf pairing value
    Rmatrix(RmatrixArgs),
    /// Hopf pairing value phi(s_ij^(n), t_ab^(m)), indices from 1
    Pairing(PairingArgs),
    /// Weight multiplicities of the module described in a description file
    Character(SpecArg),
    /// Decide cyclicity on the extremal vector and compare with the criterion,
    /// once per point of the grids declared in the file
    Cyclicity(CyclicityArgs),
    /// Cyclicity over the description file grids, with extra grids from the command line
    Sweep(SweepArgs),
    /// Gauss decomposition, Drinfeld currents and their relations
    Drinfeld(DrinfeldArgs),
}

#[derive(Args, Debug)]
pub struct RmatrixArgs {
    /// superdimension M N
    #[arg(long, num_args = 2, value_names = ["M", "N"], conflicts_with = "pairing")]
    pub check: Option<Vec<usize>>,
    /// M N i j n a b m
    #[arg(long, num_args = 8, value_names = ["M", "N", "I", "J", "N_MODE", "A", "B", "M_MODE"])]
    pub pairing: Option<Vec<usize>>,
    /// truncation order of the expansion
    #[arg(long)]
    pub order: Option<u32>,
}

#[derive(Args, Debug)]
pub struct PairingArgs {
    #[arg(value_names = ["M", "N", "I", "J", "N_MODE", "A", "B", "M_MODE"], num_args = 8, required = true)]
    pub values: Vec<usize>,
    #[arg(long)]
    pub order: Option<u32>,
}

#[derive(Args, Debug)]
pub struct SpecArg {
    #[arg(long)]
    pub spec: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Highest,
    Lowest,
    Simple,
}

impl From<ModeArg> for ModeSel {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Highest => ModeSel::Highest,
            ModeArg::Lowest => ModeSel::Lowest,
            ModeArg::Simple => ModeSel::Simple,
        }
    }
}

#[derive(Args, Debug)]
pub struct CyclicityArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_enum, default_value = "highest")]
    pub mode: ModeArg,
    /// report the closure computation
    #[arg(long)]
    pub oracle: bool,
    /// report the zero/pole criterion
    #[arg(long)]
    pub predicate: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// extra or overriding grid, e.g. "a2=q^-3..q^3"
    #[arg(long)]
    pub grid: Vec<String>,
    #[arg(long, value_enum, default_value = "highest")]
    pub mode: ModeArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verify {
    Cartan,
    Xx,
    Appendix,
}

#[derive(Args, Debug)]
pub struct DrinfeldArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// truncation order; overrides QLOOP_TRUNC_ORDER
    #[arg(long)]
    pub order: Option<usize>,
    /// relation families to check (all when omitted)
    #[arg(long, value_enum)]
    pub verify: Vec<Verify>,
}

/// Anything that ends the run with a usage error.
#[derive(Debug, Error)]
pub enum UsageError {
    #[error("{path}: {source}")]
    Spec { path: String, source: spec::SpecError },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("--grid '{text}': {source}")]
    Grid { text: String, source: spec::SpecError },
    #[error("{0}")]
    Other(String),
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError::Other(msg.into())
}

fn load(path: &PathBuf) -> Result<SpecFile, UsageError> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| UsageError::Io { path: p.clone(), source })?;
    parse_spec(&text).map_err(|source| UsageError::Spec { path: p, source })
}

/// `--order` beats the environment, which beats `default`.
pub fn truncation_order(flag: Option<usize>, default: usize) -> Result<usize, UsageError> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var(TRUNC_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{TRUNC_ENV}={v} is not a non-negative integer"))),
        Err(_) => Ok(default),
    }
}

fn header(out: &mut dyn Write, cmd: &str, cols: &[&str]) -> std::io::Result<()> {
    writeln!(out, "#qloop-tsv\t{TSV_VERSION}\t{cmd}")?;
    writeln!(out, "{}", cols.join("\t"))
}

fn ms(t: Instant) -> String {
    format!("{:.3}", t.elapsed().as_secs_f64() * 1e3)
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let res = match &cli.command {
        Command::Rmatrix(a) => rmatrix(a, out),
        Command::Pairing(a) => pairing(&a.values, a.order, out),
        Command::Character(a) => character_cmd(a, out),
        Command::Cyclicity(a) => cyclicity_cmd(a, exec, out),
        Command::Sweep(a) => sweep_cmd(a, exec, out),
        Command::Drinfeld(a) => drinfeld_cmd(a, out),
    };
    match res {
        Ok(code) => code,
        Err(RunError::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
        Err(RunError::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Compute(String),
}

type Outcome = Result<i32, RunError>;

fn superdim(m: usize, n: usize) -> Result<Superdim, UsageError> {
    if m + n == 0 {
        return Err(usage("M + N must be positive"));
    }
    Ok(Superdim::new(m, n))
}

fn rmatrix(a: &RmatrixArgs, out: &mut dyn Write) -> Outcome {
    if let Some(p) = &a.pairing {
        return pairing(p, a.order, out);
    }
    let Some(c) = &a.check else {
        return Err(usage("rmatrix needs --check M N or --pairing M N i j n a b m").into());
    };
    let sd = superdim(c[0], c[1])?;
    header(out, "rmatrix", &["algebra", "property", "status"])?;
    let mut code = EXIT_OK;
    for (p, ok) in check_properties(sd) {
        writeln!(out, "{sd}\t{p}\t{}", if ok { "PASS" } else { "FAIL" })?;
        if !ok {
            code = EXIT_FAIL;
        }
    }
    Ok(code)
}

fn pairing(v: &[usize], order: Option<u32>, out: &mut dyn Write) -> Outcome {
    let [m, n, i, j, sn, a, b, tm] = v else {
        return Err(usage("pairing takes M N i j n a b m").into());
    };
    let sd = superdim(*m, *n)?;
    let idx = |x: usize| -> Result<usize, UsageError> {
        if x == 0 || x > sd.rank() {
            Err(usage(format!("index {x} outside 1..={}", sd.rank())))
        } else {
            Ok(x - 1)
        }
    };
    let s = ModeIndex { i: idx(*i)?, j: idx(*j)?, mode: *sn as u32 };
    let t = ModeIndex { i: idx(*a)?, j: idx(*b)?, mode: *tm as u32 };
    let default = qloop_core::rmatrix::DEFAULT_TRUNC as usize;
    let trunc = truncation_order(order.map(|o| o as usize), default)? as u32;
    let value = hopf_pairing_value(sd, s, t, trunc).map_err(|e| usage(e.to_string()))?;
    header(out, "pairing", &["algebra", "s", "t", "value"])?;
    writeln!(out, "{sd}\ts{i}{j}^({sn})\tt{a}{b}^({tm})\t{value}")?;
    Ok(EXIT_OK)
}

fn single_instance(spec: &SpecFile, what: &str) -> Result<instance::Instance, RunError> {
    if !spec.grids.is_empty() {
        return Err(usage(format!("{what} takes a single module; use 'sweep' for grids")).into());
    }
    instantiate(spec, &Vec::new()).map_err(|e| usage(e.to_string()).into())
}

fn character_cmd(a: &SpecArg, out: &mut dyn Write) -> Outcome {
    let spec = load(&a.spec)?;
    let inst = single_instance(&spec, "character")?;
    let rep = inst.product().map_err(|e| RunError::Compute(e.to_string()))?;
    header(out, "character", &["weight", "multiplicity"])?;
    write!(out, "{}", character(&rep))?;
    Ok(EXIT_OK)
}

/// Result of one cyclicity check, ready to print.
pub struct CycRow {
    pub binding: String,
    pub criterion: &'static str,
    pub predicate: Option<bool>,
    pub oracle: Result<(bool, usize, String, Option<String>), String>,
    pub status: Status,
    pub millis: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

fn describe_witness(v: &CyclicityVerdict) -> String {
    format!("closure of extremal vector has dim {} < {}", v.closure_dim, v.dim)
}

/// Oracle answer, dim, closure description and a witness for non cyclic cases.
fn oracle(rep: &Rep, mode: ModeSel) -> Result<(bool, usize, String, Option<String>), CycError> {
    let o = CyclicityOracle::new(rep);
    match mode {
        ModeSel::Highest | ModeSel::Lowest => {
            let m = if mode == ModeSel::Highest { Mode::Highest } else { Mode::Lowest };
            let v = o.verdict(m, None)?;
            let w = (!v.oracle).then(|| describe_witness(&v));
            Ok((v.oracle, v.dim, v.closure_dim.to_string(), w))
        }
        ModeSel::Simple => {
            let h = o.verdict(Mode::Highest, None)?;
            let l = o.verdict(Mode::Lowest, None)?;
            let w = match (h.oracle, l.oracle) {
                (true, true) => None,
                (false, _) => Some(format!("highest: {}", describe_witness(&h))),
                (true, false) => Some(format!("lowest: {}", describe_witness(&l))),
            };
            Ok((h.oracle && l.oracle, h.dim, format!("{}/{}", h.closure_dim, l.closure_dim), w))
        }
    }
}

fn check_instance(spec: &SpecFile, binding: &Binding, mode: ModeSel) -> CycRow {
    let start = Instant::now();
    let label = binding_label(binding);
    let fail = |criterion: &'static str, msg: String| CycRow {
        binding: label.clone(),
        criterion,
        predicate: None,
        oracle: Err(msg),
        status: Status::Error,
        millis: ms(start),
    };
    let inst = match instantiate(spec, binding) {
        Ok(i) => i,
        Err(e) => return fail("-", e.to_string()),
    };
    let crit = inst.criterion.label();
    let predicate = match inst.criterion.evaluate(spec.sd, mode) {
        Ok(p) => p,
        Err(e) => return fail(crit, e.to_string()),
    };
    let rep = match inst.product() {
        Ok(r) => r,
        Err(e) => return fail(crit, e.to_string()),
    };
    let res = oracle(&rep, mode).map_err(|e| e.to_string());
    let status = match (&res, predicate) {
        (Err(_), _) => Status::Error,
        (Ok(_), None) => Status::Pass,
        (Ok((o, ..)), Some(p)) => {
            let bad = if inst.criterion.is_sufficient_only() { p && !*o } else { p != *o };
            if bad {
                Status::Fail
            } else {
                Status::Pass
            }
        }
    };
    CycRow {
        binding: label,
        criterion: crit,
        predicate,
        oracle: res,
        status,
        millis: ms(start),
    }
}

const CYC_COLS: [&str; 10] = [
    "binding",
    "mode",
    "criterion",
    "predicate",
    "oracle",
    "dim",
    "closure_dim",
    "status",
    "witness",
    "runtime_ms",
];

fn mode_name(m: ModeSel) -> &'static str {
    match m {
        ModeSel::Highest => "highest",
        ModeSel::Lowest => "lowest",
        ModeSel::Simple => "simple",
    }
}

fn write_rows(rows: &[CycRow], mode: ModeSel, show: (bool, bool), out: &mut dyn Write) -> Outcome {
    let (show_oracle, show_pred) = show;
    let mut code = EXIT_OK;
    for r in rows {
        let pred = match (show_pred, r.predicate) {
            (true, Some(p)) => flag(p),
            _ => "-",
        };
        let (oracle, dim, closure, witness) = match &r.oracle {
            Ok((o, d, c, w)) => (
                if show_oracle { flag(*o).to_string() } else { "-".into() },
                d.to_string(),
                c.clone(),
                match (r.status, w) {
                    (Status::Fail, Some(w)) => w.clone(),
                    (Status::Fail, None) => "criterion false but extremal vector generates".into(),
                    _ => "-".into(),
                },
            ),
            Err(e) => ("-".into(), "-".into(), "-".into(), e.clone()),
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{pred}\t{oracle}\t{dim}\t{closure}\t{}\t{witness}\t{}",
            r.binding,
            mode_name(mode),
            r.criterion,
            r.status.as_str(),
            r.millis
        )?;
        if r.status != Status::Pass {
            code = EXIT_FAIL;
        }
    }
    Ok(code)
}

fn grid_rows(spec: &SpecFile, extra: &[String], mode: ModeSel, exec: Exec) -> Result<Vec<CycRow>, RunError> {
    let mut grids: Vec<(String, Vec<QRat>)> = spec.grids.iter().map(|g| (g.var.clone(), g.values.clone())).collect();
    for text in extra {
        let g = parse_grid_decl(text, 1, 1).map_err(|source| UsageError::Grid { text: text.clone(), source })?;
        match grids.iter_mut().find(|(v, _)| *v == g.var) {
            Some(slot) => slot.1 = g.values,
            None => grids.push((g.var, g.values)),
        }
    }
    for v in spec.variables() {
        if !grids.iter().any(|(g, _)| *g == v) {
            return Err(usage(format!("variable '{v}' has no grid")).into());
        }
    }
    let bindings = expand(&grids);
    Ok(exec.map(&bindings, |b| check_instance(spec, b, mode)))
}

/// One row per grid point, or a single row when the file declares no grid.
fn cyclicity_cmd(a: &CyclicityArgs, exec: Exec, out: &mut dyn Write) -> Outcome {
    let spec = load(&a.spec)?;
    let mode = ModeSel::from(a.mode);
    let rows = grid_rows(&spec, &[], mode, exec)?;
    // with neither flag both columns are shown
    let show = if a.oracle || a.predicate { (a.oracle, a.predicate) } else { (true, true) };
    header(out, "cyclicity", &CYC_COLS)?;
    write_rows(&rows, mode, show, out)
}

fn sweep_cmd(a: &SweepArgs, exec: Exec, out: &mut dyn Write) -> Outcome {
    let spec = load(&a.spec)?;
    let mode = ModeSel::from(a.mode);
    let rows = grid_rows(&spec, &a.grid, mode, exec)?;
    header(out, "sweep", &CYC_COLS)?;
    write_rows(&rows, mode, (true, true), out)
}

fn drinfeld_cmd(a: &DrinfeldArgs, out: &mut dyn Write) -> Outcome {
    let spec = load(&a.spec)?;
    let order = truncation_order(a.order, DEFAULT_ORDER)?;
    let inst = single_instance(&spec, "drinfeld")?;
    let compute = |e: &dyn std::fmt::Display| RunError::Compute(e.to_string());
    let rep = inst.product().map_err(|e| compute(&e))?;
    let families: Vec<Verify> = if a.verify.is_empty() {
        vec![Verify::Cartan, Verify::Xx, Verify::Appendix]
    } else {
        a.verify.clone()
    };
    let data = drinfeld_currents(&rep, order).map_err(|e| compute(&e))?;
    header(out, "drinfeld", &["relation", "checked", "failed", "status", "detail"])?;
    let mut code = EXIT_OK;
    let mut emit = |out: &mut dyn Write, name: &str, checked: String, failed: String, ok: bool, detail: String| {
        if !ok {
            code = EXIT_FAIL;
        }
        writeln!(out, "{name}\t{checked}\t{failed}\t{}\t{detail}", if ok { "PASS" } else { "FAIL" })
    };
    for fam in families {
        match fam {
            Verify::Cartan => {
                for side in [Side::S, Side::T] {
                    let g = gauss_decompose(&rep, side, order).map_err(|e| compute(&e))?;
                    let res = g.residual(&rep);
                    let name = format!("gauss-{}", if side == Side::S { "s" } else { "t" });
                    emit(out, &name, "-".into(), res.to_string(), res == 0, format!("order {order}"))?;
                }
                for c in cartan_relations(&data) {
                    let detail = c.failures.first().map_or("-".into(), |(x, y)| format!("z^{x} w^{y}"));
                    emit(out, &c.name, c.checked.to_string(), c.failures.len().to_string(), c.passed(), detail)?;
                }
            }
            Verify::Xx => {
                for c in xx_relations(&data) {
                    let detail = c.failures.first().map_or("-".into(), |(x, y)| format!("z^{x} w^{y}"));
                    emit(out, &c.name, c.checked.to_string(), c.failures.len().to_string(), c.passed(), detail)?;
                }
            }
            Verify::Appendix => {
                let mut ids = vec![zero_node_identity(&rep, &data).map_err(|e| compute(&e))?];
                ids.extend(h_bracket_identity(&rep, &data).map_err(|e| compute(&e))?);
                for id in ids {
                    let detail = id.scalar.as_ref().map_or("not proportional".into(), |s| format!("scalar {s}"));
                    emit(out, &id.name, "-".into(), "-".into(), id.holds(), detail)?;
                }
            }
        }
    }
    Ok(code)
}

use super::{weight_label, CycError, Mode};
use crate::field::QRat;
use crate::reps::Rep;
use crate::superlinalg::{generates_whole_space, Grading, OpMat, SVec};

/// What the closure from the extremal vector produced.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// the vector generates the module
    Generated,
    /// basis of the proper submodule it generates
    Submodule(Vec<SVec<QRat>>),
}

#[derive(Clone, Debug)]
pub struct CyclicityVerdict {
    pub mode: Mode,
    /// value of the zero/pole criterion, when the caller supplied one
    pub predicate: Option<bool>,
    pub oracle: bool,
    /// the extremal weight vector used as generator
    pub candidate: SVec<QRat>,
    pub dim: usize,
    pub closure_dim: usize,
    pub witness: Witness,
}

impl CyclicityVerdict {
    pub fn with_predicate(mut self, p: bool) -> Self {
        self.predicate = Some(p);
        self
    }

    /// `true` unless a predicate was supplied and disagrees.
    pub fn consistent(&self) -> bool {
        self.predicate.map_or(true, |p| p == self.oracle)
    }
}

/// Cached generators and grading of a module, shared by both modes.
pub struct CyclicityOracle<'a> {
    rep: &'a Rep,
    ops: Vec<OpMat>,
    grading: Grading,
}

/// Above this dimension the modular certificate is tried first.
const CERTIFICATE_DIM: usize = 16;

impl<'a> CyclicityOracle<'a> {
    pub fn new(rep: &'a Rep) -> Self {
        CyclicityOracle {
            rep,
            ops: rep.generator_ops_raw(),
            grading: Grading::from_space(&rep.space),
        }
    }

    /// Decides whether the unique top (or bottom) weight vector generates
    /// the module under all coefficients of the generating series.
    ///
    /// A full closure found after reducing modulo a prime is accepted as
    /// proof; any other outcome is recomputed over `Q(q)`. `use_certificate`
    /// forces or forbids that shortcut; by default it is used on larger modules.
    pub fn verdict(&self, mode: Mode, use_certificate: Option<bool>) -> Result<CyclicityVerdict, CycError> {
        let rep = self.rep;
        let ext = match mode {
            Mode::Highest => rep.space.maximal_weights(),
            Mode::Lowest => rep.space.minimal_weights(),
        };
        let [w] = ext.as_slice() else {
            return Err(CycError::AmbiguousCandidate(format!(
                "{} extremal weights",
                ext.len()
            )));
        };
        let idx = rep.space.indices_of_weight(w);
        if idx.len() != 1 {
            return Err(CycError::AmbiguousCandidate(format!(
                "weight ({}) has multiplicity {}",
                weight_label(w),
                idx.len()
            )));
        }
        let candidate: SVec<QRat> = vec![(idx[0], QRat::one())];
        let dim = rep.dim();
        let cert = use_certificate.unwrap_or(dim > CERTIFICATE_DIM);
        let (full, closure) =
            generates_whole_space(&[candidate.clone()], &self.ops, &self.grading, cert)?;
        let (closure_dim, witness) = match closure {
            Some(c) if !full => (c.dim, Witness::Submodule(c.basis())),
            _ => (dim, Witness::Generated),
        };
        Ok(CyclicityVerdict {
            mode,
            predicate: None,
            oracle: full,
            candidate,
            dim,
            closure_dim,
            witness,
        })
    }
}

pub fn cyclicity_oracle(rep: &Rep, mode: Mode) -> Result<CyclicityVerdict, CycError> {
    CyclicityOracle::new(rep).verdict(mode, None)
}

pub fn is_highest_ell_weight(rep: &Rep) -> Result<CyclicityVerdict, CycError> {
    cyclicity_oracle(rep, Mode::Highest)
}

pub fn is_lowest_ell_weight(rep: &Rep) -> Result<CyclicityVerdict, CycError> {
    cyclicity_oracle(rep, Mode::Lowest)
}

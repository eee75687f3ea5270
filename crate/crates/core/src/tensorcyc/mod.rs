//! Highest and lowest ℓ-weight theory on concrete modules: ℓ-weight vectors,
//! the closure oracle for cyclicity, the zero/pole predicates and the
//! restriction to `gl(1|1)` corners.

mod ell;
mod oracle;
mod predicates;
mod restrict;
mod sweep;

pub use ell::{ell_vectors, ell_weight_of, EllVector, EllWeight};
pub use oracle::{
    cyclicity_oracle, is_highest_ell_weight, is_lowest_ell_weight, CyclicityOracle, CyclicityVerdict,
    Witness,
};
pub use predicates::{
    kr_cyclicity_sufficient, natural_cyclicity, polynomial_family, polynomial_family_det,
    simplicity_gl11, web_predicate, wedge_product_formula,
};
pub use restrict::{restrict_gl11_corner, restrict_indices};
pub use sweep::{
    index_tuples, kr_sweep, natural_parameters, natural_sweep, prime_parameters, q_powers, tensor_sweep,
    web_sweep, KrRow, NaturalRow, WebRow,
};

use crate::reps::RepError;
use crate::superlinalg::{ClosureError, Weight};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("no unique extremal weight: {0}")]
    AmbiguousCandidate(String),
    #[error("ℓ-weight series must equal one at z = 0")]
    NotNormalized,
    #[error("index set does not define a subalgebra: {0}")]
    BadIndices(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// Which triangular half must kill the generating vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// killed by `s_ij, t_ij` with `i < j`
    Highest,
    /// killed by `s_ij, t_ij` with `i > j`
    Lowest,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Highest => "highest",
            Mode::Lowest => "lowest",
        })
    }
}

pub(crate) fn weight_label(w: &Weight) -> String {
    w.0.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests;

//! Gauss decomposition of the generating matrices on a module, the
//! resulting Drinfeld currents, and exact checks of their relations.

mod brackets;
mod decompose;
mod relations;
mod trunc;

pub use brackets::{
    cartan_h, fold_left, fold_right, h_bracket_identity, proportionality, quantum_bracket,
    zero_node_identity, BracketIdentity,
    QGraded,
};
pub use decompose::{drinfeld_currents, gauss_decompose, DrinfeldData, GaussFactors, Side};
pub use relations::{cartan_relations, xx_relations, RelationCheck};
pub use trunc::{Current, TruncSeries};

use thiserror::Error;

/// Default truncation order of all series computations.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("leading coefficient of pivot {0} is not invertible")]
    Singular(usize),
    #[error("series has non-identity constant term")]
    NotUnipotent,
    #[error("module carries no T(z) action")]
    NoLowerSeries,
    #[error("operator is not homogeneous of degree {0}")]
    Inhomogeneous(String),
    #[error("algebra too small: {0}")]
    TooSmall(String),
}

#[cfg(test)]
mod tests;

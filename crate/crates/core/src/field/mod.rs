//! Exact arithmetic in `Q(q)` and rational functions of the spectral variable.

mod fp;
mod int;
mod parse;
mod poly;
mod qrat;
mod ratz;

pub use fp::{Fp, P61};
pub use int::Int;
pub use parse::parse_qrat;
pub use poly::ZPoly;
pub use qrat::QRat;
pub use ratz::{parse_factored, FactoredRatZ, Point, PolyZ, RatZ};
#[allow(unused_imports)]
pub(crate) use qrat::{inv_mod, mul_mod, pow_mod};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scale of a factored function must be nonzero")]
    ZeroScale,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl FieldError {
    pub(crate) fn offset(self, by: usize) -> Self {
        match self {
            FieldError::Parse { pos, msg } => FieldError::Parse { pos: pos + by, msg },
            e => e,
        }
    }
}

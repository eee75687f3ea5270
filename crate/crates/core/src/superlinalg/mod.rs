//! Linear algebra over `Q(q)` for super vector spaces.

mod closure;
mod echelon;
mod mat;
mod oppoly;
mod scalar;
mod series;
pub mod superops;
mod weight;

pub use closure::{generates_whole_space, subspace_closure, Closure, ClosureError, Grading, CERT_POINT};
pub use echelon::{det_bareiss, inverse, kernel, rank, rref_dense, vstack, Echelon};
pub use mat::{Mat, OpMat, SVec};
pub use oppoly::OpPoly;
pub use scalar::Scalar;
pub use series::{SeriesOp, Var};
pub use weight::{GradedSpace, Superdim, Weight};

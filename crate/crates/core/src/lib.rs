//! Exact representation theory of quantum loop superalgebras of type `gl(M|N)`.

pub mod chars;
pub mod field;
pub mod gauss;
pub mod par;
pub mod reps;
pub mod rmatrix;
pub mod superlinalg;
pub mod tensorcyc;

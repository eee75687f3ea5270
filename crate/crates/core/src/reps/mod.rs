//! Concrete modules: matrices of the generating series on a weight basis.

mod gl11;
mod natural;
mod rtt;
mod simple;
mod tensor;
mod transform;

pub use gl11::{gl11_onedim, gl11_prime, OneDim};
pub use natural::{evaluation, eval_natural, natural_finite};
pub use rtt::{check_rtt, RttReport};
pub use simple::{kr_module, restrict_to_subspace, simple_finite_module};
pub use tensor::{tensor, tensor_all};
pub use transform::{dual_module, flip, isomorphism, parity_shift, twist_series};

use crate::field::{FieldError, PolyZ, QRat};
use crate::superlinalg::{ClosureError, GradedSpace, OpMat, SeriesOp, Superdim, Var};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("subspace is not stable under the action")]
    NotStable,
    #[error("generating matrix is not invertible")]
    Singular,
    #[error("modules over different algebras: {0} and {1}")]
    AlgebraMismatch(Superdim, Superdim),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Which generators act.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepKind {
    /// the full loop algebra: both `S(z)` and `T(z)`
    Affine,
    /// the finite type algebra: constant upper `S`, lower `T`
    FiniteType,
    /// the q-Yangian: only `S(z)`
    QYangian,
}

/// A finite dimensional module given by the action of the generating series.
#[derive(Clone, Debug)]
pub struct Rep {
    pub sd: Superdim,
    pub space: GradedSpace,
    pub kind: RepKind,
    s: Vec<SeriesOp>,
    t: Option<Vec<SeriesOp>>,
}

/// Puts a family of series over their least common denominator.
fn unify_dens(ops: Vec<SeriesOp>) -> Vec<SeriesOp> {
    let mut l = PolyZ::one();
    for o in &ops {
        if o.is_zero() || o.den().degree() <= 0 {
            continue;
        }
        let g = l.gcd(o.den());
        l = l.mul(&o.den().div_rem(&g).expect("nonzero gcd").0);
    }
    if l.degree() <= 0 {
        return ops;
    }
    let l0inv = l.coeff(0).inv().expect("denominators do not vanish at the origin");
    let l = l.scale(&l0inv);
    ops.into_iter()
        .map(|o| {
            if o.is_zero() {
                return SeriesOp::rational(o.var(), o.dim(), Vec::new(), l.clone()).unwrap();
            }
            if o.den() == &l {
                return o;
            }
            let (f, _) = l.div_rem(o.den()).unwrap();
            let num: Vec<OpMat> = {
                let mut out = vec![crate::superlinalg::Mat::zeros(o.dim(), o.dim()); f.len() + o.num().len() - 1];
                for (i, c) in f.coeffs().iter().enumerate() {
                    for (j, m) in o.num().iter().enumerate() {
                        out[i + j] = out[i + j].add(&m.scale(c));
                    }
                }
                out
            };
            SeriesOp::rational(o.var(), o.dim(), num, l.clone()).unwrap()
        })
        .collect()
}

impl Rep {
    pub fn new(
        sd: Superdim,
        space: GradedSpace,
        kind: RepKind,
        s: Vec<SeriesOp>,
        t: Option<Vec<SeriesOp>>,
    ) -> Result<Self, RepError> {
        let n = sd.rank();
        let d = space.dim();
        if s.len() != n * n || t.as_ref().is_some_and(|t| t.len() != n * n) {
            return Err(RepError::InvalidParameter(format!(
                "expected {} generating series",
                n * n
            )));
        }
        if s.iter().chain(t.iter().flatten()).any(|o| o.dim() != d) {
            return Err(RepError::InvalidParameter("series of wrong size".into()));
        }
        if s.iter().any(|o| o.var() != Var::Z && !o.is_zero()) {
            return Err(RepError::InvalidParameter("S(z) must expand in z".into()));
        }
        match (kind, &t) {
            (RepKind::QYangian, Some(_)) => {
                return Err(RepError::InvalidParameter("q-Yangian modules carry no T".into()))
            }
            (RepKind::Affine | RepKind::FiniteType, None) => {
                return Err(RepError::InvalidParameter("T(z) missing".into()))
            }
            _ => {}
        }
        Ok(Rep {
            sd,
            space,
            kind,
            s: unify_dens(s),
            t: t.map(unify_dens),
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn rank(&self) -> usize {
        self.sd.rank()
    }

    /// `s_ij(z)`, zero based.
    pub fn s(&self, i: usize, j: usize) -> &SeriesOp {
        &self.s[i * self.rank() + j]
    }

    /// `t_ij(z)`, zero based; `None` for q-Yangian modules.
    pub fn t(&self, i: usize, j: usize) -> Option<&SeriesOp> {
        self.t.as_ref().map(|t| &t[i * self.rank() + j])
    }

    pub fn s_all(&self) -> &[SeriesOp] {
        &self.s
    }

    pub fn t_all(&self) -> Option<&[SeriesOp]> {
        self.t.as_deref()
    }

    /// Common denominator of `S(z)`.
    pub fn s_den(&self) -> PolyZ {
        self.s
            .iter()
            .find(|o| !o.is_zero())
            .map(|o| o.den().clone())
            .unwrap_or_else(PolyZ::one)
    }

    /// Operators spanning the image of the algebra's generators.
    pub fn generator_ops(&self) -> Vec<OpMat> {
        let mut out = Vec::new();
        for o in self.s.iter().chain(self.t.iter().flatten()) {
            out.extend(o.coefficient_span());
        }
        out
    }

    /// Cheaper generating set: coefficients that span the same algebra.
    pub fn generator_ops_raw(&self) -> Vec<OpMat> {
        let mut out = Vec::new();
        for o in self.s.iter().chain(self.t.iter().flatten()) {
            out.extend(o.span_generators());
        }
        out
    }

    pub fn parity(&self) -> &[u8] {
        &self.space.parity
    }

    /// Changes the algebra label and basis data without touching the action.
    pub(crate) fn from_parts_unchecked(
        sd: Superdim,
        space: GradedSpace,
        kind: RepKind,
        s: Vec<SeriesOp>,
        t: Option<Vec<SeriesOp>>,
    ) -> Self {
        Rep {
            sd,
            space,
            kind,
            s,
            t,
        }
    }

    /// Constant term of the diagonal generator `s_ii(z)`.
    pub fn s_diag0(&self, i: usize) -> OpMat {
        self.s(i, i).coefficient(0)
    }
}

/// `q_i = q^{d_i}`.
pub(crate) fn q_i(sd: Superdim, i: usize) -> QRat {
    QRat::q_pow(sd.d(i))
}

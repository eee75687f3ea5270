//! Modules over the q-Yangian of `gl(1|1)`.

use super::{Rep, RepError, RepKind};
use crate::field::{FactoredRatZ, PolyZ, QRat};
use crate::superlinalg::{GradedSpace, Mat, OpMat, SeriesOp, Superdim, Var, Weight};

const GL11: Superdim = Superdim { m: 1, n: 1 };

fn mat2(entries: &[(usize, usize, QRat)]) -> OpMat {
    Mat::from_triplets(2, 2, entries.iter().cloned())
}

/// `V((1 - za)/(1 - zb))`, the two dimensional prime module; `a != b`,
/// either parameter may vanish.
pub fn gl11_prime(a: &QRat, b: &QRat) -> Result<Rep, RepError> {
    if a == b {
        return Err(RepError::InvalidParameter(
            "prime module needs a != b".into(),
        ));
    }
    let q = QRat::q();
    let qi = q.inv()?;
    let den = PolyZ::linear(b);
    let z = || QRat::zero();
    let ser = |num: Vec<OpMat>| SeriesOp::rational(Var::Z, 2, num, den.clone());
    let s11 = ser(vec![
        mat2(&[(0, 0, QRat::one()), (1, 1, qi.clone())]),
        mat2(&[(0, 0, a.neg()), (1, 1, a.mul(&q).neg())]),
    ])?;
    let s12 = ser(vec![mat2(&[(0, 1, qi.sub(&q).mul(&b.sub(a)))])])?;
    let s21 = ser(vec![mat2(&[(1, 0, z())]), mat2(&[(1, 0, QRat::from_int(-1))])])?;
    let s22 = ser(vec![
        mat2(&[(0, 0, QRat::one()), (1, 1, qi)]),
        mat2(&[(0, 0, b.neg()), (1, 1, b.mul(&q).neg())]),
    ])?;
    let space = GradedSpace::new(
        vec![0, 1],
        vec![Weight(vec![0, 0]), Weight(vec![-1, 1])],
        vec!["v1".into(), "v2".into()],
    );
    Rep::new(GL11, space, RepKind::QYangian, vec![s11, s12, s21, s22], None)
}

/// The one dimensional modules `C_s`, `C_(a,b)` and `C_f`.
#[derive(Clone, Debug, PartialEq)]
pub enum OneDim {
    /// the trivial action on an even (`false`) or odd (`true`) line
    Parity(bool),
    /// `s_11(z) = a`, `s_22(z) = b`
    Torus(QRat, QRat),
    /// `s_11(z) = s_22(z) = f(z)` with `f(0) = 1`
    Series(FactoredRatZ),
}

fn onedim(parity: u8, weight: Weight, s11: SeriesOp, s22: SeriesOp) -> Result<Rep, RepError> {
    let space = GradedSpace::new(vec![parity], vec![weight], vec!["u".into()]);
    let zero = SeriesOp::zero(Var::Z, 1);
    Rep::new(
        GL11,
        space,
        RepKind::QYangian,
        vec![s11, zero.clone(), zero, s22],
        None,
    )
}

pub fn gl11_onedim(kind: &OneDim) -> Result<Rep, RepError> {
    let c = |v: &QRat| SeriesOp::constant(Mat::diagonal(&[v.clone()]));
    match kind {
        OneDim::Parity(odd) => {
            let one = c(&QRat::one());
            onedim(u8::from(*odd), Weight(vec![0, 0]), one.clone(), one)
        }
        OneDim::Torus(a, b) => {
            if a.is_zero() || b.is_zero() {
                return Err(RepError::InvalidParameter(
                    "torus parameters must be nonzero".into(),
                ));
            }
            // q-powers carry a weight; other values are placed at weight zero
            let w = match (a.as_q_power(), b.as_q_power()) {
                (Some(x), Some(y)) => Weight(vec![x, -y]),
                _ => Weight(vec![0, 0]),
            };
            onedim(0, w, c(a), c(b))
        }
        OneDim::Series(f) => {
            if !f.scale().is_one() {
                return Err(RepError::InvalidParameter("series must satisfy f(0) = 1".into()));
            }
            let one = SeriesOp::constant(Mat::identity(1));
            let fs = one.mul_scalar_fn(&f.to_ratz())?;
            onedim(0, Weight(vec![0, 0]), fs.clone(), fs)
        }
    }
}

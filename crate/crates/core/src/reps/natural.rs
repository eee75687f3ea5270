//! The vector representation and evaluation modules.

use super::{q_i, Rep, RepError, RepKind};
use crate::field::QRat;
use crate::superlinalg::{GradedSpace, Mat, OpMat, SeriesOp, Superdim, Var, Weight};

/// The vector representation of the finite type algebra on `V`.
pub fn natural_finite(sd: Superdim) -> Rep {
    let n = sd.rank();
    let space = GradedSpace::new(
        (0..n).map(|i| sd.parity(i)).collect(),
        (0..n).map(|i| Weight::eps(n, i)).collect(),
        (1..=n).map(|i| format!("v{i}")).collect(),
    );
    let mut s = vec![SeriesOp::zero(Var::Z, n); n * n];
    let mut t = vec![SeriesOp::zero(Var::ZInv, n); n * n];
    for i in 0..n {
        let qi = q_i(sd, i);
        let mut d: Vec<QRat> = vec![QRat::one(); n];
        d[i] = qi.clone();
        s[i * n + i] = SeriesOp::constant(Mat::diagonal(&d));
        d[i] = qi.inv().unwrap();
        t[i * n + i] = SeriesOp::constant(Mat::diagonal(&d)).with_var(Var::ZInv);
        let diff = qi.sub(&qi.inv().unwrap());
        for j in i + 1..n {
            s[i * n + j] = SeriesOp::constant(Mat::unit(n, i, j).scale(&diff));
            t[j * n + i] =
                SeriesOp::constant(Mat::unit(n, j, i).scale(&diff.neg())).with_var(Var::ZInv);
        }
    }
    Rep::new(sd, space, RepKind::FiniteType, s, Some(t)).expect("well formed")
}

/// Pull back of a finite type module along the evaluation map at `a`:
/// `s_ij(z) -> s_ij - z a t_ij`, `t_ij(z) -> t_ij - z^{-1} a^{-1} s_ij`.
pub fn evaluation(fin: &Rep, a: &QRat) -> Result<Rep, RepError> {
    if fin.kind != RepKind::FiniteType {
        return Err(RepError::Unsupported(
            "evaluation needs a finite type module".into(),
        ));
    }
    let ainv = a
        .inv()
        .map_err(|_| RepError::InvalidParameter("evaluation parameter must be nonzero".into()))?;
    let n = fin.rank();
    let d = fin.dim();
    let tt = fin.t_all().unwrap();
    let c0 = |o: &SeriesOp| -> OpMat {
        if o.is_zero() {
            Mat::zeros(d, d)
        } else {
            o.coefficient(0)
        }
    };
    let mut s = Vec::with_capacity(n * n);
    let mut t = Vec::with_capacity(n * n);
    for k in 0..n * n {
        let (sk, tk) = (c0(&fin.s_all()[k]), c0(&tt[k]));
        s.push(SeriesOp::polynomial(
            Var::Z,
            d,
            vec![sk.clone(), tk.scale(&a.neg())],
        ));
        t.push(SeriesOp::polynomial(
            Var::ZInv,
            d,
            vec![tk, sk.scale(&ainv.neg())],
        ));
    }
    Rep::new(fin.sd, fin.space.clone(), RepKind::Affine, s, Some(t))
}

/// The natural module `V(a)`.
pub fn eval_natural(sd: Superdim, a: &QRat) -> Result<Rep, RepError> {
    evaluation(&natural_finite(sd), a)
}

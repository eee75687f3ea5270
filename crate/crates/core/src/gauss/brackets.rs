//! Quantum brackets of weight homogeneous operators and the bracket
//! identities for low degree Drinfeld generators.

use super::decompose::DrinfeldData;
use super::trunc::TruncSeries;
use super::GaussError;
use crate::field::QRat;
use crate::reps::Rep;
use crate::superlinalg::{inverse, GradedSpace, OpMat, Superdim, Weight};

/// An operator together with its weight degree.
#[derive(Clone, Debug, PartialEq)]
pub struct QGraded {
    pub op: OpMat,
    pub degree: Weight,
}

impl QGraded {
    /// Checks that `op` shifts weights by exactly `degree`.
    pub fn new(op: OpMat, degree: Weight, space: &GradedSpace) -> Result<Self, GaussError> {
        for (i, j, _) in op.entries() {
            if space.weight[i].sub(&space.weight[j]) != degree {
                return Err(GaussError::Inhomogeneous(degree.to_string()));
            }
        }
        Ok(QGraded { op, degree })
    }
}

/// `⌊x, y⌋ = x y - (-1)^{|α||β|} q^{(α,β)} y x`.
pub fn quantum_bracket(x: &QGraded, y: &QGraded, sd: Superdim) -> QGraded {
    let (a, b) = (&x.degree, &y.degree);
    let mut c = QRat::q_pow(a.form(b, sd));
    if a.parity(sd) & b.parity(sd) == 1 {
        c = c.neg();
    }
    QGraded {
        op: x.op.mul(&y.op).sub(&y.op.mul(&x.op).scale(&c)),
        degree: a.add(b),
    }
}

/// `⌊⌊x_1, x_2⌋, …, x_r⌋`.
pub fn fold_left(xs: &[QGraded], sd: Superdim) -> QGraded {
    let mut it = xs.iter();
    let first = it.next().expect("nonempty bracket").clone();
    it.fold(first, |acc, x| quantum_bracket(&acc, x, sd))
}

/// `⌊x_1, ⌊x_2, …, x_r⌋⌋`.
pub fn fold_right(xs: &[QGraded], sd: Superdim) -> QGraded {
    let mut it = xs.iter().rev();
    let last = it.next().expect("nonempty bracket").clone();
    it.fold(last, |acc, x| quantum_bracket(x, &acc, sd))
}

/// The scalar `c` with `a = c b`, if both are nonzero and proportional.
pub fn proportionality(a: &OpMat, b: &OpMat) -> Option<QRat> {
    if a.is_zero() || b.is_zero() || a.nnz() != b.nnz() {
        return None;
    }
    let mut ratio: Option<QRat> = None;
    for (i, j, x) in a.entries() {
        let y = b.get(i, j);
        if y.is_zero() {
            return None;
        }
        let r = x.checked_div(&y).ok()?;
        match &ratio {
            Some(c) if *c != r => return None,
            None => ratio = Some(r),
            _ => {}
        }
    }
    ratio
}

/// Both sides of an identity that is claimed up to a nonzero scalar.
#[derive(Clone, Debug)]
pub struct BracketIdentity {
    pub name: String,
    pub lhs: OpMat,
    pub rhs: OpMat,
    /// `lhs = scalar * rhs`
    pub scalar: Option<QRat>,
}

impl BracketIdentity {
    fn new(name: String, lhs: OpMat, rhs: OpMat) -> Self {
        let scalar = proportionality(&lhs, &rhs);
        BracketIdentity {
            name,
            lhs,
            rhs,
            scalar,
        }
    }

    pub fn holds(&self) -> bool {
        self.scalar.is_some()
    }
}

fn alpha(sd: Superdim, i: usize) -> Weight {
    Weight::root(sd.rank(), i, i + 1)
}

fn need_rank(sd: Superdim, k: usize) -> Result<(), GaussError> {
    if sd.rank() < k {
        return Err(GaussError::TooSmall(format!("gl({},{})", sd.m, sd.n)));
    }
    Ok(())
}

/// `⌊X_{1,1}^-, X_{2,0}^-, …, X_{n-1,0}^-⌋_L` against
/// `s_{n1}^{(1)} (s_{11}^{(0)})^{-1}`.
pub fn zero_node_identity(rep: &Rep, data: &DrinfeldData) -> Result<BracketIdentity, GaussError> {
    let sd = rep.sd;
    need_rank(sd, 2)?;
    let n = sd.rank();
    let mut xs = Vec::new();
    for i in 0..n - 1 {
        let mode = i32::from(i == 0);
        let op = data.x_minus[i].get(mode).expect("within truncation").clone();
        xs.push(QGraded::new(op, alpha(sd, i).neg(), &rep.space)?);
    }
    let lhs = fold_left(&xs, sd).op;
    let s11inv = inverse(&rep.s(0, 0).coefficient(0)).ok_or(GaussError::Singular(0))?;
    let rhs = rep.s(n - 1, 0).coefficient(1).mul(&s11inv);
    Ok(BracketIdentity::new("zero node".into(), lhs, rhs))
}

/// `H_{i,s}` for `s = 1..=order` from
/// `K_i^+(z) = K_{i,0} exp((q_i - q_i^{-1}) sum_s H_{i,s} z^s)`.
pub fn cartan_h(data: &DrinfeldData, i: usize) -> Result<TruncSeries, GaussError> {
    let k = data.plus.k(i);
    let k0inv = inverse(k.coeff(0)).ok_or(GaussError::Singular(i))?;
    let qi = QRat::q_pow(data.sd.d(i));
    let c = qi.sub(&qi.inv().unwrap()).inv().expect("q is not a root of unity");
    Ok(k.map(|m| k0inv.mul(m)).log()?.scale(&c))
}

/// `h_{i,1} = d_i H_{i,1} - d_{i+1} H_{i+1,1}` against
/// `⌊E_i, E_{i-1}, …, E_1, E_{i+1}, …, E_{n-1}, E_0⌋_R` where `E_j = X_{j,0}^+`
/// and `E_0 = s_{n1}^{(1)} (s_{nn}^{(0)})^{-1}`; one identity per `i`.
pub fn h_bracket_identity(rep: &Rep, data: &DrinfeldData) -> Result<Vec<BracketIdentity>, GaussError> {
    let sd = rep.sd;
    need_rank(sd, 2)?;
    let n = sd.rank();
    let e = |j: usize| -> Result<QGraded, GaussError> {
        let op = data.x_plus[j].get(0).expect("within truncation").clone();
        QGraded::new(op, alpha(sd, j), &rep.space)
    };
    let snninv = inverse(&rep.s(n - 1, n - 1).coefficient(0)).ok_or(GaussError::Singular(n - 1))?;
    let e0 = QGraded::new(
        rep.s(n - 1, 0).coefficient(1).mul(&snninv),
        Weight::root(n, n - 1, 0),
        &rep.space,
    )?;
    let mut out = Vec::new();
    for i in 0..n - 1 {
        let mut seq = Vec::new();
        for j in (0..=i).rev() {
            seq.push(e(j)?);
        }
        for j in i + 1..n - 1 {
            seq.push(e(j)?);
        }
        seq.push(e0.clone());
        let rhs = fold_right(&seq, sd).op;
        let hi = cartan_h(data, i)?;
        let hn = cartan_h(data, i + 1)?;
        let d = |k: usize| QRat::from_int(sd.d(k) as i64);
        let lhs = hi.coeff(1).scale(&d(i)).sub(&hn.coeff(1).scale(&d(i + 1)));
        out.push(BracketIdentity::new(format!("h{},1 bracket", i + 1), lhs, rhs));
    }
    Ok(out)
}

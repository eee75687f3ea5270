use super::*;
use crate::field::QRat;
use crate::reps::{eval_natural, gl11_prime, kr_module, Rep};
use crate::superlinalg::{inverse, Mat, OpMat, Superdim, Weight};

fn sd(m: usize, n: usize) -> Superdim {
    Superdim::new(m, n)
}

fn suite() -> Vec<(String, Rep)> {
    let mut out = Vec::new();
    for (m, n) in [(1, 1), (2, 1)] {
        for a in [QRat::one(), QRat::q_pow(2)] {
            out.push((format!("V({a}) over {}", sd(m, n)), eval_natural(sd(m, n), &a).unwrap()));
        }
    }
    out.push(("W2 over gl(2|1)".into(), kr_module(sd(2, 1), 2, &QRat::q()).unwrap()));
    out
}

#[test]
fn truncated_series_inverse_log_exp() {
    let a: OpMat = Mat::from_dense(&[vec![QRat::q(), QRat::one()], vec![QRat::zero(), QRat::from_int(2)]]);
    let b: OpMat = Mat::unit(2, 1, 0);
    let s = TruncSeries::from_coeffs(2, vec![a, b.clone(), b.scale(&QRat::q())]);
    let one = TruncSeries::one(2, 2);
    assert_eq!(s.mul(&s.inv().unwrap()), one);
    assert_eq!(s.inv().unwrap().mul(&s), one);
    let d = Mat::diagonal(&[QRat::q(), QRat::from_int(3)]);
    let u = TruncSeries::from_coeffs(2, vec![Mat::zeros(2, 2), d.clone(), d.scale(&QRat::q())]);
    assert_eq!(u.exp().unwrap().log().unwrap(), u);
    assert_eq!(s.log(), Err(GaussError::NotUnipotent));
}

#[test]
fn first_pivot_is_s11() {
    for (name, rep) in suite() {
        let g = gauss_decompose(&rep, Side::S, 6).unwrap();
        assert_eq!(g.k(0), &TruncSeries::from_series(rep.s(0, 0), 6), "{name}");
        let h = gauss_decompose(&rep, Side::T, 6).unwrap();
        assert_eq!(h.k(0), &TruncSeries::from_series(rep.t(0, 0).unwrap(), 6), "{name}");
    }
}

#[test]
fn odd_pivot_uses_graded_schur_complement() {
    let rep = eval_natural(sd(1, 1), &QRat::q()).unwrap();
    let t = 6;
    let g = gauss_decompose(&rep, Side::S, t).unwrap();
    let s = |i, j| TruncSeries::from_series(rep.s(i, j), t);
    let correction = s(1, 0).mul(&s(0, 0).inv().unwrap()).mul(&s(0, 1));
    assert!(!correction.is_zero());
    assert_eq!(g.k(1), &s(1, 1).add(&correction));
    assert_ne!(g.k(1), &s(1, 1).sub(&correction));
}

#[test]
fn reconstruction_is_exact() {
    for (name, rep) in suite() {
        for side in [Side::S, Side::T] {
            let g = gauss_decompose(&rep, side, DEFAULT_ORDER).unwrap();
            assert_eq!(g.residual(&rep), 0, "{name} {side:?}");
        }
    }
    let y = gl11_prime(&QRat::q_pow(2), &QRat::one()).unwrap();
    assert_eq!(gauss_decompose(&y, Side::S, 5).unwrap().residual(&y), 0);
    assert_eq!(gauss_decompose(&y, Side::T, 5).unwrap_err(), GaussError::NoLowerSeries);
    assert_eq!(drinfeld_currents(&y, 5).unwrap_err(), GaussError::NoLowerSeries);
}

#[test]
fn lowest_mode_of_lowering_current() {
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        let rep = eval_natural(sd(m, n), &QRat::q_pow(3)).unwrap();
        let d = drinfeld_currents(&rep, 3).unwrap();
        for i in 0..sd(m, n).rank() - 1 {
            let t = |a, b| rep.t(a, b).unwrap().coefficient(0);
            let expect = t(i + 1, i).mul(&inverse(&t(i, i)).unwrap());
            assert_eq!(d.x_minus[i].get(0).unwrap(), &expect);
        }
        let s = |a, b| rep.s(a, b).coefficient(0);
        let x11 = rep.s(1, 0).coefficient(1).mul(&inverse(&s(0, 0)).unwrap()).neg();
        assert_eq!(d.x_minus[0].get(1).unwrap(), &x11);
    }
}

#[test]
fn currents_have_root_degrees() {
    for (name, rep) in suite() {
        let d = drinfeld_currents(&rep, 4).unwrap();
        let r = rep.rank();
        for i in 0..r - 1 {
            let a = Weight::root(r, i, i + 1);
            for k in -4..=4 {
                QGraded::new(d.x_plus[i].get(k).unwrap().clone(), a.clone(), &rep.space).unwrap();
                QGraded::new(d.x_minus[i].get(k).unwrap().clone(), a.neg(), &rep.space)
                    .unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        }
        for l in 0..r {
            for k in 0..=4 {
                QGraded::new(d.k_plus[l].get(k).unwrap().clone(), Weight::zero(r), &rep.space).unwrap();
            }
        }
    }
}

#[test]
fn cartan_and_exchange_relations_to_order_eight() {
    for (name, rep) in suite() {
        let d = drinfeld_currents(&rep, DEFAULT_ORDER).unwrap();
        for c in cartan_relations(&d).iter().chain(&xx_relations(&d)) {
            assert!(c.passed(), "{name}: {c}");
        }
    }
}

#[test]
fn corrupted_current_breaks_relations() {
    let rep = eval_natural(sd(2, 1), &QRat::q()).unwrap();
    let mut d = drinfeld_currents(&rep, 4).unwrap();
    let c = d.x_plus[0].get(1).unwrap().scale(&QRat::from_int(2));
    let mut coeffs: Vec<OpMat> = (-4..=4).map(|k| d.x_plus[0].get(k).unwrap().clone()).collect();
    coeffs[5] = c;
    d.x_plus[0] = Current::new(-4, coeffs, false, false);
    assert!(cartan_relations(&d).iter().any(|c| !c.passed()));
    assert!(xx_relations(&d).iter().any(|c| !c.passed()));
}

#[test]
fn quantum_bracket_of_orthogonal_even_degrees_is_commutator() {
    let s = sd(3, 0);
    let n = 3;
    let x: OpMat = Mat::unit(n, 0, 1);
    let y: OpMat = Mat::diagonal(&[QRat::one(), QRat::q(), QRat::from_int(2)]);
    let gx = QGraded { op: x.clone(), degree: Weight::root(n, 0, 1) };
    let gy = QGraded { op: y.clone(), degree: Weight::zero(n) };
    assert_eq!(quantum_bracket(&gx, &gy, s).op, x.mul(&y).sub(&y.mul(&x)));
}

#[test]
fn proportionality_detects_patterns() {
    let a: OpMat = Mat::from_dense(&[vec![QRat::q(), QRat::zero()], vec![QRat::one(), QRat::zero()]]);
    assert_eq!(proportionality(&a.scale(&QRat::from_int(3)), &a), Some(QRat::from_int(3)));
    let b: OpMat = Mat::from_dense(&[vec![QRat::q(), QRat::zero()], vec![QRat::from_int(2), QRat::zero()]]);
    assert_eq!(proportionality(&a, &b), None);
    let c: OpMat = Mat::from_dense(&[vec![QRat::q(), QRat::one()], vec![QRat::one(), QRat::zero()]]);
    assert_eq!(proportionality(&a, &c), None);
    assert_eq!(proportionality(&a, &Mat::zeros(2, 2)), None);
}

#[test]
fn bracket_identities_up_to_scalar() {
    for (m, n) in [(2, 1), (2, 2), (1, 2)] {
        let rep = eval_natural(sd(m, n), &QRat::q_pow(2)).unwrap();
        let d = drinfeld_currents(&rep, 3).unwrap();
        let z = zero_node_identity(&rep, &d).unwrap();
        assert!(z.holds(), "{}", sd(m, n));
        for h in h_bracket_identity(&rep, &d).unwrap() {
            assert!(h.holds(), "{} {}", sd(m, n), h.name);
        }
    }
}

#[test]
fn zero_node_for_gl11_is_the_lowering_mode() {
    let rep = eval_natural(sd(1, 1), &QRat::q()).unwrap();
    let d = drinfeld_currents(&rep, 2).unwrap();
    let z = zero_node_identity(&rep, &d).unwrap();
    assert_eq!(z.scalar, Some(QRat::from_int(-1)));
}

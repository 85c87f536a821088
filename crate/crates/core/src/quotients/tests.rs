use super::*;
use crate::groebner::{associated_graded_of_points, ideal_equal};
use crate::polyring::rat;

fn qp(c: &[i64]) -> QPolynomial {
    QPolynomial::new(c.to_vec())
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn x(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i)
}

fn s(v: &[usize], q: &[i64]) -> SchurSymmetricFunction {
    let mut f = SchurSymmetricFunction::zero(v.iter().sum());
    f.add_term(p(v), &qp(q)).unwrap();
    f
}

#[test]
fn ideal_j_examples() {
    let j22 = ideal_j(2, 2).unwrap();
    for g in [&x(2, 1) * &x(2, 2), x(2, 1).pow(2), x(2, 2).pow(2)] {
        assert!(j22.generators().contains(&g), "{g}");
    }
    assert_eq!(QuotientRing::packed(3, 3, None).unwrap().dim(), 6);
    assert_eq!(QuotientRing::packed(3, 1, None).unwrap().dim(), 13);
    assert!(ideal_j(2, 3).is_err());
    assert!(ideal_j(2, 0).is_err());
}

#[test]
fn truncated_generators_suffice() {
    // x_i^{n+1} e_{n-1}^{(i)} is a generator for an untruncated index set
    for n in 2..=4 {
        let ring = QuotientRing::packed(n, 1, None).unwrap();
        let others: Vec<usize> = (2..=n).collect();
        let g = &x(n, 1).pow(n as u32 + 1) * &elementary_symmetric(n, n as i64 - 1, &others).unwrap();
        assert!(ring.groebner_basis().contains(&g).unwrap());
    }
}

#[test]
fn ideal_i_examples() {
    let r21 = QuotientRing::coinvariant(2, 1, None).unwrap();
    assert_eq!(r21.dim(), 1);
    let r33 = QuotientRing::coinvariant(3, 3, None).unwrap();
    assert_eq!(r33.hilbert_series(), &QPolynomial::q_factorial(3));
    let r32 = QuotientRing::coinvariant(3, 2, None).unwrap();
    assert_eq!(r32.hilbert_series(), &qp(&[1, 3, 2]));
}

#[test]
fn locus_examples() {
    let l = locus(2, 1, &default_alpha(2)).unwrap();
    let pts: Vec<Vec<Rational>> = [[1, 1], [1, 2], [2, 1]].iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    assert_eq!(l.points(), pts.as_slice());
    assert_eq!(locus(1, 1, &[int(5)]).unwrap().points(), &[vec![int(5)]]);
    assert_eq!(locus(3, 3, &default_alpha(3)).unwrap().len(), 6);
    assert!(locus(2, 1, &[int(1), int(1)]).is_err());
    assert!(locus(3, 1, &[int(1), int(2)]).is_err());
}

#[test]
fn vanishing_poly_examples() {
    let alpha = default_alpha(2);
    let f = vanishing_poly_f(1, 1, 1, &alpha, 2).unwrap();
    let expected = &(&x(2, 1) - &Polynomial::one(2)) * &(&Polynomial::one(2) - &x(2, 2));
    assert_eq!(f, expected);
    assert_eq!(f.top_form(), -(&x(2, 1) * &x(2, 2)));
    for pt in locus(2, 1, &alpha).unwrap().points() {
        assert!(f.evaluate(pt).unwrap().is_zero());
    }

    let g = vanishing_poly_g(2, 2, &alpha, 2).unwrap();
    let e1 = &x(2, 1) + &x(2, 2);
    let e2 = &x(2, 1) * &x(2, 2);
    let expected = &(&Polynomial::constant(2, int(7)) - &e1.scale(&int(3))) + &e2;
    assert_eq!(g, expected);
    for pt in locus(2, 2, &alpha).unwrap().points() {
        assert!(g.evaluate(pt).unwrap().is_zero());
    }
    assert!(vanishing_poly_g(1, 1, &alpha, 2).is_err());

    let f = vanishing_poly_f(1, 3, 3, &default_alpha(3), 3).unwrap();
    assert_eq!(f.top_form(), x(3, 1).pow(3));
    assert!(vanishing_poly_f(1, 1, 2, &alpha, 2).is_err());
}

#[test]
fn vanishing_polys_with_rational_parameters() {
    let alpha = vec![rat(1, 2), rat(-3, 1), rat(7, 5)];
    for k in 1..=3 {
        assert!(check_vanishing_polys(3, k, &alpha).unwrap().1);
    }
}

#[test]
fn graded_character_examples() {
    let s2 = QuotientRing::packed(2, 1, None).unwrap();
    assert_eq!(graded_character(&s2, &p(&[1, 1])).unwrap(), qp(&[1, 2]));
    assert_eq!(graded_character(&s2, &p(&[2])).unwrap(), qp(&[1]));
    let r22 = QuotientRing::coinvariant(2, 2, None).unwrap();
    assert_eq!(graded_character(&r22, &p(&[2])).unwrap(), qp(&[1, -1]));
}

#[test]
fn graded_frobenius_examples() {
    assert_eq!(graded_frobenius(&QuotientRing::packed(1, 1, None).unwrap()).unwrap(), s(&[1], &[1]));
    let r22 = graded_frobenius(&QuotientRing::coinvariant(2, 2, None).unwrap()).unwrap();
    assert_eq!(r22, s(&[2], &[1]).try_add(&s(&[1, 1], &[0, 1])).unwrap());
    let s2 = graded_frobenius(&QuotientRing::packed(2, 1, None).unwrap()).unwrap();
    assert_eq!(s2, s(&[2], &[1, 1]).try_add(&s(&[1, 1], &[0, 1])).unwrap());
}

#[test]
fn characters_are_class_functions() {
    let ring = QuotientRing::packed(4, 2, None).unwrap();
    let a = Permutation::new(vec![2, 1, 3, 4]).unwrap();
    let b = Permutation::new(vec![1, 4, 3, 2]).unwrap();
    assert_eq!(ring.trace(&a).unwrap(), ring.trace(&b).unwrap());
    let c = Permutation::new(vec![2, 3, 1, 4]).unwrap();
    let d = Permutation::new(vec![1, 4, 2, 3]).unwrap();
    assert_eq!(ring.trace(&c).unwrap(), ring.trace(&d).unwrap());
}

#[test]
fn unstable_ideal_is_rejected() {
    let ideal = IdealPresentation::new(2, vec![x(2, 1), x(2, 2).pow(2)]).unwrap();
    let ring = QuotientRing::new(RingKind::Custom, 2, 1, ideal, None).unwrap();
    assert!(!ring.is_stable().unwrap());
    assert!(matches!(graded_character(&ring, &p(&[2])), Err(Error::NotStable)));
}

#[test]
fn ideals_nest_upwards_in_k() {
    // adding generators enlarges the ideal: J_{n,k} ⊆ J_{n,k+1}
    for n in 2..=4 {
        for k in 1..n {
            let bigger = QuotientRing::packed(n, k + 1, None).unwrap();
            for g in ideal_j(n, k).unwrap().generators() {
                assert!(bigger.groebner_basis().contains(g).unwrap());
            }
            let smaller = QuotientRing::packed(n, k, None).unwrap();
            assert!(smaller.dim() > bigger.dim());
        }
    }
}

#[test]
fn j_nn_is_the_invariant_ideal() {
    for n in 1..=4 {
        let all: Vec<usize> = (1..=n).collect();
        let e: Vec<Polynomial> = (1..=n).map(|d| elementary_symmetric(n, d as i64, &all).unwrap()).collect();
        let inv = IdealPresentation::new(n, e).unwrap();
        assert!(ideal_equal(&ideal_j(n, n).unwrap(), &inv, MonomialOrder::Lex).unwrap());
    }
}

#[test]
fn orbit_harmonics_independent_of_parameters() {
    for n in 1..=3 {
        for k in 1..=n {
            let a = locus(n, k, &default_alpha(n)).unwrap();
            let alt: Vec<Rational> = (0..n as i64).map(|i| rat(2 * i * i - 3, 2)).collect();
            let b = locus(n, k, &alt).unwrap();
            let ta = associated_graded_of_points(a.points()).unwrap();
            let tb = associated_graded_of_points(b.points()).unwrap();
            assert!(ideal_equal(&ta, &tb, MonomialOrder::Lex).unwrap());
        }
    }
}

#[test]
fn calibration_is_standard_shape_and_own_degree() {
    let cal = calibration().unwrap();
    use crate::symfunc::{Convention, DescentWeight, ShapeRule};
    assert_eq!(cal.convention, Convention::new(ShapeRule::Shape, DescentWeight::Minus));
    assert_eq!(cal.reflection, Reflection::OwnDegree);
}

#[test]
fn verifier_examples() {
    let v = Verifier::new(None, None);
    for (n, k) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        for suite in Suite::ALL {
            let r = v.run(suite, n, k).unwrap();
            assert!(r.pass, "{suite} {n} {k}: {}", r.details);
        }
    }
    let r = v.run(Suite::HilbertDecomposition, 3, 1).unwrap();
    assert_eq!(r.details["hilbert"], "1 + 3q + 6q^2 + 3q^3");
    assert!(v.run(Suite::Dimension, 2, 3).is_err());
}

#[test]
fn standard_monomials_are_reversed_boosted_codes() {
    use crate::codes::{boosted_code, enumerate_osps};
    use std::collections::BTreeSet;
    let ring = QuotientRing::packed(2, 2, None).unwrap();
    let mons: Vec<Vec<u32>> = ring.standard_monomials().iter().map(|e| e.as_slice().to_vec()).collect();
    assert_eq!(mons, vec![vec![0, 0], vec![0, 1]]);
    for (n, k) in [(3, 1), (3, 2), (4, 2)] {
        let ring = QuotientRing::packed(n, k, None).unwrap();
        let mons: BTreeSet<Vec<usize>> =
            ring.standard_monomials().iter().map(|e| e.as_slice().iter().map(|&a| a as usize).collect()).collect();
        let codes: BTreeSet<Vec<usize>> = enumerate_osps(n, k)
            .unwrap()
            .iter()
            .map(|s| boosted_code(s).entries.into_iter().rev().collect())
            .collect();
        assert_eq!(mons, codes);
    }
    assert_eq!(QuotientRing::packed(3, 2, None).unwrap().standard_monomials().len(), 12);
}

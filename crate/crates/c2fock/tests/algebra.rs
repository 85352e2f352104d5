//! Laurent polynomials, quantum integers and weight bookkeeping.

use c2fock::algebra::{
    bar_symmetrize, is_delta_shift, pairing, quantum_binomial, quantum_factorial, quantum_int, weight_sub_alpha,
};
use c2fock::{Error, Index, LaurentPoly, Weight};

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn addition_cancels_and_merges() {
    assert_eq!(p("q+1") + p("-1"), LaurentPoly::q());
    assert_eq!(LaurentPoly::zero() + p("3*q^-2"), p("3*q^-2"));
    assert_eq!(p("1+q^6") + p("q^6"), p("1+2*q^6"));
    assert!((p("q-q^2") - p("q-q^2")).is_zero());
}

#[test]
fn multiplication() {
    assert!((LaurentPoly::q() * p("q^-1")).is_one());
    assert_eq!(p("q+q^-1") * p("q-q^-1"), p("q^2-q^-2"));
    // The swallow factor with one equal column: q⁻¹(1 − (−q²)²).
    assert_eq!(p("q^-1") * (LaurentPoly::one() - p("-q^2").pow(2)), p("q^-1-q^3"));
}

#[test]
fn bar_involution() {
    assert_eq!(p("q^2").bar(), p("q^-2"));
    assert_eq!(p("1+q+q^3").bar(), p("1+q^-1+q^-3"));
    assert_eq!(p("q+q^-1").bar(), p("q+q^-1"));
    assert!(p("q+q^-1").is_bar_invariant());
}

#[test]
fn quantum_integers() {
    assert_eq!(quantum_int(2, Index::ONE).unwrap(), p("q+q^-1"));
    assert_eq!(quantum_int(2, Index::ZERO).unwrap(), p("q^2+q^-2"));
    assert_eq!(quantum_int(2, Index::TWO).unwrap(), p("q^2+q^-2"));
    for i in Index::ALL {
        assert!(quantum_int(0, i).unwrap().is_zero());
        assert!(quantum_factorial(1, i).unwrap().is_one());
    }
    assert_eq!(quantum_int(-1, Index::ONE), Err(Error::NegativeArgument(-1)));
}

#[test]
fn quantum_factorials_and_binomials() {
    assert_eq!(quantum_factorial(2, Index::ONE).unwrap(), p("q+q^-1"));
    assert_eq!(quantum_factorial(3, Index::ONE).unwrap(), p("q+q^-1") * p("q^2+1+q^-2"));
    assert_eq!(quantum_binomial(3, 1, Index::ONE).unwrap(), p("q^2+1+q^-2"));
    assert_eq!(quantum_binomial(3, 1, Index::ZERO).unwrap(), p("q^4+1+q^-4"));
    assert!(quantum_binomial(4, 0, Index::ONE).unwrap().is_one());
}

#[test]
fn exact_division() {
    assert_eq!(p("q^2-q^-2").exact_div(&p("q+q^-1")).unwrap(), p("q-q^-1"));
    assert_eq!(p("3+q^5").exact_div(&LaurentPoly::one()).unwrap(), p("3+q^5"));
    assert_eq!(p("q^3+q").exact_div(&p("q^2")).unwrap(), p("q+q^-1"));
    assert_eq!(p("1+q").exact_div(&p("q+q^-1")), Err(Error::NonDivisible));
    assert_eq!(p("1").exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
}

#[test]
fn bar_symmetrization_keeps_non_positive_part() {
    assert_eq!(bar_symmetrize(&p("q^-1")), p("q+q^-1"));
    assert_eq!(bar_symmetrize(&p("3")), p("3"));
    assert_eq!(bar_symmetrize(&p("2*q^-2+q")), p("2*q^2+2*q^-2"));
    assert!(bar_symmetrize(&p("q+q^5")).is_zero());
}

#[test]
fn display_round_trip() {
    for s in ["0", "1", "-q^-2+3+q^4", "2*q^3", "q", "-q"] {
        assert_eq!(p(s).to_string(), s);
    }
    assert!("q^".parse::<LaurentPoly>().is_err());
}

#[test]
fn weights_and_pairings() {
    let l1 = Weight::dominant(Index::ONE);
    assert_eq!(pairing(Index::ONE, &l1), 1);
    assert_eq!(pairing(Index::ZERO, &l1), 0);
    let w = weight_sub_alpha(&l1, Index::ONE, 1);
    assert_eq!(pairing(Index::ZERO, &w), 1);
    assert_eq!(pairing(Index::ONE, &w), -1);
    assert_eq!(weight_sub_alpha(&l1, Index::ONE, 2), Weight { lambda: Index::ONE, k: [0, 2, 0] });
}

#[test]
fn delta_shifts() {
    let w = |k: [u32; 3]| Weight { lambda: Index::ONE, k };
    assert_eq!(is_delta_shift(&w([1, 2, 1]), &w([0, 0, 0])), Some(1));
    assert_eq!(is_delta_shift(&w([2, 4, 2]), &w([0, 0, 0])), Some(2));
    assert_eq!(is_delta_shift(&w([1, 1, 1]), &w([0, 0, 0])), None);
}

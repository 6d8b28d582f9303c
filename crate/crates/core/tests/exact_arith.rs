mod common;

use common::{poly, small_rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use vecr_core::arith::{binomial, parse_rat, q_of, q_poly, rat, ratio, y_of, y_poly, Poly, Rat, Var};

fn lam() -> Poly {
    Poly::var(Var::Lambda)
}

fn c(r: Rat) -> Poly {
    Poly::constant(r)
}

#[test]
fn polynomial_examples() {
    let sq = lam() * lam();
    assert!((sq.clone() + (-sq)).is_zero());
    let got = (lam() - c(ratio(1, 2))) * (lam() * lam() - lam());
    let want = Poly::univariate(Var::Lambda, &[rat(0), ratio(1, 2), ratio(-3, 2), rat(1)]);
    assert_eq!(got, want);
    let p = lam() * lam() + Poly::var(Var::BigLambda);
    assert_eq!(p.clone() * Poly::one(), p);
}

#[test]
fn evaluation_examples() {
    let q = q_poly(Var::Lambda);
    assert_eq!(q.eval(&[(Var::Lambda, rat(2))]).as_constant(), Some(rat(2)));
    assert_eq!(q.eval(&[(Var::Lambda, rat(0))]).as_constant(), Some(rat(0)));
    let y = y_poly(Var::BigLambda);
    // (3 - 1/2)(9 - 3) = 15
    assert_eq!(y.eval(&[(Var::BigLambda, rat(3))]).as_constant(), Some(rat(15)));
    assert_eq!(y_of(&rat(3)), rat(15));
    assert_eq!(q_of(&rat(-1)), rat(2));
}

#[test]
fn partial_evaluation_keeps_the_other_variable() {
    let p = lam() * Poly::var(Var::BigLambda);
    let got = p.eval(&[(Var::Lambda, rat(3))]);
    assert_eq!(got, Poly::monomial(Var::BigLambda, 1, rat(3)));
    assert!(!got.involves(Var::Lambda));
}

#[test]
fn parsing() {
    assert_eq!(parse_rat("-3/6").unwrap(), ratio(-1, 2));
    assert_eq!(parse_rat("+4").unwrap(), rat(4));
    for bad in ["", "1/0", "1/-2", "x", "1/2/3", "++1"] {
        assert!(parse_rat(bad).is_err(), "{bad}");
    }
}

#[test]
fn binomial_matches_pascal_triangle() {
    let mut row = vec![1i64];
    for n in 0..20i64 {
        for (r, v) in row.iter().enumerate() {
            assert_eq!(binomial(n, r as i64), *v);
        }
        assert_eq!(binomial(n, -1), 0);
        assert_eq!(binomial(n, n + 1), 0);
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
}

fn normalized(r: &Rat) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

proptest! {
    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), v in small_rat(), w in small_rat()) {
        let at = [(Var::Lambda, v), (Var::BigLambda, w)];
        prop_assert_eq!((p.clone() + q.clone()).eval(&at), p.eval(&at) + q.eval(&at));
        prop_assert_eq!((p.clone() * q.clone()).eval(&at), p.eval(&at) * q.eval(&at));
    }

    #[test]
    fn rationals_stay_in_lowest_terms(a in small_rat(), b in small_rat()) {
        prop_assert!(normalized(&(&a + &b)));
        prop_assert!(normalized(&(&a * &b)));
        prop_assert!(normalized(&(&a - &b)));
        if !b.is_zero() {
            prop_assert!(normalized(&(&a / &b)));
        }
        prop_assert_eq!(parse_rat(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn polynomial_coefficients_stay_normalized(p in poly(), q in poly()) {
        for (_, r) in (p * q).terms() {
            prop_assert!(normalized(r));
            prop_assert!(!r.is_zero());
        }
    }
}

#![allow(dead_code)]

use proptest::prelude::*;
use vecr_core::arith::{rat, ratio, Poly, Rat, Var};
use vecr_core::uea::sym::SymElt;
use vecr_core::{Mono, Uea};

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

pub fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u32..=3, 0u32..=2, small_rat()), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Poly::default(), |acc, (a, b, c)| {
            acc + Poly::monomial(Var::Lambda, a, c) * Poly::monomial(Var::BigLambda, b, rat(1))
        })
    })
}

/// Index words of the given length range with indices in `-1..=top`.
pub fn word(len: std::ops::RangeInclusive<usize>, top: i32) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-1..=top, len)
}

/// Sums of normal-ordered words of length ≤ `deg`.
pub fn elt(deg: usize, top: i32) -> impl Strategy<Value = Uea<Rat>> {
    prop::collection::vec((word(0..=deg, top), -3i64..=3), 1..4).prop_map(|terms| {
        terms.into_iter().fold(Uea::zero(), |acc, (w, c)| {
            let w64: Vec<i64> = w.iter().map(|&n| n as i64).collect();
            acc.add(&Uea::word(&w64).expect("indices ≥ -1").scale(&rat(c)))
        })
    })
}

/// Weight-homogeneous element: products of exactly `deg` generators whose
/// indices sum to `mu`.
pub fn homogeneous(deg: usize, mu: i64) -> impl Strategy<Value = Uea<Rat>> {
    let monos = vecr_core::uea::monomials_of(deg, mu, |_| true);
    let n = monos.len();
    prop::collection::vec((0..n, -3i64..=3), 1..4).prop_map(move |picks| {
        picks.into_iter().fold(Uea::zero(), |acc, (i, c)| {
            acc.add(&Uea::term(monos[i].clone(), rat(c)))
        })
    })
}

pub fn sym_elt(k: usize, top: i32) -> impl Strategy<Value = SymElt<Rat>> {
    prop::collection::vec((prop::collection::vec(-1..=top, k), -4i64..=4), 1..4).prop_map(|terms| {
        let mut s = SymElt::zero();
        for (idx, c) in terms {
            s.add_term(Mono::sorted(&idx), rat(c));
        }
        s
    })
}

/// Action of the word `e_{w_0} ⋯ e_{w_r}` on `x^m dx^λ`, applied right to
/// left with `e_n x^m = (m + λ(n+1)) x^{m+n}`.
pub fn act_word(word: &[i32], lam: &Rat, m: &Rat) -> (Rat, Rat) {
    let mut c = rat(1);
    let mut exp = m.clone();
    for &n in word.iter().rev() {
        c *= &exp + lam * rat(n as i64 + 1);
        exp += rat(n as i64);
    }
    (exp, c)
}

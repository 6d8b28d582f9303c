mod common;

use common::{elt, homogeneous, sym_elt, word};
use proptest::prelude::*;
use vecr_core::arith::{rat, ratio, Rat};
use vecr_core::uea::named::{g_sw, omega, q, qe2, s, s_minus, y, z};
use vecr_core::uea::nf_word_with;
use vecr_core::uea::sym::{proj_top, sym_decompose, sym_k, SymElt};
use vecr_core::{Mono, Uea};

fn r(x: &vecr_core::UeaElt) -> Uea<Rat> {
    x.to_rat().expect("rational coefficients")
}

fn w(idx: &[i64]) -> Uea<Rat> {
    Uea::word(idx).unwrap()
}

fn em1_sq() -> Uea<Rat> {
    w(&[-1, -1])
}

#[test]
fn normal_form_examples() {
    assert_eq!(w(&[-1, 1]).to_string(), "e_1 e_-1 + 2*e_0");
    assert_eq!(w(&[-1, 2]).to_string(), "e_2 e_-1 + 3*e_1");
    assert_eq!(w(&[0, 1, -1]), w(&[1, 0, -1]).add(&w(&[1, -1])));
    assert_eq!(w(&[1]).mul(&w(&[-1])), w(&[1, -1]));
    let qq = r(&q()).mul(&r(&q()));
    assert_eq!(qq.coeff(&Mono::sorted(&[0, 0, 0, 0])), rat(1));
    assert_eq!(qq.degree(), 4);
    assert!(Uea::<Rat>::word(&[-2]).is_err());
}

#[test]
fn q_and_z_are_as_defined() {
    assert_eq!(r(&q()), w(&[0, 0]).sub(&w(&[0])).sub(&w(&[1, -1])));
    assert_eq!(r(&e(-1).ad(&z())), r(&q()));
    assert!(r(&e(1).ad(&q())).is_zero());
    assert!(r(&e(-1).ad(&qe2())).is_zero());
}

fn e(n: i32) -> vecr_core::UeaElt {
    Uea::gen(n)
}

#[test]
fn step_element_constants() {
    let once = r(&s()).ad(&em1_sq());
    let twice = r(&s()).ad_pow(2, &em1_sq());
    assert_eq!(once, r(&q()).scale(&rat(-24)));
    assert_eq!(twice, r(&qe2()).scale(&rat(-48)));
    // the other sign choice does not produce a lowest weight vector
    let bad = r(&s_minus()).ad(&em1_sq());
    assert!(!bad.ad_gen(-1).is_zero());
}

#[test]
fn adjoint_action_examples() {
    let half = ratio(1, 2);
    assert_eq!(r(&e(1).ad(&y())), r(&qe2()).mul(&Uea::gen(-1)).scale(&half));
    assert_eq!(r(&e(-1).ad_pow(4, &g_sw())), r(&qe2()).scale(&rat(24)));
}

#[test]
fn transpose_examples() {
    assert_eq!(r(&q()).transpose(), r(&q()));
    assert_eq!(r(&z()).transpose(), r(&z()));
    assert_eq!(r(&y()).transpose(), r(&y()).neg());
    assert_eq!(w(&[1, 0]).transpose(), w(&[1, 0]).add(&w(&[1])));
}

#[test]
fn symbol_examples() {
    let top = proj_top(&w(&[1, -1]).add(&w(&[0]).scale(&rat(2))), 2).unwrap();
    assert_eq!(top, SymElt::mono(&[1, -1]));
    let mut qs = SymElt::<Rat>::zero();
    qs.add_term(Mono::sorted(&[0, 0]), rat(1));
    qs.add_term(Mono::sorted(&[1, -1]), rat(-1));
    assert_eq!(proj_top(&r(&q()), 2).unwrap(), qs);
    assert!(proj_top(&w(&[0]), 2).unwrap().is_zero());
    assert!(proj_top(&r(&q()), 1).is_err());

    assert_eq!(sym_k(&SymElt::<Rat>::mono(&[1, -1]), 2).unwrap(), w(&[1, -1]).add(&w(&[0])));
    assert_eq!(sym_k(&SymElt::<Rat>::mono(&[3]), 1).unwrap(), w(&[3]));
    assert_eq!(sym_k(&SymElt::<Rat>::mono(&[0, 0]), 2).unwrap(), w(&[0, 0]));

    let parts = sym_decompose(&r(&q()));
    assert_eq!(parts[2], qs);
    assert!(parts[1].is_zero() && parts[0].is_zero());
    let parts = sym_decompose(&r(&y()));
    assert!(parts[..3].iter().all(SymElt::is_zero));
}

#[test]
fn weight_split_examples() {
    let split = r(&q()).weight_split();
    assert_eq!(split.len(), 1);
    assert_eq!(split[&0], r(&q()));
    let split = w(&[1]).add(&w(&[-1])).weight_split();
    assert_eq!(split[&1], w(&[1]));
    assert_eq!(split[&-1], w(&[-1]));
    assert_eq!(r(&qe2()).weight(), Some(2));
}

#[test]
fn omega_examples() {
    assert_eq!(r(&omega(2, 1, -1).unwrap()), r(&q()).scale(&rat(-2)));
    assert!(omega(3, 2, -1).unwrap().is_zero());
    assert!(omega(3, 1, -1).is_err());
}

/// Direct expansion of `sym(e_a e_b)` as the average of both orders.
#[test]
fn quadratic_sym_formula() {
    for a in -1..=4i64 {
        for b in -1..=4i64 {
            let avg = w(&[a, b]).add(&w(&[b, a])).scale(&ratio(1, 2));
            assert_eq!(sym_k(&SymElt::<Rat>::mono(&[a as i32, b as i32]), 2).unwrap(), avg);
            let corrected = if a == b { avg } else { avg.add(&w(&[a + b]).scale(&ratio(b - a, 2))) };
            assert_eq!(w(&[a, b]), corrected, "e_{a} e_{b}");
        }
    }
}

/// A degree and a weight-homogeneous element with top terms in that degree.
fn graded() -> impl Strategy<Value = (usize, Uea<Rat>)> {
    (1usize..=2, 0i64..=5).prop_flat_map(|(k, shift)| (Just(k), homogeneous(k, shift - k as i64)))
}

proptest! {
    #[test]
    fn pbw_confluence(wd in word(2..=5, 6), at in 0usize..4) {
        let i = at % (wd.len() - 1);
        let (a, b) = (wd[i], wd[i + 1]);
        let mut swapped = wd.clone();
        swapped.swap(i, i + 1);
        let mut merged: Vec<i32> = wd[..i].to_vec();
        merged.push(a + b);
        merged.extend_from_slice(&wd[i + 2..]);
        let lhs = nf_word_with::<Rat>(&wd);
        let rhs = nf_word_with::<Rat>(&swapped).add(&nf_word_with::<Rat>(&merged).scale(&rat((b - a) as i64)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity(a in elt(2, 4), b in elt(2, 4), c in elt(2, 4)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn symbols_multiply(((a, x), (b, y)) in (graded(), graded())) {
        let lhs = proj_top(&x, a).unwrap().mul(&proj_top(&y, b).unwrap());
        prop_assert_eq!(proj_top(&x.mul(&y), a + b).unwrap(), lhs);
    }

    #[test]
    fn symmetrizer_is_a_section_of_the_symbol(s2 in sym_elt(2, 5), s3 in sym_elt(3, 4)) {
        prop_assert_eq!(proj_top(&sym_k(&s2, 2).unwrap(), 2).unwrap(), s2);
        prop_assert_eq!(proj_top(&sym_k(&s3, 3).unwrap(), 3).unwrap(), s3);
    }

    #[test]
    fn transpose_is_an_equivariant_anti_involution(a in elt(3, 4), b in elt(2, 4), n in -1i32..=3) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        prop_assert_eq!(a.ad_gen(n).transpose(), a.transpose().ad_gen(n));
        for (mu, part) in a.weight_split() {
            prop_assert_eq!(part.transpose().weight_split().keys().copied().collect::<Vec<_>>(),
                if part.transpose().is_zero() { vec![] } else { vec![mu] });
        }
    }

    #[test]
    fn adjoint_generator_is_the_commutator(a in elt(3, 4), n in -1i32..=4) {
        let g = Uea::<Rat>::gen(n);
        prop_assert_eq!(a.ad_gen(n), g.mul(&a).sub(&a.mul(&g)));
        prop_assert_eq!(g.ad(&a), g.commutator(&a));
    }
}

mod common;

use proptest::prelude::*;
use vecr_core::arith::{rat, ratio, Rat};
use vecr_core::slices::{
    casimir_ad, count, hws, lws, p_count, q_count, submodule_closure, t_count, w_count, CountId, Filter, Slice,
    Subspace,
};
use vecr_core::uea::named::{q, qe2, z};
use vecr_core::{Mono, Uea};

fn r(x: &vecr_core::UeaElt) -> Uea<Rat> {
    x.to_rat().unwrap()
}

fn w(idx: &[i64]) -> Uea<Rat> {
    Uea::word(idx).unwrap()
}

/// Partitions of `n` with parts in `[lo, hi]`, by explicit enumeration.
fn partitions(n: u64, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    fn go(n: u64, lo: u64, hi: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in lo..=hi.min(n) {
            acc.push(part);
            go(n - part, part, hi, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` into `k` ordered non-negative parts.
fn compositions(k: u64, n: u64) -> u64 {
    if k == 0 {
        return u64::from(n == 0);
    }
    (0..=n).map(|first| compositions(k - 1, n - first)).sum()
}

#[test]
fn count_examples() {
    assert_eq!(t_count(3, 2), 3);
    assert_eq!(q_count(4, 6), 3);
    assert_eq!(partitions(6, 2, 4), vec![vec![2, 2, 2], vec![2, 4], vec![3, 3]]);
    for k in 1..=6 {
        assert_eq!(p_count(k, 0), 1);
    }
    assert_eq!(count(CountId::W, 3, 2), w_count(3, 2));
}

#[test]
fn counts_match_enumeration() {
    for k in 1..=6u64 {
        for n in 0..=12u64 {
            assert_eq!(p_count(k, n), partitions(n, 1, k).len() as u64, "p_{k}({n})");
            assert_eq!(q_count(k, n), partitions(n, 2, k).len() as u64, "q_{k}({n})");
            assert_eq!(w_count(k, n), compositions(k, n), "w_{k}({n})");
        }
    }
}

#[test]
fn slice_bases() {
    let s = Slice::full(2, -2);
    assert_eq!(s.basis(), [Mono::sorted(&[-1, -1])]);
    let s = Slice::full(2, 0);
    let want = [Mono::one(), Mono::sorted(&[0]), Mono::sorted(&[0, 0]), Mono::sorted(&[1, -1])];
    assert_eq!(s.dim(), 4);
    for m in &want {
        assert!(s.basis().contains(m), "{m}");
    }
    assert_eq!(Slice::full(1, 3).basis(), [Mono::sorted(&[3])]);
}

#[test]
fn sym_slice_dimensions_are_partition_counts() {
    for k in 2..=3usize {
        for n in 0..=10i64 {
            assert_eq!(Slice::sym_image(k, n - k as i64).dim() as u64, p_count(k as u64, n as u64));
        }
    }
}

#[test]
fn lowest_and_highest_weight_examples() {
    let low = lws(2, 0, Filter::Full);
    assert_eq!(low, Subspace::span(&Slice::full(2, 0), &[Uea::one(), r(&q())]).unwrap());
    let low = lws(3, 1, Filter::Full);
    assert_eq!(low.dim(), 1);
    assert!(low.contains(&r(&qe2()).mul(&Uea::gen(-1))).unwrap());
    assert!(hws(2, 0, Filter::SymImage(2)).contains(&r(&q())).unwrap());
    assert!(hws(1, 5, Filter::Full).is_zero());
}

#[test]
fn casimir_examples() {
    let e2 = w(&[-1, -1]);
    assert_eq!(casimir_ad(&e2), e2.scale(&rat(6)));
    assert!(casimir_ad(&Uea::<Rat>::one()).is_zero());
    assert_eq!(casimir_ad(&r(&qe2())), r(&qe2()).scale(&rat(2)));
}

#[test]
fn subspace_operations() {
    let s = Slice::full(2, 0);
    let a = Subspace::span(&s, &[r(&q())]).unwrap();
    assert_eq!(a, Subspace::span(&s, &[r(&q()).scale(&rat(3))]).unwrap());
    let x = Subspace::span(&s, &[Uea::one(), r(&q())]).unwrap();
    let y = Subspace::span(&s, &[r(&q()), w(&[0])]).unwrap();
    assert_eq!(x.intersect(&y).unwrap(), a);
    assert_eq!(x.sum(&y).unwrap().dim(), 3);
    let other = Subspace::zero(&Slice::full(2, 1));
    assert!(x.sum(&other).is_err());
}

#[test]
fn closures() {
    let h0 = submodule_closure(&[r(&z())], 2, 8);
    assert_eq!(h0.at(0), Subspace::span(&Slice::full(2, 0), &[r(&q())]).unwrap());
    assert!(h0.at(1).contains(&r(&z())).unwrap());
    for mu in 0..=8 {
        // one copy of F_2l for each 0 ≤ 2l ≤ mu
        assert_eq!(h0.at(mu).dim() as i64, mu / 2 + 1, "weight {mu}");
    }
    let h2 = submodule_closure(&[r(&qe2())], 2, 8);
    assert!(h2.at(1).is_zero() && h2.at(0).is_zero());
    let all = submodule_closure(&[w(&[-1, -1])], 2, 8);
    for mu in -2..=8 {
        let sym = Subspace::whole(&Slice::sym_image(2, mu)).basis();
        assert_eq!(all.at(mu), Subspace::span(&Slice::full(2, mu), &sym).unwrap(), "weight {mu}");
    }
}

#[test]
fn sym_coordinates_reject_outside_elements() {
    let s = Slice::sym_image(2, 0);
    assert!(s.coords(&r(&q())).is_ok());
    assert!(s.coords(&w(&[0])).is_err());
}

proptest! {
    #[test]
    fn difference_identities(k in 2u64..=6, n in 1u64..=12) {
        prop_assert_eq!(p_count(k, n) - p_count(k, n - 1), q_count(k, n));
        prop_assert_eq!(w_count(k, n) - w_count(k, n - 1), t_count(k, n));
    }

    #[test]
    fn lowering_is_onto(k in 2usize..=3, mu in -1i64..=5) {
        let mu = mu.max(1 - k as i64);
        let images: Vec<Uea<Rat>> =
            Subspace::whole(&Slice::sym_image(k, mu)).basis().iter().map(|b| b.ad_gen(-1)).collect();
        let target = Slice::sym_image(k, mu - 1);
        prop_assert_eq!(Subspace::span(&target, &images).unwrap(), Subspace::whole(&target));
    }

    #[test]
    fn span_ignores_scaling_and_order(mu in -2i64..=4, c in 1i64..=5, d in 1i64..=7) {
        let s = Slice::full(2, mu);
        let basis: Vec<Uea<Rat>> = (0..s.dim()).map(|i| s.basis_elem(i)).collect();
        let mut scaled: Vec<Uea<Rat>> = basis.iter().map(|b| b.scale(&ratio(c, d))).collect();
        scaled.reverse();
        prop_assert_eq!(Subspace::span(&s, &basis).unwrap(), Subspace::span(&s, &scaled).unwrap());
        prop_assert_eq!(Subspace::span(&s, &basis).unwrap(), Subspace::whole(&s));
    }
}

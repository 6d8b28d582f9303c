mod common;

use proptest::prelude::*;
use vecr_core::arith::{rat, Rat};
use vecr_core::weyl::{gen_image, Weyl};
use vecr_core::witt::{bracket, bracket_basis, GenIndex, LieElt, SubalgebraId};

fn e(n: i64) -> LieElt<Rat> {
    LieElt::basis(GenIndex::new(n).unwrap())
}

/// The vector field `Σ c_n x^{n+1} ∂` as a Weyl operator.
fn field(x: &LieElt<Rat>) -> Weyl<Rat> {
    x.terms().fold(Weyl::zero(), |acc, (n, c)| acc.add(&gen_image(n.get(), &rat(0)).scale(c)))
}

fn lie(top: i64) -> impl Strategy<Value = LieElt<Rat>> {
    prop::collection::vec((-1..=top, -4i64..=4), 1..4).prop_map(|terms| {
        terms.into_iter().fold(LieElt::zero(), |acc, (n, c)| acc.add(&e(n).scale(&rat(c))))
    })
}

#[test]
fn basis_brackets() {
    assert_eq!(bracket_basis(-1, 1).unwrap(), e(0).scale(&rat(2)));
    assert!(bracket_basis(3, 3).unwrap().is_zero());
    for n in -1..=10 {
        assert_eq!(bracket_basis(0, n).unwrap(), e(n).scale(&rat(n)));
    }
    assert!(bracket_basis(-2, 1).is_err());
    assert!(GenIndex::new(-2).is_err());
}

#[test]
fn bilinear_examples() {
    let x = e(-1).add(&e(0));
    assert_eq!(bracket(&x, &e(1)), e(0).scale(&rat(2)).add(&e(1)));
    assert!(bracket(&x, &x).is_zero());
    assert!(bracket(&LieElt::zero(), &x).is_zero());
}

#[test]
fn brackets_agree_with_commutators_of_vector_fields() {
    for m in -1..=6 {
        for n in -1..=6 {
            let (a, b) = (field(&e(m)), field(&e(n)));
            let commutator = a.mul(&b).sub(&b.mul(&a));
            assert_eq!(field(&bracket_basis(m, n).unwrap()), commutator, "[e_{m}, e_{n}]");
        }
    }
}

#[test]
fn subalgebras_are_closed() {
    for id in [SubalgebraId::ProjectiveA, SubalgebraId::AffineB, SubalgebraId::ConstantC] {
        let top = id.max_index().unwrap();
        for m in -1..=top {
            for n in -1..=top {
                let b = bracket_basis(m as i64, n as i64).unwrap();
                assert!(b.terms().all(|(k, _)| id.contains(k.get())), "{} not closed", id.name());
            }
        }
    }
}

proptest! {
    #[test]
    fn antisymmetry(x in lie(8), y in lie(8)) {
        prop_assert_eq!(bracket(&x, &y), bracket(&y, &x).neg());
    }

    #[test]
    fn jacobi(x in lie(8), y in lie(8), z in lie(8)) {
        let total = bracket(&x, &bracket(&y, &z))
            .add(&bracket(&y, &bracket(&z, &x)))
            .add(&bracket(&z, &bracket(&x, &y)));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn bracket_is_the_field_commutator(x in lie(5), y in lie(5)) {
        let (a, b) = (field(&x), field(&y));
        prop_assert_eq!(field(&bracket(&x, &y)), a.mul(&b).sub(&b.mul(&a)));
    }
}

use vecr_core::annihilator::{
    ann_slice, counit, ideal_slice, ideal_slice_with, machine_check, IRecipe, JPattern, MachineConfig, ModuleSpec,
};
use vecr_core::arith::{q_of, rat, ratio, y_of, Poly, Rat, Var};
use vecr_core::par::Mode;
use vecr_core::slices::{submodule_closure, Slice, Subspace};
use vecr_core::uea::named::{q, qe2, y, z};
use vecr_core::weyl::{rep_rat, LambdaSpec};
use vecr_core::witt::SubalgebraId;
use vecr_core::{Status, Uea};

fn r(x: &vecr_core::UeaElt) -> Uea<Rat> {
    x.to_rat().unwrap()
}

fn minus(x: Uea<Rat>, c: Rat) -> Uea<Rat> {
    x.sub(&Uea::constant(c))
}

fn config(module: ModuleSpec, pattern: JPattern, j: SubalgebraId, recipe: IRecipe, k: usize) -> MachineConfig {
    MachineConfig {
        degrees: vec![2],
        j_spaces: vec![j],
        pattern,
        i_recipe: recipe,
        module,
        ambient: SubalgebraId::Full,
        max_degree: k,
        max_weight: 6,
        mode: Mode::default(),
    }
}

#[test]
fn counit_examples() {
    assert_eq!(counit(&r(&q()).add(&Uea::one())), rat(1));
    assert_eq!(counit(&r(&q())), rat(0));
    let shifted = r(&q()).to_poly().sub(&Uea::constant(Poly::var(Var::Lambda) * Poly::var(Var::Lambda) - Poly::var(Var::Lambda)));
    assert_eq!(counit(&shifted), -(Poly::var(Var::Lambda) * Poly::var(Var::Lambda) - Poly::var(Var::Lambda)));
}

#[test]
fn annihilator_slice_examples() {
    let a = ann_slice(&ModuleSpec::poly(rat(0)), 2, 1);
    assert_eq!(a, Subspace::span(&Slice::full(2, 1), &[r(&z())]).unwrap());
    assert!(ann_slice(&ModuleSpec::poly(rat(2)), 2, 1).is_zero());
    let a = ann_slice(&ModuleSpec::poly(rat(2)), 2, 0);
    assert_eq!(a, Subspace::span(&Slice::full(2, 0), &[minus(r(&q()), rat(2))]).unwrap());
}

/// Every basis element of an annihilator slice acts by zero, checked by
/// applying it to sample densities with the word-action formula.
#[test]
fn annihilator_elements_kill_sample_vectors() {
    for v in [rat(2), ratio(1, 3)] {
        for mu in -2..=3 {
            for b in ann_slice(&ModuleSpec::poly(v.clone()), 3, mu).basis() {
                let op = rep_rat(&b, &v);
                for m in [rat(0), rat(3), ratio(7, 2)] {
                    assert!(op.apply(&m).is_empty(), "{b} on x^{m}");
                }
            }
        }
    }
}

#[test]
fn ideal_slice_examples() {
    let got = ideal_slice(&[r(&z())], 2, 1);
    assert_eq!(got, Subspace::span(&Slice::full(2, 1), &[r(&z())]).unwrap());
    // slack 0 already sees the generators themselves
    let h2 = submodule_closure(&[r(&qe2())], 2, 4);
    assert_eq!(ideal_slice_with(&[r(&qe2())], 2, 3, 0).transfer(&Slice::full(2, 3)).unwrap(), h2.at(3).transfer(&Slice::full(2, 3)).unwrap());
}

#[test]
fn ideal_slices_are_sound() {
    let v = rat(2);
    let gens = [minus(r(&q()), q_of(&v)), minus(r(&y()), y_of(&v))];
    for g in &gens {
        assert!(rep_rat(g, &v).is_zero());
    }
    for mu in -3..=3 {
        let i = ideal_slice(&gens, 3, mu);
        let a = ann_slice(&ModuleSpec::poly(v.clone()), 3, mu);
        assert!(i.is_subspace_of(&a).unwrap(), "weight {mu}");
    }
}

#[test]
fn module_variants_agree() {
    for v in [rat(0), rat(2)] {
        for mu in -3..=3 {
            let base = ann_slice(&ModuleSpec::poly(v.clone()), 3, mu);
            assert_eq!(ann_slice(&ModuleSpec::NegPoly(v.clone()), 3, mu), base, "negative part, λ = {v}, μ = {mu}");
            let offset = ModuleSpec::Offset { a: ratio(1, 2), lambda: v.clone() };
            assert_eq!(ann_slice(&offset, 3, mu), base, "offset, λ = {v}, μ = {mu}");
        }
    }
}

#[test]
fn transpose_swaps_dual_weights() {
    for v in [rat(0), rat(2), ratio(1, 2)] {
        let dual = rat(1) - &v;
        for k in 1..=3 {
            for mu in -3..=3 {
                let a = ann_slice(&ModuleSpec::poly(v.clone()), k, mu);
                let t: Vec<Uea<Rat>> = a.basis().iter().map(Uea::transpose).collect();
                let got = Subspace::span(a.slice(), &t).unwrap();
                assert_eq!(got, ann_slice(&ModuleSpec::poly(dual.clone()), k, mu), "λ = {v}, k = {k}, μ = {mu}");
            }
        }
    }
}

#[test]
fn degree_two_cannot_tell_dual_weights_apart() {
    for mu in -4..=4 {
        assert_eq!(ann_slice(&ModuleSpec::poly(rat(2)), 2, mu), ann_slice(&ModuleSpec::poly(rat(-1)), 2, mu));
    }
    let (a, b) = (ann_slice(&ModuleSpec::poly(rat(2)), 3, 0), ann_slice(&ModuleSpec::poly(rat(-1)), 3, 0));
    assert_ne!(a, b);
    assert!(a.contains(&minus(r(&y()), y_of(&rat(2)))).unwrap());
    assert!(b.contains(&minus(r(&y()), y_of(&rat(-1)))).unwrap());
}

#[test]
fn universal_module_annihilator() {
    assert!(ann_slice(&ModuleSpec::Universal, 2, 1).is_zero());
    assert!(ann_slice(&ModuleSpec::Poly(LambdaSpec::FormalBigLambda), 3, 1).contains(&r(&qe2()).mul(&Uea::gen(-1))).unwrap());
}

#[test]
fn machine_accepts_the_constant_density_configuration() {
    let cfg = config(ModuleSpec::poly(rat(0)), JPattern::C, SubalgebraId::ConstantC, IRecipe::Closure(vec![r(&z())]), 3);
    let rep = machine_check("t/i0", &cfg).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witnesses);
}

#[test]
fn machine_rejects_a_module_the_generator_does_not_kill() {
    let cfg = config(ModuleSpec::poly(rat(2)), JPattern::C, SubalgebraId::ConstantC, IRecipe::Closure(vec![r(&z())]), 3);
    let rep = machine_check("t/wrong-module", &cfg).unwrap();
    assert_eq!(rep.status, Status::Fail);
    assert!(!rep.witnesses.is_empty());
}

#[test]
fn machine_rejects_a_too_small_ideal() {
    let cfg = config(ModuleSpec::Universal, JPattern::B, SubalgebraId::AffineB, IRecipe::Span(vec![r(&qe2())]), 3);
    let rep = machine_check("t/span-only", &cfg).unwrap();
    assert_eq!(rep.status, Status::Fail);
}

#[test]
fn machine_rejects_a_pattern_that_misses_the_cross_section() {
    let cfg = config(ModuleSpec::Universal, JPattern::C, SubalgebraId::ConstantC, IRecipe::Closure(vec![r(&qe2())]), 3);
    let rep = machine_check("t/thin-pattern", &cfg).unwrap();
    assert_eq!(rep.status, Status::Fail);
}

#[test]
fn machine_accepts_the_sl2_configuration() {
    let mut cfg = config(
        ModuleSpec::poly(rat(2)),
        JPattern::Sl2,
        SubalgebraId::SpanE1Em1,
        IRecipe::Span(vec![minus(r(&q()), q_of(&rat(2)))]),
        4,
    );
    cfg.ambient = SubalgebraId::ProjectiveA;
    cfg.max_weight = 4;
    let rep = machine_check("t/sl2", &cfg).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witnesses);
}

//! Annihilator suites: the single degree cases at weight 0 and for the
//! universal module, the degree two and three case for generic λ, and the
//! sl₂ analogue.

use num_traits::Zero;

use crate::annihilator::{
    ann_slice, filtration_part, machine_check, IRecipe, IdealSlicer, JPattern, MachineConfig, ModuleSpec,
    DEFAULT_SLACK,
};
use crate::arith::{binomial, q_of, q_poly, rat, ratio, y_of, Coeff, Poly, Rat, Var};
use crate::error::Error;
use crate::report::{CheckReport, Status, Tally};
use crate::slices::{submodule_closure, Closure, Indexer, Slice, Subspace};
use crate::uea::named::{q, qe2, x_el, y, y1, z};
use crate::uea::{Mono, Uea};
use crate::weyl::{lam_deg_symbol, rep, rep_rat, LambdaSpec, Weyl};
use crate::witt::SubalgebraId;

use super::support::{e, r, same, span, transpose_space};
use super::{CheckDef, RunConfig};

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef::new("thm-i0/Z-annihilates", "Z acts by zero on F_0 and F_1", z_annihilates),
        CheckDef::new("thm-i0/machine-conditions", "cross-section conditions for F_0 with J = c and ideal <Z>", i0_machine).at_degree(4),
        CheckDef::new("thm-i0/ann-eq-ideal", "annihilator slices of F_0 equal the slices of <Z>", i0_ann_eq_ideal).at_degree(4),
        CheckDef::new("thm-i0/ann-F1-eq-ann-F0", "F_0 and F_1 have the same annihilator slices", i0_f1_eq_f0).at_degree(4),
        CheckDef::new("thm-i0/transpose-duality", "transposition maps annihilator slices of F_v to those of F_(1-v)", transpose_duality),
        CheckDef::new("thm-i0/no-a-agreement", "F_v, its negative part and its offset variant share annihilator slices", no_a),
        CheckDef::new("thm-i2/symbols", "(Λ, ∂)-symbols of the b-pattern images and their independence", i2_symbols),
        CheckDef::new("thm-i2/ann-eq-H2", "annihilator slices of the universal module equal H_2 and <Qe2>", i2_ann_eq_h2),
        CheckDef::new("thm-i2/machine-conditions", "cross-section conditions for the universal module with J = b", i2_machine),
        CheckDef::new("thm-il/machine-conditions", "two-degree cross-section conditions for C + F_λ", il_machine).at_degree(3),
        CheckDef::new("thm-il/ann-eq-ideal", "annihilator slices of F_λ equal <Q - q(λ), Y - y(λ)>", il_ann_eq_ideal).at_degree(3),
        CheckDef::new("thm-il/aug-eq-ideal", "annihilator slices of C + F_λ equal <Qe2, (Q - q)e_-1, Y - (λ-1/2)Q>", il_aug_eq_ideal).at_degree(3),
        CheckDef::new("thm-il/X-identity", "ad(e_-1) X = q(λ)(Y - (λ-1/2)Q) for both Y_1 representatives", x_identity),
        CheckDef::new("thm-il/degree3-necessity", "degree-3 generators are needed for each sampled λ", degree3_necessity),
        CheckDef::new("thm-il/casimir-pair", "F_2 and F_-1 agree in degree 2 and differ in degree 3", casimir_pair),
        CheckDef::new("thm-il/degenerate-contrast", "Z annihilates F_0 but nothing of weight 1 and degree 2 annihilates F_2", degenerate_contrast),
        CheckDef::new("thm-il/I3-decomposition", "degree-3 annihilator of C + F_λ as a sum of four submodules", i3_decomposition),
        CheckDef::new("thm-il/generators-annihilate", "the listed generators act by zero and Q - q(λ) has nonzero counit", generators_annihilate),
        CheckDef::new("sl2-verma/machine-conditions", "cross-section conditions for F_2 restricted to sl2", sl2_machine).at_degree(4),
    ]
}

fn absorb(t: &mut Tally, report: CheckReport) {
    match report.status {
        Status::Fail => report.witnesses.into_iter().for_each(|w| t.fail(w)),
        _ => report.witnesses.into_iter().for_each(|w| t.note(w)),
    }
}

/// Slices `(k, mu)` up to the degree cutoff: every weight in range up to
/// degree 3 and `|mu| ≤ 4` above it.
fn slices(cfg: &RunConfig) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for k in 0..=cfg.max_degree {
        let (lo, hi) = if k <= 3 { (-(k as i64), cfg.max_weight) } else { (-4, 4) };
        out.extend((lo..=hi).map(|mu| (k, mu)));
    }
    out
}

fn z_annihilates(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in [rat(0), rat(1)] {
        let img = rep(&z(), &LambdaSpec::Rational(v.clone()))?;
        t.ensure(img.is_zero(), || format!("π_{v}(Z) = {img}"));
    }
    Ok(())
}

fn i0_config(cfg: &RunConfig) -> MachineConfig {
    MachineConfig {
        degrees: vec![2],
        j_spaces: vec![SubalgebraId::ConstantC],
        pattern: JPattern::C,
        i_recipe: IRecipe::Closure(vec![r(&z())]),
        module: ModuleSpec::poly(rat(0)),
        ambient: SubalgebraId::Full,
        max_degree: cfg.max_degree,
        max_weight: cfg.max_weight,
        mode: cfg.mode,
    }
}

fn i0_machine(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    absorb(t, machine_check("thm-i0/machine-conditions", &i0_config(cfg))?);
    Ok(())
}

fn compare_with_ideal(t: &mut Tally, module: &ModuleSpec, gens: &[Uea<Rat>], work: &[(usize, i64)], mode: crate::par::Mode) {
    let max_k = work.iter().map(|w| w.0).max().unwrap_or(0);
    let max_mu = work.iter().map(|w| w.1).max().unwrap_or(0);
    let slicer = IdealSlicer::new(gens, max_k, max_mu, DEFAULT_SLACK);
    let results = crate::par::map(mode, work.to_vec(), |(k, mu)| {
        let a = ann_slice(module, k, mu);
        let i = slicer.slice(k, mu);
        (k, mu, a, i)
    });
    for (k, mu, a, i) in results {
        t.ensure(a == i, || {
            format!("Ann({}) at (k={k}, mu={mu}) has dim {}, ideal slice dim {}", module.label(), a.dim(), i.dim())
        });
    }
    t.note(format!("{} slices of Ann({}) match the ideal", work.len(), module.label()));
}

fn i0_ann_eq_ideal(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    compare_with_ideal(t, &ModuleSpec::poly(rat(0)), &[r(&z())], &slices(cfg), cfg.mode);
    Ok(())
}

fn i0_f1_eq_f0(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let results = crate::par::map(cfg.mode, slices(cfg), |(k, mu)| {
        (k, mu, ann_slice(&ModuleSpec::poly(rat(0)), k, mu) == ann_slice(&ModuleSpec::poly(rat(1)), k, mu))
    });
    for (k, mu, ok) in results {
        t.ensure(ok, || format!("Ann(F_0) and Ann(F_1) differ at (k={k}, mu={mu})"));
    }
    Ok(())
}

fn small_range() -> Vec<(usize, i64)> {
    (0..=3usize).flat_map(|k| (-6..=6).map(move |mu| (k, mu))).collect()
}

fn transpose_duality(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in [rat(0), rat(2), ratio(1, 2)] {
        let dual = rat(1) - &v;
        let results = crate::par::map(cfg.mode, small_range(), |(k, mu)| {
            let a = transpose_space(&ann_slice(&ModuleSpec::poly(v.clone()), k, mu));
            let b = ann_slice(&ModuleSpec::poly(dual.clone()), k, mu);
            (k, mu, a == b)
        });
        for (k, mu, ok) in results {
            t.ensure(ok, || format!("transpose of Ann(F_{v}) differs from Ann(F_{dual}) at (k={k}, mu={mu})"));
        }
    }
    Ok(())
}

fn no_a(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in [rat(0), rat(2)] {
        let variants = [ModuleSpec::NegPoly(v.clone()), ModuleSpec::Offset { a: ratio(1, 2), lambda: v.clone() }];
        let results = crate::par::map(cfg.mode, small_range(), |(k, mu)| {
            let base = ann_slice(&ModuleSpec::poly(v.clone()), k, mu);
            let bad: Vec<String> =
                variants.iter().filter(|m| ann_slice(m, k, mu) != base).map(|m| m.label()).collect();
            (k, mu, bad)
        });
        for (k, mu, bad) in results {
            t.ensure(bad.is_empty(), || format!("Ann(F_{v}) differs from Ann of {bad:?} at (k={k}, mu={mu})"));
        }
    }
    Ok(())
}

fn big(exp: u32) -> Poly {
    Poly::monomial(Var::BigLambda, exp, rat(1))
}

/// Displayed symbol of `π_Λ(e_0^k0 e_-1^km1)`.
fn symbol_b0(k0: u32, km1: u32) -> Weyl<Poly> {
    let mut out = Weyl::zero();
    for l in 0..=k0 {
        let c = rat(binomial(k0 as i64, l as i64));
        out = out.add(&Weyl::term(k0 - l, k0 + km1 - l, big(l).scale(&c)));
    }
    out
}

/// Displayed symbol of `π_Λ(e_n e_0^k0 e_-1^km1)`.
fn symbol_bn(n: u32, k0: u32, km1: u32) -> Weyl<Poly> {
    let mut out = Weyl::term(n + k0 + 1, k0 + km1 + 1, Poly::from_int(1));
    out = out.add(&Weyl::term(n, km1, big(k0 + 1).scale(&rat(n as i64 + 1))));
    for l in 1..=k0 {
        let c = binomial(k0 as i64, l as i64) + (n as i64 + 1) * binomial(k0 as i64, l as i64 - 1);
        out = out.add(&Weyl::term(n + k0 - l + 1, k0 + km1 - l + 1, big(l).scale(&rat(c))));
    }
    out
}

fn b_mono(n: Option<i32>, k0: u32, km1: u32) -> Mono {
    let mut idx: Vec<i32> = n.into_iter().collect();
    idx.extend(std::iter::repeat_n(0, k0 as usize));
    idx.extend(std::iter::repeat_n(-1, km1 as usize));
    Mono::from_ordered(&idx)
}

fn i2_symbols(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let symbol_of = |m: &Mono| -> Result<Weyl<Poly>, Error> {
        lam_deg_symbol(&rep(&Uea::term(m.clone(), Poly::from_int(1)), &LambdaSpec::FormalBigLambda)?)
    };
    for k0 in 0..=3 {
        for km1 in 0..=3 {
            let m = b_mono(None, k0, km1);
            same(t, &format!("symbol of π_Λ({m})"), &symbol_of(&m)?, &symbol_b0(k0, km1));
            for n in 1..=4 {
                let m = b_mono(Some(n), k0, km1);
                same(t, &format!("symbol of π_Λ({m})"), &symbol_of(&m)?, &symbol_bn(n as u32, k0, km1));
            }
        }
    }
    for k in 1..=cfg.max_degree {
        for mu in -(k as i64)..=cfg.max_weight {
            let pattern: Vec<Mono> =
                Slice::full(k, mu).basis().iter().filter(|m| m.degree() == k && JPattern::B.matches(m)).cloned().collect();
            let mut ix = Indexer::<(u32, u32, u32)>::new();
            let mut rows = Vec::new();
            for m in &pattern {
                let s = symbol_of(m)?;
                let mut entries = Vec::new();
                for (&(a, b), c) in s.terms() {
                    for (&(_, l), x) in c.terms() {
                        entries.push(((l, a, b), x.clone()));
                    }
                }
                rows.push(ix.vec(entries));
            }
            let rank = crate::linalg::rank(&rows);
            t.ensure(rank == pattern.len(), || format!("b-pattern symbols at (k={k}, mu={mu}) have rank {rank} of {}", pattern.len()));
        }
    }
    Ok(())
}

fn i2_ann_eq_h2(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let gens = [r(&qe2())];
    let module = ModuleSpec::Universal;
    let work: Vec<(usize, i64)> =
        (0..=cfg.max_degree).flat_map(|k| (-(k as i64)..=cfg.max_weight).map(move |mu| (k, mu))).collect();
    compare_with_ideal(t, &module, &gens, &work, cfg.mode);
    let h2 = submodule_closure(&gens, 2, cfg.max_weight);
    for mu in -2..=cfg.max_weight {
        let a = ann_slice(&module, 2, mu);
        let h = h2.at(mu).transfer(a.slice())?;
        t.ensure(a == h, || format!("Ann(F_Λ) ∩ U_2 at {mu} has dim {}, H_2 has {}", a.dim(), h.dim()));
    }
    for (k, mu) in work {
        let floor = match k {
            0 | 1 => i64::MAX,
            2 => 2,
            3 => 1,
            _ => continue,
        };
        if mu < floor {
            let a = ann_slice(&module, k, mu);
            t.ensure(a.is_zero(), || format!("Ann(F_Λ) is nonzero at (k={k}, mu={mu}): {a}"));
        }
    }
    if cfg.max_degree >= 3 {
        let l1 = r(&qe2().mul(&e(-1)));
        t.ensure(ann_slice(&module, 3, 1).contains(&l1)?, || "Qe2 e_-1 does not annihilate F_Λ".into());
    }
    Ok(())
}

fn i2_machine(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let mc = MachineConfig {
        degrees: vec![2],
        j_spaces: vec![SubalgebraId::AffineB],
        pattern: JPattern::B,
        i_recipe: IRecipe::Closure(vec![r(&qe2())]),
        module: ModuleSpec::Universal,
        ambient: SubalgebraId::Full,
        max_degree: cfg.max_degree,
        max_weight: cfg.max_weight,
        mode: cfg.mode,
    };
    absorb(t, machine_check("thm-i2/machine-conditions", &mc)?);
    Ok(())
}

/// The sampled λ values the generic theorem applies to; 0 and 1 are
/// reported as skipped.
fn generic_lambdas(cfg: &RunConfig, t: &mut Tally) -> Vec<Rat> {
    let mut out = Vec::new();
    for v in &cfg.lambda_samples {
        if v.is_zero() || *v == rat(1) {
            t.note(format!("λ = {v} skipped: the statement needs λ ≠ 0, 1"));
        } else {
            out.push(v.clone());
        }
    }
    if out.is_empty() {
        t.skip("no sampled λ outside {0, 1}");
    }
    out
}

fn shifted(x: Uea<Rat>, c: Rat) -> Uea<Rat> {
    x.sub(&Uea::constant(c))
}

fn fl_gens(v: &Rat) -> Vec<Uea<Rat>> {
    vec![shifted(r(&q()), q_of(v)), shifted(r(&y()), y_of(v))]
}

fn aug_gens(v: &Rat) -> Vec<Uea<Rat>> {
    let c = v - ratio(1, 2);
    vec![
        r(&qe2()),
        shifted(r(&q()), q_of(v)).mul(&Uea::gen(-1)),
        r(&y()).sub(&r(&q()).scale(&c)),
    ]
}

fn u3_work(cfg: &RunConfig) -> Vec<(usize, i64)> {
    (0..=cfg.max_degree).flat_map(|k| (-(k as i64)..=cfg.max_weight).map(move |mu| (k, mu))).collect()
}

fn il_machine(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in generic_lambdas(cfg, t) {
        let mc = MachineConfig {
            degrees: vec![2, 3],
            j_spaces: vec![SubalgebraId::AffineB, SubalgebraId::ConstantC],
            pattern: JPattern::Il,
            i_recipe: IRecipe::Annihilator,
            module: ModuleSpec::AugPlus(v.clone()),
            ambient: SubalgebraId::Full,
            max_degree: cfg.max_degree,
            max_weight: cfg.max_weight,
            mode: cfg.mode,
        };
        absorb(t, machine_check("thm-il/machine-conditions", &mc)?);
    }
    Ok(())
}

fn il_ann_eq_ideal(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in generic_lambdas(cfg, t) {
        compare_with_ideal(t, &ModuleSpec::poly(v.clone()), &fl_gens(&v), &u3_work(cfg), cfg.mode);
    }
    Ok(())
}

fn il_aug_eq_ideal(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in generic_lambdas(cfg, t) {
        compare_with_ideal(t, &ModuleSpec::AugPlus(v.clone()), &aug_gens(&v), &u3_work(cfg), cfg.mode);
    }
    Ok(())
}

fn x_identity(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let c = Poly::var(Var::Lambda) - Poly::constant(ratio(1, 2));
    let want = y().sub(&q().scale(&c)).scale(&q_poly(Var::Lambda));
    for sh in [false, true] {
        let x = x_el(sh);
        same(t, &format!("ad(e_-1) X (shifted Y_1: {sh})"), &e(-1).ad(&x), &want);
        let img = rep(&x, &LambdaSpec::FormalLambda)?;
        t.ensure(img.is_zero(), || format!("π_λ(X) = {img}"));
    }
    Ok(())
}

fn degree3_necessity(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in generic_lambdas(cfg, t) {
        let dual = rat(1) - &v;
        let witness = shifted(r(&y()), y_of(&v));
        let here = ann_slice(&ModuleSpec::poly(v.clone()), 3, 0);
        t.ensure(here.contains(&witness)?, || format!("Y - y({v}) does not annihilate F_{v}"));
        if dual != v {
            let there = ann_slice(&ModuleSpec::poly(dual.clone()), 3, 0);
            t.ensure(!there.contains(&witness)?, || format!("Y - y({v}) also annihilates F_{dual}"));
            for mu in -6..=6 {
                let a = ann_slice(&ModuleSpec::poly(v.clone()), 2, mu);
                let b = ann_slice(&ModuleSpec::poly(dual.clone()), 2, mu);
                t.ensure(a == b, || format!("Ann(F_{v}) and Ann(F_{dual}) differ in degree 2 at weight {mu}"));
            }
            t.note(format!("λ = {v}: Ann(F_{v}) and Ann(F_{dual}) agree in degree 2, Y - y(λ) separates them"));
        } else {
            // λ = 1 - λ: show the degree-2 part does not generate Y - y(λ).
            let mut low = Vec::new();
            for mu in -2..=(3 + DEFAULT_SLACK) as i64 {
                low.extend(ann_slice(&ModuleSpec::poly(v.clone()), 2, mu).basis());
            }
            let low = filtration_part(&low, 2);
            let ideal = IdealSlicer::new(&low, 3, 0, DEFAULT_SLACK).slice(3, 0);
            t.ensure(!ideal.contains(&witness)?, || format!("Y - y({v}) lies in the ideal of the degree-2 annihilator"));
            t.note(format!("λ = {v} is self-dual; Y - y(λ) is outside the degree-3 slice of the ideal generated in degree 2 (slack {DEFAULT_SLACK})"));
        }
    }
    Ok(())
}

fn casimir_pair(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let (a, b) = (ModuleSpec::poly(rat(2)), ModuleSpec::poly(rat(-1)));
    for mu in -6..=6 {
        t.ensure(ann_slice(&a, 2, mu) == ann_slice(&b, 2, mu), || format!("Ann(F_2) and Ann(F_-1) differ at (2, {mu})"));
    }
    let (sa, sb) = (ann_slice(&a, 3, 0), ann_slice(&b, 3, 0));
    t.ensure(sa != sb, || "Ann(F_2) and Ann(F_-1) agree at (3, 0)".into());
    let minus = shifted(r(&y()), y_of(&rat(2)));
    let plus = r(&y()).add(&Uea::constant(y_of(&rat(2))));
    t.ensure(sa.contains(&minus)? && !sb.contains(&minus)?, || "Y - y(2) does not separate F_2 from F_-1".into());
    t.ensure(sb.contains(&plus)? && !sa.contains(&plus)?, || "Y + y(2) does not separate F_-1 from F_2".into());
    Ok(())
}

fn degenerate_contrast(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let a0 = ann_slice(&ModuleSpec::poly(rat(0)), 2, 1);
    t.ensure(a0.dim() == 1 && a0.contains(&r(&z()))?, || format!("Ann(F_0) at (2, 1) is {a0}"));
    let a2 = ann_slice(&ModuleSpec::poly(rat(2)), 2, 1);
    t.ensure(a2.is_zero(), || format!("Ann(F_2) at (2, 1) is {a2}"));
    Ok(())
}

fn i3_decomposition(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in generic_lambdas(cfg, t) {
        let c = &v - ratio(1, 2);
        let gens = [
            shifted(r(&q()), q_of(&v)).mul(&Uea::gen(-1)),
            r(&y1(false)).sub(&r(&z()).scale(&c)),
            r(&qe2().mul(&e(-1))),
            r(&qe2()),
        ];
        let closures: Vec<Closure> = gens.iter().map(|g| submodule_closure(std::slice::from_ref(g), 3, 5)).collect();
        for mu in -5..=5 {
            let a = ann_slice(&ModuleSpec::AugPlus(v.clone()), 3, mu);
            let mut sum = Subspace::zero(a.slice());
            for cl in &closures {
                sum = sum.sum(&cl.at(mu).transfer(a.slice())?)?;
            }
            t.ensure(a == sum, || format!("λ = {v}, weight {mu}: Ann has dim {}, the sum has dim {}", a.dim(), sum.dim()));
        }
        let target = r(&y()).sub(&r(&q()).scale(&c));
        t.ensure(closures[1].at(0).transfer(&Slice::full(3, 0))?.contains(&target)?, || {
            format!("Y - (λ-1/2)Q is not generated by Y_1 - (λ-1/2)Z at λ = {v}")
        });
    }
    Ok(())
}

fn generators_annihilate(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for v in generic_lambdas(cfg, t) {
        for g in fl_gens(&v) {
            let img = rep_rat(&g, &v);
            t.ensure(img.is_zero(), || format!("π_{v}({g}) = {img}"));
        }
        for g in aug_gens(&v) {
            let img = rep_rat(&g, &v);
            t.ensure(img.is_zero() && g.counit().is_zero(), || format!("{g} does not annihilate C + F_{v}"));
        }
        let qq = shifted(r(&q()), q_of(&v));
        t.ensure(qq.counit() == -q_of(&v), || format!("counit of Q - q({v}) is {}", qq.counit()));
        let slice = span(2, 0, std::slice::from_ref(&qq));
        let aug = ann_slice(&ModuleSpec::AugPlus(v.clone()), 2, 0);
        t.ensure(!aug.contains(&qq)? && slice.dim() == 1, || format!("Q - q({v}) annihilates C + F_{v}"));
    }
    Ok(())
}

fn sl2_machine(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let mc = MachineConfig {
        degrees: vec![2],
        j_spaces: vec![SubalgebraId::SpanE1Em1],
        pattern: JPattern::Sl2,
        i_recipe: IRecipe::Span(vec![shifted(r(&q()), q_of(&rat(2)))]),
        module: ModuleSpec::poly(rat(2)),
        ambient: SubalgebraId::ProjectiveA,
        max_degree: cfg.max_degree,
        max_weight: cfg.max_degree as i64,
        mode: cfg.mode,
    };
    absorb(t, machine_check("sl2-verma/machine-conditions", &mc)?);
    Ok(())
}

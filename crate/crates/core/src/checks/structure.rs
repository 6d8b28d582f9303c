//! The `u2`, `u3` and `dims` suites: the adjoint module structure of the
//! symmetric parts of degree two and three, and the dimension counts behind
//! them.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::{q_of, q_poly, rat, ratio, y_poly, Poly, Rat, Var};
use crate::error::Error;
use crate::report::Tally;
use crate::slices::{
    casimir_ad, hws, lws, p_count, pbw_vec, q_count, submodule_closure, t_count, w_count, Closure, Filter, Indexer,
    Slice, Subspace,
};
use crate::uea::named::{q, qe2, s, y, y1, z};
use crate::uea::sym::{proj_top, sym_k};
use crate::uea::{monomials_of, Mono, Uea};
use crate::weyl::{gen_image, rep_with, Weyl};

use super::support::{e, em1_sq, poly_ratio, r, same, span};
use super::{CheckDef, RunConfig};

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef::new("u2/ad-Z-eq-Q", "ad(e_-1) Z = Q", ad_z_eq_q),
        CheckDef::new("u2/Z-unique-preimage", "Z is the only preimage of Q under ad(e_-1) in U_2", z_unique),
        CheckDef::new("u2/casimir-diagonal", "the adjoint Casimir is diagonalizable on sym_2 with eigenvalues q(2l)", casimir_diagonal),
        CheckDef::new("u2/H-closures", "H_2l, CQ + H_2 and U^2 are the submodules generated by their lowest elements", h_closures),
        CheckDef::new("u2/uniseriality", "closures of sampled sym_2 elements are among the listed submodules", uniseriality),
        CheckDef::new("u3/casimir-jordan", "the adjoint Casimir has a Jordan block on sym_3 at weight 1", casimir_jordan),
        CheckDef::new("u3/lowest-weight-lines", "lowest weight lines of sym_3 at weights -3, -1, 0, 1", lowest_weight_lines),
        CheckDef::new("u3/K-minus-1", "symmetrized symbols of (Q - 1/3) e_n form a copy of F_-1 in sym_3", k_minus_1),
        CheckDef::new("u3/K-minus-1-stated", "(Q - 1/3) e_n lies in sym_3 for every n", k_minus_1_stated),
        CheckDef::new("u3/Y1-preimage", "both Y_1 representatives are symmetric preimages of Y", y1_preimage),
        CheckDef::new("u3/L-action", "images of L_1, L_0, L_-1 in the universal density module", l_action),
        CheckDef::new("dims/lws-sym2", "one lowest weight line in sym_2 at each weight 2l, l = -1..5", lws_sym2),
        CheckDef::new("dims/lws-U3", "lowest weight dimensions (1,1,2,3,1,2) of U_3 at weights -3..2", lws_u3),
        CheckDef::new("dims/hws-sym3", "exactly two highest weight lines in sym_3, at weights 3 and 1", hws_sym3),
        CheckDef::new("dims/count-identities", "p_k(n) - p_k(n-1) = q_k(n) and w_k(n) - w_k(n-1) = t_k(n)", count_identities),
        CheckDef::new("dims/sym-slice-dims", "sym_k slice dimensions match the partition counts", sym_slice_dims),
        CheckDef::new("dims/ad-surjective", "ad(e_-1) maps each sym_k slice onto the next lower one", ad_surjective),
        CheckDef::new("dims/zero-sum", "ad(e_-1) preserves zero coefficient sums on S^k", zero_sum),
    ]
}

fn ad_z_eq_q(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    same(t, "ad(e_-1) Z", &e(-1).ad(&z()), &q());
    Ok(())
}

fn z_unique(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    same(t, "ad(e_-1) Z", &e(-1).ad(&z()), &q());
    let kernel = lws(2, 1, Filter::Full);
    t.ensure(kernel.is_zero(), || format!("ad(e_-1) has kernel {kernel} on U_2 at weight 1"));
    Ok(())
}

/// `{v : (C - c)^power v = 0}` inside `space`.
fn casimir_kernel(space: &Subspace, c: &Rat, power: usize) -> Subspace {
    let mut ix = Indexer::<Mono>::new();
    space.kernel_of(|v| {
        let mut cur = v.clone();
        for _ in 0..power {
            cur = casimir_ad(&cur).sub(&cur.scale(c));
        }
        pbw_vec(&mut ix, &cur)
    })
}

fn casimir_diagonal(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for mu in -2..=cfg.max_weight {
        let whole = Subspace::whole(&Slice::sym_image(2, mu));
        let mut total = 0;
        for l in -1..=mu.div_euclid(2) {
            let c = q_of(&rat(2 * l));
            let d = casimir_kernel(&whole, &c, 1).dim();
            t.ensure(d > 0, || format!("no eigenvector for q({}) = {c} at weight {mu}", 2 * l));
            total += d;
        }
        t.ensure(total == whole.dim(), || {
            format!("eigenspaces at weight {mu} have total dimension {total} of {}", whole.dim())
        });
    }
    Ok(())
}

/// Lowest weight element `ad(S)^{l+1} e_-1^2` of the copy of `F_2l` in `U^2`.
fn lowest(l: i64) -> Uea<Rat> {
    r(&s().ad_pow((l + 1) as usize, &em1_sq()))
}

/// The copy `G_2m` of `F_2m` in `U^2` at weight `mu`: the `q(2m)`-eigenspace
/// of the adjoint Casimir on the sym_2 slice.
fn g_copy(m: i64, mu: i64) -> Subspace {
    let whole = Subspace::whole(&Slice::sym_image(2, mu));
    casimir_kernel(&whole, &q_of(&rat(2 * m)), 1).transfer(&Slice::full(2, mu)).expect("sym_2 sits in U_2")
}

/// `H_2l = G_2l + G_2l+2 + ...` at weights `-2..=w`.
fn h_space(l: i64, w: i64) -> BTreeMap<i64, Subspace> {
    let mut out = BTreeMap::new();
    for mu in -2..=w {
        let mut acc = Subspace::zero(&Slice::full(2, mu));
        for m in l.max(-1)..=mu.div_euclid(2) {
            acc = acc.sum(&g_copy(m, mu)).expect("same slice");
        }
        out.insert(mu, acc);
    }
    out
}

fn closure_space(c: &Closure, w: i64) -> BTreeMap<i64, Subspace> {
    (-2..=w).map(|mu| (mu, c.at(mu).transfer(&Slice::full(2, mu)).expect("degree-2 closure"))).collect()
}

fn compare(t: &mut Tally, what: &str, got: &BTreeMap<i64, Subspace>, want: &BTreeMap<i64, Subspace>) {
    for (mu, g) in got {
        let w = &want[mu];
        t.ensure(g == w, || format!("{what} at weight {mu}: dim {} vs {}", g.dim(), w.dim()));
    }
}

/// The candidate submodules of `U^2`, labelled.
fn candidates(w: i64) -> Vec<(String, BTreeMap<i64, Subspace>)> {
    let mut out: Vec<(String, BTreeMap<i64, Subspace>)> =
        (-1..=w.div_euclid(2)).map(|l| (format!("H_{}", 2 * l), h_space(l, w))).collect();
    let h2 = h_space(1, w);
    let mut cq = h2.clone();
    let q0 = span(2, 0, &[r(&q())]);
    cq.insert(0, q0);
    out.push(("CQ + H_2".into(), cq));
    out
}

fn h_closures(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let w = cfg.max_weight;
    for mu in -2..=w {
        let sym = Subspace::span(&Slice::full(2, mu), &Subspace::whole(&Slice::sym_image(2, mu)).basis())?;
        let built = &h_space(-1, w)[&mu];
        t.ensure(&sym == built, || format!("the copies of F_2l do not fill U^2 at weight {mu}"));
        let dims: usize = (-1..=mu.div_euclid(2)).map(|m| g_copy(m, mu).dim()).sum();
        t.ensure(dims == built.dim(), || format!("copies of F_2l overlap at weight {mu}"));
    }
    for l in -1..=w.div_euclid(2) {
        let line = span(2, 2 * l, &[lowest(l)]);
        t.ensure(g_copy(l, 2 * l) == line, || format!("ad(S)^{} e_-1^2 does not span the bottom of G_{}", l + 1, 2 * l));
    }
    for l in -1..=w.div_euclid(2) {
        let v = lowest(l);
        t.ensure(v.ad_gen(-1).is_zero() && !v.is_zero(), || format!("ad(S)^{} e_-1^2 is not a lowest weight vector", l + 1));
    }
    let mut gens: Vec<(String, Uea<Rat>, BTreeMap<i64, Subspace>)> = vec![
        ("e_-1^2".into(), r(&em1_sq()), h_space(-1, w)),
        ("Z".into(), r(&z()), h_space(0, w)),
    ];
    let cands = candidates(w);
    let cq = cands.last().expect("listed").1.clone();
    gens.push(("Q".into(), r(&q()), cq));
    for l in 1..=w.div_euclid(2) {
        gens.push((format!("ad(S)^{} e_-1^2", l + 1), lowest(l), h_space(l, w)));
    }
    for (name, g, want) in gens {
        let got = closure_space(&submodule_closure(&[g], 2, w), w);
        compare(t, &format!("submodule generated by {name}"), &got, &want);
    }
    for l in -1..w.div_euclid(2) {
        let (a, b) = (h_space(l, w), h_space(l + 1, w));
        for mu in 2 * l..=w {
            let gap = a[&mu].dim() - b[&mu].dim();
            t.ensure(gap == 1, || format!("H_{}/H_{} has dimension {gap} at weight {mu}", 2 * l, 2 * l + 2));
        }
    }
    Ok(())
}

fn uniseriality(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let w = cfg.max_weight;
    let cands = candidates(w);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut hits: BTreeMap<String, usize> = BTreeMap::new();
    for _ in 0..20 {
        let mu = rng.random_range(-2..w);
        let whole = Subspace::whole(&Slice::sym_image(2, mu));
        let mut g = Uea::<Rat>::zero();
        while g.is_zero() {
            for b in whole.basis() {
                g = g.add(&b.scale(&rat(rng.random_range(-3..=3))));
            }
        }
        let got = closure_space(&submodule_closure(&[g.clone()], 2, w), w);
        match cands.iter().find(|(_, c)| *c == got) {
            Some((name, _)) => *hits.entry(name.clone()).or_default() += 1,
            None => t.fail(format!("closure of {g} is not a listed submodule")),
        }
    }
    t.note(format!("sampled closures: {hits:?}"));
    Ok(())
}

fn casimir_jordan(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let whole = Subspace::whole(&Slice::sym_image(3, 1));
    let general = casimir_kernel(&whole, &rat(0), whole.dim());
    let once = casimir_kernel(&general, &rat(0), 1);
    let twice = casimir_kernel(&general, &rat(0), 2);
    t.ensure(!general.is_zero(), || "no generalized 0-eigenvectors on sym_3 at weight 1".into());
    t.ensure(twice == general, || format!("C^2 leaves {} of {} dimensions", general.dim() - twice.dim(), general.dim()));
    t.ensure(once != general, || "C already vanishes on the generalized 0-eigenspace".into());
    t.note(format!("generalized 0-eigenspace dim {}, kernel of C dim {}", general.dim(), once.dim()));
    Ok(())
}

fn lowest_weight_lines(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let third = Uea::constant(ratio(1, 3));
    let lines = [
        ("e_-1^3", -3, r(&e(-1).pow(3))),
        ("(Q - 1/3) e_-1", -1, r(&q()).sub(&third).mul(&Uea::gen(-1))),
        ("Y", 0, r(&y())),
        ("Qe2 e_-1", 1, r(&qe2().mul(&e(-1)))),
    ];
    for (name, mu, v) in lines {
        let slice = Slice::sym_image(3, mu);
        match Subspace::span(&slice, &[v]) {
            Ok(line) => {
                let got = lws(3, mu, Filter::SymImage(3));
                t.ensure(got == line, || format!("lowest weight space of sym_3 at {mu} is {got}, not spanned by {name}"));
            }
            Err(_) => t.fail(format!("{name} is not in sym_3")),
        }
    }
    Ok(())
}

fn shifted_q_line(n: i32) -> Uea<Rat> {
    r(&q()).sub(&Uea::constant(ratio(1, 3))).mul(&Uea::gen(n))
}

fn k_minus_1_stated(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let h2 = submodule_closure(&[r(&qe2())], 2, cfg.max_weight);
    for n in -1..cfg.max_weight as i32 {
        let x = shifted_q_line(n);
        if Slice::sym_image(3, n as i64).coords(&x).is_err() {
            t.fail(format!("(Q - 1/3) e_{n} is not in sym_3"));
            let gap = sym_k(&proj_top(&x, 3)?, 3)?.sub(&x);
            if h2.at(n as i64).contains(&gap)? {
                t.note(format!("sym_3 of its symbol differs from it by {gap}, an element of H_2"));
            }
        }
    }
    Ok(())
}

/// `K_-1` as the symmetrized symbols `k_n` of `(Q - 1/3) e_n`.
fn k_minus_1(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let top = cfg.max_weight as i32;
    let h2 = submodule_closure(&[r(&qe2())], 2, cfg.max_weight);
    let mut k = BTreeMap::new();
    for n in -1..=top {
        let x = shifted_q_line(n);
        let kn = sym_k(&proj_top(&x, 3)?, 3)?;
        let gap = kn.sub(&x);
        if n <= 1 {
            same(t, &format!("k_{n}"), &kn, &x);
        }
        t.ensure(h2.at(n as i64).contains(&gap)?, || format!("k_{n} - (Q - 1/3) e_{n} = {gap} is not in H_2"));
        same(t, &format!("Casimir on k_{n}"), &casimir_ad(&kn), &kn.scale(&rat(2)));
        k.insert(n, kn);
    }
    for (&n, kn) in &k {
        for m in -1..=1 {
            let want = k.get(&(n + m)).map(|x| x.scale(&rat((n - m) as i64)));
            if let Some(want) = want {
                same(t, &format!("ad(e_{m}) k_{n}"), &kn.ad_gen(m), &want);
            }
        }
    }
    t.note("k_n = (Q - 1/3) e_n exactly for n ≤ 1; for n ≥ 2 they differ by elements of H_2");
    Ok(())
}

fn y1_preimage(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for shifted in [false, true] {
        let v = y1(shifted);
        same(t, &format!("ad(e_-1) Y_1 (shifted: {shifted})"), &e(-1).ad(&v), &y());
        t.ensure(Slice::sym_image(3, 1).coords(&r(&v)).is_ok(), || format!("Y_1 = {v} is not in sym_3"));
    }
    same(t, "difference of the representatives", &y1(true).sub(&y1(false)), &qe2().mul(&e(-1)));
    Ok(())
}

fn big_rep(theta: &Uea<Rat>) -> Weyl<Poly> {
    rep_with(&theta.to_poly(), &Poly::var(Var::BigLambda))
}

/// Asserts every image lies on the line through `target` and that some
/// image is nonzero.
fn on_line(t: &mut Tally, what: &str, space: &Subspace, target: &Weyl<Poly>) {
    let mut nonzero = false;
    for b in space.basis() {
        let img = big_rep(&b);
        nonzero |= !img.is_zero();
        let ok = match target.terms().next() {
            Some((&(a, d), c)) => {
                let ratio = poly_ratio(&img.coeff(a, d), c).expect("target coefficient is nonzero");
                img == target.scale(&Poly::constant(ratio))
            }
            None => img.is_zero(),
        };
        t.ensure(ok, || format!("{what}: π_Λ({b}) = {img} is off the line of {target}"));
    }
    t.ensure(nonzero, || format!("{what}: all images vanish"));
}

fn l_action(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let w = cfg.max_weight;
    let l1 = submodule_closure(&[r(&qe2().mul(&e(-1)))], 3, w);
    let l0 = submodule_closure(&[r(&y1(false)), r(&qe2().mul(&e(-1)))], 3, w);
    let km1 = r(&q()).sub(&Uea::constant(ratio(1, 3))).mul(&Uea::gen(-1));
    let lm1 = submodule_closure(&[km1, r(&qe2().mul(&e(-1)))], 3, w);
    for mu in -1..=w {
        for b in l1.at(mu).basis() {
            let img = big_rep(&b);
            t.ensure(img.is_zero(), || format!("π_Λ({b}) = {img} in L_1"));
        }
        if mu >= 0 {
            let target = Weyl::term(mu as u32, 0, y_poly(Var::BigLambda));
            on_line(t, &format!("L_0 at weight {mu}"), &l0.at(mu), &target);
        }
        let shift = q_poly(Var::BigLambda) - Poly::constant(ratio(1, 3));
        let target = gen_image(mu as i32, &Poly::var(Var::BigLambda)).scale(&shift);
        on_line(t, &format!("L_-1 at weight {mu}"), &lm1.at(mu), &target);
    }
    Ok(())
}

fn lws_sym2(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for mu in -2..=10 {
        let d = lws(2, mu, Filter::SymImage(2)).dim();
        let want = usize::from(mu % 2 == 0);
        t.ensure(d == want, || format!("lowest weight dim {d} on sym_2 at weight {mu}, expected {want}"));
    }
    Ok(())
}

fn lws_u3(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let got: Vec<usize> = (-3..=2).map(|mu| lws(3, mu, Filter::Full).dim()).collect();
    let want = vec![1, 1, 2, 3, 1, 2];
    t.ensure(got == want, || format!("lowest weight dims of U_3 at -3..2: {got:?}, expected {want:?}"));
    Ok(())
}

fn hws_sym3(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let mut found = Vec::new();
    for mu in -3..=cfg.max_weight.max(3) {
        let d = hws(3, mu, Filter::SymImage(3)).dim();
        for _ in 0..d {
            found.push(mu);
        }
    }
    t.ensure(found == vec![1, 3], || format!("highest weight lines of sym_3 at weights {found:?}"));
    Ok(())
}

/// Number of `k`-tuples of non-negative integers summing to `n`.
fn tuples(k: u64, n: u64) -> u64 {
    if k == 0 {
        return u64::from(n == 0);
    }
    (0..=n).map(|first| tuples(k - 1, n - first)).sum()
}

fn count_identities(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for k in 1..=6u64 {
        for n in 0..=12u64 {
            let brute = monomials_of(k as usize, n as i64 - k as i64, |_| true).len() as u64;
            t.ensure(p_count(k, n) == brute, || format!("p_{k}({n}) = {} vs {brute} monomials", p_count(k, n)));
            t.ensure(w_count(k, n) == tuples(k, n), || format!("w_{k}({n}) = {} vs {} tuples", w_count(k, n), tuples(k, n)));
            if n >= 1 {
                t.ensure(p_count(k, n) - p_count(k, n - 1) == q_count(k, n), || format!("p-q identity at k={k}, n={n}"));
                t.ensure(w_count(k, n) - w_count(k, n - 1) == t_count(k, n), || format!("w-t identity at k={k}, n={n}"));
            }
        }
    }
    Ok(())
}

fn sym_slice_dims(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for k in [2usize, 3] {
        for n in 0..=10i64 {
            let d = Slice::sym_image(k, n - k as i64).dim() as u64;
            let want = p_count(k as u64, n as u64);
            t.ensure(d == want, || format!("sym_{k} slice at weight {} has dim {d}, p_{k}({n}) = {want}", n - k as i64));
        }
    }
    Ok(())
}

fn ad_surjective(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for k in [2usize, 3] {
        for mu in (1 - k as i64)..=cfg.max_weight {
            let images: Vec<Uea<Rat>> =
                Subspace::whole(&Slice::sym_image(k, mu)).basis().iter().map(|b| b.ad_gen(-1)).collect();
            let target = Slice::sym_image(k, mu - 1);
            let got = Subspace::span(&target, &images)?;
            t.ensure(got.dim() == target.dim(), || {
                format!("ad(e_-1) image of sym_{k} at {mu} has dim {} of {}", got.dim(), target.dim())
            });
        }
    }
    Ok(())
}

fn zero_sum(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for k in [2usize, 3] {
        for mu in -(k as i64)..=cfg.max_weight {
            let slice = Slice::sym_image(k, mu);
            let mut sums = Vec::new();
            for m in slice.basis() {
                let lifted = crate::uea::sym::sym_mono(m);
                let img = lifted.ad_gen(-1);
                let symbol = proj_top(&img, k)?;
                t.ensure(sym_k(&symbol, k)? == img, || format!("ad(e_-1) sym({m}) is not symmetric"));
                let total: Rat = symbol.terms().map(|(_, c)| c.clone()).fold(rat(0), |a, b| a + b);
                sums.push(total);
            }
            t.ensure(sums.windows(2).all(|w| w[0] == w[1]), || {
                format!("coefficient sums of ad(e_-1) images differ on sym_{k} at weight {mu}: {sums:?}")
            });
        }
    }
    Ok(())
}

//! The `core` suite: named elements, their defining identities and their
//! images in the density representations.

use crate::arith::{q_poly, ratio, y_poly, Coeff, Poly, Rat, Var};
use crate::error::Error;
use crate::report::Tally;
use crate::slices::{lws, Filter, Slice};
use crate::uea::named::{q, qe2, s, s_minus, y, z};
use crate::uea::sym::sym_mono;
use crate::uea::{nf_word, Mono, Uea, UeaElt};
use crate::weyl::{rep, LambdaSpec, Weyl};
use crate::witt::{bracket, GenIndex, LieElt};

use super::support::{e, em1_sq, multiple_of, p, poly_ratio, r, same};
use super::{CheckDef, RunConfig};

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef::new("core/step-element", "ad(S) raises lowest weight vectors by two", step_element),
        CheckDef::new("core/Q-from-S-stated", "Q = -1/48 ad(S) e_-1^2 with the constant as stated", q_from_s_stated),
        CheckDef::new("core/Qe2-from-S-stated", "Qe2 = -1/96 ad(S)^2 e_-1^2 with the constant as stated", qe2_from_s_stated),
        CheckDef::new("core/step-constants", "Q = -1/24 ad(S) e_-1^2 and Qe2 = -1/48 ad(S)^2 e_-1^2", step_constants),
        CheckDef::new("core/ad-e1-Y", "ad(e_1) Y = 1/2 Qe2 e_-1, ad(e_1) Q = 0, ad(e_-1) Qe2 = 0", ad_e1_y),
        CheckDef::new("core/transpose-parity", "Q, Z, Y transpose with signs +, +, -; parity on symmetric tensors", transpose_parity),
        CheckDef::new("core/rep-identities", "images of Q, Z, Y, Qe2 in the density representations", rep_identities),
        CheckDef::new("core/lowest-weight-action-table", "the eight lowest weight elements of U_3 of weight ≤ 1 and their actions", action_table),
        CheckDef::new("core/sym-formulas", "quadratic and cubic symmetrization formulas for -1 ≤ a, b ≤ 4", sym_formulas),
        CheckDef::new("core/q-times-x-power", "π_λ(e_n e_0 - e_n - e_{n+1} e_-1) = q(λ)(n+1) x^n", q_times_x_power),
        CheckDef::new("core/algebra-axioms", "antisymmetry, Jacobi, grading and the bracket in U", algebra_axioms),
    ]
}

fn lws_rat(theta: &Uea<Rat>) -> bool {
    theta.ad_gen(-1).is_zero()
}

fn step_element(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let step = r(&s());
    let mut tested = 0;
    for (k, filter) in [(2, Filter::SymImage(2)), (3, Filter::Full)] {
        for mu in -(k as i64)..=cfg.max_weight - 2 {
            for v in lws(k, mu, filter).basis() {
                let img = step.ad(&v);
                tested += 1;
                t.ensure(lws_rat(&img), || format!("ad(S) of lowest weight {v} is not lowest weight: {img}"));
                if k == 2 {
                    t.ensure(!img.is_zero(), || format!("ad(S) kills {v}"));
                }
            }
        }
    }
    let printed = r(&s_minus()).ad(&r(&em1_sq()));
    t.ensure(!lws_rat(&printed), || "2e_2(2e_0-1)-3e_1^2 unexpectedly raises e_-1^2 to a lowest weight vector".into());
    t.note(format!("{tested} lowest weight vectors raised; ad(2e_2(2e_0-1)-3e_1^2) e_-1^2 = {printed} is not lowest weight"));
    Ok(())
}

fn stated(t: &mut Tally, what: &str, got: &UeaElt, target: &UeaElt, constant: Rat) {
    let scaled = got.scale_rat(&constant);
    if !same(t, what, &scaled, target) {
        if let Some(c) = multiple_of(target, got, poly_ratio) {
            t.note(format!("the constant that holds is {c}"));
        }
    }
}

fn q_from_s_stated(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let img = s().ad(&em1_sq());
    stated(t, "-1/48 ad(S) e_-1^2 = Q", &img, &q(), ratio(-1, 48));
    let printed = s_minus().ad(&em1_sq());
    stated(t, "-1/48 ad(2e_2(2e_0-1)-3e_1^2) e_-1^2 = Q", &printed, &q(), ratio(-1, 48));
    Ok(())
}

fn qe2_from_s_stated(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let img = s().ad_pow(2, &em1_sq());
    stated(t, "-1/96 ad(S)^2 e_-1^2 = Qe2", &img, &qe2(), ratio(-1, 96));
    let printed = s_minus().ad_pow(2, &em1_sq());
    stated(t, "-1/96 ad(2e_2(2e_0-1)-3e_1^2)^2 e_-1^2 = Qe2", &printed, &qe2(), ratio(-1, 96));
    Ok(())
}

fn step_constants(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    same(t, "-1/24 ad(S) e_-1^2", &s().ad(&em1_sq()).scale_rat(&ratio(-1, 24)), &q());
    same(t, "-1/48 ad(S)^2 e_-1^2", &s().ad_pow(2, &em1_sq()).scale_rat(&ratio(-1, 48)), &qe2());
    Ok(())
}

fn ad_e1_y(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let half = qe2().mul(&e(-1)).scale_rat(&ratio(1, 2));
    same(t, "ad(e_1) Y", &e(1).ad(&y()), &half);
    same(t, "ad(e_1) Q", &e(1).ad(&q()), &UeaElt::zero());
    same(t, "ad(e_-1) Qe2", &e(-1).ad(&qe2()), &UeaElt::zero());
    Ok(())
}

fn transpose_parity(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    same(t, "Q^T", &q().transpose(), &q());
    same(t, "Z^T", &z().transpose(), &z());
    same(t, "Y^T", &y().transpose(), &y().neg());
    same(t, "Qe2^T", &qe2().transpose(), &qe2());
    for k in 1..=cfg.max_degree.min(3) {
        for mu in -(k as i64)..=cfg.max_weight {
            let slice = Slice::sym_image(k, mu);
            let sign = Rat::from_int(if k % 2 == 0 { 1 } else { -1 });
            for m in slice.basis() {
                let v = sym_mono(m);
                same(t, &format!("transpose of sym({m})"), &v.transpose(), &v.scale(&sign));
                same(t, &format!("double transpose of sym({m})"), &v.transpose().transpose(), &v);
            }
            for v in lws(k, mu, Filter::Full).basis() {
                t.ensure(lws_rat(&v.transpose()), || format!("transpose of lowest weight {v} is not lowest weight"));
            }
        }
    }
    Ok(())
}

fn lam(v: Var) -> LambdaSpec {
    match v {
        Var::Lambda => LambdaSpec::FormalLambda,
        Var::BigLambda => LambdaSpec::FormalBigLambda,
    }
}

fn rep_identities(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let ql = q_poly(Var::Lambda);
    same(t, "π_λ(Q)", &rep(&q(), &lam(Var::Lambda))?, &Weyl::term(0, 0, ql.clone()));
    same(t, "π_λ(Z)", &rep(&z(), &lam(Var::Lambda))?, &Weyl::term(1, 0, ql));
    same(t, "π_Λ(Y)", &rep(&y(), &lam(Var::BigLambda))?, &Weyl::term(0, 0, y_poly(Var::BigLambda)));
    same(t, "π_Λ(Qe2)", &rep(&qe2(), &lam(Var::BigLambda))?, &Weyl::zero());
    Ok(())
}

fn action_table(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let one = Poly::from_int(1);
    let ql = q_poly(Var::BigLambda);
    let table: Vec<(&str, UeaElt, Weyl<Poly>)> = vec![
        ("e_-1^3", e(-1).pow(3), Weyl::term(0, 3, one.clone())),
        ("e_-1^2", em1_sq(), Weyl::term(0, 2, one.clone())),
        ("e_-1", e(-1), Weyl::term(0, 1, one.clone())),
        ("Q e_-1", q().mul(&e(-1)), Weyl::term(0, 1, ql.clone())),
        ("1", UeaElt::one(), Weyl::term(0, 0, one)),
        ("Q", q(), Weyl::term(0, 0, ql)),
        ("Y", y(), Weyl::term(0, 0, y_poly(Var::BigLambda))),
        ("Qe2 e_-1", qe2().mul(&e(-1)), Weyl::zero()),
    ];
    for (name, theta, want) in &table {
        same(t, &format!("π_Λ({name})"), &rep(theta, &LambdaSpec::FormalBigLambda)?, want);
    }
    for mu in -3..=1 {
        let here: Vec<Uea<Rat>> =
            table.iter().map(|(_, x, _)| r(x)).filter(|x| x.weight() == Some(mu)).collect();
        let want = lws(3, mu, Filter::Full);
        let got = crate::slices::Subspace::span(want.slice(), &here)?;
        t.ensure(got == want && got.dim() == here.len(), || {
            format!("listed elements of weight {mu} span dim {} of the lowest weight space of dim {}", got.dim(), want.dim())
        });
    }
    Ok(())
}

fn sym_formulas(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let term = |idx: &[i32]| sym_mono(&Mono::sorted(idx));
    for a in -1..=4i32 {
        for b in -1..=4i32 {
            let mut rhs = term(&[a, b]);
            if a != b {
                rhs = rhs.add(&term(&[a + b]).scale(&ratio((b - a) as i64, 2)));
            }
            same(t, &format!("e_{a} e_{b}"), &nf_word(&[a, b]).to_rat().expect("rational"), &rhs);

            let mut rhs = term(&[a, b, b]);
            if a != b {
                rhs = rhs.add(&term(&[b, a + b]).scale(&Rat::from_int((b - a) as i64)));
            }
            let c = ratio(-(a as i64) * (b - a) as i64, 6);
            if c != ratio(0, 1) {
                rhs = rhs.add(&term(&[a + 2 * b]).scale(&c));
            }
            same(t, &format!("e_{a} e_{b}^2"), &nf_word(&[a, b, b]).to_rat().expect("rational"), &rhs);
        }
    }
    Ok(())
}

fn q_times_x_power(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for n in 0..=6i32 {
        let theta = nf_word(&[n, 0]).sub(&e(n)).sub(&nf_word(&[n + 1, -1]));
        let want = Weyl::term(n as u32, 0, q_poly(Var::Lambda) * p(n as i64 + 1));
        same(t, &format!("π_λ(e_{n} e_0 - e_{n} - e_{} e_-1)", n + 1), &rep(&theta, &LambdaSpec::FormalLambda)?, &want);
    }
    Ok(())
}

fn lie(n: i64) -> Result<LieElt<Rat>, Error> {
    Ok(LieElt::basis(GenIndex::new(n)?))
}

fn algebra_axioms(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let range = -1..=5i64;
    for a in range.clone() {
        for b in range.clone() {
            let (x, y) = (lie(a)?, lie(b)?);
            let xy = bracket(&x, &y);
            t.ensure(xy.add(&bracket(&y, &x)).is_zero(), || format!("[e_{a}, e_{b}] is not antisymmetric"));
            let want = if a + b >= -1 { lie(a + b)?.scale(&Rat::from_int(b - a)) } else { LieElt::zero() };
            t.ensure(xy == want, || format!("[e_{a}, e_{b}] = {xy}"));
            let u = Uea::<Rat>::gen(a as i32).commutator(&Uea::gen(b as i32));
            same(t, &format!("e_{a} e_{b} - e_{b} e_{a} in U"), &u, &Uea::from_lie(&want));
            for c in range.clone() {
                let z = lie(c)?;
                let jac = bracket(&x, &bracket(&y, &z))
                    .add(&bracket(&y, &bracket(&z, &x)))
                    .add(&bracket(&z, &bracket(&x, &y)));
                t.ensure(jac.is_zero(), || format!("Jacobi fails on e_{a}, e_{b}, e_{c}"));
                let (ua, ub, uc) = (e(a as i32), e(b as i32), e(c as i32));
                t.ensure(ua.mul(&ub).mul(&uc) == ua.mul(&ub.mul(&uc)), || format!("associativity fails on e_{a} e_{b} e_{c}"));
            }
        }
    }
    for n in -1..=10 {
        let got = bracket(&lie(0)?, &lie(n)?);
        t.ensure(got == lie(n)?.scale(&Rat::from_int(n)), || format!("[e_0, e_{n}] = {got}"));
    }
    Ok(())
}

//! Identities relating the annihilator generators to other known families of
//! elements: lowest-weight descents of quadratic and cubic generators, and
//! the binomial two-factor operators `Ω^(m)_(k,s)`.

use crate::arith::{q_poly, rat, ratio, Poly, Rat, Var};
use crate::error::Error;
use crate::report::Tally;
use crate::slices::{submodule_closure, Slice, Subspace};
use crate::uea::named::{g_sw, h0_sw, h1_sw, omega, q, qe2, s, y, z};
use crate::uea::sym::{proj_top, sym_k, SymElt};
use crate::uea::{Mono, Uea, UeaElt};
use crate::weyl::{rep, LambdaSpec};

use super::support::{e, em1_sq, multiple_of, p, r, rat_ratio, same};
use super::{CheckDef, RunConfig};

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef::new("related-sw/g-to-Qe2", "ad(e_-1)^4 g = 24 Qe2 and g is symmetric", g_to_qe2),
        CheckDef::new("related-sw/h0-to-Z", "ad(e_-1)^3 h0 = -24 Z and h0 is symmetric", h0_to_z),
        CheckDef::new("related-sw/h1-identity", "ad(e_-1)^5 h1 = 720(Q - q(λ))e_0 - 480(Y - (λ-1/2)Q) over λ", h1_identity),
        CheckDef::new("related-sw/sym-forms", "symmetric form of h1 and its cubic symbol descent", sym_forms),
        CheckDef::new("related-bf/omega-recursion", "ad(e_-1) Ω^(m)_(k,s) = (k+1-m) Ω^(m)_(k-1,s) + (s+1) Ω^(m)_(k,s-1)", omega_recursion),
        CheckDef::new("related-bf/omega-bottom", "Ω^(m)_(m-1,-1) vanishes for odd m ≥ 3 and is lowest weight for even m", omega_bottom),
        CheckDef::new("related-bf/h-omega-span", "H_2l is spanned by the Ω^(m)_(k,s) with m ≥ 2l+1", h_omega_span),
    ]
}

fn symmetric(t: &mut Tally, name: &str, x: &UeaElt, mu: i64) {
    let ok = Slice::sym_image(2, mu).coords(&r(x)).is_ok();
    t.ensure(ok, || format!("{name} = {x} is not in sym_2"));
}

fn g_to_qe2(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    same(t, "ad(e_-1)^4 g", &e(-1).ad_pow(4, &g_sw()), &qe2().scale(&p(24)));
    symmetric(t, "g", &g_sw(), 6);
    Ok(())
}

fn h0_to_z(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    same(t, "ad(e_-1)^3 h0", &e(-1).ad_pow(3, &h0_sw()), &z().scale(&p(-24)));
    symmetric(t, "h0", &h0_sw(), 4);
    Ok(())
}

fn half_shift() -> Poly {
    Poly::var(Var::Lambda) - Poly::constant(ratio(1, 2))
}

fn h1_identity(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let ql = UeaElt::constant(q_poly(Var::Lambda));
    let want = q()
        .sub(&ql)
        .mul(&e(0))
        .scale(&p(720))
        .sub(&y().sub(&q().scale(&half_shift())).scale(&p(480)));
    same(t, "ad(e_-1)^5 h1", &e(-1).ad_pow(5, &h1_sw()), &want);
    let img = rep(&h1_sw(), &LambdaSpec::FormalLambda)?;
    t.ensure(img.is_zero(), || format!("π_λ(h1) = {img}"));
    Ok(())
}

fn sym_of(factors: &[(&[i32], Poly)]) -> Result<UeaElt, Error> {
    let mut out = UeaElt::zero();
    for (idx, c) in factors {
        let mut s = SymElt::<Poly>::zero();
        s.add_term(Mono::sorted(idx), c.clone());
        out = out.add(&sym_k(&s, idx.len())?);
    }
    Ok(out)
}

/// `ad(e_-1)` on `S^k` as the derivation `e_n ↦ (n+1) e_{n-1}`.
fn lower(x: &SymElt<Rat>) -> SymElt<Rat> {
    let mut out = SymElt::zero();
    for (m, c) in x.terms() {
        let idx = m.indices();
        for i in 0..idx.len() {
            let n = idx[i];
            if n == -1 {
                continue;
            }
            let mut moved = idx.to_vec();
            moved[i] = n - 1;
            out.add_term(Mono::sorted(&moved), c.clone() * rat(n as i64 + 1));
        }
    }
    out
}

fn sym_forms(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let c = half_shift();
    let shift = q_poly(Var::Lambda) - Poly::constant(ratio(1, 3));
    let form = sym_of(&[
        (&[1, 2, 2], p(1)),
        (&[1, 1, 3], p(-1)),
        (&[2, 3], c.clone() * p(2)),
        (&[1, 4], -(c * p(2))),
        (&[5], -shift),
    ])?;
    same(t, "sym form of h1", &form, &h1_sw());

    let mut x = SymElt::<Rat>::zero();
    x.add_term(Mono::sorted(&[1, 2, 2]), rat(1));
    x.add_term(Mono::sorted(&[1, 1, 3]), rat(-1));
    let mut down = x.clone();
    for _ in 0..5 {
        down = lower(&down);
    }
    let mut want = SymElt::<Rat>::zero();
    want.add_term(Mono::sorted(&[0, 0, 0]), rat(240));
    want.add_term(Mono::sorted(&[2, -1, -1]), rat(-240));
    same(t, "ad(e_-1)^5 (e_1 e_2^2 - e_1^2 e_3) in S^3", &down, &want);

    let via_u = proj_top(&sym_k(&x, 3)?.ad_gen(-1).ad_gen(-1).ad_gen(-1).ad_gen(-1).ad_gen(-1), 3)?;
    same(t, "the same descent computed in U", &via_u, &want);

    let lifted = r(&q().mul(&e(0)).scale(&p(3)).sub(&y().scale(&p(2)))).scale(&rat(240));
    same(t, "symbol of 240(3Q e_0 - 2Y)", &proj_top(&lifted, 3)?, &want);
    Ok(())
}

fn omega_r(m: i64, k: i64, s: i64) -> Result<Uea<Rat>, Error> {
    Ok(r(&omega(m, k, s)?))
}

fn omega_recursion(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let mut count = 0;
    for m in 0..=6i64 {
        for k in (m - 1)..=8 {
            for s in -1..=8i64 {
                let lhs = omega_r(m, k, s)?.ad_gen(-1);
                let mut rhs = Uea::zero();
                if k + 1 - m > 0 {
                    rhs = rhs.add(&omega_r(m, k - 1, s)?.scale(&rat(k + 1 - m)));
                }
                if s + 1 > 0 {
                    rhs = rhs.add(&omega_r(m, k, s - 1)?.scale(&rat(s + 1)));
                }
                same(t, &format!("ad(e_-1) Ω^({m})_({k},{s})"), &lhs, &rhs);
                count += 1;
            }
        }
    }
    t.note(format!("{count} admissible triples checked"));
    Ok(())
}

fn omega_bottom(_: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    for m in [3, 5] {
        let o = omega_r(m, m - 1, -1)?;
        t.ensure(o.is_zero(), || format!("Ω^({m})_({},-1) = {o}", m - 1));
    }
    same(t, "Ω^(2)_(1,-1)", &omega_r(2, 1, -1)?, &r(&q()).scale(&rat(-2)));
    let step = r(&s());
    let e2 = r(&em1_sq());
    for m in [2, 4, 6] {
        let o = omega_r(m, m - 1, -1)?;
        let target = step.ad_pow((m / 2) as usize, &e2);
        match multiple_of(&o, &target, rat_ratio) {
            Some(c) if c != rat(0) => t.note(format!("Ω^({m})_({},-1) = {c} ad(S)^{} e_-1^2", m - 1, m / 2)),
            _ => t.fail(format!("Ω^({m})_({},-1) = {o} is not a nonzero multiple of ad(S)^{} e_-1^2", m - 1, m / 2)),
        }
    }
    Ok(())
}

fn omegas(l: i64, w: i64) -> Result<Vec<Uea<Rat>>, Error> {
    let mut out = Vec::new();
    for s in -1..=(w - 2 * l) {
        let k = w - s;
        for m in (2 * l + 1)..=(k + 1) {
            out.push(omega_r(m, k, s)?);
        }
    }
    Ok(out)
}

fn symbols(elems: &[Uea<Rat>], w: i64) -> Result<Subspace, Error> {
    let lifted = elems
        .iter()
        .map(|b| sym_k(&proj_top(b, 2)?, 2))
        .collect::<Result<Vec<_>, _>>()?;
    Subspace::span(&Slice::sym_image(2, w), &lifted)
}

fn h_omega_span(cfg: &RunConfig, t: &mut Tally) -> Result<(), Error> {
    let e2 = r(&em1_sq());
    let step = r(&s());
    for l in 0..=2i64 {
        let gen = if l == 0 { r(&z()) } else { step.ad_pow((l + 1) as usize, &e2) };
        let h = submodule_closure(&[gen], 2, cfg.max_weight);
        for w in -2..=cfg.max_weight {
            let om = omegas(l, w)?;
            let slice = Slice::full(2, w);
            let hw = h.at(w).transfer(&slice)?;
            if l == 0 {
                let (a, b) = (symbols(&om, w)?, symbols(&hw.basis(), w)?);
                t.ensure(a == b, || format!("H_0 and the Ω span differ on symbols at weight {w}"));
            } else {
                let os = Subspace::span(&slice, &om)?;
                t.ensure(os == hw, || format!("H_{} at weight {w}: Ω span dim {}, H dim {}", 2 * l, os.dim(), hw.dim()));
            }
        }
    }
    Ok(())
}

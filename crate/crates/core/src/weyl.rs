//! Tensor density representations as polynomial differential operators.
//!
//! Operators are kept in normal order `Σ c · x^a ∂^b`. The generator `e_n`
//! acts on densities of weight λ as `x^{n+1}∂ + λ(n+1)x^n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Coeff, Poly, Rat, Var};
use crate::error::Error;
use crate::uea::{Mono, Uea};

/// `(x-power, ∂-power)`.
pub type WeylMono = (u32, u32);

#[derive(Clone, PartialEq)]
pub struct Weyl<C: Coeff> {
    terms: BTreeMap<WeylMono, C>,
}

impl<C: Coeff> Default for Weyl<C> {
    fn default() -> Self {
        Weyl { terms: BTreeMap::new() }
    }
}

fn falling(c: u32, j: u32) -> i64 {
    (0..j).map(|i| (c - i) as i64).product()
}

impl<C: Coeff> Weyl<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, C::one())
    }

    pub fn x() -> Self {
        Self::term(1, 0, C::one())
    }

    pub fn d() -> Self {
        Self::term(0, 1, C::one())
    }

    pub fn term(a: u32, b: u32, c: C) -> Self {
        let mut out = Self::default();
        out.add_term((a, b), c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMono, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> C {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: WeylMono, c: C) {
        if c.is_zero() {
            return;
        }
        let s = self.coeff(m.0, m.1) + c;
        if s.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::default();
        for (m, d) in &self.terms {
            out.add_term(*m, d.clone() * c.clone());
        }
        out
    }

    /// Product of normal-ordered operators:
    /// `x^a∂^b · x^c∂^d = Σ_j C(b,j) c!/(c−j)! x^{a+c−j} ∂^{b+d−j}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a, b), u) in &self.terms {
            for (&(c, d), v) in &other.terms {
                let uv = u.clone() * v.clone();
                for j in 0..=b.min(c) {
                    let k = crate::arith::binomial(b as i64, j as i64) * falling(c, j);
                    out.add_term((a + c - j, b + d - j), uv.clone() * C::from_int(k));
                }
            }
        }
        out
    }

    /// Action on `x^μ`: `x^a ∂^b` sends it to `μ(μ−1)⋯(μ−b+1) x^{μ−b+a}`.
    pub fn apply(&self, mu: &Rat) -> BTreeMap<Rat, C> {
        let mut out: BTreeMap<Rat, C> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let mut f = Rat::from_integer(1.into());
            for i in 0..b {
                f *= mu - Rat::from_integer(i.into());
            }
            if num_traits::Zero::is_zero(&f) {
                continue;
            }
            let exp = mu - Rat::from_integer(b.into()) + Rat::from_integer(a.into());
            let v = c.scale(&f);
            let slot = out.entry(exp.clone()).or_insert_with(C::zero);
            *slot = slot.clone() + v;
            if slot.is_zero() {
                out.remove(&exp);
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Weyl<D> {
        let mut out = Weyl::<D>::default();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

/// Weight parameter of a tensor density module.
#[derive(Clone, Debug, PartialEq)]
pub enum LambdaSpec {
    Rational(Rat),
    FormalLambda,
    FormalBigLambda,
}

impl LambdaSpec {
    fn as_poly(&self) -> Poly {
        match self {
            LambdaSpec::Rational(v) => Poly::constant(v.clone()),
            LambdaSpec::FormalLambda => Poly::var(Var::Lambda),
            LambdaSpec::FormalBigLambda => Poly::var(Var::BigLambda),
        }
    }
}

/// Image of `e_n` with weight parameter `lam`.
pub fn gen_image<C: Coeff>(n: i32, lam: &C) -> Weyl<C> {
    let mut out = Weyl::term((n + 1) as u32, 1, C::one());
    if n >= 0 {
        out.add_term((n as u32, 0), lam.clone() * C::from_int((n + 1) as i64));
    }
    out
}

/// Image of a PBW monomial.
pub fn mono_image<C: Coeff>(m: &Mono, lam: &C) -> Weyl<C> {
    let mut out = Weyl::one();
    for &n in m.indices() {
        out = out.mul(&gen_image(n, lam));
    }
    out
}

/// Representation with the weight parameter taken from the coefficient ring.
pub fn rep_with<C: Coeff>(theta: &Uea<C>, lam: &C) -> Weyl<C> {
    let mut out = Weyl::zero();
    for (m, c) in theta.terms() {
        out = out.add(&mono_image(m, lam).scale(c));
    }
    out
}

/// `π(θ)` for the given weight. A rational weight also specializes any λ in
/// the coefficients of `θ`; the formal Λ may not appear in `θ` when it is the
/// representation parameter.
pub fn rep(theta: &Uea<Poly>, spec: &LambdaSpec) -> Result<Weyl<Poly>, Error> {
    let theta = match spec {
        LambdaSpec::FormalBigLambda if theta.involves(Var::BigLambda) => {
            return Err(Error::IndeterminateClash("Λ"));
        }
        LambdaSpec::Rational(v) => theta.eval(&[(Var::Lambda, v.clone())]),
        _ => theta.clone(),
    };
    Ok(rep_with(&theta, &spec.as_poly()))
}

/// `π_v(θ)` for rational θ and rational weight `v`.
pub fn rep_rat(theta: &Uea<Rat>, v: &Rat) -> Weyl<Rat> {
    rep_with(theta, v)
}

/// Top component for the filtration by `deg_Λ + ∂-degree`.
pub fn lam_deg_symbol(w: &Weyl<Poly>) -> Result<Weyl<Poly>, Error> {
    let mut pieces: Vec<(u32, WeylMono, u32, Rat)> = Vec::new();
    for (&(a, b), c) in w.terms() {
        if c.involves(Var::Lambda) {
            return Err(Error::IndeterminateClash("λ"));
        }
        for (&(_, e), r) in c.terms() {
            pieces.push((e + b, (a, b), e, r.clone()));
        }
    }
    let Some(top) = pieces.iter().map(|p| p.0).max() else {
        return Ok(Weyl::zero());
    };
    let mut out = Weyl::zero();
    for (t, m, e, r) in pieces {
        if t == top {
            out.add_term(m, Poly::monomial(Var::BigLambda, e, r));
        }
    }
    Ok(out)
}

impl<C: Coeff> fmt::Display for Weyl<C> {
    /// Terms ordered by total degree, then x-degree, both descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by(|((a1, b1), _), ((a2, b2), _)| (a2 + b2, a2).cmp(&(a1 + b1, a1)));
        for (i, (&(a, b), c)) in order.into_iter().enumerate() {
            let (neg, mag) = c.signed_parts();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            match a {
                0 => {}
                1 => factors.push("x".to_string()),
                _ => factors.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("d".to_string()),
                _ => factors.push(format!("d^{b}")),
            }
            let op = factors.join(" ");
            match (op.is_empty(), mag == "1") {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{op}")?,
                (false, false) => write!(f, "{mag} * {op}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Weyl<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weyl({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    use num_traits::One;

    type W = Weyl<Rat>;

    #[test]
    fn normal_ordering_examples() {
        assert_eq!(W::d().mul(&W::x()), W::term(1, 1, rat(1)).add(&W::one()));
        let x2 = W::term(2, 0, rat(1));
        let d2 = W::term(0, 2, rat(1));
        assert_eq!(x2.mul(&d2), W::term(2, 2, rat(1)));
        assert_eq!(d2.mul(&W::x()), W::term(1, 2, rat(1)).add(&W::term(0, 1, rat(2))));
    }

    #[test]
    fn apply_examples() {
        assert!(W::d().apply(&rat(0)).is_empty());
        let euler = W::term(1, 1, rat(1));
        let got = euler.apply(&ratio(7, 3));
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![(ratio(7, 3), ratio(7, 3))]);
        let e2 = gen_image(2, &rat(3));
        let got = e2.apply(&ratio(1, 2));
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![(ratio(5, 2), ratio(19, 2))]);
    }

    #[test]
    fn rendering() {
        let op = W::term(1, 1, rat(1)).add(&W::term(0, 0, rat(-2))).add(&W::term(3, 0, ratio(1, 2)));
        assert_eq!(op.to_string(), "1/2 * x^3 + x d - 2");
    }

    #[test]
    fn symbol_of_euler() {
        let e0 = rep(&Uea::gen(0), &LambdaSpec::FormalBigLambda).unwrap();
        let want = Weyl::term(1, 1, Poly::one()).add(&Weyl::term(0, 0, Poly::var(Var::BigLambda)));
        assert_eq!(lam_deg_symbol(&e0).unwrap(), want);
        let x3 = Weyl::term(3, 0, Poly::one());
        assert_eq!(lam_deg_symbol(&x3).unwrap(), x3);
    }

    #[test]
    fn clash_is_rejected() {
        let theta = Uea::constant(Poly::var(Var::BigLambda));
        assert_eq!(rep(&theta, &LambdaSpec::FormalBigLambda), Err(Error::IndeterminateClash("Λ")));
    }
}

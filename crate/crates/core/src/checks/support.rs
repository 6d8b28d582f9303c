use std::fmt::Display;

use num_traits::Zero;

use crate::arith::{Coeff, Poly, Rat};
use crate::report::Tally;
use crate::slices::{Slice, Subspace};
use crate::uea::{Uea, UeaElt};

pub fn r(x: &UeaElt) -> Uea<Rat> {
    x.to_rat().expect("element has rational coefficients")
}

pub fn e(n: i32) -> UeaElt {
    Uea::gen(n)
}

pub fn p(n: i64) -> Poly {
    Poly::from_int(n)
}

pub fn em1_sq() -> UeaElt {
    e(-1).mul(&e(-1))
}

/// Asserts `got == want`, rendering both on failure.
pub fn same<T: PartialEq + Display>(t: &mut Tally, what: &str, got: &T, want: &T) -> bool {
    t.ensure(got == want, || format!("{what}: got {got}, expected {want}"))
}

/// The scalar `c` with `a = c·b`, if there is one.
pub fn multiple_of<C: Coeff>(a: &Uea<C>, b: &Uea<C>, ratio: impl Fn(&C, &C) -> Option<Rat>) -> Option<Rat> {
    let (m, cb) = b.terms().next()?;
    let c = ratio(&a.coeff(m), cb)?;
    (a == &b.scale_rat(&c)).then_some(c)
}

pub fn rat_ratio(a: &Rat, b: &Rat) -> Option<Rat> {
    (!b.is_zero()).then(|| a / b)
}

pub fn poly_ratio(a: &Poly, b: &Poly) -> Option<Rat> {
    let (key, cb) = b.terms().next()?;
    let ca = a.terms().find(|(k, _)| *k == key).map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero);
    Some(ca / cb)
}

/// Span of `elems` in the full degree-`k` weight-`mu` slice.
pub fn span(k: usize, mu: i64, elems: &[Uea<Rat>]) -> Subspace {
    let slice = Slice::full(k, mu);
    Subspace::span(&slice, elems).expect("elements lie in the slice")
}

pub fn transpose_space(s: &Subspace) -> Subspace {
    let b: Vec<Uea<Rat>> = s.basis().iter().map(|x| x.transpose()).collect();
    Subspace::span(s.slice(), &b).expect("transpose preserves degree and weight")
}

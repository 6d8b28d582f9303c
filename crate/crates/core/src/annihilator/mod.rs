//! Annihilators of tensor density modules and of their relatives, computed
//! slice by slice as exact kernels, together with slices of two-sided ideals.

pub mod machine;

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::arith::{Coeff, Poly, Rat, Var};
use crate::linalg::{Echelon, SparseVec};
use crate::slices::{submodule_closure, Filter, Indexer, Slice, SliceRef, Subspace};
use crate::uea::{monomials_of, Mono, Uea};
use crate::weyl::{rep_rat, rep_with, LambdaSpec};

pub use machine::{machine_check, IRecipe, JPattern, MachineConfig};

/// The module whose annihilator is wanted.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleSpec {
    /// `F_λ = dx^λ C[x]`.
    Poly(LambdaSpec),
    /// The quotient of the Laurent module by `F_λ`, spanned by negative powers.
    NegPoly(Rat),
    /// `dx^λ x^a C[x, x^-1]`.
    Offset { a: Rat, lambda: Rat },
    /// `F_Λ` over a formal Λ.
    Universal,
    /// The trivial module plus `F_λ`.
    AugPlus(Rat),
}

impl ModuleSpec {
    pub fn poly(v: Rat) -> Self {
        ModuleSpec::Poly(LambdaSpec::Rational(v))
    }

    pub fn label(&self) -> String {
        match self {
            ModuleSpec::Poly(LambdaSpec::Rational(v)) => format!("F_{v}"),
            ModuleSpec::Poly(LambdaSpec::FormalLambda) => "F_λ".into(),
            ModuleSpec::Poly(LambdaSpec::FormalBigLambda) | ModuleSpec::Universal => "F_Λ".into(),
            ModuleSpec::NegPoly(v) => format!("F-_{v}"),
            ModuleSpec::Offset { a, lambda } => format!("F_({a},{lambda})"),
            ModuleSpec::AugPlus(v) => format!("C+F_{v}"),
        }
    }
}

/// Coordinates of a module image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    /// Coefficient of `λ^i Λ^j x^a ∂^b`.
    Op(u32, u32, u32, u32),
    /// Coefficient of the output monomial for the given sample exponent.
    Sample(usize, Rat),
    Counit,
}

fn rat_of(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Exponents `m` at which the action of a weight-`mu`, degree ≤ `k` element
/// is sampled. On every listed module the action on `x^m` is a polynomial in
/// `m` of degree ≤ `k`, so `k + |mu| + 1` points determine it.
fn sample_exponents(spec: &ModuleSpec, k: usize, mu: i64) -> Vec<Rat> {
    let n = k as i64 + mu.abs();
    match spec {
        ModuleSpec::NegPoly(_) => {
            let top = (-1).min(-1 - mu);
            (0..=n).map(|i| rat_of(top - i)).collect()
        }
        ModuleSpec::Offset { a, .. } => (-n..=n).map(|i| a + rat_of(i)).collect(),
        _ => Vec::new(),
    }
}

fn op_entries(w: impl Iterator<Item = ((u32, u32), Poly)>) -> Vec<(Key, Rat)> {
    let mut out = Vec::new();
    for ((a, b), c) in w {
        for (&(i, j), r) in c.terms() {
            out.push((Key::Op(i, j, a, b), r.clone()));
        }
    }
    out
}

fn image(spec: &ModuleSpec, theta: &Uea<Rat>, samples: &[Rat]) -> Vec<(Key, Rat)> {
    let rational = |v: &Rat| -> Vec<(Key, Rat)> {
        rep_rat(theta, v).terms().map(|(&(a, b), c)| (Key::Op(0, 0, a, b), c.clone())).collect()
    };
    let formal = |var: Var| {
        let op = rep_with(&theta.to_poly(), &Poly::var(var));
        op_entries(op.terms().map(|(m, c)| (*m, c.clone())))
    };
    match spec {
        ModuleSpec::Poly(LambdaSpec::Rational(v)) => rational(v),
        ModuleSpec::Poly(LambdaSpec::FormalLambda) => formal(Var::Lambda),
        ModuleSpec::Poly(LambdaSpec::FormalBigLambda) | ModuleSpec::Universal => formal(Var::BigLambda),
        ModuleSpec::AugPlus(v) => {
            let mut out = rational(v);
            out.push((Key::Counit, theta.counit()));
            out
        }
        ModuleSpec::NegPoly(v) | ModuleSpec::Offset { lambda: v, .. } => {
            let op = rep_rat(theta, v);
            let keep_negative = matches!(spec, ModuleSpec::NegPoly(_));
            let mut out = Vec::new();
            for (i, m) in samples.iter().enumerate() {
                for (exp, c) in op.apply(m) {
                    if keep_negative && exp >= Rat::zero() {
                        continue;
                    }
                    out.push((Key::Sample(i, exp), c));
                }
            }
            out
        }
    }
}

/// Scalar by which `theta` acts on the trivial module.
pub fn counit<C: Coeff>(theta: &Uea<C>) -> C {
    theta.counit()
}

/// `Ann(m) ∩ U_k` at weight `mu`.
pub fn ann_slice(m: &ModuleSpec, k: usize, mu: i64) -> Subspace {
    ann_slice_in(m, &Slice::full(k, mu))
}

/// The annihilator of `m` inside an arbitrary slice.
pub fn ann_slice_in(m: &ModuleSpec, slice: &SliceRef) -> Subspace {
    let samples = sample_exponents(m, slice.k(), slice.mu());
    let mut ix = Indexer::<Key>::new();
    Subspace::whole(slice).kernel_of(|t| ix.vec(image(m, t, &samples)))
}

/// Rank of the module images of `elems`.
pub fn image_rank(m: &ModuleSpec, elems: &[Uea<Rat>], k: usize, mu: i64) -> usize {
    let samples = sample_exponents(m, k, mu);
    let mut ix = Indexer::<Key>::new();
    let mut e = Echelon::new();
    for t in elems {
        e.insert(&ix.vec(image(m, t, &samples)));
    }
    e.rank()
}

/// Echelon basis of `span(elems) ∩ U_j`. Columns follow the canonical term
/// order, which puts higher degree first, so the rows whose leading
/// monomial has degree ≤ `j` span the intersection.
pub fn filtration_part(elems: &[Uea<Rat>], j: usize) -> Vec<Uea<Rat>> {
    let monos: BTreeSet<Mono> = elems.iter().flat_map(|e| e.terms().map(|(m, _)| m.clone())).collect();
    let monos: Vec<Mono> = monos.into_iter().collect();
    let col = |m: &Mono| monos.binary_search(m).expect("collected above");
    let mut e = Echelon::new();
    for t in elems {
        let mut v: SparseVec = t.terms().map(|(m, c)| (col(m), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        e.insert(&v);
    }
    e.rref()
        .into_iter()
        .filter(|r| monos[r[0].0].degree() <= j)
        .map(|r| {
            let mut out = Uea::zero();
            for (i, c) in r {
                out.add_term(monos[i].clone(), c);
            }
            out
        })
        .collect()
}

/// Extra degree allowed for intermediate products in [`ideal_slice`].
pub const DEFAULT_SLACK: usize = 2;

/// `⟨gens⟩ ∩ U_k` at weight `mu`, as [`IdealSlicer`] with
/// [`DEFAULT_SLACK`].
pub fn ideal_slice(gens: &[Uea<Rat>], k: usize, mu: i64) -> Subspace {
    ideal_slice_with(gens, k, mu, DEFAULT_SLACK)
}

pub fn ideal_slice_with(gens: &[Uea<Rat>], k: usize, mu: i64, slack: usize) -> Subspace {
    IdealSlicer::new(gens, k, mu, slack).slice(k, mu)
}

/// Lower bounds for `⟨gens⟩ ∩ U_k` at weight `mu`: the degree-≤ `k` part of
/// the span of `h·b`, where `h` runs over the adjoint submodule generated by
/// `gens` and `b` over PBW monomials, with `deg h + deg b ≤ k + slack`.
///
/// Since `a h = h a + [a, h]`, these products span the two-sided ideal once
/// the degree bound is lifted; `slack` bounds the cancellation of top terms
/// that is taken into account. The adjoint closure is shared by all slices up
/// to the degree and weight given at construction.
pub struct IdealSlicer {
    parts: Vec<(i64, Vec<Uea<Rat>>)>,
    max_k: usize,
    max_mu: i64,
    slack: usize,
}

impl IdealSlicer {
    pub fn new(gens: &[Uea<Rat>], max_k: usize, max_mu: i64, slack: usize) -> Self {
        let gens: Vec<Uea<Rat>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let d = gens.iter().map(|g| g.degree()).max().unwrap_or(0);
        let top_weight = max_mu + (max_k + slack) as i64;
        let parts = if gens.is_empty() {
            Vec::new()
        } else {
            submodule_closure(&gens, d, top_weight)
                .parts
                .iter()
                .map(|(&w, part)| (w, filtration_part(&part.basis(), d)))
                .collect()
        };
        IdealSlicer { parts, max_k, max_mu, slack }
    }

    pub fn slice(&self, k: usize, mu: i64) -> Subspace {
        assert!(k <= self.max_k && mu <= self.max_mu, "slice beyond the prepared closure");
        let slice = Slice::full(k, mu);
        let budget = k + self.slack;
        let mut products = Vec::new();
        for (w, basis) in &self.parts {
            for h in basis {
                let dh = h.degree();
                if dh > budget {
                    continue;
                }
                for db in 0..=(budget - dh) {
                    for b in monomials_of(db, mu - w, |_| true) {
                        products.push(h.mul(&Uea::term(b, rat_of(1))));
                    }
                }
            }
        }
        let kept = filtration_part(&products, k);
        Subspace::span(&slice, &kept).expect("degree ≤ k part lies in the slice")
    }
}

/// Slices of the same subspace family in a shared ambient filter.
pub fn ambient_filter(ambient: crate::witt::SubalgebraId) -> Filter {
    match ambient {
        crate::witt::SubalgebraId::Full => Filter::Full,
        other => Filter::Sub(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q_of, rat};
    use crate::uea::named::{q, qe2, z};

    fn r(x: &crate::uea::UeaElt) -> Uea<Rat> {
        x.to_rat().unwrap()
    }

    #[test]
    fn counit_examples() {
        let t = Uea::<Rat>::one().add(&Uea::gen(0));
        assert_eq!(counit(&t), rat(1));
        assert!(counit(&r(&q())).is_zero());
        let shifted = r(&q()).sub(&Uea::constant(q_of(&rat(2))));
        assert_eq!(counit(&shifted), rat(-2));
    }

    #[test]
    fn small_annihilators() {
        let a = ann_slice(&ModuleSpec::poly(rat(0)), 2, 1);
        assert_eq!(a, Subspace::span(a.slice(), &[r(&z())]).unwrap());
        let a = ann_slice(&ModuleSpec::poly(rat(2)), 2, 0);
        let want = r(&q()).sub(&Uea::constant(rat(2)));
        assert_eq!(a, Subspace::span(a.slice(), &[want]).unwrap());
        for mu in -4..=4 {
            assert!(ann_slice(&ModuleSpec::poly(rat(2)), 1, mu).is_zero());
        }
    }

    #[test]
    fn trivial_ideal_slice() {
        let zr = r(&z());
        let got = ideal_slice(std::slice::from_ref(&zr), 2, 1);
        assert_eq!(got, Subspace::span(got.slice(), &[zr]).unwrap());
        let l1 = r(&qe2()).mul(&Uea::gen(-1));
        assert!(ideal_slice(&[r(&qe2())], 3, 1).contains(&l1).unwrap());
    }

    #[test]
    fn filtration_part_drops_top_degree() {
        let a = Uea::<Rat>::gen(0).mul(&Uea::gen(0)).add(&Uea::gen(0));
        let b = Uea::<Rat>::gen(0).mul(&Uea::gen(0));
        let got = filtration_part(&[a, b], 1);
        assert_eq!(got, vec![Uea::gen(0)]);
    }
}

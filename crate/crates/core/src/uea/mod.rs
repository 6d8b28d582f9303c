//! The universal enveloping algebra in PBW normal form.
//!
//! A PBW monomial is a product `e_{i_1} e_{i_2} ⋯ e_{i_k}` with
//! `i_1 ≥ i_2 ≥ ⋯ ≥ i_k ≥ -1`. Every element is stored as a sparse map from
//! monomials to coefficients and is kept normal-formed and free of zero terms.

pub mod named;
pub mod sym;

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use smallvec::SmallVec;

use crate::arith::{Coeff, Poly, Rat, Var};
use crate::error::Error;
use crate::witt::LieElt;

pub use named::Named;
pub use sym::{proj_top, sym_decompose, sym_k, SymElt};

/// Index sequence of a PBW monomial (non-increasing), or of a symmetric
/// monomial (a multiset, stored in the same non-increasing order).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    idx: SmallVec<[i32; 6]>,
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    /// Sorts the indices into PBW order. Only meaningful for symmetric
    /// monomials or when the caller knows the factors commute.
    pub fn sorted(indices: &[i32]) -> Self {
        let mut idx: SmallVec<[i32; 6]> = indices.iter().copied().collect();
        idx.sort_unstable_by(|a, b| b.cmp(a));
        Mono { idx }
    }

    /// Wraps an index sequence that is already non-increasing.
    pub fn from_ordered(indices: &[i32]) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] >= w[1]));
        Mono { idx: indices.iter().copied().collect() }
    }

    pub fn indices(&self) -> &[i32] {
        &self.idx
    }

    pub fn degree(&self) -> usize {
        self.idx.len()
    }

    pub fn weight(&self) -> i64 {
        self.idx.iter().map(|&i| i as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.idx.is_empty()
    }

    fn prepend(&self, a: i32) -> Mono {
        let mut idx = SmallVec::with_capacity(self.idx.len() + 1);
        idx.push(a);
        idx.extend_from_slice(&self.idx);
        Mono { idx }
    }

    fn tail(&self) -> Mono {
        Mono { idx: self.idx[1..].iter().copied().collect() }
    }
}

impl Ord for Mono {
    /// Canonical term order: degree descending, then weight ascending, then
    /// index sequences lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.weight().cmp(&other.weight()))
            .then_with(|| self.idx.as_slice().cmp(other.idx.as_slice()))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    /// `e_2 e_0^2 e_-1`; the empty monomial renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.idx.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.idx.len() {
            let n = self.idx[i];
            let run = self.idx[i..].iter().take_while(|&&m| m == n).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "e_{n}")?;
            } else {
                write!(f, "e_{n}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// All non-increasing index sequences of length `degree` with entries in
/// `allowed` summing to `weight`, in ascending lexicographic order.
pub fn monomials_of(degree: usize, weight: i64, allowed: impl Fn(i32) -> bool) -> Vec<Mono> {
    fn go(
        left: usize,
        remaining: i64,
        cap: i32,
        cur: &mut Vec<i32>,
        allowed: &dyn Fn(i32) -> bool,
        out: &mut Vec<Mono>,
    ) {
        if left == 0 {
            if remaining == 0 {
                out.push(Mono::from_ordered(cur));
            }
            return;
        }
        // Remaining factors are ≥ -1, so the next one is at most
        // `remaining + (left - 1)`; it also cannot exceed the previous one.
        let hi = (remaining + left as i64 - 1).min(cap as i64);
        let lo = (-(-remaining).div_euclid(left as i64)).max(-1);
        for n in lo..=hi {
            let n = n as i32;
            if !allowed(n) {
                continue;
            }
            cur.push(n);
            go(left - 1, remaining - n as i64, n, cur, allowed, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(degree, weight, i32::MAX, &mut Vec::new(), &allowed, &mut out);
    out.sort_by(|a, b| a.indices().cmp(b.indices()));
    out
}

// ---------------------------------------------------------------------------
// Normal form engine. Structure constants are integers, so products of
// monomials are integer combinations; they are memoized per thread.

type IntComb = Rc<Vec<(Mono, i128)>>;

thread_local! {
    static LEFT_MUL: RefCell<HashMap<(i32, Mono), IntComb>> = RefCell::new(HashMap::new());
    static MONO_MUL: RefCell<HashMap<(Mono, Mono), IntComb>> = RefCell::new(HashMap::new());
}

fn accumulate(acc: &mut HashMap<Mono, i128>, m: &Mono, c: i128) {
    if c == 0 {
        return;
    }
    let slot = acc.entry(m.clone()).or_insert(0);
    *slot += c;
}

fn finish(acc: HashMap<Mono, i128>) -> IntComb {
    let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    Rc::new(v)
}

/// `e_a · m` in normal form, using `e_a e_b = e_b e_a + (b - a) e_{a+b}`
/// whenever `a < b`.
fn left_mul(a: i32, m: &Mono) -> IntComb {
    if m.idx.first().is_none_or(|&b| a >= b) {
        return Rc::new(vec![(m.prepend(a), 1)]);
    }
    let key = (a, m.clone());
    if let Some(hit) = LEFT_MUL.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let b = m.idx[0];
    let rest = m.tail();
    let mut acc = HashMap::new();
    for (n, c) in left_mul(a, &rest).iter() {
        for (n2, c2) in left_mul(b, n).iter() {
            accumulate(&mut acc, n2, c * c2);
        }
    }
    let factor = (b - a) as i128;
    for (n, c) in left_mul(a + b, &rest).iter() {
        accumulate(&mut acc, n, factor * c);
    }
    let out = finish(acc);
    LEFT_MUL.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

fn mono_mul(x: &Mono, y: &Mono) -> IntComb {
    if x.is_one() {
        return Rc::new(vec![(y.clone(), 1)]);
    }
    if y.is_one() {
        return Rc::new(vec![(x.clone(), 1)]);
    }
    let key = (x.clone(), y.clone());
    if let Some(hit) = MONO_MUL.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut cur: Vec<(Mono, i128)> = vec![(y.clone(), 1)];
    for &a in x.idx.iter().rev() {
        let mut acc = HashMap::new();
        for (m, c) in &cur {
            for (n, d) in left_mul(a, m).iter() {
                accumulate(&mut acc, n, c * d);
            }
        }
        cur = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    }
    let mut acc = HashMap::new();
    for (m, c) in cur {
        accumulate(&mut acc, &m, c);
    }
    let out = finish(acc);
    MONO_MUL.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

fn int_coeff<C: Coeff>(c: i128) -> C {
    C::from_rat(Rat::from_integer(c.into()))
}

// ---------------------------------------------------------------------------

/// An element of U(Vec ℝ) with coefficients in `C`.
#[derive(Clone, PartialEq)]
pub struct Uea<C: Coeff> {
    terms: BTreeMap<Mono, C>,
}

/// Elements with coefficients in the universal coefficient ring.
pub type UeaElt = Uea<Poly>;

impl<C: Coeff> Default for Uea<C> {
    fn default() -> Self {
        Uea { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> Uea<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Mono::one(), c)
    }

    /// The generator `e_n`.
    pub fn gen(n: i32) -> Self {
        assert!(n >= -1, "generator index {n} is below -1");
        Self::term(Mono::from_ordered(&[n]), C::one())
    }

    /// `c · m` for a PBW monomial `m`.
    pub fn term(m: Mono, c: C) -> Self {
        let mut out = Self::default();
        out.add_term(m, c);
        out
    }

    /// Normal form of the word `e_{w_0} e_{w_1} ⋯`.
    pub fn word(word: &[i64]) -> Result<Self, Error> {
        let mut idx = Vec::with_capacity(word.len());
        for &w in word {
            idx.push(crate::witt::GenIndex::new(w)?.get());
        }
        Ok(nf_word_with(&idx))
    }

    pub fn from_lie(x: &LieElt<C>) -> Self {
        let mut out = Self::default();
        for (n, c) in x.terms() {
            out.add_term(Mono::from_ordered(&[n.get()]), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Maximal monomial degree; zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    /// Common weight of all terms, if homogeneous and nonzero.
    pub fn weight(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(Mono::weight);
        let w = it.next()?;
        it.all(|v| v == w).then_some(w)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::default();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d.clone() * c.clone());
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = Self::default();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d.scale(r));
        }
        out
    }

    /// Associative product, normal-formed.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.clone() * c2.clone();
                for (m, k) in mono_mul(m1, m2).iter() {
                    out.add_term(m.clone(), c.clone() * int_coeff::<C>(*k));
                }
            }
        }
        out
    }

    /// Left multiplication by a single generator, `e_a · self`.
    pub fn left_mul_gen(&self, a: i32) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            for (n, k) in left_mul(a, m).iter() {
                out.add_term(n.clone(), c.clone() * int_coeff::<C>(*k));
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `self·theta − theta·self`.
    pub fn commutator(&self, theta: &Self) -> Self {
        self.mul(theta).sub(&theta.mul(self))
    }

    /// `[e_n, self]`.
    pub fn ad_gen(&self, n: i32) -> Self {
        let mut out = self.left_mul_gen(n);
        let right = Mono::from_ordered(&[n]);
        for (m, c) in &self.terms {
            for (p, k) in mono_mul(m, &right).iter() {
                out.add_term(p.clone(), -(c.clone() * int_coeff::<C>(*k)));
            }
        }
        out
    }

    /// Adjoint action of `self` on `theta`, extended multiplicatively from
    /// Vec ℝ: a monomial `e_{i_1}⋯e_{i_k}` acts as `ad(e_{i_1})∘⋯∘ad(e_{i_k})`.
    /// For elements of degree ≤ 1 without constant term this is the
    /// commutator.
    pub fn ad(&self, theta: &Self) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let mut cur = theta.clone();
            for &n in m.idx.iter().rev() {
                cur = cur.ad_gen(n);
                if cur.is_zero() {
                    break;
                }
            }
            for (p, d) in cur.terms {
                out.add_term(p, d * c.clone());
            }
        }
        out
    }

    /// `ad(self)^p (theta)`.
    pub fn ad_pow(&self, p: usize, theta: &Self) -> Self {
        let mut out = theta.clone();
        for _ in 0..p {
            out = self.ad(&out);
        }
        out
    }

    /// Transpose anti-involution, `(X_1⋯X_k)^T = (−1)^k X_k⋯X_1`.
    pub fn transpose(&self) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let rev: Vec<i32> = m.idx.iter().rev().copied().collect();
            let sign = if m.degree() % 2 == 0 { C::one() } else { -C::one() };
            let img = nf_word_with::<C>(&rev);
            for (n, d) in img.terms {
                out.add_term(n, d * c.clone() * sign.clone());
            }
        }
        out
    }

    /// Coefficient of the empty monomial (the augmentation).
    pub fn counit(&self) -> C {
        self.coeff(&Mono::one())
    }

    /// Splits into `ad(e_0)` eigencomponents.
    pub fn weight_split(&self) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight()).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// Terms of degree ≤ `k`.
    pub fn truncate(&self, k: usize) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            if m.degree() <= k {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Uea<D> {
        let mut out = Uea::<D>::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl Uea<Rat> {
    pub fn to_poly(&self) -> Uea<Poly> {
        self.map_coeffs(|c| Poly::constant(c.clone()))
    }
}

impl Uea<Poly> {
    pub fn eval(&self, at: &[(Var, Rat)]) -> Uea<Poly> {
        self.map_coeffs(|c| c.eval(at))
    }

    /// Rational coefficients, if every coefficient is constant.
    pub fn to_rat(&self) -> Option<Uea<Rat>> {
        let mut out = Uea::<Rat>::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.as_constant()?);
        }
        Some(out)
    }

    /// Specializes λ to a rational value; panics if Λ remains.
    pub fn at_lambda(&self, v: &Rat) -> Uea<Rat> {
        self.eval(&[(Var::Lambda, v.clone())])
            .to_rat()
            .expect("coefficients still involve Λ")
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.values().any(|c| c.involves(v))
    }
}

/// Normal form of a word of generator indices (all `≥ -1`).
pub fn nf_word(word: &[i32]) -> Uea<Poly> {
    nf_word_with(word)
}

pub fn nf_word_with<C: Coeff>(word: &[i32]) -> Uea<C> {
    let mut cur: Vec<(Mono, i128)> = vec![(Mono::one(), 1)];
    for &a in word.iter().rev() {
        let mut acc = HashMap::new();
        for (m, c) in &cur {
            for (n, d) in left_mul(a, m).iter() {
                accumulate(&mut acc, n, c * d);
            }
        }
        cur = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    }
    let mut out = Uea::default();
    for (m, c) in cur {
        out.add_term(m, int_coeff::<C>(c));
    }
    out
}

impl<C: Coeff> fmt::Display for Uea<C> {
    /// Canonical witness format, e.g. `e_0^2 - e_0 - e_1 e_-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.signed_parts();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Uea<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Uea({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn e(n: i32) -> Uea<Rat> {
        Uea::gen(n)
    }

    fn w(word: &[i32]) -> Uea<Rat> {
        nf_word_with(word)
    }

    #[test]
    fn single_rewrites() {
        assert_eq!(w(&[-1, 1]), w(&[1, -1]).add(&e(0).scale(&rat(2))));
        assert_eq!(w(&[-1, 2]), w(&[2, -1]).add(&e(1).scale(&rat(3))));
        assert_eq!(e(1).mul(&e(-1)), w(&[1, -1]));
        assert_eq!(e(-1).mul(&e(1)).to_string(), "e_1 e_-1 + 2*e_0");
    }

    #[test]
    fn two_step_rewrite() {
        // e_0 e_1 e_-1 = e_1 e_0 e_-1 + e_1 e_-1
        let want = w(&[1, 0, -1]).add(&w(&[1, -1]));
        assert_eq!(w(&[0, 1, -1]), want);
    }

    #[test]
    fn rendering_matches_canonical_order() {
        let x = w(&[2, 0, 0, -1]).add(&e(3).scale(&ratio(-1, 2))).add(&Uea::one());
        assert_eq!(x.to_string(), "e_2 e_0^2 e_-1 - 1/2*e_3 + 1");
    }

    #[test]
    fn transpose_examples() {
        // (e_1 e_0)^T = e_0 e_1 = e_1 e_0 + e_1
        let x = w(&[1, 0]);
        assert_eq!(x.transpose(), x.add(&e(1)));
        assert_eq!(e(3).transpose(), e(3).neg());
        assert_eq!(x.transpose().transpose(), x);
    }

    #[test]
    fn weight_split_examples() {
        let parts = e(1).add(&e(-1)).weight_split();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&1], e(1));
        assert_eq!(parts[&-1], e(-1));
    }

    #[test]
    fn rejects_low_indices() {
        assert!(matches!(Uea::<Rat>::word(&[0, -2]), Err(Error::IndexOutOfRange(-2))));
    }

    #[test]
    fn degree_and_counit() {
        let x = w(&[-1, 1]).add(&Uea::constant(rat(5)));
        assert_eq!(x.degree(), 2);
        assert_eq!(x.counit(), rat(5));
        assert_eq!(x.weight(), Some(0));
    }
}

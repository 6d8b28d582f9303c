//! Symmetric algebra, top-degree symbols and the symmetrization map.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::arith::{Coeff, Rat};
use crate::error::Error;

use super::{nf_word_with, Mono, Uea};

/// An element of S(Vec ℝ); monomials are multisets stored in sorted order.
#[derive(Clone, PartialEq)]
pub struct SymElt<C: Coeff> {
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> Default for SymElt<C> {
    fn default() -> Self {
        SymElt { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> SymElt<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The commutative monomial with the given factors, in any order.
    pub fn mono(factors: &[i32]) -> Self {
        let mut out = Self::default();
        out.add_term(Mono::sorted(factors), C::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        let s = self.coeff(&m) + c;
        if s.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
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

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let joined: Vec<i32> = a.indices().iter().chain(b.indices()).copied().collect();
                out.add_term(Mono::sorted(&joined), c.clone() * d.clone());
            }
        }
        out
    }

    /// `Some(k)` if every monomial has degree `k`; the zero element is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Mono::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }
}

impl<C: Coeff> fmt::Display for SymElt<C> {
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
            let body = m.indices().iter().map(|n| format!("e_{n}")).collect::<Vec<_>>().join(",");
            if mag == "1" {
                write!(f, "{{{body}}}")?;
            } else {
                write!(f, "{mag}*{{{body}}}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SymElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym({self})")
    }
}

/// Reads the degree-`k` PBW terms of `theta` as commutative monomials.
pub fn proj_top<C: Coeff>(theta: &Uea<C>, k: usize) -> Result<SymElt<C>, Error> {
    let d = theta.degree();
    if d > k {
        return Err(Error::DegreeTooHigh { degree: d, bound: k });
    }
    let mut out = SymElt::default();
    for (m, c) in theta.terms() {
        if m.degree() == k {
            out.add_term(m.clone(), c.clone());
        }
    }
    Ok(out)
}

thread_local! {
    static SYM_CACHE: RefCell<HashMap<Mono, Uea<Rat>>> = RefCell::new(HashMap::new());
}

fn permutations(items: &[i32]) -> Vec<Vec<i32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Symmetrization of one commutative monomial: the average of the normal
/// forms of all orderings of its factors.
pub fn sym_mono(m: &Mono) -> Uea<Rat> {
    if let Some(hit) = SYM_CACHE.with(|c| c.borrow().get(m).cloned()) {
        return hit;
    }
    let perms = permutations(m.indices());
    let mut total = Uea::<Rat>::zero();
    for p in &perms {
        total = total.add(&nf_word_with::<Rat>(p));
    }
    let out = total.scale(&Rat::new(1.into(), (perms.len() as i64).into()));
    SYM_CACHE.with(|c| c.borrow_mut().insert(m.clone(), out.clone()));
    out
}

/// `sym_k` on a homogeneous symmetric element of degree `k`.
pub fn sym_k<C: Coeff>(s: &SymElt<C>, k: usize) -> Result<Uea<C>, Error> {
    if s.terms.keys().any(|m| m.degree() != k) {
        return Err(Error::Inhomogeneous(k));
    }
    let mut out = Uea::zero();
    for (m, c) in &s.terms {
        for (n, r) in sym_mono(m).terms() {
            out.add_term(n.clone(), c.scale(r));
        }
    }
    Ok(out)
}

/// Writes `theta = Σ_j sym_j(parts[j])` by peeling off top symbols.
pub fn sym_decompose<C: Coeff>(theta: &Uea<C>) -> Vec<SymElt<C>> {
    let top = theta.degree();
    let mut parts = vec![SymElt::default(); top + 1];
    let mut rest = theta.clone();
    for j in (0..=top).rev() {
        let sym = proj_top(&rest, j).expect("degree decreases while peeling");
        if !sym.is_zero() {
            let lift = sym_k(&sym, j).expect("symbol is homogeneous");
            rest = rest.sub(&lift);
        }
        parts[j] = sym;
    }
    debug_assert!(rest.is_zero());
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn e(n: i32) -> Uea<Rat> {
        Uea::gen(n)
    }

    #[test]
    fn proj_top_examples() {
        let x = nf_word_with::<Rat>(&[1, -1]).add(&e(0).scale(&rat(2)));
        assert_eq!(proj_top(&x, 2).unwrap(), SymElt::mono(&[1, -1]));
        assert!(proj_top(&e(0), 2).unwrap().is_zero());
        assert!(matches!(proj_top(&x, 1), Err(Error::DegreeTooHigh { degree: 2, bound: 1 })));
    }

    #[test]
    fn sym_examples() {
        let got = sym_k(&SymElt::<Rat>::mono(&[1, -1]), 2).unwrap();
        assert_eq!(got, nf_word_with::<Rat>(&[1, -1]).add(&e(0)));
        assert_eq!(sym_k(&SymElt::<Rat>::mono(&[3]), 1).unwrap(), e(3));
        assert_eq!(sym_k(&SymElt::<Rat>::mono(&[0, 0]), 2).unwrap(), e(0).mul(&e(0)));
        let mixed = SymElt::<Rat>::mono(&[0]).add(&SymElt::mono(&[0, 0]));
        assert!(matches!(sym_k(&mixed, 2), Err(Error::Inhomogeneous(2))));
    }

    #[test]
    fn decompose_generator() {
        let parts = sym_decompose(&e(0));
        assert_eq!(parts.len(), 2);
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], SymElt::mono(&[0]));
    }
}

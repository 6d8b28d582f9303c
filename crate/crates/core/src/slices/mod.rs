//! Finite slices of U(Vec ℝ) (degree ≤ k, weight μ) and exact subspaces of
//! them.

pub mod counts;
pub mod weights;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_traits::Zero;

use crate::arith::Rat;
use crate::error::Error;
use crate::linalg::{self, SparseVec};
use crate::uea::sym::{sym_decompose, sym_mono};
use crate::uea::{monomials_of, Mono, Uea};
use crate::witt::SubalgebraId;

pub use counts::{count, p_count, q_count, t_count, w_count, CountId};
pub use weights::{casimir_ad, hws, lws, submodule_closure, Closure};

/// Which part of the (degree ≤ k, weight μ) space a slice covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    Full,
    /// `sym_j(S^j)`; coordinates are those of the symmetric decomposition.
    SymImage(usize),
    /// PBW monomials whose factors all lie in the given index set.
    Sub(SubalgebraId),
}

#[derive(Clone, Debug)]
pub struct Slice {
    k: usize,
    mu: i64,
    filter: Filter,
    basis: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

pub type SliceRef = Arc<Slice>;

impl PartialEq for Slice {
    fn eq(&self, other: &Self) -> bool {
        (self.k, self.mu, self.filter) == (other.k, other.mu, other.filter)
    }
}

impl Eq for Slice {}

impl Slice {
    /// Canonical enumeration: degree ascending, then index sequences
    /// lexicographically. For `SymImage(j)` the basis lists the commutative
    /// monomials of degree exactly `j`.
    pub fn new(k: usize, mu: i64, filter: Filter) -> SliceRef {
        let degrees: Vec<usize> = match filter {
            Filter::SymImage(j) => vec![j],
            _ => (0..=k).collect(),
        };
        let mut basis = Vec::new();
        for d in degrees {
            match filter {
                Filter::Sub(id) => basis.extend(monomials_of(d, mu, |n| id.contains(n))),
                _ => basis.extend(monomials_of(d, mu, |_| true)),
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Arc::new(Slice { k, mu, filter, basis, index })
    }

    pub fn full(k: usize, mu: i64) -> SliceRef {
        Self::new(k, mu, Filter::Full)
    }

    pub fn sym_image(j: usize, mu: i64) -> SliceRef {
        Self::new(j, mu, Filter::SymImage(j))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn filter(&self) -> Filter {
        self.filter
    }

    pub fn basis(&self) -> &[Mono] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self) -> String {
        let f = match self.filter {
            Filter::Full => "full".to_string(),
            Filter::SymImage(j) => format!("sym{j}"),
            Filter::Sub(id) => format!("sub({})", id.name()),
        };
        format!("(k={}, mu={}, {f})", self.k, self.mu)
    }

    /// The element represented by basis vector `i`.
    pub fn basis_elem(&self, i: usize) -> Uea<Rat> {
        match self.filter {
            Filter::SymImage(_) => sym_mono(&self.basis[i]),
            _ => Uea::term(self.basis[i].clone(), Rat::from_integer(1.into())),
        }
    }

    pub fn coords(&self, theta: &Uea<Rat>) -> Result<SparseVec, Error> {
        let outside = || Error::NotInSlice(self.label());
        let pairs: Vec<(Mono, Rat)> = match self.filter {
            Filter::SymImage(j) => {
                let parts = sym_decompose(theta);
                for (d, part) in parts.iter().enumerate() {
                    if d != j && !part.is_zero() {
                        return Err(outside());
                    }
                }
                match parts.get(j) {
                    Some(p) => p.terms().map(|(m, c)| (m.clone(), c.clone())).collect(),
                    None => Vec::new(),
                }
            }
            _ => theta.terms().map(|(m, c)| (m.clone(), c.clone())).collect(),
        };
        let mut v = Vec::with_capacity(pairs.len());
        for (m, c) in pairs {
            v.push((*self.index.get(&m).ok_or_else(outside)?, c));
        }
        v.sort_by_key(|(i, _)| *i);
        Ok(v)
    }

    pub fn embed(&self, v: &SparseVec) -> Uea<Rat> {
        let mut out = Uea::zero();
        for (i, c) in v {
            out = out.add(&self.basis_elem(*i).scale(c));
        }
        out
    }
}

/// Assigns consecutive column numbers to keys on first sight.
#[derive(Debug)]
pub struct Indexer<K: Hash + Eq> {
    map: HashMap<K, usize>,
}

impl<K: Hash + Eq> Default for Indexer<K> {
    fn default() -> Self {
        Indexer { map: HashMap::new() }
    }
}

impl<K: Hash + Eq + Clone> Indexer<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn col(&mut self, k: &K) -> usize {
        let n = self.map.len();
        *self.map.entry(k.clone()).or_insert(n)
    }

    pub fn vec(&mut self, entries: impl IntoIterator<Item = (K, Rat)>) -> SparseVec {
        let mut acc: HashMap<usize, Rat> = HashMap::new();
        for (k, v) in entries {
            *acc.entry(self.col(&k)).or_insert_with(Rat::zero) += v;
        }
        let mut out: SparseVec = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }
}

/// Coordinates of an element of U in a shared PBW indexer.
pub fn pbw_vec(ix: &mut Indexer<Mono>, theta: &Uea<Rat>) -> SparseVec {
    ix.vec(theta.terms().map(|(m, c)| (m.clone(), c.clone())))
}

/// A subspace of a slice, stored as its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    slice: SliceRef,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(slice: &SliceRef) -> Self {
        Subspace { slice: slice.clone(), rows: Vec::new() }
    }

    pub fn whole(slice: &SliceRef) -> Self {
        let rows = (0..slice.dim()).map(|i| vec![(i, Rat::from_integer(1.into()))]).collect();
        Subspace { slice: slice.clone(), rows }
    }

    pub fn from_coords(slice: &SliceRef, vectors: &[SparseVec]) -> Self {
        Subspace { slice: slice.clone(), rows: linalg::rref(vectors) }
    }

    pub fn span(slice: &SliceRef, elems: &[Uea<Rat>]) -> Result<Self, Error> {
        let vs = elems.iter().map(|e| slice.coords(e)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coords(slice, &vs))
    }

    pub fn slice(&self) -> &SliceRef {
        &self.slice
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> Vec<Uea<Rat>> {
        self.rows.iter().map(|r| self.slice.embed(r)).collect()
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.slice == other.slice {
            Ok(())
        } else {
            Err(Error::SliceMismatch)
        }
    }

    pub fn contains(&self, theta: &Uea<Rat>) -> Result<bool, Error> {
        let v = self.slice.coords(theta)?;
        let mut e = linalg::Echelon::new();
        for r in &self.rows {
            e.insert(r);
        }
        Ok(e.contains(&v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let all: Vec<SparseVec> = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::from_coords(&self.slice, &all))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let all: Vec<SparseVec> = self.rows.iter().chain(&other.rows).cloned().collect();
        let n = self.rows.len();
        let mut out = Vec::new();
        for c in linalg::left_kernel(&all) {
            let mut v = Vec::new();
            for (i, x) in c.iter().filter(|(i, _)| *i < n) {
                v = linalg::axpy(&v, x, &self.rows[*i]);
            }
            out.push(v);
        }
        Ok(Self::from_coords(&self.slice, &out))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, Error> {
        Ok(self.sum(other)?.dim() == other.dim())
    }

    /// Kernel of a linear map given on elements, restricted to `self`. The
    /// map's values may live anywhere; they are compared through `to_vec`.
    pub fn kernel_of<F>(&self, mut image: F) -> Self
    where
        F: FnMut(&Uea<Rat>) -> SparseVec,
    {
        let basis = self.basis();
        let images: Vec<SparseVec> = basis.iter().map(&mut image).collect();
        let mut out = Vec::new();
        for c in linalg::left_kernel(&images) {
            let mut v = Vec::new();
            for (i, x) in &c {
                v = linalg::axpy(&v, x, &self.rows[*i]);
            }
            out.push(v);
        }
        Self::from_coords(&self.slice, &out)
    }

    /// Same subspace expressed in another slice that contains it.
    pub fn transfer(&self, target: &SliceRef) -> Result<Self, Error> {
        Self::span(target, &self.basis())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}} in {}", self.slice.label())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! The Witt algebra of polynomial vector fields on the line, with basis
//! `e_n = x^{n+1} ∂_x` for `n ≥ -1` and bracket `[e_m, e_n] = (n - m) e_{m+n}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Coeff, Rat};
use crate::error::Error;

/// Index of a basis vector `e_n`; always `n ≥ -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIndex(i32);

impl GenIndex {
    pub fn new(n: i64) -> Result<Self, Error> {
        if n < -1 || n > i32::MAX as i64 {
            return Err(Error::IndexOutOfRange(n));
        }
        Ok(GenIndex(n as i32))
    }

    pub fn get(self) -> i32 {
        self.0
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e_{}", self.0)
    }
}

/// Index sets of the distinguished subspaces. Only `SpanE1Em1` fails to be
/// a subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubalgebraId {
    /// `a = span{e_-1, e_0, e_1}`, a copy of sl₂.
    ProjectiveA,
    /// `b = span{e_-1, e_0}`.
    AffineB,
    /// `c = C e_-1`.
    ConstantC,
    /// `span{e_-1, e_1}`.
    SpanE1Em1,
    Full,
}

impl SubalgebraId {
    pub fn contains(self, n: i32) -> bool {
        match self {
            SubalgebraId::ProjectiveA => (-1..=1).contains(&n),
            SubalgebraId::AffineB => n == -1 || n == 0,
            SubalgebraId::ConstantC => n == -1,
            SubalgebraId::SpanE1Em1 => n == -1 || n == 1,
            SubalgebraId::Full => n >= -1,
        }
    }

    /// Largest index in the set, if finite.
    pub fn max_index(self) -> Option<i32> {
        match self {
            SubalgebraId::ProjectiveA | SubalgebraId::SpanE1Em1 => Some(1),
            SubalgebraId::AffineB => Some(0),
            SubalgebraId::ConstantC => Some(-1),
            SubalgebraId::Full => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SubalgebraId::ProjectiveA => "a",
            SubalgebraId::AffineB => "b",
            SubalgebraId::ConstantC => "c",
            SubalgebraId::SpanE1Em1 => "span{e_-1,e_1}",
            SubalgebraId::Full => "Vec",
        }
    }
}

/// A finite linear combination of the `e_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElt<C: Coeff> {
    terms: BTreeMap<i32, C>,
}

impl<C: Coeff> Default for LieElt<C> {
    fn default() -> Self {
        LieElt { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> LieElt<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(n: GenIndex) -> Self {
        Self::term(n, C::one())
    }

    pub fn term(n: GenIndex, c: C) -> Self {
        let mut out = Self::default();
        out.add_term(n.get(), c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (GenIndex, &C)> {
        self.terms.iter().map(|(&n, c)| (GenIndex(n), c))
    }

    pub fn coeff(&self, n: i32) -> C {
        self.terms.get(&n).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, n: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(n).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&n, c) in &other.terms {
            out.add_term(n, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::default();
        for (&n, d) in &self.terms {
            out.add_term(n, d.clone() * c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }
}

/// `[e_m, e_n] = (n - m) e_{m+n}`.
pub fn bracket_basis(m: i64, n: i64) -> Result<LieElt<Rat>, Error> {
    let (gm, gn) = (GenIndex::new(m)?, GenIndex::new(n)?);
    if m == n {
        return Ok(LieElt::zero());
    }
    let target = GenIndex::new(gm.get() as i64 + gn.get() as i64)?;
    Ok(LieElt::term(target, crate::arith::rat(n - m)))
}

/// Bilinear extension of [`bracket_basis`].
pub fn bracket<C: Coeff>(x: &LieElt<C>, y: &LieElt<C>) -> LieElt<C> {
    let mut out = LieElt::default();
    for (&m, a) in &x.terms {
        for (&n, b) in &y.terms {
            if m == n {
                continue;
            }
            let c = a.clone() * b.clone() * C::from_int((n - m) as i64);
            out.add_term(m + n, c);
        }
    }
    out
}

impl<C: Coeff> fmt::Display for LieElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&n, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "e_{n}")?;
            } else if c.is_atomic() {
                write!(f, "{c}*e_{n}")?;
            } else {
                write!(f, "({c})*e_{n}")?;
            }
        }
        Ok(())
    }
}

//! Exact scalars: arbitrary-precision rationals and sparse polynomials in the
//! two indeterminates λ and Λ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q`, `-p/q`, `+p` and bare integers.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let t = s.trim();
    let body = t.strip_prefix('+').unwrap_or(t);
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if body.is_empty() || body.starts_with('+') {
        return Err(bad());
    }
    match body.split_once('/') {
        Some((n, d)) => {
            // the sign belongs on the numerator
            if !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if !d.is_positive() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => body.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
    }
}

/// Coefficient rings usable for elements of the enveloping algebra and the
/// Weyl algebra.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    fn from_rat(r: Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    fn scale(&self, r: &Rat) -> Self;

    /// True when the value is a single term that does not need parentheses
    /// in front of a monomial.
    fn is_atomic(&self) -> bool;

    /// Sign and magnitude text for rendering inside a signed sum. Multi-term
    /// values come back parenthesized with a positive sign.
    fn signed_parts(&self) -> (bool, String);
}

impl Coeff for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn scale(&self, r: &Rat) -> Self {
        self * r
    }

    fn is_atomic(&self) -> bool {
        true
    }

    fn signed_parts(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

/// The two formal parameters that appear in coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// λ, the weight of a fixed tensor density module.
    Lambda,
    /// Λ, the weight parameter of the universal module.
    BigLambda,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Lambda => "λ",
            Var::BigLambda => "Λ",
        }
    }
}

/// Sparse polynomial over [`Rat`] in λ and Λ. Keys are `(deg_λ, deg_Λ)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl Poly {
    pub fn constant(c: Rat) -> Self {
        let mut p = Poly::default();
        p.add_term((0, 0), c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v, 1, Rat::one())
    }

    pub fn monomial(v: Var, exp: u32, c: Rat) -> Self {
        let key = match v {
            Var::Lambda => (exp, 0),
            Var::BigLambda => (0, exp),
        };
        let mut p = Poly::default();
        p.add_term(key, c);
        p
    }

    /// Builds `Σ c_i v^i` from ascending coefficients.
    pub fn univariate(v: Var, coeffs: &[Rat]) -> Self {
        let mut p = Poly::default();
        for (i, c) in coeffs.iter().enumerate() {
            p = p + Self::monomial(v, i as u32, c.clone());
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|&(a, b)| match v {
            Var::Lambda => a > 0,
            Var::BigLambda => b > 0,
        })
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|&(a, b)| match v {
                Var::Lambda => a,
                Var::BigLambda => b,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.terms.get(&(0, 0)).cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    /// Substitutes rational values for a subset of the indeterminates.
    pub fn eval(&self, at: &[(Var, Rat)]) -> Poly {
        let lam = at.iter().find(|(v, _)| *v == Var::Lambda).map(|(_, r)| r);
        let big = at.iter().find(|(v, _)| *v == Var::BigLambda).map(|(_, r)| r);
        let mut out = Poly::default();
        for (&(a, b), c) in &self.terms {
            let mut c = c.clone();
            let mut key = (a, b);
            if let Some(r) = lam {
                c *= pow(r, a);
                key.0 = 0;
            }
            if let Some(r) = big {
                c *= pow(r, b);
                key.1 = 0;
            }
            out.add_term(key, c);
        }
        out
    }

    /// Renames λ to Λ (used to compare a formula in λ with a universal-module
    /// result).
    pub fn lambda_to_big(&self) -> Poly {
        let mut out = Poly::default();
        for (&(a, b), c) in &self.terms {
            out.add_term((0, a + b), c.clone());
        }
        out
    }
}

fn pow(r: &Rat, e: u32) -> Rat {
    num_traits::pow(r.clone(), e as usize)
}

impl From<Rat> for Poly {
    fn from(r: Rat) -> Self {
        Poly::constant(r)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Rat::one())
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        let mut out = Poly::default();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Coeff for Poly {
    fn from_rat(r: Rat) -> Self {
        Poly::constant(r)
    }

    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Poly::default();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= r;
        }
        out
    }

    fn is_atomic(&self) -> bool {
        self.terms.len() <= 1
    }

    fn signed_parts(&self) -> (bool, String) {
        match self.terms.iter().next() {
            Some((_, c)) if self.terms.len() == 1 && c.is_negative() => {
                (true, (-self.clone()).to_string())
            }
            _ if self.terms.len() > 1 => (false, format!("({self})")),
            _ => (false, self.to_string()),
        }
    }
}

impl fmt::Display for Poly {
    /// Highest total degree first, e.g. `λ^2 - λ` or `-1/2*Λ + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (i, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            for (v, e) in [(Var::Lambda, key.0), (Var::BigLambda, key.1)] {
                match e {
                    0 => {}
                    1 => factors.push(v.symbol().to_string()),
                    e => factors.push(format!("{}^{e}", v.symbol())),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// The Casimir eigenvalue `q(v) = v² − v` on a rational point.
pub fn q_of(v: &Rat) -> Rat {
    v * v - v
}

/// `y(v) = (v − ½) q(v)`.
pub fn y_of(v: &Rat) -> Rat {
    (v - ratio(1, 2)) * q_of(v)
}

/// `q` as a polynomial in the given indeterminate.
pub fn q_poly(v: Var) -> Poly {
    Poly::univariate(v, &[rat(0), rat(-1), rat(1)])
}

/// `y` as a polynomial in the given indeterminate.
pub fn y_poly(v: Var) -> Poly {
    (Poly::var(v) - Poly::constant(ratio(1, 2))) * q_poly(v)
}

/// `C(n, r)`, zero outside `0 ≤ r ≤ n`.
pub fn binomial(n: i64, r: i64) -> i64 {
    if r < 0 || n < 0 || r > n {
        return 0;
    }
    num_integer::binomial(n, r)
}

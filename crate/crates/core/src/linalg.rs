//! Sparse row reduction over the rationals.
//!
//! Vectors are sorted `(column, value)` lists without zeros. [`Echelon`]
//! keeps rows with distinct leading columns, optionally remembering how each
//! row was built from the inserted vectors, which gives kernels and solutions
//! of linear systems without a separate pass.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::arith::Rat;

pub type SparseVec = Vec<(usize, Rat)>;

pub fn sparse_from_map(m: BTreeMap<usize, Rat>) -> SparseVec {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a + s·b`.
pub fn axpy(a: &SparseVec, s: &Rat, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + s * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &SparseVec, s: &Rat) -> SparseVec {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(c, v)| (*c, v * s)).collect()
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    comb: SparseVec,
}

/// Incremental row echelon form with unit leading coefficients.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_of: HashMap<usize, usize>,
    inserted: usize,
    track: bool,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// An echelon form that records each row as a combination of the
    /// inserted vectors, so that [`Echelon::insert`] reports dependencies.
    pub fn tracked() -> Self {
        Echelon { track: true, ..Self::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_pair(&self, mut vec: BTreeMap<usize, Rat>, mut comb: SparseVec) -> (SparseVec, SparseVec) {
        let mut cursor = 0usize;
        loop {
            let next = vec
                .range(cursor..)
                .find(|(c, _)| self.pivot_of.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, val)) = next else { break };
            let row = &self.rows[self.pivot_of[&col]];
            let s = -val;
            for (c, v) in &row.vec {
                let e = vec.entry(*c).or_insert_with(Rat::zero);
                *e += &s * v;
                if e.is_zero() {
                    vec.remove(c);
                }
            }
            if !row.comb.is_empty() || !comb.is_empty() {
                comb = axpy(&comb, &s, &row.comb);
            }
            cursor = col + 1;
        }
        (sparse_from_map(vec), comb)
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_pair(v.iter().cloned().collect(), Vec::new()).0
    }

    /// Remainder of `v` together with coefficients `c` on the inserted
    /// vectors such that `v = remainder + Σ c_i v_i`.
    pub fn reduce_tracked(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let (rem, comb) = self.reduce_pair(v.iter().cloned().collect(), Vec::new());
        (rem, scale(&comb, &-Rat::one()))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns the dependency `c` with `v = Σ c_i v_i` over
    /// earlier insertions when `v` is dependent, and `None` otherwise. The
    /// dependency is empty unless the form is tracked.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let idx = self.inserted;
        self.inserted += 1;
        let start = if self.track { vec![(idx, Rat::one())] } else { Vec::new() };
        let (rem, comb) = self.reduce_pair(v.iter().cloned().collect(), start);
        if rem.is_empty() {
            let mut dep = scale(&comb, &-Rat::one());
            dep.retain(|(c, _)| *c != idx);
            return Some(dep);
        }
        let inv = Rat::one() / &rem[0].1;
        let row = Row { vec: scale(&rem, &inv), comb: scale(&comb, &inv) };
        self.pivot_of.insert(row.vec[0].0, self.rows.len());
        self.rows.push(row);
        None
    }

    /// Fully reduced rows sorted by leading column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i].vec[0].0);
        let mut done: Vec<SparseVec> = Vec::with_capacity(order.len());
        let mut pivots: HashMap<usize, usize> = HashMap::new();
        for &i in order.iter().rev() {
            let mut v: BTreeMap<usize, Rat> = self.rows[i].vec.iter().cloned().collect();
            let lead = self.rows[i].vec[0].0;
            let mut cursor = lead + 1;
            loop {
                let next = v
                    .range(cursor..)
                    .find(|(c, _)| pivots.contains_key(c))
                    .map(|(c, x)| (*c, x.clone()));
                let Some((col, val)) = next else { break };
                for (c, x) in &done[pivots[&col]] {
                    let e = v.entry(*c).or_insert_with(Rat::zero);
                    *e -= &val * x;
                    if e.is_zero() {
                        v.remove(c);
                    }
                }
                cursor = col + 1;
            }
            pivots.insert(lead, done.len());
            done.push(sparse_from_map(v));
        }
        done.reverse();
        done
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_of.keys().copied().collect();
        p.sort_unstable();
        p
    }
}

/// Canonical row basis of the span of `vectors`.
pub fn rref(vectors: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rref()
}

pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Canonical basis of `{c : Σ c_i vectors[i] = 0}`.
pub fn left_kernel(vectors: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::tracked();
    let mut ker = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if let Some(dep) = e.insert(v) {
            let mut k = scale(&dep, &-Rat::one());
            k.push((i, Rat::one()));
            ker.push(k);
        }
    }
    rref(&ker)
}

/// Some `c` with `Σ c_i vectors[i] = target`, if one exists.
pub fn solve(vectors: &[SparseVec], target: &SparseVec) -> Option<SparseVec> {
    let mut e = Echelon::tracked();
    for v in vectors {
        e.insert(v);
    }
    let (rem, comb) = e.reduce_tracked(target);
    rem.is_empty().then_some(comb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(c, x)| (c, rat(x))).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref(&[v(&[(0, 2), (1, 4)]), v(&[(0, 1), (2, 1)])]);
        let b = rref(&[v(&[(1, 2), (2, -1)]), v(&[(0, 3), (1, 6)])]);
        assert_eq!(a, b);
        assert_eq!(a[0], vec![(0, rat(1)), (2, rat(1))]);
        assert_eq!(a[1], vec![(1, rat(1)), (2, ratio(-1, 2))]);
    }

    #[test]
    fn kernel_and_solve() {
        let vs = [v(&[(0, 1), (1, 1)]), v(&[(1, 1)]), v(&[(0, 2), (1, 5)])];
        let k = left_kernel(&vs);
        assert_eq!(k, vec![vec![(0, rat(1)), (1, ratio(3, 2)), (2, ratio(-1, 2))]]);
        let c = solve(&vs[..2], &v(&[(0, 3)])).unwrap();
        assert_eq!(c, vec![(0, rat(3)), (1, rat(-3))]);
        assert!(solve(&vs[1..2], &v(&[(0, 1)])).is_none());
    }

    #[test]
    fn dependencies_are_reported() {
        let mut e = Echelon::tracked();
        assert!(e.insert(&v(&[(3, 1)])).is_none());
        assert!(e.insert(&v(&[(1, 1), (3, 1)])).is_none());
        let dep = e.insert(&v(&[(1, 2), (3, 5)])).unwrap();
        assert_eq!(dep, vec![(0, rat(3)), (1, rat(2))]);
    }
}

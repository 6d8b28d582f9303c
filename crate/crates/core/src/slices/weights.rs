//! Lowest and highest weight vectors, submodule closure under the adjoint
//! action, and the adjoint Casimir operator.

use std::collections::{BTreeMap, VecDeque};

use crate::arith::Rat;
use crate::linalg::Echelon;
use crate::uea::{Mono, Uea};

use super::{pbw_vec, Filter, Indexer, Slice, Subspace};

fn ad_kernel(n: i32, k: usize, mu: i64, filter: Filter) -> Subspace {
    let slice = Slice::new(k, mu, filter);
    let mut ix = Indexer::<Mono>::new();
    Subspace::whole(&slice).kernel_of(|t| pbw_vec(&mut ix, &t.ad_gen(n)))
}

/// Elements of the slice killed by `ad(e_-1)`.
pub fn lws(k: usize, mu: i64, filter: Filter) -> Subspace {
    ad_kernel(-1, k, mu, filter)
}

/// Elements of the slice killed by `ad(e_1)`.
pub fn hws(k: usize, mu: i64, filter: Filter) -> Subspace {
    ad_kernel(1, k, mu, filter)
}

/// `ad(e_0)²θ − ad(e_0)θ − ad(e_1)ad(e_-1)θ`.
pub fn casimir_ad<C: crate::arith::Coeff>(theta: &Uea<C>) -> Uea<C> {
    let h = theta.ad_gen(0);
    h.ad_gen(0).sub(&h).sub(&theta.ad_gen(-1).ad_gen(1))
}

/// Weight slices of a Vec ℝ-submodule of U_k, truncated at weight `W`.
#[derive(Clone, Debug)]
pub struct Closure {
    pub k: usize,
    pub max_weight: i64,
    pub parts: BTreeMap<i64, Subspace>,
}

impl Closure {
    /// The weight-`mu` part; zero if the closure has nothing there.
    pub fn at(&self, mu: i64) -> Subspace {
        self.parts
            .get(&mu)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(&Slice::full(self.k, mu)))
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.parts.iter().map(|(w, s)| (*w, s.dim())).collect()
    }
}

/// Per-weight echelon state: column indexer, echelon form, accepted elements.
type Frontier = BTreeMap<i64, (Indexer<Mono>, Echelon, Vec<Uea<Rat>>)>;

/// Closes the span of `gens` under the adjoint action, keeping weights
/// ≤ `max_weight`. Generators must have degree ≤ `k`.
///
/// A weight-`w` element of the submodule is a combination of
/// `ad(e_{n_1})⋯ad(e_{n_r}) g`; by the PBW theorem the lowering factors can
/// be applied first, and each `e_n` with `n ≥ 3` is an iterated bracket of
/// `e_1` and `e_2`. So paths through `ad(e_-1)`, `ad(e_1)`, `ad(e_2)` with
/// partial weights ≤ `w` reach everything, and the slices at weights
/// ≤ `max_weight` are exact.
pub fn submodule_closure(gens: &[Uea<Rat>], k: usize, max_weight: i64) -> Closure {
    let mut ech: Frontier = BTreeMap::new();
    let mut queue: VecDeque<(i64, Uea<Rat>)> = VecDeque::new();

    let push = |theta: Uea<Rat>,
                    ech: &mut Frontier,
                    queue: &mut VecDeque<(i64, Uea<Rat>)>| {
        let Some(w) = theta.weight() else { return };
        if w > max_weight {
            return;
        }
        let (ix, e, elems) = ech.entry(w).or_insert_with(|| (Indexer::new(), Echelon::new(), Vec::new()));
        let v = pbw_vec(ix, &theta);
        if e.insert(&v).is_none() {
            elems.push(theta.clone());
            queue.push_back((w, theta));
        }
    };

    for g in gens {
        assert!(g.degree() <= k, "generator degree exceeds the closure bound");
        for part in g.weight_split().into_values() {
            push(part, &mut ech, &mut queue);
        }
    }
    while let Some((w, theta)) = queue.pop_front() {
        for n in [-1, 1, 2] {
            if w + n as i64 > max_weight {
                continue;
            }
            let img = theta.ad_gen(n);
            if !img.is_zero() {
                push(img, &mut ech, &mut queue);
            }
        }
    }

    let parts = ech
        .into_iter()
        .map(|(w, (_, _, elems))| {
            let sub = Subspace::span(&Slice::full(k, w), &elems).expect("closure stays in the slice");
            (w, sub)
        })
        .collect();
    Closure { k, max_weight, parts }
}

//! Slice-wise verification of the hypotheses of the cross-section criterion:
//! a monomial family 𝒥 on which the module acts injectively, whose top
//! symbols fill the complement of an ideal's symbols, certifies
//! `U = Ann ⊕ 𝒥` degree by degree.

use std::collections::BTreeSet;

use crate::arith::Rat;
use crate::error::Error;
use crate::par::{self, Mode};
use crate::report::{CheckReport, Cutoffs, Tally};
use crate::slices::{submodule_closure, Closure, Slice, Subspace};
use crate::uea::sym::proj_top;
use crate::uea::{Mono, Uea};
use crate::witt::SubalgebraId;

use super::{ambient_filter, ann_slice_in, filtration_part, image_rank, ModuleSpec};

/// Monomial families spanning candidate cross-sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JPattern {
    /// `e_n e_-1^k` and `e_-1^k`.
    C,
    /// `e_n e_0^i e_-1^j` and `e_0^i e_-1^j`.
    B,
    /// The `C` family together with `e_n e_0`.
    Il,
    /// `e_1^i e_-1^j` and `e_1^i e_0 e_-1^j`.
    Sl2,
}

impl JPattern {
    pub fn matches(self, m: &Mono) -> bool {
        let idx = m.indices();
        let tail = idx.get(1..).unwrap_or(&[]);
        match self {
            JPattern::C => tail.iter().all(|&n| n == -1),
            JPattern::B => tail.iter().all(|&n| n == -1 || n == 0),
            JPattern::Il => JPattern::C.matches(m) || (idx.len() == 2 && idx[1] == 0),
            JPattern::Sl2 => {
                idx.iter().all(|&n| (-1..=1).contains(&n)) && idx.iter().filter(|&&n| n == 0).count() <= 1
            }
        }
    }
}

/// Where the candidate ideal slices come from.
#[derive(Clone, Debug)]
pub enum IRecipe {
    /// The adjoint submodule generated by the elements.
    Closure(Vec<Uea<Rat>>),
    /// The span of the elements.
    Span(Vec<Uea<Rat>>),
    /// The annihilator itself, truncated at the top degree.
    Annihilator,
}

#[derive(Clone, Debug)]
pub struct MachineConfig {
    /// Generating degrees, ascending.
    pub degrees: Vec<usize>,
    /// One subalgebra per generating degree.
    pub j_spaces: Vec<SubalgebraId>,
    pub pattern: JPattern,
    pub i_recipe: IRecipe,
    pub module: ModuleSpec,
    /// The Lie algebra whose enveloping algebra is sliced.
    pub ambient: SubalgebraId,
    pub max_degree: usize,
    pub max_weight: i64,
    pub mode: Mode,
}

fn contained(small: SubalgebraId, big: SubalgebraId) -> bool {
    (-1..=16).all(|n| !small.contains(n) || big.contains(n))
}

impl MachineConfig {
    fn validate(&self) -> Result<(), Error> {
        if self.degrees.is_empty() || self.degrees.len() != self.j_spaces.len() {
            return Err(Error::Config("one J space is needed per generating degree".into()));
        }
        if self.degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("generating degrees must increase".into()));
        }
        if self.j_spaces.windows(2).any(|w| !contained(w[1], w[0])) {
            return Err(Error::Config("J spaces must decrease".into()));
        }
        if self.degrees[0] == 0 {
            return Err(Error::Config("generating degrees start at 1".into()));
        }
        if self.max_degree < *self.degrees.last().unwrap() {
            return Err(Error::Config(format!(
                "degree cutoff {} is below the top generating degree {}",
                self.max_degree,
                self.degrees.last().unwrap()
            )));
        }
        Ok(())
    }

    fn cutoffs(&self) -> Cutoffs {
        Cutoffs { max_degree: self.max_degree, max_weight: self.max_weight }
    }

    /// Index of the generating degree governing degree `k`.
    fn stage(&self, k: usize) -> Option<usize> {
        self.degrees.iter().rposition(|&d| d <= k)
    }

    /// Number of factors of `m` that lie in `j`.
    fn in_j(m: &Mono, j: SubalgebraId) -> usize {
        m.indices().iter().filter(|&&n| j.contains(n)).count()
    }

    /// Degree-`k` monomials of `S^{k-d1+1}(J) S^{d1-1}(g)` for the stage of `k`.
    fn symbol_family(&self, m: &Mono, k: usize) -> bool {
        let d1 = self.degrees[0];
        match self.stage(k) {
            Some(s) => Self::in_j(m, self.j_spaces[s]) + d1 > k,
            None => true,
        }
    }
}

struct Ideal<'a> {
    cfg: &'a MachineConfig,
    closure: Option<Closure>,
}

impl Ideal<'_> {
    /// `I ∩ U_j` at weight `mu`, in the ambient slice.
    fn part(&self, j: usize, mu: i64) -> Subspace {
        let slice = Slice::new(j, mu, ambient_filter(self.cfg.ambient));
        let elems: Vec<Uea<Rat>> = match &self.cfg.i_recipe {
            IRecipe::Annihilator => return ann_slice_in(&self.cfg.module, &slice),
            IRecipe::Closure(_) => self.closure.as_ref().expect("built with the recipe").at(mu).basis(),
            IRecipe::Span(gens) => gens.iter().filter_map(|g| g.weight_split().remove(&mu)).collect(),
        };
        let kept = filtration_part(&elems, j);
        Subspace::span(&slice, &kept).unwrap_or_else(|_| Subspace::zero(&slice))
    }
}

/// Everything verified on one `(k, mu)` slice.
fn check_slice(cfg: &MachineConfig, ideal: &Ideal<'_>, k: usize, mu: i64) -> Tally {
    let mut t = Tally::new();
    let slice = Slice::new(k, mu, ambient_filter(cfg.ambient));
    let at = slice.label();
    let jmons: Vec<Mono> = slice.basis().iter().filter(|m| cfg.pattern.matches(m)).cloned().collect();
    let jelems: Vec<Uea<Rat>> = jmons.iter().map(|m| Uea::term(m.clone(), Rat::from_integer(1.into()))).collect();
    let d1 = cfg.degrees[0];

    // (a) injectivity on the pattern span.
    let rank = image_rank(&cfg.module, &jelems, k, mu);
    t.ensure(rank == jmons.len(), || format!("(a) rank {rank} < {} on pattern monomials at {at}", jmons.len()));

    // (b) everything below the first generating degree is in the pattern.
    if k + 1 == d1 {
        t.ensure(jmons.len() == slice.dim(), || format!("(b) pattern misses monomials at {at}"));
    }

    let top: Vec<&Mono> = slice.basis().iter().filter(|m| m.degree() == k).collect();

    // (c) top symbols of the pattern are the expected symmetric family.
    if k >= d1 {
        let got: BTreeSet<&Mono> = jmons.iter().filter(|m| m.degree() == k).collect();
        let want: BTreeSet<&Mono> = top.iter().copied().filter(|m| cfg.symbol_family(m, k)).collect();
        t.ensure(got == want, || format!("(c) pattern symbols differ from the J family at {at}"));
    }

    // (d) ideal symbols fill the complement, injectively modulo lower degree.
    if let Some(s) = cfg.degrees.iter().position(|&d| d == k) {
        let here = ideal.part(k, mu);
        let below = ideal.part(k - 1, mu);
        let mut rows = Vec::new();
        let cols: Vec<&Mono> = top.clone();
        let col = |m: &Mono| cols.iter().position(|c| *c == m);
        for h in here.basis() {
            let sym = proj_top(&h, k).expect("slice element has degree ≤ k");
            let mut v: Vec<(usize, Rat)> = sym.terms().filter_map(|(m, c)| col(m).map(|i| (i, c.clone()))).collect();
            v.sort_by_key(|(i, _)| *i);
            rows.push(v);
        }
        let family: Vec<usize> = (0..cols.len()).filter(|&i| cfg.symbol_family(cols[i], k)).collect();
        let complement = cols.len() - family.len();
        let ideal_rank = crate::linalg::rank(&rows);
        rows.extend(family.iter().map(|&i| vec![(i, Rat::from_integer(1.into()))]));
        let total = crate::linalg::rank(&rows);
        t.ensure(total == cols.len(), || {
            format!("(d) symbols span {total} of {} top monomials at {at}", cols.len())
        });
        let gained = here.dim() - below.dim();
        t.ensure(gained == complement && ideal_rank == gained, || {
            format!("(d) stage {s}: ideal gains {gained} in degree {k}, complement has {complement} at {at}")
        });
    }

    // (e) no new ideal elements strictly between generating degrees.
    if let Some(s) = cfg.degrees.iter().position(|&d| d == k + 1) {
        if s > 0 {
            let prev = cfg.degrees[s - 1];
            let a = ideal.part(k, mu).dim();
            let b = ideal.part(prev, mu).dim();
            t.ensure(a == b, || format!("(e) ideal grows from degree {prev} to {k} at {at}"));
        }
    }

    // Soundness of the ideal and the direct sum conclusion.
    let ann = ann_slice_in(&cfg.module, &slice);
    if k <= cfg.degrees[cfg.degrees.len() - 1] {
        let i_here = ideal.part(k, mu);
        let sound = i_here.is_subspace_of(&ann).unwrap_or(false);
        t.ensure(sound, || format!("ideal slice is not inside the annihilator at {at}"));
    }
    let jspace = Subspace::span(&slice, &jelems).expect("pattern monomials lie in the slice");
    let meet = ann.intersect(&jspace).map(|s| s.dim()).unwrap_or(usize::MAX);
    t.ensure(meet == 0 && ann.dim() + jspace.dim() == slice.dim(), || {
        format!(
            "direct sum fails at {at}: dim Ann {} + dim J {} vs {}, overlap {meet}",
            ann.dim(),
            jspace.dim(),
            slice.dim()
        )
    });
    t
}

/// Checks every hypothesis of the criterion and its conclusion on each slice
/// within the cutoffs.
pub fn machine_check(check_id: &str, cfg: &MachineConfig) -> Result<CheckReport, Error> {
    cfg.validate()?;
    let mut tally = Tally::new();
    let closure = match &cfg.i_recipe {
        IRecipe::Closure(gens) => {
            let d = gens.iter().map(|g| g.degree()).max().unwrap_or(0);
            Some(submodule_closure(gens, d, cfg.max_weight))
        }
        _ => None,
    };
    let ideal = Ideal { cfg, closure };
    let mut work = Vec::new();
    for k in 0..=cfg.max_degree {
        for mu in -(k as i64)..=cfg.max_weight {
            work.push((k, mu));
        }
    }
    let slices = work.len();
    let results = par::map(cfg.mode, work, |(k, mu)| check_slice(cfg, &ideal, k, mu));
    for r in results {
        tally.absorb(r);
    }
    if !tally.failed() {
        tally.note(format!(
            "{} slices of {} verified for generating degrees {:?}, {} assertions",
            slices,
            cfg.module.label(),
            cfg.degrees,
            tally.asserted()
        ));
    }
    Ok(tally.finish(check_id, cfg.cutoffs()))
}

//! Exact domination and accurate domination numbers.
//!
//! Every entry point here works on graphs of at most [`SOLVER_CAP`]
//! vertices, represented internally as `u64` bitmasks. Searches are
//! sequential and deterministic; set enumerations come out in ascending
//! bitmask order.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const SOLVER_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub value: usize,
    pub witness: VertexSet,
    /// The search ran to completion, so `value` is proven optimal.
    pub exhausted: bool,
}

/// Closed-neighborhood masks of a graph within the solver cap.
#[derive(Clone, Debug)]
pub(crate) struct Masks {
    n: usize,
    all: u64,
    closed: Vec<u64>,
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
fn below(v: usize) -> u64 {
    if v >= 64 {
        u64::MAX
    } else {
        bit(v) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.order() > SOLVER_CAP {
        Err(Error::CapExceeded {
            order: g.order(),
            cap: SOLVER_CAP,
        })
    } else {
        Ok(())
    }
}

impl Masks {
    pub(crate) fn new(g: &Graph) -> Result<Self> {
        check_cap(g)?;
        let n = g.order();
        let closed = (0..n)
            .map(|v| g.neighbors(v).iter().fold(bit(v), |m, &u| m | bit(u)))
            .collect();
        Ok(Masks {
            n,
            all: below(n),
            closed,
        })
    }

    pub(crate) fn all(&self) -> u64 {
        self.all
    }

    pub(crate) fn dominated_by(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, v| m | self.closed[v])
    }

    pub(crate) fn dominates(&self, set: u64) -> bool {
        self.dominated_by(set) == self.all
    }

    fn feasible(&self, allowed: u64) -> bool {
        self.closed.iter().all(|&c| c & allowed != 0)
    }

    fn greedy(&self, allowed: u64) -> u64 {
        let mut chosen = 0;
        let mut dominated = 0;
        while dominated != self.all {
            let undominated = self.all & !dominated;
            let best = bits(allowed & !chosen)
                .max_by_key(|&w| {
                    (
                        (self.closed[w] & undominated).count_ones(),
                        std::cmp::Reverse(w),
                    )
                })
                .expect("feasible allowed set");
            chosen |= bit(best);
            dominated |= self.closed[best];
        }
        chosen
    }

    /// A minimum dominating set inside `allowed`, or `None` if none exists.
    pub(crate) fn minimum(&self, allowed: u64) -> Option<u64> {
        if !self.feasible(allowed) {
            return None;
        }
        let start = self.greedy(allowed);
        let mut search = Search {
            masks: self,
            best: start,
            best_size: start.count_ones() as usize,
            stop_at_first: false,
            found: true,
        };
        search.branch(0, 0, 0, allowed);
        Some(search.best)
    }

    /// The minimum dominating set inside `allowed` that comes first in
    /// bitmask order.
    pub(crate) fn first_minimum(&self, allowed: u64) -> Option<u64> {
        let k = self.minimum(allowed)?.count_ones() as usize;
        let mut first = None;
        self.for_each_dominating_subset(allowed, k, |d| {
            first = Some(d);
            ControlFlow::Break(())
        });
        first
    }

    /// Some dominating set inside `allowed` with at most `budget` vertices.
    pub(crate) fn within_budget(&self, allowed: u64, budget: usize) -> Option<u64> {
        if self.n == 0 {
            return Some(0);
        }
        if budget == 0 || !self.feasible(allowed) {
            return None;
        }
        let greedy = self.greedy(allowed);
        if greedy.count_ones() as usize <= budget {
            return Some(greedy);
        }
        let mut search = Search {
            masks: self,
            best: 0,
            best_size: budget + 1,
            stop_at_first: true,
            found: false,
        };
        search.branch(0, 0, 0, allowed);
        search.found.then_some(search.best)
    }

    /// Accuracy of a dominating set `d`: no `|d|`-subset of the complement
    /// dominates. A dominating subset of the complement with fewer than
    /// `|d|` vertices pads up to exactly `|d|` whenever the complement has
    /// at least `|d|` vertices, so it suffices to bound the restricted
    /// domination number.
    pub(crate) fn is_accurate(&self, d: u64) -> bool {
        if !self.dominates(d) {
            return false;
        }
        let size = d.count_ones() as usize;
        let rest = self.all & !d;
        (rest.count_ones() as usize) < size || self.within_budget(rest, size).is_none()
    }

    /// Calls `visit` on every dominating set of exactly `k` vertices drawn
    /// from `allowed`, in ascending bitmask order, until it breaks.
    pub(crate) fn for_each_dominating_subset<F>(&self, allowed: u64, k: usize, mut visit: F)
    where
        F: FnMut(u64) -> ControlFlow<()>,
    {
        let allowed = allowed & self.all;
        if (allowed.count_ones() as usize) < k {
            return;
        }
        let _ = self.colex(0, 0, k, allowed, &mut visit);
    }

    // Chooses the remaining `r` elements from `avail`, largest first; since
    // sets are ordered by their largest differing element, walking each
    // position upward visits sets in ascending numeric order.
    fn colex<F>(
        &self,
        chosen: u64,
        dominated: u64,
        r: usize,
        avail: u64,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(u64) -> ControlFlow<()>,
    {
        let undominated = self.all & !dominated;
        if r == 0 {
            return if undominated == 0 {
                visit(chosen)
            } else {
                ControlFlow::Continue(())
            };
        }
        if undominated != 0 {
            let mut max_cover = 0;
            for w in bits(avail) {
                max_cover = max_cover.max((self.closed[w] & undominated).count_ones());
            }
            if (max_cover as usize) * r < undominated.count_ones() as usize {
                return ControlFlow::Continue(());
            }
            if bits(undominated).any(|u| self.closed[u] & avail == 0) {
                return ControlFlow::Continue(());
            }
        }
        for e in bits(avail) {
            let lower = avail & below(e);
            if (lower.count_ones() as usize) < r - 1 {
                continue;
            }
            self.colex(
                chosen | bit(e),
                dominated | self.closed[e],
                r - 1,
                lower,
                visit,
            )?;
        }
        ControlFlow::Continue(())
    }
}

struct Search<'a> {
    masks: &'a Masks,
    best: u64,
    best_size: usize,
    stop_at_first: bool,
    found: bool,
}

impl Search<'_> {
    /// Branches on the undominated vertex with the fewest remaining
    /// candidates. `free` shrinks as siblings are exhausted, so no set is
    /// explored twice.
    fn branch(&mut self, chosen: u64, dominated: u64, size: usize, free: u64) {
        if self.stop_at_first && self.found {
            return;
        }
        let m = self.masks;
        let undominated = m.all & !dominated;
        if undominated == 0 {
            if size < self.best_size {
                self.best = chosen;
                self.best_size = size;
                self.found = true;
            }
            return;
        }
        if size + 1 >= self.best_size {
            return;
        }

        let mut pick = usize::MAX;
        let mut fewest = u32::MAX;
        for u in bits(undominated) {
            let c = (m.closed[u] & free).count_ones();
            if c == 0 {
                return;
            }
            if c < fewest {
                fewest = c;
                pick = u;
            }
        }

        let mut max_cover = 0;
        for w in bits(free) {
            max_cover = max_cover.max((m.closed[w] & undominated).count_ones());
        }
        let need = undominated.count_ones().div_ceil(max_cover) as usize;
        if size + need >= self.best_size {
            return;
        }

        let mut cands: Vec<(u32, usize)> = bits(m.closed[pick] & free)
            .map(|c| ((m.closed[c] & undominated).count_ones(), c))
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut free = free;
        for (_, c) in cands {
            self.branch(
                chosen | bit(c),
                dominated | m.closed[c],
                size + 1,
                free & !bit(c),
            );
            if self.stop_at_first && self.found {
                return;
            }
            free &= !bit(c);
        }
    }
}

fn to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_mask(n, mask).expect("mask within host")
}

fn set_mask(g: &Graph, set: &VertexSet) -> Result<u64> {
    g.check_host(set)?;
    set.mask().ok_or(Error::CapExceeded {
        order: g.order(),
        cap: SOLVER_CAP,
    })
}

/// Whether every vertex outside `set` has a neighbor in it. Works at any order.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> Result<bool> {
    g.check_host(set)?;
    Ok((0..g.order()).all(|v| set.contains(v) || g.neighbors(v).iter().any(|&u| set.contains(u))))
}

/// γ(G), witnessed by the first minimum dominating set in bitmask order.
pub fn gamma(g: &Graph) -> Result<DominationResult> {
    let masks = Masks::new(g)?;
    let best = masks
        .first_minimum(masks.all())
        .expect("V(G) always dominates");
    Ok(DominationResult {
        value: best.count_ones() as usize,
        witness: to_set(g.order(), best),
        exhausted: true,
    })
}

/// Minimum dominating set using only `allowed` vertices; `None` when some
/// closed neighborhood misses `allowed` entirely.
pub fn gamma_restricted(g: &Graph, allowed: &VertexSet) -> Result<Option<DominationResult>> {
    check_cap(g)?;
    let allowed = set_mask(g, allowed)?;
    let masks = Masks::new(g)?;
    Ok(masks.first_minimum(allowed).map(|best| DominationResult {
        value: best.count_ones() as usize,
        witness: to_set(g.order(), best),
        exhausted: true,
    }))
}

/// Every minimum dominating set, in ascending bitmask order.
pub fn min_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let masks = Masks::new(g)?;
    let k = masks.minimum(masks.all()).expect("feasible").count_ones() as usize;
    let mut out = Vec::new();
    masks.for_each_dominating_subset(masks.all(), k, |d| {
        out.push(to_set(g.order(), d));
        ControlFlow::Continue(())
    });
    Ok(out)
}

pub(crate) fn min_dominating_masks(masks: &Masks) -> Vec<u64> {
    let k = masks.minimum(masks.all()).expect("feasible").count_ones() as usize;
    let mut out = Vec::new();
    masks.for_each_dominating_subset(masks.all(), k, |d| {
        out.push(d);
        ControlFlow::Continue(())
    });
    out
}

pub fn is_accurate_dominating(g: &Graph, set: &VertexSet) -> Result<bool> {
    check_cap(g)?;
    let d = set_mask(g, set)?;
    Ok(Masks::new(g)?.is_accurate(d))
}

fn gamma_a_mask(masks: &Masks) -> u64 {
    let start = masks.minimum(masks.all()).expect("feasible").count_ones() as usize;
    for k in start..=masks.n {
        let mut hit = None;
        masks.for_each_dominating_subset(masks.all(), k, |d| {
            if masks.is_accurate(d) {
                hit = Some(d);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(d) = hit {
            return d;
        }
    }
    unreachable!("V(G) is accurate for n >= 1")
}

/// γₐ(G) with the accurate dominating set of that size that is smallest in
/// bitmask order. The graph must have at least one vertex: on the empty
/// graph the empty set is a dominating subset of its own complement, so no
/// accurate set exists.
pub fn gamma_a(g: &Graph) -> Result<DominationResult> {
    let masks = Masks::new(g)?;
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let d = gamma_a_mask(&masks);
    Ok(DominationResult {
        value: d.count_ones() as usize,
        witness: to_set(g.order(), d),
        exhausted: true,
    })
}

/// Every minimum accurate dominating set, in ascending bitmask order.
pub fn min_accurate_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let masks = Masks::new(g)?;
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let k = gamma_a_mask(&masks).count_ones() as usize;
    let mut out = Vec::new();
    masks.for_each_dominating_subset(masks.all(), k, |d| {
        if masks.is_accurate(d) {
            out.push(to_set(g.order(), d));
        }
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Both sides of the intersection characterization, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCheck {
    /// γₐ(G) = γ(G), from the two solvers.
    pub equality: bool,
    /// The first minimum dominating set (bitmask order) meeting every
    /// minimum dominating set, if any.
    pub hitting_set: Option<VertexSet>,
}

impl IntersectionCheck {
    /// Whether the instance agrees with the characterization.
    pub fn consistent(&self) -> bool {
        self.equality == self.hitting_set.is_some()
    }
}

pub(crate) fn hitting_gamma_set(sets: &[u64]) -> Option<u64> {
    sets.iter()
        .copied()
        .find(|&d| sets.iter().all(|&other| d & other != 0))
}

pub fn check_intersection_characterization(g: &Graph) -> Result<IntersectionCheck> {
    let equality = gamma_a(g)?.value == gamma(g)?.value;
    let masks = Masks::new(g)?;
    let sets = min_dominating_masks(&masks);
    Ok(IntersectionCheck {
        equality,
        hitting_set: hitting_gamma_set(&sets).map(|d| to_set(g.order(), d)),
    })
}

/// JSON record for solver output; vertex lists ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveRecord {
    pub n: usize,
    pub gamma: usize,
    pub gamma_witness: Vec<usize>,
    pub gamma_a: usize,
    pub gamma_a_witness: Vec<usize>,
}

pub fn solve_record(g: &Graph) -> Result<SolveRecord> {
    let gm = gamma(g)?;
    let ga = gamma_a(g)?;
    Ok(SolveRecord {
        n: g.order(),
        gamma: gm.value,
        gamma_witness: gm.witness.to_vec(),
        gamma_a: ga.value,
        gamma_a_witness: ga.witness.to_vec(),
    })
}

//! Backtracking search for homomorphisms.
//!
//! Each source vertex is assigned a state `(a, α)`: a target vertex and a
//! switch bit, i.e. a vertex of the double switching graph of the target.
//! A source edge `uv` of sign `s` is satisfied when the target has an edge
//! `φ(u)φ(v)` of sign `s·α_u·α_v`. Domains are bitsets over the `2·n(H)`
//! states and are narrowed by forward checking after each assignment.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::graph::{EdgeId, Sign, SignedGraph, SwitchSet, VertexId};

use super::Homomorphism;

/// What kind of map to look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Allow switching the source; when false the map must preserve every
    /// edge sign as given (a 2-edge-coloured homomorphism).
    pub switching: bool,
    /// Require a bijection on vertices and edges.
    pub injective: bool,
    /// Maximum number of assignments tried.
    pub budget: u64,
}

pub const DEFAULT_BUDGET: u64 = 10_000_000;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { switching: true, injective: false, budget: DEFAULT_BUDGET }
    }
}

impl SearchOptions {
    pub fn colour_preserving() -> Self {
        SearchOptions { switching: false, ..Self::default() }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        SearchOptions { budget, ..self }
    }
}

pub(crate) enum Outcome {
    Found(Homomorphism),
    Exhausted,
    Budget,
}

fn state(a: VertexId, sign: Sign) -> usize {
    2 * a + sign.bit() as usize
}

fn state_parts(s: usize) -> (VertexId, Sign) {
    (s / 2, Sign::from_bit((s % 2) as u8))
}

pub(crate) type PairCounts = BTreeMap<(VertexId, VertexId), [usize; 2]>;

pub(crate) fn pair_counts(g: &SignedGraph) -> PairCounts {
    let mut out = PairCounts::new();
    for e in g.edges() {
        let key = (e.u.min(e.v), e.u.max(e.v));
        out.entry(key).or_default()[e.sign.bit() as usize] += 1;
    }
    out
}

fn counts_of(c: &PairCounts, a: VertexId, b: VertexId) -> [usize; 2] {
    c.get(&(a.min(b), a.max(b))).copied().unwrap_or_default()
}

struct Engine<'a> {
    src: &'a SignedGraph,
    tgt: &'a SignedGraph,
    opts: SearchOptions,
    order: Vec<VertexId>,
    // compat[state][sign bit]: states joinable to `state` by a source edge of that sign
    compat: Vec<[FixedBitSet; 2]>,
    // neighbours (edge sign, other end) per source vertex, loops excluded
    neighbours: Vec<Vec<(Sign, VertexId)>>,
    src_counts: PairCounts,
    tgt_counts: PairCounts,
    assigned: Vec<Option<usize>>,
    nodes: u64,
}

impl<'a> Engine<'a> {
    fn new(src: &'a SignedGraph, tgt: &'a SignedGraph, opts: SearchOptions) -> Self {
        let states = 2 * tgt.n();
        let mut compat = vec![[FixedBitSet::with_capacity(states), FixedBitSet::with_capacity(states)]; states];
        for e in tgt.edges() {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                for alpha in [Sign::Positive, Sign::Negative] {
                    for beta in [Sign::Positive, Sign::Negative] {
                        // a source edge of sign s lands on e when s·α·β = σ(e)
                        let s = e.sign * alpha * beta;
                        compat[state(a, alpha)][s.bit() as usize].insert(state(b, beta));
                    }
                }
            }
        }
        let neighbours = (0..src.n())
            .map(|u| {
                src.incident(u)
                    .iter()
                    .filter(|(_, w)| *w != u)
                    .map(|&(e, w)| (src.sign(e), w))
                    .collect()
            })
            .collect();
        let mut order: Vec<VertexId> = (0..src.n()).collect();
        order.sort_by_key(|&u| (std::cmp::Reverse(src.degree(u)), u));
        Engine {
            src,
            tgt,
            opts,
            order,
            compat,
            neighbours,
            src_counts: pair_counts(src),
            tgt_counts: pair_counts(tgt),
            assigned: vec![None; src.n()],
            nodes: 0,
        }
    }

    fn initial_domains(&self) -> Vec<FixedBitSet> {
        let states = 2 * self.tgt.n();
        let (comp, _) = self.src.components();
        let mut pinned_component = vec![false; self.src.n()];
        let mut domains = vec![FixedBitSet::with_capacity(states); self.src.n()];
        for &u in &self.order {
            // switching a whole source component changes nothing, so the
            // first vertex of each component keeps bit +
            let pin = !self.opts.switching || !std::mem::replace(&mut pinned_component[comp[u]], true);
            for s in 0..states {
                let (a, alpha) = state_parts(s);
                if pin && alpha.is_negative() {
                    continue;
                }
                if self.opts.injective {
                    let (su, ta) = (counts_of(&self.src_counts, u, u), counts_of(&self.tgt_counts, a, a));
                    if su != ta || self.src.degree(u) != self.tgt.degree(a) {
                        continue;
                    }
                }
                domains[u].insert(s);
            }
            for &(e, w) in self.src.incident(u) {
                if w == u {
                    // loop signs are switching invariant
                    let sb = self.src.sign(e).bit() as usize;
                    let allowed: Vec<usize> = domains[u].ones().filter(|&s| self.compat[s][sb].contains(s)).collect();
                    domains[u].clear();
                    allowed.into_iter().for_each(|s| domains[u].insert(s));
                }
            }
        }
        domains
    }

    fn consistent_pairs(&self, u: VertexId, s: usize) -> bool {
        let (a, alpha) = state_parts(s);
        self.assigned.iter().enumerate().all(|(w, t)| match t {
            None => true,
            Some(t) => {
                let (b, beta) = state_parts(*t);
                let mut c = counts_of(&self.src_counts, u, w);
                if (alpha * beta).is_negative() {
                    c.swap(0, 1);
                }
                c == counts_of(&self.tgt_counts, a, b)
            }
        })
    }

    fn search(&mut self, depth: usize, domains: &[FixedBitSet]) -> Option<Outcome> {
        if depth == self.order.len() {
            return Some(Outcome::Found(self.build()));
        }
        let u = self.order[depth];
        for s in domains[u].ones() {
            if self.nodes >= self.opts.budget {
                return Some(Outcome::Budget);
            }
            self.nodes += 1;
            if self.opts.injective && !self.consistent_pairs(u, s) {
                continue;
            }
            let mut next = domains.to_vec();
            let mut dead = false;
            for &(sign, w) in &self.neighbours[u] {
                if self.assigned[w].is_none() {
                    next[w].intersect_with(&self.compat[s][sign.bit() as usize]);
                    dead |= next[w].is_clear();
                }
            }
            if self.opts.injective {
                let a = s / 2;
                for (w, d) in next.iter_mut().enumerate() {
                    if self.assigned[w].is_none() && w != u {
                        d.remove(2 * a);
                        d.remove(2 * a + 1);
                        dead |= d.is_clear();
                    }
                }
            }
            if dead {
                continue;
            }
            self.assigned[u] = Some(s);
            let found = self.search(depth + 1, &next);
            self.assigned[u] = None;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn build(&self) -> Homomorphism {
        let states: Vec<usize> = self.assigned.iter().map(|s| s.expect("complete")).collect();
        let vertex_map: Vec<VertexId> = states.iter().map(|s| s / 2).collect();
        let switch: SwitchSet = (0..self.src.n()).filter(|&u| states[u] % 2 == 1).collect();
        let mut used: BTreeMap<(VertexId, VertexId, Sign), usize> = BTreeMap::new();
        let edge_map: Vec<EdgeId> = self
            .src
            .edges()
            .iter()
            .map(|e| {
                let need = e.sign * Sign::from_bit((states[e.u] % 2) as u8) * Sign::from_bit((states[e.v] % 2) as u8);
                let (a, b) = (vertex_map[e.u], vertex_map[e.v]);
                let mut candidates = self.tgt.edges_between(a, b).filter(|&f| self.tgt.sign(f) == need);
                if self.opts.injective {
                    let k = used.entry((a.min(b), a.max(b), need)).or_default();
                    *k += 1;
                    candidates.nth(*k - 1)
                } else {
                    candidates.next()
                }
                .expect("forward checking guarantees an image edge")
            })
            .collect();
        Homomorphism { switch, vertex_map, edge_map }
    }
}

pub(crate) fn search(src: &SignedGraph, tgt: &SignedGraph, opts: SearchOptions) -> (Outcome, u64) {
    if opts.injective && (src.n() != tgt.n() || src.m() != tgt.m()) {
        return (Outcome::Exhausted, 0);
    }
    let mut engine = Engine::new(src, tgt, opts);
    let domains = engine.initial_domains();
    if domains.iter().any(FixedBitSet::is_clear) && src.n() > 0 {
        return (Outcome::Exhausted, 0);
    }
    let outcome = engine.search(0, &domains).unwrap_or(Outcome::Exhausted);
    (outcome, engine.nodes)
}

//! Switching-equivalent signatures with pairwise disjoint negative edge
//! sets.
//!
//! Every signature equivalent to `σ` is `σ_X` for a switch set `X`, with
//! negative set `E⁻(σ) Δ [X, V∖X]`. Switch sets are enumerated with vertex 0
//! kept out of `X`; sets producing the same negative set are merged.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;

use crate::equivalence::{bipartition_of, switching_equivalent, Equivalence};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, SwitchSet, VertexId};
use crate::hom::{find_hom_with, spc, HomSearch, SearchOptions};
use crate::walk::Walk;
use crate::walksys::{default_bound, signature_from_oracle};

/// Largest order for which all switch sets are enumerated.
pub const MAX_ENUMERATION_ORDER: usize = 16;

/// Length bound of the closed-walk sweep that cross-checks the signature
/// rebuilt on the contracted graph. The lifted signature is compared with
/// the input by a switching-equivalence test in any case.
pub const CONTRACTION_CHECK_BOUND: usize = 4;

/// Outcome of [`disjoint_switch`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisjointSwitch {
    /// `switch(g, X)` has no negative edge in common with `g`.
    Yes(SwitchSet),
    /// An odd cycle made of negative edges.
    No(Walk),
}

/// Switches one side of a bipartition of the negative subgraph, which turns
/// every negative edge positive; fails exactly when the negative subgraph has
/// an odd cycle.
pub fn disjoint_switch(g: &SignedGraph) -> DisjointSwitch {
    match bipartition_of(g, |e| g.sign(e).is_negative()) {
        Ok(side) => {
            let x: SwitchSet = (0..g.n()).filter(|&v| side[v]).collect();
            debug_assert!(negative_set(g, &x).is_disjoint(&g.negative_edges().into_iter().collect()));
            DisjointSwitch::Yes(x)
        }
        Err(cycle) => DisjointSwitch::No(cycle),
    }
}

/// `E⁻(σ_X)`.
pub fn negative_set(g: &SignedGraph, x: &SwitchSet) -> BTreeSet<EdgeId> {
    (0..g.m()).filter(|&e| g.sign(e).is_negative() != g.in_cut(e, x)).collect()
}

/// The result of contracting the negative edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    /// Contracted graph carrying the reconstructed signature `η`.
    pub graph: SignedGraph,
    /// Contracted vertex of each original vertex.
    pub vertex_of: Vec<VertexId>,
    /// Original (positive) edge of each contracted edge.
    pub edge_origin: Vec<EdgeId>,
    /// `σ′` on the original graph: `η` on positive edges, `+` on negative ones.
    pub lifted: SignedGraph,
    /// `switch(g, switch) == lifted`.
    pub switch: SwitchSet,
}

/// Contracts every negative edge, keeping loops and parallel edges, and
/// reads off the signs of closed walks of the contracted graph from their
/// lifts: a lift joins consecutive edges by paths of negative edges, whose
/// parity is fixed when the negative subgraph is bipartite. The signature
/// rebuilt from those walk signs is lifted back to the original graph.
pub fn contract_negative(g: &SignedGraph) -> Result<Contraction> {
    let side = bipartition_of(g, |e| g.sign(e).is_negative()).map_err(Error::NegativeSubgraphNotBipartite)?;
    let mut vertex_of = vec![usize::MAX; g.n()];
    let mut count = 0;
    for v in 0..g.n() {
        if vertex_of[v] != usize::MAX {
            continue;
        }
        let mut stack = vec![v];
        vertex_of[v] = count;
        while let Some(x) = stack.pop() {
            for &(e, y) in g.incident(x) {
                if g.sign(e).is_negative() && vertex_of[y] == usize::MAX {
                    vertex_of[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    let edge_origin: Vec<EdgeId> = (0..g.m()).filter(|&e| g.sign(e).is_positive()).collect();
    let contracted = SignedGraph::uniform(
        count,
        edge_origin.iter().map(|&e| (vertex_of[g.edge(e).u], vertex_of[g.edge(e).v])),
        Sign::Positive,
    )?;
    // each traversal of an original edge contributes the parity of the
    // connecting paths at both of its ends
    let crossing = |e: EdgeId| {
        let edge = g.edge(edge_origin[e]);
        side[edge.u] != side[edge.v]
    };
    let oracle = |w: &Walk| w.edges().iter().filter(|&&e| crossing(e)).count() % 2 == 1;
    let eta = signature_from_oracle(&contracted, &oracle, default_bound(&contracted).min(CONTRACTION_CHECK_BOUND))?;
    let mut signs = vec![Sign::Positive; g.m()];
    for (i, &e) in edge_origin.iter().enumerate() {
        signs[e] = eta.sign(i);
    }
    let lifted = g.with_signs(&signs)?;
    let switch = match switching_equivalent(g, &lifted)? {
        Equivalence::Yes(x) => x,
        Equivalence::No(c) => return Err(Error::OracleDisagreement(c)),
    };
    Ok(Contraction { graph: eta, vertex_of, edge_origin, lifted, switch })
}

/// A family of equivalent signatures with pairwise disjoint negative sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignaturePacking {
    pub switches: Vec<SwitchSet>,
    pub negative_sets: Vec<BTreeSet<EdgeId>>,
    /// False when the budget ran out; the family is then a lower bound.
    pub optimal: bool,
}

impl SignaturePacking {
    pub fn len(&self) -> usize {
        self.switches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.switches.is_empty()
    }

    /// Pairwise disjointness and agreement of each set with its switch set.
    pub fn is_valid(&self, g: &SignedGraph) -> bool {
        let sets_match = self.switches.iter().zip(&self.negative_sets).all(|(x, s)| negative_set(g, x) == *s);
        let disjoint = self
            .negative_sets
            .iter()
            .enumerate()
            .all(|(i, a)| self.negative_sets[i + 1..].iter().all(|b| a.is_disjoint(b)));
        let distinct = self.negative_sets.iter().collect::<BTreeSet<_>>().len() == self.negative_sets.len();
        sets_match && disjoint && distinct && self.switches.len() == self.negative_sets.len()
    }
}

struct Candidate {
    switch: SwitchSet,
    edges: FixedBitSet,
}

fn to_bits(m: usize, set: &BTreeSet<EdgeId>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(m);
    set.iter().for_each(|&e| b.insert(e));
    b
}

/// Distinct negative sets of equivalent signatures, smallest first.
fn candidates(g: &SignedGraph) -> Result<Vec<Candidate>> {
    let n = g.n();
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge { n, limit: MAX_ENUMERATION_ORDER });
    }
    let mut seen: BTreeMap<(usize, BTreeSet<EdgeId>), SwitchSet> = BTreeMap::new();
    let masks = if n == 0 { 1 } else { 1usize << (n - 1) };
    for mask in 0..masks {
        let x: SwitchSet = (1..n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let set = negative_set(g, &x);
        seen.entry((set.len(), set)).or_insert(x);
    }
    Ok(seen.into_iter().map(|((_, set), switch)| Candidate { edges: to_bits(g.m(), &set), switch }).collect())
}

/// A largest family of distinct, pairwise disjoint negative sets of
/// signatures equivalent to `g`'s (the signature of `g` itself may belong to
/// it). Branch and bound over candidate sets; `budget` bounds the number of
/// search nodes.
pub fn pack_signatures(g: &SignedGraph, budget: u64) -> Result<SignaturePacking> {
    let cands = candidates(g)?;
    let mut state = PackState { cands: &cands, best: Vec::new(), chosen: Vec::new(), nodes: 0, budget, m: g.m() };
    let complete = state.extend(0, &FixedBitSet::with_capacity(g.m()));
    let switches: Vec<SwitchSet> = state.best.iter().map(|&i| cands[i].switch.clone()).collect();
    let negative_sets = switches.iter().map(|x| negative_set(g, x)).collect();
    Ok(SignaturePacking { switches, negative_sets, optimal: complete })
}

struct PackState<'a> {
    cands: &'a [Candidate],
    best: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
    m: usize,
}

impl PackState<'_> {
    /// Returns false if the budget ran out.
    fn extend(&mut self, from: usize, used: &FixedBitSet) -> bool {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let free = self.m - used.count_ones(..);
        for i in from..self.cands.len() {
            // sets are sorted by size, so the remaining ones are at least this big
            let size = self.cands[i].edges.count_ones(..);
            let room = free.checked_div(size).map_or(self.cands.len() - i, |r| r.min(self.cands.len() - i));
            if self.chosen.len() + room <= self.best.len() {
                break;
            }
            if !self.cands[i].edges.is_disjoint(used) {
                continue;
            }
            if self.nodes >= self.budget {
                return false;
            }
            self.nodes += 1;
            let mut next = used.clone();
            next.union_with(&self.cands[i].edges);
            self.chosen.push(i);
            let ok = self.extend(i + 1, &next);
            self.chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Both sides of the projective-cube correspondence for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpcPacking {
    /// Switch sets whose negative sets partition the edges into `k + 1`
    /// (possibly empty) classes, if such a partition exists.
    pub partition: Option<Vec<SwitchSet>>,
    pub hom: HomSearch,
}

impl SpcPacking {
    pub fn agree(&self) -> Option<bool> {
        Some(self.partition.is_some() == self.hom.decided()?)
    }
}

/// Side A: an exact cover of `E` by `k + 1` negative sets of equivalent
/// signatures, each class confirmed with a switching-equivalence test.
/// Side B: a homomorphism to `SPC(k)`.
pub fn pack_vs_spc(g: &SignedGraph, k: usize, budget: u64) -> Result<SpcPacking> {
    let target = spc(k)?;
    let cands = candidates(g)?;
    let has_empty = cands.first().is_some_and(|c| c.edges.is_clear());
    let nonempty: Vec<&Candidate> = cands.iter().filter(|c| !c.edges.is_clear()).collect();
    let mut chosen = Vec::new();
    let cover = exact_cover(&nonempty, &mut FixedBitSet::with_capacity(g.m()), g.m(), k + 1, has_empty, &mut chosen);
    let partition = match cover {
        false => None,
        true => {
            let mut classes: Vec<SwitchSet> = chosen.iter().map(|&i| nonempty[i].switch.clone()).collect();
            while classes.len() < k + 1 {
                classes.push(cands[0].switch.clone());
            }
            for x in &classes {
                let mut signs = vec![Sign::Positive; g.m()];
                negative_set(g, x).into_iter().for_each(|e| signs[e] = Sign::Negative);
                if let Equivalence::No(c) = switching_equivalent(g, &g.with_signs(&signs)?)? {
                    return Err(Error::OracleDisagreement(c));
                }
            }
            Some(classes)
        }
    };
    let hom = find_hom_with(g, &target, SearchOptions::default().with_budget(budget));
    Ok(SpcPacking { partition, hom })
}

fn exact_cover(
    cands: &[&Candidate],
    covered: &mut FixedBitSet,
    m: usize,
    parts: usize,
    pad_with_empty: bool,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(e) = (0..m).find(|&e| !covered.contains(e)) else {
        return chosen.len() == parts || (chosen.len() < parts && pad_with_empty);
    };
    if chosen.len() == parts {
        return false;
    }
    for (i, c) in cands.iter().enumerate() {
        if c.edges.contains(e) && c.edges.is_disjoint(covered) {
            covered.union_with(&c.edges);
            chosen.push(i);
            if exact_cover(cands, covered, m, parts, pad_with_empty, chosen) {
                return true;
            }
            chosen.pop();
            covered.difference_with(&c.edges);
        }
    }
    false
}

/// For two signatures on the same graph, switch sets making their negative
/// sets disjoint, by trying all pairs of switchings.
pub fn disjoint_pair(a: &SignedGraph, b: &SignedGraph) -> Result<Option<(SwitchSet, SwitchSet)>> {
    if !a.same_underlying(b) {
        return Err(Error::UnderlyingMismatch);
    }
    let ca = candidates(a)?;
    let cb = candidates(b)?;
    for x in &ca {
        if let Some(y) = cb.iter().find(|y| y.edges.is_disjoint(&x.edges)) {
            return Ok(Some((x.switch.clone(), y.switch.clone())));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::switching_equivalent;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn k3_one_negative() -> SignedGraph {
        SignedGraph::new(3, [(0, 1, N), (1, 2, P), (0, 2, P)]).unwrap()
    }

    #[test]
    fn disjoint_switch_examples() {
        let pos = SignedGraph::uniform(3, [(0, 1), (1, 2)], P).unwrap();
        assert_eq!(disjoint_switch(&pos), DisjointSwitch::Yes(SwitchSet::empty()));

        let g = k3_one_negative();
        let DisjointSwitch::Yes(x) = disjoint_switch(&g) else { panic!() };
        assert!(!negative_set(&g, &x).contains(&0));

        let neg = SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], N).unwrap();
        let DisjointSwitch::No(c) = disjoint_switch(&neg) else { panic!() };
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn contraction_examples() {
        let pos = SignedGraph::uniform(3, [(0, 1), (1, 2)], P).unwrap();
        let c = contract_negative(&pos).unwrap();
        assert_eq!(c.lifted, pos);

        let g = k3_one_negative();
        let c = contract_negative(&g).unwrap();
        assert_eq!((c.graph.n(), c.graph.m()), (2, 2));
        assert_eq!(c.graph.negative_edges().len(), 1);
        assert_eq!(c.lifted.negative_edges().len(), 1);
        assert!(c.lifted.sign(0).is_positive());
        assert!(switching_equivalent(&g, &c.lifted).unwrap().is_yes());

        let neg = SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], N).unwrap();
        assert!(matches!(contract_negative(&neg), Err(Error::NegativeSubgraphNotBipartite(_))));
    }

    #[test]
    fn packing_examples() {
        let spc1 = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        let p = pack_signatures(&spc1, 1_000).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.optimal && p.is_valid(&spc1));

        let k3 = SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], P).unwrap();
        assert_eq!(pack_signatures(&k3, 1_000).unwrap().len(), 2);

        let c4 = SignedGraph::uniform(4, [(0, 1), (1, 2), (2, 3), (3, 0)], P).unwrap();
        let p = pack_signatures(&c4, 1_000).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.is_valid(&c4));
    }

    #[test]
    fn budget_gives_lower_bound() {
        let c4 = SignedGraph::uniform(4, [(0, 1), (1, 2), (2, 3), (3, 0)], P).unwrap();
        let p = pack_signatures(&c4, 1).unwrap();
        assert!(!p.optimal && p.len() <= 3 && p.is_valid(&c4));
    }

    #[test]
    fn spc_correspondence_examples() {
        let spc1 = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        let r = pack_vs_spc(&spc1, 1, 1_000_000).unwrap();
        assert_eq!(r.agree(), Some(true));
        assert!(r.partition.is_some());

        let k3 = SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], P).unwrap();
        for k in 1..=3 {
            let r = pack_vs_spc(&k3, k, 1_000_000).unwrap();
            assert!(r.partition.is_none() && !r.hom.is_found(), "k={k}");
        }

        let edge = SignedGraph::uniform(2, [(0, 1)], P).unwrap();
        let r = pack_vs_spc(&edge, 2, 1_000_000).unwrap();
        assert_eq!(r.partition.as_ref().map(Vec::len), Some(3));
        assert_eq!(r.agree(), Some(true));
    }

    #[test]
    fn disjoint_pair_examples() {
        let a = SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], N).unwrap();
        let (x, y) = disjoint_pair(&a, &a).unwrap().unwrap();
        assert!(negative_set(&a, &x).is_disjoint(&negative_set(&a, &y)));
        let looped = SignedGraph::new(1, [(0, 0, N)]).unwrap();
        assert!(disjoint_pair(&looped, &looped).unwrap().is_none());
    }
}

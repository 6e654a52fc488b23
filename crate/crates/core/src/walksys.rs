//! Closed-walk sign systems.
//!
//! A system is a set 𝒲 of closed walks given by a membership predicate
//! ([`WalkOracle`]). The set is the negative closed walks of some signature
//! exactly when it is closed under rotation and every three `xy`-walks induce
//! an even number of members; the signature is then recovered from the
//! fundamental cycles of a spanning forest.
//!
//! Walk sets are infinite, so every sweep here is bounded by a length `B` and
//! a PASS verdict only means "no violation up to `B`".

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::cycles::{all_cycles, as_cycle, edge_set};
use crate::equivalence::SpanningForest;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};
use crate::walk::{for_each_closed_walk, walks_between, Walk};

/// Theta enumeration refuses graphs above this order unless asked otherwise.
pub const DEFAULT_THETA_VERTEX_CAP: usize = 12;

/// Membership predicate for a set of closed walks.
pub trait WalkOracle {
    fn contains(&self, w: &Walk) -> bool;

    /// `σ_𝒲`: negative for members.
    fn sign(&self, w: &Walk) -> Sign {
        if self.contains(w) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

impl<F: Fn(&Walk) -> bool> WalkOracle for F {
    fn contains(&self, w: &Walk) -> bool {
        self(w)
    }
}

/// The negative closed walks of a signed graph.
pub struct NegativeWalks<'a>(pub &'a SignedGraph);

impl WalkOracle for NegativeWalks<'_> {
    fn contains(&self, w: &Walk) -> bool {
        self.0.sign_of_edges(w.edges()).is_negative()
    }
}

/// Closed walks of odd length: the negative walks of the all-negative signature.
pub struct OddWalks;

impl WalkOracle for OddWalks {
    fn contains(&self, w: &Walk) -> bool {
        w.len() % 2 == 1
    }
}

/// A finite list of closed walks together with all their rotations and inverses.
#[derive(Clone, Debug, Default)]
pub struct ExplicitWalks {
    members: HashSet<Walk>,
}

impl ExplicitWalks {
    pub fn new(walks: impl IntoIterator<Item = Walk>) -> Result<Self> {
        let mut members = HashSet::new();
        for w in walks {
            if !w.is_closed() {
                return Err(Error::NotClosed);
            }
            for base in [w.clone(), w.invert()] {
                for i in 0..base.len().max(1) {
                    members.insert(base.rotate(i)?);
                }
            }
        }
        Ok(ExplicitWalks { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl WalkOracle for ExplicitWalks {
    fn contains(&self, w: &Walk) -> bool {
        self.members.contains(w)
    }
}

/// Default sweep bound: twice the number of edges.
pub fn default_bound(g: &SignedGraph) -> usize {
    2 * g.m()
}

/// `C_W`: the edges traversed an odd number of times by a closed walk.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EvenSubgraph {
    pub edges: BTreeSet<EdgeId>,
}

impl EvenSubgraph {
    /// Set sum (symmetric difference).
    pub fn sum(&self, other: &EvenSubgraph) -> EvenSubgraph {
        EvenSubgraph { edges: self.edges.symmetric_difference(&other.edges).copied().collect() }
    }

    pub fn is_even_in(&self, g: &SignedGraph) -> bool {
        let mut deg = vec![0usize; g.n()];
        for &e in &self.edges {
            let edge = g.edge(e);
            deg[edge.u] += 1;
            deg[edge.v] += 1;
        }
        deg.iter().all(|d| d % 2 == 0)
    }

    pub fn to_bits(&self, m: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(m);
        for &e in &self.edges {
            bits.insert(e);
        }
        bits
    }

    pub fn sign_in(&self, g: &SignedGraph) -> Sign {
        self.edges.iter().fold(Sign::Positive, |acc, &e| acc * g.sign(e))
    }
}

pub fn even_subgraph_of(w: &Walk) -> Result<EvenSubgraph> {
    if !w.is_closed() {
        return Err(Error::NotClosed);
    }
    let mut edges = BTreeSet::new();
    for &e in w.edges() {
        if !edges.remove(&e) {
            edges.insert(e);
        }
    }
    Ok(EvenSubgraph { edges })
}

/// Rank over GF(2) of a list of bit vectors.
pub fn gf2_rank(vectors: &[FixedBitSet]) -> usize {
    let mut basis: Vec<FixedBitSet> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for b in &basis {
            let pivot = b.ones().next().expect("basis vectors are non-zero");
            if v.contains(pivot) {
                v.symmetric_difference_with(b);
            }
        }
        if let Some(pivot) = v.ones().next() {
            // keep the basis reduced on its pivots
            for b in basis.iter_mut() {
                if b.contains(pivot) {
                    b.symmetric_difference_with(&v);
                }
            }
            basis.push(v);
        }
    }
    basis.len()
}

/// Three internally disjoint paths between two distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    pub x: VertexId,
    pub y: VertexId,
    pub paths: [Walk; 3],
}

impl Theta {
    /// The three cycles of the theta, as edge sets: paths (0,1), (0,2), (1,2).
    pub fn cycles(&self) -> [BTreeSet<EdgeId>; 3] {
        let set = |i: usize, j: usize| -> BTreeSet<EdgeId> {
            edge_set(&self.paths[i]).union(&edge_set(&self.paths[j])).copied().collect()
        };
        [set(0, 1), set(0, 2), set(1, 2)]
    }

    pub fn edges(&self) -> BTreeSet<EdgeId> {
        self.paths.iter().flat_map(|p| p.edges().iter().copied()).collect()
    }
}

/// All theta subgraphs, by choosing the two branch vertices and then three
/// internally disjoint paths. Exponential in general.
pub fn enumerate_thetas(g: &SignedGraph, vertex_cap: usize) -> Result<Vec<Theta>> {
    if g.n() > vertex_cap {
        return Err(Error::TooLarge { n: g.n(), limit: vertex_cap });
    }
    let mut thetas = Vec::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let paths = simple_paths(g, x, y);
            let interiors: Vec<FixedBitSet> = paths
                .iter()
                .map(|p| {
                    let mut s = FixedBitSet::with_capacity(g.n());
                    for &v in &p.vertices()[1..p.len()] {
                        s.insert(v);
                    }
                    s
                })
                .collect();
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    if !interiors[i].is_disjoint(&interiors[j]) {
                        continue;
                    }
                    for k in j + 1..paths.len() {
                        if interiors[k].is_disjoint(&interiors[i]) && interiors[k].is_disjoint(&interiors[j]) {
                            thetas.push(Theta {
                                x,
                                y,
                                paths: [paths[i].clone(), paths[j].clone(), paths[k].clone()],
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(thetas)
}

fn simple_paths(g: &SignedGraph, x: VertexId, y: VertexId) -> Vec<Walk> {
    fn go(g: &SignedGraph, y: VertexId, seen: &mut [bool], vs: &mut Vec<VertexId>, es: &mut Vec<EdgeId>, out: &mut Vec<Walk>) {
        let at = *vs.last().expect("non-empty");
        if at == y {
            out.push(Walk::new(vs.clone(), es.clone()).expect("consistent"));
            return;
        }
        for &(e, w) in g.incident(at) {
            if !seen[w] {
                seen[w] = true;
                vs.push(w);
                es.push(e);
                go(g, y, seen, vs, es, out);
                vs.pop();
                es.pop();
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[x] = true;
    let mut out = Vec::new();
    go(g, y, &mut seen, &mut vec![x], &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaCheck {
    CoAdditive,
    /// A theta with an odd number of its cycles in the set.
    Violated(Theta),
}

fn validate_cycles(g: &SignedGraph, cycles: &[BTreeSet<EdgeId>]) -> Result<()> {
    for c in cycles {
        if as_cycle(g, c).is_none() {
            return Err(Error::NotACycle(c.iter().copied().collect()));
        }
    }
    Ok(())
}

/// Checks that every theta subgraph contains an even number of the given cycles.
pub fn theta_coadditive(g: &SignedGraph, cycles: &[BTreeSet<EdgeId>]) -> Result<ThetaCheck> {
    validate_cycles(g, cycles)?;
    let set: HashSet<&BTreeSet<EdgeId>> = cycles.iter().collect();
    for theta in enumerate_thetas(g, DEFAULT_THETA_VERTEX_CAP)? {
        let inside = theta.cycles().iter().filter(|c| set.contains(c)).count();
        if inside % 2 == 1 {
            return Ok(ThetaCheck::Violated(theta));
        }
    }
    Ok(ThetaCheck::CoAdditive)
}

/// A signature whose negative cycles are exactly `cycles`: positive on a
/// spanning forest, and negative on a non-forest edge iff its fundamental
/// cycle is listed. The result is checked against every cycle of `g`.
pub fn cycles_to_signature(g: &SignedGraph, cycles: &[BTreeSet<EdgeId>]) -> Result<SignedGraph> {
    if let ThetaCheck::Violated(theta) = theta_coadditive(g, cycles)? {
        return Err(Error::NotCoAdditive(Box::new(theta)));
    }
    let wanted: HashSet<&BTreeSet<EdgeId>> = cycles.iter().collect();
    let forest = SpanningForest::new(g);
    let mut signs = vec![Sign::Positive; g.m()];
    for e in forest.non_forest_edges() {
        let c = forest.fundamental_cycle(g, e)?;
        if wanted.contains(&edge_set(&c)) {
            signs[e] = Sign::Negative;
        }
    }
    let sigma = g.with_signs(&signs)?;
    for c in all_cycles(&sigma) {
        let negative = sigma.sign_of_edges(c.edges()).is_negative();
        if negative != wanted.contains(&edge_set(&c)) {
            return Err(Error::OracleDisagreement(c));
        }
    }
    Ok(sigma)
}

/// First violation found by [`exclusive_3walk_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WalkCheck {
    /// No violation among walks of length at most `bound`.
    Pass { bound: usize },
    /// `walk` and its one-step rotation disagree.
    Rotation { walk: Walk, rotated: Walk },
    /// An odd number of `W₁W₂⁻¹`, `W₁W₃⁻¹`, `W₂W₃⁻¹` are members.
    ThreeWalk { walks: [Walk; 3] },
}

impl WalkCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, WalkCheck::Pass { .. })
    }
}

/// Sweeps the rotation property over closed walks of length ≤ `bound`, then
/// the 3-walk condition over `xy`-walks of length ≤ `bound / 2` (so every
/// induced closed walk has length ≤ `bound`).
///
/// For fixed `x`, `y` the 3-walk condition over all triples is equivalent to
/// its restriction to triples whose first walk is a fixed reference `R`:
/// `s(i,j) = s(R,i)·s(R,j)` for all ordered pairs makes every triple product
/// `+`. The sweep therefore costs `O(W²)` oracle calls per vertex pair.
pub fn exclusive_3walk_check<O: WalkOracle + ?Sized>(g: &SignedGraph, o: &O, bound: usize) -> WalkCheck {
    let rotation = for_each_closed_walk(g, bound, |w| {
        if w.is_trivial() {
            return ControlFlow::Continue(());
        }
        let r = w.rotate(1).expect("closed");
        if o.contains(w) != o.contains(&r) {
            ControlFlow::Break(WalkCheck::Rotation { walk: w.clone(), rotated: r })
        } else {
            ControlFlow::Continue(())
        }
    });
    if let Some(v) = rotation {
        return v;
    }
    let half = bound / 2;
    for x in 0..g.n() {
        for y in 0..g.n() {
            let walks = walks_between(g, x, y, half);
            let Some(reference) = walks.first() else { continue };
            let s = |a: &Walk, b: &Walk| o.sign(&a.concat(&b.invert()).expect("both end at y"));
            let from_ref: Vec<Sign> = walks.iter().map(|w| s(reference, w)).collect();
            for (i, wi) in walks.iter().enumerate() {
                for (j, wj) in walks.iter().enumerate() {
                    if from_ref[i] * from_ref[j] * s(wi, wj) == Sign::Negative {
                        return WalkCheck::ThreeWalk { walks: [reference.clone(), wi.clone(), wj.clone()] };
                    }
                }
            }
        }
    }
    WalkCheck::Pass { bound }
}

/// One of the consequences of the 3-walk property that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasicViolation {
    /// [i] a trivial walk is a member.
    Trivial(Walk),
    /// [ii] `WW⁻¹` is a member.
    BackAndForth(Walk),
    /// [iii] `W` and `W⁻¹` disagree.
    Inverse(Walk),
    /// [iv] `σ(WW') ≠ σ(W)σ(W')`.
    Product(Walk, Walk),
    /// [v] `σ(PWP⁻¹) ≠ σ(W)`.
    Conjugate { path: Walk, walk: Walk },
}

/// Checks properties [i]–[v] on all walks within `bound`.
pub fn basic_properties_check<O: WalkOracle + ?Sized>(
    g: &SignedGraph,
    o: &O,
    bound: usize,
) -> Option<BasicViolation> {
    for v in 0..g.n() {
        let t = Walk::trivial(v);
        if o.contains(&t) {
            return Some(BasicViolation::Trivial(t));
        }
    }
    let half = bound / 2;
    for x in 0..g.n() {
        let found = crate::walk::for_each_walk_from(g, x, half, |w| {
            if o.contains(&w.concat(&w.invert()).expect("ends meet")) {
                ControlFlow::Break(BasicViolation::BackAndForth(w.clone()))
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_some() {
            return found;
        }
    }
    let mut closed_at: Vec<Vec<Walk>> = vec![Vec::new(); g.n()];
    let inv = for_each_closed_walk(g, bound, |w| {
        closed_at[w.start()].push(w.clone());
        if o.contains(w) != o.contains(&w.invert()) {
            ControlFlow::Break(BasicViolation::Inverse(w.clone()))
        } else {
            ControlFlow::Continue(())
        }
    });
    if inv.is_some() {
        return inv;
    }
    // Sorted by length so each inner sweep stops at the first walk too long.
    for walks in closed_at.iter_mut() {
        walks.sort_by_key(Walk::len);
    }
    let upto = |walks: &[Walk], len: usize| walks.partition_point(|w| w.len() <= len);
    let mut ab = Walk::trivial(0);
    for walks in &closed_at {
        let signs: Vec<Sign> = walks.iter().map(|w| o.sign(w)).collect();
        for (i, a) in walks.iter().enumerate() {
            for (j, b) in walks[..upto(walks, bound - a.len())].iter().enumerate() {
                a.concat_into(b, &mut ab);
                if o.sign(&ab) != signs[i] * signs[j] {
                    return Some(BasicViolation::Product(a.clone(), b.clone()));
                }
            }
        }
    }
    for x in 0..g.n() {
        let mut paths = Vec::new();
        crate::walk::for_each_walk_from::<()>(g, x, half, |p| {
            if !p.is_trivial() {
                paths.push(p.clone());
            }
            ControlFlow::Continue(())
        });
        let mut pw = Walk::trivial(0);
        let mut conj = Walk::trivial(0);
        for p in &paths {
            let back = p.invert();
            let walks = &closed_at[p.end()];
            for w in &walks[..upto(walks, bound - 2 * p.len())] {
                p.concat_into(w, &mut pw);
                pw.concat_into(&back, &mut conj);
                if o.contains(&conj) != o.contains(w) {
                    return Some(BasicViolation::Conjugate { path: p.clone(), walk: w.clone() });
                }
            }
        }
    }
    None
}

/// Recovers a signature from a walk oracle: positive on a spanning forest,
/// `σ_𝒲(C_e)` on every other edge. Every closed walk of length ≤ `bound` is
/// then compared against the oracle; the first disagreement is an error and
/// proves the oracle is not a sign system.
pub fn signature_from_oracle<O: WalkOracle + ?Sized>(g: &SignedGraph, o: &O, bound: usize) -> Result<SignedGraph> {
    let forest = SpanningForest::new(g);
    let mut signs = vec![Sign::Positive; g.m()];
    for e in forest.non_forest_edges() {
        signs[e] = o.sign(&forest.fundamental_cycle(g, e)?);
    }
    let sigma = g.with_signs(&signs)?;
    let bad = for_each_closed_walk(g, bound, |w| {
        if sigma.sign_of_edges(w.edges()) != o.sign(w) {
            ControlFlow::Break(w.clone())
        } else {
            ControlFlow::Continue(())
        }
    });
    match bad {
        Some(w) => Err(Error::OracleDisagreement(w)),
        None => Ok(sigma),
    }
}

/// A walk system presented by a spanning forest and the non-forest edges
/// whose fundamental cycles are members.
#[derive(Clone, Debug)]
pub struct TreePresentation {
    pub forest: SpanningForest,
    pub negative: BTreeSet<EdgeId>,
}

impl TreePresentation {
    /// `W ∈ 𝒲` iff the fundamental-cycle decomposition of `C_W` uses an odd
    /// number of edges of `E⁻`. The decomposition of an even subgraph is
    /// indexed by its non-forest edges, so this counts `C_W ∩ E⁻`.
    pub fn decide_membership(&self, w: &Walk) -> Result<bool> {
        let c = even_subgraph_of(w)?;
        Ok(c.edges.intersection(&self.negative).count() % 2 == 1)
    }
}

/// The presentation of `o` relative to `forest`, validated against `o` on
/// closed walks of length ≤ `bound`.
pub fn tree_presentation<O: WalkOracle + ?Sized>(
    g: &SignedGraph,
    forest: &SpanningForest,
    o: &O,
    bound: usize,
) -> Result<TreePresentation> {
    let mut negative = BTreeSet::new();
    for e in forest.non_forest_edges() {
        if o.contains(&forest.fundamental_cycle(g, e)?) {
            negative.insert(e);
        }
    }
    let presentation = TreePresentation { forest: forest.clone(), negative };
    let bad = for_each_closed_walk(g, bound, |w| {
        if presentation.decide_membership(w).expect("closed") != o.contains(w) {
            ControlFlow::Break(w.clone())
        } else {
            ControlFlow::Continue(())
        }
    });
    match bad {
        Some(w) => Err(Error::OracleDisagreement(w)),
        None => Ok(presentation),
    }
}

//! Walk-girths `g_ij`: the length of a shortest nontrivial closed walk of
//! each type `ij ∈ Z₂²`.
//!
//! [`walk_girth`] and [`girth_profile`] search the product of the graph with
//! Z₂² (vertex, sign so far, parity so far) breadth first from every source.
//! A closed walk of type `ij` at `v` is exactly a path from `(v, 00)` to
//! `(v, ij)` in that product, so the per-source distance is the shortest such
//! walk and the search terminates once the `4n` states are exhausted. Total
//! cost is `O(n·(n + m))`.
//!
//! [`signed_layers`] and [`layered_walk_girth`] implement the shortest-path
//! layer construction `N_k^±(v)`. Those layers only follow shortest paths, so
//! the layered rules give an upper bound that can miss walks that revisit a
//! vertex (two triangles sharing a vertex, one balanced and one not, have
//! `g₁₀ = 6` while the layered rules report no even negative walk at all).

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

use crate::cycles::all_cycles;
use crate::graph::{Sign, SignedGraph, VertexId};
use crate::walk::{Parity, Walk, WalkType};

/// A walk-girth value; `Unbounded` compares above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Unbounded,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(k) => Some(k),
            Girth::Unbounded => None,
        }
    }

    pub fn parse(s: &str) -> Option<Girth> {
        match s {
            "inf" | "∞" => Some(Girth::Unbounded),
            _ => s.parse().ok().filter(|k| *k > 0).map(Girth::Finite),
        }
    }
}

impl From<Option<usize>> for Girth {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Girth::Unbounded, Girth::Finite)
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Unbounded) => Ordering::Less,
            (Girth::Unbounded, Girth::Finite(_)) => Ordering::Greater,
            (Girth::Unbounded, Girth::Unbounded) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Unbounded => f.write_str("inf"),
        }
    }
}

/// Shortest-path distances in the underlying graph; unreachable pairs get
/// [`UNREACHABLE`].
pub fn distance_matrix(g: &SignedGraph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
            let mut dist = vec![UNREACHABLE; g.n()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(_, y) in g.incident(x) {
                    if dist[y] == UNREACHABLE {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Distance placeholder that cannot overflow when a few lengths are added.
pub const UNREACHABLE: usize = usize::MAX / 4;

/// Layers `N_k^+(v)`, `N_k^-(v)` of vertices at distance exactly `k` from
/// `v` that are reached by a shortest path of the given sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedLayers {
    pub source: VertexId,
    layers: Vec<(Vec<VertexId>, Vec<VertexId>)>,
}

impl SignedLayers {
    pub fn positive(&self, k: usize) -> &[VertexId] {
        self.layers.get(k).map_or(&[], |l| &l.0)
    }

    pub fn negative(&self, k: usize) -> &[VertexId] {
        self.layers.get(k).map_or(&[], |l| &l.1)
    }

    pub fn layer(&self, k: usize, sign: Sign) -> &[VertexId] {
        match sign {
            Sign::Positive => self.positive(k),
            Sign::Negative => self.negative(k),
        }
    }

    /// Index of the last nonempty layer.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }
}

/// Builds the layers inductively: `N_k^ε` collects the unreached vertices
/// joined to `N_{k−1}^+` by an edge of sign `ε` or to `N_{k−1}^-` by an edge
/// of sign `−ε`. Edges (not neighbour vertices) are scanned, so a `±`
/// parallel pair puts its far end in both layers.
pub fn signed_layers(g: &SignedGraph, v: VertexId) -> Option<SignedLayers> {
    if v >= g.n() {
        return None;
    }
    let mut reached = vec![false; g.n()];
    reached[v] = true;
    let mut layers = vec![(vec![v], Vec::new())];
    loop {
        let (pos, neg) = layers.last().expect("non-empty");
        let mut in_pos = vec![false; g.n()];
        let mut in_neg = vec![false; g.n()];
        for (from, via) in [(pos, Sign::Positive), (neg, Sign::Negative)] {
            for &x in from {
                for &(e, y) in g.incident(x) {
                    if !reached[y] {
                        match via * g.sign(e) {
                            Sign::Positive => in_pos[y] = true,
                            Sign::Negative => in_neg[y] = true,
                        }
                    }
                }
            }
        }
        let next_pos: Vec<VertexId> = (0..g.n()).filter(|&y| in_pos[y]).collect();
        let next_neg: Vec<VertexId> = (0..g.n()).filter(|&y| in_neg[y]).collect();
        if next_pos.is_empty() && next_neg.is_empty() {
            break;
        }
        for &y in next_pos.iter().chain(&next_neg) {
            reached[y] = true;
        }
        layers.push((next_pos, next_neg));
    }
    Some(SignedLayers { source: v, layers })
}

/// The per-source layer rules: for `01`/`11` the first `k` at which a layer
/// spans an edge of the matching sign (or the two layers are joined by an
/// edge of the opposite sign) gives `2k+1`; for `10` the first `k` with
/// `N_k^+ ∩ N_k^- ≠ ∅` gives `2k`. Minimised over sources.
///
/// Only shortest paths are followed, so the result is an upper bound on the
/// walk-girth (and may be `Unbounded` when the walk-girth is finite).
pub fn layered_walk_girth(g: &SignedGraph, t: WalkType) -> Girth {
    if t == WalkType::T00 {
        return if g.m() > 0 { Girth::Finite(2) } else { Girth::Unbounded };
    }
    let mut best = Girth::Unbounded;
    for v in 0..g.n() {
        let layers = signed_layers(g, v).expect("vertex in range");
        for k in 0..=layers.depth() {
            let mut side = vec![0u8; g.n()];
            for &x in layers.positive(k) {
                side[x] |= 1;
            }
            for &x in layers.negative(k) {
                side[x] |= 2;
            }
            let hit = if t == WalkType::T10 {
                side.contains(&3)
            } else {
                // an edge inside a layer closes a walk whose sign is the edge
                // sign times the two path signs
                g.edges().iter().any(|e| {
                    let (a, b) = (side[e.u], side[e.v]);
                    let combos = [(1u8, Sign::Positive), (2u8, Sign::Negative)];
                    combos.iter().any(|&(ma, sa)| {
                        combos.iter().any(|&(mb, sb)| {
                            a & ma != 0 && b & mb != 0 && sa * sb * e.sign == t.sign
                        })
                    })
                })
            };
            if hit {
                let len = if t == WalkType::T10 { 2 * k } else { 2 * k + 1 };
                if len > 0 {
                    best = best.min(Girth::Finite(len));
                }
                break;
            }
        }
    }
    best
}

fn state(x: VertexId, t: WalkType) -> usize {
    x * 4 + t.index()
}

fn step_type(t: WalkType, edge_sign: Sign) -> WalkType {
    let parity = if t.parity == Parity::Even { Parity::Odd } else { Parity::Even };
    WalkType::new(t.sign * edge_sign, parity)
}

/// Breadth-first search of the product graph from `(v, 00)`.
struct ProductBfs {
    source: VertexId,
    dist: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>, // (previous state, edge)
}

impl ProductBfs {
    fn run(g: &SignedGraph, v: VertexId) -> Self {
        let mut dist = vec![UNREACHABLE; 4 * g.n()];
        let mut parent = vec![None; 4 * g.n()];
        let start = state(v, WalkType::T00);
        dist[start] = 0;
        let mut queue = VecDeque::from([(v, WalkType::T00)]);
        while let Some((x, t)) = queue.pop_front() {
            let here = state(x, t);
            for &(e, y) in g.incident(x) {
                let nt = step_type(t, g.sign(e));
                let there = state(y, nt);
                if dist[there] == UNREACHABLE {
                    dist[there] = dist[here] + 1;
                    parent[there] = Some((here, e));
                    queue.push_back((y, nt));
                }
            }
        }
        ProductBfs { source: v, dist, parent }
    }

    fn distance_to(&self, x: VertexId, t: WalkType) -> Option<usize> {
        let d = self.dist[state(x, t)];
        (d != UNREACHABLE).then_some(d)
    }

    fn walk_to(&self, x: VertexId, t: WalkType) -> Walk {
        let mut vs = vec![x];
        let mut es = Vec::new();
        let mut s = state(x, t);
        while let Some((prev, e)) = self.parent[s] {
            es.push(e);
            vs.push(prev / 4);
            s = prev;
        }
        debug_assert_eq!(vs.last(), Some(&self.source));
        vs.reverse();
        es.reverse();
        Walk::new(vs, es).expect("consistent")
    }
}

/// A walk-girth together with a closed walk realising it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirthWitness {
    pub value: Girth,
    pub witness: Option<Walk>,
}

fn zero_type(g: &SignedGraph) -> GirthWitness {
    // the first edge traversed there and back
    match g.edges().first() {
        None => GirthWitness { value: Girth::Unbounded, witness: None },
        Some(e) => GirthWitness {
            value: Girth::Finite(2),
            witness: Some(Walk::new(vec![e.u, e.v, e.u], vec![0, 0]).expect("consistent")),
        },
    }
}

/// Shortest nontrivial closed walk of type `t`, with a witness. Ties are
/// broken by the lowest source vertex.
pub fn walk_girth(g: &SignedGraph, t: WalkType) -> GirthWitness {
    if t == WalkType::T00 {
        return zero_type(g);
    }
    let mut best: Option<(usize, ProductBfs)> = None;
    for v in 0..g.n() {
        let bfs = ProductBfs::run(g, v);
        if let Some(d) = bfs.distance_to(v, t) {
            if best.as_ref().is_none_or(|(b, _)| d < *b) {
                best = Some((d, bfs));
            }
        }
    }
    match best {
        None => GirthWitness { value: Girth::Unbounded, witness: None },
        Some((d, bfs)) => GirthWitness { value: Girth::Finite(d), witness: Some(bfs.walk_to(bfs.source, t)) },
    }
}

/// The four walk-girths `g₀₀, g₀₁, g₁₀, g₁₁` with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirthProfile {
    entries: [GirthWitness; 4],
}

impl GirthProfile {
    pub fn get(&self, t: WalkType) -> Girth {
        self.entries[t.index()].value
    }

    pub fn witness(&self, t: WalkType) -> Option<&Walk> {
        self.entries[t.index()].witness.as_ref()
    }

    pub fn values(&self) -> [Girth; 4] {
        [0, 1, 2, 3].map(|i| self.entries[i].value)
    }

    /// `m = max(g₀₁, g₁₀, g₁₁)`.
    pub fn max_nonzero(&self) -> Girth {
        WalkType::NONZERO.iter().map(|&t| self.get(t)).max().expect("three entries")
    }
}

impl fmt::Display for GirthProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.values();
        write!(f, "g00={a} g01={b} g10={c} g11={d}")
    }
}

/// All four walk-girths from one product search per source.
pub fn girth_profile(g: &SignedGraph) -> GirthProfile {
    let mut best: [Option<(usize, VertexId, Walk)>; 3] = [None, None, None];
    for v in 0..g.n() {
        let bfs = ProductBfs::run(g, v);
        for (slot, &t) in best.iter_mut().zip(&WalkType::NONZERO) {
            if let Some(d) = bfs.distance_to(v, t) {
                if slot.as_ref().is_none_or(|(b, _, _)| d < *b) {
                    *slot = Some((d, v, bfs.walk_to(v, t)));
                }
            }
        }
    }
    let [b01, b10, b11] = best.map(|b| match b {
        None => GirthWitness { value: Girth::Unbounded, witness: None },
        Some((d, _, w)) => GirthWitness { value: Girth::Finite(d), witness: Some(w) },
    });
    GirthProfile { entries: [zero_type(g), b01, b10, b11] }
}

/// Result of the no-homomorphism girth test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomFilter {
    /// Necessary conditions hold; a homomorphism may or may not exist.
    Pass,
    /// `g_ij(source) < g_ij(target)` for this type, so no homomorphism exists.
    Fail(WalkType),
}

pub fn no_hom_filter(source: &SignedGraph, target: &SignedGraph) -> HomFilter {
    compare_profiles(&girth_profile(source), &girth_profile(target))
}

pub fn compare_profiles(source: &GirthProfile, target: &GirthProfile) -> HomFilter {
    WalkType::ALL
        .into_iter()
        .find(|&t| source.get(t) < target.get(t))
        .map_or(HomFilter::Pass, HomFilter::Fail)
}

/// Which kinds of closed walks realise a walk-girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    CyclesOnly,
    WalksOnly,
    Both,
    /// The walk-girth is unbounded.
    None,
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Realization::CyclesOnly => "cycles-only",
            Realization::WalksOnly => "walks-only",
            Realization::Both => "both",
            Realization::None => "none",
        })
    }
}

/// For each type, whether the shortest closed walks of that type include a
/// cycle, a non-cyclic closed walk, or both. Enumerates closed walks of the
/// exact girth length (pruned by product distances); desk scale only.
pub fn realization_analysis(g: &SignedGraph) -> [Realization; 4] {
    let profile = girth_profile(g);
    let searches: Vec<ProductBfs> = (0..g.n()).map(|v| ProductBfs::run(g, v)).collect();
    let cycles = all_cycles(g);
    WalkType::ALL.map(|t| {
        let Some(len) = profile.get(t).finite() else { return Realization::None };
        let has_cycle = cycles
            .iter()
            .any(|c| c.len() == len && g.sign_of_edges(c.edges()) == t.sign);
        let has_walk = non_cyclic_closed_walk(g, &searches, t, len);
        match (has_cycle, has_walk) {
            (true, true) => Realization::Both,
            (true, false) => Realization::CyclesOnly,
            (false, true) => Realization::WalksOnly,
            (false, false) => unreachable!("a finite walk-girth is realised by some closed walk"),
        }
    })
}

fn non_cyclic_closed_walk(g: &SignedGraph, searches: &[ProductBfs], t: WalkType, len: usize) -> bool {
    fn go(
        g: &SignedGraph,
        from_start: &ProductBfs,
        t: WalkType,
        len: usize,
        w: &mut Vec<(usize, VertexId)>,
        acc: WalkType,
    ) -> ControlFlow<()> {
        let at = w.last().map_or(from_start.source, |x| x.1);
        if w.len() == len {
            if at == from_start.source && acc == t {
                let vs: Vec<VertexId> = std::iter::once(from_start.source).chain(w.iter().map(|x| x.1)).collect();
                let es: Vec<usize> = w.iter().map(|x| x.0).collect();
                if !Walk::new(vs, es).expect("consistent").is_cycle() {
                    return ControlFlow::Break(());
                }
            }
            return ControlFlow::Continue(());
        }
        for &(e, y) in g.incident(at) {
            let next = step_type(acc, g.sign(e));
            // a walk from y back to the source must supply the missing type
            let missing = next + t;
            match from_start.distance_to(y, missing) {
                Some(d) if w.len() + 1 + d <= len => {}
                _ => continue,
            }
            w.push((e, y));
            let flow = go(g, from_start, t, len, w, next);
            w.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    searches
        .iter()
        .any(|bfs| go(g, bfs, t, len, &mut Vec::with_capacity(len), WalkType::T00).is_break())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn k3(sign: Sign) -> SignedGraph {
        SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], sign).unwrap()
    }

    /// Vertex 0 shared; triangle 0-1-2 all positive, triangle 0-3-4 with 3-4 negative.
    fn two_triangles() -> SignedGraph {
        SignedGraph::new(5, [(0, 1, P), (1, 2, P), (2, 0, P), (0, 3, P), (3, 4, N), (4, 0, P)]).unwrap()
    }

    fn f(k: usize) -> Girth {
        Girth::Finite(k)
    }

    const INF: Girth = Girth::Unbounded;

    #[test]
    fn layers_examples() {
        let g = SignedGraph::new(3, [(0, 1, P), (1, 2, N)]).unwrap();
        let l = signed_layers(&g, 0).unwrap();
        assert_eq!(l.negative(2), &[2]);
        assert!(l.positive(2).is_empty());

        let spc1 = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        let l = signed_layers(&spc1, 0).unwrap();
        assert_eq!(l.positive(1), &[1]);
        assert_eq!(l.negative(1), &[1]);

        let iso = SignedGraph::new(2, []).unwrap();
        let l = signed_layers(&iso, 1).unwrap();
        assert!(l.positive(1).is_empty() && l.negative(1).is_empty());
        assert!(signed_layers(&iso, 2).is_none());
    }

    #[test]
    fn k3_negative_girths() {
        let g = k3(N);
        assert_eq!(walk_girth(&g, WalkType::T11).value, f(3));
        assert_eq!(walk_girth(&g, WalkType::T01).value, INF);
        assert_eq!(walk_girth(&g, WalkType::T10).value, INF);
    }

    #[test]
    fn c4_one_negative_even_girth() {
        let g = SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap();
        assert_eq!(walk_girth(&g, WalkType::T10).value, f(4));
    }

    #[test]
    fn two_triangles_need_a_walk() {
        let g = two_triangles();
        let p = girth_profile(&g);
        assert_eq!(p.values(), [f(2), f(3), f(6), f(3)]);
        let w = p.witness(WalkType::T10).unwrap();
        assert_eq!(w.len(), 6);
        assert!(w.is_closed() && !w.is_cycle());
        assert_eq!(g.walk_type(w).unwrap(), WalkType::T10);
        // shortest-path layers miss it entirely
        assert_eq!(layered_walk_girth(&g, WalkType::T10), INF);
    }

    #[test]
    fn profile_examples() {
        let edgeless = SignedGraph::new(3, []).unwrap();
        assert_eq!(girth_profile(&edgeless).values(), [INF; 4]);
        assert_eq!(girth_profile(&k3(P)).values(), [f(2), f(3), INF, INF]);
        assert_eq!(girth_profile(&k3(P)).to_string(), "g00=2 g01=3 g10=inf g11=inf");
    }

    #[test]
    fn witnesses_have_claimed_type_and_length() {
        let g = two_triangles();
        let p = girth_profile(&g);
        for t in WalkType::ALL {
            let w = p.witness(t).unwrap();
            assert_eq!(Girth::Finite(w.len()), p.get(t));
            assert_eq!(g.walk_type(w).unwrap(), t);
        }
    }

    #[test]
    fn loops_are_length_one_walks() {
        let g = SignedGraph::new(1, [(0, 0, N)]).unwrap();
        assert_eq!(girth_profile(&g).values(), [f(2), INF, INF, f(1)]);
    }

    #[test]
    fn filter_examples() {
        let c5 = SignedGraph::uniform(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], P).unwrap();
        assert_eq!(no_hom_filter(&c5, &c5), HomFilter::Pass);
        assert_eq!(no_hom_filter(&c5, &k3(P)), HomFilter::Pass);
        assert_eq!(no_hom_filter(&k3(P), &c5), HomFilter::Fail(WalkType::T01));
    }

    #[test]
    fn realization_examples() {
        let r = realization_analysis(&k3(N));
        assert_eq!(r[WalkType::T11.index()], Realization::CyclesOnly);
        assert_eq!(r[WalkType::T01.index()], Realization::None);
        let r = realization_analysis(&two_triangles());
        assert_eq!(r[WalkType::T10.index()], Realization::WalksOnly);
        assert_eq!(r[WalkType::T01.index()], Realization::CyclesOnly);
        // g00 = 2 is an edge traversed twice, or a digon
        assert_eq!(r[WalkType::T00.index()], Realization::WalksOnly);
    }

    #[test]
    fn layered_rules_are_exact_on_short_cycles() {
        for g in [k3(N), k3(P)] {
            for t in WalkType::ALL {
                assert_eq!(layered_walk_girth(&g, t), walk_girth(&g, t).value, "{t}");
            }
        }
    }

    #[test]
    fn girth_ordering_and_parsing() {
        assert!(f(100) < INF);
        assert_eq!(Girth::parse("inf"), Some(INF));
        assert_eq!(Girth::parse("4"), Some(f(4)));
        assert_eq!(Girth::parse("0"), None);
    }
}

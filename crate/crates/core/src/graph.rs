//! Signed multigraphs: vertices, signed edges, switching.
//!
//! Vertex and edge ids are dense indices (`0..n`, `0..m`). Loops and
//! parallel edges are ordinary edge records.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::walk::{Parity, Walk, WalkType};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Sign of an edge or a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    /// `+` for 0, `-` for 1; the additive notation of Z₂.
    pub fn from_bit(bit: u8) -> Sign {
        if bit & 1 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Sign::Positive => 0,
            Sign::Negative => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bit(self.bit() ^ rhs.bit())
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Negative
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One edge record. The endpoint pair is unordered; `u <= v` is not enforced,
/// the original orientation is kept so that files round-trip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `x`; `x` itself for a loop.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn joins(&self, a: VertexId, b: VertexId) -> bool {
        (self.u == a && self.v == b) || (self.u == b && self.v == a)
    }

    fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// A set of vertices to be switched.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchSet(BTreeSet<VertexId>);

impl SwitchSet {
    pub fn empty() -> Self {
        SwitchSet(BTreeSet::new())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn complement(&self, n: usize) -> SwitchSet {
        (0..n).filter(|v| !self.contains(*v)).collect()
    }

    pub fn symmetric_difference(&self, other: &SwitchSet) -> SwitchSet {
        self.0.symmetric_difference(&other.0).copied().collect()
    }

    /// Characteristic vector over `0..n`.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter().filter(|v| *v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn from_mask(mask: &[bool]) -> SwitchSet {
        mask.iter()
            .enumerate()
            .filter_map(|(v, b)| b.then_some(v))
            .collect()
    }
}

impl FromIterator<VertexId> for SwitchSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        SwitchSet(iter.into_iter().collect())
    }
}

impl fmt::Display for SwitchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A signed multigraph. Immutable once built; operations return new graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    labels: BTreeMap<VertexId, String>,
    // (edge, other endpoint) per vertex, in edge-id order; a loop appears once.
    incidence: Vec<Vec<(EdgeId, VertexId)>>,
}

impl SignedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Sign)>,
    {
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v, sign)| Edge { u, v, sign })
            .collect();
        for (id, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::UnknownVertex { vertex: x, edge: Some(id) });
                }
            }
        }
        let mut incidence = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            incidence[e.u].push((id, e.v));
            if !e.is_loop() {
                incidence[e.v].push((id, e.u));
            }
        }
        Ok(SignedGraph { n, edges, labels: BTreeMap::new(), incidence })
    }

    /// Graph with every edge carrying the same sign.
    pub fn uniform<I>(n: usize, pairs: I, sign: Sign) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::new(n, pairs.into_iter().map(|(u, v)| (u, v, sign)))
    }

    pub fn with_labels(mut self, labels: BTreeMap<VertexId, String>) -> Result<Self> {
        if let Some(&v) = labels.keys().find(|v| **v >= self.n) {
            return Err(Error::UnknownVertex { vertex: v, edge: None });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn sign(&self, e: EdgeId) -> Sign {
        self.edges[e].sign
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, String> {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// `(edge, neighbour)` pairs at `v` in edge-id order.
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.incidence[v]
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v]
            .iter()
            .map(|&(e, _)| if self.edges[e].is_loop() { 2 } else { 1 })
            .sum()
    }

    pub fn negative_edges(&self) -> Vec<EdgeId> {
        (0..self.m()).filter(|&e| self.sign(e).is_negative()).collect()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Edge ids joining `a` and `b` (loops when `a == b`).
    pub fn edges_between(&self, a: VertexId, b: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incidence[a]
            .iter()
            .filter(move |&&(_, w)| w == b)
            .map(|&(e, _)| e)
    }

    /// Same underlying graph, new signature.
    pub fn with_signs(&self, signs: &[Sign]) -> Result<Self> {
        if signs.len() != self.m() {
            return Err(Error::EdgeCountMismatch { expected: self.m(), found: signs.len() });
        }
        let mut g = self.clone();
        for (e, s) in g.edges.iter_mut().zip(signs) {
            e.sign = *s;
        }
        Ok(g)
    }

    pub fn all_positive(&self) -> Self {
        self.with_signs(&vec![Sign::Positive; self.m()]).expect("lengths agree")
    }

    pub fn all_negative(&self) -> Self {
        self.with_signs(&vec![Sign::Negative; self.m()]).expect("lengths agree")
    }

    /// (G, −σ).
    pub fn negated(&self) -> Self {
        let signs: Vec<Sign> = self.edges.iter().map(|e| -e.sign).collect();
        self.with_signs(&signs).expect("lengths agree")
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.m() == other.m()
            && self.edges.iter().zip(&other.edges).all(|(a, b)| a.u == b.u && a.v == b.v)
    }

    pub fn in_cut(&self, e: EdgeId, x: &SwitchSet) -> bool {
        let edge = &self.edges[e];
        x.contains(edge.u) != x.contains(edge.v)
    }

    /// Negate the signs on the cut `[X, V∖X]`.
    pub fn switch(&self, x: &SwitchSet) -> Result<Self> {
        if let Some(v) = x.iter().find(|v| *v >= self.n) {
            return Err(Error::UnknownVertex { vertex: v, edge: None });
        }
        let mut g = self.clone();
        for e in g.edges.iter_mut() {
            if x.contains(e.u) != x.contains(e.v) {
                e.sign = -e.sign;
            }
        }
        Ok(g)
    }

    /// Connected component index per vertex, plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &(_, y) in &self.incidence[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Sign of a walk, counting repeated edges; trivial walks are positive.
    pub fn sign_of_walk(&self, w: &Walk) -> Result<Sign> {
        self.validate_walk(w)?;
        Ok(self.sign_of_edges(w.edges()))
    }

    /// Product of edge signs without incidence validation.
    pub fn sign_of_edges(&self, edges: &[EdgeId]) -> Sign {
        edges.iter().fold(Sign::Positive, |acc, &e| acc * self.edges[e].sign)
    }

    pub fn walk_type(&self, w: &Walk) -> Result<WalkType> {
        Ok(WalkType::new(self.sign_of_walk(w)?, Parity::of_len(w.len())))
    }

    /// Checks that every step `v_{i-1} e_i v_i` is an incidence of this graph.
    pub fn validate_walk(&self, w: &Walk) -> Result<()> {
        let vs = w.vertices();
        if let Some(&v) = vs.iter().find(|v| **v >= self.n) {
            return Err(Error::InvalidWalk { index: 0, reason: format!("vertex {v} out of range") });
        }
        for (i, &e) in w.edges().iter().enumerate() {
            if e >= self.m() {
                return Err(Error::InvalidWalk { index: i + 1, reason: format!("edge {e} out of range") });
            }
            if !self.edges[e].joins(vs[i], vs[i + 1]) {
                return Err(Error::InvalidWalk {
                    index: i + 1,
                    reason: format!("edge {e} does not join {} and {}", vs[i], vs[i + 1]),
                });
            }
        }
        Ok(())
    }

    /// Two-colouring of the underlying graph, or an odd cycle.
    pub fn bipartition(&self) -> std::result::Result<Vec<bool>, Walk> {
        crate::equivalence::bipartition_of(self, |_| true)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Keep at most one positive and one negative edge per endpoint pair.
    ///
    /// Returns the reduced graph and, for every original edge, the id of the
    /// edge it was merged into.
    pub fn reduced(&self) -> (SignedGraph, Vec<EdgeId>) {
        let mut seen: BTreeMap<((VertexId, VertexId), Sign), EdgeId> = BTreeMap::new();
        let mut kept = Vec::new();
        let mut map = Vec::with_capacity(self.m());
        for e in &self.edges {
            let id = *seen.entry((e.key(), e.sign)).or_insert_with(|| {
                kept.push((e.u, e.v, e.sign));
                kept.len() - 1
            });
            map.push(id);
        }
        let g = SignedGraph::new(self.n, kept)
            .expect("endpoints unchanged")
            .with_labels(self.labels.clone())
            .expect("vertex set unchanged");
        (g, map)
    }

    /// Copy without edge `e`; remaining edges keep their relative order.
    pub fn without_edge(&self, e: EdgeId) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| *id != e)
            .map(|(_, x)| (x.u, x.v, x.sign));
        SignedGraph::new(self.n, edges)
            .expect("endpoints unchanged")
            .with_labels(self.labels.clone())
            .expect("vertex set unchanged")
    }

    /// Copy without vertex `v` and its incident edges. Vertices above `v`
    /// shift down by one; the returned vector maps new ids to old ids.
    pub fn without_vertex(&self, v: VertexId) -> (SignedGraph, Vec<VertexId>) {
        let keep: Vec<VertexId> = (0..self.n).filter(|&x| x != v).collect();
        (self.induced(&keep), keep)
    }

    /// Subgraph induced by `keep` (in the given order).
    pub fn induced(&self, keep: &[VertexId]) -> SignedGraph {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &x) in keep.iter().enumerate() {
            new_id[x] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_id[e.u] != usize::MAX && new_id[e.v] != usize::MAX)
            .map(|e| (new_id[e.u], new_id[e.v], e.sign));
        let labels = keep
            .iter()
            .enumerate()
            .filter_map(|(i, x)| self.labels.get(x).map(|l| (i, l.clone())))
            .collect();
        SignedGraph::new(keep.len(), edges)
            .expect("ids remapped into range")
            .with_labels(labels)
            .expect("ids remapped into range")
    }

    /// Subgraph on `vertices` (in the given order) keeping only the listed
    /// edges, in edge-id order. Edges with an endpoint outside `vertices`
    /// are dropped.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &[EdgeId]) -> SignedGraph {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &x) in vertices.iter().enumerate() {
            new_id[x] = i;
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        let kept = edges
            .iter()
            .map(|&e| &self.edges[e])
            .filter(|e| new_id[e.u] != usize::MAX && new_id[e.v] != usize::MAX)
            .map(|e| (new_id[e.u], new_id[e.v], e.sign));
        let labels = vertices
            .iter()
            .enumerate()
            .filter_map(|(i, x)| self.labels.get(x).map(|l| (i, l.clone())))
            .collect();
        SignedGraph::new(vertices.len(), kept)
            .expect("ids remapped into range")
            .with_labels(labels)
            .expect("ids remapped into range")
    }
}

//! Walks `v₀ e₁ v₁ … e_k v_k`, walk types in Z₂², and bounded walk enumeration.

use std::fmt;
use std::ops::{Add, ControlFlow};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_len(len: usize) -> Parity {
        if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Parity {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Type `ij` of a closed walk: `i` is the sign bit (1 = negative) and `j`
/// the parity bit (1 = odd), so `01` is positive odd and `10` negative even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkType {
    pub sign: Sign,
    pub parity: Parity,
}

impl WalkType {
    pub const T00: WalkType = WalkType { sign: Sign::Positive, parity: Parity::Even };
    pub const T01: WalkType = WalkType { sign: Sign::Positive, parity: Parity::Odd };
    pub const T10: WalkType = WalkType { sign: Sign::Negative, parity: Parity::Even };
    pub const T11: WalkType = WalkType { sign: Sign::Negative, parity: Parity::Odd };
    pub const ALL: [WalkType; 4] = [Self::T00, Self::T01, Self::T10, Self::T11];
    pub const NONZERO: [WalkType; 3] = [Self::T01, Self::T10, Self::T11];

    pub fn new(sign: Sign, parity: Parity) -> Self {
        WalkType { sign, parity }
    }

    /// Index `2i + j` in `0..4`.
    pub fn index(self) -> usize {
        (self.sign.bit() as usize) * 2 + self.parity.bit() as usize
    }

    pub fn from_index(index: usize) -> Self {
        WalkType::new(Sign::from_bit((index >> 1) as u8), Parity::from_bit(index as u8))
    }

    /// Parses `"00"`, `"01"`, `"10"` or `"11"`.
    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "00" => Some(Self::T00),
            "01" => Some(Self::T01),
            "10" => Some(Self::T10),
            "11" => Some(Self::T11),
            _ => None,
        }
    }

    pub fn code(self) -> &'static str {
        ["00", "01", "10", "11"][self.index()]
    }
}

impl Add for WalkType {
    type Output = WalkType;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: WalkType) -> WalkType {
        WalkType::from_index(self.index() ^ rhs.index())
    }
}

impl fmt::Display for WalkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// An alternating vertex/edge sequence. Incidence against a particular graph
/// is checked by [`SignedGraph::validate_walk`]; the algebra here is purely
/// sequence manipulation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Walk {
    pub fn trivial(v: VertexId) -> Self {
        Walk { vertices: vec![v], edges: Vec::new() }
    }

    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self> {
        if vertices.len() != edges.len() + 1 {
            return Err(Error::InvalidWalk {
                index: 0,
                reason: format!("{} vertices for {} edges", vertices.len(), edges.len()),
            });
        }
        Ok(Walk { vertices, edges })
    }

    /// Builds the walk that starts at `start` and follows `edges` in `g`.
    pub fn from_edges(g: &SignedGraph, start: VertexId, edges: &[EdgeId]) -> Result<Self> {
        if start >= g.n() {
            return Err(Error::UnknownVertex { vertex: start, edge: None });
        }
        let mut vertices = vec![start];
        let mut at = start;
        for (i, &e) in edges.iter().enumerate() {
            if e >= g.m() {
                return Err(Error::InvalidWalk { index: i + 1, reason: format!("edge {e} out of range") });
            }
            let edge = g.edge(e);
            if edge.u != at && edge.v != at {
                return Err(Error::InvalidWalk {
                    index: i + 1,
                    reason: format!("edge {e} is not incident to {at}"),
                });
            }
            at = edge.other(at);
            vertices.push(at);
        }
        Ok(Walk { vertices, edges: edges.to_vec() })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("walk has a vertex")
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// A closed walk of length ≥ 1 whose only repetition is `v₀ = v_k`.
    pub fn is_cycle(&self) -> bool {
        if !self.is_closed() || self.is_trivial() {
            return false;
        }
        let k = self.len();
        let mut vs = self.vertices[..k].to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        vs.len() == k && es.len() == k
    }

    /// No repeated vertex or edge.
    pub fn is_path(&self) -> bool {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == self.vertices.len()
    }

    pub fn invert(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        Walk { vertices, edges }
    }

    /// The rotation starting at the `i`-th vertex of a closed walk.
    pub fn rotate(&self, i: usize) -> Result<Walk> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let k = self.len();
        if k == 0 {
            return if i == 0 { Ok(self.clone()) } else { Err(Error::RotationOutOfRange { index: i, len: 0 }) };
        }
        if i > k {
            return Err(Error::RotationOutOfRange { index: i, len: k });
        }
        let i = i % k;
        let mut vertices: Vec<VertexId> = (0..k).map(|j| self.vertices[(i + j) % k]).collect();
        vertices.push(self.vertices[i]);
        let edges = (0..k).map(|j| self.edges[(i + j) % k]).collect();
        Ok(Walk { vertices, edges })
    }

    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.end() != other.start() {
            return Err(Error::EndpointMismatch { end: self.end(), start: other.start() });
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Walk { vertices, edges })
    }

    /// `self` followed by `other`, written into `out`, reusing its storage.
    /// The caller guarantees that the ends meet.
    pub(crate) fn concat_into(&self, other: &Walk, out: &mut Walk) {
        debug_assert_eq!(self.end(), other.start());
        out.vertices.clear();
        out.vertices.extend_from_slice(&self.vertices);
        out.vertices.extend_from_slice(&other.vertices[1..]);
        out.edges.clear();
        out.edges.extend_from_slice(&self.edges);
        out.edges.extend_from_slice(&other.edges);
    }

    fn push(&mut self, e: EdgeId, v: VertexId) {
        self.edges.push(e);
        self.vertices.push(v);
    }

    fn pop(&mut self) {
        self.edges.pop();
        self.vertices.pop();
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (e, v) in self.edges.iter().zip(&self.vertices[1..]) {
            write!(f, " e{} {}", e + 1, v)?;
        }
        Ok(())
    }
}

/// Visits every walk starting at `start` with at most `max_len` edges,
/// depth first, edges tried in incidence order. The trivial walk comes first.
pub fn for_each_walk_from<B>(
    g: &SignedGraph,
    start: VertexId,
    max_len: usize,
    mut visit: impl FnMut(&Walk) -> ControlFlow<B>,
) -> Option<B> {
    let mut w = Walk::trivial(start);
    match walk_dfs(g, &mut w, max_len, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

fn walk_dfs<B>(
    g: &SignedGraph,
    w: &mut Walk,
    max_len: usize,
    visit: &mut impl FnMut(&Walk) -> ControlFlow<B>,
) -> ControlFlow<B> {
    visit(w)?;
    if w.len() == max_len {
        return ControlFlow::Continue(());
    }
    let at = w.end();
    for &(e, next) in g.incident(at) {
        w.push(e, next);
        let flow = walk_dfs(g, w, max_len, visit);
        w.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visits every closed walk (trivial ones included) of length at most
/// `max_len`, grouped by start vertex in id order.
pub fn for_each_closed_walk<B>(
    g: &SignedGraph,
    max_len: usize,
    mut visit: impl FnMut(&Walk) -> ControlFlow<B>,
) -> Option<B> {
    let dist = crate::girth::distance_matrix(g);
    for start in 0..g.n() {
        let mut w = Walk::trivial(start);
        let flow = closed_dfs(g, &dist, &mut w, max_len, &mut visit);
        if let ControlFlow::Break(b) = flow {
            return Some(b);
        }
    }
    None
}

fn closed_dfs<B>(
    g: &SignedGraph,
    dist: &[Vec<usize>],
    w: &mut Walk,
    max_len: usize,
    visit: &mut impl FnMut(&Walk) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if w.is_closed() {
        visit(w)?;
    }
    let start = w.start();
    for &(e, next) in g.incident(w.end()) {
        // prune branches that cannot return in time
        if w.len() + 1 + dist[next][start] > max_len {
            continue;
        }
        w.push(e, next);
        let flow = closed_dfs(g, dist, w, max_len, visit);
        w.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Collects all `x`–`y` walks of length at most `max_len`.
pub fn walks_between(g: &SignedGraph, x: VertexId, y: VertexId, max_len: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    for_each_walk_from::<()>(g, x, max_len, |w| {
        if w.end() == y {
            out.push(w.clone());
        }
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn k3_neg() -> SignedGraph {
        SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], N).unwrap()
    }

    fn triangle() -> Walk {
        Walk::new(vec![0, 1, 2, 0], vec![0, 1, 2]).unwrap()
    }

    #[test]
    fn triangle_sign_negative() {
        assert_eq!(k3_neg().sign_of_walk(&triangle()).unwrap(), N);
    }

    #[test]
    fn trivial_walk_is_positive_and_closed() {
        let w = Walk::trivial(1);
        assert!(w.is_closed());
        assert_eq!(k3_neg().sign_of_walk(&w).unwrap(), P);
    }

    #[test]
    fn path_and_back_is_positive() {
        let g = k3_neg();
        let p = Walk::from_edges(&g, 0, &[0, 1]).unwrap();
        let w = p.concat(&p.invert()).unwrap();
        assert_eq!(g.sign_of_walk(&w).unwrap(), P);
    }

    #[test]
    fn invalid_walk_names_first_bad_step() {
        let g = k3_neg();
        let w = Walk::new(vec![0, 1, 0], vec![0, 1]).unwrap();
        match g.sign_of_walk(&w) {
            Err(Error::InvalidWalk { index, .. }) => assert_eq!(index, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rotate_requires_closed() {
        let w = Walk::new(vec![0, 1], vec![0]).unwrap();
        assert_eq!(w.rotate(1), Err(Error::NotClosed));
        assert_eq!(triangle().rotate(1).unwrap().vertices(), &[1, 2, 0, 1]);
        assert_eq!(triangle().rotate(3).unwrap(), triangle());
    }

    #[test]
    fn concat_requires_matching_endpoints() {
        let a = Walk::new(vec![0, 1], vec![0]).unwrap();
        let b = Walk::new(vec![2, 0], vec![2]).unwrap();
        assert!(matches!(a.concat(&b), Err(Error::EndpointMismatch { end: 1, start: 2 })));
    }

    #[test]
    fn type_addition() {
        assert_eq!(WalkType::T01 + WalkType::T10, WalkType::T11);
        assert_eq!(WalkType::T11 + WalkType::T11, WalkType::T00);
        assert_eq!(WalkType::from_code("10"), Some(WalkType::T10));
        assert_eq!(WalkType::T10.sign, N);
        assert_eq!(WalkType::T01.parity, Parity::Odd);
    }

    #[test]
    fn cycle_detection() {
        assert!(triangle().is_cycle());
        let w = triangle().concat(&triangle()).unwrap();
        assert!(!w.is_cycle());
        assert!(!Walk::trivial(0).is_cycle());
    }

    #[test]
    fn closed_walk_count_on_loop() {
        // single vertex with one loop: exactly one closed walk per length
        let g = SignedGraph::new(1, [(0, 0, N)]).unwrap();
        let mut count = 0;
        for_each_closed_walk::<()>(&g, 4, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 5);
    }

    #[test]
    fn closed_walks_of_k3_match_trace() {
        // trace(A^k) for K3: 3, 0, 6, 6, 18 for k = 0..4 (k = 0 counts trivial walks)
        let g = k3_neg();
        let mut by_len = [0usize; 5];
        for_each_closed_walk::<()>(&g, 4, |w| {
            by_len[w.len()] += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(by_len, [3, 0, 6, 6, 18]);
    }
}

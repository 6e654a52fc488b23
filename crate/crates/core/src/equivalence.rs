//! Spanning forests, fundamental cycles, balance, switching equivalence and
//! the three special classes.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, SwitchSet, VertexId};
use crate::walk::Walk;

/// Breadth-first spanning forest. Roots are the lowest vertex id of each
/// component and edges are scanned in id order, so the forest is a function
/// of the graph alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    parent: Vec<Option<(VertexId, EdgeId)>>,
    root: Vec<VertexId>,
    depth: Vec<usize>,
    in_forest: Vec<bool>,
    roots: Vec<VertexId>,
}

impl SpanningForest {
    pub fn new(g: &SignedGraph) -> Self {
        Self::filtered(g, |_| true)
    }

    /// Forest of the spanning subgraph made of the edges accepted by `keep`.
    pub fn filtered(g: &SignedGraph, keep: impl Fn(EdgeId) -> bool) -> Self {
        let n = g.n();
        let mut parent = vec![None; n];
        let mut root = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut in_forest = vec![false; g.m()];
        let mut roots = Vec::new();
        let mut queue = VecDeque::new();
        for r in 0..n {
            if root[r] != usize::MAX {
                continue;
            }
            root[r] = r;
            roots.push(r);
            queue.push_back(r);
            while let Some(x) = queue.pop_front() {
                for &(e, y) in g.incident(x) {
                    if root[y] == usize::MAX && keep(e) {
                        root[y] = r;
                        parent[y] = Some((x, e));
                        depth[y] = depth[x] + 1;
                        in_forest[e] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        SpanningForest { parent, root, depth, in_forest, roots }
    }

    pub fn parent(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        self.parent[v]
    }

    pub fn root_of(&self, v: VertexId) -> VertexId {
        self.root[v]
    }

    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.in_forest[e]
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.in_forest.iter().enumerate().filter_map(|(e, t)| t.then_some(e))
    }

    pub fn non_forest_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.in_forest.iter().enumerate().filter_map(|(e, t)| (!t).then_some(e))
    }

    /// Forest path from `a` to `b`, if they share a component.
    pub fn path(&self, a: VertexId, b: VertexId) -> Option<Walk> {
        if self.root[a] != self.root[b] {
            return None;
        }
        let (mut x, mut y) = (a, b);
        let mut up_vs = vec![a];
        let mut up_es = Vec::new();
        let mut down_vs = vec![b];
        let mut down_es = Vec::new();
        while self.depth[x] > self.depth[y] {
            let (p, e) = self.parent[x].expect("non-root has parent");
            up_es.push(e);
            up_vs.push(p);
            x = p;
        }
        while self.depth[y] > self.depth[x] {
            let (p, e) = self.parent[y].expect("non-root has parent");
            down_es.push(e);
            down_vs.push(p);
            y = p;
        }
        while x != y {
            let (px, ex) = self.parent[x].expect("non-root has parent");
            let (py, ey) = self.parent[y].expect("non-root has parent");
            up_es.push(ex);
            up_vs.push(px);
            down_es.push(ey);
            down_vs.push(py);
            x = px;
            y = py;
        }
        // up_vs ends at the meeting vertex, as does down_vs
        down_vs.pop();
        up_vs.extend(down_vs.into_iter().rev());
        up_es.extend(down_es.into_iter().rev());
        Some(Walk::new(up_vs, up_es).expect("lengths consistent"))
    }

    /// The unique cycle in forest + `e`, as the closed walk that starts at
    /// the first endpoint of `e`, crosses `e`, and returns along the forest.
    pub fn fundamental_cycle(&self, g: &SignedGraph, e: EdgeId) -> Result<Walk> {
        if e >= g.m() {
            return Err(Error::UnknownEdge(e));
        }
        if self.in_forest[e] {
            return Err(Error::TreeEdge(e));
        }
        let edge = g.edge(e);
        let back = self.path(edge.v, edge.u).ok_or(Error::DifferentComponents(e))?;
        let first = Walk::new(vec![edge.u, edge.v], vec![e]).expect("one edge");
        first.concat(&back)
    }

    /// Switch set making every forest edge positive: the vertices whose
    /// forest path from the root is negative.
    pub fn positive_switch(&self, g: &SignedGraph) -> SwitchSet {
        let mut order: Vec<VertexId> = (0..g.n()).collect();
        order.sort_by_key(|&v| self.depth[v]);
        let mut label = vec![Sign::Positive; g.n()];
        for v in order {
            if let Some((p, e)) = self.parent[v] {
                label[v] = label[p] * g.sign(e);
            }
        }
        (0..g.n()).filter(|&v| label[v].is_negative()).collect()
    }
}

/// Free-standing form of [`SpanningForest::fundamental_cycle`].
pub fn fundamental_cycle(g: &SignedGraph, f: &SpanningForest, e: EdgeId) -> Result<Walk> {
    f.fundamental_cycle(g, e)
}

pub fn spanning_forest(g: &SignedGraph) -> SpanningForest {
    SpanningForest::new(g)
}

/// Outcome of a balance test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Balance {
    /// Switching this set makes every edge positive (or every edge negative
    /// for the antibalance test).
    Yes(SwitchSet),
    /// A cycle of the wrong sign.
    No(Walk),
}

impl Balance {
    pub fn is_yes(&self) -> bool {
        matches!(self, Balance::Yes(_))
    }
}

/// Switch to all-positive on a spanning forest, then look for a negative edge.
pub fn is_balanced(g: &SignedGraph) -> Balance {
    let forest = SpanningForest::new(g);
    let x = forest.positive_switch(g);
    let switched = g.switch(&x).expect("vertices in range");
    match switched.negative_edges().first() {
        None => Balance::Yes(x),
        Some(&e) => Balance::No(forest.fundamental_cycle(g, e).expect("non-forest edge")),
    }
}

/// Balance of `(G, −σ)`; the YES certificate switches `σ` to all-negative.
pub fn is_antibalanced(g: &SignedGraph) -> Balance {
    is_balanced(&g.negated())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// `switch(first, X) == second` edge for edge.
    Yes(SwitchSet),
    /// A cycle whose signs differ under the two signatures.
    No(Walk),
}

impl Equivalence {
    pub fn is_yes(&self) -> bool {
        matches!(self, Equivalence::Yes(_))
    }
}

/// Decides whether two signatures on the same underlying graph are switching
/// equivalent by testing balance of their product.
pub fn switching_equivalent(a: &SignedGraph, b: &SignedGraph) -> Result<Equivalence> {
    if !a.same_underlying(b) {
        return Err(Error::UnderlyingMismatch);
    }
    let product: Vec<Sign> = a.signs().into_iter().zip(b.signs()).map(|(x, y)| x * y).collect();
    let g = a.with_signs(&product)?;
    Ok(match is_balanced(&g) {
        Balance::Yes(x) => Equivalence::Yes(x),
        Balance::No(c) => Equivalence::No(c),
    })
}

/// The unique equivalent signature that is positive on every edge of `f`.
pub fn canonical_signature(g: &SignedGraph, f: &SpanningForest) -> SignedGraph {
    g.switch(&f.positive_switch(g)).expect("vertices in range")
}

/// Cycle rank `e − n + c`.
pub fn cycle_rank(g: &SignedGraph) -> usize {
    g.m() + g.components().1 - g.n()
}

/// Number of switching classes, `2^(e−n+c)`; `None` if it exceeds `u128`.
pub fn count_switching_classes(g: &SignedGraph) -> Option<u128> {
    1u128.checked_shl(u32::try_from(cycle_rank(g)).ok()?)
}

/// Membership in the three special classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SpecialClass {
    /// 𝒢₀₁: balanced.
    pub g01: bool,
    /// 𝒢₁₀: signed bipartite.
    pub g10: bool,
    /// 𝒢₁₁: antibalanced.
    pub g11: bool,
}

impl fmt::Display for SpecialClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(f, "G01={} G10={} G11={}", yn(self.g01), yn(self.g10), yn(self.g11))
    }
}

pub fn classify(g: &SignedGraph) -> SpecialClass {
    SpecialClass {
        g01: is_balanced(g).is_yes(),
        g10: g.is_bipartite(),
        g11: is_antibalanced(g).is_yes(),
    }
}

/// Two-colouring of the spanning subgraph made of edges accepted by `keep`,
/// or an odd cycle of that subgraph.
pub(crate) fn bipartition_of(
    g: &SignedGraph,
    keep: impl Fn(EdgeId) -> bool + Copy,
) -> std::result::Result<Vec<bool>, Walk> {
    let forest = SpanningForest::filtered(g, keep);
    let side: Vec<bool> = (0..g.n()).map(|v| forest.depth(v) % 2 == 1).collect();
    for (e, edge) in g.edges().iter().enumerate() {
        if keep(e) && side[edge.u] == side[edge.v] {
            return Err(forest.fundamental_cycle(g, e).expect("same component, non-forest"));
        }
    }
    Ok(side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn k3(signs: [Sign; 3]) -> SignedGraph {
        // a=0, b=1, c=2; edges ab, bc, ac
        SignedGraph::new(3, [(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])]).unwrap()
    }

    fn c4_one_negative() -> SignedGraph {
        SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap()
    }

    #[test]
    fn forest_shapes() {
        let single = SignedGraph::new(1, []).unwrap();
        let f = SpanningForest::new(&single);
        assert_eq!(f.roots(), &[0]);
        assert_eq!(f.edges().count(), 0);

        let f = SpanningForest::new(&k3([P; 3]));
        assert_eq!(f.edges().collect::<Vec<_>>(), vec![0, 2]);

        let two = SignedGraph::uniform(4, [(0, 1), (2, 3)], P).unwrap();
        assert_eq!(SpanningForest::new(&two).roots(), &[0, 2]);
    }

    #[test]
    fn fundamental_cycle_of_loop_and_triangle() {
        let g = SignedGraph::new(2, [(0, 1, P), (1, 1, N)]).unwrap();
        let f = SpanningForest::new(&g);
        let w = f.fundamental_cycle(&g, 1).unwrap();
        assert_eq!(w.vertices(), &[1, 1]);

        // tree {ab, bc}: put ac last so BFS from a takes ab first, then bc from b
        let g = SignedGraph::new(3, [(0, 1, P), (1, 2, P), (0, 2, P)]).unwrap();
        let f = SpanningForest::filtered(&g, |e| e != 2);
        let w = f.fundamental_cycle(&g, 2).unwrap();
        assert_eq!(w.vertices(), &[0, 2, 1, 0]);
        assert!(w.is_cycle());
    }

    #[test]
    fn fundamental_cycle_of_parallel_edge_is_digon() {
        let g = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        let f = SpanningForest::new(&g);
        let w = f.fundamental_cycle(&g, 1).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.is_cycle());
        assert_eq!(g.sign_of_walk(&w).unwrap(), N);
    }

    #[test]
    fn fundamental_cycle_errors() {
        let g = k3([P; 3]);
        let f = SpanningForest::new(&g);
        assert_eq!(f.fundamental_cycle(&g, 0), Err(Error::TreeEdge(0)));
        let g2 = SignedGraph::uniform(2, [(0, 1)], P).unwrap();
        let f2 = SpanningForest::filtered(&g2, |_| false);
        assert_eq!(f2.fundamental_cycle(&g2, 0), Err(Error::DifferentComponents(0)));
    }

    #[test]
    fn balance_examples() {
        assert_eq!(is_balanced(&k3([P; 3])), Balance::Yes(SwitchSet::empty()));
        match is_balanced(&k3([N; 3])) {
            Balance::No(c) => {
                assert_eq!(c.len(), 3);
                assert_eq!(k3([N; 3]).sign_of_walk(&c).unwrap(), N);
            }
            other => panic!("{other:?}"),
        }
        match is_balanced(&c4_one_negative()) {
            Balance::No(c) => assert_eq!(c.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn antibalance_examples() {
        assert_eq!(is_antibalanced(&k3([N; 3])), Balance::Yes(SwitchSet::empty()));
        let c4 = SignedGraph::uniform(4, [(0, 1), (1, 2), (2, 3), (3, 0)], P).unwrap();
        match is_antibalanced(&c4) {
            Balance::Yes(x) => assert!(c4.switch(&x).unwrap().signs().iter().all(|s| s.is_negative())),
            other => panic!("{other:?}"),
        }
        assert!(!is_antibalanced(&k3([P; 3])).is_yes());
    }

    #[test]
    fn equivalence_examples() {
        let g = k3([N; 3]);
        assert_eq!(switching_equivalent(&g, &g).unwrap(), Equivalence::Yes(SwitchSet::empty()));

        let one = k3([N, P, P]);
        match switching_equivalent(&g, &one).unwrap() {
            Equivalence::Yes(x) => {
                assert_eq!(x, [2].into_iter().collect());
                assert_eq!(g.switch(&x).unwrap(), one);
            }
            other => panic!("{other:?}"),
        }
        match switching_equivalent(&k3([P; 3]), &g).unwrap() {
            Equivalence::No(c) => assert_eq!(c.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equivalence_rejects_different_graphs() {
        let a = k3([P; 3]);
        let b = SignedGraph::uniform(3, [(0, 1), (1, 2)], P).unwrap();
        assert_eq!(switching_equivalent(&a, &b), Err(Error::UnderlyingMismatch));
    }

    #[test]
    fn canonical_signature_examples() {
        let tree = SignedGraph::new(3, [(0, 1, N), (1, 2, N)]).unwrap();
        let f = SpanningForest::new(&tree);
        assert!(canonical_signature(&tree, &f).signs().iter().all(|s| s.is_positive()));

        let g = k3([N; 3]);
        let f = SpanningForest::filtered(&g, |e| e != 2);
        let c = canonical_signature(&g, &f);
        assert_eq!(c.signs(), vec![P, P, N]);
        assert_eq!(canonical_signature(&c, &f), c);
    }

    #[test]
    fn class_counts() {
        assert_eq!(count_switching_classes(&k3([P; 3])), Some(2));
        let path = SignedGraph::uniform(4, [(0, 1), (1, 2), (1, 3)], P).unwrap();
        assert_eq!(count_switching_classes(&path), Some(1));
        let digon = SignedGraph::uniform(2, [(0, 1), (0, 1)], P).unwrap();
        assert_eq!(count_switching_classes(&digon), Some(2));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&k3([P; 3])), SpecialClass { g01: true, g10: false, g11: false });
        assert_eq!(classify(&c4_one_negative()), SpecialClass { g01: false, g10: true, g11: false });
        let edgeless = SignedGraph::new(3, []).unwrap();
        assert_eq!(classify(&edgeless), SpecialClass { g01: true, g10: true, g11: true });
    }

    #[test]
    fn loops_break_bipartiteness() {
        let g = SignedGraph::new(2, [(0, 1, P), (1, 1, P)]).unwrap();
        let odd = g.bipartition().unwrap_err();
        assert_eq!(odd.len(), 1);
    }
}

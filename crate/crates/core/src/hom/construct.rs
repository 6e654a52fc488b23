//! Graph constructions: the double switching graph, the extended double
//! cover, signed projective cubes and the bipartite replacement `S(G)`.
//!
//! In both doubled constructions vertex `u` of the source becomes `u⁺ = u`
//! and `u⁻ = u + n`.

use crate::equivalence::classify;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, SwitchSet, VertexId};

use super::search::pair_counts;
use super::{find_hom_with, HomSearch, SearchOptions};

use Sign::{Negative as N, Positive as P};

/// Largest dimension accepted by the SPC builders.
pub const MAX_SPC_DIMENSION: usize = 20;

/// The double switching graph: `σ̄(u^α v^β) = αβσ(uv)`, four edges per
/// source edge in the order `(+,+), (−,−), (+,−), (−,+)`.
///
/// Returns the graph and, per vertex, its source vertex and tag.
pub fn dsg(g: &SignedGraph) -> (SignedGraph, Vec<(VertexId, Sign)>) {
    let n = g.n();
    let lift = |u: VertexId, a: Sign| if a.is_positive() { u } else { u + n };
    let mut edges = Vec::with_capacity(4 * g.m());
    for e in g.edges() {
        for (a, b) in [(P, P), (N, N), (P, N), (N, P)] {
            edges.push((lift(e.u, a), lift(e.v, b), a * b * e.sign));
        }
    }
    let tags = (0..2 * n).map(|x| if x < n { (x, P) } else { (x - n, N) }).collect();
    (SignedGraph::new(2 * n, edges).expect("ids in range"), tags)
}

/// What an EDC edge projects to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeProjection {
    /// One of the two lifts of a source edge.
    Source(EdgeId),
    /// The negative edge inside the fiber of a source vertex.
    Fiber(VertexId),
}

/// The projection of an extended double cover onto its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberMap {
    source_n: usize,
    edges: Vec<EdgeProjection>,
}

impl FiberMap {
    pub fn vertex(&self, x: VertexId) -> (VertexId, Sign) {
        if x < self.source_n {
            (x, P)
        } else {
            (x - self.source_n, N)
        }
    }

    pub fn lift(&self, u: VertexId, tag: Sign) -> VertexId {
        if tag.is_positive() {
            u
        } else {
            u + self.source_n
        }
    }

    pub fn fiber(&self, u: VertexId) -> [VertexId; 2] {
        [u, u + self.source_n]
    }

    pub fn edge(&self, e: EdgeId) -> EdgeProjection {
        self.edges[e]
    }

    /// Whether `vertex_map` (from this cover to the cover `other`) sends
    /// every fiber onto a fiber.
    pub fn is_fibered(&self, other: &FiberMap, vertex_map: &[VertexId]) -> bool {
        (0..self.source_n).all(|u| {
            let [a, b] = self.fiber(u).map(|x| vertex_map[x]);
            let (pa, ta) = other.vertex(a);
            let (pb, tb) = other.vertex(b);
            pa == pb && ta != tb
        })
    }
}

/// The extended double cover: a positive edge `uv` lifts to `u⁺v⁺, u⁻v⁻`,
/// a negative one to `u⁺v⁻, u⁻v⁺`, all positive; each fiber `x⁺x⁻` gets
/// one negative edge. Lifts come first in source order, then fiber edges.
pub fn edc(g: &SignedGraph) -> (SignedGraph, FiberMap) {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m() + n);
    let mut proj = Vec::with_capacity(2 * g.m() + n);
    for (id, e) in g.edges().iter().enumerate() {
        let pairs = match e.sign {
            P => [(e.u, e.v), (e.u + n, e.v + n)],
            N => [(e.u, e.v + n), (e.u + n, e.v)],
        };
        for (a, b) in pairs {
            edges.push((a, b, P));
            proj.push(EdgeProjection::Source(id));
        }
    }
    for x in 0..n {
        edges.push((x, x + n, N));
        proj.push(EdgeProjection::Fiber(x));
    }
    let graph = SignedGraph::new(2 * n, edges).expect("ids in range");
    (graph, FiberMap { source_n: n, edges: proj })
}

/// Whether `vertex_map` is a bijection from `a` to `b` carrying the signed
/// edge multiset of `a` exactly onto that of `b`.
pub fn is_sign_isomorphism(a: &SignedGraph, b: &SignedGraph, vertex_map: &[VertexId]) -> bool {
    if a.n() != b.n() || a.m() != b.m() || vertex_map.len() != a.n() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &x in vertex_map {
        if x >= b.n() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    let mapped = SignedGraph::new(b.n(), a.edges().iter().map(|e| (vertex_map[e.u], vertex_map[e.v], e.sign)))
        .expect("ids in range");
    pair_counts(&mapped) == pair_counts(b)
}

/// Builds the fiber swap on `X` from `edc(g)` to `edc(switch(g, X))` and
/// checks that it is an exact sign isomorphism.
pub fn edc_invariance_check(g: &SignedGraph, x: &SwitchSet) -> Result<bool> {
    let switched = g.switch(x)?;
    let (a, fa) = edc(g);
    let (b, _) = edc(&switched);
    let swap: Vec<VertexId> = (0..a.n())
        .map(|v| {
            let (u, tag) = fa.vertex(v);
            fa.lift(u, if x.contains(u) { -tag } else { tag })
        })
        .collect();
    Ok(is_sign_isomorphism(&a, &b, &swap))
}

/// Both sides of the EDC transfer: a homomorphism between the graphs and a
/// colour-preserving homomorphism between their extended double covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub direct: HomSearch,
    pub covers: HomSearch,
    /// Whether the cover witness (if any) maps fibers onto fibers.
    pub fibered: Option<bool>,
}

impl TransferReport {
    /// Both definite and equal; `None` if either side ran out of budget.
    pub fn agree(&self) -> Option<bool> {
        Some(self.direct.decided()? == self.covers.decided()?)
    }
}

pub fn edc_hom_transfer(src: &SignedGraph, tgt: &SignedGraph, budget: u64) -> TransferReport {
    let direct = find_hom_with(src, tgt, SearchOptions::default().with_budget(budget));
    let (es, fs) = edc(src);
    let (et, ft) = edc(tgt);
    let covers = find_hom_with(&es, &et, SearchOptions::colour_preserving().with_budget(budget));
    let fibered = covers.found().map(|h| fs.is_fibered(&ft, &h.vertex_map));
    TransferReport { direct, covers, fibered }
}

fn check_dimension(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroDimension)
    } else if k > MAX_SPC_DIMENSION {
        Err(Error::TooLarge { n: k, limit: MAX_SPC_DIMENSION })
    } else {
        Ok(())
    }
}

/// `SPC(1)` is a positive and a negative edge on two vertices; `SPC(k)` is
/// the extended double cover of `SPC(k−1)`.
pub fn spc_inductive(k: usize) -> Result<SignedGraph> {
    check_dimension(k)?;
    let mut g = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).expect("two vertices");
    for _ in 1..k {
        g = edc(&g).0;
    }
    Ok(g)
}

/// Vertices `Z₂^k` as bitmasks; positive edges join masks at Hamming
/// distance one, negative edges join antipodal masks.
pub fn spc_direct(k: usize) -> Result<SignedGraph> {
    check_dimension(k)?;
    let n = 1usize << k;
    let full = n - 1;
    let positive = (0..n).flat_map(|x| (0..k).map(move |i| (x, x ^ (1 << i)))).filter(|(x, y)| x < y);
    let negative = (0..n).map(|x| (x, x ^ full)).filter(|(x, y)| x < y);
    let edges = positive.map(|(x, y)| (x, y, P)).chain(negative.map(|(x, y)| (x, y, N)));
    Ok(SignedGraph::new(n, edges).expect("ids in range"))
}

pub fn spc(k: usize) -> Result<SignedGraph> {
    spc_direct(k)
}

/// The relabeling from the inductive to the direct vertex set: a vertex
/// `x⁻` of the cover of `SPC(k−1)` goes to the complement of `x` with the
/// new coordinate set.
pub fn spc_relabeling(k: usize) -> Result<Vec<VertexId>> {
    check_dimension(k)?;
    let mut map = vec![0, 1];
    for d in 1..k {
        let half = 1usize << d;
        let mut next = map.clone();
        next.extend(map.iter().map(|&x| (!x & (half - 1)) | half));
        map = next;
    }
    Ok(map)
}

/// Whether the inductive and direct builders agree under the relabeling.
pub fn spc_isomorphism_check(k: usize) -> Result<bool> {
    Ok(is_sign_isomorphism(&spc_inductive(k)?, &spc_direct(k)?, &spc_relabeling(k)?))
}

/// `SPC(k)` is antibalanced exactly for even `k` and signed bipartite
/// exactly for odd `k`.
pub fn spc_class_check(k: usize) -> Result<bool> {
    let class = classify(&spc(k)?);
    Ok(class.g11 == k.is_multiple_of(2) && class.g10 != k.is_multiple_of(2))
}

/// Replaces each edge `uv` (signs ignored) by a 4-cycle `u a v b` whose
/// edge `ua` is negative. Edge `i` adds vertices `n + 2i` (`a`) and
/// `n + 2i + 1` (`b`).
pub fn s_of(g: &SignedGraph) -> Result<SignedGraph> {
    if let Some(e) = g.edges().iter().find(|e| e.is_loop()) {
        return Err(Error::LoopNotAllowed(e.u));
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(4 * g.m());
    for (i, e) in g.edges().iter().enumerate() {
        let (a, b) = (n + 2 * i, n + 2 * i + 1);
        edges.extend([(e.u, a, N), (a, e.v, P), (e.v, b, P), (b, e.u, P)]);
    }
    SignedGraph::new(n + 2 * g.m(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::girth::{girth_profile, Girth};
    use crate::walk::WalkType;

    fn k3(sign: Sign) -> SignedGraph {
        SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], sign).unwrap()
    }

    #[test]
    fn dsg_of_one_edge() {
        let g = SignedGraph::new(2, [(0, 1, P)]).unwrap();
        let (d, tags) = dsg(&g);
        assert_eq!((d.n(), d.m()), (4, 4));
        assert_eq!(d.signs(), vec![P, P, N, N]);
        assert!(d.edge(0).joins(0, 1) && d.edge(1).joins(2, 3));
        assert_eq!(tags[3], (1, N));
        assert_eq!(d.induced(&[0, 1]), g);
    }

    #[test]
    fn edc_examples() {
        let (single, f) = edc(&SignedGraph::new(1, []).unwrap());
        assert_eq!((single.n(), single.m(), single.sign(0)), (2, 1, N));
        assert_eq!(f.edge(0), EdgeProjection::Fiber(0));

        let (two, _) = edc(&k3(P));
        assert_eq!(two.negative_edges(), vec![6, 7, 8]);
        assert_eq!(two.induced(&[0, 1, 2]), k3(P));
        assert_eq!(two.induced(&[3, 4, 5]), k3(P));

        let (c, _) = edc(&spc_inductive(1).unwrap());
        assert!(is_sign_isomorphism(&c, &spc_direct(2).unwrap(), &spc_relabeling(2).unwrap()));
    }

    #[test]
    fn edc_switching_invariance() {
        let spc1 = spc(1).unwrap();
        for (g, x) in [(k3(N), vec![0]), (spc1, vec![1]), (k3(P), vec![0, 2])] {
            assert!(edc_invariance_check(&g, &x.into_iter().collect()).unwrap());
        }
    }

    #[test]
    fn spc_shapes() {
        let s1 = spc(1).unwrap();
        assert_eq!((s1.n(), s1.signs()), (2, vec![P, N]));
        let s2 = spc(2).unwrap();
        assert_eq!((s2.n(), s2.m(), s2.negative_edges().len()), (4, 6, 2));
        assert_eq!(s2.reduced().0.m(), 6);
        for k in 1..=5 {
            let g = spc(k).unwrap();
            assert_eq!(g.n(), 1 << k);
            for v in 0..g.n() {
                let neg = g.incident(v).iter().filter(|(e, _)| g.sign(*e).is_negative()).count();
                assert_eq!((g.degree(v) - neg, neg), (k, 1));
            }
        }
        assert_eq!(spc(0), Err(Error::ZeroDimension));
        assert_eq!(girth_profile(&s2).get(WalkType::T11), Girth::Finite(3));
    }

    #[test]
    fn spc_builders_agree_and_classes_alternate() {
        for k in 1..=4 {
            assert!(spc_isomorphism_check(k).unwrap(), "k={k}");
        }
        for k in 1..=6 {
            assert!(spc_class_check(k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn s_of_examples() {
        let k2 = SignedGraph::uniform(2, [(0, 1)], P).unwrap();
        let s = s_of(&k2).unwrap();
        assert_eq!((s.n(), s.m(), s.negative_edges().len()), (4, 4, 1));
        assert!(s.edges_between(0, 1).next().is_none());
        let s = s_of(&k3(P)).unwrap();
        assert_eq!((s.n(), s.m()), (9, 12));
        assert!(s.is_bipartite());
        let looped = SignedGraph::uniform(1, [(0, 0)], P).unwrap();
        assert_eq!(s_of(&looped), Err(Error::LoopNotAllowed(0)));
    }

    #[test]
    fn transfer_examples() {
        let c4 = SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap();
        let r = edc_hom_transfer(&c4, &spc(1).unwrap(), 1_000_000);
        assert_eq!(r.agree(), Some(true));
        assert!(r.direct.is_found() && r.fibered == Some(true));
        let c5 = SignedGraph::uniform(5, (0..5).map(|i| (i, (i + 1) % 5)), P).unwrap();
        let r = edc_hom_transfer(&k3(P), &c5, 1_000_000);
        assert_eq!((r.direct.decided(), r.covers.decided()), (Some(false), Some(false)));
    }
}

//! Homomorphisms of signed graphs: verification, search, switching
//! isomorphism and cores. The constructions DSG, EDC, SPC(k) and S(G) live
//! in [`construct`].

pub mod construct;
mod search;

use std::fmt;

use crate::equivalence::{switching_equivalent, Equivalence, SpanningForest};
use crate::error::{Error, Result};
use crate::girth::{compare_profiles, girth_profile, HomFilter};
use crate::graph::{EdgeId, Sign, SignedGraph, SwitchSet, VertexId};
use crate::walk::{Walk, WalkType};

pub use construct::{
    dsg, edc, edc_hom_transfer, edc_invariance_check, is_sign_isomorphism, s_of, spc, spc_class_check,
    spc_direct, spc_inductive, spc_isomorphism_check, spc_relabeling, EdgeProjection, FiberMap, TransferReport,
};
pub use search::{SearchOptions, DEFAULT_BUDGET};

/// A switching of the source followed by an edge-sign-preserving map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    pub switch: SwitchSet,
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

impl Homomorphism {
    pub fn identity(g: &SignedGraph) -> Self {
        Homomorphism { switch: SwitchSet::empty(), vertex_map: (0..g.n()).collect(), edge_map: (0..g.m()).collect() }
    }

    /// `next ∘ self`.
    pub fn compose(&self, next: &Homomorphism) -> Homomorphism {
        let pulled: SwitchSet = (0..self.vertex_map.len())
            .filter(|&u| next.switch.contains(self.vertex_map[u]))
            .collect();
        Homomorphism {
            switch: self.switch.symmetric_difference(&pulled),
            vertex_map: self.vertex_map.iter().map(|&a| next.vertex_map[a]).collect(),
            edge_map: self.edge_map.iter().map(|&f| next.edge_map[f]).collect(),
        }
    }

    /// The inverse of a bijective map: the target is switched on the image
    /// of the switch set.
    pub fn inverse(&self) -> Option<Homomorphism> {
        let invert = |map: &[usize]| {
            let mut inv = vec![usize::MAX; map.len()];
            for (i, &j) in map.iter().enumerate() {
                if j >= map.len() || inv[j] != usize::MAX {
                    return None;
                }
                inv[j] = i;
            }
            Some(inv)
        };
        Some(Homomorphism {
            switch: self.switch.iter().map(|u| self.vertex_map[u]).collect(),
            vertex_map: invert(&self.vertex_map)?,
            edge_map: invert(&self.edge_map)?,
        })
    }

    /// Source edge signs after switching, i.e. the signs the images must carry.
    pub fn switched_signs(&self, src: &SignedGraph) -> Vec<Sign> {
        src.edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| if src.in_cut(e, &self.switch) { -edge.sign } else { edge.sign })
            .collect()
    }
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "X={}", self.switch)?;
        for (u, a) in self.vertex_map.iter().enumerate() {
            writeln!(f, "{u} -> {a}")?;
        }
        for (e, g) in self.edge_map.iter().enumerate() {
            writeln!(f, "e{} -> e{}", e + 1, g + 1)?;
        }
        Ok(())
    }
}

/// Result of [`verify_hom`]. The map is a homomorphism when incidence and
/// post-switch signs are preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// First edge whose image does not join the images of its ends.
    pub incidence_violation: Option<EdgeId>,
    /// First edge whose switched sign differs from its image's sign.
    pub sign_violation: Option<EdgeId>,
    /// First fundamental cycle whose sign differs from its image's sign
    /// (checked only when incidence holds).
    pub cycle_violation: Option<Walk>,
    /// A switch set that makes the underlying map sign preserving, if one
    /// exists (checked only when incidence holds).
    pub repair: Option<SwitchSet>,
}

impl Verification {
    pub fn is_yes(&self) -> bool {
        self.incidence_violation.is_none() && self.sign_violation.is_none()
    }

    /// The closed-walk criterion holds exactly when some switching makes the
    /// map sign preserving, and a sign-preserving map preserves cycle signs.
    pub fn criteria_agree(&self) -> bool {
        if self.incidence_violation.is_some() {
            return true;
        }
        let walks_ok = self.cycle_violation.is_none();
        walks_ok == self.repair.is_some() && (self.sign_violation.is_some() || walks_ok)
    }
}

fn check_ranges(src: &SignedGraph, tgt: &SignedGraph, h: &Homomorphism) -> Result<()> {
    if h.vertex_map.len() != src.n() {
        return Err(Error::Precondition(format!(
            "vertex map has {} entries, source has {} vertices",
            h.vertex_map.len(),
            src.n()
        )));
    }
    if h.edge_map.len() != src.m() {
        return Err(Error::EdgeCountMismatch { expected: src.m(), found: h.edge_map.len() });
    }
    if let Some(&a) = h.vertex_map.iter().find(|&&a| a >= tgt.n()) {
        return Err(Error::UnknownVertex { vertex: a, edge: None });
    }
    if let Some(&f) = h.edge_map.iter().find(|&&f| f >= tgt.m()) {
        return Err(Error::UnknownEdge(f));
    }
    if let Some(x) = h.switch.iter().find(|&x| x >= src.n()) {
        return Err(Error::UnknownVertex { vertex: x, edge: None });
    }
    Ok(())
}

/// Checks a candidate homomorphism both ways: switched edge signs against
/// image signs, and fundamental-cycle signs against the signs of their
/// images.
pub fn verify_hom(src: &SignedGraph, tgt: &SignedGraph, h: &Homomorphism) -> Result<Verification> {
    check_ranges(src, tgt, h)?;
    let incidence_violation = src.edges().iter().enumerate().position(|(e, edge)| {
        !tgt.edge(h.edge_map[e]).joins(h.vertex_map[edge.u], h.vertex_map[edge.v])
    });
    let switched = h.switched_signs(src);
    let sign_violation = (0..src.m()).find(|&e| switched[e] != tgt.sign(h.edge_map[e]));
    let mut out = Verification { incidence_violation, sign_violation, cycle_violation: None, repair: None };
    if incidence_violation.is_some() {
        return Ok(out);
    }
    let image_sign = |edges: &[EdgeId]| edges.iter().fold(Sign::Positive, |s, &e| s * tgt.sign(h.edge_map[e]));
    let forest = SpanningForest::new(src);
    for e in forest.non_forest_edges() {
        let cycle = forest.fundamental_cycle(src, e)?;
        if src.sign_of_edges(cycle.edges()) != image_sign(cycle.edges()) {
            out.cycle_violation = Some(cycle);
            break;
        }
    }
    let pulled: Vec<Sign> = h.edge_map.iter().map(|&f| tgt.sign(f)).collect();
    if let Equivalence::Yes(x) = switching_equivalent(src, &src.with_signs(&pulled)?)? {
        out.repair = Some(x);
    }
    Ok(out)
}

/// Why a search found no homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoHom {
    /// The source has a shorter closed walk of this type than the target.
    Girth(WalkType),
    /// The search space was exhausted.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomSearch {
    Found(Homomorphism),
    None(NoHom),
    BudgetExceeded { nodes: u64 },
}

impl HomSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, HomSearch::Found(_))
    }

    pub fn found(&self) -> Option<&Homomorphism> {
        match self {
            HomSearch::Found(h) => Some(h),
            _ => None,
        }
    }

    /// `Some(true/false)` for a definite answer, `None` when out of budget.
    pub fn decided(&self) -> Option<bool> {
        match self {
            HomSearch::Found(_) => Some(true),
            HomSearch::None(_) => Some(false),
            HomSearch::BudgetExceeded { .. } => None,
        }
    }
}

/// Homomorphism search with the default budget.
pub fn find_hom(src: &SignedGraph, tgt: &SignedGraph) -> HomSearch {
    find_hom_with(src, tgt, SearchOptions::default())
}

/// Homomorphism search; the walk-girth filter runs first.
///
/// Source vertices are tried by descending degree (ties by id), targets by
/// ascending id, switch bit `+` before `−`.
pub fn find_hom_with(src: &SignedGraph, tgt: &SignedGraph, opts: SearchOptions) -> HomSearch {
    let (sp, tp) = (girth_profile(src), girth_profile(tgt));
    if let HomFilter::Fail(t) = compare_profiles(&sp, &tp) {
        return HomSearch::None(NoHom::Girth(t));
    }
    if opts.injective && sp.values() != tp.values() {
        // equal profiles are necessary in both directions
        let t = WalkType::ALL.into_iter().find(|&t| sp.get(t) != tp.get(t)).expect("profiles differ");
        return HomSearch::None(NoHom::Girth(t));
    }
    match search::search(src, tgt, opts) {
        (search::Outcome::Found(h), _) => {
            debug_assert!(verify_hom(src, tgt, &h).is_ok_and(|v| v.is_yes()));
            HomSearch::Found(h)
        }
        (search::Outcome::Exhausted, _) => HomSearch::None(NoHom::Exhausted),
        (search::Outcome::Budget, nodes) => HomSearch::BudgetExceeded { nodes },
    }
}

fn degree_profile(g: &SignedGraph) -> Vec<(usize, usize, usize)> {
    let mut loops = vec![(0, 0); g.n()];
    for e in g.edges().iter().filter(|e| e.is_loop()) {
        match e.sign {
            Sign::Positive => loops[e.u].0 += 1,
            Sign::Negative => loops[e.u].1 += 1,
        }
    }
    let mut out: Vec<_> = (0..g.n()).map(|v| (g.degree(v), loops[v].0, loops[v].1)).collect();
    out.sort_unstable();
    out
}

/// A bijective homomorphism whose inverse is also a homomorphism.
pub fn switching_iso(a: &SignedGraph, b: &SignedGraph, budget: u64) -> HomSearch {
    if a.n() != b.n() || a.m() != b.m() || degree_profile(a) != degree_profile(b) {
        return HomSearch::None(NoHom::Exhausted);
    }
    let opts = SearchOptions { switching: true, injective: true, budget };
    find_hom_with(a, b, opts)
}

/// Outcome of a core test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreVerdict {
    Core,
    /// A homomorphism of the graph into itself whose image misses a vertex
    /// or an edge; `image_vertices`/`image_edges` list that image.
    NotCore { hom: Homomorphism, image_vertices: Vec<VertexId>, image_edges: Vec<EdgeId> },
    BudgetExceeded { nodes: u64 },
}

/// Searches for a homomorphism to a maximal proper subgraph: `g − v` for
/// each vertex, then `g − e` for each edge. With `opts.switching == false`
/// this is the 2-edge-coloured notion.
pub fn is_core(g: &SignedGraph, opts: SearchOptions) -> CoreVerdict {
    let opts = SearchOptions { injective: false, ..opts };
    let candidates = (0..g.n()).map(Err).chain((0..g.m()).map(Ok));
    for which in candidates {
        let (sub, vkeep, ekeep): (SignedGraph, Vec<VertexId>, Vec<EdgeId>) = match which {
            Err(v) => {
                let (sub, keep) = g.without_vertex(v);
                let ekeep = (0..g.m()).filter(|&e| g.edge(e).u != v && g.edge(e).v != v);
                (sub, keep, ekeep.collect())
            }
            Ok(e) => (g.without_edge(e), (0..g.n()).collect(), (0..g.m()).filter(|&f| f != e).collect()),
        };
        match find_hom_with(g, &sub, opts) {
            HomSearch::Found(h) => {
                let hom = Homomorphism {
                    switch: h.switch,
                    vertex_map: h.vertex_map.iter().map(|&a| vkeep[a]).collect(),
                    edge_map: h.edge_map.iter().map(|&f| ekeep[f]).collect(),
                };
                let mut image_vertices = hom.vertex_map.clone();
                image_vertices.sort_unstable();
                image_vertices.dedup();
                let mut image_edges = hom.edge_map.clone();
                image_edges.sort_unstable();
                image_edges.dedup();
                return CoreVerdict::NotCore { hom, image_vertices, image_edges };
            }
            HomSearch::None(_) => {}
            HomSearch::BudgetExceeded { nodes } => return CoreVerdict::BudgetExceeded { nodes },
        }
    }
    CoreVerdict::Core
}

/// A core of `g` together with a homomorphism from `g` onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub core: SignedGraph,
    /// `g → core`.
    pub retraction: Homomorphism,
    /// Core vertex `i` is vertex `vertices[i]` of `g`.
    pub vertices: Vec<VertexId>,
}

/// Repeatedly replaces `g` by the image of a homomorphism into a proper
/// subgraph until none exists.
pub fn compute_core(g: &SignedGraph, opts: SearchOptions) -> Result<Core> {
    let mut current = g.clone();
    let mut vertices: Vec<VertexId> = (0..g.n()).collect();
    let mut total = Homomorphism::identity(g);
    loop {
        match is_core(&current, opts) {
            CoreVerdict::Core => return Ok(Core { core: current, retraction: total, vertices }),
            CoreVerdict::BudgetExceeded { nodes } => return Err(Error::BudgetExceeded(nodes)),
            CoreVerdict::NotCore { hom, image_vertices, image_edges } => {
                let mut vnew = vec![usize::MAX; current.n()];
                for (i, &v) in image_vertices.iter().enumerate() {
                    vnew[v] = i;
                }
                let mut enew = vec![usize::MAX; current.m()];
                for (i, &e) in image_edges.iter().enumerate() {
                    enew[e] = i;
                }
                let step = Homomorphism {
                    switch: hom.switch,
                    vertex_map: hom.vertex_map.iter().map(|&a| vnew[a]).collect(),
                    edge_map: hom.edge_map.iter().map(|&f| enew[f]).collect(),
                };
                total = total.compose(&step);
                vertices = image_vertices.iter().map(|&v| vertices[v]).collect();
                current = current.subgraph(&image_vertices, &image_edges);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn k3(sign: Sign) -> SignedGraph {
        SignedGraph::uniform(3, [(0, 1), (1, 2), (0, 2)], sign).unwrap()
    }

    fn cycle(n: usize, sign: Sign) -> SignedGraph {
        SignedGraph::uniform(n, (0..n).map(|i| (i, (i + 1) % n)), sign).unwrap()
    }

    fn c4_one_negative() -> SignedGraph {
        SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap()
    }

    fn spc1() -> SignedGraph {
        SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap()
    }

    fn assert_verifies(src: &SignedGraph, tgt: &SignedGraph, s: &HomSearch) {
        let h = s.found().expect("found");
        let v = verify_hom(src, tgt, h).unwrap();
        assert!(v.is_yes() && v.criteria_agree(), "{v:?}");
    }

    #[test]
    fn identity_verifies() {
        let g = c4_one_negative();
        let v = verify_hom(&g, &g, &Homomorphism::identity(&g)).unwrap();
        assert!(v.is_yes() && v.criteria_agree());
    }

    #[test]
    fn c4_folds_onto_spc1() {
        let h = Homomorphism { switch: SwitchSet::empty(), vertex_map: vec![0, 1, 0, 1], edge_map: vec![1, 0, 0, 0] };
        let v = verify_hom(&c4_one_negative(), &spc1(), &h).unwrap();
        assert!(v.is_yes());
    }

    #[test]
    fn positive_triangle_does_not_map_to_negative_triangle() {
        let h = Homomorphism::identity(&k3(P));
        let v = verify_hom(&k3(P), &k3(N), &h).unwrap();
        assert!(!v.is_yes());
        assert!(v.cycle_violation.is_some() && v.repair.is_none() && v.criteria_agree());
    }

    #[test]
    fn wrong_switch_set_is_repairable() {
        let a = k3(N);
        let b = SignedGraph::new(3, [(0, 1, P), (1, 2, P), (0, 2, N)]).unwrap();
        let h = Homomorphism::identity(&a);
        let v = verify_hom(&a, &b, &h).unwrap();
        assert!(!v.is_yes() && v.repair.is_some() && v.criteria_agree());
    }

    #[test]
    fn malformed_maps_are_errors() {
        let g = k3(P);
        let mut h = Homomorphism::identity(&g);
        h.vertex_map.pop();
        assert!(verify_hom(&g, &g, &h).is_err());
        let mut h = Homomorphism::identity(&g);
        h.edge_map[0] = 7;
        assert_eq!(verify_hom(&g, &g, &h), Err(Error::UnknownEdge(7)));
    }

    #[test]
    fn search_examples() {
        let s = find_hom(&cycle(5, P), &k3(P));
        assert_verifies(&cycle(5, P), &k3(P), &s);

        let loop_neg = SignedGraph::new(1, [(0, 0, N)]).unwrap();
        let s = find_hom(&k3(N), &loop_neg);
        assert_verifies(&k3(N), &loop_neg, &s);

        assert_eq!(find_hom(&k3(P), &cycle(5, P)), HomSearch::None(NoHom::Girth(WalkType::T01)));
    }

    #[test]
    fn budget_is_reported() {
        let s = find_hom_with(&cycle(5, P), &k3(P), SearchOptions::default().with_budget(1));
        assert!(matches!(s, HomSearch::BudgetExceeded { .. }));
    }

    #[test]
    fn colour_preserving_mode_forbids_switching() {
        let a = k3(N);
        let b = SignedGraph::new(3, [(0, 1, P), (1, 2, P), (0, 2, N)]).unwrap();
        assert!(find_hom(&a, &b).is_found());
        assert!(!find_hom_with(&a, &b, SearchOptions::colour_preserving()).is_found());
    }

    #[test]
    fn iso_examples() {
        let g = c4_one_negative();
        let x: SwitchSet = [1, 2].into_iter().collect();
        let s = switching_iso(&g, &g.switch(&x).unwrap(), DEFAULT_BUDGET);
        assert_verifies(&g, &g.switch(&x).unwrap(), &s);

        let a = k3(N);
        let b = SignedGraph::new(3, [(0, 1, N), (1, 2, P), (0, 2, P)]).unwrap();
        let s = switching_iso(&a, &b, DEFAULT_BUDGET);
        let h = s.found().unwrap();
        let inv = h.inverse().unwrap();
        assert!(verify_hom(&b, &a, &inv).unwrap().is_yes());

        assert!(!switching_iso(&k3(P), &k3(N), DEFAULT_BUDGET).is_found());
        // same degrees and sizes, different multiplicities
        let d1 = SignedGraph::new(2, [(0, 1, P), (0, 1, P)]).unwrap();
        assert!(!switching_iso(&d1, &spc1(), DEFAULT_BUDGET).is_found());
    }

    #[test]
    fn core_examples() {
        assert_eq!(is_core(&k3(P), SearchOptions::default()), CoreVerdict::Core);
        let c = compute_core(&cycle(4, P), SearchOptions::default()).unwrap();
        assert_eq!((c.core.n(), c.core.m()), (2, 1));
        assert_eq!(c.core.sign(0), P);
        assert!(verify_hom(&cycle(4, P), &c.core, &c.retraction).unwrap().is_yes());

        let single = SignedGraph::new(1, []).unwrap();
        assert_eq!(compute_core(&single, SearchOptions::default()).unwrap().core, single);
    }

    #[test]
    fn composition_verifies() {
        let (a, b, c) = (cycle(6, N), cycle(3, N), SignedGraph::new(1, [(0, 0, N)]).unwrap());
        let h1 = find_hom(&a, &b);
        let h2 = find_hom(&b, &c);
        let h = h1.found().unwrap().compose(h2.found().unwrap());
        assert!(verify_hom(&a, &c, &h).unwrap().is_yes());
    }
}

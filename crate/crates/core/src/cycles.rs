//! Exhaustive cycle enumeration (exponential; small graphs only).

use std::collections::BTreeSet;

use crate::graph::{EdgeId, SignedGraph, VertexId};
use crate::walk::Walk;

/// Every cycle of `g` exactly once, as a closed walk that starts at the
/// first endpoint of its lowest-id edge and crosses that edge first.
pub fn all_cycles(g: &SignedGraph) -> Vec<Walk> {
    let mut out = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        if edge.is_loop() {
            out.push(Walk::new(vec![edge.u, edge.u], vec![e]).expect("one edge"));
            continue;
        }
        let mut on_path = vec![false; g.n()];
        on_path[edge.u] = true;
        on_path[edge.v] = true;
        let mut vs = vec![edge.u, edge.v];
        let mut es = vec![e];
        extend(g, e, edge.u, &mut on_path, &mut vs, &mut es, &mut out);
    }
    out
}

fn extend(
    g: &SignedGraph,
    min_edge: EdgeId,
    target: VertexId,
    on_path: &mut [bool],
    vs: &mut Vec<VertexId>,
    es: &mut Vec<EdgeId>,
    out: &mut Vec<Walk>,
) {
    let at = *vs.last().expect("non-empty");
    for &(f, w) in g.incident(at) {
        if f <= min_edge || w == at {
            continue;
        }
        if w == target {
            let mut cv = vs.clone();
            cv.push(w);
            let mut ce = es.clone();
            ce.push(f);
            out.push(Walk::new(cv, ce).expect("consistent"));
        } else if !on_path[w] {
            on_path[w] = true;
            vs.push(w);
            es.push(f);
            extend(g, min_edge, target, on_path, vs, es, out);
            vs.pop();
            es.pop();
            on_path[w] = false;
        }
    }
}

/// Edge set of a walk that traverses each of its edges once.
pub fn edge_set(w: &Walk) -> BTreeSet<EdgeId> {
    w.edges().iter().copied().collect()
}

/// If `edges` is the edge set of a cycle of `g`, returns that cycle.
pub fn as_cycle(g: &SignedGraph, edges: &BTreeSet<EdgeId>) -> Option<Walk> {
    let first = *edges.iter().next()?;
    if edges.iter().any(|&e| e >= g.m()) {
        return None;
    }
    let start = g.edge(first).u;
    let mut vs = vec![start];
    let mut es = Vec::new();
    let mut used = BTreeSet::new();
    let mut at = start;
    let mut next = Some(first);
    while let Some(e) = next {
        used.insert(e);
        es.push(e);
        at = g.edge(e).other(at);
        vs.push(at);
        if at == start {
            break;
        }
        next = g
            .incident(at)
            .iter()
            .map(|&(f, _)| f)
            .find(|f| edges.contains(f) && !used.contains(f));
    }
    let w = Walk::new(vs, es).ok()?;
    (used.len() == edges.len() && w.is_cycle()).then_some(w)
}

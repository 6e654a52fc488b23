//! L-chromatic and (K, L)-chromatic numbers.
//!
//! Every homomorphic image of `g` is a quotient of some switching of `g`
//! by a vertex partition, and a target meeting the girth bounds contains
//! such an image as a subgraph (subgraphs have pointwise larger walk-girths).
//! So the L-chromatic number is the least block count of a quotient that
//! meets the bounds. Quotients are enumerated by block count, then by
//! switching (binary counter, vertex 0 never switched), then by partition in
//! restricted-growth-string order.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::girth::{girth_profile, Girth, GirthProfile};
use crate::graph::{EdgeId, SignedGraph, SwitchSet, VertexId};
use crate::hom::Homomorphism;
use crate::walk::WalkType;

/// Largest source order accepted by the quotient enumeration.
pub const MAX_ORDER: usize = 8;

/// Lower bounds `L = (l₀₁, l₁₀, l₁₁)` on the three nonzero walk-girths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GirthBound {
    pub l01: Girth,
    pub l10: Girth,
    pub l11: Girth,
}

impl GirthBound {
    pub fn new(l01: Girth, l10: Girth, l11: Girth) -> Self {
        GirthBound { l01, l10, l11 }
    }

    pub fn get(&self, t: WalkType) -> Option<Girth> {
        match t.code() {
            "01" => Some(self.l01),
            "10" => Some(self.l10),
            "11" => Some(self.l11),
            _ => None,
        }
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &GirthBound) -> bool {
        self.l01 >= other.l01 && self.l10 >= other.l10 && self.l11 >= other.l11
    }

    /// The first type whose walk-girth falls below its bound.
    pub fn violation(&self, profile: &GirthProfile) -> Option<WalkType> {
        WalkType::NONZERO
            .into_iter()
            .find(|&t| profile.get(t) < self.get(t).expect("nonzero type"))
    }

    /// Parses `a,b,c` with entries positive integers or `inf`.
    pub fn parse(s: &str) -> Option<GirthBound> {
        let parts: Vec<Girth> = s.split(',').map(|p| Girth::parse(p.trim())).collect::<Option<_>>()?;
        match parts[..] {
            [a, b, c] => Some(GirthBound::new(a, b, c)),
            _ => None,
        }
    }
}

impl fmt::Display for GirthBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l01, self.l10, self.l11)
    }
}

pub fn satisfies(g: &SignedGraph, bound: &GirthBound) -> bool {
    bound.violation(&girth_profile(g)).is_none()
}

/// A switching of `g` followed by identification of each block to a vertex.
/// Parallel edges of equal sign are merged, so the quotient has at most one
/// edge of each sign per vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub switch: SwitchSet,
    /// Block of each source vertex.
    pub blocks: Vec<usize>,
    pub graph: SignedGraph,
    /// Quotient edge of each source edge.
    pub edge_map: Vec<EdgeId>,
}

impl Quotient {
    fn new(g: &SignedGraph, switch: SwitchSet, blocks: Vec<usize>, k: usize) -> Self {
        let edges: Vec<_> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, x)| {
                let sign = if g.in_cut(e, &switch) { -x.sign } else { x.sign };
                (blocks[x.u], blocks[x.v], sign)
            })
            .collect();
        let (graph, edge_map) = SignedGraph::new(k, edges).expect("block ids below k").reduced();
        Quotient { switch, blocks, graph, edge_map }
    }

    pub fn homomorphism(&self) -> Homomorphism {
        Homomorphism { switch: self.switch.clone(), vertex_map: self.blocks.clone(), edge_map: self.edge_map.clone() }
    }
}

/// Restricted growth strings of length `n` with exactly `k` distinct values.
fn for_each_partition<B>(n: usize, k: usize, visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
    fn go<B>(
        a: &mut Vec<usize>,
        used: usize,
        n: usize,
        k: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        if a.len() == n {
            return match (used == k).then(|| visit(a)) {
                Some(ControlFlow::Break(b)) => Some(b),
                _ => None,
            };
        }
        if used + (n - a.len()) < k {
            return None;
        }
        for b in 0..=used.min(k - 1) {
            a.push(b);
            let r = go(a, used.max(b + 1), n, k, visit);
            a.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    if n == 0 {
        return if k == 0 { visit(&[]).break_value() } else { None };
    }
    if k == 0 {
        return None;
    }
    go(&mut Vec::with_capacity(n), 0, n, k, visit)
}

/// Visits every quotient of `g` with exactly `k` blocks in enumeration order.
pub fn for_each_quotient<B>(
    g: &SignedGraph,
    k: usize,
    mut visit: impl FnMut(&Quotient) -> ControlFlow<B>,
) -> Result<Option<B>> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, limit: MAX_ORDER });
    }
    let switchings = if n == 0 { 1 } else { 1usize << (n - 1) };
    for mask in 0..switchings {
        let switch: SwitchSet = (1..n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let r = for_each_partition(n, k, &mut |blocks| visit(&Quotient::new(g, switch.clone(), blocks.to_vec(), k)));
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

/// The L-chromatic number with a smallest target and the homomorphism onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LChromatic {
    pub order: usize,
    pub target: SignedGraph,
    pub hom: Homomorphism,
}

/// Minimum order of a signed graph satisfying `bound` that `g` maps to.
/// `budget` limits the number of quotients examined.
pub fn l_chromatic(g: &SignedGraph, bound: &GirthBound, budget: u64) -> Result<LChromatic> {
    if let Some(t) = bound.violation(&girth_profile(g)) {
        return Err(Error::Precondition(format!("g_{t} of the input is below the bound {bound}")));
    }
    let mut examined = 0u64;
    for k in 0..=g.n() {
        let found = for_each_quotient(g, k, |q| {
            if examined >= budget {
                return ControlFlow::Break(Err(Error::BudgetExceeded(examined)));
            }
            examined += 1;
            if bound.violation(&girth_profile(&q.graph)).is_none() {
                ControlFlow::Break(Ok(q.clone()))
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if let Some(q) = found {
            let q = q?;
            return Ok(LChromatic { order: k, hom: q.homomorphism(), target: q.graph });
        }
    }
    unreachable!("the identity quotient satisfies the bound")
}

/// Outcome of [`kl_chromatic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KlChromatic {
    /// No member of the family satisfies `K`.
    NoMember,
    /// The largest L-chromatic number among members satisfying `K`, and the
    /// index of a member attaining it.
    Value { value: usize, member: usize },
}

pub fn kl_chromatic(family: &[SignedGraph], k: &GirthBound, l: &GirthBound, budget: u64) -> Result<KlChromatic> {
    if !k.dominates(l) {
        return Err(Error::Precondition(format!("K={k} is not componentwise at least L={l}")));
    }
    let mut best = KlChromatic::NoMember;
    for (i, g) in family.iter().enumerate() {
        if !satisfies(g, k) {
            continue;
        }
        let value = l_chromatic(g, l, budget)?.order;
        if !matches!(best, KlChromatic::Value { value: v, .. } if v >= value) {
            best = KlChromatic::Value { value, member: i };
        }
    }
    Ok(best)
}

/// Vertices of `g` grouped by block, for display.
pub fn blocks_of(q: &Quotient) -> Vec<Vec<VertexId>> {
    let k = q.graph.n();
    let mut out = vec![Vec::new(); k];
    for (v, &b) in q.blocks.iter().enumerate() {
        out[b].push(v);
    }
    out
}

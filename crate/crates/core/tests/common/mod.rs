//! Corpora and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use signed_graph::{Sign, SignedGraph, SwitchSet, WalkType};

pub const P: Sign = Sign::Positive;
pub const N: Sign = Sign::Negative;

pub fn graph(n: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
    SignedGraph::new(n, edges.iter().copied()).unwrap()
}

/// Unsigned edge list `(u, v)` with `u <= v`.
pub type Pairs = Vec<(usize, usize)>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn canonical(pairs: &Pairs, perms: &[Vec<usize>]) -> Pairs {
    perms
        .iter()
        .map(|p| {
            let mut e: Pairs = pairs.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

fn is_connected(n: usize, pairs: &Pairs) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(u, v) in pairs {
            for (a, b) in [(u, v), (v, u)] {
                if a == x && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub loops: bool,
    pub parallel: bool,
    pub connected: bool,
}

pub const SIMPLE: Shape = Shape { loops: false, parallel: false, connected: false };
pub const MULTI: Shape = Shape { loops: true, parallel: true, connected: false };

/// Underlying graphs on exactly `n` vertices with at most `max_e` edges, one
/// per isomorphism class.
pub fn graphs_up_to_iso(n: usize, max_e: usize, shape: Shape) -> Vec<Pairs> {
    let slots: Pairs = (0..n)
        .flat_map(|u| (u..n).map(move |v| (u, v)))
        .filter(|&(u, v)| shape.loops || u != v)
        .collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        start: usize,
        max_e: usize,
        slots: &Pairs,
        shape: Shape,
        current: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        visit(current);
        if current.len() == max_e {
            return;
        }
        for s in start..slots.len() {
            current.push(s);
            let next = if shape.parallel { s } else { s + 1 };
            rec(next, max_e, slots, shape, current, visit);
            current.pop();
        }
    }
    rec(0, max_e, &slots, shape, &mut current, &mut |chosen| {
        let pairs: Pairs = chosen.iter().map(|&s| slots[s]).collect();
        if shape.connected && !is_connected(n, &pairs) {
            return;
        }
        let c = canonical(&pairs, &perms);
        if seen.insert(c.clone()) {
            out.push(c);
        }
    });
    out
}

/// All labelled simple graphs on `n` vertices with at most `max_e` edges.
pub fn labelled_simple(n: usize, max_e: usize) -> Vec<Pairs> {
    let slots: Pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << slots.len())
        .filter(|mask| mask.count_ones() as usize <= max_e)
        .map(|mask| (0..slots.len()).filter(|i| mask >> i & 1 == 1).map(|i| slots[i]).collect())
        .collect()
}

pub fn connected(n: usize, pairs: &Pairs) -> bool {
    is_connected(n, pairs)
}

/// The signature whose negative edges are the set bits of `mask`.
pub fn with_mask(n: usize, pairs: &Pairs, mask: u64) -> SignedGraph {
    SignedGraph::new(n, pairs.iter().enumerate().map(|(i, &(u, v))| (u, v, if mask >> i & 1 == 1 { N } else { P })))
        .unwrap()
}

/// Every signature on every underlying graph of the corpus.
pub fn all_signatures(n: usize, pairs: &Pairs) -> impl Iterator<Item = SignedGraph> + '_ {
    (0u64..1 << pairs.len()).map(move |mask| with_mask(n, pairs, mask))
}

/// Signed graphs with `n <= max_n` vertices and `e <= max_e` edges.
pub fn signed_corpus(max_n: usize, max_e: usize, shape: Shape) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for pairs in graphs_up_to_iso(n, max_e, shape) {
            out.extend(all_signatures(n, &pairs));
        }
    }
    out
}

/// Like [`signed_corpus`] but one signed graph per isomorphism class of
/// signed graphs.
pub fn signed_corpus_up_to_iso(max_n: usize, max_e: usize, shape: Shape) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let perms = permutations(n);
        for pairs in graphs_up_to_iso(n, max_e, shape) {
            let mut seen = HashSet::new();
            for mask in 0u64..1 << pairs.len() {
                let key = perms
                    .iter()
                    .map(|p| {
                        let mut e: Vec<(usize, usize, u64)> = pairs
                            .iter()
                            .enumerate()
                            .map(|(i, &(u, v))| (p[u].min(p[v]), p[u].max(p[v]), mask >> i & 1))
                            .collect();
                        e.sort_unstable();
                        e
                    })
                    .min()
                    .unwrap_or_default();
                if seen.insert(key) {
                    out.push(with_mask(n, &pairs, mask));
                }
            }
        }
    }
    out
}

pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize, shape: Shape) -> SignedGraph {
    let mut edges = Vec::new();
    let mut used = BTreeSet::new();
    let mut attempts = 0;
    while edges.len() < m && attempts < 50 * (m + 1) {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if (u == v && !shape.loops) || (!shape.parallel && !used.insert((u.min(v), u.max(v)))) {
            continue;
        }
        edges.push((u, v, if rng.gen_bool(0.5) { N } else { P }));
    }
    SignedGraph::new(n, edges).unwrap()
}

pub fn random_switch(rng: &mut impl Rng, n: usize) -> SwitchSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn all_switches(n: usize) -> impl Iterator<Item = SwitchSet> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
}

/// Switching equivalence by trying every switch set.
pub fn brute_equivalent(a: &SignedGraph, b: &SignedGraph) -> bool {
    all_switches(a.n()).any(|x| a.switch(&x).unwrap().signs() == b.signs())
}

/// Shortest closed walk of each type by dynamic programming over lengths:
/// `reach[s][v][sign]` says some walk of the current length runs from `s`
/// to `v` with that sign. Lengths up to `max_len`; `None` if no walk.
#[allow(clippy::needless_range_loop)]
pub fn brute_girths(g: &SignedGraph, max_len: usize) -> [Option<usize>; 4] {
    let n = g.n();
    let mut best = [None; 4];
    let mut reach = vec![vec![[false; 2]; n]; n];
    for (s, row) in reach.iter_mut().enumerate() {
        row[s][0] = true;
    }
    for len in 1..=max_len {
        let mut next = vec![vec![[false; 2]; n]; n];
        for s in 0..n {
            for e in g.edges() {
                let b = e.sign.bit() as usize;
                for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                    for sign in 0..2 {
                        if reach[s][x][sign] {
                            next[s][y][sign ^ b] = true;
                        }
                    }
                }
            }
        }
        reach = next;
        for s in 0..n {
            for sign in 0..2 {
                if reach[s][s][sign] {
                    let t = sign * 2 + len % 2;
                    best[t].get_or_insert(len);
                }
            }
        }
    }
    best
}

pub fn brute_girth(g: &SignedGraph, t: WalkType, max_len: usize) -> Option<usize> {
    brute_girths(g, max_len)[t.index()]
}

/// Plain graph homomorphism (signs ignored) by trying every vertex map.
pub fn brute_graph_hom(n: usize, a: &Pairs, m: usize, b: &Pairs) -> bool {
    let adj: HashSet<(usize, usize)> = b.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    let mut map = vec![0; n];
    fn rec(i: usize, map: &mut Vec<usize>, m: usize, a: &Pairs, adj: &HashSet<(usize, usize)>) -> bool {
        if i == map.len() {
            return true;
        }
        for t in 0..m {
            map[i] = t;
            let ok = a.iter().all(|&(u, v)| u.max(v) > i || adj.contains(&(map[u], map[v])));
            if ok && rec(i + 1, map, m, a, adj) {
                return true;
            }
        }
        false
    }
    n == 0 || (m > 0 && rec(0, &mut map, m, a, &adj))
}

/// Chromatic number of a loopless graph by trying every colouring.
pub fn brute_chromatic(n: usize, pairs: &Pairs) -> usize {
    for k in 1..=n.max(1) {
        let kn: Pairs = (0..k).flat_map(|u| (0..k).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        if brute_graph_hom(n, pairs, k, &kn) {
            return k;
        }
    }
    n
}

pub fn underlying(g: &SignedGraph) -> Pairs {
    g.edges().iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect()
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

//! Text forms of switch sets, edge sets, walks and homomorphisms.
//! Edge ids are 1-based (`e1` is the first edge line of a file).

use std::collections::{BTreeMap, BTreeSet};

use signed_graph::hom::Homomorphism;
use signed_graph::{EdgeId, SwitchSet, Walk};

pub fn parse_switch(s: &str) -> Result<SwitchSet, String> {
    let s = s.trim();
    if s == "∅" || s == "{}" {
        return Ok(SwitchSet::empty());
    }
    let inner = s
        .strip_prefix('{')
        .and_then(|x| x.strip_suffix('}'))
        .ok_or_else(|| format!("switch set `{s}` is not of the form {{a,b,..}}"))?;
    inner
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad vertex id `{t}` in switch set")))
        .collect()
}

pub fn format_edge_set(set: &BTreeSet<EdgeId>) -> String {
    if set.is_empty() {
        return "∅".into();
    }
    let parts: Vec<String> = set.iter().map(|e| format!("e{}", e + 1)).collect();
    format!("{{{}}}", parts.join(","))
}

fn parse_edge(tok: &str) -> Result<EdgeId, String> {
    tok.strip_prefix('e')
        .and_then(|x| x.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .map(|k| k - 1)
        .ok_or_else(|| format!("bad edge token `{tok}`"))
}

pub fn parse_edge_set(s: &str) -> Result<BTreeSet<EdgeId>, String> {
    let s = s.trim();
    if s == "∅" || s == "{}" {
        return Ok(BTreeSet::new());
    }
    let inner = s
        .strip_prefix('{')
        .and_then(|x| x.strip_suffix('}'))
        .ok_or_else(|| format!("edge set `{s}` is not of the form {{e1,e2,..}}"))?;
    inner.split(',').map(|t| parse_edge(t.trim())).collect()
}

/// Parses `v0 e_a v1 e_b v2 ...`.
pub fn parse_walk(s: &str) -> Result<Walk, String> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    if toks.len().is_multiple_of(2) {
        return Err(format!("walk `{s}` must alternate vertices and edges"));
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, t) in toks.iter().enumerate() {
        if i % 2 == 0 {
            vertices.push(t.parse().map_err(|_| format!("bad vertex `{t}` in walk"))?);
        } else {
            edges.push(parse_edge(t)?);
        }
    }
    Walk::new(vertices, edges).map_err(|e| e.to_string())
}

fn dense(map: BTreeMap<usize, usize>, what: &str) -> Result<Vec<usize>, String> {
    if map.keys().copied().ne(0..map.len()) {
        return Err(format!("{what} map does not cover 0..{}", map.len()));
    }
    Ok(map.into_values().collect())
}

/// Parses the block written by `Homomorphism`'s `Display`.
pub fn parse_hom(lines: &[String]) -> Result<Homomorphism, String> {
    let mut switch = None;
    let mut vmap = BTreeMap::new();
    let mut emap = BTreeMap::new();
    for line in lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
        if let Some(x) = line.strip_prefix("X=") {
            switch = Some(parse_switch(x)?);
            continue;
        }
        let (a, b) = line.split_once("->").ok_or_else(|| format!("bad map line `{line}`"))?;
        let (a, b) = (a.trim(), b.trim());
        let fresh = if a.starts_with('e') {
            emap.insert(parse_edge(a)?, parse_edge(b)?).is_none()
        } else {
            let parse = |t: &str| t.parse::<usize>().map_err(|_| format!("bad vertex `{t}`"));
            vmap.insert(parse(a)?, parse(b)?).is_none()
        };
        if !fresh {
            return Err(format!("`{a}` mapped twice"));
        }
    }
    Ok(Homomorphism {
        switch: switch.ok_or("missing X= line")?,
        vertex_map: dense(vmap, "vertex")?,
        edge_map: dense(emap, "edge")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn switch_sets() {
        assert_eq!(parse_switch("∅").unwrap(), SwitchSet::empty());
        let x = parse_switch("{0,3}").unwrap();
        assert_eq!(x.to_string(), "{0,3}");
        assert!(parse_switch("0,3").is_err());
    }

    #[test]
    fn edge_sets_are_one_based() {
        let s = parse_edge_set("{e1,e4}").unwrap();
        assert_eq!(s, [0, 3].into_iter().collect());
        assert_eq!(format_edge_set(&s), "{e1,e4}");
        assert!(parse_edge_set("{e0}").is_err());
    }

    #[test]
    fn walks_round_trip() {
        let w = parse_walk("0 e1 1 e3 2 e2 0").unwrap();
        assert_eq!(w.to_string(), "0 e1 1 e3 2 e2 0");
        assert!(parse_walk("0 e1").is_err());
        assert_eq!(parse_walk("4").unwrap().len(), 0);
    }

    #[test]
    fn homs_round_trip() {
        let h = Homomorphism { switch: [1].into_iter().collect(), vertex_map: vec![0, 0, 1], edge_map: vec![1, 0] };
        let lines: Vec<String> = h.to_string().lines().map(str::to_string).collect();
        assert_eq!(parse_hom(&lines).unwrap(), h);
        assert!(parse_hom(&["0 -> 1".to_string()]).is_err());
    }
}

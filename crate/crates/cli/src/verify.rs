//! Independent re-checking of result documents.
//!
//! Each checker recomputes only what the witness does not carry: switchings
//! are applied, walks are validated edge by edge, and maps go through
//! `verify_hom`. Negative answers without a certificate (for instance
//! `hom=no`) are re-derived by running the search again.

use signed_graph::chromatic::{satisfies, GirthBound};
use signed_graph::equivalence::{classify, switching_equivalent, Equivalence};
use signed_graph::girth::girth_profile;
use signed_graph::hom::{
    dsg, edc, edc_hom_transfer, edc_invariance_check, find_hom_with, is_core, s_of, spc_direct, switching_iso,
    verify_hom, CoreVerdict, Homomorphism, SearchOptions,
};
use signed_graph::packing::{disjoint_switch, negative_set, pack_signatures, pack_vs_spc, DisjointSwitch};
use signed_graph::walksys::{default_bound, NegativeWalks, OddWalks, WalkOracle};
use signed_graph::{Sign, SignedGraph, SwitchSet, Walk, WalkType};

use crate::doc::Document;
use crate::format::parse_graph;
use crate::witness::{parse_edge_set, parse_hom, parse_switch, parse_walk};
use crate::{bound_token, info_fields, profile_fields, walkcheck_fields, CliError, CliResult};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn field<'a>(doc: &'a Document, key: &str) -> Result<&'a str, String> {
    doc.get(key).ok_or_else(|| format!("missing field `{key}`"))
}

fn block<'a>(doc: &'a Document, name: &str) -> Result<&'a [String], String> {
    doc.get_block(name).ok_or_else(|| format!("missing block [{name}]"))
}

fn walk_block(doc: &Document, name: &str) -> Result<Walk, String> {
    let lines = block(doc, name)?;
    let line = lines.iter().find(|l| !l.trim().is_empty()).ok_or_else(|| format!("empty block [{name}]"))?;
    parse_walk(line)
}

fn hom_block(doc: &Document, name: &str) -> Result<Homomorphism, String> {
    parse_hom(block(doc, name)?)
}

fn graph_block(doc: &Document, name: &str) -> Result<SignedGraph, String> {
    parse_graph(&block(doc, name)?.join("\n")).map_err(|e| format!("[{name}] {e}"))
}

/// The constructed graph: the `[graph]` block, or the extra file after the
/// `inputs` command graphs.
fn produced(doc: &Document, graphs: &[SignedGraph], inputs: usize) -> Result<SignedGraph, String> {
    if doc.get_block("graph").is_some() {
        return graph_block(doc, "graph");
    }
    graphs.get(inputs).cloned().ok_or_else(|| "no [graph] block and no output file given".to_string())
}

fn need(graphs: &[SignedGraph], k: usize) -> CliResult<()> {
    if graphs.len() < k {
        return Err(CliError::Usage(format!("verify needs at least {k} graph file(s)")));
    }
    Ok(())
}

fn compare_fields(doc: &Document, expected: &[(String, String)]) -> Check {
    for (k, v) in expected {
        let got = field(doc, k)?;
        ensure(got == v, format!("{k}={got} but recomputed {v}"))?;
    }
    Ok(())
}

/// A cycle of `g` with the given sign.
fn check_cycle(g: &SignedGraph, w: &Walk, sign: Sign) -> Check {
    g.validate_walk(w).map_err(|e| e.to_string())?;
    ensure(w.is_cycle(), format!("`{w}` is not a cycle"))?;
    let s = g.sign_of_walk(w).map_err(|e| e.to_string())?;
    ensure(s == sign, format!("cycle `{w}` has sign {}", s.symbol()))
}

fn check_hom(src: &SignedGraph, tgt: &SignedGraph, h: &Homomorphism) -> Check {
    let v = verify_hom(src, tgt, h).map_err(|e| e.to_string())?;
    ensure(v.criteria_agree(), "sign and cycle criteria disagree")?;
    ensure(v.is_yes(), format!("map is not a homomorphism: {v:?}"))
}

fn same_graph(a: &SignedGraph, b: &SignedGraph) -> Check {
    ensure(a.n() == b.n() && a.edges() == b.edges(), "graph differs from the recomputed construction")
}

/// Re-checks `doc` as produced by `command` on `graphs`. The outer error is
/// a usage problem; the inner one says why the witness is rejected.
pub(crate) fn verify(command: &str, doc: &Document, graphs: &[SignedGraph], budget: u64) -> CliResult<Check> {
    let opts = SearchOptions::default().with_budget(budget);
    let check = match command {
        "info" => {
            need(graphs, 1)?;
            let g = &graphs[0];
            let mut expected = vec![("n".to_string(), g.n().to_string()), ("m".to_string(), g.m().to_string())];
            expected.extend(info_fields(g));
            compare_fields(doc, &expected)
        }
        "balance" => {
            need(graphs, 1)?;
            let (key, g) = match doc.get("antibalanced") {
                Some(_) => ("antibalanced", graphs[0].negated()),
                None => ("balanced", graphs[0].clone()),
            };
            balance_like(doc, key, &g)
        }
        "equivalent" => {
            need(graphs, 2)?;
            let (a, b) = (&graphs[0], &graphs[1]);
            (|| match field(doc, "equivalent")? {
                "yes" => {
                    let x = parse_switch(field(doc, "X")?)?;
                    let s = a.switch(&x).map_err(|e| e.to_string())?;
                    ensure(s.signs() == b.signs(), "switching does not carry the first signature to the second")
                }
                "no" => {
                    let c = walk_block(doc, "cycle")?;
                    a.validate_walk(&c).map_err(|e| e.to_string())?;
                    ensure(c.is_cycle(), "certificate is not a cycle")?;
                    ensure(
                        a.sign_of_walk(&c).ok() != b.sign_of_walk(&c).ok(),
                        "the cycle has the same sign in both signatures",
                    )
                }
                v => Err(format!("unknown verdict `{v}`")),
            })()
        }
        "canonical" => {
            need(graphs, 1)?;
            let g = &graphs[0];
            (|| {
                let x = parse_switch(field(doc, "X")?)?;
                let c = produced(doc, graphs, 1)?;
                let s = g.switch(&x).map_err(|e| e.to_string())?;
                ensure(s.signs() == c.signs() && s.same_underlying(&c), "output is not the switched input")?;
                let positive: Vec<_> = (0..c.m()).filter(|&e| c.sign(e).is_positive()).collect();
                let all: Vec<_> = (0..c.n()).collect();
                let p = c.subgraph(&all, &positive);
                ensure(p.components().1 == g.components().1, "positive edges do not span every component")
            })()
        }
        "girth" => {
            need(graphs, 1)?;
            let g = &graphs[0];
            (|| {
                compare_fields(doc, &profile_fields(g))?;
                let p = girth_profile(g);
                for t in WalkType::ALL {
                    let Some(lines) = doc.get_block(&format!("walk {t}")) else {
                        ensure(!p.get(t).is_finite(), format!("missing witness for g{t}"))?;
                        continue;
                    };
                    let w = parse_walk(lines.first().ok_or("empty walk block")?)?;
                    g.validate_walk(&w).map_err(|e| e.to_string())?;
                    ensure(w.is_closed(), format!("witness for g{t} is not closed"))?;
                    ensure(g.walk_type(&w).ok() == Some(t), format!("witness for g{t} has the wrong type"))?;
                    ensure(
                        p.get(t).finite() == Some(w.len()),
                        format!("witness for g{t} has length {}", w.len()),
                    )?;
                }
                Ok(())
            })()
        }
        "classify" => {
            need(graphs, 1)?;
            let c = classify(&graphs[0]);
            let yn = |b: bool| if b { "yes" } else { "no" }.to_string();
            compare_fields(
                doc,
                &[("G01".into(), yn(c.g01)), ("G10".into(), yn(c.g10)), ("G11".into(), yn(c.g11))],
            )
        }
        "hom" | "iso" => {
            need(graphs, 2)?;
            let (a, b) = (&graphs[0], &graphs[1]);
            (|| match field(doc, command)? {
                "yes" => {
                    let h = hom_block(doc, "map")?;
                    ensure(doc.get("mode") != Some("colour") || h.switch.is_empty(), "colour-preserving map switches")?;
                    check_hom(a, b, &h)?;
                    if command == "iso" {
                        let inv = h.inverse().ok_or("map is not a bijection")?;
                        check_hom(b, a, &inv)?;
                    }
                    Ok(())
                }
                "no" => {
                    let switching = doc.get("mode") != Some("colour");
                    let search = if command == "iso" {
                        switching_iso(a, b, budget)
                    } else {
                        find_hom_with(a, b, SearchOptions { switching, ..opts })
                    };
                    match search.decided() {
                        Some(false) => Ok(()),
                        Some(true) => Err("a map exists".into()),
                        None => Err("recomputation ran out of budget".into()),
                    }
                }
                v => Err(format!("cannot verify `{command}={v}`")),
            })()
        }
        "core" => {
            need(graphs, 1)?;
            let g = &graphs[0];
            (|| {
                let core = produced(doc, graphs, 1)?;
                let h = hom_block(doc, "map")?;
                let vertices = parse_switch(field(doc, "vertices")?)?;
                let vertices: Vec<_> = vertices.iter().collect();
                ensure(vertices.len() == core.n(), "vertex list does not match core order")?;
                ensure(
                    core.edges().iter().all(|e| {
                        g.edges_between(vertices[e.u], vertices[e.v]).any(|f| g.sign(f) == e.sign)
                            || e.u > e.v && g.edges_between(vertices[e.v], vertices[e.u]).any(|f| g.sign(f) == e.sign)
                    }),
                    "core edge has no counterpart in the input",
                )?;
                let switching = doc.get("mode") != Some("colour");
                ensure(switching || h.switch.is_empty(), "colour-preserving retraction switches")?;
                check_hom(g, &core, &h)?;
                let opts = SearchOptions { switching, ..opts };
                match is_core(&core, opts) {
                    CoreVerdict::Core => Ok(()),
                    CoreVerdict::NotCore { .. } => Err("output retracts further".into()),
                    CoreVerdict::BudgetExceeded { .. } => Err("core check ran out of budget".into()),
                }
            })()
        }
        "edc" => {
            need(graphs, 1)?;
            let g = &graphs[0];
            if let Some(x) = doc.get("X") {
                (|| {
                    let x = parse_switch(x)?;
                    let ok = edc_invariance_check(g, &x).map_err(|e| e.to_string())?;
                    ensure(field(doc, "invariant")? == if ok { "yes" } else { "no" }, "invariance verdict differs")
                })()
            } else if doc.get("agree").is_some() {
                need(graphs, 2)?;
                let t = &graphs[1];
                (|| {
                    let (c1, _) = edc(g);
                    let (c2, _) = edc(t);
                    if doc.get_block("map").is_some() {
                        check_hom(g, t, &hom_block(doc, "map")?)?;
                    }
                    if doc.get_block("cover map").is_some() {
                        let h = hom_block(doc, "cover map")?;
                        ensure(h.switch.is_empty(), "cover map switches")?;
                        check_hom(&c1, &c2, &h)?;
                    }
                    let r = edc_hom_transfer(g, t, budget);
                    let d = |s: Option<bool>| match s {
                        Some(true) => "yes",
                        Some(false) => "no",
                        None => "budget",
                    };
                    ensure(field(doc, "direct")? == d(r.direct.decided()), "direct verdict differs")?;
                    ensure(field(doc, "covers")? == d(r.covers.decided()), "cover verdict differs")
                })()
            } else {
                let (c, _) = edc(g);
                produced(doc, graphs, 1).and_then(|p| same_graph(&p, &c))
            }
        }
        "dsg" => {
            need(graphs, 1)?;
            let (d, _) = dsg(&graphs[0]);
            produced(doc, graphs, 1).and_then(|p| same_graph(&p, &d))
        }
        "sgraph" => {
            need(graphs, 1)?;
            let s = s_of(&graphs[0])?;
            produced(doc, graphs, 1).and_then(|p| same_graph(&p, &s))
        }
        "spc" => (|| {
            let k: usize = field(doc, "k")?.parse().map_err(|_| "bad k")?;
            let s = spc_direct(k).map_err(|e| e.to_string())?;
            let p = produced(doc, graphs, 0)?;
            if p.edges() == s.edges() {
                return Ok(());
            }
            // The inductive build labels vertices differently.
            match switching_iso(&p, &s, budget).decided() {
                Some(true) => Ok(()),
                _ => Err("graph is not SPC(k) up to switching isomorphism".into()),
            }
        })(),
        "chromatic" => {
            need(graphs, 1)?;
            let g = &graphs[0];
            (|| {
                let l = GirthBound::parse(field(doc, "L")?).ok_or("bad L")?;
                ensure(bound_token(&l) == field(doc, "L")?, "bad L")?;
                let target = produced(doc, graphs, 1)?;
                let h = hom_block(doc, "map")?;
                check_hom(g, &target, &h)?;
                ensure(satisfies(&target, &l), "target violates L")?;
                let order: usize = field(doc, "order")?.parse().map_err(|_| "bad order")?;
                ensure(order == target.n(), "order differs from target size")
            })()
        }
        "pack" => {
            need(graphs, 1)?;
            pack(doc, &graphs[0], budget)
        }
        "walkcheck" => {
            need(graphs, 1)?;
            let g = &graphs[0];
            let bound = match doc.get("bound") {
                Some(b) => b.parse().map_err(|_| CliError::Usage("bad bound".into()))?,
                None => default_bound(g),
            };
            let o: Box<dyn WalkOracle> = match doc.get("oracle") {
                Some("odd") => Box::new(OddWalks),
                _ => Box::new(NegativeWalks(g)),
            };
            let (fields, _) = walkcheck_fields(g, o.as_ref(), bound)?;
            compare_fields(doc, &fields)
        }
        other => return Err(CliError::Usage(format!("verify: unknown command `{other}`"))),
    };
    Ok(check)
}

fn balance_like(doc: &Document, key: &str, g: &SignedGraph) -> Check {
    match field(doc, key)? {
        "yes" => {
            let x = parse_switch(field(doc, "X")?)?;
            let s = g.switch(&x).map_err(|e| e.to_string())?;
            ensure(s.negative_edges().is_empty(), "switching leaves a wrong-sign edge")
        }
        "no" => check_cycle(g, &walk_block(doc, "cycle")?, Sign::Negative),
        v => Err(format!("unknown verdict `{v}`")),
    }
}

fn packing_lines(g: &SignedGraph, lines: &[String]) -> Result<Vec<SwitchSet>, String> {
    let mut switches = Vec::new();
    for line in lines.iter().filter(|l| !l.trim().is_empty()) {
        let mut x = None;
        let mut neg = None;
        for tok in line.split_whitespace() {
            if let Some(v) = tok.strip_prefix("X=") {
                x = Some(parse_switch(v)?);
            } else if let Some(v) = tok.strip_prefix("negative=") {
                neg = Some(parse_edge_set(v)?);
            }
        }
        let x = x.ok_or_else(|| format!("missing X= in `{line}`"))?;
        let neg = neg.ok_or_else(|| format!("missing negative= in `{line}`"))?;
        ensure(neg == negative_set(g, &x), format!("listed negative set is wrong for X={x}"))?;
        switches.push(x);
    }
    Ok(switches)
}

fn pack(doc: &Document, g: &SignedGraph, budget: u64) -> Check {
    if let Some(v) = doc.get("disjoint") {
        return match v {
            "yes" => {
                let x = parse_switch(field(doc, "X")?)?;
                let a = negative_set(g, &SwitchSet::empty());
                ensure(negative_set(g, &x).is_disjoint(&a), "negative sets intersect")
            }
            "no" => match disjoint_switch(g) {
                DisjointSwitch::No(_) => {
                    let c = walk_block(doc, "cycle")?;
                    g.validate_walk(&c).map_err(|e| e.to_string())?;
                    ensure(c.is_closed() && c.len() % 2 == 1, "certificate is not an odd closed walk")?;
                    ensure(c.edges().iter().all(|&e| g.sign(e).is_negative()), "certificate uses a positive edge")
                }
                DisjointSwitch::Yes(x) => Err(format!("X={x} is a disjoint switching")),
            },
            v => Err(format!("unknown verdict `{v}`")),
        };
    }
    if let Some(v) = doc.get("contracted") {
        ensure(v == "no", "unknown contraction verdict")?;
        let c = walk_block(doc, "cycle")?;
        g.validate_walk(&c).map_err(|e| e.to_string())?;
        ensure(c.is_closed() && c.len() % 2 == 1, "certificate is not an odd closed walk")?;
        return ensure(c.edges().iter().all(|&e| g.sign(e).is_negative()), "certificate uses a positive edge");
    }
    if doc.get("contracted_n").is_some() {
        let lifted = graph_block(doc, "lifted")?;
        ensure(lifted.same_underlying(g), "lifted graph has a different underlying graph")?;
        let ok = matches!(switching_equivalent(g, &lifted), Ok(Equivalence::Yes(_)));
        return ensure(ok, "lifted signature is not equivalent to the input");
    }
    if doc.get("partition").is_some() {
        let k: usize = field(doc, "k")?.parse().map_err(|_| "bad k")?;
        if let Some(lines) = doc.get_block("partition") {
            let switches = packing_lines(g, lines)?;
            ensure(switches.len() == k + 1, format!("partition has {} classes, expected {}", switches.len(), k + 1))?;
            let mut seen = vec![0usize; g.m()];
            for x in &switches {
                for e in negative_set(g, x) {
                    seen[e] += 1;
                }
            }
            ensure(seen.iter().all(|&c| c == 1), "classes do not partition the edges")?;
        }
        let spc = spc_direct(k).map_err(|e| e.to_string())?;
        if doc.get_block("map").is_some() {
            check_hom(g, &spc, &hom_block(doc, "map")?)?;
        }
        let r = pack_vs_spc(g, k, budget).map_err(|e| e.to_string())?;
        ensure(
            (field(doc, "partition")? == "yes") == r.partition.is_some(),
            "partition verdict differs from recomputation",
        )?;
        return ensure(
            (field(doc, "hom")? == "yes") == r.hom.is_found(),
            "homomorphism verdict differs from recomputation",
        );
    }
    let l: usize = field(doc, "l")?.parse().map_err(|_| "bad l")?;
    let switches = packing_lines(g, block(doc, "packing")?)?;
    ensure(switches.len() == l, "l differs from the number of listed signatures")?;
    let sets: Vec<_> = switches.iter().map(|x| negative_set(g, x)).collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            ensure(sets[i].is_disjoint(&sets[j]), format!("signatures {} and {} overlap", i + 1, j + 1))?;
            ensure(sets[i] != sets[j], format!("signatures {} and {} coincide", i + 1, j + 1))?;
        }
    }
    if field(doc, "optimal")? == "yes" {
        let p = pack_signatures(g, budget).map_err(|e| e.to_string())?;
        ensure(!p.optimal || p.len() == l, format!("recomputed optimum is {}", p.len()))?;
    }
    Ok(())
}

//! Command-line front end for the `signed-graph` crate.
//!
//! [`run`] takes the argument vector and returns the exit code and the
//! rendered output, so the binary is a thin wrapper and tests can call it
//! directly. Exit codes: 0 yes/success, 1 a definite no, 2 usage or parse
//! error, 3 budget exceeded.

pub mod doc;
pub mod format;
mod verify;
pub mod witness;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use signed_graph::chromatic::{kl_chromatic, l_chromatic, GirthBound, KlChromatic};
use signed_graph::equivalence::{
    classify, count_switching_classes, cycle_rank, is_antibalanced, is_balanced, spanning_forest,
    switching_equivalent, Balance, Equivalence,
};
use signed_graph::girth::{girth_profile, layered_walk_girth, realization_analysis};
use signed_graph::hom::{
    compute_core, dsg, edc, edc_hom_transfer, edc_invariance_check, find_hom_with, s_of, spc_direct,
    spc_inductive, switching_iso, HomSearch, NoHom, SearchOptions, DEFAULT_BUDGET,
};
use signed_graph::packing::{contract_negative, disjoint_switch, pack_signatures, pack_vs_spc, DisjointSwitch};
use signed_graph::walksys::{
    basic_properties_check, default_bound, exclusive_3walk_check, signature_from_oracle, NegativeWalks, OddWalks,
    WalkCheck, WalkOracle,
};
use signed_graph::{Error, SignedGraph, WalkType};

use doc::{Document, Verdict};
use format::{emit_graph, parse_graph, ParseError};
use witness::format_edge_set;

#[derive(Parser, Debug)]
#[command(name = "sgtool", version, about = "Signed graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Search node budget for homomorphism, core, chromatic and packing searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Walk length bound for walk-system sweeps (default 2·|E|).
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the constructed graph (or, for other commands, the result) here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    /// The negative closed walks of the input signature.
    Negative,
    /// Closed walks of odd length.
    Odd,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sizes, cycle rank and number of switching classes.
    Info { graph: PathBuf },
    /// Balance test with a switching or a negative cycle.
    Balance {
        graph: PathBuf,
        /// Test antibalance instead.
        #[arg(long)]
        anti: bool,
    },
    /// Switching equivalence of two signatures on the same graph.
    Equivalent { a: PathBuf, b: PathBuf },
    /// The equivalent signature that is positive on a BFS spanning forest.
    Canonical { graph: PathBuf },
    /// The four walk-girths with shortest witnesses.
    Girth {
        graph: PathBuf,
        /// Also report whether each girth is realised by cycles, walks or both.
        #[arg(long)]
        realization: bool,
        /// Also report the shortest-path layer bounds.
        #[arg(long)]
        layered: bool,
    },
    /// Membership in the balanced, signed bipartite and antibalanced classes.
    Classify { graph: PathBuf },
    /// Homomorphism search.
    Hom {
        source: PathBuf,
        target: PathBuf,
        /// Forbid switching (2-edge-coloured homomorphism).
        #[arg(long)]
        colour: bool,
    },
    /// Switching isomorphism search.
    Iso { a: PathBuf, b: PathBuf },
    /// Core by repeated retraction.
    Core {
        graph: PathBuf,
        #[arg(long)]
        colour: bool,
    },
    /// Extended double cover; with --target compares homomorphisms of the
    /// graphs and of their covers; with --switch checks switching invariance.
    Edc {
        graph: PathBuf,
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long)]
        switch: Option<String>,
    },
    /// Double switching graph.
    Dsg { graph: PathBuf },
    /// Signed projective cube SPC(k).
    Spc {
        k: usize,
        /// Build by iterating the extended double cover.
        #[arg(long)]
        inductive: bool,
    },
    /// Bipartite replacement S(G) of an unsigned graph (signs ignored).
    Sgraph { graph: PathBuf },
    /// L-chromatic number, or with --k-bound the (K,L)-chromatic number of
    /// the given family.
    Chromatic {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        /// Girth bounds l01,l10,l11 (integers or inf).
        #[arg(long = "l-bound")]
        l_bound: String,
        /// Girth bounds k01,k10,k11 selecting the family members to measure
        #[arg(long = "k-bound")]
        k_bound: Option<String>,
    },
    /// Largest packing of equivalent signatures with disjoint negative sets.
    Pack {
        graph: PathBuf,
        /// Compare edge partitions into k+1 classes with homomorphisms to SPC(k).
        #[arg(long)]
        spc: Option<usize>,
        /// Only look for one equivalent signature disjoint from the input.
        #[arg(long)]
        disjoint: bool,
        /// Contract the negative edges and lift the rebuilt signature.
        #[arg(long)]
        contract: bool,
    },
    /// Checks the 3-walk and basic properties of a walk system.
    Walkcheck {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = OracleKind::Negative)]
        oracle: OracleKind,
    },
    /// Re-checks the witnesses in a result document.
    Verify {
        /// The command that produced the document.
        command: String,
        witness: PathBuf,
        /// The graph files the command was run on (and, for commands that
        /// wrote a graph with --out, that file last).
        graphs: Vec<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Core(#[from] Error),
}

type CliResult<T> = Result<T, CliError>;

pub(crate) fn load(path: &Path) -> CliResult<SignedGraph> {
    let text = read(path)?;
    parse_graph(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

pub(crate) fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) type Fields = Vec<(String, String)>;

pub(crate) fn profile_fields(g: &SignedGraph) -> Fields {
    let p = girth_profile(g);
    WalkType::ALL.iter().map(|&t| (format!("g{t}"), p.get(t).to_string())).collect()
}

/// Runs the tool on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(&cli) {
        Ok(doc) => {
            let text = match cli.format {
                OutputFormat::Text => doc.to_text(),
                OutputFormat::Machine => doc.to_json(),
            };
            (doc.verdict.exit_code(), text)
        }
        Err(CliError::Core(Error::BudgetExceeded(nodes))) => {
            let mut doc = Document::new(command_name(&cli.command)).verdict(Verdict::Budget);
            doc.line([("budget", "exceeded".to_string()), ("nodes", nodes.to_string())]);
            let text = match cli.format {
                OutputFormat::Text => doc.to_text(),
                OutputFormat::Machine => doc.to_json(),
            };
            (3, text)
        }
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Balance { .. } => "balance",
        Command::Equivalent { .. } => "equivalent",
        Command::Canonical { .. } => "canonical",
        Command::Girth { .. } => "girth",
        Command::Classify { .. } => "classify",
        Command::Hom { .. } => "hom",
        Command::Iso { .. } => "iso",
        Command::Core { .. } => "core",
        Command::Edc { .. } => "edc",
        Command::Dsg { .. } => "dsg",
        Command::Spc { .. } => "spc",
        Command::Sgraph { .. } => "sgraph",
        Command::Chromatic { .. } => "chromatic",
        Command::Pack { .. } => "pack",
        Command::Walkcheck { .. } => "walkcheck",
        Command::Verify { .. } => "verify",
    }
}

/// Writes a constructed graph to `--out`, or embeds it as a `[graph]` block.
fn attach_graph(doc: &mut Document, g: &SignedGraph, out: &Option<PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => write(path, &emit_graph(g)),
        None => {
            doc.block("graph", emit_graph(g));
            Ok(())
        }
    }
}

fn hom_result(doc: &mut Document, key: &str, s: &HomSearch) {
    match s {
        HomSearch::Found(h) => {
            doc.field(key, "yes");
            doc.block("map", h.to_string());
            doc.verdict = Verdict::Yes;
        }
        HomSearch::None(reason) => {
            let reason = match reason {
                NoHom::Girth(t) => format!("girth-{t}"),
                NoHom::Exhausted => "exhausted".into(),
            };
            doc.line([(key, "no".to_string()), ("reason", reason)]);
            doc.verdict = Verdict::No;
        }
        HomSearch::BudgetExceeded { nodes } => {
            doc.line([(key, "budget".to_string()), ("nodes", nodes.to_string())]);
            doc.verdict = Verdict::Budget;
        }
    }
}

fn decided(s: &HomSearch) -> &'static str {
    match s.decided() {
        Some(b) => yes_no(b),
        None => "budget",
    }
}

fn execute(cli: &Cli) -> CliResult<Document> {
    let name = command_name(&cli.command);
    let mut doc = Document::new(name);
    let opts = SearchOptions::default().with_budget(cli.budget);
    match &cli.command {
        Command::Info { graph } => {
            let g = load(graph)?;
            doc.line([("n", g.n()), ("m", g.m())]);
            doc.line(info_fields(&g));
        }
        Command::Balance { graph, anti } => {
            let g = load(graph)?;
            let (key, result) = if *anti { ("antibalanced", is_antibalanced(&g)) } else { ("balanced", is_balanced(&g)) };
            match result {
                Balance::Yes(x) => {
                    doc.line([(key, "yes".to_string()), ("X", x.to_string())]);
                }
                Balance::No(c) => {
                    doc.field(key, "no").block("cycle", c.to_string());
                    doc.verdict = Verdict::No;
                }
            }
        }
        Command::Equivalent { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            match switching_equivalent(&a, &b)? {
                Equivalence::Yes(x) => {
                    doc.line([("equivalent", "yes".to_string()), ("X", x.to_string())]);
                }
                Equivalence::No(c) => {
                    doc.field("equivalent", "no").block("cycle", c.to_string());
                    doc.verdict = Verdict::No;
                }
            }
        }
        Command::Canonical { graph } => {
            let g = load(graph)?;
            let x = spanning_forest(&g).positive_switch(&g);
            let c = g.switch(&x)?;
            doc.line([("X", x.to_string()), ("negative", c.negative_edges().len().to_string())]);
            attach_graph(&mut doc, &c, &cli.out)?;
        }
        Command::Girth { graph, realization, layered } => {
            let g = load(graph)?;
            let p = girth_profile(&g);
            doc.line(profile_fields(&g));
            if *realization {
                let r = realization_analysis(&g);
                doc.line(WalkType::ALL.iter().map(|&t| (format!("r{t}"), r[t.index()].to_string())));
            }
            if *layered {
                doc.line(WalkType::ALL.iter().map(|&t| (format!("layered{t}"), layered_walk_girth(&g, t).to_string())));
            }
            for t in WalkType::ALL {
                if let Some(w) = p.witness(t) {
                    doc.block(&format!("walk {t}"), w.to_string());
                }
            }
        }
        Command::Classify { graph } => {
            let c = classify(&load(graph)?);
            doc.line([("G01", yes_no(c.g01)), ("G10", yes_no(c.g10)), ("G11", yes_no(c.g11))]);
        }
        Command::Hom { source, target, colour } => {
            let (s, t) = (load(source)?, load(target)?);
            let opts = SearchOptions { switching: !colour, ..opts };
            hom_result(&mut doc, "hom", &find_hom_with(&s, &t, opts));
            doc.field("mode", if *colour { "colour" } else { "switching" });
        }
        Command::Iso { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            hom_result(&mut doc, "iso", &switching_iso(&a, &b, cli.budget));
        }
        Command::Core { graph, colour } => {
            let g = load(graph)?;
            let c = compute_core(&g, SearchOptions { switching: !colour, ..opts })?;
            let vertices: signed_graph::SwitchSet = c.vertices.iter().copied().collect();
            doc.line([
                ("core_n", c.core.n().to_string()),
                ("core_m", c.core.m().to_string()),
                ("vertices", vertices.to_string()),
                ("mode", if *colour { "colour" } else { "switching" }.to_string()),
            ]);
            doc.block("map", c.retraction.to_string());
            attach_graph(&mut doc, &c.core, &cli.out)?;
        }
        Command::Edc { graph, target, switch } => {
            let g = load(graph)?;
            if let Some(t) = target {
                let t = load(t)?;
                let r = edc_hom_transfer(&g, &t, cli.budget);
                let agree = match r.agree() {
                    Some(b) => yes_no(b),
                    None => "budget",
                };
                doc.line([
                    ("direct", decided(&r.direct)),
                    ("covers", decided(&r.covers)),
                    ("fibered", r.fibered.map_or("n/a", yes_no)),
                    ("agree", agree),
                ]);
                if let Some(h) = r.direct.found() {
                    doc.block("map", h.to_string());
                }
                if let Some(h) = r.covers.found() {
                    doc.block("cover map", h.to_string());
                }
                doc.verdict = match r.agree() {
                    Some(true) => Verdict::Yes,
                    Some(false) => Verdict::No,
                    None => Verdict::Budget,
                };
            } else if let Some(x) = switch {
                let x = witness::parse_switch(x).map_err(CliError::Usage)?;
                let ok = edc_invariance_check(&g, &x)?;
                doc.line([("X", x.to_string()), ("invariant", yes_no(ok).to_string())]);
                if !ok {
                    doc.verdict = Verdict::No;
                }
            } else {
                let (c, _) = edc(&g);
                doc.line([("n", c.n()), ("m", c.m())]);
                attach_graph(&mut doc, &c, &cli.out)?;
            }
        }
        Command::Dsg { graph } => {
            let (d, _) = dsg(&load(graph)?);
            doc.line([("n", d.n()), ("m", d.m())]);
            attach_graph(&mut doc, &d, &cli.out)?;
        }
        Command::Spc { k, inductive } => {
            let g = if *inductive { spc_inductive(*k)? } else { spc_direct(*k)? };
            doc.line([("k", *k), ("n", g.n()), ("m", g.m())]);
            attach_graph(&mut doc, &g, &cli.out)?;
        }
        Command::Sgraph { graph } => {
            let s = s_of(&load(graph)?)?;
            doc.line([("n", s.n()), ("m", s.m())]);
            attach_graph(&mut doc, &s, &cli.out)?;
        }
        Command::Chromatic { graphs, l_bound, k_bound } => {
            let parse_bound = |s: &str| {
                GirthBound::parse(s).ok_or_else(|| CliError::Usage(format!("bad girth bound `{s}`, expected a,b,c")))
            };
            let l = parse_bound(l_bound)?;
            let family: Vec<SignedGraph> = graphs.iter().map(|p| load(p)).collect::<CliResult<_>>()?;
            match k_bound {
                None => {
                    if family.len() != 1 {
                        return Err(CliError::Usage("without --k-bound exactly one graph is expected".into()));
                    }
                    let r = l_chromatic(&family[0], &l, cli.budget)?;
                    doc.line([("L", bound_token(&l)), ("order", r.order.to_string())]);
                    doc.block("map", r.hom.to_string());
                    attach_graph(&mut doc, &r.target, &cli.out)?;
                }
                Some(k) => {
                    let k = parse_bound(k)?;
                    match kl_chromatic(&family, &k, &l, cli.budget)? {
                        KlChromatic::NoMember => {
                            doc.line([("value", "none".to_string()), ("reason", "no-member-satisfies-K".into())]);
                            doc.verdict = Verdict::No;
                        }
                        KlChromatic::Value { value, member } => {
                            doc.line([
                                ("value", value.to_string()),
                                ("member", graphs[member].display().to_string()),
                            ]);
                        }
                    }
                }
            }
        }
        Command::Pack { graph, spc, disjoint, contract } => {
            let g = load(graph)?;
            pack(&mut doc, &g, *spc, *disjoint, *contract, cli.budget)?;
        }
        Command::Walkcheck { graph, oracle } => {
            let g = load(graph)?;
            let bound = cli.bound.unwrap_or_else(|| default_bound(&g));
            let o: Box<dyn WalkOracle> = match oracle {
                OracleKind::Negative => Box::new(NegativeWalks(&g)),
                OracleKind::Odd => Box::new(OddWalks),
            };
            walkcheck(&mut doc, &g, o.as_ref(), bound)?;
            doc.field("oracle", if *oracle == OracleKind::Odd { "odd" } else { "negative" });
        }
        Command::Verify { command, witness, graphs } => {
            let text = read(witness)?;
            let parsed = Document::parse(command, &text).map_err(CliError::Usage)?;
            let graphs: Vec<SignedGraph> = graphs.iter().map(|p| load(p)).collect::<CliResult<_>>()?;
            let verdict = verify::verify(command, &parsed, &graphs, cli.budget)?;
            match verdict {
                Ok(()) => {
                    doc.line([("command", command.as_str()), ("valid", "yes")]);
                }
                Err(reason) => {
                    doc.line([("command", command.to_string()), ("valid", "no".to_string())]);
                    doc.block("reason", reason);
                    doc.verdict = Verdict::No;
                }
            }
            return Ok(doc);
        }
    }
    if let (Some(path), false) = (&cli.out, writes_graph(&cli.command)) {
        write(path, &match cli.format {
            OutputFormat::Text => doc.to_text(),
            OutputFormat::Machine => doc.to_json(),
        })?;
    }
    Ok(doc)
}

fn writes_graph(c: &Command) -> bool {
    match c {
        Command::Canonical { .. } | Command::Core { .. } | Command::Dsg { .. } | Command::Spc { .. } => true,
        Command::Sgraph { .. } => true,
        Command::Edc { target, switch, .. } => target.is_none() && switch.is_none(),
        Command::Chromatic { k_bound, .. } => k_bound.is_none(),
        _ => false,
    }
}

pub(crate) fn bound_token(l: &GirthBound) -> String {
    format!("{},{},{}", l.l01, l.l10, l.l11)
}

pub(crate) fn info_fields(g: &SignedGraph) -> Fields {
    let loops = g.edges().iter().filter(|e| e.is_loop()).count();
    let classes = count_switching_classes(g).map_or_else(|| "overflow".into(), |c| c.to_string());
    vec![
        ("negative".into(), g.negative_edges().len().to_string()),
        ("loops".into(), loops.to_string()),
        ("components".into(), g.components().1.to_string()),
        ("cycle_rank".into(), cycle_rank(g).to_string()),
        ("classes".into(), classes),
    ]
}

fn pack(
    doc: &mut Document,
    g: &SignedGraph,
    spc: Option<usize>,
    disjoint: bool,
    contract: bool,
    budget: u64,
) -> CliResult<()> {
    if [spc.is_some(), disjoint, contract].iter().filter(|b| **b).count() > 1 {
        return Err(CliError::Usage("--spc, --disjoint and --contract are exclusive".into()));
    }
    if disjoint {
        match disjoint_switch(g) {
            DisjointSwitch::Yes(x) => {
                doc.line([("disjoint", "yes".to_string()), ("X", x.to_string())]);
            }
            DisjointSwitch::No(c) => {
                doc.field("disjoint", "no").block("cycle", c.to_string());
                doc.verdict = Verdict::No;
            }
        }
    } else if contract {
        match contract_negative(g) {
            Ok(c) => {
                doc.line([
                    ("contracted_n", c.graph.n().to_string()),
                    ("contracted_m", c.graph.m().to_string()),
                    ("X", c.switch.to_string()),
                ]);
                doc.block("lifted", emit_graph(&c.lifted));
            }
            Err(Error::NegativeSubgraphNotBipartite(cycle)) => {
                doc.field("contracted", "no").block("cycle", cycle.to_string());
                doc.verdict = Verdict::No;
            }
            Err(e) => return Err(e.into()),
        }
    } else if let Some(k) = spc {
        let r = pack_vs_spc(g, k, budget)?;
        let agree = match r.agree() {
            Some(b) => yes_no(b),
            None => "budget",
        };
        doc.line([
            ("k", k.to_string()),
            ("partition", yes_no(r.partition.is_some()).to_string()),
            ("hom", decided(&r.hom).to_string()),
            ("agree", agree.to_string()),
        ]);
        if let Some(classes) = &r.partition {
            let lines: Vec<String> = classes
                .iter()
                .map(|x| format!("X={x} negative={}", format_edge_set(&signed_graph::packing::negative_set(g, x))))
                .collect();
            doc.block("partition", lines.join("\n"));
        }
        if let Some(h) = r.hom.found() {
            doc.block("map", h.to_string());
        }
        doc.verdict = match (r.agree(), r.partition.is_some()) {
            (None, _) => Verdict::Budget,
            (Some(false), _) => Verdict::No,
            (Some(true), found) => {
                if found {
                    Verdict::Yes
                } else {
                    Verdict::No
                }
            }
        };
    } else {
        let p = pack_signatures(g, budget)?;
        doc.line([("l", p.len().to_string()), ("optimal", yes_no(p.optimal).to_string())]);
        let lines: Vec<String> = p
            .switches
            .iter()
            .zip(&p.negative_sets)
            .map(|(x, s)| format!("X={x} negative={}", format_edge_set(s)))
            .collect();
        doc.block("packing", lines.join("\n"));
        if !p.optimal {
            doc.verdict = Verdict::Budget;
        }
    }
    Ok(())
}

pub(crate) fn walkcheck_fields(
    g: &SignedGraph,
    o: &dyn WalkOracle,
    bound: usize,
) -> CliResult<(Fields, Vec<(String, String)>)> {
    let mut blocks = Vec::new();
    let three = exclusive_3walk_check(g, o, bound);
    let three_field = match &three {
        WalkCheck::Pass { .. } => "pass",
        WalkCheck::Rotation { walk, rotated } => {
            blocks.push(("rotation".to_string(), format!("{walk}\n{rotated}")));
            "fail-rotation"
        }
        WalkCheck::ThreeWalk { walks } => {
            blocks.push(("three walks".to_string(), walks.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("\n")));
            "fail-three-walk"
        }
    };
    let basic = basic_properties_check(g, o, bound);
    let basic_field = match &basic {
        None => "pass".to_string(),
        Some(v) => {
            blocks.push(("basic".to_string(), format!("{v:?}")));
            "fail".to_string()
        }
    };
    let mut fields = vec![
        ("bound".to_string(), bound.to_string()),
        ("three_walk".to_string(), three_field.to_string()),
        ("basic".to_string(), basic_field),
    ];
    match signature_from_oracle(g, o, bound) {
        Ok(sigma) => {
            fields.push(("signature".into(), "found".into()));
            blocks.push(("signature".into(), emit_graph(&sigma)));
        }
        Err(Error::OracleDisagreement(w)) => {
            fields.push(("signature".into(), "none".into()));
            blocks.push(("disagreement".into(), w.to_string()));
        }
        Err(e) => return Err(e.into()),
    }
    Ok((fields, blocks))
}

fn walkcheck(doc: &mut Document, g: &SignedGraph, o: &dyn WalkOracle, bound: usize) -> CliResult<()> {
    let (fields, blocks) = walkcheck_fields(g, o, bound)?;
    let pass = fields.iter().all(|(k, v)| match k.as_str() {
        "three_walk" | "basic" => v == "pass",
        "signature" => v == "found",
        _ => true,
    });
    doc.line(fields);
    for (name, text) in blocks {
        doc.block(&name, text);
    }
    if !pass {
        doc.verdict = Verdict::No;
    }
    Ok(())
}

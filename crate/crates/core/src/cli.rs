//! Command-line front end. [`dispatch`] parses `argv`, runs one subcommand and
//! returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or the verified property holds |
//! | 1 | the verified property does not hold |
//! | 2 | usage, parse or I/O error |
//! | 3 | an exact search hit its cap |

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::codec::{self, GraphDoc, HypergraphDoc};
use crate::graph::{Edge, Graph};
use crate::groups::{GraphicGroup, GroupBase, GroupSpec};
use crate::labeling::{verify_labeling, LabelingKind};
use crate::lattice::{self, Colored, LatticeOp, LatticeWord};
use crate::netsim::{self, DistKind, SimConfig};
use crate::setcolor::{self, AdjacentStrategy, Cgraph, ClassFlags, ConstraintSet, IntersectionKind};
use crate::topcode::{self, StringMode, TopcodeMatrix};
use crate::{Error, Report, Result};

#[derive(Parser, Debug)]
#[command(name = "hypercode", version, about = "Set-colored graphs, hypergraphs, Topcode-matrices, groups, lattices and network growth")]
struct Cli {
    /// Output format: json for documents and verdicts, csv for simulator tables.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write the main document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check a labeling, a set-coloring class or a Chyper class.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Hypergraph structure.
    Hyper {
        #[arg(value_enum)]
        action: HyperAction,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build set-colorings.
    #[command(subcommand)]
    Setcolor(SetcolorCmd),
    /// Topcode-matrices and number-based strings.
    #[command(subcommand)]
    Topcode(TopcodeCmd),
    /// Every-zero graphic groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Edge-hamiltonian and coinciding lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Preferential-attachment network growth.
    #[command(subcommand)]
    Simulate(SimCmd),
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// A number labeling stored in the graph document.
    Labeling {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        kind: String,
        /// Magic constant, modulus or `k`, for the kinds that need one.
        #[arg(long)]
        param: Option<i64>,
        /// Matching edges such as `0-3,1-2` for the strongly graceful kinds.
        #[arg(long)]
        matching: Option<String>,
    },
    /// A set-coloring class, by name or by condition letters.
    Class {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        class: String,
        /// Comma-separated constraints such as `c0,abs-diff`.
        #[arg(long)]
        constraints: Option<String>,
    },
    /// Whether the graph is (a subgraph of) the intersected-graph of its vertex sets.
    Intersected {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "c0")]
        constraints: String,
    },
    /// Graceful, odd-graceful or rainbow intersection total set-labelings.
    Intersection {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        kind: String,
    },
    /// Chyper classes 1 to 7.
    Chyper {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        class: u8,
        #[arg(long, default_value_t = 1)]
        rank: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HyperAction {
    Reduce,
    Dual,
    Uniform,
    Ears,
    Matching,
    Connectivity,
    Intersected,
    Chromatic,
    Adjacent,
}

#[derive(Subcommand, Debug)]
enum SetcolorCmd {
    /// VSET-coloring of a labeled tree.
    Vset {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// PSCS variants 1 to 3 on a labeled graph.
    Pscs {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        variant: u8,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
    },
    /// Intersection total set-labeling of a tree.
    ConstructTree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "graceful")]
        kind: String,
    },
    /// Adjacent edge-intersected total set-labeling of a tree.
    AdjacentEdge {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::LeafPeeling)]
        strategy: Strategy,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    LeafPeeling,
    LongestPath,
}

#[derive(Subcommand, Debug)]
enum TopcodeCmd {
    /// Topcode-matrix of a labeled graph, columns in the file's edge order.
    Build {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Set-type Topcode-matrix of a set-colored graph.
    Set {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "c0")]
        constraints: String,
    },
    /// Number-based strings; canonical unless `--count` is given.
    Strings {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        count: Option<usize>,
        /// Defaults to `TOPCODE_SEED`, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "")]
        sep: String,
    },
    /// Number of strings, `(3q)!`.
    Count {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Flavor::Labeling)]
    flavor: Flavor,
    #[arg(long)]
    modulus: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Flavor {
    Labeling,
    Total,
    Set,
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    Build(GroupArgs),
    /// Index of `i [+] j` with zero `k`.
    Add {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        zero: usize,
    },
    Inverse {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        zero: usize,
    },
    /// Group axioms under every zero.
    Check(GroupArgs),
}

#[derive(Subcommand, Debug)]
enum LatticeCmd {
    /// One operation on two graphs.
    Apply {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        op: String,
        /// Index into the legal sites in canonical order.
        #[arg(long, default_value_t = 0)]
        site: usize,
    },
    /// A seeded random lattice element.
    Sample {
        /// Base graphs, repeat the flag for each.
        #[arg(long = "in", required = true)]
        input: Vec<PathBuf>,
        /// Copies per base, comma-separated.
        #[arg(long)]
        counts: String,
        /// One operation per fold step, comma-separated.
        #[arg(long)]
        ops: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All `{0,1}`-coefficient elements under a coincide operation.
    Enumerate01 {
        #[arg(long = "in", required = true)]
        input: Vec<PathBuf>,
        #[arg(long)]
        op: String,
    },
}

#[derive(Args, Debug)]
struct SimArgs {
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Initial clique size, `m + 1` by default.
    #[arg(long)]
    m0: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SimArgs {
    fn config(&self) -> SimConfig {
        let mut c = SimConfig::new(self.m, self.steps, self.seed);
        if let Some(m0) = self.m0 {
            c.m0 = m0;
        }
        c
    }
}

#[derive(Subcommand, Debug)]
enum SimCmd {
    /// Growth history as `t,v_net,e_net`, or one distribution table.
    Run {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long)]
        dist: Option<String>,
    },
    /// Linear growth fits and the degree exponent.
    Fit {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, default_value_t = netsim::DEFAULT_K_MIN)]
        k_min: usize,
    },
    Kinematics {
        #[command(flatten)]
        sim: SimArgs,
    },
}

/// What a subcommand produced.
enum Outcome {
    /// A document or table; exit 0.
    Doc(Value),
    Text(String),
    /// A verdict with its evidence; exit 0 or 1.
    Verdict { holds: bool, body: Value, report: Option<Report> },
}

/// Runs the command line and returns the exit code.
pub fn dispatch(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli).and_then(|o| emit(&cli, o)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            }
        }
    }
}

fn emit(cli: &Cli, o: Outcome) -> Result<i32> {
    let (text, code) = match o {
        Outcome::Doc(v) => (codec::to_canonical(&v)?, 0),
        Outcome::Text(s) => (s, 0),
        Outcome::Verdict { holds, body, report } => {
            let text = match (cli.format, report) {
                (Some(Format::Text), Some(r)) => format!("{}\n{r}", if holds { "holds" } else { "fails" }),
                _ => codec::to_canonical(&body)?,
            };
            (text, if holds { 0 } else { 1 })
        }
    };
    match &cli.out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(code)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents always serialize")
}

fn verdict(report: Report, extra: Value) -> Outcome {
    let holds = report.holds();
    let mut body = json!({ "holds": holds, "checks": to_value(&report.checks) });
    if let (Value::Object(b), Value::Object(e)) = (&mut body, extra) {
        b.extend(e);
    }
    Outcome::Verdict { holds, body, report: Some(report) }
}

fn graph_doc(path: &Path) -> Result<(GraphDoc, Graph)> {
    codec::load_graph(path)
}

fn colored(path: &Path) -> Result<Colored> {
    let (doc, g) = graph_doc(path)?;
    Ok(match doc.vertex_sets {
        Some(_) => Colored::colored(g, doc.set_coloring()?),
        None => Colored::plain(g),
    })
}

fn colored_doc(c: &Colored) -> Value {
    let doc = GraphDoc::from_graph(&c.graph);
    to_value(&match &c.coloring {
        Some(sc) => doc.with_coloring(sc, &c.graph),
        None => doc,
    })
}

fn parse_matching(s: &str) -> Result<Vec<Edge>> {
    s.split(',')
        .filter(|x| !x.is_empty())
        .map(|p| {
            let (a, b) = p.split_once('-').ok_or_else(|| Error::Parse(format!("matching edge {p:?} is not u-v")))?;
            let n = |x: &str| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}")));
            Ok((n(a)?, n(b)?))
        })
        .collect()
}

fn parse_list<T>(s: &str, f: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    s.split(',').filter(|x| !x.is_empty()).map(|x| f(x.trim())).collect()
}

/// A Topcode-matrix file, or a labeled graph document to build one from.
fn matrix(path: &Path) -> Result<TopcodeMatrix> {
    let v: Value = codec::read(path)?;
    if v.get("x").is_some() {
        return codec::load_topcode(path);
    }
    let (doc, g) = graph_doc(path)?;
    topcode::from_labeled_graph(&g, &doc.labeling()?, Some(&doc.oriented_edges()))
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Verify(v) => run_verify(v),
        Cmd::Hyper { action, input } => run_hyper(*action, input),
        Cmd::Setcolor(c) => run_setcolor(c),
        Cmd::Topcode(c) => run_topcode(c),
        Cmd::Group(c) => run_group(c),
        Cmd::Lattice(c) => run_lattice(c),
        Cmd::Simulate(c) => run_simulate(c, cli.format),
    }
}

fn run_verify(v: &VerifyCmd) -> Result<Outcome> {
    Ok(match v {
        VerifyCmd::Labeling { input, kind, param, matching } => {
            let (doc, g) = graph_doc(input)?;
            let kind = LabelingKind::parse(kind, *param, parse_matching(matching.as_deref().unwrap_or(""))?)?;
            verdict(verify_labeling(&g, &doc.labeling()?, &kind)?, json!({}))
        }
        VerifyCmd::Class { input, class, constraints } => {
            let (doc, g) = graph_doc(input)?;
            let r = constraints.as_deref().map(ConstraintSet::parse).transpose()?;
            let v = setcolor::verify_class(&g, &doc.set_coloring()?, &ClassFlags::parse(class)?, r.as_ref())?;
            verdict(v.report, json!({ "uniformity": to_value(&v.uniformity) }))
        }
        VerifyCmd::Intersected { input, constraints } => {
            let (doc, g) = graph_doc(input)?;
            let v = setcolor::verify_intersected(&g, &doc.set_coloring()?, &ConstraintSet::parse(constraints)?)?;
            verdict(v.report, json!({ "is_intersected_graph": v.is_intersected_graph, "missing": v.missing }))
        }
        VerifyCmd::Intersection { input, kind } => {
            let (doc, g) = graph_doc(input)?;
            let v = setcolor::verify_intersection_total(&g, &doc.set_coloring()?, IntersectionKind::parse(kind)?)?;
            verdict(v.report, json!({ "representatives": v.representatives, "unmatched": v.unmatched }))
        }
        VerifyCmd::Chyper { input, class, rank } => {
            let (doc, g) = graph_doc(input)?;
            let v = setcolor::verify_chyper(&g, &doc.set_coloring()?, Cgraph::from_number(*class, *rank)?)?;
            verdict(v.report, json!({ "preamble": to_value(&v.preamble.checks) }))
        }
    })
}

fn sets(family: &[crate::Set]) -> Value {
    to_value(&family.iter().map(|s| s.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn run_hyper(action: HyperAction, input: &Path) -> Result<Outcome> {
    let (_, h) = codec::load_hypergraph(input)?;
    let verdict_of = |holds: bool, body: Value| Outcome::Verdict { holds, body, report: None };
    Ok(match action {
        HyperAction::Reduce => {
            let red = h.graham_reduction();
            Outcome::Doc(json!({ "reduction": sets(&red), "acyclic": red.is_empty() }))
        }
        HyperAction::Dual => Outcome::Doc(to_value(&HypergraphDoc::from_hypergraph(&h.dual()?))),
        HyperAction::Uniform => {
            let u = h.uniformity();
            verdict_of(u.is_some(), json!({ "uniform": u.is_some(), "rank": u }))
        }
        HyperAction::Ears => {
            let s = h.structure();
            let ears: Vec<crate::Set> = s.ears.iter().map(|&i| h.edges()[i].clone()).collect();
            Outcome::Doc(json!({ "ears": sets(&ears), "isolated": s.isolated, "irreducible": s.irreducible }))
        }
        HyperAction::Matching => {
            let all = h.perfect_hypermatchings()?;
            let listed: Vec<Value> = all.iter().map(|m| sets(&m.iter().map(|&i| h.edges()[i].clone()).collect::<Vec<_>>())).collect();
            verdict_of(!all.is_empty(), json!({ "count": all.len(), "matchings": listed }))
        }
        HyperAction::Connectivity => {
            let (k, cut) = h.hyperedge_connectivity()?;
            Outcome::Doc(json!({ "connectivity": k, "cut": sets(&cut.iter().map(|&i| h.edges()[i].clone()).collect::<Vec<_>>()) }))
        }
        HyperAction::Intersected => {
            let (g, sc) = h.intersected_graph();
            Outcome::Doc(to_value(&GraphDoc::from_graph(&g).with_coloring(&sc, &g)))
        }
        HyperAction::Chromatic => Outcome::Doc(json!({
            "hyperedge_chromatic_index": h.hyperedge_chromatic_index()?,
            "hypervertex_chromatic_number": h.hypervertex_chromatic()?,
        })),
        HyperAction::Adjacent => Outcome::Doc(to_value(&HypergraphDoc::from_hypergraph(&h.adjacent_hypergraph()?))),
    })
}

fn with_report(doc: Value, report: Report) -> Outcome {
    let holds = report.holds();
    let body = json!({ "holds": holds, "checks": to_value(&report.checks), "document": doc });
    Outcome::Verdict { holds, body, report: Some(report) }
}

fn run_setcolor(c: &SetcolorCmd) -> Result<Outcome> {
    Ok(match c {
        SetcolorCmd::Vset { input } => {
            let (doc, t) = graph_doc(input)?;
            let sc = setcolor::vset_coloring(&t, &doc.labeling()?)?;
            let v = setcolor::verify_intersected(&t, &sc, &ConstraintSet::c0())?;
            with_report(to_value(&GraphDoc::from_graph(&t).with_coloring(&sc, &t)), v.report)
        }
        SetcolorCmd::Pscs { input, variant, rounds } => {
            let (doc, g) = graph_doc(input)?;
            let out = setcolor::pscs(&g, &doc.labeling()?, *variant, *rounds)?;
            let v = setcolor::verify_intersected(&out.graph, &out.coloring, &ConstraintSet::c0())?;
            with_report(to_value(&GraphDoc::from_graph(&out.graph).with_coloring(&out.coloring, &out.graph)), v.report)
        }
        SetcolorCmd::ConstructTree { input, kind } => {
            let (_, t) = graph_doc(input)?;
            let kind = IntersectionKind::parse(kind)?;
            let sc = setcolor::construct_for_tree(&t, kind)?;
            let v = setcolor::verify_intersection_total(&t, &sc, kind)?;
            with_report(to_value(&GraphDoc::from_graph(&t).with_coloring(&sc, &t)), v.report)
        }
        SetcolorCmd::AdjacentEdge { input, strategy } => {
            let (_, t) = graph_doc(input)?;
            let s = match strategy {
                Strategy::LeafPeeling => AdjacentStrategy::LeafPeeling,
                Strategy::LongestPath => AdjacentStrategy::LongestPath,
            };
            let sc = setcolor::construct_adjacent_edge_intersected(&t, s)?;
            let v = setcolor::verify_chyper(&t, &sc, Cgraph::AdjacentEdgeIntersected)?;
            with_report(to_value(&GraphDoc::from_graph(&t).with_coloring(&sc, &t)), v.report)
        }
    })
}

fn run_topcode(c: &TopcodeCmd) -> Result<Outcome> {
    Ok(match c {
        TopcodeCmd::Build { input } => Outcome::Doc(to_value(&matrix(input)?)),
        TopcodeCmd::Set { input, constraints } => {
            let (doc, g) = graph_doc(input)?;
            let s = topcode::from_set_colored_graph(&g, &doc.set_coloring()?, Some(&doc.oriented_edges()), &ConstraintSet::parse(constraints)?)?;
            let (per_matrix, total) = topcode::set_string_count(&s);
            let violations = topcode::set_column_violations(&s);
            let grid = |row: &[crate::Set]| sets(row);
            let body = json!({
                "holds": violations.is_empty(),
                "matrix": { "x": grid(&s.x), "e": grid(&s.e), "y": grid(&s.y) },
                "violations": violations,
                "strings_per_matrix": per_matrix.to_string(),
                "strings_total": total.to_string(),
            });
            Outcome::Verdict { holds: violations.is_empty(), body, report: None }
        }
        TopcodeCmd::Strings { input, count, seed, sep } => {
            let t = matrix(input)?;
            let mode = match count {
                None => StringMode::Canonical,
                Some(n) => {
                    let seed = match seed {
                        Some(s) => *s,
                        None => match std::env::var("TOPCODE_SEED") {
                            Ok(s) => s.parse().map_err(|e| Error::Parse(format!("TOPCODE_SEED={s:?}: {e}")))?,
                            Err(_) => 0,
                        },
                    };
                    StringMode::Seeded { seed, count: *n }
                }
            };
            let mut out = topcode::to_strings(&t, mode, sep).join("\n");
            out.push('\n');
            Outcome::Text(out)
        }
        TopcodeCmd::Count { input } => {
            let t = matrix(input)?;
            Outcome::Doc(json!({ "entries": 3 * t.q(), "count": topcode::string_count(&t).to_string() }))
        }
    })
}

fn group(a: &GroupArgs) -> Result<GraphicGroup> {
    let (doc, g) = graph_doc(&a.input)?;
    let base = match a.flavor {
        Flavor::Labeling => GroupBase::Labeling(crate::labeling::Labeling::vertices(doc.labeling()?.vertex)),
        Flavor::Total => GroupBase::Total(doc.labeling()?),
        Flavor::Set => GroupBase::SetColored(doc.set_coloring()?),
    };
    GraphicGroup::build(GroupSpec { graph: g, base, modulus: a.modulus })
}

fn run_group(c: &GroupCmd) -> Result<Outcome> {
    Ok(match c {
        GroupCmd::Build(a) => {
            let gr = group(a)?;
            Outcome::Doc(json!({ "modulus": gr.modulus, "elements": gr.elements }))
        }
        GroupCmd::Add { group: a, i, j, zero } => {
            let gr = group(a)?;
            Outcome::Doc(json!({ "index": gr.add(*i, *j, *zero)?, "element": gr.combine(*i, *j, *zero)? }))
        }
        GroupCmd::Inverse { group: a, i, zero } => Outcome::Doc(json!({ "index": group(a)?.inverse(*i, *zero)? })),
        GroupCmd::Check(a) => verdict(group(a)?.verify_axioms()?, json!({})),
    })
}

fn run_lattice(c: &LatticeCmd) -> Result<Outcome> {
    Ok(match c {
        LatticeCmd::Apply { left, right, op, site } => {
            let (a, b, op) = (colored(left)?, colored(right)?, LatticeOp::parse(op)?);
            let all = lattice::sites(&a.graph, &b.graph, op)?;
            let chosen = all.get(*site).ok_or_else(|| Error::Precondition(format!("site {site} of {} legal sites", all.len())))?;
            let res = lattice::apply_op(&a, &b, op, chosen)?;
            Outcome::Doc(json!({ "sites": all.len(), "site": to_value(chosen), "result": colored_doc(&res) }))
        }
        LatticeCmd::Sample { input, counts, ops, seed } => {
            let base: Vec<Colored> = input.iter().map(|p| colored(p)).collect::<Result<_>>()?;
            let word = LatticeWord {
                counts: parse_list(counts, |x| x.parse().map_err(|e| Error::Parse(format!("count {x:?}: {e}"))))?,
                ops: parse_list(ops, LatticeOp::parse)?,
                seed: *seed,
            };
            let s = lattice::sample(&base, &word)?;
            Outcome::Doc(json!({ "first": s.first, "trace": to_value(&s.trace), "result": colored_doc(&s.result) }))
        }
        LatticeCmd::Enumerate01 { input, op } => {
            let base: Vec<Colored> = input.iter().map(|p| colored(p)).collect::<Result<_>>()?;
            let rows: Vec<Value> = lattice::enumerate01(&base, LatticeOp::parse(op)?)?
                .iter()
                .map(|e| {
                    json!({
                        "coefficients": e.coefficients,
                        "is_intersected_graph": e.is_intersected_graph,
                        "result": e.result.as_ref().map(colored_doc),
                    })
                })
                .collect();
            Outcome::Doc(Value::Array(rows))
        }
    })
}

fn run_simulate(c: &SimCmd, format: Option<Format>) -> Result<Outcome> {
    Ok(match c {
        SimCmd::Run { sim, dist } => {
            let (s, summary) = netsim::run(&sim.config())?;
            match (dist, format) {
                (Some(d), _) => Outcome::Text(netsim::table_csv(&netsim::distributions(&s, DistKind::parse(d)?))),
                (None, Some(Format::Json)) => Outcome::Doc(to_value(&summary)),
                (None, _) => Outcome::Text(netsim::history_csv(&s.history)),
            }
        }
        SimCmd::Fit { sim, k_min } => {
            let (s, summary) = netsim::run(&sim.config())?;
            let exponent = netsim::fit_exponent(&netsim::distributions(&s, DistKind::Cum), *k_min)?;
            Outcome::Doc(json!({
                "growth": to_value(&summary.fit),
                "exponent": to_value(&exponent),
                "degree_sum_always": summary.degree_sum_always,
            }))
        }
        SimCmd::Kinematics { sim } => {
            let (s, _) = netsim::run(&sim.config())?;
            Outcome::Doc(to_value(&netsim::kinematics(&s.history)?))
        }
    })
}

//! Word-bounded pieces of graph lattices: the split-and-join operators that
//! keep graphs edge-hamiltonian, the coincide operators on set-colored graphs,
//! seeded sampling with a replayable trace, and `{0,1}`-coefficient enumeration.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{cap, invalid, precondition, Result};
use crate::graph::{coincide_edges, coincide_vertices, hamilton_cycles, is_edge_hamiltonian, split_vertex, Edge, Graph, Vertex};
use crate::hypergraph::Hypergraph;
use crate::setcolor::{dc_compose, verify_intersected, ConstraintSet, SetColoring};
use crate::Report;

/// Largest order of a sampled graph.
pub const ORDER_CAP: usize = 64;
/// Largest number of bases for `{0,1}` enumeration.
pub const ENUM_CAP: usize = 6;
/// Largest degree whose neighbor bipartitions are enumerated.
pub const DEGREE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeOp {
    /// Split a vertex on each side, join the halves pairwise by two edges.
    O1,
    /// Split a vertex on each side, coincide the halves pairwise.
    O2,
    /// Split a vertex on each side, coincide one pair of halves and join the other.
    O3,
    EdgeCoincide,
    VertexCoincide,
}

impl LatticeOp {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "o1" => Self::O1,
            "o2" => Self::O2,
            "o3" => Self::O3,
            "edge-coincide" => Self::EdgeCoincide,
            "vertex-coincide" => Self::VertexCoincide,
            _ => return invalid(format!("unknown operation {s:?}")),
        })
    }

    fn splits(&self) -> bool {
        matches!(self, Self::O1 | Self::O2 | Self::O3)
    }
}

/// Where an operation acts. Ids on the right refer to the second graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "site", rename_all = "kebab-case")]
pub enum Site {
    /// `u` splits into `u'` (neighbors in `u_part`) and `u''` (the rest);
    /// likewise `v` on the right.
    Split { u: Vertex, u_part: BTreeSet<Vertex>, v: Vertex, v_part: BTreeSet<Vertex> },
    Vertex { u: Vertex, v: Vertex },
    /// `left.0` meets `right.0` and `left.1` meets `right.1`.
    Edge { left: Edge, right: Edge },
}

/// A graph with an optional set-coloring; coincide operators merge colorings
/// by union when both sides carry one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colored {
    pub graph: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<SetColoring>,
}

impl Colored {
    pub fn plain(graph: Graph) -> Self {
        Self { graph, coloring: None }
    }

    pub fn colored(graph: Graph, coloring: SetColoring) -> Self {
        Self { graph, coloring: Some(coloring) }
    }
}

/// Vertex splits `(u, part)` after which every edge still lies on a Hamilton
/// cycle leaving `u` once into `part` and once into the rest. Only these splits
/// are used by O1-O3, which is what keeps their results edge-hamiltonian.
pub fn legal_splits(g: &Graph) -> Result<Vec<(Vertex, BTreeSet<Vertex>)>> {
    let cycles = hamilton_cycles(g)?;
    let edges = g.edges();
    let cyc_edges: Vec<BTreeSet<Edge>> = cycles
        .iter()
        .map(|c| (0..c.len()).map(|i| crate::graph::edge(c[i], c[(i + 1) % c.len()])).collect())
        .collect();
    let mut out = vec![];
    for u in g.vertices() {
        let nb: Vec<Vertex> = g.neighbors(u).iter().copied().collect();
        if nb.len() < 2 {
            continue;
        }
        cap("split degree", DEGREE_CAP, nb.len())?;
        let pairs: Vec<(Vertex, Vertex)> = cycles
            .iter()
            .map(|c| {
                let i = c.iter().position(|&x| x == u).expect("Hamilton cycle visits u");
                (c[(i + c.len() - 1) % c.len()], c[(i + 1) % c.len()])
            })
            .collect();
        // Bipartitions with the first neighbor on the kept side.
        for mask in 0..(1u32 << (nb.len() - 1)) {
            let part: BTreeSet<Vertex> =
                std::iter::once(nb[0]).chain((1..nb.len()).filter(|&i| mask & (1 << (i - 1)) != 0).map(|i| nb[i])).collect();
            if part.len() == nb.len() {
                continue;
            }
            let mut covered = BTreeSet::new();
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if part.contains(&a) != part.contains(&b) {
                    covered.extend(cyc_edges[k].iter().copied());
                }
            }
            if covered.len() == edges.len() {
                out.push((u, part));
            }
        }
    }
    Ok(out)
}

fn is_legal_split(g: &Graph, u: Vertex, part: &BTreeSet<Vertex>) -> Result<bool> {
    Ok(legal_splits(g)?.iter().any(|(w, p)| *w == u && p == part))
}

/// Every legal site for `op` between `a` and `b`, in canonical order.
pub fn sites(a: &Graph, b: &Graph, op: LatticeOp) -> Result<Vec<Site>> {
    Ok(match op {
        LatticeOp::O1 | LatticeOp::O2 | LatticeOp::O3 => {
            let (la, lb) = (legal_splits(a)?, legal_splits(b)?);
            let mut out = vec![];
            for (u, up) in &la {
                for (v, vp) in &lb {
                    out.push(Site::Split { u: *u, u_part: up.clone(), v: *v, v_part: vp.clone() });
                }
            }
            out
        }
        LatticeOp::VertexCoincide => {
            a.vertices().flat_map(|u| b.vertices().map(move |v| Site::Vertex { u, v })).collect()
        }
        LatticeOp::EdgeCoincide => {
            let mut out = vec![];
            for left in a.edges() {
                for (x, y) in b.edges() {
                    out.push(Site::Edge { left, right: (x, y) });
                    out.push(Site::Edge { left, right: (y, x) });
                }
            }
            out
        }
    })
}

/// Applies one operation to the disjoint union of `a` and `b` (ids of `b`
/// shifted by `a`'s order before merging). O1-O3 act on the graphs only and
/// return an uncolored result.
pub fn apply_op(a: &Colored, b: &Colored, op: LatticeOp, site: &Site) -> Result<Colored> {
    let (pa, pb) = (a.graph.order(), b.graph.order());
    match (op, site) {
        (LatticeOp::O1 | LatticeOp::O2 | LatticeOp::O3, Site::Split { u, u_part, v, v_part }) => {
            if *u >= pa || *v >= pb {
                return invalid("split vertex out of range");
            }
            if !is_legal_split(&a.graph, *u, u_part)? || !is_legal_split(&b.graph, *v, v_part)? {
                return precondition("illegal split site");
            }
            let d = a.graph.disjoint_union(&b.graph);
            let d = split_vertex(&d, *u, u_part)?;
            let vs: BTreeSet<Vertex> = v_part.iter().map(|x| x + pa).collect();
            let mut d = split_vertex(&d, v + pa, &vs)?;
            let (u1, u2, v1, v2) = (*u, pa + pb, v + pa, pa + pb + 1);
            let g = match op {
                LatticeOp::O1 => {
                    d.add_edge(u1, v1)?;
                    d.add_edge(u2, v2)?;
                    d
                }
                LatticeOp::O2 => {
                    let (h, remap) = coincide_vertices(&d, u1, v1)?;
                    coincide_vertices(&h, remap[u2], remap[v2])?.0
                }
                _ => {
                    d.add_edge(u2, v2)?;
                    coincide_vertices(&d, u1, v1)?.0
                }
            };
            Ok(Colored::plain(g))
        }
        (LatticeOp::VertexCoincide, Site::Vertex { u, v }) => {
            if *u >= pa || *v >= pb {
                return invalid("coincide vertex out of range");
            }
            coincide(a, b, &[vec![(0, *u), (1, *v)]], |d| Ok(coincide_vertices(d, *u, v + pa)?.0))
        }
        (LatticeOp::EdgeCoincide, Site::Edge { left, right }) => {
            if !a.graph.has_edge(left.0, left.1) || !b.graph.has_edge(right.0, right.1) {
                return invalid("coincide site is not an edge");
            }
            let glue = [vec![(0, left.0), (1, right.0)], vec![(0, left.1), (1, right.1)]];
            coincide(a, b, &glue, |d| Ok(coincide_edges(d, *left, (right.0 + pa, right.1 + pa))?.0))
        }
        _ => invalid(format!("site does not fit operation {op:?}")),
    }
}

fn coincide(a: &Colored, b: &Colored, glue: &[Vec<(usize, Vertex)>], plain: impl Fn(&Graph) -> Result<Graph>) -> Result<Colored> {
    match (&a.coloring, &b.coloring) {
        (Some(ca), Some(cb)) => {
            let t = dc_compose(&[(a.graph.clone(), ca.clone()), (b.graph.clone(), cb.clone())], glue)?;
            Ok(Colored::colored(t.graph, t.coloring))
        }
        _ => Ok(Colored::plain(plain(&a.graph.disjoint_union(&b.graph))?)),
    }
}

/// Multiplicities per base, one operation per fold step, and the seed that
/// orders the copies and picks the sites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeWord {
    pub counts: Vec<usize>,
    pub ops: Vec<LatticeOp>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: LatticeOp,
    /// Which base supplied the right-hand graph.
    pub base: usize,
    pub site: Site,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub result: Colored,
    /// Base index of the first copy.
    pub first: usize,
    pub trace: Vec<TraceStep>,
}

/// Left fold `L_k = op_k(L_{k-1}, T_{k+1})` over a seeded ordering of the
/// copies, each site drawn uniformly from the legal ones.
pub fn sample(base: &[Colored], word: &LatticeWord) -> Result<Sample> {
    if word.counts.len() != base.len() {
        return invalid(format!("{} counts for {} bases", word.counts.len(), base.len()));
    }
    let total: usize = word.counts.iter().sum();
    if total == 0 {
        return invalid("a word needs at least one copy");
    }
    if word.ops.len() + 1 != total {
        return invalid(format!("{total} copies need {} operations, got {}", total - 1, word.ops.len()));
    }
    let order: usize = base.iter().zip(&word.counts).map(|(b, &c)| b.graph.order() * c).sum();
    cap("lattice order", ORDER_CAP, order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(word.seed);
    let mut copies: Vec<usize> = word.counts.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c)).collect();
    copies.shuffle(&mut rng);
    let mut cur = base[copies[0]].clone();
    let mut trace = vec![];
    for (&k, &op) in copies[1..].iter().zip(&word.ops) {
        let candidates = sites(&cur.graph, &base[k].graph, op)?;
        if candidates.is_empty() {
            return precondition(format!("no legal site for {op:?}"));
        }
        let site = candidates[rng.gen_range(0..candidates.len())].clone();
        cur = apply_op(&cur, &base[k], op, &site)?;
        trace.push(TraceStep { op, base: k, site });
    }
    Ok(Sample { result: cur, first: copies[0], trace })
}

/// Re-runs a trace.
pub fn replay(base: &[Colored], first: usize, trace: &[TraceStep]) -> Result<Colored> {
    let mut cur = base.get(first).cloned().ok_or_else(|| crate::Error::InvalidInput("bad base index".into()))?;
    for s in trace {
        let b = base.get(s.base).ok_or_else(|| crate::Error::InvalidInput("bad base index".into()))?;
        cur = apply_op(&cur, b, s.op, &s.site)?;
    }
    Ok(cur)
}

/// The hypergraph whose hyperedges are the vertex sets of a colored element.
pub fn hypergraph_lattice_element(element: &Colored) -> Result<Hypergraph> {
    let sc = element.coloring.as_ref().ok_or_else(|| crate::Error::InvalidInput("element has no set-coloring".into()))?;
    Hypergraph::new(sc.vertex.iter().map(|s| s.iter().copied().collect::<Vec<_>>()).collect())
}

/// One `{0,1}`-coefficient element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Element01 {
    pub coefficients: Vec<u8>,
    /// `None` for the all-zero word.
    pub result: Option<Colored>,
    /// Whether the result is exactly the intersected-graph of its vertex sets.
    pub is_intersected_graph: Option<bool>,
}

/// All `2^m` coefficient vectors over the bases, each folded in base order with
/// `op` at the first legal site.
pub fn enumerate01(base: &[Colored], op: LatticeOp) -> Result<Vec<Element01>> {
    cap("lattice bases", ENUM_CAP, base.len())?;
    if op.splits() {
        return invalid("enumeration uses a coincide operation");
    }
    let m = base.len();
    let mut out = vec![];
    for mask in 0..(1usize << m) {
        let coefficients: Vec<u8> = (0..m).map(|i| ((mask >> i) & 1) as u8).collect();
        let chosen: Vec<usize> = (0..m).filter(|&i| coefficients[i] == 1).collect();
        let mut result = None;
        if let Some((&first, rest)) = chosen.split_first() {
            let mut cur = base[first].clone();
            for &k in rest {
                let site = sites(&cur.graph, &base[k].graph, op)?
                    .into_iter()
                    .next()
                    .ok_or_else(|| crate::Error::Precondition("no site".into()))?;
                cur = apply_op(&cur, &base[k], op, &site)?;
            }
            result = Some(cur);
        }
        let is_intersected_graph = match &result {
            Some(Colored { graph, coloring: Some(sc) }) => {
                let v = verify_intersected(graph, sc, &ConstraintSet::c0())?;
                Some(v.holds() && v.is_intersected_graph)
            }
            _ => None,
        };
        out.push(Element01 { coefficients, result, is_intersected_graph });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum ExtensionMode {
    /// Join the two halves by an edge.
    Edge,
    /// Join them by a path with `len` edges.
    Path { len: usize },
    /// Put them on a new complete graph `K_m`.
    Clique { m: usize },
}

/// `g` with `u` split at `part` (the new half is vertex `p`) and the halves
/// joined according to `mode`.
pub fn extend_at(g: &Graph, u: Vertex, part: &BTreeSet<Vertex>, mode: ExtensionMode) -> Result<Graph> {
    let mut h = split_vertex(g, u, part)?;
    let u2 = g.order();
    match mode {
        ExtensionMode::Edge => h.add_edge(u, u2)?,
        ExtensionMode::Path { len } => {
            if len < 1 {
                return invalid("path needs at least one edge");
            }
            let mut prev = u;
            for _ in 1..len {
                let x = h.add_vertex();
                h.add_edge(prev, x)?;
                prev = x;
            }
            h.add_edge(prev, u2)?;
        }
        ExtensionMode::Clique { m } => {
            if m < 2 {
                return invalid("clique needs at least two vertices");
            }
            let mut members = vec![u, u2];
            for _ in 2..m {
                members.push(h.add_vertex());
            }
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    h.add_edge(members[i], members[j])?;
                }
            }
        }
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionVerdict {
    /// `g` itself is edge-hamiltonian.
    pub direct: bool,
    /// Some legal split of `u` exists and every one extends to an edge-hamiltonian graph.
    pub constructed: bool,
    pub splits: usize,
    /// Holds when the two sides agree.
    pub report: Report,
}

impl ExtensionVerdict {
    pub fn holds(&self) -> bool {
        self.report.holds()
    }
}

/// Compares `g` being edge-hamiltonian with the extended graphs at `u` being
/// edge-hamiltonian, over every legal split of `u`.
pub fn edge_hamiltonian_extension_check(g: &Graph, u: Vertex, mode: ExtensionMode) -> Result<ExtensionVerdict> {
    if u >= g.order() {
        return invalid(format!("vertex {u} out of range"));
    }
    let direct = is_edge_hamiltonian(g)?.holds;
    let splits: Vec<BTreeSet<Vertex>> = legal_splits(g)?.into_iter().filter(|(w, _)| *w == u).map(|(_, p)| p).collect();
    let mut constructed = !splits.is_empty();
    let mut bad = None;
    for part in &splits {
        let h = extend_at(g, u, part, mode)?;
        if !is_edge_hamiltonian(&h)?.holds {
            constructed = false;
            bad.get_or_insert(format!("split {part:?} gives a graph that is not edge-hamiltonian"));
        }
    }
    let mut report = Report::new();
    report.check(
        "equivalent",
        (direct != constructed).then(|| format!("direct {direct}, constructed {constructed}; {}", bad.unwrap_or_default())),
    );
    Ok(ExtensionVerdict { direct, constructed, splits: splits.len(), report })
}

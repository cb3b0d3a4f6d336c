//! Set-colorings of graphs: class verifiers, intersected-graph membership,
//! constructions from number labelings of trees (VSET and PSCS), the
//! multiple-intersection classes, representatives, and the split/coincide
//! operations that carry a coloring along.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{cap, invalid, precondition, Error, Result};
use crate::graph::{check_homomorphism, coincide_edges, coincide_vertices, edge, split_edge, split_vertex, Edge, Graph, Vertex};
use crate::labeling::{tree_kd_total, verify_edge_odd_graceful_base, Labeling};
use crate::matching;
use crate::{Report, Set};

/// Largest edge count for the exact adjacent 1-common search.
pub const CHI_CAP: usize = 12;

/// Sets on vertices and optionally on edges (aligned with `Graph::edges()`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetColoring {
    pub vertex: Vec<Set>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<Vec<Set>>,
}

impl SetColoring {
    pub fn vertices(vertex: Vec<Set>) -> Self {
        Self { vertex, edge: None }
    }

    pub fn total(vertex: Vec<Set>, edge: Vec<Set>) -> Self {
        Self { vertex, edge: Some(edge) }
    }

    /// Edge sets, falling back to `F(u) ∩ F(v)` when none are stored.
    pub fn edge_sets(&self, g: &Graph) -> Vec<Set> {
        match &self.edge {
            Some(e) => e.clone(),
            None => g.edges().iter().map(|&(u, v)| &self.vertex[u] & &self.vertex[v]).collect(),
        }
    }

    /// Union of the vertex sets.
    pub fn ground(&self) -> Set {
        self.vertex.iter().flatten().copied().collect()
    }

    /// Fails unless the assignment sizes match `g`.
    pub fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.vertex.len() != g.order() {
            return invalid(format!("{} vertex sets for {} vertices", self.vertex.len(), g.order()));
        }
        if let Some(e) = &self.edge {
            if e.len() != g.size() {
                return invalid(format!("{} edge sets for {} edges", e.len(), g.size()));
            }
        }
        Ok(())
    }

    /// Stores the induced intersections as edge sets.
    pub fn with_intersections(mut self, g: &Graph) -> Self {
        self.edge = None;
        self.edge = Some(self.edge_sets(g));
        self
    }

    fn edge_map(&self, g: &Graph) -> BTreeMap<Edge, Set> {
        g.edges().into_iter().zip(self.edge_sets(g)).collect()
    }
}

pub(crate) fn show(s: &Set) -> String {
    let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn to_u32(x: i64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::InvalidInput(format!("color {x} is not a non-negative 32-bit integer")))
}

fn edge_index(g: &Graph) -> BTreeMap<Edge, usize> {
    g.edges().into_iter().enumerate().map(|(i, e)| (e, i)).collect()
}

/// First pair of edges sharing an end, as edge indices.
fn adjacent_edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let idx = edge_index(g);
    let mut out = vec![];
    for u in g.vertices() {
        let inc: Vec<usize> = g.neighbors(u).iter().map(|&v| idx[&edge(u, v)]).collect();
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// Constraints

/// One entry of a constraint set. All but c0 relate `a ∈ F(u)`, `c ∈ F(uv)`
/// and `b ∈ F(v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Constraint {
    /// `F(uv) ⊇ F(u) ∩ F(v) ≠ ∅`.
    IntersectionC0,
    /// `|a - b| = c`.
    AbsDiff,
    /// `a + b ≡ c (mod eta)`.
    SumMod { eta: i64 },
    /// `a + b + c = k`.
    EdgeMagic { k: i64 },
    /// `|a + b - c| = k`.
    EdgeMagicGraceful { k: i64 },
    /// `||a - b| - c| = k`.
    FelicitousDiff { k: i64 },
    /// `c + |a - b| = k`.
    GracefulDiff { k: i64 },
    /// `a + b - zero ≡ c (mod modulus)`.
    GroupAdd { zero: i64, modulus: i64 },
}

impl Constraint {
    /// Parses `name` or `name:param[:param]`, e.g. `sum-mod:5`, `group-add:1:6`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut it = s.split(':');
        let name = it.next().unwrap_or_default();
        let params: Vec<i64> = it
            .map(|x| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad constraint parameter {x:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        let want = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                invalid(format!("constraint {name} takes {n} parameter(s), got {}", params.len()))
            }
        };
        let c = match name {
            "c0" | "intersection-c0" => {
                want(0)?;
                Self::IntersectionC0
            }
            "abs-diff" => {
                want(0)?;
                Self::AbsDiff
            }
            "sum-mod" => {
                want(1)?;
                Self::SumMod { eta: params[0] }
            }
            "edge-magic" => {
                want(1)?;
                Self::EdgeMagic { k: params[0] }
            }
            "edge-magic-graceful" => {
                want(1)?;
                Self::EdgeMagicGraceful { k: params[0] }
            }
            "felicitous-diff" => {
                want(1)?;
                Self::FelicitousDiff { k: params[0] }
            }
            "graceful-diff" => {
                want(1)?;
                Self::GracefulDiff { k: params[0] }
            }
            "group-add" => {
                want(2)?;
                Self::GroupAdd { zero: params[0], modulus: params[1] }
            }
            _ => return invalid(format!("unknown constraint {name:?}")),
        };
        if matches!(c, Self::SumMod { eta } if eta < 1) || matches!(c, Self::GroupAdd { modulus, .. } if modulus < 1) {
            return invalid(format!("constraint {s:?} needs a positive modulus"));
        }
        Ok(c)
    }

    pub fn name(&self) -> String {
        match *self {
            Self::IntersectionC0 => "c0".into(),
            Self::AbsDiff => "abs-diff".into(),
            Self::SumMod { eta } => format!("sum-mod:{eta}"),
            Self::EdgeMagic { k } => format!("edge-magic:{k}"),
            Self::EdgeMagicGraceful { k } => format!("edge-magic-graceful:{k}"),
            Self::FelicitousDiff { k } => format!("felicitous-diff:{k}"),
            Self::GracefulDiff { k } => format!("graceful-diff:{k}"),
            Self::GroupAdd { zero, modulus } => format!("group-add:{zero}:{modulus}"),
        }
    }

    /// Evaluates the triple law; `None` for c0, which is not a triple law.
    pub fn relates(&self, a: i64, c: i64, b: i64) -> Option<bool> {
        Some(match *self {
            Self::IntersectionC0 => return None,
            Self::AbsDiff => (a - b).abs() == c,
            Self::SumMod { eta } => (a + b - c).rem_euclid(eta) == 0,
            Self::EdgeMagic { k } => a + b + c == k,
            Self::EdgeMagicGraceful { k } => (a + b - c).abs() == k,
            Self::FelicitousDiff { k } => ((a - b).abs() - c).abs() == k,
            Self::GracefulDiff { k } => c + (a - b).abs() == k,
            Self::GroupAdd { zero, modulus } => (a + b - zero - c).rem_euclid(modulus) == 0,
        })
    }

    /// Some `a ∈ fu`, `b ∈ fv`, `c ∈ fe` satisfying the law.
    fn witness(&self, fu: &Set, fe: &Set, fv: &Set) -> Option<(u32, u32, u32)> {
        for &a in fu {
            for &b in fv {
                for &c in fe {
                    if self.relates(a as i64, c as i64, b as i64) == Some(true) {
                        return Some((a, c, b));
                    }
                }
            }
        }
        None
    }

    /// Whether `c` can be produced from some `a ∈ fu`, `b ∈ fv`.
    fn generates(&self, c: u32, fu: &Set, fv: &Set) -> bool {
        match self {
            Self::IntersectionC0 => fu.contains(&c) && fv.contains(&c),
            _ => fu.iter().any(|&a| fv.iter().any(|&b| self.relates(a as i64, c as i64, b as i64) == Some(true))),
        }
    }
}

/// A non-empty list of constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConstraintSet(Vec<Constraint>);

impl ConstraintSet {
    pub fn new(items: Vec<Constraint>) -> Result<Self> {
        if items.is_empty() {
            return invalid("a constraint set needs at least one constraint");
        }
        Ok(Self(items))
    }

    /// Just the intersection condition.
    pub fn c0() -> Self {
        Self(vec![Constraint::IntersectionC0])
    }

    /// Comma separated [`Constraint::parse`] forms.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.split(',').filter(|x| !x.is_empty()).map(Constraint::parse).collect::<Result<_>>()?)
    }

    pub fn items(&self) -> &[Constraint] {
        &self.0
    }

    pub fn has_c0(&self) -> bool {
        self.0.contains(&Constraint::IntersectionC0)
    }
}

// ---------------------------------------------------------------------------
// Class verification

/// The conditions a class of set-coloring is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// Every vertex carries a non-empty set.
    VertexSets,
    /// Every edge carries a stored non-empty set.
    EdgeSets,
    /// Both of the above.
    TotalSets,
    /// Adjacent vertices carry different sets.
    AdjacentVertexDistinct,
    /// Adjacent edges carry different sets.
    AdjacentEdgeDistinct,
    /// All vertex sets are pairwise different.
    VertexDistinct,
    /// All edge sets are pairwise different.
    EdgeDistinct,
    /// Every element of an edge set is generated from its end sets by a constraint.
    EdgeInduced,
    /// The induced edge sets are pairwise different.
    InducedEdgeDistinct,
}

impl Condition {
    pub const ALL: [Condition; 9] = [
        Self::VertexSets,
        Self::EdgeSets,
        Self::TotalSets,
        Self::AdjacentVertexDistinct,
        Self::AdjacentEdgeDistinct,
        Self::VertexDistinct,
        Self::EdgeDistinct,
        Self::EdgeInduced,
        Self::InducedEdgeDistinct,
    ];

    /// Letter used in reports, `a` to `i`.
    pub fn letter(&self) -> char {
        (b'a' + Self::ALL.iter().position(|c| c == self).unwrap() as u8) as char
    }

    pub fn from_letter(c: char) -> Result<Self> {
        let i = (c as u32).wrapping_sub('a' as u32) as usize;
        Self::ALL.get(i).copied().ok_or_else(|| Error::InvalidInput(format!("no condition {c:?}")))
    }
}

/// Which sizes must all be equal, and to what.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "on", rename_all = "kebab-case")]
pub enum Uniform {
    Vertex { size: usize },
    Edge { size: usize },
    Total { size: usize },
}

/// A class: conditions that must hold, a group that must not all hold
/// (the pseudo classes), and an optional uniformity requirement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub require: Vec<Condition>,
    #[serde(default)]
    pub forbid: Vec<Condition>,
    #[serde(default)]
    pub uniform: Option<Uniform>,
}

/// Names accepted by [`ClassFlags::named`].
pub const CLASS_NAMES: [&str; 12] = [
    "strong-vertex-set-labeling",
    "strong-edge-set-labeling",
    "strongly-induced-edge-set-labeling",
    "strongly-total-set-labeling",
    "strong-set-coloring",
    "set-labeling",
    "edge-set-labeling",
    "total-set-coloring",
    "set-coloring",
    "pseudo-vertex-set-labeling",
    "pseudo-edge-set-labeling",
    "pseudo-total-set-coloring",
];

impl ClassFlags {
    pub fn require(conds: &[Condition]) -> Self {
        Self { require: conds.to_vec(), ..Self::default() }
    }

    /// The named classes, each a fixed combination of conditions.
    pub fn named(name: &str) -> Result<Self> {
        use Condition::*;
        let (req, forbid): (&[Condition], &[Condition]) = match name {
            "strong-vertex-set-labeling" => (&[VertexSets, VertexDistinct], &[]),
            "strong-edge-set-labeling" => (&[EdgeSets, EdgeDistinct], &[]),
            "strongly-induced-edge-set-labeling" => (&[EdgeDistinct, EdgeInduced], &[]),
            "strongly-total-set-labeling" => (&[TotalSets, VertexDistinct, EdgeDistinct], &[]),
            "strong-set-coloring" => (&[VertexSets, VertexDistinct, EdgeInduced, InducedEdgeDistinct], &[]),
            "set-labeling" => (&[VertexSets, AdjacentVertexDistinct], &[]),
            "edge-set-labeling" => (&[EdgeSets, AdjacentEdgeDistinct], &[]),
            "total-set-coloring" => (&[TotalSets, AdjacentVertexDistinct, AdjacentEdgeDistinct], &[]),
            "set-coloring" => (&[VertexSets, AdjacentVertexDistinct, AdjacentEdgeDistinct, EdgeInduced], &[]),
            "pseudo-vertex-set-labeling" => (&[VertexSets], &[AdjacentVertexDistinct]),
            "pseudo-edge-set-labeling" => (&[EdgeSets], &[AdjacentEdgeDistinct]),
            "pseudo-total-set-coloring" => (&[TotalSets], &[AdjacentVertexDistinct, AdjacentEdgeDistinct]),
            _ => return invalid(format!("unknown class {name:?}")),
        };
        Ok(Self { require: req.to_vec(), forbid: forbid.to_vec(), uniform: None })
    }

    /// A class name, or a string of condition letters such as `acfg`.
    pub fn parse(s: &str) -> Result<Self> {
        if CLASS_NAMES.contains(&s) {
            return Self::named(s);
        }
        Ok(Self::require(&s.chars().map(Condition::from_letter).collect::<Result<Vec<_>>>()?))
    }
}

/// Smallest and largest set sizes on vertices, edges and both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Uniformity {
    pub v_s: usize,
    pub v_l: usize,
    pub e_s: usize,
    pub e_l: usize,
    pub t_s: usize,
    pub t_l: usize,
}

impl Uniformity {
    pub fn of(g: &Graph, sc: &SetColoring) -> Self {
        let vs: Vec<usize> = sc.vertex.iter().map(|s| s.len()).collect();
        let es: Vec<usize> = sc.edge_sets(g).iter().map(|s| s.len()).collect();
        let lo = |x: &[usize]| x.iter().copied().min().unwrap_or(0);
        let hi = |x: &[usize]| x.iter().copied().max().unwrap_or(0);
        let all: Vec<usize> = vs.iter().chain(&es).copied().collect();
        Self { v_s: lo(&vs), v_l: hi(&vs), e_s: lo(&es), e_l: hi(&es), t_s: lo(&all), t_l: hi(&all) }
    }

    /// `Some(α)` when every vertex set has size α.
    pub fn vertex_uniform(&self) -> Option<usize> {
        (self.v_s == self.v_l).then_some(self.v_s)
    }

    pub fn edge_uniform(&self) -> Option<usize> {
        (self.e_s == self.e_l).then_some(self.e_s)
    }

    pub fn total_uniform(&self) -> Option<usize> {
        (self.t_s == self.t_l).then_some(self.t_s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub report: Report,
    pub uniformity: Uniformity,
}

impl ClassVerdict {
    pub fn holds(&self) -> bool {
        self.report.holds()
    }
}

fn first_dup<T: Ord + Clone>(items: &[T]) -> Option<(usize, usize)> {
    let mut seen: BTreeMap<&T, usize> = BTreeMap::new();
    for (i, x) in items.iter().enumerate() {
        if let Some(&j) = seen.get(x) {
            return Some((j, i));
        }
        seen.insert(x, i);
    }
    None
}

/// Evaluates one condition, returning the first violation.
fn condition(g: &Graph, sc: &SetColoring, r: Option<&ConstraintSet>, c: Condition) -> Result<Option<String>> {
    use Condition::*;
    let edges = g.edges();
    let es = sc.edge_sets(g);
    let f = &sc.vertex;
    Ok(match c {
        VertexSets => f.iter().position(|s| s.is_empty()).map(|v| format!("vertex {v} has an empty set")),
        EdgeSets => match &sc.edge {
            None => Some("no edge sets stored".into()),
            Some(e) => e.iter().position(|s| s.is_empty()).map(|i| format!("edge {:?} has an empty set", edges[i])),
        },
        TotalSets => condition(g, sc, r, VertexSets)?.or(condition(g, sc, r, EdgeSets)?),
        AdjacentVertexDistinct => {
            edges.iter().find(|&&(u, v)| f[u] == f[v]).map(|&(u, v)| format!("adjacent {u},{v} share {}", show(&f[u])))
        }
        AdjacentEdgeDistinct => adjacent_edge_pairs(g)
            .into_iter()
            .find(|&(a, b)| es[a] == es[b])
            .map(|(a, b)| format!("adjacent edges {:?},{:?} share {}", edges[a], edges[b], show(&es[a]))),
        VertexDistinct => first_dup(f).map(|(x, y)| format!("vertices {x},{y} share {}", show(&f[x]))),
        EdgeDistinct | InducedEdgeDistinct => {
            first_dup(&es).map(|(a, b)| format!("edges {:?},{:?} share {}", edges[a], edges[b], show(&es[a])))
        }
        EdgeInduced => {
            let r = r.ok_or_else(|| Error::InvalidInput("condition h needs a constraint set".into()))?;
            let mut bad = None;
            'outer: for (i, &(u, v)) in edges.iter().enumerate() {
                if es[i].is_empty() {
                    bad = Some(format!("edge {:?} has an empty set", (u, v)));
                    break;
                }
                for &c in &es[i] {
                    if !r.items().iter().any(|k| k.generates(c, &f[u], &f[v])) {
                        bad = Some(format!("{c} on edge {:?} is not generated by any constraint", (u, v)));
                        break 'outer;
                    }
                }
            }
            bad
        }
    })
}

/// Evaluates the class's conditions literally and reports the uniformity
/// constants. `r` is needed only when the edge-induced condition is selected.
pub fn verify_class(g: &Graph, sc: &SetColoring, flags: &ClassFlags, r: Option<&ConstraintSet>) -> Result<ClassVerdict> {
    sc.check_shape(g)?;
    let mut report = Report::new();
    for &c in &flags.require {
        report.check(format!("{}:{:?}", c.letter(), c), condition(g, sc, r, c)?);
    }
    if !flags.forbid.is_empty() {
        let mut all = true;
        for &c in &flags.forbid {
            all &= condition(g, sc, r, c)?.is_none();
        }
        let letters: String = flags.forbid.iter().map(|c| c.letter()).collect();
        report.check(format!("not-all:{letters}"), all.then(|| format!("conditions {letters} all hold")));
    }
    let uniformity = Uniformity::of(g, sc);
    if let Some(u) = flags.uniform {
        let (name, got, want) = match u {
            Uniform::Vertex { size } => ("vertex-uniform", uniformity.vertex_uniform(), size),
            Uniform::Edge { size } => ("edge-uniform", uniformity.edge_uniform(), size),
            Uniform::Total { size } => ("total-uniform", uniformity.total_uniform(), size),
        };
        report.check(name, (got != Some(want)).then(|| format!("sizes are not all {want}")));
    }
    Ok(ClassVerdict { report, uniformity })
}

// ---------------------------------------------------------------------------
// Intersected graphs

/// Outcome of [`verify_intersected`]. `report` covers the edge conditions;
/// `missing` lists non-adjacent vertex pairs whose sets still intersect, so an
/// empty list upgrades "subgraph of the intersected-graph" to "the intersected-graph".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectedVerdict {
    pub report: Report,
    pub is_intersected_graph: bool,
    pub missing: Vec<Edge>,
}

impl IntersectedVerdict {
    pub fn holds(&self) -> bool {
        self.report.holds()
    }
}

/// Checks c0 on every edge, one witness per edge for each triple constraint,
/// and whether every intersecting pair of vertex sets is an edge.
pub fn verify_intersected(g: &Graph, sc: &SetColoring, r: &ConstraintSet) -> Result<IntersectedVerdict> {
    sc.check_shape(g)?;
    let f = &sc.vertex;
    let edges = g.edges();
    let es = sc.edge_sets(g);
    let mut report = Report::new();
    report.check("vertex-sets", condition(g, sc, None, Condition::VertexSets)?);
    report.check("proper", condition(g, sc, None, Condition::AdjacentVertexDistinct)?);
    report.check(
        "c0",
        edges.iter().enumerate().find_map(|(i, &(u, v))| {
            let common = &f[u] & &f[v];
            if common.is_empty() {
                Some(format!("F({u}) ∩ F({v}) is empty"))
            } else if !common.is_subset(&es[i]) {
                Some(format!("edge ({u},{v}) set {} misses {}", show(&es[i]), show(&common)))
            } else {
                None
            }
        }),
    );
    for k in r.items().iter().filter(|k| **k != Constraint::IntersectionC0) {
        report.check(
            format!("witness:{}", k.name()),
            edges
                .iter()
                .enumerate()
                .find(|&(i, &(u, v))| k.witness(&f[u], &es[i], &f[v]).is_none())
                .map(|(_, e)| format!("edge {e:?} has no witness")),
        );
    }
    let mut missing = vec![];
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) && f[u] != f[v] && !f[u].is_disjoint(&f[v]) {
                missing.push((u, v));
            }
        }
    }
    Ok(IntersectedVerdict { is_intersected_graph: missing.is_empty(), report, missing })
}

/// Makes every edge set contain the intersection of its ends.
fn close_c0(g: &Graph, sc: &mut SetColoring) {
    let mut es = sc.edge_sets(g);
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        es[i].extend(&sc.vertex[u] & &sc.vertex[v]);
    }
    sc.edge = Some(es);
}

// ---------------------------------------------------------------------------
// Intersection total set-labelings

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntersectionKind {
    Graceful,
    OddGraceful,
    Rainbow,
}

impl IntersectionKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "graceful" | "graceful-intersection" => Ok(Self::Graceful),
            "odd-graceful" | "odd-graceful-intersection" => Ok(Self::OddGraceful),
            "rainbow" => Ok(Self::Rainbow),
            _ => invalid(format!("unknown intersection kind {s:?}")),
        }
    }
}

/// Outcome of [`verify_intersection_total`]. `representatives[i]` is the value
/// chosen for edge `i` (graceful kinds only); `unmatched` lists target values no
/// edge could take.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionVerdict {
    pub report: Report,
    pub representatives: Option<Vec<u32>>,
    pub unmatched: Vec<u32>,
}

impl IntersectionVerdict {
    pub fn holds(&self) -> bool {
        self.report.holds()
    }
}

fn interval(lo: u32, hi: u32) -> Set {
    (lo..=hi).collect()
}

/// Checks an intersection total set-labeling. Edge sets are the stored ones, or
/// the intersections of their ends. The graceful kinds pick one representative
/// per edge so that the representatives are exactly `[1,q]` (odd: the odd
/// numbers of `[1,2q-1]`), returning the lexicographically smallest choice.
pub fn verify_intersection_total(g: &Graph, sc: &SetColoring, kind: IntersectionKind) -> Result<IntersectionVerdict> {
    sc.check_shape(g)?;
    let q = g.size() as u32;
    let edges = g.edges();
    let es = sc.edge_sets(g);
    let f = &sc.vertex;
    let mut report = Report::new();
    report.check(
        "edge-induced",
        edges
            .iter()
            .enumerate()
            .find(|&(i, &(u, v))| es[i] != &f[u] & &f[v])
            .map(|(i, e)| format!("edge {e:?} set {} is not the intersection of its ends", show(&es[i]))),
    );
    if kind == IntersectionKind::Rainbow {
        let seq: BTreeSet<Set> = (1..=q).map(|k| interval(1, k)).collect();
        report.check(
            "rainbow-vertices",
            f.iter().position(|s| !seq.contains(s)).map(|v| format!("vertex {v} set {} is no [1,k]", show(&f[v]))),
        );
        let got: BTreeSet<Set> = es.iter().cloned().collect();
        report.check(
            "rainbow-edges",
            (got != seq || got.len() != es.len()).then(|| "edge sets are not exactly [1,1], ..., [1,q]".to_string()),
        );
        return Ok(IntersectionVerdict { report, representatives: None, unmatched: vec![] });
    }
    let (top, targets): (u32, Vec<u32>) = match kind {
        IntersectionKind::Graceful => (q, (1..=q).collect()),
        _ => ((2 * q).saturating_sub(1), (0..q).map(|i| 2 * i + 1).collect()),
    };
    report.check(
        "vertex-range",
        f.iter()
            .position(|s| s.iter().any(|&x| x < 1 || x > top))
            .map(|v| format!("vertex {v} set {} leaves [1,{top}]", show(&f[v]))),
    );
    let slot: BTreeMap<u32, usize> = targets.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let adj: Vec<Vec<usize>> = es.iter().map(|s| s.iter().filter_map(|x| slot.get(x).copied()).collect()).collect();
    let reps = matching::lex_smallest_perfect(&adj, targets.len());
    let unmatched = match &reps {
        Some(_) => vec![],
        None => {
            let m = matching::max_matching(&adj, targets.len());
            let used: BTreeSet<usize> = m.iter().flatten().copied().collect();
            (0..targets.len()).filter(|r| !used.contains(r)).map(|r| targets[r]).collect()
        }
    };
    report.check(
        "representatives",
        reps.is_none().then(|| format!("no distinct representatives; unmatched values {unmatched:?}")),
    );
    let representatives = reps.map(|r| r.into_iter().map(|i| targets[i]).collect());
    Ok(IntersectionVerdict { report, representatives, unmatched })
}

/// `F(x)` = labels of the edges at `x`, `F(uv) = {label(uv)}`.
pub fn edge_label_coloring(g: &Graph, labels: &[u32]) -> Result<SetColoring> {
    if labels.len() != g.size() {
        return invalid(format!("{} labels for {} edges", labels.len(), g.size()));
    }
    let mut vertex = vec![Set::new(); g.order()];
    for (&(u, v), &c) in g.edges().iter().zip(labels) {
        vertex[u].insert(c);
        vertex[v].insert(c);
    }
    Ok(SetColoring::total(vertex, labels.iter().map(|&c| Set::from([c])).collect()))
}

/// Edge colors of a gracefully total coloring (`d = 1`) or its odd form (`d = 2`).
fn tree_edge_colors(t: &Graph, d: i64) -> Result<Vec<u32>> {
    tree_kd_total(t, 1, d)?.edge_values(t).into_iter().map(to_u32).collect()
}

/// Builds an intersection total set-labeling of a tree: the graceful kinds use
/// the edge colors of a gracefully total coloring on each vertex's incident
/// edges; the rainbow kind gives the root `[1,q]` and the `i`-th vertex in BFS
/// order `[1, q+1-i]`.
pub fn construct_for_tree(t: &Graph, kind: IntersectionKind) -> Result<SetColoring> {
    if !t.is_tree() {
        return precondition("graph is not a tree");
    }
    if t.size() == 0 {
        return precondition("tree has no edges");
    }
    let sc = match kind {
        IntersectionKind::Graceful => edge_label_coloring(t, &tree_edge_colors(t, 1)?)?,
        IntersectionKind::OddGraceful => edge_label_coloring(t, &tree_edge_colors(t, 2)?)?,
        IntersectionKind::Rainbow => {
            let q = t.size() as u32;
            let (order, _) = t.bfs_tree(0);
            let mut vertex = vec![Set::new(); t.order()];
            for (i, &v) in order.iter().enumerate() {
                vertex[v] = interval(1, if i == 0 { q } else { q + 1 - i as u32 });
            }
            SetColoring::vertices(vertex)
        }
    };
    Ok(sc.with_intersections(t))
}

/// Bipartition classes whose vertex sets are pairwise disjoint and cover the
/// ground set exactly, i.e. perfect hypermatchings of the vertex-set family.
pub fn hypermatching_classes(g: &Graph, sc: &SetColoring) -> Result<Vec<Vec<Vertex>>> {
    sc.check_shape(g)?;
    let side = g.bipartition().ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    let ground = sc.ground();
    let mut out = vec![];
    for s in [false, true] {
        let class: Vec<Vertex> = g.vertices().filter(|&v| side[v] == s).collect();
        let sets: Vec<&Set> = class.iter().map(|&v| &sc.vertex[v]).collect();
        if is_perfect_hypermatching(&sets, &ground) {
            out.push(class);
        }
    }
    Ok(out)
}

/// Pairwise disjoint non-empty sets whose union is `ground`.
pub fn is_perfect_hypermatching(sets: &[&Set], ground: &Set) -> bool {
    let total: usize = sets.iter().map(|s| s.len()).sum();
    let union: Set = sets.iter().flat_map(|s| s.iter().copied()).collect();
    sets.iter().all(|s| !s.is_empty()) && total == union.len() && &union == ground
}

// ---------------------------------------------------------------------------
// VSET and PSCS

/// The centre of a tree, the smaller id when there are two.
fn tree_root(t: &Graph) -> Vertex {
    t.centers().into_iter().min().unwrap_or(0)
}

fn round_bound(t: &Graph) -> usize {
    (t.diameter().unwrap_or(0) / 2).max(1)
}

/// `rounds` passes of `F(v) <- F(v) ∪ F(parent)` towards the centre, edges
/// colored by intersections.
fn vset_rounds(t: &Graph, seed: Vec<Set>, rounds: usize) -> SetColoring {
    let (_, parent) = t.bfs_tree(tree_root(t));
    let mut cur = seed;
    for _ in 0..rounds {
        cur = t
            .vertices()
            .map(|v| match parent[v] {
                Some(p) => &cur[v] | &cur[p],
                None => cur[v].clone(),
            })
            .collect();
    }
    SetColoring::vertices(cur).with_intersections(t)
}

fn distinct_edge_colors(g: &Graph, f: &Labeling) -> Result<Vec<u32>> {
    let ev: Vec<u32> = f.edge_values(g).into_iter().map(to_u32).collect::<Result<_>>()?;
    if let Some((a, b)) = first_dup(&ev) {
        let e = g.edges();
        return precondition(format!("edges {:?} and {:?} share color {}", e[a], e[b], ev[a]));
    }
    Ok(ev)
}

fn vertex_colors(g: &Graph, f: &Labeling, injective: bool) -> Result<Vec<u32>> {
    if f.vertex.len() != g.order() {
        return invalid(format!("{} vertex labels for {} vertices", f.vertex.len(), g.order()));
    }
    let fv: Vec<u32> = f.vertex.iter().map(|&x| to_u32(x)).collect::<Result<_>>()?;
    if injective {
        if let Some((a, b)) = first_dup(&fv) {
            return precondition(format!("vertices {a} and {b} share label {}", fv[a]));
        }
    }
    Ok(fv)
}

/// The VSET-coloring of a tree: peeling leaves towards the centre, each vertex
/// gets `{f(v), f(next vertex inwards)}`, the centre gets `{f(centre)}`, and
/// every edge the intersection of its ends.
pub fn vset_coloring(t: &Graph, f: &Labeling) -> Result<SetColoring> {
    if !t.is_tree() {
        return precondition("graph is not a tree");
    }
    let fv = vertex_colors(t, f, true)?;
    Ok(vset_rounds(t, fv.iter().map(|&x| Set::from([x])).collect(), 1))
}

/// A graph colored on a spanning tree of split copies, plus where each copy came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitTree {
    pub tree: Graph,
    pub coloring: SetColoring,
    /// `origin[x]` is the vertex of the colored graph that copy `x` merges into.
    pub origin: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PscsOutput {
    pub graph: Graph,
    pub coloring: SetColoring,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitTree>,
}

/// Produces a set-coloring from a labeled graph.
///
/// * `1`: tree with injective vertex and edge colors; `rounds` VSET passes.
/// * `2`: as 1 but starting from the incident edge colors; `rounds` may be 0.
/// * `3`: connected graph with a cycle and distinct edge colors; split into a
///   tree on `q+1` vertices, VSET there, then merge the copies back by union.
///
/// `rounds` may not exceed half the diameter of the tree worked on (at least 1).
pub fn pscs(g: &Graph, f: &Labeling, variant: u8, rounds: usize) -> Result<PscsOutput> {
    let check_rounds = |t: &Graph, lo: usize| -> Result<()> {
        let hi = round_bound(t);
        if rounds < lo || rounds > hi {
            return invalid(format!("rounds must lie in [{lo},{hi}], got {rounds}"));
        }
        Ok(())
    };
    match variant {
        1 | 2 => {
            if !g.is_tree() {
                return precondition("graph is not a tree");
            }
            let fv = vertex_colors(g, f, true)?;
            let ev = distinct_edge_colors(g, f)?;
            check_rounds(g, if variant == 1 { 1 } else { 0 })?;
            let seed = if variant == 1 {
                fv.iter().map(|&x| Set::from([x])).collect()
            } else {
                edge_label_coloring(g, &ev)?.vertex
            };
            Ok(PscsOutput { graph: g.clone(), coloring: vset_rounds(g, seed, rounds), split: None })
        }
        3 => {
            if !g.is_connected() || g.is_tree() {
                return precondition("graph must be connected and contain a cycle");
            }
            let fv = vertex_colors(g, f, false)?;
            let ev = distinct_edge_colors(g, f)?;
            let (t, origin, tree_edge_of) = split_to_tree(g);
            check_rounds(&t, 1)?;
            let mut tc = vset_rounds(&t, origin.iter().map(|&o| Set::from([fv[o]])).collect(), rounds);
            // Values of [min, max] that no vertex set holds go to the root.
            let all = fv.iter().chain(&ev);
            let (lo, hi) = (*all.clone().min().unwrap(), *all.max().unwrap());
            let missing: Set = interval(lo, hi).difference(&tc.ground()).copied().collect();
            tc.vertex[tree_root(&t)].extend(missing);
            let idx = edge_index(g);
            let tree_edges = t.edges();
            let es = tree_edges
                .iter()
                .map(|&(a, b)| {
                    let mut s = &tc.vertex[a] & &tc.vertex[b];
                    s.insert(ev[idx[&tree_edge_of[&(a, b)]]]);
                    s
                })
                .collect();
            tc.edge = Some(es);
            let (h, mut sc) = quotient(&t, &tc, &origin, g.order())?;
            debug_assert_eq!(h.edges(), g.edges());
            close_c0(g, &mut sc);
            Ok(PscsOutput { graph: g.clone(), coloring: sc, split: Some(SplitTree { tree: t, coloring: tc, origin }) })
        }
        4 => invalid("variant 4 takes a graph base, use pscs_base"),
        _ => invalid(format!("unknown variant {variant}")),
    }
}

/// Opens every non-tree edge of a BFS spanning tree by splitting off a copy of
/// its smaller end. Returns the tree, copy -> original vertex, and tree edge ->
/// original edge.
fn split_to_tree(g: &Graph) -> (Graph, Vec<Vertex>, BTreeMap<Edge, Edge>) {
    let (_, parent) = g.bfs_tree(0);
    let mut t = Graph::new(g.order());
    let mut origin: Vec<Vertex> = g.vertices().collect();
    let mut map = BTreeMap::new();
    for (u, v) in g.edges() {
        if parent[u] == Some(v) || parent[v] == Some(u) {
            t.add_edge(u, v).expect("tree edge");
            map.insert((u, v), (u, v));
        } else {
            let c = t.add_vertex();
            origin.push(u);
            t.add_edge(v, c).expect("fresh copy");
            map.insert(edge(v, c), (u, v));
        }
    }
    (t, origin, map)
}

/// Merges vertices by `class` (old -> new id): vertex sets and the sets of
/// edges that land on the same pair are united.
fn quotient(g: &Graph, sc: &SetColoring, class: &[usize], n: usize) -> Result<(Graph, SetColoring)> {
    let mut h = Graph::new(n);
    let mut vertex = vec![Set::new(); n];
    for v in g.vertices() {
        vertex[class[v]].extend(&sc.vertex[v]);
    }
    let mut emap: BTreeMap<Edge, Set> = BTreeMap::new();
    for ((u, v), s) in sc.edge_map(g) {
        let (a, b) = (class[u], class[v]);
        if a == b {
            return precondition(format!("edge ({u},{v}) would become a loop"));
        }
        if !h.has_edge(a, b) {
            h.add_edge(a, b)?;
        }
        emap.entry(edge(a, b)).or_default().extend(s);
    }
    let es = h.edges().iter().map(|e| emap[e].clone()).collect();
    Ok((h, SetColoring::total(vertex, es)))
}

/// Variant 4: each base graph (an edge-odd-graceful base) is colored by
/// variant 1 (trees) or 3 (otherwise), then equally colored vertices are
/// coincided and the sets merged by union. Vertex `c` of the result is color `c`.
pub fn pscs_base(base: &[(Graph, Labeling)], rounds: usize) -> Result<PscsOutput> {
    if base.len() < 2 {
        return invalid("a base needs at least two graphs");
    }
    let r = verify_edge_odd_graceful_base(base)?;
    if !r.holds() {
        return precondition(format!("not an edge-odd-graceful base:\n{r}"));
    }
    if rounds < 1 {
        return invalid("rounds must be at least 1");
    }
    let mut union = Graph::new(0);
    let mut coloring = SetColoring::total(vec![], vec![]);
    let mut origin = vec![];
    for (g, f) in base {
        let part = if g.is_tree() {
            pscs(g, f, 1, rounds.min(round_bound(g)))?
        } else {
            let (t, _, _) = split_to_tree(g);
            pscs(g, f, 3, rounds.min(round_bound(&t)))?
        };
        let mut emap = coloring.edge_map(&union);
        let shift = union.order();
        for ((u, v), s) in part.coloring.edge_map(g) {
            emap.insert((u + shift, v + shift), s);
        }
        union = union.disjoint_union(g);
        coloring.vertex.extend(part.coloring.vertex);
        coloring.edge = Some(union.edges().iter().map(|e| emap[e].clone()).collect());
        origin.extend(f.vertex.iter().map(|&x| x as usize));
    }
    let n = origin.iter().max().map_or(0, |m| m + 1);
    let (h, mut sc) = quotient(&union, &coloring, &origin, n)?;
    close_c0(&h, &mut sc);
    Ok(PscsOutput { graph: h, coloring: sc, split: Some(SplitTree { tree: union, coloring, origin }) })
}

// ---------------------------------------------------------------------------
// Multiple intersections

/// The seven intersected-type classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Cgraph {
    /// `F(u) ∩ F(v) ⊆ F(uv)`, non-empty.
    Subintersected,
    /// As above with `|F(u) ∩ F(v)| >= r`.
    RankSubintersected { r: usize },
    /// Subintersected and the edge set meets both ends.
    IntersectedEdgeIntersected,
    RankIntersectedEdgeIntersected { r: usize },
    /// The edge set meets both ends.
    EdgeIntersected,
    /// Edge-intersected and adjacent edge sets intersect.
    AdjacentEdgeIntersected,
    /// Edge-intersected and adjacent edge sets are disjoint.
    IndividualEdgeIntersected,
}

impl Cgraph {
    /// Class by number 1..=7; `r` is used by 2 and 4.
    pub fn from_number(n: u8, r: usize) -> Result<Self> {
        Ok(match n {
            1 => Self::Subintersected,
            2 => Self::RankSubintersected { r },
            3 => Self::IntersectedEdgeIntersected,
            4 => Self::RankIntersectedEdgeIntersected { r },
            5 => Self::EdgeIntersected,
            6 => Self::AdjacentEdgeIntersected,
            7 => Self::IndividualEdgeIntersected,
            _ => return invalid(format!("no class {n}, expected 1..=7")),
        })
    }
}

/// Outcome of [`verify_chyper`]: the class conditions decide `holds`; the
/// standing assumptions (distinct vertex sets, distinct adjacent edge sets) are
/// reported on their own because several constructions deliberately break them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChyperVerdict {
    pub report: Report,
    pub preamble: Report,
}

impl ChyperVerdict {
    pub fn holds(&self) -> bool {
        self.report.holds()
    }
}

pub fn verify_chyper(g: &Graph, sc: &SetColoring, kind: Cgraph) -> Result<ChyperVerdict> {
    sc.check_shape(g)?;
    let f = &sc.vertex;
    let edges = g.edges();
    let es = sc.edge_sets(g);
    let mut preamble = Report::new();
    preamble.check("distinct-vertex-sets", condition(g, sc, None, Condition::VertexDistinct)?);
    preamble.check("adjacent-edges-distinct", condition(g, sc, None, Condition::AdjacentEdgeDistinct)?);
    let join = |r: usize| {
        edges.iter().enumerate().find_map(|(i, &(u, v))| {
            let common = &f[u] & &f[v];
            if common.len() < r.max(1) {
                Some(format!("|F({u}) ∩ F({v})| = {} < {}", common.len(), r.max(1)))
            } else if !common.is_subset(&es[i]) {
                Some(format!("edge ({u},{v}) misses {}", show(&common)))
            } else {
                None
            }
        })
    };
    let meets = || {
        edges.iter().enumerate().find_map(|(i, &(u, v))| {
            (es[i].is_disjoint(&f[u]) || es[i].is_disjoint(&f[v])).then(|| format!("edge ({u},{v}) misses an end"))
        })
    };
    let pairs = adjacent_edge_pairs(g);
    let adjacent = |want_meet: bool| {
        pairs.iter().find_map(|&(a, b)| {
            (es[a].is_disjoint(&es[b]) == want_meet)
                .then(|| format!("adjacent edges {:?},{:?} {}", edges[a], edges[b], if want_meet { "are disjoint" } else { "meet" }))
        })
    };
    let mut report = Report::new();
    match kind {
        Cgraph::Subintersected => report.check("join-edge", join(1)),
        Cgraph::RankSubintersected { r } => report.check("join-edge-rank", join(r)),
        Cgraph::IntersectedEdgeIntersected => {
            report.check("join-edge", join(1));
            report.check("edge-meets-ends", meets());
        }
        Cgraph::RankIntersectedEdgeIntersected { r } => {
            report.check("join-edge-rank", join(r));
            report.check("edge-meets-ends", meets());
        }
        Cgraph::EdgeIntersected => report.check("edge-meets-ends", meets()),
        Cgraph::AdjacentEdgeIntersected => {
            report.check("edge-meets-ends", meets());
            report.check("adjacent-edges-meet", adjacent(true));
        }
        Cgraph::IndividualEdgeIntersected => {
            report.check("edge-meets-ends", meets());
            report.check("adjacent-edges-disjoint", adjacent(false));
        }
    }
    Ok(ChyperVerdict { report, preamble })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjacentStrategy {
    LeafPeeling,
    LongestPath,
}

/// An adjacent edge-intersected total set-labeling of a tree. Vertices keep the
/// incident-edge sets of a graceful total coloring; edges are widened so that
/// adjacent edges always share a color.
///
/// Leaf peeling: rooted at the centre, the edges from `v` to its children all
/// get the colors of `v`'s subtree plus the edge above `v`. Longest path: the
/// leaf edges at the second vertex of a longest path get their own color plus
/// that of the edge leading inwards; the final star gets the union of its colors.
pub fn construct_adjacent_edge_intersected(t: &Graph, strategy: AdjacentStrategy) -> Result<SetColoring> {
    if !t.is_tree() {
        return precondition("graph is not a tree");
    }
    if t.size() == 0 {
        return precondition("tree has no edges");
    }
    let labels = tree_edge_colors(t, 1)?;
    let base = edge_label_coloring(t, &labels)?;
    let idx = edge_index(t);
    let lab = |u: Vertex, v: Vertex| labels[idx[&edge(u, v)]];
    let mut es: Vec<Set> = vec![Set::new(); t.size()];
    match strategy {
        AdjacentStrategy::LeafPeeling => {
            let (order, parent) = t.bfs_tree(tree_root(t));
            let mut up: Vec<Set> = vec![Set::new(); t.order()];
            for &v in order.iter().rev() {
                if let Some(p) = parent[v] {
                    up[v].insert(lab(v, p));
                    let s = up[v].clone();
                    up[p].extend(s);
                }
            }
            for &v in &order {
                if let Some(p) = parent[v] {
                    es[idx[&edge(v, p)]] = up[p].clone();
                }
            }
        }
        AdjacentStrategy::LongestPath => {
            let mut alive = vec![true; t.order()];
            loop {
                let path = longest_path(t, &alive);
                let n = path.len();
                if n <= 3 {
                    break;
                }
                for (x2, x3) in [(path[1], path[2]), (path[n - 2], path[n - 3])] {
                    let leaves: Vec<Vertex> = t.neighbors(x2).iter().copied().filter(|&y| alive[y] && y != x3).collect();
                    for y in leaves {
                        es[idx[&edge(x2, y)]] = Set::from([lab(x2, y), lab(x2, x3)]);
                        alive[y] = false;
                    }
                }
            }
            let rest: Vec<usize> =
                t.edges().iter().filter(|&&(u, v)| alive[u] && alive[v]).map(|e| idx[e]).collect();
            let star: Set = rest.iter().map(|&i| labels[i]).collect();
            for i in rest {
                es[i] = star.clone();
            }
        }
    }
    Ok(SetColoring::total(base.vertex, es))
}

/// A longest path among the alive vertices of a tree (double BFS, ties to the
/// smaller id).
fn longest_path(t: &Graph, alive: &[bool]) -> Vec<Vertex> {
    let bfs = |s: Vertex| {
        let mut dist = vec![usize::MAX; t.order()];
        let mut parent = vec![None; t.order()];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in t.neighbors(u) {
                if alive[w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        let far = (0..t.order()).filter(|&v| dist[v] != usize::MAX).max_by_key(|&v| (dist[v], std::cmp::Reverse(v))).unwrap();
        (far, parent)
    };
    let start = alive.iter().position(|&a| a).expect("non-empty tree");
    let (a, _) = bfs(start);
    let (b, parent) = bfs(a);
    let mut path = vec![b];
    while let Some(p) = parent[*path.last().unwrap()] {
        path.push(p);
    }
    path
}

// ---------------------------------------------------------------------------
// Representatives and edge colorings

/// Result of [`sdr`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Sdr {
    /// One distinct element per set, lexicographically smallest.
    Found { representatives: Vec<u32> },
    /// Sets (0-based indices) whose union is smaller than their number.
    Violation { members: Vec<usize>, union: Set },
}

/// A system of distinct representatives, or a witness that Hall's condition fails.
pub fn sdr(family: &[Set]) -> Sdr {
    let values: Vec<u32> = family.iter().flatten().copied().collect::<Set>().into_iter().collect();
    let slot: BTreeMap<u32, usize> = values.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let adj: Vec<Vec<usize>> = family.iter().map(|s| s.iter().map(|x| slot[x]).collect()).collect();
    match matching::lex_smallest_perfect(&adj, values.len()) {
        Some(r) => Sdr::Found { representatives: r.into_iter().map(|i| values[i]).collect() },
        None => {
            let members = matching::hall_violator(&adj, values.len()).expect("no perfect matching");
            let union = members.iter().flat_map(|&i| family[i].iter().copied()).collect();
            Sdr::Violation { members, union }
        }
    }
}

/// Graph on the edges of `g` (in `g.edges()` order) joining two edges when they
/// share an end or an edge of `g` joins an end of one to an end of the other.
/// Adjacent 1-common edge-colorings are exactly the proper colorings of it.
pub fn conflict_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut h = Graph::new(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            let near = [a, b].iter().any(|&x| [c, d].iter().any(|&y| x == y || g.has_edge(x, y)));
            if near {
                h.add_edge(i, j).expect("fresh pair");
            }
        }
    }
    h
}

/// Known values: `n(n-1)/2` for complete graphs, `max deg(u)+deg(v)-1` for trees.
pub fn chi_set_prime_closed_form(g: &Graph) -> Option<usize> {
    let n = g.order();
    if g.size() == n * n.saturating_sub(1) / 2 {
        return Some(g.size());
    }
    if g.is_tree() {
        return Some(g.edges().iter().map(|&(u, v)| g.degree(u) + g.degree(v) - 1).max().unwrap_or(0));
    }
    None
}

/// Exact minimum of the largest color over adjacent 1-common edge-colorings,
/// with an optimal coloring (colors from 1, aligned with `g.edges()`).
pub fn chi_set_prime_exact(g: &Graph) -> Result<(usize, Vec<u32>)> {
    cap("adjacent 1-common edges", CHI_CAP, g.size())?;
    let h = conflict_graph(g);
    let col = min_coloring(&h);
    let k = col.iter().map(|&c| c + 1).max().unwrap_or(0);
    Ok((k, col.into_iter().map(|c| c as u32 + 1).collect()))
}

/// Closed form when one applies, otherwise the exact search.
pub fn chi_set_prime(g: &Graph) -> Result<usize> {
    match chi_set_prime_closed_form(g) {
        Some(k) => Ok(k),
        None => Ok(chi_set_prime_exact(g)?.0),
    }
}

/// Optimal proper vertex coloring (colors from 0) by backtracking with the
/// usual symmetry break.
fn min_coloring(h: &Graph) -> Vec<usize> {
    fn go(h: &Graph, i: usize, k: usize, used: usize, col: &mut [usize]) -> bool {
        if i == h.order() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if h.neighbors(i).range(..i).all(|&j| col[j] != c) {
                col[i] = c;
                if go(h, i + 1, k, used.max(c + 1), col) {
                    return true;
                }
            }
        }
        false
    }
    let mut col = vec![0; h.order()];
    for k in 1..=h.order() {
        if go(h, 0, k, 0, &mut col) {
            break;
        }
    }
    col
}

/// Checks an adjacent 1-common edge-coloring: proper, the color sets at the
/// ends of each edge share exactly one color, and those shared colors differ on
/// adjacent edges.
pub fn verify_adjacent_1_common(g: &Graph, colors: &[u32]) -> Result<Report> {
    if colors.len() != g.size() {
        return invalid(format!("{} colors for {} edges", colors.len(), g.size()));
    }
    let edges = g.edges();
    let idx = edge_index(g);
    let at: Vec<Set> = g.vertices().map(|u| g.neighbors(u).iter().map(|&v| colors[idx[&edge(u, v)]]).collect()).collect();
    let pairs = adjacent_edge_pairs(g);
    let mut r = Report::new();
    r.check(
        "proper",
        pairs
            .iter()
            .find(|&&(a, b)| colors[a] == colors[b])
            .map(|&(a, b)| format!("edges {:?},{:?} share color {}", edges[a], edges[b], colors[a])),
    );
    r.check(
        "one-common",
        edges.iter().find_map(|&(u, v)| {
            let n = at[u].intersection(&at[v]).count();
            (n != 1).then(|| format!("ends of ({u},{v}) share {n} colors"))
        }),
    );
    let common: Vec<Set> = edges.iter().map(|&(u, v)| &at[u] & &at[v]).collect();
    r.check(
        "adjacent-distinct",
        pairs
            .iter()
            .find(|&&(a, b)| common[a] == common[b])
            .map(|&(a, b)| format!("edges {:?},{:?} have the same common colors", edges[a], edges[b])),
    );
    Ok(r)
}

/// Colors each edge by the single element of `F(u) ∩ F(v)`, when every vertex
/// set is at least as large as the degree, every intersection is a singleton
/// and adjacent edges get different intersections.
pub fn derive_edge_coloring(g: &Graph, sc: &SetColoring) -> Result<Vec<u32>> {
    sc.check_shape(g)?;
    let f = &sc.vertex;
    if let Some(v) = g.vertices().find(|&v| f[v].len() < g.degree(v)) {
        return precondition(format!("|F({v})| = {} < deg = {}", f[v].len(), g.degree(v)));
    }
    let common: Vec<Set> = g.edges().iter().map(|&(u, v)| &f[u] & &f[v]).collect();
    if let Some(i) = common.iter().position(|s| s.len() != 1) {
        return precondition(format!("edge {:?} ends share {} elements", g.edges()[i], common[i].len()));
    }
    if let Some((a, b)) = adjacent_edge_pairs(g).into_iter().find(|&(a, b)| common[a] == common[b]) {
        let e = g.edges();
        return precondition(format!("adjacent edges {:?},{:?} share their intersection", e[a], e[b]));
    }
    Ok(common.iter().map(|s| *s.iter().next().unwrap()).collect())
}

// ---------------------------------------------------------------------------
// Homomorphisms, pan-operations, families

/// Whether `phi` carries the coloring of `g` onto that of `h` by union: each
/// vertex set of `h` is the union of the sets mapped onto it, and, when both
/// colorings store edge sets, likewise for edges.
pub fn set_colored_homomorphism(g: &Graph, fg: &SetColoring, h: &Graph, fh: &SetColoring, phi: &[Vertex]) -> Result<Report> {
    fg.check_shape(g)?;
    fh.check_shape(h)?;
    if !check_homomorphism(g, h, phi)?.is_hom {
        return precondition("the map is not a graph homomorphism");
    }
    let mut vu = vec![Set::new(); h.order()];
    for v in g.vertices() {
        vu[phi[v]].extend(&fg.vertex[v]);
    }
    let mut r = Report::new();
    r.check(
        "vertex-union",
        h.vertices()
            .find(|&w| vu[w] != fh.vertex[w])
            .map(|w| format!("F({w}) = {} but the preimages unite to {}", show(&fh.vertex[w]), show(&vu[w]))),
    );
    if let (Some(_), Some(_)) = (&fg.edge, &fh.edge) {
        let mut eu: BTreeMap<Edge, Set> = h.edges().into_iter().map(|e| (e, Set::new())).collect();
        for ((u, v), s) in fg.edge_map(g) {
            eu.get_mut(&edge(phi[u], phi[v])).expect("homomorphism").extend(s);
        }
        let target = fh.edge_map(h);
        r.check(
            "edge-union",
            eu.iter().find(|(e, s)| target[*e] != **s).map(|(e, s)| {
                format!("edge {e:?} set {} but the preimages unite to {}", show(&target[e]), show(s))
            }),
        );
    }
    Ok(r)
}

/// Set operations for pan-operation graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum SetOp {
    Intersection,
    Union,
    SymmetricDifference,
    /// `{(a + b) mod modulus}`.
    GroupAdd { modulus: u32 },
}

impl SetOp {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.split_once(':') {
            None if s == "intersection" => Self::Intersection,
            None if s == "union" => Self::Union,
            None if s == "symmetric-difference" => Self::SymmetricDifference,
            Some(("group-add", m)) => {
                let modulus: u32 = m.parse().map_err(|_| Error::Parse(format!("bad modulus {m:?}")))?;
                if modulus == 0 {
                    return invalid("modulus must be positive");
                }
                Self::GroupAdd { modulus }
            }
            _ => return invalid(format!("unsupported operation {s:?}")),
        })
    }

    pub fn apply(&self, a: &Set, b: &Set) -> Set {
        match *self {
            Self::Intersection => a & b,
            Self::Union => a | b,
            Self::SymmetricDifference => a ^ b,
            Self::GroupAdd { modulus } => {
                a.iter().flat_map(|&x| b.iter().map(move |&y| ((x as u64 + y as u64) % modulus as u64) as u32)).collect()
            }
        }
    }
}

/// Pan-operation graph conditions: proper vertex sets; each edge set contains
/// the non-empty `F(u) • F(v)`; a witness per edge for some triple constraint of
/// `r` when given; and every pair of distinct vertex sets with non-empty
/// `e • e'` is an edge.
pub fn verify_pan(g: &Graph, sc: &SetColoring, op: SetOp, r: Option<&ConstraintSet>) -> Result<Report> {
    sc.check_shape(g)?;
    let f = &sc.vertex;
    let edges = g.edges();
    let es = match &sc.edge {
        Some(e) => e.clone(),
        None => edges.iter().map(|&(u, v)| op.apply(&f[u], &f[v])).collect(),
    };
    let mut rep = Report::new();
    rep.check("proper", condition(g, sc, None, Condition::AdjacentVertexDistinct)?);
    rep.check(
        "operation-edge",
        edges.iter().enumerate().find_map(|(i, &(u, v))| {
            let x = op.apply(&f[u], &f[v]);
            if x.is_empty() {
                Some(format!("F({u}) • F({v}) is empty"))
            } else if !x.is_subset(&es[i]) {
                Some(format!("edge ({u},{v}) set {} misses {}", show(&es[i]), show(&x)))
            } else {
                None
            }
        }),
    );
    if let Some(r) = r {
        let triples: Vec<&Constraint> = r.items().iter().filter(|k| **k != Constraint::IntersectionC0).collect();
        if !triples.is_empty() {
            rep.check(
                "constraint-witness",
                edges
                    .iter()
                    .enumerate()
                    .find(|&(i, &(u, v))| triples.iter().all(|k| k.witness(&f[u], &es[i], &f[v]).is_none()))
                    .map(|(_, e)| format!("edge {e:?} has no witness")),
            );
        }
    }
    let mut miss = None;
    'outer: for u in g.vertices() {
        for v in u + 1..g.order() {
            if f[u] != f[v] && !g.has_edge(u, v) && !op.apply(&f[u], &f[v]).is_empty() {
                miss = Some(format!("{u},{v} are not adjacent although F({u}) • F({v}) is non-empty"));
                break 'outer;
            }
        }
    }
    rep.check("pairs-adjacent", miss);
    Ok(rep)
}

/// Vertices colored by families of sets (set-set and compound colorings).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyColoring {
    pub vertex: Vec<BTreeSet<Set>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<Vec<BTreeSet<Set>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyMode {
    SetSet,
    Compound,
}

/// Set-set and compound colorings: adjacent families differ and share a member
/// set, stored edge families contain that common part, and for compound
/// colorings every pair of families sharing a member is adjacent.
pub fn verify_family(g: &Graph, fc: &FamilyColoring, mode: FamilyMode) -> Result<Report> {
    if fc.vertex.len() != g.order() {
        return invalid(format!("{} vertex families for {} vertices", fc.vertex.len(), g.order()));
    }
    let edges = g.edges();
    if let Some(e) = &fc.edge {
        if e.len() != edges.len() {
            return invalid(format!("{} edge families for {} edges", e.len(), edges.len()));
        }
    }
    let f = &fc.vertex;
    let mut r = Report::new();
    r.check(
        "non-empty",
        f.iter()
            .position(|s| s.is_empty() || s.iter().any(|x| x.is_empty()))
            .map(|v| format!("vertex {v} has an empty family or member")),
    );
    r.check(
        "proper",
        edges.iter().find(|&&(u, v)| f[u] == f[v]).map(|&(u, v)| format!("adjacent {u},{v} share a family")),
    );
    r.check(
        "common-member",
        edges.iter().enumerate().find_map(|(i, &(u, v))| {
            let common: BTreeSet<Set> = f[u].intersection(&f[v]).cloned().collect();
            if common.is_empty() {
                Some(format!("families at {u},{v} share no set"))
            } else if fc.edge.as_ref().is_some_and(|e| !common.is_subset(&e[i])) {
                Some(format!("edge ({u},{v}) family misses a shared set"))
            } else {
                None
            }
        }),
    );
    if mode == FamilyMode::Compound {
        let mut miss = None;
        'outer: for u in g.vertices() {
            for v in u + 1..g.order() {
                if f[u] != f[v] && !g.has_edge(u, v) && !f[u].is_disjoint(&f[v]) {
                    miss = Some(format!("{u},{v} share a set but are not adjacent"));
                    break 'outer;
                }
            }
        }
        r.check("pairs-adjacent", miss);
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// Splitting and coinciding colored graphs

/// How the two halves of a split vertex are colored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum VscRule {
    /// Both halves keep the whole set.
    Copy,
    /// The kept half gets `first`, the new half the rest; the parts are disjoint.
    Partition { first: Set },
    /// Proper subsets `first` (kept half) and `second` (new half) that overlap.
    Overlap { first: Set, second: Set },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum SetAction {
    /// `w` keeps the neighbors in `keep`, a new vertex takes the others.
    VertexSplit { w: Vertex, keep: BTreeSet<Vertex>, rule: VscRule },
    /// Edge-split `uv`; both copies carry the old sets.
    EdgeSplit { u: Vertex, v: Vertex, u_keep: BTreeSet<Vertex>, v_keep: BTreeSet<Vertex> },
    /// Merge two vertices, uniting their sets.
    VertexCoincide { a: Vertex, b: Vertex },
    /// Merge two edges (and their ends), uniting all sets involved.
    EdgeCoincide { e1: Edge, e2: Edge },
}

/// A transformed colored graph. For splits `map[x]` is the old vertex that new
/// vertex `x` came from; for coincides `map[x]` is the new id of old vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transformed {
    pub graph: Graph,
    pub coloring: SetColoring,
    pub map: Vec<Vertex>,
    /// The intersected-graph conditions re-checked on the result.
    pub verdict: IntersectedVerdict,
}

/// Colors a split graph: vertex sets given, each edge takes the set of the edge
/// it came from.
fn lift(h: &Graph, origin: &[Vertex], vertex: Vec<Set>, g: &Graph, sc: &SetColoring) -> SetColoring {
    let old = sc.edge_map(g);
    let es = h.edges().iter().map(|&(a, b)| old[&edge(origin[a], origin[b])].clone()).collect();
    SetColoring::total(vertex, es)
}

fn finish(graph: Graph, coloring: SetColoring, map: Vec<Vertex>) -> Result<Transformed> {
    let verdict = verify_intersected(&graph, &coloring, &ConstraintSet::c0())?;
    Ok(Transformed { graph, coloring, map, verdict })
}

/// Applies a split or coincide action to a set-colored graph.
pub fn split_coincide_set_colored(g: &Graph, sc: &SetColoring, action: &SetAction) -> Result<Transformed> {
    sc.check_shape(g)?;
    match action {
        SetAction::VertexSplit { w, keep, rule } => {
            let h = split_vertex(g, *w, keep)?;
            let fw = &sc.vertex[*w];
            let (kept, new) = match rule {
                VscRule::Copy => (fw.clone(), fw.clone()),
                VscRule::Partition { first } => {
                    if first.is_empty() || !first.is_subset(fw) || first == fw {
                        return invalid(format!("{} is not a proper non-empty part of {}", show(first), show(fw)));
                    }
                    (first.clone(), fw - first)
                }
                VscRule::Overlap { first, second } => {
                    for s in [first, second] {
                        if !s.is_subset(fw) || s == fw {
                            return invalid(format!("{} is not a proper subset of {}", show(s), show(fw)));
                        }
                    }
                    if first.is_disjoint(second) {
                        return invalid("overlap parts must intersect");
                    }
                    (first.clone(), second.clone())
                }
            };
            let mut origin: Vec<Vertex> = g.vertices().collect();
            origin.push(*w);
            let mut vertex = sc.vertex.clone();
            vertex[*w] = kept;
            vertex.push(new);
            let c = lift(&h, &origin, vertex, g, sc);
            finish(h, c, origin)
        }
        SetAction::EdgeSplit { u, v, u_keep, v_keep } => {
            let h = split_edge(g, *u, *v, u_keep, v_keep)?;
            let mut origin: Vec<Vertex> = g.vertices().collect();
            origin.extend([*u, *v]);
            let vertex = origin.iter().map(|&o| sc.vertex[o].clone()).collect();
            let c = lift(&h, &origin, vertex, g, sc);
            finish(h, c, origin)
        }
        SetAction::VertexCoincide { a, b } => {
            let (h, remap) = coincide_vertices(g, *a, *b)?;
            let (h2, c) = quotient(g, sc, &remap, h.order())?;
            finish(h2, c, remap)
        }
        SetAction::EdgeCoincide { e1, e2 } => {
            let (h, remap) = coincide_edges(g, *e1, *e2)?;
            let (h2, c) = quotient(g, sc, &remap, h.order())?;
            finish(h2, c, remap)
        }
    }
}

/// Composes vertex-disjoint colored graphs by coinciding vertices. Each glue
/// group lists `(part, vertex)` pairs from different parts that become one
/// vertex; edges landing on the same pair are coincided. Sets merge by union.
/// `map[x]` gives the new id of vertex `x` of the disjoint union.
pub fn dc_compose(parts: &[(Graph, SetColoring)], glue: &[Vec<(usize, Vertex)>]) -> Result<Transformed> {
    let mut offset = vec![0];
    let mut union = Graph::new(0);
    let mut vertex = vec![];
    let mut emap = BTreeMap::new();
    for (g, sc) in parts {
        sc.check_shape(g)?;
        let shift = union.order();
        for ((u, v), s) in sc.edge_map(g) {
            emap.insert((u + shift, v + shift), s);
        }
        union = union.disjoint_union(g);
        vertex.extend(sc.vertex.iter().cloned());
        offset.push(union.order());
    }
    let coloring = SetColoring::total(vertex, union.edges().iter().map(|e| emap[e].clone()).collect());
    let n = union.order();
    let mut group_of: Vec<Option<usize>> = vec![None; n];
    for (gi, group) in glue.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &(p, v) in group {
            if p >= parts.len() || v >= parts[p].0.order() {
                return invalid(format!("glue vertex ({p},{v}) out of range"));
            }
            if !seen.insert(p) {
                return precondition(format!("glue group {gi} uses part {p} twice"));
            }
            let x = offset[p] + v;
            if group_of[x].replace(gi).is_some() {
                return precondition(format!("vertex ({p},{v}) is glued twice"));
            }
        }
    }
    // New ids: first occurrence order over the disjoint union.
    let mut class = vec![usize::MAX; n];
    let mut group_id: Vec<Option<usize>> = vec![None; glue.len()];
    let mut next = 0;
    for x in 0..n {
        class[x] = match group_of[x] {
            Some(gi) => *group_id[gi].get_or_insert_with(|| {
                next += 1;
                next - 1
            }),
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let (h, c) = quotient(&union, &coloring, &class, next)?;
    finish(h, c, class)
}

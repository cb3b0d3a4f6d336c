//! Number-valued labelings: verifiers for the graceful family and its magic and
//! harmonious relatives, the `(k,d)` total colorings, and an exact searcher that
//! returns the lexicographically smallest labeling of a kind.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{cap, invalid, precondition, Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::Report;

/// Largest size accepted by [`search_labeling`].
pub const SEARCH_CAP: usize = 20;
/// Node budget of one search; exhausting it is reported as a cap, not as "none".
pub const SEARCH_NODES: usize = 20_000_000;

/// Vertex labels plus optional edge labels aligned with `Graph::edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub vertex: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<Vec<i64>>,
}

impl Labeling {
    pub fn vertices(vertex: Vec<i64>) -> Self {
        Self { vertex, edge: None }
    }

    pub fn total(vertex: Vec<i64>, edge: Vec<i64>) -> Self {
        Self { vertex, edge: Some(edge) }
    }

    /// Edge labels, falling back to `|f(u) - f(v)|` when none are stored.
    pub fn edge_values(&self, g: &Graph) -> Vec<i64> {
        match &self.edge {
            Some(e) => e.clone(),
            None => g.edges().iter().map(|&(u, v)| (self.vertex[u] - self.vertex[v]).abs()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LabelingKind {
    Graceful,
    SetOrderedGraceful,
    StronglyGraceful { matching: Vec<Edge> },
    OddGraceful,
    SetOrderedOddGraceful,
    StronglyOddGraceful { matching: Vec<Edge> },
    GracefullyTotal,
    EdgeMagicTotal { c: i64 },
    Felicitous { eta: i64 },
    EdgeMagicGraceful { k: i64 },
    EdgeOddGraceful,
}

impl LabelingKind {
    /// Parses a kebab-case kind name, pulling the parameter it needs.
    pub fn parse(name: &str, param: Option<i64>, matching: Vec<Edge>) -> Result<Self> {
        let need = |what: &str| param.ok_or_else(|| Error::InvalidInput(format!("kind {name} needs --{what}")));
        Ok(match name {
            "graceful" => Self::Graceful,
            "set-ordered-graceful" => Self::SetOrderedGraceful,
            "strongly-graceful" => Self::StronglyGraceful { matching },
            "odd-graceful" => Self::OddGraceful,
            "set-ordered-odd-graceful" => Self::SetOrderedOddGraceful,
            "strongly-odd-graceful" => Self::StronglyOddGraceful { matching },
            "gracefully-total" => Self::GracefullyTotal,
            "edge-magic-total" => Self::EdgeMagicTotal { c: need("param")? },
            "felicitous" => Self::Felicitous { eta: need("param")? },
            "edge-magic-graceful" => Self::EdgeMagicGraceful { k: need("param")? },
            "edge-odd-graceful" => Self::EdgeOddGraceful,
            _ => return invalid(format!("unknown labeling kind {name}")),
        })
    }

    fn odd(&self) -> bool {
        matches!(self, Self::OddGraceful | Self::SetOrderedOddGraceful | Self::StronglyOddGraceful { .. })
    }

    fn graceful_family(&self) -> bool {
        matches!(
            self,
            Self::Graceful
                | Self::SetOrderedGraceful
                | Self::StronglyGraceful { .. }
                | Self::OddGraceful
                | Self::SetOrderedOddGraceful
                | Self::StronglyOddGraceful { .. }
        )
    }
}

/// `{1, 3, ..., 2q-1}`.
pub fn odd_set(q: usize) -> BTreeSet<i64> {
    (0..q as i64).map(|i| 2 * i + 1).collect()
}

fn range_set(lo: i64, hi: i64) -> BTreeSet<i64> {
    (lo..=hi).collect()
}

fn first_edge<F: Fn(usize, Edge) -> bool>(g: &Graph, bad: F) -> Option<String> {
    g.edges().into_iter().enumerate().find(|&(i, e)| bad(i, e)).map(|(_, (u, v))| format!("edge ({u},{v})"))
}

fn set_diff_detail(got: &[i64], want: &BTreeSet<i64>) -> Option<String> {
    let mut sorted = got.to_vec();
    sorted.sort_unstable();
    let uniq: BTreeSet<i64> = got.iter().copied().collect();
    if uniq.len() == got.len() && &uniq == want {
        None
    } else {
        Some(format!("edge colors {sorted:?} differ from {:?}", want.iter().collect::<Vec<_>>()))
    }
}

/// Which side of every vertex, `false` = X. Errors when the graph is not bipartite.
fn sides(g: &Graph, given: Option<&Vec<bool>>) -> Result<Vec<bool>> {
    match given {
        Some(s) if s.len() == g.order() => {
            if let Some(d) = first_edge(g, |_, (u, v)| s[u] == s[v]) {
                return invalid(format!("declared bipartition is violated by {d}"));
            }
            Ok(s.clone())
        }
        Some(s) => invalid(format!("bipartition has {} entries for {} vertices", s.len(), g.order())),
        None => g.bipartition().ok_or_else(|| Error::Precondition("graph is not bipartite".into())),
    }
}

/// True when `max f(X) < min f(Y)` for either orientation of the bipartition.
fn set_ordered(g: &Graph, f: &[i64]) -> Option<String> {
    let Some(side) = g.bipartition() else {
        return Some("graph is not bipartite".into());
    };
    let side = &side;
    let class = |s: bool| g.vertices().filter(move |&v| side[v] == s).map(|v| f[v]);
    let ok = |a: bool| match (class(a).max(), class(!a).min()) {
        (Some(mx), Some(mn)) => mx < mn,
        _ => true,
    };
    if ok(false) || ok(true) {
        None
    } else {
        Some("the two bipartition classes have interleaved labels".into())
    }
}

fn matching_sums(g: &Graph, f: &[i64], m: &[Edge], target: i64) -> Option<String> {
    if !g.is_tree() {
        return Some("graph is not a tree".into());
    }
    let mut covered = BTreeSet::new();
    for &(u, v) in m {
        if !g.has_edge(u, v) {
            return Some(format!("matching edge ({u},{v}) is not an edge"));
        }
        if !covered.insert(u) || !covered.insert(v) {
            return Some(format!("matching edge ({u},{v}) reuses a vertex"));
        }
    }
    if covered.len() != g.order() {
        return Some("matching is not perfect".into());
    }
    m.iter()
        .find(|&&(u, v)| f[u] + f[v] != target)
        .map(|&(u, v)| format!("matching edge ({u},{v}) sums to {} not {target}", f[u] + f[v]))
}

fn injective(vals: &[i64]) -> Option<String> {
    let mut seen = BTreeSet::new();
    vals.iter().find(|v| !seen.insert(**v)).map(|v| format!("label {v} repeats"))
}

/// Checks every condition of `kind`. The verdict is [`Report::holds`].
pub fn verify_labeling(g: &Graph, f: &Labeling, kind: &LabelingKind) -> Result<Report> {
    let p = g.order();
    let q = g.size();
    if f.vertex.len() != p {
        return invalid(format!("{} vertex labels for {p} vertices", f.vertex.len()));
    }
    if let Some(e) = &f.edge {
        if e.len() != q {
            return invalid(format!("{} edge labels for {q} edges", e.len()));
        }
    }
    let fv = &f.vertex;
    let edges = g.edges();
    let diff = |u: usize, v: usize| (fv[u] - fv[v]).abs();
    let mut r = Report::new();
    if let Some(e) = &f.edge {
        let rule: Option<Box<dyn Fn(usize, usize) -> Option<i64>>> = match kind {
            LabelingKind::EdgeMagicTotal { c } => Some(Box::new(move |u, v| Some(c - fv[u] - fv[v]))),
            LabelingKind::Felicitous { eta } => {
                Some(Box::new(move |u, v| if *eta > 0 { Some((fv[u] + fv[v]).rem_euclid(*eta)) } else { None }))
            }
            LabelingKind::EdgeMagicGraceful { .. } => None,
            _ => Some(Box::new(move |u, v| Some(diff(u, v)))),
        };
        if let Some(rule) = rule {
            r.check("edge-rule", first_edge(g, |i, (u, v)| rule(u, v) != Some(e[i])));
        }
    }
    let ev = match kind {
        LabelingKind::EdgeMagicTotal { c } => {
            f.edge.clone().unwrap_or_else(|| edges.iter().map(|&(u, v)| c - fv[u] - fv[v]).collect())
        }
        LabelingKind::Felicitous { eta } => {
            if *eta <= 0 {
                return invalid("felicitous modulus must be positive");
            }
            f.edge.clone().unwrap_or_else(|| edges.iter().map(|&(u, v)| (fv[u] + fv[v]).rem_euclid(*eta)).collect())
        }
        LabelingKind::EdgeMagicGraceful { .. } => match &f.edge {
            Some(e) => e.clone(),
            None => return invalid("edge-magic graceful labelings need explicit edge labels"),
        },
        _ => f.edge_values(g),
    };

    if kind.graceful_family() {
        let odd = kind.odd();
        r.check("vertex-injective", injective(fv));
        let hi = if odd { 2 * q as i64 - 1 } else { q as i64 };
        let lo_ok = fv.iter().min() == Some(&0) || p == 0;
        r.check(
            "vertex-range",
            if fv.iter().all(|&x| (0..=hi.max(0)).contains(&x)) && lo_ok {
                None
            } else {
                Some(format!("labels must lie in [0,{hi}] with minimum 0"))
            },
        );
        let want = if odd { odd_set(q) } else { range_set(1, q as i64) };
        r.check("edge-colors", set_diff_detail(&ev, &want));
        if matches!(kind, LabelingKind::SetOrderedGraceful | LabelingKind::SetOrderedOddGraceful) {
            r.check("set-ordered", set_ordered(g, fv));
        }
        match kind {
            LabelingKind::StronglyGraceful { matching } => {
                r.check("matching-sum", matching_sums(g, fv, matching, q as i64))
            }
            LabelingKind::StronglyOddGraceful { matching } => {
                r.check("matching-sum", matching_sums(g, fv, matching, 2 * q as i64 - 1))
            }
            _ => {}
        }
        return Ok(r);
    }

    match kind {
        LabelingKind::GracefullyTotal => {
            let complete = q == p * p.saturating_sub(1) / 2;
            r.check("not-complete", complete.then(|| "graph is complete".to_string()));
            r.check("connected", (!g.is_connected()).then(|| "graph is disconnected".to_string()));
            let distinct = fv.iter().collect::<BTreeSet<_>>().len();
            r.check(
                "vertex-repeats",
                (distinct >= p).then(|| format!("{distinct} distinct vertex colors, need fewer than {p}")),
            );
            r.check(
                "positive-colors",
                fv.iter().chain(&ev).find(|&&x| x < 1).map(|x| format!("color {x} is below 1")),
            );
            r.check("edge-colors", set_diff_detail(&ev, &range_set(1, q as i64)));
        }
        LabelingKind::EdgeMagicTotal { c } => {
            let all: Vec<i64> = fv.iter().chain(&ev).copied().collect();
            let want = range_set(1, (p + q) as i64);
            let got: BTreeSet<i64> = all.iter().copied().collect();
            r.check(
                "total-bijection",
                (got.len() != all.len() || got != want).then(|| format!("labels are not a bijection onto [1,{}]", p + q)),
            );
            r.check("magic-sum", first_edge(g, |i, (u, v)| fv[u] + ev[i] + fv[v] != *c));
        }
        LabelingKind::Felicitous { .. } => {
            r.check("vertex-injective", injective(fv));
            r.check(
                "vertex-range",
                fv.iter().find(|&&x| !(0..=q as i64).contains(&x)).map(|x| format!("label {x} outside [0,{q}]")),
            );
            r.check("edge-distinct", injective(&ev));
        }
        LabelingKind::EdgeMagicGraceful { k } => {
            r.check("vertex-injective", injective(fv));
            r.check("edge-distinct", injective(&ev));
            r.check("magic-difference", first_edge(g, |i, (u, v)| (fv[u] + fv[v] - ev[i]).abs() != *k));
        }
        LabelingKind::EdgeOddGraceful => {
            r.check("vertex-injective", injective(fv));
            r.check("edge-colors", set_diff_detail(&ev, &odd_set(q)));
        }
        _ => unreachable!("graceful family handled above"),
    }
    Ok(r)
}

struct Search<'a> {
    g: &'a Graph,
    kind: &'a LabelingKind,
    lo: i64,
    hi: i64,
    f: Vec<i64>,
    used_v: BTreeSet<i64>,
    used_e: BTreeSet<i64>,
    /// Earlier neighbours of every vertex, so edge values appear as soon as both ends are set.
    back: Vec<Vec<usize>>,
    nodes: usize,
    /// Set-ordered pruning: the (X below Y, Y below X) orientations still possible.
    side: Option<Vec<bool>>,
}

impl Search<'_> {
    fn edge_value(&self, u: usize, v: usize) -> i64 {
        let (a, b) = (self.f[u], self.f[v]);
        match self.kind {
            LabelingKind::EdgeMagicTotal { c } => c - a - b,
            LabelingKind::Felicitous { eta } => (a + b).rem_euclid(*eta),
            _ => (a - b).abs(),
        }
    }

    fn edge_ok(&self, val: i64) -> bool {
        let q = self.g.size() as i64;
        let p = self.g.order() as i64;
        match self.kind {
            LabelingKind::EdgeMagicTotal { .. } => (1..=p + q).contains(&val) && !self.used_v.contains(&val),
            LabelingKind::Felicitous { .. } => true,
            LabelingKind::GracefullyTotal => (1..=q).contains(&val),
            k if k.odd() || matches!(k, LabelingKind::EdgeOddGraceful) => val % 2 == 1 && val < 2 * q,
            _ => (1..=q).contains(&val),
        }
    }

    fn ordered_ok(&self, upto: usize) -> bool {
        let Some(side) = &self.side else { return true };
        let ok = |x_low: bool| {
            let mut mx = i64::MIN;
            let mut mn = i64::MAX;
            for v in 0..upto {
                if side[v] == x_low {
                    mn = mn.min(self.f[v]);
                } else {
                    mx = mx.max(self.f[v]);
                }
            }
            mx < mn
        };
        ok(true) || ok(false)
    }

    fn go(&mut self, i: usize) -> Result<bool> {
        self.nodes += 1;
        cap("labeling search nodes", SEARCH_NODES, self.nodes)?;
        let p = self.g.order();
        if i == p {
            let lab = self.labeling();
            return Ok(verify_labeling(self.g, &lab, self.kind)?.holds());
        }
        let repeats = matches!(self.kind, LabelingKind::GracefullyTotal);
        for val in self.lo..=self.hi {
            if !repeats && self.used_v.contains(&val) {
                continue;
            }
            if matches!(self.kind, LabelingKind::EdgeMagicTotal { .. }) && self.used_e.contains(&val) {
                continue;
            }
            self.f[i] = val;
            let mut added = Vec::new();
            let mut ok = true;
            for &j in &self.back[i] {
                let e = self.edge_value(i, j);
                if !self.edge_ok(e) || self.used_e.contains(&e) || added.contains(&e) {
                    ok = false;
                    break;
                }
                if matches!(self.kind, LabelingKind::EdgeMagicTotal { .. }) && e == val {
                    ok = false;
                    break;
                }
                added.push(e);
            }
            if !ok || !self.ordered_ok(i + 1) {
                continue;
            }
            let fresh = self.used_v.insert(val);
            self.used_e.extend(added.iter().copied());
            if self.go(i + 1)? {
                return Ok(true);
            }
            for e in &added {
                self.used_e.remove(e);
            }
            if fresh {
                self.used_v.remove(&val);
            }
        }
        Ok(false)
    }

    fn labeling(&self) -> Labeling {
        let g = self.g;
        match self.kind {
            LabelingKind::EdgeMagicTotal { .. } | LabelingKind::Felicitous { .. } => {
                let e = g.edges().iter().map(|&(u, v)| self.edge_value(u, v)).collect();
                Labeling::total(self.f.clone(), e)
            }
            _ => Labeling::vertices(self.f.clone()),
        }
    }
}

/// Exhaustive search for the lexicographically smallest vertex labeling of
/// `kind`. `Ok(None)` means none exists within the kind's label range.
pub fn search_labeling(g: &Graph, kind: &LabelingKind) -> Result<Option<Labeling>> {
    let p = g.order() as i64;
    let q = g.size() as i64;
    cap("labeling search size", SEARCH_CAP, g.size())?;
    let (lo, hi) = match kind {
        k if k.odd() => (0, 2 * q - 1),
        LabelingKind::EdgeOddGraceful => (0, 2 * q - 1),
        LabelingKind::GracefullyTotal => (1, q + 1),
        LabelingKind::EdgeMagicTotal { .. } => (1, p + q),
        LabelingKind::Felicitous { eta } => {
            if *eta <= 0 {
                return invalid("felicitous modulus must be positive");
            }
            (0, q)
        }
        LabelingKind::EdgeMagicGraceful { .. } => {
            return invalid("edge-magic graceful labelings are verified, not searched");
        }
        _ => (0, q),
    };
    let side = match kind {
        LabelingKind::SetOrderedGraceful | LabelingKind::SetOrderedOddGraceful => match g.bipartition() {
            Some(s) => Some(s),
            None => return Ok(None),
        },
        _ => None,
    };
    let back = g.vertices().map(|v| g.neighbors(v).range(..v).copied().collect()).collect();
    let mut s = Search {
        g,
        kind,
        lo,
        hi,
        f: vec![0; g.order()],
        used_v: BTreeSet::new(),
        used_e: BTreeSet::new(),
        back,
        nodes: 0,
        side,
    };
    Ok(if s.go(0)? { Some(s.labeling()) } else { None })
}

/// Parameters of a `(k,d)` total coloring. `variant` picks the edge law 1..=9.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KdParams {
    pub k: i64,
    pub d: i64,
    pub variant: u8,
    /// Strong form: matching sums for variants 1-2, an exact edge progression for 6-9.
    #[serde(default)]
    pub strong: bool,
    /// Constant of variants 6-9.
    #[serde(default)]
    pub c: Option<i64>,
    #[serde(default)]
    pub matching: Vec<Edge>,
    /// `false` marks the X class; defaults to the graph's own bipartition.
    #[serde(default)]
    pub x_side: Option<Vec<bool>>,
}

impl KdParams {
    pub fn new(k: i64, d: i64, variant: u8) -> Self {
        Self { k, d, variant, strong: false, c: None, matching: vec![], x_side: None }
    }
}

/// `{k + a d, ..., k + (a+m) d}`.
pub fn progression(m: i64, k: i64, a: i64, d: i64) -> BTreeSet<i64> {
    (a..=a + m).map(|i| k + i * d).collect()
}

/// `{k + d, k + 3d, ..., k + (2q-1) d}`.
pub fn odd_progression(q: i64, k: i64, d: i64) -> BTreeSet<i64> {
    (0..q).map(|i| k + (2 * i + 1) * d).collect()
}

/// Verifies a `(k,d)` total coloring of a bipartite graph.
pub fn verify_kd_total(g: &Graph, f: &Labeling, params: &KdParams) -> Result<Report> {
    let KdParams { k, d, variant, strong, c, .. } = params.clone();
    if !(1..=9).contains(&variant) {
        return invalid(format!("unknown variant {variant}"));
    }
    if d < 1 || k < 0 {
        return invalid("need k >= 0 and d >= 1");
    }
    if f.vertex.len() != g.order() {
        return invalid(format!("{} vertex labels for {} vertices", f.vertex.len(), g.order()));
    }
    let side = sides(g, params.x_side.as_ref())?;
    let q = g.size() as i64;
    let fv = &f.vertex;
    let edges = g.edges();
    let modq = |u: usize, v: usize| k + (fv[u] + fv[v] - k).rem_euclid(q.max(1) * d);
    let ev: Vec<i64> = match (&f.edge, variant) {
        (Some(e), _) => {
            if e.len() != edges.len() {
                return invalid(format!("{} edge labels for {} edges", e.len(), edges.len()));
            }
            e.clone()
        }
        (None, 1 | 2) => f.edge_values(g),
        (None, 4 | 5) => edges.iter().map(|&(u, v)| modq(u, v)).collect(),
        (None, _) => return invalid(format!("variant {variant} needs explicit edge colors")),
    };
    let ev = &ev;
    let need_c = || c.ok_or_else(|| Error::InvalidInput(format!("variant {variant} needs a constant")));
    let mut r = Report::new();
    let in_x = |x: i64| x >= 0 && x % d == 0;
    let in_y = |x: i64| x >= k && (x - k) % d == 0;
    r.check(
        "class-colors",
        g.vertices()
            .find(|&v| if side[v] { !in_y(fv[v]) } else { !in_x(fv[v]) })
            .map(|v| format!("vertex {v} color {} outside its class progression", fv[v]))
            .or_else(|| ev.iter().find(|&&x| !in_y(x)).map(|x| format!("edge color {x} outside {{k + jd}}"))),
    );
    let exact = progression(q - 1, k, 0, d);
    let law: Box<dyn Fn(usize, Edge) -> bool> = match variant {
        1 | 2 => Box::new(|i, (u, v)| ev[i] != (fv[u] - fv[v]).abs()),
        3 => Box::new(|_, _| false),
        4 | 5 => Box::new(|i, (u, v)| ev[i] != modq(u, v)),
        6 => {
            let c = need_c()?;
            Box::new(move |i, (u, v)| fv[u] + ev[i] + fv[v] != c)
        }
        7 => {
            let c = need_c()?;
            Box::new(move |i, (u, v)| ev[i] + (fv[u] - fv[v]).abs() != c)
        }
        8 => {
            let c = need_c()?;
            Box::new(move |i, (u, v)| (fv[u] + fv[v] - ev[i]).abs() != c)
        }
        _ => {
            let c = need_c()?;
            Box::new(move |i, (u, v)| ((fv[u] - fv[v]).abs() - ev[i]).abs() != c)
        }
    };
    r.check("edge-law", first_edge(g, law));
    match variant {
        1 | 4 => r.check("edge-colors", set_diff_detail(ev, &exact)),
        2 | 5 => r.check("edge-colors", set_diff_detail(ev, &odd_progression(q, k, d))),
        3 => {
            let sums: Vec<i64> = edges.iter().enumerate().map(|(i, &(u, v))| fv[u] + ev[i] + fv[v]).collect();
            let lo = sums.iter().copied().min().unwrap_or(2 * k);
            let a = (lo - 2 * k) / (2 * d);
            let bad = lo < 2 * k || (lo - 2 * k) % (2 * d) != 0;
            let want: BTreeSet<i64> = (0..q).map(|i| 2 * k + 2 * (a + i) * d).collect();
            r.check(
                "sum-progression",
                if bad { Some(format!("smallest edge sum {lo} is not 2k + 2ad")) } else { set_diff_detail(&sums, &want) },
            );
        }
        _ => {
            if strong {
                r.check("edge-colors", set_diff_detail(ev, &exact));
            }
        }
    }
    if strong && (variant == 1 || variant == 2) {
        let target = if variant == 1 { k + (q - 1) * d } else { k + (2 * q - 1) * d };
        let bad = params.matching.iter().find_map(|&(u, v)| {
            if !g.has_edge(u, v) {
                Some(format!("({u},{v}) is not an edge"))
            } else if fv[u] + fv[v] != target {
                Some(format!("matching edge ({u},{v}) sums to {} not {target}", fv[u] + fv[v]))
            } else {
                None
            }
        });
        let ends: Vec<usize> = params.matching.iter().flat_map(|&(u, v)| [u, v]).collect();
        let disjoint = ends.iter().collect::<BTreeSet<_>>().len() == ends.len();
        r.check("matching-sum", bad.or_else(|| (!disjoint).then(|| "matching edges share a vertex".into())));
    }
    Ok(r)
}

/// A `(k,d)`-gracefully total coloring of any tree, built by leaf insertion:
/// each new leaf's edge takes step 0 and every earlier Y step moves up by one,
/// so all steps stay in `[0, q-1]`. X colors are `a d`, Y colors `k + b d`,
/// edge colors `k + j d` with the steps `j` a permutation of `[0, q-1]`.
pub fn tree_kd_total(t: &Graph, k: i64, d: i64) -> Result<Labeling> {
    if !t.is_tree() {
        return precondition("graph is not a tree");
    }
    if d < 1 || k < 0 {
        return invalid("need k >= 0 and d >= 1");
    }
    let side = t.bipartition().expect("trees are bipartite");
    let (order, parent) = t.bfs_tree(0);
    let mut step = vec![0i64; t.order()];
    for &v in order.iter().skip(1) {
        for w in order.iter().take_while(|&&w| w != v) {
            if side[*w] {
                step[*w] += 1;
            }
        }
        step[v] = step[parent[v].unwrap()];
    }
    let fv: Vec<i64> = t.vertices().map(|v| if side[v] { k + step[v] * d } else { step[v] * d }).collect();
    let ev = t.edges().iter().map(|&(u, v)| (fv[u] - fv[v]).abs()).collect();
    Ok(Labeling::total(fv, ev))
}

/// Checks a family of injectively labeled graphs whose edge colors are each the
/// odd set `[1, 2q_i - 1]` and whose vertex colors jointly fill `[0, M]`.
pub fn verify_edge_odd_graceful_base(base: &[(Graph, Labeling)]) -> Result<Report> {
    let mut r = Report::new();
    let mut union = BTreeSet::new();
    for (i, (g, f)) in base.iter().enumerate() {
        if f.vertex.len() != g.order() {
            return invalid(format!("graph {i}: {} labels for {} vertices", f.vertex.len(), g.order()));
        }
        r.check(format!("injective[{i}]"), injective(&f.vertex));
        r.check(format!("edge-colors[{i}]"), set_diff_detail(&f.edge_values(g), &odd_set(g.size())));
        union.extend(f.vertex.iter().copied());
    }
    let top = union.iter().next_back().copied().unwrap_or(-1);
    r.check(
        "vertex-union",
        (union != range_set(0, top)).then(|| format!("vertex colors {:?} are not an interval from 0", union)),
    );
    Ok(r)
}

/// Every edge of a labeled graph paired with its color, in edge order.
pub fn colored_edges(g: &Graph, f: &Labeling) -> Vec<(Edge, i64)> {
    g.edges().into_iter().zip(f.edge_values(g)).map(|((u, v), c)| (edge(u, v), c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(g: &Graph, v: &[i64], kind: &LabelingKind) -> bool {
        verify_labeling(g, &Labeling::vertices(v.to_vec()), kind).unwrap().holds()
    }

    #[test]
    fn graceful_examples() {
        assert!(holds(&Graph::path(2), &[0, 1], &LabelingKind::Graceful));
        assert!(holds(&Graph::complete(3), &[0, 1, 3], &LabelingKind::Graceful));
        let r = verify_labeling(&Graph::path(3), &Labeling::vertices(vec![0, 0, 1]), &LabelingKind::Graceful).unwrap();
        assert!(!r.passed("vertex-injective"));
    }

    #[test]
    fn search_examples() {
        for n in 2..=10 {
            let g = Graph::path(n);
            let f = search_labeling(&g, &LabelingKind::Graceful).unwrap().unwrap();
            assert!(verify_labeling(&g, &f, &LabelingKind::Graceful).unwrap().holds());
        }
        assert!(search_labeling(&Graph::cycle(5), &LabelingKind::Graceful).unwrap().is_none());
        let f = search_labeling(&Graph::star(3), &LabelingKind::Graceful).unwrap().unwrap();
        assert_eq!(f.vertex[0], 0);
        assert!(matches!(
            search_labeling(&Graph::path(22), &LabelingKind::Graceful),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn other_kinds_search_and_verify() {
        let g = Graph::path(4);
        for kind in [
            LabelingKind::OddGraceful,
            LabelingKind::SetOrderedGraceful,
            LabelingKind::SetOrderedOddGraceful,
            LabelingKind::GracefullyTotal,
            LabelingKind::EdgeMagicTotal { c: 12 },
            LabelingKind::Felicitous { eta: 3 },
            LabelingKind::EdgeOddGraceful,
        ] {
            let f = search_labeling(&g, &kind).unwrap().unwrap_or_else(|| panic!("{kind:?}"));
            assert!(verify_labeling(&g, &f, &kind).unwrap().holds(), "{kind:?}");
        }
        let strong = LabelingKind::StronglyGraceful { matching: vec![(0, 1), (2, 3)] };
        let f = search_labeling(&g, &strong).unwrap().unwrap();
        assert!(verify_labeling(&g, &f, &strong).unwrap().holds());
    }

    #[test]
    fn kd_on_paths() {
        for n in 2..=9 {
            let t = Graph::path(n);
            for (k, d) in [(1, 1), (1, 2), (0, 3), (4, 2)] {
                let f = tree_kd_total(&t, k, d).unwrap();
                let r = verify_kd_total(&t, &f, &KdParams::new(k, d, 1)).unwrap();
                assert!(r.holds(), "{n} {k} {d}: {r}");
            }
        }
        let t = Graph::path(4);
        let mut f = tree_kd_total(&t, 1, 1).unwrap();
        f.edge.as_mut().unwrap()[1] += 1;
        let r = verify_kd_total(&t, &f, &KdParams::new(1, 1, 1)).unwrap();
        assert!(!r.passed("edge-law"));
        assert!(r.get("edge-law").unwrap().detail.contains("(1,2)"));
    }

    #[test]
    fn kd_magic_variant() {
        // A single edge with colors 0, 1 | edge 1: sum 2 and difference 1.
        let g = Graph::path(2);
        let f = Labeling::total(vec![0, 1], vec![1]);
        let mut p = KdParams::new(1, 1, 6);
        p.c = Some(2);
        assert!(verify_kd_total(&g, &f, &p).unwrap().holds());
        p.variant = 9;
        p.c = Some(0);
        assert!(verify_kd_total(&g, &f, &p).unwrap().holds());
        p.variant = 7;
        assert!(verify_kd_total(&g, &f, &p).is_ok_and(|r| !r.holds()));
    }

    #[test]
    fn edge_odd_graceful_base() {
        let e = Graph::path(2);
        let one = verify_edge_odd_graceful_base(&[(e.clone(), Labeling::vertices(vec![0, 1]))]).unwrap();
        assert!(one.holds());
        let two = verify_edge_odd_graceful_base(&[
            (e.clone(), Labeling::vertices(vec![0, 1])),
            (e.clone(), Labeling::vertices(vec![1, 2])),
        ])
        .unwrap();
        assert!(two.holds());
        let gap = verify_edge_odd_graceful_base(&[
            (e.clone(), Labeling::vertices(vec![0, 1])),
            (e, Labeling::vertices(vec![3, 4])),
        ])
        .unwrap();
        assert!(!gap.holds());
    }
}

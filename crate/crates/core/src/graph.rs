//! Simple undirected graphs and the structural operations the rest of the crate
//! is built on: degree sequences, vertex/edge splitting and coinciding,
//! homomorphisms, isomorphism search, Hamilton cycles and vertex connectivity.
//!
//! Vertex ids are always `0..p`. Operations that remove a vertex compact the ids
//! and hand back a remap table so callers can follow their data through.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{cap, invalid, precondition, Result};

pub type Vertex = usize;
/// An edge, always stored with the smaller id first.
pub type Edge = (Vertex, Vertex);

/// Normalizes an unordered pair.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Largest order accepted by [`find_isomorphism`].
pub const ISO_CAP: usize = 32;
/// Largest order accepted by the Hamilton cycle searches.
pub const HAMILTON_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `p` vertices.
    pub fn new(p: usize) -> Self {
        Self { adj: vec![BTreeSet::new(); p], names: None }
    }

    pub fn from_edges(p: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Self::new(p);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order() {
            return invalid(format!("{} names for {} vertices", names.len(), self.order()));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Adds `uv`. Loops, out-of-range ids and repeated edges are rejected.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let p = self.order();
        if u >= p || v >= p {
            return invalid(format!("edge ({u},{v}) out of range for order {p}"));
        }
        if u == v {
            return invalid(format!("loop at vertex {u}"));
        }
        if !self.adj[u].insert(v) {
            return invalid(format!("repeated edge ({},{})", u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.order() || v >= self.order() {
            return false;
        }
        let had = self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        had
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(BTreeSet::new());
        if let Some(n) = &mut self.names {
            n.push(format!("v{}", self.adj.len() - 1));
        }
        self.adj.len() - 1
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, n) in self.adj.iter().enumerate() {
            out.extend(n.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    pub fn neighbors(&self, u: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|n| n.len()).max().unwrap_or(0)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// The path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The cycle on `n >= 3` vertices in id order.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("closing edge is new");
        }
        g
    }

    /// The star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<Edge> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).expect("bipartite edges are valid");
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut g = self.clone();
        g.names = None;
        for _ in 0..other.order() {
            g.adj.push(BTreeSet::new());
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off).expect("shifted edges are valid");
        }
        g
    }

    /// Component index of every vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.order()];
        let mut next = 0;
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        q.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Connected and non-empty.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().iter().all(|&c| c == 0)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.order()
    }

    /// Two-coloring with vertex 0 (and the smallest vertex of every other
    /// component) on side `false`, or `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            q.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// Breadth-first distances from `s` (`usize::MAX` when unreachable).
    pub fn distances(&self, s: Vertex) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.order()];
        d[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if d[v] == usize::MAX {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        d
    }

    /// Largest distance between two vertices of a connected graph.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        self.vertices().map(|s| *self.distances(s).iter().max().unwrap()).max()
    }

    /// Vertices of minimum eccentricity, ascending.
    pub fn centers(&self) -> Vec<Vertex> {
        let ecc: Vec<usize> =
            self.vertices().map(|s| *self.distances(s).iter().max().unwrap()).collect();
        let best = ecc.iter().copied().min().unwrap_or(0);
        self.vertices().filter(|&v| ecc[v] == best).collect()
    }

    /// Subgraph induced by `keep`, renumbered in ascending order of `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let ids: BTreeMap<Vertex, Vertex> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(keep.len());
        for (u, v) in self.edges() {
            if let (Some(&a), Some(&b)) = (ids.get(&u), ids.get(&v)) {
                g.add_edge(a, b).expect("induced edges are valid");
            }
        }
        g
    }

    /// Removes `gone`, compacting ids. Returns the graph and old id -> new id.
    pub fn remove_vertices(&self, gone: &BTreeSet<Vertex>) -> (Graph, Vec<Option<Vertex>>) {
        let keep: BTreeSet<Vertex> = self.vertices().filter(|v| !gone.contains(v)).collect();
        let mut remap = vec![None; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            remap[v] = Some(i);
        }
        let mut g = self.induced(&keep);
        if let Some(n) = &self.names {
            g.names = Some(keep.iter().map(|&v| n[v].clone()).collect());
        }
        (g, remap)
    }

    /// A rooted BFS spanning structure: `(order, parent)` with `parent[root] = None`.
    pub fn bfs_tree(&self, root: Vertex) -> (Vec<Vertex>, Vec<Option<Vertex>>) {
        let mut parent = vec![None; self.order()];
        let mut seen = vec![false; self.order()];
        let mut order = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    order.push(v);
                }
            }
            i += 1;
        }
        (order, parent)
    }
}

/// Degree multiset sorted non-increasing.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Erdős–Gallai test. The input must already be sorted non-increasing.
pub fn is_graphical(d: &[usize]) -> bool {
    debug_assert!(d.windows(2).all(|w| w[0] >= w[1]), "degree sequence must be non-increasing");
    let n = d.len();
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    if d.iter().any(|&x| x >= n.max(1) && x > 0) {
        return false;
    }
    let mut left = 0usize;
    for k in 1..=n {
        left += d[k - 1];
        let right: usize = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if left > right {
            return false;
        }
    }
    true
}

/// Splits `u` into two vertices. `u` keeps its id and the neighbors in `keep`;
/// a new vertex (id `p`) takes the remaining neighbors.
pub fn split_vertex(g: &Graph, u: Vertex, keep: &BTreeSet<Vertex>) -> Result<Graph> {
    if u >= g.order() {
        return invalid(format!("vertex {u} out of range"));
    }
    let n = g.neighbors(u);
    if n.len() < 2 {
        return precondition(format!("vertex {u} has degree {} < 2", n.len()));
    }
    if keep.is_empty() || keep.len() >= n.len() || !keep.is_subset(n) {
        return invalid(format!("{keep:?} is not a proper non-empty part of N({u}) = {n:?}"));
    }
    let mut h = g.clone();
    let w = h.add_vertex();
    for &x in n.difference(keep) {
        h.remove_edge(u, x);
        h.add_edge(w, x)?;
    }
    Ok(h)
}

/// Merges `a` and `b` into the smaller id; the larger id is removed and the
/// remaining ids compacted. Returns the graph and old id -> new id.
pub fn coincide_vertices(g: &Graph, a: Vertex, b: Vertex) -> Result<(Graph, Vec<Vertex>)> {
    if a >= g.order() || b >= g.order() || a == b {
        return invalid(format!("cannot coincide {a} and {b}"));
    }
    if g.has_edge(a, b) {
        return precondition(format!("{a} and {b} are adjacent (would create a loop)"));
    }
    if let Some(x) = g.neighbors(a).intersection(g.neighbors(b)).next() {
        return precondition(format!("{a} and {b} share neighbor {x} (would create a multi-edge)"));
    }
    let (keep, drop) = (a.min(b), a.max(b));
    let mut h = g.clone();
    for x in g.neighbors(drop).clone() {
        h.remove_edge(drop, x);
        h.add_edge(keep, x)?;
    }
    let (h, remap) = h.remove_vertices(&BTreeSet::from([drop]));
    let merged = remap[keep].expect("kept vertex survives");
    let remap = remap.iter().map(|r| r.unwrap_or(merged)).collect();
    Ok((h, remap))
}

/// Edge-splits `uv`: the edge is removed, `u` becomes `u'` (keeps id `u` and the
/// neighbors in `u_keep`) plus `u''` (new id, the other neighbors except `v`),
/// likewise for `v`, and the edges `u'v'`, `u''v''` are added. A side may keep
/// nothing, which is the leaf-split form.
pub fn split_edge(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    u_keep: &BTreeSet<Vertex>,
    v_keep: &BTreeSet<Vertex>,
) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return invalid(format!("edge ({u},{v}) absent"));
    }
    for (x, keep, other) in [(u, u_keep, v), (v, v_keep, u)] {
        if g.degree(x) < 2 {
            return precondition(format!("vertex {x} has degree {} < 2", g.degree(x)));
        }
        let rest: BTreeSet<Vertex> = g.neighbors(x).iter().copied().filter(|&y| y != other).collect();
        if !keep.is_subset(&rest) {
            return invalid(format!("{keep:?} is not a subset of N({x}) - {other}"));
        }
    }
    let mut h = g.clone();
    h.remove_edge(u, v);
    let u2 = h.add_vertex();
    let v2 = h.add_vertex();
    for (x, x2, keep, other) in [(u, u2, u_keep, v), (v, v2, v_keep, u)] {
        for &y in g.neighbors(x) {
            if y != other && !keep.contains(&y) {
                h.remove_edge(x, y);
                h.add_edge(x2, y)?;
            }
        }
    }
    h.add_edge(u, v)?;
    h.add_edge(u2, v2)?;
    Ok(h)
}

/// Edge-coincides `e1 = u'v'` with `e2 = u''v''`: `u'` absorbs `u''`, `v'`
/// absorbs `v''` and the two edges become one. Ids are compacted as in
/// [`coincide_vertices`].
pub fn coincide_edges(g: &Graph, e1: Edge, e2: Edge) -> Result<(Graph, Vec<Vertex>)> {
    let (u1, v1) = e1;
    let (u2, v2) = e2;
    if !g.has_edge(u1, v1) || !g.has_edge(u2, v2) {
        return invalid(format!("edges {e1:?} and {e2:?} must both be present"));
    }
    let ends = BTreeSet::from([u1, v1, u2, v2]);
    if ends.len() != 4 {
        return precondition(format!("edges {e1:?} and {e2:?} share an end"));
    }
    for (a, b) in [(u1, u2), (v1, v2)] {
        if g.has_edge(a, b) {
            return precondition(format!("{a} and {b} are adjacent"));
        }
    }
    for (a, b) in [(u1, v2), (u2, v1)] {
        if g.has_edge(a, b) {
            return precondition(format!("cross edge ({a},{b}) would duplicate the coincided edge"));
        }
    }
    for (a, b) in [(u1, u2), (v1, v2)] {
        if let Some(x) = g.neighbors(a).intersection(g.neighbors(b)).next() {
            return precondition(format!("{a} and {b} share neighbor {x}"));
        }
    }
    let mut h = g.clone();
    h.remove_edge(u2, v2);
    let mut remap: Vec<Vertex> = g.vertices().collect();
    for (keep, drop) in [(u1, u2), (v1, v2)] {
        let (hk, r) = coincide_vertices(&h, remap[keep], remap[drop])?;
        for x in remap.iter_mut() {
            *x = r[*x];
        }
        h = hk;
    }
    let a = remap[u1];
    let b = remap[v1];
    debug_assert!(h.has_edge(a, b));
    Ok((h, remap))
}

/// Verdict of [`check_homomorphism`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    /// Every edge maps to an edge.
    pub is_hom: bool,
    /// The image is an induced subgraph of the target.
    pub faithful: bool,
    /// `uv` is an edge exactly when `f(u)f(v)` is.
    pub full: bool,
}

pub fn check_homomorphism(g: &Graph, h: &Graph, f: &[Vertex]) -> Result<Homomorphism> {
    if f.len() != g.order() {
        return invalid(format!("map has {} entries for {} vertices", f.len(), g.order()));
    }
    if let Some(&x) = f.iter().find(|&&x| x >= h.order()) {
        return invalid(format!("image {x} outside the target"));
    }
    let is_hom = g.edges().iter().all(|&(u, v)| h.has_edge(f[u], f[v]));
    let image: BTreeSet<Edge> = g.edges().iter().map(|&(u, v)| edge(f[u], f[v])).collect();
    let img_v: BTreeSet<Vertex> = f.iter().copied().collect();
    let faithful = is_hom
        && h.edges().iter().all(|&(a, b)| !(img_v.contains(&a) && img_v.contains(&b)) || image.contains(&(a, b)));
    let mut full = is_hom;
    'outer: for u in g.vertices() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) != h.has_edge(f[u], f[v]) {
                full = false;
                break 'outer;
            }
        }
    }
    Ok(Homomorphism { is_hom, faithful, full })
}

/// Colour refinement on the disjoint union so that colours are comparable
/// across both graphs.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let u = g.disjoint_union(h);
    let mut col: Vec<usize> = u.vertices().map(|v| u.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = u
            .vertices()
            .map(|v| {
                let mut s: Vec<usize> = u.neighbors(v).iter().map(|&w| col[w]).collect();
                s.sort_unstable();
                (col[v], s)
            })
            .collect();
        let ids: BTreeMap<&(usize, Vec<usize>), usize> =
            sigs.iter().collect::<BTreeSet<_>>().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        let before = col.iter().collect::<BTreeSet<_>>().len();
        let after = next.iter().collect::<BTreeSet<_>>().len();
        col = next;
        if after == before {
            break;
        }
    }
    let p = g.order();
    (col[..p].to_vec(), col[p..].to_vec())
}

/// Lexicographically smallest isomorphism `g -> h`, or `None`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<Vertex>>> {
    cap("isomorphism order", ISO_CAP, g.order().max(h.order()))?;
    if g.order() != h.order() || g.size() != h.size() || degree_sequence(g) != degree_sequence(h) {
        return Ok(None);
    }
    let (cg, ch) = refine(g, h);
    let mut a = cg.clone();
    let mut b = ch.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    let p = g.order();
    let mut map = vec![usize::MAX; p];
    let mut used = vec![false; p];
    fn go(
        i: usize,
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        map: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        if i == g.order() {
            return true;
        }
        for c in 0..h.order() {
            if used[c] || cg[i] != ch[c] {
                continue;
            }
            let ok = (0..i).all(|j| g.has_edge(i, j) == h.has_edge(c, map[j]));
            if !ok {
                continue;
            }
            map[i] = c;
            used[c] = true;
            if go(i + 1, g, h, cg, ch, map, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    Ok(if go(0, g, h, &cg, &ch, &mut map, &mut used) { Some(map) } else { None })
}

/// All Hamilton cycles, each as a vertex sequence starting at 0 with the
/// second vertex smaller than the last, sorted.
pub fn hamilton_cycles(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    cap("hamilton order", HAMILTON_CAP, g.order())?;
    let p = g.order();
    let mut out = Vec::new();
    if p < 3 || !g.is_connected() {
        return Ok(out);
    }
    let mut path = vec![0];
    let mut used = vec![false; p];
    used[0] = true;
    fn go(g: &Graph, path: &mut Vec<Vertex>, used: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        let p = g.order();
        let last = *path.last().unwrap();
        if path.len() == p {
            if g.has_edge(last, 0) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for &v in g.neighbors(last) {
            if used[v] {
                continue;
            }
            used[v] = true;
            path.push(v);
            go(g, path, used, out);
            path.pop();
            used[v] = false;
        }
    }
    go(g, &mut path, &mut used, &mut out);
    out.sort();
    Ok(out)
}

/// Edges of a Hamilton cycle given as a vertex sequence.
pub fn cycle_edges(cycle: &[Vertex]) -> BTreeSet<Edge> {
    (0..cycle.len()).map(|i| edge(cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

/// Verdict of [`is_edge_hamiltonian`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeHamiltonian {
    pub holds: bool,
    /// One Hamilton cycle through each covered edge, in edge order.
    pub witnesses: Vec<Vec<Vertex>>,
    /// The first edge lying on no Hamilton cycle.
    pub uncovered: Option<Edge>,
}

/// Hamilton path from `s` to `t` covering every vertex, if any.
fn hamilton_path(g: &Graph, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let p = g.order();
    let mut path = vec![s];
    let mut used = vec![false; p];
    used[s] = true;
    fn go(g: &Graph, t: Vertex, path: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == g.order() {
            return last == t;
        }
        for &v in g.neighbors(last) {
            if used[v] || (v == t && path.len() + 1 != g.order()) {
                continue;
            }
            used[v] = true;
            path.push(v);
            if go(g, t, path, used) {
                return true;
            }
            path.pop();
            used[v] = false;
        }
        false
    }
    if go(g, t, &mut path, &mut used) {
        Some(path)
    } else {
        None
    }
}

/// Whether every edge lies on some Hamilton cycle.
pub fn is_edge_hamiltonian(g: &Graph) -> Result<EdgeHamiltonian> {
    cap("hamilton order", HAMILTON_CAP, g.order())?;
    let edges = g.edges();
    if g.order() < 3 || !g.is_connected() {
        return Ok(EdgeHamiltonian { holds: false, witnesses: vec![], uncovered: edges.first().copied() });
    }
    let mut covered = BTreeSet::new();
    let mut witnesses = Vec::new();
    for &(u, v) in &edges {
        if covered.contains(&(u, v)) {
            continue;
        }
        match hamilton_path(g, u, v) {
            Some(path) => {
                covered.extend(cycle_edges(&path));
                witnesses.push(path);
            }
            None => return Ok(EdgeHamiltonian { holds: false, witnesses, uncovered: Some((u, v)) }),
        }
    }
    Ok(EdgeHamiltonian { holds: true, witnesses, uncovered: None })
}

/// Unit-capacity max flow between `s` and `t` with every other vertex split into
/// in/out halves of capacity 1. Returns the flow value and a minimum vertex cut.
fn min_vertex_cut(g: &Graph, s: Vertex, t: Vertex) -> (usize, Vec<Vertex>) {
    let p = g.order();
    let n = 2 * p;
    // Node 2v is v_in, 2v+1 is v_out.
    let big = p + 1;
    let mut capm = vec![vec![0usize; n]; n];
    for v in 0..p {
        capm[2 * v][2 * v + 1] = if v == s || v == t { big } else { 1 };
    }
    for (u, v) in g.edges() {
        capm[2 * u + 1][2 * v] = big;
        capm[2 * v + 1][2 * u] = big;
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[src] = src;
        let mut q = VecDeque::from([src]);
        while let Some(x) = q.pop_front() {
            for y in 0..n {
                if prev[y] == usize::MAX && capm[x][y] > 0 {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            let reach: Vec<bool> = prev.iter().map(|&x| x != usize::MAX).collect();
            let cut = (0..p).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
            return (flow, cut);
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            capm[x][y] -= 1;
            capm[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Minimum vertex cut size and a witness cut. Complete graphs give `p - 1` and
/// the witness is every vertex but one.
pub fn vertex_connectivity(g: &Graph) -> Result<(usize, Vec<Vertex>)> {
    if !g.is_connected() {
        return precondition("vertex connectivity needs a connected graph");
    }
    let p = g.order();
    let mut best = (p.saturating_sub(1), (1..p).collect::<Vec<_>>());
    for s in 0..p {
        for t in s + 1..p {
            if g.has_edge(s, t) {
                continue;
            }
            let (k, cut) = min_vertex_cut(g, s, t);
            if k < best.0 {
                best = (k, cut);
            }
        }
    }
    Ok(best)
}

/// Chromatic number by exact backtracking with the usual symmetry break
/// (vertex `i` may open at most one new color).
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    cap("chromatic order", HAMILTON_CAP, g.order())?;
    let p = g.order();
    if p == 0 {
        return Ok(0);
    }
    fn go(g: &Graph, i: usize, k: usize, used: usize, col: &mut [usize]) -> bool {
        if i == g.order() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if g.neighbors(i).range(..i).all(|&j| col[j] != c) {
                col[i] = c;
                if go(g, i + 1, k, used.max(c + 1), col) {
                    return true;
                }
            }
        }
        false
    }
    let mut col = vec![0; p];
    Ok((1..=p).find(|&k| go(g, 0, k, 0, &mut col)).unwrap_or(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(degree_sequence(&Graph::complete(3)), vec![2, 2, 2]);
        assert_eq!(degree_sequence(&Graph::star(4)), vec![4, 1, 1, 1, 1]);
        assert!(is_graphical(&[2, 2, 2]));
        assert!(is_graphical(&[3, 1, 1, 1]));
        assert!(!is_graphical(&[3, 3, 1, 1]));
        assert!(!is_graphical(&[1]));
        assert!(is_graphical(&[]));
    }

    #[test]
    fn split_cycle_opens_to_path() {
        let c4 = Graph::cycle(4);
        let h = split_vertex(&c4, 0, &set(&[1])).unwrap();
        assert_eq!((h.order(), h.size()), (5, 4));
        assert!(h.is_tree());
        assert_eq!(degree_sequence(&h), degree_sequence(&Graph::path(5)));
        let k4 = Graph::complete(4);
        let h = split_vertex(&k4, 0, &set(&[1])).unwrap();
        assert_eq!((h.order(), h.size()), (5, 6));
        assert!(split_vertex(&Graph::path(3), 0, &set(&[1])).is_err());
    }

    #[test]
    fn coincide_rules() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (h, remap) = coincide_vertices(&g, 1, 2).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(remap, vec![0, 1, 1, 2]);
        assert!(coincide_vertices(&Graph::path(3), 0, 2).is_err());
        assert!(coincide_vertices(&Graph::path(2), 0, 1).is_err());
    }

    #[test]
    fn triangle_edge_split_gives_path() {
        let c3 = Graph::complete(3);
        let h = split_edge(&c3, 0, 1, &set(&[2]), &set(&[])).unwrap();
        assert_eq!((h.order(), h.size()), (5, 4));
        assert!(h.is_tree());
        assert_eq!(h.max_degree(), 2);
        let (back, _) = coincide_edges(&h, (0, 1), (3, 4)).unwrap();
        assert!(find_isomorphism(&back, &c3).unwrap().is_some());
    }

    #[test]
    fn homomorphisms() {
        let c6 = Graph::cycle(6);
        let c3 = Graph::cycle(3);
        let f: Vec<usize> = (0..6).map(|i| i % 3).collect();
        let r = check_homomorphism(&c6, &c3, &f).unwrap();
        assert!(r.is_hom && r.faithful && !r.full);
        let id: Vec<usize> = (0..6).collect();
        let r = check_homomorphism(&c6, &c6, &id).unwrap();
        assert!(r.is_hom && r.faithful && r.full);
        assert!(check_homomorphism(&c6, &c3, &[0, 1]).is_err());
    }

    #[test]
    fn isomorphism_basics() {
        let p4 = Graph::path(4);
        let s = Graph::star(3);
        assert!(find_isomorphism(&p4, &s).unwrap().is_none());
        let q = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let m = find_isomorphism(&p4, &q).unwrap().unwrap();
        assert!(check_homomorphism(&p4, &q, &m).unwrap().full);
        assert!(find_isomorphism(&Graph::new(33), &Graph::new(33)).is_err());
    }

    #[test]
    fn hamilton_counts() {
        assert_eq!(hamilton_cycles(&Graph::complete(4)).unwrap().len(), 3);
        assert_eq!(hamilton_cycles(&Graph::path(4)).unwrap().len(), 0);
        assert_eq!(hamilton_cycles(&Graph::cycle(6)).unwrap().len(), 1);
        for n in 3..=7 {
            let fact: usize = (1..n).product();
            assert_eq!(hamilton_cycles(&Graph::complete(n)).unwrap().len(), fact / 2);
        }
        assert!(hamilton_cycles(&Graph::new(17)).is_err());
    }

    #[test]
    fn edge_hamiltonian() {
        assert!(is_edge_hamiltonian(&Graph::complete(4)).unwrap().holds);
        let t = is_edge_hamiltonian(&Graph::star(3)).unwrap();
        assert!(!t.holds && t.uncovered.is_some());
        // C5 plus chord 0-2: the chord lies on no Hamilton cycle.
        let mut g = Graph::cycle(5);
        g.add_edge(0, 2).unwrap();
        let r = is_edge_hamiltonian(&g).unwrap();
        assert!(!r.holds);
        assert_eq!(r.uncovered, Some((0, 2)));
    }

    #[test]
    fn chromatic() {
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::new(3)).unwrap(), 1);
    }

    #[test]
    fn connectivity() {
        assert_eq!(vertex_connectivity(&Graph::complete(4)).unwrap().0, 3);
        assert_eq!(vertex_connectivity(&Graph::cycle(5)).unwrap().0, 2);
        let (k, cut) = vertex_connectivity(&Graph::path(5)).unwrap();
        assert_eq!(k, 1);
        let (rest, _) = Graph::path(5).remove_vertices(&cut.iter().copied().collect());
        assert!(!rest.is_connected());
        assert!(vertex_connectivity(&Graph::new(2)).is_err());
    }
}

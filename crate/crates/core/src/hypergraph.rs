//! Hypergraphs `(Λ, ℰ)`: a ground set and a family of distinct non-empty
//! subsets covering it, plus the procedures that read structure off them
//! (reduction, duals, ears, exact covers) or off their intersected-graphs
//! (Hamiltonicity, connectivity, colorings).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{cap, invalid, precondition, Error, Result};
use crate::graph::{chromatic_number, hamilton_cycles, vertex_connectivity, Graph};
use crate::setcolor::SetColoring;
use crate::{Report, Set};

/// Largest family accepted by [`Hypergraph::perfect_hypermatchings`].
pub const MATCHING_CAP: usize = 24;
/// Largest family accepted by [`Hypergraph::hyperedge_hamilton_cycle`].
pub const CYCLE_CAP: usize = 16;
/// Largest family accepted by connectivity and chromatic searches.
pub const SEARCH_CAP: usize = 12;
/// Largest ground set accepted by [`Hypergraph::hypervertex_chromatic`].
pub const GROUND_CAP: usize = 24;

/// A validated hypergraph. Hyperedges are kept sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    ground: Set,
    edges: Vec<Set>,
}

impl Hypergraph {
    /// Builds a hypergraph whose ground set is the union of `edges`.
    pub fn new<E: IntoIterator<Item = u32>>(edges: Vec<E>) -> Result<Self> {
        let family: Vec<Set> = edges.into_iter().map(|e| e.into_iter().collect()).collect();
        let ground = family.iter().flatten().copied().collect();
        Self::validate(ground, family)
    }

    /// Checks every invariant and reports all violations at once.
    pub fn validate(ground: Set, edges: Vec<Set>) -> Result<Self> {
        let mut problems = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                problems.push(format!("hyperedge {i} is empty"));
            }
        }
        let mut seen: BTreeMap<&Set, usize> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            if let Some(j) = seen.insert(e, i) {
                problems.push(format!("hyperedge {i} duplicates hyperedge {j}: {:?}", e));
            }
        }
        let union: Set = edges.iter().flatten().copied().collect();
        if union != ground {
            let missing: Vec<_> = ground.difference(&union).collect();
            let extra: Vec<_> = union.difference(&ground).collect();
            problems.push(format!("union of hyperedges differs from the ground set (missing {missing:?}, extra {extra:?})"));
        }
        if !problems.is_empty() {
            return invalid(problems.join("; "));
        }
        let mut edges = edges;
        edges.sort();
        Ok(Self { ground, edges })
    }

    pub fn ground(&self) -> &Set {
        &self.ground
    }

    pub fn edges(&self) -> &[Set] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.ground.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// `r` when every hyperedge has exactly `r` elements.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    /// How many hyperedges contain each ground element.
    pub fn vertex_degrees(&self) -> BTreeMap<u32, usize> {
        let mut d = BTreeMap::new();
        for x in self.edges.iter().flatten() {
            *d.entry(*x).or_insert(0) += 1;
        }
        d
    }

    /// For every hyperedge, the number of other hyperedges it meets.
    pub fn hyperedge_degrees(&self) -> Vec<usize> {
        let (g, _) = self.intersected_graph();
        g.vertices().map(|v| g.degree(v)).collect()
    }

    /// Ground elements lying in exactly one hyperedge.
    pub fn isolated_vertices(&self) -> Vec<u32> {
        self.vertex_degrees().into_iter().filter(|&(_, d)| d == 1).map(|(x, _)| x).collect()
    }

    /// Indices of ears: hyperedges disjoint from all others, or whose part
    /// outside some other hyperedge `e*` is private to them.
    pub fn ears(&self) -> Vec<usize> {
        let deg = self.vertex_degrees();
        let private = |e: &Set| -> Set { e.iter().copied().filter(|x| deg[x] == 1).collect() };
        (0..self.size())
            .filter(|&i| {
                let e = &self.edges[i];
                let others = self.edges.iter().enumerate().filter(|&(j, _)| j != i);
                let lonely = others.clone().all(|(_, f)| e.is_disjoint(f));
                let own = private(e);
                lonely || others.clone().any(|(_, star)| e.difference(star).all(|x| own.contains(x)))
            })
            .collect()
    }

    /// No hyperedge is contained in another.
    pub fn is_irreducible(&self) -> bool {
        !(0..self.size()).any(|i| (0..self.size()).any(|j| i != j && self.edges[i].is_subset(&self.edges[j])))
    }

    pub fn structure(&self) -> Structure {
        Structure { ears: self.ears(), isolated: self.isolated_vertices(), irreducible: self.is_irreducible() }
    }

    /// Fixed point of deleting elements that lie in exactly one set and sets
    /// contained in another set. Emptied sets vanish.
    pub fn graham_reduction(&self) -> Vec<Set> {
        graham_reduction(&self.edges)
    }

    /// The dual family `X_j = {i : x_j ∈ e_i}`, one set per ground element in
    /// ascending order. Hyperedges are named by their index.
    pub fn dual_family(&self) -> Vec<Set> {
        self.ground
            .iter()
            .map(|x| (0..self.size() as u32).filter(|&i| self.edges[i as usize].contains(x)).collect())
            .collect()
    }

    /// The dual as a hypergraph. Fails when two ground elements lie in exactly
    /// the same hyperedges, since the dual would repeat a hyperedge.
    pub fn dual(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.dual_family())
    }

    /// One vertex per hyperedge (in stored order), an edge wherever two
    /// hyperedges meet, vertex sets `F(v) = e` and edge sets `F(u) ∩ F(v)`.
    pub fn intersected_graph(&self) -> (Graph, SetColoring) {
        intersected_graph_of(&self.edges)
    }

    /// A Hamilton cycle of the intersected-graph, as hyperedge indices. Absent
    /// when the family has ears or fewer than three hyperedges.
    pub fn hyperedge_hamilton_cycle(&self) -> Result<Option<Vec<usize>>> {
        cap("hyperedge cycle family", CYCLE_CAP, self.size())?;
        if self.size() < 3 || !self.ears().is_empty() {
            return Ok(None);
        }
        let (g, _) = self.intersected_graph();
        Ok(hamilton_cycles(&g)?.into_iter().next())
    }

    /// Minimum number of hyperedges whose removal disconnects the
    /// intersected-graph, with a witness cut.
    pub fn hyperedge_connectivity(&self) -> Result<(usize, Vec<usize>)> {
        cap("connectivity family", SEARCH_CAP, self.size())?;
        let (g, _) = self.intersected_graph();
        if !g.is_connected() {
            return precondition("the intersected-graph is disconnected");
        }
        vertex_connectivity(&g)
    }

    /// Fewest colors on hyperedges so that meeting hyperedges differ.
    pub fn hyperedge_chromatic_index(&self) -> Result<usize> {
        cap("chromatic family", SEARCH_CAP, self.size())?;
        chromatic_number(&self.intersected_graph().0)
    }

    /// Fewest colors on Λ so that no hyperedge of size at least two is
    /// monochromatic.
    pub fn hypervertex_chromatic(&self) -> Result<usize> {
        cap("chromatic ground", GROUND_CAP, self.order())?;
        let xs: Vec<u32> = self.ground.iter().copied().collect();
        let pos: BTreeMap<u32, usize> = xs.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let big: Vec<Vec<usize>> =
            self.edges.iter().filter(|e| e.len() >= 2).map(|e| e.iter().map(|x| pos[x]).collect()).collect();
        // The last element of each hyperedge is where its color check happens.
        let mut closing: Vec<Vec<usize>> = vec![vec![]; xs.len()];
        for (i, e) in big.iter().enumerate() {
            closing[*e.iter().max().unwrap()].push(i);
        }
        fn go(i: usize, k: usize, used: usize, col: &mut [usize], big: &[Vec<usize>], closing: &[Vec<usize>]) -> bool {
            if i == col.len() {
                return true;
            }
            for c in 0..k.min(used + 1) {
                col[i] = c;
                let mono = closing[i].iter().any(|&e| big[e].iter().all(|&x| col[x] == c));
                if !mono && go(i + 1, k, used.max(c + 1), col, big, closing) {
                    return true;
                }
            }
            false
        }
        let mut col = vec![0; xs.len()];
        Ok((1..=xs.len().max(1)).find(|&k| go(0, k, 0, &mut col, &big, &closing)).unwrap_or(xs.len()))
    }

    /// Checks a hyper-total coloring: hyperedge colors in `[1,b]` differing on
    /// meeting hyperedges, element colors in `[a,b]` with no hyperedge of size at
    /// least two monochromatic. The second value tells whether the largest
    /// hyperedge color `M` obeys `Δ ≤ M ≤ Δ + 1` for the intersected-graph.
    pub fn verify_hyper_total(
        &self,
        edge_colors: &[u32],
        vertex_colors: &BTreeMap<u32, u32>,
        a: u32,
        b: u32,
    ) -> Result<(Report, bool)> {
        if edge_colors.len() != self.size() {
            return invalid(format!("{} hyperedge colors for {} hyperedges", edge_colors.len(), self.size()));
        }
        if let Some(x) = self.ground.iter().find(|x| !vertex_colors.contains_key(x)) {
            return invalid(format!("element {x} has no color"));
        }
        let (g, _) = self.intersected_graph();
        let mut r = Report::new();
        r.check(
            "hyperedge-range",
            edge_colors.iter().find(|&&c| !(1..=b).contains(&c)).map(|c| format!("color {c} outside [1,{b}]")),
        );
        r.check(
            "hyperedge-proper",
            g.edges()
                .into_iter()
                .find(|&(u, v)| edge_colors[u] == edge_colors[v])
                .map(|(u, v)| format!("meeting hyperedges {u} and {v} share color {}", edge_colors[u])),
        );
        r.check(
            "element-range",
            self.ground
                .iter()
                .find(|x| !(a..=b).contains(&vertex_colors[x]))
                .map(|x| format!("element {x} color {} outside [{a},{b}]", vertex_colors[x])),
        );
        r.check(
            "element-proper",
            self.edges
                .iter()
                .position(|e| e.len() >= 2 && e.iter().map(|x| vertex_colors[x]).collect::<BTreeSet<_>>().len() == 1)
                .map(|i| format!("hyperedge {i} is monochromatic")),
        );
        let delta = g.max_degree();
        let m = edge_colors.iter().copied().max().unwrap_or(0) as usize;
        Ok((r, delta <= m && m <= delta + 1))
    }

    /// Every exact cover of Λ by hyperedges, as sorted index lists in
    /// lexicographic order.
    pub fn perfect_hypermatchings(&self) -> Result<Vec<Vec<usize>>> {
        cap("hypermatching family", MATCHING_CAP, self.size())?;
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.cover(&self.ground.clone(), &mut chosen, &mut out);
        for m in &mut out {
            m.sort_unstable();
        }
        out.sort();
        Ok(out)
    }

    fn cover(&self, left: &Set, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(chosen.clone());
            return;
        }
        let fits = |e: &Set| e.is_subset(left);
        // Branch on the element with the fewest hyperedges able to cover it.
        let Some(x) = left.iter().copied().min_by_key(|x| self.edges.iter().filter(|e| e.contains(x) && fits(e)).count())
        else {
            return;
        };
        for (i, e) in self.edges.iter().enumerate() {
            if e.contains(&x) && fits(e) {
                chosen.push(i);
                self.cover(&(left - e), chosen, out);
                chosen.pop();
            }
        }
    }

    /// Set-decrease (`e_i \ X_{assign[i]}`) or set-increase (`e_i ∪ X_{assign[i]}`).
    /// `assign[i] = None` leaves hyperedge `i` alone. The ground set is kept, so a
    /// decrease must still cover it, and must change at least one hyperedge.
    pub fn set_adjust(&self, x: &[Set], assign: &[Option<usize>], mode: Adjust) -> Result<Hypergraph> {
        if assign.len() != self.size() {
            return invalid(format!("{} assignments for {} hyperedges", assign.len(), self.size()));
        }
        if let Some(j) = assign.iter().flatten().find(|&&j| j >= x.len()) {
            return invalid(format!("assignment names set {j} but only {} are given", x.len()));
        }
        let out: Vec<Set> = self
            .edges
            .iter()
            .zip(assign)
            .map(|(e, a)| match (a, mode) {
                (None, _) => e.clone(),
                (Some(j), Adjust::Decrease) => e - &x[*j],
                (Some(j), Adjust::Increase) => e | &x[*j],
            })
            .collect();
        if mode == Adjust::Decrease && out == self.edges {
            return precondition("set-decrease changed no hyperedge");
        }
        let ground = match mode {
            Adjust::Decrease => self.ground.clone(),
            Adjust::Increase => out.iter().flatten().copied().collect(),
        };
        Hypergraph::validate(ground, out).map_err(|e| match e {
            Error::InvalidInput(m) => Error::Precondition(format!("the family is not decreasing this way: {m}")),
            other => other,
        })
    }

    /// Hyperedges replaced by their complements in Λ. The result lives on the
    /// union of the complements.
    pub fn adjacent_hypergraph(&self) -> Result<Hypergraph> {
        if let Some(i) = self.edges.iter().position(|e| *e == self.ground) {
            return invalid(format!("hyperedge {i} is the whole ground set, its complement is empty"));
        }
        Hypergraph::new(self.edges.iter().map(|e| &self.ground - e).collect())
    }
}

/// Set-adjust direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Adjust {
    Decrease,
    Increase,
}

/// Ears, isolated elements and irreducibility at a glance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structure {
    pub ears: Vec<usize>,
    pub isolated: Vec<u32>,
    pub irreducible: bool,
}

/// Union of grounds and of hyperedge families; repeated hyperedges merge.
pub fn coincide_hypergraphs(h1: &Hypergraph, h2: &Hypergraph) -> Hypergraph {
    let edges: BTreeSet<Set> = h1.edges.iter().chain(&h2.edges).cloned().collect();
    Hypergraph::new(edges.into_iter().collect()).expect("union of valid hypergraphs is valid")
}

/// Intersected-graph of a family in the given order (no sorting), so callers
/// can build it from different orderings.
pub fn intersected_graph_of(family: &[Set]) -> (Graph, SetColoring) {
    let n = family.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if !family[i].is_disjoint(&family[j]) {
                g.add_edge(i, j).expect("fresh edge");
            }
        }
    }
    let edges = g.edges().iter().map(|&(u, v)| &family[u] & &family[v]).collect();
    (g, SetColoring::total(family.to_vec(), edges))
}

/// Graham reduction of an arbitrary family.
pub fn graham_reduction(family: &[Set]) -> Vec<Set> {
    let mut cur: Vec<Set> = family.to_vec();
    loop {
        let before = cur.clone();
        let mut deg: BTreeMap<u32, usize> = BTreeMap::new();
        for x in cur.iter().flatten() {
            *deg.entry(*x).or_insert(0) += 1;
        }
        for e in &mut cur {
            e.retain(|x| deg[x] > 1);
        }
        cur.retain(|e| !e.is_empty());
        let mut i = 0;
        while i < cur.len() {
            let inside = (0..cur.len()).any(|j| j != i && cur[i].is_subset(&cur[j]));
            if inside {
                cur.remove(i);
            } else {
                i += 1;
            }
        }
        if cur == before {
            return cur;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_family() -> Hypergraph {
        Hypergraph::new(vec![
            vec![1, 2, 6, 7, 9, 11, 12, 15],
            vec![2, 3, 5, 6, 7, 10, 11, 13],
            vec![4, 5, 6, 8, 9, 10, 11, 12],
            vec![7, 8, 9, 10, 11, 13, 14, 15],
        ])
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(Hypergraph::new(vec![vec![1, 2], vec![2, 3]]).is_ok());
        assert!(Hypergraph::new(vec![vec![1, 2], vec![]]).is_err());
        let dup = Hypergraph::new(vec![vec![1, 2], vec![2, 1]]).unwrap_err().to_string();
        assert!(dup.contains("duplicates"), "{dup}");
        assert!(Hypergraph::validate(crate::set([1, 2, 3]), vec![crate::set([1, 2])]).is_err());
    }

    #[test]
    fn k4_family_basics() {
        let h = k4_family();
        assert_eq!(h.uniformity(), Some(8));
        let (g, sc) = h.intersected_graph();
        assert_eq!((g.order(), g.size()), (4, 6));
        assert!(sc.edge_sets(&g).iter().all(|s| s.len() == 4));
        assert_eq!(h.hyperedge_degrees(), vec![3, 3, 3, 3]);
        assert_eq!(h.hyperedge_connectivity().unwrap().0, 3);
        assert_eq!(h.hyperedge_chromatic_index().unwrap(), 4);
        let adj = h.adjacent_hypergraph().unwrap();
        assert_eq!(adj.uniformity(), Some(7));
        assert!(adj.edges().contains(&crate::set([3, 4, 5, 8, 10, 13, 14])));
        let d = h.dual().unwrap();
        assert!(d.edges().iter().all(|x| !x.is_empty()));
        assert_eq!(d.vertex_degrees().values().copied().collect::<Vec<_>>(), vec![8; 4]);
    }

    #[test]
    fn graham_and_ears() {
        let e2 = Hypergraph::new(vec![
            vec![0, 5],
            vec![1, 5],
            vec![2, 5],
            vec![2],
            vec![2, 6],
            vec![2, 7],
            vec![2, 8],
            vec![3, 8],
            vec![3, 9],
            vec![2, 11],
            vec![4, 11],
            vec![4, 10],
        ])
        .unwrap();
        assert!(e2.graham_reduction().is_empty());
        let ears: Vec<Set> = e2.ears().iter().map(|&i| e2.edges()[i].clone()).collect();
        for want in [[0, 5], [1, 5], [2, 6], [2, 7], [3, 9], [4, 10]] {
            assert!(ears.contains(&crate::set(want)), "{want:?}");
        }
        let two = Hypergraph::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(two.graham_reduction().is_empty());
        assert_eq!(two.ears(), vec![0, 1]);
        let cyc = Hypergraph::new(vec![vec![1, 2], vec![2, 3], vec![3, 1]]).unwrap();
        let red = cyc.graham_reduction();
        assert_eq!(red.len(), 3);
        assert_eq!(graham_reduction(&red), red);
    }

    #[test]
    fn matchings() {
        let h = Hypergraph::new(vec![vec![1], vec![2], vec![1, 2]]).unwrap();
        assert_eq!(h.perfect_hypermatchings().unwrap().len(), 2);
    }

    #[test]
    fn hypervertex_coloring() {
        let h = Hypergraph::new(vec![vec![1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(h.hypervertex_chromatic().unwrap(), 2);
        let single = Hypergraph::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(single.hypervertex_chromatic().unwrap(), 1);
    }

    #[test]
    fn adjust_round_trip() {
        let h = Hypergraph::new(vec![vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        let x = vec![crate::set([1])];
        let assign = vec![Some(0), None, None];
        assert!(h.set_adjust(&x, &assign, Adjust::Decrease).is_err(), "1 would leave the ground");
        let x = vec![crate::set([2])];
        let down = h.set_adjust(&x, &assign, Adjust::Decrease).unwrap();
        assert_eq!(down.edges()[0], crate::set([1]));
        let up = down.set_adjust(&x, &[Some(0), None, None], Adjust::Increase).unwrap();
        assert_eq!(up, h);
        let empty = vec![crate::set([1, 2])];
        assert!(h.set_adjust(&empty, &[Some(0), None, None], Adjust::Decrease).is_err());
    }

    #[test]
    fn hyper_total() {
        let h = Hypergraph::new(vec![vec![1, 2], vec![2, 3], vec![3, 1]]).unwrap();
        let vc: BTreeMap<u32, u32> = [(1, 1), (2, 2), (3, 3)].into();
        let (r, bound) = h.verify_hyper_total(&[1, 2, 3], &vc, 1, 3).unwrap();
        assert!(r.holds() && bound);
        let (r, _) = h.verify_hyper_total(&[1, 1, 3], &vc, 1, 3).unwrap();
        assert!(!r.passed("hyperedge-proper"));
    }
}

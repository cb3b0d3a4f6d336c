//! Every-zero graphic groups: `M` shifted copies of one colored graph, where any
//! element may serve as the zero of `G_i ⊕_k G_j = G_{i+j-k}`.
//!
//! Elements are indexed `1..=M`; element `i` carries the base colors shifted by
//! `+i (mod M)`, so every stored value lies in `[0, M-1]`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{cap, invalid, Error, Result};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::setcolor::{verify_intersected, ConstraintSet, SetColoring};
use crate::{Report, Set};

/// Largest modulus for the exhaustive axiom check.
pub const AXIOM_CAP: usize = 64;

/// The base coloring, which also fixes the flavor of the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "flavor", content = "coloring", rename_all = "kebab-case")]
pub enum GroupBase {
    /// Vertex labels are shifted; edge labels stay induced by `|f(x) - f(y)|`.
    Labeling(Labeling),
    /// Vertex and edge labels are both shifted.
    Total(Labeling),
    /// Every element of every vertex and edge set is shifted.
    SetColored(SetColoring),
}

/// What a group is built from; this is also its file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub graph: Graph,
    pub base: GroupBase,
    /// Defaults per flavor: `q`, `p+q`, and the largest color of the base sets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphicGroup {
    pub spec: GroupSpec,
    pub modulus: usize,
    /// How many values each vertex, then each edge, contributes to an element.
    /// Only meaningful for the set flavor.
    shape: Vec<usize>,
    /// `elements[i-1]` holds the flat colors of element `i`.
    pub elements: Vec<Vec<i64>>,
}

/// Flat base colors, per-item value counts, and the default modulus.
fn flatten(g: &Graph, base: &GroupBase) -> Result<(Vec<i64>, Vec<usize>, usize)> {
    let (p, q) = (g.order(), g.size());
    let check_vertices = |f: &Labeling| {
        if f.vertex.len() != p {
            return invalid(format!("{} vertex labels for {p} vertices", f.vertex.len()));
        }
        if f.vertex.iter().any(|&x| x < 0) {
            return invalid("labels must be non-negative");
        }
        Ok(())
    };
    Ok(match base {
        GroupBase::Labeling(f) => {
            check_vertices(f)?;
            (f.vertex.clone(), vec![1; p], q)
        }
        GroupBase::Total(f) => {
            check_vertices(f)?;
            let ev = f.edge.clone().ok_or_else(|| Error::InvalidInput("total flavor needs edge labels".into()))?;
            if ev.len() != q || ev.iter().any(|&x| x < 0) {
                return invalid("edge labels must be one non-negative value per edge");
            }
            let mut flat = f.vertex.clone();
            flat.extend(ev);
            (flat, vec![1; p + q], p + q)
        }
        GroupBase::SetColored(sc) => {
            sc.check_shape(g)?;
            let es = sc.edge_sets(g);
            let items: Vec<&Set> = sc.vertex.iter().chain(&es).collect();
            let flat: Vec<i64> = items.iter().flat_map(|s| s.iter().map(|&x| x as i64)).collect();
            let m = sc.ground().iter().chain(es.iter().flatten()).copied().max().unwrap_or(0) as usize;
            (flat, items.iter().map(|s| s.len()).collect(), m)
        }
    })
}

impl GraphicGroup {
    pub fn build(spec: GroupSpec) -> Result<Self> {
        let (flat, shape, default_m) = flatten(&spec.graph, &spec.base)?;
        let modulus = spec.modulus.unwrap_or(default_m);
        if modulus == 0 {
            return invalid("modulus must be positive");
        }
        let m = modulus as i64;
        let elements = (1..=m).map(|i| flat.iter().map(|&x| (x + i).rem_euclid(m)).collect()).collect();
        Ok(Self { spec, modulus, shape, elements })
    }

    pub fn len(&self) -> usize {
        self.modulus
    }

    pub fn is_empty(&self) -> bool {
        self.modulus == 0
    }

    fn index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.modulus {
            return invalid(format!("element index {i} outside [1,{}]", self.modulus));
        }
        Ok(i - 1)
    }

    /// `λ = i + j - k (mod M)`, represented in `[1, M]`.
    pub fn add(&self, i: usize, j: usize, k: usize) -> Result<usize> {
        for x in [i, j, k] {
            self.index(x)?;
        }
        let m = self.modulus as i64;
        Ok(((i as i64 + j as i64 - k as i64 - 1).rem_euclid(m) + 1) as usize)
    }

    /// The element `i'` with `i ⊕_k i' = k`.
    pub fn inverse(&self, i: usize, k: usize) -> Result<usize> {
        self.index(i)?;
        self.index(k)?;
        let m = self.modulus as i64;
        Ok(((2 * k as i64 - i as i64 - 1).rem_euclid(m) + 1) as usize)
    }

    /// Colors of `G_i + G_j - G_k`, computed value by value.
    pub fn combine(&self, i: usize, j: usize, k: usize) -> Result<Vec<i64>> {
        let (a, b, c) = (&self.elements[self.index(i)?], &self.elements[self.index(j)?], &self.elements[self.index(k)?]);
        let m = self.modulus as i64;
        Ok(a.iter().zip(b).zip(c).map(|((x, y), z)| (x + y - z).rem_euclid(m)).collect())
    }

    /// Element `i` as a labeling (labeling and total flavors).
    pub fn labeling(&self, i: usize) -> Result<Labeling> {
        let flat = &self.elements[self.index(i)?];
        let p = self.spec.graph.order();
        Ok(match &self.spec.base {
            GroupBase::Labeling(_) => Labeling::vertices(flat.clone()),
            GroupBase::Total(_) => Labeling::total(flat[..p].to_vec(), flat[p..].to_vec()),
            GroupBase::SetColored(_) => return invalid("set-colored group elements are set-colorings"),
        })
    }

    /// Element `i` as a set-coloring (set flavor).
    pub fn set_coloring(&self, i: usize) -> Result<SetColoring> {
        if !matches!(self.spec.base, GroupBase::SetColored(_)) {
            return invalid("only set-colored groups have set-coloring elements");
        }
        let flat = &self.elements[self.index(i)?];
        let mut items = vec![];
        let mut at = 0;
        for &n in &self.shape {
            items.push(flat[at..at + n].iter().map(|&x| x as u32).collect::<Set>());
            at += n;
        }
        let p = self.spec.graph.order();
        let edge = items.split_off(p);
        Ok(SetColoring::total(items, edge))
    }

    /// Exhaustive check of zero, uniqueness, closure, inverse, associativity
    /// and commutativity under every choice of zero, on the stored element data.
    pub fn verify_axioms(&self) -> Result<Report> {
        let m = self.modulus;
        cap("group modulus", AXIOM_CAP, m)?;
        let mut lookup: HashMap<&[i64], Vec<usize>> = HashMap::new();
        for (i, e) in self.elements.iter().enumerate() {
            lookup.entry(e.as_slice()).or_default().push(i + 1);
        }
        let mut fails: [Option<String>; 6] = Default::default();
        let mut note = |slot: usize, msg: String| {
            fails[slot].get_or_insert(msg);
        };
        for k in 1..=m {
            // table[i][j] = the element equal to G_i + G_j - G_k, if exactly one.
            let mut table = vec![vec![None; m + 1]; m + 1];
            for i in 1..=m {
                for j in 1..=m {
                    let data = self.combine(i, j, k)?;
                    match lookup.get(data.as_slice()).map(|v| v.as_slice()) {
                        None => note(2, format!("G_{i} ⊕_{k} G_{j} is not an element")),
                        Some([one]) => {
                            let want = self.add(i, j, k)?;
                            if *one != want {
                                note(1, format!("G_{i} ⊕_{k} G_{j} is G_{one}, expected G_{want}"));
                            }
                            table[i][j] = Some(*one);
                        }
                        Some(many) => note(1, format!("G_{i} ⊕_{k} G_{j} matches elements {many:?}")),
                    }
                }
            }
            for i in 1..=m {
                if table[i][k] != Some(i) {
                    note(0, format!("G_{i} ⊕_{k} G_{k} is not G_{i}"));
                }
                let inv = self.inverse(i, k)?;
                if table[i][inv] != Some(k) {
                    note(3, format!("G_{inv} is not the inverse of G_{i} under zero {k}"));
                }
                for j in 1..=m {
                    if table[i][j] != table[j][i] {
                        note(5, format!("G_{i} and G_{j} do not commute under zero {k}"));
                    }
                    for r in 1..=m {
                        let left = table[i][j].and_then(|x| table[x][r]);
                        let right = table[j][r].and_then(|x| table[i][x]);
                        if left.is_none() || left != right {
                            note(4, format!("(G_{i} ⊕ G_{j}) ⊕ G_{r} differs from G_{i} ⊕ (G_{j} ⊕ G_{r}) under zero {k}"));
                        }
                    }
                }
            }
        }
        let mut report = Report::new();
        for (name, f) in ["zero", "uniqueness", "closure", "inverse", "associative", "commutative"].iter().zip(fails) {
            report.check(*name, f);
        }
        Ok(report)
    }

    /// For set-colored groups, whether every element still passes the
    /// intersected-graph check (c0); one check per element.
    pub fn verify_elements_intersected(&self) -> Result<Report> {
        let mut r = Report::new();
        for i in 1..=self.modulus {
            let v = verify_intersected(&self.spec.graph, &self.set_coloring(i)?, &ConstraintSet::c0())?;
            r.check(format!("element-{i}"), (!v.holds()).then(|| v.report.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(",")));
        }
        Ok(r)
    }
}

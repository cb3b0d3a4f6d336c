//! Topcode-matrices: 3×q arrays whose columns are (tail color, edge color,
//! head color) of a colored graph, and the number-based strings read off them.
//!
//! One generic [`Grid`] carries every flavor: numbers, sets, strings, group
//! element indices, sub-matrices, or set families.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::groups::GraphicGroup;
use crate::labeling::Labeling;
use crate::setcolor::{verify_family, verify_intersected, ConstraintSet, FamilyColoring, FamilyMode, SetColoring};
use crate::Set;

/// Three rows of equal length; column `i` is `(x[i], e[i], y[i])`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid<T> {
    pub x: Vec<T>,
    pub e: Vec<T>,
    pub y: Vec<T>,
}

pub type TopcodeMatrix = Grid<u64>;
pub type SetTopcodeMatrix = Grid<Set>;
/// Entries are indices of group elements.
pub type GraphTopcodeMatrix = Grid<usize>;
/// Entries are the Topcode-matrices of group elements.
pub type MatrixTopcodeMatrix = Grid<TopcodeMatrix>;
/// Entries are families of sets.
pub type HyperTopcodeMatrix = Grid<BTreeSet<Set>>;

impl<T> Grid<T> {
    pub fn new(x: Vec<T>, e: Vec<T>, y: Vec<T>) -> Result<Self> {
        if x.len() != e.len() || e.len() != y.len() {
            return invalid(format!("rows have lengths {}, {}, {}", x.len(), e.len(), y.len()));
        }
        Ok(Self { x, e, y })
    }

    pub fn q(&self) -> usize {
        self.e.len()
    }

    pub fn columns(&self) -> impl Iterator<Item = (&T, &T, &T)> {
        self.x.iter().zip(&self.e).zip(&self.y).map(|((a, b), c)| (a, b, c))
    }

    /// Entries in column-major order `x1, e1, y1, x2, ...`.
    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.columns().flat_map(|(a, b, c)| [a, b, c])
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Grid<U> {
        Grid { x: self.x.iter().map(&mut f).collect(), e: self.e.iter().map(&mut f).collect(), y: self.y.iter().map(&mut f).collect() }
    }

    fn check_shape(&self) -> Result<()> {
        if self.x.len() != self.e.len() || self.e.len() != self.y.len() {
            return invalid("rows have different lengths");
        }
        Ok(())
    }
}

/// Validates an oriented edge order: every edge of `g` exactly once.
fn oriented(g: &Graph, order: Option<&[Edge]>) -> Result<Vec<Edge>> {
    let Some(order) = order else { return Ok(g.edges()) };
    let mut seen = BTreeSet::new();
    for &(x, y) in order {
        if x >= g.order() || y >= g.order() || !g.has_edge(x, y) {
            return invalid(format!("({x},{y}) is not an edge"));
        }
        if !seen.insert(edge(x, y)) {
            return invalid(format!("edge ({x},{y}) listed twice"));
        }
    }
    if seen.len() != g.size() {
        return invalid(format!("edge order lists {} of {} edges", seen.len(), g.size()));
    }
    Ok(order.to_vec())
}

/// Column `i` is `(f(x_i), f(x_i y_i), f(y_i))` over `order` (default: the
/// edges in lexicographic order, smaller end first). Edge colors fall back to
/// `|f(x) - f(y)|` when the labeling has none.
pub fn from_labeled_graph(g: &Graph, f: &Labeling, order: Option<&[Edge]>) -> Result<TopcodeMatrix> {
    if f.vertex.len() != g.order() {
        return invalid(format!("{} vertex labels for {} vertices", f.vertex.len(), g.order()));
    }
    if f.edge.as_ref().is_some_and(|e| e.len() != g.size()) {
        return invalid("edge labels do not match the edge count");
    }
    let u = |x: i64| u64::try_from(x).map_err(|_| Error::InvalidInput(format!("negative color {x}")));
    let ev: BTreeMap<Edge, i64> = g.edges().into_iter().zip(f.edge_values(g)).collect();
    let mut t = TopcodeMatrix::default();
    for (x, y) in oriented(g, order)? {
        t.x.push(u(f.vertex[x])?);
        t.e.push(u(ev[&edge(x, y)])?);
        t.y.push(u(f.vertex[y])?);
    }
    Ok(t)
}

/// How [`to_strings`] reads a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StringMode {
    /// One string, column-major.
    Canonical,
    /// `count` strings from seeded uniform permutations of the `3q` entries.
    Seeded { seed: u64, count: usize },
}

/// Number-based strings: entries in decimal joined by `sep` (empty by default).
pub fn to_strings(t: &TopcodeMatrix, mode: StringMode, sep: &str) -> Vec<String> {
    let join = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
    let entries: Vec<u64> = t.entries().copied().collect();
    match mode {
        StringMode::Canonical => vec![join(&entries)],
        StringMode::Seeded { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let mut v = entries.clone();
                    v.shuffle(&mut rng);
                    join(&v)
                })
                .collect()
        }
    }
}

/// How often each decimal digit occurs across all entries.
pub fn digit_multiset(t: &TopcodeMatrix) -> [usize; 10] {
    let mut out = [0; 10];
    for x in t.entries() {
        for d in x.to_string().bytes() {
            out[(d - b'0') as usize] += 1;
        }
    }
    out
}

/// Digit counts of a string; `None` if it holds a non-digit.
pub fn string_digits(s: &str) -> Option<[usize; 10]> {
    let mut out = [0; 10];
    for b in s.bytes() {
        if !b.is_ascii_digit() {
            return None;
        }
        out[(b - b'0') as usize] += 1;
    }
    Some(out)
}

/// Whether `s` could be read off `t`: same digits, same multiplicities.
pub fn is_reading(t: &TopcodeMatrix, s: &str) -> bool {
    string_digits(s) == Some(digit_multiset(t))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Orderings of the `3q` entries, `(3q)!`.
pub fn string_count(t: &TopcodeMatrix) -> BigUint {
    factorial(3 * t.q())
}

/// `M = ∏|A_i|! ∏|B_i|! ∏|C_i|!` (orderings inside the set entries) and the
/// total `(3q)! · M`.
pub fn set_string_count(s: &SetTopcodeMatrix) -> (BigUint, BigUint) {
    let m = s.entries().fold(BigUint::from(1u32), |acc, a| acc * factorial(a.len()));
    let total = factorial(3 * s.q()) * &m;
    (m, total)
}

/// Column `i` is `(F(x_i), F(x_i y_i), F(y_i))`; the coloring must pass the
/// intersected-graph check for `r`. Edge sets fall back to intersections.
pub fn from_set_colored_graph(g: &Graph, sc: &SetColoring, order: Option<&[Edge]>, r: &ConstraintSet) -> Result<SetTopcodeMatrix> {
    let v = verify_intersected(g, sc, r)?;
    if !v.holds() {
        return precondition(format!("coloring fails the intersected-graph check:\n{}", v.report));
    }
    let es: BTreeMap<Edge, Set> = g.edges().into_iter().zip(sc.edge_sets(g)).collect();
    let mut t = SetTopcodeMatrix::default();
    for (x, y) in oriented(g, order)? {
        t.x.push(sc.vertex[x].clone());
        t.e.push(es[&edge(x, y)].clone());
        t.y.push(sc.vertex[y].clone());
    }
    Ok(t)
}

/// Columns violating `F(e) ⊇ F(x) ∩ F(y) ≠ ∅`.
pub fn set_column_violations(s: &SetTopcodeMatrix) -> Vec<usize> {
    s.columns()
        .enumerate()
        .filter(|(_, (a, e, b))| {
            let c: Set = a.intersection(b).copied().collect();
            c.is_empty() || !c.is_subset(e)
        })
        .map(|(i, _)| i)
        .collect()
}

/// Multiset of columns, ignoring order: two set-colored graphs with equal
/// signatures have the same matrix up to column order.
pub fn column_signature<T: Ord + Clone>(t: &Grid<T>) -> Vec<(T, T, T)> {
    let mut v: Vec<(T, T, T)> = t.columns().map(|(a, b, c)| (a.clone(), b.clone(), c.clone())).collect();
    v.sort();
    v
}

/// Each set entry becomes a seeded permutation of its elements, written in
/// decimal and concatenated.
pub fn string_type(s: &SetTopcodeMatrix, seed: u64) -> Result<Grid<String>> {
    s.check_shape()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm = |a: &Set| {
        let mut v: Vec<u32> = a.iter().copied().collect();
        v.shuffle(&mut rng);
        v.iter().map(|x| x.to_string()).collect::<String>()
    };
    Ok(Grid { x: s.x.iter().map(&mut perm).collect(), e: s.e.iter().map(&mut perm).collect(), y: s.y.iter().map(&mut perm).collect() })
}

/// Graph-type matrix over `j`: vertices carry group elements, and each edge the
/// element `φ(x) ⊕_zero φ(y)`. A given edge assignment must agree with that law.
pub fn nested_graph(
    j: &Graph,
    group: &GraphicGroup,
    zero: usize,
    vertex: &[usize],
    edges: Option<&[usize]>,
) -> Result<GraphTopcodeMatrix> {
    if vertex.len() != j.order() {
        return invalid(format!("{} vertex elements for {} vertices", vertex.len(), j.order()));
    }
    let all = j.edges();
    if let Some(e) = edges {
        if e.len() != all.len() {
            return invalid(format!("{} edge elements for {} edges", e.len(), all.len()));
        }
    }
    let mut t = GraphTopcodeMatrix::default();
    for (i, &(x, y)) in all.iter().enumerate() {
        let lam = group.add(vertex[x], vertex[y], zero)?;
        if let Some(e) = edges {
            if e[i] != lam {
                return precondition(format!("edge ({x},{y}) carries G_{} but G_{} ⊕ G_{} = G_{lam}", e[i], vertex[x], vertex[y]));
            }
        }
        t.x.push(vertex[x]);
        t.e.push(lam);
        t.y.push(vertex[y]);
    }
    Ok(t)
}

/// Matrix-type matrix: every element index replaced by that element's own
/// Topcode-matrix (labeling and total groups).
pub fn nested_matrix(grid: &GraphTopcodeMatrix, group: &GraphicGroup) -> Result<MatrixTopcodeMatrix> {
    let mut memo: BTreeMap<usize, TopcodeMatrix> = BTreeMap::new();
    let mut get = |i: &usize| -> Result<TopcodeMatrix> {
        if let Some(t) = memo.get(i) {
            return Ok(t.clone());
        }
        let t = from_labeled_graph(&group.spec.graph, &group.labeling(*i)?, None)?;
        memo.insert(*i, t.clone());
        Ok(t)
    };
    Ok(Grid {
        x: grid.x.iter().map(&mut get).collect::<Result<_>>()?,
        e: grid.e.iter().map(&mut get).collect::<Result<_>>()?,
        y: grid.y.iter().map(&mut get).collect::<Result<_>>()?,
    })
}

/// Hypergraph-type matrix: vertices carry set families (a verified compound
/// coloring), edges the shared part of their ends' families.
pub fn nested_hypergraph(j: &Graph, fc: &FamilyColoring) -> Result<HyperTopcodeMatrix> {
    let r = verify_family(j, fc, FamilyMode::Compound)?;
    if !r.holds() {
        return precondition(format!("not a compound coloring:\n{r}"));
    }
    let mut t = HyperTopcodeMatrix::default();
    for (x, y) in j.edges() {
        t.x.push(fc.vertex[x].clone());
        t.e.push(fc.vertex[x].intersection(&fc.vertex[y]).cloned().collect());
        t.y.push(fc.vertex[y].clone());
    }
    Ok(t)
}

//! JSON documents for graphs, hypergraphs and Topcode-matrices.
//!
//! Every document is written in one canonical layout (sorted keys, one
//! top-level key per line, compact values, trailing newline), so saving a
//! loaded canonical file reproduces it byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{invalid, Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::hypergraph::Hypergraph;
use crate::labeling::Labeling;
use crate::setcolor::SetColoring;
use crate::topcode::TopcodeMatrix;
use crate::Set;

/// A graph with optional labels or sets. `edges` keeps the file's order and
/// orientation; `edge_labels` and `edge_sets` follow it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_labels: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_sets: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_sets: Option<Vec<Vec<u32>>>,
}

fn sorted_sets(field: &str, sets: &[Vec<u32>]) -> Result<()> {
    for (i, s) in sets.iter().enumerate() {
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!("{field}[{i}]: set {s:?} is not strictly ascending"));
        }
    }
    Ok(())
}

fn len_matches<T>(field: &str, v: &Option<Vec<T>>, want: usize) -> Result<()> {
    match v {
        Some(v) if v.len() != want => invalid(format!("{field}: {} entries, expected {want}", v.len())),
        _ => Ok(()),
    }
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            order: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            names: g.names().map(|n| n.to_vec()),
            ..Self::default()
        }
    }

    pub fn with_labeling(mut self, f: &Labeling, g: &Graph) -> Self {
        self.labels = Some(f.vertex.clone());
        if let Some(e) = &f.edge {
            let by_edge: BTreeMap<Edge, i64> = g.edges().into_iter().zip(e.iter().copied()).collect();
            self.edge_labels = Some(self.edges.iter().map(|&[u, v]| by_edge[&edge(u, v)]).collect());
        }
        self
    }

    pub fn with_coloring(mut self, sc: &SetColoring, g: &Graph) -> Self {
        self.vertex_sets = Some(sc.vertex.iter().map(|s| s.iter().copied().collect()).collect());
        if let Some(e) = &sc.edge {
            let by_edge: BTreeMap<Edge, &Set> = g.edges().into_iter().zip(e).collect();
            self.edge_sets = Some(self.edges.iter().map(|&[u, v]| by_edge[&edge(u, v)].iter().copied().collect()).collect());
        }
        self
    }

    /// Field-level checks; [`GraphDoc::graph`] does the structural ones.
    pub fn check(&self) -> Result<()> {
        for (i, &[u, v]) in self.edges.iter().enumerate() {
            if u >= self.order || v >= self.order {
                return invalid(format!("edges[{i}]: ({u},{v}) out of range for order {}", self.order));
            }
        }
        len_matches("names", &self.names, self.order)?;
        len_matches("labels", &self.labels, self.order)?;
        len_matches("edge_labels", &self.edge_labels, self.edges.len())?;
        len_matches("vertex_sets", &self.vertex_sets, self.order)?;
        len_matches("edge_sets", &self.edge_sets, self.edges.len())?;
        if self.edge_labels.is_some() && self.labels.is_none() {
            return invalid("edge_labels given without labels");
        }
        if self.edge_sets.is_some() && self.vertex_sets.is_none() {
            return invalid("edge_sets given without vertex_sets");
        }
        sorted_sets("vertex_sets", self.vertex_sets.as_deref().unwrap_or(&[]))?;
        sorted_sets("edge_sets", self.edge_sets.as_deref().unwrap_or(&[]))
    }

    pub fn graph(&self) -> Result<Graph> {
        self.check()?;
        let pairs: Vec<Edge> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edges(self.order, &pairs).map_err(|e| Error::InvalidInput(format!("edges: {e}")))?;
        match &self.names {
            Some(n) => g.with_names(n.clone()),
            None => Ok(g),
        }
    }

    /// The edges as written, oriented.
    pub fn oriented_edges(&self) -> Vec<Edge> {
        self.edges.iter().map(|&[u, v]| (u, v)).collect()
    }

    /// Realigns file-ordered edge data with `Graph::edges()`.
    fn realign<T: Clone>(&self, g: &Graph, data: &[T]) -> Vec<T> {
        let by_edge: BTreeMap<Edge, &T> = self.edges.iter().zip(data).map(|(&[u, v], x)| (edge(u, v), x)).collect();
        g.edges().iter().map(|e| by_edge[e].clone()).collect()
    }

    pub fn labeling(&self) -> Result<Labeling> {
        let g = self.graph()?;
        let vertex = self.labels.clone().ok_or_else(|| Error::InvalidInput("document has no labels".into()))?;
        Ok(Labeling { vertex, edge: self.edge_labels.as_ref().map(|e| self.realign(&g, e)) })
    }

    pub fn set_coloring(&self) -> Result<SetColoring> {
        let g = self.graph()?;
        let to_sets = |v: &[Vec<u32>]| v.iter().map(|s| s.iter().copied().collect()).collect::<Vec<Set>>();
        let vertex = self.vertex_sets.as_deref().ok_or_else(|| Error::InvalidInput("document has no vertex_sets".into()))?;
        Ok(SetColoring { vertex: to_sets(vertex), edge: self.edge_sets.as_ref().map(|e| to_sets(&self.realign(&g, e))) })
    }
}

/// A hypergraph in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDoc {
    pub ground: Vec<u32>,
    pub edges: Vec<Vec<u32>>,
}

impl HypergraphDoc {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Self {
            ground: h.ground().iter().copied().collect(),
            edges: h.edges().iter().map(|e| e.iter().copied().collect()).collect(),
        }
    }

    pub fn hypergraph(&self) -> Result<Hypergraph> {
        sorted_sets("ground", std::slice::from_ref(&self.ground))?;
        sorted_sets("edges", &self.edges)?;
        Hypergraph::validate(self.ground.iter().copied().collect(), self.edges.iter().map(|e| e.iter().copied().collect()).collect())
    }
}

/// Canonical text of any serializable document.
pub fn to_canonical<T: Serialize>(doc: &T) -> Result<String> {
    let v = serde_json::to_value(doc).map_err(|e| Error::Parse(e.to_string()))?;
    let compact = |v: &Value| serde_json::to_string(v).expect("values always serialize");
    Ok(match &v {
        Value::Object(map) if !map.is_empty() => {
            let lines: Vec<String> = map.iter().map(|(k, v)| format!("  {}: {}", compact(&Value::String(k.clone())), compact(v))).collect();
            format!("{{\n{}\n}}\n", lines.join(",\n"))
        }
        other => format!("{}\n", compact(other)),
    })
}

/// Parses with line and column diagnostics.
pub fn from_str<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{origin}: {e}")))
}

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    from_str(&text, &path.display().to_string())
}

pub fn save<T: Serialize>(path: &Path, doc: &T) -> Result<()> {
    std::fs::write(path, to_canonical(doc)?)?;
    Ok(())
}

fn tagged(path: &Path, e: Error) -> Error {
    match e {
        Error::InvalidInput(m) => Error::InvalidInput(format!("{}: {m}", path.display())),
        other => other,
    }
}

/// Loads and validates a `*.graph.json`.
pub fn load_graph(path: &Path) -> Result<(GraphDoc, Graph)> {
    let doc: GraphDoc = read(path)?;
    let g = doc.graph().map_err(|e| tagged(path, e))?;
    Ok((doc, g))
}

/// Loads and validates a `*.hyper.json`.
pub fn load_hypergraph(path: &Path) -> Result<(HypergraphDoc, Hypergraph)> {
    let doc: HypergraphDoc = read(path)?;
    let h = doc.hypergraph().map_err(|e| tagged(path, e))?;
    Ok((doc, h))
}

/// Loads and validates a `*.topcode.json`.
pub fn load_topcode(path: &Path) -> Result<TopcodeMatrix> {
    let t: TopcodeMatrix = read(path)?;
    TopcodeMatrix::new(t.x, t.e, t.y).map_err(|e| tagged(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let g = Graph::cycle(4);
        let f = Labeling::total(vec![0, 4, 2, 3], vec![4, 3, 2, 1]);
        let doc = GraphDoc::from_graph(&g).with_labeling(&f, &g);
        let text = to_canonical(&doc).unwrap();
        let back: GraphDoc = from_str(&text, "mem").unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_canonical(&back).unwrap(), text);
        assert_eq!(back.labeling().unwrap(), f);
    }

    #[test]
    fn file_order_edges_realign() {
        let doc: GraphDoc = from_str(r#"{"order":3,"edges":[[2,1],[0,1]],"labels":[0,2,1],"edge_labels":[1,2]}"#, "mem").unwrap();
        let f = doc.labeling().unwrap();
        assert_eq!(f.edge, Some(vec![2, 1]));
        assert_eq!(doc.oriented_edges(), vec![(2, 1), (0, 1)]);
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let e = from_str::<GraphDoc>("{\"order\": 2,\n\"edgez\": []}", "g.json").unwrap_err().to_string();
        assert!(e.contains("edgez") && e.contains("line 2"), "{e}");
        let doc: GraphDoc = from_str(r#"{"order":2,"edges":[[0,5]]}"#, "mem").unwrap();
        assert!(doc.graph().unwrap_err().to_string().contains("edges[0]"));
        let h: HypergraphDoc = from_str(r#"{"ground":[1,2,3],"edges":[[1,2],[2,3],[1,2]]}"#, "mem").unwrap();
        let e = h.hypergraph().unwrap_err().to_string();
        assert!(e.contains("hyperedge 2 duplicates hyperedge 0"), "{e}");
        let unsorted: HypergraphDoc = from_str(r#"{"ground":[1,2],"edges":[[2,1]]}"#, "mem").unwrap();
        assert!(unsorted.hypergraph().is_err());
    }
}

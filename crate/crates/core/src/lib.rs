//! Set-colorings of graphs and the hypergraphs they encode.
//!
//! A set-colored graph assigns finite integer sets to vertices and edges. When
//! every edge carries a superset of the intersection of its end sets, the vertex
//! sets form the hyperedges of a hypergraph and the graph is (a subgraph of) its
//! intersected-graph. This crate builds those colorings from classical number
//! labelings, verifies every class of coloring it knows about, and derives the
//! usual artifacts from them: Topcode-matrices and number-based strings,
//! every-zero graphic groups, graph lattices and a preferential-attachment
//! hypernetwork simulator.
//!
//! Every search is exact and capped. Hitting a cap is reported as
//! [`Error::CapExceeded`], never as "no solution".
//!
//! ```
//! use hypercode::hypergraph::Hypergraph;
//!
//! let h = Hypergraph::new(vec![vec![1, 2], vec![2, 3], vec![3, 1]]).unwrap();
//! let (g, _coloring) = h.intersected_graph();
//! assert_eq!(g.size(), 3);
//! ```

pub mod cli;
pub mod codec;
mod error;
pub mod graph;
pub mod groups;
pub mod hypergraph;
pub mod labeling;
pub mod lattice;
mod matching;
pub mod netsim;
mod report;
pub mod setcolor;
pub mod topcode;

pub use error::{Error, Result};
pub use report::{Check, Report};

/// A finite set of non-negative integers, kept sorted.
pub type Set = std::collections::BTreeSet<u32>;

/// Builds a [`Set`] from anything iterable.
pub fn set<I: IntoIterator<Item = u32>>(items: I) -> Set {
    items.into_iter().collect()
}

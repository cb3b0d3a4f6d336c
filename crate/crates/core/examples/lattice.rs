//! Graph lattices: one operation at a chosen site, then a seeded word.

use hypercode::graph::Graph;
use hypercode::lattice::{apply_op, sample, sites, Colored, LatticeOp, LatticeWord};

fn main() -> hypercode::Result<()> {
    let k4 = Colored::plain(Graph::complete(4));
    let c4 = Colored::plain(Graph::cycle(4));

    let legal = sites(&k4.graph, &c4.graph, LatticeOp::O2)?;
    println!("{} legal O2 sites", legal.len());
    let joined = apply_op(&k4, &c4, LatticeOp::O2, &legal[0])?;
    println!("O2 at {:?}: order {}, size {}", legal[0], joined.graph.order(), joined.graph.size());

    let word = LatticeWord { counts: vec![2, 1], ops: vec![LatticeOp::O1, LatticeOp::VertexCoincide], seed: 11 };
    let s = sample(&[k4, c4], &word)?;
    println!("word result: order {}, size {}", s.result.graph.order(), s.result.graph.size());
    for step in &s.trace {
        println!("  {:?} with base {} at {:?}", step.op, step.base, step.site);
    }
    Ok(())
}

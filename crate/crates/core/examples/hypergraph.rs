//! Hypergraph structure: ears, Graham reduction, duals and intersected graphs.

use hypercode::hypergraph::{Adjust, Hypergraph};
use hypercode::set;

fn main() -> hypercode::Result<()> {
    let h = Hypergraph::new(vec![vec![1, 2, 3], vec![3, 4], vec![4, 5, 6], vec![6, 7], vec![7, 8], vec![1, 8]])?;
    println!("order {}, size {}, uniform {:?}", h.order(), h.size(), h.uniformity());
    println!("ears {:?}", h.ears());
    println!("Graham reduction {:?}", h.graham_reduction());

    let (g, sc) = h.intersected_graph();
    println!("intersected graph edges {:?}", g.edges());
    println!("edge sets {:?}", sc.edge_sets(&g));

    println!("dual {:?}", h.dual()?.edges());
    println!("perfect hypermatchings {:?}", h.perfect_hypermatchings()?);
    println!("hyperedge connectivity {:?}", h.hyperedge_connectivity()?);

    // Remove element 3 from the first hyperedge.
    let smaller = h.set_adjust(&[set([3])], &[Some(0), None, None, None, None, None], Adjust::Decrease)?;
    println!("after decrease {:?}", smaller.edges());
    Ok(())
}

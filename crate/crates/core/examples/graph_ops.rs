//! Split and coincide operations, degree sequences and edge-hamiltonicity.

use std::collections::BTreeSet;

use hypercode::graph::{coincide_vertices, degree_sequence, is_edge_hamiltonian, is_graphical, split_vertex, Graph};

fn main() -> hypercode::Result<()> {
    let k4 = Graph::complete(4);
    println!("K4: order {}, size {}, degrees {:?}", k4.order(), k4.size(), degree_sequence(&k4));

    // Vertex 0 keeps neighbour 1; its other two edges move to a new vertex.
    let split = split_vertex(&k4, 0, &BTreeSet::from([1]))?;
    println!("split 0 keeping {{1}}: order {}, edges {:?}", split.order(), split.edges());

    let (merged, map) = coincide_vertices(&split, 0, split.order() - 1)?;
    println!("coincide back: size {}, map {:?}", merged.size(), map);

    for d in [vec![3, 3, 3, 3], vec![4, 1, 1, 1], vec![2, 2, 2]] {
        println!("{d:?} graphical: {}", is_graphical(&d));
    }

    for (name, g) in [("C5", Graph::cycle(5)), ("K4", k4), ("K2,3", Graph::complete_bipartite(2, 3))] {
        let v = is_edge_hamiltonian(&g)?;
        println!("{name} edge-hamiltonian: {} (uncovered {:?})", v.holds, v.uncovered);
    }
    Ok(())
}

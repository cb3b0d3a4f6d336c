//! Set-colorings of trees and their verification.

use hypercode::graph::Graph;
use hypercode::labeling::{search_labeling, LabelingKind};
use hypercode::setcolor::{
    chi_set_prime, construct_adjacent_edge_intersected, construct_for_tree, pscs, verify_intersected,
    verify_intersection_total, vset_coloring, AdjacentStrategy, ConstraintSet, IntersectionKind,
};

fn main() -> hypercode::Result<()> {
    let mut t = Graph::path(4);
    let leaf = t.add_vertex();
    t.add_edge(1, leaf)?;

    for kind in [IntersectionKind::Graceful, IntersectionKind::OddGraceful, IntersectionKind::Rainbow] {
        let sc = construct_for_tree(&t, kind)?;
        let v = verify_intersection_total(&t, &sc, kind)?;
        println!("{kind:?}: vertex sets {:?}, holds {}", sc.vertex, v.holds());
    }

    let f = search_labeling(&t, &LabelingKind::Graceful)?.expect("small trees are graceful");
    let sc = vset_coloring(&t, &f)?;
    let v = verify_intersected(&t, &sc, &ConstraintSet::c0())?;
    println!("VSET from graceful labels: {:?}, intersected {}", sc.vertex, v.holds());

    let out = pscs(&t, &f, 1, 1)?;
    println!("PSCS variant 1: {:?}", out.coloring.vertex);

    let adj = construct_adjacent_edge_intersected(&t, AdjacentStrategy::LeafPeeling)?;
    println!("adjacent edge-intersected edge sets {:?}", adj.edge_sets(&t));

    println!("chi'_set of K1,3: {}", chi_set_prime(&Graph::star(3))?);
    Ok(())
}

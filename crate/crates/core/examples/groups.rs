//! Every-zero graphic groups built from a labeled path.

use hypercode::graph::Graph;
use hypercode::groups::{GraphicGroup, GroupBase, GroupSpec};
use hypercode::labeling::Labeling;

fn main() -> hypercode::Result<()> {
    let p3 = Graph::path(3);
    let spec = GroupSpec { graph: p3, base: GroupBase::Labeling(Labeling::vertices(vec![0, 2, 1])), modulus: Some(5) };
    let g = GraphicGroup::build(spec)?;
    println!("{} elements", g.len());

    // With G_2 as the zero, G_3 + G_4 = G_{3+4-2}.
    let sum = g.add(3, 4, 2)?;
    println!("G_3 + G_4 (zero G_2) = G_{sum}, colors {:?}", g.labeling(sum)?.vertex);
    println!("inverse of G_3 (zero G_2) = G_{}", g.inverse(3, 2)?);

    print!("{}", g.verify_axioms()?);
    Ok(())
}

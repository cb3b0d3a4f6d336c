//! Topcode-matrices, their number-based strings and how many there are.

use hypercode::graph::Graph;
use hypercode::labeling::{search_labeling, LabelingKind};
use hypercode::topcode::{from_labeled_graph, is_reading, string_count, to_strings, StringMode};

fn main() -> hypercode::Result<()> {
    let t = Graph::star(3);
    let f = search_labeling(&t, &LabelingKind::Graceful)?.expect("stars are graceful");
    let m = from_labeled_graph(&t, &f, None)?;
    println!("X = {:?}\nE = {:?}\nY = {:?}", m.x, m.e, m.y);

    let canonical = &to_strings(&m, StringMode::Canonical, "")[0];
    println!("canonical string {canonical}");
    for s in to_strings(&m, StringMode::Seeded { seed: 7, count: 3 }, "") {
        println!("seeded {s}, a reading: {}", is_reading(&m, &s));
    }
    println!("distinct entry orders: {}", string_count(&m));
    Ok(())
}

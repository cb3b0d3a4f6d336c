//! Checking and searching graceful-type labelings.

use hypercode::graph::Graph;
use hypercode::labeling::{search_labeling, tree_kd_total, verify_labeling, LabelingKind};

fn main() -> hypercode::Result<()> {
    let path = Graph::path(5);
    for kind in [LabelingKind::Graceful, LabelingKind::OddGraceful, LabelingKind::SetOrderedGraceful] {
        let f = search_labeling(&path, &kind)?.expect("paths admit every graceful kind");
        let report = verify_labeling(&path, &f, &kind)?;
        println!("{kind:?}: vertex labels {:?}, edge labels {:?}, holds {}", f.vertex, f.edge_values(&path), report.holds());
    }

    // A (k,d)-total labeling built directly on a star.
    let star = Graph::star(4);
    let f = tree_kd_total(&star, 3, 2)?;
    println!("(3,2)-total on K1,4: {f:?}");

    // A failing check names the condition that broke.
    let bad = hypercode::labeling::Labeling::vertices(vec![0, 1, 2, 3, 4]);
    let report = verify_labeling(&path, &bad, &LabelingKind::Graceful)?;
    print!("{report}");
    Ok(())
}

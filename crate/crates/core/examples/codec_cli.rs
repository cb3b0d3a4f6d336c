//! Writing a document, then driving the command line from code.

use hypercode::codec::{self, GraphDoc};
use hypercode::graph::Graph;
use hypercode::labeling::Labeling;

fn main() -> hypercode::Result<()> {
    let g = Graph::path(3);
    let doc = GraphDoc::from_graph(&g).with_labeling(&Labeling::vertices(vec![0, 2, 1]), &g);
    let path = std::env::temp_dir().join("p3-example.graph.json");
    codec::save(&path, &doc)?;
    print!("{}", codec::to_canonical(&doc)?);

    let argv = |rest: &[&str]| std::iter::once("hypercode").chain(rest.iter().copied()).map(String::from).collect();
    let file = path.to_str().unwrap();
    for args in [
        vec!["verify", "labeling", "--in", file, "--kind", "graceful", "--format", "text"],
        vec!["verify", "labeling", "--in", file, "--kind", "odd-graceful", "--format", "text"],
        vec!["topcode", "strings", "--in", file],
    ] {
        let code = hypercode::cli::dispatch(argv(&args));
        println!("exit {code}");
    }
    std::fs::remove_file(path)?;
    Ok(())
}

#![allow(dead_code)]

use std::path::PathBuf;

use hypercode::graph::Graph;
use hypercode::Set;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// Uniform labeled tree from a random Prüfer sequence.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut g = Graph::new(n);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, c).unwrap();
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// `m` distinct non-empty subsets of `1..=ground`, covering their union.
pub fn random_family(rng: &mut ChaCha8Rng, m: usize, ground: u32) -> Vec<Set> {
    let g = ground as usize;
    let available = g + g * g.saturating_sub(1) / 2 + g * g.saturating_sub(1) * g.saturating_sub(2) / 6;
    assert!(m <= available, "{m} distinct sets of size at most 3 do not exist in 1..={ground}");
    let mut out: Vec<Set> = vec![];
    while out.len() < m {
        let size = rng.gen_range(1..=3.min(ground as usize));
        let mut pool: Vec<u32> = (1..=ground).collect();
        pool.shuffle(rng);
        let s: Set = pool[..size].iter().copied().collect();
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

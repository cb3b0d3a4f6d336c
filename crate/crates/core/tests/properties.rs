//! Invariants over randomly generated inputs.

mod common;

use common::{fixture, random_family, random_tree};
use hypercode::codec::{self, GraphDoc, HypergraphDoc};
use hypercode::graph::{degree_sequence, is_graphical, Graph};
use hypercode::groups::{GraphicGroup, GroupBase, GroupSpec};
use hypercode::hypergraph::{graham_reduction, intersected_graph_of};
use hypercode::labeling::Labeling;
use hypercode::netsim::{distributions, run, DistKind, SimConfig};
use hypercode::setcolor::{construct_for_tree, verify_intersected, verify_intersection_total, ConstraintSet, IntersectionKind};
use hypercode::topcode::{digit_multiset, from_labeled_graph, string_digits, to_strings, StringMode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn fixtures_round_trip_byte_for_byte() {
    let dir = fixture("");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_owned();
        let text = std::fs::read_to_string(&path).unwrap();
        let again = if name.ends_with(".graph.json") {
            codec::to_canonical(&codec::load_graph(&path).unwrap().0)
        } else if name.ends_with(".hyper.json") {
            codec::to_canonical(&codec::load_hypergraph(&path).unwrap().0)
        } else if name.ends_with(".topcode.json") {
            codec::to_canonical(&codec::load_topcode(&path).unwrap())
        } else {
            continue;
        };
        assert_eq!(again.unwrap(), text, "{name}");
        seen += 1;
    }
    assert!(seen >= 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_doc_round_trips(seed: u64, n in 1usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.4);
        let labels: Vec<i64> = (0..n).map(|_| rng.gen_range(0..50)).collect();
        let edge: Vec<i64> = (0..g.size()).map(|_| rng.gen_range(0..50)).collect();
        let f = Labeling::total(labels, edge);
        let doc = GraphDoc::from_graph(&g).with_labeling(&f, &g);
        let text = codec::to_canonical(&doc).unwrap();
        let back: GraphDoc = codec::from_str(&text, "mem").unwrap();
        prop_assert_eq!(&back.graph().unwrap(), &g);
        prop_assert_eq!(back.labeling().unwrap(), f);
        prop_assert_eq!(codec::to_canonical(&back).unwrap(), text);
    }

    #[test]
    fn hypergraph_doc_round_trips(seed: u64, m in 1usize..10, ground in 4u32..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let family = random_family(&mut rng, m, ground);
        let h = hypercode::hypergraph::Hypergraph::new(family).unwrap();
        let doc = HypergraphDoc::from_hypergraph(&h);
        let back: HypergraphDoc = codec::from_str(&codec::to_canonical(&doc).unwrap(), "mem").unwrap();
        prop_assert_eq!(back.hypergraph().unwrap(), h);
    }

    #[test]
    fn intersected_graph_joins_exactly_meeting_sets(seed: u64, m in 1usize..12, ground in 4u32..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let family = random_family(&mut rng, m, ground);
        let (g, sc) = intersected_graph_of(&family);
        prop_assert_eq!(g.order(), m);
        for i in 0..m {
            for j in i + 1..m {
                prop_assert_eq!(g.has_edge(i, j), !family[i].is_disjoint(&family[j]));
            }
        }
        let v = verify_intersected(&g, &sc, &ConstraintSet::c0()).unwrap();
        prop_assert!(v.holds() && v.is_intersected_graph);
    }

    #[test]
    fn graham_reduction_is_idempotent(seed: u64, m in 1usize..10, ground in 4u32..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let family = random_family(&mut rng, m, ground);
        let once = graham_reduction(&family);
        prop_assert_eq!(graham_reduction(&once), once);
    }

    #[test]
    fn degree_sequences_of_graphs_are_graphical(seed: u64, n in 1usize..15) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5);
        let mut d = degree_sequence(&g);
        prop_assert!(is_graphical(&d));
        d[0] += 1;
        prop_assert!(!is_graphical(&d), "odd degree sum");
    }

    #[test]
    fn topcode_strings_keep_the_digit_multiset(seed: u64, n in 2usize..12, count in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(&mut rng, n);
        let labels: Vec<i64> = (0..n).map(|_| rng.gen_range(0..200)).collect();
        let m = from_labeled_graph(&t, &Labeling::vertices(labels), None).unwrap();
        let want = digit_multiset(&m);
        for s in to_strings(&m, StringMode::Seeded { seed, count }, "") {
            prop_assert_eq!(string_digits(&s), Some(want));
        }
    }

    #[test]
    fn shifted_groups_satisfy_the_axioms(seed: u64, n in 2usize..7, modulus in 2usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(&mut rng, n);
        let vertex: Vec<i64> = (0..n).map(|_| rng.gen_range(0..modulus as i64)).collect();
        let edge: Vec<i64> = (0..t.size()).map(|_| rng.gen_range(0..modulus as i64)).collect();
        let spec = GroupSpec { graph: t, base: GroupBase::Total(Labeling::total(vertex, edge)), modulus: Some(modulus) };
        let g = GraphicGroup::build(spec).unwrap();
        prop_assert_eq!(g.len(), modulus);
        let r = g.verify_axioms().unwrap();
        prop_assert!(r.holds(), "{}", r);
    }

    #[test]
    fn tree_constructions_verify(seed: u64, n in 2usize..14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(&mut rng, n);
        for kind in [IntersectionKind::Graceful, IntersectionKind::OddGraceful, IntersectionKind::Rainbow] {
            let sc = construct_for_tree(&t, kind).unwrap();
            let v = verify_intersection_total(&t, &sc, kind).unwrap();
            prop_assert!(v.holds(), "{:?}: {}", kind, v.report);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn simulated_networks_keep_their_invariants(seed: u64, m in 1usize..4, steps in 5usize..120) {
        let (s, summary) = run(&SimConfig::new(m, steps, seed)).unwrap();
        prop_assert!(summary.degree_sum_always);
        prop_assert_eq!(s.v_net(), m + 1 + steps);
        prop_assert_eq!(s.e_net, m * (m + 1) / 2 + m * steps);
        let pk = distributions(&s, DistKind::Pk);
        let cum = distributions(&s, DistKind::Cum);
        let keys: Vec<usize> = cum.keys().copied().collect();
        for w in keys.windows(2) {
            prop_assert!((cum[&w[0]] - cum[&w[1]] - pk[&w[0]]).abs() < 1e-12);
        }
        let mut d = s.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(degree_sequence(&s.to_graph()), d);
    }
}

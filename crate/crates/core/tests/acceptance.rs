//! One PASS/FAIL line per acceptance criterion. Oracles are brute force or the
//! published fixture values; nothing here calls the code under test to produce
//! an expected value.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use common::{fixture, random_family, random_tree};
use hypercode::codec;
use hypercode::graph::{find_isomorphism, hamilton_cycles, is_edge_hamiltonian, is_graphical, Graph};
use hypercode::groups::{GraphicGroup, GroupBase, GroupSpec};
use hypercode::hypergraph::{intersected_graph_of, Adjust, Hypergraph};
use hypercode::labeling::{search_labeling, verify_labeling, Labeling, LabelingKind};
use hypercode::lattice::{sample, Colored, LatticeOp, LatticeWord};
use hypercode::netsim::{self, DistKind, SimConfig};
use hypercode::setcolor::{
    chi_set_prime_closed_form, chi_set_prime_exact, construct_adjacent_edge_intersected, construct_for_tree,
    edge_label_coloring, hypermatching_classes, verify_chyper, verify_intersected, verify_intersection_total,
    AdjacentStrategy, Cgraph, ConstraintSet, IntersectionKind,
};
use hypercode::topcode::{digit_multiset, from_labeled_graph, string_count, string_digits};
use hypercode::{set, Set};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn k4_family_suite() -> Outcome {
    // The dual listing: X_j names the hyperedges containing element j.
    let listed: [&[u32]; 15] = [
        &[1], &[1, 2], &[2], &[3], &[2, 3], &[1, 2, 3], &[1, 2, 4], &[3, 4], &[1, 3, 4], &[2, 3, 4], &[1, 2, 3, 4],
        &[1, 3], &[2, 4], &[4], &[1, 4],
    ];
    let edges: Vec<Set> = (1..=4u32)
        .map(|i| (1..=15u32).filter(|&j| listed[j as usize - 1].contains(&i)).collect())
        .collect();
    let h = Hypergraph::new(edges.clone()).map_err(|e| e.to_string())?;
    let (_, from_file) = codec::load_hypergraph(&fixture("k4-family.hyper.json")).map_err(|e| e.to_string())?;
    ensure(from_file == h, || "fixture differs from the dual listing".into())?;
    ensure(h.uniformity() == Some(8), || format!("uniformity {:?}", h.uniformity()))?;
    let (g, sc) = h.intersected_graph();
    ensure(g == Graph::complete(4), || "intersected graph is not K4".into())?;
    let es = sc.edge_sets(&g);
    ensure(es.iter().all(|s| s.len() == 4), || format!("edge sets {es:?}"))?;
    let adj = h.adjacent_hypergraph().map_err(|e| e.to_string())?;
    ensure(adj.uniformity() == Some(7), || "adjacent hypergraph not 7-uniform".into())?;
    let want = set([3, 4, 5, 8, 10, 13, 14]);
    ensure(adj.edges().contains(&want) && (h.ground() - &edges[0]) == want, || "complement of e1 differs".into())?;
    // Hyperedges are named 0..4 in the dual.
    let dual = h.dual_family();
    let expect: Vec<Set> = listed.iter().map(|x| x.iter().map(|i| i - 1).collect()).collect();
    ensure(dual == expect, || format!("dual {dual:?}"))?;
    // dual of the dual: element j of it is the j-th dual hyperedge, which is X_{x} for one x.
    let d = h.dual().map_err(|e| e.to_string())?;
    let dd = d.dual().map_err(|e| e.to_string())?;
    let rename: Vec<u32> = d.edges().iter().map(|x| expect.iter().position(|y| y == x).unwrap() as u32 + 1).collect();
    let back: BTreeSet<Set> = dd.edges().iter().map(|e| e.iter().map(|&j| rename[j as usize]).collect()).collect();
    ensure(back == h.edges().iter().cloned().collect(), || "dual of the dual differs".into())
}

fn topcode_fixture() -> Outcome {
    let (doc, g) = codec::load_graph(&fixture("labeled9.graph.json")).map_err(|e| e.to_string())?;
    let f = doc.labeling().map_err(|e| e.to_string())?;
    let t = from_labeled_graph(&g, &f, Some(&doc.oriented_edges())).map_err(|e| e.to_string())?;
    ensure(t.x == [4, 3, 2, 3, 0, 2, 0, 0, 0], || format!("x {:?}", t.x))?;
    ensure(t.e == [1, 2, 3, 4, 5, 6, 7, 8, 9], || format!("e {:?}", t.e))?;
    ensure(t.y == [5, 5, 5, 7, 5, 8, 7, 8, 9], || format!("y {:?}", t.y))?;
    let file = codec::load_topcode(&fixture("labeled9.topcode.json")).map_err(|e| e.to_string())?;
    ensure(file == t, || "topcode fixture differs".into())?;
    let counts = [4, 1, 3, 3, 2, 5, 1, 3, 3, 2];
    ensure(digit_multiset(&t) == counts, || format!("matrix digits {:?}", digit_multiset(&t)))?;
    for s in [
        "515524337542358760278980090",
        "415523235743055862077880099",
        "000203234123456789987857555",
        "002002123334455555677788899",
    ] {
        ensure(s.len() == 27, || format!("{s} has {} digits", s.len()))?;
        ensure(string_digits(s) == Some(counts), || format!("{s} digit multiset differs"))?;
    }
    let fact27: BigUint = (1..=27u32).map(BigUint::from).product();
    ensure(string_count(&t) == fact27, || "string count is not 27!".into())
}

/// Sub-checks that failed, by name.
fn base13_suite() -> Result<Vec<String>, String> {
    let mut failed = vec![];
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failed.push(name.to_string());
        }
    };
    let (_, h) = codec::load_hypergraph(&fixture("base13.hyper.json")).map_err(|e| e.to_string())?;
    check("ground-1-12", *h.ground() == (1..=12).collect::<Set>() && h.size() == 13);
    let (g, sc) = h.intersected_graph();
    let clique = [set([1, 2, 3]), set([1, 11]), set([1, 10]), set([1, 8]), set([1, 7])];
    let at: Vec<usize> = clique.iter().filter_map(|c| sc.vertex.iter().position(|v| v == c)).collect();
    check("five-clique", at.len() == 5 && at.iter().all(|&a| at.iter().all(|&b| a == b || g.has_edge(a, b))));
    let cycle = h.hyperedge_hamilton_cycle().map_err(|e| e.to_string())?;
    check(
        "hamilton-cycle",
        cycle.as_ref().is_some_and(|c| {
            c.len() == 13 && c.iter().collect::<BTreeSet<_>>().len() == 13 && (0..13).all(|i| g.has_edge(c[i], c[(i + 1) % 13]))
        }),
    );
    // Each hyperedge loses the X member named in file order; None leaves it alone.
    let x = [set([1]), set([2]), set([7]), set([8])];
    let (doc, _) = codec::load_hypergraph(&fixture("base13.hyper.json")).map_err(|e| e.to_string())?;
    let file_assign = [Some(1), Some(0), Some(0), None, None, None, None, Some(0), None, None, Some(3), None, Some(2)];
    let by_set: BTreeMap<Set, Option<usize>> =
        doc.edges.iter().zip(file_assign).map(|(e, a)| (e.iter().copied().collect(), a)).collect();
    let assign: Vec<Option<usize>> = h.edges().iter().map(|e| by_set[e]).collect();
    let reduced = h.set_adjust(&x, &assign, Adjust::Decrease).map_err(|e| e.to_string())?;
    let (_, decreased) = codec::load_hypergraph(&fixture("decreased13.hyper.json")).map_err(|e| e.to_string())?;
    check("set-decrease-reproduces-target", reduced == decreased);
    let (l, _) = decreased.intersected_graph();
    check("decreased-intersected-tree", l.is_tree());
    if !l.is_tree() {
        let core = decreased.graham_reduction();
        eprintln!("note: criterion 3 intersected graph has {} vertices and {} edges; Graham reduction keeps {core:?}", l.order(), l.size());
    }
    let listed: BTreeSet<Set> = [set([12]), set([11]), set([10]), set([4, 5, 6]), set([7, 8, 9]), set([1, 2, 3])].into();
    let found = decreased.perfect_hypermatchings().map_err(|e| e.to_string())?;
    check(
        "listed-hypermatching",
        found.iter().any(|m| m.iter().map(|&i| decreased.edges()[i].clone()).collect::<BTreeSet<_>>() == listed),
    );
    Ok(failed)
}

fn chi_set() -> Outcome {
    for (n, want) in [(3, 3), (4, 6)] {
        let got = chi_set_prime_exact(&Graph::complete(n)).map_err(|e| e.to_string())?.0;
        ensure(got == want, || format!("K{n}: {got} != {want}"))?;
        ensure(chi_set_prime_closed_form(&Graph::complete(n)) == Some(n * (n - 1) / 2), || format!("K{n} closed form"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let n = rng.gen_range(2..=10);
        let t = random_tree(&mut rng, n);
        let formula = t.edges().iter().map(|&(u, v)| t.degree(u) + t.degree(v) - 1).max().unwrap();
        let exact = chi_set_prime_exact(&t).map_err(|e| e.to_string())?.0;
        ensure(exact == formula, || format!("tree {:?}: exact {exact}, formula {formula}", t.edges()))?;
        ensure(chi_set_prime_closed_form(&t) == Some(exact), || "closed form disagrees".into())?;
    }
    Ok(())
}

fn tree_constructions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(2..=12);
        let t = random_tree(&mut rng, n);
        let id = || format!("tree {:?}", t.edges());
        for kind in [IntersectionKind::Graceful, IntersectionKind::OddGraceful, IntersectionKind::Rainbow] {
            let sc = construct_for_tree(&t, kind).map_err(|e| format!("{}: {e}", id()))?;
            let v = verify_intersection_total(&t, &sc, kind).map_err(|e| e.to_string())?;
            ensure(v.holds(), || format!("{}: {kind:?} {}", id(), v.report))?;
        }
        let mut labels: Vec<i64> = (0..n as i64).collect();
        labels.shuffle(&mut rng);
        let sc = hypercode::setcolor::vset_coloring(&t, &Labeling::vertices(labels)).map_err(|e| e.to_string())?;
        let v = verify_intersected(&t, &sc, &ConstraintSet::c0()).map_err(|e| e.to_string())?;
        ensure(v.holds(), || format!("{}: VSET {}", id(), v.report))?;
        let edges = sc.edge_sets(&t);
        let c0 = t.edges().iter().zip(&edges).all(|(&(u, w), e)| {
            let meet: Set = &sc.vertex[u] & &sc.vertex[w];
            !meet.is_empty() && meet.is_subset(e)
        });
        ensure(c0, || format!("{}: VSET breaks c0", id()))?;
        for s in [AdjacentStrategy::LeafPeeling, AdjacentStrategy::LongestPath] {
            let sc = construct_adjacent_edge_intersected(&t, s).map_err(|e| e.to_string())?;
            let v = verify_chyper(&t, &sc, Cgraph::AdjacentEdgeIntersected).map_err(|e| e.to_string())?;
            ensure(v.holds(), || format!("{}: {s:?} {}", id(), v.report))?;
        }
    }
    Ok(())
}

fn hypermatching_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    let mut tries = 0;
    while done < 50 {
        tries += 1;
        ensure(tries < 5000, || format!("only {done} set-ordered graceful trees found"))?;
        let n = rng.gen_range(3..=10);
        let t = random_tree(&mut rng, n);
        let Some(f) = search_labeling(&t, &LabelingKind::SetOrderedGraceful).map_err(|e| e.to_string())? else {
            continue;
        };
        done += 1;
        let labels: Vec<u32> = f.edge_values(&t).iter().map(|&c| c as u32).collect();
        let sc = edge_label_coloring(&t, &labels).map_err(|e| e.to_string())?;
        let side = t.bipartition().unwrap();
        let q = t.size() as u32;
        let class = |s: bool| -> Vec<Set> { t.vertices().filter(|&v| side[v] == s).map(|v| sc.vertex[v].clone()).collect() };
        let (mx, my) = (class(false), class(true));
        for m in [&mx, &my] {
            let total: usize = m.iter().map(|s| s.len()).sum();
            let union: Set = m.iter().flatten().copied().collect();
            ensure(total == q as usize && union == (1..=q).collect(), || format!("class {m:?} is not a partition of [1,{q}]"))?;
        }
        let fam_x: BTreeSet<&Set> = mx.iter().collect();
        ensure(my.iter().all(|s| !fam_x.contains(s)), || "the two classes share a set".into())?;
        let all: BTreeSet<&Set> = sc.vertex.iter().collect();
        ensure(fam_x.len() + my.len() == all.len(), || "classes do not partition the family".into())?;
        ensure(hypermatching_classes(&t, &sc).map_err(|e| e.to_string())?.len() == 2, || "classes not found".into())?;
        let g = construct_for_tree(&t, IntersectionKind::Graceful).map_err(|e| e.to_string())?;
        ensure(!hypermatching_classes(&t, &g).map_err(|e| e.to_string())?.is_empty(), || "no independent hypermatching".into())?;
    }
    Ok(())
}

fn group_axioms() -> Outcome {
    let mut bases: Vec<Graph> = (2..=13).map(Graph::path).collect();
    bases.extend([3, 4, 7, 8, 11, 12].map(Graph::cycle));
    for g in bases {
        let f = search_labeling(&g, &LabelingKind::Graceful).map_err(|e| e.to_string())?.ok_or("no graceful labeling")?;
        ensure(verify_labeling(&g, &f, &LabelingKind::Graceful).map_err(|e| e.to_string())?.holds(), || "bad labeling".into())?;
        let q = g.size();
        let gr = GraphicGroup::build(GroupSpec { graph: g, base: GroupBase::Labeling(Labeling::vertices(f.vertex)), modulus: None })
            .map_err(|e| e.to_string())?;
        let m = gr.modulus;
        ensure(m == q && m <= 12, || format!("modulus {m}"))?;
        let r = gr.verify_axioms().map_err(|e| e.to_string())?;
        ensure(r.holds() && r.checks.len() >= 5, || format!("q={q}: {r}"))?;
        for k in 1..=m {
            for i in 1..=m {
                let inv = gr.inverse(i, k).map_err(|e| e.to_string())?;
                let formula = 2 * k as i64 - i as i64;
                ensure((inv as i64 - formula).rem_euclid(m as i64) == 0 && (1..=m).contains(&inv), || {
                    format!("inverse({i},{k}) = {inv} at M={m}")
                })?;
                ensure(gr.add(i, inv, k).map_err(|e| e.to_string())? == k, || format!("i + inv(i) != zero at M={m}"))?;
            }
        }
    }
    Ok(())
}

/// Smallest vertex set whose removal disconnects `g`; `p - 1` for complete graphs.
fn brute_connectivity(g: &Graph) -> usize {
    let p = g.order();
    for k in 0..p.saturating_sub(1) {
        for mask in 0u32..1 << p {
            if mask.count_ones() as usize != k {
                continue;
            }
            let keep: BTreeSet<usize> = (0..p).filter(|&v| mask >> v & 1 == 0).collect();
            if keep.len() >= 2 && !g.induced(&keep).is_connected() {
                return k;
            }
        }
    }
    p.saturating_sub(1)
}

fn connectivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut done = 0;
    while done < 100 {
        let m = rng.gen_range(2..=8);
        let ground = rng.gen_range(4..=8);
        let family = random_family(&mut rng, m, ground);
        let h = Hypergraph::new(family).map_err(|e| e.to_string())?;
        let (g, _) = h.intersected_graph();
        if !g.is_connected() {
            continue;
        }
        done += 1;
        let (k, cut) = h.hyperedge_connectivity().map_err(|e| e.to_string())?;
        let want = brute_connectivity(&g);
        ensure(k == want && cut.len() == k, || format!("{:?}: {k} vs brute {want}", h.edges()))?;
    }
    Ok(())
}

fn erdos_gallai() -> Outcome {
    // Degree sequences of every graph on n vertices, sorted non-increasing.
    let mut realizable: BTreeSet<Vec<usize>> = BTreeSet::new();
    for n in 1..=7usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let mut d = vec![0; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d[u] += 1;
                    d[v] += 1;
                }
            }
            d.sort_unstable_by(|a, b| b.cmp(a));
            realizable.insert(d);
        }
    }
    let mut count = 0;
    fn walk(prefix: &mut Vec<usize>, max: usize, len: usize, f: &mut dyn FnMut(&[usize])) {
        if prefix.len() == len {
            f(prefix);
            return;
        }
        for x in (0..=max).rev() {
            prefix.push(x);
            walk(prefix, x, len, f);
            prefix.pop();
        }
    }
    let mut bad = None;
    for len in 1..=7 {
        walk(&mut vec![], 8, len, &mut |d| {
            count += 1;
            if is_graphical(d) != realizable.contains(d) && bad.is_none() {
                bad = Some(d.to_vec());
            }
        });
    }
    ensure(bad.is_none(), || format!("disagreement on {bad:?}"))?;
    ensure(count >= 8000, || format!("only {count} sequences"))
}

fn edge_hamiltonicity() -> Outcome {
    let k4 = Graph::complete(4);
    let cycles = hamilton_cycles(&k4).map_err(|e| e.to_string())?;
    ensure(cycles.len() == 3, || format!("{} Hamilton cycles", cycles.len()))?;
    ensure(is_edge_hamiltonian(&k4).map_err(|e| e.to_string())?.holds, || "K4 not edge-hamiltonian".into())?;
    // Edges of K4 named 1..=6 in lexicographic order.
    let names: BTreeMap<(usize, usize), u32> = k4.edges().into_iter().zip(1..).collect();
    let family: Vec<Set> = cycles
        .iter()
        .map(|c| (0..4).map(|i| names[&hypercode::graph::edge(c[i], c[(i + 1) % 4])]).collect())
        .collect();
    let (g, _) = intersected_graph_of(&family);
    ensure(g == Graph::complete(3), || "cycle hypergraph is not K3".into())?;
    let base = [Colored::plain(Graph::complete(4)), Colored::plain(Graph::cycle(4)), Colored::plain(Graph::cycle(5))];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for seed in 0..20 {
        let mut counts = vec![0; 3];
        counts[rng.gen_range(0..3)] += 1;
        counts[rng.gen_range(0..3)] += 1;
        let op = [LatticeOp::O1, LatticeOp::O2, LatticeOp::O3][rng.gen_range(0..3)];
        let s = sample(&base, &LatticeWord { counts, ops: vec![op], seed }).map_err(|e| e.to_string())?;
        let p = s.result.graph.order();
        ensure(p <= 12, || format!("order {p}"))?;
        let v = is_edge_hamiltonian(&s.result.graph).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("seed {seed} {op:?}: uncovered {:?}", v.uncovered))?;
    }
    Ok(())
}

fn uniqueness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let m = rng.gen_range(2..=9);
        let ground = rng.gen_range(4..=9);
        let mut family = random_family(&mut rng, m, ground);
        let (g1, f1) = intersected_graph_of(&family);
        family.shuffle(&mut rng);
        let (g2, f2) = intersected_graph_of(&family);
        let phi = find_isomorphism(&g1, &g2).map_err(|e| e.to_string())?.ok_or("no isomorphism")?;
        let ok = g1.edges().iter().all(|&(u, v)| g2.has_edge(phi[u], phi[v]));
        ensure(ok && g1.size() == g2.size(), || "mapping is not an isomorphism".into())?;
        let sets1: BTreeSet<&Set> = f1.vertex.iter().collect();
        ensure(sets1 == f2.vertex.iter().collect(), || "vertex sets differ".into())?;
    }
    Ok(())
}

fn simulator() -> Outcome {
    let start = Instant::now();
    let cfg = SimConfig::new(2, 10_000, 2024);
    let mut s = netsim::init(&cfg).map_err(|e| e.to_string())?;
    for _ in 0..cfg.steps {
        netsim::step(&mut s, &cfg).map_err(|e| e.to_string())?;
        let sum: usize = s.degrees().iter().sum();
        ensure(sum == 2 * s.e_net, || format!("degree sum {sum} at t={}", s.t))?;
    }
    let fit = netsim::fit_growth(&s.history, netsim::GrowthLaw::Linear).map_err(|e| e.to_string())?;
    ensure((0.99..=1.01).contains(&fit.v.slope), || format!("a_v = {}", fit.v.slope))?;
    ensure((1.98..=2.02).contains(&fit.e.slope), || format!("a_e = {}", fit.e.slope))?;
    let gamma = netsim::fit_exponent(&netsim::distributions(&s, DistKind::Cum), netsim::DEFAULT_K_MIN)
        .map_err(|e| e.to_string())?
        .gamma;
    ensure((2.5..=3.5).contains(&gamma), || format!("gamma = {gamma}"))?;
    let pk = netsim::distributions(&s, DistKind::Pk);
    let cum = netsim::distributions(&s, DistKind::Cum);
    let ks: Vec<usize> = cum.keys().copied().collect();
    for w in ks.windows(2) {
        let diff = cum[&w[0]] - cum[&w[1]];
        ensure((diff - pk[&w[0]]).abs() < 1e-12, || format!("telescoping fails at k={}", w[0]))?;
    }
    let took = start.elapsed().as_secs_f64();
    ensure(took < 30.0, || format!("took {took:.1}s"))
}

/// Criteria whose published claim does not hold, with the sub-check that fails.
const KNOWN: &[(usize, &str)] = &[(3, "decreased-intersected-tree")];

#[test]
fn acceptance() {
    let plain: Vec<(usize, &str, fn() -> Outcome)> = vec![
        (1, "K4 hypergraph suite", k4_family_suite),
        (2, "topcode fixture", topcode_fixture),
        (4, "adjacent 1-common chromatic index", chi_set),
        (5, "tree construction properties", tree_constructions),
        (6, "perfect hypermatching properties", hypermatching_properties),
        (7, "group axioms", group_axioms),
        (8, "hyperedge connectivity", connectivity),
        (9, "graphical sequences", erdos_gallai),
        (10, "edge-hamiltonicity", edge_hamiltonicity),
        (11, "intersected-graph uniqueness", uniqueness),
        (12, "network simulator", simulator),
    ];
    let mut results: BTreeMap<usize, (String, Vec<String>)> = BTreeMap::new();
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    for (n, name, f) in plain {
        if only.is_some_and(|o| o != n) {
            continue;
        }
        let t = Instant::now();
        let failed = match f() {
            Ok(()) => vec![],
            Err(e) => vec![e],
        };
        results.insert(n, (format!("{name} ({:.2}s)", t.elapsed().as_secs_f64()), failed));
    }
    let failed = base13_suite().unwrap_or_else(|e| vec![e]);
    results.insert(3, ("hypergraph family and its set-decrease".into(), failed));

    for (n, (name, failed)) in &results {
        if failed.is_empty() {
            println!("PASS {n:>2} {name}");
        } else {
            println!("FAIL {n:>2} {name}: {}", failed.join("; "));
        }
    }
    for (n, (_, failed)) in &results {
        let known: Vec<&str> = KNOWN.iter().filter(|k| k.0 == *n).map(|k| k.1).collect();
        assert_eq!(failed, &known, "criterion {n}");
    }
}

//! End-to-end runs of the binary against the fixtures.

mod common;

use std::process::Command;

use common::fixture;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hypercode"));
    cmd.args(args).env_remove("TOPCODE_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_env(args, &[])
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

fn sets(v: &Value) -> Vec<Vec<u64>> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn hyper_intersected_family_is_k4() {
    let r = run(&["hyper", "intersected", "--in", &f("k4-family.hyper.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = r.json();
    assert_eq!(doc["order"], 4);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 6);
    assert!(sets(&doc["edge_sets"]).iter().all(|s| s.len() == 4));
}

#[test]
fn hyper_actions() {
    let k4_family = f("k4-family.hyper.json");
    let dual = run(&["hyper", "dual", "--in", &k4_family]).json();
    assert_eq!(dual["edges"].as_array().unwrap().len(), 15);
    assert_eq!(dual["ground"], serde_json::json!([0, 1, 2, 3]));
    let r = run(&["hyper", "uniform", "--in", &k4_family]);
    assert_eq!((r.code, r.json()["rank"].as_u64()), (0, Some(8)));
    assert_eq!(run(&["hyper", "uniform", "--in", &f("base13.hyper.json")]).code, 1);
    let adj = run(&["hyper", "adjacent", "--in", &k4_family]).json();
    assert!(sets(&adj["edges"]).contains(&vec![3, 4, 5, 8, 10, 13, 14]));
    assert_eq!(run(&["hyper", "connectivity", "--in", &k4_family]).json()["connectivity"], 3);
    assert_eq!(run(&["hyper", "chromatic", "--in", &k4_family]).json()["hyperedge_chromatic_index"], 4);

    let acyclic12 = f("acyclic12.hyper.json");
    assert_eq!(run(&["hyper", "reduce", "--in", &acyclic12]).json()["acyclic"], true);
    let ears = sets(&run(&["hyper", "ears", "--in", &acyclic12]).json()["ears"]);
    for want in [[0, 5], [1, 5], [2, 6], [2, 7], [3, 9], [4, 10]] {
        assert!(ears.contains(&want.to_vec()), "{want:?}");
    }
    assert!(run(&["hyper", "ears", "--in", &f("base13.hyper.json")]).json()["ears"].as_array().unwrap().is_empty());

    let m = run(&["hyper", "matching", "--in", &f("decreased13.hyper.json")]);
    assert_eq!(m.code, 0);
    let listed = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9], vec![10], vec![11], vec![12]];
    assert!(m.json()["matchings"].as_array().unwrap().iter().any(|x| sets(x) == listed));
}

#[test]
fn hyper_search_over_cap_exits_3() {
    let r = run(&["hyper", "connectivity", "--in", &f("base13.hyper.json")]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("cap exceeded"), "{}", r.stderr);
}

#[test]
fn topcode_commands() {
    let graph = f("labeled9.graph.json");
    let matrix = run(&["topcode", "build", "--in", &graph]).json();
    assert_eq!(matrix["x"], serde_json::json!([4, 3, 2, 3, 0, 2, 0, 0, 0]));
    assert_eq!(matrix["y"], serde_json::json!([5, 5, 5, 7, 5, 8, 7, 8, 9]));
    let count = run(&["topcode", "count", "--in", &f("labeled9.topcode.json")]).json();
    assert_eq!(count["count"], "10888869450418352160768000000");

    let args = ["topcode", "strings", "--in", &f("labeled9.topcode.json"), "--count", "4", "--seed", "7"];
    let a = run(&args);
    assert_eq!(a.code, 0);
    let lines: Vec<&str> = a.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    let mut want: Vec<char> = "415325235347055268077088099".chars().collect();
    want.sort_unstable();
    for s in &lines {
        assert_eq!(s.len(), 27);
        let mut d: Vec<char> = s.chars().collect();
        d.sort_unstable();
        assert_eq!(d, want);
    }
    assert_eq!(run(&args).stdout, a.stdout, "seeded output is reproducible");
    let env = run_env(&["topcode", "strings", "--in", &f("labeled9.topcode.json"), "--count", "4"], &[("TOPCODE_SEED", "7")]);
    assert_eq!(env.stdout, a.stdout);
    let sep = run(&["topcode", "strings", "--in", &graph, "--sep", "-"]);
    assert!(sep.stdout.starts_with("4-1-5-3-2-5-"), "{}", sep.stdout);

    let set = run(&["topcode", "set", "--in", &f("k4.graph.json")]);
    assert_eq!(set.code, 0);
    // (3!)^6 (2!)^6 (3!)^6 readings of one set-type matrix.
    let m: u128 = 6u128.pow(6) * 2u128.pow(6) * 6u128.pow(6);
    assert_eq!(set.json()["strings_per_matrix"], m.to_string());
}

#[test]
fn verify_commands() {
    let cat = f("caterpillar.graph.json");
    let g = run(&["verify", "labeling", "--in", &cat, "--kind", "graceful"]);
    assert_eq!(g.code, 0);
    assert!(g.json()["checks"].as_array().unwrap().len() >= 3);
    assert_eq!(run(&["verify", "labeling", "--in", &cat, "--kind", "odd-graceful"]).code, 1);
    let text = run(&["verify", "labeling", "--in", &cat, "--kind", "graceful", "--format", "text"]);
    assert!(text.stdout.starts_with("holds\nok   "), "{}", text.stdout);

    let k4 = f("k4.graph.json");
    assert_eq!(run(&["verify", "intersected", "--in", &k4]).json()["is_intersected_graph"], true);
    assert_eq!(run(&["verify", "class", "--in", &k4, "--class", "strong-vertex-set-labeling"]).code, 0);
    assert_eq!(run(&["verify", "chyper", "--in", &k4, "--class", "1"]).code, 0);
    assert_eq!(run(&["verify", "intersection", "--in", &k4, "--kind", "graceful"]).code, 1);
    assert_eq!(run(&["verify", "chyper", "--in", &k4, "--class", "9"]).code, 2);
}

#[test]
fn setcolor_commands() {
    let cat = f("caterpillar.graph.json");
    for args in [
        vec!["setcolor", "vset", "--in", &cat],
        vec!["setcolor", "pscs", "--in", &cat, "--variant", "1", "--rounds", "1"],
        vec!["setcolor", "construct-tree", "--in", &cat, "--kind", "graceful"],
        vec!["setcolor", "construct-tree", "--in", &cat, "--kind", "rainbow"],
        vec!["setcolor", "adjacent-edge", "--in", &cat, "--strategy", "leaf-peeling"],
        vec!["setcolor", "adjacent-edge", "--in", &cat, "--strategy", "longest-path"],
    ] {
        let r = run(&args);
        assert_eq!(r.code, 0, "{args:?}: {}{}", r.stdout, r.stderr);
        let doc = &r.json()["document"];
        assert_eq!(doc["order"], 9, "{args:?}");
        assert_eq!(doc["vertex_sets"].as_array().unwrap().len(), 9);
    }
    let r = run(&["setcolor", "vset", "--in", &f("labeled9.graph.json")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not a tree"));
}

#[test]
fn group_commands() {
    let p3 = f("p3.graph.json");
    let b = run(&["group", "build", "--in", &p3]).json();
    assert_eq!(b["elements"], serde_json::json!([[1, 1, 0], [0, 0, 1]]));
    assert_eq!(run(&["group", "check", "--in", &p3]).code, 0);
    let add = run(&["group", "add", "--in", &p3, "--modulus", "5", "--i", "2", "--j", "4", "--zero", "1"]).json();
    assert_eq!(add["index"], 5);
    let inv = run(&["group", "inverse", "--in", &p3, "--modulus", "7", "--i", "5", "--zero", "2"]).json();
    assert_eq!(inv["index"], 6);
    assert_eq!(run(&["group", "add", "--in", &p3, "--i", "9", "--j", "1", "--zero", "1"]).code, 2);
}

#[test]
fn lattice_commands() {
    let (k4, c4) = (f("k4-plain.graph.json"), f("c4.graph.json"));
    let r = run(&["lattice", "apply", "--left", &k4, "--right", &c4, "--op", "o1"]).json();
    assert_eq!(r["result"]["order"], 10);
    assert!(r["sites"].as_u64().unwrap() > 0);
    let s = run(&["lattice", "sample", "--in", &k4, "--in", &c4, "--counts", "1,1", "--ops", "o3", "--seed", "3"]);
    assert_eq!(s.code, 0);
    assert_eq!(s.json()["trace"].as_array().unwrap().len(), 1);
    let colored = f("k4.graph.json");
    let e = run(&["lattice", "enumerate01", "--in", &colored, "--in", &colored, "--op", "vertex-coincide"]).json();
    let rows = e.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1]["is_intersected_graph"], true);
    let bad = run(&["lattice", "apply", "--left", &k4, "--right", &c4, "--op", "o1", "--site", "100000"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn simulate_commands() {
    let r = run(&["simulate", "run", "--m", "2", "--steps", "5", "--seed", "1"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "t,v_net,e_net");
    assert_eq!(lines[1], "0,3,3");
    assert_eq!(lines[6], "5,8,13");
    let d = run(&["simulate", "run", "--steps", "200", "--dist", "cum"]);
    assert!(d.stdout.starts_with("k,value\n2,1\n"), "{}", d.stdout);
    let j = run(&["simulate", "run", "--steps", "50", "--format", "json"]).json();
    assert_eq!(j["degree_sum_always"], true);
    let fit = run(&["simulate", "fit", "--steps", "3000", "--seed", "5"]).json();
    assert_eq!(fit["growth"]["v"]["slope"], 1.0);
    let k = run(&["simulate", "kinematics", "--steps", "100"]).json();
    assert_eq!(k["velocity"].as_f64().unwrap(), 5f64.sqrt());
    assert_eq!(run(&["simulate", "fit", "--steps", "3"]).code, 2);
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(run(&["hyper", "dual", "--in", &f("k4-family.hyper.json"), "--unknown"]).code, 2);
    assert_eq!(run(&["hyper", "dual", "--in", "/nonexistent.json"]).code, 2);
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
    let dir = std::env::temp_dir().join(format!("hypercode-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.hyper.json");
    std::fs::write(&bad, "{\n  \"ground\": [1,2],\n  \"edges\": [[1,2],[1,2]]\n}\n").unwrap();
    let r = run(&["hyper", "dual", "--in", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("hyperedge 1 duplicates hyperedge 0"), "{}", r.stderr);
    std::fs::write(&bad, "{\n  \"ground\": [1,2],\n  \"edges\": [[1,2]\n}\n").unwrap();
    let r = run(&["hyper", "dual", "--in", bad.to_str().unwrap()]);
    assert!(r.stderr.contains("line 4"), "{}", r.stderr);

    let out = dir.join("k4.graph.json");
    let r = run(&["hyper", "intersected", "--in", &f("k4-family.hyper.json"), "--out", out.to_str().unwrap()]);
    assert_eq!((r.code, r.stdout.as_str()), (0, ""));
    assert!(std::fs::read_to_string(&out).unwrap().contains("\"vertex_sets\""));
    std::fs::remove_dir_all(&dir).ok();
}

//! Golden transcripts of the binary: exact stdout for the main commands and
//! the exit code for every error path.

use std::path::{Path, PathBuf};
use std::process::Command;

use cospan_rewrite::cospan::{identity_twocell, OpenGraph};
use cospan_rewrite::graph::{FinGraph, GraphHom};
use cospan_rewrite::io::{StoredProduction, Workspace};
use cospan_rewrite::rewrite::Production;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cospan-rewrite"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn with_ws(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let ws = dir.join("ws.json");
    let mut full = vec!["-w", ws.to_str().unwrap()];
    full.extend_from_slice(args);
    bin(&full)
}

/// `S` is an open edge, `id_S` its identity cell, `kill` deletes a node that
/// `bad` matches onto a node with an edge.
fn scratch() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let mut ws = Workspace::new();
    let s = OpenGraph::with_discrete_feet(FinGraph::arrow(), &[0], &[1]).unwrap();
    ws.insert_open_graph("S", &s).unwrap();
    ws.insert_two_cell("id_S", &identity_twocell(&s)).unwrap();
    let two = OpenGraph::with_discrete_feet(FinGraph::discrete(2), &[0, 1], &[0, 1]).unwrap();
    ws.insert_open_graph("T", &two).unwrap();
    ws.insert_two_cell("id_T", &identity_twocell(&two)).unwrap();

    let point = FinGraph::discrete(1);
    let kill = Production::new(GraphHom::initial(&point), GraphHom::initial(&FinGraph::empty())).unwrap();
    ws.insert_production("kill", &StoredProduction::Plain(kill)).unwrap();
    let bad = GraphHom::new(point, FinGraph::arrow(), vec![0], vec![]).unwrap();
    ws.insert_hom("bad", &bad).unwrap();
    ws.save(dir.path().join("ws.json")).unwrap();
    dir
}

#[test]
fn counterexamples() {
    assert_eq!(bin(&["laws", "counterexample", "set"]), (0, "lhs=5 rhs=6\n".into(), String::new()));
    assert_eq!(bin(&["laws", "counterexample", "bool"]), (0, "lhs=0 rhs=1\n".into(), String::new()));
}

#[test]
fn vertical_identity() {
    let dir = scratch();
    let (code, out, _) = with_ws(dir.path(), &["twocell", "vcomp", "id_S", "id_S", "--out", "v"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "middle: {\"nodes\":2,\"edges\":[[0,1]]}\n\
         up: nodes=[0, 1] edges=[0]\n\
         down: nodes=[0, 1] edges=[0]\n\
         monic: true invertible: true\n"
    );
    let (code, out, _) = with_ws(dir.path(), &["twocell", "isoeq", "v", "id_S"]);
    assert_eq!((code, out.as_str()), (0, "equal: nodes=[0, 1] edges=[0]\n"));
}

#[test]
fn worked_example_apply() {
    let (code, out, err) = bin(&[
        "rewrite",
        "apply",
        data("rewrite_example.json").to_str().unwrap(),
        "--production",
        "p",
        "--match",
        "m0",
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(
        out,
        "context: {\"nodes\":3,\"edges\":[[0,1],[1,2]]}\n\
         result: {\"nodes\":3,\"edges\":[[0,1],[1,2],[2,2]]}\n\
         feet: in=[0] out=[2]\n"
    );
}

#[test]
fn matches_and_language() {
    let ex = data("rewrite_example.json");
    let (code, out, _) = bin(&["rewrite", "match", ex.to_str().unwrap(), "--production", "p", "--graph", "source"]);
    assert_eq!(code, 0);
    assert_eq!(out, "match 0: nodes=[0, 2] edges=[2] (applicable)\n1 match(es)\n");

    let gr = data("grammar_example.json");
    let (code, out, _) = bin(&[
        "rewrite", "language", gr.to_str().unwrap(), "--grammar", "shrink", "--depth", "3", "--size-cap", "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "0: apex={\"nodes\":3,\"edges\":[[0,1],[1,2]]} in=[0] out=[2]\n\
         1: apex={\"nodes\":3,\"edges\":[[1,2]]} in=[0] out=[2]\n\
         2: apex={\"nodes\":3,\"edges\":[[0,1]]} in=[0] out=[2]\n\
         3: apex={\"nodes\":3,\"edges\":[]} in=[0] out=[2]\n\
         4 graph(s) up to isomorphism\n"
    );
}

#[test]
fn derive_chain_composes_steps() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("g.json");
    std::fs::copy(data("grammar_example.json"), &ws).unwrap();
    let (code, out, err) = bin(&[
        "rewrite",
        "derive-chain",
        ws.to_str().unwrap(),
        "--graph",
        "start",
        "--production",
        "delete_edge",
        "--production",
        "delete_edge",
        "--out",
        "bare",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.ends_with("composite middle: {\"nodes\":3,\"edges\":[]}\n"), "{out}");
    let (code, _, _) = bin(&[
        "rewrite", "derive-chain", ws.to_str().unwrap(), "--graph", "bare", "--production", "delete_edge",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn dot_export_is_stable() {
    let ex = data("rewrite_example.json");
    let (code, out, _) = bin(&["-w", ex.to_str().unwrap(), "export", "dot", "source"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "digraph \"source\" {\n  rankdir=LR;\n\
         \x20 n0 [shape=circle, label=\"0\"];\n\
         \x20 n1 [shape=point, xlabel=\"1\"];\n\
         \x20 n2 [shape=square, label=\"2\"];\n\
         \x20 n0 -> n1 [label=\"e0\"];\n\
         \x20 n1 -> n2 [label=\"e1\"];\n\
         \x20 n0 -> n2 [label=\"e2\"];\n}\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cell.dot");
    let (code, out, _) = bin(&["-w", ex.to_str().unwrap(), "export", "dot", "expected_cell", "--out", file.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert!(std::fs::read_to_string(file).unwrap().contains("cluster_mid_"));
}

#[test]
fn domain_errors_exit_one() {
    let dir = scratch();
    let (code, _, err) = with_ws(dir.path(), &["rewrite", "apply", "--production", "kill", "--match", "bad"]);
    assert_eq!(code, 1);
    assert_eq!(err, "error: no pushout complement: deleting node 0 would leave edge 0 dangling\n");

    let (code, _, _) = with_ws(dir.path(), &["cospan", "compose", "S", "T", "--out", "x"]);
    assert_eq!(code, 1);
    let (code, _, _) = with_ws(dir.path(), &["twocell", "vcomp", "id_S", "id_T"]);
    assert_eq!(code, 1);
    let (code, out, _) = bin(&["--allow-nonmonic", "laws", "interchange", "--seed", "1", "--cases", "60"]);
    assert_eq!(code, 1);
    assert!(out.ends_with("result: FAIL\n"));
}

#[test]
fn usage_and_file_errors_exit_two() {
    let dir = scratch();
    assert_eq!(bin(&["laws", "counterexample", "lattice"]).0, 2);
    assert_eq!(bin(&["laws", "adhesive", "--seed", "x", "--cases", "1"]).0, 2);
    assert_eq!(bin(&[]).0, 2);

    let (code, _, err) = with_ws(dir.path(), &["twocell", "vcomp", "id_S", "nope"]);
    assert_eq!((code, err.as_str()), (2, "error: no 2-cell named \"nope\"\n"));

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\n  \"graphs\": {\"g\": {\"nodes\": 1,}}\n}\n").unwrap();
    let (code, _, err) = bin(&["-w", broken.to_str().unwrap(), "graph", "validate"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: parse error at line 2"), "{err}");

    let dangling = dir.path().join("dangling.json");
    std::fs::write(&dangling, r#"{"homs": {"h": {"dom": "a", "cod": "a", "nodes": []}}}"#).unwrap();
    let (code, _, err) = bin(&["-w", dangling.to_str().unwrap(), "graph", "validate"]);
    assert_eq!((code, err.as_str()), (2, "error: invalid homs.h: no graph named \"a\"\n"));
}

/// A cell whose up leg folds two nodes together: refused by default.
#[test]
fn nonmonic_cells_need_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("ws.json");
    std::fs::write(
        &ws,
        r#"{
  "graphs": {"one": {"nodes": 1}, "two": {"nodes": 2}, "none": {"nodes": 0}},
  "open_graphs": {"o": {"input": "none", "output": "none", "apex": "one", "in": {"nodes": []}, "out": {"nodes": []}},
                  "t": {"input": "none", "output": "none", "apex": "two", "in": {"nodes": []}, "out": {"nodes": []}}},
  "two_cells": {"fold": {"top": "o", "bottom": "t", "middle": "two",
                         "up": {"nodes": [0, 0]}, "down": {"nodes": [0, 1]},
                         "mid_in": {"nodes": []}, "mid_out": {"nodes": []}}}
}"#,
    )
    .unwrap();
    let (code, _, err) = bin(&["-w", ws.to_str().unwrap(), "graph", "validate"]);
    assert_eq!(code, 2);
    assert!(err.contains("two_cells.fold"), "{err}");
    let (code, out, _) = bin(&["--allow-nonmonic", "-w", ws.to_str().unwrap(), "graph", "validate", "fold"]);
    assert_eq!((code, out.as_str()), (0, "ok: fold is a valid 2-cell\n"));
}

#[test]
fn pushout_and_pullback_by_name() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ws.json");
    let mut ws = Workspace::new();
    let point = FinGraph::discrete(1);
    let edge = FinGraph::arrow();
    ws.insert_hom("head", &GraphHom::new(point.clone(), edge.clone(), vec![1], vec![]).unwrap()).unwrap();
    ws.insert_hom("tail", &GraphHom::new(point, edge, vec![0], vec![]).unwrap()).unwrap();
    ws.save(&path).unwrap();
    let w = path.to_str().unwrap();
    let (code, out, _) = bin(&["-w", w, "graph", "pushout", "head", "tail", "--out", "path"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "object: {\"nodes\":3,\"edges\":[[0,1],[1,2]]}\nleft leg: nodes=[0, 1] edges=[0]\nright leg: nodes=[1, 2] edges=[1]\n"
    );
    let (code, out, _) = bin(&["-w", w, "graph", "pullback", "path.left", "path.right"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("object: {\"nodes\":1,\"edges\":[]}\n"), "{out}");
    let (code, out, _) = bin(&["-w", w, "graph", "iso", "path", "path"]);
    assert_eq!((code, out.as_str()), (0, "isomorphic: nodes=[0, 1, 2] edges=[0, 1]\n"));
    // both legs of the pushout start at different graphs
    assert_eq!(bin(&["-w", w, "graph", "pushout", "path.left", "head"]).0, 1);
}

use std::path::Path;
use std::process::{Command, Output};

use mpg_core::automorphism::decompose_aut;
use mpg_core::catalog::{self, fixture};
use mpg_core::circulant::is_super_base;
use mpg_core::generation::site_census;
use mpg_core::graph6;
use mpg_core::products::{iterated_product, ProductKind};
use mpg_core::reseminant::{build_reseminant, duplicate_vertex, regular_reseminant_verdict};
use mpg_core::verify::check_minimal_prime_graph;
use mpg_core::Graph;
use serde_json::Value;

fn mpg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpg")).args(args).output().expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

fn json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_fixture_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("FIG1_8").unwrap().graph;
    let path = write(dir.path(), "FIG1_8.g6", &(graph6::encode(&g) + "\n"));
    let out = mpg(&["verify", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out), vec![json(&check_minimal_prime_graph(&g))]);
}

#[test]
fn verify_negative_exits_one() {
    let out = mpg(&["verify", "g6:C~"]);
    assert_eq!(out.status.code(), Some(1));
    let report = &stdout_lines(&out)[0];
    assert_eq!(report["is_minimal"], false);
    assert_eq!(report["is_solvable"], true);
}

#[test]
fn verify_batch_and_json_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "batch.g6", "Dhc\nC~\n");
    let out = mpg(&["verify", &path]);
    assert_eq!(out.status.code(), Some(1));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["is_minimal"], true);
    let path = write(dir.path(), "c5.json", r#"{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]}"#);
    assert_eq!(mpg(&["verify", &path]).status.code(), Some(0));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(mpg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mpg(&["verify", "/nonexistent/file.g6"]).status.code(), Some(2));
    assert_eq!(mpg(&["verify", "@NOPE"]).status.code(), Some(2));
    assert_eq!(mpg(&["family", "--n", "7"]).status.code(), Some(2));
    assert_eq!(mpg(&["product", "--kind", "lexicographic", "g6:Dhc", "g6:Dhc"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.g6", "Dhc\nD!!\n");
    let out = mpg(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn family_bundle() {
    let out = mpg(&["family", "--n", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let b = &stdout_lines(&out)[0];
    assert_eq!((b["k"].as_u64(), b["minimal"].as_bool(), b["base"].as_bool()), (Some(2), Some(true), Some(true)));
    assert_eq!(b["regular_degree"], 4);
    assert_eq!(b["coloring"], json(&vec![0, 0, 1, 1, 2, 2, 0, 0, 1, 1, 2]));
    assert_eq!(mpg(&["family", "--n", "6"]).status.code(), Some(1));
}

#[test]
fn duplicate_and_reseminant_match_library() {
    let out = mpg(&["duplicate", "g6:Dhc", "--vertex", "0"]);
    let g = duplicate_vertex(&Graph::cycle(5).unwrap(), 0).unwrap();
    assert_eq!(stdout_lines(&out)[0]["graph6"], graph6::encode(&g));

    let out = mpg(&["reseminant", "--w", "1,1,1,1,1"]);
    let w = "1,1,1,1,1".parse().unwrap();
    let g = build_reseminant(&Graph::cycle(5).unwrap(), &w).unwrap();
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["graph6"], graph6::encode(&g));
    assert_eq!(lines[1], json(&regular_reseminant_verdict(&w).unwrap()));
}

#[test]
fn product_matches_library() {
    for kind in ProductKind::ALL {
        let out = mpg(&["product", "--kind", kind.name(), "@FIG2_6", "g6:Dhc"]);
        assert_eq!(out.status.code(), Some(0));
        let g = iterated_product(kind, &[fixture("FIG2_6").unwrap().graph, Graph::cycle(5).unwrap()]).unwrap();
        assert_eq!(stdout_lines(&out)[0]["graph6"], graph6::encode(&g));
    }
}

#[test]
fn aut_sites_superbase_match_library() {
    let g = fixture("FIG4_10").unwrap().graph;
    let out = mpg(&["aut", "@FIG4_10"]);
    assert_eq!(stdout_lines(&out)[0], json(&decompose_aut(&g).unwrap()));

    let g = fixture("FIG2_6").unwrap().graph;
    let out = mpg(&["sites", "@FIG2_6"]);
    let rows = stdout_lines(&out).remove(0);
    let census = site_census(&g).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), census.len());
    for (row, (site, class)) in rows.as_array().unwrap().iter().zip(&census) {
        assert_eq!(row["site"], json(&site.site));
        assert_eq!(row["generated"], graph6::encode(&site.generated));
        assert_eq!(row["classification"], json(class));
    }

    let out = mpg(&["superbase", "@FIG2_6"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_lines(&out)[0], json(&is_super_base(&g).unwrap()));
    assert_eq!(mpg(&["superbase", "g6:Dhc"]).status.code(), Some(0));
    assert_eq!(mpg(&["sites", "g6:C~"]).status.code(), Some(1));
}

#[test]
fn catalog_commands() {
    let out = mpg(&["catalog", "list"]);
    let names: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(String::from).collect();
    let expect: Vec<String> = catalog::builtin_fixtures().into_iter().map(|e| e.name).collect();
    assert_eq!(names, expect);

    let out = mpg(&["catalog", "show", "FIG3_11"]);
    assert_eq!(stdout_lines(&out)[0], json(&fixture("FIG3_11").unwrap()));

    let out = mpg(&["catalog", "export"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), catalog::export_graph6(&catalog::builtin_fixtures()));

    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("catalog");
    assert!(mpg(&["catalog", "export", "--out", cat.to_str().unwrap()]).status.success());
    assert!(cat.join("index.json").exists());
    let ext = write(dir.path(), "external.g6", "Dhc\n");
    let out = mpg(&["catalog", "ingest", &ext, "--dir", cat.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_lines(&out)[0]["name"], "external_0");
    let out = mpg(&["catalog", "show", "external_0", "--dir", cat.to_str().unwrap()]);
    assert_eq!(stdout_lines(&out)[0]["graph"]["n"], 5);
    // ingesting the same file twice collides on names
    assert_eq!(mpg(&["catalog", "ingest", &ext, "--dir", cat.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn ingested_sixteen_vertex_graph_runs_sites() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("FIG6_16").unwrap().graph;
    let path = write(dir.path(), "MPG_16.g6", &(graph6::encode(&g) + "\n"));
    let entries = catalog::ingest_graph6(Path::new(&path)).unwrap();
    assert_eq!(entries[0].graph, g);
    let out = mpg(&["sites", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout_lines(&out)[0].as_array().unwrap().is_empty());
}

#[test]
fn pretty_output_is_text() {
    let out = mpg(&["--pretty", "verify", "@FIG1_8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("minimal prime graph"));
    assert!(serde_json::from_str::<Value>(text.trim()).is_err());
}

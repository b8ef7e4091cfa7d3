use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn ccdeg(args: &[&str], cache: Option<&Path>) -> (i32, Value, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ccdeg"));
    cmd.args(args).env_remove("CCDEG_CACHE");
    if let Some(dir) = cache {
        cmd.env("CCDEG_CACHE", dir);
    }
    let out = cmd.output().expect("run ccdeg");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, stdout)
}

#[test]
fn degree_methods_agree() {
    let (code, r, _) = ccdeg(&["degree", "--n", "6", "--method", "chains,groebner"], None);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], "ccdeg-report/1");
    assert_eq!(r["results"]["degree"], 83);
    assert_eq!(r["results"]["agreement"], true);
    assert_eq!(r["results"]["methods"]["groebner"], 83);

    let (code, r, _) = ccdeg(&["degree", "--n", "12", "--method", "chains"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["degree"], 117_571);
}

#[test]
fn degree_three_six_by_groebner_and_toric() {
    for route in ["elimination", "lattice"] {
        let (code, r, _) = ccdeg(&["degree", "--d", "3", "--n", "6", "--method", "groebner,toric", "--route", route], None);
        assert_eq!(code, 0);
        assert_eq!(r["results"]["degree"], 250);
    }
}

#[test]
fn chains_need_two_rows() {
    let (code, r, _) = ccdeg(&["degree", "--d", "3", "--n", "6", "--method", "chains"], None);
    assert_eq!(code, 4);
    assert_eq!(r["status"], "invalid");
}

#[test]
fn families_verify() {
    let (code, r, _) = ccdeg(&["verify", "--family", "lemma31", "--n", "7"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["passed"], true);
    let (code, r, _) = ccdeg(&["verify", "--family", "prop35", "--n", "5", "--reference"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["matches_reference"], true);
}

#[test]
fn khovanskii_three_six() {
    let (code, r, _) = ccdeg(&["verify", "--khovanskii", "--d", "3", "--n", "6"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["passed"], true);
    assert_eq!(r["results"]["lifts_missing"], 0);
}

#[test]
fn dropped_generator_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fam.txt");
    let f = file.to_str().unwrap();
    let (code, r, _) = ccdeg(&["export", "lemma31", "--n", "4", "--out", f], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["lines"], 14);
    let (code, _, _) = ccdeg(&["verify", "--file", f], None);
    assert_eq!(code, 0);

    // drop the Plücker relation
    let text = fs::read_to_string(&file).unwrap();
    let kept: Vec<&str> = text.lines().filter(|l| *l != "p23*p14-p24*p13+p34*p12").collect();
    assert_eq!(kept.len(), 13);
    fs::write(&file, kept.join("\n")).unwrap();
    let (code, r, _) = ccdeg(&["verify", "--file", f], None);
    assert_eq!(code, 2);
    assert_eq!(r["status"], "failed");
    let pairs = r["results"]["failing_pairs"].as_array().unwrap();
    assert!(!pairs.is_empty());
    assert!(pairs[0]["pair"].is_array() && pairs[0]["remainder"].is_string());
}

#[test]
fn ideal_file_with_explicit_order() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("i.txt");
    fs::write(&file, "ring: x,y\nx+y\nx\n").unwrap();
    let f = file.to_str().unwrap();
    let (code, r, _) = ccdeg(&["verify", "--file", f, "--order", "lex x,y"], None);
    assert_eq!(code, 2);
    assert_eq!(r["results"]["pairs_checked"], 1);
    let (code, _, _) = ccdeg(&["verify", "--file", f, "--order", "lex x,z"], None);
    assert_eq!(code, 4);
}

#[test]
fn cgt_five() {
    let (code, r, _) = ccdeg(&["polytope", "--family", "cgt", "--n", "5", "--fvector", "--ehrhart"], None);
    assert_eq!(code, 0);
    let res = &r["results"];
    assert_eq!(res["f_vector"], serde_json::json!([17, 77, 166, 200, 141, 57, 12]));
    assert_eq!(res["volume"], 27);
    assert_eq!(res["ehrhart"]["coefficients"][0], "1");
}

#[test]
fn cfflv_volume_and_cgt_points() {
    let (code, r, _) = ccdeg(&["polytope", "--family", "cfflv", "--d", "3", "--n", "6", "--volume"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["volume"], 250);
    let (code, r, _) = ccdeg(&["polytope", "--family", "cgt", "--n", "4", "--points", "--t", "1"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["lattice_points"]["count"], 11);
    let (code, _, _) = ccdeg(&["polytope", "--family", "cgt", "--n", "5", "--points", "--t", "6", "--max-box", "1000"], None);
    assert_eq!(code, 3);
}

#[test]
fn posets_and_dot() {
    let (code, r, _) = ccdeg(&["posets", "--kind", "pbw", "--d", "3", "--n", "6", "--dot"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["elements"], 20);
    assert!(r["results"]["dot"].as_str().unwrap().starts_with("digraph"));
    let (_, r, _) = ccdeg(&["posets", "--kind", "young", "--n", "6"], None);
    assert_eq!(r["results"]["maximal_chains"], 14);
}

#[test]
fn solve_count_four() {
    let (code, r, _) = ccdeg(&["solve-count", "--n", "4", "--trials", "2"], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["matches_degree"], true);

    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.txt");
    let (code, _, text) = ccdeg(&["export", "hamiltonian", "--n", "4", "--seed", "7"], None);
    assert_eq!(code, 0);
    assert_eq!(text.lines().count(), 6);
    fs::write(&h, text).unwrap();
    let (code, r, _) = ccdeg(&["solve-count", "--n", "4", "--direct", "--hamiltonian", h.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["trials"][0]["count"], 9);
}

#[test]
fn exit_codes() {
    assert_eq!(ccdeg(&["degree", "--n", "2"], None).0, 4);
    assert_eq!(ccdeg(&["degree"], None).0, 4);
    assert_eq!(ccdeg(&["frobnicate"], None).0, 4);
    assert_eq!(ccdeg(&["--help"], None).0, 0);
    assert_eq!(ccdeg(&["verify", "--file", "/nonexistent/x"], None).0, 4);
    let (code, r, _) = ccdeg(&["degree", "--n", "6", "--method", "groebner", "--max-basis", "3"], None);
    assert_eq!(code, 3);
    assert_eq!(r["results"]["truncated"], true);
    assert_eq!(ccdeg(&["degree", "--n", "5", "--max-basis", "0"], None).0, 4);
}

#[test]
fn budget_keeps_finished_methods() {
    let (code, r, _) = ccdeg(&["degree", "--n", "6", "--method", "chains,groebner", "--max-basis", "3"], None);
    assert_eq!(code, 3);
    assert_eq!(r["status"], "truncated");
    assert_eq!(r["results"]["methods"]["chains"], 83);
    assert!(r["results"]["methods"].get("groebner").is_none());
}

#[test]
fn results_are_deterministic() {
    let args = ["solve-count", "--n", "4", "--trials", "2", "--seed", "5"];
    let (_, a, _) = ccdeg(&args, None);
    let (_, b, _) = ccdeg(&args, None);
    assert_eq!(a["results"].to_string(), b["results"].to_string());
    let (_, a, _) = ccdeg(&["export", "graph", "--n", "5"], None);
    let (_, _, t1) = ccdeg(&["export", "graph", "--n", "5"], None);
    let (_, _, t2) = ccdeg(&["export", "graph", "--n", "5"], None);
    assert_eq!(a, Value::Null);
    assert_eq!(t1, t2);
}

#[test]
fn cache_hits_and_rejects_tampered_entries() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["degree", "--n", "5", "--method", "groebner"];
    let (_, r, _) = ccdeg(&args, Some(dir.path()));
    assert_eq!(r["provenance"]["cache"]["misses"].as_array().unwrap().len(), 1);
    let (_, r, _) = ccdeg(&args, Some(dir.path()));
    assert_eq!(r["provenance"]["cache"]["hits"].as_array().unwrap().len(), 1);
    assert_eq!(r["results"]["degree"], 27);

    let entry = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = fs::read_to_string(&entry).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.pop();
    lines.remove(4);
    fs::write(&entry, lines.join("\n")).unwrap();
    let (code, r, _) = ccdeg(&args, Some(dir.path()));
    assert_eq!(code, 0);
    assert_eq!(r["provenance"]["cache"]["rejected"].as_array().unwrap().len(), 1);
    assert_eq!(r["results"]["degree"], 27);
    // the recomputed basis replaced the bad entry
    let (_, r, _) = ccdeg(&args, Some(dir.path()));
    assert_eq!(r["provenance"]["cache"]["hits"].as_array().unwrap().len(), 1);
}

#[test]
fn pretty_table() {
    let (code, _, out) = ccdeg(&["degree", "--n", "5", "--pretty"], None);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("degree") && l.ends_with("27")));
}

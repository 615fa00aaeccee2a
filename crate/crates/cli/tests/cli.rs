use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn satdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satdom"))
        .args(args)
        .output()
        .unwrap()
}

fn satdom_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satdom"))
        .args(args)
        .env(key, value)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gamma_values() {
    let doc = json(&satdom(&["gamma", "--rect", "7", "7"]));
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "gamma");
    assert_eq!(doc["result"]["value"], 12);
    assert_eq!(doc["result"]["method"], "dp");
    assert_eq!(
        doc["result"]["witness"]["cells"].as_array().unwrap().len(),
        12
    );
    assert_eq!(
        json(&satdom(&["gamma", "--rect", "1", "9"]))["result"]["value"],
        3
    );
    let bb = json(&satdom(&[
        "gamma",
        "--rect",
        "7",
        "7",
        "--method",
        "bb",
        "--threads",
        "4",
    ]));
    assert_eq!(bb["result"]["value"], 12);
    assert_eq!(bb["result"]["method"], "bb");
}

#[test]
fn gamma_from_cell_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "plus.cells",
        r#"{"kind": "square", "cells": [[0,1],[1,0],[1,1],[1,2],[2,1],[3,1]]}"#,
    );
    let doc = json(&satdom(&["gamma", "--board", &path]));
    let board = satdom::grid::parse_board(
        &std::fs::read_to_string(&path).unwrap(),
        satdom::BoardFormat::CellList,
    )
    .unwrap();
    let lib = satdom::gamma_exact(&satdom::adjacency_graph(&board), Default::default()).unwrap();
    assert_eq!(doc["result"]["value"], lib.value);
    assert_eq!(doc["result"]["method"], "bb");
}

#[test]
fn tile_saturate_xcover() {
    let sat = json(&satdom(&["saturate", "--rect", "7", "7"]));
    assert_eq!(sat["result"]["value"], 37);
    assert_eq!(sat["result"]["saturated"], true);
    assert_eq!(
        sat["result"]["witness"]["dominoes"]
            .as_array()
            .unwrap()
            .len(),
        37
    );
    let tile = json(&satdom(&["tile", "--rect", "6", "6"]));
    assert_eq!(tile["result"]["value"], 10);
    assert_eq!(tile["result"]["witness"]["type"], "fragment_tiling");
    let x = json(&satdom(&["xcover", "--tri", "5"]));
    assert_eq!(x["result"]["value"], 7);
    let x = json(&satdom(&[
        "xcover",
        "--tri",
        "21",
        "--method",
        "construction",
    ]));
    assert_eq!(x["result"]["value"], 111);
}

#[test]
fn renderings() {
    let ascii = text(&satdom(&["tile", "--rect", "2", "3", "--format", "ascii"]));
    assert_eq!(ascii.lines().count(), 2);
    assert!(ascii.starts_with('A'));
    let svg = text(&satdom(&[
        "xcover",
        "--tri",
        "5",
        "--method",
        "construction",
        "--format",
        "svg",
    ]));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("url(#hatch)"));
    let svg = text(&satdom(&["saturate", "--square", "3", "--format", "svg"]));
    assert_eq!(svg.matches("<circle").count(), 3);
    let out = satdom(&["seq", "A008620", "3", "--format", "svg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sequences() {
    assert_eq!(
        text(&satdom(&["seq", "A193764", "6", "--format", "ascii"])),
        "2 6 12 18 26 37\n"
    );
    assert_eq!(
        text(&satdom(&["seq", "A193766", "5", "--format", "ascii"])),
        "2 4 6 8 11\n"
    );
    let doc = json(&satdom(&["seq", "A104519", "19", "--verify"]));
    let terms: Vec<u64> = doc["result"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(
        terms,
        [1, 2, 3, 4, 7, 10, 12, 16, 20, 24, 29, 35, 40, 47, 53, 60, 68, 76, 84]
    );
    let checks = doc["result"]["checks"].as_array().unwrap();
    assert_eq!(
        checks.iter().filter(|c| !c["recomputed"].is_null()).count(),
        14
    );
    assert!(checks[14]["recomputed"].is_null());
}

#[test]
fn sequence_errors() {
    assert_eq!(satdom(&["seq", "A000045", "3"]).status.code(), Some(2));
    assert_eq!(satdom(&["seq", "A104519", "20"]).status.code(), Some(3));
}

#[test]
fn check_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let tile = satdom(&["tile", "--rect", "7", "7"]);
    let path = write(dir.path(), "t7.json", &text(&tile));
    let doc = json(&satdom(&["check", "--witness", &path, "--rect", "7", "7"]));
    assert_eq!(doc["result"]["valid"], true);
    assert_eq!(doc["result"]["size"], 12);
    // The same witness does not belong to a 6 x 6 board.
    assert_eq!(
        satdom(&["check", "--witness", &path, "--rect", "6", "6"])
            .status
            .code(),
        Some(5)
    );
    for cmd in [
        &["gamma", "--tri", "4"][..],
        &["saturate", "--tri", "3"],
        &["xcover", "--square", "4"],
    ] {
        let p = write(dir.path(), "doc.json", &text(&satdom(cmd)));
        assert!(
            satdom(&["check", "--witness", &p]).status.success(),
            "{cmd:?}"
        );
    }
}

#[test]
fn check_names_redundant_domino() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "three.json",
        r#"{"type": "domino_covering",
            "board": {"kind": "square", "cells": [[0,0],[0,1],[1,0],[1,1]]},
            "dominoes": [[[0,0],[0,1]], [[1,0],[1,1]], [[0,0],[1,0]]]}"#,
    );
    let out = satdom(&["check", "--witness", &path]);
    assert_eq!(out.status.code(), Some(5));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["valid"], false);
    assert_eq!(
        doc["result"]["counterexample"],
        serde_json::json!([[0, 0], [1, 0]])
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("(0, 0)-(1, 0)"));
}

#[test]
fn check_names_overlapped_cell() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "overlap.json",
        r#"{"type": "fragment_tiling",
            "board": {"kind": "square", "cells": [[0,0],[0,1],[0,2]]},
            "fragments": [{"center": [0,0], "spokes": [[0,1]]}, {"center": [0,2], "spokes": [[0,1]]}]}"#,
    );
    let out = satdom(&["check", "--witness", &path]);
    assert_eq!(out.status.code(), Some(5));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["counterexample"], serde_json::json!([[0, 1]]));
    let garbage = write(dir.path(), "garbage.json", "{ not json");
    assert_eq!(
        satdom(&["check", "--witness", &garbage]).status.code(),
        Some(2)
    );
}

#[test]
fn regularity() {
    assert_eq!(
        json(&satdom(&["regular", "--rect", "5", "5"]))["result"]["value"],
        true
    );
    assert_eq!(
        json(&satdom(&["regular", "--tri", "4"]))["result"]["value"],
        true
    );
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "notch.txt", "##\n.#\n##\n");
    let doc = json(&satdom(&["regular", "--board", &path]));
    assert_eq!(doc["result"]["value"], false);
    assert_eq!(
        doc["result"]["witness"],
        serde_json::json!([[0, 0], [2, 0]])
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "##\n#x\n");
    let out = satdom(&["gamma", "--board", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 2"));
    assert_eq!(satdom(&["gamma"]).status.code(), Some(2));
    assert_eq!(
        satdom(&["gamma", "--rect", "3", "3", "--square", "3"])
            .status
            .code(),
        Some(2)
    );

    let out = satdom_env(
        &["gamma", "--square", "9", "--method", "bb"],
        "SATDOM_NODE_BUDGET",
        "10",
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert_eq!(
        satdom(&["gamma", "--rect", "15", "15", "--method", "dp"])
            .status
            .code(),
        Some(3)
    );

    let iso = write(dir.path(), "iso.txt", "#.#\n");
    assert_eq!(satdom(&["tile", "--board", &iso]).status.code(), Some(4));
    assert_eq!(
        satdom(&["saturate", "--board", &iso]).status.code(),
        Some(4)
    );
    // Domination and covers are defined with isolated cells too.
    assert_eq!(
        json(&satdom(&["gamma", "--board", &iso]))["result"]["value"],
        2
    );
    assert_eq!(
        json(&satdom(&["xcover", "--board", &iso]))["result"]["value"],
        1
    );
}

use std::process::{Command, Output};

use serde_json::Value;

fn delseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delseq"))
        .args(args)
        .env_remove("DELSEQ_MAX_BITS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = delseq(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn posterior_small() {
    let text = stdout(&["posterior", "--x", "0", "--n", "2"]);
    assert_eq!(
        text,
        "y,omega,prob,count\n00,2,0.5,1\n01,1,0.25,1\n10,1,0.25,1\ntotal,4,1,3\n"
    );
}

#[test]
fn posterior_110_at_5() {
    let rows = csv_rows(&stdout(&["posterior", "--x", "110", "--n", "5"]));
    assert_eq!(rows.len(), 17);
    let total = rows.last().unwrap();
    assert_eq!(total[..], ["total", "40", "1", "16"]);
    // 11010 is a member even though one printed table leaves it out.
    assert!(rows.iter().any(|r| r[0] == "11010"));
}

#[test]
fn exit_codes() {
    assert_eq!(delseq(&["posterior", "--x", "11", "--n", "1"]).status.code(), Some(2));
    assert_eq!(delseq(&["posterior", "--x", "12", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        delseq(&["classes", "--x-rle", "1,1", "--deletions", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(delseq(&["posterior", "--x", "1", "--n", "23"]).status.code(), Some(3));
    let ok = delseq(&["--max-bits", "23", "singletons", "--x", "1", "--n", "23"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn max_bits_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_delseq"))
        .args(["posterior", "--x", "1", "--n", "6"])
        .env("DELSEQ_MAX_BITS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn classes_double_deletion() {
    let rows = csv_rows(&stdout(&["classes", "--x-rle", "1,1", "--deletions", "2"]));
    let classes: Vec<(&str, &str)> = rows.iter().map(|r| (r[0].as_str(), r[1].as_str())).collect();
    assert_eq!(classes, [("4", "1"), ("3", "3"), ("2", "4"), ("1", "3")]);
    assert!(rows.iter().all(|r| r[2..] == ["true", "true", "true"]));
}

#[test]
fn clusters_110_at_5() {
    let rows = csv_rows(&stdout(&["clusters", "--x", "110", "--n", "5"]));
    let sizes: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(sizes, ["6", "7", "3"]);
    for r in &rows {
        assert!(r[1..5].iter().all(|v| *v == r[1]), "{r:?}");
        assert_eq!(r[5], r[6]);
        assert_eq!(r[7], r[8]);
    }
}

#[test]
fn entropy_scan_rows_and_ordering() {
    let rows = csv_rows(&stdout(&["entropy-scan", "--n", "8", "--m", "5"]));
    assert_eq!(rows.len(), 32);
    assert_eq!(rows[0][0], "00000");
    assert_eq!(rows[31][0], "11111");
    for r in &rows {
        let h: Vec<f64> = r[2..].iter().map(|v| v.parse().unwrap()).collect();
        assert!(h[0] >= h[1] && h[1] >= h[2], "{r:?}");
    }
    let zero = csv_rows(&stdout(&[
        "entropy-scan",
        "--n",
        "4",
        "--m",
        "4",
        "--measures",
        "shannon,min,hartley",
    ]));
    assert!(zero.iter().all(|r| r[2..].iter().all(|v| v == "0")));
}

#[test]
fn embed_example() {
    let rows = csv_rows(&stdout(&["embed", "--x", "0011", "--y", "0000111100001111"]));
    let maps: Vec<&str> = rows.iter().filter(|r| r[0] == "map").map(|r| r[2].as_str()).collect();
    assert_eq!(maps, ["36", "132", "132"]);
    assert!(rows.iter().filter(|r| r[0] == "map").all(|r| r[2] == r[3]));
    assert!(rows
        .iter()
        .filter(|r| r[0] != "map")
        .all(|r| r[2] == "300" && r[3] == "300"));
}

#[test]
fn remaining_commands_run() {
    let s = csv_rows(&stdout(&["singletons", "--x", "0110", "--n", "7"]));
    assert_eq!(s[0][2], s[0][3]);
    let g = csv_rows(&stdout(&["gchain", "--x", "01011", "--n", "7", "--measure", "renyi2"]));
    assert_eq!(g.len(), 4);
    let h: Vec<f64> = g.iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(h.windows(2).all(|w| w[0] > w[1]));
    let e = csv_rows(&stdout(&["estimate", "--x", "0101", "--n", "9"]));
    assert_eq!(e[0][4], "true");
    let k = csv_rows(&stdout(&["kappa", "--m", "3"]));
    assert_eq!(k[0][..2], ["000", "30"]);
    assert_eq!(k.len(), 8);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["entropy-scan", "--n", "7", "--m", "4"][..],
        &["--format", "json", "kappa", "--m", "4", "--n", "6"][..],
        &[
            "verify",
            "--max-n",
            "5",
            "--suite",
            "embeddings",
            "--suite",
            "deletion-classes",
        ][..],
    ] {
        assert_eq!(delseq(args).stdout, delseq(args).stdout, "{args:?}");
    }
}

/// Every CSV cell reappears in the JSON rows: integers as strings, reals
/// as numbers that print back to the same text.
#[test]
fn csv_and_json_agree() {
    for args in [
        &["posterior", "--x", "101", "--n", "6"][..],
        &[
            "entropy-scan",
            "--n",
            "6",
            "--m",
            "3",
            "--measures",
            "shannon,renyi0.5,min",
        ][..],
        &["classes", "--x-rle", "s=0:2,1,3", "--deletions", "2"][..],
        &["estimate", "--x", "011", "--n", "8"][..],
    ] {
        let csv_text = stdout(args);
        let mut json_args = vec!["--format", "json"];
        json_args.extend_from_slice(args);
        let json: Value = serde_json::from_str(&stdout(&json_args)).unwrap();
        let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
        let headers: Vec<String> = rdr.headers().unwrap().iter().map(str::to_string).collect();
        let rows = json["rows"].as_array().unwrap();
        let records: Vec<_> = rdr.records().map(Result::unwrap).collect();
        assert_eq!(records.len(), rows.len());
        for (rec, obj) in records.iter().zip(rows) {
            let keys: Vec<&String> = obj.as_object().unwrap().keys().collect();
            assert_eq!(keys, headers.iter().collect::<Vec<_>>());
            for (h, cell) in headers.iter().zip(rec.iter()) {
                let v = &obj[h];
                let rendered = match v {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.as_f64().unwrap().to_string(),
                    Value::Bool(b) => b.to_string(),
                    other => panic!("unexpected {other}"),
                };
                assert_eq!(rendered, cell, "{args:?} column {h}");
            }
        }
        assert!(json["schema"].is_string() && json["params"].is_object());
    }
}

#[test]
fn verify_small_and_help() {
    let out = delseq(&["verify", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), delseq_cli::verify::SUITES.len());
    assert!(rows.iter().all(|r| r[2] == "0" && r[4] == "ok"));

    let help = stdout(&["verify", "--help"]);
    for s in delseq_cli::verify::SUITES {
        assert!(help.contains(s), "{s} missing from help");
    }
    assert_eq!(delseq(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

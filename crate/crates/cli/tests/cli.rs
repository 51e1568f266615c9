use std::process::{Command, Output};

use plactic::{Bpd, Permutation, PlacticBiword};
use serde_json::Value;

fn plactic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plactic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = plactic(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn bpds_of_a_transposition() {
    let o = plactic(&["bpds", "--perm", "21"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with(".r\nr+\n"), "{text}");
    assert!(text.contains("1 pipe dreams of 21"));
}

#[test]
fn bpd_counts_match_library() {
    for w in ["1432", "2143", "3142", "4321"] {
        let v = json(&["bpds", "--perm", w]);
        let p: Permutation = w.parse().unwrap();
        assert_eq!(v["count"].as_u64().unwrap() as usize, Bpd::all(&p).len());
    }
}

#[test]
fn bpd_json_round_trips() {
    let v = json(&["bpds", "--perm", "1432"]);
    let p: Permutation = "1432".parse().unwrap();
    let ds: Vec<Bpd> = serde_json::from_value(v["bpds"].clone()).unwrap();
    assert_eq!(ds, Bpd::all(&p));
    for d in &ds {
        let text = serde_json::to_string(d).unwrap();
        let r = json(&["render", "--bpd", &text]);
        let back: Bpd = serde_json::from_value(r["bpd"].clone()).unwrap();
        assert_eq!(&back, d);
    }
}

#[test]
fn maxword_feeds_phi() {
    let dir = std::env::temp_dir().join(format!("plactic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let v = json(&["maxword", "--perm", "1432"]);
    for entry in v["words"].as_array().unwrap() {
        let word: PlacticBiword = serde_json::from_value(entry["word"].clone()).unwrap();
        let path = dir.join("w.json");
        std::fs::write(&path, serde_json::to_string(&word).unwrap()).unwrap();
        let phi = json(&["phi", "--biword", path.to_str().unwrap()]);
        assert_eq!(phi["bpd"], entry["bpd"]);
        // both build orders agree
        let right = json(&["insert", "--order", "right", "--biword", path.to_str().unwrap()]);
        assert_eq!(right["bpd"], entry["bpd"]);
    }
}

#[test]
fn fiber_and_knuth_class_agree() {
    let d = "..r-\n.rjr\nrjr+\n|r++\n";
    let fiber = json(&["fiber", "--bpd", d]);
    let words = fiber["words"].as_array().unwrap();
    let first = serde_json::to_string(&words[0]).unwrap();
    let class = json(&["knuth-class", "--biword", &first]);
    let mut a = class["class"].as_array().unwrap().clone();
    let mut b = words.clone();
    a.sort_by_key(|v| v.to_string());
    b.sort_by_key(|v| v.to_string());
    assert_eq!(a, b);
}

#[test]
fn schubert_methods_agree() {
    for w in ["1432", "2413", "3412"] {
        let a = json(&["schubert", "--perm", w]);
        let b = json(&["schubert", "--perm", w, "--method", "divdiff"]);
        assert_eq!(a["terms"], b["terms"]);
    }
}

#[test]
fn chains_of_a_grassmannian_line() {
    let v = json(&["chains", "--labels", "1,2"]);
    let counts: Vec<(String, u64)> = v["chains"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                serde_json::from_value::<Permutation>(r["perm"].clone()).unwrap().to_string(),
                r["count"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(counts, vec![("231".to_string(), 1), ("312".to_string(), 1)]);
}

#[test]
fn constants_match_expansion() {
    let v = json(&["constants", "--pi", "132", "--rho", "213"]);
    for row in v["constants"].as_array().unwrap() {
        assert_eq!(row["expansion"].as_i64(), row["counted"].as_i64());
    }
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(plactic(&["bpds", "--perm", "113"]).status.code(), Some(2));
    assert_eq!(plactic(&["render", "--bpd", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(plactic(&["constants", "--pi", "1432", "--rho", "1432"]).status.code(), Some(2));
}

#[test]
fn verify_suite_passes() {
    let v = json(&["verify", "monk", "--max-n", "3"]);
    assert_eq!(v["ok"], true);
    let o = plactic(&["verify", "example"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
}

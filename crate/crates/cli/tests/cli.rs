use std::collections::BTreeSet;
use std::process::{Command, Output};

use cordial_core::{AffineElement, Config, RootDatum};
use serde_json::{json, Value};

const SL2: &str = r#"{"components":[{"type":"A","rank":1}],"lattice":"sc"}"#;
const GL2: &str = r#"{"components":[{"type":"A","rank":1}],"lattice":"gl"}"#;
const A2: &str = r#"{"components":[{"type":"A","rank":2}],"lattice":"adjoint"}"#;
const GL3: &str = r#"{"components":[{"type":"A","rank":2}],"lattice":"gl"}"#;
const PGL2_TWISTED: &str =
    r#"{"components":[{"type":"A","rank":1}],"lattice":"adjoint","frobenius":{"twist":{"sigma1_word":[1],"mu_sigma":[1]}}}"#;

fn cordial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cordial")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = cordial(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_lines(args: &[&str]) -> Vec<Value> {
    stdout(args).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn describe_reports_group_data() {
    let v = &json_lines(&["describe", "--config", A2, "--json"])[0];
    assert_eq!(v["weyl_order"], 6);
    assert_eq!(v["positive_roots"], 3);
    assert_eq!(v["pi1"], "Z/3");
    assert_eq!(json_lines(&["describe", "--config", SL2, "--json"])[0]["pi1"], "trivial");
    assert_eq!(json_lines(&["describe", "--config", GL2, "--json"])[0]["pi1"], "Z");
    let text = stdout(&["describe", "--config", A2]);
    assert!(text.contains("|W|: 6") && text.contains("pi1: Z/3"));
}

#[test]
fn config_from_file() {
    let path = std::env::temp_dir().join(format!("cordial-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, GL2).unwrap();
    let v = &json_lines(&["describe", "--config", path.to_str().unwrap(), "--json"])[0];
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["dim"], 2);
}

#[test]
fn element_cordial_matches_known_values() {
    let s0 = json_lines(&["element", "--config", GL3, "--expr", "s0", "cordial"]);
    assert_eq!(s0[0], json!({"cordial": false, "failed": "(2)", "d": 1, "len": 3}));
    for s in ["s1", "s2"] {
        assert_eq!(json_lines(&["element", "--config", GL3, "--expr", s, "cordial"])[0], json!({"cordial": true}));
    }
}

#[test]
fn element_gnp_for_sl2() {
    let v = &json_lines(&["element", "--config", SL2, "--expr", "t[1] s", "gnp", "--test-mode"])[0];
    assert_eq!(v["nu"], json!(["1"]));
    assert_eq!(v["nu_coroot"], json!(["1"]));
    assert_eq!(v["lambda"], json!(["1"]));
    assert_eq!(v["witness"], "e");
    assert!(v.get("d_min").is_some() && v.get("used_J").is_some());
}

#[test]
fn element_prints_one_object_per_verb() {
    let verbs = ["lp", "signtype", "gnp", "lambda", "defect", "cordial", "vdim", "fundamental"];
    let mut args = vec!["element", "--config", GL3, "--expr", "s0"];
    args.extend(verbs);
    let lines = json_lines(&args);
    assert_eq!(lines.len(), verbs.len());
    assert_eq!(lines[6]["vdim"], "2");
    assert_eq!(lines[7]["fundamental"], false);
}

#[test]
fn element_rejects_bad_expression() {
    let out = cordial(&["element", "--config", GL3, "--expr", "s7", "lp"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn scan_cordial_gl3_length_one() {
    let d = RootDatum::from_json(GL3).unwrap();
    let text = stdout(&["scan-cordial", "--config", GL3, "--cap", "1"]);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("w,mu,cordial,d_min,len,shrunken"));
    let row_of = |x: &AffineElement| {
        let mu: Vec<String> = x.mu.iter().map(|m| m.to_string()).collect();
        format!("{},\"{}\",", d.weyl().format(x.w), mu.join(","))
    };
    let find = |expr: &str| {
        let prefix = row_of(&AffineElement::parse(&d, expr).unwrap());
        text.lines().find(|l| l.starts_with(&prefix)).unwrap().to_string()
    };
    assert!(find("s1").contains(",true,"));
    assert!(find("s2").contains(",true,"));
    assert!(find("s0").contains(",false,"));
}

#[test]
fn scan_dominant_translations_are_cordial() {
    let d = RootDatum::new(Config::new(&[("A", 2)], "gl")).unwrap();
    let rows: Value = serde_json::from_str(&stdout(&["scan-cordial", "--config", GL3, "--cap", "3", "--json"])).unwrap();
    let mut seen = 0;
    for r in rows.as_array().unwrap() {
        let mu: Vec<i64> = serde_json::from_value(r["mu"].clone()).unwrap();
        let dominant = (0..d.num_pos()).all(|a| d.pairing(&mu, a) >= 0);
        if r["w"] == "e" && dominant {
            assert_eq!(r["cordial"], true, "{r}");
            seen += 1;
        }
    }
    assert!(seen > 1);
}

#[test]
fn outputs_are_deterministic() {
    let a = stdout(&["scan-cordial", "--config", GL3, "--cap", "3"]);
    let b = stdout(&["scan-cordial", "--config", GL3, "--cap", "3", "--jobs", "3"]);
    let c = stdout(&["--jobs", "1", "scan-cordial", "--config", GL3, "--cap", "3"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(stdout(&["qbg-dot", "--config", A2]), stdout(&["qbg-dot", "--config", A2]));
}

fn dot_edges(dot: &str) -> (Vec<String>, BTreeSet<(String, String)>) {
    let mut labels = Vec::new();
    let mut edges = BTreeSet::new();
    for line in dot.lines().map(str::trim) {
        if let Some((id, rest)) = line.split_once(" [label=\"") {
            if !id.contains("->") {
                assert_eq!(id, format!("v{}", labels.len()));
                labels.push(rest.split('"').next().unwrap().to_string());
                continue;
            }
        }
        if let Some((a, b)) = line.split_once(" -> ") {
            let b = b.split([' ', ';']).next().unwrap();
            let idx = |s: &str| s.trim_start_matches('v').parse::<usize>().unwrap();
            edges.insert((labels[idx(a)].clone(), labels[idx(b)].clone()));
        }
    }
    (labels, edges)
}

#[test]
fn qbg_dot_counts_and_edges() {
    let (labels, edges) = dot_edges(&stdout(&["qbg-dot", "--config", SL2]));
    assert_eq!(labels.len(), 2);
    assert_eq!(edges.len(), 2);

    let d = RootDatum::from_json(A2).unwrap();
    let wg = d.weyl();
    let (labels, edges) = dot_edges(&stdout(&["qbg-dot", "--config", A2, "--dot"]));
    assert_eq!(labels.len(), 6);
    let mut expected = BTreeSet::new();
    for w in wg.elements() {
        for a in 0..d.num_pos() {
            let ws = wg.mul(w, d.reflection(a).unwrap());
            let (lw, lws) = (wg.length(w) as i64, wg.length(ws) as i64);
            let height = d.pairing_two_rho(d.coroot(a));
            if lws == lw + 1 || lws == lw + 1 - height {
                expected.insert((wg.format(w), wg.format(ws)));
            }
        }
    }
    assert_eq!(edges, expected);
}

#[test]
fn empty_rank_is_rejected() {
    let out = cordial(&["qbg-dot", "--config", r#"{"components":[]}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("components"));
}

#[test]
fn verify_passes_on_small_data() {
    for (config, cap) in [(SL2, "6"), (A2, "6")] {
        let out = cordial(&["verify", "--config", config, "--cap", cap, "--json", "--test-mode"]);
        assert_eq!(out.status.code(), Some(0));
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["failed"], 0);
        assert!(v["passed"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_reports_corrupted_table() {
    let out = cordial(&["verify", "--config", A2, "--cap", "2", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("first counterexample: weight-2rho"));

    let d = RootDatum::from_json(A2).unwrap();
    let mut q = cordial_core::QuantumBruhatGraph::build(&d).unwrap();
    let wg = d.weyl();
    q.corrupt_weight(wg.simple(0), wg.identity(), &[1, 0]);
    let s = cordial_cli::verify(&d, &q, 2, false);
    assert!(s.failed > 0);
    assert_eq!(s.exit_code(), 1);
}

#[test]
fn twisted_data_carry_the_proviso() {
    let v = &json_lines(&["element", "--config", PGL2_TWISTED, "--expr", "s1", "cordial", "gnp"]);
    assert!(v[0]["proviso"].as_str().unwrap().contains("char(F)"));
    assert_eq!(v[1]["twisted"], true);
    let out = cordial(&["scan-cordial", "--config", PGL2_TWISTED, "--cap", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let out = cordial(&["verify", "--config", PGL2_TWISTED, "--cap", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

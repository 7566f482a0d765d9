use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use probe_block::cli::run;
use probe_block::io::{parse_edge_list, to_graph6, write_edge_list};
use probe_block::partition::parse_partition;
use probe_block_core::graph::Graph;
use probe_block_core::oracle::pattern;
use serde_json::Value;
use tempfile::TempDir;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("probe-block").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, write_edge_list(g)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_c4_two_probe_block() {
    let dir = TempDir::new().unwrap();
    let c4 = write_graph(dir.path(), "c4.el", &Graph::cycle(4));
    let (code, out, _) = invoke(&["--json", "check", "--class", "2probe-block", s(&c4)]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n1"], serde_json::json!([0, 2]));
    assert_eq!(v["n2"], serde_json::json!([1, 3]));
    assert_eq!(v["added_edges"], serde_json::json!([[0, 2], [1, 3]]));
    for stage in [
        "decomposition",
        "block-structure",
        "find-nonprobes",
        "verification",
    ] {
        assert!(v["timing"][stage].is_number(), "{stage}");
    }
}

#[test]
fn check_diamond_block_refutation() {
    let dir = TempDir::new().unwrap();
    let d = write_graph(dir.path(), "diamond.el", &pattern("diamond").unwrap());
    let (code, out, _) = invoke(&["--json", "check", "--class", "block", s(&d)]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["refutation"]["stage"], "block-clique");
    assert_eq!(v["refutation"]["detail"], serde_json::json!([2, 3]));
    assert!(v.get("n1").is_none());
}

#[test]
fn planted_instance_with_partition_file() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.el");
    let p = dir.path().join("p.json");
    let (code, _, _) = invoke(&[
        "generate",
        "--kind",
        "plant2",
        "--n",
        "300",
        "--seed",
        "11",
        "--out",
        s(&g),
        "--partition-out",
        s(&p),
    ]);
    assert_eq!(code, 0);
    let (code, _, _) = invoke(&[
        "check",
        "--class",
        "2probe-block",
        "--partition",
        s(&p),
        s(&g),
    ]);
    assert_eq!(code, 0);
    let (code, _, _) = invoke(&["check", "--class", "2probe-block", s(&g)]);
    assert_eq!(code, 0);
}

#[test]
fn reported_certificates_round_trip() {
    let dir = TempDir::new().unwrap();
    for seed in 0..20 {
        let g = dir.path().join(format!("g{seed}.el"));
        invoke(&[
            "generate",
            "--kind",
            "plant2",
            "--n",
            "60",
            "--seed",
            &seed.to_string(),
            "--out",
            s(&g),
        ]);
        let (code, out, _) = invoke(&["--json", "check", "--class", "2probe-block", s(&g)]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let p = dir.path().join(format!("p{seed}.json"));
        fs::write(
            &p,
            serde_json::json!({"N1": v["n1"], "N2": v["n2"]}).to_string(),
        )
        .unwrap();
        let (code, again, _) = invoke(&[
            "--json",
            "check",
            "--class",
            "2probe-block",
            "--partition",
            s(&p),
            s(&g),
        ]);
        assert_eq!(code, 0);
        let w: Value = serde_json::from_str(&again).unwrap();
        assert_eq!(w["added_edges"], v["added_edges"]);
    }
}

#[test]
fn generated_comment_carries_partition() {
    let (code, out, _) = invoke(&["generate", "--kind", "plant1", "--n", "40", "--seed", "2"]);
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    let json = first.strip_prefix("# partition ").unwrap();
    let part = parse_partition(json).unwrap();
    assert!(part.n2.is_empty());
    let g = parse_edge_list(&out).unwrap();
    assert_eq!(g.order(), 40);
}

#[test]
fn oracle_agrees_with_check() {
    let dir = TempDir::new().unwrap();
    for seed in 0..40u64 {
        let g = probe_block_core::gen::random_graph(8, 0.5, seed);
        let path = write_graph(dir.path(), &format!("r{seed}.el"), &g);
        for (class, oracle_class) in [
            ("2probe-block", "2probe-block"),
            ("probe-block", "probe-block"),
            ("2probe-complete", "2probe-complete"),
        ] {
            let (a, _, _) = invoke(&["check", "--class", class, s(&path)]);
            let (b, _, _) = invoke(&["oracle", "--class", oracle_class, s(&path)]);
            assert_eq!(a, b, "seed {seed} class {class}");
        }
    }
}

#[test]
fn witness_enhance_and_pattern() {
    let dir = TempDir::new().unwrap();
    let house = write_graph(dir.path(), "house.el", &pattern("house").unwrap());
    let (code, out, _) = invoke(&["--json", "witness", "--family", "dh", s(&house)]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pattern"], "house");
    let k4 = write_graph(dir.path(), "k4.el", &Graph::complete(4));
    assert_eq!(invoke(&["witness", "--family", "ptolemaic", s(&k4)]).0, 1);
    assert_eq!(invoke(&["witness", "--family", "nonsense", s(&k4)]).0, 2);

    let c4 = write_graph(dir.path(), "c4.el", &Graph::cycle(4));
    let p = dir.path().join("p.json");
    fs::write(&p, r#"{"N1":[0,2],"N2":[1,3]}"#).unwrap();
    let enhanced = dir.path().join("e.el");
    let (code, _, _) = invoke(&[
        "enhance",
        "--partition",
        s(&p),
        "--out",
        s(&enhanced),
        s(&c4),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_edge_list(&fs::read_to_string(&enhanced).unwrap()).unwrap(),
        Graph::complete(4)
    );
    assert_eq!(
        invoke(&["enhance", "--mode", "diamond", "--partition", s(&p), s(&c4)]).0,
        1
    );

    let (code, out, _) = invoke(&["pattern", "gem", "--format", "g6"]);
    assert_eq!(code, 0);
    assert_eq!(
        probe_block::io::parse_graph6(&out).unwrap(),
        pattern("gem").unwrap()
    );
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(invoke(&["check", "--class", "nope", "x.el"]).0, 2);
    assert_eq!(invoke(&["frobnicate"]).0, 2);
    let missing = dir.path().join("missing.el");
    let (code, _, err) = invoke(&["check", "--class", "block", s(&missing)]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"));
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "3 1\n0 7\n").unwrap();
    let (code, _, err) = invoke(&["check", "--class", "block", s(&bad)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let big = write_graph(dir.path(), "big.el", &Graph::cycle(13));
    assert_eq!(invoke(&["oracle", "--class", "2probe-block", s(&big)]).0, 2);
    let k2 = write_graph(dir.path(), "k2.el", &Graph::complete(2));
    let p = dir.path().join("p.json");
    fs::write(&p, r#"{"N1":[5]}"#).unwrap();
    assert_eq!(
        invoke(&[
            "check",
            "--class",
            "2probe-block",
            "--partition",
            s(&p),
            s(&k2)
        ])
        .0,
        2
    );
    assert_eq!(
        invoke(&["check", "--class", "block", "--partition", s(&p), s(&k2)]).0,
        2
    );
}

#[test]
fn graph6_corpus_checks_every_graph() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("all.g6");
    // K4 and C4 are 2-probe block graphs; C5 is not
    let lines: Vec<String> = [Graph::complete(4), Graph::cycle(4), Graph::cycle(5)]
        .iter()
        .map(|g| to_graph6(g).unwrap())
        .collect();
    fs::write(&corpus, lines.join("\n")).unwrap();
    let (code, out, _) = invoke(&["--json", "check", "--class", "2probe-block", s(&corpus)]);
    assert_eq!(code, 1);
    let verdicts: Vec<String> = out
        .lines()
        .map(|l| {
            serde_json::from_str::<Value>(l).unwrap()["verdict"]
                .as_str()
                .unwrap()
                .to_owned()
        })
        .collect();
    assert_eq!(verdicts, ["yes", "yes", "no"]);
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let c5 = write_graph(dir.path(), "c5.el", &Graph::cycle(5));
    let bin = env!("CARGO_BIN_EXE_probe-block");
    let status = Command::new(bin)
        .args(["check", "--class", "2probe-block", s(&c5)])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&status.stdout).contains("verdict: no"));
    let status = Command::new(bin)
        .args(["bench", "--sizes", "100,200", "--repeat", "1"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    let csv = String::from_utf8(status.stdout).unwrap();
    assert_eq!(csv.lines().next(), Some("n,m,millis,verdict"));
    assert_eq!(csv.lines().count(), 3);
    assert_eq!(
        Command::new(bin)
            .arg("--help")
            .output()
            .unwrap()
            .status
            .code(),
        Some(0)
    );
}

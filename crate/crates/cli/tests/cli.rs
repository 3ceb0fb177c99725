use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn biscount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biscount")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn path_graph(dir: &TempDir) -> PathBuf {
    write(dir, "path.bis", "p bis 2 1 2\ne 1 1\ne 2 1\n")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("valid JSON report")
}

fn result(v: &serde_json::Value, name: &str) -> String {
    v["results"].as_array().unwrap().iter().find(|f| f["name"] == name).unwrap()["value"].as_str().unwrap().to_string()
}

#[test]
fn brute_lis_on_path() {
    let dir = TempDir::new().unwrap();
    let g = path_graph(&dir);
    let o = biscount(&["count", "--alg", "brute", "--problem", "lis", "--l", "1", s(&g), "--json"]);
    assert!(o.status.success());
    assert_eq!(result(&json(&o), "result"), "2");
}

#[test]
fn approx_k0_is_one() {
    let dir = TempDir::new().unwrap();
    let g = path_graph(&dir);
    let o = biscount(&["approx", "--k", "0", "--eps", "0.5", "--seed", "1", s(&g), "--json"]);
    assert!(o.status.success());
    assert_eq!(result(&json(&o), "result"), "1");
}

#[test]
fn verify_harness_agrees() {
    let o = biscount(&["verify", "--problem", "lis", "--l", "2", "--delta", "3", "--trials", "50", "--n", "12", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("50/50 agree"));
}

#[test]
fn verify_other_problems() {
    for args in [
        vec!["--problem", "isk", "--k", "3"],
        vec!["--problem", "maxlis", "--l", "2"],
        vec!["--problem", "nlr", "--l", "2"],
        vec!["--problem", "hom", "--n", "8"],
        vec!["--problem", "ind", "--n", "8"],
    ] {
        let mut argv = vec!["verify", "--trials", "10", "--seed", "4"];
        argv.extend(args);
        let o = biscount(&argv);
        assert_eq!(o.status.code(), Some(0), "{argv:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("10/10 agree"));
    }
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let dir = TempDir::new().unwrap();
    let g = path_graph(&dir);
    let run = || {
        let mut v = json(&biscount(&["count", "--problem", "nlr", "--l", "1", s(&g), "--json"]));
        v.as_object_mut().unwrap().remove("millis");
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(biscount(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(biscount(&["count", "--problem", "bogus", "x.bis"]).status.code(), Some(1));
    let g = path_graph(&dir);
    // isk without --k is a usage error
    assert_eq!(biscount(&["count", "--problem", "isk", s(&g)]).status.code(), Some(1));
    let bad = write(&dir, "bad.bis", "p bis 1 1 1\ne 2 1\n");
    let o = biscount(&["count", "--problem", "is", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
    let missing = dir.path().join("missing.bis");
    assert_eq!(biscount(&["count", "--problem", "is", s(&missing)]).status.code(), Some(2));
    assert_eq!(biscount(&["--help"]).status.code(), Some(0));
}

#[test]
fn guard_from_environment() {
    let dir = TempDir::new().unwrap();
    let g = path_graph(&dir);
    let o = Command::new(env!("CARGO_BIN_EXE_biscount"))
        .args(["count", "--alg", "brute", "--problem", "is", s(&g)])
        .env("BISCOUNT_GUARD", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
}

#[test]
fn generated_instance_counts_agree() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("g.bis");
    let o = biscount(&["gen", "--left", "6", "--right", "7", "--delta", "3", "--seed", "11", "--out", s(&file)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("p bis 6 7 "));
    // stdout generation gives the same bytes
    let o2 = biscount(&["gen", "--left", "6", "--right", "7", "--delta", "3", "--seed", "11"]);
    assert_eq!(stdout(&o2), text);
    for problem in [vec!["isk", "--k", "4"], vec!["lis", "--l", "2"], vec!["maxlis", "--l", "3"]] {
        let answers: Vec<_> = ["brute", "bounded"]
            .iter()
            .map(|alg| {
                let mut argv = vec!["count", "--json", "--alg", alg, "--problem"];
                argv.extend(&problem);
                argv.push(s(&file));
                let o = biscount(&argv);
                assert!(o.status.success(), "{argv:?}");
                json(&o)["results"].clone()
            })
            .collect();
        assert_eq!(answers[0], answers[1], "{problem:?}");
    }
}

#[test]
fn bounded_is_sums_left_sizes() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "small.bis", "p bis 3 4 5\ne 1 1\ne 1 2\ne 2 2\ne 3 3\ne 3 4\n");
    let brute = json(&biscount(&["count", "--alg", "brute", "--problem", "is", s(&g), "--json"]));
    let bounded = json(&biscount(&["count", "--alg", "bounded", "--problem", "is", s(&g), "--json"]));
    assert_eq!(result(&brute, "result"), result(&bounded, "result"));
}

#[test]
fn reduce_pipelines_with_traces() {
    let dir = TempDir::new().unwrap();
    let g = path_graph(&dir);
    let trace = dir.path().join("trace.json");
    let o = biscount(&["reduce", "--pipeline", "maxis", s(&g), "--trace", s(&trace), "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    // MAXIS of the path: {u1, u2} only
    assert_eq!(result(&v, "result"), "1");
    assert!(v["trace"]["matrix"].is_array());
    let written: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(written, v["trace"]);

    let o = biscount(&["reduce", "--pipeline", "clique-complement", "--k", "2", s(&g), "--json"]);
    // IS_2 of the path: {u1,u2}
    assert_eq!(result(&json(&o), "result"), "1");

    let tri = write(&dir, "k4.col", "p col 4 6 1\nv 1 1\nv 2 1\nv 3 1\nv 4 1\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    let o = biscount(&["reduce", "--pipeline", "clique-gadget", "--k", "3", s(&tri), "--json"]);
    assert_eq!(result(&json(&o), "result"), "4");
    let o = biscount(&["reduce", "--pipeline", "domset", "--k", "1", s(&tri), "--json"]);
    assert_eq!(result(&json(&o), "result"), "4");

    let edge = write(&dir, "edge.col", "p col 2 1 2\nv 1 1\nv 2 2\ne 1 2\n");
    let o = biscount(&["reduce", "--pipeline", "rainbow", "--t", "1", s(&edge), "--json"]);
    assert_eq!(result(&json(&o), "result"), "1");
}

#[test]
fn csv_output_and_bench() {
    let dir = TempDir::new().unwrap();
    let g = path_graph(&dir);
    let o = biscount(&["count", "--problem", "maxlis", "--l", "2", s(&g), "--csv"]);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "command,input_digest,algorithm,seed,size,count,millis");
    assert!(lines[1].contains(",2,1,"));

    let o = biscount(&["bench", "--sizes", "40,80", "--param", "1", "--gadget", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "n,m,delta,param,algorithm,millis,result_digest");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("40,"));
    assert!(lines[2].starts_with("80,"));
}

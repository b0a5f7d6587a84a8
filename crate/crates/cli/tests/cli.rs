use std::process::Command;

use matchforce_cli::app::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("matchforce").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn check<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == id)
        .unwrap()
}

#[test]
fn compute_complete_four() {
    let r = json(&["compute", "--family", "complete:4"]);
    assert_eq!(r["schema"], "matchforce/1");
    assert_eq!(r["gf"]["value"], 2);
    assert_eq!(r["Af"]["value"], 2);
    assert_eq!(r["F"]["value"], 1);
    assert_eq!(r["phi"], 3);
    assert_eq!(r["brick"], true);
    assert_eq!(r["in_class_G"]["member"], true);
    assert!(r.get("runtime_ms").is_none());
}

#[test]
fn compute_prism() {
    let r = json(&["compute", "--family", "prism_chain:1"]);
    assert_eq!(r["gf"]["value"], 2);
    assert_eq!(r["Af"]["value"], 3);
    assert_eq!(r["solid"], false);
    assert_eq!(r["in_class_G"]["member"], false);
    assert_eq!(r["fpm_equals_pm"]["equal"], false);
    let w = &r["fpm_equals_pm"]["witness"];
    assert_eq!(w["cycles"].as_array().unwrap().len(), 2);
    assert_eq!(w["vector"].as_array().unwrap().len(), 9);
}

#[test]
fn compute_inputs_agree() {
    let from_family = json(&["compute", "--family", "cycle:6"]);
    let from_graph6 = json(&["compute", "EhEG"]);
    assert_eq!(from_family["graph6"], "EhEG");
    assert_eq!(from_family["gf"], from_graph6["gf"]);
    let dir = std::env::temp_dir().join(format!("matchforce-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c6.txt");
    std::fs::write(&path, "# hexagon\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n").unwrap();
    let from_file = json(&["compute", "--edge-list", path.to_str().unwrap()]);
    assert_eq!(from_file["graph6"], "EhEG");
    assert_eq!(from_file["per_matching"], from_family["per_matching"]);
}

#[test]
fn compute_is_deterministic_and_writes_files() {
    let (_, a, _) = call(&["compute", "--family", "complete_bipartite:3"]);
    let (_, b, _) = call(&["compute", "--family", "complete_bipartite:3"]);
    assert_eq!(a, b);
    let path = std::env::temp_dir().join(format!("matchforce-out-{}.json", std::process::id()));
    let (code, out, _) = call(&[
        "compute",
        "--family",
        "complete_bipartite:3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn compute_timings_are_opt_in() {
    let r = json(&["compute", "--family", "complete:4", "--timings"]);
    assert!(r["runtime_ms"]["forcing"].is_number());
}

#[test]
fn compute_errors() {
    assert_eq!(call(&["compute", "Bw"]).0, 3);
    assert_eq!(call(&["compute", "C~~"]).0, 2);
    assert_eq!(call(&["compute"]).0, 2);
    assert_eq!(call(&["compute", "--family", "nosuch:3"]).0, 2);
    let (code, _, err) = call(&["compute", "--family", "complete:8", "--max-matchings", "10"]);
    assert_eq!(code, 4);
    assert!(err.contains("matching"), "{err}");
}

#[test]
fn verify_examples() {
    let r = json(&["verify", "T05", "--all", "6"]);
    assert_eq!(check(&r, "T05")["status"], "pass");

    let r = json(&["verify", "T16", "--family", "prism_chain:2"]);
    assert_eq!(check(&r, "T16")["status"], "pass");
    assert_eq!(check(&r, "T16")["detail"], "prism_chain:2 gf=5 Af=7");

    let r = json(&["verify", "T06", "--family", "prism_chain:1"]);
    let t06 = check(&r, "T06");
    assert_eq!(t06["status"], "skipped");
    assert!(t06["reason"].as_str().unwrap().contains("bipartite"));
}

#[test]
fn verify_all_checks_on_small_families() {
    let r = json(&[
        "verify",
        "--family",
        "complete:4",
        "--family",
        "complete_bipartite:3",
        "--family",
        "prism_chain:1",
    ]);
    assert_eq!(r["graphs"], 3);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 16);
    assert!(checks.iter().all(|c| c["status"] != "fail"), "{r}");
}

#[test]
fn verify_usage_errors() {
    assert_eq!(call(&["verify", "T99", "--all", "2"]).0, 2);
    assert_eq!(call(&["verify", "T01"]).0, 2);
    assert_eq!(call(&["verify", "T01", "--all", "7"]).0, 2);
    assert_eq!(
        call(&["verify", "T01", "--random", "3", "--random-order", "7"]).0,
        2
    );
}

#[test]
fn verify_graph6_file_and_random() {
    let path = std::env::temp_dir().join(format!("matchforce-g6-{}.txt", std::process::id()));
    std::fs::write(&path, "C~\n\nEhEG\n").unwrap();
    let r = json(&["verify", "T03", "--graph6-file", path.to_str().unwrap()]);
    assert_eq!(r["graphs"], 2);
    assert_eq!(check(&r, "T03")["status"], "pass");
    std::fs::remove_file(path).unwrap();

    let a = json(&["verify", "T01", "--random", "5", "--seed", "3"]);
    let b = json(&[
        "verify", "T01", "--random", "5", "--seed", "3", "--jobs", "2",
    ]);
    assert_eq!(a, b);
    assert_eq!(a["corpus"], "random:5x8:seed=3");
}

#[test]
fn gen_examples() {
    let (code, out, _) = call(&["gen", "complete_bipartite:3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "EFz_\n");
    let (code, out, _) = call(&["gen", "prism_chain:3", "--format", "edge-list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("18 31"));
    assert_eq!(out.lines().count(), 32);
    assert_eq!(call(&["gen", "odd_dumbbell:3,3,2"]).0, 2);
}

#[test]
fn budget_environment_and_flag_precedence() {
    let bin = env!("CARGO_BIN_EXE_matchforce");
    let status = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(["compute", "--family", "complete:6"]);
        cmd.env_remove("MATCHFORCE_MAX_MATCHINGS");
        if let Some(v) = env {
            cmd.env("MATCHFORCE_MAX_MATCHINGS", v);
        }
        if let Some(v) = flag {
            cmd.args(["--max-matchings", v]);
        }
        cmd.output().unwrap().status.code().unwrap()
    };
    assert_eq!(status(None, None), 0);
    assert_eq!(status(Some("5"), None), 4);
    assert_eq!(status(Some("5"), Some("100")), 0);
    assert_eq!(status(Some("100"), Some("5")), 4);
}

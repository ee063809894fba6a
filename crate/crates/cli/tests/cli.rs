use std::path::Path;
use std::process::{Command, Output};

use arm_core::explore::Finding;
use arm_core::rigidity::cycle_matroid_arm;
use arm_core::Matroid;
use serde_json::Value;
use tempfile::TempDir;

fn armw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_armw"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn built(dir: &TempDir, n: &str, m: &str) -> String {
    let p = dir.path().join(format!("g{n}{m}.json"));
    let out = armw(&[
        "build",
        "--n",
        n,
        "--m",
        m,
        "--seed",
        "7",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p.to_str().unwrap().to_owned()
}

fn read_json(path: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(Path::new(path)).unwrap()).unwrap()
}

#[test]
fn build_writes_matroids() {
    let dir = TempDir::new().unwrap();
    assert_eq!(read_json(&built(&dir, "5", "2"))["rank"], 7);
    let cycle = read_json(&built(&dir, "4", "1"));
    assert_eq!(cycle["rank"], 3);
    assert_eq!(cycle["backend"], "cycle");
    assert_eq!(code(&armw(&["build", "--n", "3", "--m", "3"])), 2);
    assert_eq!(code(&armw(&["build", "--n", "3"])), 2);
}

#[test]
fn check_passes_on_rigidity_matroids() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "5", "2");
    let out = armw(&["check", &g, "--m", "2", "--suites", "prop6,D,H,B,Z"]);
    assert_eq!(code(&out), 0);
    let reports = lines(&out);
    assert_eq!(reports.len(), 5);
    assert!(reports.iter().all(|r| r["passed"] == true));

    let g6 = built(&dir, "6", "2");
    let out = armw(&["check", &g6, "--m", "2", "--suites", "hm"]);
    assert_eq!(code(&out), 0);
    assert_eq!(lines(&out)[0]["strict"], true);

    let out = armw(&[
        "check",
        &g6,
        "--m",
        "2",
        "--suites",
        "connect",
        "--scope",
        "sampled:200",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    assert!(lines(&out)[0]["scope"].to_string().contains("sampled"));
}

#[test]
fn check_reports_witnesses() {
    let dir = TempDir::new().unwrap();
    let u = write(
        &dir,
        "u.json",
        &Matroid::uniform(5, 5).unwrap().to_json_string(),
    );
    let out = armw(&["check", &u, "--m", "2", "--suites", "Z"]);
    assert_eq!(code(&out), 1);
    let r = &lines(&out)[0];
    assert_eq!(r["passed"], false);
    assert!(!r["violations"].as_array().unwrap().is_empty());
}

#[test]
fn check_usage_errors() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "4", "2");
    assert_eq!(
        code(&armw(&["check", &g, "--m", "2", "--suites", "nope"])),
        2
    );
    assert_eq!(
        code(&armw(&["check", &g, "--m", "2", "--scope", "sampled:5"])),
        2
    );
    assert_eq!(
        code(&armw(&["check", &g, "--m", "2", "--scope", "sometimes"])),
        2
    );
    let bad = write(&dir, "bad.json", "{\"n\": 4");
    assert_eq!(code(&armw(&["check", &bad, "--m", "2"])), 4);
    assert_eq!(
        code(&armw(&["check", "/nonexistent/m.json", "--m", "2"])),
        4
    );
}

#[test]
fn enumerate_streams_families() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "5", "2");
    let circuits = lines(&armw(&["enumerate", &g, "--what", "circuits"]));
    assert_eq!(circuits.len(), 20);
    assert_eq!(
        circuits
            .iter()
            .filter(|c| c["edges"].as_array().unwrap().len() == 6)
            .count(),
        5
    );

    let c = write(&dir, "c.json", &cycle_matroid_arm(4).to_json_string());
    let cocircuits = lines(&armw(&["enumerate", &c, "--what", "cocircuits"]));
    for v in 0..4u64 {
        let star = cocircuits.iter().any(|s| {
            let e = s["edges"].as_array().unwrap();
            e.len() == 3 && e.iter().all(|uv| uv[0] == v || uv[1] == v)
        });
        assert!(star, "star of {v}");
    }

    let u = write(
        &dir,
        "u.json",
        &Matroid::uniform(3, 2).unwrap().to_json_string(),
    );
    assert_eq!(lines(&armw(&["enumerate", &u, "--what", "bases"])).len(), 3);
}

#[test]
fn families_have_headers() {
    let out = lines(&armw(&["families", "--n", "5", "--m", "2", "--hm"]));
    assert_eq!(out[0]["count"], 35);
    assert_eq!(out.len(), 36);
    assert_eq!(
        lines(&armw(&["families", "--n", "5", "--m", "2", "--hm1"]))[0]["count"],
        20
    );
    let big = lines(&armw(&["families", "--n", "5", "--m", "2", "--bigstar"]));
    assert_eq!(big[0]["count"], 10);
    assert!(big[1..]
        .iter()
        .all(|s| s["edges"].as_array().unwrap().len() == 7));
    assert_eq!(
        lines(&armw(&["families", "--n", "5", "--m", "2", "--stars"]))[0]["count"],
        20
    );
    assert_eq!(code(&armw(&["families", "--n", "5", "--m", "2"])), 2);
    assert_eq!(
        code(&armw(&[
            "families", "--n", "5", "--m", "2", "--hm", "--hm1"
        ])),
        2
    );
}

#[test]
fn explore_writes_findings() {
    let dir = TempDir::new().unwrap();
    let out = armw(&["explore", "--mode", "confirm-2dim", "--n", "4", "--m", "2"]);
    assert_eq!(code(&out), 0);
    let f: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(f["verdict"], "equivalence-confirmed");
    assert_eq!(f["stats"]["matroids"], 63);

    let out = armw(&["explore", "--mode", "question", "--n", "4", "--m", "2"]);
    assert_eq!(code(&out), 0);
    let f: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(f["verdict"], "exhausted-no-counterexample");

    let paths: Vec<String> = (0..2)
        .map(|i| {
            dir.path()
                .join(format!("f{i}.json"))
                .to_str()
                .unwrap()
                .to_owned()
        })
        .collect();
    for p in &paths {
        let out = armw(&[
            "explore", "--mode", "question", "--n", "5", "--m", "2", "--budget", "30", "--seed",
            "1", "--out", p,
        ]);
        assert_eq!(code(&out), 3);
    }
    let (a, b) = (
        std::fs::read(&paths[0]).unwrap(),
        std::fs::read(&paths[1]).unwrap(),
    );
    assert_eq!(a, b);
    let finding = Finding::from_json_str(std::str::from_utf8(&a).unwrap()).unwrap();
    assert!(finding.reverify().unwrap());

    assert_eq!(
        code(&armw(&[
            "explore", "--mode", "question", "--n", "3", "--m", "2"
        ])),
        2
    );
}

#[test]
fn threads_flag_is_accepted() {
    let out = armw(&[
        "--threads",
        "2",
        "families",
        "--n",
        "4",
        "--m",
        "2",
        "--hm1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        code(&armw(&[
            "--threads",
            "0",
            "families",
            "--n",
            "4",
            "--m",
            "2",
            "--hm"
        ])),
        2
    );
}

use std::path::Path;
use std::sync::{Mutex, MutexGuard};

use serde_json::Value;

use super::execute;

// Clap reads DYCKANYON_SEED and DYCKANYON_WORKERS from the process
// environment, so every invocation holds this lock.
static ENV: Mutex<()> = Mutex::new(());

fn env_lock() -> MutexGuard<'static, ()> {
    ENV.lock().unwrap_or_else(|e| e.into_inner())
}

struct Run {
    code: u8,
    stdout: Vec<u8>,
}

fn invoke(args: &[&str]) -> Run {
    let mut stdout = Vec::new();
    let argv = std::iter::once("dyckanyon").chain(args.iter().copied());
    let code = execute(argv, &mut stdout);
    Run { code, stdout }
}

fn run(args: &[&str]) -> Run {
    let _guard = env_lock();
    invoke(args)
}

fn json_of(out: &Run) -> Value {
    assert_eq!(out.code, 0);
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> u8 {
    run(args).code
}

#[test]
fn verify_algebra_tableau_at_golden() {
    let v = json_of(&run(&["verify-algebra", "--rep", "tableau", "--N", "4", "--shape", "2,2", "--x", "golden"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["input"]["x"].as_f64().unwrap(), dyckanyon::tl::golden_ratio());
    let r = &v["result"];
    assert_eq!(r["passed"], true);
    for key in ["idempotent", "sandwich", "far_commutation"] {
        assert!(r["tl"][key].as_f64().unwrap() < 1e-10);
    }
    assert!(r["braid"]["braid"].as_f64().unwrap() < 1e-10);
}

#[test]
fn verify_algebra_other_reps() {
    for args in [
        vec!["--rep", "fusion"],
        vec!["--rep", "pauli", "--x", "1.25"],
        vec!["--rep", "fib", "--N", "7"],
        vec!["--rep", "tableau", "--N", "6", "--x", "3"],
    ] {
        let mut full = vec!["verify-algebra"];
        full.extend(args);
        let v = json_of(&run(&full));
        assert_eq!(v["result"]["passed"], true, "{full:?}");
    }
    assert_eq!(code(&["verify-algebra", "--rep", "tableau", "--N", "6", "--shape", "5,1", "--x", "golden"]), 2);
    assert_eq!(code(&["verify-algebra", "--rep", "fusion", "--x", "1.5"]), 2);
}

#[test]
fn spectrum_single_block() {
    let v = json_of(&run(&["spectrum", "--blocks", "1", "--params", "3,1,2,4,-1"]));
    let levels = v["result"]["spectrum"]["levels"].as_array().unwrap();
    let pairs: Vec<(f64, u64)> =
        levels.iter().map(|l| (l["energy"].as_f64().unwrap(), l["degeneracy"].as_u64().unwrap())).collect();
    assert_eq!(pairs, vec![(7.0, 2), (6.0, 1), (4.0, 2), (3.0, 2), (2.0, 2), (1.0, 2), (0.0, 5)]);
}

#[test]
fn gap_and_exit_codes() {
    assert_eq!(code(&["gap", "--params", "1,1,2,4,-1"]), 2);
    let v = json_of(&run(&["gap", "--params", "3,1,2,4,-0.5", "--blocks", "2"]));
    assert_eq!(v["result"]["gap"].as_f64().unwrap(), 0.5);
    assert_eq!(v["result"]["enumeration"]["agrees"], true);
    assert_eq!(code(&["spectrum", "--blocks", "5", "--params", "3,1,2,4,-1"]), 3);
    assert_eq!(code(&["synth", "--target", "H", "--exhaustive", "12", "--node-budget", "10"]), 3);
    assert_eq!(code(&["gap", "--params", "3,1,2"]), 2);
    assert_eq!(code(&["gap", "--bogus"]), 2);
}

#[test]
fn enumerate_counts() {
    let v = json_of(&run(&["enumerate", "--kind", "dyck", "--n", "4"]));
    assert_eq!(v["result"]["count"], 14);
    let v = json_of(&run(&["enumerate", "--kind", "fredkin", "--n", "5"]));
    assert_eq!(v["result"]["checks"]["matches_catalan"], true);
    let v = json_of(&run(&["enumerate", "--kind", "tableaux", "--shape", "3,2"]));
    assert_eq!(v["result"]["count"], 5);
    let v = json_of(&run(&["enumerate", "--kind", "fib", "--n", "4"]));
    assert_eq!(v["result"]["count"], 8);
    assert_eq!(code(&["enumerate", "--kind", "dyck", "--n", "30"]), 3);
}

#[test]
fn out_file_is_written_whole() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gates.json");
    let out = run(&["verify-reference-gates", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["records"].as_array().unwrap().len(), 5);
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1, "temporary files left behind");
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"params": "3,1,2,4,-0.5", "blocks": 2}"#).unwrap();
    let c = cfg.to_str().unwrap();
    let v = json_of(&run(&["gap", "--config", c]));
    assert_eq!(v["result"]["gap"].as_f64().unwrap(), 0.5);
    let v = json_of(&run(&["gap", "--config", c, "--params", "3,1,2,4,-10"]));
    assert_eq!(v["result"]["gap"].as_f64().unwrap(), 1.0);

    std::fs::write(&cfg, r#"{"params": "3,1,2,4,-0.5", "colour": "blue"}"#).unwrap();
    assert_eq!(code(&["gap", "--config", c]), 2);
    std::fs::write(&cfg, "not json").unwrap();
    assert_eq!(code(&["gap", "--config", c]), 2);
}

fn synth_word(args: &[&str]) -> String {
    let mut full = vec!["synth", "--target", "T", "--budget", "3000", "--batch-size", "500", "--goal", "0"];
    full.extend_from_slice(args);
    let v = json_of(&invoke(&full));
    v["result"]["word"].as_str().unwrap().to_string()
}

#[test]
fn seed_environment_override() {
    let _guard = env_lock();
    let saved = std::env::var_os("DYCKANYON_SEED");
    std::env::remove_var("DYCKANYON_SEED");
    let default = synth_word(&[]);
    assert_eq!(default, synth_word(&["--seed", "7"]));
    let explicit = synth_word(&["--seed", "99"]);
    assert_ne!(explicit, default);

    std::env::set_var("DYCKANYON_SEED", "99");
    let from_env = synth_word(&[]);
    let flag_wins = synth_word(&["--seed", "7"]);
    match saved {
        Some(v) => std::env::set_var("DYCKANYON_SEED", v),
        None => std::env::remove_var("DYCKANYON_SEED"),
    }
    assert_eq!(from_env, explicit);
    assert_eq!(flag_wins, default);
}

#[test]
fn synth_from_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let p = path.to_str().unwrap();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    std::fs::write(&path, format!(r#"{{"name": "T", "matrix": [[[1, 0], [0, 0]], [[0, 0], [{s}, {s}]]]}}"#)).unwrap();
    let v = json_of(&run(&["synth", "--target", p, "--budget", "2000000"]));
    assert_eq!(v["result"]["target"], "T");
    let eps = v["result"]["epsilon"].as_f64().unwrap();
    assert!(eps <= 1e-2);
    let word: dyckanyon::gatesynth::BraidWord = v["result"]["word"].as_str().unwrap().parse().unwrap();
    let u = word.evaluate(&dyckanyon::gatesynth::rotated_generators());
    let fresh = dyckanyon::gatesynth::distance(&u, &dyckanyon::gatesynth::GateTarget::t().matrix).unwrap();
    assert!((fresh - eps).abs() < 1e-12);

    std::fs::write(&path, r#"{"matrix": [[[2, 0], [0, 0]], [[0, 0], [1, 0]]]}"#).unwrap();
    assert_eq!(code(&["synth", "--target", p]), 2);
    std::fs::write(&path, r#"{"matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "extra": 1}"#).unwrap();
    assert_eq!(code(&["synth", "--target", p]), 2);
    assert_eq!(code(&["synth", "--target", "no/such/file.json"]), 2);
}

#[test]
fn noise_modes() {
    let v = json_of(&run(&[
        "noise", "--blocks", "2", "--params", "3,1,2,4,-1", "--kind", "sparse", "--v", "1e-6", "--trials", "4",
    ]));
    assert_eq!(v["result"]["gap_survival_fraction"].as_f64().unwrap(), 1.0);
    let v = json_of(&run(&["noise", "--mode", "band-norm", "--n", "128", "--trials", "2", "--v", "0"]));
    assert_eq!(v["result"]["mean"].as_f64().unwrap(), 0.0);
    assert_eq!(code(&["noise", "--blocks", "4", "--params", "3,1,2,4,-1"]), 3);
    assert_eq!(code(&["noise", "--mode", "band-norm"]), 2);
}

#[test]
fn every_artifact_is_versioned() {
    let runs: [&[&str]; 6] = [
        &["enumerate", "--kind", "dyck", "--n", "2"],
        &["verify-algebra", "--rep", "fusion"],
        &["spectrum", "--blocks", "1", "--params", "3,1,2,4,-1"],
        &["gap", "--params", "3,1,2,4,-1"],
        &["noise", "--mode", "band-norm", "--n", "64", "--trials", "1"],
        &["synth", "--target", "H", "--exhaustive", "4"],
    ];
    for args in runs {
        let v = json_of(&run(args));
        assert_eq!(v["schema_version"], 1, "{args:?}");
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["synth", "--target", "S", "--budget", "20000", "--batch-size", "4096", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn committed_sweep_is_current() {
    let stored =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/reference_sweep.json")).unwrap();
    let a: Value = serde_json::from_str(&stored).unwrap();
    let b = json_of(&run(&["verify-reference-gates"]));
    assert_eq!(a["result"]["summary"], b["result"]["summary"]);
}

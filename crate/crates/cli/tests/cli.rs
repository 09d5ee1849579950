use std::process::{Command, Output};

use serde_json::Value;

fn superz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superz")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).unwrap()
}

#[test]
fn build_prints_structure_constants() {
    let o = superz(&["build", "--type", "d21", "--alpha", "2", "--prime", "7"]);
    assert_eq!(code(&o), 0);
    let v = json(&o.stdout);
    assert_eq!(v["basis"].as_array().unwrap().len(), 17);
}

#[test]
fn build_writes_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g3.json");
    let o = superz(&["build", "--type", "g3", "--prime", "11", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = json(&std::fs::read(&path).unwrap());
    assert_eq!(v["basis"].as_array().unwrap().len(), 31);
}

#[test]
fn orbit_report_is_deterministic() {
    let args = ["orbit", "--type", "f4", "--prime", "7", "--orbit", "e(5,1^2)"];
    let a = superz(&args);
    let b = superz(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a.stdout);
    assert_eq!((v["dim_ge_even"].as_u64(), v["dim_ge_odd"].as_u64()), (Some(8), Some(4)));
    assert!(v["checks"].as_object().unwrap().values().all(|c| c == true));
}

#[test]
fn orbit_from_partition_with_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let o = superz(&[
        "orbit", "--type", "sl", "--m", "7", "--n", "3", "--prime", "7", "--partition", "5,2|3", "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o.stdout)["dim_ge"], 23);
    assert!(std::fs::read_to_string(&csv).unwrap().lines().count() >= 2);
}

#[test]
fn verify_tables_passes_at_seven() {
    let o = superz(&["verify-tables", "--family", "d21,g3,f4", "--primes", "7"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(String::from_utf8_lossy(&o.stdout).trim_end().ends_with("PASS"));
}

#[test]
fn verify_tables_reports_mismatch_with_exit_one() {
    let o = superz(&["verify-tables", "--family", "g3", "--primes", "5"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("MISMATCH"));
}

#[test]
fn roots_reports_good_prime() {
    let o = superz(&["roots", "--type", "g3", "--prime", "5"]);
    assert_eq!(code(&o), 0);
    let v = json(&o.stdout);
    assert_eq!(v["good_prime"], true);
    assert_eq!(v["root_count"], 28);
    let o = superz(&["roots", "--type", "g3", "--prime", "3"]);
    assert_eq!(json(&o.stdout)["good_prime"], false);
}

#[test]
fn bad_input_exits_two_with_json_error() {
    for (args, err) in [
        (&["build", "--type", "osp", "--m", "3", "--n", "1", "--prime", "2"][..], "BadPrime"),
        (&["build", "--type", "psl", "--n", "3", "--prime", "3"][..], "PslBadPrime"),
        (&["build", "--type", "gl", "--m", "2", "--n", "1", "--prime", "4"][..], ""),
        (&["orbit", "--type", "f4", "--prime", "7", "--orbit", "nope"][..], ""),
        (&["frobnicate"][..], "Usage"),
    ] {
        let o = superz(args);
        assert_eq!(code(&o), 2, "{args:?}");
        let v = json(&o.stderr);
        assert!(v["error"].as_str().unwrap().starts_with(err), "{args:?}: {v}");
        assert!(v["message"].is_string());
    }
}

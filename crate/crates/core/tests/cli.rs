use std::process::Command;

use clap::Parser;
use stokeslab::cli::{execute, Cli, EXIT_OK, EXIT_TRUNCATED, EXIT_USAGE};

fn run(args: &[&str]) -> stokeslab::cli::Outcome {
    let mut full = vec!["stokeslab"];
    full.extend_from_slice(args);
    execute(&Cli::try_parse_from(full).unwrap())
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_stokeslab")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn degree_e6() {
    let o = run(&["degree", "E6"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.json["deg_ll"], 41472);
}

#[test]
fn elliptic_degree_carries_segre_route() {
    let o = run(&["degree", "Et8"]);
    assert_eq!(o.json["deg_ll"], 21_374_793_216i64);
    assert_eq!(o.json["segre_degree"], "21374793216");
}

#[test]
fn orbit_a3_stokes() {
    let o = run(&["orbit", "A3", "--mode", "stokes"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.json["count"], 4);
    assert_eq!(o.json["truncated"], false);
}

#[test]
fn stokes_count_compares_with_formula() {
    let o = run(&["stokes-count", "D4"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.json["match"], true);
}

#[test]
fn truncation_exits_three() {
    let o = run(&["orbit", "Et8", "--budget-states", "500"]);
    assert_eq!(o.code, EXIT_TRUNCATED);
    assert_eq!(o.json["truncated"], true);
}

#[test]
fn long_targets_need_a_flag() {
    assert_eq!(run(&["orbit", "E8"]).code, EXIT_USAGE);
    assert_eq!(run(&["orbit", "Et6", "--mode", "bases"]).code, EXIT_USAGE);
}

#[test]
fn incompatible_verbs_are_usage_errors() {
    assert_eq!(run(&["verify-kappa", "E6"]).code, EXIT_USAGE);
    assert_eq!(run(&["verify-symmetry", "E7"]).code, EXIT_USAGE);
    assert_eq!(run(&["ll-eval", "D4", "--t", "[1,2,3,4]"]).code, EXIT_USAGE);
    assert_eq!(run(&["ll-eval", "A2", "--t", "not json"]).code, EXIT_USAGE);
}

#[test]
fn symmetry_and_kappa_checks_pass() {
    for class in ["Et6", "Et7", "Et8", "D4", "D6"] {
        assert_eq!(run(&["verify-symmetry", class]).code, EXIT_OK, "{class}");
    }
    let o = run(&["verify-kappa", "Et7"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.json["passed"], true);
}

#[test]
fn jacobi_dim_at_a_value() {
    let o = run(&["jacobi-dim", "Et6", "--lambda", "2/9"]);
    assert_eq!(o.json["dimension"], 8);
    assert_eq!(run(&["jacobi-dim", "Et6", "--lambda", "1"]).code, EXIT_USAGE);
}

#[test]
fn ll_eval_reports_discriminant() {
    let o = run(&["ll-eval", "A2", "--t", r#"[0, "3"]"#]);
    assert_eq!(o.json["coefficients"], serde_json::json!(["4", "0"]));
    assert_eq!(o.json["discriminant"], "-16");
    let o = run(&["ll-eval", "A2", "--t", "[2, 0]"]);
    assert_eq!(o.json["on_discriminant"], true);
}

#[test]
fn ll_fiber_a2() {
    let o = run(&["ll-fiber", "A2", "--roots", "[[0.4,0.9],[-1.1,0.3]]"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.json["count"], 3);
    let o = run(&["ll-fiber", "A2", "--coeffs", "[0, 0]"]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn wall_walk_round_trip() {
    let path = "[[0.3,[1,0.1]],[0.3,[-1,0.1]],[0.3,[-1,-0.1]],[0.3,[1,-0.1]],[0.3,[1,0.1]]]";
    let o = run(&["wall-walk", "A2", "--path", path, "--steps", "63"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.json["word"].as_array().unwrap().len(), 3);
}

#[test]
fn diagram_is_dot_or_json() {
    let o = run(&["diagram", "A3"]);
    assert!(o.text.unwrap().starts_with("graph coxeter_dynkin"));
    let o = run(&["--json", "diagram", "A3"]);
    assert!(o.text.is_none());
    assert_eq!(o.json["vertices"], 3);
}

#[test]
fn binary_exit_codes_and_determinism() {
    let (code, a) = bin(&["--json", "counts", "Et6"]);
    assert_eq!(code, 0);
    let (_, b) = bin(&["--json", "counts", "Et6"]);
    assert_eq!(a, b);
    assert!(a.contains("76545"));
    let (code, o1) = bin(&["--json", "orbit", "A4", "--mode", "bases"]);
    assert_eq!(code, 0);
    assert_eq!(o1, bin(&["--json", "orbit", "A4", "--mode", "bases"]).1);
    assert_eq!(bin(&["degree", "X9"]).0, 2);
    assert_eq!(bin(&["frobnicate"]).0, 2);
    assert_eq!(bin(&["--json", "orbit", "Et8", "--budget-states", "100"]).0, 3);
}

#[test]
fn quick_scorecard_is_green() {
    let o = run(&["scorecard", "--quick"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.summary);
    assert!(o.json["rows"].as_array().unwrap().len() > 50);
}

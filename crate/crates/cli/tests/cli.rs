//! End-to-end behaviour of the command line through `run`.

use focktiles_cli::{run, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> Outcome {
    call_with_input(args, "")
}

fn call_with_input(args: &[&str], input: &str) -> Outcome {
    let argv = std::iter::once("focktiles").chain(args.iter().copied());
    run(argv, &mut input.as_bytes())
}

#[test]
fn worked_examples() {
    assert_eq!(call(&["dnum", "--e", "10", "16,8,1^13", "17,7,2^4,1^5"]).stdout, "q^2\n");
    assert_eq!(call(&["zlabel", "--e", "4", "5,5,4,2,2,2,1,1"]).stdout, "[1,1,2,2,1]\n");
    assert_eq!(call(&["core", "--e", "4", "5,5,4,2,2,2,1,1"]).stdout, "[2]\n");
    assert_eq!(call(&["quotient", "--e", "4", "7,3,3,2,2,1"]).stdout, "[[1],[],[2,1],[]]\n");
    assert_eq!(call(&["lambdah", "--e", "4", "5,5,4,2,2,2,1,1", "3"]).stdout, "[6,5,5,2,2,2]\n");
    assert_eq!(call(&["moveone", "--e", "4", "7,3,3,2,2,1", "3"]).stdout, "[9,3,2,2,2]\n");
    assert_eq!(call(&["movealong", "--e", "4", "7,3,3,2,2,1", "2,3"]).stdout.lines().last(), Some("[10,4,2,1,1]"));
}

#[test]
fn methods_agree_on_the_worked_pair() {
    for method in ["closed", "llt"] {
        let out = call(&["dnum", "--e", "4", "--method", method, "5,5,4,2,2,2,1,1", "6,5,4,2,2,2,1"]);
        assert_eq!(out.stdout, "q^2\n", "{method}");
    }
    let out = call(&["dnum", "--e", "2", "--method", "rouquier", "3,1,1", "5"]);
    assert_eq!(out.stdout, "q\n");
}

#[test]
fn json_output() {
    let out = call(&["zlabel", "--e", "4", "--json", "5,5,4,2,2,2,1,1"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!([1, 1, 2, 2, 1]));
    let out = call(&["mullineux", "--e", "5", "--json", "--algo", "fast", "5,3,2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["trace"].is_array(), "{v}");
    let out = call(&["tiling", "--e", "9", "--core", "", "--weight", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn svg_output() {
    let out = call(&["tiling", "--e", "17", "--core", "5,3,1", "--weight", "2", "--format", "svg"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("<svg"));
    let out = call(&["tiling", "--e", "10", "--core", "", "--weight", "3", "--format", "svg"]);
    assert_eq!(out.code, EXIT_DOMAIN);
}

#[test]
fn batch_input() {
    let out = call_with_input(&["dnum", "--e", "2", "--method", "rouquier"], "3,1,1;5\n\n3,2;5\n");
    assert_eq!(out.stdout, "q\n0\n");
    assert_eq!(out.code, EXIT_OK);
    let out = call_with_input(&["dnum", "--e", "2"], "3,1,1;5\nnonsense\n");
    assert_eq!(out.code, EXIT_DOMAIN);
    assert_eq!(out.stdout.lines().count(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(call(&["zlabel", "--e", "4", "--colour", "1"]).code, EXIT_USAGE);
    assert_eq!(call(&["zlabel", "--e", "1", "3"]).code, EXIT_USAGE);
    assert_eq!(call(&["zlabel", "--e", "4", "3,x"]).code, EXIT_USAGE);
    assert_eq!(call(&["mullineux", "--e", "2", "1,1"]).code, EXIT_DOMAIN);
    assert_eq!(call(&["verify", "ac42"]).code, EXIT_USAGE);
    assert_eq!(call(&["--help"]).code, EXIT_OK);
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["block", "--e", "5", "--core", "3,1", "--weight", "2", "--members"];
    assert_eq!(call(&args), call(&args));
    let args = ["gcolumn", "--e", "3", "--json", "6,3,2,1"];
    assert_eq!(call(&args), call(&args));
}

#[test]
fn verify_single_suite() {
    let out = call(&["verify", "ac7"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.starts_with("AC-7 PASS"));
}

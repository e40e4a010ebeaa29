//! Exit codes and outputs of the command-line front end.

use resultant_forge::{run_with_env, Outcome};
use serde_json::Value;

fn forge(args: &[&str]) -> Outcome {
    forge_env(args, None)
}

fn forge_env(args: &[&str], env: Option<&str>) -> Outcome {
    let argv = std::iter::once("resultant-forge").chain(args.iter().copied());
    run_with_env(argv, env.map(str::to_owned))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(forge(&[]).code, 2);
    assert_eq!(forge(&["bogus"]).code, 2);
    assert_eq!(forge(&["gens", "--d", "2"]).code, 2);
    assert_eq!(forge(&["gens", "--d", "0", "--n", "3"]).code, 2);
    assert_eq!(forge(&["gens", "--d", "2", "--n", "3", "--k", "1", "--reduced"]).code, 2);
    let bad_env = forge_env(&["verify", "chart", "--d", "1", "--n", "2"], Some("pairs=lots"));
    assert_eq!(bad_env.code, 2, "{}", bad_env.stderr);
}

#[test]
fn help_exits_zero() {
    let out = forge(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn degree_of_mixed_system() {
    let out = forge(&["degree", "--degrees", "2,3,5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["D"], 10);
    assert_eq!(v["degrees"], serde_json::json!([2, 3, 5]));
}

#[test]
fn verify_checks_pass_on_small_cases() {
    for check in ["groebner", "elimination", "chart", "diagonal", "planted"] {
        let out = forge(&["verify", check, "--d", "2", "--n", "2"]);
        assert_eq!(out.code, 0, "{check}: {}{}", out.stdout, out.stderr);
        let v = json(&out);
        assert_eq!(v["status"], "pass");
        assert_eq!(v["parameters"]["d"], 2);
    }
    let v = json(&forge(&["verify", "groebner", "--d", "2", "--n", "3"]));
    assert_eq!(v["witnesses"]["basis_size"], 7);
}

#[test]
fn exhaustion_exits_three() {
    let out = forge(&["verify", "elimination", "--d", "2", "--n", "3", "--max-pairs", "0"]);
    assert_eq!(out.code, 3, "{}", out.stdout);
    assert!(out.stderr.contains("resource exhausted"));
    let out = forge_env(&["verify", "chart", "--d", "2", "--n", "3"], Some("pairs=2"));
    assert_eq!(out.code, 3);
    // a flag overrides the environment
    let out = forge_env(&["verify", "chart", "--d", "1", "--n", "2", "--max-pairs", "1000"], Some("pairs=0"));
    assert_eq!(out.code, 0, "{}", out.stderr);
}

#[test]
fn walks_and_leading_terms() {
    let v = json(&forge(&["walks", "--d", "2", "--n", "3", "--reduced"]));
    assert_eq!(v.as_array().unwrap().len(), 7);
    assert_eq!(v[0], serde_json::json!([[1, 0], [2, 1], [3, 2]]));
    let v = json(&forge(&["walks", "--d", "2", "--n", "3"]));
    assert_eq!(v.as_array().unwrap().len(), 16);

    let v = json(&forge(&["leadterms", "--d", "2", "--n", "3", "--order", "diagonal", "--reduced"]));
    let leads = v["leading_terms"].as_array().unwrap();
    assert_eq!(leads[0], "a_1_0*a_2_1*a_3_2");
}

#[test]
fn components_of_initial_ideal() {
    let v = json(&forge(&["components", "--d", "2", "--n", "3"]));
    assert_eq!(v["dim"], 6);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["equidimensional"], true);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 6);
    assert!(comps.iter().all(|c| c.as_array().unwrap().len() == 2));
}

#[test]
fn sample_then_eval_is_consistent() {
    let dir = tempfile::tempdir().unwrap();
    for (seed, planted) in [(1u64, true), (2, false), (3, true)] {
        let mut args = vec!["sample", "--d", "2", "--n", "3", "--seed"];
        let seed = seed.to_string();
        args.push(&seed);
        if planted {
            args.push("--planted");
        }
        let out = forge(&args);
        assert_eq!(out.code, 0);
        let path = dir.path().join(format!("t{seed}.json"));
        std::fs::write(&path, &out.stdout).unwrap();
        let eval = forge(&["eval", "--coeffs", path.to_str().unwrap()]);
        assert_eq!(eval.code, 0, "{}{}", eval.stdout, eval.stderr);
        let v = json(&eval);
        assert_eq!(v["consistent"], true);
        assert_eq!(v["root"]["has_affine_common_root"], planted);
        assert_eq!(v["all_vanish"], planted);
        assert_eq!(v["generators"].as_array().unwrap().len(), 16);
    }
    let path = dir.path().join("t1.json");
    let mismatch = forge(&["eval", "--coeffs", path.to_str().unwrap(), "--d", "3"]);
    assert_eq!(mismatch.code, 2);
}

#[test]
fn sampling_is_reproducible() {
    let a = forge(&["sample", "--d", "3", "--n", "2", "--seed", "9"]);
    let b = forge(&["sample", "--d", "3", "--n", "2", "--seed", "9"]);
    assert_eq!(a, b);
}

#[test]
fn missing_input_exits_two() {
    let out = forge(&["eval", "--coeffs", "/nonexistent/tuple.json"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("reading"));
}

#[test]
fn gens_json_round_trips_through_export() {
    let dir = tempfile::tempdir().unwrap();
    let ideal = dir.path().join("ideal.json");
    let out = forge(&["gens", "--d", "2", "--n", "3", "--format", "json", "--output", ideal.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let back = forge(&["export", "--input", ideal.to_str().unwrap(), "--format", "json"]);
    assert_eq!(back.stdout, std::fs::read_to_string(&ideal).unwrap());
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn quintic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(args)
        .env_remove("QUINTIC_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("valid JSON")
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../report.schema.json");
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).unwrap()
}

#[test]
fn classify_x5_minus_2() {
    let o = quintic(&["classify", "x^5 - 2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("group:             F5"), "{s}");
    assert!(s.contains("solvable:          true"), "{s}");
}

#[test]
fn classify_json_s5() {
    let o = quintic(&["classify", "--json", "x^5 - x + 1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["group"], "S5");
    assert_eq!(v["solvable"], false);
    assert_eq!(v["discriminant"], "2869");
    assert!(v.get("oracle").is_none());
}

#[test]
fn reducible_exits_2_and_cites_reducibility() {
    let o = quintic(&["classify", "x^5 - x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("reducible"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn other_preconditions_exit_2() {
    for p in ["x^4 - 2", "x^5 + 2x^3 + x", "x^5", "0"] {
        assert_eq!(quintic(&["classify", p]).status.code(), Some(2), "{p}");
    }
    assert!(stderr(&quintic(&["classify", "x^3 + 1"])).contains("degree 3"));
}

#[test]
fn parse_errors_exit_1_with_position() {
    let o = quintic(&["classify", "x^5 + 2y"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("position 7"), "{}", stderr(&o));
    assert_eq!(quintic(&["classify", "x^5 + 1/0"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(quintic(&["classify"]).status.code(), Some(1));
    assert_eq!(quintic(&["frobnicate", "x"]).status.code(), Some(1));
    assert_eq!(quintic(&["oracle", "--tol", "abc", "x^5 - 2"]).status.code(), Some(1));
}

#[test]
fn leading_minus_is_a_polynomial_not_a_flag() {
    let o = quintic(&["classify", "-x^5 + 2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("F5"));
}

#[test]
fn oracle_default_tolerance_agrees() {
    for p in ["x^5 - 2", "x^5 - x + 1", "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1", "x^5 + 20x + 16"] {
        let o = quintic(&["oracle", "--json", p]);
        assert_eq!(o.status.code(), Some(0), "{p}: {}", stderr(&o));
        let v = json(&o);
        assert_eq!(v["oracle"]["agrees"], true);
        assert!(v["oracle"]["max_relative_deviation"].as_f64().unwrap() <= 1e-6);
    }
    let v = json(&quintic(&["oracle", "--json", "x^5 - x + 1"]));
    assert_eq!(v["oracle"]["numeric_has_rational_root"], false);
    assert_eq!(v["oracle"]["exact_has_rational_root"], false);
}

#[test]
fn oracle_impossible_tolerance_exits_3() {
    let o = quintic(&["oracle", "--tol", "0", "x^5 - x + 1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("disagree"));
    // the report is still printed
    assert!(stdout(&o).contains("agrees:          false"));
}

#[test]
fn oracle_wide_rational_window_exits_3() {
    // every theta looks rational under a 1e-6 window
    let o = quintic(&["oracle", "--rat-tol", "1e-6", "x^5 + 20x + 16"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_output_validates_against_schema() {
    let validator = schema();
    let inputs = [
        "x^5 - 2",
        "x^5 - x + 1",
        "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1",
        "x^5 + 20x + 16",
        "3/2x^5 - 7/3x + 1/5",
    ];
    for p in inputs {
        for cmd in ["classify", "oracle"] {
            let o = quintic(&[cmd, "--json", p]);
            let v = json(&o);
            let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
            assert!(errors.is_empty(), "{cmd} {p}: {errors:?}");
        }
    }
}

#[test]
fn schema_rejects_float_rationals() {
    let validator = schema();
    let mut v = json(&quintic(&["classify", "--json", "x^5 - 2"]));
    assert!(validator.is_valid(&v));
    v["discriminant"] = serde_json::json!(50000.0);
    assert!(!validator.is_valid(&v));
}

#[test]
fn selftest_runs_and_honours_seed() {
    let o = quintic(&["selftest", "--count", "5", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("seed 9"));
    let with_env = Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(["selftest", "--count", "3"])
        .env("QUINTIC_SEED", "123")
        .output()
        .unwrap();
    assert!(stdout(&with_env).contains("seed 123"));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(["selftest", "--count", "3", "--seed", "5"])
        .env("QUINTIC_SEED", "123")
        .output()
        .unwrap();
    assert!(stdout(&flag_wins).contains("seed 5"));
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&quintic(&["oracle", "--json", "x^5 + 20x + 16"]));
    let b = stdout(&quintic(&["oracle", "--json", "x^5 + 20x + 16"]));
    assert_eq!(a, b);
}

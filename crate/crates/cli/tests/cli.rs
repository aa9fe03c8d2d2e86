use std::process::{Command, Output};

use cubic_waring::catalog::builtin;
use cubic_waring_cli::catalog_file::to_toml;
use cubic_waring_cli::parse::parse_cubic;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-waring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    });
    (v, out.status.code().unwrap())
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classify_triangle_json() {
    let (v, code) = json(&["classify", "x*y*z"]);
    assert_eq!(code, 0);
    assert_eq!(v["orbit"], 16);
    assert_eq!(v["rk_real"], 4);
    assert_eq!(v["brk_real"], 4);
    assert_eq!(v["rk_complex"], 4);
    assert_eq!(v["decomposition"].as_array().unwrap().len(), 4);
    assert_eq!(v["decomposition"][0]["coeff"], "1/24");
    assert!(v["evidence"].is_array() && v["errors"].is_array());
}

#[test]
fn certificates_reexpand_from_json() {
    for src in ["x^3+y^3+z^3+12xyz", "y^2z-x^3+x^2z", "18y(x^2+yz)", "(x^2+y^2+z^2)x"] {
        let (v, _) = json(&["classify", src]);
        let sum: Vec<String> = v["decomposition"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| format!("({})*{}", t["coeff"].as_str().unwrap(), t["form"].as_str().unwrap()))
            .collect();
        assert_eq!(parse_cubic(&sum.join("+")).unwrap(), parse_cubic(src).unwrap(), "{src}");
    }
}

#[test]
fn verify_catalog_lines() {
    let out = run(&["verify-catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 16);
    assert!(text.lines().any(|l| l.starts_with("PASS 14 ") && l.contains("repaired")));
    assert!(text.lines().any(|l| l.starts_with("PASS 5 ") && l.contains("sqrt(2)")));
}

#[test]
fn verify_catalog_reads_the_given_file() {
    let dir = std::env::temp_dir().join(format!("cubic-waring-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.toml");
    std::fs::write(&good, to_toml(&builtin())).unwrap();
    assert_eq!(run(&["verify-catalog", "--catalog", good.to_str().unwrap()]).status.code(), Some(0));

    // Break one decomposition coefficient of row 16.
    let text = to_toml(&builtin());
    let at = text.find("id = \"16\"").unwrap();
    let (head, tail) = text.split_at(at);
    let bad = format!("{head}{}", tail.replacen("coeff = \"1/24\"", "coeff = \"1/23\"", 1));
    let bad_path = dir.join("bad.toml");
    std::fs::write(&bad_path, bad).unwrap();
    let out = run(&["verify-catalog", "--catalog", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL 16"));

    let missing = dir.join("missing.toml");
    assert_eq!(run(&["verify-catalog", "--catalog", missing.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn depaolis_lambda_two() {
    let (v, code) = json(&["depaolis", "x^3+y^3+z^3+12xyz", "--line", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["trace"]["coefficients"], serde_json::json!(["14/25", "1/25", "1/25", "1/25"]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "x^2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "x^3 +* y^3"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "sqrt(2)x^3 + sqrt(3)y^3"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["polar", "x^3"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "0"]).status.code(), Some(1));
    // The line meets the Hessian of the Fermat cubic at a repeated point.
    assert_eq!(run(&["depaolis", "x^3+y^3+z^3", "--line", "1,0,0"]).status.code(), Some(1));
}

#[test]
fn parse_error_json_has_code() {
    let (v, code) = json(&["hessian", "x^3 + w"]);
    assert_eq!(code, 2);
    assert_eq!(v["errors"][0]["code"], "syntax-error");
    let (v, _) = json(&["hessian", "x^2"]);
    assert_eq!(v["errors"][0]["code"], "not-homogeneous-degree-3");
}

#[test]
fn hessian_polar_binary_decompose() {
    let (v, _) = json(&["hessian", "xyz"]);
    assert_eq!(v["hessian"], "2*x*y*z");
    let (v, _) = json(&["polar", "x^3+y^3+z^3", "--point", "1,-1,0"]);
    assert_eq!(v["singular"]["point"], serde_json::json!(["0", "0", "1"]));
    assert_eq!(v["inertia"]["zero"], 1);
    let (v, code) = json(&["binary", "2x^3-6xy^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["rk_real"], 3);
    assert_eq!(v["binary"]["discriminant_sign"], -1);
    let out = run(&["decompose", "y^2z-x^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("4 cubes"));
}

#[test]
fn sample_is_reproducible() {
    let a = json(&["sample", "--count", "30", "--seed", "5", "--bound", "4"]);
    let b = json(&["sample", "--count", "30", "--seed", "5", "--bound", "4"]);
    assert_eq!(a, b);
    assert_eq!(a.0["sample"]["count"], 30);
}

#[test]
fn export_matches_bundled_file() {
    let out = run(&["export-catalog"]);
    assert_eq!(stdout(&out), to_toml(&builtin()));
}

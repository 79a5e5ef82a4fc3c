use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qhall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhall"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(manifest_path("schema/output.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(json: &str) -> Value {
    let v: Value = serde_json::from_str(json).expect("output is JSON");
    let errors: Vec<String> = validator().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema errors: {:?}", errors);
    v
}

#[test]
fn gf_plain() {
    let o = qhall(&["gf", "lhp_q", "n=2", "order=4", "--format=plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + q + q^2 + 2*q^3 + 2*q^4\n");
}

#[test]
fn gf_oracle_agrees_with_closed_form() {
    let closed = qhall(&["gf", "lhp_q", "n=3", "--order=12"]);
    let oracle = qhall(&["gf", "L", "n=3", "--order=12"]);
    assert_eq!(stdout(&closed), stdout(&oracle));
}

#[test]
fn gf_csv_columns() {
    let o = qhall(&["gf", "lhp_q", "n=2", "order=3", "--format=csv"]);
    assert_eq!(stdout(&o), "q,coeff\n0,1\n1,1\n2,1\n3,2\n");
}

#[test]
fn gf_json_validates() {
    let o = qhall(&["gf", "L", "n=2", "stats=uvq", "order=6", "--format=json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = assert_valid(&stdout(&o));
    assert!(v["terms"].as_array().unwrap().iter().all(|t| t["coeff"].is_string()));
}

#[test]
fn large_coefficients_stay_exact() {
    let o = qhall(&["gf", "lhp_q", "n=6", "order=80", "--format=json"]);
    let v = assert_valid(&stdout(&o));
    let last = v["terms"].as_array().unwrap().last().unwrap()["coeff"].as_str().unwrap().to_string();
    let plain = stdout(&qhall(&["gf", "lhp_q", "n=6", "order=80"]));
    assert!(plain.contains(&format!("{}*q^80", last)));
}

#[test]
fn enum_rows() {
    let o = qhall(&["enum", "A", "n=2", "k=2", "maxw=2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let firsts: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(firsts, ["(0,0)", "(1,0)", "(2,0)", "(1,1)"]);
}

#[test]
fn enum_json_and_csv() {
    let o = qhall(&["enum", "L", "n=3", "maxw=4", "--format=json"]);
    let v = assert_valid(&stdout(&o));
    assert!(!v["members"].as_array().unwrap().is_empty());
    let o = qhall(&["enum", "L", "n=3", "maxw=4", "--format=csv"]);
    assert!(stdout(&o).starts_with("parts,weight,"));
}

#[test]
fn check_pass_and_json() {
    let o = qhall(&["check", "EQ6", "n=3", "k=2", "--order=8", "--format=json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = assert_valid(&stdout(&o));
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["elapsed_ms"], Value::Null);
}

#[test]
fn check_failure_exits_one() {
    let o = qhall(&["check", "EQ6", "n=2", "k=1", "--order=6", "--mutation=drop_triangular_prefactor"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fail EQ6"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["gf"],
        &["gf", "lhp_q", "n2"],
        &["check", "NOPE"],
        &["gf", "lhp_q", "n=2", "--format=xml"],
        &["suite", "--only=EQ6,NOPE"],
    ] {
        let o = qhall(args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn domain_errors_exit_three() {
    for args in [
        &["check", "EQ6", "n=1", "k=5"][..],
        &["gf", "tlh_uvq", "n=2", "k=3"],
        &["bijection", "BME", "n=2", "lambda=(3,1)"],
        &["bijection", "THETA_NK", "n=2", "k=3"],
    ] {
        let o = qhall(args);
        assert_eq!(o.status.code(), Some(3), "{:?}", args);
    }
}

#[test]
fn bijection_trace_and_verify() {
    let o = qhall(&["bijection", "BME", "n=2", "s=1", "lambda=(3)"]);
    assert_eq!(
        stdout(&o),
        "(3; 1) -> (7,3) [stats: |lambda_o|=3 |lambda_e|=0 |mu_o|=7 |mu_e|=3 law=ok]\n"
    );
    let o = qhall(&["bijection", "BME_NK", "n=4", "k=3", "maxw=8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass BME_NK"));
}

#[test]
fn suite_subset_json() {
    let o = qhall(&["suite", "--nmax=3", "--order=8", "--only=EQ6,COMBI", "--format=json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = assert_valid(&stdout(&o));
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"EQ6") && ids.contains(&"COMBI"));
    assert!(ids.iter().all(|id| *id == "EQ6" || *id == "COMBI"));
}

#[test]
fn output_is_deterministic() {
    let args = ["suite", "--nmax=3", "--order=8", "--format=json"];
    assert_eq!(qhall(&args).stdout, qhall(&args).stdout);
    let args = ["gf", "L", "n=3", "stats=xy", "order=8", "--format=csv"];
    assert_eq!(qhall(&args).stdout, qhall(&args).stdout);
}

#[test]
fn timing_is_opt_in() {
    let o = qhall(&["check", "EQ1", "n=2", "--order=6", "--format=json", "--timing"]);
    let v = assert_valid(&stdout(&o));
    assert!(v[0]["elapsed_ms"].is_number());
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("qhall-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gf.txt");
    let o = qhall(&["gf", "lhp_q", "n=2", "order=4", &format!("--out={}", path.display())]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 + q + q^2 + 2*q^3 + 2*q^4\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn config_file() {
    let shipped = manifest_path("../../config/suite.toml");
    let text = std::fs::read_to_string(&shipped).unwrap();
    let config = qhall::config::ConfigFile::parse(&text).unwrap();
    let applied = config.apply(qhall_core::verify::SuiteConfig::default()).unwrap();
    let default = qhall_core::verify::SuiteConfig::default();
    assert_eq!((applied.nmax, applied.order, applied.kmax), (default.nmax, default.order, default.kmax));

    let dir = std::env::temp_dir().join(format!("qhall-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("small.toml");
    std::fs::write(&path, "[suite]\nnmax = 2\norder = 6\nonly = [\"EQ1\"]\n").unwrap();
    let o = qhall(&["suite", &format!("--config={}", path.display())]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("pass EQ1")).count(), 3);

    std::fs::write(&path, "[suite]\nnmaxx = 2\n").unwrap();
    assert_eq!(qhall(&["suite", &format!("--config={}", path.display())]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn in_process_run_matches_binary() {
    let argv: Vec<String> = ["qhall", "gf", "lhp_q", "n=2", "order=4"].iter().map(|s| s.to_string()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(qhall::run(&argv, &mut out, &mut err), 0);
    assert_eq!(out, qhall(&argv[1..].iter().map(String::as_str).collect::<Vec<_>>()).stdout);
}

use std::process::{Command, Output};

const CUSPIDAL: &str = "4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2";

fn toricdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toricdeg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn multidegrees_json_schema() {
    let o = toricdeg(&["multidegrees", "--poly", "x1^2+x0*x1+x0*x2", "--vars", "x0,x1,x2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"map\":\"toric\",\"n\":2,\"degree\":1,\"multidegrees\":[1,2,1],\"prime\":2147483647,\"seed\":1,\"trials\":2}\n"
    );
}

#[test]
fn nondominant_conic() {
    let o = toricdeg(&["multidegrees", "--poly", "x0^2-x1*x2", "--vars", "x0,x1,x2", "--json"]);
    let v = json(&o);
    assert_eq!(v["multidegrees"], serde_json::json!([1, 2, 0]));
    assert_eq!(v["degree"], 0);
}

#[test]
fn gradient_flag() {
    let o = toricdeg(&["multidegrees", "--gradient", "--poly", "x0^2 + x1^2 + x2^2", "--json"]);
    let v = json(&o);
    assert_eq!(v["map"], "gradient");
    assert_eq!(v["multidegrees"], serde_json::json!([1, 1, 1]));
}

#[test]
fn inferred_and_custom_variables() {
    let o = toricdeg(&["multidegrees", "--poly", "b*c + a*c + a*b", "--json"]);
    assert_eq!(json(&o)["multidegrees"], serde_json::json!([1, 2, 1]));
    let o = toricdeg(&["multidegrees", "--poly", "u + v", "--vars", "u,v,w", "--json"]);
    // w does not occur, so the map is (u : v : 0)
    assert_eq!(json(&o)["multidegrees"], serde_json::json!([1, 1, 0]));
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("toricdeg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cubic.txt");
    std::fs::write(&path, format!("{CUSPIDAL}\n")).unwrap();
    let o = toricdeg(&["multidegrees", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(json(&o)["multidegrees"], serde_json::json!([1, 3, 2]));
    let missing = toricdeg(&["multidegrees", "--file", dir.join("nope").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn parse_error_exit_code() {
    let o = toricdeg(&["multidegrees", "--poly", "x0 + * x1", "--vars", "x0,x1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 5"), "{}", stderr(&o));
    let o = toricdeg(&["multidegrees", "--poly", "x0 + y", "--vars", "x0,x1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn precondition_exit_code() {
    let o = toricdeg(&["multidegrees", "--poly", "x0*x1 + x0*x2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = toricdeg(&["multidegrees", "--poly", "x0^2 + x1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = toricdeg(&["multidegrees", "--poly", "x0 + x1", "--prime", "91"]);
    assert_eq!(o.status.code(), Some(3));
    let o = toricdeg(&["multidegrees", "--poly", "x0 + x1", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn unlucky_specialization_exit_code() {
    let o = toricdeg(&["multidegrees", "--poly", CUSPIDAL, "--prime", "5", "--seed", "3", "--trials", "4"]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    assert!(stderr(&o).contains("trials disagree"));
}

#[test]
fn csm_examples() {
    let o = toricdeg(&["csm", "--poly", CUSPIDAL, "--json"]);
    let v = json(&o);
    assert_eq!(v["class"], serde_json::json!([1, -3, 2]));
    assert_eq!(v["euler_complement"], 2);
    assert_eq!(v["euler_hypersurface_off_h"], -2);
    let o = toricdeg(&["csm", "--poly", "x1*x2*x3 + x0*x2*x3 + x0*x1*x3 + x0*x1*x2", "--json"]);
    let v = json(&o);
    assert_eq!(v["class"], serde_json::json!([1, -3, 3, -1]));
    assert_eq!(v["euler_complement"], -1);
    let o = toricdeg(&["csm", "--poly", "x1^2 + x0*x1 + x0*x2", "--json"]);
    let v = json(&o);
    assert_eq!(v["class"], serde_json::json!([1, -2, 1]));
    assert_eq!(v["euler_complement"], 1);
    let text = stdout(&toricdeg(&["csm", "--poly", CUSPIDAL]));
    assert!(text.contains("1 - 3h + 2h^2"), "{text}");
}

#[test]
fn curve_report_json() {
    let o = toricdeg(&["curve-report", "--poly", CUSPIDAL, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"k\":3,\"milnor_sum\":2,\"incidence\":2,\"tangency\":3,\"degree\":2,\"engine_degree\":2}\n"
    );
    let o = toricdeg(&["curve-report", "--poly", "(x0 + x1 + x2)^2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = toricdeg(&["curve-report", "--poly", "x0 + x1 + x2 + x3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_output_is_reproducible() {
    let args = ["multidegrees", "--poly", CUSPIDAL, "--seed", "17", "--trials", "3", "--json"];
    assert_eq!(toricdeg(&args).stdout, toricdeg(&args).stdout);
    let args = ["verify", "--seed", "5", "--json"];
    assert_eq!(toricdeg(&args).stdout, toricdeg(&args).stdout);
}

#[test]
fn verify_default_corpus_passes() {
    let o = toricdeg(&["verify", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
    let v = json(&toricdeg(&["verify", "--seed", "42", "--json"]));
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_reports_wrong_expectation() {
    let dir = std::env::temp_dir().join(format!("toricdeg-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.txt");
    std::fs::write(&path, "good | x0,x1,x2 | x1^2 + x0*x1 + x0*x2 | 1,2,1\nwrong | x0,x1,x2 | x0*x1 + x0*x2 + x1*x2 | 1,2,2\n")
        .unwrap();
    let o = toricdeg(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL multidegrees [wrong]"), "{out}");
    assert!(out.contains("PASS multidegrees [good]"), "{out}");

    std::fs::write(&path, "broken | x0,x1 | x0 +\n").unwrap();
    let o = toricdeg(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));
}

#[test]
fn verify_flags_nongeneral_conic() {
    let o = toricdeg(&["verify", "--include-nongeneral-conic", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let failed: Vec<&serde_json::Value> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["check"], "union-section");
    assert!(failed[0]["witness"].as_str().unwrap().contains("1 - 2h"));
}

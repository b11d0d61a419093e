use std::process::Command;

use reciprodick_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("reciprodick").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn gen_f_4_0() {
    let (code, out, _) = call(&["gen", "--family", "f", "--n", "4", "--k", "0", "--ring", "z"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["poly"]["coeffs"], serde_json::json!(["2", "12", "2"]));
    assert_eq!(v[0]["self_reciprocal"], true);
}

#[test]
fn gen_round_trips_through_core_json() {
    let (code, out, _) = call(&["gen", "--family", "f", "--n-max", "12", "--k-min", "0", "--k-max", "4", "--p", "5"]);
    assert_eq!(code, 0);
    for line in lines(&out) {
        let spec: reciprodick_core::FamilySpec = serde_json::from_value(line["spec"].clone()).unwrap();
        let poly: reciprodick_core::Poly = serde_json::from_value(line["poly"].clone()).unwrap();
        assert_eq!(spec.build().unwrap(), poly);
    }
}

#[test]
fn gen_big_coefficients_are_strings() {
    let (code, out, _) = call(&["gen", "--family", "f", "--n", "200", "--k", "1"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    let coeffs = v[0]["poly"]["coeffs"].as_array().unwrap();
    assert!(coeffs.iter().all(Value::is_string));
    assert!(coeffs.iter().any(|c| c.as_str().unwrap().len() > 20));
}

#[test]
fn gen_dickson_with_a_and_csv() {
    let (code, out, _) = call(&["gen", "--family", "dickson", "--n", "3", "--k", "0", "--a", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    // D_{3,0}(a, x) = a^3 - 3ax
    assert_eq!(out, "family,n,k,p,a,degree,self_reciprocal,coeffs\nD,3,0,,2,1,false,8;-6\n");
}

#[test]
fn gen_single_invalid_member_is_an_error() {
    let (code, _, err) = call(&["gen", "--family", "g", "--n", "5", "--k", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("even"), "{err}");
    let (code, _, err) = call(&["gen", "--family", "f", "--n", "4", "--k", "7", "--p", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("[0, 4]"), "{err}");
}

#[test]
fn verify_t2_1_is_clean() {
    let (code, out, _) = call(&["verify", "--theorem", "t2.1", "--n-max", "200", "--k-min", "-5", "--k-max", "6"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["summary"]["mismatched"], 0);
    assert_eq!(v[0]["summary"]["checked"], 1200);
}

#[test]
fn verify_t2_3_small_n_reports_findings() {
    let (code, out, _) = call(&["verify", "--theorem", "t2.3", "--n-max", "4"]);
    assert_eq!(code, 2);
    let v = lines(&out);
    let summary = &v.last().unwrap()["summary"];
    assert_eq!(summary["mismatch_n"], serde_json::json!([2, 4]));
    assert!(v[..v.len() - 1].iter().all(|l| l["match"] == false && l["note"].is_string()));
}

#[test]
fn table_is_csv_by_default_and_deterministic() {
    let args = ["table", "--theorem", "t3.1", "--n-max", "8", "--p-list", "3,5"];
    let (code, a, _) = call(&args);
    let (_, b, _) = call(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let mut rows = a.lines();
    assert_eq!(rows.next(), Some("theorem,family,n,k,p,predicted,observed,match"));
    assert_eq!(rows.next(), Some("T3_1,f,2,0,3,true,true,true"));
    // 4 even n, 3 + 5 values of k
    assert_eq!(rows.count(), 4 * 8 - 1);
}

#[test]
fn classify_lists_applicable_statements() {
    let (code, out, _) = call(&["classify", "--family", "f", "--n", "6", "--k", "0", "--p", "3"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    let ids: Vec<&str> = v[0]["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["theorem"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["T3_1", "C3_2", "L1"]);
}

#[test]
fn coterm_commands() {
    let (code, out, _) = call(&["coterm", "--theorem", "t5.1", "--n", "4"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v[0]["poly"]["coeffs"], serde_json::json!(["2", "12"]));
    assert_eq!(v[0]["m"], 2);

    let (code, out, _) = call(&["coterm", "--theorem", "t5.9", "--n", "9", "--p", "3"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v[0]["degenerate"], true);
    assert_eq!(v[0]["poly"]["coeffs"], serde_json::json!(["1"]));

    let (code, _, err) = call(&["coterm", "--theorem", "t5.1", "--n", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("T5_1"), "{err}");

    let (code, out, _) = call(&["coterm", "--theorem", "all", "--n-max", "40"]);
    assert_eq!(code, 0);
    assert!(lines(&out).iter().all(|l| l["coterm"] == true));

    let (code, _, _) = call(&["coterm", "--family", "f", "--n", "5", "--k", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn code_report() {
    let (code, out, _) = call(&["code", "--p", "2", "--m", "7", "--generator", "1,1,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"p\":2,\"m\":7,\"generator\":[\"1\",\"1\",\"0\",\"1\"],\"dimension\":4,\"reversible\":false,\"self_reciprocal\":false,\"enumeration_checked\":true}\n"
    );
    let (code, out, _) = call(&["code", "--p", "2", "--m", "3"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out).len(), 4);
    let (code, _, err) = call(&["code", "--p", "2", "--m", "7", "--generator", "1,0,1"]);
    assert_eq!(code, 1);
    assert!(err.contains("does not divide"), "{err}");
    let (code, _, _) = call(&["code", "--p", "17", "--m", "4"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(call(&["verify"]).0, 1);
    assert_eq!(call(&["gen", "--family", "nope", "--n", "3"]).0, 1);
    assert_eq!(call(&["frobnicate"]).0, 1);
    assert_eq!(call(&["verify", "--theorem", "t9.9"]).0, 1);
    assert_eq!(call(&["gen", "--family", "f", "--n", "3", "--n-max", "5"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("reciprodick-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gen.json");
    let (code, out, _) = call(&["gen", "--family", "f", "--n", "3", "--k", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"coeffs\":[\"8\"]"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_reciprodick");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["gen", "--family", "f", "--n", "4", "--k", "0"]), Some(0));
    assert_eq!(status(&["verify", "--theorem", "t2.7", "--n-min", "3", "--n-max", "5"]), Some(2));
    assert_eq!(status(&["verify", "--theorem", "t2.7"]), Some(2));
    assert_eq!(status(&["verify", "--theorem", "t2.7", "--n-min", "7", "--n-max", "199"]), Some(0));
    assert_eq!(status(&["gen"]), Some(1));
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extbranch")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn error_doc(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(2), "{}", stdout(o));
    serde_json::from_slice(&o.stderr).unwrap()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("extbranch-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

/// Output is pretty JSON in canonical form: re-serializing gives the same bytes.
fn assert_canonical(o: &Output) {
    let text = stdout(o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), text);
    assert_eq!(v["schema"], "v1");
}

const R12: &str = r#"[{"line":"r","deg":1,"a":1,"b":2}]"#;
const R11: &str = r#"[{"line":"r","deg":1,"a":1,"b":1}]"#;

#[test]
fn relevant_example_has_certificate() {
    let o = run(&["relevant", "--pi1", R12, "--pi2", R11]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["relevant"], true);
    assert_eq!(v["deciders_agree"], true);
    assert_eq!(v["certificate"]["family1"].as_array().unwrap().len(), 1);
    assert_canonical(&o);
}

#[test]
fn not_relevant_exits_one() {
    let o = run(&["relevant", "--fixture", "not-relevant"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["certificate"], Value::Null);
}

#[test]
fn dual_example() {
    let o = run(&["--format", "text", "dual", "--pi", r#"[{"line":"r","deg":1,"a":2,"b":3}]"#]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "u_r(3,2)");
}

#[test]
fn ext_example() {
    let o = run(&["--format", "text", "ext", "--algebra", "remark14-A", "--from", "X", "--to", "Z", "--degree", "2"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["ext", "--algebra", "remark14-B", "--from", "X", "--to", "Z", "--degree", "2"]);
    let v = json(&o);
    assert_eq!(v["ext_dim"], 0);
    assert_eq!(v["resolution"], "0 → Q → R → X → 0");
    let o = run(&["ext", "--algebra", "remark14-A", "--from", "X", "--to", "Z", "--degree", "2"]);
    assert_eq!(json(&o)["resolution"], "0 → Z → Q → P → X → 0");
}

#[test]
fn malformed_exponent_reports_pointer() {
    let o = run(&["c-omega", "--sigma", r#"[{"line":"r","a":"1/2","b":"3/x"}]"#, "--omega", "[]"]);
    let e = error_doc(&o);
    assert_eq!(e["error"]["source"], "--sigma");
    assert_eq!(e["error"]["pointer"], "/0/b");
}

#[test]
fn semantic_errors_are_located() {
    let o = run(&["relevant", "--pi1", R12, "--pi2", r#"[{"line":"r","deg":2,"a":1,"b":1}]"#]);
    let e = error_doc(&o);
    assert_eq!(e["error"]["source"], "--pi2");
    assert_eq!(e["error"]["pointer"], "/0");
    let o = run(&["dual", "--pi", "{}"]);
    assert_eq!(error_doc(&o)["error"]["pointer"], "");
}

#[test]
fn output_is_byte_stable() {
    let args = ["trace", "--fixture", "one3-st2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn trace_output_revalidates() {
    for fixture in ["relevance-example", "one3-st2"] {
        let o = run(&["trace", "--fixture", fixture]);
        assert_eq!(o.status.code(), Some(0));
        assert_canonical(&o);
        assert_eq!(json(&o)["valid"], true);
        let p = temp(&format!("{fixture}.json"), &stdout(&o));
        let c = run(&["trace", "--check", p.to_str().unwrap()]);
        assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
        assert_eq!(json(&c)["valid"], true);
    }
    let o = run(&["trace", "--fixture", "one3-st2"]);
    assert!(stdout(&o).contains("CaseB_Duality"));
}

#[test]
fn tampered_trace_rejected() {
    let mut v = json(&run(&["trace", "--fixture", "one3-st2"]));
    v["trace"]["steps"][0]["data"]["reduced"]["target"] = Value::from(3);
    let p = temp("tampered.json", &v.to_string());
    let c = run(&["trace", "--check", p.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(1));
    assert_eq!(json(&c)["valid"], false);
}

#[test]
fn input_document() {
    let p = temp("pair.json", &format!(r#"{{"schema":"v1","pi1":{R12},"pi2":{R11}}}"#));
    let o = run(&["relevant", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let bad = temp("pair-bad.json", r#"{"schema":"v1","pi1":[{"line":"r","deg":1,"a":1,"b":0}],"pi2":[]}"#);
    let e = error_doc(&run(&["relevant", "--input", bad.to_str().unwrap()]));
    assert_eq!(e["error"]["pointer"], "/pi1/0/b");

    let extra = temp("pair-extra.json", &format!(r#"{{"schema":"v1","pi1":{R12},"pi2":{R11},"pi3":[]}}"#));
    assert_eq!(error_doc(&run(&["relevant", "--input", extra.to_str().unwrap()]))["error"]["pointer"], "/pi3");

    let old = temp("pair-v0.json", &format!(r#"{{"schema":"v0","pi1":{R12},"pi2":{R11}}}"#));
    assert_eq!(error_doc(&run(&["relevant", "--input", old.to_str().unwrap()]))["error"]["pointer"], "/schema");
}

#[test]
fn algebra_document() {
    // the Kronecker-free A2 quiver x → y: Ext¹(S_x, S_y) = 1
    let doc = r#"{"schema":"v1",
        "algebra":{"name":"A2","vertices":["x","y"],"arrows":[{"name":"a","source":"x","target":"y"}]},
        "modules":{"Sx":{"dims":{"x":1}},"Sy":{"dims":{"y":1}},"Px":{"dims":{"x":1,"y":1},"maps":{"a":[["1"]]}}}}"#;
    let p = temp("a2.json", doc);
    let path = p.to_str().unwrap();
    let o = run(&["ext", "--algebra", path, "--from", "Sx", "--to", "Sy", "--degree", "1", "--table"]);
    assert_eq!(json(&o)["table"], serde_json::json!([0, 1]));
    let o = run(&["ext", "--algebra", path, "--from", "Px", "--to", "Sy", "--degree", "1"]);
    assert_eq!(json(&o)["ext_dim"], 0);

    let bad = temp("a2-bad.json", &doc.replace(r#""a":[["1"]]"#, r#""a":[["1","0"]]"#));
    let e = error_doc(&run(&["ext", "--algebra", bad.to_str().unwrap(), "--from", "Sx", "--to", "Sy", "--degree", "1"]));
    assert_eq!(e["error"]["pointer"], "/modules/Px/maps/a");
}

#[test]
fn c_omega_fixtures() {
    let o = run(&["c-omega", "--fixture", "gl2-trivial"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["member"], false);
    assert_eq!(v["obstructions"][0]["x"], "1/2");
    assert_eq!(run(&["c-omega", "--fixture", "gl2-trivial-far"]).status.code(), Some(0));
}

#[test]
fn arthur_subcommands() {
    let pi = r#"[{"line":"r","deg":1,"a":2,"b":3}]"#;
    let v = json(&run(&["msegs", "--pi", pi]));
    assert_eq!(v["langlands"].as_array().unwrap().len(), 3);
    assert_eq!(v["zelevinsky"].as_array().unwrap().len(), 2);
    assert_eq!(v["support"].as_array().unwrap().len(), 6);
    let v = json(&run(&["lparam", "--pi", pi]));
    assert_eq!(v["param"][0]["deligne"], 2);
    assert_eq!(v["l_param_msegs"], json(&run(&["msegs", "--pi", pi]))["langlands"]);
    let v = json(&run(&["lparam", "--psi", r#"[{"phi":"r","deg":1,"deligne":2,"arthur":3}]"#]));
    assert_eq!(v["pi"][0]["a"], 2);
    let v = json(&run(&["derivative", "--pi", pi]));
    assert_eq!(v["display"], "u_r(2,2)");
}

#[test]
fn kunneth_subcommand() {
    let o = run(&["kunneth", "--algebra", "remark14-A", "--with", "remark14-B", "--e1", "X", "--f1", "Z", "--e2", "X", "--f2", "X", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["holds"], true);
    assert_eq!(v["cases"][0]["levels"][2]["tensor_side"], 1);
}

#[test]
fn hecke_subcommands() {
    let t = r#"{"n":2,"terms":[{"lambda":[0,0],"w":[2,1],"coeff":"1"}]}"#;
    let v = json(&run(&["hecke-mul", "--a", t, "--b", t]));
    // T² = (q-1)T + q
    let terms = v["product"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["coeff"], "q");
    assert_eq!(terms[1]["coeff"], "q - 1");

    let o = run(&["hecke-center", "--label", "[1,-1,0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["central"], true);

    let o = run(&["--q", "3", "hecke-induce", "--m1", r#"{"kind":"one-dimensional","n":2,"alpha":"2","trivial":false}"#, "--m2", r#"{"kind":"jordan","alpha":"5"}"#]);
    let v = json(&o);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["expected_dim"], 6);
    assert_canonical(&o);

    let o = run(&["--q", "2", "hecke-complete-check", "--m1", r#"{"kind":"character","alpha":"3"}"#, "--m2", r#"{"kind":"character","alpha":"6"}"#]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["--q", "2", "hecke-complete-check", "--m1", r#"{"kind":"jordan","alpha":"3"}"#, "--m2", r#"{"kind":"jordan","alpha":"5"}"#]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["limits_agree"], true);

    let e = error_doc(&run(&["--q", "1/0", "hecke-induce", "--m1", "{}", "--m2", "{}"]));
    assert_eq!(e["error"]["source"], "--q");
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzy-riesz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_slice(&run(&full).stdout).expect("valid json")
}

// [DERIVED] foset examples: the 3-chain with grades 2/3 is valid and sup {a, b} = b
#[test]
fn foset_chain() {
    assert_eq!(ok(&["foset", "verify", &data("chain3.json")]), "valid fuzzy order");
    assert_eq!(ok(&["foset", "sup", &data("chain3.json"), "a", "b"]), "b");
    assert_eq!(ok(&["foset", "inf", &data("chain3.json"), "b", "c"]), "b");
    assert_eq!(ok(&["foset", "lattice", &data("chain3.json")]), "lattice");
}

// [TRIVIAL] the antichain has no bounds
#[test]
fn foset_antichain() {
    assert_eq!(ok(&["foset", "sup", &data("antichain2.json"), "a", "b"]), "none");
    assert_eq!(ok(&["foset", "lattice", &data("antichain2.json")]), "not a lattice");
    assert_eq!(json(&["foset", "join", &data("antichain2.json"), "a", "b"])["result"], serde_json::Value::Null);
}

// [TRIVIAL] a diagonal grade of 9/10 is a reflexivity violation naming the element
#[test]
fn foset_reflexivity_violation() {
    let o = run(&["foset", "verify", &data("bad_reflexive.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("reflexivity violation: mu(a, a)"));
    let v = json(&["foset", "verify", &data("bad_reflexive.json")]);
    assert_eq!(v["report"]["reflexivity_violations"], serde_json::json!(["a"]));
}

// [DERIVED] riesz-space examples
#[test]
fn space_examples() {
    assert_eq!(ok(&["space", "abs", &data("pointwise3.json"), "1,-2,0"]), "(1, 2, 0)");
    assert_eq!(ok(&["space", "decompose", "pointwise:2:2/3", "3,0", "2,1", "2,-1"]), "(2, 0) + (1, 0)");
    assert_eq!(ok(&["space", "archimedean", &data("lex.json")]), "false; witness x=(0, 1) bounded by (1, 0)");
    assert_eq!(ok(&["space", "archimedean", "pointwise:3:2/3"]), "true");
    assert_eq!(ok(&["space", "mu", "lex:2/3", "0,5", "1,0"]), "2/3");
}

// [DERIVED] band examples, including the axis that is not a projection band
#[test]
fn band_examples() {
    assert_eq!(ok(&["band", "generate", "pointwise:3:2/3", "1,0,0", "0,0,2"]), "pointwise support {1,3}");
    assert_eq!(ok(&["band", "project", "pointwise:3:2/3", "{1,3}", "5,7,2"]), "(5, 0, 2)");
    assert_eq!(ok(&["band", "complement", "lex:2/3", &data("axis_handle.json")]), "lex zero");
    let o = run(&["band", "project", "lex:2/3", "axis", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a projection band"));
    let v = json(&["band", "project", "lex:2/3", "axis", "1,1"]);
    assert_eq!(v["error"]["code"], "not_projection_band");
}

// [DERIVED] certificate files: the harmonic one is accepted, the constant offset fails at n = 2
#[test]
fn converge_certificates() {
    let v = json(&["space", "converge", "pointwise:2:2/3", &data("harmonic_certificate.json")]);
    assert_eq!(v["establishes_limit"], true);
    assert_eq!(v["report"]["verified_horizon"], 128);
    let v = json(&["space", "converge", "pointwise:2:2/3", &data("offset_certificate.json")]);
    assert_eq!(v["establishes_limit"], false);
    assert_eq!(v["report"]["violations"][0]["index"], 2);
}

// [DERIVED] the operator example: identity from grade 4/5 to 2/3 is positive
#[test]
fn project_examples() {
    assert_eq!(ok(&["project", "positive", "pointwise:2:4/5", "1,0;0,1", "--to", "pointwise:2:2/3"]), "true");
    assert_eq!(
        ok(&["project", "classify", "pointwise:2:2/3", "0,0;0,1"]),
        "band projection onto pointwise support {2}"
    );
    assert!(ok(&["project", "principal", "pointwise:3:2/3", "1,0,-4", "3,5,-7"]).starts_with("(3, 0, -7)"));
    assert!(ok(&["project", "positive", "lex:2/3", "0,1;1,0"]).starts_with("false"));
}

// [TRIVIAL] exit codes and error payloads
#[test]
fn input_errors() {
    let v = json(&["space", "abs", "pointwise:2:2/3", "1,2,3"]);
    assert_eq!(v["error"]["code"], "dimension_error");
    let v = json(&["space", "decompose", "pointwise:1:2/3", "5", "1"]);
    assert_eq!(v["error"]["code"], "not_dominated");
    let v = json(&["foset", "verify", "/definitely/missing.json"]);
    assert_eq!(v["error"]["code"], "io_error");
    let v = json(&["theorems", "everything"]);
    assert_eq!(v["error"]["code"], "usage_error");
    assert_eq!(run(&["space", "abs", "pointwise:0:2/3", "1"]).status.code(), Some(2));
}

// [DERIVED] same seed, same bytes
#[test]
fn theorems_deterministic() {
    let args = ["theorems", "riesz", "--seed", "42", "--cases", "50", "--json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

// [DERIVED] the projection suite lists its calculus checks with zero failures
#[test]
fn theorems_projections() {
    let text = ok(&["theorems", "projections", "--cases", "100"]);
    for tag in ["projection-complement", "projection-intersection", "projection-sum"] {
        assert!(text.contains(&format!("PASS {tag}")), "{text}");
    }
    assert!(text.ends_with("0 failures (seed 0, cases 100, horizon 128)"), "{text}");
}

// [DERIVED] x+ = x ^ 0 breaks the parts laws and the run exits 1 with counterexamples
#[test]
fn mutant_fails_suite() {
    let o = run(&["theorems", "riesz", "--cases", "100", "--mutant", "literal-positive-part"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL abs-parts-sum/pointwise"), "{text}");
    assert!(text.contains("counterexample: pointwise R^"), "{text}");
}

use std::path::PathBuf;

use monoinv::cli::{run_args, EXIT_CHECK_FAILED, EXIT_CONFIG, EXIT_OK, EXIT_PARSE};

const TWISTED_CUBIC: &str = "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2";

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_args(std::iter::once("monoinv").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

#[test]
fn gin_of_twisted_cubic() {
    let (code, out, _) = run(&["gin", "--gens", TWISTED_CUBIC, "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("gin: (x0^2, x0*x1, x1^2)\nagreed: true\n"), "{out}");
    assert!(out.contains("seed: 7"));
    let (code, out, _) = run(&["gin", "--in", &corpus("twisted_cubic.ideal"), "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("gin: (x0^2, x0*x1, x1^2)\nagreed: true\n"), "{out}");
}

#[test]
fn check_reports_connectedness() {
    let (code, out, _) = run(&["check", "--gens", TWISTED_CUBIC]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("s_Z=2 s_Gamma=2 hypothesis=yes connected=yes\n"), "{out}");
    assert!(out.contains("slice: pass") && out.contains("proof_trace: pass"));
}

#[test]
fn invariants_of_a_corpus_file() {
    let (code, out, _) = run(&["invariants", "--in", &corpus("points_5_p2.ideal")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lambda=(3,2)"), "{out}");
}

#[test]
fn borel_witness() {
    let (code, out, _) = run(&["borel", "--gens", "x1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "borel_fixed: false witness: (x1, e_1)\n");
    let (code, out, _) = run(&["borel", "--gens", "x0^2, x1^2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "borel_fixed: false witness: (x1^2, e_1)\n");
    let (_, out, _) = run(&["borel", "--gens", "x0^2, x0*x1, x1^2"]);
    assert_eq!(out, "borel_fixed: true\n");
}

#[test]
fn hilbert_function_lines() {
    let (code, out, _) = run(&["hilbert", "--gens", TWISTED_CUBIC, "--dmax", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "H(0)=1\nH(1)=4\nH(2)=7\nH(3)=10\n");
}

#[test]
fn trace_for_one_index() {
    let (code, out, _) = run(&["trace", "--in", &corpus("ci_2_5_p3.ideal"), "--p-hat", "0"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("step1=yes") && out.contains("step2=yes"), "{out}");
    let (code, _, _) = run(&["trace", "--gens", TWISTED_CUBIC, "--p-hat", "0,1"]);
    assert_eq!(code, EXIT_CONFIG);
}

#[test]
fn parse_errors_exit_with_two() {
    let (code, _, err) = run(&["gin", "--gens", "x0*x1 + x2"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("homogeneous"), "{err}");
    let (code, _, err) = run(&["gin", "--gens", "x0 $ x1"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("1:4:"), "{err}");
}

#[test]
fn configuration_errors_exit_with_three() {
    assert_eq!(run(&["gin", "--gens", TWISTED_CUBIC, "--votes", "1"]).0, EXIT_CONFIG);
    assert_eq!(run(&["gin", "--gens", TWISTED_CUBIC, "--prime", "32004"]).0, EXIT_CONFIG);
    assert_eq!(run(&["gin"]).0, EXIT_CONFIG);
    assert_eq!(run(&["frobnicate"]).0, EXIT_CONFIG);
    assert_eq!(run(&["gin", "--gens", "20000*x0"]).0, EXIT_CONFIG);
    assert_eq!(run(&["gin", "--in", "/nonexistent/file.ideal"]).0, EXIT_CONFIG);
}

#[test]
fn failing_check_exits_with_five() {
    let dir = std::env::temp_dir().join(format!("monoinv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(corpus("twisted_cubic.ideal")).unwrap().replace("s_Z: 2", "s_Z: 3");
    let path = dir.join("wrong.ideal");
    std::fs::write(&path, text).unwrap();
    let (code, out, err) = run(&["check", "--in", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.contains("mismatch: s_Z"), "{out}");
    assert!(err.contains("\"failed\""), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_output_is_stable() {
    let (code, a, _) = run(&["check", "--gens", TWISTED_CUBIC, "--json", "--seed", "3"]);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = run(&["check", "--gens", TWISTED_CUBIC, "--json", "--seed", "3"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["gin"], serde_json::json!(["x0^2", "x0*x1", "x1^2"]));
    assert_eq!(v["s_Z"], 2);
    assert_eq!(v["invariant_table"][0]["lambda"], serde_json::json!([2, 1]));
    assert_eq!(v["passed"], true);
}

#[test]
fn corpus_regen_round_trips() {
    let dir = std::env::temp_dir().join(format!("monoinv-regen-{}", std::process::id()));
    let (code, out, _) = run(&["corpus-regen", "--dir", dir.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 16);
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), std::fs::read_to_string(corpus(&name)).unwrap(), "{name}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

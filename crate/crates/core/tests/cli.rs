use std::path::Path;
use std::process::{Command, Output};

fn invhol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invhol")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn verify_generated_i2_file() {
    let dir = tempfile::tempdir().unwrap();
    let gen = invhol(&["gen", "i2"]);
    assert!(gen.status.success());
    let path = write(dir.path(), "i2.json", &stdout(&gen));
    let out = invhol(&["verify", &path]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("elements: 7"));
}

#[test]
fn non_associative_table_exits_1_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", r#"{"names": ["a", "b"], "mul": [[1, 0], [0, 0]]}"#);
    let out = invhol(&["verify", &path]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("[FAIL] table is an inverse semigroup"), "{text}");
    assert!(text.contains("not associative"), "{text}");
}

#[test]
fn empty_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "empty.json", "");
    let out = invhol(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn budget_exit_code() {
    let out = invhol(&["sha", "i2", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn hol_and_sha_counts_for_z3() {
    let hol = stdout(&invhol(&["hol", "z3"]));
    assert!(hol.contains("premorphisms: 3"), "{hol}");
    assert!(hol.contains("holomorph elements: 9"), "{hol}");
    assert!(hol.contains("holomorph units: 6"), "{hol}");
    let sha = stdout(&invhol(&["sha", "z3"]));
    assert!(sha.contains("sha size: 9"), "{sha}");
}

#[test]
fn reports_are_deterministic() {
    for args in [&["hol", "i2", "--jobs", "3"][..], &["poly", "--checks", "zappa,classify", "--seed", "7", "--maxlen", "2"]] {
        let a = invhol(args);
        let b = invhol(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(stdout(&a).contains("param seed: "));
    }
}

#[test]
fn json_mirrors_text() {
    let text = stdout(&invhol(&["esn", "clifford4"]));
    let json: serde_json::Value = serde_json::from_slice(&invhol(&["esn", "clifford4", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["command"], "esn");
    let reports = json["reports"].as_array().unwrap();
    for r in reports {
        assert!(text.contains(&format!("== {} ==", r["title"].as_str().unwrap())));
        for c in r["checks"].as_array().unwrap() {
            let mark = if c["passed"].as_bool().unwrap() { "PASS" } else { "FAIL" };
            assert!(text.contains(&format!("[{mark}] {}", c["name"].as_str().unwrap())));
        }
    }
}

#[test]
fn poly_expression_and_heap_finding() {
    let out = invhol(&["poly", "--alphabet", "2", "(ab)^-1 a * b^-1 1", "ab * b^-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(ab)^-1 a * b^-1 1: 0"), "{text}");
    assert!(text.contains("ab * b^-1: a"), "{text}");
    let heap = invhol(&["poly", "--checks", "heap"]);
    assert_eq!(heap.status.code(), Some(1));
    assert!(stdout(&heap).contains("[FAIL] c-type elements preserve zero instances iff w = s = t"));
}

#[test]
fn dump_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(invhol(&["sha", "two-chain", "--dump", d]).status.success());
    let maps = std::fs::read_to_string(dir.path().join("sha.json")).unwrap();
    assert!(maps.starts_with("{\n  \"maps\": ["));
    assert!(invhol(&["flows", "connected2-z2", "--dump", d]).status.success());
    let raw = std::fs::read_to_string(dir.path().join("groupoid.json")).unwrap();
    let path = write(dir.path(), "g.json", &raw);
    let out = invhol(&["flows", &path]);
    assert!(stdout(&out).contains("flows: 16"));
}

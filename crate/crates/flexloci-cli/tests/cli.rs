//! Black-box tests of the command-line binary: output contents, format
//! stability and the exit-code contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flexloci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn degree_json_large_anchor() {
    let output = run(&["degree", "--n", "5", "--d", "53", "--k", "8", "--format", "json"]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["degree"], "42436258837");
    assert_eq!(parsed["locus"], "PROPER");
    assert_eq!(parsed["dim"], 1);
    assert_eq!(parsed["routes"]["lambda"], "42436258837");
    assert_eq!(parsed["routes"]["mu"], "42436258837");
    assert_eq!(parsed["routes"]["chern"], "42436258837");
    assert_eq!(parsed["routes_agree"], true);
}

#[test]
fn degree_text_flex_of_cubic_surface() {
    let output = run(&["degree", "--n", "3", "--d", "3", "--k", "4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("degree: 27"), "got: {text}");
    assert!(text.contains("dim 1"), "got: {text}");
}

#[test]
fn degree_empty_exception_case() {
    let output = run(&["degree", "--n", "3", "--d", "4", "--k", "5"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("EMPTY"), "got: {text}");
    assert!(text.contains("degree: 0"), "got: {text}");
}

#[test]
fn degree_rejects_bad_input_with_exit_2() {
    let output = run(&["degree", "--n", "1", "--d", "3", "--k", "2"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["degree", "--n", "3", "--d", "not-a-number", "--k", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn lines_counts() {
    for (n, expected) in [("3", "27"), ("4", "2875"), ("5", "698005")] {
        let output = run(&["lines", "--n", n, "--format", "json"]);
        assert!(output.status.success());
        let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
        assert_eq!(parsed["lines"], expected);
    }
}

#[test]
fn catalan_table_text() {
    let output = run(&["catalan", "--a", "3", "--rows", "6"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("1 4 10 19 28 28"), "got: {text}");
    assert!(text.contains("1 6 21 55 117 207 297 297"), "got: {text}");
}

#[test]
fn contact_fermat_line_is_infinite() {
    let output = run(&[
        "contact",
        "--poly",
        "x0^3+x1^3+x2^3+x3^3",
        "--p",
        "1,-1,0,0",
        "--q",
        "0,0,1,-1",
    ]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("INFINITE"));
}

#[test]
fn contact_tangent_conic_with_rational_points() {
    let output = run(&[
        "contact",
        "--poly",
        "x0*x2 - x1^2",
        "--p",
        "1,0,0",
        "--q",
        "0,1/2,0",
        "--k",
        "3",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["order"], "FINITE(2)");
    assert_eq!(parsed["is_kflex"], false);
}

#[test]
fn table_marks_empty_and_stabilized_cells() {
    let output = run(&["table", "--n-min", "2", "--n-max", "3", "--d", "3,4", "--format", "json"]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let rows = parsed["rows"].as_array().unwrap();
    // rows: (2,3), (3,4), (3,5)
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["cells"][0]["degree"], "9");
    assert_eq!(rows[1]["cells"][0]["degree"], "27");
    // n=3, k=5, d=3: beyond the ruled-locus threshold, reported stabilized
    assert_eq!(rows[2]["cells"][0]["stabilized"], true);
    // n=3, k=5, d=4: the no-lines-on-a-general-quartic-surface exception
    assert_eq!(rows[2]["cells"][1]["degree"], "0");
    assert_eq!(rows[2]["cells"][1]["empty"], true);
}

#[test]
fn table_rejects_empty_request() {
    let output = run(&["table", "--n-min", "3", "--n-max", "2", "--d", "3"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn stratification_covers_all_strata() {
    let output = run(&["stratification", "--n", "3", "--d", "4", "--format", "csv"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(
        text,
        "k,locus,dim,degree\n\
         1,WHOLE_HYPERSURFACE,2,4\n\
         2,WHOLE_HYPERSURFACE,2,4\n\
         3,WHOLE_HYPERSURFACE,2,4\n\
         4,PROPER,1,80\n\
         5,EMPTY,-1,0\n"
    );
}

#[test]
fn verify_suite_passes() {
    let output = run(&["verify", "--suite", "catalan"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("PASS"));
    let output = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["degree", "--n", "4", "--d", "7", "--k", "6", "--format", "json"],
        vec!["table", "--n-min", "2", "--n-max", "4", "--d", "5,6", "--format", "csv"],
        vec!["catalan", "--a", "2", "--rows", "8"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join("flexloci-cli-test-out.json");
    let _ = std::fs::remove_file(&path);
    let output = run(&[
        "degree", "--n", "2", "--d", "4", "--k", "3", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    assert!(stdout(&output).is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(parsed["degree"], "24");
    std::fs::remove_file(&path).unwrap();
}

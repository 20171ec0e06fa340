//! End-to-end CLI behavior: output text and exit codes.

use std::process::Command;

fn shearq(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_shearq"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn trace_of_the_bordering_arc_word() {
    let (out, _, code) = shearq(&[
        "trace",
        "--surface",
        "quad014",
        "--word",
        "K X(pi2) L X(pi1)",
        "--mode",
        "quantum",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[1] exp((1*pi1 + 1*pi2)/2)");
}

#[test]
fn trace_round_trips_through_the_printer() {
    let (out, _, code) = shearq(&[
        "trace",
        "--surface",
        "s111",
        "--word",
        "L X(Z4) R X(Z3)",
    ]);
    assert_eq!(code, 0);
    // parse the printed text back and compare against a direct computation
    let b = shearq::registry::builtin("s111").unwrap();
    let basis = b.graph.epsilon_basis();
    let parsed = shearq::text::parse_qlaurent(out.trim(), &basis).unwrap();
    let word = shearq::text::parse_word("L X(Z4) R X(Z3)", &basis).unwrap();
    let direct = shearq::holonomy::trace(
        &word,
        &basis,
        shearq::holonomy::Mode::Classical,
        b.graph.orientation,
    )
    .unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn lines_format_emits_one_term_per_line() {
    let (out, _, code) = shearq(&[
        "trace",
        "--surface",
        "s111",
        "--word",
        "L X(Z4) R X(Z3)",
        "--format",
        "lines",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim().lines().count(), 3);
}

#[test]
fn validate_builtin_succeeds() {
    let (out, _, code) = shearq(&["validate", "--surface", "s111"]);
    assert_eq!(code, 0);
    assert!(out.contains("valid: s111"));
}

#[test]
fn validate_missing_file_is_an_input_error() {
    let (_, err, code) = shearq(&["validate", "--surface", "/tmp/definitely-missing.fg"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
}

#[test]
fn validate_malformed_file_is_an_input_error() {
    let dir = std::env::temp_dir().join("shearq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.fg");
    std::fs::write(&path, "surface g=0 s_h=1 n=1\nvertex v1 trivalent\nedge a open v1.0 nowhere\n").unwrap();
    let (_, _, code) = shearq(&["validate", "--surface", path.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn unknown_builtin_is_an_input_error() {
    let (_, _, code) = shearq(&["commute", "--surface", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn commute_reports_per_pair_lines() {
    let (out, _, code) = shearq(&["commute", "--surface", "quad014"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim().lines().count(), 10);
    assert!(out.lines().all(|l| l.contains("status=pass")));
    assert!(out.contains("pair <la,lb> I="));
}

#[test]
fn tropical_examples() {
    let (out, _, code) = shearq(&["tropical", "--kind", "inner", "--lengths", "1,0,1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2");
    let (out, _, code) = shearq(&["tropical", "--kind", "loop", "--lengths", "3,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "4");
}

#[test]
fn mutate_prints_the_exchange() {
    let (out, _, code) = shearq(&["mutate", "--surface", "quad014", "--arc", "le"]);
    assert_eq!(code, 0);
    assert!(out.contains("exp((1*pi1 + 1*pi3 + 1*Z)/2)"));
    assert!(out.contains("exp((1*pi1 + 1*pi3 + -1*Z)/2)"));
}

#[test]
fn flip_prints_the_substitution_and_is_replayable() {
    let (out, _, code) = shearq(&["flip", "--surface", "s111", "--edges", "Z3,Z3"]);
    assert_eq!(code, 0);
    assert!(out.contains("flip Z3"));
    assert!(out.contains("->"));
}

#[test]
fn suites_run_and_fail_codes_are_distinct() {
    let (out, _, code) = shearq(&["suite", "s111"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("[PASS]")));
    let (_, _, code) = shearq(&["suite", "no-such-suite"]);
    assert_eq!(code, 2);
}

#[test]
fn full_acceptance_suite_passes() {
    let (out, _, code) = shearq(&["suite", "all"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.trim().lines().count(), 12);
    assert!(out.lines().all(|l| l.starts_with("[PASS]")), "{out}");
}

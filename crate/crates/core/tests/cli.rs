use std::path::PathBuf;
use std::process::{Command, Output};

use setvec::cli::{builtin, parse_problem, BUILTIN_NAMES};

fn setvec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setvec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("setvec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn lists_builtins() {
    let out = setvec(&["builtins"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().collect::<Vec<_>>(), BUILTIN_NAMES);
}

#[test]
fn show_round_trips() {
    for name in BUILTIN_NAMES {
        let out = setvec(&["show", "--builtin", name]);
        assert!(out.status.success(), "{name}: {}", stderr(&out));
        assert_eq!(parse_problem(&stdout(&out)).unwrap(), builtin(name).unwrap());
        // Canonical form is a fixed point.
        let path = temp_file(&format!("{name}.json"), &stdout(&out));
        let again = setvec(&["show", path.to_str().unwrap()]);
        assert_eq!(stdout(&again), stdout(&out));
    }
}

#[test]
fn table_is_deterministic_csv() {
    let args = ["table", "--builtin", "paper-disks-wtable", "--against", "0"];
    let (a, b) = (setvec(&args), setvec(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,param,first,second,accepted"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0], ["0", "0", "0", "0", "true"]);
    for row in &rows {
        let x: f64 = row[1].parse().unwrap();
        let first: f64 = row[2].parse().unwrap();
        assert!((first - (1.0 - 2.0 * 2f64.sqrt()) * x * x).abs() < 1e-3);
    }
}

#[test]
fn counterexample_report() {
    let out = setvec(&["solve", "--builtin", "paper-counterexample", "--method", "vop-v"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("solutions: 2\n"), "{text}");
    assert!(text.contains("total comparability: FAILED (witness pair 1, 2)"));
    assert!(text.contains("injectivity: PASSED"));
    assert!(text.contains("warning: id 1 solves the set problem but can not be obtained by Gerstewitz vectorization"));

    let pairwise = setvec(&["solve", "--builtin", "paper-counterexample", "--emit", "csv"]);
    assert_eq!(
        stdout(&pairwise),
        "id,param,first,second,accepted\n1,,,,true\n2,,,,true\n"
    );
}

#[test]
fn nonconvex_via_flags() {
    let out = setvec(&["solve", "--builtin", "paper-nonconvex", "--method", "vop-w"]);
    assert!(stdout(&out).contains("solutions: 0 2\n"), "{}", stdout(&out));
    // Same family, maximized instead.
    let out = setvec(&["solve", "--builtin", "paper-nonconvex", "--sense", "max"]);
    assert!(out.status.success());
    let relate = setvec(&["relate", "--builtin", "paper-nonconvex", "--pair", "0,2"]);
    let text = stdout(&relate);
    assert!(text.starts_with("w(0, 2) = (-3, 0)"), "{text}");
    assert!(text.contains("2 <=s 0: direct no, via w no") || text.contains("0 <=s 2: direct no, via w no"));
}

#[test]
fn disks_with_fewer_samples() {
    let out = setvec(&[
        "scalarize", "--builtin", "paper-disks", "--samples", "256", "--emit", "csv", "--e", "-1,-1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 102);
    // With e = (-1,-1) the first coordinate is -(1 - x²).
    let row = text.lines().find(|l| l.starts_with("0.5,")).unwrap();
    let first: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert!((first + 0.75).abs() < 1e-3, "{row}");
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["solve", "--builtin", "paper-nonconvex", "--e", "1,1"],
        vec!["solve", "--builtin", "no-such-problem"],
        vec!["solve", "/nonexistent/problem.json"],
        vec!["scalarize", "--builtin", "paper-counterexample", "--against", "9"],
        vec!["relate", "--builtin", "paper-counterexample", "--pair", "1,2", "--emit", "csv"],
        vec!["relate", "--builtin", "paper-counterexample"],
        vec!["solve", "--builtin", "paper-counterexample", "--method", "vop-v", "--weak"],
        vec!["solve", "--builtin", "paper-counterexample", "--tolerance", "-1"],
        vec!["solve", "--builtin", "paper-disks", "--samples", "2"],
        vec!["solve", "--method", "bogus", "--builtin", "paper-disks"],
    ] {
        let out = setvec(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn malformed_file_reports_position() {
    let path = temp_file("broken.json", "{\n  \"dim\": 2,\n  \"cone\": {\"type\": \"orthant\"},\n  \"e\": [-1, -1]\n  \"sense\": \"min\"\n}\n");
    let out = setvec(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 5"), "{}", stderr(&out));
}

#[test]
fn empty_family_exits_3() {
    let path = temp_file(
        "empty.json",
        r#"{"dim": 2, "cone": {"type": "orthant"}, "e": [-1, -1], "sense": "min", "relation": "s", "decisions": []}"#,
    );
    let out = setvec(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}

#[test]
fn polyhedral_cone_file() {
    let path = temp_file(
        "skew.json",
        r#"{
            "dim": 2,
            "cone": {"type": "polyhedral", "dual_rows": [[1, 2], [1, -2]]},
            "e": [-1, 0],
            "sense": "min",
            "relation": "s",
            "decisions": [
                {"id": "a", "set": {"points": [[0, 0]]}},
                {"id": "b", "set": {"points": [[1, 0]]}},
                {"id": "c", "set": {"points": [[0, 1]]}}
            ]
        }"#,
    );
    let out = setvec(&["solve", path.to_str().unwrap(), "--method", "vop-w"]);
    assert!(out.status.success(), "{}", stderr(&out));
    // b - a = (1,0) is interior to C; c - a = (0,1) is not in C.
    assert!(stdout(&out).contains("solutions: a c\n"), "{}", stdout(&out));
}

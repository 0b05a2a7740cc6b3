use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalrank"))
        .args(args)
        .env_remove("COALRANK_MAX_UNIVERSE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn file(name: &str) -> String {
    data(name).to_str().unwrap().to_owned()
}

#[test]
fn scores_on_example() {
    let f = file("example1.json");
    assert_eq!(
        stdout(&["scores", &f, "--solution", "b1"]),
        "A 5\nB 7\nC 3\n"
    );
    assert_eq!(
        stdout(&["scores", &f, "--solution", "b2"]),
        "A 19\nB 26\nC 12\n"
    );
    assert_eq!(
        stdout(&["scores", &f, "--solution", "bi"]),
        "A 3\nB 3\nC 8\n"
    );
    assert_eq!(
        stdout(&["scores", &f, "--solution", "ab:1/2,1"]),
        "A 7\nB 21/2\nC 5\n"
    );
}

#[test]
fn single_class_scores_zero() {
    let out = stdout(&["scores", &file("single_class.json"), "-s", "b1"]);
    assert_eq!(out, "a 0\nb 0\nc 0\n");
    assert_eq!(
        stdout(&["rank", &file("single_class.json"), "-s", "b3"]),
        "a = b = c\n"
    );
}

#[test]
fn rank_on_example_and_discussion() {
    let f = file("example1.json");
    assert_eq!(stdout(&["rank", &f, "-s", "bi"]), "A = B > C\n");
    assert_eq!(stdout(&["rank", &f, "-s", "b3"]), "A > B > C\n");
    assert_eq!(stdout(&["rank", &f, "-s", "b1"]), "B > A > C\n");
    let d = file("discussion.json");
    assert_eq!(stdout(&["rank", &d, "-s", "b1"]), "2 > 3 > 1\n");
    assert_eq!(stdout(&["rank", &d, "-s", "ab:5,4"]), "3 > 2 > 1\n");
    assert_eq!(stdout(&["rank", &d, "-s", "ab:3,1"]), "1 > 3 > 2\n");
}

#[test]
fn intransitive_rank_prints_matrix_and_triple() {
    let out = stdout(&["rank", &file("buddies.json"), "-s", "b1-colon-const"]);
    assert_eq!(
        out,
        "  a b c\na = = =\nb = = <\nc = > =\nintransitive: b R a, a R c, not b R c\n"
    );
}

#[test]
fn compare_all_lists_every_solution() {
    let out = stdout(&["compare", &file("example1.json"), "A", "B", "--all"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "b1: A < B");
    assert_eq!(lines[2], "b3: A > B");
    assert_eq!(lines[3], "bi: A = B");
    assert_eq!(
        stdout(&["compare", &file("example1.json"), "B", "C", "-s", "nwl"]),
        "nwl: B > C\n"
    );
}

#[test]
fn banzhaf_agrees_for_every_type() {
    let f = file("example1.json");
    let t1 = stdout(&["banzhaf", &f, "--t", "1"]);
    assert_eq!(
        t1,
        "A 1/2\nB 3/2\nC -1/2\nranking: B > A > C\nagreement: yes\n"
    );
    for t in ["2", "3"] {
        assert!(stdout(&["banzhaf", &f, "--t", t]).ends_with("agreement: yes\n"));
    }
}

#[test]
fn banzhaf_cap_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_coalrank"))
        .args(["banzhaf", &file("example1.json"), "--t", "1"])
        .env("COALRANK_MAX_UNIVERSE", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn oracle_verify_outputs() {
    assert_eq!(
        stdout(&["oracle-verify", &file("linear_yx.json")]),
        "x: formula=1 oracle=1 ok\ny: formula=0 oracle=0 ok\n"
    );
    assert_eq!(
        run(&["oracle-verify", &file("example1.json")])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn parse_errors_carry_position() {
    let out = run(&["scores", &file("broken.json"), "-s", "b1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4, column 23"), "{err}");
}

#[test]
fn bad_arguments_exit_two() {
    let f = file("example1.json");
    assert_eq!(run(&["scores", &f, "-s", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["scores", &f, "-s", "nwl"]).status.code(), Some(2));
    assert_eq!(run(&["fuzz", "b1", "bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["fuzz", "b1", "econ", "--max-classes", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["compare", &f, "A", "Z", "--all"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["banzhaf", &f, "--t", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["scores", "/nonexistent.json", "-s", "b1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn fuzz_expectations_drive_exit_codes() {
    let pass = run(&[
        "fuzz",
        "b1",
        "econ",
        "--seed",
        "7",
        "--iters",
        "10000",
        "--expect-pass",
    ]);
    assert_eq!(pass.status.code(), Some(0));
    assert!(String::from_utf8(pass.stdout)
        .unwrap()
        .contains("failed: 0\n"));
    let args = ["fuzz", "b2", "econ", "--seed", "7", "--iters", "10000"];
    assert_eq!(
        run(&[&args[..], &["--expect-pass"]].concat()).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["fuzz", "b1", "econ", "--iters", "200", "--expect-fail"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn fuzz_witness_replays() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let path_str = path.to_str().unwrap();
    let out = stdout(&[
        "fuzz",
        "b2",
        "econ",
        "--seed",
        "7",
        "--iters",
        "10000",
        "--expect-fail",
        "--witness-out",
        path_str,
    ]);
    let json = std::fs::read_to_string(&path).unwrap();
    assert!(out.contains(&format!("witness: {}", json.trim_end())));
    let replay = stdout(&["replay", path_str]);
    assert!(
        replay.starts_with("solution: b2\naxiom: econ\n"),
        "{replay}"
    );
    assert!(replay.contains("verdict: fail\n"));
}

#[test]
fn replay_of_passing_witness_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pass.json");
    let witness = r#"{"format_version":1,"solution":"b1","instance":{"axiom":"cu","ranking":{"format_version":1,"classes_best_to_worst":[[{"members":["x"]}],[{"members":["y"]}]]},"x":"x","y":"y"}}"#;
    std::fs::write(&path, witness).unwrap();
    let out = run(&["replay", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .ends_with("verdict: pass\n"));
}

#[test]
fn sequential_and_parallel_fuzz_print_the_same_bytes() {
    let args = ["fuzz", "b1-colon", "cu", "--seed", "7", "--iters", "3000"];
    assert_eq!(
        stdout(&args),
        stdout(&[&args[..], &["--sequential"]].concat())
    );
}

#[test]
fn suite_is_green() {
    let text = stdout(&["suite"]);
    assert!(text.ends_with("12/12 green\n"));
    let records = stdout(&["suite", "--format", "records"]);
    assert_eq!(records.lines().count(), 12);
    assert!(records
        .lines()
        .all(|l| l.split(' ').count() == 4 && l.split(' ').nth(1) == Some("green")));
}

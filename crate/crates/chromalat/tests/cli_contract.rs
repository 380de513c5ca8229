//! Contract tests for the binary: exit codes, output stability, DOT and
//! JSON shapes, and input plumbing.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use chromatic_monoid::enumerate_q;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chromalat"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn enum_prints_the_header_and_canonical_listing() {
    let o = run(&["--n", "3", "enum"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("|Q| = 20"));
    assert_eq!(text.lines().count(), 21);

    let o = run(&["--n", "1", "enum"]);
    assert_eq!(stdout(&o).lines().next(), Some("|Q| = 3"));
}

#[test]
fn exit_codes_separate_errors_from_negative_answers() {
    // parse error: 2
    let o = run(&["eval", "v{0,9}"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("out of range"));

    // unknown name outside the catalogue height: 2
    let o = run(&["--n", "4", "eval", "w1"]);
    assert_eq!(o.status.code(), Some(2));

    // negative domain answer: 3
    let o = run(&["realize", "w1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).trim(), "not realizable");

    // positive answer: 0, with a witness that re-evaluates
    let o = run(&["realize", "w0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().starts_with("T("));

    // enumeration over the cap: 2
    let o = run(&["--n", "6", "enum"]);
    assert_eq!(o.status.code(), Some(2));

    // unknown property id: 2, and the message lists the known ids
    let o = run(&["check", "frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sg-cofinal"));

    // clap-level argument errors: 2
    let o = run(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_is_byte_stable_across_runs() {
    for args in [
        &["--json", "--n", "3", "enum", "--names"][..],
        &["--json", "--n", "4", "eval", "v{0,1,3}*v{0,2,3}"][..],
        &["--json", "--n", "4", "closure", "T({0,1,3},{0,2,3})"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert!(first.status.success(), "{}", stderr(&first));
        assert_eq!(
            stdout(&first),
            stdout(&second),
            "output of {args:?} varies between runs"
        );
    }
}

#[test]
fn dot_renderings_have_one_node_per_element() {
    let o = run(&["--n", "3", "enum", "--dot"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("label=").count(), 20);

    let o = run(&["hasse", "w1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("label=").count(), 3);
}

#[test]
fn every_canonical_rendering_parses_back_to_itself() {
    for n in 0..=3u8 {
        for u in enumerate_q(n).unwrap() {
            let o = run(&["--n", &n.to_string(), "eval", &u.render()]);
            assert!(o.status.success(), "{}: {}", u.render(), stderr(&o));
            assert_eq!(stdout(&o).trim(), u.render());
        }
    }
}

#[test]
fn closure_lists_generator_words() {
    let o = run(&["--n", "4", "closure", "T({0,1,3},{0,2,3})"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("|closure| = 3"));
    assert!(text.contains("(identity)"));
    assert!(text.contains("g0*g0"));
}

#[test]
fn kappa_prints_the_level_support() {
    let o = run(&["--n", "4", "kappa", "v{0,1,3}*v{0,2,3}"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "{0,3}");
}

#[test]
fn poset_commands_accept_stdin_files_and_inline_json() {
    let two_antichain = r#"{"labels":["x","y"],"pairs":[]}"#;

    // inline
    let o = run(&["poset", "pi0", two_antichain]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2 connected components"));

    // stdin
    let mut child = binary()
        .args(["poset", "pi0", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(two_antichain.as_bytes())
        .expect("stdin accepts input");
    let o = child.wait_with_output().expect("binary finishes");
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2 connected components"));

    // file
    let path = std::env::temp_dir().join("chromalat-contract-antichain.json");
    std::fs::write(&path, two_antichain).expect("temp file writes");
    let o = run(&["poset", "pi0", path.to_str().expect("utf-8 path")]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2 connected components"));
    let _ = std::fs::remove_file(&path);

    // malformed input: 2
    let o = run(&["poset", "pi0", "{\"labels\":[\"x\"]}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn core_and_cofinality_answers_follow_the_exit_contract() {
    let chain = r#"{"labels":["a","b","c"],"pairs":[[0,1],[1,2]]}"#;
    let o = run(&["poset", "core", chain]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("core keeps 1 of 3 points"));

    let two_antichain = r#"{"labels":["x","y"],"pairs":[]}"#;
    let o = run(&["poset", "core", two_antichain]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("not strongly contractible"));

    let point = r#"{"labels":["pt"],"pairs":[]}"#;
    let bottom = r#"{"assignment":[0],"cod":{"labels":["a","b","c"],"pairs":[[0,1],[1,2]]}}"#;
    let o = run(&["poset", "cofinal", point, bottom]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict: cofinal"));

    let top = r#"{"assignment":[2],"cod":{"labels":["a","b","c"],"pairs":[[0,1],[1,2]]}}"#;
    let o = run(&["poset", "cofinal", point, top]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["poset", "final", point, top]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict: final"));
}

#[test]
fn subdivide_reports_chain_counts_by_dimension() {
    let chain = r#"{"labels":["a","b","c"],"pairs":[[0,1],[1,2]]}"#;
    let o = run(&["poset", "subdivide", chain]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("7 chains over 3 points"));
    assert!(text.contains("dimension 2: 1"));
}

#[test]
fn budget_variable_is_honoured_and_validated() {
    let o = binary()
        .env("CHROMALAT_BUDGET", "2")
        .args(["--n", "4", "closure", "T({0,1,3},{0,2,3})"])
        .output()
        .expect("binary runs");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CHROMALAT_BUDGET"));

    let o = binary()
        .env("CHROMALAT_BUDGET", "a lot")
        .args(["--n", "4", "closure", "T({0,1,3})"])
        .output()
        .expect("binary runs");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CHROMALAT_BUDGET"));
}

#[test]
fn check_honours_samples_and_seed() {
    let o = run(&["--n", "4", "check", "assoc", "--samples", "40", "--seed", "9"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("40 cases"));

    // the exhaustive default is refused where the space is too large
    let o = run(&["--n", "4", "check", "assoc"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--samples"));

    // conflicting sweep flags are a usage error
    let o = run(&["check", "assoc", "--samples", "5", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_lists_every_record_with_its_anchor() {
    let o = run(&["--json", "verify-paper"]);
    assert!(o.status.success());
    let records: serde_json::Value =
        serde_json::from_str(&stdout(&o)).expect("verification output is JSON");
    let records = records.as_array().expect("a JSON array");
    assert!(records.len() >= 12);
    for r in records {
        assert_eq!(r["status"], "pass", "{r}");
        assert!(r["cases"].as_u64().expect("case count") > 0);
        assert!(r["anchor"].as_str().expect("anchor").len() > 3);
    }
    assert!(records
        .iter()
        .any(|r| r["anchor"] == "Example eg-not-thread"));
}

use std::process::{Command, Output};

fn loopless(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopless"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_multiperm_full() {
    let o = loopless(&["gen", "multiperm", "2", "2", "1", "--format", "full"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 30);
    assert_eq!(lines[0], "1 1 2 2 3");
    assert_eq!(lines[29], "3 2 2 1 1");
}

#[test]
fn gen_defaults_to_full() {
    let a = stdout(&loopless(&["gen", "comb", "4", "6"]));
    let b = stdout(&loopless(&["gen", "comb", "4", "6", "--format", "full"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 15);
    assert_eq!(a.lines().next(), Some("1 2 3 4"));
}

#[test]
fn gen_count() {
    let o = loopless(&["gen", "multiperm", "5", "--format", "count"]);
    assert_eq!(stdout(&o), "1\n");
    let o = loopless(&[
        "gen",
        "multiperm",
        "3",
        "3",
        "3",
        "3",
        "3",
        "--format",
        "count",
    ]);
    assert_eq!(stdout(&o), "168168000\n");
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "parking", "4", "--format", "delta"];
    assert_eq!(loopless(&args).stdout, loopless(&args).stdout);
}

#[test]
fn count_overflow_is_refused() {
    let o = loopless(&["gen", "perm", "21", "--format", "count"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("refused"));
}

#[test]
fn verify_examples() {
    for (args, objects) in [
        (&["verify", "multiperm", "2", "2", "1"][..], "30 objects"),
        (&["verify", "parking", "3"][..], "16 objects"),
        (&["verify", "comb", "4", "6"][..], "15 objects"),
    ] {
        let o = loopless(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        assert!(
            text.starts_with("pass:") && text.contains(objects),
            "{text}"
        );
    }
    let text = stdout(&loopless(&["verify", "comb", "4", "6"]));
    assert!(text.contains("block move") && text.contains("all 14 transitions"));
}

#[test]
fn verify_guard_exits_2() {
    let o = loopless(&["verify", "perm", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["gen"][..],
        &["gen", "perm"],
        &["gen", "widget", "3"],
        &["gen", "comb", "5"],
        &["gen", "comb", "5", "4"],
        &["gen", "multiperm", "2", "0"],
        &["gen", "perm", "3", "--format", "xml"],
        &["bench", "perm", "3", "--reps", "0"],
    ] {
        let o = loopless(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn bench_reports() {
    let o = loopless(&["bench", "perm", "8", "--reps", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("objects 40320 per rep"), "{text}");
    let o = loopless(&["bench", "multiperm", "2", "2", "1"]);
    assert!(stdout(&o).contains("objects 30 per rep"));
}

#[test]
fn failure_maps_to_exit_1() {
    assert_eq!(loopless_cli::CliError::Failed(String::new()).exit_code(), 1);
    assert_eq!(
        loopless_cli::CliError::Refused(String::new()).exit_code(),
        2
    );
}

#[test]
fn help_exits_0() {
    let o = loopless(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

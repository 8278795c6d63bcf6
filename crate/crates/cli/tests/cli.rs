use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(name)
}

fn fogcloud(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fogcloud")).args(args).output().expect("binary runs")
}

fn path_str(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn repeated_sweeps_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let src = scenario("fig4.scn");
    let mut outputs = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("s{k}.csv"));
        let res = fogcloud(&[
            "sweep", "--scenario", path_str(&src), "--param", "fog-price", "--from", "0.001", "--to", "0.004",
            "--steps", "4", "--reps", "2", "--out", path_str(&out),
        ]);
        assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
        outputs.push(fs::read(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs.remove(0)).unwrap();
    assert_eq!(text.lines().count(), 1 + 4 * 2 * 3);
    assert!(text.starts_with("scenario_id,solver,seed,"));
}

#[test]
fn brute_force_over_cap_is_a_row_not_a_failure() {
    let res = fogcloud(&["run", "--scenario", path_str(&scenario("chain40.scn")), "--solver", "brute"]);
    assert_eq!(res.status.code(), Some(0));
    let text = String::from_utf8(res.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("chain40,brute,"), "{row}");
    assert!(row.ends_with(",too_large"), "{row}");
}

#[test]
fn run_writes_table_and_schedule() {
    let dir = tempfile::tempdir().unwrap();
    let (out, sched) = (dir.path().join("r.csv"), dir.path().join("s.csv"));
    let res = fogcloud(&[
        "run", "--scenario", path_str(&scenario("fig4.scn")), "--solver", "greedy", "--reps", "3",
        "--out", path_str(&out), "--schedule", path_str(&sched), "--verify",
    ]);
    assert!(res.status.success());
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 4);
    let schedule = fs::read_to_string(&sched).unwrap();
    assert_eq!(schedule.lines().count(), 1 + 9 + 1);
    assert!(schedule.lines().last().unwrap().starts_with("total,"));
}

#[test]
fn compare_prints_one_line_per_solver() {
    let res = fogcloud(&["compare", "--scenario", path_str(&scenario("fig4.scn")), "--reps", "2"]);
    assert!(res.status.success());
    let text = String::from_utf8(res.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "solver,feasible_runs,mean_makespan,gap");
    assert_eq!(lines.len(), 4);
    let brute = lines.iter().find(|l| l.starts_with("brute,")).unwrap();
    assert!(brute.ends_with(",0.0000000000000000e0"), "{brute}");
}

#[test]
fn validate_exit_codes() {
    let ok = fogcloud(&["validate", "--scenario", path_str(&scenario("defaults.scn"))]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("ok"));

    let dir = tempfile::tempdir().unwrap();
    let cyclic = dir.path().join("cyclic.scn");
    let text = fs::read_to_string(scenario("fig4.scn")).unwrap();
    fs::write(&cyclic, text.replacen("edges = [", "edges = [[9, 1], ", 1)).unwrap();
    let bad = fogcloud(&["validate", "--scenario", path_str(&cyclic)]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("cycle"));

    let missing = fogcloud(&["validate", "--scenario", path_str(&dir.path().join("nope.scn"))]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn bad_sweep_parameter_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let res = fogcloud(&[
        "sweep", "--scenario", path_str(&scenario("fig4.scn")), "--param", "temperature", "--from", "0", "--to", "1",
        "--steps", "2", "--out", path_str(&dir.path().join("x.csv")),
    ]);
    assert!(!res.status.success());
}

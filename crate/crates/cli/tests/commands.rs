use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hypercut::{Hypergraph, KCut};
use serde_json::Value;

fn hypercut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercut")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn report(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn solve_single_edge_reports_seven_ninths() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "one.txt", "# one triple\n3 3\n0 1 2\n");
    let rep = dir.path().join("r.json");
    let out = hypercut(&["solve", "--file", &file, "--k", "3", "--seed", "4", "--report", rep.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("cut_value: 1"));
    let json = report(&rep);
    assert_eq!(json["cut_value"], 1);
    assert_eq!(json["surplus"], "7/9");
    assert_eq!(json["coefficient"], "2/9");
    assert_eq!(json["route"], "solve_3cut_auto");
}

#[test]
fn report_is_recomputable_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let gen =
        hypercut(&["gen", "--kind", "random3", "--n", "14", "--p", "1/8", "--seed", "3", "--out", g.to_str().unwrap()]);
    assert!(gen.status.success(), "{}", stderr(&gen));

    let run = |name: &str| {
        let rep = dir.path().join(name);
        let out = hypercut(&[
            "solve",
            "--file",
            g.to_str().unwrap(),
            "--k",
            "3",
            "--seed",
            "11",
            "--report",
            rep.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
        report(&rep)
    };
    let (mut a, mut b) = (run("a.json"), run("b.json"));
    assert_eq!(a["report_digest"], b["report_digest"]);
    a.as_object_mut().unwrap().remove("wall_time_ms");
    b.as_object_mut().unwrap().remove("wall_time_ms");
    assert_eq!(a, b);

    let h = Hypergraph::parse(&fs::read_to_string(&g).unwrap()).unwrap();
    let assignment: Vec<usize> = serde_json::from_value(a["assignment"].clone()).unwrap();
    let cut = KCut::evaluate(&h, assignment, 3).unwrap();
    assert_eq!(a["cut_value"], cut.cut_value());
    let s = cut.surplus();
    let expected = if *s.denom() == 1 { s.numer().to_string() } else { format!("{}/{}", s.numer(), s.denom()) };
    assert_eq!(a["surplus"], expected);
}

#[test]
fn threads_do_not_change_the_answer() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    hypercut(&["gen", "--kind", "random3", "--n", "18", "--p", "0.1", "--seed", "6", "--out", g.to_str().unwrap()]);
    let run = |threads: &str| {
        let out = hypercut(&["solve", "--file", g.to_str().unwrap(), "--k", "3", "--threads", threads]);
        assert!(out.status.success(), "{}", stderr(&out));
        stdout(&out)
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn malformed_line_is_an_input_error_naming_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.txt", "3 4\n0 1 2\n0 1\n");
    let out = hypercut(&["solve", "--file", &file, "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn graph_two_cut_uses_spectral_rounding() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k5.txt", "2 5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let rep = dir.path().join("r.json");
    let out = hypercut(&["solve", "--file", &file, "--k", "2", "--trials", "50", "--report", rep.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json = report(&rep);
    assert_eq!(json["route"], "best_bipartition");
    assert_eq!(json["cut_value"], 6);
    assert_eq!(json["surplus"], "1");
}

#[test]
fn gen_complete_then_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c.txt");
    assert!(hypercut(&["gen", "--kind", "complete", "--r", "3", "--n", "5", "--out", g.to_str().unwrap()])
        .status
        .success());
    let rep = dir.path().join("o.json");
    let out = hypercut(&["oracle", "--file", g.to_str().unwrap(), "--k", "3", "--report", rep.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json = report(&rep);
    assert_eq!(json["cut_value"], 4);
    assert_eq!(json["surplus"], "16/9");

    let via_solve = hypercut(&["solve", "--file", g.to_str().unwrap(), "--k", "3", "--oracle"]);
    assert!(stdout(&via_solve).contains("cut_value: 4"));
}

#[test]
fn oracle_capacity_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("big.txt");
    hypercut(&["gen", "--kind", "random3", "--n", "30", "--p", "0.01", "--out", g.to_str().unwrap()]);
    let out = hypercut(&["oracle", "--file", g.to_str().unwrap(), "--k", "3"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}

#[test]
fn gen_linear3_has_codegree_one_and_round_trips() {
    let out = hypercut(&["gen", "--kind", "linear3", "--n", "9", "--m", "12", "--seed", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let h = Hypergraph::parse(&text).unwrap();
    assert!(h.edge_count() > 0);
    assert_eq!(h.degree_profile().max_codegree, 1);
    assert_eq!(h.to_text(), text);
}

#[test]
fn gen_is_deterministic_and_validates() {
    let a = hypercut(&["gen", "--kind", "random3", "--n", "12", "--p", "0.2", "--seed", "5"]);
    let b = hypercut(&["gen", "--kind", "random3", "--n", "12", "--p", "0.2", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(hypercut(&["gen", "--kind", "random3", "--n", "12"]).status.code(), Some(2));
    assert_eq!(hypercut(&["gen", "--kind", "fano", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn concentration_experiment_emits_rows_and_summary() {
    let out =
        hypercut(&["experiment", "--kind", "concentration", "--n", "40", "--p", "1/3", "--reps", "100", "--seed", "7"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("rep,seed,n,m,p,"));
    assert_eq!(lines.count(), 100);
    assert!(stderr(&out).starts_with("pass_rate "));
}

#[test]
fn scaling_experiment_small() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    let out = hypercut(&[
        "experiment",
        "--kind",
        "scaling",
        "--sizes",
        "15,30",
        "--reps",
        "2",
        "--rounds",
        "4",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 5);
    assert!(stderr(&out).contains("loglog_slope"));
}

#[test]
fn missing_file_is_an_input_error() {
    let out = hypercut(&["solve", "--file", "/nonexistent/h.txt", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

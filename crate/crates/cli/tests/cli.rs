use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const TWO_SETS: &str = "MESC 1\n4 2\n1 2 3\n3 4\n";

fn mesc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mesc"))
        .args(args)
        .output()
        .expect("binary runs")
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

#[test]
fn solve_exact_golden() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ex.mesc", TWO_SETS);
    let o = mesc(&["solve", "--input", &input, "--algorithm", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "algorithm: exact\nn: 4\nm: 2\nf: 1.2500000\ncover: 1 1 1 2\nclass_sizes: 3 1\n\
         entropy: 0.8112781\ncertified: true\nnodes: 6\n"
    );
}

#[test]
fn solve_greedy_and_biased() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ex.mesc", TWO_SETS);
    let o = mesc(&["solve", "--input", &input, "--algorithm", "greedy"]);
    assert!(stdout(&o).contains("cover: 1 1 2 2\n"));
    assert!(stdout(&o).contains("entropy: 1.0000000\n"));
    let o = mesc(&["solve", "--input", &input, "--algorithm", "biased"]);
    assert!(stdout(&o).contains("entropy: 0.8112781\n"));
}

#[test]
fn solve_single_set_has_zero_entropy() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "one.mesc", "MESC 1\n3 1\n1 2 3\n");
    let o = mesc(&[
        "solve",
        "--input",
        &input,
        "--algorithm",
        "biased-greedy",
        "--delta",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("entropy: 0.0000000\n"));
}

#[test]
fn solve_writes_csv_row() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ex.mesc", TWO_SETS);
    let csv = dir.path().join("row.csv");
    let o = mesc(&[
        "solve",
        "--input",
        &input,
        "--algorithm",
        "biased-greedy",
        "--delta",
        "0.5",
        "--output",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("instance_id,n,m,f,delta,algorithm,ent_alg,ent_opt,rhs,slack,holds,seed")
    );
    assert_eq!(
        lines.next(),
        Some("ex,4,2,1.2500000,0.5000000,biased-greedy,1.0000000,,,,,")
    );
}

#[test]
fn invalid_delta_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ex.mesc", TWO_SETS);
    let o = mesc(&[
        "solve",
        "--input",
        &input,
        "--algorithm",
        "biased-greedy",
        "--delta",
        "1.5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: kind=invalid-delta message="));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.mesc", "MESC 1\n3 1\n1 2\n");
    let o = mesc(&["solve", "--input", &input, "--algorithm", "greedy"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: kind=invalid-system"));
    let o = mesc(&[
        "solve",
        "--input",
        "/nonexistent/x.mesc",
        "--algorithm",
        "greedy",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: kind=io"));
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ex.mesc", TWO_SETS);
    let o = mesc(&[
        "solve",
        "--input",
        &input,
        "--algorithm",
        "exact",
        "--budget",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error: kind=budget-exhausted"));
}

#[test]
fn cap_exceeded_exits_3() {
    let o = mesc(&["color", "--graph", "paper-fig1", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error: kind=cap-exceeded"));
}

#[test]
fn certify_fixture_golden() {
    let o = mesc(&["certify", "--input", "paper-fig1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines[5],
        "paper-fig1,8,4,1.3750000,1.0000000,biased,1.9056391,1.5612781,2.0207097,0.1150707,true,"
    );
    assert!(lines[1..].iter().all(|l| l.contains(",true,")));
}

#[test]
fn certify_budget_flags_rows() {
    let o = mesc(&[
        "certify",
        "--input",
        "paper-fig1",
        "--budget",
        "3",
        "--delta-grid",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out
        .lines()
        .nth(1)
        .unwrap()
        .ends_with(",biased,1.9056391,,,,,"));
}

#[test]
fn color_fixture_golden() {
    let o = mesc(&[
        "color",
        "--graph",
        "paper-fig1",
        "--heuristics",
        "off",
        "--f-alpha3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "graph: paper-fig1\nn: 8\nedges: 18\nmax_degree: 6\nmaximal_independent_sets: 4\n\
         complement_components: isolated=0 edges=1 triangles=3\nf: 1.3750000\n\
         delta: 1.0000000\nheuristics: off\ncolors: 4\n\
         classes: {1,2,3} {4,6} {5} {7,8}\nclass_sizes: 3 2 1 2\nentropy: 1.9056391\n\
         ent_opt: 1.5612781\noptimum_certified: true\nbound_rhs: 2.0207097\n\
         degree_rhs: 3.4357472\n"
    );
    let o = mesc(&["color", "--graph", "paper-fig1"]);
    assert!(stdout(&o).contains("entropy: 1.5612781\n"));
}

#[test]
fn color_edgeless_and_alpha_above_3() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "empty.graph", "GRAPH 1\n5 0\n");
    let o = mesc(&["color", "--graph", &g]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("colors: 1\n"));
    assert!(stdout(&o).contains("entropy: 0.0000000\n"));
    let o = mesc(&["color", "--graph", &g, "--f-alpha3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: kind=alpha-above-3"));
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.mesc");
    let b = dir.path().join("b.mesc");
    for p in [&a, &b] {
        let o = mesc(&[
            "gen",
            "--n",
            "9",
            "--m",
            "5",
            "--f",
            "2.5",
            "--seed",
            "7",
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let o = mesc(&[
        "solve",
        "--input",
        a.to_str().unwrap(),
        "--algorithm",
        "exact",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let g1 = stdout(&mesc(&["gen", "--n", "7", "--p", "0.4", "--seed", "3"]));
    let g2 = stdout(&mesc(&["gen", "--n", "7", "--p", "0.4", "--seed", "3"]));
    assert_eq!(g1, g2);
    let path = write(dir.path(), "g.graph", &g1);
    assert_eq!(mesc(&["color", "--graph", &path]).status.code(), Some(0));
}

#[test]
fn gen_emit_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("fig.graph");
    let o = mesc(&[
        "gen",
        "--emit",
        "paper-fig1",
        "--output",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = mesc(&["color", "--graph", p.to_str().unwrap()]);
    assert!(stdout(&o).contains("f: 1.3750000\n"));
}

#[test]
fn gen_rejects_mixed_flags() {
    let o = mesc(&["gen", "--n", "5", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = mesc(&["gen", "--n", "5", "--m", "3", "--f", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_identical_sequential_and_parallel() {
    let args = [
        "sweep", "--n", "8", "--m", "5", "--f-grid", "1.5,2.5", "--seeds", "4", "--exact",
    ];
    let par = mesc(&args);
    let mut seq_args = args.to_vec();
    seq_args.push("--sequential");
    let seq = mesc(&seq_args);
    assert_eq!(par.status.code(), Some(0));
    assert_eq!(stdout(&par), stdout(&seq));
    let out = stdout(&par);
    assert_eq!(out.lines().count(), 1 + 2 * 4 * 5);
    assert!(out.lines().skip(1).all(|l| l.contains(",true,")));
}

#[test]
fn phase_transition_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("phase.csv");
    let svg = dir.path().join("phase.svg");
    let o = mesc(&[
        "phase-transition",
        "--f-grid",
        "2.0,2.5,3.0,3.5",
        "--seeds",
        "4",
        "--output",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(csv).unwrap();
    let best: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(8).unwrap())
        .collect();
    assert_eq!(best, ["1", "1", "0", "0"]);
    let first = text.lines().nth(1).unwrap();
    assert_eq!(first.split(',').nth(6), Some("1.0000000"));
    assert!(fs::read_to_string(svg).unwrap().starts_with("<svg"));
}

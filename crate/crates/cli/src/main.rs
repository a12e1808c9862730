use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mesc::coloring::{
    apply_heuristics, biased_coloring, degree_corollary_bound, f_alpha3, min_entropy_coloring,
    to_set_cover, Graph, DEFAULT_CAP,
};
use mesc::experiment::{
    algorithm_tag, certify_grid, fmt_real, parse_grid, parse_seeds, phase_svg,
    run_phase_transition, run_sweep, write_phase_csv, write_sweep_csv, PhaseConfig, SweepConfig,
    SweepRecord, SWEEP_HEADER,
};
use mesc::generators::{
    example_graph, random_graph, random_set_system, GenSpec, EXAMPLE_FIXTURE_ID,
};
use mesc::solvers::{
    biased, exact_min_entropy_cover, greedy, theorem_bound, BiasedGreedy, DEFAULT_BUDGET,
};
use mesc::{Error, Execution, SetSystem};

#[derive(Parser)]
#[command(
    name = "mesc",
    version,
    about = "Minimum entropy set cover experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print the cover.
    Solve(SolveArgs),
    /// Bound certificates for one instance over a delta grid (CSV).
    Certify(CertifyArgs),
    /// BiasedGreedy over random instances for every (f, seed, delta) cell (CSV).
    Sweep(SweepArgs),
    /// Greedy vs Biased across average frequency (CSV, optional SVG).
    PhaseTransition(PhaseArgs),
    /// Color a graph through its maximal independent sets.
    Color(ColorArgs),
    /// Write a fixture, a random instance or a random graph.
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Greedy,
    Biased,
    BiasedGreedy,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file, or `paper-fig1` for the example graph's reduction.
    #[arg(long)]
    input: String,
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    /// Required for `biased-greedy`.
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Also write a one-row CSV.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    input: String,
    #[arg(long, default_value = "0:1:0.25")]
    delta_grid: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// CSV path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    f_grid: String,
    /// `N` (seeds 0..N), `a..b`, `a..=b` or a comma list.
    #[arg(long, default_value = "10")]
    seeds: String,
    #[arg(long, default_value = "0:1:0.25")]
    delta_grid: String,
    /// Solve each instance exactly and fill the certificate columns.
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Disable data parallelism.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct PhaseArgs {
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    m: usize,
    #[arg(long, default_value = "1.5:4.0:0.25")]
    f_grid: String,
    #[arg(long, default_value = "20")]
    seeds: String,
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct ColorArgs {
    /// Graph file, or `paper-fig1`.
    #[arg(long)]
    graph: String,
    #[arg(long, default_value_t = 1.0)]
    delta: f64,
    #[arg(long, value_enum, default_value = "on")]
    heuristics: Toggle,
    /// Compute f from components of the complement (requires independence
    /// number at most 3).
    #[arg(long)]
    f_alpha3: bool,
    /// Maximum number of maximal independent sets to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Write a named fixture instead of a random object.
    #[arg(long, value_parser = [EXAMPLE_FIXTURE_ID], conflicts_with_all = ["n", "m", "f", "p"])]
    emit: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Number of sets (instance).
    #[arg(long, conflicts_with = "p")]
    m: Option<usize>,
    /// Target average frequency (instance).
    #[arg(long, conflicts_with = "p")]
    f: Option<f64>,
    /// Edge probability (graph).
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Solve(a) => solve(a, &mut out),
        Command::Certify(a) => certify(a, &mut out),
        Command::Sweep(a) => sweep(a, &mut out),
        Command::PhaseTransition(a) => phase(a, &mut out),
        Command::Color(a) => color(a, &mut out),
        Command::Gen(a) => gen(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let message = e.to_string().replace('\n', " ");
            eprintln!("error: kind={} message={}", e.kind(), message);
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
    }
}

type Res = mesc::Result<()>;

fn load_system(input: &str) -> mesc::Result<SetSystem> {
    if input == EXAMPLE_FIXTURE_ID {
        return to_set_cover(&example_graph(), DEFAULT_CAP);
    }
    SetSystem::parse(&fs::read_to_string(input).map_err(|e| io_error(input, e))?)
}

fn load_graph(input: &str) -> mesc::Result<Graph> {
    if input == EXAMPLE_FIXTURE_ID {
        return Ok(example_graph());
    }
    Graph::parse(&fs::read_to_string(input).map_err(|e| io_error(input, e))?)
}

fn io_error(path: impl AsRef<Path>, e: io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.as_ref().display()))
}

fn instance_id(input: &str) -> String {
    Path::new(input)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| input.to_string())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_file(path: &Path, bytes: &[u8]) -> Res {
    fs::write(path, bytes).map_err(|e| io_error(path, e))
}

/// Writes CSV bytes to `path`, or to stdout when no path is given.
fn emit(path: Option<&Path>, bytes: &[u8], out: &mut impl Write) -> Res {
    match path {
        Some(p) => write_file(p, bytes),
        None => out.write_all(bytes).map_err(Error::from),
    }
}

fn exec(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn solve(a: SolveArgs, out: &mut impl Write) -> Res {
    let system = load_system(&a.input)?;
    if a.algorithm != Algorithm::BiasedGreedy && a.delta.is_some() {
        return Err(Error::Domain(
            "--delta only applies to biased-greedy".into(),
        ));
    }
    let (cover, delta, certified) = match a.algorithm {
        Algorithm::Greedy => (greedy(&system)?.0, Some(0.0), None),
        Algorithm::Biased => (biased(&system)?.0, Some(1.0), None),
        Algorithm::BiasedGreedy => {
            let delta = a
                .delta
                .ok_or_else(|| Error::Domain("biased-greedy requires --delta".into()))?;
            (
                BiasedGreedy::new(delta).run(&system)?.cover,
                Some(delta),
                None,
            )
        }
        Algorithm::Exact => {
            let sol = exact_min_entropy_cover(&system, a.budget)?;
            (sol.cover, None, Some((sol.certified, sol.nodes)))
        }
    };
    let tag = match a.algorithm {
        Algorithm::Greedy => "greedy",
        Algorithm::Biased => "biased",
        Algorithm::BiasedGreedy => "biased-greedy",
        Algorithm::Exact => "exact",
    };
    writeln!(out, "algorithm: {tag}")?;
    if let Some(d) = delta {
        writeln!(out, "delta: {}", fmt_real(d))?;
    }
    writeln!(out, "n: {}", system.n())?;
    writeln!(out, "m: {}", system.m())?;
    writeln!(out, "f: {}", fmt_real(system.avg_frequency()))?;
    writeln!(out, "cover: {}", join(cover.assignment()))?;
    writeln!(out, "class_sizes: {}", join(cover.class_sizes()))?;
    writeln!(out, "entropy: {}", fmt_real(cover.entropy()))?;
    if let Some((cert, nodes)) = certified {
        writeln!(out, "certified: {cert}")?;
        writeln!(out, "nodes: {nodes}")?;
    }

    if let Some(path) = &a.output {
        let record = SweepRecord {
            instance_id: instance_id(&a.input),
            n: system.n(),
            m: system.m(),
            f: system.avg_frequency(),
            delta: delta.unwrap_or(0.0),
            algorithm: tag.to_string(),
            ent_alg: cover.entropy(),
            ent_opt: None,
            rhs: None,
            slack: None,
            holds: None,
            seed: None,
        };
        let mut row = record.to_row();
        if delta.is_none() {
            // the exact solver has no δ
            row[4].clear();
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(SWEEP_HEADER)?;
        w.write_record(&row)?;
        let buf = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        write_file(path, &buf)?;
    }
    match certified {
        Some((false, _)) => Err(Error::BudgetExhausted { budget: a.budget }),
        _ => Ok(()),
    }
}

fn certify(a: CertifyArgs, out: &mut impl Write) -> Res {
    let system = load_system(&a.input)?;
    let deltas = parse_grid(&a.delta_grid)?;
    let (rows, certified) = certify_grid(&system, &instance_id(&a.input), &deltas, a.budget, None)?;
    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, &rows)?;
    emit(a.output.as_deref(), &buf, out)?;
    if !certified {
        return Err(Error::BudgetExhausted { budget: a.budget });
    }
    Ok(())
}

fn sweep(a: SweepArgs, out: &mut impl Write) -> Res {
    let cfg = SweepConfig {
        n: a.n,
        m: a.m,
        f_grid: parse_grid(&a.f_grid)?,
        seeds: parse_seeds(&a.seeds)?,
        deltas: parse_grid(&a.delta_grid)?,
        exact: a.exact,
        budget: a.budget,
    };
    let rows = run_sweep(&cfg, exec(a.sequential))?;
    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, &rows)?;
    emit(a.output.as_deref(), &buf, out)?;
    if a.exact && rows.iter().any(|r| r.ent_opt.is_none()) {
        return Err(Error::BudgetExhausted { budget: a.budget });
    }
    Ok(())
}

fn phase(a: PhaseArgs, out: &mut impl Write) -> Res {
    let cfg = PhaseConfig {
        n: a.n,
        m: a.m,
        f_grid: parse_grid(&a.f_grid)?,
        seeds: parse_seeds(&a.seeds)?,
        exact: a.exact,
        budget: a.budget,
    };
    let points = run_phase_transition(&cfg, exec(a.sequential))?;
    let mut buf = Vec::new();
    write_phase_csv(&mut buf, &points)?;
    emit(a.output.as_deref(), &buf, out)?;
    if let Some(path) = &a.svg {
        write_file(path, phase_svg(&points).as_bytes())?;
    }
    if a.exact && points.iter().any(|p| !p.opt_certified) {
        return Err(Error::BudgetExhausted { budget: a.budget });
    }
    Ok(())
}

fn color(a: ColorArgs, out: &mut impl Write) -> Res {
    let g = load_graph(&a.graph)?;
    let system = to_set_cover(&g, a.cap)?;
    let alpha3 = if a.f_alpha3 {
        Some(f_alpha3(&g)?)
    } else {
        None
    };
    let f = alpha3.map_or_else(|| system.avg_frequency(), |s| s.f);

    let base = biased_coloring(&g, a.delta, a.cap)?;
    let coloring = match a.heuristics {
        Toggle::On => apply_heuristics(&g, &base),
        Toggle::Off => base,
    };
    let (opt, certified) = min_entropy_coloring(&g, a.cap, a.budget)?;
    let ent_opt = opt.entropy();
    let bound = theorem_bound(ent_opt, f, a.delta, g.n())?;
    let degree = degree_corollary_bound(&g, f, ent_opt);

    writeln!(out, "graph: {}", instance_id(&a.graph))?;
    writeln!(out, "n: {}", g.n())?;
    writeln!(out, "edges: {}", g.edge_count())?;
    writeln!(out, "max_degree: {}", g.max_degree())?;
    writeln!(out, "maximal_independent_sets: {}", system.m())?;
    if let Some(s) = alpha3 {
        writeln!(
            out,
            "complement_components: isolated={} edges={} triangles={}",
            s.isolated, s.lone_edges, s.triangles
        )?;
    }
    writeln!(out, "f: {}", fmt_real(f))?;
    writeln!(out, "delta: {}", fmt_real(a.delta))?;
    writeln!(
        out,
        "heuristics: {}",
        if a.heuristics == Toggle::On {
            "on"
        } else {
            "off"
        }
    )?;
    writeln!(out, "colors: {}", coloring.num_colors())?;
    let classes: Vec<String> = coloring
        .classes()
        .iter()
        .map(|c| {
            format!(
                "{{{}}}",
                c.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    writeln!(out, "classes: {}", classes.join(" "))?;
    writeln!(out, "class_sizes: {}", join(&coloring.class_sizes()))?;
    writeln!(out, "entropy: {}", fmt_real(coloring.entropy()))?;
    writeln!(out, "ent_opt: {}", fmt_real(ent_opt))?;
    writeln!(out, "optimum_certified: {certified}")?;
    writeln!(out, "bound_rhs: {}", fmt_real(bound.rhs))?;
    writeln!(
        out,
        "degree_rhs: {}{}",
        fmt_real(degree.rhs),
        if degree.below_optimum {
            " (below optimum)"
        } else {
            ""
        }
    )?;

    if let Some(path) = &a.output {
        let slack = bound.rhs - coloring.entropy();
        let record = SweepRecord {
            instance_id: instance_id(&a.graph),
            n: g.n(),
            m: system.m(),
            f,
            delta: a.delta,
            algorithm: algorithm_tag(a.delta).to_string(),
            ent_alg: coloring.entropy(),
            ent_opt: certified.then_some(ent_opt),
            rhs: certified.then_some(bound.rhs),
            slack: certified.then_some(slack),
            holds: certified.then_some(slack >= -mesc::entropy::IDENTITY_TOL),
            seed: None,
        };
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &[record])?;
        write_file(path, &buf)?;
    }
    if !certified {
        return Err(Error::BudgetExhausted { budget: a.budget });
    }
    Ok(())
}

fn gen(a: GenArgs, out: &mut impl Write) -> Res {
    let text = if a.emit.is_some() {
        example_graph().to_text()
    } else {
        let n =
            a.n.ok_or_else(|| Error::Domain("gen requires --emit or --n".into()))?;
        match (a.p, a.m, a.f) {
            (Some(p), None, None) => random_graph(n, p, a.seed)?.to_text(),
            (None, Some(m), Some(f)) => {
                let spec = GenSpec {
                    n,
                    m,
                    target_f: f,
                    seed: a.seed,
                };
                random_set_system(&spec)?.to_text()
            }
            _ => {
                return Err(Error::Domain(
                    "give --p for a graph or both --m and --f for an instance".into(),
                ))
            }
        }
    };
    match &a.output {
        Some(path) => write_file(path, text.as_bytes()),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

//! Batch experiments: certificate grids, δ sweeps over random instances and
//! the Biased/Greedy phase transition in `f`. Output is CSV (plus an
//! optional SVG chart for the phase transition).
//!
//! Rows are produced in a fixed order (grid point, then seed, then δ)
//! whatever the execution mode.

use std::f64::consts::LOG2_E;
use std::fmt::Write as _;
use std::io::Write;

use crate::entropy::IDENTITY_TOL;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::generators::{random_set_system, GenSpec};
use crate::solvers::{
    best_delta, biased, certify_against, exact_min_entropy_cover, greedy, BiasedGreedy,
};
use crate::system::SetSystem;

/// Column order of every sweep/certify CSV.
pub const SWEEP_HEADER: [&str; 12] = [
    "instance_id",
    "n",
    "m",
    "f",
    "delta",
    "algorithm",
    "ent_alg",
    "ent_opt",
    "rhs",
    "slack",
    "holds",
    "seed",
];

/// Formats a real with 7 digits after the decimal point; negative zero
/// prints as zero.
pub fn fmt_real(x: f64) -> String {
    let s = format!("{x:.7}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Parses `start:stop:step` (inclusive of `stop` within 1e-12), a comma
/// separated list, or a single value.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = |m: String| Error::Domain(format!("grid `{spec}`: {m}"));
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| bad(format!("bad number `{s}`")))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.len() {
        1 => spec.split(',').map(num).collect(),
        3 => {
            let (start, stop, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
            if step <= 0.0 {
                return Err(bad("step must be positive".into()));
            }
            if start > stop {
                return Err(bad("start exceeds stop".into()));
            }
            let mut out = Vec::new();
            for k in 0.. {
                let x = start + k as f64 * step;
                if x > stop + 1e-12 {
                    break;
                }
                out.push((x * 1e12).round() / 1e12);
            }
            Ok(out)
        }
        _ => Err(bad("expected start:stop:step or a comma list".into())),
    }
}

/// Parses `N` (seeds `0..N`), `a..b`, `a..=b` or a comma list.
pub fn parse_seeds(spec: &str) -> Result<Vec<u64>> {
    let bad = || Error::Domain(format!("bad seed list `{spec}`"));
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    if let Some((a, b)) = spec.split_once("..=") {
        return Ok((num(a)?..=num(b)?).collect());
    }
    if let Some((a, b)) = spec.split_once("..") {
        return Ok((num(a)?..num(b)?).collect());
    }
    if spec.contains(',') {
        return spec.split(',').map(num).collect();
    }
    Ok((0..num(spec)?).collect())
}

pub fn algorithm_tag(delta: f64) -> &'static str {
    if delta == 0.0 {
        "greedy"
    } else if delta == 1.0 {
        "biased"
    } else {
        "biased-greedy"
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub instance_id: String,
    pub n: usize,
    pub m: usize,
    pub f: f64,
    pub delta: f64,
    pub algorithm: String,
    pub ent_alg: f64,
    pub ent_opt: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub holds: Option<bool>,
    pub seed: Option<u64>,
}

impl SweepRecord {
    pub fn to_row(&self) -> Vec<String> {
        let opt = |x: Option<f64>| x.map(fmt_real).unwrap_or_default();
        vec![
            self.instance_id.clone(),
            self.n.to_string(),
            self.m.to_string(),
            fmt_real(self.f),
            fmt_real(self.delta),
            self.algorithm.clone(),
            fmt_real(self.ent_alg),
            opt(self.ent_opt),
            opt(self.rhs),
            opt(self.slack),
            self.holds.map(|h| h.to_string()).unwrap_or_default(),
            self.seed.map(|s| s.to_string()).unwrap_or_default(),
        ]
    }
}

pub fn write_sweep_csv<W: Write>(out: W, records: &[SweepRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in records {
        w.write_record(r.to_row())?;
    }
    w.flush()?;
    Ok(())
}

/// Certificates for one instance over a δ grid. The exact optimum is solved
/// once. Rows whose optimum is not certified (budget exhausted) leave
/// `ent_opt`, `rhs`, `slack` and `holds` empty; the flag reports whether all
/// rows are certified.
pub fn certify_grid(
    system: &SetSystem,
    instance_id: &str,
    deltas: &[f64],
    budget: u64,
    seed: Option<u64>,
) -> Result<(Vec<SweepRecord>, bool)> {
    let optimum = match exact_min_entropy_cover(system, budget) {
        Ok(sol) => Some(sol),
        Err(Error::BudgetExhausted { .. }) => None,
        Err(e) => return Err(e),
    };
    let certified = optimum.as_ref().is_some_and(|o| o.certified);
    let mut rows = Vec::with_capacity(deltas.len());
    for &delta in deltas {
        let mut row = SweepRecord {
            instance_id: instance_id.to_string(),
            n: system.n(),
            m: system.m(),
            f: system.avg_frequency(),
            delta,
            algorithm: algorithm_tag(delta).to_string(),
            ent_alg: 0.0,
            ent_opt: None,
            rhs: None,
            slack: None,
            holds: None,
            seed,
        };
        match optimum.as_ref().filter(|o| o.certified) {
            Some(opt) => {
                let c = certify_against(system, delta, opt)?.certificate;
                row.ent_alg = c.ent_alg;
                row.ent_opt = Some(c.ent_opt);
                row.rhs = Some(c.rhs);
                row.slack = Some(c.slack);
                row.holds = Some(c.holds);
            }
            None => {
                row.ent_alg = BiasedGreedy::new(delta).run(system)?.cover.entropy();
            }
        }
        rows.push(row);
    }
    Ok((rows, certified))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n: usize,
    pub m: usize,
    pub f_grid: Vec<f64>,
    pub seeds: Vec<u64>,
    pub deltas: Vec<f64>,
    /// Solve each instance exactly and fill the certificate columns.
    pub exact: bool,
    pub budget: u64,
}

/// BiasedGreedy(δ) over random instances for every (f, seed) cell.
pub fn run_sweep(cfg: &SweepConfig, exec: Execution) -> Result<Vec<SweepRecord>> {
    for &delta in &cfg.deltas {
        crate::solvers::check_delta(delta)?;
    }
    let cells: Vec<GenSpec> = cfg
        .f_grid
        .iter()
        .flat_map(|&f| {
            cfg.seeds.iter().map(move |&seed| GenSpec {
                n: cfg.n,
                m: cfg.m,
                target_f: f,
                seed,
            })
        })
        .collect();
    for spec in &cells {
        spec.validate()?;
    }
    let results = exec.map(&cells, |spec| -> Result<Vec<SweepRecord>> {
        let system = random_set_system(spec)?;
        let id = format!("f{}-s{}", fmt_real(spec.target_f), spec.seed);
        if cfg.exact {
            return Ok(certify_grid(&system, &id, &cfg.deltas, cfg.budget, Some(spec.seed))?.0);
        }
        cfg.deltas
            .iter()
            .map(|&delta| {
                let cover = BiasedGreedy::new(delta).run(&system)?.cover;
                Ok(SweepRecord {
                    instance_id: id.clone(),
                    n: system.n(),
                    m: system.m(),
                    f: system.avg_frequency(),
                    delta,
                    algorithm: algorithm_tag(delta).to_string(),
                    ent_alg: cover.entropy(),
                    ent_opt: None,
                    rhs: None,
                    slack: None,
                    holds: None,
                    seed: Some(spec.seed),
                })
            })
            .collect()
    });
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseConfig {
    pub n: usize,
    pub m: usize,
    pub f_grid: Vec<f64>,
    pub seeds: Vec<u64>,
    /// Also solve every instance exactly (mean optimum and excess columns).
    pub exact: bool,
    pub budget: u64,
}

/// Aggregates at one grid value of `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint {
    pub f: f64,
    pub mean_realized_f: f64,
    pub mean_greedy: f64,
    pub mean_biased: f64,
    /// Present when exact solving was requested and every solve completed.
    pub mean_opt: Option<f64>,
    /// `log₂ e`.
    pub guarantee_greedy: f64,
    /// `log₂ f`.
    pub guarantee_biased: f64,
    /// `log₂ f − log₂ e`.
    pub guarantee_diff: f64,
    pub best_delta: f64,
    pub tie: bool,
    pub samples: usize,
    pub opt_certified: bool,
    /// Largest `ent_alg − ent_opt − guarantee` seen for either algorithm;
    /// never positive when the guarantees hold.
    pub worst_excess_over_guarantee: Option<f64>,
}

pub const PHASE_HEADER: [&str; 13] = [
    "f",
    "realized_f",
    "mean_greedy",
    "mean_biased",
    "mean_opt",
    "guarantee_greedy",
    "guarantee_biased",
    "guarantee_diff",
    "best_delta",
    "tie",
    "samples",
    "opt_certified",
    "worst_excess",
];

struct Sample {
    realized_f: f64,
    greedy: f64,
    biased: f64,
    opt: Option<(f64, bool)>,
}

pub fn run_phase_transition(cfg: &PhaseConfig, exec: Execution) -> Result<Vec<PhasePoint>> {
    if cfg.seeds.is_empty() {
        return Err(Error::Domain("at least one seed is required".into()));
    }
    let cells: Vec<GenSpec> = cfg
        .f_grid
        .iter()
        .flat_map(|&f| {
            cfg.seeds.iter().map(move |&seed| GenSpec {
                n: cfg.n,
                m: cfg.m,
                target_f: f,
                seed,
            })
        })
        .collect();
    for spec in &cells {
        spec.validate()?;
        best_delta(spec.target_f)?;
    }
    let samples = exec.map(&cells, |spec| -> Result<Sample> {
        let system = random_set_system(spec)?;
        let opt = if cfg.exact {
            let sol = exact_min_entropy_cover(&system, cfg.budget)?;
            Some((sol.entropy, sol.certified))
        } else {
            None
        };
        Ok(Sample {
            realized_f: system.avg_frequency(),
            greedy: greedy(&system)?.0.entropy(),
            biased: biased(&system)?.0.entropy(),
            opt,
        })
    });
    let samples: Vec<Sample> = samples.into_iter().collect::<Result<_>>()?;

    let k = cfg.seeds.len();
    let mut points = Vec::with_capacity(cfg.f_grid.len());
    for (i, &f) in cfg.f_grid.iter().enumerate() {
        let chunk = &samples[i * k..(i + 1) * k];
        let mean = |g: &dyn Fn(&Sample) -> f64| chunk.iter().map(g).sum::<f64>() / k as f64;
        let opt_certified = chunk.iter().all(|s| s.opt.is_some_and(|(_, c)| c));
        let mean_opt = opt_certified.then(|| mean(&|s| s.opt.unwrap().0));
        let worst = opt_certified.then(|| {
            chunk
                .iter()
                .map(|s| {
                    let opt = s.opt.unwrap().0;
                    let realized = s.realized_f.log2();
                    (s.greedy - opt - LOG2_E).max(s.biased - opt - realized)
                })
                .fold(f64::NEG_INFINITY, f64::max)
        });
        let best = best_delta(f)?;
        points.push(PhasePoint {
            f,
            mean_realized_f: mean(&|s| s.realized_f),
            mean_greedy: mean(&|s| s.greedy),
            mean_biased: mean(&|s| s.biased),
            mean_opt,
            guarantee_greedy: LOG2_E,
            guarantee_biased: f.log2(),
            guarantee_diff: f.log2() - LOG2_E,
            best_delta: best.delta,
            tie: best.tie,
            samples: k,
            opt_certified: cfg.exact && opt_certified,
            worst_excess_over_guarantee: worst.filter(|_| cfg.exact),
        });
    }
    Ok(points)
}

pub fn write_phase_csv<W: Write>(out: W, points: &[PhasePoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(PHASE_HEADER)?;
    for p in points {
        let opt = |x: Option<f64>| x.map(fmt_real).unwrap_or_default();
        w.write_record([
            fmt_real(p.f),
            fmt_real(p.mean_realized_f),
            fmt_real(p.mean_greedy),
            fmt_real(p.mean_biased),
            opt(p.mean_opt),
            fmt_real(p.guarantee_greedy),
            fmt_real(p.guarantee_biased),
            fmt_real(p.guarantee_diff),
            format!("{}", p.best_delta as u8),
            p.tie.to_string(),
            p.samples.to_string(),
            p.opt_certified.to_string(),
            opt(p.worst_excess_over_guarantee),
        ])?;
    }
    w.flush()?;
    Ok(())
}

type Series<'a> = (&'a str, &'a str, Vec<(f64, f64)>);

/// Self-contained SVG line chart against `f`: both additive guarantees and
/// the empirical mean excess over the optimum (or mean entropy when no
/// optimum was computed).
pub fn phase_svg(points: &[PhasePoint]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 400.0;
    const L: f64 = 60.0;
    const R: f64 = 150.0;
    const T: f64 = 20.0;
    const B: f64 = 50.0;

    let with_opt = points.iter().all(|p| p.mean_opt.is_some());
    let excess = |v: f64, p: &PhasePoint| if with_opt { v - p.mean_opt.unwrap() } else { v };
    let series: Vec<Series> = vec![
        (
            "log2 e (Greedy)",
            "#1f77b4",
            points.iter().map(|p| (p.f, p.guarantee_greedy)).collect(),
        ),
        (
            "log2 f (Biased)",
            "#d62728",
            points.iter().map(|p| (p.f, p.guarantee_biased)).collect(),
        ),
        (
            if with_opt {
                "Greedy excess"
            } else {
                "Greedy entropy"
            },
            "#2ca02c",
            points
                .iter()
                .map(|p| (p.f, excess(p.mean_greedy, p)))
                .collect(),
        ),
        (
            if with_opt {
                "Biased excess"
            } else {
                "Biased entropy"
            },
            "#ff7f0e",
            points
                .iter()
                .map(|p| (p.f, excess(p.mean_biased, p)))
                .collect(),
        ),
    ];
    let xs = points.iter().map(|p| p.f);
    let (x0, x1) = xs
        .clone()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| {
            (a.min(x), b.max(x))
        });
    let ys = series.iter().flat_map(|s| s.2.iter().map(|&(_, y)| y));
    let (y0, y1) = ys.fold((0.0f64, f64::NEG_INFINITY), |(a, b), y| {
        (a.min(y), b.max(y))
    });
    let (x0, x1) = if x1 > x0 {
        (x0, x1)
    } else {
        (x0 - 0.5, x0 + 0.5)
    };
    let (y0, y1) = if y1 > y0 {
        (y0, y1 * 1.05)
    } else {
        (y0, y0 + 1.0)
    };
    let sx = |x: f64| L + (x - x0) / (x1 - x0) * (W - L - R);
    let sy = |y: f64| H - B - (y - y0) / (y1 - y0) * (H - T - B);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<line x1="{L}" y1="{yb}" x2="{xr}" y2="{yb}" stroke="black"/><line x1="{L}" y1="{T}" x2="{L}" y2="{yb}" stroke="black"/>"#,
        yb = H - B,
        xr = W - R
    );
    for i in 0..=4 {
        let x = x0 + (x1 - x0) * i as f64 / 4.0;
        let y = y0 + (y1 - y0) * i as f64 / 4.0;
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{x:.2}</text><text x="{:.1}" y="{:.1}" text-anchor="end">{y:.2}</text>"#,
            sx(x),
            H - B + 16.0,
            L - 6.0,
            sy(y) + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">average frequency f</text><text x="14" y="{:.1}" transform="rotate(-90 14 {:.1})" text-anchor="middle">bits</text>"#,
        (L + W - R) / 2.0,
        H - 12.0,
        H / 2.0,
        H / 2.0
    );
    let ex = std::f64::consts::E;
    if ex >= x0 && ex <= x1 {
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.1}" y1="{T}" x2="{x:.1}" y2="{:.1}" stroke="gray" stroke-dasharray="4 3"/><text x="{x:.1}" y="{:.1}" text-anchor="middle" fill="gray">e</text>"#,
            H - B,
            T + 10.0,
            x = sx(ex)
        );
    }
    for (i, (label, color, pts)) in series.iter().enumerate() {
        let path: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.1},{:.1}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#,
            path.join(" ")
        );
        let ly = T + 14.0 + 18.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"/><text x="{:.1}" y="{:.1}">{label}</text>"#,
            W - R + 10.0,
            W - R + 30.0,
            W - R + 35.0,
            ly + 4.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// `slack = rhs − ent_alg` and `ent_alg ≥ ent_opt` on every filled row.
pub fn check_record(r: &SweepRecord) -> bool {
    match (r.ent_opt, r.rhs, r.slack) {
        (Some(opt), Some(rhs), Some(slack)) => {
            (slack - (rhs - r.ent_alg)).abs() <= IDENTITY_TOL && r.ent_alg >= opt - IDENTITY_TOL
        }
        (None, None, None) => true,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(
            parse_grid("0:1:0.25").unwrap(),
            vec![0.0, 0.25, 0.5, 0.75, 1.0]
        );
        assert_eq!(parse_grid("1.5:4.0:0.25").unwrap().len(), 11);
        assert_eq!(parse_grid("0:1:0.1").unwrap()[3], 0.3);
        assert_eq!(parse_grid("0:1:0.1").unwrap().len(), 11);
        assert_eq!(parse_grid("2.0,2.5, 3").unwrap(), vec![2.0, 2.5, 3.0]);
        assert_eq!(parse_grid("0.5").unwrap(), vec![0.5]);
        assert!(parse_grid("1:0:0.1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("a").is_err());
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seeds("3").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_seeds("2..5").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_seeds("2..=4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_seeds("7,1").unwrap(), vec![7, 1]);
        assert!(parse_seeds("x").is_err());
    }

    #[test]
    fn real_formatting() {
        assert_eq!(fmt_real(1.5612781244591327), "1.5612781");
        assert_eq!(fmt_real(-0.0), "0.0000000");
        assert_eq!(fmt_real(-1e-12), "0.0000000");
        assert_eq!(fmt_real(-0.25), "-0.2500000");
    }

    #[test]
    fn certify_grid_rows() {
        let s = SetSystem::new(4, vec![vec![1, 2, 3], vec![3, 4]]).unwrap();
        let (rows, ok) =
            certify_grid(&s, "two", &parse_grid("0:1:0.25").unwrap(), 1000, None).unwrap();
        assert!(ok);
        assert_eq!(rows.len(), 5);
        assert!(rows
            .iter()
            .all(|r| r.holds == Some(true) && check_record(r)));
        assert!((rows[0].rhs.unwrap() - (0.8112781 + 1.25f64.log2() + LOG2_E)).abs() < 1e-6);
        assert_eq!(rows[0].algorithm, "greedy");
        assert_eq!(rows[4].algorithm, "biased");
    }

    #[test]
    fn uncertified_rows_are_flagged() {
        let sets: Vec<Vec<usize>> = (0..3).map(|_| (1..=9).collect()).collect();
        let s = SetSystem::new(9, sets).unwrap();
        let (rows, ok) = certify_grid(&s, "x", &[0.0, 1.0], 3, Some(1)).unwrap();
        assert!(!ok);
        assert!(rows
            .iter()
            .all(|r| r.ent_opt.is_none() && r.holds.is_none() && check_record(r)));
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), SWEEP_HEADER.join(","));
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "x,9,3,3.0000000,0.0000000,greedy,0.0000000,,,,,1"
        );
    }

    #[test]
    fn sweep_is_execution_independent() {
        let cfg = SweepConfig {
            n: 8,
            m: 5,
            f_grid: vec![1.5, 3.0],
            seeds: vec![1, 2, 3],
            deltas: vec![0.0, 0.5, 1.0],
            exact: true,
            budget: 1_000_000,
        };
        let a = run_sweep(&cfg, Execution::Sequential).unwrap();
        let b = run_sweep(&cfg, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2 * 3 * 3);
        assert!(a.iter().all(|r| r.holds == Some(true) && check_record(r)));
    }

    #[test]
    fn sweep_rejects_bad_delta_and_f() {
        let mut cfg = SweepConfig {
            n: 4,
            m: 2,
            f_grid: vec![1.5],
            seeds: vec![0],
            deltas: vec![1.5],
            exact: false,
            budget: 10,
        };
        assert!(run_sweep(&cfg, Execution::Sequential).is_err());
        cfg.deltas = vec![0.5];
        cfg.f_grid = vec![3.0];
        assert!(run_sweep(&cfg, Execution::Sequential).is_err());
    }

    #[test]
    fn phase_small_grid() {
        let cfg = PhaseConfig {
            n: 8,
            m: 6,
            f_grid: vec![2.0, 2.5, 3.0, 3.5],
            seeds: vec![0, 1],
            exact: true,
            budget: 1_000_000,
        };
        let pts = run_phase_transition(&cfg, Execution::Parallel).unwrap();
        let best: Vec<f64> = pts.iter().map(|p| p.best_delta).collect();
        assert_eq!(best, vec![1.0, 1.0, 0.0, 0.0]);
        assert_eq!(pts[0].guarantee_biased, 1.0);
        assert!(pts[1].guarantee_diff < 0.0 && pts[2].guarantee_diff > 0.0);
        assert!(pts
            .iter()
            .all(|p| p.worst_excess_over_guarantee.unwrap() <= 1e-9));
        let svg = phase_svg(&pts);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 4);
    }
}

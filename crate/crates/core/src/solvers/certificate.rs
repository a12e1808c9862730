//! Runtime certificates for the BiasedGreedy(δ) guarantee.
//!
//! The asymptotic bound carries an unspecified `o(1)`. Keeping `⌈δn⌉` exact
//! through the argument gives a finite-n statement with no remainder:
//!
//! ```text
//! Ent(BG) ≤ Ent(OPT) + log₂ f − β log₂(β / e),   β = (n − ⌈δn⌉) / n
//! ```
//!
//! with `β log₂(β/e) := 0` at `β = 0`. Two nonnegative terms are dropped on the
//! way, `D(BG‖#)` and `β·D(ȳ‖x̄)`; they are reported so the slack can be
//! attributed.

use std::f64::consts::{E, LOG2_E};

use crate::cover::CoverAssignment;
use crate::entropy::{kl_divergence, Distribution, IDENTITY_TOL};
use crate::error::{Error, Result};
use crate::solvers::biased_greedy::{AlgorithmTrace, BiasedGreedy};
use crate::solvers::exact::{exact_min_entropy_cover, ExactSolution};
use crate::solvers::split::{check_delta, heavy_fraction, SplitReport};
use crate::system::SetSystem;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremBound {
    pub beta: f64,
    pub rhs: f64,
}

/// `rhs = ent_opt + log₂ f − β log₂(β/e)`.
pub fn theorem_bound(ent_opt: f64, f: f64, delta: f64, n: usize) -> Result<TheoremBound> {
    if f.is_nan() || f < 1.0 || !f.is_finite() {
        return Err(Error::Domain(format!(
            "average frequency must be >= 1, got {f}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    if ent_opt.is_nan() || ent_opt < 0.0 {
        return Err(Error::Domain(format!(
            "optimal entropy must be >= 0, got {ent_opt}"
        )));
    }
    check_delta(delta)?;
    let beta = heavy_fraction(delta, n);
    let beta_term = if beta > 0.0 {
        beta * (beta / E).log2()
    } else {
        0.0
    };
    Ok(TheoremBound {
        beta,
        rhs: ent_opt + f.log2() - beta_term,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCertificate {
    pub ent_alg: f64,
    pub ent_opt: f64,
    pub f: f64,
    pub delta: f64,
    pub beta: f64,
    pub rhs: f64,
    /// `rhs − ent_alg`.
    pub slack: f64,
    pub holds: bool,
    /// Whether `ent_opt` comes from a completed exact search.
    pub optimum_certified: bool,
    /// `D(BG‖#)`, dropped in the argument.
    pub divergence_to_sizes: f64,
    /// `β·D(ȳ‖x̄)` with `x`, `y` the optimum's class sizes overall and on
    /// heavy elements; dropped in the argument.
    pub heavy_divergence: f64,
}

impl BoundCertificate {
    /// `rhs` minus both dropped terms; the algorithm's entropy never exceeds it.
    pub fn tight_rhs(&self) -> f64 {
        self.rhs - self.divergence_to_sizes - self.heavy_divergence
    }
}

/// A certificate together with the covers it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct Certification {
    pub certificate: BoundCertificate,
    pub cover: CoverAssignment,
    pub trace: AlgorithmTrace,
    pub split: SplitReport,
}

/// Runs BiasedGreedy(δ) and the exact oracle and fills the certificate.
pub fn certify(system: &SetSystem, delta: f64, budget: u64) -> Result<BoundCertificate> {
    let opt = exact_min_entropy_cover(system, budget)?;
    Ok(certify_against(system, delta, &opt)?.certificate)
}

/// Like [`certify`] but reuses a solved optimum, e.g. across a δ grid.
pub fn certify_against(
    system: &SetSystem,
    delta: f64,
    optimum: &ExactSolution,
) -> Result<Certification> {
    let run = BiasedGreedy::new(delta).run(system)?;
    let n = system.n();
    let f = system.avg_frequency();
    let ent_alg = run.cover.entropy();
    let ent_opt = optimum.entropy;
    let bound = theorem_bound(ent_opt, f, delta, n)?;

    let class_dist = Distribution::from_counts(run.cover.class_sizes())?;
    let size_dist = Distribution::from_counts(&system.set_sizes())?;
    let divergence_to_sizes = kl_divergence(&class_dist, &size_dist)?;

    let x = optimum.cover.class_sizes().to_vec();
    let mut y = vec![0usize; system.m()];
    for &u in &run.split.heavy {
        y[optimum.cover.set_of(u) - 1] += 1;
    }
    let heavy_divergence = if run.split.heavy.is_empty() {
        0.0
    } else {
        let xbar = Distribution::from_counts(&x)?;
        let ybar = Distribution::from_counts(&y)?;
        bound.beta * kl_divergence(&ybar, &xbar)?
    };

    let slack = bound.rhs - ent_alg;
    Ok(Certification {
        certificate: BoundCertificate {
            ent_alg,
            ent_opt,
            f,
            delta,
            beta: bound.beta,
            rhs: bound.rhs,
            slack,
            holds: slack >= -IDENTITY_TOL,
            optimum_certified: optimum.certified,
            divergence_to_sizes,
            heavy_divergence,
        },
        cover: run.cover,
        trace: run.trace,
        split: run.split,
    })
}

/// Which pure algorithm has the better additive guarantee at density `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestDelta {
    /// 1 (Biased) below `e`, 0 (Greedy) above.
    pub delta: f64,
    /// `|f − e| ≤ 1e-12`; both guarantees coincide and `delta` is 1.
    pub tie: bool,
}

/// Compares the Biased guarantee `log₂ f` with the Greedy guarantee `log₂ e`.
pub fn best_delta(f: f64) -> Result<BestDelta> {
    if f.is_nan() || f < 1.0 || !f.is_finite() {
        return Err(Error::Domain(format!(
            "average frequency must be >= 1, got {f}"
        )));
    }
    let tie = (f - E).abs() <= 1e-12;
    let delta = if tie || f < E { 1.0 } else { 0.0 };
    Ok(BestDelta { delta, tie })
}

/// Additive guarantee of pure Greedy, `log₂ e`.
pub const GREEDY_GUARANTEE: f64 = LOG2_E;

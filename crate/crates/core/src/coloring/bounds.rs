use crate::coloring::graph::Graph;
use crate::error::{Error, Result};

/// Degree form of the Biased coloring guarantee,
/// `ent_opt + log₂(Δ + 2) + log₂(f / 3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeBound {
    pub max_degree: usize,
    pub f: f64,
    pub rhs: f64,
    /// `rhs < ent_opt`: the bound asserts less than the optimum and cannot be
    /// met by any coloring with strictly positive excess. Reported, not
    /// enforced.
    pub below_optimum: bool,
}

/// `f` should be the average frequency over maximal independent sets.
pub fn degree_corollary_bound(g: &Graph, f: f64, ent_opt: f64) -> DegreeBound {
    let max_degree = g.max_degree();
    let rhs = ent_opt + ((max_degree + 2) as f64).log2() + (f / 3.0).log2();
    DegreeBound {
        max_degree,
        f,
        rhs,
        below_optimum: rhs < ent_opt,
    }
}

/// Bound when independent sets are only `eta`-approximately maximum:
/// `base_rhs + log₂ η`.
pub fn approx_oracle_bound(eta: f64, base_rhs: f64) -> Result<f64> {
    if eta.is_nan() || eta < 1.0 || !eta.is_finite() {
        return Err(Error::Domain(format!("eta must be >= 1, got {eta}")));
    }
    Ok(base_rhs + eta.log2())
}

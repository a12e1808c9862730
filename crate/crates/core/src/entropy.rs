//! Entropy, divergence and the per-term decomposition of a cover's entropy.
//!
//! All quantities are in bits and use `0 · log₂ 0 = 0`.

use crate::cover::CoverAssignment;
use crate::error::{Error, Result};
use crate::system::SetSystem;

/// Tolerance on `Σ wᵢ = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Tolerance for identities between derived quantities.
pub const IDENTITY_TOL: f64 = 1e-9;

/// Nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    weights: Vec<f64>,
}

impl Distribution {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(Error::NotADistribution(format!("weight {i} is {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotADistribution(format!("weights sum to {sum}")));
        }
        Ok(Distribution { weights })
    }

    /// Normalizes integer counts; all-zero counts are rejected.
    pub fn from_counts(counts: &[usize]) -> Result<Self> {
        let total: usize = counts.iter().sum();
        if total == 0 {
            return Err(Error::NotADistribution("all counts are zero".into()));
        }
        let t = total as f64;
        Distribution::new(counts.iter().map(|&c| c as f64 / t).collect())
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn entropy(&self) -> f64 {
        (-self.weights.iter().map(|&p| plogp(p)).sum::<f64>()).max(0.0)
    }
}

#[inline]
fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        p * p.log2()
    } else {
        0.0
    }
}

/// Entropy of a class-size histogram over `n` elements.
pub fn entropy_of_sizes(sizes: &[usize], n: usize) -> f64 {
    let n = n as f64;
    let h: f64 = sizes
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum();
    h.max(0.0)
}

/// `Ent(g) = -Σ (|g⁻¹(i)|/n) log₂(|g⁻¹(i)|/n)`.
pub fn entropy_of_cover(cover: &CoverAssignment) -> f64 {
    entropy_of_sizes(cover.class_sizes(), cover.n())
}

/// `D(P‖Q) = Σ pᵢ log₂(pᵢ/qᵢ)`.
pub fn kl_divergence(p: &Distribution, q: &Distribution) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    let mut d = 0.0;
    for (index, (&pi, &qi)) in p.weights.iter().zip(&q.weights).enumerate() {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            return Err(Error::SupportViolation { index, p: pi });
        }
        d += pi * (pi / qi).log2();
    }
    // rounding can leave tiny negatives when P == Q
    Ok(d.max(0.0))
}

/// The three-term rewriting of a cover's entropy in terms of set sizes:
/// `Ent = −Σ p♭ᵢ log₂|Pᵢ| − D(p♭‖#) + log₂ Σ|Pᵢ|`, where `p♭` is the cover's
/// class distribution and `#ᵢ = |Pᵢ| / Σ|Pⱼ|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyDecomposition {
    pub size_term: f64,
    pub divergence_term: f64,
    pub mass_term: f64,
    pub total: f64,
}

pub fn entropy_decomposition(
    system: &SetSystem,
    cover: &CoverAssignment,
) -> Result<EntropyDecomposition> {
    let n = system.n() as f64;
    let sizes = system.set_sizes();
    let class_dist = Distribution::from_counts(cover.class_sizes())?;
    let size_dist = Distribution::from_counts(&sizes)?;

    let size_term = -cover
        .class_sizes()
        .iter()
        .zip(&sizes)
        .filter(|(&c, _)| c > 0)
        .map(|(&c, &s)| c as f64 / n * (s as f64).log2())
        .sum::<f64>();
    let divergence_term = kl_divergence(&class_dist, &size_dist)?;
    let mass_term = (system.total_size() as f64).log2();
    Ok(EntropyDecomposition {
        size_term,
        divergence_term,
        mass_term,
        total: size_term - divergence_term + mass_term,
    })
}

//! Exact minimum entropy cover by depth-first branch and bound.
//!
//! Elements are assigned in index order, each to one of its containing sets
//! in ascending order, so leaves are visited in lexicographic order of the
//! assignment vector. A leaf replaces the incumbent only when it is better
//! by more than [`TIE_TOL`], which makes the reported argmin the
//! lexicographically smallest optimal cover.
//!
//! The bound: entropy is `log₂ n − Φ/n` with `Φ = Σ cᵢ log₂ cᵢ`. Since
//! `c ↦ c log₂ c` is convex, dropping the membership constraints and placing
//! all `r` unassigned elements into the currently largest class maximizes Φ
//! over every completion of the partial histogram.

use crate::cover::CoverAssignment;
use crate::entropy::entropy_of_sizes;
use crate::error::{Error, Result};
use crate::system::SetSystem;

/// Default node budget.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Two covers whose entropies differ by at most this are considered tied.
pub const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ExactSolution {
    pub cover: CoverAssignment,
    pub entropy: f64,
    /// False when the node budget ran out; the cover is then only the best
    /// found so far.
    pub certified: bool,
    pub nodes: u64,
}

#[inline]
fn xlogx(c: usize) -> f64 {
    if c > 1 {
        let c = c as f64;
        c * c.log2()
    } else {
        0.0
    }
}

struct Search<'a> {
    system: &'a SetSystem,
    counts: Vec<usize>,
    current: Vec<usize>,
    best: Option<(f64, Vec<usize>)>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    log2n: f64,
}

impl Search<'_> {
    fn dfs(&mut self, idx: usize, phi: f64) {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        let n = self.system.n();
        if idx == n {
            let ent = entropy_of_sizes(&self.counts, n);
            let better = match &self.best {
                None => true,
                Some((b, _)) => ent < b - TIE_TOL,
            };
            if better {
                self.best = Some((ent, self.current.clone()));
            }
            return;
        }
        if let Some((best, _)) = &self.best {
            let cmax = self.counts.iter().copied().max().unwrap_or(0);
            let r = n - idx;
            let phi_ub = phi - xlogx(cmax) + xlogx(cmax + r);
            let lower = self.log2n - phi_ub / n as f64;
            // no leaf below can beat the incumbent by more than TIE_TOL
            if lower > best - TIE_TOL / 2.0 {
                return;
            }
        }
        let system = self.system;
        for &s in system.containing(idx + 1) {
            let old = self.counts[s];
            self.counts[s] += 1;
            self.current[idx] = s;
            self.dfs(idx + 1, phi - xlogx(old) + xlogx(old + 1));
            self.counts[s] -= 1;
            if self.exhausted {
                return;
            }
        }
    }
}

/// Minimum entropy cover, exploring at most `budget` search nodes.
///
/// If the budget runs out after at least one complete cover was seen, the
/// best one is returned with `certified == false`.
pub fn exact_min_entropy_cover(system: &SetSystem, budget: u64) -> Result<ExactSolution> {
    let mut search = Search {
        system,
        counts: vec![0; system.m()],
        current: vec![0; system.n()],
        best: None,
        nodes: 0,
        budget,
        exhausted: false,
        log2n: (system.n() as f64).log2(),
    };
    search.dfs(0, 0.0);
    let (entropy, chosen) = search.best.ok_or(Error::BudgetExhausted { budget })?;
    Ok(ExactSolution {
        cover: CoverAssignment::from_zero_based(system, &chosen),
        entropy,
        certified: !search.exhausted,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_set() {
        let s = SetSystem::new(5, vec![(1..=5).collect()]).unwrap();
        let sol = exact_min_entropy_cover(&s, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.entropy, 0.0);
        assert!(sol.certified);
    }

    #[test]
    fn two_sets() {
        let s = SetSystem::new(4, vec![vec![1, 2, 3], vec![3, 4]]).unwrap();
        let sol = exact_min_entropy_cover(&s, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.cover.assignment(), &[1, 1, 1, 2]);
        let expected = -(0.75f64 * 0.75f64.log2() + 0.25 * 0.25f64.log2());
        assert!((sol.entropy - expected).abs() < 1e-12);
        assert!((sol.entropy - 0.8112781).abs() < 1e-7);
    }

    #[test]
    fn fixture_instance_optimum() {
        let s = SetSystem::new(
            8,
            vec![vec![1, 2, 3], vec![3, 4, 6], vec![4, 5], vec![6, 7, 8]],
        )
        .unwrap();
        let sol = exact_min_entropy_cover(&s, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.cover.assignment(), &[1, 1, 1, 3, 3, 4, 4, 4]);
        let mut sizes: Vec<usize> = sol
            .cover
            .class_sizes()
            .iter()
            .copied()
            .filter(|&c| c > 0)
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3, 3]);
        assert!((sol.entropy - 1.5612781).abs() < 1e-7);
    }

    #[test]
    fn lexicographic_tie_break() {
        // sets 2 and 3 are identical, so (1,1,2,2) and (1,1,3,3) tie
        let s = SetSystem::new(4, vec![vec![1, 2], vec![3, 4], vec![3, 4]]).unwrap();
        let sol = exact_min_entropy_cover(&s, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.cover.assignment(), &[1, 1, 2, 2]);
    }

    #[test]
    fn budget_exhaustion() {
        let sets: Vec<Vec<usize>> = (0..4).map(|_| (1..=12).collect()).collect();
        let s = SetSystem::new(12, sets).unwrap();
        assert!(matches!(
            exact_min_entropy_cover(&s, 5),
            Err(Error::BudgetExhausted { budget: 5 })
        ));
        let sol = exact_min_entropy_cover(&s, 14).unwrap();
        assert!(!sol.certified);
        let sol = exact_min_entropy_cover(&s, DEFAULT_BUDGET).unwrap();
        assert!(sol.certified);
        assert_eq!(sol.entropy, 0.0);
    }
}

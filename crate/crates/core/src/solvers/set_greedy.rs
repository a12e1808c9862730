//! The classic set-selection greedy: repeatedly take the set covering the
//! most still-uncovered elements and assign those elements to it. This is the
//! reference algorithm for the `log₂ e` additive guarantee; it differs from
//! BiasedGreedy(0), which processes elements rather than sets.

use crate::cover::CoverAssignment;
use crate::system::SetSystem;

/// Ties go to the smallest set index.
pub fn set_greedy(system: &SetSystem) -> CoverAssignment {
    let mut chosen = vec![usize::MAX; system.n()];
    let mut gain: Vec<usize> = system.set_sizes();
    let mut left = system.n();
    while left > 0 {
        let mut best = 0;
        for s in 1..system.m() {
            if gain[s] > gain[best] {
                best = s;
            }
        }
        for &u in system.set(best) {
            if chosen[u - 1] == usize::MAX {
                chosen[u - 1] = best;
                left -= 1;
                for &t in system.containing(u) {
                    gain[t] -= 1;
                }
            }
        }
    }
    CoverAssignment::from_zero_based(system, &chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn takes_the_largest_set_first() {
        let sys = SetSystem::new(4, vec![vec![1, 2, 3], vec![3, 4]]).unwrap();
        assert_eq!(set_greedy(&sys).assignment(), &[1, 1, 1, 2]);
    }

    #[test]
    fn full_set_gives_zero_entropy() {
        let sys = SetSystem::new(4, vec![vec![1, 2, 3], vec![2, 3, 4], vec![1, 2, 3, 4]]).unwrap();
        let c = set_greedy(&sys);
        assert_eq!(c.assignment(), &[3, 3, 3, 3]);
        assert_eq!(c.entropy(), 0.0);
    }
}

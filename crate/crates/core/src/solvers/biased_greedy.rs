//! The BiasedGreedy(δ) family.
//!
//! Light elements are covered independently by a containing set of maximum
//! original cardinality. Light elements are then removed from every set and
//! the heavy elements are processed one at a time in ascending index order:
//! each goes to the containing set with the largest residual size, after
//! which it is erased from all residual sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::CoverAssignment;
use crate::error::Result;
use crate::solvers::split::{split_light_heavy, SplitReport};
use crate::system::SetSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Biased,
    Greedy,
}

/// How equal-size candidate sets are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Smallest set index wins.
    #[default]
    SmallestIndex,
    /// Uniform choice among the tied sets, reproducible per seed.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub element: usize,
    pub phase: Phase,
    /// 1-based set number.
    pub chosen_set: usize,
    /// Original cardinality `|P_i|` of the chosen set.
    pub a_v: usize,
    /// Cardinality of the chosen set at assignment time (residual in the
    /// greedy phase).
    pub current_size: usize,
}

/// Per-element records in processing order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgorithmTrace {
    pub records: Vec<TraceRecord>,
}

impl AlgorithmTrace {
    pub fn processing_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.records.iter().map(|r| r.element)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BiasedGreedyRun {
    pub cover: CoverAssignment,
    pub trace: AlgorithmTrace,
    pub split: SplitReport,
}

/// Configurable entry point; the free functions below use the default
/// smallest-index tie-break.
#[derive(Debug, Clone, Copy)]
pub struct BiasedGreedy {
    pub delta: f64,
    pub tie_break: TieBreak,
}

impl BiasedGreedy {
    pub fn new(delta: f64) -> Self {
        BiasedGreedy {
            delta,
            tie_break: TieBreak::SmallestIndex,
        }
    }

    pub fn tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    pub fn run(&self, system: &SetSystem) -> Result<BiasedGreedyRun> {
        let split = split_light_heavy(system, self.delta)?;
        let mut picker = Picker::new(self.tie_break);
        let sizes = system.set_sizes();
        let mut chosen = vec![usize::MAX; system.n()];
        let mut records = Vec::with_capacity(system.n());

        for &u in &split.light {
            let s = picker.pick(system.containing(u), |s| sizes[s]);
            chosen[u - 1] = s;
            records.push(TraceRecord {
                element: u,
                phase: Phase::Biased,
                chosen_set: s + 1,
                a_v: sizes[s],
                current_size: sizes[s],
            });
        }

        let mut residual = vec![0usize; system.m()];
        for &u in &split.heavy {
            for &s in system.containing(u) {
                residual[s] += 1;
            }
        }
        for &u in &split.heavy {
            let s = picker.pick(system.containing(u), |s| residual[s]);
            chosen[u - 1] = s;
            records.push(TraceRecord {
                element: u,
                phase: Phase::Greedy,
                chosen_set: s + 1,
                a_v: sizes[s],
                current_size: residual[s],
            });
            for &t in system.containing(u) {
                residual[t] -= 1;
            }
        }

        Ok(BiasedGreedyRun {
            cover: CoverAssignment::from_zero_based(system, &chosen),
            trace: AlgorithmTrace { records },
            split,
        })
    }
}

struct Picker {
    rng: Option<ChaCha8Rng>,
    ties: Vec<usize>,
}

impl Picker {
    fn new(tie_break: TieBreak) -> Self {
        let rng = match tie_break {
            TieBreak::SmallestIndex => None,
            TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        };
        Picker {
            rng,
            ties: Vec::new(),
        }
    }

    /// Chooses among `candidates` (ascending, nonempty) one maximizing `key`.
    fn pick(&mut self, candidates: &[usize], key: impl Fn(usize) -> usize) -> usize {
        let best = candidates
            .iter()
            .map(|&s| key(s))
            .max()
            .expect("element in no set");
        self.ties.clear();
        self.ties
            .extend(candidates.iter().copied().filter(|&s| key(s) == best));
        match &mut self.rng {
            None => self.ties[0],
            Some(rng) => self.ties[rng.random_range(0..self.ties.len())],
        }
    }
}

pub fn biased_greedy(system: &SetSystem, delta: f64) -> Result<(CoverAssignment, AlgorithmTrace)> {
    let run = BiasedGreedy::new(delta).run(system)?;
    Ok((run.cover, run.trace))
}

/// BiasedGreedy(0).
pub fn greedy(system: &SetSystem) -> Result<(CoverAssignment, AlgorithmTrace)> {
    biased_greedy(system, 0.0)
}

/// BiasedGreedy(1).
pub fn biased(system: &SetSystem) -> Result<(CoverAssignment, AlgorithmTrace)> {
    biased_greedy(system, 1.0)
}

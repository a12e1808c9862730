//! BiasedGreedy(δ), the classic set greedy, the exact oracle and bound
//! certificates.

mod biased_greedy;
mod certificate;
mod exact;
mod set_greedy;
mod split;

pub use biased_greedy::{
    biased, biased_greedy, greedy, AlgorithmTrace, BiasedGreedy, BiasedGreedyRun, Phase, TieBreak,
    TraceRecord,
};
pub use certificate::{
    best_delta, certify, certify_against, theorem_bound, BestDelta, BoundCertificate,
    Certification, TheoremBound, GREEDY_GUARANTEE,
};
pub use exact::{exact_min_entropy_cover, ExactSolution, DEFAULT_BUDGET, TIE_TOL};
pub use set_greedy::set_greedy;
pub(crate) use split::check_delta;
pub use split::{heavy_fraction, light_count, split_light_heavy, SplitReport};

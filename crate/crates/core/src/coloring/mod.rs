//! Minimum entropy graph coloring as an implicit set cover over the maximal
//! independent sets of the graph.

mod alpha3;
mod bounds;
mod color;
mod graph;
mod mis;

pub use alpha3::{f_alpha3, Alpha3Stats};
pub use bounds::{approx_oracle_bound, degree_corollary_bound, DegreeBound};
pub use color::{
    apply_heuristics, biased_coloring, biased_coloring_with, heuristic_largest_is_first,
    heuristic_merge_colors, min_entropy_coloring, Coloring,
};
pub use graph::Graph;
pub use mis::{
    find_independent_set, independence_number, maximal_independent_sets, maximum_independent_sets,
    to_set_cover, DEFAULT_CAP,
};

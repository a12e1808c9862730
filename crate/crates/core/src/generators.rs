//! Seeded instance and graph generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (crate
//! `rand_chacha`), a portable generator whose stream does not depend on the
//! platform, so generated files are byte-stable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Graph;
use crate::error::{Error, Result};
use crate::system::SetSystem;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub target_f: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::Domain(format!(
                "n and m must be >= 1 (n = {}, m = {})",
                self.n, self.m
            )));
        }
        if !(self.target_f >= 1.0 && self.target_f <= self.m as f64) {
            return Err(Error::Domain(format!(
                "target f must lie in [1, m = {}], got {}",
                self.m, self.target_f
            )));
        }
        Ok(())
    }
}

/// Each (set, element) membership is drawn independently with probability
/// `target_f / m`, sets in order and elements ascending within a set. Every
/// element left uncovered is then added to a uniformly chosen set, in
/// ascending element order.
pub fn random_set_system(spec: &GenSpec) -> Result<SetSystem> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let p = spec.target_f / spec.m as f64;
    let mut sets: Vec<Vec<usize>> = (0..spec.m)
        .map(|_| (1..=spec.n).filter(|_| rng.random::<f64>() < p).collect())
        .collect();
    let mut covered = vec![false; spec.n + 1];
    for &u in sets.iter().flatten() {
        covered[u] = true;
    }
    for (u, &hit) in covered.iter().enumerate().skip(1) {
        if !hit {
            let i = rng.random_range(0..spec.m);
            let pos = sets[i].partition_point(|&x| x < u);
            sets[i].insert(pos, u);
        }
    }
    SetSystem::new(spec.n, sets)
}

/// Erdős–Rényi graph: each pair `u < v`, in lexicographic order, is an edge
/// with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Complement edges of the 8-vertex example graph.
pub const EXAMPLE_COMPLEMENT_EDGES: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (2, 3),
    (6, 7),
    (6, 8),
    (7, 8),
    (3, 6),
    (4, 6),
    (3, 4),
    (4, 5),
];

/// Fixture id accepted wherever a graph path is expected.
pub const EXAMPLE_FIXTURE_ID: &str = "paper-fig1";

/// The 8-vertex example graph: three complement triangles {1,2,3}, {3,4,6},
/// {6,7,8} and the complement edge {4,5}.
pub fn example_graph() -> Graph {
    Graph::new(8, EXAMPLE_COMPLEMENT_EDGES)
        .expect("fixture is a valid graph")
        .complement()
}

/// A random small spec for property suites: `n ∈ [2, max_n]`,
/// `m ∈ [1, max_m]`, `target_f ∈ [1, min(max_f, m)]`.
pub fn random_small_spec(seed: u64, max_n: usize, max_m: usize, max_f: f64) -> GenSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9E37_79B9_7F4A_7C15);
    let n = rng.random_range(2..=max_n.max(2));
    let m = rng.random_range(1..=max_m.max(1));
    let hi = max_f.min(m as f64).max(1.0);
    let target_f = if hi > 1.0 {
        rng.random_range(1.0..=hi)
    } else {
        1.0
    };
    GenSpec {
        n,
        m,
        target_f,
        seed,
    }
}

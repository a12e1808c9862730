//! Colorings, the Biased coloring and the two post-processing heuristics.

use crate::coloring::graph::Graph;
use crate::coloring::mis::{maximum_independent_sets, to_set_cover, DEFAULT_CAP};
use crate::entropy::entropy_of_sizes;
use crate::error::{Error, Result};
use crate::solvers::{exact_min_entropy_cover, BiasedGreedy, TieBreak};

/// A proper coloring. Colors are canonical: numbered `0, 1, ...` in order of
/// first appearance along vertices `1..=n`, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    color: Vec<usize>,
}

impl Coloring {
    /// Validates properness; color ids are arbitrary and get relabeled.
    pub fn new(g: &Graph, color: Vec<usize>) -> Result<Self> {
        if color.len() != g.n() {
            return Err(Error::InvalidCover(format!(
                "coloring has {} entries for {} vertices",
                color.len(),
                g.n()
            )));
        }
        if let Some(&(u, v)) = g
            .edges()
            .iter()
            .find(|&&(u, v)| color[u - 1] == color[v - 1])
        {
            return Err(Error::InvalidCover(format!(
                "adjacent vertices {u} and {v} share a color"
            )));
        }
        Ok(Coloring::canonical(color))
    }

    fn canonical(color: Vec<usize>) -> Self {
        let mut map = std::collections::HashMap::new();
        let color = color
            .into_iter()
            .map(|c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring { color }
    }

    /// Builds from classes that partition `1..=n`.
    pub fn from_classes(g: &Graph, classes: &[Vec<usize>]) -> Result<Self> {
        let mut color = vec![usize::MAX; g.n()];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                if v == 0 || v > g.n() || color[v - 1] != usize::MAX {
                    return Err(Error::InvalidCover(format!(
                        "classes do not partition at {v}"
                    )));
                }
                color[v - 1] = c;
            }
        }
        if let Some(v) = color.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidCover(format!("vertex {} uncolored", v + 1)));
        }
        Coloring::new(g, color)
    }

    /// Color of vertex `v` (1-based).
    pub fn color_of(&self, v: usize) -> usize {
        self.color[v - 1]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color
    }

    pub fn n(&self) -> usize {
        self.color.len()
    }

    pub fn num_colors(&self) -> usize {
        self.color.iter().max().map_or(0, |&c| c + 1)
    }

    /// Color classes in color order, each sorted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors()];
        for (i, &c) in self.color.iter().enumerate() {
            classes[c].push(i + 1);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_colors()];
        for &c in &self.color {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn entropy(&self) -> f64 {
        entropy_of_sizes(&self.class_sizes(), self.n())
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.color[u - 1] != self.color[v - 1])
    }
}

/// Colors every vertex by the maximal independent set BiasedGreedy(δ)
/// assigns it to, on the implicit set cover of `g`.
pub fn biased_coloring(g: &Graph, delta: f64, cap: usize) -> Result<Coloring> {
    biased_coloring_with(g, delta, cap, TieBreak::SmallestIndex)
}

pub fn biased_coloring_with(
    g: &Graph,
    delta: f64,
    cap: usize,
    tie_break: TieBreak,
) -> Result<Coloring> {
    let system = to_set_cover(g, cap)?;
    let run = BiasedGreedy::new(delta).tie_break(tie_break).run(&system)?;
    Ok(Coloring::canonical(run.cover.assignment().to_vec()))
}

/// Minimum entropy coloring, solved exactly on the implicit set cover.
/// Returns the coloring and whether the search completed within `budget`.
pub fn min_entropy_coloring(g: &Graph, cap: usize, budget: u64) -> Result<(Coloring, bool)> {
    let system = to_set_cover(g, cap)?;
    let sol = exact_min_entropy_cover(&system, budget)?;
    Ok((
        Coloring::canonical(sol.cover.assignment().to_vec()),
        sol.certified,
    ))
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

/// Repeatedly merges the two color classes whose union is independent and
/// whose merge lowers entropy the most, until no merge is legal.
pub fn heuristic_merge_colors(g: &Graph, c: &Coloring) -> Coloring {
    let mut classes = c.classes();
    loop {
        let mut best: Option<(f64, usize, usize)> = None;
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let legal = classes[i]
                    .iter()
                    .all(|&u| classes[j].iter().all(|&v| !g.adjacent(u, v)));
                if !legal {
                    continue;
                }
                let (a, b) = (classes[i].len(), classes[j].len());
                let gain = xlogx(a + b) - xlogx(a) - xlogx(b);
                if best.is_none_or(|(g0, _, _)| gain > g0) {
                    best = Some((gain, i, j));
                }
            }
        }
        let Some((_, i, j)) = best else { break };
        let moved = classes.remove(j);
        classes[i].extend(moved);
        classes[i].sort_unstable();
    }
    Coloring::from_classes(g, &classes)
        .expect("merging independent classes keeps the coloring proper")
}

/// Gives one maximum independent set its own color when that does not raise
/// entropy, choosing the candidate set that lowers it most.
pub fn heuristic_largest_is_first(g: &Graph, c: &Coloring) -> Coloring {
    let current = c.entropy();
    let fresh = c.num_colors();
    let mut best: Option<(f64, Coloring)> = None;
    for set in maximum_independent_sets(g, DEFAULT_CAP) {
        let mut color = c.colors().to_vec();
        for &v in &set {
            color[v - 1] = fresh;
        }
        let candidate = Coloring::canonical(color);
        let h = candidate.entropy();
        if best.as_ref().is_none_or(|(b, _)| h < *b) {
            best = Some((h, candidate));
        }
    }
    match best {
        Some((h, candidate)) if h <= current => candidate,
        _ => c.clone(),
    }
}

/// Largest-independent-set recoloring followed by class merging.
pub fn apply_heuristics(g: &Graph, c: &Coloring) -> Coloring {
    heuristic_merge_colors(g, &heuristic_largest_is_first(g, c))
}

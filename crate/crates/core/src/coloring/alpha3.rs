use crate::coloring::graph::Graph;
use crate::coloring::mis::find_independent_set;
use crate::error::{Error, Result};

/// Complement statistics for graphs with α(G) ≤ 3, where every maximal
/// independent set is an isolated vertex, a triangle-free edge or a triangle
/// of the complement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha3Stats {
    /// Isolated vertices of the complement.
    pub isolated: usize,
    /// Complement edges lying in no complement triangle.
    pub lone_edges: usize,
    /// Complement triangles.
    pub triangles: usize,
    /// `(I + 2M + 3T) / n`.
    pub f: f64,
}

pub fn f_alpha3(g: &Graph) -> Result<Alpha3Stats> {
    if let Some(witness) = find_independent_set(g, 4) {
        return Err(Error::IndependenceNumberAbove3(witness));
    }
    let c = g.complement();
    let n = g.n();
    let isolated = (1..=n).filter(|&u| c.degree(u) == 0).count();

    let mut triangles = 0;
    let mut lone_edges = 0;
    for &(u, v) in c.edges() {
        let mut common = c.neighbors_bits(u).clone();
        common.intersect_with(c.neighbors_bits(v));
        if common.is_clear() {
            lone_edges += 1;
        }
        // count each triangle once, from its two smallest vertices
        triangles += common.ones().filter(|&w| w + 1 > v).count();
    }
    let f = (isolated + 2 * lone_edges + 3 * triangles) as f64 / n as f64;
    Ok(Alpha3Stats {
        isolated,
        lone_edges,
        triangles,
        f,
    })
}

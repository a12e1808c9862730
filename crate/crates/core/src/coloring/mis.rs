//! Maximal independent sets, enumerated as the maximal cliques of the
//! complement with pivoting Bron–Kerbosch.

use fixedbitset::FixedBitSet;

use crate::coloring::graph::Graph;
use crate::error::{Error, Result};
use crate::system::SetSystem;

/// Default limit on the number of maximal independent sets.
pub const DEFAULT_CAP: usize = 100_000;

struct Enumerator {
    // complement adjacency, 0-based
    co: Vec<FixedBitSet>,
    cap: usize,
    out: Vec<Vec<usize>>,
}

impl Enumerator {
    fn run(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet) -> Result<()> {
        if p.is_clear() && x.is_clear() {
            if self.out.len() == self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            let mut set: Vec<usize> = r.iter().map(|&v| v + 1).collect();
            set.sort_unstable();
            self.out.push(set);
            return Ok(());
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| (p.intersection_count(&self.co[u]), std::cmp::Reverse(u)))
            .expect("p or x nonempty");
        let mut todo = p.clone();
        todo.difference_with(&self.co[pivot]);
        for v in todo.ones() {
            let mut np = p.clone();
            np.intersect_with(&self.co[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.co[v]);
            r.push(v);
            self.run(r, np, nx)?;
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
        Ok(())
    }
}

/// Every inclusion-maximal independent set, each sorted, the list sorted
/// lexicographically. Errors when there are more than `cap`.
pub fn maximal_independent_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let co = (1..=n).map(|u| g.non_neighbors_bits(u)).collect();
    let mut e = Enumerator {
        co,
        cap,
        out: Vec::new(),
    };
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    e.run(&mut Vec::new(), p, FixedBitSet::with_capacity(n))?;
    let mut out = e.out;
    out.sort();
    Ok(out)
}

/// The implicit set cover whose sets are the maximal independent sets.
pub fn to_set_cover(g: &Graph, cap: usize) -> Result<SetSystem> {
    SetSystem::new(g.n(), maximal_independent_sets(g, cap)?)
}

/// Up to `limit` maximum independent sets (largest size), sorted.
pub fn maximum_independent_sets(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    struct Search {
        co: Vec<FixedBitSet>,
        best: usize,
        found: Vec<Vec<usize>>,
        limit: usize,
    }
    impl Search {
        fn run(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet) {
            let room = r.len() + p.count_ones(..);
            if room < self.best || (room == self.best && self.found.len() >= self.limit) {
                return;
            }
            if p.is_clear() {
                if r.len() > self.best {
                    self.best = r.len();
                    self.found.clear();
                }
                if self.found.len() < self.limit {
                    let mut s: Vec<usize> = r.iter().map(|&v| v + 1).collect();
                    s.sort_unstable();
                    self.found.push(s);
                }
                return;
            }
            let candidates: Vec<usize> = p.ones().collect();
            for v in candidates {
                let mut np = p.clone();
                np.intersect_with(&self.co[v]);
                r.push(v);
                self.run(r, np);
                r.pop();
                p.set(v, false);
                if r.len() + p.count_ones(..) < self.best {
                    break;
                }
            }
        }
    }
    let n = g.n();
    let mut s = Search {
        co: (1..=n).map(|u| g.non_neighbors_bits(u)).collect(),
        best: 0,
        found: Vec::new(),
        limit: limit.max(1),
    };
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    s.run(&mut Vec::new(), p);
    s.found.sort();
    s.found
}

/// Some independent set of exactly `k` vertices, if one exists.
pub fn find_independent_set(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, k: usize, chosen: &mut Vec<usize>, cand: &FixedBitSet) -> bool {
        if chosen.len() == k {
            return true;
        }
        if chosen.len() + cand.count_ones(..) < k {
            return false;
        }
        for v in cand.ones() {
            let mut next = cand.clone();
            next.set_range(..v + 1, false);
            next.difference_with(g.neighbors_bits(v + 1));
            chosen.push(v + 1);
            if go(g, k, chosen, &next) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut cand = FixedBitSet::with_capacity(g.n());
    cand.insert_range(..);
    let mut chosen = Vec::new();
    go(g, k, &mut chosen, &cand).then_some(chosen)
}

/// α(G), by enumeration.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_sets(g, 1).first().map_or(0, Vec::len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_graph() -> Graph {
        crate::generators::example_graph()
    }

    #[test]
    fn empty_and_complete() {
        let g = Graph::empty(5).unwrap();
        assert_eq!(
            maximal_independent_sets(&g, 10).unwrap(),
            vec![vec![1, 2, 3, 4, 5]]
        );
        let k = Graph::complete(4).unwrap();
        assert_eq!(
            maximal_independent_sets(&k, 10).unwrap(),
            vec![vec![1], vec![2], vec![3], vec![4]]
        );
        assert_eq!(to_set_cover(&k, 10).unwrap().avg_frequency(), 1.0);
    }

    #[test]
    fn fixture_sets() {
        let sets = maximal_independent_sets(&fixture_graph(), DEFAULT_CAP).unwrap();
        assert_eq!(
            sets,
            vec![vec![1, 2, 3], vec![3, 4, 6], vec![4, 5], vec![6, 7, 8]]
        );
        let sys = to_set_cover(&fixture_graph(), DEFAULT_CAP).unwrap();
        assert_eq!(sys.total_size(), 11);
        assert_eq!(sys.avg_frequency(), 1.375);
    }

    #[test]
    fn cap_is_a_hard_error() {
        let k = Graph::complete(6).unwrap();
        assert_eq!(
            maximal_independent_sets(&k, 5),
            Err(Error::CapExceeded { cap: 5 })
        );
        assert!(maximal_independent_sets(&k, 6).is_ok());
    }

    #[test]
    fn maximum_sets() {
        let g = fixture_graph();
        assert_eq!(
            maximum_independent_sets(&g, 10),
            vec![vec![1, 2, 3], vec![3, 4, 6], vec![6, 7, 8]]
        );
        assert_eq!(independence_number(&g), 3);
        assert_eq!(maximum_independent_sets(&g, 1).len(), 1);
        assert!(find_independent_set(&g, 3).is_some());
        assert_eq!(find_independent_set(&g, 4), None);
        let e = Graph::empty(6).unwrap();
        assert_eq!(find_independent_set(&e, 4), Some(vec![1, 2, 3, 4]));
    }
}

//! Brute-force oracles shared by the integration suites. They use none of the
//! library's search code.

#![allow(dead_code)]

use mesc::coloring::Graph;
use mesc::SetSystem;

/// Entropy of a histogram, written out independently of the library.
pub fn entropy_from_counts(counts: &[usize], n: usize) -> f64 {
    let n = n as f64;
    let mut h = 0.0;
    for &c in counts {
        if c > 0 {
            let p = c as f64 / n;
            h -= p * p.log2();
        }
    }
    h.max(0.0)
}

/// Full enumeration of covers in lexicographic order of the (1-based)
/// assignment vector; keeps the first cover that improves on the incumbent by
/// more than 1e-12.
pub fn naive_min_entropy_cover(system: &SetSystem) -> (Vec<usize>, f64) {
    let n = system.n();
    let options: Vec<Vec<usize>> = (1..=n)
        .map(|u| {
            (0..system.m())
                .filter(|&i| system.set(i).contains(&u))
                .map(|i| i + 1)
                .collect()
        })
        .collect();
    let mut digit = vec![0usize; n];
    let mut best: Option<(Vec<usize>, f64)> = None;
    loop {
        let assignment: Vec<usize> = (0..n).map(|u| options[u][digit[u]]).collect();
        let mut counts = vec![0usize; system.m()];
        for &s in &assignment {
            counts[s - 1] += 1;
        }
        let h = entropy_from_counts(&counts, n);
        if best.as_ref().is_none_or(|(_, b)| h < b - 1e-12) {
            best = Some((assignment, h));
        }
        // odometer, last element fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return best.unwrap();
            }
            pos -= 1;
            digit[pos] += 1;
            if digit[pos] < options[pos].len() {
                break;
            }
            digit[pos] = 0;
        }
    }
}

/// All maximal independent sets by checking every vertex subset.
pub fn brute_force_mis(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 20);
    let adj = |u: usize, v: usize| g.edges().binary_search(&(u.min(v), u.max(v))).is_ok();
    let independent = |mask: u32| {
        (0..n).all(|i| {
            mask & (1 << i) == 0 || (i + 1..n).all(|j| mask & (1 << j) == 0 || !adj(i + 1, j + 1))
        })
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if !independent(mask) {
            continue;
        }
        let maximal = (0..n).all(|v| mask & (1 << v) != 0 || !independent(mask | (1 << v)));
        if maximal {
            out.push(
                (0..n)
                    .filter(|&v| mask & (1 << v) != 0)
                    .map(|v| v + 1)
                    .collect(),
            );
        }
    }
    out.sort();
    out
}

/// Maps a proper coloring's classes to a cover over maximal independent sets
/// (each class goes to the first listed set containing it).
pub fn classes_to_cover(system: &SetSystem, classes: &[Vec<usize>]) -> Vec<usize> {
    let mut assignment = vec![0; system.n()];
    for class in classes {
        let set = (0..system.m())
            .find(|&i| class.iter().all(|v| system.set(i).contains(v)))
            .expect("class lies inside some maximal independent set");
        for &v in class {
            assignment[v - 1] = set + 1;
        }
    }
    assignment
}

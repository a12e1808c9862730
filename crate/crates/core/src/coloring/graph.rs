use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // sorted (u, v) with u < v
    edges: Vec<(usize, usize)>,
    // adj[u - 1] has bit v - 1 set iff uv is an edge
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Endpoints may be given in either order; loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            if u == 0 || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a} {b} out of range 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if adj[u - 1].contains(v - 1) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u} {v}")));
            }
            adj[u - 1].insert(v - 1);
            adj[v - 1].insert(u - 1);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].contains(v - 1)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u - 1].count_ones(..)
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Neighborhood of `u` as a 0-based bitset.
    pub(crate) fn neighbors_bits(&self, u: usize) -> &FixedBitSet {
        &self.adj[u - 1]
    }

    /// Non-neighbors of `u` other than `u` itself, 0-based.
    pub(crate) fn non_neighbors_bits(&self, u: usize) -> FixedBitSet {
        let mut s = self.adj[u - 1].clone();
        s.toggle_range(..);
        s.set(u - 1, false);
        s
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adjacent(u, v));
        Graph::new(n, edges).expect("complement of a valid graph is valid")
    }

    /// True if no two listed vertices are adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.adjacent(u, v)))
    }

    /// Renders the `GRAPH 1` format.
    pub fn to_text(&self) -> String {
        let mut out = format!("GRAPH 1\n{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, "GRAPH 1")) => {}
            Some((i, l)) => return Err(perr(i, format!("expected magic `GRAPH 1`, got `{l}`"))),
            None => return Err(perr(1, "empty input".into())),
        }
        let (hl, header) = lines
            .next()
            .ok_or_else(|| perr(2, "missing `<n> <e>` line".into()))?;
        let (n, e) = parse_pair(header).map_err(|m| perr(hl, m))?;
        let mut edges = Vec::with_capacity(e);
        for k in 0..e {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| perr(k + 3, format!("expected {e} edge lines, found {k}")))?;
            let (u, v) = parse_pair(line).map_err(|m| perr(ln, m))?;
            if u >= v {
                return Err(perr(ln, format!("edge `{line}` must satisfy u < v")));
            }
            edges.push((u, v));
        }
        if let Some((ln, l)) = lines.next() {
            return Err(perr(ln, format!("unexpected trailing content `{l}`")));
        }
        Graph::new(n, edges)
    }
}

fn parse_pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(format!("expected two integers, got `{line}`"));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| format!("bad integer `{}`", parts[0]))?;
    let b = parts[1]
        .parse()
        .map_err(|_| format!("bad integer `{}`", parts[1]))?;
    Ok((a, b))
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

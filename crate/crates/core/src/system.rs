//! Set cover instances and the `MESC 1` text format.
//!
//! Elements are 1-based. Every member set is kept as a sorted,
//! duplicate-free list so iteration order (and therefore tie-breaking in the
//! solvers) is reproducible.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One problem found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyGroundSet,
    NoSets,
    OutOfRange { set: usize, element: usize },
    Duplicate { set: usize, element: usize },
    Uncovered { element: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyGroundSet => write!(f, "ground set is empty (n = 0)"),
            Violation::NoSets => write!(f, "family contains no sets (m = 0)"),
            Violation::OutOfRange { set, element } => {
                write!(f, "set {set}: index {element} out of range")
            }
            Violation::Duplicate { set, element } => {
                write!(f, "set {set}: element {element} listed more than once")
            }
            Violation::Uncovered { element } => write!(f, "element {element} uncovered"),
        }
    }
}

/// Outcome of [`validate`]; never aborts, lists every problem found.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks raw instance data: index range, duplicates within a set and coverage.
/// Set numbers in the report are 1-based.
pub fn validate(n: usize, sets: &[Vec<usize>]) -> ValidationReport {
    let mut violations = Vec::new();
    if n == 0 {
        violations.push(Violation::EmptyGroundSet);
    }
    if sets.is_empty() {
        violations.push(Violation::NoSets);
    }
    let mut covered = vec![false; n + 1];
    for (i, set) in sets.iter().enumerate() {
        let mut seen = std::collections::BTreeSet::new();
        for &e in set {
            if e == 0 || e > n {
                violations.push(Violation::OutOfRange {
                    set: i + 1,
                    element: e,
                });
                continue;
            }
            if !seen.insert(e) {
                violations.push(Violation::Duplicate {
                    set: i + 1,
                    element: e,
                });
            }
            covered[e] = true;
        }
    }
    for (e, &c) in covered.iter().enumerate().skip(1) {
        if !c {
            violations.push(Violation::Uncovered { element: e });
        }
    }
    ValidationReport { violations }
}

/// A minimum entropy set cover instance: ground set `1..=n` and a family of
/// `m >= 1` subsets whose union is the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    n: usize,
    sets: Vec<Vec<usize>>,
    // containing[u - 1]: ascending 0-based indices of sets holding u
    containing: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Builds a system after validation. Sets are sorted; duplicates are an error.
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let report = validate(n, &sets);
        if !report.is_ok() {
            return Err(Error::InvalidSystem(report.violations));
        }
        let sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        let mut containing = vec![Vec::new(); n];
        for (i, set) in sets.iter().enumerate() {
            for &e in set {
                containing[e - 1].push(i);
            }
        }
        Ok(SetSystem {
            n,
            sets,
            containing,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Members of the set with 0-based index `i`.
    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn set_sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    /// Total size `Σ|P_i|`.
    pub fn total_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    /// 0-based indices of the sets containing element `u` (1-based), ascending.
    pub fn containing(&self, u: usize) -> &[usize] {
        &self.containing[u - 1]
    }

    pub fn contains(&self, set: usize, u: usize) -> bool {
        self.sets[set].binary_search(&u).is_ok()
    }

    /// Number of sets containing `u`.
    pub fn element_frequency(&self, u: usize) -> Result<usize> {
        if u == 0 || u > self.n {
            return Err(Error::ElementOutOfRange {
                element: u,
                n: self.n,
            });
        }
        Ok(self.containing[u - 1].len())
    }

    /// Average frequency `f = Σ|P_i| / n`.
    pub fn avg_frequency(&self) -> f64 {
        self.total_size() as f64 / self.n as f64
    }

    /// `Π_u freq(u)`, saturating; the number of distinct covers.
    pub fn cover_count(&self) -> u128 {
        self.containing
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    /// Renders the instance in the `MESC 1` format.
    pub fn to_text(&self) -> String {
        let mut out = format!("MESC 1\n{} {}\n", self.n, self.m());
        for set in &self.sets {
            let line: Vec<String> = set.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the `MESC 1` format. Rejects a wrong magic line, out-of-range or
    /// non-ascending indices and coverage failures.
    pub fn parse(text: &str) -> Result<Self> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut lines = body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
        let perr = |line: usize, message: String| Error::Parse { line, message };

        match lines.next() {
            Some(l) if l.trim() == "MESC 1" => {}
            Some(l) => return Err(perr(1, format!("expected magic `MESC 1`, got `{l}`"))),
            None => return Err(perr(1, "empty input".into())),
        }
        let header = lines
            .next()
            .ok_or_else(|| perr(2, "missing `<n> <m>` line".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(perr(2, format!("expected `<n> <m>`, got `{header}`")));
        }
        let n: usize = nums[0]
            .parse()
            .map_err(|_| perr(2, format!("bad n `{}`", nums[0])))?;
        let m: usize = nums[1]
            .parse()
            .map_err(|_| perr(2, format!("bad m `{}`", nums[1])))?;

        let mut sets = Vec::with_capacity(m);
        for i in 0..m {
            let lineno = i + 3;
            let line = lines
                .next()
                .ok_or_else(|| perr(lineno, format!("expected {m} set lines, found {i}")))?;
            let mut set = Vec::new();
            for tok in line.split_whitespace() {
                let e: usize = tok
                    .parse()
                    .map_err(|_| perr(lineno, format!("bad element `{tok}`")))?;
                if e == 0 || e > n {
                    return Err(perr(lineno, format!("index {e} out of range 1..={n}")));
                }
                if let Some(&prev) = set.last() {
                    if e <= prev {
                        return Err(perr(
                            lineno,
                            format!("indices must be strictly ascending ({prev} then {e})"),
                        ));
                    }
                }
                set.push(e);
            }
            sets.push(set);
        }
        if let Some((extra, l)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
            return Err(perr(
                m + 3 + extra,
                format!("unexpected trailing content `{l}`"),
            ));
        }
        SetSystem::new(n, sets)
    }
}

impl FromStr for SetSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetSystem::parse(s)
    }
}

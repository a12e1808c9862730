use crate::error::{Error, Result};
use crate::system::SetSystem;

/// A cover `g`: element `u` (1-based) is covered by set number `assignment()[u - 1]`
/// (also 1-based). Class sizes are the histogram `|g⁻¹(i)|` over all `m` sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverAssignment {
    assignment: Vec<usize>,
    class_sizes: Vec<usize>,
}

impl CoverAssignment {
    /// Checks that each element lies in its assigned set.
    pub fn new(system: &SetSystem, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != system.n() {
            return Err(Error::InvalidCover(format!(
                "assignment has length {}, expected {}",
                assignment.len(),
                system.n()
            )));
        }
        let mut class_sizes = vec![0; system.m()];
        for (idx, &set) in assignment.iter().enumerate() {
            let u = idx + 1;
            if set == 0 || set > system.m() {
                return Err(Error::InvalidCover(format!(
                    "element {u} assigned to nonexistent set {set}"
                )));
            }
            if !system.contains(set - 1, u) {
                return Err(Error::InvalidCover(format!(
                    "element {u} is not a member of set {set}"
                )));
            }
            class_sizes[set - 1] += 1;
        }
        Ok(CoverAssignment {
            assignment,
            class_sizes,
        })
    }

    /// Builds from 0-based set indices produced by the solvers.
    pub(crate) fn from_zero_based(system: &SetSystem, chosen: &[usize]) -> Self {
        let mut class_sizes = vec![0; system.m()];
        for &s in chosen {
            class_sizes[s] += 1;
        }
        let assignment = chosen.iter().map(|&s| s + 1).collect();
        let cover = CoverAssignment {
            assignment,
            class_sizes,
        };
        debug_assert!(CoverAssignment::new(system, cover.assignment.clone()).is_ok());
        cover
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    /// 1-based set covering element `u`.
    pub fn set_of(&self, u: usize) -> usize {
        self.assignment[u - 1]
    }

    /// Nonempty classes as sorted element lists, in set order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.class_sizes.len()];
        for (idx, &s) in self.assignment.iter().enumerate() {
            classes[s - 1].push(idx + 1);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }

    /// Shannon entropy of the class-size distribution, in bits.
    pub fn entropy(&self) -> f64 {
        crate::entropy::entropy_of_sizes(&self.class_sizes, self.n())
    }
}

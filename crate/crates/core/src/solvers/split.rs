use crate::error::{Error, Result};
use crate::system::SetSystem;

/// Partition of the ground set into the `⌈δn⌉` least frequent ("light")
/// elements and the remaining ("heavy") ones.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitReport {
    pub delta: f64,
    /// Light elements, ascending.
    pub light: Vec<usize>,
    /// Heavy elements, ascending.
    pub heavy: Vec<usize>,
    /// All elements sorted by (frequency, index).
    pub frequency_order: Vec<usize>,
}

pub(crate) fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::InvalidDelta(delta));
    }
    Ok(())
}

/// `⌈δn⌉`. Products such as `0.3 * 10` land a few ulps above the integer,
/// so values within 1e-9 of an integer are snapped before rounding up.
pub fn light_count(delta: f64, n: usize) -> usize {
    let x = delta * n as f64;
    let snapped = if (x - x.round()).abs() < 1e-9 {
        x.round()
    } else {
        x.ceil()
    };
    (snapped.max(0.0) as usize).min(n)
}

/// Heavy fraction `β = (n − ⌈δn⌉) / n`.
pub fn heavy_fraction(delta: f64, n: usize) -> f64 {
    (n - light_count(delta, n)) as f64 / n as f64
}

pub fn split_light_heavy(system: &SetSystem, delta: f64) -> Result<SplitReport> {
    check_delta(delta)?;
    let n = system.n();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&u| (system.containing(u).len(), u));
    let k = light_count(delta, n);
    let mut light = order[..k].to_vec();
    let mut heavy = order[k..].to_vec();
    light.sort_unstable();
    heavy.sort_unstable();
    Ok(SplitReport {
        delta,
        light,
        heavy,
        frequency_order: order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four() -> SetSystem {
        // frequencies (1, 1, 2, 1)
        SetSystem::new(4, vec![vec![1, 3], vec![2, 3, 4]]).unwrap()
    }

    #[test]
    fn extremes() {
        let s = four();
        let r = split_light_heavy(&s, 0.0).unwrap();
        assert!(r.light.is_empty());
        assert_eq!(r.heavy, vec![1, 2, 3, 4]);
        let r = split_light_heavy(&s, 1.0).unwrap();
        assert_eq!(r.light, vec![1, 2, 3, 4]);
        assert!(r.heavy.is_empty());
    }

    #[test]
    fn ties_by_index() {
        let s = four();
        let r = split_light_heavy(&s, 0.5).unwrap();
        assert_eq!(r.light, vec![1, 2]);
        assert_eq!(r.heavy, vec![3, 4]);
        assert_eq!(r.frequency_order, vec![1, 2, 4, 3]);
    }

    #[test]
    fn light_count_rounding() {
        assert_eq!(light_count(0.3, 10), 3);
        assert_eq!(light_count(0.7, 10), 7);
        assert_eq!(light_count(0.25, 10), 3);
        assert_eq!(light_count(0.01, 10), 1);
        assert_eq!(light_count(1.0, 7), 7);
        assert_eq!(heavy_fraction(0.5, 10), 0.5);
    }

    #[test]
    fn rejects_bad_delta() {
        let s = four();
        assert_eq!(split_light_heavy(&s, 1.5), Err(Error::InvalidDelta(1.5)));
        assert!(split_light_heavy(&s, -0.1).is_err());
        assert!(split_light_heavy(&s, f64::NAN).is_err());
    }
}

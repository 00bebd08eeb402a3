//! Target sets `S = {n1 > n2 > ... > ns >= 2}`.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A finite set of integers, all at least 2, stored strictly decreasing.
///
/// `values()[0]` is `n1`, the largest element, and `values()[s - 1]` is `ns`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpecSet {
    values: Vec<u32>,
}

impl SpecSet {
    /// Validates and sorts `values`.
    ///
    /// Unordered input is accepted and sorted; empty input, values below 2
    /// and repeated values are rejected.
    pub fn new(values: &[i64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&v) = values.iter().find(|&&v| v < 2) {
            return Err(Error::BelowTwo(v));
        }
        let mut sorted = values.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0]));
        }
        let values = sorted
            .into_iter()
            .map(|v| u32::try_from(v).map_err(|_| Error::BelowTwo(v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpecSet { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Number of elements, `s`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n_i` with the 1-based index used throughout the constructions.
    ///
    /// Panics if `i` is outside `1..=s`.
    pub fn n(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn largest(&self) -> u32 {
        self.values[0]
    }

    pub fn smallest(&self) -> u32 {
        self.values[self.values.len() - 1]
    }

    pub fn contains(&self, k: u32) -> bool {
        self.values.binary_search_by(|v| k.cmp(v)).is_ok()
    }

    /// `n1 - 1` belongs to the set, i.e. `n2 = n1 - 1`.
    pub fn has_consecutive_top(&self) -> bool {
        self.contains(self.largest() - 1)
    }

    /// `ns + 1` belongs to the set, i.e. `n_{s-1} = ns + 1`.
    pub fn has_consecutive_bottom(&self) -> bool {
        self.contains(self.smallest() + 1)
    }

    /// The set with `n_i` (1-based) removed, or `None` if that would empty it.
    pub fn without(&self, i: usize) -> Option<SpecSet> {
        if self.values.len() == 1 {
            return None;
        }
        let mut values = self.values.clone();
        values.remove(i - 1);
        Some(SpecSet { values })
    }

    /// Every nonempty subset of `{2, ..., max}`, in a fixed order.
    pub fn all_up_to(max: u32) -> Vec<SpecSet> {
        if max < 2 {
            return Vec::new();
        }
        let universe: Vec<u32> = (2..=max).collect();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << universe.len()) {
            let mut values: Vec<u32> = universe
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            values.reverse();
            out.push(SpecSet { values });
        }
        out
    }
}

impl fmt::Display for SpecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

//! Characteristics: how many holes a SwissCheese has at each level.
//!
//! Tuples are kept canonical, without trailing zeros, so that tuples which
//! differ only by padding compare and hash equal. The empty tuple is the
//! characteristic of a closed term.

use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(Vec<usize>);

impl Characteristic {
    /// Canonicalizes by dropping trailing zeros.
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Characteristic(counts)
    }

    pub fn empty() -> Self {
        Characteristic(Vec::new())
    }

    /// One hole at level 0: the characteristic of `[0]`.
    pub fn single_hole() -> Self {
        Characteristic(vec![1])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the canonical tuple.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of holes at `level` (zero past the end).
    pub fn get(&self, level: usize) -> usize {
        self.0.get(level).copied().unwrap_or(0)
    }

    /// Total number of holes.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Highest level holding a hole.
    pub fn max_level(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn head(&self) -> usize {
        self.get(0)
    }

    /// Drops level 0 and shifts every other level down by one.
    pub fn tail(&self) -> Self {
        Characteristic(self.0.get(1..).map(<[usize]>::to_vec).unwrap_or_default())
    }

    /// `x : m`, shifting every level up by one.
    pub fn cons(&self, x: usize) -> Self {
        let mut counts = Vec::with_capacity(self.0.len() + 1);
        counts.push(x);
        counts.extend_from_slice(&self.0);
        Characteristic::new(counts)
    }

    /// Adds a hole at `level`.
    pub fn inc(&self, level: usize) -> Self {
        let mut counts = self.0.clone();
        if counts.len() <= level {
            counts.resize(level + 1, 0);
        }
        counts[level] += 1;
        Characteristic(counts)
    }

    /// Removes a hole at `level`, if there is one.
    pub fn dec(&self, level: usize) -> Option<Self> {
        if self.get(level) == 0 {
            return None;
        }
        let mut counts = self.0.clone();
        counts[level] -= 1;
        Some(Characteristic::new(counts))
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Characteristic) -> Self {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut counts = long.0.clone();
        for (c, s) in counts.iter_mut().zip(&short.0) {
            *c += s;
        }
        Characteristic(counts)
    }

    /// Every way to write `self` as `q ⊕ r`, ordered lexicographically by
    /// `q` with level 0 most significant. There are `∏(m_i + 1)` of them.
    pub fn sum_splits(&self) -> SumSplits<'_> {
        SumSplits {
            whole: &self.0,
            left: Some(vec![0; self.0.len()]),
        }
    }

    /// The splits of `self` crossed with the size splits `k + (n - k) = n`,
    /// `k` ascending inside each split. This is the order in which
    /// application nodes are counted, enumerated and unranked.
    pub fn all_combinations(
        &self,
        n: usize,
    ) -> impl Iterator<Item = ((Characteristic, Characteristic), (usize, usize))> + '_ {
        self.sum_splits()
            .flat_map(move |split| (0..=n).map(move |k| (split.clone(), (k, n - k))))
    }

    /// Number of splits, `∏(m_i + 1)`.
    pub fn split_count(&self) -> usize {
        self.0.iter().map(|m| m + 1).product()
    }
}

/// Odometer over the left halves of a split.
pub struct SumSplits<'a> {
    whole: &'a [usize],
    left: Option<Vec<usize>>,
}

impl Iterator for SumSplits<'_> {
    type Item = (Characteristic, Characteristic);

    fn next(&mut self) -> Option<Self::Item> {
        let left = self.left.as_mut()?;
        let q = Characteristic::new(left.clone());
        let r = Characteristic::new(self.whole.iter().zip(left.iter()).map(|(m, q)| m - q).collect());
        // advance, last level fastest
        let mut i = left.len();
        loop {
            if i == 0 {
                self.left = None;
                break;
            }
            i -= 1;
            if left[i] < self.whole[i] {
                left[i] += 1;
                break;
            }
            left[i] = 0;
        }
        Some((q, r))
    }
}

impl Borrow<[usize]> for Characteristic {
    fn borrow(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Characteristic {
    fn from(counts: Vec<usize>) -> Self {
        Characteristic::new(counts)
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Comma-separated decimals, `""` for the empty tuple.
impl FromStr for Characteristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Characteristic::empty());
        }
        s.split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map(Characteristic::new)
            .map_err(|_| Error::Characteristic(s.to_owned()))
    }
}

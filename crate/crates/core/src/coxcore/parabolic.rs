use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

use super::permutation::Permutation;

/// A set `I` of simple-root indices in `1..n` for `sl(n)`, together with the
/// Levi block composition it determines.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    n: usize,
    indices: Vec<usize>,
}

impl ParabolicSubset {
    pub fn new(n: usize, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::OutOfRange(format!(
                "simple root index {bad} outside 1..{n}"
            )));
        }
        Ok(ParabolicSubset { n, indices })
    }

    pub fn empty(n: usize) -> Self {
        ParabolicSubset {
            n,
            indices: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        ParabolicSubset {
            n,
            indices: (1..n).collect(),
        }
    }

    /// Inverse of [`blocks`](Self::blocks): a block of size `b` starting at
    /// position `p` contributes the indices `p, ..., p + b - 2`.
    pub fn from_blocks(blocks: &[usize]) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::OutOfRange("blocks must be positive".into()));
        }
        let n = blocks.iter().sum();
        let mut indices = Vec::new();
        let mut start = 1;
        for &b in blocks {
            indices.extend(start..start + b - 1);
            start += b;
        }
        Ok(ParabolicSubset { n, indices })
    }

    /// All `2^(n-1)` subsets, in binary-counter order.
    pub fn all(n: usize) -> impl Iterator<Item = ParabolicSubset> {
        let gens = n.saturating_sub(1);
        (0u64..1 << gens).map(move |mask| ParabolicSubset {
            n,
            indices: (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Maximal runs of consecutive indices; a run of length `l` gives a
    /// block of size `l + 1`, every other position a block of size 1.
    pub fn blocks(&self) -> Vec<usize> {
        let mut blocks = Vec::new();
        let mut current = 1;
        for i in 1..self.n {
            if self.contains(i) {
                current += 1;
            } else {
                blocks.push(current);
                current = 1;
            }
        }
        if self.n > 0 {
            blocks.push(current);
        }
        blocks
    }

    /// Longest element `w_I` of the parabolic subgroup: each Levi block
    /// reversed in place.
    pub fn longest(&self) -> Permutation {
        let mut one_line = Vec::with_capacity(self.n);
        let mut start = 1;
        for b in self.blocks() {
            one_line.extend((start..start + b).rev());
            start += b;
        }
        Permutation::from_vec_unchecked(one_line)
    }

    /// `dim u_I = (n^2 - sum n_i^2) / 2`.
    pub fn nilradical_dim(&self) -> usize {
        let sq: usize = self.blocks().iter().map(|b| b * b).sum();
        (self.n * self.n - sq) / 2
    }

    /// Parse comma-separated indices; the empty string is the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(ParabolicSubset::empty(n));
        }
        let indices = text
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("parabolic subset", text))?;
        ParabolicSubset::new(n, indices)
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.indices.iter().join(","))
    }
}

//! Row insertion of sequences, permutations and integral weights into Young
//! tableaux, plus shapes and column statistics.
//!
//! Insertion bumps the leftmost entry that is *strictly* bigger than the
//! incoming one, so rows weakly increase and columns strictly increase even
//! when a weight has repeated coordinates.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::Rational64;

use crate::coxcore::Permutation;
use crate::error::{Error, Result};
pub use crate::weight::WeightVector;

/// Young tableau stored row by row, top row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau<T> {
    rows: Vec<Vec<T>>,
}

/// Standard tableau on `1..=n`.
pub type StandardTableau = YoungTableau<usize>;

impl<T> Default for YoungTableau<T> {
    fn default() -> Self {
        YoungTableau { rows: Vec::new() }
    }
}

impl<T: Ord + Clone> YoungTableau<T> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Build from rows, checking the shape and the row/column conditions.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let t = YoungTableau { rows };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(Error::Precondition(
                "rows do not form a Young tableau".into(),
            ))
        }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row-insert `x`, returning the row index where a new box was created.
    pub fn insert(&mut self, x: T) -> usize {
        let mut carry = x;
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|y| *y > carry) {
                Some(j) => carry = std::mem::replace(&mut row[j], carry),
                None => {
                    row.push(carry);
                    return r;
                }
            }
        }
        self.rows.push(vec![carry]);
        self.rows.len() - 1
    }

    /// Rows weakly increase, columns strictly increase, row lengths weakly
    /// decrease.
    pub fn is_valid(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|row| !row.is_empty() && row.windows(2).all(|w| w[0] <= w[1]));
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && shape_ok && cols_ok
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    /// Column lengths `c_1 >= c_2 >= ...`.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.shape().dual().into_parts()
    }

    /// Entries of column `j` (zero-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<T> {
        self.rows
            .iter()
            .take_while(|row| row.len() > j)
            .map(|row| row[j].clone())
            .collect()
    }

    /// `a = sum_i c_i (c_i - 1) / 2` over the column lengths.
    pub fn a_value(&self) -> usize {
        self.column_lengths()
            .iter()
            .map(|c| c * c.saturating_sub(1) / 2)
            .sum()
    }
}

impl StandardTableau {
    /// Entries are exactly `1..=n`, each once.
    pub fn is_standard(&self) -> bool {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        self.is_valid() && all.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

impl<T: fmt::Display> fmt::Display for YoungTableau<T> {
    /// `[[0,4,9],[1]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.rows
                .iter()
                .map(|row| format!("[{}]", row.iter().join(",")))
                .join(",")
        )
    }
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate partition (transpose of the diagram).
    pub fn dual(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition::from_parts_unchecked(
            (0..width)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// `(2, 1^{n-2})` for `n >= 2`: the shape of the minimal orbit.
    pub fn is_hook_two(&self) -> bool {
        self.parts.len() + 1 == self.size() && self.parts.first() == Some(&2)
    }

    /// Number of standard tableaux of this shape, by the hook length formula.
    pub fn standard_tableaux_count(&self) -> u128 {
        let dual = self.dual();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = dual.parts[j] - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        num /= hooks;
        num
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_parts_unchecked(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// `3,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("partition", s))?;
        Partition::new(parts)
    }
}

/// Insert `seq` left to right. Returns the insertion tableau and the
/// recording tableau (box created at step `k` holds `k`).
pub fn insert_sequence<T: Ord + Clone>(seq: &[T]) -> (YoungTableau<T>, StandardTableau) {
    let mut insertion = YoungTableau::empty();
    let mut recording: StandardTableau = YoungTableau::empty();
    for (k, x) in seq.iter().enumerate() {
        let row = insertion.insert(x.clone());
        if row == recording.rows.len() {
            recording.rows.push(Vec::new());
        }
        recording.rows[row].push(k + 1);
    }
    (insertion, recording)
}

/// `T(lambda)` for `lambda + rho = t`.
pub fn tableau_of_weight(t: &WeightVector) -> Result<YoungTableau<Rational64>> {
    t.require_integral()?;
    Ok(insert_sequence(t.coords()).0)
}

/// Insertion tableau of the one-line word of `w`.
pub fn tableau_of_permutation(w: &Permutation) -> StandardTableau {
    insert_sequence(w.one_line()).0
}

/// Position `i` receives the rank of `t_i`; equal coordinates are ranked
/// left to right.
pub fn rank_word(t: &WeightVector) -> Result<Permutation> {
    t.require_integral()?;
    let mut order: Vec<usize> = (0..t.len()).collect();
    // stable: ties keep their left-to-right order
    order.sort_by_key(|&i| t.get(i));
    let mut ranks = vec![0; t.len()];
    for (rank, &i) in order.iter().enumerate() {
        ranks[i] = rank + 1;
    }
    Permutation::new(ranks)
}

/// `w_lambda`, the inverse of the rank word.
pub fn weight_to_permutation(t: &WeightVector) -> Result<Permutation> {
    Ok(rank_word(t)?.inverse())
}

pub fn shape<T: Ord + Clone>(t: &YoungTableau<T>) -> Partition {
    t.shape()
}

pub fn column_lengths<T: Ord + Clone>(t: &YoungTableau<T>) -> Vec<usize> {
    t.column_lengths()
}

pub fn a_value<T: Ord + Clone>(t: &YoungTableau<T>) -> usize {
    t.a_value()
}

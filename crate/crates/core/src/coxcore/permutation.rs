use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::weight::WeightVector;

/// Element of the symmetric group `S_n` in one-line notation:
/// `one_line[i - 1] = w(i)` with values in `1..=n`.
///
/// Simple reflections `s_i` (for `1 <= i < n`) act on the right by swapping
/// positions `i, i+1` and on the left by swapping values `i, i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub(crate) fn from_vec_unchecked(one_line: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(one_line.clone()).is_ok());
        Permutation { one_line }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// `(n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    /// `s_i` as a permutation of `1..=n`.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("s_{i} in S_{n}")));
        }
        Ok(Permutation::identity(n).right_mul_simple(i))
    }

    /// The representative `(n, ..., k+1, k-1, ..., 1, k)`: decreasing
    /// `n..1` with `k` removed, followed by `k`.
    pub fn hat_word(n: usize, k: usize) -> Result<Self> {
        if k < 2 || k > n {
            return Err(Error::OutOfRange(format!(
                "hat word needs 2 <= k <= n, got n={n}, k={k}"
            )));
        }
        let mut one_line: Vec<usize> = (1..=n).rev().filter(|&v| v != k).collect();
        one_line.push(k);
        Ok(Permutation { one_line })
    }

    /// All of `S_n` in lexicographic order of the one-line notation
    /// (identity first, longest element last).
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|one_line| Permutation { one_line })
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        self.check_rank(other.n())?;
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// `w · s_i`: swap positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut one_line = self.one_line.clone();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    /// `s_i · w`: swap values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let one_line = self
            .one_line
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { one_line }
    }

    /// `{i : w(i) > w(i+1)}`, i.e. `l(w s_i) < l(w)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    /// `{i : l(s_i w) < l(w)}`: the value `i + 1` occurs before `i`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.one_line.iter().position(|&x| x == v);
        pos(i + 1) < pos(i)
    }

    /// `(left descent set, right descent set)`.
    pub fn descent_sets(&self) -> (Vec<usize>, Vec<usize>) {
        (self.left_descents(), self.right_descents())
    }

    /// Bruhat order by the lifting rule: pick `s` with `s w < w`; then
    /// `u <= w` iff `s u <= s w` when `s u < u`, else `u <= s w`. Every
    /// step lowers `w`, so the recursion is a single chain.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        self.check_rank(w.n())?;
        let mut u = self.clone();
        let mut w = w.clone();
        let mut lu = u.length();
        let mut lw = w.length();
        loop {
            if lu > lw {
                return Ok(false);
            }
            if lw == 0 {
                return Ok(lu == 0);
            }
            let s = (1..w.n())
                .find(|&i| w.has_left_descent(i))
                .expect("non-identity has a left descent");
            w = w.left_mul_simple(s);
            lw -= 1;
            if u.has_left_descent(s) {
                u = u.left_mul_simple(s);
                lu -= 1;
            }
        }
    }

    /// `(w · t)_i = t_{w^{-1}(i)}`; with this action `-(w · rho)` is the
    /// `lambda + rho` of `L_w`.
    pub fn act_on_weight(&self, t: &WeightVector) -> Result<WeightVector> {
        self.check_rank(t.len())?;
        let inv = self.inverse();
        Ok(WeightVector::new(
            (1..=self.n()).map(|i| t.get(inv.apply(i) - 1)).collect(),
        ))
    }

    /// `lambda + rho = -(w · rho)` for the simple module `L_w`.
    pub fn shifted_highest_weight(&self) -> WeightVector {
        -self
            .act_on_weight(&WeightVector::rho(self.n()))
            .expect("rho has matching rank")
    }

    fn check_rank(&self, other: usize) -> Result<()> {
        if self.n() == other {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.n(),
                right: other,
            })
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma separated one-line notation, e.g. `2,3,4,1`.
    fn from_str(s: &str) -> Result<Self> {
        let one_line = s
            .trim()
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("permutation", s))?;
        Permutation::new(one_line)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
        assert!("1,2,x".parse::<Permutation>().is_err());
    }

    #[test]
    fn compose_examples() {
        let w = p("2,3,4,1");
        let e = Permutation::identity(4);
        assert_eq!(e.compose(&w).unwrap(), w);
        assert_eq!(w.compose(&w.inverse()).unwrap(), e);
        assert_eq!(p("2,1,3").compose(&p("1,3,2")).unwrap(), p("2,3,1"));
        assert_eq!(
            w.compose(&Permutation::identity(3)),
            Err(Error::RankMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(Permutation::longest(6).length(), 15);
        assert_eq!(p("2,3,4,1").length(), 3);
    }

    #[test]
    fn descent_examples() {
        assert_eq!(Permutation::identity(4).descent_sets(), (vec![], vec![]));
        assert_eq!(p("2,3,4,1").right_descents(), vec![3]);
        assert_eq!(p("2,3,4,1").left_descents(), vec![1]);
        let w0 = Permutation::longest(5);
        assert_eq!(w0.descent_sets(), (vec![1, 2, 3, 4], vec![1, 2, 3, 4]));
    }

    #[test]
    fn simple_multiplication_conventions() {
        let w = p("3,1,2");
        let s1 = Permutation::simple_reflection(3, 1).unwrap();
        assert_eq!(w.right_mul_simple(1), w.compose(&s1).unwrap());
        assert_eq!(w.left_mul_simple(1), s1.compose(&w).unwrap());
        assert!(Permutation::simple_reflection(3, 3).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let s1s2 = p("2,3,1");
        let s2s1 = p("3,1,2");
        assert_eq!(
            Permutation::simple_reflection(3, 1)
                .unwrap()
                .compose(&Permutation::simple_reflection(3, 2).unwrap())
                .unwrap(),
            s1s2
        );
        assert!(!s1s2.bruhat_leq(&s2s1).unwrap());
        assert!(!s2s1.bruhat_leq(&s1s2).unwrap());
        for w in Permutation::all(4) {
            assert!(Permutation::identity(4).bruhat_leq(&w).unwrap());
            assert!(w.bruhat_leq(&Permutation::longest(4)).unwrap());
        }
        assert!(p("1,3,2,4").bruhat_leq(&p("3,4,1,2")).unwrap());
    }

    #[test]
    fn hat_words() {
        assert_eq!(Permutation::hat_word(5, 3).unwrap(), p("5,4,2,1,3"));
        assert_eq!(
            Permutation::hat_word(2, 2).unwrap(),
            Permutation::identity(2)
        );
        assert_eq!(Permutation::hat_word(4, 4).unwrap(), p("3,2,1,4"));
        assert!(Permutation::hat_word(4, 1).is_err());
        assert!(Permutation::hat_word(4, 5).is_err());
    }

    #[test]
    fn action_on_weights() {
        let t = WeightVector::from_integers([7, 9]);
        assert_eq!(Permutation::identity(2).act_on_weight(&t).unwrap(), t);
        assert_eq!(
            p("2,1").act_on_weight(&t).unwrap(),
            WeightVector::from_integers([9, 7])
        );
        assert_eq!(
            Permutation::hat_word(5, 3)
                .unwrap()
                .shifted_highest_weight(),
            WeightVector::from_integers([1, 0, 2, -1, -2])
        );
        assert_eq!(
            Permutation::longest(4)
                .act_on_weight(&WeightVector::rho(4))
                .unwrap(),
            -WeightVector::rho(4)
        );
    }

    #[test]
    fn enumeration_order() {
        let all: Vec<_> = Permutation::all(3).collect();
        assert_eq!(all.len(), 6);
        assert!(all[0].is_identity());
        assert_eq!(all[5], Permutation::longest(3));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

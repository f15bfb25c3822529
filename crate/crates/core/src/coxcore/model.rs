use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

use super::dihedral::{parse_dihedral, DihedralElement};
use super::permutation::Permutation;

/// A finite Coxeter group presented by explicit element enumeration.
///
/// Generators are numbered `1..=generator_count()`. Implementations must
/// satisfy `length(left_mul(s, w)) = length(w) ± 1` (same for `right_mul`)
/// and enumerate every element exactly once.
pub trait CoxeterModel {
    type Element: Clone + Eq + Hash + fmt::Display + fmt::Debug;

    /// Short identifier used in cache headers, e.g. `S4` or `I2(6)`.
    fn model_id(&self) -> String;
    fn generator_count(&self) -> usize;
    fn identity(&self) -> Self::Element;
    fn elements(&self) -> Vec<Self::Element>;
    fn left_mul(&self, s: usize, w: &Self::Element) -> Self::Element;
    fn right_mul(&self, s: usize, w: &Self::Element) -> Self::Element;
    fn length(&self, w: &Self::Element) -> usize;
    fn parse_element(&self, text: &str) -> Result<Self::Element>;
}

/// `S_n` acting through one-line permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetricGroup {
    pub n: usize,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        SymmetricGroup { n }
    }
}

impl CoxeterModel for SymmetricGroup {
    type Element = Permutation;

    fn model_id(&self) -> String {
        format!("S{}", self.n)
    }

    fn generator_count(&self) -> usize {
        self.n.saturating_sub(1)
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn elements(&self) -> Vec<Permutation> {
        Permutation::all(self.n).collect()
    }

    fn left_mul(&self, s: usize, w: &Permutation) -> Permutation {
        w.left_mul_simple(s)
    }

    fn right_mul(&self, s: usize, w: &Permutation) -> Permutation {
        w.right_mul_simple(s)
    }

    fn length(&self, w: &Permutation) -> usize {
        w.length()
    }

    fn parse_element(&self, text: &str) -> Result<Permutation> {
        let w: Permutation = text.parse()?;
        if w.n() != self.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        Ok(w)
    }
}

/// The dihedral group `I_2(m)` of order `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DihedralGroup {
    pub m: usize,
}

impl DihedralGroup {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::OutOfRange(format!("I2(m) needs m >= 2, got {m}")));
        }
        Ok(DihedralGroup { m })
    }
}

impl CoxeterModel for DihedralGroup {
    type Element = DihedralElement;

    fn model_id(&self) -> String {
        format!("I2({})", self.m)
    }

    fn generator_count(&self) -> usize {
        2
    }

    fn identity(&self) -> DihedralElement {
        DihedralElement::identity()
    }

    /// Ordered by length, then by starting generator.
    fn elements(&self) -> Vec<DihedralElement> {
        let mut out = vec![DihedralElement::identity()];
        for len in 1..self.m {
            for start in 1..=2 {
                out.push(DihedralElement::new(self.m, len, start).expect("in range"));
            }
        }
        out.push(DihedralElement::longest(self.m));
        out
    }

    fn left_mul(&self, s: usize, w: &DihedralElement) -> DihedralElement {
        w.left_mul(self.m, s)
    }

    fn right_mul(&self, s: usize, w: &DihedralElement) -> DihedralElement {
        w.right_mul(self.m, s)
    }

    fn length(&self, w: &DihedralElement) -> usize {
        w.length()
    }

    fn parse_element(&self, text: &str) -> Result<DihedralElement> {
        parse_dihedral(self.m, text)
    }
}

/// Index-based view of a finite model: multiplication tables by simple
/// reflections, lengths, inverses, descent masks and the full Bruhat order.
///
/// Elements are addressed by their position in the model's enumeration; the
/// KL engine and cell extraction work entirely on these indices.
pub struct FiniteGroup<M: CoxeterModel> {
    model: M,
    elements: Vec<M::Element>,
    index: HashMap<M::Element, usize>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    inverse: Vec<usize>,
    left_desc: Vec<u64>,
    right_desc: Vec<u64>,
    by_length: Vec<usize>,
    // bruhat[u * len + w] == (u <= w)
    bruhat: Vec<bool>,
}

impl<M: CoxeterModel> FiniteGroup<M> {
    pub fn new(model: M) -> Result<Self> {
        let elements = model.elements();
        let gens = model.generator_count();
        if gens > 64 {
            return Err(Error::OutOfRange(format!("{gens} generators")));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::Precondition(format!(
                    "{} enumerates {e} twice",
                    model.model_id()
                )));
            }
        }
        let lookup = |e: &M::Element| -> Result<usize> {
            index.get(e).copied().ok_or_else(|| {
                Error::Precondition(format!("{} is not closed: {e}", model.model_id()))
            })
        };
        let lengths: Vec<usize> = elements.iter().map(|e| model.length(e)).collect();
        let mut left = vec![Vec::with_capacity(elements.len()); gens];
        let mut right = vec![Vec::with_capacity(elements.len()); gens];
        let mut left_desc = vec![0u64; elements.len()];
        let mut right_desc = vec![0u64; elements.len()];
        for (i, e) in elements.iter().enumerate() {
            for s in 1..=gens {
                let l = lookup(&model.left_mul(s, e))?;
                let r = lookup(&model.right_mul(s, e))?;
                for &j in &[l, r] {
                    if lengths[j].abs_diff(lengths[i]) != 1 {
                        return Err(Error::Precondition(format!(
                            "{}: multiplying {e} by s{s} does not change length by one",
                            model.model_id()
                        )));
                    }
                }
                if lengths[l] < lengths[i] {
                    left_desc[i] |= 1 << (s - 1);
                }
                if lengths[r] < lengths[i] {
                    right_desc[i] |= 1 << (s - 1);
                }
                left[s - 1].push(l);
                right[s - 1].push(r);
            }
        }

        let mut by_length: Vec<usize> = (0..elements.len()).collect();
        by_length.sort_by_key(|&i| lengths[i]);
        let identity = lookup(&model.identity())?;
        if lengths[identity] != 0 {
            return Err(Error::Precondition("identity has nonzero length".into()));
        }

        // w = s v with s v > v gives w^{-1} = v^{-1} s.
        let mut inverse = vec![usize::MAX; elements.len()];
        inverse[identity] = identity;
        for &w in &by_length {
            if w == identity {
                continue;
            }
            let s = left_desc[w].trailing_zeros() as usize;
            let v = left[s][w];
            inverse[w] = right[s][inverse[v]];
        }

        let mut group = FiniteGroup {
            model,
            elements,
            index,
            left,
            right,
            lengths,
            inverse,
            left_desc,
            right_desc,
            by_length,
            bruhat: Vec::new(),
        };
        group.bruhat = group.build_bruhat();
        Ok(group)
    }

    /// Memo table of the lifting rule, filled in order of increasing
    /// `length(w)`; each column only reads the column of `s w`.
    fn build_bruhat(&self) -> Vec<bool> {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for &w in &self.by_length {
            if self.lengths[w] == 0 {
                leq[w * n + w] = true;
                continue;
            }
            let s = self.first_left_descent(w);
            let v = self.left[s][w];
            for u in 0..n {
                let su = self.left[s][u];
                leq[u * n + w] = if self.lengths[su] < self.lengths[u] {
                    leq[su * n + v]
                } else {
                    leq[u * n + v]
                };
            }
        }
        leq
    }

    pub fn model(&self) -> &M {
        &self.model
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.left.len()
    }

    pub fn element(&self, i: usize) -> &M::Element {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[M::Element] {
        &self.elements
    }

    pub fn index_of(&self, e: &M::Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn require_index(&self, e: &M::Element) -> Result<usize> {
        self.index_of(e).ok_or_else(|| {
            Error::OutOfRange(format!(
                "{e} is not an element of {}",
                self.model.model_id()
            ))
        })
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// `s w` for `s` in `1..=generator_count()`.
    pub fn left_mul(&self, s: usize, i: usize) -> usize {
        self.left[s - 1][i]
    }

    pub fn right_mul(&self, s: usize, i: usize) -> usize {
        self.right[s - 1][i]
    }

    /// Bit `s - 1` set iff `s w < w`.
    pub fn left_descent_mask(&self, i: usize) -> u64 {
        self.left_desc[i]
    }

    pub fn right_descent_mask(&self, i: usize) -> u64 {
        self.right_desc[i]
    }

    /// Zero-based generator index of the first left descent.
    pub(crate) fn first_left_descent(&self, i: usize) -> usize {
        self.left_desc[i].trailing_zeros() as usize
    }

    pub fn identity(&self) -> usize {
        self.by_length[0]
    }

    /// Unique element of maximal length.
    pub fn longest(&self) -> usize {
        *self.by_length.last().expect("groups are nonempty")
    }

    /// Element indices sorted by length (stable in enumeration order).
    pub fn by_length(&self) -> &[usize] {
        &self.by_length
    }

    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        self.bruhat[u * self.len() + w]
    }
}

impl<M: CoxeterModel> fmt::Debug for FiniteGroup<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("model", &self.model.model_id())
            .field("order", &self.len())
            .finish()
    }
}

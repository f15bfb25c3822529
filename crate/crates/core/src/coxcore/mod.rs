//! Coxeter group elements and the group-model contract.
//!
//! Two concrete models are provided: [`SymmetricGroup`] (type `A_{n-1}`,
//! one-line permutations) and [`DihedralGroup`] (`I_2(m)`, alternating
//! words). [`FiniteGroup`] turns any [`CoxeterModel`] into index-based
//! multiplication tables plus the full Bruhat order.

mod dihedral;
mod model;
mod parabolic;
mod permutation;

pub use dihedral::DihedralElement;
pub use model::{CoxeterModel, DihedralGroup, FiniteGroup, SymmetricGroup};
pub use parabolic::ParabolicSubset;
pub use permutation::Permutation;

pub use crate::weight::WeightVector;

/// `rho` for `sl(n)`.
pub fn rho(n: usize) -> WeightVector {
    WeightVector::rho(n)
}

/// Longest element of a finite model.
pub fn longest_element<M: CoxeterModel>(group: &FiniteGroup<M>) -> M::Element {
    group.element(group.longest()).clone()
}

/// Block reversal permutation `w_I`.
pub fn parabolic_longest(subset: &ParabolicSubset) -> Permutation {
    subset.longest()
}

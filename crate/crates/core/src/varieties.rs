//! Nilpotent orbits and orbital-variety labels for `sl(n)`.
//!
//! In type A the leading component of the associated variety of `L_w` is
//! determined by the insertion tableau `T(w)`, one label per right cell.
//! Two families get geometric names: the closures `B alpha_p` of the
//! minimal orbit's orbital varieties, and the nilradicals `u_I` carried by
//! right cells of Richardson elements `w_I`.

use std::fmt;

use serde::Serialize;

use crate::coxcore::{ParabolicSubset, Permutation};
use crate::error::{Error, Result};
use crate::modinv::{gkdim_weight, tableau_witness};
use crate::tableaux::{tableau_of_permutation, tableau_of_weight, Partition, StandardTableau};
use crate::weight::WeightVector;

/// Nilpotent orbit in `sl(n)` by Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NilpotentOrbitLabel {
    #[serde(serialize_with = "crate::serialize_display")]
    pub jordan_type: Partition,
}

impl NilpotentOrbitLabel {
    pub fn new(jordan_type: Partition) -> Self {
        NilpotentOrbitLabel { jordan_type }
    }

    /// `n^2 - sum (dual parts)^2`.
    pub fn dim(&self) -> usize {
        let n = self.jordan_type.size();
        let sq: usize = self.jordan_type.dual().parts().iter().map(|c| c * c).sum();
        n * n - sq
    }
}

impl fmt::Display for NilpotentOrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.jordan_type.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VarietyLabel {
    /// `closure(B alpha_p)`, an orbital variety of the minimal orbit.
    SimpleRootClosure(usize),
    /// The nilradical `u_I` of the standard parabolic `p_I`.
    Nilradical(ParabolicSubset),
    /// Generic label: the insertion tableau of the right cell.
    TableauLabel(StandardTableau),
}

impl VarietyLabel {
    /// Dimension of the variety: the GK dimension of any module carrying it.
    pub fn dim(&self, n: usize) -> usize {
        match self {
            VarietyLabel::SimpleRootClosure(_) => n - 1,
            VarietyLabel::Nilradical(subset) => subset.nilradical_dim(),
            VarietyLabel::TableauLabel(t) => {
                let sq: usize = t.column_lengths().iter().map(|c| c * c).sum();
                (n * n - sq) / 2
            }
        }
    }
}

impl fmt::Display for VarietyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyLabel::SimpleRootClosure(p) => write!(f, "Balpha({p})"),
            VarietyLabel::Nilradical(subset) => write!(f, "nilradical(I={subset})"),
            VarietyLabel::TableauLabel(t) => write!(f, "tableau({t})"),
        }
    }
}

impl Serialize for VarietyLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RichardsonData {
    #[serde(serialize_with = "crate::serialize_display")]
    pub subset: ParabolicSubset,
    pub blocks: Vec<usize>,
    pub dim_u: usize,
    #[serde(serialize_with = "crate::serialize_display")]
    pub w_i: Permutation,
    pub orbit: NilpotentOrbitLabel,
}

/// Jordan type equals the row shape of `T(w)`.
pub fn steinberg_orbit(w: &Permutation) -> NilpotentOrbitLabel {
    NilpotentOrbitLabel::new(tableau_of_permutation(w).shape())
}

pub fn orbit_dim(orbit: &NilpotentOrbitLabel, n: usize) -> Result<usize> {
    let size = orbit.jordan_type.size();
    if size != n {
        return Err(Error::RankMismatch {
            left: size,
            right: n,
        });
    }
    Ok(orbit.dim())
}

/// Position `p = s - 1` where `s` is the second-column entry of a tableau of
/// shape `(2, 1^{n-2})`: merging `s` into the first column `1..n` puts it at
/// place `k = s`.
fn hook_position(t: &StandardTableau) -> usize {
    let first = t.column(0);
    let s = t.rows()[0][1];
    let k = first.iter().filter(|&&c| c < s).count() + 1;
    k - 1
}

/// `I` with `T(w_I) = T(w)`, if any. Each right cell holds one involution,
/// so at most one subset matches. The full subset is skipped: its nilradical
/// is the zero variety, which keeps the tableau label.
fn richardson_subset(w: &Permutation, tableau: &StandardTableau) -> Option<ParabolicSubset> {
    let dual = tableau.shape().dual();
    let n = w.n();
    ParabolicSubset::all(n).find(|subset| {
        let mut blocks = subset.blocks();
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        subset.indices().len() + 1 < n
            && blocks == dual.parts()
            && tableau_of_permutation(&subset.longest()) == *tableau
    })
}

/// Label of the leading component of the associated variety of `L_w`.
///
/// Shape `(2, 1^{n-2})` gives `SimpleRootClosure`; otherwise a right cell of
/// some `w_I` with `u_I != 0` gives `Nilradical(I)`; otherwise the tableau
/// itself. The hook case is checked first because `hat(n, n)` and
/// `hat(n, 2)` are also right equivalent to Richardson elements, for blocks
/// `(n-1, 1)` and `(1, n-1)`.
pub fn orbital_variety_label(w: &Permutation) -> VarietyLabel {
    let tableau = tableau_of_permutation(w);
    if tableau.shape().is_hook_two() {
        return VarietyLabel::SimpleRootClosure(hook_position(&tableau));
    }
    match richardson_subset(w, &tableau) {
        Some(subset) => VarietyLabel::Nilradical(subset),
        None => VarietyLabel::TableauLabel(tableau),
    }
}

/// `closure(B alpha_p)` for a weight of minimal GK dimension `n - 1`, read
/// off `T(w_lambda)`.
pub fn minimal_variety_of_weight(t: &WeightVector) -> Result<VarietyLabel> {
    match tableau_witness(t)? {
        Some(witness) => Ok(VarietyLabel::SimpleRootClosure(witness.p)),
        None => Err(Error::Precondition(format!(
            "weight {t} does not have GK dimension n - 1"
        ))),
    }
}

pub fn richardson_data(subset: &ParabolicSubset) -> RichardsonData {
    let blocks = subset.blocks();
    let jordan = Partition::new(blocks.clone())
        .expect("blocks are positive")
        .dual();
    RichardsonData {
        subset: subset.clone(),
        dim_u: subset.nilradical_dim(),
        w_i: subset.longest(),
        orbit: NilpotentOrbitLabel::new(jordan),
        blocks,
    }
}

/// Coordinates strictly decrease by integers inside every Levi block.
pub fn is_block_dominant(t: &WeightVector, subset: &ParabolicSubset) -> bool {
    subset.indices().iter().all(|&i| {
        let d = t.get(i - 1) - t.get(i);
        d.is_integer() && d > num_rational::Rational64::from_integer(0)
    })
}

/// `u_I` for a module of maximal GK dimension `dim u_I` in the parabolic
/// category attached to `I`.
pub fn max_gkdim_variety(t: &WeightVector, subset: &ParabolicSubset) -> Result<VarietyLabel> {
    if t.len() != subset.n() {
        return Err(Error::RankMismatch {
            left: t.len(),
            right: subset.n(),
        });
    }
    let report = gkdim_weight(t)?;
    if !is_block_dominant(t, subset) {
        return Err(Error::Precondition(format!(
            "weight {t} is not dominant regular on the blocks of I={subset}"
        )));
    }
    let dim_u = subset.nilradical_dim();
    if report.gkdim != dim_u {
        return Err(Error::Precondition(format!(
            "GK dimension {} differs from dim u_I = {dim_u}",
            report.gkdim
        )));
    }
    let data = richardson_data(subset);
    let shape = tableau_of_weight(t)?.shape();
    if shape != data.orbit.jordan_type {
        return Err(Error::Precondition(format!(
            "tableau shape {shape} is not dual to the blocks of I={subset}"
        )));
    }
    Ok(VarietyLabel::Nilradical(subset.clone()))
}

/// `I_w = I_y`: equal insertion tableaux of the inverses.
pub fn annihilators_equal(w: &Permutation, y: &Permutation) -> Result<bool> {
    if w.n() != y.n() {
        return Err(Error::RankMismatch {
            left: w.n(),
            right: y.n(),
        });
    }
    Ok(tableau_of_permutation(&w.inverse()) == tableau_of_permutation(&y.inverse()))
}

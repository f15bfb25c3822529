//! Gelfand-Kirillov dimension of integral highest weight `sl(n)`-modules and
//! the equivalent descriptions of the minimal value `n - 1`.

use serde::Serialize;

use crate::coxcore::Permutation;
use crate::error::{Error, Result};
use crate::tableaux::{tableau_of_permutation, tableau_of_weight, weight_to_permutation};
use crate::weight::WeightVector;

/// GK dimension of `L(lambda)` read off the column lengths of `T(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GKReport {
    #[serde(serialize_with = "crate::serialize_display")]
    pub weight: WeightVector,
    pub columns: Vec<usize>,
    #[serde(rename = "a")]
    pub a_value: usize,
    pub gkdim: usize,
}

impl GKReport {
    fn from_columns(weight: WeightVector, columns: Vec<usize>) -> Self {
        let n = weight.len();
        let a_value: usize = columns.iter().map(|c| c * (c - 1) / 2).sum();
        let gkdim = n * (n - 1) / 2 - a_value;
        let report = GKReport {
            weight,
            columns,
            a_value,
            gkdim,
        };
        debug_assert_eq!(report.gkdim, report.gkdim_from_squares());
        report
    }

    /// `(n^2 - sum c_i^2) / 2`; always equal to `gkdim`.
    pub fn gkdim_from_squares(&self) -> usize {
        let n = self.weight.len();
        let sq: usize = self.columns.iter().map(|c| c * c).sum();
        (n * n - sq) / 2
    }
}

pub fn gkdim_weight(t: &WeightVector) -> Result<GKReport> {
    let tableau = tableau_of_weight(t)?;
    Ok(GKReport::from_columns(t.clone(), tableau.column_lengths()))
}

/// GK dimension of `L_w`, the simple module of highest weight
/// `-w rho - rho`, from the columns of `T(w)`.
pub fn gkdim_of_w(w: &Permutation) -> usize {
    let n = w.n();
    let sq: usize = tableau_of_permutation(w)
        .column_lengths()
        .iter()
        .map(|c| c * c)
        .sum();
    (n * n - sq) / 2
}

/// Column lengths of `T(lambda)` are exactly `(n - 1, 1)`.
pub fn is_minimal_gkdim(t: &WeightVector) -> Result<bool> {
    if t.len() < 2 {
        return Err(Error::Precondition(format!(
            "minimality needs n >= 2, got weight {t}"
        )));
    }
    let columns = tableau_of_weight(t)?.column_lengths();
    Ok(columns == [t.len() - 1, 1])
}

fn strictly_decreasing(seg: &[num_rational::Rational64]) -> bool {
    seg.windows(2).all(|w| {
        let d = w[0] - w[1];
        d.is_integer() && d > num_rational::Rational64::from_integer(0)
    })
}

/// All `p` in `1..n` such that `t` strictly decreases by integers on the
/// first `p` and on the last `n - p` coordinates.
pub fn pq_dominant_indices(t: &WeightVector) -> Vec<usize> {
    let c = t.coords();
    (1..c.len())
        .filter(|&p| strictly_decreasing(&c[..p]) && strictly_decreasing(&c[p..]))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessRoute {
    /// `(p, q)`-dominance together with the index `i_1`.
    Dominance,
    /// Position of the second-column entry of `T(w_lambda)`.
    Tableau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinimalityWitness {
    pub p: usize,
    pub i1: Option<usize>,
    pub route: WitnessRoute,
}

/// Every `p` satisfying the corollary condition: `t` is
/// `(p, n - p)`-dominant, `i_1` is the smallest index `<= p` with
/// `t_{i_1} <= t_{p+1}`, and `t_p > t_{p+2}` unless `i_1 = p` or `p + 2 > n`.
pub fn corollary_pq_witnesses(t: &WeightVector) -> Vec<MinimalityWitness> {
    let c = t.coords();
    let n = c.len();
    // 1-based access
    let at = |i: usize| c[i - 1];
    pq_dominant_indices(t)
        .into_iter()
        .filter_map(|p| {
            let i1 = (1..=p).find(|&i| at(i) <= at(p + 1))?;
            let tail_ok = i1 == p || p + 2 > n || at(p) > at(p + 2);
            tail_ok.then_some(MinimalityWitness {
                p,
                i1: Some(i1),
                route: WitnessRoute::Dominance,
            })
        })
        .collect()
}

/// The smallest-`p` corollary witness, if any.
pub fn corollary_pq_witness(t: &WeightVector) -> Option<MinimalityWitness> {
    corollary_pq_witnesses(t).into_iter().next()
}

/// The tableau route: for minimal `t`, `T(w_lambda)` has shape
/// `(2, 1^{n-2})` and its second-column entry `s` sits at place `k = s` of
/// the merged first column, giving `p = k - 1`. `None` when `t` is not
/// minimal.
pub fn tableau_witness(t: &WeightVector) -> Result<Option<MinimalityWitness>> {
    if !is_minimal_gkdim(t)? {
        return Ok(None);
    }
    let tableau = tableau_of_permutation(&weight_to_permutation(t)?);
    let s = tableau.rows()[0][1];
    let k = tableau.column(0).iter().filter(|&&c| c < s).count() + 1;
    Ok(Some(MinimalityWitness {
        p: k - 1,
        i1: None,
        route: WitnessRoute::Tableau,
    }))
}

/// 1-based positions whose removal leaves an ordered sequence. `None` when
/// `t` is already ordered (a finite-dimensional module) or when no single
/// removal works.
pub fn ordered_after_removal(t: &WeightVector) -> Option<Vec<usize>> {
    if t.is_ordered() {
        return None;
    }
    let positions: Vec<usize> = (0..t.len())
        .filter(|&j| t.without(j).is_ordered())
        .map(|j| j + 1)
        .collect();
    (!positions.is_empty()).then_some(positions)
}

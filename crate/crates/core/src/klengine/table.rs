use crate::coxcore::{CoxeterModel, FiniteGroup};
use crate::error::{Error, Result};

use super::poly::PolynomialQ;

/// All Kazhdan-Lusztig polynomials `P_{x,w}` of a finite group, with the
/// nonzero `mu(x, w)` for `x < w` indexed by `w`.
///
/// Entries are addressed by the element indices of the underlying
/// [`FiniteGroup`]; the table is immutable once built.
pub struct KLTable<M: CoxeterModel> {
    group: FiniteGroup<M>,
    // polys[x * len + w]; zero when x is not below w
    polys: Vec<PolynomialQ>,
    // mu_below[w] = [(x, mu(x, w)) : x < w, mu != 0], sorted by x
    mu_below: Vec<Vec<(usize, i64)>>,
}

/// Exponent `(l(w) - l(x) - 1) / 2` when the length difference is odd.
fn mu_degree(lx: usize, lw: usize) -> Option<usize> {
    let d = lw.checked_sub(lx)?;
    (d % 2 == 1).then(|| (d - 1) / 2)
}

impl<M: CoxeterModel> KLTable<M> {
    /// Run the recurrence over all `w` in order of increasing length.
    ///
    /// For `w` with left descent `s` and `v = s w`:
    ///
    /// ```text
    /// P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
    ///           - sum_{z : sz < z} mu(z, v) q^{(l(w) - l(z)) / 2} P_{x,z}
    /// ```
    ///
    /// with `c = 1` if `sx < x` and `c = 0` otherwise. Incomparable pairs
    /// contribute the zero polynomial.
    pub fn build(group: FiniteGroup<M>) -> Self {
        let n = group.len();
        let mut polys = vec![PolynomialQ::zero(); n * n];
        let mut mu_below: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];

        for &w in group.by_length() {
            let lw = group.length(w);
            if lw == 0 {
                polys[w * n + w] = PolynomialQ::one();
                continue;
            }
            let s = group.first_left_descent(w) + 1;
            let v = group.left_mul(s, w);
            let correction: Vec<(usize, i64)> = mu_below[v]
                .iter()
                .copied()
                .filter(|&(z, _)| group.left_descent_mask(z) >> (s - 1) & 1 == 1)
                .collect();

            for x in 0..n {
                if !group.bruhat_leq(x, w) {
                    continue;
                }
                let sx = group.left_mul(s, x);
                let c = usize::from(group.length(sx) < group.length(x));
                let mut p = polys[sx * n + v].shifted(1 - c);
                p.add_scaled_shifted(1, c, &polys[x * n + v]);
                for &(z, m) in &correction {
                    if group.bruhat_leq(x, z) {
                        let k = (lw - group.length(z)) / 2;
                        p.add_scaled_shifted(-m, k, &polys[x * n + z]);
                    }
                }
                polys[x * n + w] = p;
            }
            mu_below[w] = Self::collect_mu(&group, &polys, w);
        }

        KLTable {
            group,
            polys,
            mu_below,
        }
    }

    fn collect_mu(group: &FiniteGroup<M>, polys: &[PolynomialQ], w: usize) -> Vec<(usize, i64)> {
        let n = group.len();
        (0..n)
            .filter(|&x| x != w)
            .filter_map(|x| {
                let k = mu_degree(group.length(x), group.length(w))?;
                let m = polys[x * n + w].coeff(k);
                (m != 0).then_some((x, m))
            })
            .collect()
    }

    /// Assemble a table from externally supplied polynomials (the cache
    /// loader); `polys` must be the dense `x * len + w` layout.
    pub(crate) fn from_parts(group: FiniteGroup<M>, polys: Vec<PolynomialQ>) -> Self {
        let mu_below = (0..group.len())
            .map(|w| Self::collect_mu(&group, &polys, w))
            .collect();
        KLTable {
            group,
            polys,
            mu_below,
        }
    }

    pub fn group(&self) -> &FiniteGroup<M> {
        &self.group
    }

    pub fn model_id(&self) -> String {
        self.group.model().model_id()
    }

    /// `P_{x,w}` by index; the zero polynomial when `x` is not below `w`.
    pub fn poly_or_zero(&self, x: usize, w: usize) -> &PolynomialQ {
        &self.polys[x * self.group.len() + w]
    }

    /// `P_{x,w}` by index; incomparable pairs are a domain error.
    pub fn poly_at(&self, x: usize, w: usize) -> Result<&PolynomialQ> {
        if !self.group.bruhat_leq(x, w) {
            return Err(Error::NotBruhatBelow {
                x: self.group.element(x).to_string(),
                w: self.group.element(w).to_string(),
            });
        }
        Ok(self.poly_or_zero(x, w))
    }

    /// `mu(x, w)` for `x < w`, zero otherwise.
    pub fn mu_at(&self, x: usize, w: usize) -> i64 {
        if x == w || !self.group.bruhat_leq(x, w) {
            return 0;
        }
        match mu_degree(self.group.length(x), self.group.length(w)) {
            Some(k) => self.poly_or_zero(x, w).coeff(k),
            None => 0,
        }
    }

    /// Symmetrized `mu`: `mu(x, w)` if `x < w`, else `mu(w, x)`.
    pub fn mu_tilde_at(&self, x: usize, w: usize) -> i64 {
        if self.group.bruhat_leq(x, w) {
            self.mu_at(x, w)
        } else {
            self.mu_at(w, x)
        }
    }

    /// Nonzero `mu(x, w)` with `x < w`.
    pub fn mu_below(&self, w: usize) -> &[(usize, i64)] {
        &self.mu_below[w]
    }

    /// All `(x, w, mu)` with `x < w` and `mu(x, w) != 0`: the W-graph edges.
    pub fn mu_edges(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.mu_below
            .iter()
            .enumerate()
            .flat_map(|(w, list)| list.iter().map(move |&(x, m)| (x, w, m)))
    }

    pub fn kl_polynomial(&self, x: &M::Element, w: &M::Element) -> Result<PolynomialQ> {
        let xi = self.group.require_index(x)?;
        let wi = self.group.require_index(w)?;
        self.poly_at(xi, wi).cloned()
    }

    pub fn mu(&self, x: &M::Element, w: &M::Element) -> Result<i64> {
        let xi = self.group.require_index(x)?;
        let wi = self.group.require_index(w)?;
        Ok(self.mu_at(xi, wi))
    }

    pub fn mu_tilde(&self, x: &M::Element, w: &M::Element) -> Result<i64> {
        let xi = self.group.require_index(x)?;
        let wi = self.group.require_index(w)?;
        Ok(self.mu_tilde_at(xi, wi))
    }

    /// Pairs `(x, w)` with `x <= w`, ordered by `w` then `x`.
    pub fn comparable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.group.len();
        (0..n).flat_map(move |w| {
            (0..n)
                .filter(move |&x| self.group.bruhat_leq(x, w))
                .map(move |x| (x, w))
        })
    }
}

//! Kazhdan-Lusztig polynomials, `mu` coefficients and cells for finite
//! Coxeter groups.
//!
//! Conventions: the recurrence peels off a *left* descent `s` of `w`, and
//! `y <=_L w` is generated by `mu~(y, w) != 0` with the left descent set of
//! `y` not contained in that of `w`. Right cells use right descent sets. In
//! `S_n` this makes right cells the fibers of the insertion tableau `P(w)`
//! and left cells the fibers of `P(w^{-1})`, the recording tableau.

mod cache;
mod cells;
mod poly;
mod table;

pub use cache::{
    build_with_cache, load_cache, read_cache, read_header, save_cache, write_cache, CACHE_VERSION,
};
pub use cells::{
    cells, left_equivalent, right_equivalent, two_sided_equivalent, CellPartition, CellSide,
};
pub use poly::PolynomialQ;
pub use table::KLTable;

use crate::coxcore::CoxeterModel;
use crate::error::Result;

/// `P_{x,w}`; a domain error unless `x <= w`.
pub fn kl_polynomial<M: CoxeterModel>(
    table: &KLTable<M>,
    x: &M::Element,
    w: &M::Element,
) -> Result<PolynomialQ> {
    table.kl_polynomial(x, w)
}

/// `mu(x, w)`, zero for incomparable or equal elements.
pub fn mu<M: CoxeterModel>(table: &KLTable<M>, x: &M::Element, w: &M::Element) -> Result<i64> {
    table.mu(x, w)
}

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::coxcore::CoxeterModel;
use crate::error::{Error, Result};

use super::table::KLTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellSide {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for CellSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellSide::Left => "left",
            CellSide::Right => "right",
            CellSide::TwoSided => "two-sided",
        })
    }
}

impl FromStr for CellSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(CellSide::Left),
            "right" => Ok(CellSide::Right),
            "two-sided" | "double" => Ok(CellSide::TwoSided),
            _ => Err(Error::parse("cell side", s)),
        }
    }
}

/// Partition of a finite group into cells.
///
/// Each cell is identified by its smallest element index in the model's
/// enumeration order, so ids are stable across runs and comparable between
/// partitions computed by different methods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    side: CellSide,
    cell_of: Vec<usize>,
    members: BTreeMap<usize, Vec<usize>>,
    // cell -> cells directly below it in the cell preorder; None when the
    // partition was not derived from a preorder graph
    below: Option<BTreeMap<usize, BTreeSet<usize>>>,
}

impl CellPartition {
    fn from_components(side: CellSide, n: usize, components: Vec<Vec<usize>>) -> Self {
        let mut cell_of = vec![usize::MAX; n];
        let mut members = BTreeMap::new();
        for mut comp in components {
            comp.sort_unstable();
            let id = comp[0];
            for &x in &comp {
                cell_of[x] = id;
            }
            members.insert(id, comp);
        }
        debug_assert!(cell_of.iter().all(|&c| c != usize::MAX));
        CellPartition {
            side,
            cell_of,
            members,
            below: None,
        }
    }

    /// Cells from the W-graph of a KL table: strongly connected components
    /// of the preorder generated by `y <= w` whenever `mu~(y, w) != 0` and
    /// the descent set of `y` is not contained in that of `w` (left descents
    /// for left cells, right descents for right cells, both for two-sided).
    pub fn from_kl<M: CoxeterModel>(table: &KLTable<M>, side: CellSide) -> Self {
        let group = table.group();
        let n = group.len();
        let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(n, 0);
        let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();

        let use_left = matches!(side, CellSide::Left | CellSide::TwoSided);
        let use_right = matches!(side, CellSide::Right | CellSide::TwoSided);
        let not_subset = |a: u64, b: u64| a & !b != 0;
        let mut edges = BTreeSet::new();
        for (x, w, _) in table.mu_edges() {
            for (lo, hi) in [(x, w), (w, x)] {
                let left = use_left
                    && not_subset(group.left_descent_mask(lo), group.left_descent_mask(hi));
                let right = use_right
                    && not_subset(group.right_descent_mask(lo), group.right_descent_mask(hi));
                if left || right {
                    // hi -> lo encodes lo <= hi
                    edges.insert((hi, lo));
                }
            }
        }
        for &(a, b) in &edges {
            graph.add_edge(nodes[a], nodes[b], ());
        }

        let components = tarjan_scc(&graph)
            .into_iter()
            .map(|comp| comp.into_iter().map(|v| v.index()).collect())
            .collect();
        let mut partition = CellPartition::from_components(side, n, components);

        let mut below: BTreeMap<usize, BTreeSet<usize>> = partition
            .members
            .keys()
            .map(|&c| (c, BTreeSet::new()))
            .collect();
        for &(a, b) in &edges {
            let (ca, cb) = (partition.cell_of[a], partition.cell_of[b]);
            if ca != cb {
                below.get_mut(&ca).expect("cell exists").insert(cb);
            }
        }
        partition.below = Some(below);
        partition
    }

    /// Cells as the fibers of `key`: elements with equal keys share a cell.
    pub fn from_keys<K: Eq + Hash + Ord>(side: CellSide, keys: &[K]) -> Self {
        let mut fibers: BTreeMap<&K, Vec<usize>> = BTreeMap::new();
        for (i, k) in keys.iter().enumerate() {
            fibers.entry(k).or_default().push(i);
        }
        CellPartition::from_components(side, keys.len(), fibers.into_values().collect())
    }

    pub fn side(&self) -> CellSide {
        self.side
    }

    pub fn len(&self) -> usize {
        self.cell_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cell_of.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.members.len()
    }

    /// Canonical id of the cell containing `x`.
    pub fn cell_id(&self, x: usize) -> usize {
        self.cell_of[x]
    }

    pub fn cell_ids(&self) -> &[usize] {
        &self.cell_of
    }

    pub fn same_cell(&self, x: usize, y: usize) -> bool {
        self.cell_of[x] == self.cell_of[y]
    }

    /// `(id, members)` in increasing id order; members sorted.
    pub fn cells(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.members.iter().map(|(&id, m)| (id, m.as_slice()))
    }

    pub fn members(&self, id: usize) -> Option<&[usize]> {
        self.members.get(&id).map(Vec::as_slice)
    }

    /// Multiset of cell sizes, ascending.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.members.values().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Same blocks regardless of side or preorder.
    pub fn same_blocks(&self, other: &CellPartition) -> bool {
        self.cell_of == other.cell_of
    }

    /// Every cell of `finer` lies inside one cell of `self`.
    pub fn coarsens(&self, finer: &CellPartition) -> bool {
        finer
            .members
            .values()
            .all(|m| m.iter().all(|&x| self.cell_of[x] == self.cell_of[m[0]]))
    }

    /// Cells directly below `id` in the cell preorder, when known.
    pub fn cells_below(&self, id: usize) -> Option<&BTreeSet<usize>> {
        self.below.as_ref().and_then(|b| b.get(&id))
    }

    /// Cell `a` lies below cell `b` in the cell preorder (reflexive,
    /// transitive). `None` when the partition carries no preorder.
    pub fn cell_leq(&self, a: usize, b: usize) -> Option<bool> {
        let below = self.below.as_ref()?;
        let mut seen = BTreeSet::from([b]);
        let mut stack = vec![b];
        while let Some(c) = stack.pop() {
            if c == a {
                return Some(true);
            }
            for &d in below.get(&c)? {
                if seen.insert(d) {
                    stack.push(d);
                }
            }
        }
        Some(false)
    }
}

pub fn cells<M: CoxeterModel>(table: &KLTable<M>, side: CellSide) -> CellPartition {
    CellPartition::from_kl(table, side)
}

fn equivalent<M: CoxeterModel>(
    table: &KLTable<M>,
    side: CellSide,
    w: &M::Element,
    y: &M::Element,
) -> Result<bool> {
    let wi = table.group().require_index(w)?;
    let yi = table.group().require_index(y)?;
    if wi == yi {
        return Ok(true);
    }
    Ok(CellPartition::from_kl(table, side).same_cell(wi, yi))
}

pub fn right_equivalent<M: CoxeterModel>(
    table: &KLTable<M>,
    w: &M::Element,
    y: &M::Element,
) -> Result<bool> {
    equivalent(table, CellSide::Right, w, y)
}

pub fn left_equivalent<M: CoxeterModel>(
    table: &KLTable<M>,
    w: &M::Element,
    y: &M::Element,
) -> Result<bool> {
    equivalent(table, CellSide::Left, w, y)
}

pub fn two_sided_equivalent<M: CoxeterModel>(
    table: &KLTable<M>,
    w: &M::Element,
    y: &M::Element,
) -> Result<bool> {
    equivalent(table, CellSide::TwoSided, w, y)
}

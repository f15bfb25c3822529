//! Exhaustive and sampled cross-checks behind `klcells verify`.
//!
//! Every suite walks elements in the canonical enumeration order and records
//! failures as printable counterexamples, so reports are deterministic for a
//! fixed seed.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coxcore::{FiniteGroup, ParabolicSubset, Permutation, SymmetricGroup};
use crate::error::{Error, Result};
use crate::klengine::{cells, CellPartition, CellSide, KLTable};
use crate::modinv::{
    corollary_pq_witnesses, gkdim_of_w, gkdim_weight, is_minimal_gkdim, ordered_after_removal,
};
use crate::tableaux::{tableau_of_permutation, Partition};
use crate::varieties::{
    annihilators_equal, is_block_dominant, minimal_variety_of_weight, orbit_dim,
    orbital_variety_label, richardson_data, steinberg_orbit, VarietyLabel,
};
use crate::weight::WeightVector;

// failures beyond this are counted but not stored
const MAX_STORED_FAILURES: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Engine,
    Thm1,
    Thm2,
    Thm3,
    Corollaries,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::Engine,
        Target::Thm1,
        Target::Thm2,
        Target::Thm3,
        Target::Corollaries,
    ];

    /// Largest supported `n`.
    pub fn max_n(self, big: bool) -> usize {
        match self {
            Target::Engine | Target::Thm1 => {
                if big {
                    6
                } else {
                    5
                }
            }
            Target::Thm2 => 7,
            Target::Thm3 | Target::Corollaries => 8,
        }
    }

    pub fn default_range(self, big: bool) -> RangeInclusive<usize> {
        let lo = match self {
            Target::Engine | Target::Thm1 => 3,
            _ => 2,
        };
        lo..=self.max_n(big)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Engine => "engine",
            Target::Thm1 => "thm1",
            Target::Thm2 => "thm2",
            Target::Thm3 => "thm3",
            Target::Corollaries => "corollaries",
        })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::parse("verify target", s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub big: bool,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            big: false,
            samples: 10_000,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub target: Target,
    pub range: String,
    pub checked: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    /// Observations that are not failures, e.g. weights with several
    /// corollary witnesses.
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    fn new(target: Target, range: &RangeInclusive<usize>) -> Self {
        let range = if range.start() == range.end() {
            format!("n={}", range.start())
        } else {
            format!("n={}..{}", range.start(), range.end())
        };
        VerifyReport {
            target,
            range,
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, what: impl Into<String>) {
        self.failure_count += 1;
        if self.failures.len() < MAX_STORED_FAILURES {
            self.failures.push(what.into());
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.fail(what());
        }
    }
}

impl fmt::Display for VerifyReport {
    /// Deterministic text; the elapsed time is left out on purpose.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify {} {}: checked {}, failures {}",
            self.target, self.range, self.checked, self.failure_count
        )?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for failure in &self.failures {
            writeln!(f, "  FAIL {failure}")?;
        }
        if self.failure_count > self.failures.len() {
            writeln!(f, "  ... {} more", self.failure_count - self.failures.len())?;
        }
        Ok(())
    }
}

/// Run `target` for every `n` in `range`.
pub fn run(
    target: Target,
    range: RangeInclusive<usize>,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let max = target.max_n(opts.big);
    if range.is_empty() || *range.start() < 2 || *range.end() > max {
        return Err(Error::OutOfRange(format!(
            "verify {target} supports 2 <= n <= {max}{}",
            if opts.big || max == target.max_n(true) {
                ""
            } else {
                " (6 with --big)"
            }
        )));
    }
    let start = Instant::now();
    let mut report = VerifyReport::new(target, &range);
    for n in range {
        match target {
            Target::Engine => engine(n, &mut report),
            Target::Thm1 => thm1(n, &mut report),
            Target::Thm2 => thm2(n, &mut report),
            Target::Thm3 => thm3(n, &mut report),
            Target::Corollaries => corollaries(n, opts, &mut report),
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

pub fn symmetric_table(n: usize) -> KLTable<SymmetricGroup> {
    let group = FiniteGroup::new(SymmetricGroup::new(n)).expect("symmetric group is valid");
    KLTable::build(group)
}

fn fiber_partition<K: Eq + std::hash::Hash + Ord>(
    side: CellSide,
    group: &FiniteGroup<SymmetricGroup>,
    key: impl Fn(&Permutation) -> K,
) -> CellPartition {
    let keys: Vec<K> = group.elements().iter().map(key).collect();
    CellPartition::from_keys(side, &keys)
}

fn first_split(
    partition: &CellPartition,
    other: &CellPartition,
    group: &FiniteGroup<SymmetricGroup>,
) -> String {
    for x in 0..partition.len() {
        for y in x + 1..partition.len() {
            if partition.same_cell(x, y) != other.same_cell(x, y) {
                return format!("{} / {}", group.element(x), group.element(y));
            }
        }
    }
    "partitions differ".into()
}

fn compare_partitions(
    report: &mut VerifyReport,
    what: &str,
    n: usize,
    kl: &CellPartition,
    fibers: &CellPartition,
    group: &FiniteGroup<SymmetricGroup>,
) {
    let ok = kl.same_blocks(fibers);
    report.check(ok, || {
        format!(
            "n={n} {what}: first disagreement at {}",
            first_split(kl, fibers, group)
        )
    });
}

fn involution_count(n: usize) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for k in 2..=n {
        (a, b) = (b, b + (k - 1) * a);
    }
    if n == 0 {
        1
    } else {
        b
    }
}

/// KL cells against insertion-tableau fibers.
fn engine(n: usize, report: &mut VerifyReport) {
    let table = symmetric_table(n);
    let group = table.group();
    let right = cells(&table, CellSide::Right);
    let left = cells(&table, CellSide::Left);
    let two = cells(&table, CellSide::TwoSided);
    compare_partitions(
        report,
        "right cells vs P(w)",
        n,
        &right,
        &fiber_partition(CellSide::Right, group, tableau_of_permutation),
        group,
    );
    compare_partitions(
        report,
        "left cells vs P(w^-1)",
        n,
        &left,
        &fiber_partition(CellSide::Left, group, |w| {
            tableau_of_permutation(&w.inverse())
        }),
        group,
    );
    compare_partitions(
        report,
        "two-sided cells vs shape",
        n,
        &two,
        &fiber_partition(CellSide::TwoSided, group, |w| {
            tableau_of_permutation(w).shape()
        }),
        group,
    );
    let inv = involution_count(n);
    report.check(right.num_cells() == inv, || {
        format!("n={n}: {} right cells, expected {inv}", right.num_cells())
    });
    let parts = Partition::all(n).len();
    report.check(two.num_cells() == parts, || {
        format!(
            "n={n}: {} two-sided cells, expected {parts}",
            two.num_cells()
        )
    });
    for x in 0..group.len() {
        let xi = group.inverse(x);
        report.check(
            right.same_cell(x, group.identity()) == left.same_cell(xi, group.identity()),
            || {
                format!(
                    "n={n}: right cell of {} is not the inverse of a left cell",
                    group.element(x)
                )
            },
        );
        for &(y, _) in table.mu_below(x) {
            let p = table.poly_or_zero(y, x);
            let bound = (group.length(x) - group.length(y) - 1) / 2;
            report.check(p.coeff(0) == 1 && p.degree().unwrap_or(0) <= bound, || {
                format!("n={n}: P({}, {}) = {p}", group.element(y), group.element(x))
            });
        }
    }
    report.checked += group.len();
}

/// Labels, Steinberg orbits and annihilators against the KL cells.
fn thm1(n: usize, report: &mut VerifyReport) {
    let table = symmetric_table(n);
    let group = table.group();
    let right = cells(&table, CellSide::Right);
    let left = cells(&table, CellSide::Left);
    let two = cells(&table, CellSide::TwoSided);

    let labels: Vec<String> = group
        .elements()
        .iter()
        .map(|w| orbital_variety_label(w).to_string())
        .collect();
    compare_partitions(
        report,
        "variety labels vs right cells",
        n,
        &right,
        &CellPartition::from_keys(CellSide::Right, &labels),
        group,
    );
    compare_partitions(
        report,
        "Steinberg orbits vs two-sided cells",
        n,
        &two,
        &fiber_partition(CellSide::TwoSided, group, steinberg_orbit),
        group,
    );

    let elements = group.elements();
    for (x, w) in elements.iter().enumerate() {
        let gk = gkdim_of_w(w);
        let dim = orbit_dim(&steinberg_orbit(w), n).expect("orbit of S_n has size n");
        report.check(dim == 2 * gk, || {
            format!("n={n}: orbit dim {dim} != 2 * GKdim {gk} at {w}")
        });
        let label = orbital_variety_label(w);
        report.check(label.dim(n) == gk, || {
            format!(
                "n={n}: label {label} has dim {} but GKdim is {gk} at {w}",
                label.dim(n)
            )
        });
        for (y, v) in elements.iter().enumerate().skip(x + 1) {
            let ann = annihilators_equal(w, v).expect("same rank");
            let inv_right = right.same_cell(group.inverse(x), group.inverse(y));
            report.check(ann == left.same_cell(x, y) && ann == inv_right, || {
                format!("n={n}: annihilator test disagrees with left cells at {w} / {v}")
            });
        }
    }
    report.checked += group.len();
}

/// The GK dimension `n - 1` locus and its labels, exhaustively over `S_n`.
fn thm2(n: usize, report: &mut VerifyReport) {
    let hats: Vec<_> = (2..=n)
        .map(|k| {
            let h = Permutation::hat_word(n, k).expect("2 <= k <= n");
            (k, tableau_of_permutation(&h), h)
        })
        .collect();
    for (k, _, h) in &hats {
        let label = orbital_variety_label(h);
        report.check(label == VarietyLabel::SimpleRootClosure(k - 1), || {
            format!("n={n}: hat({n},{k}) = {h} labelled {label}")
        });
        report.check(gkdim_of_w(h) == n - 1, || {
            format!("n={n}: GKdim of hat({n},{k}) is not n - 1")
        });
    }

    let rho = WeightVector::rho(n);
    let mut minimal = 0usize;
    for w in Permutation::all(n) {
        report.checked += 1;
        let tableau = tableau_of_permutation(&w);
        let gk_min = gkdim_of_w(&w) == n - 1;
        let columns = tableau.column_lengths() == [n - 1, 1];
        let matching: Vec<usize> = hats
            .iter()
            .filter(|(_, t, _)| *t == tableau)
            .map(|(k, _, _)| *k)
            .collect();
        report.check(gk_min == columns && columns == (matching.len() == 1), || {
            format!("n={n}: {w} has GKdim-minimal {gk_min}, hook columns {columns}, hat fibers {matching:?}")
        });
        if !gk_min {
            continue;
        }
        minimal += 1;
        let k = matching[0];
        let label = orbital_variety_label(&w);
        report.check(label == VarietyLabel::SimpleRootClosure(k - 1), || {
            format!("n={n}: {w} shares T with hat({n},{k}) but is labelled {label}")
        });

        // the weight side: lambda + rho = -w rho has w_lambda = w
        let t = -w.act_on_weight(&rho).expect("same rank");
        let weight_label = minimal_variety_of_weight(&t);
        report.check(
            weight_label.as_ref() == Ok(&VarietyLabel::SimpleRootClosure(k - 1)),
            || {
                format!(
                    "n={n}: weight {t} of {w} gives {weight_label:?}, expected Balpha({})",
                    k - 1
                )
            },
        );
        for witness in corollary_pq_witnesses(&t) {
            report.check(witness.p == k - 1, || {
                format!(
                    "n={n}: weight {t} has corollary p = {} but tableau p = {}",
                    witness.p,
                    k - 1
                )
            });
        }
    }
    let expected = (n - 1) * (n - 1);
    report.check(minimal == expected, || {
        format!("n={n}: {minimal} elements of GKdim n - 1, expected {expected}")
    });
}

/// Richardson elements for every composition of `n`.
fn thm3(n: usize, report: &mut VerifyReport) {
    let table = (n <= 5).then(|| symmetric_table(n));
    let right = table.as_ref().map(|t| cells(t, CellSide::Right));
    for subset in ParabolicSubset::all(n) {
        report.checked += 1;
        let data = richardson_data(&subset);
        let tableau = tableau_of_permutation(&data.w_i);
        report.check(tableau.shape() == data.orbit.jordan_type, || {
            format!(
                "I={subset}: shape {} of T(w_I) is not dual to blocks {:?}",
                tableau.shape(),
                data.blocks
            )
        });
        report.check(gkdim_of_w(&data.w_i) == data.dim_u, || {
            format!(
                "I={subset}: GKdim of w_I differs from dim u_I = {}",
                data.dim_u
            )
        });
        report.check(orbit_dim(&data.orbit, n) == Ok(2 * data.dim_u), || {
            format!(
                "I={subset}: Richardson orbit {} has wrong dimension",
                data.orbit
            )
        });
        let label = orbital_variety_label(&data.w_i);
        let label_ok = match &label {
            VarietyLabel::Nilradical(i) => *i == subset,
            VarietyLabel::SimpleRootClosure(_) => data.orbit.jordan_type.is_hook_two(),
            VarietyLabel::TableauLabel(_) => data.dim_u == 0,
        };
        report.check(label_ok, || {
            format!("I={subset}: w_I = {} labelled {label}", data.w_i)
        });

        if let (Some(table), Some(right)) = (&table, &right) {
            let group = table.group();
            let wi = group.index_of(&data.w_i).expect("w_I lies in S_n");
            let cell = right.members(right.cell_id(wi)).expect("cell exists");
            let fiber: Vec<usize> = (0..group.len())
                .filter(|&x| tableau_of_permutation(group.element(x)) == tableau)
                .collect();
            report.check(cell == fiber.as_slice(), || {
                format!("I={subset}: KL right cell of w_I is not its tableau fiber")
            });
        }
        if n <= 6 {
            richardson_maximality(n, &subset, data.dim_u, report);
        }
    }
}

/// Over the block-dominant weights `-w rho`, the largest GK dimension is
/// `dim u_I`, and each weight attaining it carries the label `u_I`.
fn richardson_maximality(
    n: usize,
    subset: &ParabolicSubset,
    dim_u: usize,
    report: &mut VerifyReport,
) {
    let rho = WeightVector::rho(n);
    let mut best = None;
    for w in Permutation::all(n) {
        let t = -w.act_on_weight(&rho).expect("same rank");
        if !is_block_dominant(&t, subset) {
            continue;
        }
        let gk = gkdim_weight(&t).expect("integral").gkdim;
        best = best.max(Some(gk));
        if gk == dim_u {
            let label = crate::varieties::max_gkdim_variety(&t, subset);
            report.check(label.is_ok(), || {
                format!("I={subset}: weight {t}: {label:?}")
            });
        }
    }
    report.check(best == Some(dim_u), || {
        format!("I={subset}: max GKdim over dominant weights is {best:?}, dim u_I = {dim_u}")
    });
}

/// Integral weights with small entries, so that ties and near-orderings are
/// common. Half the samples are an ordered sequence with one extra term.
pub fn random_weight(rng: &mut impl Rng, n: usize) -> WeightVector {
    let span = n as i64 + 1;
    let mut coords: Vec<i64> = if n >= 2 && rng.random_bool(0.5) {
        let mut seq = Vec::with_capacity(n);
        let mut x = rng.random_range(-span..=span);
        for _ in 0..n - 1 {
            seq.push(x);
            x -= rng.random_range(1..=2);
        }
        let extra = rng.random_range(-2 * span..=span);
        seq.insert(rng.random_range(0..n), extra);
        seq
    } else {
        (0..n).map(|_| rng.random_range(-span..=span)).collect()
    };
    if rng.random_bool(0.1) {
        coords.sort_unstable();
    }
    let shift = if rng.random_bool(0.25) {
        Rational64::new(1, 2)
    } else {
        Rational64::from_integer(0)
    };
    WeightVector::new(
        coords
            .into_iter()
            .map(|c| Rational64::from_integer(c) + shift)
            .collect(),
    )
}

/// Sampled agreement of the four descriptions of GK dimension `n - 1`.
fn corollaries(n: usize, opts: &VerifyOptions, report: &mut VerifyReport) {
    // one independent stream per n
    let mut rng =
        ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut multi = 0usize;
    for _ in 0..opts.samples {
        report.checked += 1;
        let t = random_weight(&mut rng, n);
        let gk = gkdim_weight(&t).expect("samples are integral").gkdim == n - 1;
        let columns = is_minimal_gkdim(&t).expect("n >= 2");
        let witnesses = corollary_pq_witnesses(&t);
        let removal = ordered_after_removal(&t).is_some();
        report.check(
            gk == columns && gk == !witnesses.is_empty() && gk == removal,
            || {
                format!(
                    "n={n}: {t}: gkdim {gk}, columns {columns}, corollary {}, removal {removal}",
                    !witnesses.is_empty()
                )
            },
        );
        if witnesses.len() > 1 {
            multi += 1;
        }
        if gk {
            match minimal_variety_of_weight(&t) {
                Ok(VarietyLabel::SimpleRootClosure(p)) => {
                    for witness in &witnesses {
                        report.check(witness.p == p, || {
                            format!(
                                "n={n}: {t}: dominance p = {} but tableau p = {p}",
                                witness.p
                            )
                        });
                    }
                }
                other => report.fail(format!("n={n}: {t}: tableau route gave {other:?}")),
            }
        }

        let shifted = t.shifted(Rational64::from_integer(3));
        let same = gkdim_weight(&shifted).map(|r| r.gkdim) == gkdim_weight(&t).map(|r| r.gkdim)
            && corollary_pq_witnesses(&shifted) == witnesses
            && ordered_after_removal(&shifted) == ordered_after_removal(&t);
        report.check(same, || format!("n={n}: {t}: outputs change under a shift"));
    }
    if multi > 0 {
        report.notes.push(format!(
            "n={n}: {multi} weights with several corollary witnesses"
        ));
    }
}

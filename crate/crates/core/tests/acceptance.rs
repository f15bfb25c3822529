//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
//! Set `KLCELLS_BIG=1` to add `S_6` to the engine check.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use klcells::coxcore::{DihedralGroup, FiniteGroup, ParabolicSubset, Permutation, SymmetricGroup};
use klcells::klengine::{cells, CellPartition, CellSide, KLTable, PolynomialQ};
use klcells::modinv::gkdim_of_w;
use klcells::tableaux::{rank_word, tableau_of_permutation};
use klcells::varieties::{
    annihilators_equal, minimal_variety_of_weight, orbit_dim, orbital_variety_label,
    steinberg_orbit, VarietyLabel,
};
use klcells::verify::{run, symmetric_table, Target, VerifyOptions};
use klcells::weight::WeightVector;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fibers(
    table: &KLTable<SymmetricGroup>,
    side: CellSide,
    key: impl Fn(&Permutation) -> String,
) -> CellPartition {
    let keys: Vec<String> = table.group().elements().iter().map(key).collect();
    CellPartition::from_keys(side, &keys)
}

struct Tables {
    s: Vec<KLTable<SymmetricGroup>>,
}

impl Tables {
    fn get(&self, n: usize) -> &KLTable<SymmetricGroup> {
        &self.s[n - 1]
    }
}

fn engine(tables: &Tables) -> Outcome {
    let big = std::env::var_os("KLCELLS_BIG").is_some();
    let mut ns = vec![3, 4, 5];
    let extra = big.then(|| symmetric_table(6));
    if big {
        ns.push(6);
    }
    for n in ns {
        let table = if n == 6 {
            extra.as_ref().unwrap()
        } else {
            tables.get(n)
        };
        let rs = fibers(table, CellSide::Right, |w| {
            tableau_of_permutation(w).to_string()
        });
        let kl = cells(table, CellSide::Right);
        ensure(kl.same_blocks(&rs), || {
            format!("n={n}: KL right cells differ from P-fibers")
        })?;
        ensure(table.group().len() == (1..=n).product(), || {
            format!("n={n}: wrong order")
        })?;
    }
    Ok(if big {
        "n=3..6".into()
    } else {
        "n=3..5 (n=6 behind KLCELLS_BIG)".into()
    })
}

fn counts(tables: &Tables) -> Outcome {
    for (n, right, two) in [(3, 4, 3), (4, 10, 5), (5, 26, 7)] {
        let t = tables.get(n);
        let r = cells(t, CellSide::Right).num_cells();
        let d = cells(t, CellSide::TwoSided).num_cells();
        ensure(r == right && d == two, || {
            format!("n={n}: {r} right, {d} two-sided")
        })?;
    }
    let i26 = KLTable::build(FiniteGroup::new(DihedralGroup::new(6).unwrap()).unwrap());
    let l = cells(&i26, CellSide::Left).num_cells();
    let d = cells(&i26, CellSide::TwoSided).num_cells();
    ensure(l == 4 && d == 3, || {
        format!("I2(6): {l} left, {d} two-sided")
    })?;
    Ok("S3/S4/S5 right 4/10/26, two-sided 3/5/7; I2(6) left 4, two-sided 3".into())
}

fn kl_values(tables: &Tables) -> Outcome {
    let s3 = tables.get(3);
    for (x, w) in s3.comparable_pairs().collect::<Vec<_>>() {
        ensure(*s3.poly_or_zero(x, w) == PolynomialQ::one(), || {
            "S3 has P != 1".into()
        })?;
    }
    let s4 = tables.get(4);
    let distinct: BTreeSet<String> = s4
        .comparable_pairs()
        .map(|(x, w)| s4.poly_or_zero(x, w).to_string())
        .filter(|p| p != "1")
        .collect();
    ensure(distinct.len() == 1 && distinct.contains("1+q"), || {
        format!("S4 nontrivial polynomials {distinct:?}")
    })?;
    let x: Permutation = "1,3,2,4".parse().unwrap();
    let w: Permutation = "3,4,1,2".parse().unwrap();
    let p = s4.kl_polynomial(&x, &w).map_err(|e| e.to_string())?;
    ensure(p.to_string() == "1+q", || format!("P(1324, 3412) = {p}"))?;

    let mut oracle = common::RPolynomialOracle::new();
    ensure(oracle.kl_column(&w)[&x] == vec![1, 1], || {
        "oracle disagrees at (1324, 3412)".into()
    })?;
    for n in [3, 4] {
        let table = tables.get(n);
        for w in Permutation::all(n) {
            for (x, poly) in oracle.kl_column(&w) {
                let got = table.kl_polynomial(&x, &w).map_err(|e| e.to_string())?;
                ensure(got.coeffs() == poly.as_slice(), || {
                    format!("oracle disagrees at ({x}, {w})")
                })?;
            }
        }
    }
    Ok("S3 all 1; S4 only 1+q, at (1324, 3412) among others; R-polynomial oracle agrees".into())
}

fn minimal_locus_permutations() -> Outcome {
    let mut total = 0;
    for n in 2..=7 {
        let hats: Vec<_> = (2..=n)
            .map(|k| tableau_of_permutation(&Permutation::hat_word(n, k).unwrap()))
            .collect();
        let mut count = 0;
        for w in Permutation::all(n) {
            let minimal = gkdim_of_w(&w) == n - 1;
            let in_union = hats.contains(&tableau_of_permutation(&w));
            ensure(minimal == in_union, || {
                format!("n={n}: {w} GKdim-minimal {minimal}, in hat fibers {in_union}")
            })?;
            count += usize::from(minimal);
        }
        ensure(count == (n - 1) * (n - 1), || {
            format!("n={n}: {count} minimal elements")
        })?;
        for k in 2..=n {
            let label = orbital_variety_label(&Permutation::hat_word(n, k).unwrap());
            ensure(label == VarietyLabel::SimpleRootClosure(k - 1), || {
                format!("hat({n},{k}) labelled {label}")
            })?;
        }
        total += count;
    }
    let report = run(Target::Thm2, 2..=7, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_string())?;
    Ok(format!(
        "n=2..7, {total} minimal elements, all (n-1)^2; hat(n,k) -> Balpha(k-1)"
    ))
}

fn minimal_locus_weights() -> Outcome {
    let opts = VerifyOptions::default();
    let report = run(Target::Corollaries, 2..=8, &opts).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_string())?;
    Ok(format!(
        "{} seeded weights (seed {}), n=2..8",
        report.checked, opts.seed
    ))
}

fn worked_examples() -> Outcome {
    let w = |v: &[i64]| WeightVector::from_integers(v.iter().copied());
    let r = rank_word(&w(&[1, 4, 9, 0])).map_err(|e| e.to_string())?;
    ensure(r.to_string() == "2,3,4,1", || {
        format!("rank word of (1,4,9,0) is {r}")
    })?;
    let r = rank_word(&w(&[1, 4, 9, 1, 0])).map_err(|e| e.to_string())?;
    ensure(r.to_string() == "2,4,5,3,1", || {
        format!("rank word of (1,4,9,1,0) is {r}")
    })?;
    let hat = Permutation::hat_word(5, 3).unwrap();
    let t = -hat.act_on_weight(&WeightVector::rho(5)).unwrap();
    ensure(t == w(&[1, 0, 2, -1, -2]), || {
        format!("-hat(5,3) rho = {t}")
    })?;
    let label = minimal_variety_of_weight(&t).map_err(|e| e.to_string())?;
    ensure(label.to_string() == "Balpha(2)", || {
        format!("label of {t} is {label}")
    })?;
    ensure(orbital_variety_label(&hat) == label, || {
        "permutation and weight labels differ".into()
    })?;
    Ok("(1,4,9,0) -> 2,3,4,1; (1,4,9,1,0) -> 2,4,5,3,1; (1,0,2,-1,-2) -> Balpha(2)".into())
}

fn richardson_elements(tables: &Tables) -> Outcome {
    let mut compositions = 0;
    for n in 1..=8 {
        for subset in ParabolicSubset::all(n) {
            compositions += 1;
            let data = klcells::varieties::richardson_data(&subset);
            let shape = tableau_of_permutation(&data.w_i).shape();
            ensure(shape == data.orbit.jordan_type, || {
                format!("I={subset}: shape {shape}")
            })?;
            ensure(gkdim_of_w(&data.w_i) == data.dim_u, || {
                format!("I={subset}: GKdim")
            })?;
            ensure(orbit_dim(&data.orbit, n) == Ok(2 * data.dim_u), || {
                format!("I={subset}: orbit dim")
            })?;
            if n <= 5 {
                let table = tables.get(n);
                let g = table.group();
                let right = cells(table, CellSide::Right);
                let wi = g.index_of(&data.w_i).unwrap();
                let cell: Vec<&Permutation> = right
                    .members(right.cell_id(wi))
                    .unwrap()
                    .iter()
                    .map(|&x| g.element(x))
                    .collect();
                let t = tableau_of_permutation(&data.w_i);
                let fiber: Vec<&Permutation> = g
                    .elements()
                    .iter()
                    .filter(|w| tableau_of_permutation(w) == t)
                    .collect();
                ensure(cell == fiber, || {
                    format!("I={subset}: KL right cell is not the fiber")
                })?;
            }
        }
    }
    ensure(compositions == 255, || {
        format!("{compositions} compositions")
    })?;
    let report = run(Target::Thm3, 2..=8, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_string())?;
    Ok(format!(
        "{compositions} compositions of n=1..8 (128 at n=8)"
    ))
}

fn steinberg(tables: &Tables) -> Outcome {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            let dim = orbit_dim(&steinberg_orbit(&w), n).map_err(|e| e.to_string())?;
            ensure(dim == 2 * gkdim_of_w(&w), || {
                format!("{w}: orbit dim {dim}")
            })?;
        }
    }
    for n in 1..=5 {
        let table = tables.get(n);
        let st = fibers(table, CellSide::TwoSided, |w| {
            steinberg_orbit(w).to_string()
        });
        ensure(cells(table, CellSide::TwoSided).same_blocks(&st), || {
            format!("n={n}: Steinberg fibers differ from two-sided cells")
        })?;
    }
    Ok("dimension identity n<=6; fibers = two-sided cells n<=5".into())
}

fn annihilators(tables: &Tables) -> Outcome {
    for n in 1..=5 {
        let table = tables.get(n);
        let g = table.group();
        let left = cells(table, CellSide::Left);
        let right = cells(table, CellSide::Right);
        for x in 0..g.len() {
            for y in 0..g.len() {
                let ann =
                    annihilators_equal(g.element(x), g.element(y)).map_err(|e| e.to_string())?;
                ensure(ann == left.same_cell(x, y), || {
                    format!("n={n}: left cell mismatch")
                })?;
                ensure(ann == right.same_cell(g.inverse(x), g.inverse(y)), || {
                    format!("n={n}: inverse right cell mismatch")
                })?;
            }
        }
    }
    Ok("annihilator fibers = KL left cells and inverse right cells, n<=5".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let tables = Tables {
        s: (1..=5).map(symmetric_table).collect(),
    };
    let criteria: Vec<Criterion> = vec![
        ("engine correctness", Box::new(|| engine(&tables))),
        ("cell counts", Box::new(|| counts(&tables))),
        ("KL spot values", Box::new(|| kl_values(&tables))),
        (
            "minimal GK dimension, permutations",
            Box::new(minimal_locus_permutations),
        ),
        (
            "minimal GK dimension, weights",
            Box::new(minimal_locus_weights),
        ),
        ("worked examples", Box::new(worked_examples)),
        (
            "Richardson elements",
            Box::new(|| richardson_elements(&tables)),
        ),
        ("Steinberg coherence", Box::new(|| steinberg(&tables))),
        (
            "annihilators and left cells",
            Box::new(|| annihilators(&tables)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail} [{:.2?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Plain-text persistence for KL tables.
//!
//! ```text
//! KLCACHE 1 S4
//! 1,2,3,4;1,2,3,4;1
//! 1,3,2,4;3,4,1,2;1,1
//! ```
//!
//! One record `x;w;c0,c1,...` per Bruhat-comparable pair. A cache is only an
//! optimization: loading validates the header and the exact set of pairs
//! against the freshly built group.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::coxcore::{CoxeterModel, FiniteGroup};
use crate::error::{Error, Result};

use super::poly::PolynomialQ;
use super::table::KLTable;

pub const CACHE_VERSION: u32 = 1;

pub fn write_cache<M: CoxeterModel, W: Write>(table: &KLTable<M>, mut out: W) -> Result<()> {
    writeln!(out, "KLCACHE {CACHE_VERSION} {}", table.model_id())?;
    let group = table.group();
    for (x, w) in table.comparable_pairs() {
        writeln!(
            out,
            "{};{};{}",
            group.element(x),
            group.element(w),
            table.poly_or_zero(x, w).coeffs_string()
        )?;
    }
    Ok(())
}

pub fn save_cache<M: CoxeterModel>(table: &KLTable<M>, path: &Path) -> Result<()> {
    let file = fs::File::create(path)?;
    let mut out = std::io::BufWriter::new(file);
    write_cache(table, &mut out)?;
    out.flush()?;
    Ok(())
}

/// Header of a cache file: `(version, model id)`.
pub fn read_header<R: BufRead>(input: &mut R) -> Result<(u32, String)> {
    let mut line = String::new();
    input.read_line(&mut line)?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next(), parts.next()) {
        (Some("KLCACHE"), Some(version), Some(model), None) => {
            let version = version
                .parse()
                .map_err(|_| Error::Cache(format!("bad version in header {line:?}")))?;
            Ok((version, model.to_string()))
        }
        _ => Err(Error::Cache(format!("bad header {:?}", line.trim_end()))),
    }
}

pub fn read_cache<M: CoxeterModel, R: BufRead>(
    group: FiniteGroup<M>,
    mut input: R,
) -> Result<KLTable<M>> {
    let (version, model) = read_header(&mut input)?;
    if version != CACHE_VERSION {
        return Err(Error::Cache(format!("unsupported version {version}")));
    }
    let expected = group.model().model_id();
    if model != expected {
        return Err(Error::Cache(format!(
            "cache is for {model}, wanted {expected}"
        )));
    }

    let n = group.len();
    let mut polys = vec![PolynomialQ::zero(); n * n];
    let mut seen = vec![false; n * n];
    let mut records = 0usize;
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |why: &str| Error::Cache(format!("line {}: {why}: {line:?}", lineno + 2));
        let fields: Vec<&str> = line.split(';').collect();
        if fields.len() != 3 {
            return Err(bad("expected x;w;coefficients"));
        }
        let x = group
            .model()
            .parse_element(fields[0])
            .ok()
            .and_then(|e| group.index_of(&e))
            .ok_or_else(|| bad("unknown x"))?;
        let w = group
            .model()
            .parse_element(fields[1])
            .ok()
            .and_then(|e| group.index_of(&e))
            .ok_or_else(|| bad("unknown w"))?;
        if !group.bruhat_leq(x, w) {
            return Err(bad("pair is not Bruhat comparable"));
        }
        if std::mem::replace(&mut seen[x * n + w], true) {
            return Err(bad("duplicate pair"));
        }
        let p = PolynomialQ::parse_coeffs(fields[2]).map_err(|_| bad("bad coefficients"))?;
        if p.coeff(0) != 1 {
            return Err(bad("constant term must be 1"));
        }
        polys[x * n + w] = p;
        records += 1;
    }
    let comparable = (0..n * n)
        .filter(|&i| group.bruhat_leq(i / n, i % n))
        .count();
    if records != comparable {
        return Err(Error::Cache(format!(
            "cache has {records} records, group has {comparable} comparable pairs"
        )));
    }
    Ok(KLTable::from_parts(group, polys))
}

pub fn load_cache<M: CoxeterModel>(group: FiniteGroup<M>, path: &Path) -> Result<KLTable<M>> {
    let file = fs::File::open(path)?;
    read_cache(group, BufReader::new(file))
}

/// Load `path` if it exists, otherwise build the table and write it there.
pub fn build_with_cache<M: CoxeterModel>(group: FiniteGroup<M>, path: &Path) -> Result<KLTable<M>> {
    if path.exists() {
        load_cache(group, path)
    } else {
        let table = KLTable::build(group);
        save_cache(&table, path)?;
        Ok(table)
    }
}

//! On-disk copy of the oracle tables.
//!
//! The file is JSON: a header `{format_version, oracle_ceiling}` followed by one
//! row per `n` holding the nonzero rank and crank counts as decimal strings.
//! A header that differs from the request means a full recompute.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context as _, Result};
use qdissect::oracle::{gf_stats, Provenance, StatTables};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    oracle_ceiling: usize,
    rows: Vec<Row>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Row {
    n: usize,
    rank: BTreeMap<i64, String>,
    crank: BTreeMap<i64, String>,
    spt: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheState {
    Hit,
    /// Missing, unreadable, or written for a different version or ceiling.
    Rebuilt,
}

fn sparse(row: &[i128], n: usize) -> BTreeMap<i64, String> {
    row.iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i as i64 - n as i64, c.to_string()))
        .collect()
}

fn dense(map: &BTreeMap<i64, String>, n: usize) -> Result<Vec<i128>> {
    let mut row = vec![0i128; 2 * n + 1];
    for (&m, c) in map {
        let i = m + n as i64;
        if i < 0 || i as usize >= row.len() {
            bail!("statistic {m} out of range at n = {n}");
        }
        row[i as usize] = c.parse().with_context(|| format!("bad count {c:?}"))?;
    }
    Ok(row)
}

fn encode(t: &StatTables) -> Result<CacheFile> {
    let rows = (0..=t.max_n())
        .map(|n| {
            Ok(Row {
                n,
                rank: sparse(t.rank_row(n)?, n),
                crank: sparse(t.crank_row(n)?, n),
                spt: t.spt(n)?.to_string(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(CacheFile {
        format_version: FORMAT_VERSION,
        oracle_ceiling: t.max_n(),
        rows,
    })
}

fn decode(file: CacheFile, ceiling: usize) -> Result<StatTables> {
    if file.format_version != FORMAT_VERSION || file.oracle_ceiling != ceiling {
        bail!("cache header does not match");
    }
    if file.rows.len() != ceiling + 1 {
        bail!("cache holds {} rows, expected {}", file.rows.len(), ceiling + 1);
    }
    let (mut rank, mut crank, mut spt) = (Vec::new(), Vec::new(), Vec::new());
    for (n, row) in file.rows.iter().enumerate() {
        if row.n != n {
            bail!("cache rows out of order at {n}");
        }
        rank.push(dense(&row.rank, n)?);
        crank.push(dense(&row.crank, n)?);
        spt.push(row.spt.parse().with_context(|| format!("bad spt {:?}", row.spt))?);
    }
    Ok(StatTables::from_rows(Provenance::GeneratingFunction, rank, crank, spt)?)
}

fn read(path: &Path, ceiling: usize) -> Result<StatTables> {
    let text = fs::read_to_string(path)?;
    decode(serde_json::from_str(&text)?, ceiling)
}

/// Loads the tables from `path`, or computes and writes them.
pub fn load_or_build(path: Option<&Path>, ceiling: usize) -> Result<(StatTables, CacheState)> {
    if let Some(p) = path {
        if let Ok(t) = read(p, ceiling) {
            return Ok((t, CacheState::Hit));
        }
    }
    let t = gf_stats(ceiling)?;
    if let Some(p) = path {
        let text = serde_json::to_string(&encode(&t)?)?;
        fs::write(p, text).with_context(|| format!("cannot write cache {}", p.display()))?;
    }
    Ok((t, CacheState::Rebuilt))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t = gf_stats(12).unwrap();
        let back = decode(encode(&t).unwrap(), 12).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn header_mismatch_is_rejected() {
        let t = gf_stats(5).unwrap();
        let mut f = encode(&t).unwrap();
        assert!(decode(encode(&t).unwrap(), 6).is_err());
        f.format_version += 1;
        assert!(decode(f, 5).is_err());
    }
}

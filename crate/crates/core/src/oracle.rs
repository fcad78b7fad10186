//! Ground truth for partition statistics.
//!
//! Two independent routes fill the same [`StatTables`]:
//! [`enumerate_stats`] walks every partition and evaluates rank, crank and
//! smallest-part counts directly, while [`gf_stats`] expands the bivariate
//! rank and crank generating functions and the spt generating function.
//! The routes share no arithmetic, so agreement between them is evidence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::series::LaurentSeries;

/// Largest `n` accepted by [`enumerate_stats`].
pub const ENUMERATION_CEILING: usize = 60;
/// Largest `n` accepted by [`gf_stats`]; beyond this intermediate counts can overflow `i128`.
pub const GF_CEILING: usize = 500;
/// Default table size used by the verification suites.
pub const DEFAULT_ORACLE_CEILING: usize = 350;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration ceiling {ceiling} exceeded by n = {requested}; use the generating function path")]
    EnumerationCeiling { requested: usize, ceiling: usize },
    #[error("generating function ceiling {ceiling} exceeded by n = {requested}")]
    GfCeiling { requested: usize, ceiling: usize },
    #[error("n = {n} beyond table size {max_n}")]
    OutOfRange { n: usize, max_n: usize },
    #[error("moment order {0} is odd")]
    OddMoment(u32),
    #[error("invalid residue class {a} mod {r}")]
    BadResidue { a: i64, r: i64 },
    #[error("arithmetic overflow at n = {0}")]
    Overflow(usize),
    #[error("malformed tables: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Enumeration,
    GeneratingFunction,
}

/// Rank, crank and spt counts for every `n <= max_n`.
///
/// Row `n` of the rank and crank tables has length `2n + 1`; entry `m + n`
/// counts partitions of `n` with statistic `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTables {
    max_n: usize,
    provenance: Provenance,
    p: Vec<i128>,
    rank: Vec<Vec<i128>>,
    crank: Vec<Vec<i128>>,
    spt: Vec<i128>,
}

impl StatTables {
    /// Assembles tables from raw rows, checking their shapes.
    pub fn from_rows(
        provenance: Provenance,
        rank: Vec<Vec<i128>>,
        crank: Vec<Vec<i128>>,
        spt: Vec<i128>,
    ) -> Result<Self> {
        if rank.is_empty() || rank.len() != crank.len() || rank.len() != spt.len() {
            return Err(OracleError::Malformed("row counts differ".into()));
        }
        for (n, (r, c)) in rank.iter().zip(&crank).enumerate() {
            if r.len() != 2 * n + 1 || c.len() != 2 * n + 1 {
                return Err(OracleError::Malformed(format!("row {n} has wrong width")));
            }
        }
        let p = rank.iter().map(|row| row.iter().sum()).collect();
        Ok(StatTables {
            max_n: rank.len() - 1,
            provenance,
            p,
            rank,
            crank,
            spt,
        })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(OracleError::OutOfRange { n, max_n: self.max_n })
        } else {
            Ok(())
        }
    }

    pub fn p(&self, n: usize) -> Result<i128> {
        self.check(n)?;
        Ok(self.p[n])
    }

    pub fn spt(&self, n: usize) -> Result<i128> {
        self.check(n)?;
        Ok(self.spt[n])
    }

    /// `N(m, n)`.
    pub fn rank_count(&self, m: i64, n: usize) -> Result<i128> {
        self.check(n)?;
        Ok(lookup(&self.rank[n], m, n))
    }

    /// `M(m, n)`, with the conventional values at `n <= 1`.
    pub fn crank_count(&self, m: i64, n: usize) -> Result<i128> {
        self.check(n)?;
        Ok(lookup(&self.crank[n], m, n))
    }

    pub fn rank_row(&self, n: usize) -> Result<&[i128]> {
        self.check(n)?;
        Ok(&self.rank[n])
    }

    pub fn crank_row(&self, n: usize) -> Result<&[i128]> {
        self.check(n)?;
        Ok(&self.crank[n])
    }
}

fn lookup(row: &[i128], m: i64, n: usize) -> i128 {
    let i = m + n as i64;
    if i < 0 || i as usize >= row.len() {
        0
    } else {
        row[i as usize]
    }
}

/// Which statistic a class count or moment refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Rank,
    Crank,
}

impl StatTables {
    fn row(&self, stat: Statistic, n: usize) -> Result<&[i128]> {
        match stat {
            Statistic::Rank => self.rank_row(n),
            Statistic::Crank => self.crank_row(n),
        }
    }
}

/// `N(a, r, n)` or `M(a, r, n)`: partitions of `n` with statistic `= a (mod r)`.
pub fn class_count(tables: &StatTables, stat: Statistic, a: i64, r: i64, n: usize) -> Result<i128> {
    if r < 1 || !(0..r).contains(&a) {
        return Err(OracleError::BadResidue { a, r });
    }
    let row = tables.row(stat, n)?;
    Ok(row
        .iter()
        .enumerate()
        .filter(|(i, _)| (*i as i64 - n as i64).rem_euclid(r) == a)
        .map(|(_, c)| c)
        .sum())
}

/// `sum_m m^k N(m, n)` or the crank analogue, for even `k`.
pub fn moments(tables: &StatTables, stat: Statistic, k: u32, n: usize) -> Result<BigInt> {
    if k % 2 == 1 {
        return Err(OracleError::OddMoment(k));
    }
    let row = tables.row(stat, n)?;
    let mut total = BigInt::zero();
    for (i, &c) in row.iter().enumerate() {
        if c != 0 {
            let m = BigInt::from(i as i64 - n as i64);
            total += m.pow(k) * c;
        }
    }
    Ok(total)
}

/// `n p(n) - N_2(n) / 2`.
pub fn spt_via_identity(tables: &StatTables, n: usize) -> Result<BigInt> {
    let n2 = moments(tables, Statistic::Rank, 2, n)?;
    Ok(BigInt::from(n) * tables.p(n)? - n2 / 2)
}

fn deviation(tables: &StatTables, stat: Statistic, a: i64, r: i64, order: usize) -> Result<LaurentSeries> {
    if order == 0 || order > tables.max_n + 1 {
        return Err(OracleError::OutOfRange {
            n: order.saturating_sub(1),
            max_n: tables.max_n,
        });
    }
    let coeffs = (0..order)
        .map(|n| {
            let count = class_count(tables, stat, a, r, n)?;
            Ok(BigRational::from_integer(count.into())
                - BigRational::new(tables.p(n)?.into(), r.into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LaurentSeries::new(0, coeffs).expect("nonempty window"))
}

/// `D(a, r) = sum_n (N(a, r, n) - p(n)/r) q^n` below `order`.
pub fn deviation_rank(tables: &StatTables, a: i64, r: i64, order: usize) -> Result<LaurentSeries> {
    deviation(tables, Statistic::Rank, a, r, order)
}

/// `D_C(a, r) = sum_n (M(a, r, n) - p(n)/r) q^n` below `order`.
pub fn deviation_crank(tables: &StatTables, a: i64, r: i64, order: usize) -> Result<LaurentSeries> {
    deviation(tables, Statistic::Crank, a, r, order)
}

/// Rank of a partition given in nonincreasing order.
pub fn rank_of(parts: &[u32]) -> i64 {
    parts.first().map_or(0, |&l| l as i64 - parts.len() as i64)
}

/// Crank of a partition given in nonincreasing order.
pub fn crank_of(parts: &[u32]) -> i64 {
    let ones = parts.iter().rev().take_while(|&&x| x == 1).count();
    if ones == 0 {
        return parts.first().map_or(0, |&l| l as i64);
    }
    let mu = parts.iter().take_while(|&&x| x as usize > ones).count();
    mu as i64 - ones as i64
}

/// Statistics by walking every partition of every `n <= max_n`.
pub fn enumerate_stats(max_n: usize) -> Result<StatTables> {
    if max_n > ENUMERATION_CEILING {
        return Err(OracleError::EnumerationCeiling {
            requested: max_n,
            ceiling: ENUMERATION_CEILING,
        });
    }
    let mut rank = Vec::with_capacity(max_n + 1);
    let mut crank = Vec::with_capacity(max_n + 1);
    let mut spt = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut r = vec![0i128; 2 * n + 1];
        let mut c = vec![0i128; 2 * n + 1];
        let mut s = 0i128;
        for_each_partition(n as u32, |parts| {
            r[(rank_of(parts) + n as i64) as usize] += 1;
            c[(crank_of(parts) + n as i64) as usize] += 1;
            if let Some(&small) = parts.last() {
                s += parts.iter().rev().take_while(|&&x| x == small).count() as i128;
            }
        });
        if n <= 1 {
            c = crank_convention(n);
        }
        rank.push(r);
        crank.push(c);
        spt.push(s);
    }
    StatTables::from_rows(Provenance::Enumeration, rank, crank, spt)
}

fn crank_convention(n: usize) -> Vec<i128> {
    match n {
        0 => vec![1],
        _ => vec![1, -1, 1],
    }
}

/// Calls `visit` on every partition of `n` in nonincreasing part order.
pub fn for_each_partition(n: u32, mut visit: impl FnMut(&[u32])) {
    fn rec(rest: u32, max: u32, parts: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if rest == 0 {
            visit(parts);
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            parts.push(part);
            rec(rest - part, part, parts, visit);
            parts.pop();
        }
    }
    let mut parts = Vec::new();
    rec(n, n, &mut parts, &mut visit);
}

/// Dense bivariate buffer: `c[n][m + n]` for `|m| <= n`.
struct Bivariate {
    rows: Vec<Vec<i128>>,
}

impl Bivariate {
    fn unit(max_n: usize) -> Self {
        let mut rows: Vec<Vec<i128>> = (0..=max_n).map(|n| vec![0; 2 * n + 1]).collect();
        rows[0][0] = 1;
        Bivariate { rows }
    }

    fn get(&self, n: usize, m: i64) -> i128 {
        lookup(&self.rows[n], m, n)
    }

    /// `*= 1 / (1 - z^s q^k)` with `s = +-1`, truncated at `limit`.
    fn div_factor(&mut self, s: i64, k: usize, limit: usize) -> Result<()> {
        for n in k..=limit {
            for m in -(n as i64)..=n as i64 {
                let prev = self.get(n - k, m - s);
                if prev != 0 {
                    let slot = &mut self.rows[n][(m + n as i64) as usize];
                    *slot = slot.checked_add(prev).ok_or(OracleError::Overflow(n))?;
                }
            }
        }
        Ok(())
    }

    /// `*= (1 - q^k)`, truncated at `limit`.
    fn mul_q_binomial(&mut self, k: usize, limit: usize) -> Result<()> {
        for n in (k..=limit).rev() {
            for m in -((n - k) as i64)..=(n - k) as i64 {
                let prev = self.get(n - k, m);
                if prev != 0 {
                    let slot = &mut self.rows[n][(m + n as i64) as usize];
                    *slot = slot.checked_sub(prev).ok_or(OracleError::Overflow(n))?;
                }
            }
        }
        Ok(())
    }
}

/// `F(z;q) = prod_k (1 - q^k) / ((1 - z q^k)(1 - q^k / z))` through `q^max_n`.
fn crank_gf(max_n: usize) -> Result<Vec<Vec<i128>>> {
    let mut f = Bivariate::unit(max_n);
    for k in 1..=max_n {
        f.mul_q_binomial(k, max_n)?;
        f.div_factor(1, k, max_n)?;
        f.div_factor(-1, k, max_n)?;
    }
    Ok(f.rows)
}

/// `R(z;q) = sum_k q^{k^2} / ((zq)_k (q/z)_k)` through `q^max_n`.
fn rank_gf(max_n: usize) -> Result<Vec<Vec<i128>>> {
    let mut total = Bivariate::unit(max_n);
    let mut term = Bivariate::unit(max_n);
    let mut k = 1;
    while k * k <= max_n {
        let limit = max_n - k * k;
        term.div_factor(1, k, limit)?;
        term.div_factor(-1, k, limit)?;
        for n in 0..=limit {
            let target = n + k * k;
            for m in -(n as i64)..=n as i64 {
                let x = term.get(n, m);
                if x != 0 {
                    let slot = &mut total.rows[target][(m + target as i64) as usize];
                    *slot = slot.checked_add(x).ok_or(OracleError::Overflow(target))?;
                }
            }
        }
        k += 1;
    }
    Ok(total.rows)
}

/// `sum_s q^s / (1 - q^s)^2 * prod_{k > s} 1 / (1 - q^k)` through `q^max_n`.
fn spt_gf(max_n: usize) -> Result<Vec<i128>> {
    let len = max_n + 1;
    let div = |buf: &mut Vec<i128>, e: usize| -> Result<()> {
        for j in e..len {
            buf[j] = buf[j].checked_add(buf[j - e]).ok_or(OracleError::Overflow(j))?;
        }
        Ok(())
    };
    let mut tail = vec![0i128; len];
    tail[0] = 1;
    let mut out = vec![0i128; len];
    for s in (1..=max_n).rev() {
        let mut t = tail.clone();
        div(&mut t, s)?;
        div(&mut t, s)?;
        for j in 0..len - s {
            out[j + s] += t[j];
        }
        div(&mut tail, s)?;
    }
    Ok(out)
}

/// Statistics from the generating functions.
pub fn gf_stats(max_n: usize) -> Result<StatTables> {
    if max_n > GF_CEILING {
        return Err(OracleError::GfCeiling {
            requested: max_n,
            ceiling: GF_CEILING,
        });
    }
    let (rank, (crank, spt)) = rayon::join(
        || rank_gf(max_n),
        || rayon::join(|| crank_gf(max_n), || spt_gf(max_n)),
    );
    StatTables::from_rows(Provenance::GeneratingFunction, rank?, crank?, spt?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partitions(n: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for_each_partition(n, |p| out.push(p.to_vec()));
        out
    }

    #[test]
    fn ranks_and_cranks_of_four() {
        let ps = partitions(4);
        let ranks: Vec<i64> = ps.iter().map(|p| rank_of(p)).collect();
        let cranks: Vec<i64> = ps.iter().map(|p| crank_of(p)).collect();
        assert_eq!(ranks, vec![3, 1, 0, -1, -3]);
        assert_eq!(cranks, vec![4, 0, 2, -2, -4]);
    }

    #[test]
    fn spt_small() {
        let t = enumerate_stats(4).unwrap();
        let spt: Vec<i128> = (1..=4).map(|n| t.spt(n).unwrap()).collect();
        assert_eq!(spt, vec![1, 3, 5, 10]);
        assert_eq!(moments(&t, Statistic::Rank, 2, 4).unwrap(), BigInt::from(20));
        assert_eq!(spt_via_identity(&t, 4).unwrap(), BigInt::from(10));
    }

    #[test]
    fn crank_convention_rows() {
        let t = gf_stats(3).unwrap();
        assert_eq!(t.crank_row(0).unwrap(), &[1]);
        assert_eq!(t.crank_row(1).unwrap(), &[1, -1, 1]);
        let e = enumerate_stats(3).unwrap();
        assert_eq!(e.crank_row(1).unwrap(), &[1, -1, 1]);
    }

    #[test]
    fn odd_moment_rejected() {
        let t = enumerate_stats(5).unwrap();
        assert_eq!(moments(&t, Statistic::Rank, 3, 5), Err(OracleError::OddMoment(3)));
    }

    #[test]
    fn ceilings() {
        assert!(matches!(
            enumerate_stats(ENUMERATION_CEILING + 1),
            Err(OracleError::EnumerationCeiling { .. })
        ));
        assert!(matches!(gf_stats(GF_CEILING + 1), Err(OracleError::GfCeiling { .. })));
    }

    #[test]
    fn equinumerous_mod_five_at_four() {
        let t = enumerate_stats(4).unwrap();
        for a in 0..5 {
            assert_eq!(class_count(&t, Statistic::Rank, a, 5, 4).unwrap(), 1);
        }
    }
}

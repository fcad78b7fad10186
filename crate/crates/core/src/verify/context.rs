use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::linear::Counts;
use super::{Result, VerifyError, DEFAULT_Q_ORDER, DEFAULT_THETA_ORDER};
use crate::oracle::{self, class_count, gf_stats, StatTables, Statistic};
use crate::series::LaurentSeries;

/// Orders and limits shared by every check in a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Overrides both default orders when set.
    pub order: Option<i64>,
    pub oracle_ceiling: usize,
    /// Seed for the randomized positivity and conjecture samples.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            order: None,
            oracle_ceiling: oracle::DEFAULT_ORACLE_CEILING,
            seed: 0x11d1_55ec,
        }
    }
}

/// Oracle tables plus per-`n` class counts modulo 11.
pub struct Context {
    config: VerifyConfig,
    tables: Arc<StatTables>,
    rows: Vec<Counts>,
}

impl std::fmt::Debug for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Context")
            .field("config", &self.config)
            .field("max_n", &self.tables.max_n())
            .finish()
    }
}

impl Context {
    pub fn new(config: VerifyConfig, tables: impl Into<Arc<StatTables>>) -> Result<Self> {
        let tables = tables.into();
        let rows = (0..=tables.max_n())
            .map(|n| {
                let mut c = Counts {
                    rank: [0; 11],
                    crank: [0; 11],
                    p: tables.p(n)?,
                };
                for a in 0..11 {
                    c.rank[a] = class_count(&tables, Statistic::Rank, a as i64, 11, n)?;
                    c.crank[a] = class_count(&tables, Statistic::Crank, a as i64, 11, n)?;
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Context {
            config,
            tables,
            rows,
        })
    }

    /// Builds the generating-function tables up to the configured ceiling.
    pub fn build(config: VerifyConfig) -> Result<Self> {
        let tables = gf_stats(config.oracle_ceiling)?;
        Context::new(config, tables)
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    pub fn tables(&self) -> &StatTables {
        &self.tables
    }

    pub fn max_n(&self) -> usize {
        self.tables.max_n()
    }

    pub fn theta_order(&self) -> Result<i64> {
        let n = self.config.order.unwrap_or(DEFAULT_THETA_ORDER);
        if n < 1 {
            return Err(VerifyError::BadOrder(n));
        }
        Ok(n)
    }

    /// Order in `q` for oracle-backed identities; must fit the tables.
    pub fn q_order(&self) -> Result<i64> {
        let n = self.config.order.unwrap_or(DEFAULT_Q_ORDER);
        if n < 11 {
            return Err(VerifyError::BadOrder(n));
        }
        if n as usize > self.max_n() + 1 {
            return Err(VerifyError::OracleRange {
                order: n,
                needed: n as usize - 1,
                have: self.max_n(),
            });
        }
        Ok(n)
    }

    /// Dissected order: every `11n + m` with `n` below it lies under [`Self::q_order`].
    pub fn dissected_order(&self) -> Result<i64> {
        Ok(self.q_order()? / 11)
    }

    /// Number of `n` with `11n + m` inside the tables.
    pub fn scan_len(&self, m: i64) -> usize {
        let max = self.max_n() as i64;
        if m > max {
            0
        } else {
            ((max - m) / 11 + 1) as usize
        }
    }

    pub fn counts(&self, m: i64, n: usize) -> &Counts {
        &self.rows[11 * n + m as usize]
    }

    fn series(len: usize, f: impl Fn(usize) -> BigRational) -> LaurentSeries {
        LaurentSeries::new(0, (0..len).map(f).collect()).expect("nonempty window")
    }

    /// `Q_{a,m}` from the oracle, `len` coefficients.
    pub fn oracle_q(&self, a: i64, m: i64, len: usize) -> LaurentSeries {
        Self::series(len, |n| {
            let c = self.counts(m, n);
            BigRational::from_integer(c.rank[a as usize].into())
                - BigRational::new(c.p.into(), 11.into())
        })
    }

    /// `Q^C_{a,m}` from the oracle.
    pub fn oracle_qc(&self, a: i64, m: i64, len: usize) -> LaurentSeries {
        Self::series(len, |n| {
            let c = self.counts(m, n);
            BigRational::from_integer(c.crank[a as usize].into())
                - BigRational::new(c.p.into(), 11.into())
        })
    }

    /// `sum_n p(11n + m) q^n`.
    pub fn p_series(&self, m: i64, len: usize) -> LaurentSeries {
        Self::series(len, |n| BigRational::from_integer(self.counts(m, n).p.into()))
    }

    /// `sum_n spt(11n + m) q^n`.
    pub fn spt_series(&self, m: i64, len: usize) -> Result<LaurentSeries> {
        let v = (0..len)
            .map(|n| Ok(BigRational::from_integer(self.tables.spt(11 * n + m as usize)?.into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentSeries::new(0, v)?)
    }

    /// `sum_n N_k(11n + m) q^n` or the crank analogue.
    pub fn moment_series(&self, stat: Statistic, k: u32, m: i64, len: usize) -> Result<LaurentSeries> {
        let v = (0..len)
            .map(|n| {
                let x: BigInt = oracle::moments(&self.tables, stat, k, 11 * n + m as usize)?;
                Ok(BigRational::from_integer(x))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentSeries::new(0, v)?)
    }
}

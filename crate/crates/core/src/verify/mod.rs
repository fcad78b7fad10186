//! Named checks over the dissection library and the partition oracle.
//!
//! Every check has a stable id, belongs to one suite and yields a
//! [`VerifyReport`]. [`registry`] lists them all; [`select`] resolves a
//! selector (suite name, exact id, or id prefix) and [`run_checks`] fans the
//! selection out over a thread pool.

mod context;
pub mod data;
pub mod linear;
mod oracle_checks;
mod theta_checks;

use std::time::Instant;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dissection::DissectionError;
use crate::oracle::OracleError;
use crate::products::ProductError;
use crate::series::{LaurentSeries, SeriesError};

pub use context::{Context, VerifyConfig};

/// Default order for checks that only involve theta products.
pub const DEFAULT_THETA_ORDER: i64 = 500;
/// Default `q`-order for checks backed by the oracle.
pub const DEFAULT_Q_ORDER: i64 = 330;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check or suite {0:?}")]
    Unknown(String),
    #[error("order {order} needs an oracle ceiling of at least {needed}, have {have}")]
    OracleRange {
        order: i64,
        needed: usize,
        have: usize,
    },
    #[error("order must be positive, got {0}")]
    BadOrder(i64),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Dissection(#[from] DissectionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error("cannot parse {text:?}: {source}")]
    Parse {
        text: String,
        source: linear::ParseError,
    },
}

pub type Result<T> = std::result::Result<T, VerifyError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    EmendedPass,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::EmendedPass => "emended-pass",
        })
    }
}

/// First exponent where the two sides differ; rationals as `"num/den"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: i64,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(n: i64, lhs: impl ToString, rhs: impl ToString) -> Self {
        Failure {
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn rational(n: i64, lhs: &BigRational, rhs: &BigRational) -> Self {
        Failure::new(n, ratio_string(lhs), ratio_string(rhs))
    }
}

/// `"num/den"` with the denominator always present.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub id: String,
    pub status: Status,
    /// Exclusive bound on the exponents checked, in the variable of `first_failure.n`.
    pub order: i64,
    pub first_failure: Option<Failure>,
    pub elapsed_ms: u64,
    pub paper_label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Identity,
    Congruence,
    Nonnegativity,
    Certificate,
    ConjectureScan,
}

/// What a check function returns before timing and labels are attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub order: i64,
    pub first_failure: Option<Failure>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn from_failure(order: i64, failure: Option<Failure>) -> Self {
        Outcome {
            status: if failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            order,
            first_failure: failure,
            note: None,
        }
    }

    pub fn info(order: i64, note: String) -> Self {
        Outcome {
            status: Status::Pass,
            order,
            first_failure: None,
            note: Some(note),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Upgrades a pass to an emended pass.
    pub fn emended(mut self, note: impl Into<String>) -> Self {
        if self.status == Status::Pass {
            self.status = Status::EmendedPass;
        }
        self.note = Some(note.into());
        self
    }

    /// Sequential composition: the first failure wins, orders take the minimum.
    pub fn and(self, other: Outcome) -> Outcome {
        if self.status == Status::Fail {
            return self;
        }
        if other.status == Status::Fail {
            return other;
        }
        let status = if self.status == Status::EmendedPass || other.status == Status::EmendedPass {
            Status::EmendedPass
        } else {
            Status::Pass
        };
        let note = match (self.note, other.note) {
            (Some(a), Some(b)) => Some(format!("{a}; {b}")),
            (a, b) => a.or(b),
        };
        Outcome {
            status,
            order: self.order.min(other.order),
            first_failure: None,
            note,
        }
    }
}

/// Coefficientwise equality below `n`.
pub fn compare(lhs: &LaurentSeries, rhs: &LaurentSeries, n: i64) -> Result<Option<Failure>> {
    Ok(lhs
        .first_difference(rhs, n)?
        .map(|(e, a, b)| Failure::rational(e, &a, &b)))
}

/// First negative coefficient below `n`.
pub fn nonnegative(s: &LaurentSeries, n: i64) -> Result<Option<Failure>> {
    Ok(match s.is_nonneg_to_order(n)? {
        Some(e) => Some(Failure::new(e, ratio_string(&s.coeff(e)?), "0")),
        None => None,
    })
}

/// Equality mod 11 below `n`; reported values are the residues.
pub fn compare_mod11(lhs: &LaurentSeries, rhs: &LaurentSeries, n: i64) -> Result<Option<Failure>> {
    let a = lhs.reduce_mod(11)?;
    let b = rhs.reduce_mod(11)?;
    compare(&a, &b, n)
}

/// A registered check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: String,
    pub kind: CheckKind,
    pub suite: &'static str,
    pub paper_label: &'static str,
    pub(crate) job: Job,
}

impl CheckSpec {
    /// Whether the check reads the oracle tables.
    pub fn uses_oracle(&self) -> bool {
        !theta_only(self.job)
    }
}

/// Every suite name accepted by [`select`].
pub const SUITES: [&str; 13] = [
    "structural",
    "wr-all",
    "crank-dissection",
    "rank-dissection",
    "q-tables",
    "classical",
    "positivity",
    "inequalities",
    "certificates",
    "congruences",
    "conjectures",
    "oracle",
    "all",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Job {
    PProduct,
    Obrien,
    ObrienBracket,
    ObrienResidue,
    Wr(usize),
    Quintuple(i64),
    TripleProduct,
    ThetaAlt,
    PhiMock(i64),
    CrankDissection(i64),
    RankDissection(i64),
    QTable(i64, i64),
    QcTable(i64, i64),
    QSplit,
    QAlt01,
    QWeighted,
    ThetaForm(usize),
    CrankEq(i64),
    PCong(i64),
    LinRank(i64),
    CrankAg,
    Lemma63(i64),
    Lemma63Quot(i64),
    Lemma64,
    Prop66(usize),
    Remark67,
    Prop68(i64),
    Prop69(usize),
    Lemma610(usize),
    CrankException,
    Ineq(usize),
    Cert(usize),
    Cor25(usize),
    Link(&'static str),
    Spt(usize),
    RankMoment(usize, usize),
    CrankMoment(usize, i64),
    ResidueZeroMoment(usize),
    ResidueZeroSpt,
    Eisenstein(usize),
    G10(usize),
    SptIdentity,
    Spt4,
    OracleAgreement,
    Conj62,
    Conj65(i64),
    Conj66,
    Conj67,
}

fn spec(
    id: impl Into<String>,
    kind: CheckKind,
    suite: &'static str,
    paper_label: &'static str,
    job: Job,
) -> CheckSpec {
    CheckSpec {
        id: id.into(),
        kind,
        suite,
        paper_label,
        job,
    }
}

fn inequality_label(label: &str) -> &'static str {
    match label {
        "thm-2.1" => "Theorem 2.1",
        "cor-2.2" => "Corollary 2.2",
        "cor-2.3" => "Corollary 2.3",
        "thm-2.4" => "Theorem 2.4",
        "cor-2.5" => "Corollary 2.5",
        "cor-2.6" => "Corollary 2.6",
        "thm-6.1" => "Theorem 6.1",
        _ => "Section 8",
    }
}

/// Every check, in registration order.
#[allow(clippy::vec_init_then_push)]
pub fn registry() -> Vec<CheckSpec> {
    use CheckKind::*;
    let mut v = Vec::new();
    v.push(spec("p-product", Identity, "structural", "Section 3", Job::PProduct));
    v.push(spec("obrien", Identity, "structural", "Section 4", Job::Obrien));
    v.push(spec("obrien-bracket", Identity, "structural", "Section 4", Job::ObrienBracket));
    v.push(spec("obrien-residue", Identity, "structural", "Definition 2.7", Job::ObrienResidue));
    for i in 1..=10 {
        v.push(spec(format!("wr{i}"), Identity, "structural", "Section 4", Job::Wr(i)));
    }
    for a in 1..=3 {
        v.push(spec(format!("quintuple-a{a}"), Identity, "structural", "Lemma 6.3", Job::Quintuple(a)));
    }
    v.push(spec("triple-product", Identity, "structural", "Section 1", Job::TripleProduct));
    v.push(spec("theta-alt-form", Identity, "structural", "Section 4", Job::ThetaAlt));
    for a in 1..=5 {
        v.push(spec(format!("phi-mock-a{a}"), Identity, "structural", "Section 4", Job::PhiMock(a)));
    }
    for a in 0..=5 {
        v.push(spec(format!("thm-1.2-a{a}"), Identity, "crank-dissection", "Theorem 1.2", Job::CrankDissection(a)));
    }
    for a in 0..=5 {
        v.push(spec(format!("thm-1.3-a{a}"), Identity, "rank-dissection", "Theorem 1.3", Job::RankDissection(a)));
    }
    for a in 0..=5 {
        for m in 0..=10 {
            v.push(spec(format!("q-{a}-{m}"), Identity, "q-tables", "Section 4", Job::QTable(a, m)));
        }
    }
    for a in 0..=5 {
        for m in 0..=10 {
            v.push(spec(format!("qc-{a}-{m}"), Identity, "q-tables", "Theorem 1.2", Job::QcTable(a, m)));
        }
    }
    v.push(spec("q-split", Identity, "q-tables", "Section 4", Job::QSplit));
    v.push(spec("q-0-1-alt", Identity, "q-tables", "Section 4", Job::QAlt01));
    v.push(spec("q-weighted-sum", Identity, "q-tables", "Section 4", Job::QWeighted));
    for (i, f) in crate::dissection::tables::THETA_FORMS.iter().enumerate() {
        v.push(spec(
            format!("q-theta-form-{}-{}", f.a, f.m),
            Identity,
            "q-tables",
            "Section 4",
            Job::ThetaForm(i),
        ));
    }
    for m in 0..=10 {
        v.push(spec(format!("thm-5.1-r{m}"), Identity, "classical", "Theorem 5.1", Job::CrankEq(m)));
    }
    for m in 0..=10 {
        v.push(spec(format!("thm-5.2-r{m}"), Congruence, "classical", "Theorem 5.2", Job::PCong(m)));
    }
    for m in 0..=10 {
        v.push(spec(format!("thm-5.3-r{m}"), Congruence, "classical", "Theorem 5.3", Job::LinRank(m)));
    }
    v.push(spec("crank-ag", Identity, "classical", "Section 1", Job::CrankAg));
    for a in 1..=5 {
        v.push(spec(format!("lemma-6.3-a{a}"), Nonnegativity, "positivity", "Lemma 6.3", Job::Lemma63(a)));
    }
    for a in 1..=4 {
        v.push(spec(format!("lemma-6.3-quot-a{a}"), Nonnegativity, "positivity", "Lemma 6.3", Job::Lemma63Quot(a)));
    }
    v.push(spec("lemma-6.4", Nonnegativity, "positivity", "Lemma 6.4", Job::Lemma64));
    for i in 1..=3 {
        v.push(spec(format!("prop-6.6-{i}"), Nonnegativity, "positivity", "Proposition 6.6", Job::Prop66(i)));
    }
    v.push(spec("remark-6.7", Nonnegativity, "positivity", "Remark 6.7", Job::Remark67));
    for r in (0..=10).filter(|&r| r != 6) {
        v.push(spec(format!("prop-6.8-r{r}"), Nonnegativity, "positivity", "Proposition 6.8", Job::Prop68(r)));
    }
    for i in 1..=3 {
        v.push(spec(format!("prop-6.9-{i}"), Nonnegativity, "positivity", "Proposition 6.9", Job::Prop69(i)));
    }
    for i in 1..=6 {
        v.push(spec(format!("lemma-6.10-{i}"), Nonnegativity, "positivity", "Lemma 6.10", Job::Lemma610(i)));
    }
    v.push(spec("crank-exception", Nonnegativity, "positivity", "Theorem 6.1", Job::CrankException));
    let mut seen = std::collections::HashMap::new();
    for (i, q) in data::INEQUALITIES.iter().enumerate() {
        let k = seen.entry((q.label, q.residue)).or_insert(0);
        *k += 1;
        v.push(spec(
            format!("ineq-{}-r{}-{}", q.label, q.residue, k),
            Nonnegativity,
            "inequalities",
            inequality_label(q.label),
            Job::Ineq(i),
        ));
    }
    let mut seen = std::collections::HashMap::new();
    for (i, c) in data::CERTIFICATES.iter().enumerate() {
        let k = seen.entry((c.label, c.residue)).or_insert(0);
        *k += 1;
        v.push(spec(
            format!("cert-{}-r{}-{}", c.label, c.residue, k),
            Certificate,
            "certificates",
            inequality_label(c.label),
            Job::Cert(i),
        ));
    }
    for i in 1..=2 {
        v.push(spec(format!("cert-cor-2.5-r6-{i}"), Certificate, "certificates", "Corollary 2.5", Job::Cor25(i)));
    }
    for label in ["thm-2.1", "cor-2.2", "cor-2.3", "thm-2.4", "cor-2.6"] {
        v.push(spec(format!("{label}-link"), Certificate, "certificates", inequality_label(label), Job::Link(label)));
    }
    for (i, (m, _)) in data::SPT_CONGRUENCES.iter().enumerate() {
        v.push(spec(format!("thm-2.7-r{m}"), Congruence, "congruences", "Theorem 2.7", Job::Spt(i)));
    }
    for (i, (m, _)) in data::RANK_MOMENT_CONGRUENCES.iter().enumerate() {
        for (j, k) in [2, 4, 6, 8].into_iter().enumerate() {
            v.push(spec(format!("thm-2.8-k{k}-r{m}"), Congruence, "congruences", "Theorem 2.8", Job::RankMoment(i, j)));
        }
    }
    for m in (0..=10).filter(|&m| m != 6) {
        for (j, k) in [2, 4, 6, 8].into_iter().enumerate() {
            v.push(spec(format!("thm-2.9-k{k}-r{m}"), Congruence, "congruences", "Theorem 2.9", Job::CrankMoment(j, m)));
        }
    }
    for (i, (k, _)) in data::RESIDUE_ZERO_MOMENTS.iter().enumerate() {
        v.push(spec(format!("remark-7-T{k}-r0"), Congruence, "congruences", "Section 7", Job::ResidueZeroMoment(i)));
    }
    v.push(spec("remark-7-spt-r0", Congruence, "congruences", "Section 7", Job::ResidueZeroSpt));
    v.push(spec("cor-2.10-E4", Congruence, "congruences", "Corollary 2.10", Job::Eisenstein(4)));
    v.push(spec("cor-2.10-E6", Congruence, "congruences", "Corollary 2.10", Job::Eisenstein(6)));
    for k in [2, 6, 8] {
        v.push(spec(format!("g10-T{k}-6"), Congruence, "congruences", "Section 7", Job::G10(k)));
    }
    v.push(spec("spt-identity", Identity, "congruences", "Section 7", Job::SptIdentity));
    v.push(spec("spt-4", Identity, "congruences", "Section 2", Job::Spt4));
    v.push(spec("oracle-agreement", Identity, "oracle", "Section 1", Job::OracleAgreement));
    v.push(spec("conj-6.2", ConjectureScan, "conjectures", "Conjecture 6.2", Job::Conj62));
    for m in 0..=10 {
        v.push(spec(format!("conj-6.5-r{m}"), ConjectureScan, "conjectures", "Conjecture 6.5", Job::Conj65(m)));
    }
    v.push(spec("conj-6.6", ConjectureScan, "conjectures", "Conjecture 6.6", Job::Conj66));
    v.push(spec("conj-6.7", ConjectureScan, "conjectures", "Conjecture 6.7", Job::Conj67));
    v
}

/// Resolves a selector: `all`, a suite name, an exact id, or an id prefix
/// ending at a `-` boundary (so `thm-1.2` selects `thm-1.2-a0` .. `thm-1.2-a5`).
pub fn select(selector: &str) -> Result<Vec<CheckSpec>> {
    let all = registry();
    let picked: Vec<_> = match selector {
        "all" => all,
        "wr-all" => all.into_iter().filter(|s| matches!(s.job, Job::Wr(_))).collect(),
        s if SUITES.contains(&s) => all.into_iter().filter(|c| c.suite == s).collect(),
        s => {
            if let Some(c) = all.iter().find(|c| c.id == s) {
                vec![c.clone()]
            } else {
                let prefix = format!("{s}-");
                all.into_iter().filter(|c| c.id.starts_with(&prefix)).collect()
            }
        }
    };
    if picked.is_empty() {
        return Err(VerifyError::Unknown(selector.to_string()));
    }
    Ok(picked)
}

/// Runs one check.
pub fn run_check(spec: &CheckSpec, ctx: &Context) -> Result<VerifyReport> {
    let start = Instant::now();
    let out = dispatch(spec.job, ctx)?;
    debug_assert!(out.status != Status::Fail || out.first_failure.is_some() || out.note.is_some());
    Ok(VerifyReport {
        id: spec.id.clone(),
        status: out.status,
        order: out.order,
        first_failure: out.first_failure,
        elapsed_ms: start.elapsed().as_millis() as u64,
        paper_label: spec.paper_label.to_string(),
        note: out.note,
    })
}

/// Looks up `id` and runs it.
pub fn run_check_id(id: &str, ctx: &Context) -> Result<VerifyReport> {
    let spec = registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::Unknown(id.to_string()))?;
    run_check(&spec, ctx)
}

/// Runs `specs` on up to `jobs` threads; reports come back sorted by id.
pub fn run_checks(specs: &[CheckSpec], ctx: &Context, jobs: usize) -> Result<Vec<VerifyReport>> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut reports = pool.install(|| {
        specs
            .par_iter()
            .map(|s| run_check(s, ctx))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports.dedup_by(|a, b| a.id == b.id);
    Ok(reports)
}

fn theta_only(job: Job) -> bool {
    use Job::*;
    matches!(
        job,
        PProduct | Obrien | ObrienBracket | ObrienResidue | Wr(_) | Quintuple(_) | TripleProduct
            | ThetaAlt | PhiMock(_) | Lemma63(_) | Lemma63Quot(_) | Lemma64 | Prop66(_) | Remark67
            | Prop68(_) | Prop69(_) | Lemma610(_) | CrankException | Eisenstein(_) | Conj66
    )
}

fn dispatch(job: Job, ctx: &Context) -> Result<Outcome> {
    if theta_only(job) {
        theta_checks::run(job, ctx)
    } else {
        oracle_checks::run(job, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let r = registry();
        let mut ids: Vec<_> = r.iter().map(|c| c.id.as_str()).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn selectors() {
        assert_eq!(select("wr-all").unwrap().len(), 10);
        assert_eq!(select("thm-1.2").unwrap().len(), 6);
        assert_eq!(select("wr1").unwrap().len(), 1);
        assert!(select("nope").is_err());
        assert!(select("empty-window").is_err());
        assert_eq!(select("all").unwrap().len(), registry().len());
    }

    #[test]
    fn outcome_composition() {
        let p = Outcome::from_failure(10, None);
        let f = Outcome::from_failure(5, Some(Failure::new(3, "1/1", "0/1")));
        assert_eq!(p.clone().and(f.clone()).status, Status::Fail);
        assert_eq!(f.clone().and(p.clone()).first_failure.unwrap().n, 3);
        let e = p.clone().emended("x");
        assert_eq!(e.and(p).status, Status::EmendedPass);
    }

    #[test]
    fn report_json_round_trip() {
        let r = VerifyReport {
            id: "wr1".into(),
            status: Status::EmendedPass,
            order: 500,
            first_failure: Some(Failure::new(2, "-1/1", "0/1")),
            elapsed_ms: 3,
            paper_label: "Section 4".into(),
            note: None,
        };
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"emended-pass\""));
        assert_eq!(serde_json::from_str::<VerifyReport>(&s).unwrap(), r);
    }
}

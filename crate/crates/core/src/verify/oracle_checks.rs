//! Checks against the partition oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::data::{self, CertRhs, Certificate, Inequality, Printed, Target};
use super::linear::{Chain, Counts, LinearForm, Relation, Var};
use super::{
    compare, compare_mod11, nonnegative, ratio_string, Context, Failure, Job, Outcome, Result,
    VerifyError,
};
use crate::dissection::tables::{THETA_FORMS, THETA6_ROWS};
use crate::dissection::{
    crank_dissection, mock_component, rank_dissection, residue_prefactor, Basis,
    ResidueBracketCoeffs, ThetaCoeffs, ThetaMonomial, V11Coeffs,
};
use crate::oracle::{
    class_count, deviation_crank, deviation_rank, enumerate_stats, spt_via_identity, Statistic,
};
use crate::products::eisenstein;
use crate::series::LaurentSeries;

pub(super) fn run(job: Job, ctx: &Context) -> Result<Outcome> {
    match job {
        Job::CrankDissection(a) => {
            let n = ctx.q_order()?;
            let lhs = crank_dissection(a, n)?;
            let rhs = deviation_crank(ctx.tables(), a, 11, n as usize)?;
            Ok(Outcome::from_failure(n, compare(&lhs, &rhs, n)?))
        }
        Job::RankDissection(a) => {
            let n = ctx.q_order()?;
            let lhs = rank_dissection(a, n)?;
            let rhs = deviation_rank(ctx.tables(), a, 11, n as usize)?;
            Ok(Outcome::from_failure(n, compare(&lhs, &rhs, n)?))
        }
        Job::QTable(a, m) => {
            let nd = ctx.dissected_order()?;
            let lhs = Basis::shared(nd).q_table(a, m)?;
            let rhs = ctx.oracle_q(a, m, nd as usize);
            Ok(Outcome::from_failure(nd, compare(&lhs, &rhs, nd)?))
        }
        Job::QcTable(a, m) => {
            let nd = ctx.dissected_order()?;
            let lhs = Basis::shared(nd).qc_table(a, m)?;
            let rhs = ctx.oracle_qc(a, m, nd as usize);
            Ok(Outcome::from_failure(nd, compare(&lhs, &rhs, nd)?))
        }
        Job::QSplit => {
            let n = ctx.theta_order()?;
            let b = Basis::shared(n);
            let mut out = Outcome::from_failure(n, None);
            for a in 0..=5 {
                for m in (0..=10).filter(|&m| m != 6) {
                    let f = compare(&b.q_table(a, m)?, &b.q_table_split(a, m)?, n)?;
                    out = out.and(tag(Outcome::from_failure(n, f), format!("Q_{{{a},{m}}}")));
                }
            }
            Ok(out)
        }
        Job::QAlt01 => {
            let nd = ctx.dissected_order()?;
            let b = Basis::shared(nd);
            let oracle = ctx.oracle_q(0, 1, nd as usize);
            let mut out = Outcome::from_failure(nd, None);
            for (lead, c) in [(-12, [2, 0, 0, 0, -2, -2]), (10, [0, 2, 2, 2, 0, -2])] {
                let mut v = [0; 10];
                v[1] = lead;
                let s = &b.v11_component(&V11Coeffs(v), 1)
                    + &b.residue_bracket(&ResidueBracketCoeffs::new(c, 1)?);
                out = out.and(Outcome::from_failure(nd, compare(&s, &oracle, nd)?));
            }
            Ok(out)
        }
        Job::QWeighted => {
            let n = ctx.theta_order()?;
            let b = Basis::shared(n);
            let mut out = Outcome::from_failure(n, None);
            for m in 0..=10 {
                let mut s = LaurentSeries::zero();
                for a in 0..=5 {
                    let w = if a == 0 { 1 } else { 2 };
                    s = &s + &b.q_table(a, m)?.scale_int(w);
                }
                let f = compare(&s, &LaurentSeries::zero(), n)?;
                out = out.and(tag(Outcome::from_failure(n, f), format!("residue {m}")));
            }
            Ok(out)
        }
        Job::ThetaForm(i) => theta_form(ctx, i),
        Job::CrankEq(m) => chain_scan(ctx, m, data::CRANK_EQUALITIES[m as usize]),
        Job::PCong(m) => {
            let len = ctx.scan_len(m) as i64;
            let lhs = ctx.p_series(m, len as usize);
            let rhs = match residue_prefactor(m) {
                Some(pre) => Basis::shared(len)
                    .eval(pre.times(ThetaMonomial::new(0, 0, 2, [0; 5])))
                    .scale_int(data::P_MULTIPLIERS[m as usize]),
                None => LaurentSeries::zero(),
            };
            Ok(Outcome::from_failure(len, compare_mod11(&lhs, &rhs, len)?))
        }
        Job::LinRank(m) => linear_rank(ctx, m),
        Job::CrankAg => crank_ag(ctx),
        Job::Ineq(i) => inequality(ctx, &data::INEQUALITIES[i]),
        Job::Cert(i) => certificate(ctx, &data::CERTIFICATES[i]),
        Job::Cor25(i) => cor25(ctx, i),
        Job::Link(label) => link(label),
        Job::Spt(i) => {
            let (m, target) = data::SPT_CONGRUENCES[i];
            let nd = ctx.dissected_order()?;
            let lhs = ctx.spt_series(m, nd as usize)?;
            let rhs = target_series(&Basis::shared(nd), target, m)?;
            Ok(Outcome::from_failure(nd, compare_mod11(&lhs, &rhs, nd)?))
        }
        Job::RankMoment(i, j) => {
            let (m, targets) = data::RANK_MOMENT_CONGRUENCES[i];
            let nd = ctx.dissected_order()?;
            let k = 2 * (j as u32 + 1);
            let lhs = ctx.moment_series(Statistic::Rank, k, m, nd as usize)?;
            let rhs = target_series(&Basis::shared(nd), targets[j], m)?;
            Ok(Outcome::from_failure(nd, compare_mod11(&lhs, &rhs, nd)?))
        }
        Job::CrankMoment(j, m) => {
            let nd = ctx.dissected_order()?;
            let k = 2 * (j as u32 + 1);
            let c = data::CRANK_MOMENT_MULTIPLIERS[m as usize][j];
            let lhs = ctx
                .moment_series(Statistic::Crank, k, m, nd as usize)?
                .scale_int(c);
            let rhs = if m == 0 {
                LaurentSeries::zero()
            } else {
                let pre = residue_prefactor(m).expect("m != 6");
                let f = if m == 1 { 2 } else { 1 };
                Basis::shared(nd)
                    .eval(pre.times(ThetaMonomial::new(0, 0, 2, [0; 5])))
                    .scale_int(f)
            };
            Ok(Outcome::from_failure(nd, compare_mod11(&lhs, &rhs, nd)?))
        }
        Job::ResidueZeroMoment(i) => {
            let (k, c) = data::RESIDUE_ZERO_MOMENTS[i];
            let nd = ctx.dissected_order()?;
            let lhs = ctx.moment_series(Statistic::Rank, k, 0, nd as usize)?;
            let b = Basis::shared(nd);
            let rhs = &mock_component(0, nd)?.scale_int(2)
                + &b.residue_bracket(&ResidueBracketCoeffs::new(c, 0)?);
            Ok(Outcome::from_failure(nd, compare_mod11(&lhs, &rhs, nd)?))
        }
        Job::ResidueZeroSpt => {
            let nd = ctx.dissected_order()?;
            let lhs = ctx.spt_series(0, nd as usize)?;
            let b = Basis::shared(nd);
            let rhs = &mock_component(0, nd)?.scale_int(-1)
                + &b.residue_bracket(&ResidueBracketCoeffs::new(data::RESIDUE_ZERO_SPT, 0)?);
            Ok(Outcome::from_failure(nd, compare_mod11(&lhs, &rhs, nd)?))
        }
        Job::G10(k) => g10(ctx, k),
        Job::SptIdentity => {
            let t = ctx.tables();
            let max = ctx.max_n();
            for n in 0..=max {
                let direct = BigInt::from(t.spt(n)?);
                let via = spt_via_identity(t, n)?;
                if direct != via {
                    return Ok(Outcome::from_failure(
                        max as i64 + 1,
                        Some(Failure::new(n as i64, direct, via)),
                    ));
                }
            }
            Ok(Outcome::from_failure(max as i64 + 1, None))
        }
        Job::Spt4 => {
            let s = ctx.tables().spt(4)?;
            let f = (s != 10).then(|| Failure::new(4, s, 10));
            Ok(Outcome::from_failure(5, f))
        }
        Job::OracleAgreement => oracle_agreement(ctx),
        Job::Conj62 => conj62(ctx),
        Job::Conj65(m) => conj65(ctx, m),
        Job::Conj67 => conj67(ctx),
        _ => unreachable!("not an oracle check: {job:?}"),
    }
}

fn tag(out: Outcome, t: String) -> Outcome {
    if out.first_failure.is_some() {
        out.with_note(t)
    } else {
        out
    }
}

fn parse(text: &str) -> Result<Chain> {
    text.parse().map_err(|source| VerifyError::Parse {
        text: text.to_string(),
        source,
    })
}

fn eleventh(x: i128) -> String {
    ratio_string(&BigRational::new(x.into(), 11.into()))
}

fn target_series(b: &Basis, t: Target, m: i64) -> Result<LaurentSeries> {
    Ok(match t {
        Target::Zero => LaurentSeries::zero(),
        Target::Bracket(c) => b.residue_bracket(&ResidueBracketCoeffs::new(c, m)?),
        Target::Theta(c) => b.theta(&ThetaCoeffs(c)),
    })
}

/// A theta-quotient row against the oracle without its mock part. Rows whose
/// printed label disagrees with their position are tried under both readings.
fn theta_form(ctx: &Context, i: usize) -> Result<Outcome> {
    let f = &THETA_FORMS[i];
    let nd = ctx.dissected_order()?;
    let b = Basis::shared(nd);
    let lhs = b.theta_form(f);
    let target = |a: i64, m: i64| &ctx.oracle_q(a, m, nd as usize) - &b.q_mock(a, m);
    let out = Outcome::from_failure(nd, compare(&lhs, &target(f.a, f.m), nd)?);
    let (pa, pm) = f.printed;
    if (pa, pm) == (f.a, f.m) {
        return Ok(out);
    }
    if compare(&lhs, &target(pa, pm), nd)?.is_none() {
        return Ok(out.with_note(format!("also matches the printed label Q_{{{pa},{pm}}}")));
    }
    Ok(out.emended(format!(
        "printed as Q_{{{pa},{pm}}}, matches the oracle as Q_{{{},{}}}",
        f.a, f.m
    )))
}

/// Every `11n + m` in the oracle range satisfies the chain, thresholds included.
fn chain_scan(ctx: &Context, m: i64, text: &str) -> Result<Outcome> {
    let len = ctx.scan_len(m);
    let mut out = Outcome::from_failure(len as i64, None);
    for part in text.split(';') {
        let chain = parse(part)?;
        out = out.and(scan_links(ctx, m, &chain, len));
    }
    Ok(out)
}

fn holds(rel: Relation, a: i128, b: i128) -> bool {
    match rel {
        Relation::Eq => a == b,
        Relation::Ge { .. } => a >= b,
    }
}

fn scan_links(ctx: &Context, m: i64, chain: &Chain, len: usize) -> Outcome {
    for n in 0..len {
        let c = ctx.counts(m, n);
        for i in 0..chain.links.len() {
            let (l, rel, r) = chain.link(i);
            if let Relation::Ge { from } = rel {
                if n < from {
                    continue;
                }
            }
            let (a, b) = (l.eval11(c), r.eval11(c));
            if !holds(rel, a, b) {
                return Outcome::from_failure(len as i64, Some(Failure::new(n as i64, eleventh(a), eleventh(b))))
                    .with_note(format!("{l}{rel}{r}"));
            }
        }
    }
    Outcome::from_failure(len as i64, None)
}

fn linear_rank(ctx: &Context, m: i64) -> Result<Outcome> {
    let w = data::LINEAR_RANK_CONGRUENCES[m as usize];
    let len = ctx.scan_len(m);
    let mut fail = None;
    for n in 0..len {
        let c = ctx.counts(m, n);
        let v: i128 = (0..6).map(|a| w[a] as i128 * c.rank[a]).sum();
        if v.rem_euclid(11) != 0 {
            fail = Some(Failure::new(n as i64, v.rem_euclid(11), 0));
            break;
        }
    }
    let mut out = Outcome::from_failure(len as i64, fail);
    let sum: i64 = w.iter().sum();
    if sum != 0 {
        out = out.with_note(format!("coefficient sum {sum} is not zero"));
    }
    if m == 0 {
        let nd = ctx.dissected_order()?;
        let mut lhs = LaurentSeries::zero();
        for a in 0..6 {
            lhs = &lhs + &ctx.oracle_q(a, 0, nd as usize).scale_int(w[a as usize]);
        }
        let rhs = Basis::shared(nd)
            .residue_bracket(&ResidueBracketCoeffs::new(data::LINEAR_RANK_RESIDUE_ZERO, 0)?)
            .scale_int(11);
        out = out.and(Outcome::from_failure(nd, compare(&lhs, &rhs, nd)?));
    }
    Ok(out)
}

/// `M(a, 5, 5n + 4) = p(5n + 4) / 5` and `M(a, 7, 7n + 5) = p(7n + 5) / 7`.
fn crank_ag(ctx: &Context) -> Result<Outcome> {
    let t = ctx.tables();
    let max = ctx.max_n();
    for (r, m) in [(5usize, 4usize), (7, 5)] {
        let mut n = m;
        while n <= max {
            let p = t.p(n)?;
            for a in 0..r as i64 {
                let c = class_count(t, Statistic::Crank, a, r as i64, n)?;
                if c * r as i128 != p {
                    return Ok(Outcome::from_failure(
                        max as i64 + 1,
                        Some(Failure::new(n as i64, c * r as i128, p)),
                    )
                    .with_note(format!("M({a}, {r}, {n})")));
                }
            }
            n += r;
        }
    }
    Ok(Outcome::from_failure(max as i64 + 1, None))
}

fn inequality(ctx: &Context, q: &Inequality) -> Result<Outcome> {
    let chain = parse(q.text)?;
    let len = ctx.scan_len(q.residue);
    Ok(scan_links(ctx, q.residue, &chain, len))
}

/// The certificate's left side from the oracle; its right side from theta products.
fn certificate(ctx: &Context, c: &Certificate) -> Result<Outcome> {
    let nd = ctx.dissected_order()?;
    let m = c.residue;
    let lhs_of = |ranks: &[i64; 6]| {
        let mut lhs = LaurentSeries::zero();
        for (a, &k) in ranks.iter().enumerate() {
            if k != 0 {
                lhs = &lhs + &ctx.oracle_q(a as i64, m, nd as usize).scale_int(k);
            }
        }
        for (&j, &k) in data::crank_indices(m).iter().zip(c.cranks) {
            if k != 0 {
                lhs = &lhs + &ctx.oracle_qc(j, m, nd as usize).scale_int(k);
            }
        }
        lhs
    };
    let rhs_at = |b: &Basis| -> Result<LaurentSeries> {
        Ok(match c.rhs {
            CertRhs::Bracket(v) => b.residue_bracket(&ResidueBracketCoeffs::new(v, m)?),
            CertRhs::Theta(v) => b.theta(&ThetaCoeffs(v)),
        })
    };
    let rhs = rhs_at(&Basis::shared(nd))?;
    let eq = Outcome::from_failure(nd, compare(&lhs_of(&c.ranks), &rhs, nd)?);
    let n = ctx.theta_order()?;
    let pos = Outcome::from_failure(n, nonnegative(&rhs_at(&Basis::shared(n))?, n)?);
    let out = eq.and(pos);
    Ok(match c.printed {
        Printed::Literal => out,
        Printed::Garbled(text) => out.emended(format!(
            "printed {text:?}, read as ranks {:?} and cranks {:?}",
            c.ranks, c.cranks
        )),
        Printed::Ranks(p) => match compare(&lhs_of(&p), &rhs, nd)? {
            Some(f) => out.emended(format!(
                "printed ranks {p:?} differ from the right side at n = {}; ranks {:?} match",
                f.n, c.ranks
            )),
            None => out.with_note(format!("printed ranks {p:?} also match")),
        },
    })
}

/// `Q_{0,6} = Theta(0,0,1,1,-1)` and `-Q_{5,6} = Theta(1,0,1,0,1)`.
fn cor25(ctx: &Context, i: usize) -> Result<Outcome> {
    let nd = ctx.dissected_order()?;
    let n = ctx.theta_order()?;
    let (a, sign, printed) = if i == 1 {
        (0, 1, [0, 0, 1, 1, -1])
    } else {
        (5, -1, [1, 0, 1, 0, 1])
    };
    let lhs = ctx.oracle_q(a, 6, nd as usize).scale_int(sign);
    let b = Basis::shared(nd);
    let rhs = b.theta(&ThetaCoeffs(printed));
    let pos = Outcome::from_failure(n, nonnegative(&Basis::shared(n).theta(&ThetaCoeffs(printed)), n)?);
    let eq = Outcome::from_failure(nd, compare(&lhs, &rhs, nd)?);
    if eq.status != super::Status::Fail {
        return Ok(eq.and(pos));
    }
    // the dissection row itself, scaled to the printed shape
    let row = THETA6_ROWS[a as usize].0;
    for k in 2..=3 {
        let scaled: [i64; 5] = std::array::from_fn(|j| k * printed[j]);
        if scaled == row.map(|x| sign * x) {
            let alt = b.theta(&ThetaCoeffs(scaled));
            let fixed = Outcome::from_failure(nd, compare(&lhs, &alt, nd)?);
            return Ok(fixed.and(pos).emended(format!(
                "printed Theta{printed:?} is 1/{k} of the element; Theta{scaled:?} matches and the sign argument is unchanged"
            )));
        }
    }
    Ok(eq)
}

/// Each certificate vector equals its inequality's left minus right side.
fn link(label: &'static str) -> Result<Outcome> {
    let ineqs: Vec<_> = data::INEQUALITIES.iter().filter(|q| q.label == label).collect();
    let certs: Vec<_> = data::CERTIFICATES.iter().filter(|c| c.label == label).collect();
    if ineqs.len() != certs.len() {
        return Ok(Outcome::from_failure(
            0,
            Some(Failure::new(0, ineqs.len(), certs.len())),
        )
        .with_note("inequality and certificate counts differ"));
    }
    for (k, (q, c)) in ineqs.iter().zip(&certs).enumerate() {
        let chain = parse(q.text)?;
        let (l, _, r) = chain.link(0);
        let d: LinearForm = l.minus(r);
        let ranks: [i64; 6] = std::array::from_fn(|a| d.coeff(Var::N(a)));
        let cranks: Vec<i64> = data::crank_indices(q.residue)
            .iter()
            .map(|&j| d.coeff(Var::M(j as usize)))
            .collect();
        if q.residue != c.residue || ranks != c.ranks || cranks != c.cranks || d.coeff(Var::P) != 0 {
            return Ok(Outcome::from_failure(
                ineqs.len() as i64,
                Some(Failure::new(
                    k as i64,
                    format!("{ranks:?};{cranks:?}"),
                    format!("{:?};{:?}", c.ranks, c.cranks),
                )),
            )
            .with_note(format!("residue {}: {} does not match its certificate", q.residue, q.text)));
        }
    }
    Ok(Outcome::from_failure(ineqs.len() as i64, None))
}

/// Inputs of the Eisenstein corollary: `T_{2,6} = 3 J1^13`,
/// `T_{6,6} = J1^13 (4 + E4)`, `T_{8,6} = J1^13 (5 + 6 E4 + 6 E6)` mod 11,
/// together with `J1^13 = J1^2 J11`.
fn g10(ctx: &Context, k: usize) -> Result<Outcome> {
    let nd = ctx.dissected_order()?;
    let b = Basis::shared(nd);
    let j13 = b.eval(ThetaMonomial::new(0, 13, 0, [0; 5]));
    let j2j11 = b.eval(ThetaMonomial::new(0, 2, 1, [0; 5]));
    let base = Outcome::from_failure(nd, compare_mod11(&j13, &j2j11, nd)?);
    let one = LaurentSeries::one(nd);
    let e4 = eisenstein(4, nd)?;
    let e6 = eisenstein(6, nd)?;
    let factor = match k {
        2 => one.scale_int(3),
        6 => &one.scale_int(4) + &e4,
        _ => &(&one.scale_int(5) + &e4.scale_int(6)) + &e6.scale_int(6),
    };
    let rhs = (&j13 * &factor).truncate(nd)?;
    let lhs = ctx.moment_series(Statistic::Rank, k as u32, 6, nd as usize)?;
    Ok(base.and(Outcome::from_failure(nd, compare_mod11(&lhs, &rhs, nd)?)))
}

fn oracle_agreement(ctx: &Context) -> Result<Outcome> {
    let t = ctx.tables();
    let max = ctx.max_n().min(50);
    let e = enumerate_stats(max)?;
    for n in 0..=max {
        let checks = [
            (t.rank_row(n)?, e.rank_row(n)?, "rank"),
            (t.crank_row(n)?, e.crank_row(n)?, "crank"),
        ];
        for (a, b, what) in checks {
            if a != b {
                return Ok(Outcome::from_failure(
                    max as i64 + 1,
                    Some(Failure::new(n as i64, format!("{a:?}"), format!("{b:?}"))),
                )
                .with_note(what));
            }
        }
        if t.spt(n)? != e.spt(n)? {
            return Ok(Outcome::from_failure(
                max as i64 + 1,
                Some(Failure::new(n as i64, t.spt(n)?, e.spt(n)?)),
            )
            .with_note("spt"));
        }
    }
    Ok(Outcome::from_failure(max as i64 + 1, None))
}

fn violations(ctx: &Context, m: i64, l: &LinearForm, rel: Relation, r: &LinearForm) -> Vec<usize> {
    (0..ctx.scan_len(m))
        .filter(|&n| {
            let c: &Counts = ctx.counts(m, n);
            !holds(rel, l.eval11(c), r.eval11(c))
        })
        .collect()
}

fn conj62(ctx: &Context) -> Result<Outcome> {
    let chain = parse(data::CRANK_EIGHT_CHAIN)?;
    let mut bad: Vec<usize> = Vec::new();
    for i in 0..chain.links.len() {
        let (l, rel, r) = chain.link(i);
        bad.extend(violations(ctx, 8, l, rel, r));
    }
    bad.sort_unstable();
    bad.dedup();
    let len = ctx.scan_len(8);
    Ok(Outcome::info(
        len as i64,
        format!("informational: violations at n = {bad:?} for n < {len}"),
    ))
}

/// Observed first-hold index of every link against its printed threshold.
fn conj65(ctx: &Context, m: i64) -> Result<Outcome> {
    let chain = parse(data::CONJECTURED_CHAINS[m as usize])?;
    let len = ctx.scan_len(m);
    let mut mismatches = Vec::new();
    for i in 0..chain.links.len() {
        let (l, rel, r) = chain.link(i);
        let printed = match rel {
            Relation::Ge { from } => from,
            Relation::Eq => 0,
        };
        let observed = violations(ctx, m, l, Relation::Ge { from: 0 }, r)
            .last()
            .map_or(0, |n| n + 1);
        if observed != printed {
            mismatches.push(format!("{l}>={r}: printed {printed}, observed {observed}"));
        }
    }
    let note = if mismatches.is_empty() {
        format!("informational: every printed threshold matches, n < {len}")
    } else {
        format!("informational: {}; n < {len}", mismatches.join("; "))
    };
    Ok(Outcome::info(len as i64, note))
}

/// Random integer combinations of class counts: the index after which each keeps one sign.
fn conj67(ctx: &Context) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.config().seed ^ 0x67);
    const SAMPLES: usize = 16;
    let mut worst = 0usize;
    let mut unsettled = 0usize;
    for _ in 0..SAMPLES {
        let m = rng.gen_range(0..11i64);
        let mut a: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-4..=4));
        let b: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-4..=4));
        // force sum_{k=1}^{5} (a_k + b_k) = 0 through a_1
        let s: i64 = (1..6).map(|k| a[k] + b[k]).sum();
        a[1] -= s;
        let len = ctx.scan_len(m);
        let vals: Vec<i128> = (0..len)
            .map(|n| {
                let c = ctx.counts(m, n);
                (0..6).map(|k| a[k] as i128 * c.rank[k] + b[k] as i128 * c.crank[k]).sum()
            })
            .collect();
        let Some(last) = vals.iter().rev().find(|v| **v != 0) else {
            continue;
        };
        let positive = *last > 0;
        let settle = vals
            .iter()
            .rposition(|v| *v != 0 && (*v > 0) != positive)
            .map_or(0, |i| i + 1);
        if settle + 8 > len {
            unsettled += 1;
        }
        worst = worst.max(settle);
    }
    Ok(Outcome::info(
        ctx.max_n() as i64 + 1,
        format!(
            "informational: {SAMPLES} random combinations settle in sign by n = {worst}; \
             {unsettled} still changing sign near the end of the range"
        ),
    ))
}

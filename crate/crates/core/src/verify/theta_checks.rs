//! Checks that need no partition data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{compare, compare_mod11, nonnegative, Context, Failure, Job, Outcome, Result};
use crate::dissection::{
    residue_prefactor, Basis, BracketCoeffs, ResidueBracketCoeffs, ThetaCoeffs,
    ThetaMonomial, BRACKET_FACTOR, BRACKET_TERMS,
};
use crate::products::{eisenstein, euler_j, fold_index, mock_g, phi, theta_j, theta_j_product, MockIndex};
use crate::series::LaurentSeries;

const fn p(q: i64, e: [i64; 5]) -> ThetaMonomial {
    ThetaMonomial::p(q, e)
}

const fn j11_sq(q: i64, e: [i64; 5]) -> ThetaMonomial {
    ThetaMonomial::new(q, 0, 2, e)
}

/// Three-term relations, each `t1 - t2 + t3 = 0`.
const WEIERSTRASS: [[ThetaMonomial; 3]; 10] = [
    [p(0, [0, 1, 0, 1, 2]), p(0, [0, 0, 2, 1, 1]), p(2, [2, 1, 1, 0, 0])],
    [p(0, [1, 0, 0, 1, 2]), p(0, [0, 1, 1, 2, 0]), p(1, [1, 1, 2, 0, 0])],
    [p(0, [1, 0, 1, 0, 2]), p(0, [0, 2, 0, 1, 1]), p(1, [2, 0, 1, 1, 0])],
    [p(0, [1, 0, 0, 2, 1]), p(0, [0, 1, 2, 0, 1]), p(1, [1, 2, 0, 1, 0])],
    [p(0, [1, 0, 1, 2, 0]), p(0, [0, 2, 1, 0, 1]), p(1, [2, 1, 0, 0, 1])],
    [p(0, [0, 0, 1, 0, 3]), p(0, [0, 0, 0, 3, 1]), p(3, [3, 1, 0, 0, 0])],
    [p(0, [0, 1, 0, 0, 3]), p(0, [0, 0, 1, 3, 0]), p(2, [1, 3, 0, 0, 0])],
    [p(0, [0, 1, 0, 3, 0]), p(0, [0, 0, 3, 0, 1]), p(2, [3, 0, 0, 1, 0])],
    [p(0, [1, 0, 0, 0, 3]), p(0, [0, 0, 3, 1, 0]), p(1, [0, 3, 1, 0, 0])],
    [p(0, [1, 0, 3, 0, 0]), p(0, [0, 3, 0, 1, 0]), p(1, [3, 0, 0, 0, 1])],
];

/// Consecutive bracket differences and their single-product forms over `J11^2/J1^3`,
/// in printed line order. The first and third lines are printed under each other's label.
const COMPARISONS: [([i64; 5], ThetaMonomial); 3] = [
    ([0, 0, 0, -1, 1], p(3, [2, 2, 1, -1, -1])),
    ([0, 0, -1, 1, 0], p(2, [2, 1, -1, 0, 1])),
    ([0, -1, 1, 0, 0], p(1, [2, -1, -1, 1, 2])),
];

/// `Theta` differences and their single-product forms over `J11^2/J1^3`.
const THETA_COMPARISONS: [([i64; 5], ThetaMonomial); 3] = [
    ([0, 0, 0, 1, -1], p(3, [3, 0, 0, 0, -1])),
    ([0, 0, 1, -1, 0], p(2, [2, 0, 0, -1, 1])),
    ([0, 1, -1, 0, 0], p(0, [0, 0, -1, 0, 3])),
];

/// Residue brackets with a nonnegative single-product form over `J11^2/J1^3`.
const RESIDUE_COMPARISONS: [([i64; 6], i64, ThetaMonomial); 6] = [
    ([0, 0, 0, 0, -1, 1], 1, p(2, [1, 0, 1, 1, -1])),
    ([0, 1, 0, 0, 0, -1], 2, p(2, [2, -1, 0, 1, 0])),
    ([0, 0, 0, 1, 0, -1], 3, p(2, [2, 0, -1, -1, 2])),
    ([0, 0, -1, 0, 0, 1], 3, p(3, [3, 0, -1, 0, 0])),
    ([0, 0, 1, 0, 0, -1], 5, p(3, [2, 2, -1, 0, -1])),
    ([0, 0, 0, -1, 0, 1], 8, p(0, [0, 0, 0, -1, 3])),
];

/// Orders for sampled checks are capped here.
const SAMPLE_ORDER: i64 = 300;

pub(super) fn run(job: Job, ctx: &Context) -> Result<Outcome> {
    let n = ctx.theta_order()?;
    let b = Basis::shared(n);
    let same = |l: &LaurentSeries, r: &LaurentSeries| -> Result<Outcome> {
        Ok(Outcome::from_failure(n, compare(l, r, n)?))
    };
    let zero = LaurentSeries::zero();
    match job {
        Job::PProduct => same(
            &b.eval(p(0, [1, 1, 1, 1, 1])),
            &b.eval(ThetaMonomial::new(0, 1, 4, [0; 5])),
        ),
        Job::Obrien => {
            let terms: Vec<_> = [1, -1, -1, -1, -1].into_iter().zip(BRACKET_TERMS).collect();
            same(&b.combo(&terms), &b.eval(ThetaMonomial::new(0, 3, 0, [0; 5])))
        }
        Job::ObrienBracket => same(
            &b.bracket(&BracketCoeffs([1, -1, -1, -1, -1])),
            &b.eval(j11_sq(0, [0; 5])),
        ),
        Job::ObrienResidue => {
            let mut out = Outcome::from_failure(n, None);
            for m in (0..=10).filter(|&m| m != 6) {
                let c = ResidueBracketCoeffs::new([1, -1, -1, -1, -1, 0], m)?;
                let pre = residue_prefactor(m).expect("m != 6");
                let r = b.eval(pre.times(j11_sq(0, [0; 5])));
                out = out.and(same(&b.residue_bracket(&c), &r)?.tagged(format!("residue {m}")));
            }
            Ok(out)
        }
        Job::Wr(i) => {
            let [t1, t2, t3] = WEIERSTRASS[i - 1];
            same(&b.combo(&[(1, t1), (-1, t2), (1, t3)]), &zero)
        }
        Job::Quintuple(a) => {
            let mut e = [0; 5];
            e[fold(2 * a)] += 1;
            e[fold(a)] -= 1;
            e[fold(3 * a)] -= 1;
            let lhs = b.eval(j11_sq(0, e));
            let j33 = euler_j(33, n).pow(3)?;
            let first = theta_j(3 * a, 33, n);
            let rhs1 = j33.div(&(&first * &theta_j(11 - 3 * a, 33, n)))?;
            let rhs2 = j33.div(&(&first * &theta_j(22 - 3 * a, 33, n)))?.shift(a);
            same(&lhs, &(&rhs1 + &rhs2).truncate(n)?)
        }
        Job::TripleProduct => {
            let mut pairs: Vec<(i64, i64)> = (1..=5).map(|a| (a, 11)).collect();
            pairs.extend((1..=5).map(|i| (11 * i, 121)));
            for a in 1..=3 {
                pairs.extend([(3 * a, 33), (11 - 3 * a, 33), (22 - 3 * a, 33)]);
            }
            pairs.extend([(1, 3), (11, 33), (33, 99)]);
            let mut out = Outcome::from_failure(n, None);
            for (a, m) in pairs {
                let prod = theta_j_product(a, m, n)?;
                out = out.and(same(&theta_j(a, m, n), &prod)?.tagged(format!("J_{{{a},{m}}}")));
            }
            Ok(out)
        }
        Job::ThetaAlt => {
            let mut out = Outcome::from_failure(n, None);
            for i in 0..5 {
                let mut c = [0; 5];
                c[i] = 1;
                let c = ThetaCoeffs(c);
                out = out.and(same(&b.theta(&c), &b.theta_alt(&c))?.tagged(format!("slot {}", i + 1)));
            }
            Ok(out)
        }
        Job::PhiMock(a) => {
            let lhs = phi(11, a, n)?;
            let g = mock_g(MockIndex::new(a, 11)?, n).shift(a).truncate(n)?;
            let rhs = if 6 * a < 11 { &g + &LaurentSeries::one(n) } else { g };
            same(&lhs, &rhs)
        }
        Job::Lemma63(a) => {
            let mut e = [0; 5];
            e[a as usize - 1] = -1;
            Ok(Outcome::from_failure(n, nonnegative(&b.eval(j11_sq(0, e)), n)?))
        }
        Job::Lemma63Quot(a) => lemma63_quot(&b, a, n),
        Job::Lemma64 => lemma64(&b, ctx.config().seed, n.min(SAMPLE_ORDER)),
        Job::Prop66(i) => {
            let (c, closed) = COMPARISONS[i - 1];
            let printed = COMPARISONS[3 - i].0;
            let lhs = b.bracket(&BracketCoeffs(c));
            let rhs = b.eval(BRACKET_FACTOR.times(closed));
            let out = same(&lhs, &rhs)?.and(Outcome::from_failure(n, nonnegative(&lhs, n)?));
            if printed == c || compare(&b.bracket(&BracketCoeffs(printed)), &rhs, n)?.is_none() {
                return Ok(out);
            }
            Ok(out.emended(format!("printed as {printed:?}, holds for {c:?}")))
        }
        Job::Remark67 => {
            let j1 = ThetaMonomial::new(0, 1, 0, [0; 5]);
            let mut out = Outcome::from_failure(n, None);
            for (c, closed) in COMPARISONS {
                let lhs = &b.bracket(&BracketCoeffs(c)) * &b.eval(j1);
                let rhs = b.eval(BRACKET_FACTOR.times(closed).times(j1));
                out = out
                    .and(same(&lhs.truncate(n)?, &rhs)?)
                    .and(Outcome::from_failure(n, nonnegative(&rhs, n)?));
            }
            Ok(out)
        }
        Job::Prop68(r) => {
            let pre = residue_prefactor(r).expect("r != 6");
            let mut out = Outcome::from_failure(n, None);
            for (c, closed) in COMPARISONS {
                let rb = ResidueBracketCoeffs::new([c[0], c[1], c[2], c[3], c[4], 0], r)?;
                let lhs = b.residue_bracket(&rb);
                let rhs = b.eval(BRACKET_FACTOR.times(closed).times(pre));
                out = out
                    .and(same(&lhs, &rhs)?)
                    .and(Outcome::from_failure(n, nonnegative(&lhs, n)?));
            }
            Ok(out)
        }
        Job::Prop69(i) => {
            let (c, closed) = THETA_COMPARISONS[i - 1];
            let lhs = b.theta(&ThetaCoeffs(c));
            let rhs = b.eval(BRACKET_FACTOR.times(closed));
            Ok(same(&lhs, &rhs)?.and(Outcome::from_failure(n, nonnegative(&lhs, n)?)))
        }
        Job::Lemma610(i) => {
            let (c, r, closed) = RESIDUE_COMPARISONS[i - 1];
            let lhs = b.residue_bracket(&ResidueBracketCoeffs::new(c, r)?);
            let rhs = b.eval(BRACKET_FACTOR.times(closed));
            Ok(same(&lhs, &rhs)?.and(Outcome::from_failure(n, nonnegative(&lhs, n)?)))
        }
        Job::CrankException => crank_exception(&b, n),
        Job::Eisenstein(j) => {
            let c = if j == 4 { [-1, 1, 1, 1, 1] } else { [-3, 1, 5, 4, -2] };
            let e = eisenstein(j, n)?;
            let scale = b.eval(ThetaMonomial::new(0, -2, -1, [0; 5]));
            let rhs = (&b.theta(&ThetaCoeffs(c)) * &scale).truncate(n)?;
            Ok(Outcome::from_failure(n, compare_mod11(&e, &rhs, n)?))
        }
        Job::Conj66 => conj66(ctx.config().seed, n.min(SAMPLE_ORDER)),
        _ => unreachable!("not a theta check: {job:?}"),
    }
}

fn fold(i: i64) -> usize {
    fold_index(i).expect("index not divisible by 11") - 1
}

trait Tagged {
    fn tagged(self, tag: String) -> Self;
}

impl Tagged for Outcome {
    /// Names the failing sub-case in the note.
    fn tagged(self, tag: String) -> Self {
        if self.first_failure.is_some() {
            self.with_note(tag)
        } else {
            self
        }
    }
}

/// `J11^2 P_{2a} / (P_a P_{3a})`. For `a = 4` the index 12 exceeds 11 and
/// `J_{12,11} = -q^{-1} P_1`, so the literal quotient is nonpositive; the
/// lemma holds for the folded index.
fn lemma63_quot(b: &Basis, a: i64, n: i64) -> Result<Outcome> {
    let mut e = [0; 5];
    e[fold(2 * a)] += 1;
    e[fold(a)] -= 1;
    e[fold(3 * a)] -= 1;
    let folded = b.eval(j11_sq(0, e));
    let out = Outcome::from_failure(n, nonnegative(&folded, n)?);
    if 3 * a <= 10 {
        return Ok(out);
    }
    let literal_den = theta_j(3 * a, 11, n + 1);
    let rest = b.eval(j11_sq(0, {
        let mut e = [0; 5];
        e[fold(2 * a)] += 1;
        e[fold(a)] -= 1;
        e
    }));
    let literal = rest.div(&literal_den)?.truncate(n)?;
    match nonnegative(&literal, n)? {
        Some(f) => Ok(out.emended(format!(
            "literal P_{} = J_{{{},11}} gives a negative coefficient at q^{}; read as P_{}",
            3 * a,
            3 * a,
            f.n,
            fold(3 * a) + 1
        ))),
        None => Ok(out),
    }
}

/// Random `J11^a q^b prod Ptilde_i^{alpha_i}` with `alpha_i <= 0` and `0 <= a <= -sum alpha`.
fn lemma64(b: &Basis, seed: u64, n: i64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Outcome::from_failure(n, None);
    const SAMPLES: usize = 24;
    for _ in 0..SAMPLES {
        let alpha: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-3..=0));
        let r: i64 = alpha.iter().sum();
        let a = rng.gen_range(0..=-r);
        let shift = rng.gen_range(0..=3);
        // Ptilde_i = P_i / J11
        let m = ThetaMonomial::new(shift, 0, a - r, alpha);
        let s = b.eval(m).truncate(n)?;
        let f = nonnegative(&s, n)?;
        out = out.and(Outcome::from_failure(n, f).tagged(format!("alpha {alpha:?}, a {a}")));
    }
    if out.first_failure.is_none() {
        out = out.with_note(format!("{SAMPLES} sampled tuples"));
    }
    Ok(out)
}

/// `J11^2 q P1 / (P4 P5)`: starts `q - q^2 + q^5` and is negative only at `q^2`.
fn crank_exception(b: &Basis, n: i64) -> Result<Outcome> {
    let s = b.eval(j11_sq(1, [1, 0, 0, -1, -1]));
    let head = LaurentSeries::from_i64(0, &[0, 1, -1, 0, 0, 1])?;
    let out = Outcome::from_failure(n, compare(&s, &head, 6.min(n))?);
    let negatives: Vec<i64> = s
        .terms()
        .filter(|(e, c)| *e < n && c < &num_rational::BigRational::from_integer(0.into()))
        .map(|(e, _)| e)
        .collect();
    let extra = negatives.iter().find(|&&e| e != 2);
    let scan = match extra {
        Some(&e) => Outcome::from_failure(
            n,
            Some(Failure::new(e, super::ratio_string(&s.coeff(e)?), "0")),
        ),
        None => Outcome::from_failure(n, None),
    };
    Ok(out.and(scan).with_note(format!("negative exponents below {n}: {negatives:?}")))
}

/// Largest index where the sign differs from the final nonzero coefficient.
fn settle_index(s: &LaurentSeries, n: i64) -> Option<i64> {
    let terms: Vec<_> = s.terms().filter(|(e, _)| *e < n).collect();
    let zero = num_rational::BigRational::from_integer(0.into());
    let last = terms.iter().rev().find(|(_, c)| c != &zero)?;
    let positive = last.1 > zero;
    let bad = terms
        .iter()
        .rev()
        .find(|(_, c)| c != &zero && (c > &zero) != positive)
        .map(|(e, _)| e + 1)
        .unwrap_or(0);
    Some(bad)
}

/// Sampled brackets and `Theta`s: where each settles into one sign.
fn conj66(seed: u64, n: i64) -> Result<Outcome> {
    let b = Basis::shared(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x66);
    let mut worst_bracket = 0;
    let mut worst_theta = 0;
    const SAMPLES: usize = 16;
    for _ in 0..SAMPLES {
        let c: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-12..=12));
        let mut r = rng.gen_range(0..10);
        if r >= 6 {
            r += 1;
        }
        let s = b.residue_bracket(&ResidueBracketCoeffs::new(c, r)?);
        worst_bracket = worst_bracket.max(settle_index(&s, n).unwrap_or(0));
        let t: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-12..=12));
        let s = b.theta(&ThetaCoeffs(t));
        worst_theta = worst_theta.max(settle_index(&s, n).unwrap_or(0));
    }
    Ok(Outcome::info(
        n,
        format!(
            "informational: {SAMPLES} random residue brackets settle in sign by n = {worst_bracket}, \
             {SAMPLES} random Theta by n = {worst_theta}, window {n}"
        ),
    ))
}

//! Theta-product combinators and the 11-dissection tables.
//!
//! Everything here lives in the dissected variable: an element `Q_{a,m}(q)`
//! collects the coefficients of `q^{11 n + m}`. The two exceptions are
//! [`build_v11`] and [`build_g11`], which return series in the original `q`.

pub mod tables;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::products::{self, euler_j, mock_g, p_theta, MockIndex};
use crate::series::{LaurentSeries, SeriesError};
use tables::{QEntry, ThetaForm, CRANK_ROWS, MOCK_ROWS, Q_ENTRIES, RANK_ROWS, THETA6_ROWS, THETA_FORMS};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DissectionError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("residue {0} has no residue bracket")]
    NoBracket(i64),
    #[error("index out of range: {0}")]
    BadIndex(String),
}

pub type Result<T> = std::result::Result<T, DissectionError>;

/// Residue tags of the ten `v11` slots; 6 has none.
pub const V11_TAGS: [i64; 10] = [0, 1, 2, 3, 4, 5, 7, 8, 9, 10];
/// Residue tags of the five `G11` slots.
pub const G11_TAGS: [i64; 5] = [0, 4, 7, 9, 10];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct V11Coeffs(pub [i64; 10]);

impl V11Coeffs {
    /// Coefficient for residue tag `m`; `None` for 6 or anything outside `0..=10`.
    pub fn get(&self, m: i64) -> Option<i64> {
        V11_TAGS.iter().position(|&t| t == m).map(|i| self.0[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct G11Coeffs(pub [i64; 5]);

impl G11Coeffs {
    pub fn get(&self, m: i64) -> Option<i64> {
        G11_TAGS.iter().position(|&t| t == m).map(|i| self.0[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaCoeffs(pub [i64; 5]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BracketCoeffs(pub [i64; 5]);

/// `[c1, .., c5; c6]_residue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueBracketCoeffs {
    c: [i64; 6],
    residue: i64,
}

impl ResidueBracketCoeffs {
    pub fn new(c: [i64; 6], residue: i64) -> Result<Self> {
        if residue == 6 {
            return Err(DissectionError::NoBracket(6));
        }
        if !(0..=10).contains(&residue) {
            return Err(DissectionError::BadIndex(format!("residue {residue}")));
        }
        Ok(ResidueBracketCoeffs { c, residue })
    }

    pub fn coeffs(&self) -> [i64; 6] {
        self.c
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }
}

/// `q^q J_1^j1 J_11^j11 P_1^p1 .. P_5^p5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ThetaMonomial {
    pub q: i64,
    pub j1: i64,
    pub j11: i64,
    pub p: [i64; 5],
}

impl ThetaMonomial {
    pub const fn new(q: i64, j1: i64, j11: i64, p: [i64; 5]) -> Self {
        ThetaMonomial { q, j1, j11, p }
    }

    pub const fn p(q: i64, p: [i64; 5]) -> Self {
        ThetaMonomial { q, j1: 0, j11: 0, p }
    }

    pub fn times(self, o: ThetaMonomial) -> Self {
        let mut p = self.p;
        for (x, y) in p.iter_mut().zip(o.p) {
            *x += y;
        }
        ThetaMonomial {
            q: self.q + o.q,
            j1: self.j1 + o.j1,
            j11: self.j11 + o.j11,
            p,
        }
    }
}

/// `J_11^2 / J_1^3`, the common factor of every bracket.
pub const BRACKET_FACTOR: ThetaMonomial = ThetaMonomial::new(0, -3, 2, [0; 5]);
/// `J_11^6 / J_1^2`, the common factor of `Theta`.
pub const THETA_FACTOR: ThetaMonomial = ThetaMonomial::new(0, -2, 6, [0; 5]);

/// The five products inside `[c1, .., c5]`.
pub const BRACKET_TERMS: [ThetaMonomial; 5] = [
    ThetaMonomial::p(0, [0, 0, 0, 1, 2]),
    ThetaMonomial::p(2, [2, 0, 1, 0, 0]),
    ThetaMonomial::p(1, [1, 0, 0, 2, 0]),
    ThetaMonomial::p(1, [0, 2, 0, 0, 1]),
    ThetaMonomial::p(1, [0, 1, 2, 0, 0]),
];

/// The five quotients inside `Theta(a1, .., a5)`.
pub const THETA_TERMS: [ThetaMonomial; 5] = [
    ThetaMonomial::p(2, [0, 0, 0, -1, -2]),
    ThetaMonomial::p(0, [-2, 0, -1, 0, 0]),
    ThetaMonomial::p(1, [-1, 0, 0, -2, 0]),
    ThetaMonomial::p(1, [0, -2, 0, 0, -1]),
    ThetaMonomial::p(1, [0, -1, -2, 0, 0]),
];

/// `Theta` rewritten over `J_11^2 / J_1^3`.
pub const THETA_ALT_TERMS: [ThetaMonomial; 5] = [
    ThetaMonomial::p(2, [1, 1, 1, 0, -1]),
    ThetaMonomial::p(0, [-1, 1, 0, 1, 1]),
    ThetaMonomial::p(1, [0, 1, 1, -1, 1]),
    ThetaMonomial::p(1, [1, -1, 1, 1, 0]),
    ThetaMonomial::p(1, [1, 0, -1, 1, 1]),
];

/// Prefactor of `[c1, .., c5]` in `[..; c6]_m`; also the `v11` slot-`m` quotient
/// after dissection (slot 8 picks up the extra `q` of its `q^19`).
pub fn residue_prefactor(m: i64) -> Option<ThetaMonomial> {
    let (q, p) = match m {
        0 => (0, [-1, 0, 0, 0, 0]),
        1 => (0, [0, -1, -1, 0, 1]),
        2 => (0, [-1, 0, 1, -1, 0]),
        3 => (0, [-1, 1, -1, 0, 0]),
        4 => (0, [0, -1, 0, 0, 0]),
        5 => (0, [0, -1, 0, 1, -1]),
        7 => (0, [0, 0, -1, 0, 0]),
        8 => (1, [1, 0, 0, -1, -1]),
        9 => (0, [0, 0, 0, -1, 0]),
        10 => (0, [0, 0, 0, 0, -1]),
        _ => return None,
    };
    Some(ThetaMonomial::p(q, p))
}

/// The `c6` product of `[..; c6]_m`, without the `J_11^2 / J_1^3` factor.
pub fn residue_extra(m: i64) -> Option<ThetaMonomial> {
    let (q, p) = match m {
        0 => (1, [1, -2, 1, 1, 1]),
        1 => (1, [-1, 2, 0, 1, 0]),
        2 => (3, [2, 1, 0, 0, -1]),
        3 => (1, [0, 0, 2, -1, 1]),
        4 => (2, [1, 1, 1, -2, 1]),
        5 => (1, [1, 0, -1, 0, 2]),
        7 => (2, [1, 1, 1, 1, -2]),
        8 => (0, [0, -1, 1, 2, 0]),
        9 => (1, [1, 1, -2, 1, 1]),
        10 => (-1, [-2, 1, 1, 1, 1]),
        _ => return None,
    };
    Some(ThetaMonomial::p(q, p))
}

/// Lowest `q` power any cached monomial may carry.
const MIN_Q: i64 = -2;

/// Theta products evaluated to a fixed order, with a monomial cache.
///
/// Factors are expanded with a margin so that negative `q` powers still leave
/// a full window `[.., order)`.
pub struct Basis {
    order: i64,
    p: Vec<LaurentSeries>,
    p_inv: Vec<LaurentSeries>,
    j1: LaurentSeries,
    j1_inv: LaurentSeries,
    j11: LaurentSeries,
    j11_inv: LaurentSeries,
    cache: Mutex<HashMap<ThetaMonomial, LaurentSeries>>,
}

impl std::fmt::Debug for Basis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Basis").field("order", &self.order).finish()
    }
}

impl Basis {
    pub fn new(order: i64) -> Self {
        assert!(order >= 1, "basis order must be positive");
        let work = order - MIN_Q;
        let p: Vec<_> = (1..=5).map(|i| p_theta(i, work)).collect();
        let p_inv = p
            .iter()
            .map(|s| s.invert(work).expect("P_i has constant term 1"))
            .collect();
        let j1 = euler_j(1, work);
        let j1_inv = j1.invert(work).expect("unit");
        let j11 = euler_j(11, work);
        let j11_inv = j11.invert(work).expect("unit");
        Basis {
            order,
            p,
            p_inv,
            j1,
            j1_inv,
            j11,
            j11_inv,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Shared basis for `order`, built once per process.
    pub fn shared(order: i64) -> Arc<Basis> {
        static BASES: OnceLock<Mutex<HashMap<i64, Arc<Basis>>>> = OnceLock::new();
        let map = BASES.get_or_init(Default::default);
        if let Some(b) = map.lock().expect("basis map").get(&order) {
            return b.clone();
        }
        let b = Arc::new(Basis::new(order));
        map.lock()
            .expect("basis map")
            .entry(order)
            .or_insert(b)
            .clone()
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// `P_i` for `1 <= i <= 5`, to the working precision.
    pub fn p(&self, i: usize) -> &LaurentSeries {
        &self.p[i - 1]
    }

    pub fn eval(&self, m: ThetaMonomial) -> LaurentSeries {
        assert!(m.q >= MIN_Q, "q power {} below basis margin", m.q);
        if let Some(s) = self.cache.lock().expect("monomial cache").get(&m) {
            return s.clone();
        }
        let mut factors: Vec<(&LaurentSeries, i64)> = vec![
            (if m.j1 >= 0 { &self.j1 } else { &self.j1_inv }, m.j1.abs()),
            (if m.j11 >= 0 { &self.j11 } else { &self.j11_inv }, m.j11.abs()),
        ];
        for i in 0..5 {
            let e = m.p[i];
            factors.push((if e >= 0 { &self.p[i] } else { &self.p_inv[i] }, e.abs()));
        }
        let mut acc = LaurentSeries::one(self.order - MIN_Q);
        for (f, e) in factors {
            for _ in 0..e {
                acc = &acc * f;
            }
        }
        let shifted = acc.shift(m.q);
        let out = if shifted.valuation() >= self.order {
            // nothing below the basis order
            LaurentSeries::monomial(BigRational::zero(), self.order - 1, self.order)
                .expect("nonempty window")
        } else {
            shifted.truncate(self.order).expect("window covers the basis order")
        };
        self.cache
            .lock()
            .expect("monomial cache")
            .insert(m, out.clone());
        out
    }

    /// `sum_k c_k * eval(m_k)`.
    pub fn combo(&self, terms: &[(i64, ThetaMonomial)]) -> LaurentSeries {
        let mut acc = LaurentSeries::zero();
        for &(c, m) in terms {
            if c != 0 {
                acc = &acc + &self.eval(m).scale_int(c);
            }
        }
        acc
    }

    pub fn bracket(&self, c: &BracketCoeffs) -> LaurentSeries {
        let terms: Vec<_> = c
            .0
            .iter()
            .zip(BRACKET_TERMS)
            .map(|(&k, t)| (k, BRACKET_FACTOR.times(t)))
            .collect();
        self.combo(&terms)
    }

    pub fn residue_bracket(&self, c: &ResidueBracketCoeffs) -> LaurentSeries {
        let m = c.residue;
        let pre = residue_prefactor(m).expect("validated residue");
        let mut terms: Vec<_> = c.c[..5]
            .iter()
            .zip(BRACKET_TERMS)
            .map(|(&k, t)| (k, BRACKET_FACTOR.times(pre).times(t)))
            .collect();
        terms.push((c.c[5], BRACKET_FACTOR.times(residue_extra(m).expect("validated"))));
        self.combo(&terms)
    }

    pub fn theta(&self, c: &ThetaCoeffs) -> LaurentSeries {
        let terms: Vec<_> = c
            .0
            .iter()
            .zip(THETA_TERMS)
            .map(|(&k, t)| (k, THETA_FACTOR.times(t)))
            .collect();
        self.combo(&terms)
    }

    /// `Theta` through its `J_11^2 / J_1^3` form.
    pub fn theta_alt(&self, c: &ThetaCoeffs) -> LaurentSeries {
        let terms: Vec<_> = c
            .0
            .iter()
            .zip(THETA_ALT_TERMS)
            .map(|(&k, t)| (k, BRACKET_FACTOR.times(t)))
            .collect();
        self.combo(&terms)
    }

    /// Slot `m` of `v11(c)` in the dissected variable: `(c_m / 11) J_11^2 pre_m`.
    pub fn v11_component(&self, c: &V11Coeffs, m: i64) -> LaurentSeries {
        match (c.get(m), residue_prefactor(m)) {
            (Some(k), Some(pre)) if k != 0 => self
                .eval(pre.times(ThetaMonomial::new(0, 0, 2, [0; 5])))
                .scale(&ratio(k, 11)),
            _ => LaurentSeries::zero(),
        }
    }

    /// Slot `m` of `G11(c)` in the dissected variable.
    pub fn g11_component(&self, c: &G11Coeffs, m: i64) -> LaurentSeries {
        match c.get(m) {
            Some(k) if k != 0 => mock_component(m, self.order)
                .expect("G11 tag")
                .scale_int(k),
            _ => LaurentSeries::zero(),
        }
    }

    /// `Q_{a,m}` from the printed tables: mock part plus `(1/11)[full]_m`, or
    /// `Theta_{a,6}` for `m = 6`.
    pub fn q_table(&self, a: i64, m: i64) -> Result<LaurentSeries> {
        check_am(a, m)?;
        if m == 6 {
            return Ok(self.theta(&THETA6_ROWS[a as usize]));
        }
        let e = q_entry(a, m);
        let rb = ResidueBracketCoeffs::new(e.full, m)?;
        let th = self.residue_bracket(&rb).scale(&ratio(1, 11));
        Ok(&th + &self.q_mock(a, m))
    }

    /// The same element through `(lead/11) J_11^2 pre_m + [theta]_m`.
    pub fn q_table_split(&self, a: i64, m: i64) -> Result<LaurentSeries> {
        check_am(a, m)?;
        if m == 6 {
            return Ok(self.theta(&THETA6_ROWS[a as usize]));
        }
        let e = q_entry(a, m);
        let lead = self.v11_component(&V11Coeffs(one_hot(m, e.lead)), m);
        let th = self.residue_bracket(&ResidueBracketCoeffs::new(e.theta, m)?);
        Ok(&(&lead + &th) + &self.q_mock(a, m))
    }

    /// The mock part of `Q_{a,m}`, zero outside the ten listed pairs.
    pub fn q_mock(&self, a: i64, m: i64) -> LaurentSeries {
        match MOCK_ROWS.iter().find(|r| r.a == a && r.m == m) {
            Some(r) => mock_component(m, self.order)
                .expect("mock residue")
                .scale_int(r.coeff),
            None => LaurentSeries::zero(),
        }
    }

    /// `Q^C_{a,m}`: slot `m` of the crank row `a`, zero at `m = 6`.
    pub fn qc_table(&self, a: i64, m: i64) -> Result<LaurentSeries> {
        check_am(a, m)?;
        Ok(self.v11_component(&CRANK_ROWS[a as usize], m))
    }

    /// `Theta_{a,m}` of the rank dissection: the bracketed remainder for
    /// `m != 6`.
    pub fn rank_theta_part(&self, a: i64, m: i64) -> Result<LaurentSeries> {
        check_am(a, m)?;
        if m == 6 {
            return Ok(self.theta(&THETA6_ROWS[a as usize]));
        }
        let e = q_entry(a, m);
        Ok(self.residue_bracket(&ResidueBracketCoeffs::new(e.theta, m)?))
    }

    /// A theta-quotient form row.
    pub fn theta_form(&self, f: &ThetaForm) -> LaurentSeries {
        let mut acc = LaurentSeries::zero();
        for t in &f.terms {
            let mut quot = ThetaMonomial::p(t.q_shift, [0; 5]);
            quot.p[fold(t.num) - 1] += 1;
            quot.p[fold(t.den) - 1] -= 1;
            let terms: Vec<_> = t
                .theta
                .iter()
                .zip(THETA_TERMS)
                .map(|(&k, th)| (k, THETA_FACTOR.times(th).times(quot)))
                .collect();
            acc = &acc + &self.combo(&terms).scale(&ratio(1, 11));
        }
        acc
    }
}

fn fold(i: i64) -> usize {
    products::fold_index(i).expect("table index is not a multiple of 11")
}

fn one_hot(m: i64, k: i64) -> [i64; 10] {
    let mut c = [0; 10];
    if let Some(i) = V11_TAGS.iter().position(|&t| t == m) {
        c[i] = k;
    }
    c
}

fn check_am(a: i64, m: i64) -> Result<()> {
    if (0..=5).contains(&a) && (0..=10).contains(&m) {
        Ok(())
    } else {
        Err(DissectionError::BadIndex(format!("(a, m) = ({a}, {m})")))
    }
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The printed table row for `Q_{a,m}`, `m != 6`.
pub fn q_entry(a: i64, m: i64) -> &'static QEntry {
    Q_ENTRIES
        .iter()
        .find(|e| e.a == a && e.m == m)
        .expect("table covers every (a, m) with m != 6")
}

/// Mock component of residue `m` in the dissected variable:
/// `q^2 g(q^2)`, `q^3 g(q^4)`, `q^3 g(q^5)`, `q^2 g(q^3)`, `q^-1 + g(q)`
/// for `m = 0, 4, 7, 9, 10`, all with base `q^11`.
pub fn mock_component(m: i64, order: i64) -> Result<LaurentSeries> {
    let (shift, a) = match m {
        0 => (2, 2),
        4 => (3, 4),
        7 => (3, 5),
        9 => (2, 3),
        10 => (0, 1),
        _ => return Err(DissectionError::BadIndex(format!("mock residue {m}"))),
    };
    let idx = MockIndex::new(a, 11).expect("0 < a < 11");
    let g = mock_g(idx, order - shift).shift(shift);
    let g = if m == 10 {
        let pole = LaurentSeries::monomial(ratio(1, 1), -1, order)?;
        &g + &pole
    } else {
        g
    };
    Ok(g.truncate(order)?)
}

/// `v11(c)` as a series in `q`, known below `order`.
pub fn build_v11(c: &V11Coeffs, order: i64) -> Result<LaurentSeries> {
    let basis = Basis::shared(dissected_order(order));
    assemble(order, |m| Ok(basis.v11_component(c, m)))
}

/// `G11(c)` as a series in `q`, known below `order`.
pub fn build_g11(c: &G11Coeffs, order: i64) -> Result<LaurentSeries> {
    let basis = Basis::shared(dissected_order(order));
    assemble(order, |m| Ok(basis.g11_component(c, m)))
}

/// `Theta(c)` to `order`.
pub fn build_theta(c: &ThetaCoeffs, order: i64) -> LaurentSeries {
    Basis::shared(order).theta(c)
}

pub fn build_bracket(c: &BracketCoeffs, order: i64) -> LaurentSeries {
    Basis::shared(order).bracket(c)
}

pub fn build_residue_bracket(c: &ResidueBracketCoeffs, order: i64) -> LaurentSeries {
    Basis::shared(order).residue_bracket(c)
}

pub fn q_table(a: i64, m: i64, order: i64) -> Result<LaurentSeries> {
    Basis::shared(order).q_table(a, m)
}

pub fn qc_table(a: i64, m: i64, order: i64) -> Result<LaurentSeries> {
    Basis::shared(order).qc_table(a, m)
}

/// Dissected order whose elements cover every exponent below `order` in `q`.
pub fn dissected_order(order: i64) -> i64 {
    order.div_euclid(11) + 2
}

/// `sum_m q^m F_m(q^11)`, truncated to `order`.
pub fn assemble(
    order: i64,
    mut component: impl FnMut(i64) -> Result<LaurentSeries>,
) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero();
    for m in 0..11 {
        let f = component(m)?;
        if f.is_exact_zero() {
            continue;
        }
        acc = &acc + &f.dilate(11)?.shift(m);
    }
    if acc.is_exact_zero() {
        return Ok(acc);
    }
    Ok(acc.truncate(order)?)
}

/// The full rank dissection of `D(a, 11)` as printed: `G11 + v11 + sum_m
/// Theta_{a,m}(q^11) q^m`.
pub fn rank_dissection(a: i64, order: i64) -> Result<LaurentSeries> {
    check_am(a, 0)?;
    let basis = Basis::shared(dissected_order(order));
    let (g, v) = &RANK_ROWS[a as usize];
    assemble(order, |m| {
        let s = &basis.g11_component(g, m) + &basis.v11_component(v, m);
        Ok(&s + &basis.rank_theta_part(a, m)?)
    })
}

/// The full crank dissection `v11(row a)`.
pub fn crank_dissection(a: i64, order: i64) -> Result<LaurentSeries> {
    check_am(a, 0)?;
    build_v11(&CRANK_ROWS[a as usize], order)
}

/// Theta-quotient rows whose position is `(a, m)`.
pub fn theta_form_at(a: i64, m: i64) -> Option<&'static ThetaForm> {
    THETA_FORMS.iter().find(|f| f.a == a && f.m == m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v11_slot_lookup() {
        let c = CRANK_ROWS[0];
        assert_eq!(c.get(0), Some(10));
        assert_eq!(c.get(7), Some(-4));
        assert_eq!(c.get(6), None);
        assert_eq!(c.get(11), None);
    }

    #[test]
    fn residue_six_has_no_bracket() {
        assert_eq!(
            ResidueBracketCoeffs::new([0; 6], 6),
            Err(DissectionError::NoBracket(6))
        );
    }

    #[test]
    fn zero_combinators() {
        let b = Basis::new(20);
        assert!(b.theta(&ThetaCoeffs([0; 5])).is_exact_zero());
        assert!(b.bracket(&BracketCoeffs([0; 5])).is_exact_zero());
        assert!(build_v11(&V11Coeffs([0; 10]), 50).unwrap().is_exact_zero());
        assert!(build_g11(&G11Coeffs([0; 5]), 50).unwrap().is_exact_zero());
    }

    #[test]
    fn slot_eight_lands_above_the_constant() {
        let mut c = [0; 10];
        c[7] = 1;
        let s = build_v11(&V11Coeffs(c), 60).unwrap();
        let d = s.dissect(11, 8).unwrap().normalized();
        assert!(d.leading_exponent().unwrap() >= 1);
        assert_eq!(s.normalized().leading_exponent(), Some(19));
    }

    #[test]
    fn obrien_bracket_is_j11_squared() {
        let b = Basis::new(60);
        let lhs = b.bracket(&BracketCoeffs([1, -1, -1, -1, -1]));
        let rhs = b.eval(ThetaMonomial::new(0, 0, 2, [0; 5]));
        assert!(lhs.eq_to_order(&rhs, 60).unwrap());
    }

    #[test]
    fn mock_component_ten_has_pole() {
        let s = mock_component(10, 10).unwrap();
        assert_eq!(s.coeff(-1).unwrap(), ratio(1, 1));
        assert_eq!(s.valuation(), -1);
    }
}

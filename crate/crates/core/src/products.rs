//! Named q-products and q-series: Pochhammer symbols, Euler products,
//! Jacobi theta functions `J_{a,m}`, the universal mock theta function
//! `g(x; q)`, `Phi_{p,a}` and Eisenstein series.
//!
//! Infinite products are expanded by multiplying in one binomial factor at a
//! time on a dense integer buffer, which is exact and avoids generic series
//! multiplication.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{LaurentSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("infinite product (q^{a};q^{m})_inf does not converge")]
    NonConvergent { a: i64, m: i64 },
    #[error("invalid index: {0}")]
    BadIndex(String),
}

pub type Result<T> = std::result::Result<T, ProductError>;

/// Length of a Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(u64),
    Infinite,
}

/// `(q^a; q^m)_n`, known on `[valuation, order)`.
pub fn pochhammer(a: i64, m: i64, n: PochLength, order: i64) -> Result<LaurentSeries> {
    match n {
        PochLength::Infinite => {
            if a <= 0 || m <= 0 {
                return Err(ProductError::NonConvergent { a, m });
            }
            if order <= 0 {
                return Err(SeriesError::EmptyWindow.into());
            }
            let mut c = unit_buffer(order);
            let mut e = a;
            while e < order {
                mul_binomial(&mut c, e);
                e += m;
            }
            Ok(LaurentSeries::from_integers(0, order, c, BigInt::one())?)
        }
        PochLength::Finite(n) => {
            // dense Laurent polynomial with lowest exponent `lo`
            let mut lo = 0i64;
            let mut c = vec![BigInt::one()];
            for i in 0..n as i64 {
                let e = a + m * i;
                let new_lo = lo.min(lo + e);
                let new_len = (c.len() as i64 + e.abs()) as usize;
                let mut out = vec![BigInt::zero(); new_len];
                for (k, x) in c.iter().enumerate() {
                    out[(lo - new_lo) as usize + k] += x;
                    out[(lo + e - new_lo) as usize + k] -= x;
                }
                lo = new_lo;
                c = out;
            }
            if c.iter().all(|x| x.is_zero()) {
                return Ok(LaurentSeries::zero());
            }
            Ok(LaurentSeries::from_integers(lo, order, c_trim(c, lo, order), BigInt::one())?)
        }
    }
}

fn c_trim(mut c: Vec<BigInt>, lo: i64, order: i64) -> Vec<BigInt> {
    c.truncate((order - lo).max(0) as usize);
    c
}

fn unit_buffer(order: i64) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order.max(1) as usize];
    c[0] = BigInt::one();
    c
}

/// In place `c *= (1 - q^e)` for `e >= 1`, truncated to the buffer length.
fn mul_binomial(c: &mut [BigInt], e: i64) {
    let e = e as usize;
    for j in (e..c.len()).rev() {
        if !c[j - e].is_zero() {
            let t = c[j - e].clone();
            c[j] -= t;
        }
    }
}

/// In place `c /= (1 - q^e)` for `e >= 1`, truncated to the buffer length.
fn div_binomial(c: &mut [BigInt], e: i64) {
    let e = e as usize;
    for j in e..c.len() {
        if !c[j - e].is_zero() {
            let t = c[j - e].clone();
            c[j] += t;
        }
    }
}

/// Jacobi theta function `J_{a,m} = j(q^a; q^m)` from the bilateral sum
/// `sum_k (-1)^k q^{m k(k-1)/2 + a k}`, known below `order`.
pub fn theta_j(a: i64, m: i64, order: i64) -> LaurentSeries {
    assert!(m >= 1, "theta_j needs m >= 1");
    let e = |k: i64| m * k * (k - 1) / 2 + a * k;
    // exponent is convex in k with vertex at 1/2 - a/m
    let vertex = (m - 2 * a).div_euclid(2 * m);
    let mut ks = Vec::new();
    let mut k = vertex;
    loop {
        if e(k) < order {
            ks.push(k);
        } else if k > vertex + 1 {
            break;
        }
        k += 1;
    }
    let mut k = vertex - 1;
    loop {
        if e(k) < order {
            ks.push(k);
        } else if k < vertex - 1 {
            break;
        }
        k -= 1;
    }
    let lo = (vertex - 2..=vertex + 2).map(e).min().unwrap().min(0);
    let trunc = order.max(lo + 1);
    let mut c = vec![BigInt::zero(); (trunc - lo) as usize];
    for k in ks {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        c[(e(k) - lo) as usize] += sign;
    }
    if c.iter().all(|x| x.is_zero()) {
        return LaurentSeries::zero();
    }
    LaurentSeries::from_integers(lo, trunc, c, BigInt::one()).expect("nonempty window")
}

/// `J_{a,m}` from the triple product `(q^a;q^m)(q^{m-a};q^m)(q^m;q^m)` for `0 < a < m`.
pub fn theta_j_product(a: i64, m: i64, order: i64) -> Result<LaurentSeries> {
    if !(0 < a && a < m) {
        return Err(ProductError::BadIndex(format!("J_{{{a},{m}}} product form needs 0<a<m")));
    }
    let mut c = unit_buffer(order);
    for start in [a, m - a, m] {
        let mut e = start;
        while e < order {
            mul_binomial(&mut c, e);
            e += m;
        }
    }
    Ok(LaurentSeries::from_integers(0, order, c, BigInt::one())?)
}

/// `J_m = (q^m; q^m)_inf` by the pentagonal number theorem.
pub fn euler_j(m: i64, order: i64) -> LaurentSeries {
    assert!(m >= 1, "euler_j needs m >= 1");
    let order = order.max(1);
    let mut c = vec![BigInt::zero(); order as usize];
    c[0] = BigInt::one();
    for k in 1.. {
        let lo = m * k * (3 * k - 1) / 2;
        if lo >= order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        c[lo as usize] += sign;
        let hi = m * k * (3 * k + 1) / 2;
        if hi < order {
            c[hi as usize] += sign;
        }
    }
    LaurentSeries::from_integers(0, order, c, BigInt::one()).expect("nonempty window")
}

/// Folds an index onto `1..=5` using `J_{a,11} = J_{11-a,11}`.
pub fn fold_index(i: i64) -> Option<usize> {
    let r = i.rem_euclid(11);
    match r {
        0 => None,
        1..=5 => Some(r as usize),
        _ => Some((11 - r) as usize),
    }
}

/// `P_i = J_{i,11}`.
pub fn p_theta(i: i64, order: i64) -> LaurentSeries {
    theta_j(i, 11, order)
}

/// `X_i = J_{11 i, 121}`.
pub fn x_theta(i: i64, order: i64) -> LaurentSeries {
    theta_j(11 * i, 121, order)
}

/// `P_a / J_11 = (q^a; q^11)_inf (q^{11-a}; q^11)_inf` for `1 <= a <= 10`.
pub fn p_tilde(a: i64, order: i64) -> Result<LaurentSeries> {
    if !(1..=10).contains(&a) {
        return Err(ProductError::BadIndex(format!("P~_{a}")));
    }
    let x = pochhammer(a, 11, PochLength::Infinite, order)?;
    let y = pochhammer(11 - a, 11, PochLength::Infinite, order)?;
    Ok(&x * &y)
}

/// Index of `g(q^a; q^p)` with `0 < a < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MockIndex {
    a: i64,
    p: i64,
}

impl MockIndex {
    pub fn new(a: i64, p: i64) -> Result<Self> {
        if 0 < a && a < p {
            Ok(MockIndex { a, p })
        } else {
            Err(ProductError::BadIndex(format!("g(q^{a};q^{p}) needs 0<a<p")))
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn p(&self) -> i64 {
        self.p
    }
}

/// Universal mock theta function
/// `g(x; q) = x^{-1} (-1 + sum_n q^{n^2} / ((x)_{n+1} (q/x)_n))`
/// at `x = q^a` with base `q^p`, known on `[-a, order)`.
pub fn mock_g(idx: MockIndex, order: i64) -> LaurentSeries {
    let MockIndex { a, p } = idx;
    let len = order + a;
    assert!(len > 0, "mock_g window is empty");
    let mut sum = vec![BigInt::zero(); len as usize];
    // inv = 1 / ((q^a;q^p)_{n+1} (q^{p-a};q^p)_n)
    let mut inv = unit_buffer(len);
    div_binomial(&mut inv, a);
    let mut n = 0i64;
    while p * n * n < len {
        let s = (p * n * n) as usize;
        for (slot, x) in sum[s..].iter_mut().zip(&inv) {
            *slot += x;
        }
        n += 1;
        div_binomial(&mut inv, a + p * n);
        div_binomial(&mut inv, p - a + p * (n - 1));
    }
    sum[0] -= 1;
    LaurentSeries::from_integers(0, len, sum, BigInt::one())
        .expect("nonempty window")
        .shift(-a)
}

/// `Phi_{p,a}` for prime `p > 3` and `1 <= a <= (p-1)/2`, by its defining sum
/// evaluated with generic series arithmetic.
pub fn phi(p: i64, a: i64, order: i64) -> Result<LaurentSeries> {
    if p <= 3 || !(1..=(p - 1) / 2).contains(&a) {
        return Err(ProductError::BadIndex(format!("Phi_{{{p},{a}}}")));
    }
    let subtract_one = match 6 * a {
        x if x < p => false,
        x if x < 3 * p => true,
        _ => return Err(ProductError::BadIndex(format!("Phi_{{{p},{a}}}"))),
    };
    // zero with the full window
    let mut total = LaurentSeries::monomial(BigRational::zero(), 0, order.max(1))?;
    let mut n = 0i64;
    while p * n * n < order {
        let den = &pochhammer(a, p, PochLength::Finite(n as u64 + 1), order)?
            * &pochhammer(p - a, p, PochLength::Finite(n as u64), order)?;
        let term = den.invert(order)?.shift(p * n * n).truncate(order)?;
        total = &total + &term;
        n += 1;
    }
    if subtract_one {
        total = &total - &LaurentSeries::one(order);
    }
    Ok(total)
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let s = (0..m).fold(BigRational::zero(), |acc, k| {
            acc + BigRational::from_integer(binomial(m + 1, k)) * &b[k]
        });
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b[n].clone()
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Eisenstein series `E_j = 1 - (2j / B_j) sum_n sigma_{j-1}(n) q^n` for even `j >= 2`.
pub fn eisenstein(j: usize, order: i64) -> Result<LaurentSeries> {
    if j < 2 || j % 2 == 1 {
        return Err(ProductError::BadIndex(format!("E_{j}")));
    }
    let factor = -BigRational::from_integer(BigInt::from(2 * j)) / bernoulli(j);
    let mut coeffs = vec![BigRational::zero(); order.max(1) as usize];
    coeffs[0] = BigRational::one();
    for n in 1..order {
        let mut sigma = BigInt::zero();
        for d in 1..=n {
            if n % d == 0 {
                sigma += BigInt::from(d).pow(j as u32 - 1);
            }
        }
        coeffs[n as usize] = &factor * BigRational::from_integer(sigma);
    }
    Ok(LaurentSeries::new(0, coeffs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn empty_pochhammer_is_one() {
        let s = pochhammer(1, 1, PochLength::Finite(0), 5).unwrap();
        assert!(s.eq_to_order(&LaurentSeries::one(5), 5).unwrap());
    }

    #[test]
    fn finite_pochhammer_with_zero_factor() {
        assert!(pochhammer(0, 1, PochLength::Finite(2), 5).unwrap().is_exact_zero());
        assert!(pochhammer(-1, 1, PochLength::Finite(2), 5).unwrap().is_exact_zero());
    }

    #[test]
    fn divergent_pochhammer() {
        assert!(matches!(
            pochhammer(0, 1, PochLength::Infinite, 5),
            Err(ProductError::NonConvergent { .. })
        ));
    }

    #[test]
    fn finite_negative_exponent() {
        // (q^-1;q)_1 = 1 - q^-1
        let s = pochhammer(-1, 1, PochLength::Finite(1), 3).unwrap();
        assert_eq!(s.valuation(), -1);
        assert_eq!(s.coeff(-1).unwrap(), int(-1));
        assert_eq!(s.coeff(0).unwrap(), int(1));
    }

    #[test]
    fn euler_matches_pochhammer() {
        let a = euler_j(1, 60);
        let b = pochhammer(1, 1, PochLength::Infinite, 60).unwrap();
        assert!(a.eq_to_order(&b, 60).unwrap());
        assert_eq!(a.coeff(12).unwrap(), int(-1));
    }

    #[test]
    fn theta_negative_exponents() {
        // J_{12,11} = -q^{-1} J_{1,11}
        let a = theta_j(12, 11, 80);
        let b = theta_j(1, 11, 81).shift(-1);
        assert!(a.eq_to_order(&-b, 80).unwrap());
        assert!(theta_j(0, 7, 50).is_exact_zero());
    }

    #[test]
    fn mock_g_low_order() {
        // g(q;q^11) = q^{-1}(-1 + 1/(1-q) + ...) = 1 + q + ...
        let g = mock_g(MockIndex::new(1, 11).unwrap(), 5);
        assert_eq!(g.valuation(), -1);
        assert_eq!(g.coeff(-1).unwrap(), int(0));
        assert_eq!(g.coeff(0).unwrap(), int(1));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(1), BigRational::new((-1).into(), 2.into()));
        assert_eq!(bernoulli(4), BigRational::new((-1).into(), 30.into()));
        assert_eq!(bernoulli(6), BigRational::new(1.into(), 42.into()));
        assert_eq!(bernoulli(3), BigRational::zero());
    }

    #[test]
    fn eisenstein_heads() {
        let e4 = eisenstein(4, 4).unwrap();
        assert_eq!(e4.coeff(1).unwrap(), int(240));
        assert_eq!(e4.coeff(2).unwrap(), int(2160));
        let e6 = eisenstein(6, 3).unwrap();
        assert_eq!(e6.coeff(1).unwrap(), int(-504));
        assert!(eisenstein(5, 3).is_err());
    }
}

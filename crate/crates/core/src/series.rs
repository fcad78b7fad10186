//! Truncated Laurent series in `q` with exact rational coefficients.
//!
//! A series is known on the window `[valuation, trunc)`. Coefficients below
//! the valuation are zero; coefficients at or above `trunc` are unknown.
//! Every operation narrows the window to what its inputs determine, so a
//! result never exposes an unverified coefficient.
//!
//! Storage is one positive common denominator plus a dense vector of
//! integer numerators, kept in lowest terms. This behaves exactly like a
//! vector of rationals but avoids a gcd per coefficient product.
//!
//! The exact zero series uses the empty window `valuation == trunc`. It
//! compares equal to zero on every window and is absorbing for `mul`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("empty window")]
    EmptyWindow,
    #[error("not a unit: coefficient of q^{0} is zero")]
    NotAUnit(i64),
    #[error("exponent {n} outside window [{valuation}, {trunc})")]
    OutOfWindow { n: i64, valuation: i64, trunc: i64 },
    #[error("not {p}-integral: coefficient of q^{n}")]
    NotPIntegral { p: u64, n: i64 },
    #[error("invalid modulus {0}")]
    BadModulus(i64),
}

pub type Result<T> = std::result::Result<T, SeriesError>;

const EMPTY: i64 = i64::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    trunc: i64,
    den: BigInt,
    nums: Vec<BigInt>,
}

impl LaurentSeries {
    /// The exact zero series.
    pub fn zero() -> Self {
        LaurentSeries {
            valuation: EMPTY,
            trunc: EMPTY,
            den: BigInt::one(),
            nums: Vec::new(),
        }
    }

    /// Series with the given rational coefficients starting at `valuation`,
    /// known on exactly `[valuation, valuation + coeffs.len())`.
    pub fn new(valuation: i64, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyWindow);
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let trunc = valuation + coeffs.len() as i64;
        Ok(Self::from_parts(valuation, trunc, nums, den))
    }

    /// Integer coefficients starting at `valuation`.
    pub fn from_i64(valuation: i64, coeffs: &[i64]) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyWindow);
        }
        let nums = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Ok(Self::from_parts(
            valuation,
            valuation + coeffs.len() as i64,
            nums,
            BigInt::one(),
        ))
    }

    /// Integer numerators over a common denominator. `nums` is padded with
    /// zeros or cut so that it covers `[valuation, trunc)`.
    pub fn from_integers(
        valuation: i64,
        trunc: i64,
        mut nums: Vec<BigInt>,
        den: BigInt,
    ) -> Result<Self> {
        if trunc <= valuation || den.is_zero() {
            return Err(SeriesError::EmptyWindow);
        }
        nums.resize((trunc - valuation) as usize, BigInt::zero());
        Ok(Self::from_parts(valuation, trunc, nums, den))
    }

    /// `c * q^e` known on `[e, trunc)`.
    pub fn monomial(c: BigRational, e: i64, trunc: i64) -> Result<Self> {
        if trunc <= e {
            return Err(SeriesError::EmptyWindow);
        }
        let mut nums = vec![BigInt::zero(); (trunc - e) as usize];
        nums[0] = c.numer().clone();
        Ok(Self::from_parts(e, trunc, nums, c.denom().clone()))
    }

    /// The constant 1 known on `[0, trunc)`.
    pub fn one(trunc: i64) -> Self {
        Self::monomial(BigRational::one(), 0, trunc.max(1)).expect("nonempty window")
    }

    pub(crate) fn from_parts(valuation: i64, trunc: i64, nums: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(nums.len() as i64, trunc - valuation);
        let mut s = LaurentSeries {
            valuation,
            trunc,
            den,
            nums,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for x in self.nums.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for x in &self.nums {
            if g.is_one() {
                return;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for x in self.nums.iter_mut() {
                *x /= &g;
            }
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.valuation == EMPTY && self.trunc == EMPTY
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Common denominator of all coefficients, in lowest terms.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Numerators over [`denominator`](Self::denominator), indexed from the valuation.
    pub fn numerators(&self) -> &[BigInt] {
        &self.nums
    }

    /// Exact coefficient of `q^n`; errors outside `[valuation, trunc)`.
    pub fn coeff(&self, n: i64) -> Result<BigRational> {
        if self.is_exact_zero() {
            return Ok(BigRational::zero());
        }
        if n < self.valuation || n >= self.trunc {
            return Err(SeriesError::OutOfWindow {
                n,
                valuation: self.valuation,
                trunc: self.trunc,
            });
        }
        Ok(self.ratio(&self.nums[(n - self.valuation) as usize]))
    }

    /// Coefficient of `q^n` for any `n < trunc`, zero below the valuation.
    fn known(&self, n: i64) -> Result<BigRational> {
        if self.is_exact_zero() || n < self.valuation {
            return Ok(BigRational::zero());
        }
        self.coeff(n)
    }

    fn ratio(&self, x: &BigInt) -> BigRational {
        BigRational::new(x.clone(), self.den.clone())
    }

    /// `(exponent, coefficient)` pairs over the window.
    pub fn terms(&self) -> impl Iterator<Item = (i64, BigRational)> + '_ {
        self.nums
            .iter()
            .enumerate()
            .map(move |(i, x)| (self.valuation + i as i64, self.ratio(x)))
    }

    /// Smallest exponent with a nonzero coefficient, if any.
    pub fn leading_exponent(&self) -> Option<i64> {
        self.nums
            .iter()
            .position(|x| !x.is_zero())
            .map(|i| self.valuation + i as i64)
    }

    /// Drops leading zero coefficients, raising the valuation.
    pub fn normalized(&self) -> Self {
        match self.nums.iter().position(|x| !x.is_zero()) {
            Some(0) | None => self.clone(),
            Some(i) => LaurentSeries {
                valuation: self.valuation + i as i64,
                trunc: self.trunc,
                den: self.den.clone(),
                nums: self.nums[i..].to_vec(),
            },
        }
    }

    /// Restricts the window to exponents below `order`.
    pub fn truncate(&self, order: i64) -> Result<Self> {
        if self.is_exact_zero() || order >= self.trunc {
            return Ok(self.clone());
        }
        if order <= self.valuation {
            return Err(SeriesError::EmptyWindow);
        }
        let mut nums = self.nums.clone();
        nums.truncate((order - self.valuation) as usize);
        Ok(Self::from_parts(self.valuation, order, nums, self.den.clone()))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_exact_zero() {
            return Self::zero();
        }
        let nums = self.nums.iter().map(|x| x * c.numer()).collect();
        Self::from_parts(self.valuation, self.trunc, nums, &self.den * c.denom())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        if self.is_exact_zero() {
            return self.clone();
        }
        let mut s = self.clone();
        s.valuation += d;
        s.trunc += d;
        s
    }

    /// Substitutes `q -> q^k` for `k >= 1`.
    pub fn dilate(&self, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(SeriesError::BadModulus(k));
        }
        if self.is_exact_zero() || k == 1 {
            return Ok(self.clone());
        }
        let valuation = k * self.valuation;
        let trunc = k * (self.trunc - 1) + 1;
        let mut nums = vec![BigInt::zero(); (trunc - valuation) as usize];
        for (i, x) in self.nums.iter().enumerate() {
            nums[i * k as usize] = x.clone();
        }
        Ok(LaurentSeries {
            valuation,
            trunc,
            den: self.den.clone(),
            nums,
        })
    }

    /// The series `sum_n a(r n + m) q^n` over every `n` with `r n + m` in the window.
    pub fn dissect(&self, r: i64, m: i64) -> Result<Self> {
        if r < 1 {
            return Err(SeriesError::BadModulus(r));
        }
        if self.is_exact_zero() {
            return Ok(self.clone());
        }
        let lo = Integer::div_ceil(&(self.valuation - m), &r);
        let hi = Integer::div_floor(&(self.trunc - 1 - m), &r) + 1;
        if hi <= lo {
            return Err(SeriesError::EmptyWindow);
        }
        let nums = (lo..hi)
            .map(|n| self.nums[(r * n + m - self.valuation) as usize].clone())
            .collect();
        Ok(Self::from_parts(lo, hi, nums, self.den.clone()))
    }

    /// Inverse `b` with `a b = 1` on `[0, order)`, or on the largest window
    /// the precision of `a` supports if that is smaller.
    pub fn invert(&self, order: i64) -> Result<Self> {
        if self.is_exact_zero() || self.nums[0].is_zero() {
            return Err(SeriesError::NotAUnit(self.valuation));
        }
        let v = self.valuation;
        let len = order.min(self.trunc - v);
        if len <= 0 {
            return Err(SeriesError::EmptyWindow);
        }
        let len = len as usize;
        let a = &self.nums[..len.min(self.nums.len())];
        let (inv_nums, inv_den) = invert_integer(a, len);
        // (nums / den)^-1 = den * inv_nums / inv_den
        let nums = inv_nums.into_iter().map(|x| x * &self.den).collect();
        Ok(Self::from_parts(-v, -v + len as i64, nums, inv_den))
    }

    /// `self / other` to the precision both operands support.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_exact_zero() {
            return Err(SeriesError::NotAUnit(0));
        }
        let inv = other.invert(other.trunc - other.valuation)?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents go through [`invert`](Self::invert).
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let inv = self.invert(self.trunc - self.valuation)?;
            return inv.pow(-k);
        }
        if k == 0 {
            let rel = if self.is_exact_zero() {
                1
            } else {
                self.trunc - self.valuation
            };
            return Ok(Self::one(rel));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(x) => &x * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc.expect("k > 0"))
    }

    /// Coefficients reduced to canonical residues in `[0, p)`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        if p < 2 {
            return Err(SeriesError::BadModulus(p as i64));
        }
        if self.is_exact_zero() {
            return Ok(self.clone());
        }
        let pb = BigInt::from(p);
        let d = self.den.mod_floor(&pb);
        if d.is_zero() {
            let i = self
                .nums
                .iter()
                .position(|x| !x.mod_floor(&pb).is_zero())
                .unwrap_or(0);
            return Err(SeriesError::NotPIntegral {
                p,
                n: self.valuation + i as i64,
            });
        }
        let dinv = mod_inverse(&d, &pb).ok_or(SeriesError::BadModulus(p as i64))?;
        let nums = self
            .nums
            .iter()
            .map(|x| (x * &dinv).mod_floor(&pb))
            .collect();
        Ok(Self::from_parts(self.valuation, self.trunc, nums, BigInt::one()))
    }

    /// First exponent below `n` where the two series differ, with both coefficients.
    pub fn first_difference(
        &self,
        other: &Self,
        n: i64,
    ) -> Result<Option<(i64, BigRational, BigRational)>> {
        let limit = self.trunc.min(other.trunc);
        if n > limit {
            return Err(SeriesError::OutOfWindow {
                n,
                valuation: self.valuation.min(other.valuation),
                trunc: limit,
            });
        }
        let start = self.valuation.min(other.valuation);
        if start >= n {
            return Ok(None);
        }
        // cross-multiplied integer comparison, rationals only for the report
        for e in start..n {
            let x = self.num_at(e);
            let y = other.num_at(e);
            if x * &other.den != y * &self.den {
                return Ok(Some((e, self.known(e)?, other.known(e)?)));
            }
        }
        Ok(None)
    }

    fn num_at(&self, e: i64) -> BigInt {
        if self.is_exact_zero() || e < self.valuation || e >= self.trunc {
            BigInt::zero()
        } else {
            self.nums[(e - self.valuation) as usize].clone()
        }
    }

    /// Whether the two series agree on every exponent below `n`.
    pub fn eq_to_order(&self, other: &Self, n: i64) -> Result<bool> {
        Ok(self.first_difference(other, n)?.is_none())
    }

    /// Smallest exponent below `n` with a negative coefficient, if any.
    pub fn is_nonneg_to_order(&self, n: i64) -> Result<Option<i64>> {
        if n > self.trunc {
            return Err(SeriesError::OutOfWindow {
                n,
                valuation: self.valuation,
                trunc: self.trunc,
            });
        }
        if self.is_exact_zero() {
            return Ok(None);
        }
        let end = ((n - self.valuation).max(0) as usize).min(self.nums.len());
        Ok(self.nums[..end]
            .iter()
            .position(|x| x.is_negative())
            .map(|i| self.valuation + i as i64))
    }

    /// Integer coefficients as `i128`, if every coefficient is integral and fits.
    pub fn to_i128_vec(&self) -> Option<Vec<i128>> {
        if !self.den.is_one() {
            return None;
        }
        self.nums.iter().map(|x| x.to_i128()).collect()
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Inverse of an integer power series with nonzero constant term, to `len`
/// terms, as numerators over a common denominator.
fn invert_integer(a: &[BigInt], len: usize) -> (Vec<BigInt>, BigInt) {
    let a0 = &a[0];
    let support: Vec<(usize, &BigInt)> = a
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, x)| !x.is_zero())
        .collect();
    if a0.abs().is_one() {
        if let Some(b) = invert_unit_i128(a, len) {
            return (b.into_iter().map(BigInt::from).collect(), BigInt::one());
        }
        // b_n = -a0 * sum_{k>=1} a_k b_{n-k}, valid since a0 = 1/a0
        let mut b: Vec<BigInt> = Vec::with_capacity(len);
        b.push(a0.clone());
        for n in 1..len {
            let mut acc = BigInt::zero();
            for &(k, ak) in &support {
                if k > n {
                    break;
                }
                acc += ak * &b[n - k];
            }
            b.push(if a0.is_positive() { -acc } else { acc });
        }
        return (b, BigInt::one());
    }
    // B_n = b_n a0^{n+1}:  B_0 = 1,  B_n = -sum_k a_k a0^{k-1} B_{n-k}
    let mut pw = vec![BigInt::one()];
    for _ in 0..len {
        let next = pw.last().unwrap() * a0;
        pw.push(next);
    }
    let mut big_b: Vec<BigInt> = Vec::with_capacity(len);
    big_b.push(BigInt::one());
    for n in 1..len {
        let mut acc = BigInt::zero();
        for &(k, ak) in &support {
            if k > n {
                break;
            }
            acc += ak * &pw[k - 1] * &big_b[n - k];
        }
        big_b.push(-acc);
    }
    let nums = big_b
        .into_iter()
        .enumerate()
        .map(|(n, x)| x * &pw[len - 1 - n])
        .collect();
    (nums, pw[len].clone())
}

fn invert_unit_i128(a: &[BigInt], len: usize) -> Option<Vec<i128>> {
    let a0 = a[0].to_i128()?;
    let support: Vec<(usize, i128)> = a
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| x.to_i128().map(|v| (k, v)))
        .collect::<Option<_>>()?;
    let mut b: Vec<i128> = Vec::with_capacity(len);
    b.push(a0);
    for n in 1..len {
        let mut acc: i128 = 0;
        for &(k, ak) in &support {
            if k > n {
                break;
            }
            acc = acc.checked_add(ak.checked_mul(b[n - k])?)?;
        }
        b.push(acc.checked_mul(-a0)?);
    }
    Some(b)
}

fn bits(v: &[BigInt]) -> u64 {
    v.iter().map(|x| x.bits()).max().unwrap_or(0)
}

/// Truncated product of two dense integer sequences, first `len` terms.
fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    // iterate over the sparser operand
    let nnz = |v: &[BigInt]| v.iter().filter(|x| !x.is_zero()).count();
    let (sparse, dense) = if nnz(a) <= nnz(b) { (a, b) } else { (b, a) };
    let terms = sparse.len().min(dense.len()).max(1) as u64;
    let log = 64 - terms.leading_zeros() as u64;
    if bits(sparse) + bits(dense) + log < 126 {
        let d: Vec<i128> = dense.iter().map(|x| x.to_i128().unwrap()).collect();
        let mut out = vec![0i128; len];
        for (i, x) in sparse.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            let x = x.to_i128().unwrap();
            let end = (len - i).min(d.len());
            for (o, y) in out[i..i + end].iter_mut().zip(&d[..end]) {
                *o += x * y;
            }
        }
        return out.into_iter().map(BigInt::from).collect();
    }
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in sparse.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        let end = (len - i).min(dense.len());
        for (o, y) in out[i..i + end].iter_mut().zip(&dense[..end]) {
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
}

fn add_impl(a: &LaurentSeries, b: &LaurentSeries, negate_b: bool) -> LaurentSeries {
    if b.is_exact_zero() {
        return a.clone();
    }
    if a.is_exact_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let v = a.valuation.min(b.valuation);
    let t = a.trunc.min(b.trunc);
    let den = a.den.lcm(&b.den);
    let fa = &den / &a.den;
    let fb = &den / &b.den;
    let fb = if negate_b { -fb } else { fb };
    let mut nums = vec![BigInt::zero(); (t - v) as usize];
    for (e, slot) in (v..t).zip(nums.iter_mut()) {
        if e >= a.valuation {
            let x = &a.nums[(e - a.valuation) as usize];
            if !x.is_zero() {
                *slot += x * &fa;
            }
        }
        if e >= b.valuation {
            let y = &b.nums[(e - b.valuation) as usize];
            if !y.is_zero() {
                *slot += y * &fb;
            }
        }
    }
    LaurentSeries::from_parts(v, t, nums, den)
}

fn mul_impl(a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
    if a.is_exact_zero() || b.is_exact_zero() {
        return LaurentSeries::zero();
    }
    let v = a.valuation + b.valuation;
    let t = (a.valuation + b.trunc).min(b.valuation + a.trunc);
    let nums = convolve(&a.nums, &b.nums, (t - v) as usize);
    LaurentSeries::from_parts(v, t, nums, &a.den * &b.den)
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        let mut s = self.clone();
        for x in s.nums.iter_mut() {
            *x = -std::mem::take(x);
        }
        s
    }
}

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| add_impl(a, b, false));
binop!(Sub, sub, |a, b| add_impl(a, b, true));
binop!(Mul, mul, mul_impl);

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let unit = mag.is_one();
            if !unit || e == 0 {
                write!(f, "{}", mag)?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}q", if unit { "" } else { "*" })?,
                _ => write!(f, "{}q^{}", if unit { "" } else { "*" }, e)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: i64, c: &[i64]) -> LaurentSeries {
        LaurentSeries::from_i64(v, c).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn add_shrinks_to_common_window() {
        let a = ints(0, &[1, 2, 3]);
        let b = ints(-1, &[1, 1]);
        let s = &a + &b;
        assert_eq!((s.valuation(), s.trunc()), (-1, 1));
        assert_eq!(s.coeff(-1).unwrap(), r(1, 1));
        assert_eq!(s.coeff(0).unwrap(), r(2, 1));
    }

    #[test]
    fn exact_zero_is_identity_and_absorbing() {
        let a = ints(0, &[1, 2]);
        assert_eq!(&a + &LaurentSeries::zero(), a);
        assert!((&a * &LaurentSeries::zero()).is_exact_zero());
        assert_eq!(LaurentSeries::zero().coeff(17).unwrap(), r(0, 1));
    }

    #[test]
    fn mul_window_is_pessimistic() {
        let a = ints(1, &[1, 1, 1]); // [1,4)
        let b = ints(-2, &[1, 5]); // [-2,0)
        let p = &a * &b;
        assert_eq!((p.valuation(), p.trunc()), (-1, 1));
        assert_eq!(p.coeff(0).unwrap(), r(6, 1));
    }

    #[test]
    fn invert_one_minus_q() {
        let a = ints(0, &[1, -1, 0, 0, 0, 0]);
        let b = a.invert(6).unwrap();
        for n in 0..6 {
            assert_eq!(b.coeff(n).unwrap(), r(1, 1));
        }
    }

    #[test]
    fn invert_non_unit_lead() {
        let a = ints(-1, &[2, 1, 0, 0]);
        let b = a.invert(4).unwrap();
        assert_eq!(b.valuation(), 1);
        let prod = &a * &b;
        assert!(prod.eq_to_order(&LaurentSeries::one(3), 3).unwrap());
        assert_eq!(b.coeff(2).unwrap(), r(-1, 4));
    }

    #[test]
    fn invert_zero_lead_fails() {
        let a = ints(0, &[0, 1]);
        assert_eq!(a.invert(2), Err(SeriesError::NotAUnit(0)));
    }

    #[test]
    fn dissect_windows() {
        let a = ints(0, &[1, 1, 2, 3, 5, 7]);
        let d = a.dissect(5, 4).unwrap();
        assert_eq!((d.valuation(), d.trunc()), (0, 1));
        assert_eq!(d.coeff(0).unwrap(), r(5, 1));
        assert!(d.coeff(1).is_err());

        let b = LaurentSeries::from_integers(
            -1,
            22,
            vec![1.into(), 1.into(), 1.into()],
            1.into(),
        )
        .unwrap();
        let d = b.dissect(11, 10).unwrap();
        assert_eq!((d.valuation(), d.trunc()), (-1, 2));
        assert_eq!(d.coeff(-1).unwrap(), r(1, 1));
        assert_eq!(d.coeff(0).unwrap(), r(0, 1));
    }

    #[test]
    fn dilate_window() {
        let a = ints(-1, &[1, 2, 3]);
        let d = a.dilate(3).unwrap();
        assert_eq!((d.valuation(), d.trunc()), (-3, 4));
        assert_eq!(d.coeff(3).unwrap(), r(3, 1));
        assert_eq!(d.coeff(2).unwrap(), r(0, 1));
    }

    #[test]
    fn coeff_out_of_window_errors() {
        let a = ints(0, &[1, 2]);
        assert_eq!(a.coeff(1).unwrap(), r(2, 1));
        assert!(a.coeff(2).is_err());
        assert!(a.coeff(-1).is_err());
        assert_eq!(ints(-1, &[1]).coeff(-1).unwrap(), r(1, 1));
    }

    #[test]
    fn reduce_mod_rules() {
        let a = LaurentSeries::new(0, vec![r(1, 2), r(-3, 1)]).unwrap();
        let m = a.reduce_mod(11).unwrap();
        assert_eq!(m.coeff(0).unwrap(), r(6, 1));
        assert_eq!(m.coeff(1).unwrap(), r(8, 1));
        let b = LaurentSeries::new(0, vec![r(1, 1), r(1, 11)]).unwrap();
        assert_eq!(
            b.reduce_mod(11),
            Err(SeriesError::NotPIntegral { p: 11, n: 1 })
        );
    }

    #[test]
    fn nonneg_reports_first_violation() {
        let a = ints(0, &[1, 0, -2, 3, -1]);
        assert_eq!(a.is_nonneg_to_order(2).unwrap(), None);
        assert_eq!(a.is_nonneg_to_order(5).unwrap(), Some(2));
        assert!(a.is_nonneg_to_order(6).is_err());
    }

    #[test]
    fn big_coefficients_take_the_bigint_path() {
        let big: BigInt = BigInt::from(1u8) << 100;
        let a = LaurentSeries::from_integers(0, 3, vec![big.clone(), big.clone()], 1.into())
            .unwrap();
        let p = &a * &a;
        assert_eq!(p.coeff(1).unwrap(), BigRational::from_integer(&big * &big * 2));
    }

    #[test]
    fn pow_negative() {
        let a = ints(0, &[1, -1, 0, 0, 0]);
        let b = a.pow(-2).unwrap();
        for n in 0..5 {
            assert_eq!(b.coeff(n).unwrap(), r(n + 1, 1));
        }
    }
}

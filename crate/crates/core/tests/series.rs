use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qdissect::products::{euler_j, p_theta};
use qdissect::{LaurentSeries, SeriesError};

fn q(coeffs: &[i64]) -> LaurentSeries {
    LaurentSeries::from_i64(0, coeffs).unwrap()
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn arb_series() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..3, prop::collection::vec((-20i64..=20, 1i64..=5), 1..12)).prop_map(|(v, cs)| {
        LaurentSeries::new(v, cs.into_iter().map(|(n, d)| r(n, d)).collect()).unwrap()
    })
}

/// Unit at exponent 0 with a nonzero constant term.
fn arb_unit() -> impl Strategy<Value = LaurentSeries> {
    (prop::sample::select(vec![-3i64, -1, 1, 2, 7]), prop::collection::vec(-9i64..=9, 0..10)).prop_map(
        |(lead, rest)| {
            let mut c = vec![lead];
            c.extend(rest);
            q(&c)
        },
    )
}

fn agree(a: &LaurentSeries, b: &LaurentSeries) -> bool {
    let n = a.trunc().min(b.trunc());
    a.eq_to_order(b, n).unwrap()
}

proptest! {
    #[test]
    fn add_commutes(a in arb_series(), b in arb_series()) {
        prop_assume!(a.valuation().min(b.valuation()) < a.trunc().min(b.trunc()));
        prop_assert!(agree(&(&a + &b), &(&b + &a)));
    }

    #[test]
    fn mul_commutes_and_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert!(agree(&(&a * &b), &(&b * &a)));
        prop_assert!(agree(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
    }

    #[test]
    fn distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assume!(b.valuation().min(c.valuation()) < b.trunc().min(c.trunc()));
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        prop_assert!(agree(&lhs, &rhs));
    }

    #[test]
    fn inverse_is_inverse(a in arb_unit(), n in 1i64..15) {
        let b = a.invert(n).unwrap();
        let prod = &a * &b;
        let n = n.min(prod.trunc());
        prop_assert!(prod.eq_to_order(&LaurentSeries::one(n), n).unwrap());
    }

    #[test]
    fn dissections_reassemble(a in arb_series(), r in 1i64..6) {
        for e in a.valuation()..a.trunc() {
            let m = e.rem_euclid(r);
            let d = a.dissect(r, m).unwrap();
            prop_assert_eq!(d.coeff((e - m) / r).unwrap(), a.coeff(e).unwrap());
        }
        let pieces: Vec<_> = (0..r)
            .filter_map(|m| a.dissect(r, m).ok().map(|d| d.dilate(r).unwrap().shift(m)))
            .collect();
        if pieces.len() as i64 == r {
            let back = pieces.iter().fold(LaurentSeries::zero(), |acc, p| &acc + p);
            prop_assert!(back.eq_to_order(&a, back.trunc()).unwrap());
        }
    }

    #[test]
    fn dilations_compose(a in arb_series(), j in 1i64..4, k in 1i64..4) {
        let twice = a.dilate(j).unwrap().dilate(k).unwrap();
        let once = a.dilate(j * k).unwrap();
        prop_assert_eq!(twice.valuation(), once.valuation());
        prop_assert!(agree(&twice, &once));
    }

    #[test]
    fn reduction_is_additive(a in arb_series(), b in arb_series()) {
        prop_assume!(a.valuation().min(b.valuation()) < a.trunc().min(b.trunc()));
        let sum = (&a + &b).reduce_mod(11).unwrap();
        let parts = (&a.reduce_mod(11).unwrap() + &b.reduce_mod(11).unwrap()).reduce_mod(11).unwrap();
        prop_assert!(agree(&sum, &parts));
    }

    #[test]
    fn longer_windows_extend(n in 5i64..60, extra in 1i64..40) {
        let short = euler_j(1, n);
        let long = euler_j(1, n + extra);
        prop_assert!(short.eq_to_order(&long, n).unwrap());
    }
}

#[test]
fn add_examples() {
    let s = &q(&[1, 1]) + &q(&[-1, 1]);
    assert_eq!(s.to_i128_vec().unwrap(), vec![0, 2]);
    let t = &LaurentSeries::from_i64(-1, &[1, 0, 0]).unwrap() + &q(&[1, 1]);
    assert_eq!(t.valuation(), -1);
    assert!(t.eq_to_order(&LaurentSeries::from_i64(-1, &[1, 1, 1]).unwrap(), 2).unwrap());
    let j = euler_j(1, 20);
    assert!((&j + &LaurentSeries::zero()).eq_to_order(&j, 20).unwrap());
}

#[test]
fn geometric_inverse() {
    // 1 - q known exactly up to q^5
    let g = q(&[1, -1, 0, 0, 0, 0]).invert(6).unwrap();
    assert_eq!(g.to_i128_vec().unwrap(), vec![1; 6]);
    let h = LaurentSeries::from_i64(1, &[1, -1, 0]).unwrap().invert(3).unwrap();
    assert_eq!(h.valuation(), -1);
    assert_eq!(h.to_i128_vec().unwrap(), vec![1, 1, 1]);
}

#[test]
fn partition_function_is_inverse_of_j1() {
    // [DERIVED] p(0..9) from the enumeration oracle
    let p = euler_j(1, 10).invert(10).unwrap();
    assert_eq!(p.to_i128_vec().unwrap(), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
}

#[test]
fn product_of_p_is_j1_j11_to_the_fourth() {
    let n = 1000;
    let lhs = (1..=5).fold(LaurentSeries::one(n), |acc, i| &acc * &p_theta(i, n));
    let rhs = &euler_j(1, n) * &euler_j(11, n).pow(4).unwrap();
    assert!(lhs.eq_to_order(&rhs, n).unwrap());
}

#[test]
fn dilate_j1_is_j11() {
    let a = euler_j(1, 30).dilate(11).unwrap();
    let n = a.trunc();
    assert!(a.eq_to_order(&euler_j(11, n), n).unwrap());
}

#[test]
fn dilate_and_shift_examples() {
    let d = q(&[1, 1]).dilate(11).unwrap();
    assert_eq!(d.coeff(11).unwrap(), r(1, 1));
    assert_eq!(d.coeff(5).unwrap(), r(0, 1));
    let inv = LaurentSeries::from_i64(-1, &[1]).unwrap().dilate(2).unwrap();
    assert_eq!(inv.valuation(), -2);
    let s = q(&[1, 1]).shift(3);
    assert_eq!((s.valuation(), s.trunc()), (3, 5));
    assert_eq!(LaurentSeries::one(1).shift(-1).valuation(), -1);
}

#[test]
fn dissect_examples() {
    let a = q(&[1, 1, 2, 3, 5, 7]);
    let d = a.dissect(5, 4).unwrap();
    assert_eq!((d.valuation(), d.trunc()), (0, 1));
    assert_eq!(d.coeff(0).unwrap(), r(5, 1));

    let b = LaurentSeries::from_i64(-1, &[1, 1, 1]).unwrap();
    let d = b.dissect(11, 10).unwrap();
    assert_eq!((d.valuation(), d.trunc()), (-1, 0));
    assert_eq!(d.coeff(-1).unwrap(), r(1, 1));

    // p(11n + 6) vanishes mod 11
    let p = euler_j(1, 240).invert(240).unwrap();
    let six = p.dissect(11, 6).unwrap();
    assert!(six.reduce_mod(11).unwrap().eq_to_order(&LaurentSeries::zero(), 20).unwrap());
    assert_eq!(six.coeff(0).unwrap(), r(11, 1));
}

#[test]
fn coeff_examples() {
    assert_eq!(q(&[1, 2]).coeff(1).unwrap(), r(2, 1));
    assert_eq!(LaurentSeries::from_i64(-1, &[1]).unwrap().coeff(-1).unwrap(), r(1, 1));
    assert_eq!(euler_j(1, 13).coeff(12).unwrap(), r(-1, 1));
    assert!(matches!(q(&[1, 2]).coeff(2), Err(SeriesError::OutOfWindow { .. })));
}

#[test]
fn reduce_examples() {
    let a = LaurentSeries::from_i64(1, &[11]).unwrap().reduce_mod(11).unwrap();
    assert!(a.eq_to_order(&LaurentSeries::zero(), 2).unwrap());
    let b = LaurentSeries::from_i64(1, &[-1]).unwrap().reduce_mod(11).unwrap();
    assert_eq!(b.coeff(1).unwrap(), r(10, 1));
    let c = LaurentSeries::new(0, vec![r(1, 11)]).unwrap();
    assert!(matches!(c.reduce_mod(11), Err(SeriesError::NotPIntegral { .. })));
    let d = LaurentSeries::new(0, vec![r(1, 2)]).unwrap().reduce_mod(11).unwrap();
    assert_eq!(d.coeff(0).unwrap(), r(6, 1));
}

#[test]
fn comparison_examples() {
    assert!(q(&[1, 1]).eq_to_order(&q(&[1, 1, 0, 0, 0, 1]), 2).unwrap());
    assert!(q(&[1, 1, 0, 0]).eq_to_order(&q(&[1, 1, 0, 0, 0, 1]), 4).unwrap());
    assert_eq!(q(&[1, -1, 0, 0, 0]).is_nonneg_to_order(5).unwrap(), Some(1));
    assert!(q(&[1, 1]).eq_to_order(&q(&[1, 1, 0]), 3).is_err());
}

#[test]
fn big_coefficients_survive() {
    let big: BigInt = BigInt::from(10).pow(40);
    let s = LaurentSeries::new(0, vec![BigRational::from_integer(big.clone()); 3]).unwrap();
    let sq = &s * &s;
    assert_eq!(sq.coeff(2).unwrap(), BigRational::from_integer(big.pow(2) * 3));
    assert!(sq.to_i128_vec().is_none());
}

#[test]
fn empty_window_is_an_error() {
    let a = q(&[1, 2, 3]);
    assert!(matches!(a.truncate(0), Err(SeriesError::EmptyWindow)));
    assert!(matches!(LaurentSeries::from_i64(0, &[]), Err(SeriesError::EmptyWindow)));
}

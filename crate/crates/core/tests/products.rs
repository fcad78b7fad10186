use num_rational::BigRational;
use proptest::prelude::*;
use qdissect::products::{
    bernoulli, eisenstein, euler_j, mock_g, p_theta, phi, pochhammer, theta_j, theta_j_product,
    x_theta, MockIndex, PochLength,
};
use qdissect::LaurentSeries;

fn ints(s: &LaurentSeries) -> Vec<i128> {
    s.to_i128_vec().expect("integral coefficients")
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn pochhammer_examples() {
    let two = pochhammer(1, 1, PochLength::Finite(2), 4).unwrap();
    assert_eq!(ints(&two), vec![1, -1, -1, 1]);
    let empty = pochhammer(1, 1, PochLength::Finite(0), 3).unwrap();
    assert_eq!(ints(&empty), vec![1, 0, 0]);
    let inf = pochhammer(1, 1, PochLength::Infinite, 13).unwrap();
    assert_eq!(ints(&inf), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    assert!(pochhammer(0, 1, PochLength::Infinite, 5).is_err());
}

#[test]
fn theta_sum_matches_product() {
    let sum = theta_j(1, 3, 13);
    let prod = theta_j_product(1, 3, 13).unwrap();
    assert!(sum.eq_to_order(&prod, 13).unwrap());
    assert!(sum.eq_to_order(&euler_j(1, 13), 13).unwrap());
}

#[test]
fn p1_head() {
    // [DERIVED] (1 - q)(1 - q^10)(1 - q^11) to order 14; the q^11 terms cancel
    let p1 = p_theta(1, 14);
    let mut want = vec![0i128; 14];
    want[0] = 1;
    want[1] = -1;
    want[10] = -1;
    want[13] = 1;
    assert_eq!(ints(&p1), want);
    assert!(p1.eq_to_order(&theta_j_product(1, 11, 14).unwrap(), 14).unwrap());
}

#[test]
fn x_is_dilated_p() {
    for i in 1..=5 {
        let d = p_theta(i, 20).dilate(11).unwrap();
        let n = d.trunc();
        assert!(x_theta(i, n).eq_to_order(&d, n).unwrap());
    }
}

#[test]
fn euler_examples() {
    assert_eq!(ints(&euler_j(1, 8)), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    let mut j11 = vec![0i128; 12];
    j11[0] = 1;
    j11[11] = -1;
    assert_eq!(ints(&euler_j(11, 12)), j11);
    for m in [1, 2, 11, 33] {
        assert!(euler_j(m, 200).eq_to_order(&theta_j(m, 3 * m, 200), 200).unwrap());
    }
}

#[test]
fn triple_product_for_used_indices() {
    let n = 300;
    for a in 1..=5 {
        assert!(theta_j(a, 11, n).eq_to_order(&theta_j_product(a, 11, n).unwrap(), n).unwrap());
        let (a11, m) = (11 * a, 121);
        assert!(theta_j(a11, m, n).eq_to_order(&theta_j_product(a11, m, n).unwrap(), n).unwrap());
    }
}

#[test]
fn quintuple_product() {
    let n = 300;
    let j11_sq = euler_j(11, n).pow(2).unwrap();
    let j33_cubed = euler_j(33, n).pow(3).unwrap();
    for a in 1..=3 {
        let lhs = (&j11_sq * &theta_j(2 * a, 11, n))
            .div(&(&theta_j(a, 11, n) * &theta_j(3 * a, 11, n)))
            .unwrap();
        let t1 = j33_cubed.div(&(&theta_j(3 * a, 33, n) * &theta_j(11 - 3 * a, 33, n))).unwrap();
        let t2 = j33_cubed
            .div(&(&theta_j(3 * a, 33, n) * &theta_j(22 - 3 * a, 33, n)))
            .unwrap()
            .shift(a);
        assert!(lhs.eq_to_order(&(&t1 + &t2), n).unwrap(), "a = {a}");
    }
}

#[test]
fn j11_squared_over_p_is_nonnegative() {
    let n = 500;
    let j11_sq = euler_j(11, n).pow(2).unwrap();
    for a in 1..=5 {
        let s = j11_sq.div(&p_theta(a, n)).unwrap();
        assert_eq!(s.is_nonneg_to_order(n).unwrap(), None, "a = {a}");
    }
}

#[test]
fn bernoulli_and_eisenstein() {
    assert_eq!(bernoulli(4), r(-1, 30));
    assert_eq!(bernoulli(6), r(1, 42));
    let e4 = eisenstein(4, 5).unwrap();
    assert_eq!(ints(&e4), vec![1, 240, 2160, 6720, 17520]);
    let e6 = eisenstein(6, 3).unwrap();
    assert_eq!(ints(&e6), vec![1, -504, -16632]);
    assert!(eisenstein(5, 3).is_err());
}

/// `g(q; q^11)` by direct summation over `i128` power series, independent of the library path.
fn g_q_q11(order: usize) -> Vec<i128> {
    let len = order + 1;
    let mut total = vec![0i128; len];
    let mut n = 0usize;
    while 11 * n * n < len {
        let mut t = vec![0i128; len];
        t[11 * n * n] = 1;
        let mut divide = |e: usize| {
            for i in e..len {
                t[i] += t[i - e];
            }
        };
        for k in 0..=n {
            divide(1 + 11 * k);
        }
        for k in 0..n {
            divide(10 + 11 * k);
        }
        for (s, x) in total.iter_mut().zip(&t) {
            *s += x;
        }
        n += 1;
    }
    total[0] -= 1;
    total
}

#[test]
fn mock_g_matches_direct_summation() {
    let order = 30;
    let g = mock_g(MockIndex::new(1, 11).unwrap(), order as i64);
    assert_eq!(g.valuation(), -1);
    let direct = g_q_q11(order);
    for e in -1..order as i64 {
        assert_eq!(g.coeff(e).unwrap(), r(direct[(e + 1) as usize] as i64, 1), "q^{e}");
    }
}

#[test]
fn phi_branches() {
    let n = 100;
    for a in 1..=5i64 {
        let g = mock_g(MockIndex::new(a, 11).unwrap(), n).shift(a);
        let rhs = if 6 * a < 11 { &g + &LaurentSeries::one(n) } else { g };
        let lhs = phi(11, a, n).unwrap();
        assert!(lhs.eq_to_order(&rhs, n).unwrap(), "a = {a}");
    }
    // only a = 1 has 6a < 11
    assert_eq!(phi(11, 1, 5).unwrap().coeff(0).unwrap(), r(1, 1));
    assert_eq!(phi(11, 2, 5).unwrap().coeff(0).unwrap(), r(0, 1));
    assert!(phi(11, 6, 5).is_err());
}

proptest! {
    #[test]
    fn mock_g_windows_are_stable(a in 1i64..6, n in 5i64..40, extra in 1i64..30) {
        let idx = MockIndex::new(a, 11).unwrap();
        let short = mock_g(idx, n);
        let long = mock_g(idx, n + extra);
        prop_assert!(short.eq_to_order(&long, n).unwrap());
    }

    #[test]
    fn theta_is_symmetric_under_reflection(a in 1i64..11, n in 5i64..80) {
        // J_{m-a,m} = J_{a,m}
        prop_assert!(theta_j(a, 11, n).eq_to_order(&theta_j(11 - a, 11, n), n).unwrap());
    }
}

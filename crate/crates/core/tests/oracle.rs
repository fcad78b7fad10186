use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qdissect::oracle::{
    class_count, crank_of, deviation_crank, deviation_rank, enumerate_stats, for_each_partition,
    gf_stats, moments, rank_of, spt_via_identity, Statistic,
};
use qdissect::LaurentSeries;
use std::sync::OnceLock;

fn tables() -> &'static qdissect::oracle::StatTables {
    static T: OnceLock<qdissect::oracle::StatTables> = OnceLock::new();
    T.get_or_init(|| gf_stats(120).unwrap())
}

#[test]
fn statistics_of_four() {
    let mut ranks = Vec::new();
    let mut cranks = Vec::new();
    for_each_partition(4, |p| {
        ranks.push(rank_of(p));
        cranks.push(crank_of(p));
    });
    ranks.sort_unstable_by(|a, b| b.cmp(a));
    cranks.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(ranks, vec![3, 1, 0, -1, -3]);
    assert_eq!(cranks, vec![4, 2, 0, -2, -4]);
    assert_eq!(tables().spt(4).unwrap(), 10);
}

#[test]
fn class_counts() {
    let t = tables();
    for a in 0..5 {
        assert_eq!(class_count(t, Statistic::Rank, a, 5, 4).unwrap(), 1);
    }
    for a in 0..11 {
        assert_eq!(class_count(t, Statistic::Crank, a, 11, 6).unwrap(), 1);
    }
    assert!(class_count(t, Statistic::Rank, 5, 5, 4).is_err());
}

#[test]
fn moments_and_spt() {
    let t = tables();
    assert_eq!(moments(t, Statistic::Rank, 2, 4).unwrap(), BigInt::from(20));
    assert_eq!(spt_via_identity(t, 4).unwrap(), BigInt::from(10));
    assert!(moments(t, Statistic::Rank, 3, 4).is_err());
    for n in 0..=120 {
        assert_eq!(spt_via_identity(t, n).unwrap(), BigInt::from(t.spt(n).unwrap()), "n = {n}");
    }
}

#[test]
fn crank_convention_at_small_n() {
    let t = tables();
    assert_eq!(t.crank_row(0).unwrap(), &[1]);
    assert_eq!(t.crank_row(1).unwrap(), &[1, -1, 1]);
    assert_eq!(t.rank_row(1).unwrap(), &[0, 1, 0]);
}

#[test]
fn deviations() {
    let t = tables();
    let d = deviation_rank(t, 0, 11, 50).unwrap();
    assert_eq!(d.coeff(0).unwrap(), BigRational::new(10.into(), 11.into()));
    let total = (0..11).fold(LaurentSeries::zero(), |acc, a| &acc + &deviation_rank(t, a, 11, 50).unwrap());
    assert!(total.eq_to_order(&LaurentSeries::zero(), 50).unwrap());
    for a in 0..11 {
        let six = deviation_crank(t, a, 11, 110).unwrap().dissect(11, 6).unwrap();
        assert!(six.eq_to_order(&LaurentSeries::zero(), six.trunc()).unwrap(), "a = {a}");
    }
    assert!(deviation_rank(t, 0, 11, 200).is_err());
}

#[test]
fn enumeration_agrees_with_generating_functions() {
    let e = enumerate_stats(50).unwrap();
    let g = gf_stats(50).unwrap();
    for n in 0..=50 {
        assert_eq!(e.rank_row(n).unwrap(), g.rank_row(n).unwrap(), "rank n = {n}");
        assert_eq!(e.crank_row(n).unwrap(), g.crank_row(n).unwrap(), "crank n = {n}");
        assert_eq!(e.spt(n).unwrap(), g.spt(n).unwrap(), "spt n = {n}");
    }
}

#[test]
fn partition_numbers() {
    // [DERIVED] from the enumeration oracle
    assert_eq!(tables().p(100).unwrap(), 190_569_292);
    assert!(tables().p(121).is_err());
}

proptest! {
    #[test]
    fn classes_sum_to_p(n in 0usize..=120, r in 1i64..13) {
        let t = tables();
        for stat in [Statistic::Rank, Statistic::Crank] {
            let sum: i128 = (0..r).map(|a| class_count(t, stat, a, r, n).unwrap()).sum();
            prop_assert_eq!(sum, t.p(n).unwrap());
        }
    }

    #[test]
    fn rows_are_symmetric(n in 0usize..=120) {
        let t = tables();
        for row in [t.rank_row(n).unwrap(), t.crank_row(n).unwrap()] {
            let rev: Vec<_> = row.iter().rev().copied().collect();
            prop_assert_eq!(row, &rev[..]);
        }
    }
}

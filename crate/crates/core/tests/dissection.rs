use num_rational::BigRational;
use qdissect::dissection::tables::{CRANK_ROWS, MOCK_ROWS, THETA6_ROWS};
use qdissect::dissection::{
    build_bracket, build_g11, crank_dissection, dissected_order, mock_component, rank_dissection,
    residue_prefactor, Basis, BracketCoeffs, G11Coeffs, ResidueBracketCoeffs, ThetaMonomial,
    V11Coeffs,
};
use qdissect::oracle::{deviation_crank, deviation_rank, gf_stats};
use qdissect::products::{euler_j, mock_g, MockIndex};
use qdissect::LaurentSeries;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn printed_rows() {
    assert_eq!(CRANK_ROWS[0], V11Coeffs([10, -12, -2, 8, 6, 4, -4, -6, -8, 2]));
    assert_eq!(CRANK_ROWS[5], V11Coeffs([-1, -1, -2, -3, -5, 4, -4, -6, 3, 2]));
    let pairs: Vec<_> = MOCK_ROWS.iter().map(|m| (m.a, m.m, m.coeff)).collect();
    assert_eq!(
        pairs,
        vec![
            (0, 0, -2), (1, 0, 1), (4, 4, 1), (5, 4, -1), (1, 7, -1),
            (2, 7, 1), (3, 9, 1), (4, 9, -1), (2, 10, -1), (3, 10, 1),
        ]
    );
}

#[test]
fn dissections_match_the_oracle() {
    let order = 220;
    let t = gf_stats(order).unwrap();
    for a in 0..=5 {
        let crank = crank_dissection(a, order as i64).unwrap();
        assert!(crank.eq_to_order(&deviation_crank(&t, a, 11, order).unwrap(), order as i64).unwrap());
        let rank = rank_dissection(a, order as i64).unwrap();
        assert!(rank.eq_to_order(&deviation_rank(&t, a, 11, order).unwrap(), order as i64).unwrap());
    }
}

#[test]
fn q_tables_split_consistently() {
    let b = Basis::shared(40);
    for a in 0..=5 {
        for m in 0..=10 {
            let x = b.q_table(a, m).unwrap();
            let y = b.q_table_split(a, m).unwrap();
            assert!(x.eq_to_order(&y, 40).unwrap(), "Q({a}, {m})");
        }
    }
    assert!(b.q_table(6, 0).is_err());
    assert!(b.q_table(0, 11).is_err());
}

#[test]
fn q_0_0() {
    let n = 60;
    let b = Basis::shared(n);
    let rb = ResidueBracketCoeffs::new([10, 56, -32, -10, -10, 22], 0).unwrap();
    let want = &b.residue_bracket(&rb).scale(&r(1, 11)) + &mock_component(0, n).unwrap().scale_int(-2);
    assert!(b.q_table(0, 0).unwrap().eq_to_order(&want, n).unwrap());

    // 10/11 J11^2 / P1
    let qc = b.eval(ThetaMonomial::new(0, 0, 2, [-1, 0, 0, 0, 0])).scale(&r(10, 11));
    assert!(b.qc_table(0, 0).unwrap().eq_to_order(&qc, n).unwrap());
    assert!(b.qc_table(0, 6).unwrap().is_exact_zero());
}

#[test]
fn pole_at_residue_ten() {
    let b = Basis::shared(30);
    assert_eq!(b.q_table(3, 10).unwrap().valuation(), -1);
    let m10 = mock_component(10, 30).unwrap();
    assert_eq!(m10.coeff(-1).unwrap(), r(1, 1));
    let g = mock_g(MockIndex::new(1, 11).unwrap(), 30);
    let pole = LaurentSeries::monomial(r(1, 1), -1, 30).unwrap();
    assert!(m10.eq_to_order(&(&g + &pole), 30).unwrap());
}

#[test]
fn g11_slot_ten_dissects_to_its_component() {
    let order = 330;
    let s = build_g11(&G11Coeffs([0, 0, 0, 0, 1]), order).unwrap();
    let d = s.dissect(11, 10).unwrap();
    let n = d.trunc();
    assert!(d.eq_to_order(&mock_component(10, n).unwrap(), n).unwrap());
    assert_eq!(dissected_order(order), 32);
}

#[test]
fn bracket_identities() {
    let n = 400;
    let j11_sq = euler_j(11, n).pow(2).unwrap();
    let ones = build_bracket(&BracketCoeffs([1, -1, -1, -1, -1]), n);
    assert!(ones.eq_to_order(&j11_sq, n).unwrap());

    let b = Basis::shared(n);
    let rb = ResidueBracketCoeffs::new([1, -1, -1, -1, -1, 0], 1).unwrap();
    let want = b.eval(ThetaMonomial::new(0, 0, 2, [0, -1, -1, 0, 1]));
    assert!(b.residue_bracket(&rb).eq_to_order(&want, n).unwrap());
    assert!(ResidueBracketCoeffs::new([0; 6], 6).is_err());
    assert!(residue_prefactor(6).is_none());
}

#[test]
fn slot_eight_carries_a_q() {
    let b = Basis::shared(20);
    let mut c = [0; 10];
    c[7] = 11;
    let s = b.v11_component(&V11Coeffs(c), 8);
    assert_eq!(s.valuation(), 1);
    assert_eq!(s.coeff(1).unwrap(), r(1, 1));
}

#[test]
fn theta_forms_agree() {
    let b = Basis::shared(200);
    for c in THETA6_ROWS {
        assert!(b.theta(&c).eq_to_order(&b.theta_alt(&c), 200).unwrap());
    }
}

#[test]
fn small_orders_match_the_oracle() {
    let t = gf_stats(30).unwrap();
    for order in 1..=30usize {
        for a in 0..=5 {
            let rank = rank_dissection(a, order as i64).unwrap();
            let want = deviation_rank(&t, a, 11, order).unwrap();
            assert!(rank.eq_to_order(&want, order as i64).unwrap(), "a = {a}, order {order}");
            let crank = crank_dissection(a, order as i64).unwrap();
            let want = deviation_crank(&t, a, 11, order).unwrap();
            assert!(crank.eq_to_order(&want, order as i64).unwrap(), "a = {a}, order {order}");
        }
    }
}

//! Coefficient tables transcribed from the printed dissections.
//!
//! Rows are stored exactly as printed. Where a printed row is suspected to be
//! wrong the correction lives next to it and is marked as emended.

use super::{G11Coeffs, ThetaCoeffs, V11Coeffs};

/// Crank deviation rows `D_C(a, 11) = v11(..)` for `a = 0..=5`.
pub const CRANK_ROWS: [V11Coeffs; 6] = [
    V11Coeffs([10, -12, -2, 8, 6, 4, -4, -6, -8, 2]),
    V11Coeffs([-1, 10, -2, -3, -5, 4, 7, 5, 3, 2]),
    V11Coeffs([-1, -1, 9, -3, 6, -7, -4, -6, 3, 2]),
    V11Coeffs([-1, -1, -2, 8, -5, 4, -4, 5, 3, -9]),
    V11Coeffs([-1, -1, -2, -3, 6, -7, 7, 5, -8, 2]),
    V11Coeffs([-1, -1, -2, -3, -5, 4, -4, -6, 3, 2]),
];

/// Rank deviation rows `D(a, 11) = G11(..) + v11(..) + theta parts`.
pub const RANK_ROWS: [(G11Coeffs, V11Coeffs); 6] = [
    (G11Coeffs([-2, 0, 0, 0, 0]), V11Coeffs([10, -12, -2, 8, 6, 4, 18, -6, -8, 2])),
    (G11Coeffs([1, 0, -1, 0, 0]), V11Coeffs([-1, 10, -2, -3, -5, 4, -4, -6, 3, 2])),
    (G11Coeffs([0, 0, 1, 0, -1]), V11Coeffs([-1, -1, 9, -3, 6, -7, -4, 5, 3, 2])),
    (G11Coeffs([0, 0, 0, 1, 1]), V11Coeffs([-1, -1, -2, -3, 17, -7, -4, 5, 3, -9])),
    (G11Coeffs([0, 1, 0, -1, 0]), V11Coeffs([-1, -1, -2, -3, 6, 4, -4, 5, -8, 13])),
    (G11Coeffs([0, -1, 0, 0, 0]), V11Coeffs([-1, -1, -2, -3, -5, 4, -4, -6, 3, -9])),
];

/// `Theta_{a,6}` for `a = 0..=5`.
pub const THETA6_ROWS: [ThetaCoeffs; 6] = [
    ThetaCoeffs([0, 0, 2, 2, -2]),
    ThetaCoeffs([-1, 1, -1, -2, 1]),
    ThetaCoeffs([1, 0, -1, 2, 0]),
    ThetaCoeffs([1, 0, 1, -1, -1]),
    ThetaCoeffs([0, -1, 1, 0, 2]),
    ThetaCoeffs([-1, 0, -1, 0, -1]),
];

/// Mock parts `coeff * mock_component(m)` of `Q_{a,m}`; all other pairs have none.
pub const MOCK_ROWS: [MockRow; 10] = [
    MockRow { a: 0, m: 0, coeff: -2 },
    MockRow { a: 1, m: 0, coeff: 1 },
    MockRow { a: 4, m: 4, coeff: 1 },
    MockRow { a: 5, m: 4, coeff: -1 },
    MockRow { a: 1, m: 7, coeff: -1 },
    MockRow { a: 2, m: 7, coeff: 1 },
    MockRow { a: 3, m: 9, coeff: 1 },
    MockRow { a: 4, m: 9, coeff: -1 },
    MockRow { a: 2, m: 10, coeff: -1 },
    MockRow { a: 3, m: 10, coeff: 1 },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MockRow {
    pub a: i64,
    pub m: i64,
    pub coeff: i64,
}

/// Theta part of `Q_{a,m}` for `m != 6`, printed as
/// `(1/11)[full]_m = (lead/11) J11^2 pre_m + [theta]_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QEntry {
    pub a: i64,
    pub m: i64,
    pub full: [i64; 6],
    pub lead: i64,
    pub theta: [i64; 6],
}

pub const Q_ENTRIES: [QEntry; 60] = [
    QEntry { a: 0, m: 0, full: [10, 56, -32, -10, -10, 22], lead: 10, theta: [0, 6, -2, 0, 0, 2] },
    QEntry { a: 1, m: 0, full: [-1, -10, 23, 1, 1, -11], lead: -1, theta: [0, -1, 2, 0, 0, -1] },
    QEntry { a: 2, m: 0, full: [-1, -32, 1, 12, 1, 0], lead: -1, theta: [0, -3, 0, 1, 0, 0] },
    QEntry { a: 3, m: 0, full: [-1, 23, -21, 1, 12, 0], lead: -1, theta: [0, 2, -2, 0, 1, 0] },
    QEntry { a: 4, m: 0, full: [-1, -10, 23, -21, 1, 0], lead: -1, theta: [0, -1, 2, -2, 0, 0] },
    QEntry { a: 5, m: 0, full: [-1, 1, -10, 12, -10, 0], lead: -1, theta: [0, 0, -1, 1, -1, 0] },
    QEntry { a: 0, m: 1, full: [10, 12, 12, 12, -10, -22], lead: -12, theta: [2, 0, 0, 0, -2, -2] },
    QEntry { a: 1, m: 1, full: [-1, -10, -10, 1, 23, 0], lead: 10, theta: [-1, 0, 0, 1, 3, 0] },
    QEntry { a: 2, m: 1, full: [-1, 12, 1, -10, 1, 11], lead: -1, theta: [0, 1, 0, -1, 0, 1] },
    QEntry { a: 3, m: 1, full: [-1, -10, 12, 1, -21, 11], lead: -1, theta: [0, -1, 1, 0, -2, 1] },
    QEntry { a: 4, m: 1, full: [-1, 1, -10, 12, -10, 0], lead: -1, theta: [0, 0, -1, 1, -1, 0] },
    QEntry { a: 5, m: 1, full: [-1, 1, 1, -10, 12, -11], lead: -1, theta: [0, 0, 0, -1, 1, -1] },
    QEntry { a: 0, m: 2, full: [-2, -20, 24, 2, 2, -22], lead: -2, theta: [0, -2, 2, 0, 0, -2] },
    QEntry { a: 1, m: 2, full: [9, 13, -31, 2, 2, 11], lead: -2, theta: [1, 1, -3, 0, 0, 1] },
    QEntry { a: 2, m: 2, full: [-2, -9, 24, -9, 2, 11], lead: 9, theta: [-1, 0, 3, 0, 1, 1] },
    QEntry { a: 3, m: 2, full: [-2, 13, 13, 2, -9, -22], lead: -2, theta: [0, 1, 1, 0, -1, -2] },
    QEntry { a: 4, m: 2, full: [-2, -9, -20, 13, 2, 22], lead: -2, theta: [0, -1, -2, 1, 0, 2] },
    QEntry { a: 5, m: 2, full: [-2, 2, 2, -9, 2, -11], lead: -2, theta: [0, 0, 0, -1, 0, -1] },
    QEntry { a: 0, m: 3, full: [8, 36, -8, -8, 14, -22], lead: 8, theta: [0, 4, 0, 0, 2, -2] },
    QEntry { a: 1, m: 3, full: [-3, -30, 3, 3, 3, 22], lead: -3, theta: [0, -3, 0, 0, 0, 2] },
    QEntry { a: 2, m: 3, full: [8, 14, 3, 3, -8, -22], lead: -3, theta: [1, 1, 0, 0, -1, -2] },
    QEntry { a: 3, m: 3, full: [-3, 3, -8, 3, -8, 22], lead: -3, theta: [0, 0, -1, 0, -1, 2] },
    QEntry { a: 4, m: 3, full: [-3, 14, 14, -8, 3, -11], lead: -3, theta: [0, 1, 1, -1, 0, -1] },
    QEntry { a: 5, m: 3, full: [-3, -19, -8, 3, 3, 0], lead: -3, theta: [0, -2, -1, 0, 0, 0] },
    QEntry { a: 0, m: 4, full: [6, -6, 16, -28, 16, 0], lead: 6, theta: [0, 0, 2, -2, 2, 0] },
    QEntry { a: 1, m: 4, full: [6, 5, -17, 5, 5, 0], lead: -5, theta: [1, 0, -2, 0, 0, 0] },
    QEntry { a: 2, m: 4, full: [-5, -6, 5, 27, -6, 0], lead: 6, theta: [-1, 0, 1, 3, 0, 0] },
    QEntry { a: 3, m: 4, full: [6, 5, 16, -17, -17, 0], lead: 17, theta: [-1, 2, 3, 0, 0, 0] },
    QEntry { a: 4, m: 4, full: [-5, -6, -17, 27, -6, -11], lead: 6, theta: [-1, 0, -1, 3, 0, -1] },
    QEntry { a: 5, m: 4, full: [-5, 5, 5, -28, 16, 11], lead: -5, theta: [0, 0, 0, -3, 1, 1] },
    QEntry { a: 0, m: 5, full: [4, 18, -4, -4, -4, 22], lead: 4, theta: [0, 2, 0, 0, 0, 2] },
    QEntry { a: 1, m: 5, full: [4, -15, 7, 7, -4, 0], lead: 4, theta: [0, -1, 1, 1, 0, 0] },
    QEntry { a: 2, m: 5, full: [4, 7, -4, 7, 7, -22], lead: -7, theta: [1, 0, -1, 0, 0, -2] },
    QEntry { a: 3, m: 5, full: [-7, -4, -4, 7, 7, 11], lead: -7, theta: [0, -1, -1, 0, 0, 1] },
    QEntry { a: 4, m: 5, full: [4, 7, 7, -37, -4, 11], lead: 4, theta: [0, 1, 1, -3, 0, 1] },
    QEntry { a: 5, m: 5, full: [-7, -4, -4, 18, -4, -11], lead: 4, theta: [-1, 0, 0, 2, 0, -1] },
    QEntry { a: 0, m: 7, full: [18, 26, 4, -18, -18, 0], lead: 18, theta: [0, 4, 2, 0, 0, 0] },
    QEntry { a: 1, m: 7, full: [-4, -29, -7, 4, 37, 11], lead: -4, theta: [0, -3, -1, 0, 3, 1] },
    QEntry { a: 2, m: 7, full: [7, 26, 4, 15, -29, -11], lead: -4, theta: [1, 2, 0, 1, -3, -1] },
    QEntry { a: 3, m: 7, full: [-4, -18, 4, -7, 15, 0], lead: -4, theta: [0, -2, 0, -1, 1, 0] },
    QEntry { a: 4, m: 7, full: [-4, 15, -7, -7, 4, 0], lead: -4, theta: [0, 1, -1, -1, 0, 0] },
    QEntry { a: 5, m: 7, full: [-4, -7, 4, 4, -18, 0], lead: -4, theta: [0, -1, 0, 0, -2, 0] },
    QEntry { a: 0, m: 8, full: [38, 6, 6, -16, 6, 0], lead: -6, theta: [4, 0, 0, -2, 0, 0] },
    QEntry { a: 1, m: 8, full: [-17, -5, -5, 6, 6, 11], lead: -6, theta: [-1, -1, -1, 0, 0, 1] },
    QEntry { a: 2, m: 8, full: [16, 6, -5, 6, -5, 0], lead: 5, theta: [1, 1, 0, 1, 0, 0] },
    QEntry { a: 3, m: 8, full: [-6, -5, 17, -5, -5, 0], lead: 5, theta: [-1, 0, 2, 0, 0, 0] },
    QEntry { a: 4, m: 8, full: [-17, 6, -16, -5, -5, 0], lead: 5, theta: [-2, 1, -1, 0, 0, 0] },
    QEntry { a: 5, m: 8, full: [5, -5, 6, 6, 6, -11], lead: -6, theta: [1, -1, 0, 0, 0, -1] },
    QEntry { a: 0, m: 9, full: [14, 8, -36, 8, 8, 0], lead: -8, theta: [2, 0, -4, 0, 0, 0] },
    QEntry { a: 1, m: 9, full: [3, -14, 19, -3, 8, 0], lead: 3, theta: [0, -1, 2, 0, 1, 0] },
    QEntry { a: 2, m: 9, full: [3, 19, 8, -3, -3, 0], lead: 3, theta: [0, 2, 1, 0, 0, 0] },
    QEntry { a: 3, m: 9, full: [3, -14, 19, -3, -14, -11], lead: 3, theta: [0, -1, 2, 0, -1, -1] },
    QEntry { a: 4, m: 9, full: [-8, 8, -14, 8, -3, 11], lead: -8, theta: [0, 0, -2, 0, -1, 1] },
    QEntry { a: 5, m: 9, full: [-8, -3, -14, -3, 8, 0], lead: 3, theta: [-1, 0, -1, 0, 1, 0] },
    QEntry { a: 0, m: 10, full: [2, -24, 20, 20, -2, 0], lead: 2, theta: [0, -2, 2, 2, 0, 0] },
    QEntry { a: 1, m: 10, full: [13, 20, -13, -2, -2, 0], lead: 2, theta: [1, 2, -1, 0, 0, 0] },
    QEntry { a: 2, m: 10, full: [-42, -13, -2, -24, -2, 11], lead: 2, theta: [-4, -1, 0, -2, 0, 1] },
    QEntry { a: 3, m: 10, full: [46, 9, 9, 9, 9, -11], lead: -9, theta: [5, 0, 0, 0, 0, -1] },
    QEntry { a: 4, m: 10, full: [-9, -13, -13, 20, -2, 0], lead: 13, theta: [-2, 0, 0, 3, 1, 0] },
    QEntry { a: 5, m: 10, full: [-9, 9, 9, -13, -2, 0], lead: -9, theta: [0, 0, 0, -2, -1, 0] },
];

/// One summand `q^shift P_num / (11 P_den) Theta(theta)` of a theta-quotient form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaTerm {
    pub q_shift: i64,
    pub num: i64,
    pub den: i64,
    pub theta: [i64; 5],
}

/// Theta-quotient form of `Q_{a,m}` (mock part excluded). `printed` is the
/// label as it appears; `(a, m)` is the slot implied by the row's position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaForm {
    pub printed: (i64, i64),
    pub a: i64,
    pub m: i64,
    pub terms: [ThetaTerm; 2],
}

pub const THETA_FORMS: [ThetaForm; 60] = [
    ThetaForm { printed: (0, 7), a: 0, m: 7, terms: [ThetaTerm { q_shift: -1, num: 5, den: 1, theta: [-18, 0, -18, 26, 10] }, ThetaTerm { q_shift: 0, num: 4, den: 5, theta: [0, 0, 0, 0, 4] }] },
    ThetaForm { printed: (1, 7), a: 1, m: 7, terms: [ThetaTerm { q_shift: -1, num: 5, den: 1, theta: [37, 0, 4, -29, 21] }, ThetaTerm { q_shift: 0, num: 4, den: 5, theta: [11, 0, 0, 0, -7] }] },
    ThetaForm { printed: (2, 7), a: 2, m: 7, terms: [ThetaTerm { q_shift: -1, num: 5, den: 1, theta: [-29, 0, 15, 26, -34] }, ThetaTerm { q_shift: 0, num: 4, den: 5, theta: [-11, 0, 0, 0, 4] }] },
    ThetaForm { printed: (3, 7), a: 3, m: 7, terms: [ThetaTerm { q_shift: -1, num: 5, den: 1, theta: [15, 0, -7, -18, 21] }, ThetaTerm { q_shift: 0, num: 4, den: 5, theta: [0, 0, 0, 0, 4] }] },
    ThetaForm { printed: (4, 7), a: 4, m: 7, terms: [ThetaTerm { q_shift: -1, num: 5, den: 1, theta: [4, 0, -7, 15, -12] }, ThetaTerm { q_shift: 0, num: 4, den: 5, theta: [0, 0, 0, 0, -7] }] },
    ThetaForm { printed: (5, 7), a: 5, m: 7, terms: [ThetaTerm { q_shift: -1, num: 5, den: 1, theta: [-18, 0, 4, -7, -1] }, ThetaTerm { q_shift: 0, num: 4, den: 5, theta: [0, 0, 0, 0, 4] }] },
    ThetaForm { printed: (0, 8), a: 0, m: 8, terms: [ThetaTerm { q_shift: -1, num: 4, den: 1, theta: [6, 0, 42, -36, -6] }, ThetaTerm { q_shift: 0, num: 3, den: 4, theta: [0, 0, -16, 6, 0] }] },
    ThetaForm { printed: (1, 8), a: 1, m: 8, terms: [ThetaTerm { q_shift: -1, num: 4, den: 1, theta: [6, 0, -24, 30, 5] }, ThetaTerm { q_shift: 0, num: 3, den: 4, theta: [0, 0, 6, -5, 0] }] },
    ThetaForm { printed: (2, 8), a: 2, m: 8, terms: [ThetaTerm { q_shift: -1, num: 4, den: 1, theta: [-5, 0, 9, -14, 5] }, ThetaTerm { q_shift: 0, num: 3, den: 4, theta: [0, 0, 6, 6, 0] }] },
    ThetaForm { printed: (3, 8), a: 3, m: 8, terms: [ThetaTerm { q_shift: -1, num: 4, den: 1, theta: [-5, 0, 9, 8, -17] }, ThetaTerm { q_shift: 0, num: 3, den: 4, theta: [0, 0, -5, -5, 0] }] },
    ThetaForm { printed: (4, 8), a: 4, m: 8, terms: [ThetaTerm { q_shift: -1, num: 4, den: 1, theta: [-5, 0, -13, -3, 16] }, ThetaTerm { q_shift: 0, num: 3, den: 4, theta: [0, 0, -5, 6, 0] }] },
    ThetaForm { printed: (5, 8), a: 5, m: 8, terms: [ThetaTerm { q_shift: -1, num: 4, den: 1, theta: [6, 0, -2, -3, -6] }, ThetaTerm { q_shift: 0, num: 3, den: 4, theta: [0, 0, 6, -5, 0] }] },
    ThetaForm { printed: (0, 0), a: 0, m: 0, terms: [ThetaTerm { q_shift: 1, num: 2, den: 4, theta: [-10, -52, 0, 56, 32] }, ThetaTerm { q_shift: 0, num: 5, den: 2, theta: [0, 10, 0, 22, 0] }] },
    ThetaForm { printed: (1, 0), a: 1, m: 0, terms: [ThetaTerm { q_shift: 1, num: 2, den: 4, theta: [1, 25, 0, -10, -23] }, ThetaTerm { q_shift: 0, num: 5, den: 2, theta: [0, -1, 0, -11, 0] }] },
    ThetaForm { printed: (2, 0), a: 2, m: 0, terms: [ThetaTerm { q_shift: 1, num: 2, den: 4, theta: [1, 14, 0, -32, -1] }, ThetaTerm { q_shift: 0, num: 5, den: 2, theta: [0, -1, 0, 0, 0] }] },
    ThetaForm { printed: (3, 0), a: 3, m: 0, terms: [ThetaTerm { q_shift: 1, num: 2, den: 4, theta: [12, -8, 0, 23, 21] }, ThetaTerm { q_shift: 0, num: 5, den: 2, theta: [0, -1, 0, 0, 0] }] },
    ThetaForm { printed: (4, 0), a: 4, m: 0, terms: [ThetaTerm { q_shift: 1, num: 2, den: 4, theta: [1, 3, 0, -10, -23] }, ThetaTerm { q_shift: 0, num: 5, den: 2, theta: [0, -1, 0, 0, 0] }] },
    ThetaForm { printed: (5, 0), a: 5, m: 0, terms: [ThetaTerm { q_shift: 1, num: 2, den: 4, theta: [-10, -8, 0, 1, 10] }, ThetaTerm { q_shift: 0, num: 5, den: 2, theta: [0, -1, 0, 0, 0] }] },
    ThetaForm { printed: (0, 1), a: 0, m: 1, terms: [ThetaTerm { q_shift: 1, num: 2, den: 5, theta: [0, -6, -12, -4, -12] }, ThetaTerm { q_shift: 0, num: 4, den: 2, theta: [0, 10, 0, -12, 0] }] },
    ThetaForm { printed: (1, 1), a: 1, m: 1, terms: [ThetaTerm { q_shift: 1, num: 2, den: 5, theta: [0, 5, -1, -4, 10] }, ThetaTerm { q_shift: 0, num: 4, den: 2, theta: [0, -1, 0, 10, 0] }] },
    ThetaForm { printed: (2, 1), a: 2, m: 1, terms: [ThetaTerm { q_shift: 1, num: 2, den: 5, theta: [0, 16, 10, -15, -1] }, ThetaTerm { q_shift: 0, num: 4, den: 2, theta: [0, -1, 0, -12, 0] }] },
    ThetaForm { printed: (3, 1), a: 3, m: 1, terms: [ThetaTerm { q_shift: 1, num: 2, den: 5, theta: [0, -6, -1, 18, -12] }, ThetaTerm { q_shift: 0, num: 4, den: 2, theta: [0, -1, 0, 10, 0] }] },
    ThetaForm { printed: (4, 1), a: 4, m: 1, terms: [ThetaTerm { q_shift: 1, num: 2, den: 5, theta: [0, -6, -12, 18, 10] }, ThetaTerm { q_shift: 0, num: 4, den: 2, theta: [0, -1, 0, -1, 0] }] },
    ThetaForm { printed: (5, 1), a: 5, m: 1, terms: [ThetaTerm { q_shift: 1, num: 2, den: 5, theta: [0, -6, 10, -15, -1] }, ThetaTerm { q_shift: 0, num: 4, den: 2, theta: [0, -1, 0, -1, 0] }] },
    ThetaForm { printed: (0, 2), a: 0, m: 2, terms: [ThetaTerm { q_shift: 1, num: 1, den: 3, theta: [-12, 30, 2, -20, 0] }, ThetaTerm { q_shift: 0, num: 2, den: 1, theta: [2, -2, 0, 0, 0] }] },
    ThetaForm { printed: (1, 2), a: 1, m: 2, terms: [ThetaTerm { q_shift: 1, num: 1, den: 3, theta: [-12, -36, 2, 13, 0] }, ThetaTerm { q_shift: 0, num: 2, den: 1, theta: [2, 9, 0, 0, 0] }] },
    ThetaForm { printed: (2, 2), a: 2, m: 2, terms: [ThetaTerm { q_shift: 1, num: 1, den: 3, theta: [21, 19, -9, -9, 0] }, ThetaTerm { q_shift: 0, num: 2, den: 1, theta: [2, -2, 0, 0, 0] }] },
    ThetaForm { printed: (3, 2), a: 3, m: 2, terms: [ThetaTerm { q_shift: 1, num: 1, den: 3, theta: [-1, 8, 2, 13, 0] }, ThetaTerm { q_shift: 0, num: 2, den: 1, theta: [-9, -2, 0, 0, 0] }] },
    ThetaForm { printed: (4, 2), a: 4, m: 2, terms: [ThetaTerm { q_shift: 1, num: 1, den: 3, theta: [10, -3, 13, -9, 0] }, ThetaTerm { q_shift: 0, num: 2, den: 1, theta: [2, -2, 0, 0, 0] }] },
    ThetaForm { printed: (5, 2), a: 5, m: 2, terms: [ThetaTerm { q_shift: 1, num: 1, den: 3, theta: [-12, -3, -9, 2, 0] }, ThetaTerm { q_shift: 0, num: 2, den: 1, theta: [2, -2, 0, 0, 0] }] },
    ThetaForm { printed: (0, 3), a: 0, m: 3, terms: [ThetaTerm { q_shift: 0, num: 3, den: 2, theta: [14, 8, 4, 0, -12] }, ThetaTerm { q_shift: 0, num: 5, den: 3, theta: [0, 0, -8, 0, -8] }] },
    ThetaForm { printed: (1, 3), a: 1, m: 3, terms: [ThetaTerm { q_shift: 0, num: 3, den: 2, theta: [3, -3, 4, 0, 21] }, ThetaTerm { q_shift: 0, num: 5, den: 3, theta: [0, 0, 3, 0, 3] }] },
    ThetaForm { printed: (2, 3), a: 2, m: 3, terms: [ThetaTerm { q_shift: 0, num: 3, den: 2, theta: [-8, 8, -18, 0, -12] }, ThetaTerm { q_shift: 0, num: 5, den: 3, theta: [0, 0, 3, 0, 3] }] },
    // printed label Q_{2,3}, position says Q_{3,3}
    ThetaForm { printed: (2, 3), a: 3, m: 3, terms: [ThetaTerm { q_shift: 0, num: 3, den: 2, theta: [-8, -3, 15, 0, -1] }, ThetaTerm { q_shift: 0, num: 5, den: 3, theta: [0, 0, 3, 0, -8] }] },
    // printed label Q_{2,4}, position says Q_{4,3}
    ThetaForm { printed: (2, 4), a: 4, m: 3, terms: [ThetaTerm { q_shift: 0, num: 3, den: 2, theta: [3, -3, 15, 0, -23] }, ThetaTerm { q_shift: 0, num: 5, den: 3, theta: [0, 0, -8, 0, 14] }] },
    // printed label Q_{2,5}, position says Q_{5,3}
    ThetaForm { printed: (2, 5), a: 5, m: 3, terms: [ThetaTerm { q_shift: 0, num: 3, den: 2, theta: [3, -3, -18, 0, 21] }, ThetaTerm { q_shift: 0, num: 5, den: 3, theta: [0, 0, 3, 0, -8] }] },
    ThetaForm { printed: (0, 4), a: 0, m: 4, terms: [ThetaTerm { q_shift: 0, num: 4, den: 3, theta: [16, 6, -28, 26, 0] }, ThetaTerm { q_shift: 1, num: 1, den: 4, theta: [0, 0, 0, -6, 0] }] },
    ThetaForm { printed: (1, 4), a: 1, m: 4, terms: [ThetaTerm { q_shift: 0, num: 4, den: 3, theta: [5, 6, 5, -18, 0] }, ThetaTerm { q_shift: 1, num: 1, den: 4, theta: [0, 0, 0, 5, 0] }] },
    ThetaForm { printed: (2, 4), a: 2, m: 4, terms: [ThetaTerm { q_shift: 0, num: 4, den: 3, theta: [-6, -5, 27, 4, 0] }, ThetaTerm { q_shift: 1, num: 1, den: 4, theta: [0, 0, 0, -6, 0] }] },
    ThetaForm { printed: (3, 4), a: 3, m: 4, terms: [ThetaTerm { q_shift: 0, num: 4, den: 3, theta: [-17, 6, -17, -7, 0] }, ThetaTerm { q_shift: 1, num: 1, den: 4, theta: [0, 0, 0, 5, 0] }] },
    ThetaForm { printed: (4, 4), a: 4, m: 4, terms: [ThetaTerm { q_shift: 0, num: 4, den: 3, theta: [-6, -5, 27, -18, 0] }, ThetaTerm { q_shift: 1, num: 1, den: 4, theta: [0, 0, -11, -6, 0] }] },
    ThetaForm { printed: (5, 4), a: 5, m: 4, terms: [ThetaTerm { q_shift: 0, num: 4, den: 3, theta: [16, -5, -28, 26, 0] }, ThetaTerm { q_shift: 1, num: 1, den: 4, theta: [0, 0, 11, 5, 0] }] },
    ThetaForm { printed: (0, 5), a: 0, m: 5, terms: [ThetaTerm { q_shift: 0, num: 5, den: 4, theta: [6, 4, 0, -18, 24] }, ThetaTerm { q_shift: 1, num: 1, den: 5, theta: [-4, 0, 0, 0, 4] }] },
    ThetaForm { printed: (1, 5), a: 1, m: 5, terms: [ThetaTerm { q_shift: 0, num: 5, den: 4, theta: [-5, 4, 0, 15, -9] }, ThetaTerm { q_shift: 1, num: 1, den: 5, theta: [-4, 0, 0, 0, -7] }] },
    ThetaForm { printed: (2, 5), a: 2, m: 5, terms: [ThetaTerm { q_shift: 0, num: 5, den: 4, theta: [17, 4, 0, -7, -9] }, ThetaTerm { q_shift: 1, num: 1, den: 5, theta: [7, 0, 0, 0, 4] }] },
    ThetaForm { printed: (3, 5), a: 3, m: 5, terms: [ThetaTerm { q_shift: 0, num: 5, den: 4, theta: [6, -7, 0, 4, 24] }, ThetaTerm { q_shift: 1, num: 1, den: 5, theta: [7, 0, 0, 0, 4] }] },
    ThetaForm { printed: (4, 5), a: 4, m: 5, terms: [ThetaTerm { q_shift: 0, num: 5, den: 4, theta: [-27, 4, 0, -7, -20] }, ThetaTerm { q_shift: 1, num: 1, den: 5, theta: [-4, 0, 0, 0, -7] }] },
    ThetaForm { printed: (5, 5), a: 5, m: 5, terms: [ThetaTerm { q_shift: 0, num: 5, den: 4, theta: [6, -7, 0, 4, 2] }, ThetaTerm { q_shift: 1, num: 1, den: 5, theta: [-4, 0, 0, 0, 4] }] },
    ThetaForm { printed: (0, 9), a: 0, m: 9, terms: [ThetaTerm { q_shift: 0, num: 3, den: 5, theta: [0, 14, 2, -8, -36] }, ThetaTerm { q_shift: 0, num: 2, den: 3, theta: [0, 0, 8, 0, 0] }] },
    ThetaForm { printed: (1, 9), a: 1, m: 9, terms: [ThetaTerm { q_shift: 0, num: 3, den: 5, theta: [0, 3, -9, 14, 19] }, ThetaTerm { q_shift: 0, num: 2, den: 3, theta: [0, 0, -3, 0, 0] }] },
    ThetaForm { printed: (2, 9), a: 2, m: 9, terms: [ThetaTerm { q_shift: 0, num: 3, den: 5, theta: [0, 3, 13, -19, 8] }, ThetaTerm { q_shift: 0, num: 2, den: 3, theta: [0, 0, -3, 0, 0] }] },
    ThetaForm { printed: (3, 9), a: 3, m: 9, terms: [ThetaTerm { q_shift: 0, num: 3, den: 5, theta: [0, 3, -31, 14, 19] }, ThetaTerm { q_shift: 0, num: 2, den: 3, theta: [0, 0, -3, 0, -11] }] },
    ThetaForm { printed: (4, 9), a: 4, m: 9, terms: [ThetaTerm { q_shift: 0, num: 3, den: 5, theta: [0, -8, 13, -8, -14] }, ThetaTerm { q_shift: 0, num: 2, den: 3, theta: [0, 0, 8, 0, 11] }] },
    ThetaForm { printed: (5, 9), a: 5, m: 9, terms: [ThetaTerm { q_shift: 0, num: 3, den: 5, theta: [0, -8, 13, 3, -14] }, ThetaTerm { q_shift: 0, num: 2, den: 3, theta: [0, 0, -3, 0, 0] }] },
    ThetaForm { printed: (0, 10), a: 0, m: 10, terms: [ThetaTerm { q_shift: 0, num: 1, den: 2, theta: [16, 2, 20, 0, 20] }, ThetaTerm { q_shift: -1, num: 3, den: 1, theta: [-2, 0, 0, 0, 0] }] },
    ThetaForm { printed: (1, 10), a: 1, m: 10, terms: [ThetaTerm { q_shift: 0, num: 1, den: 2, theta: [5, 13, -2, 0, -13] }, ThetaTerm { q_shift: -1, num: 3, den: 1, theta: [-2, 0, 0, 0, 0] }] },
    ThetaForm { printed: (2, 10), a: 2, m: 10, terms: [ThetaTerm { q_shift: 0, num: 1, den: 2, theta: [-39, -42, -24, 0, -2] }, ThetaTerm { q_shift: -1, num: 3, den: 1, theta: [-2, 11, 0, 0, 0] }] },
    ThetaForm { printed: (3, 10), a: 3, m: 10, terms: [ThetaTerm { q_shift: 0, num: 1, den: 2, theta: [27, 46, 9, 0, 9] }, ThetaTerm { q_shift: -1, num: 3, den: 1, theta: [9, -11, 0, 0, 0] }] },
    ThetaForm { printed: (4, 10), a: 4, m: 10, terms: [ThetaTerm { q_shift: 0, num: 1, den: 2, theta: [-6, -9, 20, 0, -13] }, ThetaTerm { q_shift: -1, num: 3, den: 1, theta: [-2, 0, 0, 0, 0] }] },
    ThetaForm { printed: (5, 10), a: 5, m: 10, terms: [ThetaTerm { q_shift: 0, num: 1, den: 2, theta: [5, -9, -13, 0, 9] }, ThetaTerm { q_shift: -1, num: 3, den: 1, theta: [-2, 0, 0, 0, 0] }] },
];

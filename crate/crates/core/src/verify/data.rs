//! Inequalities, certificates and congruence data as printed.

/// An inequality or equality chain between class counts at one residue.
///
/// `Ni` is `N(i, 11, 11n + m)`, `Mi` is `M(i, 11, 11n + m)` and `P` is
/// `p(11n + m) / 11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inequality {
    pub label: &'static str,
    pub residue: i64,
    pub text: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertRhs {
    Bracket([i64; 6]),
    Theta([i64; 5]),
}

/// `sum_a ranks[a] Q_{a,m} + sum_j cranks[j] Q^C_{k_j,m} = rhs`, where `k_j`
/// runs over [`crank_indices`] of the residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub label: &'static str,
    pub residue: i64,
    pub ranks: [i64; 6],
    pub cranks: &'static [i64],
    pub rhs: CertRhs,
    pub printed: Printed,
}

/// How a certificate's left side relates to the printed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Printed {
    Literal,
    /// Could not be read literally; the stored vectors are the reading.
    Garbled(&'static str),
    /// Printed with these rank coefficients, which do not match the right side.
    Ranks([i64; 6]),
}

/// Crank classes that appear in the certificates of each residue.
pub fn crank_indices(residue: i64) -> &'static [i64] {
    match residue {
        0 | 3 | 4 | 7 | 8 | 9 => &[0, 1],
        1 => &[0, 1, 2],
        2 | 5 => &[0, 2],
        10 => &[0, 3],
        _ => &[],
    }
}

pub const INEQUALITIES: &[Inequality] = &[
    Inequality { label: "thm-2.1", residue: 0, text: "N0+2N1+M1>=2N2+N4+M0" },
    Inequality { label: "thm-2.1", residue: 0, text: "N0+2N1+3N2+M1>=3N3+3N5+M0" },
    Inequality { label: "thm-2.1", residue: 0, text: "2N2+N3+N5>=4N4" },
    Inequality { label: "thm-2.1", residue: 0, text: "N2+5N3+3N4+M0>=N0+2N1+6N5+M1" },
    Inequality { label: "thm-2.1", residue: 1, text: "N0+4N2+N4+M0>=2N1+3N3+N5+M2" },
    Inequality { label: "thm-2.1", residue: 1, text: "N0+3N1+6N3+M0>=4N2+6N4+M2" },
    Inequality { label: "thm-2.1", residue: 1, text: "2N1+6N4>=N2+3N3+4N5" },
    Inequality { label: "thm-2.1", residue: 1, text: "N1+2N2+3N5+3M2>=N0+N3+4N4+2M0+M1" },
    Inequality { label: "thm-2.1", residue: 1, text: "3N2+2N3+N4+3M2>=N0+N1+4N5+2M0+M1" },
    Inequality { label: "thm-2.1", residue: 2, text: "3N2+N4>=2N0+2N5" },
    Inequality { label: "thm-2.1", residue: 2, text: "2N1+2N3+N5+2M0>=2N2+3N4+2M2" },
    Inequality { label: "thm-2.1", residue: 2, text: "3N0+2N2+M2>=N1+N3+3N5+M0" },
    Inequality { label: "thm-2.1", residue: 2, text: "2N0+N1+N3+3N4+M0>=4N2+3N5+M2" },
    Inequality { label: "thm-2.1", residue: 2, text: "N0+3N1+N2+8N5+3M0>=8N3+5N4+3M2" },
    Inequality { label: "thm-2.1", residue: 3, text: "N0+2N3+M1>=N1+2N5+M0" },
    Inequality { label: "thm-2.1", residue: 3, text: "5N1+2N2+2N4>=2N0+4N3+3N5" },
    Inequality { label: "thm-2.1", residue: 3, text: "2N0+4N3+N5+M0>=N1+3N2+3N4+M1" },
    Inequality { label: "thm-2.1", residue: 3, text: "6N2+3N5+5M1>=N0+N1+2N3+5N4+5M0" },
    Inequality { label: "thm-2.1", residue: 3, text: "4N0+2N1+4N4+3M0>=7N2+3N3+3M1" },
    Inequality { label: "thm-2.1", residue: 4, text: "4N1+3N3+5M1>=2N0+3N2+N4+N5+5M0" },
    Inequality { label: "thm-2.1", residue: 4, text: "4N0+5N2+3M0>=5N1+2N3+N4+N5+3M1" },
    Inequality { label: "thm-2.1", residue: 4, text: "3N1+N2+M0>=2N0+2N3+M1" },
    Inequality { label: "thm-2.1", residue: 4, text: "3N0+N4+N5+M1>=3N2+2N3+M0" },
    Inequality { label: "thm-2.1", residue: 5, text: "3N0+N2+N5+2M2>=2N1+3N3+2M0" },
    Inequality { label: "thm-2.1", residue: 5, text: "7N1+N4+3M2>=3N0+2N2+N3+2N5+3M0" },
    Inequality { label: "thm-2.1", residue: 5, text: "2N0+N2+3N3+N5+4M0>=3N1+4N4+4M2" },
    Inequality { label: "thm-2.1", residue: 5, text: "4N2+7N3+2N4>=4N0+2N1+7N5" },
    Inequality { label: "thm-2.1", residue: 5, text: "4N1+N2+2N4+N5+5M2>=2N0+6N3+5M0" },
    Inequality { label: "thm-2.1", residue: 7, text: "N0+2N4+2M0>=2N3+N5+2M1" },
    Inequality { label: "thm-2.1", residue: 7, text: "3N0+N1+N2+7N3+4N5>=5N4+4M0+7M1" },
    Inequality { label: "thm-2.1", residue: 7, text: "4N1+4N2+3N4+4M1>=4N0+6N3+N5+4M0" },
    Inequality { label: "thm-2.1", residue: 7, text: "N0+5N3+2N4>=2N1+2N2+4N5" },
    Inequality { label: "thm-2.1", residue: 8, text: "N0+2N2+3N4+5M0>=3N1+3N5+5M1" },
    Inequality { label: "thm-2.1", residue: 8, text: "2N1+4N3+2N5+3M1>=N0+2N2+5N4+3M0" },
    Inequality { label: "thm-2.1", residue: 8, text: "2N1+5N2+2N5+M1>=3N0+5N3+N4+M0" },
    Inequality { label: "thm-2.1", residue: 8, text: "7N0+4N1+5N4+4N5>=8N2+N3+4M0+7M1" },
    Inequality { label: "thm-2.1", residue: 8, text: "5N0+6N1+4N3+2N4>=N2+5N5+6M0+5M1" },
    Inequality { label: "thm-2.1", residue: 9, text: "4N2+M0>=2N1+N3+N4+M1" },
    Inequality { label: "thm-2.1", residue: 9, text: "4N1+N3+N4>=N0+3N2+2N5" },
    Inequality { label: "thm-2.1", residue: 9, text: "4N0+3N3+3N4+4M0>=2N1+5N2+3N5+4M1" },
    Inequality { label: "thm-2.1", residue: 9, text: "3N1+4N2+7N5+3M1>=2N0+6N3+6N4+3M0" },
    Inequality { label: "thm-2.1", residue: 10, text: "3N1+2N5+2M3>=2N2+2N3+N4+2M0" },
    Inequality { label: "thm-2.1", residue: 10, text: "3N0+N2+N3+M0>=3N1+2N4+M3" },
    Inequality { label: "thm-2.1", residue: 10, text: "2N1+4N4+M3>=N0+N2+N3+3N5+M0" },
    Inequality { label: "thm-2.1", residue: 10, text: "6N2+6N3+6M0+5M3>=6N0+6N1+3N4+8N5" },
    Inequality { label: "cor-2.2", residue: 0, text: "M1>=N4" },
    Inequality { label: "cor-2.2", residue: 0, text: "N2+N3>=N4+M1" },
    Inequality { label: "cor-2.2", residue: 1, text: "N2>=M2" },
    Inequality { label: "cor-2.2", residue: 1, text: "M2>=N4" },
    Inequality { label: "cor-2.2", residue: 1, text: "N2+N4>=N3+N5" },
    Inequality { label: "cor-2.2", residue: 2, text: "N1>=M2" },
    Inequality { label: "cor-2.2", residue: 2, text: "M0>=N5" },
    Inequality { label: "cor-2.2", residue: 2, text: "2M0>=N2+N5" },
    Inequality { label: "cor-2.2", residue: 2, text: "N2+M0>=N0+N5" },
    Inequality { label: "cor-2.2", residue: 2, text: "N1+N3>=M0+M2" },
    Inequality { label: "cor-2.2", residue: 2, text: "N1+N5>=N4+M2" },
    Inequality { label: "cor-2.2", residue: 3, text: "N0>=M0" },
    Inequality { label: "cor-2.2", residue: 3, text: "M1>=N4" },
    Inequality { label: "cor-2.2", residue: 3, text: "N0+M0>=2N2" },
    Inequality { label: "cor-2.2", residue: 3, text: "N2+M1>=N4+M0" },
    Inequality { label: "cor-2.2", residue: 3, text: "N0+N3>=N2+M1" },
    Inequality { label: "cor-2.2", residue: 4, text: "N1>=M0" },
    Inequality { label: "cor-2.2", residue: 4, text: "2N1>=N0+M0" },
    Inequality { label: "cor-2.2", residue: 4, text: "N1+M1>=N2+M0" },
    Inequality { label: "cor-2.2", residue: 4, text: "N1+N3>=2M0" },
    Inequality { label: "cor-2.2", residue: 5, text: "N2>=M0" },
    Inequality { label: "cor-2.2", residue: 5, text: "M2>=N5" },
    Inequality { label: "cor-2.2", residue: 5, text: "N2+N3>=M0+M2" },
    Inequality { label: "cor-2.2", residue: 5, text: "N2+M2>=N0+N5" },
    Inequality { label: "cor-2.2", residue: 5, text: "N0+M0>=N1+N4" },
    Inequality { label: "cor-2.2", residue: 5, text: "N2+N3>=N1+N5" },
    Inequality { label: "cor-2.2", residue: 5, text: "N0+N2>=N1+M0" },
    Inequality { label: "cor-2.2", residue: 7, text: "N0>=M1" },
    Inequality { label: "cor-2.2", residue: 7, text: "M0>=N4" },
    Inequality { label: "cor-2.2", residue: 7, text: "N3+N4>=N5+M0" },
    Inequality { label: "cor-2.2", residue: 8, text: "N2>=M1" },
    Inequality { label: "cor-2.2", residue: 8, text: "M0>=N3" },
    Inequality { label: "cor-2.2", residue: 8, text: "M0+M1>=N2+N4" },
    Inequality { label: "cor-2.2", residue: 8, text: "N1+N5>=2N3" },
    Inequality { label: "cor-2.2", residue: 8, text: "N0+M0>=2N2" },
    Inequality { label: "cor-2.2", residue: 8, text: "N3+M0>=N4+M1" },
    Inequality { label: "cor-2.2", residue: 8, text: "N2+N3>=2M1" },
    Inequality { label: "cor-2.2", residue: 8, text: "2M0>=N1+N5" },
    Inequality { label: "cor-2.2", residue: 9, text: "N2>=M1" },
    Inequality { label: "cor-2.2", residue: 9, text: "M0>=N5" },
    Inequality { label: "cor-2.2", residue: 9, text: "M1+M0>=N2+N5" },
    Inequality { label: "cor-2.2", residue: 9, text: "N0+M0>=N2+M1" },
    Inequality { label: "cor-2.2", residue: 9, text: "N2+N5>=N3+N4" },
    Inequality { label: "cor-2.2", residue: 10, text: "N1>=M0" },
    Inequality { label: "cor-2.2", residue: 10, text: "M3>=N4" },
    Inequality { label: "cor-2.2", residue: 10, text: "N0+M0>=N1+N4" },
    Inequality { label: "cor-2.2", residue: 10, text: "N2+N3>=2M0" },
    Inequality { label: "cor-2.2", residue: 10, text: "N1+N4>=2M0" },
    Inequality { label: "cor-2.2", residue: 10, text: "N1+M3>=N2+N3" },
    Inequality { label: "cor-2.3", residue: 0, text: "N2+2N3>=N5+2M1" },
    Inequality { label: "cor-2.3", residue: 0, text: "2N3+N4>=2N5+M1" },
    Inequality { label: "cor-2.3", residue: 0, text: "3M1>=N2+N4+N5" },
    Inequality { label: "cor-2.3", residue: 0, text: "N3+2M1>=N2+2N5" },
    Inequality { label: "cor-2.3", residue: 1, text: "2N1+N3>=N2+2N4" },
    Inequality { label: "cor-2.3", residue: 1, text: "2N1+N4>=N2+2N5" },
    Inequality { label: "cor-2.3", residue: 1, text: "N1+2N4>=2N5+M0" },
    Inequality { label: "cor-2.3", residue: 1, text: "N1+N3+N5>=3N4" },
    Inequality { label: "cor-2.3", residue: 1, text: "2N2+N4>=2N5+M0" },
    Inequality { label: "cor-2.3", residue: 2, text: "N0+N1+N4>=N2+M0+M2" },
    Inequality { label: "cor-2.3", residue: 2, text: "3M0>=N2+N3+N4" },
    Inequality { label: "cor-2.3", residue: 2, text: "N1+N2+N5>=2M0+M2" },
    Inequality { label: "cor-2.3", residue: 2, text: "3M0>=N0+N4+N5" },
    Inequality { label: "cor-2.3", residue: 2, text: "N1+N3+M0>=N0+2N5" },
    Inequality { label: "cor-2.3", residue: 2, text: "N1+N3+M0>=N2+N5+M2" },
    Inequality { label: "cor-2.3", residue: 2, text: "N1+2M0>=N2+N4+M2" },
    Inequality { label: "cor-2.3", residue: 2, text: "N1+N2+N3>=N0+N5+M2" },
    Inequality { label: "cor-2.3", residue: 2, text: "N1+N2+M0>=N0+N4+M2" },
    Inequality { label: "cor-2.3", residue: 3, text: "2N1+N4>=N3+N5+M1" },
    Inequality { label: "cor-2.3", residue: 3, text: "N0+N1+N5>=M0+2M1" },
    Inequality { label: "cor-2.3", residue: 3, text: "N0+N1+N4>=N2+2M1" },
    Inequality { label: "cor-2.3", residue: 3, text: "M0+2M1>=N2+N3+N5" },
    Inequality { label: "cor-2.3", residue: 3, text: "2N0+N5>=2N2+N4" },
    Inequality { label: "cor-2.3", residue: 3, text: "N0+N3+N5>=N4+M0+M1" },
    Inequality { label: "cor-2.3", residue: 3, text: "3M1>=N1+2N4" },
    Inequality { label: "cor-2.3", residue: 3, text: "2N2+N5>=N4+2M0" },
    Inequality { label: "cor-2.3", residue: 3, text: "N0+N3+M1>=N1+2N4" },
    Inequality { label: "cor-2.3", residue: 3, text: "N0+2N3>=M0+2M1" },
    Inequality { label: "cor-2.3", residue: 4, text: "2N0+M0>=N1+2N3" },
    Inequality { label: "cor-2.3", residue: 4, text: "2N0+N2>=N1+N3+M1" },
    Inequality { label: "cor-2.3", residue: 4, text: "N0+N2+M1>=N1+N4+N5" },
    Inequality { label: "cor-2.3", residue: 4, text: "N0+N2+N3>=N4+N5+M0" },
    Inequality { label: "cor-2.3", residue: 4, text: "N0+2M1>=2N2+N3" },
    Inequality { label: "cor-2.3", residue: 4, text: "3M1>=N2+N4+N5" },
    Inequality { label: "cor-2.3", residue: 5, text: "2N3+M0>=2N5+M2" },
    Inequality { label: "cor-2.3", residue: 5, text: "N2+2N3>=N0+2N5" },
    Inequality { label: "cor-2.3", residue: 5, text: "N3+M0+M2>=N0+2N5" },
    Inequality { label: "cor-2.3", residue: 5, text: "N3+2M0>=N1+N4+N5" },
    Inequality { label: "cor-2.3", residue: 5, text: "2N2+N3>=N0+N5+M0" },
    Inequality { label: "cor-2.3", residue: 5, text: "N1+N2+N5>=N3+2M0" },
    Inequality { label: "cor-2.3", residue: 5, text: "M0+2M2>=N0+N3+N5" },
    Inequality { label: "cor-2.3", residue: 5, text: "N1+N2+N4>=3M0" },
    Inequality { label: "cor-2.3", residue: 5, text: "N0+N2+N5>=2M0+M2" },
    Inequality { label: "cor-2.3", residue: 7, text: "N1+N2+M1>=N0+N5+M0" },
    Inequality { label: "cor-2.3", residue: 7, text: "N1+N2+M1>=N0+N3+N4" },
    Inequality { label: "cor-2.3", residue: 7, text: "M0+2M1>=N0+2N5" },
    Inequality { label: "cor-2.3", residue: 7, text: "N0+2N3>=M0+2M1" },
    Inequality { label: "cor-2.3", residue: 7, text: "N1+N2+N4>=2M0+M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "N1+N5+M1>=N2+N3+N4" },
    Inequality { label: "cor-2.3", residue: 8, text: "M0+2M1>=N0+2N4" },
    Inequality { label: "cor-2.3", residue: 8, text: "N1+N2+N5>=N0+2N4" },
    Inequality { label: "cor-2.3", residue: 8, text: "N1+N3+N5>=N4+M0+M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "N1+N5+M0>=N2+2N4" },
    Inequality { label: "cor-2.3", residue: 8, text: "N0+N1+N5>=2N2+N3" },
    Inequality { label: "cor-2.3", residue: 8, text: "N2+N3+M0>=N0+2N4" },
    Inequality { label: "cor-2.3", residue: 8, text: "N2+M0+M1>=N0+N3+N4" },
    Inequality { label: "cor-2.3", residue: 8, text: "N1+N2+N5>=M0+2M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "N0+N1+N5>=N2+2M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "2N2+M0>=N0+N4+M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "N0+N3+M0>=N2+2M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "2N2+M0>=N0+2N3" },
    Inequality { label: "cor-2.3", residue: 8, text: "N0+N4+M0>=N2+N3+M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "N0+N3+N4>=3M1" },
    Inequality { label: "cor-2.3", residue: 8, text: "2N2+N4>=3M1" },
    Inequality { label: "cor-2.3", residue: 9, text: "2N1+M1>=N0+N3+N4" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+N3+N4>=N2+N5+M1" },
    Inequality { label: "cor-2.3", residue: 9, text: "M0+2M1>=N2+N3+N4" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+N5+M0>=N2+N3+N4" },
    Inequality { label: "cor-2.3", residue: 9, text: "N1+N2+N5>=M0+2M1" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+N3+N4>=3M1" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+2M0>=N1+N2+N5" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+N2+N5>=3M1" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+2M0>=N1+N3+N4" },
    Inequality { label: "cor-2.3", residue: 9, text: "N2+M0+M1>=N1+N3+N4" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+N2+M0>=N1+2M1" },
    Inequality { label: "cor-2.3", residue: 9, text: "N0+N2+M0>=2N1+N5" },
    Inequality { label: "cor-2.3", residue: 10, text: "N0+N2+N3>=N1+N4+M0" },
    Inequality { label: "cor-2.3", residue: 10, text: "2M0+M3>=N1+N4+N5" },
    Inequality { label: "cor-2.3", residue: 10, text: "N2+N3+M3>=N1+N4+N5" },
    Inequality { label: "cor-2.3", residue: 10, text: "N4+M0+M3>=N0+2N5" },
    Inequality { label: "cor-2.3", residue: 10, text: "N2+N3+M3>=N0+N5+M0" },
    Inequality { label: "cor-2.3", residue: 10, text: "2M0+M3>=N2+N3+N4" },
    Inequality { label: "cor-2.3", residue: 10, text: "N0+N1+N5>=N2+N3+N4" },
    Inequality { label: "cor-2.3", residue: 10, text: "M0+2M3>=N0+N4+N5" },
    Inequality { label: "cor-2.3", residue: 10, text: "2N1+N5>=N2+N3+M0" },
    Inequality { label: "cor-2.3", residue: 10, text: "N1+2M3>=N0+N5+M0" },
    Inequality { label: "cor-2.3", residue: 10, text: "2N1+N5>=3M0" },
    Inequality { label: "thm-2.4", residue: 6, text: "2N1+N2+2N4>=2N3+3N5" },
    Inequality { label: "thm-2.4", residue: 6, text: "2N0+N2+2N5>=2N1+N3+2N4" },
    Inequality { label: "thm-2.4", residue: 6, text: "N0+N1+3N3+N4>=4N2+2N5" },
    Inequality { label: "thm-2.4", residue: 6, text: "N0+6N1+4N2>=2N3+5N4+4N5" },
    Inequality { label: "cor-2.5", residue: 6, text: "N0>=P" },
    Inequality { label: "cor-2.5", residue: 6, text: "P>=N5" },
    Inequality { label: "cor-2.6", residue: 6, text: "N0+N3>=N1+N4" },
    Inequality { label: "cor-2.6", residue: 6, text: "N1+N2+N4>=N3+2N5" },
    Inequality { label: "cor-2.6", residue: 6, text: "N2+2N3>=N1+N4+N5" },
    Inequality { label: "cor-2.6", residue: 6, text: "N0+N1+N4>=N2+2N5" },
    Inequality { label: "cor-2.6", residue: 6, text: "3N3>=N2+2N5" },
    Inequality { label: "cor-2.6", residue: 6, text: "N0+2N3>=2N2+N5" },
    Inequality { label: "thm-6.1", residue: 0, text: "M0>=P>=M1" },
    Inequality { label: "thm-6.1", residue: 1, text: "M1>=P>=M2>=M0" },
    Inequality { label: "thm-6.1", residue: 2, text: "M2>=P>=M0" },
    Inequality { label: "thm-6.1", residue: 3, text: "M0>=P>=M1" },
    Inequality { label: "thm-6.1", residue: 4, text: "M0>=P>=M1" },
    Inequality { label: "thm-6.1", residue: 5, text: "M0>=P>=M2" },
    Inequality { label: "thm-6.1", residue: 7, text: "M1>=P>=M0" },
    Inequality { label: "thm-6.1", residue: 9, text: "M1>=P>=M0" },
    Inequality { label: "thm-6.1", residue: 10, text: "M0>=P>=M3" },
];

pub const CERTIFICATES: &[Certificate] = &[
    Certificate { label: "thm-2.1", residue: 0, ranks: [1, 2, -2, 0, -1, 0], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 0, ranks: [1, 2, 3, -3, 0, -3], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 0, ranks: [0, 0, 2, 1, -4, 1], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 0, ranks: [-1, -2, 1, 5, 3, -6], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 1, ranks: [1, -2, 4, -3, 1, -1], cranks: &[1, 0, -1], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 1, ranks: [1, 3, -4, 6, -6, 0], cranks: &[1, 0, -1], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 1, ranks: [0, 2, -1, -3, 6, -4], cranks: &[0, 0, 0], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 1, ranks: [-1, 1, 2, -1, -4, 3], cranks: &[-2, -1, 3], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 1, ranks: [-1, -1, 3, 2, 1, -4], cranks: &[-2, -1, 3], rhs: CertRhs::Bracket([0, 0, 0, 0, -11, 11]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 2, ranks: [-2, 0, 3, 0, 1, -2], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 0, 0, 0, 0, 11]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 2, ranks: [0, 2, -2, 2, -3, 1], cranks: &[2, -2], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, -11]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 2, ranks: [3, -1, 2, -1, 0, -3], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 2, ranks: [2, 1, -4, 1, 3, -3], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 2, ranks: [1, 3, 1, -8, -5, 8], cranks: &[3, -3], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 3, ranks: [1, -1, 0, 2, 0, -2], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 3, ranks: [-2, 5, 2, -4, 2, -3], cranks: &[0, 0], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 3, ranks: [2, -1, -3, 4, -3, 1], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 0, -11, 0, 0, 11]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 3, ranks: [-1, -1, 6, -2, -5, 3], cranks: &[-5, 5], rhs: CertRhs::Bracket([0, 0, 0, 11, 0, -11]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 3, ranks: [4, 2, -7, -3, 4, 0], cranks: &[3, -3], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 4, ranks: [-2, 4, -3, 3, -1, -1], cranks: &[-5, 5], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 4, ranks: [4, -5, 5, -2, -1, -1], cranks: &[3, -3], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 4, ranks: [-2, 3, 1, -2, 0, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 4, ranks: [3, 0, -3, -2, 1, 1], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 5, ranks: [3, -2, 1, -3, 0, 1], cranks: &[-2, 2], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 5, ranks: [-3, 7, -2, -1, 1, -2], cranks: &[-3, 3], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 5, ranks: [2, -3, 1, 3, -4, 1], cranks: &[4, -4], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 5, ranks: [-4, -2, 4, 7, 2, -7], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 5, ranks: [-2, 4, 1, -6, 2, 1], cranks: &[-5, 5], rhs: CertRhs::Bracket([0, 0, 11, 0, 0, -11]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 7, ranks: [1, 0, 0, -2, 2, -1], cranks: &[2, -2], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 7, ranks: [3, 1, 1, 7, -5, 4], cranks: &[-4, -7], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 7, ranks: [-4, 4, 4, -6, 3, -1], cranks: &[-4, 4], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 7, ranks: [1, -2, -2, 5, 2, -4], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 8, ranks: [1, -3, 2, 0, 3, -3], cranks: &[5, -5], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 8, ranks: [-1, 2, -2, 4, -5, 2], cranks: &[-3, 3], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 8, ranks: [-3, 2, 5, -5, -1, 2], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 8, ranks: [7, 4, -8, -1, 5, 4], cranks: &[-4, -7], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 8, ranks: [5, 6, -1, 4, 2, -5], cranks: &[-6, -5], rhs: CertRhs::Bracket([0, 0, 0, -11, 0, 11]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 9, ranks: [0, -2, 4, -1, -1, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 9, ranks: [-1, 4, -3, 1, 1, -2], cranks: &[0, 0], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 9, ranks: [4, -2, -5, 3, 3, -3], cranks: &[4, -4], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 9, ranks: [-2, 3, 4, -6, -6, 7], cranks: &[-3, 3], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 10, ranks: [0, 3, -2, -2, -1, 2], cranks: &[-2, 2], rhs: CertRhs::Bracket([0, 11, 0, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 10, ranks: [3, -3, 1, 1, -2, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, -11, 11, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 10, ranks: [-1, 2, -1, -1, 4, -3], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 0, -11, 11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.1", residue: 10, ranks: [-6, -6, 6, 6, -3, -8], cranks: &[6, 5], rhs: CertRhs::Bracket([0, 0, 0, -11, 11, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 0, ranks: [0, 0, 0, 0, -1, 0], cranks: &[0, 1], rhs: CertRhs::Bracket([0, 1, -2, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 0, ranks: [0, 0, 1, 1, -1, 0], cranks: &[0, -1], rhs: CertRhs::Bracket([0, 0, -4, 3, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 1, ranks: [0, 0, 1, 0, 0, 0], cranks: &[0, 0, -1], rhs: CertRhs::Bracket([0, 1, 0, -1, 0, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 1, ranks: [0, 0, 0, 0, -1, 0], cranks: &[0, 0, 1], rhs: CertRhs::Bracket([0, 0, 1, -1, 1, 0]), printed: Printed::Ranks([0, 0, 0, 0, 0, -1]) },
    Certificate { label: "cor-2.2", residue: 1, ranks: [0, 0, 1, -1, 1, -1], cranks: &[0, 0, 0], rhs: CertRhs::Bracket([0, 2, -2, 1, 0, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 2, ranks: [0, 1, 0, 0, 0, 0], cranks: &[0, -1], rhs: CertRhs::Bracket([0, 2, -2, 1, 1, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 2, ranks: [0, 0, 0, 0, 0, -1], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 0, 0, 1, 0, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 2, ranks: [0, 0, -1, 0, 0, -1], cranks: &[2, 0], rhs: CertRhs::Bracket([0, 1, -2, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 2, ranks: [-1, 0, 1, 0, 0, -1], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 1, 0, 0, 0, 4]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 2, ranks: [0, 1, 0, 1, 0, 0], cranks: &[-1, -1], rhs: CertRhs::Bracket([0, 3, -1, 1, 0, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 2, ranks: [0, 1, 0, 0, -1, 1], cranks: &[0, -1], rhs: CertRhs::Bracket([0, 3, 0, -1, 1, -2]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 3, ranks: [1, 0, 0, 0, 0, 0], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, 4, 0, 0, 2, -2]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 3, ranks: [0, 0, 0, 0, -1, 0], cranks: &[0, 1], rhs: CertRhs::Bracket([0, -1, -1, 1, 0, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 3, ranks: [1, 0, -2, 0, 0, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 0, -2, -2, 2, 2]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 3, ranks: [0, 0, 1, 0, -1, 0], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 1, 0, 2, 0, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 3, ranks: [1, 0, -1, 1, 0, 0], cranks: &[0, -1], rhs: CertRhs::Bracket([0, 2, -2, -1, 1, 2]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 4, ranks: [0, 1, 0, 0, 0, 0], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, 1, -1, 1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 4, ranks: [-1, 2, 0, 0, 0, 0], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, 2, -4, 4, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 4, ranks: [0, 1, -1, 0, 0, 0], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 2, -1, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 4, ranks: [0, 1, 0, 1, 0, 0], cranks: &[-2, 0], rhs: CertRhs::Bracket([0, 2, 1, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 5, ranks: [0, 0, 1, 0, 0, 0], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, 1, 0, 1, 1, -2]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 5, ranks: [0, 0, 0, 0, 0, -1], cranks: &[0, 1], rhs: CertRhs::Bracket([0, 1, 1, -1, 1, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 5, ranks: [0, 0, 1, 1, 0, 0], cranks: &[-1, -1], rhs: CertRhs::Bracket([0, 0, -1, 1, 1, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 5, ranks: [-1, 0, 1, 0, 0, -1], cranks: &[0, 1], rhs: CertRhs::Bracket([0, 0, 1, 0, 2, -3]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 5, ranks: [1, -1, 0, 0, -1, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 2, -2, 2, 0, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 5, ranks: [0, -1, 1, 1, 0, -1], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 2, -1, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 5, ranks: [1, -1, 1, 0, 0, 0], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, 4, -1, 0, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 7, ranks: [1, 0, 0, 0, 0, 0], cranks: &[0, -1], rhs: CertRhs::Bracket([1, 3, 1, -1, -1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 7, ranks: [0, 0, 0, 0, -1, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, -1, 1, 1, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 7, ranks: [0, 0, 0, 1, 1, -1], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, 0, -1, -2, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [0, 0, 1, 0, 0, 0], cranks: &[0, -1], rhs: CertRhs::Bracket([1, 1, 0, 1, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [0, 0, 0, -1, 0, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 1, -1, 1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [0, 0, -1, 0, -1, 0], cranks: &[1, 1], rhs: CertRhs::Bracket([0, -1, 2, 0, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [0, 1, 0, -2, 0, 1], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 0, -3, 2, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [1, 0, -2, 0, 0, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 0, 2, -2, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [0, 0, 0, 1, -1, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 0, 4, 1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [0, 0, 1, 1, 0, 0], cranks: &[0, -2], rhs: CertRhs::Bracket([0, 1, 2, 1, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 8, ranks: [0, -1, 0, 0, 0, -1], cranks: &[2, 0], rhs: CertRhs::Bracket([0, 2, 1, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 9, ranks: [0, 0, 1, 0, 0, 0], cranks: &[0, -1], rhs: CertRhs::Bracket([0, 2, 1, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 9, ranks: [0, 0, 0, 0, 0, -1], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 1, 2, 1, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 9, ranks: [0, 0, -1, 0, 0, -1], cranks: &[1, 1], rhs: CertRhs::Bracket([0, -1, 1, 1, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 9, ranks: [1, 0, -1, 0, 0, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 0, -3, 2, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 9, ranks: [0, 0, 1, -1, -1, 1], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 2, -1, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 10, ranks: [0, 1, 0, 0, 0, 0], cranks: &[-1, 0], rhs: CertRhs::Bracket([1, 2, -1, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 10, ranks: [0, 0, 0, 0, -1, 0], cranks: &[0, 1], rhs: CertRhs::Bracket([0, 2, 2, -1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 10, ranks: [1, -1, 0, 0, -1, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, -3, 4, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 10, ranks: [0, 0, 1, 1, 0, 0], cranks: &[-2, 0], rhs: CertRhs::Bracket([0, 0, 1, -1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 10, ranks: [0, 1, 0, 0, 1, 0], cranks: &[-2, 0], rhs: CertRhs::Bracket([0, 1, -2, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.2", residue: 10, ranks: [0, 1, -1, -1, 0, 0], cranks: &[0, 1], rhs: CertRhs::Bracket([0, 3, -1, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 0, ranks: [0, 0, 1, 2, 0, -1], cranks: &[0, -2], rhs: CertRhs::Bracket([0, 1, -3, 0, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 0, ranks: [0, 0, 0, 2, 1, -2], cranks: &[0, -1], rhs: CertRhs::Bracket([0, 3, 0, -4, 4, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 0, ranks: [0, 0, -1, 0, -1, -1], cranks: &[0, 3], rhs: CertRhs::Bracket([0, 4, -1, 0, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 0, ranks: [0, 0, -1, 1, 0, -2], cranks: &[0, 2], rhs: CertRhs::Bracket([0, 5, 0, -3, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 1, ranks: [0, 2, -1, 1, -2, 0], cranks: &[0, 0, 0], rhs: CertRhs::Bracket([0, -4, 1, -1, 4, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 1, ranks: [0, 2, -1, 0, 1, -2], cranks: &[0, 0, 0], rhs: CertRhs::Bracket([0, -3, -3, 4, 1, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 1, ranks: [0, 1, 0, 0, 2, -2], cranks: &[-1, 0, 0], rhs: CertRhs::Bracket([1, -2, -4, 3, -3, 2]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 1, ranks: [0, 1, 0, 1, -3, 1], cranks: &[0, 0, 0], rhs: CertRhs::Bracket([0, -2, 3, -4, 4, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 1, ranks: [0, 0, 2, 0, 1, -2], cranks: &[-1, 0, 0], rhs: CertRhs::Bracket([1, 1, -2, 0, -4, 4]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [1, 1, -1, 0, 1, 0], cranks: &[-1, -1], rhs: CertRhs::Bracket([0, 0, -4, 3, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [0, 0, -1, -1, -1, 0], cranks: &[3, 0], rhs: CertRhs::Bracket([0, 1, -1, 0, 1, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [0, 1, 1, 0, 0, 1], cranks: &[-2, -1], rhs: CertRhs::Bracket([0, 1, 0, -1, 1, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [-1, 0, 0, 0, -1, -1], cranks: &[3, 0], rhs: CertRhs::Bracket([0, 3, 0, 0, 0, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [-1, 1, 0, 1, 0, -2], cranks: &[1, 0], rhs: CertRhs::Bracket([1, 4, -4, 2, -1, 3]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [0, 1, -1, 1, 0, -1], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 4, -3, 3, 0, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [0, 1, -1, 0, -1, 0], cranks: &[2, -1], rhs: CertRhs::Bracket([0, 4, -2, 1, 1, -2]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [-1, 1, 1, 1, 0, -1], cranks: &[0, -1], rhs: CertRhs::Bracket([0, 4, -1, 1, 0, 3]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 2, ranks: [-1, 1, 1, 0, -1, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 4, 0, -1, 1, 2]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [0, 2, 0, -1, 1, -1], cranks: &[0, -1], rhs: CertRhs::Bracket([0, -3, 3, -1, 1, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [1, 1, 0, 0, 0, 1], cranks: &[-1, -2], rhs: CertRhs::Bracket([0, -1, -1, 0, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [1, 1, -1, 0, 1, 0], cranks: &[0, -2], rhs: CertRhs::Bracket([0, 0, 0, -2, 2, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [0, 0, -1, -1, 0, -1], cranks: &[1, 2], rhs: CertRhs::Bracket([0, 0, 1, -1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [2, 0, -2, 0, -1, 1], cranks: &[0, 0], rhs: CertRhs::Bracket([0, 1, -4, -1, 4, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [1, 0, 0, 1, -1, 1], cranks: &[-1, -1], rhs: CertRhs::Bracket([0, 1, -3, 1, 1, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [0, -1, 0, 0, -2, 0], cranks: &[0, 3], rhs: CertRhs::Bracket([0, 1, -2, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [0, 0, 2, 0, -1, 1], cranks: &[-2, 0], rhs: CertRhs::Bracket([0, 1, 0, 3, 0, -3]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [1, -1, 0, 1, -2, 0], cranks: &[0, 1], rhs: CertRhs::Bracket([1, 4, -4, 1, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 3, ranks: [1, 0, 0, 2, 0, 0], cranks: &[-1, -2], rhs: CertRhs::Bracket([0, 4, -2, 0, 0, 2]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 4, ranks: [2, -1, 0, -2, 0, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, -3, 1, -3, 5, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 4, ranks: [2, -1, 1, -1, 0, 0], cranks: &[0, -1], rhs: CertRhs::Bracket([0, -3, 3, -2, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 4, ranks: [1, -1, 1, 0, -1, -1], cranks: &[0, 1], rhs: CertRhs::Bracket([0, -1, 5, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 4, ranks: [1, 0, 1, 1, -1, -1], cranks: &[-1, 0], rhs: CertRhs::Bracket([1, 0, 5, -1, -1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 4, ranks: [1, 0, -2, -1, 0, 0], cranks: &[0, 2], rhs: CertRhs::Bracket([0, 1, 0, -5, 5, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 4, ranks: [0, 0, -1, 0, -1, -1], cranks: &[0, 3], rhs: CertRhs::Bracket([0, 2, 2, -1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [0, 0, 0, 2, 0, -2], cranks: &[1, -1], rhs: CertRhs::Bracket([1, -1, -1, -3, 1, 4]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [-1, 0, 1, 2, 0, -2], cranks: &[0, 0], rhs: CertRhs::Bracket([0, -1, 0, -1, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [-1, 0, 0, 1, 0, -2], cranks: &[1, 1], rhs: CertRhs::Bracket([0, -1, 1, -2, 2, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [0, -1, 0, 1, -1, -1], cranks: &[2, 0], rhs: CertRhs::Bracket([0, 0, -2, 1, 1, 1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [-1, 0, 2, 1, 0, -1], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, 0, 0, 1, 3, -4]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [0, 1, 1, -1, 0, 1], cranks: &[-2, 0], rhs: CertRhs::Bracket([0, 0, 1, 3, 0, -4]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [-1, 0, 0, -1, 0, -1], cranks: &[1, 2], rhs: CertRhs::Bracket([0, 0, 2, -1, 1, -2]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [0, 1, 1, 0, 1, 0], cranks: &[-3, 0], rhs: CertRhs::Bracket([0, 1, 2, -1, 1, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 5, ranks: [1, 0, 1, 0, 0, 1], cranks: &[-2, -1], rhs: CertRhs::Bracket([0, 2, -1, 2, 0, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 7, ranks: [-1, 1, 1, 0, 0, -1], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, -3, -2, 2, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 7, ranks: [-1, 1, 1, -1, -1, 0], cranks: &[0, 1], rhs: CertRhs::Bracket([0, -3, -1, 4, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 7, ranks: [-1, 0, 0, 0, 0, -2], cranks: &[1, 2], rhs: CertRhs::Bracket([0, -2, -2, 0, 4, 0]), printed: Printed::Garbled("(-1, 0, 0, 0, 0, -2v 1, 2)_7") },
    Certificate { label: "cor-2.3", residue: 7, ranks: [1, 0, 0, 2, 0, 0], cranks: &[-1, -2], rhs: CertRhs::Bracket([0, 0, 2, -2, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 7, ranks: [0, 1, 1, 0, 1, 0], cranks: &[-2, -1], rhs: CertRhs::Bracket([0, 1, -1, 1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [0, 1, -1, -1, -1, 1], cranks: &[0, 1], rhs: CertRhs::Bracket([0, -2, 0, 1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [-1, 0, 0, 0, -2, 0], cranks: &[1, 2], rhs: CertRhs::Bracket([0, -2, 2, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [-1, 1, 1, 0, -2, 1], cranks: &[0, 0], rhs: CertRhs::Bracket([0, -2, 2, 4, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [0, 1, 0, 1, -1, 1], cranks: &[-1, -1], rhs: CertRhs::Bracket([0, -2, 3, 1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [0, 1, -1, 0, -2, 1], cranks: &[1, 0], rhs: CertRhs::Bracket([0, -2, 4, 2, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [1, 1, -2, -1, 0, 1], cranks: &[0, 0], rhs: CertRhs::Bracket([0, -1, 0, -1, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [-1, 0, 1, 1, -2, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, -1, 4, 3, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [-1, 0, 1, -1, -1, 0], cranks: &[1, 1], rhs: CertRhs::Bracket([0, 0, -1, 3, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [0, 1, 1, 0, 0, 1], cranks: &[-1, -2], rhs: CertRhs::Bracket([0, 0, 0, 2, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [1, 1, -1, 0, 0, 1], cranks: &[0, -2], rhs: CertRhs::Bracket([0, 0, 2, 0, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [-1, 0, 2, 0, -1, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 1, 1, 4, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [1, 0, -1, 1, 0, 0], cranks: &[1, -2], rhs: CertRhs::Bracket([0, 1, 4, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [-1, 0, 2, -2, 0, 0], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 2, -4, 4, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [1, 0, -1, -1, 1, 0], cranks: &[1, -1], rhs: CertRhs::Bracket([0, 2, -1, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [1, 0, 0, 1, 1, 0], cranks: &[0, -3], rhs: CertRhs::Bracket([0, 2, 2, -1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 8, ranks: [0, 0, 2, 0, 1, 0], cranks: &[0, -3], rhs: CertRhs::Bracket([0, 3, -1, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [-1, 2, 0, -1, -1, 0], cranks: &[0, 1], rhs: CertRhs::Bracket([0, -3, 6, -2, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, 0, -1, 1, 1, -1], cranks: &[0, -1], rhs: CertRhs::Bracket([1, -1, -2, 2, -1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [0, 0, -1, -1, -1, 0], cranks: &[1, 2], rhs: CertRhs::Bracket([0, -1, -1, 0, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, 0, -1, -1, -1, 1], cranks: &[1, 0], rhs: CertRhs::Bracket([0, 0, -5, 1, 4, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [0, 1, 1, 0, 0, 1], cranks: &[-1, -2], rhs: CertRhs::Bracket([0, 0, 1, -1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, 0, 0, 1, 1, 0], cranks: &[0, -3], rhs: CertRhs::Bracket([0, 1, -2, 2, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, -1, -1, 0, 0, -1], cranks: &[2, 0], rhs: CertRhs::Bracket([0, 2, -3, 3, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, 0, 1, 0, 0, 1], cranks: &[0, -3], rhs: CertRhs::Bracket([0, 3, -3, 1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, -1, 0, -1, -1, 0], cranks: &[2, 0], rhs: CertRhs::Bracket([0, 4, -4, 2, 3, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [0, -1, 1, -1, -1, 0], cranks: &[1, 1], rhs: CertRhs::Bracket([0, 4, -1, 0, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, -1, 1, 0, 0, 0], cranks: &[1, -2], rhs: CertRhs::Bracket([0, 5, -3, 2, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 9, ranks: [1, -2, 1, 0, 0, -1], cranks: &[1, 0], rhs: CertRhs::Bracket([1, 6, -4, 2, -1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [1, -1, 1, 1, -1, 0], cranks: &[-1, 0], rhs: CertRhs::Bracket([0, -3, 5, -1, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [0, -1, 0, 0, -1, -1], cranks: &[2, 1], rhs: CertRhs::Bracket([0, -1, 2, 0, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [0, -1, 1, 1, -1, -1], cranks: &[0, 1], rhs: CertRhs::Bracket([0, -1, 3, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [-1, 0, 0, 0, 1, -2], cranks: &[1, 1], rhs: CertRhs::Bracket([0, 0, -4, 3, 1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [-1, 0, 1, 1, 0, -1], cranks: &[-1, 1], rhs: CertRhs::Bracket([0, 2, -1, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [0, 0, -1, -1, -1, 0], cranks: &[2, 1], rhs: CertRhs::Bracket([0, 2, 1, 0, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [1, 1, -1, -1, -1, 1], cranks: &[0, 0], rhs: CertRhs::Bracket([1, 2, 2, 0, -1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [-1, 0, 0, 0, -1, -1], cranks: &[1, 2], rhs: CertRhs::Bracket([0, 4, 0, -1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [0, 2, -1, -1, 0, 1], cranks: &[-1, 0], rhs: CertRhs::Bracket([1, 5, -2, 0, -1, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [-1, 1, 0, 0, 0, -1], cranks: &[-1, 2], rhs: CertRhs::Bracket([0, 5, -2, 1, 2, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.3", residue: 10, ranks: [0, 2, 0, 0, 0, 1], cranks: &[-3, 0], rhs: CertRhs::Bracket([1, 5, -1, -1, 0, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.4", residue: 6, ranks: [0, 2, 1, -2, 2, -3], cranks: &[], rhs: CertRhs::Theta([0, 0, 0, 0, 11]), printed: Printed::Literal },
    Certificate { label: "thm-2.4", residue: 6, ranks: [2, -2, 1, -1, -2, 2], cranks: &[], rhs: CertRhs::Theta([0, 0, 0, 11, -11]), printed: Printed::Literal },
    Certificate { label: "thm-2.4", residue: 6, ranks: [1, 1, -4, 3, 1, -2], cranks: &[], rhs: CertRhs::Theta([0, 0, 11, -11, 0]), printed: Printed::Literal },
    Certificate { label: "thm-2.4", residue: 6, ranks: [1, 6, 4, -2, -5, -4], cranks: &[], rhs: CertRhs::Theta([0, 11, -11, 0, 0]), printed: Printed::Literal },
    Certificate { label: "cor-2.6", residue: 6, ranks: [1, -1, 0, 1, -1, 0], cranks: &[], rhs: CertRhs::Theta([2, 0, 3, 3, -6]), printed: Printed::Literal },
    Certificate { label: "cor-2.6", residue: 6, ranks: [0, 1, 1, -1, 1, -2], cranks: &[], rhs: CertRhs::Theta([1, 0, 0, 1, 6]), printed: Printed::Literal },
    Certificate { label: "cor-2.6", residue: 6, ranks: [0, -1, 1, 2, -1, -1], cranks: &[], rhs: CertRhs::Theta([5, 0, 2, 2, -4]), printed: Printed::Literal },
    Certificate { label: "cor-2.6", residue: 6, ranks: [1, 1, -1, 0, 1, -2], cranks: &[], rhs: CertRhs::Theta([0, 0, 5, -2, 3]), printed: Printed::Literal },
    Certificate { label: "cor-2.6", residue: 6, ranks: [0, 0, -1, 3, 0, -2], cranks: &[], rhs: CertRhs::Theta([4, 0, 6, -5, -1]), printed: Printed::Literal },
    Certificate { label: "cor-2.6", residue: 6, ranks: [1, 0, -2, 2, 0, -1], cranks: &[], rhs: CertRhs::Theta([1, 0, 7, -4, -3]), printed: Printed::Literal },
];

/// Chains whose `>=_k` links are only claimed for `n >= k`.
pub const CONJECTURED_CHAINS: [&str; 11] = [
    "N0>=_3N1>=N2>=_1M0>=P>=M1>=N3>=_2N4>=N5",
    "N0>=N1>=N2>=_1M1>=P>=M2>=M0>=_1N3>=N4>=N5",
    "N0>=_3N1>=N2>=_1M2>=P>=M0>=N3>=N4>=N5",
    "N0>=_2N1>=_1N2>=M0>=P>=M1>=N3>=N4>=N5",
    "N0>=_3N1>=N2>=_1M0>=P>=M1>=_1N3>=N4>=N5",
    "N0>=N1>=N2>=M0>=P>=M2>=N3>=_1N4>=N5",
    "N0>=_1N1>=N2>=P>=N3>=N4>=_1N5",
    "N0>=N1>=_1N2>=M1>=P>=M0>=N3>=N4>=N5",
    "N0>=_3N1>=N2>=M1>=_3P>=_3M0>=N3>=N4>=N5",
    "N0>=_2N1>=N2>=M1>=P>=M0>=_1N3>=N4>=N5",
    "N0>=_3N1>=N2>=M0>=P>=M3>=_1N3>=N4>=N5",
];

/// The residue-8 crank chain conjectured for `n != 2`.
pub const CRANK_EIGHT_CHAIN: &str = "M1>=P>=M0";

/// Crank equalities per residue; `;` separates independent chains.
pub const CRANK_EQUALITIES: [&str; 11] = [
    "M1=M2=M3=M4=M5",
    "M0+M1=2M2;M2=M3=M4=M5",
    "M0=M1=M3=M4=M5",
    "M0=M3;M1=M2=M4=M5",
    "M0=M2=M4;M1=M3=M5",
    "M0=M1=M3=M5;M2=M4",
    "M0=M1=M2=M3=M4=M5=P",
    "M0=M2=M3=M5;M1=M4",
    "M0=M2=M5;M1=M3=M4",
    "M0=M4;M1=M2=M3=M5",
    "M0=M1=M2=M4=M5",
];

/// `sum p(11n + m) q^n = P_MULTIPLIERS[m] J11^2 pre_m (mod 11)`; residue 6 is `0`.
pub const P_MULTIPLIERS: [i64; 11] = [1, 1, 2, 3, 5, 7, 0, 4, 6, 8, 9];

/// Linear combinations of `N(0..=5, 11, 11n + m)` that vanish mod 11.
pub const LINEAR_RANK_CONGRUENCES: [[i64; 6]; 11] = [
    [0, 0, 1, -5, -2, 6],
    [0, 1, -6, 4, 3, -2],
    [1, 0, 4, 0, -6, 1],
    [1, 3, -1, 2, -1, -4],
    [1, 3, -2, -4, 1, 1],
    [1, -5, -1, 1, 5, -1],
    [0, 1, -5, -1, 1, 4],
    [1, -2, -2, 5, 2, -4],
    [1, 5, 2, 1, -3, -6],
    [1, -4, 3, -1, -1, 2],
    [1, -6, 0, 0, 1, 4],
];

/// `Q_{2,0} - 5Q_{3,0} - 2Q_{4,0} + 6Q_{5,0} = 11 [0,-1,0,1,-1;0]_0`.
pub const LINEAR_RANK_RESIDUE_ZERO: [i64; 6] = [0, -1, 0, 1, -1, 0];

/// A congruence target: a residue bracket, a `Theta`, or zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Zero,
    Bracket([i64; 6]),
    Theta([i64; 5]),
}

/// `sum spt(11n + m) q^n` mod 11.
pub const SPT_CONGRUENCES: [(i64, Target); 6] = [
    (1, Target::Bracket([1, 5, -4, 1, -5, 1])),
    (2, Target::Bracket([3, -5, 3, -2, 5, -5])),
    (3, Target::Bracket([5, 2, -2, -4, 4, 4])),
    (5, Target::Bracket([3, 1, 3, 4, -4, -3])),
    (6, Target::Theta([2, 4, 5, 3, 1])),
    (8, Target::Bracket([-1, -2, 2, -1, 3, 2])),
];

/// `T_{k,m}(q) = sum N_k(11n + m) q^n` mod 11, for `k = 2, 4, 6, 8`.
pub const RANK_MOMENT_CONGRUENCES: [(i64, [Target; 4]); 6] = [
    (
        1,
        [
            Target::Bracket([0, -1, -5, -4, -3, -2]),
            Target::Zero,
            Target::Bracket([0, -1, -4, 2, 5, 3]),
            Target::Bracket([0, 5, 1, 4, -4, -3]),
        ],
    ),
    (
        2,
        [
            Target::Bracket([2, 2, -3, -4, 4, -1]),
            Target::Bracket([2, 5, -1, 0, 3, 1]),
            Target::Bracket([2, 4, -2, 2, 5, 3]),
            Target::Bracket([2, -1, 2, 4, 1, 5]),
        ],
    ),
    (
        3,
        [
            Target::Bracket([-3, 0, -3, 1, -4, 3]),
            Target::Bracket([-1, -4, 2, 5, 4, 5]),
            Target::Bracket([-4, 0, 3, 3, -2, 5]),
            Target::Bracket([-5, 2, 0, 4, -5, 5]),
        ],
    ),
    (
        5,
        [
            Target::Bracket([-2, 5, 1, -1, 4, -5]),
            Target::Bracket([-4, 3, -3, 5, -4, -2]),
            Target::Bracket([-5, 2, -1, 0, 2, 1]),
            Target::Bracket([4, 0, -2, 2, 5, -3]),
        ],
    ),
    (
        6,
        [
            Target::Theta([-4, 3, 1, 5, -2]),
            Target::Theta([-2, -4, -5, -3, -1]),
            Target::Theta([1, 5, -5, 4, 2]),
            Target::Theta([-5, -5, 1, -2, -2]),
        ],
    ),
    (
        8,
        [
            Target::Bracket([-1, -4, -1, 5, -3, -4]),
            Target::Bracket([-3, 5, -5, -3, -2, -5]),
            Target::Bracket([3, 4, 3, -3, 1, 3]),
            Target::Bracket([0, 2, -1, 5, -1, 5]),
        ],
    ),
];

/// `c_k T^C_{k,m} = J11^2 pre_m (mod 11)` with `c_k` for `k = 2, 4, 6, 8`;
/// residue 1 carries an extra factor 2 on the right and residue 0 is `0`.
pub const CRANK_MOMENT_MULTIPLIERS: [[i64; 4]; 11] = [
    [1, 1, 1, 1],
    [1, 1, 1, 1],
    [7, 10, 8, 2],
    [8, 7, 2, 10],
    [8, 9, 3, 6],
    [3, 2, 8, 5],
    [0, 0, 0, 0],
    [1, 7, 10, 5],
    [7, 9, 9, 7],
    [1, 9, 4, 3],
    [3, 4, 9, 1],
];

/// `N_k(n) = sum_{a=1}^{5} w_a N(a, 11, n) (mod 11)` for `k = 2, 4, 6, 8`.
pub const MOMENT_REDUCTIONS: [[i64; 5]; 4] = [
    [2, -3, -4, -1, 6],
    [2, -1, -3, 6, -4],
    [2, -4, 6, -3, -1],
    [2, 6, -1, -4, -3],
];

/// Residue-0 moment congruences: `T_{k,0} = 2 q^2 g(q^2; q^11) + [..]_0`.
pub const RESIDUE_ZERO_MOMENTS: [(u32, [i64; 6]); 4] = [
    (2, [0, 0, 4, 5, 1, -2]),
    (4, [0, 0, 4, 5, 1, -2]),
    (6, [0, 3, -2, 1, -4, -2]),
    (8, [0, 4, 1, 0, 2, -2]),
];

/// `sum spt(11n) q^n = -q^2 g(q^2; q^11) + [0,0,-2,3,5;1]_0`.
pub const RESIDUE_ZERO_SPT: [i64; 6] = [0, 0, -2, 3, 5, 1];

//! Names accepted by `qdissect series`.
//!
//! ```text
//! zero | one
//! J<m>                 (q^m; q^m)_inf
//! J(a,m)               J_{a,m} as a triple product
//! P<i> | Ptilde<i>     J_{i,11} and its folded variant
//! E<j>                 Eisenstein series
//! g(a,p) | Phi(p,a)    mock theta pieces
//! Theta(a1,..,a5)
//! [c1,..,c5]  |  [c1,..,c5;c6]_m
//! q_table(a,m) | qc_table(a,m) | D(a) | DC(a)
//! ```

use anyhow::{anyhow, bail, Context as _, Result};
use qdissect::dissection::{
    crank_dissection, rank_dissection, Basis, BracketCoeffs, ResidueBracketCoeffs, ThetaCoeffs,
};
use qdissect::products::{
    eisenstein, euler_j, mock_g, p_tilde, p_theta, phi, theta_j_product, MockIndex,
};
use qdissect::LaurentSeries;

fn ints(list: &str) -> Result<Vec<i64>> {
    list.split([',', ';'])
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("not an integer: {t:?}")))
        .collect()
}

fn args<const N: usize>(name: &str, inner: &str) -> Result<[i64; N]> {
    let v = ints(inner)?;
    v.try_into()
        .map_err(|v: Vec<i64>| anyhow!("{name} takes {N} arguments, got {}", v.len()))
}

/// Splits `head(inner)` into its parts.
fn call(s: &str) -> Option<(&str, &str)> {
    let open = s.find('(')?;
    let inner = s[open + 1..].strip_suffix(')')?;
    Some((&s[..open], inner))
}

pub fn evaluate(name: &str, order: i64) -> Result<LaurentSeries> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if order < 1 {
        bail!("order must be positive");
    }
    match s.as_str() {
        "zero" => return Ok(LaurentSeries::zero()),
        "one" => return Ok(LaurentSeries::one(order)),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix('[') {
        return bracket(rest, order);
    }
    if let Some((head, inner)) = call(&s) {
        return Ok(match head {
            "J" => {
                let [a, m] = args("J", inner)?;
                theta_j_product(a, m, order)?
            }
            "Theta" => Basis::shared(order).theta(&ThetaCoeffs(args("Theta", inner)?)),
            "q_table" => {
                let [a, m] = args(head, inner)?;
                Basis::shared(order).q_table(a, m)?
            }
            "qc_table" => {
                let [a, m] = args(head, inner)?;
                Basis::shared(order).qc_table(a, m)?
            }
            "D" => rank_dissection(args::<1>(head, inner)?[0], order)?,
            "DC" => crank_dissection(args::<1>(head, inner)?[0], order)?,
            "g" => {
                let [a, p] = args(head, inner)?;
                mock_g(MockIndex::new(a, p)?, order)
            }
            "Phi" => {
                let [p, a] = args(head, inner)?;
                phi(p, a, order)?
            }
            _ => bail!("unknown series {name:?}"),
        });
    }
    let index = |prefix: &str| -> Option<Result<i64>> {
        s.strip_prefix(prefix)
            .map(|t| t.parse::<i64>().with_context(|| format!("bad index in {name:?}")))
    };
    if let Some(i) = index("Ptilde") {
        return Ok(p_tilde(i?, order)?);
    }
    if let Some(i) = index("P") {
        return Ok(p_theta(i?, order));
    }
    if let Some(m) = index("J") {
        let m = m?;
        if m < 1 {
            bail!("J needs a positive index");
        }
        return Ok(euler_j(m, order));
    }
    if let Some(j) = index("E") {
        let j = j?;
        if j < 2 {
            bail!("E needs an even index of at least 2");
        }
        return Ok(eisenstein(j as usize, order)?);
    }
    bail!("unknown series {name:?}")
}

fn bracket(rest: &str, order: i64) -> Result<LaurentSeries> {
    let close = rest.find(']').ok_or_else(|| anyhow!("unclosed bracket"))?;
    let c = ints(&rest[..close])?;
    let tail = &rest[close + 1..];
    let b = Basis::shared(order);
    match (c.len(), tail.strip_prefix('_')) {
        (5, None) if tail.is_empty() => {
            Ok(b.bracket(&BracketCoeffs(c.try_into().expect("length 5"))))
        }
        (6, Some(m)) => {
            let m: i64 = m.parse().context("bad residue")?;
            let c: [i64; 6] = c.try_into().expect("length 6");
            Ok(b.residue_bracket(&ResidueBracketCoeffs::new(c, m)?))
        }
        _ => bail!("expected [c1,..,c5] or [c1,..,c5;c6]_m"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(name: &str, order: i64) -> Vec<i128> {
        evaluate(name, order).unwrap().to_i128_vec().unwrap()
    }

    #[test]
    fn pentagonal() {
        assert_eq!(coeffs("J1", 8), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn e4_head() {
        assert_eq!(coeffs("E4", 3), vec![1, 240, 2160]);
    }

    #[test]
    fn zero_is_empty() {
        assert!(evaluate("zero", 5).unwrap().is_exact_zero());
    }

    #[test]
    fn rejects_unknown() {
        assert!(evaluate("K7", 5).is_err());
        assert!(evaluate("Theta(1,2)", 5).is_err());
        assert!(evaluate("[1,0,0,0,0;0]_6", 5).is_err());
    }
}

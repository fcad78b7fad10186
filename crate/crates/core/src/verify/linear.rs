//! Linear forms in class counts and chains of relations between them.
//!
//! Grammar: a chain is `form (rel form)+` where `rel` is `=`, `>=` or `>=_k`,
//! and a form is a signed sum of `cX` terms with `X` one of `N0..N10`,
//! `M0..M10` or `P`. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `N(i, 11, 11n + m)`.
    N(usize),
    /// `M(i, 11, 11n + m)`.
    M(usize),
    /// `p(11n + m) / 11`.
    P,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::N(i) => write!(f, "N{i}"),
            Var::M(i) => write!(f, "M{i}"),
            Var::P => write!(f, "P"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("class index {0} is out of range")]
    Index(usize),
    #[error("a chain needs at least two sides")]
    Lonely,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearForm {
    pub terms: Vec<(i64, Var)>,
}

/// Counts at one `n` for a fixed residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub rank: [i128; 11],
    pub crank: [i128; 11],
    pub p: i128,
}

impl LinearForm {
    /// Eleven times the value, so `P` stays integral.
    pub fn eval11(&self, c: &Counts) -> i128 {
        self.terms
            .iter()
            .map(|&(k, v)| {
                k as i128
                    * match v {
                        Var::N(i) => 11 * c.rank[i],
                        Var::M(i) => 11 * c.crank[i],
                        Var::P => c.p,
                    }
            })
            .sum()
    }

    /// Coefficient of `v`, with repeated terms merged.
    pub fn coeff(&self, v: Var) -> i64 {
        self.terms.iter().filter(|t| t.1 == v).map(|t| t.0).sum()
    }

    /// Total weight, counting `P` as one class.
    pub fn weight(&self) -> i64 {
        self.terms.iter().map(|t| t.0).sum()
    }

    pub fn minus(&self, other: &LinearForm) -> LinearForm {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|&(k, v)| (-k, v)));
        LinearForm { terms }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(k, v)) in self.terms.iter().enumerate() {
            let sign = if k < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = k.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{v}")?;
            } else {
                write!(f, "{sign}{mag}{v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    /// `>=` for every `n >= from`.
    Ge { from: usize },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Eq => write!(f, "="),
            Relation::Ge { from: 0 } => write!(f, ">="),
            Relation::Ge { from } => write!(f, ">=_{from}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub sides: Vec<LinearForm>,
    pub links: Vec<Relation>,
}

impl Chain {
    /// The pair `(left, rel, right)` of link `i`.
    pub fn link(&self, i: usize) -> (&LinearForm, Relation, &LinearForm) {
        (&self.sides[i], self.links[i], &self.sides[i + 1])
    }

    /// First link that fails at `n`, ignoring thresholds.
    pub fn first_broken(&self, c: &Counts) -> Option<(usize, i128, i128)> {
        (0..self.links.len()).find_map(|i| {
            let (l, rel, r) = self.link(i);
            let (a, b) = (l.eval11(c), r.eval11(c));
            let ok = match rel {
                Relation::Eq => a == b,
                Relation::Ge { .. } => a >= b,
            };
            (!ok).then_some((i, a, b))
        })
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sides[0])?;
        for (rel, side) in self.links.iter().zip(&self.sides[1..]) {
            write!(f, "{rel}{side}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        (self.i > start).then(|| {
            std::str::from_utf8(&self.s[start..self.i])
                .expect("ascii digits")
                .parse()
                .expect("digits")
        })
    }

    fn err(&self) -> ParseError {
        match self.peek() {
            Some(c) => ParseError::Unexpected(c as char, self.i),
            None => ParseError::Eof,
        }
    }

    fn form(&mut self) -> Result<LinearForm, ParseError> {
        let mut terms = Vec::new();
        loop {
            let sign = match self.peek() {
                Some(b'-') => {
                    self.i += 1;
                    -1
                }
                Some(b'+') if !terms.is_empty() => {
                    self.i += 1;
                    1
                }
                _ if terms.is_empty() => 1,
                _ => break,
            };
            let k = self.number().unwrap_or(1) as i64;
            let var = match self.peek() {
                Some(b'P') => {
                    self.i += 1;
                    Var::P
                }
                Some(c @ (b'N' | b'M')) => {
                    self.i += 1;
                    let idx = self.number().ok_or_else(|| self.err())?;
                    if idx > 10 {
                        return Err(ParseError::Index(idx));
                    }
                    if c == b'N' {
                        Var::N(idx)
                    } else {
                        Var::M(idx)
                    }
                }
                _ => return Err(self.err()),
            };
            terms.push((sign * k, var));
        }
        Ok(LinearForm { terms })
    }

    fn relation(&mut self) -> Result<Option<Relation>, ParseError> {
        match self.peek() {
            None => Ok(None),
            Some(b'=') => {
                self.i += 1;
                Ok(Some(Relation::Eq))
            }
            Some(b'>') if self.s.get(self.i + 1) == Some(&b'=') => {
                self.i += 2;
                if self.peek() == Some(b'_') {
                    self.i += 1;
                    let from = self.number().ok_or_else(|| self.err())?;
                    Ok(Some(Relation::Ge { from }))
                } else {
                    Ok(Some(Relation::Ge { from: 0 }))
                }
            }
            Some(_) => Err(self.err()),
        }
    }
}

impl FromStr for Chain {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cur = Cursor {
            s: compact.as_bytes(),
            i: 0,
        };
        let mut sides = vec![cur.form()?];
        let mut links = Vec::new();
        while let Some(rel) = cur.relation()? {
            links.push(rel);
            sides.push(cur.form()?);
        }
        if links.is_empty() {
            return Err(ParseError::Lonely);
        }
        Ok(Chain { sides, links })
    }
}

impl FromStr for LinearForm {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cur = Cursor {
            s: compact.as_bytes(),
            i: 0,
        };
        let f = cur.form()?;
        match cur.peek() {
            None => Ok(f),
            Some(_) => Err(cur.err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_inequality() {
        let c: Chain = "N0+2N1+M1>=2N2+N4+M0".parse().unwrap();
        assert_eq!(c.links, vec![Relation::Ge { from: 0 }]);
        assert_eq!(c.sides[0].coeff(Var::N(1)), 2);
        assert_eq!(c.sides[1].coeff(Var::M(0)), 1);
        assert_eq!(c.to_string(), "N0+2N1+M1>=2N2+N4+M0");
    }

    #[test]
    fn parses_thresholds_and_equalities() {
        let c: Chain = "N0>=_3N1>=N2>=P".parse().unwrap();
        assert_eq!(c.links[0], Relation::Ge { from: 3 });
        assert_eq!(c.sides[3].terms, vec![(1, Var::P)]);
        let e: Chain = "M0+M1=2M2".parse().unwrap();
        assert_eq!(e.links, vec![Relation::Eq]);
    }

    #[test]
    fn rejects_garbage() {
        assert!("N0>=".parse::<Chain>().is_err());
        assert!("N0".parse::<Chain>().is_err());
        assert!("N12>=N0".parse::<Chain>().is_err());
        assert!("N0>=Q1".parse::<Chain>().is_err());
    }

    #[test]
    fn evaluates_scaled() {
        let f: LinearForm = "2N1-P".parse().unwrap();
        let mut c = Counts {
            rank: [0; 11],
            crank: [0; 11],
            p: 22,
        };
        c.rank[1] = 3;
        assert_eq!(f.eval11(&c), 66 - 22);
    }
}

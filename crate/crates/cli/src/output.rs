use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use qdissect::verify::{Status, VerifyReport};
use qdissect::LaurentSeries;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn reports(out: &mut impl Write, reports: &[VerifyReport], format: Format) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, reports)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "id", "status", "order", "n", "lhs", "rhs", "elapsed_ms", "paper_label", "note",
            ])?;
            for r in reports {
                let (n, lhs, rhs) = match &r.first_failure {
                    Some(f) => (f.n.to_string(), f.lhs.as_str(), f.rhs.as_str()),
                    None => (String::new(), "", ""),
                };
                w.write_record([
                    r.id.as_str(),
                    &r.status.to_string(),
                    &r.order.to_string(),
                    &n,
                    lhs,
                    rhs,
                    &r.elapsed_ms.to_string(),
                    &r.paper_label,
                    r.note.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in reports {
                write!(
                    out,
                    "{:<13} {:<28} order={:<4} {:>6}ms  {}",
                    r.status.to_string(),
                    r.id,
                    r.order,
                    r.elapsed_ms,
                    r.paper_label
                )?;
                if let Some(f) = &r.first_failure {
                    write!(out, "  first failure at n={}: {} vs {}", f.n, f.lhs, f.rhs)?;
                }
                if let Some(note) = &r.note {
                    write!(out, "  [{note}]")?;
                }
                writeln!(out)?;
            }
            let count = |s| reports.iter().filter(|r| r.status == s).count();
            writeln!(
                out,
                "{} checks: {} pass, {} emended-pass, {} fail",
                reports.len(),
                count(Status::Pass),
                count(Status::EmendedPass),
                count(Status::Fail)
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Term {
    exponent: i64,
    numerator: String,
    denominator: String,
}

pub fn series(out: &mut impl Write, s: &LaurentSeries, format: Format) -> Result<()> {
    let terms: Vec<Term> = if s.is_exact_zero() {
        Vec::new()
    } else {
        (s.valuation()..s.trunc())
            .map(|e| {
                let c = s.coeff(e).expect("inside the window");
                Term {
                    exponent: e,
                    numerator: c.numer().to_string(),
                    denominator: c.denom().to_string(),
                }
            })
            .collect()
    };
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &terms)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if terms.is_empty() {
                w.write_record(["exponent", "numerator", "denominator"])?;
            }
            for t in &terms {
                w.serialize(t)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for t in &terms {
                writeln!(out, "{} {} {}", t.exponent, t.numerator, t.denominator)?;
            }
        }
    }
    Ok(())
}

/// `(n, m, count)` rows, or `(n, value)` rows when `m` is absent.
pub fn table(out: &mut impl Write, rows: &[(usize, Option<i64>, i128)], format: Format) -> Result<()> {
    let keyed = rows.first().is_some_and(|r| r.1.is_some());
    match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, m, c)| match m {
                    Some(m) => serde_json::json!({"n": n, "m": m, "count": c.to_string()}),
                    None => serde_json::json!({"n": n, "value": c.to_string()}),
                })
                .collect();
            serde_json::to_writer(&mut *out, &v)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if keyed {
                w.write_record(["n", "m", "count"])?;
            } else {
                w.write_record(["n", "value"])?;
            }
            for (n, m, c) in rows {
                match m {
                    Some(m) => w.write_record([n.to_string(), m.to_string(), c.to_string()])?,
                    None => w.write_record([n.to_string(), c.to_string()])?,
                }
            }
            w.flush()?;
        }
        Format::Text => {
            for (n, m, c) in rows {
                match m {
                    Some(m) => writeln!(out, "{n} {m} {c}")?,
                    None => writeln!(out, "{n} {c}")?,
                }
            }
        }
    }
    Ok(())
}

//! Acceptance run at the default orders: one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use qdissect::oracle::{enumerate_stats, gf_stats};
use qdissect::verify::{run_checks, select, Context, Status, VerifyConfig, VerifyReport};

struct Criterion {
    number: u32,
    title: &'static str,
    suites: &'static [&'static str],
    extra: fn(&[VerifyReport]) -> Result<(), String>,
}

fn none(_: &[VerifyReport]) -> Result<(), String> {
    Ok(())
}

fn note_of<'a>(reports: &'a [VerifyReport], id: &str) -> Result<&'a str, String> {
    reports
        .iter()
        .find(|r| r.id == id)
        .and_then(|r| r.note.as_deref())
        .ok_or_else(|| format!("{id} has no note"))
}

fn crank_exception(r: &[VerifyReport]) -> Result<(), String> {
    let note = note_of(r, "crank-exception")?;
    if note.ends_with("[2]") {
        Ok(())
    } else {
        Err(format!("crank-exception: {note}"))
    }
}

fn scans(r: &[VerifyReport]) -> Result<(), String> {
    let note = note_of(r, "conj-6.2")?;
    if !note.contains("violations at n = [2]") {
        return Err(format!("conj-6.2: {note}"));
    }
    for m in 0..=10 {
        let id = format!("conj-6.5-r{m}");
        let note = note_of(r, &id)?;
        if !note.contains("every printed threshold matches") {
            return Err(format!("{id}: {note}"));
        }
    }
    Ok(())
}

fn oracles(_: &[VerifyReport]) -> Result<(), String> {
    let e = enumerate_stats(50).map_err(|e| e.to_string())?;
    let g = gf_stats(50).map_err(|e| e.to_string())?;
    for n in 0..=50 {
        let same = e.rank_row(n).ok() == g.rank_row(n).ok()
            && e.crank_row(n).ok() == g.crank_row(n).ok()
            && e.spt(n).ok() == g.spt(n).ok();
        if !same {
            return Err(format!("oracles differ at n = {n}"));
        }
    }
    Ok(())
}

const CRITERIA: [Criterion; 9] = [
    Criterion { number: 1, title: "structural identities", suites: &["structural", "wr-all"], extra: none },
    Criterion { number: 2, title: "crank dissection", suites: &["crank-dissection"], extra: none },
    Criterion { number: 3, title: "rank dissection and Q tables", suites: &["rank-dissection", "q-tables"], extra: none },
    Criterion { number: 4, title: "classical results", suites: &["classical"], extra: none },
    Criterion { number: 5, title: "positivity", suites: &["positivity"], extra: crank_exception },
    Criterion { number: 6, title: "inequalities and certificates", suites: &["inequalities", "certificates"], extra: none },
    Criterion { number: 7, title: "congruences and spt", suites: &["congruences"], extra: none },
    Criterion { number: 8, title: "conjecture scans", suites: &["conjectures"], extra: scans },
    Criterion { number: 9, title: "oracle independence", suites: &["oracle"], extra: oracles },
];

fn main() -> ExitCode {
    let start = Instant::now();
    let ctx = Context::build(VerifyConfig::default()).expect("default context");
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut failed = 0;
    for c in &CRITERIA {
        let mut specs = Vec::new();
        for s in c.suites {
            specs.extend(select(s).expect("known suite"));
        }
        let reports = match run_checks(&specs, &ctx, jobs) {
            Ok(r) => r,
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {} (error: {e})", c.number, c.title);
                continue;
            }
        };
        let fails: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.as_str()).collect();
        let emended: Vec<_> = reports
            .iter()
            .filter(|r| r.status == Status::EmendedPass)
            .map(|r| r.id.as_str())
            .collect();
        let extra = (c.extra)(&reports);
        if fails.is_empty() && extra.is_ok() {
            print!("criterion {}: PASS {} ({} checks", c.number, c.title, reports.len());
            if !emended.is_empty() {
                print!(", emended: {}", emended.join(" "));
            }
            println!(")");
        } else {
            failed += 1;
            print!("criterion {}: FAIL {}", c.number, c.title);
            if !fails.is_empty() {
                print!(" failing: {}", fails.join(" "));
            }
            if let Err(e) = extra {
                print!(" ({e})");
            }
            println!();
        }
    }
    println!("{} of 9 criteria pass in {:.1}s", 9 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

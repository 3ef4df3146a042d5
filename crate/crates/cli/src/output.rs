//! Rendering of classification reports.
//!
//! CSV columns, in order: `n, factorization, cyclic, abelian, nilpotent,
//! supersolvable, ordered_sylow, abelian_count, diagnoses`. Booleans are
//! `true`/`false`, a missing count is empty, and diagnoses are separated by
//! single spaces.

use std::fmt::Write;

use pnum_core::classify::ClassificationReport;
use pnum_core::Property;

use crate::args::Format;

pub const CSV_HEADER: &str =
    "n,factorization,cyclic,abelian,nilpotent,supersolvable,ordered_sylow,abelian_count,diagnoses";

pub fn render(reports: &[ClassificationReport], format: Format) -> String {
    match format {
        Format::Table => table(reports),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => csv(reports),
    }
}

fn diagnoses(r: &ClassificationReport) -> String {
    r.diagnoses.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn csv(reports: &[ClassificationReport]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in reports {
        let verdicts: Vec<String> = Property::ALL.iter().map(|&p| r.verdict(p).to_string()).collect();
        let count = r.abelian_count.map(|c| c.to_string()).unwrap_or_default();
        writeln!(out, "{},{},{},{},{}", r.n, r.factorization, verdicts.join(","), count, diagnoses(r)).unwrap();
    }
    out
}

fn table(reports: &[ClassificationReport]) -> String {
    let fact_width =
        reports.iter().map(|r| r.factorization.to_string().len()).chain(["factorization".len()]).max().unwrap_or(0);
    let n_width = reports.iter().map(|r| r.n.to_string().len()).chain([1]).max().unwrap_or(1);
    let mut out = format!("{:>n_width$}  {:<fact_width$}", "n", "factorization");
    for p in Property::ALL {
        write!(out, "  {}", p.as_str()).unwrap();
    }
    out.push_str("  groups  diagnoses\n");
    for r in reports {
        write!(out, "{:>n_width$}  {:<fact_width$}", r.n, r.factorization.to_string()).unwrap();
        for p in Property::ALL {
            let mark = if r.verdict(p) { "T" } else { "F" };
            write!(out, "  {mark:<width$}", width = p.as_str().len()).unwrap();
        }
        let count = r.abelian_count.map_or("-".to_string(), |c| c.to_string());
        let diag = if r.diagnoses.is_empty() { "-".to_string() } else { diagnoses(r) };
        writeln!(out, "  {count:<6}  {diag}").unwrap();
    }
    out
}

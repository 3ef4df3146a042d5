//! Newline-delimited JSON cache of classification reports, one per line.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::Path;

use pnum_core::classify::ClassificationReport;

use crate::Failure;

pub fn load(path: &Path) -> Result<BTreeMap<u64, ClassificationReport>, Failure> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
        Err(e) => return Err(Failure::usage(format!("cannot read cache {}: {e}", path.display()))),
    };
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let report: ClassificationReport = serde_json::from_str(line)
            .map_err(|e| Failure::usage(format!("cache {} line {}: {e}", path.display(), i + 1)))?;
        out.insert(report.n, report);
    }
    Ok(out)
}

pub fn append(path: &Path, reports: &[ClassificationReport]) -> Result<(), Failure> {
    if reports.is_empty() {
        return Ok(());
    }
    let io = |e: std::io::Error| Failure::usage(format!("cannot write cache {}: {e}", path.display()));
    let mut file = OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
    let mut buf = String::new();
    for r in reports {
        buf.push_str(&serde_json::to_string(r).expect("reports serialize"));
        buf.push('\n');
    }
    file.write_all(buf.as_bytes()).map_err(io)
}

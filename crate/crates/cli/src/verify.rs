//! The `verify` command: run named check suites and summarize pass/fail.

use crate::formats::to_json_bytes;
use crate::report::SuiteJson;
use bblab_core::suites::{run_suite, SuiteReport, SUITE_NAMES};
use std::io::Write;

pub fn run_verify(suite: &str, seed: u64, format: &str, w: &mut dyn Write) -> Result<i32, String> {
    let names: Vec<&str> =
        if suite == "all" { SUITE_NAMES.to_vec() } else { vec![suite] };
    let mut results = Vec::with_capacity(names.len());
    for name in names {
        results.push(run_suite(name, seed).map_err(|e| e.to_string())?);
    }
    let all_passed = results.iter().all(SuiteReport::passed);
    if format == "json" {
        let mirrored: Vec<SuiteJson> = results.iter().map(SuiteJson::from).collect();
        let text = if mirrored.len() == 1 {
            to_json_bytes(&mirrored[0])
        } else {
            to_json_bytes(&mirrored)
        };
        write!(w, "{text}").map_err(|e| e.to_string())?;
    } else {
        for rep in &results {
            print_text(rep, w).map_err(|e| e.to_string())?;
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn print_text(rep: &SuiteReport, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "suite {} (seed {}): {} reports", rep.suite, rep.seed, rep.reports.len())?;
    for r in &rep.reports {
        if r.passed() {
            writeln!(w, "  pass  {} ({} checks)", r.name, r.checks.len())?;
        } else {
            let first = r
                .checks
                .iter()
                .find(|c| c.verdict == bblab_core::bounds::Verdict::Fail)
                .expect("failing report has a failing check");
            writeln!(
                w,
                "  FAIL  {} at {:?}: {} vs {}",
                r.name, first.label, first.left, first.right
            )?;
        }
    }
    for note in &rep.notes {
        writeln!(w, "  note: {note}")?;
    }
    let passed = rep.reports.iter().filter(|r| r.passed()).count();
    let status = if passed == rep.reports.len() { "PASS" } else { "FAIL" };
    writeln!(w, "suite {}: {status} ({passed}/{} reports)", rep.suite, rep.reports.len())
}

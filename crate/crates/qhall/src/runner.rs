//! Timed check execution, with the suite spread over a thread pool.

use std::time::Instant;

use rayon::prelude::*;

use qhall_core::closedform::BuildOptions;
use qhall_core::verify::{plan, run_check, CheckReport, CheckSpec, SuiteConfig};

/// Runs one check and records its wall-clock time. Errors become failing
/// reports.
pub fn timed(spec: &CheckSpec, opts: &BuildOptions) -> CheckReport {
    let start = Instant::now();
    let mut r = run_check(spec, opts).unwrap_or_else(|e| CheckReport::error(spec, &e));
    r.elapsed = Some(start.elapsed());
    r
}

/// Runs every planned check in parallel. Reports come back in plan order
/// whatever the scheduling.
pub fn run_suite_parallel(config: &SuiteConfig) -> Vec<CheckReport> {
    plan(config).par_iter().map(|s| timed(s, &config.options)).collect()
}

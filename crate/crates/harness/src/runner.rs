//! Check execution.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use littlewood::report::IdentityReport;
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::{HarnessError, HarnessResult};
use crate::params::Params;
use crate::registry::{find_check, list_checks, CheckSpec};

struct Prepared {
    spec: CheckSpec,
    params: Params,
    tolerance: f64,
}

fn prepare(spec: CheckSpec, overrides: &BTreeMap<String, String>) -> HarnessResult<Prepared> {
    let invalid = |msg: String| HarnessError::InvalidOverride {
        check: spec.name.to_string(),
        msg,
    };
    let mut params = Params::from_defaults(spec.params);
    let mut tolerance = spec.tolerance;
    for (k, v) in overrides {
        if k == "tol" {
            tolerance = v
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|t| *t > 0.0 && t.is_finite())
                .ok_or_else(|| invalid(format!("`{v}` is not a positive tolerance")))?;
        } else {
            params.set(k, v).map_err(invalid)?;
        }
    }
    Ok(Prepared {
        spec,
        params,
        tolerance,
    })
}

fn panic_text(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        s.to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic".to_string()
    }
}

fn execute(job: &Prepared) -> IdentityReport {
    let name = job.spec.name;
    let map = job.params.as_map().clone();
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(|| {
        (job.spec.run)(&job.params, job.tolerance)
    }));
    let report = match result {
        Ok(Ok(out)) => IdentityReport::new(
            name,
            map,
            out.lhs,
            out.rhs,
            job.tolerance,
            out.notes.join("; "),
        ),
        Ok(Err(e)) => IdentityReport::failure(name, map, job.tolerance, format!("error: {e}")),
        Err(p) => IdentityReport::failure(
            name,
            map,
            job.tolerance,
            format!("panic: {}", panic_text(p)),
        ),
    };
    report.with_wall_time(start.elapsed().as_secs_f64())
}

/// Runs one check with parameter overrides (`tol` overrides the tolerance).
pub fn run_check(
    name: &str,
    overrides: &BTreeMap<String, String>,
) -> HarnessResult<IdentityReport> {
    let spec = find_check(name).ok_or_else(|| HarnessError::UnknownCheck(name.to_string()))?;
    Ok(execute(&prepare(spec, overrides)?))
}

/// Runs every check whose name matches the glob `filter`, in name order.
pub fn run_all(filter: &str, parallel: bool) -> HarnessResult<Vec<IdentityReport>> {
    run_all_with(&RunConfig {
        filter: filter.to_string(),
        parallel,
        ..RunConfig::default()
    })
}

/// Runs the checks selected by a configuration.
pub fn run_all_with(config: &RunConfig) -> HarnessResult<Vec<IdentityReport>> {
    let pattern = glob::Pattern::new(&config.filter)?;
    for check in config.overrides.keys() {
        if find_check(check).is_none() {
            return Err(HarnessError::UnknownCheck(check.clone()));
        }
    }
    let empty = BTreeMap::new();
    let jobs = list_checks()
        .into_iter()
        .filter(|c| pattern.matches(c.name))
        .map(|c| prepare(c, config.overrides.get(c.name).unwrap_or(&empty)))
        .collect::<HarnessResult<Vec<_>>>()?;
    let mut reports: Vec<IdentityReport> = if config.parallel {
        jobs.par_iter().map(execute).collect()
    } else {
        jobs.iter().map(execute).collect()
    };
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

//! Check registry, runner and report emission for the identity catalog.

mod checks;
pub mod config;
pub mod error;
pub mod params;
pub mod registry;
pub mod report;
pub mod runner;

pub use config::RunConfig;
pub use error::{HarnessError, HarnessResult};
pub use littlewood::report::IdentityReport;
pub use params::{ParamDefault, ParamKind, Params};
pub use registry::{list_checks, CheckSpec, Route, IN_SCOPE};
pub use report::{emit_report, render_report, ReportFormat};
pub use runner::{run_all, run_all_with, run_check};

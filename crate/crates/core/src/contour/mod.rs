//! Branch-tracked contour integrals of `ln f * g` and the Littlewood identity.

mod branch;
mod integral;
mod region;
mod verify;

pub use branch::{principal_log, track_log, BranchPath};
pub use integral::{
    contour_lhs, contour_lhs_tol, contour_lhs_with, edge_branches, residue_fg, rhs_total,
    ContourValue, EdgeBranches,
};
pub use region::{Path, PoleSpecG, RectRegion};
pub use verify::{horizontal_log, records_in_rect, verify_theorem};

//! Workspace files, suite reports and the parallel runner behind the
//! `smlab` command line.

pub mod cli;
pub mod report;
pub mod runner;
pub mod workspace;

pub use workspace::{Decl, Materialized, Object, WorkspaceError, WorkspaceSpec};

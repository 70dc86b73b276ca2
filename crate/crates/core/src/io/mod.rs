//! Reading and writing workspaces, and Graphviz export.

pub mod dot;
mod workspace;

pub use workspace::{IoError, Kind, LoadOptions, StoredProduction, Workspace};

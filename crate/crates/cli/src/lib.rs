//! The `rbgf` command line: expression evaluation, number tables, λ-EGF
//! operations and identity checks.

mod app;
pub mod expr;
mod table;

pub use app::{run, Cli};

//! Problem files, built-in problems and command dispatch for the `setvec` binary.

pub mod builtins;
pub mod problem;
pub mod run;

pub use builtins::{builtin, BUILTIN_NAMES};
pub use problem::{emit_problem, expand_family, format_param, parse_problem, Problem};
pub use run::{apply_overrides, run, Against, Command, Emit, Overrides, RunOptions};

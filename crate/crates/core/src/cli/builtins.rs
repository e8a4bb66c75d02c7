//! Problems shipped with the binary.

use crate::error::{Error, Result};

use super::problem::{parse_problem, Problem};

pub const BUILTIN_NAMES: [&str; 4] = [
    "paper-disks",
    "paper-disks-wtable",
    "paper-counterexample",
    "paper-nonconvex",
];

fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "paper-disks" => include_str!("../../problems/paper-disks.json"),
        "paper-disks-wtable" => include_str!("../../problems/paper-disks-wtable.json"),
        "paper-counterexample" => include_str!("../../problems/paper-counterexample.json"),
        "paper-nonconvex" => include_str!("../../problems/paper-nonconvex.json"),
        _ => return None,
    })
}

pub fn builtin(name: &str) -> Result<Problem> {
    let text = source(name).ok_or_else(|| {
        Error::parse(
            "--builtin",
            format!("unknown problem `{name}`; known: {}", BUILTIN_NAMES.join(", ")),
        )
    })?;
    parse_problem(text)
}

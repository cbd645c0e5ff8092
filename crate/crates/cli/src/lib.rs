//! Experiment harness over `delseq-core`: every subcommand builds a
//! [`table::Table`] that renders as CSV or JSON.

pub mod commands;
pub mod table;
pub mod verify;

use delseq_core::Error;

/// Process exit code for a library error: 3 when the enumeration cap was
/// hit, 2 for anything else the caller got wrong.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeCap { .. } => 3,
        Error::Domain(_) | Error::Parse(_) => 2,
    }
}

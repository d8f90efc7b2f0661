//! Named, seeded checks for the `detideal` library, each producing a
//! report of expected and actual values.

pub mod backend;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod report;

pub use catalog::{run_check, run_many, CheckSpec, FieldChoice, CATALOG};
pub use error::{Result, VerifyError};
pub use report::{emit_report, Format, Report};

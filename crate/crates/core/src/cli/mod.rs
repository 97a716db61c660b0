//! File format, reports and command dispatch for the `lieb` binary.

pub mod commands;
pub mod dispatch;
pub mod document;
pub mod report;
pub mod writer;

pub use dispatch::{construct, default_checks, run_check};
pub use document::{parse_document, CheckDirective, Document, Item};
pub use writer::write_document;

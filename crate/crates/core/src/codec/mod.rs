//! Text formats: `.spoly` polyhedra, `.tri3` triangulations and JSON reports.

pub mod json;
pub mod spoly;
pub mod tri3;

pub use json::{emit_report_json, ReportJson};
pub use spoly::{emit_spoly, parse_spoly, ParseError, ParseErrorCode};
pub use tri3::{emit_tri3, parse_tri3};

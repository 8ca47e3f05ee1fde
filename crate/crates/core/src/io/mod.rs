//! Text formats, the embedded example catalog and report rendering.

mod catalog;
mod parse;
mod report;

pub use catalog::{catalog, catalog_entry, catalog_ids, CatalogEntry, Expected};
pub use parse::{
    detect_format, parse_brace, parse_cycle_set, parse_perm, parse_solution, render_brace,
    render_cycle_set, render_solution, ParseError, ParseErrorKind,
};
pub use report::{emit_report, Format};

//! File formats, database scanning and the command-line front end for
//! [`fano_obstruct_core`].

pub mod cli;
pub mod error;
pub mod palp;
pub mod scan;

pub use error::IngestError;
pub use palp::{parse_json_vertices, parse_palp, write_palp, PolytopeRecord};
pub use scan::{
    analyze_record, scan, scan_palp, write_report, write_table, AnalysisRecord, ScanReport,
    ScanSummary,
};

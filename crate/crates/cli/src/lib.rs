//! Support code for the `hilbert` command-line tool: the algebra file format
//! and DOT export of Hasse diagrams.

pub mod dot;
pub mod format;

//! Library side of the `hypercut` command-line tool: file formats, the
//! benchmark harness, and report rendering. The binary in `main.rs` is a
//! thin argument-parsing layer over these modules.

pub mod bench;
pub mod format;
pub mod output;

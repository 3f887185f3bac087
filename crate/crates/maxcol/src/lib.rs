//! File formats, provenance sidecars and the command-line front end for
//! `maxcol-core`.

pub mod cli;
pub mod formats;
pub mod prov;
pub mod report;

pub use cli::{run, write_atomic};
pub use formats::{
    parse_dimacs, parse_wff, parse_witness, write_dimacs, write_dot, write_wff, write_witness, ParseError,
};

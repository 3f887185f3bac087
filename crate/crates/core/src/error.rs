use alloc::string::String;
use core::fmt;

use crate::forest::VertexId;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidArgument(String),
    /// Adding the edge would close a cycle.
    Cycle {
        u: VertexId,
        v: VertexId,
    },
    /// A coloring that should encode a solution does not.
    MalformedColoring(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Cycle { u, v } => write!(f, "edge {{{u}, {v}}} would create a cycle"),
            Error::MalformedColoring(msg) => write!(f, "malformed coloring: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

use std::path::PathBuf;

use thiserror::Error;

use crate::poly::ChordId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed token `{token}` at byte {offset}")]
    MalformedToken { token: String, offset: usize },
    #[error("chord {0} appears twice with the same role")]
    DuplicateRole(ChordId),
    #[error("over and under occurrences of chord {0} carry different signs")]
    SignMismatch(ChordId),
    #[error("chord {0} has only one endpoint")]
    DanglingChord(ChordId),
    #[error("{0} circles; only knots and 2-component links are supported")]
    TooManyCircles(usize),
    #[error("no chord {0} in this diagram")]
    UnknownChord(ChordId),
    #[error("smoothing leaves {0} components, expected 1")]
    NotOneComponent(usize),
    #[error("no such configuration: {0}")]
    NoSuchConfiguration(String),
    #[error("invalid site: {0}")]
    InvalidSite(String),
    #[error("arrow diagram has {arrow} circles but Gauss diagram has {gauss}")]
    CircleCountMismatch { arrow: usize, gauss: usize },
    #[error("base-point moves are only supported on one-circle diagrams")]
    BasePointOnLink,
    #[error("malformed arrow diagram: {0}")]
    MalformedArrowDiagram(String),
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("line {line}: invalid Gauss code: {source}")]
    InvalidCode {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

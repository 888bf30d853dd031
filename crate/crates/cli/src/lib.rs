//! Library side of the `adjalg` command-line tool.
//!
//! Every command renders to a `String` so the binary only has to print it
//! and translate errors into exit codes.

pub mod commands;
pub mod report;
pub mod spec;

use std::fmt;

use adjalg::graph::parse_edge_list;
use adjalg::Graph;

/// Process exit status for each failure class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Malformed,
    Precondition,
    Internal,
}

impl ErrorKind {
    pub fn exit_code(self) -> u8 {
        match self {
            Self::Usage => 1,
            Self::Malformed => 2,
            Self::Precondition => 3,
            Self::Internal => 4,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<adjalg::Error> for CliError {
    fn from(e: adjalg::Error) -> Self {
        use adjalg::Error as E;
        let kind = match &e {
            E::Parse { .. }
            | E::SelfLoop(_)
            | E::VertexOutOfRange { .. }
            | E::InvalidConnectionSet(_) => ErrorKind::Malformed,
            E::Disconnected { .. } | E::NotRegular | E::NotQuotientPolynomial => {
                ErrorKind::Precondition
            }
            _ => ErrorKind::Internal,
        };
        Self::new(kind, e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub const GEN_PREFIX: &str = "gen:";

/// Loads a graph from an edge-list path or a `gen:` spec.
pub fn load_graph(arg: &str) -> CliResult<Graph> {
    if let Some(text) = arg.strip_prefix(GEN_PREFIX) {
        let spec = spec::parse_spec(text).map_err(|m| CliError::new(ErrorKind::Malformed, m))?;
        return spec.build().map_err(|m| CliError::new(ErrorKind::Malformed, m));
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| CliError::new(ErrorKind::Malformed, format!("cannot read {arg}: {e}")))?;
    parse_edge_list(&text).map_err(|e| CliError::new(ErrorKind::Malformed, format!("{arg}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_generators_and_files() {
        assert_eq!(load_graph("gen:cycle(5)").unwrap().n(), 5);
        let dir = std::env::temp_dir().join(format!("adjalg-load-{}", std::process::id()));
        std::fs::write(&dir, "3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(load_graph(dir.to_str().unwrap()).unwrap().edge_count(), 2);
        std::fs::remove_file(&dir).unwrap();
    }

    #[test]
    fn classifies_failures() {
        assert_eq!(load_graph("gen:cycle(2)").unwrap_err().kind, ErrorKind::Malformed);
        assert_eq!(load_graph("/no/such/file").unwrap_err().kind, ErrorKind::Malformed);
        let e: CliError = adjalg::Error::NotRegular.into();
        assert_eq!(e.kind.exit_code(), 3);
    }
}

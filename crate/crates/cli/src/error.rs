use thiserror::Error;

/// Input-side failures. Every variant maps to exit code 2; verification
/// failures are report outcomes and map to exit code 1 instead.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("computing {op}: {source}")]
    Engine {
        op: String,
        source: prochern::Error,
    },
    #[error("unknown scenario `{0}`: not a file and not a catalog entry")]
    UnknownScenario(String),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
}

impl CliError {
    pub fn engine(op: &str, source: prochern::Error) -> Self {
        Self::Engine {
            op: op.to_string(),
            source,
        }
    }
}

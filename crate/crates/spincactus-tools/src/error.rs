use thiserror::Error;

/// Errors reported by the front end. All of them map to exit status 2.
#[derive(Debug, Error)]
pub enum ToolError {
    /// The engine rejected an input or an operation.
    #[error(transparent)]
    Engine(#[from] spincactus::Error),
    /// The input is not valid JSON or does not match the expected schema.
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    /// An input file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        /// The path as given on the command line.
        path: String,
        /// The underlying failure.
        source: std::io::Error,
    },
    /// Writing to standard output failed.
    #[error("cannot write output: {0}")]
    Output(std::io::Error),
    /// Flags or inputs are well-formed JSON but inconsistent with the command.
    #[error("{0}")]
    Usage(String),
}

/// Result alias for the front end.
pub type ToolResult<T> = Result<T, ToolError>;

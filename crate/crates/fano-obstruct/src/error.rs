use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: not a 3-polytope (neither matrix dimension is 3)")]
    NotThreeDimensional { line: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

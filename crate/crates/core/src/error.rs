use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {0} is below -1")]
    IndexOutOfRange(i64),
    #[error("element has degree {degree}, expected at most {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
    #[error("symmetric element is not homogeneous of degree {0}")]
    Inhomogeneous(usize),
    #[error("Omega^({m})_({k},{s}) is outside the admissible range")]
    OmegaRange { m: i64, k: i64, s: i64 },
    #[error("coefficients involve {0}, which clashes with the representation parameter")]
    IndeterminateClash(&'static str),
    #[error("subspaces live in different slices")]
    SliceMismatch,
    #[error("element is not contained in slice {0}")]
    NotInSlice(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
}

use thiserror::Error;

use crate::algebra::RingTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingTag, right: RingTag },
    #[error("division by a zero quaternion")]
    ZeroDivisor,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not orthogonal (residual {residual:e} > {tol:e})")]
    NotOrthogonal { residual: f64, tol: f64 },
    #[error("Gram-Schmidt hit a degenerate column after {attempts} attempts")]
    DegenerateSample { attempts: usize },
    #[error("point lies outside the Cayley domain of the center")]
    OutsideDomain,
    #[error("matrix is not skew-hermitian (residual {0:e})")]
    NotSkew(f64),
    #[error("point is not critical (gradient norm {0:e})")]
    NotCritical(f64),
    #[error("vector is not tangent (residual {0:e})")]
    NotTangent(f64),
    #[error("vector is not in the critical model space (residual {0:e})")]
    NotInModelSpace(f64),
    #[error("point does not belong to {0}")]
    SpaceMismatch(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("eigenvalue computation did not converge")]
    NoConvergence,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown space `{0}`")]
    UnknownSpace(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line tool.
    ///
    /// `1` for unreadable input, `2` for Cayley-domain failures, `3` for
    /// violated preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::UnknownSpace(_) | Error::Io(_) => 1,
            Error::OutsideDomain | Error::Singular | Error::ZeroDivisor => 2,
            _ => 3,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

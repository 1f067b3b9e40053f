use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension {0} outside 1..9")]
    InvalidDim(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("basis index {index} outside 1..{dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("grade {grade} outside 0..{dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("expected a homogeneous grade-1 element")]
    NotGradeOne,
    #[error("expected a single basis monomial")]
    NotMonomial,
    #[error("empty argument list")]
    EmptyArguments,
    #[error("form is not antisymmetric at ({0},{1})")]
    NotAntisymmetric(usize, usize),
    #[error("form shape {rows}x{cols} does not match dimension {dim}")]
    FormShape { rows: usize, cols: usize, dim: usize },
    #[error("signature ({p},{q},{r}) does not sum to dimension {dim}")]
    BadSignature { p: usize, q: usize, r: usize, dim: usize },
    #[error("signature ({0},{1}) outside 1 <= p+q <= 9")]
    SignatureOutOfRange(usize, usize),
    #[error("matrix shape mismatch: {0}x{1} vs {2}x{3}")]
    MatrixShape(usize, usize, usize, usize),
    #[error("matrices use different forms")]
    FormMismatch,
    #[error("linear solve failed while extracting representation coefficients")]
    SolveFailed,
    #[error("invalid Fano triple set: {0}")]
    InvalidTriples(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

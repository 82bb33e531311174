use thiserror::Error;

/// Errors raised by the exact pipeline and the numeric oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("expected a polynomial of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("polynomial is reducible over the rationals (factor {factor})")]
    ReduciblePolynomial { factor: String },
    #[error("polynomial has repeated roots (discriminant is zero)")]
    RepeatedRoots,
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("roots are too close to separate (|a_i - a_j| = {separation})")]
    DegenerateRoots { separation: String },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("no Tschirnhaus transform gave a resolvent with a simple rational root test")]
    Inconclusive,
}

pub type Result<T> = std::result::Result<T, Error>;

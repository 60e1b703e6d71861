use thiserror::Error;

/// Errors raised by the exact-arithmetic and pairing operations.
///
/// Every failure mode is a typed variant; the library never panics on
/// mathematically meaningful input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("{0} is not an odd prime")]
    BadPrime(String),
    #[error("Gram matrix is singular")]
    SingularGram,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not invertible modulo the given modulus")]
    NotInvertible,
    #[error("vectors live in different dimensions")]
    DimensionMismatch,
    #[error("invalid topological type: {0}")]
    InvalidType(String),
    #[error("theta characteristic induces the complex semi-orientation")]
    ComplexSemiOrientation,
    #[error("vector is not a real theta characteristic for this type")]
    NotRealTheta,
    #[error("lower block of the vector is zero")]
    ZeroLowerBlock,
    #[error("lower bound only applies when g <= s + a + 1")]
    OutOfRegime,
    #[error("{0} is not a root of the curve polynomial")]
    NotARoot(String),
    #[error("the two roots must be distinct")]
    EqualRoots,
    #[error("classes intersect in an odd number of Weierstrass indices")]
    OddIntersection,
    #[error("classes belong to different curve models")]
    ModelMismatch,
    #[error("curve has an irrational real 2-torsion point")]
    IrrationalRealRoot,
    #[error("divisor support meets the zeros or poles of the function")]
    SupportCollision,
    #[error("numerator and denominator degrees differ")]
    DegreeMismatch,
    #[error("the two functions share support")]
    SharedSupport,
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("root index {0} out of range")]
    BadIndex(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("expected a form of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("form has degree {0}, which is too low for this operation")]
    DegreeTooLow(usize),
    #[error("coefficient vector has length {found}, expected {expected}")]
    CoefficientCount { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("the curve is singular")]
    SingularCurve,
    #[error("the conic is singular")]
    SingularConic,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("the point at infinity is not allowed here")]
    PointAtInfinity,
    #[error("a coordinate of the point is zero")]
    CoordinateZero,
    #[error("point is not a flex of the cubic")]
    NotAFlex,
    #[error("Weierstrass pair is not integral")]
    NotIntegral,
    #[error("Weierstrass pair is not minimal")]
    NotMinimal,
    #[error("matrix is not a determinantal representation of the form")]
    NotARepresentation,
    #[error("torsion computation inconclusive: {0}")]
    Inconclusive(String),
    #[error("no matching point within the search bound")]
    NotFound,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("census box has {size} forms, exceeding the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

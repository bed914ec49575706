use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational `{0}`")]
    Scalar(String),
    #[error("malformed polynomial term `{0}`")]
    Term(String),
    #[error("unknown variable `{0}`")]
    Variable(String),
    #[error("malformed algebra spec: {0}")]
    Spec(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("polynomial is not a cocycle: its differential is {0}")]
    NotACocycle(String),
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("degree {degree} lies outside the computed range 0..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },
    #[error("change of variables is singular")]
    SingularChange,
    #[error("variable count mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("internal degree bound {bound} cannot certify resolution step {step}")]
    BoundTooSmall { step: usize, bound: u32 },
    #[error("could not lift the resolution differential at level {level}, degree {degree}")]
    LiftObstruction { level: usize, degree: i32 },
    #[error("free resolution did not terminate within {steps} steps")]
    NotTerminated { steps: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

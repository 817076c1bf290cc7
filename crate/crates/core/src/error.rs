use thiserror::Error;

/// Every failure the library can report.
///
/// The variants are grouped by the process exit code the CLI maps them to
/// (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("slice-preserving argument required for `{0}`")]
    SlicePreservingRequired(String),

    #[error("quaternion {0} is real; its imaginary unit is not determined")]
    RealInput(String),
    #[error("point {0} lies outside the domain")]
    OutsideDomain(String),
    #[error("domain is not basic: {0}")]
    NotBasic(String),
    #[error("zero of the function within tolerance of the region boundary near {0}")]
    BoundaryZero(String),

    #[error("value {value} lies outside the domain of branch {branch}")]
    BranchDomainViolation { branch: String, value: String },
    #[error("the imaginary unit function is undefined on the real axis")]
    UnitFnOnRealAxis,
    #[error("condition failed: {0}")]
    ConditionFailed(String),
    #[error("function vanishes on the domain (min |g| = {0:e})")]
    Vanishing(f64),
    #[error("branch point hit: {0}")]
    BranchPointHit(String),
    #[error("no global logarithm witness: {0}")]
    NoGlobalLogWitness(String),
    #[error("invalid branch specification: {0}")]
    InvalidBranch(String),

    #[error("path continuation failed: {0}")]
    LiftStep(String),
    #[error("series did not converge within {0} terms")]
    NoConvergence(usize),
    #[error("factoring left a residual spike: {0}")]
    FactorResidual(String),
    #[error("zero multiplicity above cap at {0}")]
    MultiplicityCap(String),

    #[error("residual {residual:e} exceeds bound {bound:e}")]
    Residual { residual: f64, bound: f64 },

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } | Error::SlicePreservingRequired(_) => 2,
            Error::RealInput(_)
            | Error::OutsideDomain(_)
            | Error::NotBasic(_)
            | Error::BoundaryZero(_) => 3,
            Error::BranchDomainViolation { .. }
            | Error::UnitFnOnRealAxis
            | Error::ConditionFailed(_)
            | Error::Vanishing(_)
            | Error::BranchPointHit(_)
            | Error::NoGlobalLogWitness(_)
            | Error::InvalidBranch(_) => 4,
            Error::LiftStep(_)
            | Error::NoConvergence(_)
            | Error::FactorResidual(_)
            | Error::MultiplicityCap(_) => 5,
            Error::Residual { .. } => 6,
            Error::Io(_) => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

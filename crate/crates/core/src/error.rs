use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Modulus is not an odd prime in the supported range.
    InvalidModulus(u64),
    /// Operands belong to rings with different variable counts or fields.
    SignatureMismatch { expected: usize, found: usize },
    /// Leading term requested for the zero polynomial.
    ZeroPolynomial,
    /// A graded-mode construction received inhomogeneous input.
    NotHomogeneous(String),
    /// The defining ideal is the unit ideal.
    TrivialRing,
    /// Local-mode ring whose defining ideal is not contained in the origin's ideal.
    NotThroughOrigin,
    /// Operation only available in the other ring mode.
    WrongMode { operation: &'static str, required: &'static str },
    /// Standing hypothesis violated: the maximal ideal consists of zerodivisors.
    DepthZero,
    /// Dao numbers and reductions need a proper nonzero ideal.
    DegenerateIdeal(&'static str),
    /// The ideal is not contained in the maximal ideal.
    NotInMaximalIdeal,
    /// The ideal is not a reduction of the maximal ideal.
    NotAReduction,
    /// The ideal contains no non-zerodivisor.
    NoRegularElement,
    /// A randomized search ran out of attempts.
    RetriesExhausted { attempts: u32 },
    /// A computation hit its configured cap before a certified answer.
    CapExhausted { cap: u32 },
    /// Two independent computations disagree; indicates an implementation fault.
    Inconsistent(String),
    /// Bad argument (empty sequence, out-of-range index, ...).
    InvalidArgument(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::InvalidModulus(p) => write!(f, "modulus {} is not an odd prime below 2^31", p),
            AlgebraError::SignatureMismatch { expected, found } => {
                write!(f, "ring signature mismatch: expected {} variables, found {}", expected, found)
            }
            AlgebraError::ZeroPolynomial => write!(f, "the zero polynomial has no leading term"),
            AlgebraError::NotHomogeneous(what) => write!(f, "{} is not homogeneous", what),
            AlgebraError::TrivialRing => write!(f, "the defining ideal is the unit ideal"),
            AlgebraError::NotThroughOrigin => {
                write!(f, "local mode requires the defining ideal to vanish at the origin")
            }
            AlgebraError::WrongMode { operation, required } => {
                write!(f, "{} requires {} mode", operation, required)
            }
            AlgebraError::DepthZero => write!(f, "depth R = 0: the maximal ideal has no non-zerodivisor"),
            AlgebraError::DegenerateIdeal(which) => write!(f, "the {} ideal is not allowed here", which),
            AlgebraError::NotInMaximalIdeal => write!(f, "ideal is not contained in the maximal ideal"),
            AlgebraError::NotAReduction => write!(f, "ideal is not a reduction of the maximal ideal"),
            AlgebraError::NoRegularElement => write!(f, "ideal contains no non-zerodivisor"),
            AlgebraError::RetriesExhausted { attempts } => {
                write!(f, "random search failed after {} attempts", attempts)
            }
            AlgebraError::CapExhausted { cap } => write!(f, "cap {} reached without a certified answer", cap),
            AlgebraError::Inconsistent(msg) => write!(f, "internal inconsistency: {}", msg),
            AlgebraError::InvalidArgument(msg) => write!(f, "invalid argument: {}", msg),
        }
    }
}

pub type Result<T> = core::result::Result<T, AlgebraError>;

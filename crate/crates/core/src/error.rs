use core::fmt;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotSquare,
    NotHermitian,
    NotPsd,
    RankExceedsD {
        rank: usize,
        d: usize,
    },
    SizeMismatch {
        expected: usize,
        got: usize,
    },
    DimensionMismatch,
    NotPrime(u64),
    WrongResidueClass {
        value: u64,
        residue: u64,
        modulus: u64,
    },
    CongruenceViolated {
        d: usize,
        k: usize,
        modulus: usize,
    },
    InconsistentDesignParameters,
    OrderMismatch {
        expected: usize,
        got: usize,
    },
    UnsupportedK(usize),
    UnsupportedDimension(usize),
    FeatureDisabled(&'static str),
    NotEquiangular,
    InvalidBattery,
    InvalidEtf,
    NoConstructionAvailable,
    NoValidRuleFound,
    DegenerateSupport,
    EmptySupport,
    NotIsotropic,
    InvalidMeasure(&'static str),
    EigenFailed,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::NotHermitian => write!(f, "matrix is not Hermitian within tolerance"),
            Error::NotPsd => write!(f, "matrix is not positive semidefinite"),
            Error::RankExceedsD { rank, d } => {
                write!(f, "numeric rank {rank} exceeds declared dimension {d}")
            }
            Error::SizeMismatch { expected, got } => {
                write!(f, "size mismatch: expected {expected}, got {got}")
            }
            Error::DimensionMismatch => write!(f, "operand dimensions do not match"),
            Error::NotPrime(q) => write!(f, "{q} is not prime"),
            Error::WrongResidueClass {
                value,
                residue,
                modulus,
            } => write!(f, "{value} is not congruent to {residue} mod {modulus}"),
            Error::CongruenceViolated { d, k, modulus } => {
                write!(f, "d = {d} is not congruent to -k = -{k} mod {modulus}")
            }
            Error::InconsistentDesignParameters => {
                write!(f, "Steiner design parameters are inconsistent")
            }
            Error::OrderMismatch { expected, got } => {
                write!(f, "Hadamard order {got} does not match r+1 = {expected}")
            }
            Error::UnsupportedK(k) => write!(f, "no construction shipped for k = {k}"),
            Error::UnsupportedDimension(k) => write!(f, "no basis battery for dimension {k}"),
            Error::FeatureDisabled(name) => {
                write!(f, "construction requires the `{name}` feature")
            }
            Error::NotEquiangular => write!(f, "vector system is not equiangular"),
            Error::InvalidBattery => write!(f, "basis battery violates its invariants"),
            Error::InvalidEtf => write!(f, "matrix is not a valid Steiner equiangular tight frame"),
            Error::NoConstructionAvailable => write!(f, "no construction covers these parameters"),
            Error::NoValidRuleFound => write!(
                f,
                "no sign rule in the candidate family produced the required spectrum"
            ),
            Error::DegenerateSupport => write!(f, "measure support does not span the space"),
            Error::EmptySupport => write!(f, "measure has no nonzero support point"),
            Error::NotIsotropic => write!(f, "measure is not isotropic within tolerance"),
            Error::InvalidMeasure(why) => write!(f, "invalid measure: {why}"),
            Error::EigenFailed => write!(f, "eigensolver did not converge"),
        }
    }
}

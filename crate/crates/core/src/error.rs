use alloc::string::String;
use core::fmt;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by zero in a cyclotomic field.
    ZeroDivisionInField,
    /// Reduction of a rational mod p with p dividing the denominator.
    NonInvertibleDenominator { p: u64 },
    /// A rational function has an unresolvable pole at the expansion point t = 1.
    PoleAtExpansionPoint { order: usize },
    /// Multiplicities are not pairwise coprime or are < 2.
    InvalidBrieskornData(String),
    /// gcd(a_i, p) > 1 for quotient data.
    NonFreeActionData { a: u64, p: u64 },
    /// p divides one of the multiplicities, so Z/p does not act freely.
    ActionNotFree { a: u64, p: u64 },
    /// No integers (rho, sigma) with a*sigma - b*rho = 1.
    InvalidSeifertPair { a: u64, b: i64 },
    /// No energy numerator e below the search bound.
    EnergyClassNotInstanton,
    /// A dimension formula produced a non-integer, signalling bad rho or energy input.
    InconsistentInvariantInputs(String),
    /// Quotient level shares a factor with the multiplicities.
    LevelNotCoprime { p: u64 },
    /// A rotation number vanishes mod p.
    NotIsolatedFixedPoint,
    /// A cotangent pole met a nonvanishing weight in the rho sum.
    SingularTerm(String),
    /// The built-in rho table has no entry for this manifold.
    RhoTableIncomplete(String),
    /// Forward-mode quotient cylinder dimension was not an integer.
    InconsistentRhoInput(String),
    /// A Lefschetz point term with a or b vanishing mod p.
    DegenerateRotationPair,
    /// A fixed sphere whose normal rotation vanishes mod p.
    SphereFixedFiberwise,
    /// A twisted term was requested without lift weights.
    LiftWeightsRequired,
    /// prove_theorem_b called outside its hypotheses.
    TheoremHypothesesViolated { p: u64 },
    /// The search space estimate exceeds the budget.
    SearchSpaceOverBudget { estimate: u128, budget: u128 },
    /// A modulus that is not an odd prime >= 5.
    InvalidModulus { p: u64 },
    /// Catch-all for malformed inputs (bad strings, out-of-range values).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisionInField => write!(f, "division by zero in cyclotomic field"),
            Error::NonInvertibleDenominator { p } => {
                write!(f, "non-invertible denominator mod {p}")
            }
            Error::PoleAtExpansionPoint { order } => {
                write!(f, "pole at expansion point t=1 (order {order})")
            }
            Error::InvalidBrieskornData(msg) => write!(f, "invalid Brieskorn data: {msg}"),
            Error::NonFreeActionData { a, p } => {
                write!(f, "non-free action data: gcd({a}, {p}) > 1")
            }
            Error::ActionNotFree { a, p } => {
                write!(f, "action not free on the sphere: {p} divides {a}")
            }
            Error::InvalidSeifertPair { a, b } => write!(f, "invalid Seifert pair ({a}, {b})"),
            Error::EnergyClassNotInstanton => write!(f, "energy class not of instanton type"),
            Error::InconsistentInvariantInputs(msg) => {
                write!(f, "inconsistent invariant inputs: {msg}")
            }
            Error::LevelNotCoprime { p } => write!(f, "level {p} not coprime to multiplicities"),
            Error::NotIsolatedFixedPoint => write!(f, "not an isolated fixed point"),
            Error::SingularTerm(msg) => write!(f, "singular term: {msg}"),
            Error::RhoTableIncomplete(msg) => {
                write!(f, "rho table incomplete for this manifold: {msg}")
            }
            Error::InconsistentRhoInput(msg) => write!(f, "inconsistent rho input: {msg}"),
            Error::DegenerateRotationPair => write!(f, "degenerate rotation pair"),
            Error::SphereFixedFiberwise => write!(f, "sphere fixed fiberwise, not supported"),
            Error::LiftWeightsRequired => write!(f, "lift weights required"),
            Error::TheoremHypothesesViolated { p } => {
                write!(f, "theorem hypotheses violated for p = {p}")
            }
            Error::SearchSpaceOverBudget { estimate, budget } => {
                write!(f, "search space estimate {estimate} exceeds budget {budget}")
            }
            Error::InvalidModulus { p } => write!(f, "modulus {p} is not an odd prime >= 5"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}

//! Crate-wide error type.

use core::fmt;

/// Errors raised by construction, algebra and the solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Root finding needs a polynomial of degree at least one.
    ConstantPolynomial,
    /// The root iteration did not settle within its iteration budget.
    RootsNotConverged,
    /// A denominator polynomial is identically zero.
    ZeroDenominator,
    /// The operation requires `deg(num) < deg(den)`.
    NotStrictlyProper { num_degree: usize, den_degree: usize },
    /// Pole multiplicities above three are not supported.
    UnsupportedMultiplicity { re: f64, im: f64, multiplicity: usize },
    /// Wave speeds must be positive and finite.
    InvalidVelocity(f64),
    /// Box side lengths must be positive and finite.
    InvalidDomain { l1: f64, l2: f64 },
    /// Modal eigenvalues are nonnegative by construction.
    NegativeEigenvalue(f64),
    /// Time grids must start at zero and be strictly ascending.
    InvalidTimeGrid,
    /// A grid passed as ascending samples is empty or not ascending.
    InvalidSpaceGrid,
    /// The two wave speeds coincide; no counterexample exists.
    DegenerateVelocities,
    /// Paired modes must share the surface index `m1`.
    ModeMismatch { m1_a: u32, m1_b: u32 },
    /// A mode index appears twice in a modal source or mode list.
    DuplicateMode { m1: u32, m2: u32 },
    /// The source is identically zero, which is excluded by the problem.
    TrivialSource,
    /// The operation needs Laplace-domain (rational) source entries.
    NonRationalEntry { m1: u32, m2: u32 },
    /// Generalized construction needs at least two modes.
    NotEnoughModes { got: usize },
    /// Generalized construction needs exactly one seed per non-solved mode.
    SeedCountMismatch { modes: usize, seeds: usize },
    /// Obstruction scans need at least one positive Laplace sample.
    InvalidObstructionInput,
    /// Two traces live on different space-time grids.
    GridMismatch,
    /// A trace whose first time row is not zero violates the initial data.
    NonzeroInitialRow,
    /// The time step violates the leapfrog stability bound.
    CflViolation { dt: f64, dt_max: f64 },
    /// The requested spacing does not tile the box uniformly.
    NonUniformGrid,
    /// Convergence studies need at least three grid levels.
    TooFewLevels { got: usize },
    /// Grid levels must halve the spacing from one level to the next.
    NotHalvingSequence,
    /// A numeric input is NaN or infinite.
    NonFinite(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ConstantPolynomial => {
                write!(f, "root finding requires a polynomial of degree >= 1")
            }
            Error::RootsNotConverged => write!(f, "polynomial root iteration did not converge"),
            Error::ZeroDenominator => write!(f, "denominator polynomial is identically zero"),
            Error::NotStrictlyProper {
                num_degree,
                den_degree,
            } => write!(
                f,
                "rational function is not strictly proper: deg(num) = {num_degree} >= deg(den) = {den_degree}"
            ),
            Error::UnsupportedMultiplicity {
                re,
                im,
                multiplicity,
            } => write!(
                f,
                "pole at {re}{im:+}i has multiplicity {multiplicity}; only multiplicities <= 3 are supported"
            ),
            Error::InvalidVelocity(c) => write!(f, "wave speed must be positive and finite, got {c}"),
            Error::InvalidDomain { l1, l2 } => {
                write!(f, "box lengths must be positive and finite, got ({l1}, {l2})")
            }
            Error::NegativeEigenvalue(l) => write!(f, "eigenvalue must be nonnegative, got {l}"),
            Error::InvalidTimeGrid => {
                write!(f, "time grid must start at 0 and be strictly ascending")
            }
            Error::InvalidSpaceGrid => write!(f, "space grid must be nonempty and ascending"),
            Error::DegenerateVelocities => {
                write!(f, "wave speeds c1 and c2 must differ to construct a counterexample")
            }
            Error::ModeMismatch { m1_a, m1_b } => write!(
                f,
                "modes must share the surface index m1 (got m1 = {m1_a} and m1 = {m1_b})"
            ),
            Error::DuplicateMode { m1, m2 } => {
                write!(f, "mode ({m1}, {m2}) appears more than once")
            }
            Error::TrivialSource => write!(f, "source is identically zero"),
            Error::NonRationalEntry { m1, m2 } => write!(
                f,
                "entry for mode ({m1}, {m2}) is not in Laplace (rational) form"
            ),
            Error::NotEnoughModes { got } => {
                write!(f, "need at least 2 modes, got {got}")
            }
            Error::SeedCountMismatch { modes, seeds } => write!(
                f,
                "need exactly {} seeds for {modes} modes, got {seeds}",
                modes - 1
            ),
            Error::InvalidObstructionInput => {
                write!(f, "obstruction scan needs positive Laplace samples and M >= 1")
            }
            Error::GridMismatch => write!(f, "traces are sampled on different grids"),
            Error::NonzeroInitialRow => {
                write!(f, "first time row of a surface trace must be zero")
            }
            Error::CflViolation { dt, dt_max } => write!(
                f,
                "time step dt = {dt} violates the stability bound dt <= {dt_max}"
            ),
            Error::NonUniformGrid => {
                write!(f, "spacing must tile both box sides with the same node distance")
            }
            Error::TooFewLevels { got } => {
                write!(f, "convergence study needs at least 3 grid levels, got {got}")
            }
            Error::NotHalvingSequence => {
                write!(f, "grid spacings must halve from each level to the next")
            }
            Error::NonFinite(what) => write!(f, "{what} must be finite"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

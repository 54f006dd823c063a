use thiserror::Error;

/// Errors surfaced by constructors and solvers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,

    #[error("generators have gcd {gcd} != 1, the complement of the monoid is infinite")]
    NotCofinite { gcd: u64 },

    #[error("gap set is not the complement of a semigroup: {x} + {y} = {sum} is listed as a gap")]
    NotASemigroup { x: u64, y: u64, sum: u64 },

    #[error("ideal is not closed under the semigroup action: {element} + {shift} escapes")]
    NotAnIdeal { element: u64, shift: u64 },

    #[error("ideals live over different base semigroups")]
    BaseMismatch,

    #[error("the curve is smooth (genus 0); the invariant is not defined")]
    SmoothCurve,

    #[error("Clifford index undefined: genus {genus} <= 3 and gonality {gonality} > 2")]
    CliffordUndefined { genus: usize, gonality: u64 },

    #[error("genus {genus} exceeds the supported bound {max} for this operation")]
    GenusTooLarge { genus: usize, max: usize },

    #[error("sheaf has h0 = {h0} < 2, it spans no pencil")]
    NotAPencilSource { h0: usize },

    #[error("the dual module is zero (h1 = 0); no scroll is defined")]
    EmptyDual,

    #[error("scroll decomposition is inconsistent: {0}")]
    ChainConsistency(String),

    #[error("invalid pencil ({u}, {v}): {reason}")]
    InvalidPencil { u: u64, v: u64, reason: String },

    #[error("plane curves need multiplicity >= 4 (degree >= 5); got {alpha}")]
    DegreeTooSmall { alpha: u64 },

    #[error("cannot parse semigroup description: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

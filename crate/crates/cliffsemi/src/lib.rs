//! Exact invariants of unicuspidal monomial curves, computed from the
//! numerical semigroup of the singularity.
//!
//! The library constructs numerical semigroups and their relative ideals,
//! models rank-1 torsion-free sheaves generated by monomial sections, and
//! exhaustively minimizes over that sheaf space to obtain the gonality,
//! Clifford index and Clifford dimension of the curve. It also classifies
//! trigonal curves, builds the canonical model coordinates, and computes the
//! rational normal scroll swept out by any pencil of sections.
//!
//! Everything is exact integer and bitset arithmetic; there is no floating
//! point anywhere.

mod bits;
pub mod error;
pub mod ideal;
pub mod report;
pub mod scroll;
pub mod semigroup;
pub mod sheaf;
pub mod solver;

pub use error::{Error, Result};
pub use ideal::{enumerate_ideals, ValueIdeal};
pub use report::{
    survey_row, CurveReport, ScrollReport, SemigroupSummary, SheafRecord, SurveyRow,
    SCHEMA_VERSION, SURVEY_COLUMNS, SURVEY_SCHEMA_COMMENT,
};
pub use scroll::{
    canonical_exponents, realizing_curve_exponents, Pencil, PencilMatrix, ScrollType,
};
pub use semigroup::{enumerate_semigroups, NumericalSemigroup, SemigroupSpec};
pub use sheaf::{MonomialSheaf, SheafInvariants, SheafKey};
pub use solver::{
    classify_trigonal, clifford_brute_oracle, clifford_of_curve, gonality, nonplanar_family,
    plane_closed_form, relations_report, visit_candidates, Candidate, CliffordOutcome,
    GonalityResult, NonplanarCurveFacts, PlaneCurveFacts, RelationCheck, TrigonalClass,
};

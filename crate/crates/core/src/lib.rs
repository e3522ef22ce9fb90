//! Exact-arithmetic Poincaré series of the quadratic algebras attached to a
//! Hecke operator.
//!
//! Given the exterior-algebra series P_Λ in factored form, this crate
//! computes the dual symmetric series P_S, the dimensions of the simple
//! comodules of the associated matrix quantum semi-group as Jacobi–Trudi
//! determinants, the bialgebra series P_E both as a sum of squared
//! dimensions and as the lambda-ring square of P_S, Pólya-frequency
//! certification of coefficient sequences, and the rank / super-rank
//! classification with its dimension bounds and extremal closed forms.
//!
//! Everything is over exact rationals with arbitrary-precision integers;
//! there is no floating point anywhere.

pub mod det;
pub mod error;
pub mod partition;
pub mod positivity;
pub mod quantum;
pub mod rational;
pub mod series;
pub mod symfun;

pub use error::{Error, Result};
pub use partition::{enumerate_partitions, Partition, SkewShape};
pub use positivity::{
    check_p_sequence, check_pp_sequence, toeplitz_minor, CheckedBounds, MinorSpec, MinorWitness,
    PositivityReport, PpCondition, PpReport, StrictMinorCheck, Verdict, DEFAULT_MAX_INDEX,
    DEFAULT_MAX_ORDER,
};
pub use quantum::{
    classify, comodule_dims, e_series_via_dims, e_series_via_star, hecke_sum, BoundCheck,
    Classification, DimEntry, DimensionTable, QuantumSpaceSpec, SpaceKind,
};
pub use rational::Rat;
pub use series::{FactoredSeries, TruncatedSeries};
pub use symfun::{
    hook_content_dim, kostka, lr_coefficient, schur_polynomial_oracle, schur_value,
    semistandard_tableaux, skew_schur_value, super_schur_value, Specialization, Tableau,
};

//! Incremental maximization: objectives, oracles, the phase and greedy
//! algorithms, and the adversarial families that stress them.

// `!(x >= 0.0)` is used deliberately: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod adversarial;
pub mod algorithms;
pub mod error;
pub mod format;
pub mod instance;
pub mod objectives;
pub mod oracle;
pub mod properties;
pub mod ratio;
pub mod scalar;
pub mod subset;

pub use error::{Error, Result};
pub use instance::{GroundSet, IncrementalInstance, IncrementalOrder, Objective, ObjectiveTraits};
pub use oracle::{brute_force_optimum, density, greedy_order, optimum_table, OptimumTable};
pub use properties::{
    check_accountable, check_alpha_augmentable, check_alpha_augmentable_with, check_monotone, check_subadditive,
    check_submodular, AugmentDenominator, CheckMode, Property, PropertyReport, Verdict, Witness,
};
pub use ratio::{competitive_ratio, CompetitivenessReport, RatioRow, RatioValue};
pub use scalar::{Rational, Scalar};
pub use subset::Subset;

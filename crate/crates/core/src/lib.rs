//! Tree invariant engine and claims-verification laboratory.
//!
//! The crate computes degree-based irregularity indices (sigma, Albertson,
//! Zagreb, forgotten) by direct edge summation in exact integer arithmetic,
//! constructs every parametric tree family under study, exhaustively
//! enumerates non-isomorphic trees, and arbitrates printed closed-form
//! expressions against the constructive ground truth, emitting
//! machine-readable confirmation/refutation reports with witnesses.

pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod families;
pub mod formulas;
pub mod indices;
pub mod report;
pub mod tree;

pub use enumeration::TreeClass;
pub use error::{Error, Result};
pub use extremal::{ClaimReport, ExtremalResult, Verdict, Witness};
pub use families::{Family, FamilySpec, GreedyVariant};
pub use formulas::{Arbitration, ArbitrationVerdict, EvalMode, FormulaId};
pub use indices::IndexValue;
pub use report::{ClaimSelector, ReportDocument};
pub use tree::{are_isomorphic, parse_tree, CanonicalForm, DegreeSequence, Tree};

//! Bounded checks of normal torsion-freeness and the persistence
//! properties, structural certificates, corner elements, and executable
//! forms of the deletion and witness results.

pub mod certificate;
pub mod checks;
pub mod corners;
pub mod report;
pub mod theorems;

pub use certificate::{structural_ntf_certificate, Certificate};
pub use checks::{
    check_report, has_persistence_up_to, has_strong_persistence_up_to,
    has_symbolic_strong_persistence_up_to, is_ntf_up_to, PowerTower, DEFAULT_MAX_POWER,
};
pub use corners::{check_corner_divisibility, corner_elements, CornerSet};
pub use report::{
    AssSnapshot, FailureWitness, Outcome, Property, PropertyReport, TheoremReport, Verdict,
};

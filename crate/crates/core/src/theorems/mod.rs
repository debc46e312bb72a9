//! Equitable ribbons and their supports, the witness tableau construction,
//! the geometric maximal-ribbon construction, and verification reports.

mod equitable;
mod geometry;
mod verify;
mod witness;

use serde::{Deserialize, Serialize};

pub use equitable::{
    dominance_interval, enumerate_equitable, has_full_support, is_equitable, predicted_support, EquitableProfile,
};
pub use geometry::{boundary_word, conjectured_max_ribbon, upper_boundary_word};
pub use verify::{
    distinct_rearrangements, minrib_prediction, verify_conjecture_max, verify_conjecture_minrib, verify_lemma_extreme,
    verify_support_prediction, verify_theorem_main,
};
pub use witness::{
    choose_strip, construct_witness_syt, extend_witness, witness_trace, Correction, WitnessContext, WitnessStep,
    WitnessTrace,
};

/// Outcome of a verification run. A failed check carries its counterexamples
/// instead of aborting.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub pass: bool,
    pub counterexamples: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(check: impl Into<String>, n: usize, counterexamples: Vec<serde_json::Value>) -> Self {
        Report {
            check: check.into(),
            n,
            pass: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

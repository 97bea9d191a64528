//! Exact-sequence solvers and exclusion criteria for compact group actions.
//!
//! Every checker is one-directional: it can exclude an action or report that
//! the criterion does not exclude it. None of them asserts that an action exists.

pub mod les;
pub mod orbits;
pub mod s3;
pub mod sequences;
pub mod surd;

pub use les::{
    solve_les, verify_exactness, LesProblem, LesSolution, LesTerm, TermDim, DEFAULT_SOLVER_CAP,
    MAX_UNKNOWNS,
};
pub use orbits::{orbit_table_verify, OrbitTableVerdict, OrbitType, OrbitTypeTable};
pub use s3::{
    null_hyperplane_search, s3_check_4manifold, s3_check_5manifold, CupForm, NullHyperplane,
    NullSearchOptions,
};
pub use sequences::{gysin_assemble, gysin_check, gysin_gap, wang_assemble, wang_check, GysinOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Excluded,
    NotExcluded,
    /// The supplied hypotheses contradict each other.
    Inconsistent,
    /// A bounded search could not settle the criterion.
    Undetermined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Excluded => "excluded",
            Self::NotExcluded => "not excluded by this criterion",
            Self::Inconsistent => "inconsistent hypotheses",
            Self::Undetermined => "undetermined",
        }
    }
}

/// A verdict with the result it rests on and any supporting computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub citation: String,
    pub notes: Vec<String>,
    pub problem: Option<LesProblem>,
    pub solutions: Vec<LesSolution>,
    pub hyperplane: Option<NullHyperplane>,
}

impl CheckReport {
    pub fn new(verdict: Verdict, citation: impl Into<String>) -> Self {
        Self {
            verdict,
            citation: citation.into(),
            notes: Vec::new(),
            problem: None,
            solutions: Vec::new(),
            hyperplane: None,
        }
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

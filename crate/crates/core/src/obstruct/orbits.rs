//! Orbit types of SU(2) actions, checked against the cohomology engine.

use std::sync::Arc;

use crate::ceforms::relative_subcomplex;
use crate::cohom::{invariant_cohomology, relative_cohomology, GroupActionOnCohomology};
use crate::error::Result;
use crate::exactla::DEFAULT_GROUP_BOUND;
use crate::liealg::{library, Subalgebra};

/// Isotropy up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Isotropy {
    /// A finite subgroup Γ.
    Finite,
    /// A maximal torus.
    Circle,
    /// The normalizer of a maximal torus (two circles).
    TwoCircles,
    /// All of SU(2).
    Whole,
}

impl Isotropy {
    pub fn dim(self) -> usize {
        match self {
            Self::Finite => 0,
            Self::Circle | Self::TwoCircles => 1,
            Self::Whole => 3,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Self::Finite => "finite subgroup",
            Self::Circle => "circle",
            Self::TwoCircles => "normalizer of a circle (two circles)",
            Self::Whole => "SU(2)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitType {
    pub orbit: String,
    pub isotropy: Isotropy,
    pub dim: usize,
    /// Real cohomology of the orbit.
    pub cohomology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTypeTable {
    pub entries: Vec<OrbitType>,
}

impl OrbitTypeTable {
    /// S³/Γ, S², ℝP² and the point.
    pub fn su2() -> Self {
        let e = |orbit: &str, isotropy: Isotropy, cohomology: Vec<usize>| OrbitType {
            orbit: orbit.into(),
            isotropy,
            dim: 3 - isotropy.dim(),
            cohomology,
        };
        Self {
            entries: vec![
                e("S3/Γ", Isotropy::Finite, vec![1, 0, 0, 1]),
                e("S2", Isotropy::Circle, vec![1, 0, 1]),
                e("RP2", Isotropy::TwoCircles, vec![1, 0, 0]),
                e("point", Isotropy::Whole, vec![1]),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitTableVerdict {
    Ok { warnings: Vec<String> },
    Failed { entry: String, reason: String },
}

/// `H(su(2), 𝔥)^{N/N₀}` for the isotropy type.
pub fn orbit_cohomology(isotropy: Isotropy) -> Result<Vec<usize>> {
    let (g, circle, flip) = library::su2_circle();
    let h = match isotropy {
        Isotropy::Finite => Subalgebra::zero(g.clone()),
        Isotropy::Circle | Isotropy::TwoCircles => circle,
        Isotropy::Whole => Subalgebra::full(Arc::clone(&g)),
    };
    let res = relative_cohomology(&relative_subcomplex(&h)?)?;
    if isotropy == Isotropy::TwoCircles {
        let act = GroupActionOnCohomology::from_automorphisms(&res, &[flip], DEFAULT_GROUP_BOUND)?;
        return Ok(invariant_cohomology(&res, &act, DEFAULT_GROUP_BOUND)?.dims().to_vec());
    }
    Ok(res.dims().to_vec())
}

/// Checks dimensions and cohomology of every entry; an empty table passes with a warning.
pub fn orbit_table_verify(table: &OrbitTypeTable) -> Result<OrbitTableVerdict> {
    if table.entries.is_empty() {
        return Ok(OrbitTableVerdict::Ok {
            warnings: vec!["orbit table is empty".into()],
        });
    }
    for e in &table.entries {
        if e.dim + e.isotropy.dim() != 3 {
            return Ok(OrbitTableVerdict::Failed {
                entry: e.orbit.clone(),
                reason: format!(
                    "dimension {} + isotropy dimension {} ≠ dim SU(2) = 3",
                    e.dim,
                    e.isotropy.dim()
                ),
            });
        }
        let computed = orbit_cohomology(e.isotropy)?;
        if computed != e.cohomology {
            return Ok(OrbitTableVerdict::Failed {
                entry: e.orbit.clone(),
                reason: format!("table lists {:?}, engine computes {computed:?}", e.cohomology),
            });
        }
    }
    Ok(OrbitTableVerdict::Ok { warnings: Vec::new() })
}

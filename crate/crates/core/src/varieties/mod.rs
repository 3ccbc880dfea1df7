//! Varieties and logics: registries, free algebras, finite membership, the
//! deduction-property test and the Łukasiewicz bridge.

use serde::Serialize;

use crate::error::{Error, Result};

pub mod free;
pub mod lukasiewicz;
pub mod registry;

pub use free::{
    free_algebra, free_variables, member_of_variety, minimal_generating_tuple, Certificate, Coordinate,
    FreeAlgebraResult, Membership,
};
pub use lukasiewicz::{lukasiewicz_term_equivalence_check, LukasiewiczReport};
pub use registry::{
    deduction_property, logic, logics, varieties, variety, DeductionReport, LogicSpec, Rule, VarietySpec,
};

/// Size limits for free-algebra work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Coordinates kept after deduplication.
    pub coordinates: usize,
    /// Elements in any closure.
    pub closure: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            coordinates: 64,
            closure: 200_000,
        }
    }
}

impl Caps {
    /// Defaults, with the closure limit taken from `SHLAB_MAX_CLOSURE` when set.
    pub fn from_env() -> Result<Caps> {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var("SHLAB_MAX_CLOSURE") {
            caps.closure = v.trim().parse().map_err(|_| Error::Config {
                name: "SHLAB_MAX_CLOSURE".into(),
                reason: format!("`{v}` is not a nonnegative integer"),
            })?;
        }
        Ok(caps)
    }
}

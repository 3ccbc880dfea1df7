//! Equationally defined classes, each an ambient class plus identities.

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::equations::{self, catalog, Counterexample, Identity};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSpec {
    pub name: &'static str,
    /// `None` for the root class.
    pub ambient: Option<&'static str>,
    /// Catalog identity names added on top of the ambient.
    pub identities: &'static [&'static str],
    pub description: &'static str,
}

const SH1: &[&str] = &[
    "SH1-meet-idem",
    "SH1-join-idem",
    "SH1-meet-comm",
    "SH1-join-comm",
    "SH1-meet-assoc",
    "SH1-join-assoc",
    "SH1-absorb-meet",
    "SH1-absorb-join",
    "SH1-bottom",
    "SH1-top",
    "SH2",
    "SH3",
    "SH4",
];

macro_rules! class {
    ($name:expr, $amb:expr, [$($id:expr),*], $desc:expr) => {
        ClassSpec { name: $name, ambient: $amb, identities: &[$($id),*], description: $desc }
    };
}

const REGISTRY: &[ClassSpec] = &[
    ClassSpec {
        name: "SH",
        ambient: None,
        identities: SH1,
        description: "semi-Heyting algebras",
    },
    class!("H", Some("SH"), ["H"], "Heyting algebras"),
    class!("StSH", Some("SH"), ["stone"], "Stone semi-Heyting algebras"),
    class!(
        "DHMSH",
        Some("SH"),
        ["DHM-bot", "DHM-top", "DHM-meet"],
        "dually hemimorphic semi-Heyting algebras"
    ),
    class!("DHMH", Some("DHMSH"), ["H"], "dually hemimorphic Heyting algebras"),
    class!("OCKSH", Some("DHMSH"), ["ockham"], "Ockham semi-Heyting algebras"),
    class!(
        "DmsSH",
        Some("OCKSH"),
        ["dms"],
        "De Morgan-Stone-like: Ockham with x'' <= x"
    ),
    class!("DMSH", Some("OCKSH"), ["involution"], "De Morgan semi-Heyting algebras"),
    class!("DMH", Some("DMSH"), ["H"], "De Morgan Heyting algebras"),
    class!(
        "DSDSH",
        Some("DHMSH"),
        ["dsd-join", "dsd-triple"],
        "dually semi-De Morgan semi-Heyting algebras"
    ),
    class!(
        "DQDSH",
        Some("DSDSH"),
        ["dms"],
        "dually quasi-De Morgan semi-Heyting algebras"
    ),
    class!(
        "DPCSH",
        Some("DQDSH"),
        ["dpc"],
        "dually pseudocomplemented semi-Heyting algebras"
    ),
    class!(
        "DPCH",
        Some("DPCSH"),
        ["H"],
        "dually pseudocomplemented Heyting algebras"
    ),
    class!(
        "BDQDSH",
        Some("DQDSH"),
        ["blended"],
        "blended dually quasi-De Morgan semi-Heyting algebras"
    ),
    class!(
        "SBDQDSH",
        Some("DQDSH"),
        ["strongly-blended"],
        "strongly blended dually quasi-De Morgan semi-Heyting algebras"
    ),
    class!(
        "DQDBSH",
        Some("DQDSH"),
        ["boolean"],
        "dually quasi-De Morgan Boolean semi-Heyting algebras"
    ),
    class!(
        "DQSSH",
        Some("DHMSH"),
        ["dms", "dqs-join", "dual-stone"],
        "dually quasi-Stone semi-Heyting algebras"
    ),
    class!("DSSH", Some("DQSSH"), ["ockham"], "dually Stone semi-Heyting algebras"),
    class!(
        "BDQSSH",
        Some("DQSSH"),
        ["blended"],
        "blended dually quasi-Stone semi-Heyting algebras"
    ),
    class!(
        "SBDQSSH",
        Some("DQSSH"),
        ["strongly-blended"],
        "strongly blended dually quasi-Stone semi-Heyting algebras"
    ),
    class!(
        "DSCSH",
        Some("DHMSH"),
        ["dpc"],
        "dually hemimorphic algebras with x | x' = 1"
    ),
    class!(
        "DDPCSH",
        Some("DHMSH"),
        ["ddpc"],
        "dually demi-pseudocomplemented semi-Heyting algebras"
    ),
    class!(
        "DAPCSH",
        Some("DDPCSH"),
        ["dms"],
        "dually almost pseudocomplemented semi-Heyting algebras"
    ),
    class!("DQDSH1", Some("DQDSH"), ["level1"], "DQDSH of level 1"),
    class!("DQDStSH", Some("DQDSH"), ["stone"], "Stone DQDSH"),
    class!("DQDStSH1", Some("DQDSH1"), ["stone"], "Stone DQDSH of level 1"),
    class!(
        "RDQDStSH1",
        Some("DQDStSH1"),
        ["regular"],
        "regular Stone DQDSH of level 1"
    ),
    class!("RDQDStH1", Some("RDQDStSH1"), ["H"], "Heyting members of RDQDStSH1"),
    class!(
        "RDMStSH1",
        Some("RDQDStSH1"),
        ["involution"],
        "De Morgan members of RDQDStSH1"
    ),
    class!(
        "RDPCStSH1",
        Some("RDQDStSH1"),
        ["dpc"],
        "dually pseudocomplemented members of RDQDStSH1"
    ),
    class!("RDMStH1", Some("RDMStSH1"), ["H"], "Heyting members of RDMStSH1"),
    class!("RDPCStH1", Some("RDPCStSH1"), ["H"], "Heyting members of RDPCStSH1"),
    class!(
        "RDQDcmStSH1",
        Some("RDQDStSH1"),
        ["commutative"],
        "commutative members of RDQDStSH1"
    ),
    class!(
        "RDMcmStSH1",
        Some("RDMStSH1"),
        ["commutative"],
        "commutative members of RDMStSH1"
    ),
    class!(
        "RDPCcmStSH1",
        Some("RDPCStSH1"),
        ["commutative"],
        "commutative members of RDPCStSH1"
    ),
    class!("DMSH1", Some("DMSH"), ["level1"], "DMSH of level 1"),
    class!("RDMSH1", Some("DMSH1"), ["regular"], "regular DMSH of level 1"),
    class!("RDMH1", Some("RDMSH1"), ["H"], "Heyting members of RDMSH1"),
    class!(
        "RDMcmSH1",
        Some("RDMSH1"),
        ["commutative"],
        "commutative members of RDMSH1"
    ),
    class!(
        "DQDSHC3",
        Some("DQDSH"),
        ["star-regular", "regular"],
        "variety of the twenty three-element chains"
    ),
    class!(
        "DMSHC3",
        Some("DQDSHC3"),
        ["involution"],
        "variety of the ten dm three-element chains"
    ),
    class!(
        "DPCSHC3",
        Some("DQDSHC3"),
        ["dpc"],
        "variety of the ten dp three-element chains"
    ),
    class!("JIDSH", Some("DQDSH"), ["JID"], "JI-distributive DQDSH"),
    class!("JIDSH1", Some("JIDSH"), ["level1"], "JIDSH of level 1"),
    class!(
        "JIDL1",
        Some("JIDSH1"),
        ["semi-linearity"],
        "semi-linear JIDSH of level 1"
    ),
    class!(
        "DStHC",
        Some("JIDL1"),
        ["dpc"],
        "variety generated by the dually Stone Heyting chains"
    ),
    class!(
        "V2e2bare",
        Some("DHMSH"),
        ["neg-star"],
        "variety generated by 2e and 2bare"
    ),
    class!("V2e", Some("V2e2bare"), ["FTT"], "variety generated by 2e"),
    class!("V2bare", Some("V2e2bare"), ["FTF"], "variety generated by 2bare"),
    class!(
        "DMHC",
        Some("DMSH"),
        ["star-regular", "semi-linearity"],
        "variety generated by the De Morgan Heyting chains"
    ),
    class!(
        "DPCHC",
        Some("DQDSH"),
        ["plus-neg", "semi-linearity"],
        "variety generated by the dually pseudocomplemented Heyting chains"
    ),
];

pub fn registry() -> &'static [ClassSpec] {
    REGISTRY
}

pub fn get(name: &str) -> Result<&'static ClassSpec> {
    REGISTRY
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownClass(name.to_string()))
}

/// Every defining identity of `name`, ambient chain first, tagged with the
/// class that contributes it.
pub fn class_identities(name: &str) -> Result<Vec<(&'static str, Identity)>> {
    let spec = get(name)?;
    let mut out = match spec.ambient {
        Some(amb) => class_identities(amb)?,
        None => Vec::new(),
    };
    for id in spec.identities {
        out.push((spec.name, catalog::lookup(id)?));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFailure {
    /// Class in the ambient chain that contributes the failing identity.
    pub class: String,
    pub identity: String,
    pub witness: String,
    #[serde(skip)]
    pub counterexample: Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub algebra: String,
    pub class: String,
    pub passed: bool,
    pub identities_checked: usize,
    pub failure: Option<ClassFailure>,
}

/// Exhaustive check of every defining identity, stopping at the first
/// failure.
pub fn check_class(a: &FiniteAlgebra, class: &str) -> Result<ClassReport> {
    let ids = class_identities(class)?;
    let mut checked = 0;
    for (origin, id) in &ids {
        checked += 1;
        let r = equations::holds(a, id)?;
        if let Some(cx) = r.counterexample {
            return Ok(ClassReport {
                algebra: a.name.clone(),
                class: class.to_string(),
                passed: false,
                identities_checked: checked,
                failure: Some(ClassFailure {
                    class: origin.to_string(),
                    identity: id.label(),
                    witness: cx.describe(a),
                    counterexample: cx,
                }),
            });
        }
    }
    Ok(ClassReport {
        algebra: a.name.clone(),
        class: class.to_string(),
        passed: true,
        identities_checked: checked,
        failure: None,
    })
}

/// SH1–SH4 check.
pub fn is_semiheyting(a: &FiniteAlgebra) -> ClassReport {
    check_class(a, "SH").expect("SH identities use no negation")
}

/// True iff `a` belongs to `class`.
pub fn in_class(a: &FiniteAlgebra, class: &str) -> Result<bool> {
    Ok(check_class(a, class)?.passed)
}

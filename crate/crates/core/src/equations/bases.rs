//! Base verification: a set of identities is a base, relative to an
//! ambient class, for the variety generated by some finite algebras.
//!
//! Generators must satisfy the base. Every probe inside the ambient either
//! fails some base identity or is shown to lie in the variety; a probe that
//! satisfies the base but is separated from the generators is a defect.

use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::classes::class_identities;
use crate::algebra::{library, FiniteAlgebra};
use crate::equations::{catalog, holds, Identity};
use crate::error::{Error, Result};
use crate::varieties::{member_of_variety, Caps, Certificate};

const CORPUS_TEXT: &str = include_str!("../../data/bases.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ProbeStatus {
    /// Outside the ambient class; no claim is made.
    Excluded { identity: String, witness: String },
    /// Fails a base identity.
    Fails { identity: String, witness: String },
    /// Satisfies the base and lies in the variety.
    Member { certificate: Certificate },
    /// Satisfies the base but lies outside the variety.
    NotMember { separating: Certificate },
    /// Membership could not be settled within the caps.
    Undecided { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeResult {
    pub algebra: String,
    #[serde(flatten)]
    pub status: ProbeStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorFailure {
    pub generator: String,
    pub identity: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseReport {
    pub generators: Vec<String>,
    pub ambient: String,
    pub base: Vec<String>,
    pub generator_failures: Vec<GeneratorFailure>,
    pub probes: Vec<ProbeResult>,
    pub generator_side_ok: bool,
    pub separation_ok: bool,
    pub passed: bool,
}

impl BaseReport {
    pub fn probe(&self, name: &str) -> Option<&ProbeStatus> {
        self.probes.iter().find(|p| p.algebra == name).map(|p| &p.status)
    }
}

fn first_failure(a: &FiniteAlgebra, ids: &[Identity]) -> Result<Option<(String, String)>> {
    for id in ids {
        if let Some(cx) = holds(a, id)?.counterexample {
            return Ok(Some((id.label(), cx.describe(a))));
        }
    }
    Ok(None)
}

pub fn verify_base(
    generators: &[FiniteAlgebra],
    ambient: &str,
    base: &[Identity],
    probes: &[FiniteAlgebra],
    caps: &Caps,
) -> Result<BaseReport> {
    let ambient_ids: Vec<Identity> = class_identities(ambient)?.into_iter().map(|(_, id)| id).collect();
    for g in generators {
        if let Some((identity, _)) = first_failure(g, &ambient_ids)? {
            return Err(Error::GeneratorOutsideAmbient {
                generator: g.name.clone(),
                ambient: ambient.to_string(),
                identity,
            });
        }
    }
    let mut generator_failures = Vec::new();
    for g in generators {
        for id in base {
            if let Some(cx) = holds(g, id)?.counterexample {
                generator_failures.push(GeneratorFailure {
                    generator: g.name.clone(),
                    identity: id.label(),
                    witness: cx.describe(g),
                });
            }
        }
    }
    let mut results = Vec::new();
    for p in probes {
        let status = if let Some((identity, witness)) = first_failure(p, &ambient_ids)? {
            ProbeStatus::Excluded { identity, witness }
        } else if let Some((identity, witness)) = first_failure(p, base)? {
            ProbeStatus::Fails { identity, witness }
        } else {
            match member_of_variety(p, generators, caps) {
                Ok(m) if m.member => ProbeStatus::Member {
                    certificate: m.certificate,
                },
                Ok(m) => ProbeStatus::NotMember {
                    separating: m.certificate,
                },
                Err(e @ Error::ClosureLimit { .. }) => ProbeStatus::Undecided { reason: e.to_string() },
                Err(e) => return Err(e),
            }
        };
        results.push(ProbeResult {
            algebra: p.name.clone(),
            status,
        });
    }
    let generator_side_ok = generator_failures.is_empty();
    let separation_ok = results
        .iter()
        .all(|r| !matches!(r.status, ProbeStatus::NotMember { .. } | ProbeStatus::Undecided { .. }));
    Ok(BaseReport {
        generators: generators.iter().map(|g| g.name.clone()).collect(),
        ambient: ambient.to_string(),
        base: base.iter().map(|b| b.label()).collect(),
        generator_failures,
        probes: results,
        generator_side_ok,
        separation_ok,
        passed: generator_side_ok && separation_ok,
    })
}

/// One entry of the shipped base corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseEntry {
    pub key: String,
    pub generators: Vec<String>,
    pub ambient: String,
    pub ids: Vec<String>,
    /// Probes beyond the 25 core algebras.
    pub probes: Vec<String>,
    /// Part of the fast acceptance subset.
    pub curated: bool,
}

impl BaseEntry {
    pub fn probe_names(&self) -> Vec<String> {
        let mut out = library::core_names();
        for p in &self.probes {
            if !out.contains(p) {
                out.push(p.clone());
            }
        }
        out
    }

    pub fn verify(&self, caps: &Caps) -> Result<BaseReport> {
        let gens = self
            .generators
            .iter()
            .map(|g| library::get(g))
            .collect::<Result<Vec<_>>>()?;
        let probes = self
            .probe_names()
            .iter()
            .map(|g| library::get(g))
            .collect::<Result<Vec<_>>>()?;
        let base = catalog::lookup_all(&self.ids)?;
        verify_base(&gens, &self.ambient, &base, &probes, caps)
    }
}

/// Parses a corpus file: blocks of `base KEY`, `generators ...`,
/// `ambient CLASS`, `ids ...`, optional `probes ...` and `curated`.
pub fn parse_corpus(text: &str) -> Result<Vec<BaseEntry>> {
    let mut out: Vec<BaseEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |reason: String| Error::IdentityFormat { line, reason };
        let (head, rest) = body.split_once(' ').unwrap_or((body, ""));
        let words = || rest.split_whitespace().map(String::from).collect::<Vec<_>>();
        if head == "base" {
            if rest.is_empty() {
                return Err(err("missing base key".into()));
            }
            if out.iter().any(|e| e.key == rest) {
                return Err(err(format!("duplicate base key `{rest}`")));
            }
            out.push(BaseEntry {
                key: rest.to_string(),
                generators: Vec::new(),
                ambient: String::new(),
                ids: Vec::new(),
                probes: Vec::new(),
                curated: false,
            });
            continue;
        }
        let e = out
            .last_mut()
            .ok_or_else(|| err("field before the first `base` line".into()))?;
        match head {
            "generators" => e.generators = words(),
            "ambient" => e.ambient = rest.trim().to_string(),
            "ids" => e.ids = words(),
            "probes" => e.probes = words(),
            "curated" => e.curated = true,
            other => return Err(err(format!("unknown field `{other}`"))),
        }
    }
    for e in &out {
        if e.generators.is_empty() || e.ambient.is_empty() || e.ids.is_empty() {
            return Err(Error::IdentityFormat {
                line: 0,
                reason: format!("base `{}` needs generators, ambient and ids", e.key),
            });
        }
    }
    Ok(out)
}

pub fn corpus() -> &'static [BaseEntry] {
    static C: OnceLock<Vec<BaseEntry>> = OnceLock::new();
    C.get_or_init(|| parse_corpus(CORPUS_TEXT).expect("builtin base corpus parses"))
}

pub fn entry(key: &str) -> Result<&'static BaseEntry> {
    corpus()
        .iter()
        .find(|e| e.key == key)
        .ok_or_else(|| Error::UnknownBase(key.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lib(n: &str) -> FiniteAlgebra {
        library::get(n).unwrap()
    }

    #[test]
    fn corpus_resolves() {
        assert!(corpus().iter().filter(|e| e.curated).count() >= 10);
        for e in corpus() {
            catalog::lookup_all(&e.ids).unwrap();
            for g in e.generators.iter().chain(&e.probes) {
                library::get(g).unwrap();
            }
        }
        assert!(matches!(entry("nope"), Err(Error::UnknownBase(_))));
    }

    #[test]
    fn d1_ftf_base() {
        let d: Vec<_> = ["D1", "D2", "D3"].map(lib).to_vec();
        let r = verify_base(
            &d[..1],
            "DQDBSH",
            &[catalog::lookup("FTF").unwrap()],
            &d,
            &Caps::default(),
        )
        .unwrap();
        assert!(r.passed);
        assert!(matches!(r.probe("D1"), Some(ProbeStatus::Member { .. })));
        assert!(matches!(r.probe("D2"), Some(ProbeStatus::Fails { .. })));
        assert!(matches!(r.probe("D3"), Some(ProbeStatus::Fails { .. })));
    }

    #[test]
    fn outside_ambient_is_an_error() {
        let r = verify_base(&[lib("L1dp")], "DMSH", &[], &[], &Caps::default());
        assert!(matches!(r, Err(Error::GeneratorOutsideAmbient { .. })));
    }
}

//! Registries of varieties and of the logics that correspond to them.
//!
//! A variety is defined by identities over an ambient class, by a finite
//! list of generators, or both. Logics are named `L(X)` for a variety
//! `V(X)` and share the name otherwise.

use serde::Serialize;

use crate::algebra::classes::{self, class_identities};
use crate::algebra::{library, FiniteAlgebra};
use crate::equations::{self, catalog, Identity};
use crate::error::{Error, Result};
use crate::formula::{self, Formula};

/// Identity definition: everything in `ambient` plus `ids`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Definition {
    pub ambient: String,
    pub ids: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarietySpec {
    pub name: String,
    pub definition: Option<Definition>,
    /// Library names of generating algebras. `Some(vec![])` is the trivial
    /// variety.
    pub generators: Option<Vec<String>>,
    /// The generators are finitely many members of a variety that is not
    /// finitely generated; they witness failures but prove nothing.
    pub sample: bool,
    pub note: &'static str,
}

impl VarietySpec {
    /// Every defining identity, ambient chain first.
    pub fn identities(&self) -> Result<Vec<Identity>> {
        let Some(d) = &self.definition else {
            return Ok(Vec::new());
        };
        let mut out: Vec<Identity> = class_identities(&d.ambient)?.into_iter().map(|(_, id)| id).collect();
        out.extend(catalog::lookup_all(&d.ids)?);
        Ok(out)
    }

    pub fn generator_algebras(&self) -> Result<Option<Vec<FiniteAlgebra>>> {
        match &self.generators {
            Some(g) => Ok(Some(g.iter().map(|n| library::get(n)).collect::<Result<_>>()?)),
            None => Ok(None),
        }
    }

    /// True when the generators decide everything about the variety.
    pub fn finitely_generated(&self) -> bool {
        self.generators.is_some() && !self.sample
    }

    pub fn logic_name(&self) -> String {
        match self.name.strip_prefix("V(") {
            Some(rest) => format!("L({rest}"),
            None => self.name.clone(),
        }
    }
}

fn def(ambient: &str, ids: &[&str]) -> Option<Definition> {
    Some(Definition {
        ambient: ambient.to_string(),
        ids: ids.iter().map(|s| s.to_string()).collect(),
    })
}

fn names(v: &[&str]) -> Option<Vec<String>> {
    Some(v.iter().map(|s| s.to_string()).collect())
}

fn spec(
    name: impl Into<String>,
    definition: Option<Definition>,
    generators: Option<Vec<String>>,
    note: &'static str,
) -> VarietySpec {
    VarietySpec {
        name: name.into(),
        definition,
        generators,
        sample: false,
        note,
    }
}

/// Bases of `V(Li^dm)` relative to `DMSHC3`, and identically of `V(Li^dp)`
/// relative to `DPCSHC3`.
pub const CHAIN3_BASES: [&[&str]; 10] = [
    &["C1"],
    &["C2", "C3"],
    &["C2", "C4"],
    &["C4", "C5"],
    &["C7"],
    &["C8"],
    &["C9", "C10"],
    &["C11", "C12"],
    &["C6", "C14", "C15"],
    &["C16"],
];

/// Finite sample used for the chain varieties that are not finitely
/// generated.
const SAMPLE_MAX: usize = 6;

fn chain_sample(prefix: &str, suffix: &str) -> Vec<String> {
    (2..=SAMPLE_MAX).map(|n| format!("{prefix}{n}{suffix}")).collect()
}

fn build_varieties() -> Vec<VarietySpec> {
    let dm = library::dm_names();
    let dp = library::dp_names();
    let c20 = library::c20_names();
    let with_d = |v: &[String]| {
        let mut v = v.to_vec();
        v.extend(["D1", "D2", "D3"].map(String::from));
        v
    };
    let mut out = vec![
        spec("T", None, Some(vec![]), "trivial variety"),
        spec("V(2e,2bare)", def("DHMSH", &["neg-star"]), names(&["2e", "2bare"]), ""),
        spec("V(2e)", def("V2e2bare", &["FTT"]), names(&["2e"]), ""),
        spec("V(2bare)", def("V2e2bare", &["FTF"]), names(&["2bare"]), ""),
        spec(
            "DQDSHC3",
            def("DQDSHC3", &[]),
            Some(c20.clone()),
            "generated by the twenty three-element chains",
        ),
        spec("DMSHC3", def("DMSHC3", &[]), Some(dm.clone()), ""),
        spec("DPCSHC3", def("DPCSHC3", &[]), Some(dp.clone()), ""),
    ];
    for (i, base) in CHAIN3_BASES.iter().enumerate() {
        out.push(spec(
            format!("V(L{}dm)", i + 1),
            def("DMSHC3", base),
            Some(vec![dm[i].clone()]),
            "",
        ));
    }
    for (i, base) in CHAIN3_BASES.iter().enumerate() {
        out.push(spec(
            format!("V(L{}dp)", i + 1),
            def("DPCSHC3", base),
            Some(vec![dp[i].clone()]),
            "",
        ));
    }
    out.extend([
        spec("DQDBSH", def("DQDBSH", &[]), names(&["D1", "D2", "D3"]), ""),
        spec("V(D1)", def("DQDBSH", &["FTF"]), names(&["D1"]), ""),
        spec("V(D2)", def("DQDBSH", &["FTT"]), names(&["D2"]), ""),
        spec("V(D3)", def("DQDBSH", &["ftt-neg-fixed"]), names(&["D3"]), ""),
        spec("RDQDStSH1", def("RDQDStSH1", &[]), Some(with_d(&c20)), ""),
        spec("RDMStSH1", def("RDMStSH1", &[]), Some(with_d(&dm)), ""),
        spec("RDMSH1", def("RDMSH1", &[]), Some(with_d(&dm)), ""),
        spec("RDPCStSH1", def("RDPCStSH1", &[]), Some(dp.clone()), ""),
        spec("RDQDStH1", def("RDQDStH1", &[]), names(&["L1dm", "L1dp", "D2"]), ""),
        spec("RDMStH1", def("RDMStH1", &[]), names(&["L1dm", "D2"]), ""),
        spec("RDMH1", def("RDMH1", &[]), names(&["L1dm", "D2"]), ""),
        spec("RDPCStH1", def("RDPCStH1", &[]), names(&["L1dp"]), ""),
        spec(
            "RDQDcmStSH1",
            def("RDQDcmStSH1", &[]),
            names(&["L10dm", "L10dp", "D1"]),
            "",
        ),
        spec("RDMcmStSH1", def("RDMcmStSH1", &[]), names(&["L10dm", "D1"]), ""),
        spec("RDMcmSH1", def("RDMcmSH1", &[]), names(&["L10dm", "D1"]), ""),
        spec("RDPCcmStSH1", def("RDPCcmStSH1", &[]), names(&["L10dp"]), ""),
        VarietySpec {
            sample: true,
            ..spec(
                "DMHC",
                def("DMHC", &[]),
                Some(chain_sample("DMH", "")),
                "generated by all De Morgan Heyting chains",
            )
        },
    ]);
    for n in 2..=library::MAX_CHAIN {
        let id = format!("DMHC3_{n}");
        out.push(spec(
            format!("DMHC_{n}"),
            def("DMHC", &[&id]),
            Some(vec![format!("DMH{n}")]),
            "",
        ));
    }
    out.push(VarietySpec {
        sample: true,
        ..spec(
            "DPCHC",
            def("DPCHC", &[]),
            Some(chain_sample("Ch", "dp")),
            "generated by all dually pseudocomplemented Heyting chains",
        )
    });
    out.push(spec("DPCHC_2", def("V2e", &[]), names(&["Ch2dp"]), "equals V(2e)"));
    for n in 3..=library::MAX_CHAIN {
        let id = format!("A_{n}");
        out.push(spec(
            format!("DPCHC_{n}"),
            def("DPCHC", &[&id]),
            Some(vec![format!("Ch{n}dp")]),
            "",
        ));
    }
    let mut jid = chain_sample("Ch", "dp");
    jid.push("D2".into());
    out.push(VarietySpec {
        sample: true,
        ..spec("JIDL1", def("JIDL1", &[]), Some(jid), "join of DStHC and V(D2)")
    });
    out.push(VarietySpec {
        sample: true,
        ..spec("DStHC", def("DStHC", &[]), Some(chain_sample("Ch", "dp")), "")
    });
    for n in 2..=library::MAX_CHAIN {
        let id = format!("E_{n}");
        out.push(spec(
            format!("V(Ch{n}dp,D2)"),
            def("JIDL1", &[&id]),
            Some(vec![format!("Ch{n}dp"), "D2".into()]),
            "",
        ));
    }
    out.push(spec(
        "DQDStSH1",
        def("DQDStSH1", &[]),
        None,
        "open: decidability of the corresponding logic is unresolved",
    ));
    out.push(spec(
        "DMH",
        def("DMH", &[]),
        None,
        "algebraic semantics of Moisil's logic LM",
    ));
    for c in classes::registry() {
        if !out.iter().any(|v| v.name == c.name) {
            out.push(spec(c.name, def(c.name, &[]), None, "defined by identities only"));
        }
    }
    out
}

pub fn varieties() -> &'static [VarietySpec] {
    static V: std::sync::OnceLock<Vec<VarietySpec>> = std::sync::OnceLock::new();
    V.get_or_init(build_varieties)
}

pub fn variety(name: &str) -> Result<&'static VarietySpec> {
    varieties()
        .iter()
        .find(|v| v.name == name)
        .ok_or_else(|| Error::UnknownClass(name.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// From `φ` and `φ →H γ` infer `γ`.
    Smp,
    /// From `φ →H γ` infer `γ′ →H φ′`.
    Scp,
    /// From `φ` and `φ → γ` infer `γ`.
    Mp,
    /// From `φ → γ` infer `γ′ → φ′`.
    Cp,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogicSpec {
    pub name: String,
    pub parent: Option<String>,
    /// Axiom schemas added over the parent, `(label, template)`.
    #[serde(serialize_with = "ser_axioms")]
    pub axioms: Vec<(String, Formula)>,
    pub rules: Vec<Rule>,
    pub variety: String,
}

fn ser_axioms<S: serde::Serializer>(axioms: &[(String, Formula)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(axioms.len()))?;
    for (l, f) in axioms {
        m.serialize_entry(l, &f.render_sugared())?;
    }
    m.end()
}

impl LogicSpec {
    /// Axioms of the parent chain followed by the own ones.
    pub fn all_axioms(&self) -> Result<Vec<(String, Formula)>> {
        let mut out = match &self.parent {
            Some(p) => logic(p)?.all_axioms()?,
            None => Vec::new(),
        };
        out.extend(self.axioms.iter().cloned());
        Ok(out)
    }

    pub fn axiom(&self, label: &str) -> Result<Formula> {
        self.all_axioms()?
            .into_iter()
            .find(|(l, _)| l == label)
            .map(|(_, f)| f)
            .ok_or_else(|| Error::UnknownSchema(label.to_string()))
    }
}

/// Axiom templates of the base logic, `A1`..`A14`.
pub const DHMSH_AXIOMS: [(&str, &str); 14] = [
    ("A1", "α => (α | β)"),
    ("A2", "β => (α | β)"),
    ("A3", "(α => γ) => ((β => γ) => ((α | β) => γ))"),
    ("A4", "(α & β) => α"),
    ("A5", "(γ => α) => ((γ => β) => (γ => (α & β)))"),
    ("A6", "1"),
    ("A7", "0 => α"),
    ("A8", "((α & β) => γ) => (α => (β => γ))"),
    ("A9", "(α => (β => γ)) => ((α & β) => γ)"),
    ("A10", "(α => β) => ((β => α) => ((α -> γ) => (β -> γ)))"),
    ("A11", "(α => β) => ((β => α) => ((γ -> β) => (γ -> α)))"),
    ("A12", "1 => 0'"),
    ("A13", "1' => 0"),
    ("A14", "(α & β)' => (α' | β')"),
];

/// Moisil's axioms `B1`..`B10`, used with MP and CP.
pub const LM_AXIOMS: [(&str, &str); 10] = [
    ("B1", "α -> (β -> α)"),
    ("B2", "(α -> (β -> γ)) -> ((α -> β) -> (α -> γ))"),
    ("B3", "(α & β) -> α"),
    ("B4", "(α & β) -> β"),
    ("B5", "((α -> β) -> ((α -> γ) -> (α -> (β & γ))))"),
    ("B6", "α -> (α | β)"),
    ("B7", "β -> (α | β)"),
    ("B8", "(α -> γ) -> ((β -> γ) -> ((α | β) -> γ))"),
    ("B9", "α -> α''"),
    ("B10", "α'' -> α"),
];

/// `(name, parent, axioms)`.
type Extension = (&'static str, &'static str, &'static [(&'static str, &'static str)]);

/// Extensions named in the list of logics, with their quoted axioms.
const NAMED_EXTENSIONS: &[Extension] = &[
    ("DHMH", "DHMSH", &[("H", "(α & β) -> α")]),
    (
        "OCKSH",
        "DHMSH",
        &[("OCK1", "(α | β)' => (α' & β')"), ("OCK2", "(α' & β') => (α | β)'")],
    ),
    ("DmsSH", "OCKSH", &[("DMS", "α'' => α")]),
    ("DMSH", "OCKSH", &[("DMS", "α'' => α"), ("INV", "α => α''")]),
    ("DMH", "DMSH", &[("H", "(α & β) -> α")]),
    (
        "DSDSH",
        "DHMSH",
        &[
            ("DSD1", "(α | β)'' => (α'' | β'')"),
            ("DSD2", "(α'' | β'') => (α | β)''"),
            ("DSD3", "α''' => α'"),
            ("DSD4", "α' => α'''"),
        ],
    ),
    ("DQDSH", "DSDSH", &[("DMS", "α'' => α")]),
    ("DPCSH", "DQDSH", &[("DPC", "α | α'")]),
    ("DPCH", "DPCSH", &[("H", "(α & β) -> α")]),
    (
        "BDQDSH",
        "DQDSH",
        &[
            ("BL1", "(α | (α -> 0))' => (α' & (α -> 0)')"),
            ("BL2", "(α' & (α -> 0)') => (α | (α -> 0))'"),
        ],
    ),
    (
        "SBDQDSH",
        "DQDSH",
        &[
            ("SBL1", "(α | (β -> 0))' => (α' & (β -> 0)')"),
            ("SBL2", "(α' & (β -> 0)') => (α | (β -> 0))'"),
        ],
    ),
    ("DQDBSH", "DQDSH", &[("BOOL", "α | (α -> 0)")]),
    (
        "DQSSH",
        "DHMSH",
        &[
            ("DMS", "α'' => α"),
            ("DQS1", "(α | β')' => (α' & β'')"),
            ("DQS2", "(α' & β'') => (α | β')'"),
            ("DQS3", "(α' & α'') => 0"),
        ],
    ),
    (
        "DSSH",
        "DQSSH",
        &[("OCK1", "(α | β)' => (α' & β')"), ("OCK2", "(α' & β') => (α | β)'")],
    ),
    (
        "BDQSSH",
        "DQSSH",
        &[
            ("BL1", "(α | (α -> 0))' => (α' & (α -> 0)')"),
            ("BL2", "(α' & (α -> 0)') => (α | (α -> 0))'"),
        ],
    ),
    (
        "SBDQSSH",
        "DQSSH",
        &[
            ("SBL1", "(α | (β -> 0))' => (α' & (β -> 0)')"),
            ("SBL2", "(α' & (β -> 0)') => (α | (β -> 0))'"),
        ],
    ),
    ("DSCSH", "DHMSH", &[("DPC", "α | α'")]),
    ("DDPCSH", "DHMSH", &[("DDPC", "α' | α''")]),
    ("DAPCSH", "DDPCSH", &[("DMS", "α'' => α")]),
];

fn parse_template(t: &str) -> Formula {
    formula::parse(t).expect("builtin axiom template parses")
}

fn templates(list: &[(&str, &str)]) -> Vec<(String, Formula)> {
    list.iter().map(|(l, t)| (l.to_string(), parse_template(t))).collect()
}

const METAVARS: [(&str, &str); 5] = [("x", "α"), ("y", "β"), ("z", "γ"), ("u", "δ"), ("w", "ε")];

/// The axiom schema corresponding to an identity, over metavariables.
pub fn identity_schema(id: &Identity) -> Formula {
    let f = id.to_formula();
    let mut s = formula::Substitution::new();
    for v in f.vars() {
        let m = METAVARS
            .iter()
            .find(|(x, _)| *x == v)
            .map(|(_, g)| g.to_string())
            .unwrap_or_else(|| match v.strip_prefix('x') {
                Some(k) => format!("α{k}"),
                None => format!("μ{v}"),
            });
        s.insert(v, formula::var(&m));
    }
    f.substitute_partial(&s)
}

/// Identities of a variety beyond those of the ambient `DHMSH`, as axioms.
fn axioms_from_identities(v: &VarietySpec) -> Result<Vec<(String, Formula)>> {
    let base: Vec<Identity> = class_identities("DHMSH")?.into_iter().map(|(_, id)| id).collect();
    let mut out: Vec<(String, Formula)> = Vec::new();
    for id in v.identities()? {
        if base.contains(&id) {
            continue;
        }
        let label = id.label();
        if out.iter().any(|(l, _)| *l == label) {
            continue;
        }
        out.push((label, identity_schema(&id)));
    }
    Ok(out)
}

fn build_logics() -> Result<Vec<LogicSpec>> {
    let smp = vec![Rule::Smp, Rule::Scp];
    let mut out = vec![LogicSpec {
        name: "DHMSH".into(),
        parent: None,
        axioms: templates(&DHMSH_AXIOMS),
        rules: smp.clone(),
        variety: "DHMSH".into(),
    }];
    for (name, parent, axioms) in NAMED_EXTENSIONS {
        out.push(LogicSpec {
            name: name.to_string(),
            parent: Some(parent.to_string()),
            axioms: templates(axioms),
            rules: smp.clone(),
            variety: name.to_string(),
        });
    }
    out.push(LogicSpec {
        name: "LM".into(),
        parent: None,
        axioms: templates(&LM_AXIOMS),
        rules: vec![Rule::Mp, Rule::Cp],
        variety: "DMH".into(),
    });
    for v in varieties() {
        let name = v.logic_name();
        if out.iter().any(|l| l.name == name) || v.name == "DHMSH" {
            continue;
        }
        out.push(LogicSpec {
            name,
            parent: Some("DHMSH".into()),
            axioms: axioms_from_identities(v)?,
            rules: smp.clone(),
            variety: v.name.clone(),
        });
    }
    Ok(out)
}

pub fn logics() -> &'static [LogicSpec] {
    static L: std::sync::OnceLock<Vec<LogicSpec>> = std::sync::OnceLock::new();
    L.get_or_init(|| build_logics().expect("builtin logic registry"))
}

/// Looks up a logic; a variety name `V(X)` also finds `L(X)`.
pub fn logic(name: &str) -> Result<&'static LogicSpec> {
    let alt = name.strip_prefix("V(").map(|r| format!("L({r}"));
    logics()
        .iter()
        .find(|l| l.name == name || Some(&l.name) == alt.as_ref())
        .ok_or_else(|| Error::UnknownLogic(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeductionReport {
    pub variety: String,
    pub holds: bool,
    pub algebra: Option<String>,
    pub witness: Option<String>,
}

/// Whether the deduction identity `(x →H y) →H (y′ →H x′) ≈ 1` holds in
/// every generator.
pub fn deduction_property(v: &VarietySpec) -> Result<DeductionReport> {
    let gens = v.generator_algebras()?.ok_or_else(|| Error::NotFinitelyGenerated {
        name: v.name.clone(),
        reason: "no finite generating set is registered".into(),
    })?;
    let id = catalog::lookup("deduction")?;
    for a in &gens {
        if let Some(cx) = equations::holds(a, &id)?.counterexample {
            return Ok(DeductionReport {
                variety: v.name.clone(),
                holds: false,
                algebra: Some(a.name.clone()),
                witness: Some(cx.describe(a)),
            });
        }
    }
    if v.sample {
        return Err(Error::NotFinitelyGenerated {
            name: v.name.clone(),
            reason: "holds on the sample generators only".into(),
        });
    }
    Ok(DeductionReport {
        variety: v.name.clone(),
        holds: true,
        algebra: None,
        witness: None,
    })
}

/// Registry tables for the `registry dump` command.
pub fn dump() -> serde_json::Value {
    serde_json::json!({
        "classes": classes::registry(),
        "varieties": varieties(),
        "logics": logics(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registries_resolve() {
        for v in varieties() {
            v.identities().unwrap();
            v.generator_algebras().unwrap();
        }
        for l in logics() {
            l.all_axioms().unwrap();
            variety(&l.variety).unwrap();
        }
        assert_eq!(logic("DHMSH").unwrap().all_axioms().unwrap().len(), 14);
        assert_eq!(logic("V(D2)").unwrap().name, "L(D2)");
        assert_eq!(logic("LM").unwrap().variety, "DMH");
    }

    #[test]
    fn deduction_examples() {
        assert!(deduction_property(variety("V(2e,2bare)").unwrap()).unwrap().holds);
        assert!(deduction_property(variety("T").unwrap()).unwrap().holds);
        let r = deduction_property(variety("V(L1dm)").unwrap()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.algebra.as_deref(), Some("L1dm"));
        assert!(matches!(
            deduction_property(variety("DHMSH").unwrap()),
            Err(Error::NotFinitelyGenerated { .. })
        ));
    }

    #[test]
    fn generators_pass_their_definitions() {
        for v in varieties() {
            let (Some(gens), Ok(ids)) = (v.generator_algebras().unwrap(), v.identities()) else {
                continue;
            };
            for a in &gens {
                for id in &ids {
                    if (a.order() as f64).powi(id.vars().len() as i32) > 1e5 {
                        continue;
                    }
                    assert!(
                        equations::satisfies(a, id).unwrap(),
                        "{} fails {} in {}",
                        a.name,
                        id.label(),
                        v.name
                    );
                }
            }
        }
    }
}

//! Logical matrices with designated set `{1}`: tautologies, consequence and
//! the decision procedure for finitely generated logics.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{for_each_assignment, library, FiniteAlgebra, Program};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::varieties::{logic, variety};

/// An algebra read as a matrix; only the top is designated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalMatrix {
    pub algebra: FiniteAlgebra,
}

impl LogicalMatrix {
    pub fn designated(&self) -> crate::algebra::Elem {
        self.algebra.top
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFamily {
    pub name: String,
    pub matrices: Vec<LogicalMatrix>,
}

impl MatrixFamily {
    pub fn new(name: impl Into<String>, algebras: Vec<FiniteAlgebra>) -> MatrixFamily {
        MatrixFamily {
            name: name.into(),
            matrices: algebras.into_iter().map(|algebra| LogicalMatrix { algebra }).collect(),
        }
    }

    /// The 25 core library algebras, all in `DHMSH`.
    pub fn library() -> MatrixFamily {
        MatrixFamily::new("DHMSH library", library::core())
    }

    /// Characteristic family of a registered logic. The trivial variety
    /// gives the empty family, under which every formula is valid.
    pub fn for_logic(name: &str) -> Result<MatrixFamily> {
        let l = logic(name)?;
        let v = variety(&l.variety)?;
        let not_here = |reason: String| Error::NotFinitelyGenerated {
            name: l.name.clone(),
            reason,
        };
        if v.note.starts_with("open") {
            return Err(not_here(
                "open problem; no finite characteristic family is known".into(),
            ));
        }
        if v.sample {
            return Err(not_here(format!(
                "{} is not finitely generated; decide a finite member such as {}_n instead",
                v.name, v.name
            )));
        }
        match v.generator_algebras()? {
            Some(gens) => Ok(MatrixFamily::new(l.name.clone(), gens)),
            None => Err(not_here(
                "undecided here; use the proof kernel or a finitely generated extension".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Valid,
    Countermodel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub verdict: Outcome,
    pub matrix_name: Option<String>,
    pub valuation: Option<BTreeMap<String, String>>,
    /// Value of the formula at the countermodel.
    pub value: Option<String>,
}

impl Verdict {
    fn valid() -> Verdict {
        Verdict {
            verdict: Outcome::Valid,
            matrix_name: None,
            valuation: None,
            value: None,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verdict == Outcome::Valid
    }

    /// One-line text form.
    pub fn render(&self) -> String {
        match self.verdict {
            Outcome::Valid => "valid".into(),
            Outcome::Countermodel => {
                let v = self
                    .valuation
                    .as_ref()
                    .map(|m| m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", "));
                let v = v.filter(|s| !s.is_empty()).unwrap_or_else(|| "no variables".into());
                format!(
                    "countermodel in {} at {v} (value {})",
                    self.matrix_name.as_deref().unwrap_or("?"),
                    self.value.as_deref().unwrap_or("?")
                )
            }
        }
    }
}

fn vars_of(fs: &[&Formula]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for f in fs {
        for v in f.vars() {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// First `(matrix, valuation)` in iteration order where every premise is
/// designated and the conclusion is not.
pub fn consequence(fam: &MatrixFamily, premises: &[Formula], f: &Formula) -> Result<Verdict> {
    let mut all: Vec<&Formula> = premises.iter().collect();
    all.push(f);
    let vars = vars_of(&all);
    let progs = premises
        .iter()
        .map(|p| Program::compile_with_vars(p, &vars))
        .collect::<Result<Vec<_>>>()?;
    let goal = Program::compile_with_vars(f, &vars)?;
    let mut stack = Vec::new();
    for m in &fam.matrices {
        let a = &m.algebra;
        goal.check(a)?;
        for p in &progs {
            p.check(a)?;
        }
        let mut found = None;
        for_each_assignment(a.order(), vars.len(), |asg| {
            if progs.iter().all(|p| p.eval(a, asg, &mut stack) == a.top) {
                let v = goal.eval(a, asg, &mut stack);
                if v != a.top {
                    found = Some((asg.to_vec(), v));
                    return false;
                }
            }
            true
        });
        if let Some((asg, v)) = found {
            return Ok(Verdict {
                verdict: Outcome::Countermodel,
                matrix_name: Some(a.name.clone()),
                valuation: Some(
                    vars.iter()
                        .zip(&asg)
                        .map(|(k, &x)| (k.clone(), a.label(x).to_string()))
                        .collect(),
                ),
                value: Some(a.label(v).to_string()),
            });
        }
    }
    Ok(Verdict::valid())
}

pub fn is_tautology(fam: &MatrixFamily, f: &Formula) -> Result<Verdict> {
    consequence(fam, &[], f)
}

/// Decides theoremhood in a registered, finitely generated logic.
pub fn decide(logic_name: &str, f: &Formula) -> Result<Verdict> {
    is_tautology(&MatrixFamily::for_logic(logic_name)?, f)
}

//! Hilbert-style proof kernel for `DHMSH` and its registered extensions.
//!
//! Scripts are checked line by line. Rule matching is purely syntactic on
//! the expanded form, so `a => b` in a script is the formula `a -> (a & b)`
//! and SMP needs exactly that shape.

mod deduction;
pub mod fixtures;
mod script;
mod search;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{imp, imp_h, neg, Formula, Substitution};
use crate::varieties::{logic, Rule};

pub use deduction::{deduction_closure_check, deduction_transform, ClosureCase, DeductionClosureReport};
pub use script::parse_script;
pub use search::search_proof;

/// A named axiom template over metavariables `α β γ ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomSchema {
    pub name: String,
    pub template: Formula,
}

impl AxiomSchema {
    /// Metavariables in order of first occurrence.
    pub fn metavariables(&self) -> Vec<String> {
        self.template.vars()
    }
}

/// Every axiom schema of a logic, parents first.
pub fn schemas(logic_name: &str) -> Result<Vec<AxiomSchema>> {
    Ok(logic(logic_name)?
        .all_axioms()?
        .into_iter()
        .map(|(name, template)| AxiomSchema { name, template })
        .collect())
}

pub fn schema(logic_name: &str, name: &str) -> Result<AxiomSchema> {
    schemas(logic_name)?
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSchema(name.to_string()))
}

/// Fills a template; every metavariable must be bound.
pub fn instantiate(schema: &AxiomSchema, s: &Substitution) -> Result<Formula> {
    for m in schema.metavariables() {
        if !s.contains_key(&m) {
            return Err(Error::MissingMetavariable(m));
        }
    }
    schema.template.substitute(s)
}

/// One-way matching of a template against a formula.
pub fn match_schema(template: &Formula, f: &Formula) -> Option<Substitution> {
    let mut s = Substitution::new();
    if match_into(template, f, &mut s) {
        Some(s)
    } else {
        None
    }
}

fn match_into(t: &Formula, f: &Formula, s: &mut Substitution) -> bool {
    match (t, f) {
        (Formula::Var(m), _) => match s.get(m) {
            Some(bound) => bound == f,
            None => {
                s.insert(m.clone(), f.clone());
                true
            }
        },
        (Formula::Bot, Formula::Bot) | (Formula::Top, Formula::Top) => true,
        (Formula::Neg(a), Formula::Neg(b)) => match_into(a, b, s),
        (Formula::Meet(a1, a2), Formula::Meet(b1, b2))
        | (Formula::Join(a1, a2), Formula::Join(b1, b2))
        | (Formula::Imp(a1, a2), Formula::Imp(b1, b2)) => match_into(a1, b1, s) && match_into(a2, b2, s),
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Justification {
    /// Instance of a schema; without a substitution the kernel matches.
    Axiom {
        schema: String,
        subst: Option<Substitution>,
    },
    /// 1-based index into the premise list.
    Premise {
        index: usize,
    },
    /// `minor` holds `φ`, `major` holds `φ →H γ`.
    Smp {
        minor: usize,
        major: usize,
    },
    Scp {
        from: usize,
    },
    /// As SMP with plain `→`.
    Mp {
        minor: usize,
        major: usize,
    },
    Cp {
        from: usize,
    },
}

impl Justification {
    /// Earlier lines this justification refers to.
    pub fn refs(&self) -> Vec<usize> {
        match self {
            Justification::Smp { minor, major } | Justification::Mp { minor, major } => vec![*minor, *major],
            Justification::Scp { from } | Justification::Cp { from } => vec![*from],
            _ => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PremiseNote {
    Plain,
    /// The formula to discharge under the deduction transform.
    Hypothesis,
    /// A previously established theorem, cited rather than derived.
    Cited(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Premise {
    pub formula: Formula,
    pub note: PremiseNote,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofLine {
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofScript {
    pub logic: String,
    pub premises: Vec<Premise>,
    pub lines: Vec<ProofLine>,
}

impl ProofScript {
    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    pub fn hypothesis(&self) -> Option<usize> {
        self.premises
            .iter()
            .position(|p| p.note == PremiseNote::Hypothesis)
            .map(|i| i + 1)
    }

    pub fn render(&self) -> String {
        script::render(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineStatus {
    pub line: usize,
    pub formula: String,
    pub ok: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub accepted: bool,
    pub lines: Vec<LineStatus>,
    pub first_failure: Option<Failure>,
}

impl Verdict {
    pub fn render(&self) -> String {
        match &self.first_failure {
            None => format!("accepted ({} lines)", self.lines.len()),
            Some(f) => format!("rejected at line {}: {}", f.line, f.reason),
        }
    }
}

/// `γ′ →H φ′` from `φ →H γ`.
pub fn scp_of(f: &Formula) -> Option<Formula> {
    f.as_imp_h().map(|(a, b)| imp_h(neg(b.clone()), neg(a.clone())))
}

fn cp_of(f: &Formula) -> Option<Formula> {
    match f {
        Formula::Imp(a, b) => Some(imp(neg((**b).clone()), neg((**a).clone()))),
        _ => None,
    }
}

struct Kernel {
    rules: Vec<Rule>,
    axioms: HashMap<String, AxiomSchema>,
}

impl Kernel {
    fn new(logic_name: &str) -> Result<Kernel> {
        let rules = logic(logic_name)?.rules.clone();
        let axioms = schemas(logic_name)?.into_iter().map(|s| (s.name.clone(), s)).collect();
        Ok(Kernel { rules, axioms })
    }

    fn need(&self, r: Rule) -> std::result::Result<(), String> {
        if self.rules.contains(&r) {
            Ok(())
        } else {
            Err(format!("rule {r:?} is not a rule of this logic"))
        }
    }

    fn check_line(&self, s: &ProofScript, k: usize) -> std::result::Result<(), String> {
        let line = &s.lines[k - 1];
        let f = &line.formula;
        let get = |i: usize| -> std::result::Result<&Formula, String> {
            if i == 0 || i >= k {
                Err(format!("line {k} may only cite earlier lines, not {i}"))
            } else {
                Ok(&s.lines[i - 1].formula)
            }
        };
        match &line.justification {
            Justification::Axiom { schema, subst } => {
                let sc = self
                    .axioms
                    .get(schema)
                    .ok_or_else(|| format!("unknown axiom schema `{schema}`"))?;
                match subst {
                    Some(sub) => {
                        let inst = instantiate(sc, sub).map_err(|e| e.to_string())?;
                        if &inst != f {
                            return Err(format!(
                                "{schema} with this substitution gives {}",
                                inst.render_sugared()
                            ));
                        }
                    }
                    None => {
                        if match_schema(&sc.template, f).is_none() {
                            return Err(format!("not an instance of {schema}"));
                        }
                    }
                }
            }
            Justification::Premise { index } => {
                let p = s
                    .premises
                    .get(index.wrapping_sub(1))
                    .ok_or_else(|| format!("no premise {index}"))?;
                if &p.formula != f {
                    return Err(format!("premise {index} is {}", p.formula.render_sugared()));
                }
            }
            Justification::Smp { minor, major } => {
                self.need(Rule::Smp)?;
                let (phi, imp) = (get(*minor)?, get(*major)?);
                let (a, g) = imp
                    .as_imp_h()
                    .ok_or_else(|| format!("line {major} is not of the form φ => γ"))?;
                if a != phi {
                    return Err(format!("antecedent of line {major} differs from line {minor}"));
                }
                if g != f {
                    return Err(format!("smp gives {}", g.render_sugared()));
                }
            }
            Justification::Mp { minor, major } => {
                self.need(Rule::Mp)?;
                let (phi, imp) = (get(*minor)?, get(*major)?);
                let Formula::Imp(a, g) = imp else {
                    return Err(format!("line {major} is not an implication"));
                };
                if **a != *phi {
                    return Err(format!("antecedent of line {major} differs from line {minor}"));
                }
                if **g != *f {
                    return Err(format!("mp gives {}", g.render_sugared()));
                }
            }
            Justification::Scp { from } => {
                self.need(Rule::Scp)?;
                let g = scp_of(get(*from)?).ok_or_else(|| format!("line {from} is not of the form φ => γ"))?;
                if &g != f {
                    return Err(format!("scp gives {}", g.render_sugared()));
                }
            }
            Justification::Cp { from } => {
                self.need(Rule::Cp)?;
                let g = cp_of(get(*from)?).ok_or_else(|| format!("line {from} is not an implication"))?;
                if &g != f {
                    return Err(format!("cp gives {}", g.render_sugared()));
                }
            }
        }
        Ok(())
    }
}

/// Checks every line; the verdict accepts iff all lines check.
pub fn check_proof(s: &ProofScript) -> Verdict {
    let kernel = match Kernel::new(&s.logic) {
        Ok(k) => k,
        Err(e) => {
            return Verdict {
                accepted: false,
                lines: Vec::new(),
                first_failure: Some(Failure {
                    line: 0,
                    reason: e.to_string(),
                }),
            }
        }
    };
    let mut lines = Vec::with_capacity(s.lines.len());
    let mut first_failure = None;
    for k in 1..=s.lines.len() {
        let res = kernel.check_line(s, k);
        if let (Err(reason), None) = (&res, &first_failure) {
            first_failure = Some(Failure {
                line: k,
                reason: reason.clone(),
            });
        }
        lines.push(LineStatus {
            line: k,
            formula: s.lines[k - 1].formula.render_sugared(),
            ok: res.is_ok(),
            reason: res.err(),
        });
    }
    if s.lines.is_empty() {
        first_failure = Some(Failure {
            line: 0,
            reason: "empty proof".into(),
        });
    }
    Verdict {
        accepted: first_failure.is_none(),
        lines,
        first_failure,
    }
}

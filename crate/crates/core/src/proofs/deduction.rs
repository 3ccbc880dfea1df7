//! Discharging a hypothesis: turns a script for `Γ, φ ⊢ ψ` into one for
//! `Γ ⊢ φ →H ψ`, clause by clause over the original lines.
//!
//! Three facts are cited rather than derived, each as a marked premise:
//! `φ →H φ`, transitivity of `→H`, and the deduction identity
//! `(a →H b) →H (b′ →H a′)`. The last is only a theorem where the deduction
//! property holds, which `deduction_closure_check` verifies first.

use serde::Serialize;

use super::fixtures::DEDUCTION_CORPUS;
use super::{
    check_proof, instantiate, parse_script, schema, Justification, Premise, PremiseNote, ProofLine, ProofScript,
};
use crate::error::{Error, Result};
use crate::formula::{imp_h, meet, neg, Formula, Substitution};
use crate::matrices::{is_tautology, MatrixFamily};
use crate::varieties::{deduction_property, logic, variety, Rule};

struct Builder {
    premises: Vec<Premise>,
    lines: Vec<ProofLine>,
}

impl Builder {
    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        self.lines.push(ProofLine { formula, justification });
        self.lines.len()
    }

    fn axiom(&mut self, name: &str, pairs: &[(&str, &Formula)]) -> Result<usize> {
        let s: Substitution = pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect();
        let f = instantiate(&schema("DHMSH", name)?, &s)?;
        Ok(self.push(
            f,
            Justification::Axiom {
                schema: name.to_string(),
                subst: Some(s),
            },
        ))
    }

    fn cite(&mut self, formula: Formula, name: &str) -> usize {
        let note = PremiseNote::Cited(name.to_string());
        let index = match self.premises.iter().position(|p| p.formula == formula) {
            Some(i) => i + 1,
            None => {
                self.premises.push(Premise {
                    formula: formula.clone(),
                    note,
                });
                self.premises.len()
            }
        };
        self.push(formula, Justification::Premise { index })
    }

    fn smp(&mut self, minor: usize, major: usize) -> usize {
        let (_, g) = self.lines[major - 1]
            .formula
            .as_imp_h()
            .expect("major premise has the form a => b");
        let g = g.clone();
        self.push(g, Justification::Smp { minor, major })
    }

    /// `(a →H b) →H ((b →H c) →H (a →H c))`.
    fn transitivity(&mut self, a: &Formula, b: &Formula, c: &Formula) -> usize {
        let f = imp_h(
            imp_h(a.clone(), b.clone()),
            imp_h(imp_h(b.clone(), c.clone()), imp_h(a.clone(), c.clone())),
        );
        self.cite(f, "transitivity")
    }
}

/// Transforms an accepted script; `hyp` is the 1-based premise to discharge.
pub fn deduction_transform(s: &ProofScript, hyp: usize) -> Result<ProofScript> {
    let v = check_proof(s);
    if let Some(f) = v.first_failure {
        return Err(Error::ProofFormat {
            line: f.line,
            reason: format!("original script is rejected: {}", f.reason),
        });
    }
    let phi = s
        .premises
        .get(hyp.wrapping_sub(1))
        .ok_or_else(|| Error::ProofFormat {
            line: 0,
            reason: format!("no premise {hyp} to discharge"),
        })?
        .formula
        .clone();
    let mut remap = vec![0; s.premises.len() + 1];
    let mut b = Builder {
        premises: Vec::new(),
        lines: Vec::new(),
    };
    for (i, p) in s.premises.iter().enumerate() {
        if i + 1 != hyp {
            b.premises.push(p.clone());
            remap[i + 1] = b.premises.len();
        }
    }
    // out[k] is the output line holding φ →H ψ_k
    let mut out = vec![0usize; s.lines.len() + 1];
    for (k0, line) in s.lines.iter().enumerate() {
        let k = k0 + 1;
        let psi = &line.formula;
        out[k] = match &line.justification {
            Justification::Premise { index } if *index == hyp => b.cite(imp_h(phi.clone(), phi.clone()), "reflexivity"),
            Justification::Premise { .. } | Justification::Axiom { .. } => {
                let j = match &line.justification {
                    Justification::Premise { index } => Justification::Premise { index: remap[*index] },
                    other => other.clone(),
                };
                let l1 = b.push(psi.clone(), j);
                let l2 = b.axiom("A4", &[("α", psi), ("β", &phi)])?;
                let l3 = b.axiom("A8", &[("α", psi), ("β", &phi), ("γ", psi)])?;
                let l4 = b.smp(l2, l3);
                b.smp(l1, l4)
            }
            Justification::Smp { minor, major } => {
                let alpha = s.lines[minor - 1].formula.clone();
                let phi_alpha = meet(phi.clone(), alpha.clone());
                let r = b.cite(imp_h(phi.clone(), phi.clone()), "reflexivity");
                let a5 = b.axiom("A5", &[("γ", &phi), ("α", &phi), ("β", &alpha)])?;
                let t1 = b.smp(r, a5);
                let t2 = b.smp(out[*minor], t1);
                let a9 = b.axiom("A9", &[("α", &phi), ("β", &alpha), ("γ", psi)])?;
                let t3 = b.smp(out[*major], a9);
                let tr = b.transitivity(&phi, &phi_alpha, psi);
                let t4 = b.smp(t2, tr);
                b.smp(t3, t4)
            }
            Justification::Scp { from } => {
                let prev = s.lines[from - 1].formula.clone();
                let (a, c) = prev.as_imp_h().expect("checked scp source");
                let d = imp_h(prev.clone(), imp_h(neg(c.clone()), neg(a.clone())));
                let tr = b.transitivity(&phi, &prev, psi);
                let t1 = b.smp(out[*from], tr);
                let dl = b.cite(d, "deduction");
                b.smp(dl, t1)
            }
            Justification::Mp { .. } | Justification::Cp { .. } => {
                return Err(Error::ProofFormat {
                    line: k,
                    reason: "the transform covers smp and scp only".into(),
                })
            }
        };
    }
    Ok(ProofScript {
        logic: s.logic.clone(),
        premises: b.premises,
        lines: b.lines,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCase {
    pub name: String,
    pub hypothesis: String,
    pub conclusion: String,
    pub original_accepted: bool,
    pub transformed_accepted: bool,
    pub transformed_conclusion: String,
    pub transformed_lines: usize,
    /// Every cited premise of the transformed script is valid in the logic.
    pub cited_valid: bool,
}

impl ClosureCase {
    pub fn passed(&self) -> bool {
        self.original_accepted && self.transformed_accepted && self.cited_valid
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeductionClosureReport {
    pub logic: String,
    pub cases: Vec<ClosureCase>,
    pub passed: bool,
}

/// Runs the transform over the shipped corpus in a logic with the
/// deduction property.
pub fn deduction_closure_check(logic_name: &str) -> Result<DeductionClosureReport> {
    let l = logic(logic_name)?;
    if !l.rules.contains(&Rule::Smp) {
        return Err(Error::NoDeductionProperty(format!("{} (no smp rule)", l.name)));
    }
    let v = variety(&l.variety)?;
    if !deduction_property(v)?.holds {
        return Err(Error::NoDeductionProperty(l.name.clone()));
    }
    let fam = MatrixFamily::for_logic(&l.name)?;
    let mut cases = Vec::new();
    for (name, text) in DEDUCTION_CORPUS {
        let mut s = parse_script(text)?;
        s.logic = l.name.clone();
        let hyp = s.hypothesis().ok_or_else(|| Error::ProofFormat {
            line: 0,
            reason: format!("fixture `{name}` marks no hypothesis"),
        })?;
        let phi = s.premises[hyp - 1].formula.clone();
        let psi = s.conclusion().cloned().unwrap_or(Formula::Top);
        let original_accepted = check_proof(&s).accepted;
        let t = deduction_transform(&s, hyp)?;
        let mut cited_valid = true;
        for p in &t.premises {
            if matches!(p.note, PremiseNote::Cited(_)) && !is_tautology(&fam, &p.formula)?.is_valid() {
                cited_valid = false;
            }
        }
        let tc = t.conclusion().cloned().unwrap_or(Formula::Top);
        cases.push(ClosureCase {
            name: name.to_string(),
            hypothesis: phi.render_sugared(),
            conclusion: psi.render_sugared(),
            original_accepted,
            transformed_accepted: check_proof(&t).accepted && tc == imp_h(phi, psi),
            transformed_conclusion: tc.render_sugared(),
            transformed_lines: t.lines.len(),
            cited_valid,
        });
    }
    let passed = cases.iter().all(ClosureCase::passed);
    Ok(DeductionClosureReport {
        logic: l.name.clone(),
        cases,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn closure_in_2e() {
        let r = deduction_closure_check("L(2e)").unwrap();
        assert!(r.passed, "{r:#?}");
        let c = r.cases.iter().find(|c| c.name == "identity").unwrap();
        assert_eq!(c.transformed_conclusion, "x => x");
        let c = r.cases.iter().find(|c| c.name == "meet-self").unwrap();
        assert_eq!(c.transformed_conclusion, "x => x & x");
    }

    #[test]
    fn no_property() {
        assert!(matches!(
            deduction_closure_check("L(L1dm)"),
            Err(Error::NoDeductionProperty(_))
        ));
        assert!(matches!(
            deduction_closure_check("DHMSH"),
            Err(Error::NotFinitelyGenerated { .. }) | Err(Error::NoDeductionProperty(_))
        ));
    }

    #[test]
    fn axiom_clause() {
        let s = parse_script("logic DHMSH\npremises:\n- y ; hypothesis\n1. x => (x | y) ; axiom A1\n").unwrap();
        let t = deduction_transform(&s, 1).unwrap();
        assert!(check_proof(&t).accepted, "{}", t.render());
        assert_eq!(t.conclusion().unwrap(), &parse("y => (x => (x | y))").unwrap());
        assert!(t.premises.is_empty());
    }
}

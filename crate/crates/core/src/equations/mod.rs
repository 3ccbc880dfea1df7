//! Identities, exhaustive validity checks, the named catalog and base
//! verification.

use std::fmt;

use serde::Serialize;

use crate::algebra::{for_each_assignment, Elem, FiniteAlgebra, Program};
use crate::error::{Error, Result};
use crate::formula::{self, iff_h, imp_h, join_all, meet, var, Formula, Tok};

pub mod bases;
pub mod catalog;

pub use bases::{verify_base, BaseEntry, BaseReport, ProbeStatus};
pub use catalog::{catalog, lookup};

/// An equation `lhs ≈ rhs`. Inequalities `u ≤ v` are stored as
/// `u ∧ v ≈ u` and keep their original sides for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: Option<String>,
    pub lhs: Formula,
    pub rhs: Formula,
    pub le: Option<(Formula, Formula)>,
}

impl Identity {
    pub fn new(lhs: Formula, rhs: Formula) -> Identity {
        Identity {
            name: None,
            lhs,
            rhs,
            le: None,
        }
    }

    /// `u ≤ v`, normalized to `u ∧ v ≈ u`.
    pub fn le(u: Formula, v: Formula) -> Identity {
        Identity {
            name: None,
            lhs: meet(u.clone(), v.clone()),
            rhs: u.clone(),
            le: Some((u, v)),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Identity {
        self.name = Some(name.into());
        self
    }

    /// Parses `f = g`, `f <= g`, or a bare `f` (read as `f = 1`).
    pub fn parse(text: &str) -> Result<Identity> {
        let toks = formula::lex(text)?;
        let mut p = formula::Parser::new(&toks, text.len());
        let lhs = p.formula()?;
        let id = match p.peek() {
            None => Identity::new(lhs, Formula::Top),
            Some(Tok::Eq) => {
                p.bump();
                Identity::new(lhs, p.formula()?)
            }
            Some(Tok::Le) => {
                p.bump();
                Identity::le(lhs, p.formula()?)
            }
            Some(_) => return Err(p.error(&["`=`", "`<=`", "end of input"])),
        };
        if !p.at_end() {
            return Err(p.error(&["end of input"]));
        }
        Ok(id)
    }

    /// Variables of both sides in first-occurrence order.
    pub fn vars(&self) -> Vec<String> {
        let mut v = self.lhs.vars();
        for w in self.rhs.vars() {
            if !v.contains(&w) {
                v.push(w);
            }
        }
        v
    }

    /// The display form, `u <= v` for inequalities.
    pub fn render(&self) -> String {
        match &self.le {
            Some((u, v)) => format!("{} <= {}", u.render_sugared(), v.render_sugared()),
            None => format!("{} = {}", self.lhs.render_sugared(), self.rhs.render_sugared()),
        }
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.render())
    }

    /// The formula whose theoremhood in a logic corresponds to this
    /// identity: `t` for `t ≈ 1`, `u →H v` for `u ≤ v`, and `lhs ↔H rhs`
    /// otherwise.
    pub fn to_formula(&self) -> Formula {
        if let Some((u, v)) = &self.le {
            return imp_h(u.clone(), v.clone());
        }
        if self.rhs == Formula::Top {
            return self.lhs.clone();
        }
        if self.lhs == Formula::Top {
            return self.rhs.clone();
        }
        iff_h(self.lhs.clone(), self.rhs.clone())
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}: {}", self.render()),
            None => f.write_str(&self.render()),
        }
    }
}

/// A failing valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub vars: Vec<String>,
    pub values: Vec<Elem>,
    pub lhs: Elem,
    pub rhs: Elem,
}

impl Counterexample {
    pub fn value_of(&self, var: &str) -> Option<Elem> {
        self.vars.iter().position(|v| v == var).map(|i| self.values[i])
    }

    /// `x=1, y=a (lhs 1, rhs a)` with the algebra's labels.
    pub fn describe(&self, a: &FiniteAlgebra) -> String {
        let asg = a.show_assignment(&self.vars, &self.values);
        let asg = if asg.is_empty() {
            "no variables".to_string()
        } else {
            asg
        };
        format!("{asg} (lhs {}, rhs {})", a.label(self.lhs), a.label(self.rhs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoldsReport {
    /// Number of valuations evaluated; `n^k` when the identity holds.
    pub valuations: u64,
    pub counterexample: Option<Counterexample>,
}

impl HoldsReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Exhaustive check of `id` in `a`, stopping at the first failing
/// valuation in lexicographic order.
pub fn holds(a: &FiniteAlgebra, id: &Identity) -> Result<HoldsReport> {
    let vars = id.vars();
    let l = Program::compile_with_vars(&id.lhs, &vars)?;
    let r = Program::compile_with_vars(&id.rhs, &vars)?;
    l.check(a)?;
    r.check(a)?;
    let mut stack = Vec::new();
    let mut failure = None;
    let valuations = for_each_assignment(a.order(), vars.len(), |asg| {
        let lv = l.eval(a, asg, &mut stack);
        let rv = r.eval(a, asg, &mut stack);
        if lv != rv {
            failure = Some(Counterexample {
                vars: vars.clone(),
                values: asg.to_vec(),
                lhs: lv,
                rhs: rv,
            });
            false
        } else {
            true
        }
    });
    Ok(HoldsReport {
        valuations,
        counterexample: failure,
    })
}

/// Convenience wrapper: true iff `id` holds in `a`.
pub fn satisfies(a: &FiniteAlgebra, id: &Identity) -> Result<bool> {
    Ok(holds(a, id)?.passed())
}

/// Every valuation at which `id` fails, in lexicographic order.
pub fn all_failures(a: &FiniteAlgebra, id: &Identity) -> Result<Vec<Counterexample>> {
    let vars = id.vars();
    let l = Program::compile_with_vars(&id.lhs, &vars)?;
    let r = Program::compile_with_vars(&id.rhs, &vars)?;
    l.check(a)?;
    r.check(a)?;
    let mut stack = Vec::new();
    let mut out = Vec::new();
    for_each_assignment(a.order(), vars.len(), |asg| {
        let lv = l.eval(a, asg, &mut stack);
        let rv = r.eval(a, asg, &mut stack);
        if lv != rv {
            out.push(Counterexample {
                vars: vars.clone(),
                values: asg.to_vec(),
                lhs: lv,
                rhs: rv,
            });
        }
        true
    });
    Ok(out)
}

/// True iff `x → 0 = x′` for every element.
pub fn holds_pointwise_star_eq_neg(a: &FiniteAlgebra) -> Result<bool> {
    a.require_neg()?;
    Ok(a.elements().all(|x| a.star(x) == a.n(x)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainIdentityKind {
    /// The De Morgan Heyting chain axiom, `n >= 2`.
    Dmhc3,
    /// The dually pseudocomplemented Heyting chain axiom, `n >= 3`.
    An,
}

/// `x1 ∨ … ∨ xn ∨ (x1→x2) ∨ … ∨ (x(n-1)→xn) ≈ 1`.
pub fn chain_identity(kind: ChainIdentityKind, n: usize) -> Result<Identity> {
    let (min, tag) = match kind {
        ChainIdentityKind::Dmhc3 => (2, "DMHC3"),
        ChainIdentityKind::An => (3, "A"),
    };
    if n < min {
        return Err(Error::ChainParameter { n, min });
    }
    Ok(chain_identity_unchecked(n).named(format!("{tag}_{n}")))
}

/// Same formula without the parameter floor; `n >= 1`.
pub fn chain_identity_unchecked(n: usize) -> Identity {
    assert!(n >= 1);
    let xs: Vec<Formula> = (1..=n).map(|i| var(&format!("x{i}"))).collect();
    let mut parts = xs.clone();
    for w in xs.windows(2) {
        parts.push(formula::imp(w[0].clone(), w[1].clone()));
    }
    Identity::new(join_all(parts), Formula::Top)
}

//! Finite algebras given by operation tables.
//!
//! Elements are 0-based indices into the carrier. The bottom and top are
//! stored as indices and need not be the first and last element.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::Formula;

pub mod classes;
pub mod format;
pub mod library;
pub mod ops;

pub use classes::{check_class, is_semiheyting, ClassReport, ClassSpec};
pub use ops::{
    congruences, dual_pseudocomplement_expand, embedding, enumerate_sh, essentially_stone_expand, expand_dm, expand_dp,
    isomorphic, product, quotient, subalgebra_generated, DpcAbsent, EnumerateOptions, Subalgebra,
};

/// Element index.
pub type Elem = u16;

/// Assignment of element indices to variable names.
pub type Valuation = BTreeMap<String, Elem>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    pub name: String,
    pub labels: Vec<String>,
    pub bottom: Elem,
    pub top: Elem,
    /// Row-major `n × n` tables.
    pub meet: Vec<Elem>,
    pub join: Vec<Elem>,
    pub imp: Vec<Elem>,
    /// Absent for plain semi-Heyting algebras.
    pub neg: Option<Vec<Elem>>,
}

impl FiniteAlgebra {
    /// Builds an algebra and validates ranges and the bounded-lattice laws.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        bottom: Elem,
        top: Elem,
        meet: Vec<Elem>,
        join: Vec<Elem>,
        imp: Vec<Elem>,
        neg: Option<Vec<Elem>>,
    ) -> Result<FiniteAlgebra> {
        let a = FiniteAlgebra {
            name: name.into(),
            labels,
            bottom,
            top,
            meet,
            join,
            imp,
            neg,
        };
        a.validate()?;
        Ok(a)
    }

    /// Builds an algebra whose lattice reduct is read off a partial order.
    pub fn from_order(
        name: impl Into<String>,
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
        imp: Vec<Elem>,
        neg: Option<Vec<Elem>>,
    ) -> Result<FiniteAlgebra> {
        let name = name.into();
        let n = labels.len();
        let (meet, join) = lattice_from_order(n, &leq).ok_or_else(|| Error::InvalidAlgebra {
            name: name.clone(),
            reason: "order is not a lattice".into(),
        })?;
        let bottom = (0..n).find(|&x| (0..n).all(|y| leq(x, y)));
        let top = (0..n).find(|&x| (0..n).all(|y| leq(y, x)));
        match (bottom, top) {
            (Some(b), Some(t)) => FiniteAlgebra::new(name, labels, b as Elem, t as Elem, meet, join, imp, neg),
            _ => Err(Error::InvalidAlgebra {
                name,
                reason: "order has no bottom or no top".into(),
            }),
        }
    }

    fn invalid(&self, reason: String) -> Error {
        Error::InvalidAlgebra {
            name: self.name.clone(),
            reason,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.labels.len();
        if n == 0 {
            return Err(self.invalid("empty carrier".into()));
        }
        if n > Elem::MAX as usize {
            return Err(self.invalid(format!("order {n} too large")));
        }
        for (i, l) in self.labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(self.invalid(format!("bad label `{l}`")));
            }
            if self.labels[..i].contains(l) {
                return Err(self.invalid(format!("duplicate label `{l}`")));
            }
        }
        for (tname, t) in [("meet", &self.meet), ("join", &self.join), ("imp", &self.imp)] {
            if t.len() != n * n {
                return Err(self.invalid(format!("{tname} table has {} entries, want {}", t.len(), n * n)));
            }
            if let Some(bad) = t.iter().find(|&&v| v as usize >= n) {
                return Err(self.invalid(format!("{tname} table entry {bad} out of range")));
            }
        }
        if let Some(neg) = &self.neg {
            if neg.len() != n {
                return Err(self.invalid(format!("neg table has {} entries, want {n}", neg.len())));
            }
            if let Some(bad) = neg.iter().find(|&&v| v as usize >= n) {
                return Err(self.invalid(format!("neg table entry {bad} out of range")));
            }
        }
        if self.bottom as usize >= n || self.top as usize >= n {
            return Err(self.invalid("bottom or top out of range".into()));
        }
        let e = |x: usize| x as Elem;
        for x in 0..n {
            if self.m(e(x), e(x)) != e(x) || self.j(e(x), e(x)) != e(x) {
                return Err(self.invalid(format!("idempotence fails at {}", self.labels[x])));
            }
            if self.m(e(x), self.bottom) != self.bottom || self.j(e(x), self.top) != self.top {
                return Err(self.invalid(format!("bounds fail at {}", self.labels[x])));
            }
            for y in 0..n {
                let (ex, ey) = (e(x), e(y));
                if self.m(ex, ey) != self.m(ey, ex) || self.j(ex, ey) != self.j(ey, ex) {
                    return Err(self.invalid(format!("commutativity fails at {}, {}", self.labels[x], self.labels[y])));
                }
                if self.m(ex, self.j(ex, ey)) != ex || self.j(ex, self.m(ex, ey)) != ex {
                    return Err(self.invalid(format!("absorption fails at {}, {}", self.labels[x], self.labels[y])));
                }
                for z in 0..n {
                    let ez = e(z);
                    if self.m(self.m(ex, ey), ez) != self.m(ex, self.m(ey, ez))
                        || self.j(self.j(ex, ey), ez) != self.j(ex, self.j(ey, ez))
                    {
                        return Err(self.invalid(format!(
                            "associativity fails at {}, {}, {}",
                            self.labels[x], self.labels[y], self.labels[z]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order() as Elem
    }

    #[inline]
    pub fn m(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a as usize * self.order() + b as usize]
    }

    #[inline]
    pub fn j(&self, a: Elem, b: Elem) -> Elem {
        self.join[a as usize * self.order() + b as usize]
    }

    #[inline]
    pub fn i(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a as usize * self.order() + b as usize]
    }

    /// Negation; panics when the algebra has no negation table.
    #[inline]
    pub fn n(&self, a: Elem) -> Elem {
        self.neg.as_ref().expect("algebra without negation")[a as usize]
    }

    /// Pseudocomplement `a → 0`.
    pub fn star(&self, a: Elem) -> Elem {
        self.i(a, self.bottom)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.m(a, b) == a
    }

    pub fn has_neg(&self) -> bool {
        self.neg.is_some()
    }

    pub fn require_neg(&self) -> Result<()> {
        if self.neg.is_some() {
            Ok(())
        } else {
            Err(Error::MissingNegation {
                algebra: self.name.clone(),
            })
        }
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(|i| i as Elem)
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Copy without the negation table.
    pub fn reduct(&self) -> FiniteAlgebra {
        FiniteAlgebra {
            neg: None,
            ..self.clone()
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteAlgebra {
        self.name = name.into();
        self
    }

    /// Replaces the negation table, validating its range.
    pub fn with_neg(&self, name: impl Into<String>, neg: Vec<Elem>) -> Result<FiniteAlgebra> {
        FiniteAlgebra::new(
            name,
            self.labels.clone(),
            self.bottom,
            self.top,
            self.meet.clone(),
            self.join.clone(),
            self.imp.clone(),
            Some(neg),
        )
    }

    /// Renders a valuation with element labels, e.g. `x=1, y=a`.
    pub fn show_assignment(&self, vars: &[String], values: &[Elem]) -> String {
        vars.iter()
            .zip(values)
            .map(|(v, &e)| format!("{v}={}", self.label(e)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::render(self))
    }
}

/// Meet and join tables of a finite partial order, or `None` if some pair
/// lacks a greatest lower or least upper bound.
pub fn lattice_from_order(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Option<(Vec<Elem>, Vec<Elem>)> {
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&c| leq(c, a) && leq(c, b)).collect();
            let glb = lower.iter().copied().find(|&c| lower.iter().all(|&d| leq(d, c)))?;
            let upper: Vec<usize> = (0..n).filter(|&c| leq(a, c) && leq(b, c)).collect();
            let lub = upper.iter().copied().find(|&c| upper.iter().all(|&d| leq(c, d)))?;
            meet[a * n + b] = glb as Elem;
            join[a * n + b] = lub as Elem;
        }
    }
    Some((meet, join))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Instr {
    Var(usize),
    Bot,
    Top,
    Neg,
    Meet,
    Join,
    Imp,
}

/// A formula compiled to postfix code over a fixed variable order.
#[derive(Clone, Debug)]
pub struct Program {
    code: Vec<Instr>,
    vars: Vec<String>,
    uses_neg: bool,
}

impl Program {
    /// Compiles with variables in first-occurrence order.
    pub fn compile(f: &Formula) -> Program {
        let vars = f.vars();
        Program::compile_with_vars(f, &vars).expect("own variables are bound")
    }

    /// Compiles against an explicit variable list, which may contain extra
    /// variables.
    pub fn compile_with_vars(f: &Formula, vars: &[String]) -> Result<Program> {
        let mut code = Vec::with_capacity(f.size());
        let mut uses_neg = false;
        emit(f, vars, &mut code, &mut uses_neg)?;
        Ok(Program {
            code,
            vars: vars.to_vec(),
            uses_neg,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn uses_neg(&self) -> bool {
        self.uses_neg
    }

    /// Errors if the program needs a negation table the algebra lacks.
    pub fn check(&self, a: &FiniteAlgebra) -> Result<()> {
        if self.uses_neg {
            a.require_neg()
        } else {
            Ok(())
        }
    }

    /// Evaluates under `assign` (indexed like [`Program::vars`]). The caller
    /// must have run [`Program::check`].
    pub fn eval(&self, a: &FiniteAlgebra, assign: &[Elem], stack: &mut Vec<Elem>) -> Elem {
        stack.clear();
        for ins in &self.code {
            let v = match *ins {
                Instr::Var(i) => assign[i],
                Instr::Bot => a.bottom,
                Instr::Top => a.top,
                Instr::Neg => {
                    let x = stack.pop().unwrap();
                    a.n(x)
                }
                Instr::Meet | Instr::Join | Instr::Imp => {
                    let y = stack.pop().unwrap();
                    let x = stack.pop().unwrap();
                    match ins {
                        Instr::Meet => a.m(x, y),
                        Instr::Join => a.j(x, y),
                        _ => a.i(x, y),
                    }
                }
            };
            stack.push(v);
        }
        stack[0]
    }

    /// Evaluates over a product of coordinate algebras, one value per
    /// coordinate. Used by the free-algebra closure.
    pub fn eval_vec(&self, algs: &[&FiniteAlgebra], assign: &[Vec<Elem>]) -> Vec<Elem> {
        let mut stack = Vec::new();
        (0..algs.len())
            .map(|c| {
                let point: Vec<Elem> = assign.iter().map(|v| v[c]).collect();
                self.eval(algs[c], &point, &mut stack)
            })
            .collect()
    }
}

fn emit(f: &Formula, vars: &[String], code: &mut Vec<Instr>, uses_neg: &mut bool) -> Result<()> {
    match f {
        Formula::Var(v) => {
            let i = vars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            code.push(Instr::Var(i));
        }
        Formula::Bot => code.push(Instr::Bot),
        Formula::Top => code.push(Instr::Top),
        Formula::Neg(a) => {
            emit(a, vars, code, uses_neg)?;
            *uses_neg = true;
            code.push(Instr::Neg);
        }
        Formula::Meet(a, b) | Formula::Join(a, b) | Formula::Imp(a, b) => {
            emit(a, vars, code, uses_neg)?;
            emit(b, vars, code, uses_neg)?;
            code.push(match f {
                Formula::Meet(..) => Instr::Meet,
                Formula::Join(..) => Instr::Join,
                _ => Instr::Imp,
            });
        }
    }
    Ok(())
}

/// Interpretation of `f` in `a` under `v`.
pub fn evaluate(f: &Formula, a: &FiniteAlgebra, v: &Valuation) -> Result<Elem> {
    let prog = Program::compile(f);
    prog.check(a)?;
    let mut assign = Vec::with_capacity(prog.vars().len());
    for name in prog.vars() {
        let e = *v.get(name).ok_or_else(|| Error::UnboundVariable(name.clone()))?;
        if e as usize >= a.order() {
            return Err(Error::InvalidAlgebra {
                name: a.name.clone(),
                reason: format!("valuation value {e} out of range"),
            });
        }
        assign.push(e);
    }
    Ok(prog.eval(a, &assign, &mut Vec::new()))
}

/// Visits every assignment of `k` variables over `n` elements in
/// lexicographic order (last variable fastest) until `visit` returns false.
/// Returns the number of assignments visited.
pub fn for_each_assignment(n: usize, k: usize, mut visit: impl FnMut(&[Elem]) -> bool) -> u64 {
    let mut cur = vec![0 as Elem; k];
    let mut count = 0u64;
    if n == 0 {
        return 0;
    }
    loop {
        count += 1;
        if !visit(&cur) {
            return count;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            cur[i] += 1;
            if (cur[i] as usize) < n {
                break;
            }
            cur[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn odometer_counts() {
        assert_eq!(for_each_assignment(3, 2, |_| true), 9);
        assert_eq!(for_each_assignment(4, 0, |_| true), 1);
        let mut seen = Vec::new();
        for_each_assignment(2, 2, |a| {
            seen.push(a.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn evaluate_examples() {
        let a = library::get("2bare").unwrap();
        let v = Valuation::new();
        assert_eq!(evaluate(&parse("0 -> 1").unwrap(), &a, &v).unwrap(), a.bottom);
        let l1 = library::get("L1").unwrap();
        let e = evaluate(&parse("1 -> a").unwrap(), &l1, &v);
        assert!(e.is_err());
        let mut v = Valuation::new();
        v.insert("x".into(), l1.top);
        v.insert("y".into(), l1.index_of("a").unwrap());
        assert_eq!(
            evaluate(&parse("x -> y").unwrap(), &l1, &v).unwrap(),
            l1.index_of("a").unwrap()
        );
    }

    #[test]
    fn neg_on_plain_algebra_errors() {
        let l1 = library::get("L1").unwrap();
        let mut v = Valuation::new();
        v.insert("x".into(), 0);
        assert!(matches!(
            evaluate(&parse("x'").unwrap(), &l1, &v),
            Err(Error::MissingNegation { .. })
        ));
    }

    #[test]
    fn rejects_non_lattice() {
        let labels: Vec<String> = ["0", "1"].iter().map(|s| s.to_string()).collect();
        let bad = FiniteAlgebra::new(
            "bad",
            labels,
            0,
            1,
            vec![0, 1, 0, 1],
            vec![0, 1, 1, 1],
            vec![1, 1, 0, 1],
            None,
        );
        assert!(bad.is_err());
    }
}

//! Bounded forward search.
//!
//! Level 1 holds the premises and every axiom instance whose metavariables
//! range over subformulas of the goal and premises plus `0` and `1`. Each
//! further level applies the logic's rules to everything known so far.
//! The first level containing the goal yields the script. No completeness
//! is claimed.

use std::collections::HashMap;

use super::{cp_of, schemas, scp_of, Justification, Premise, PremiseNote, ProofLine, ProofScript};
use crate::error::Result;
use crate::formula::{Formula, Substitution};
use crate::varieties::{logic, Rule};

const MAX_ATOMS: usize = 16;
const MAX_POOL: usize = 400_000;

#[derive(Clone)]
enum How {
    Premise(usize),
    Axiom(String, Substitution),
    Smp(usize, usize),
    Scp(usize),
    Mp(usize, usize),
    Cp(usize),
}

struct Pool {
    nodes: Vec<(Formula, How)>,
    index: HashMap<Formula, usize>,
}

impl Pool {
    fn add(&mut self, f: Formula, how: How) {
        if !self.index.contains_key(&f) {
            self.index.insert(f.clone(), self.nodes.len());
            self.nodes.push((f, how));
        }
    }
}

fn atoms(premises: &[Formula], goal: &Formula) -> Vec<Formula> {
    let mut out: Vec<Formula> = Vec::new();
    for f in premises.iter().chain(std::iter::once(goal)) {
        for s in f.subformulas() {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.sort_by_key(Formula::size);
    out.truncate(MAX_ATOMS - 2);
    for c in [Formula::Top, Formula::Bot] {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Searches for a derivation of `goal` from `premises` in at most
/// `depth_cap` levels. `Ok(None)` means nothing was found within the bound.
pub fn search_proof(
    logic_name: &str,
    premises: &[Formula],
    goal: &Formula,
    depth_cap: usize,
) -> Result<Option<ProofScript>> {
    let l = logic(logic_name)?;
    if depth_cap == 0 {
        return Ok(None);
    }
    let mut pool = Pool {
        nodes: Vec::new(),
        index: HashMap::new(),
    };
    for (i, p) in premises.iter().enumerate() {
        pool.add(p.clone(), How::Premise(i + 1));
    }
    let atoms = atoms(premises, goal);
    for sc in schemas(logic_name)? {
        let metas = sc.template.vars();
        let total = atoms.len().checked_pow(metas.len() as u32).unwrap_or(usize::MAX);
        if total > MAX_POOL / 4 {
            continue;
        }
        for mut code in 0..total {
            let mut s = Substitution::new();
            for m in &metas {
                s.insert(m.clone(), atoms[code % atoms.len()].clone());
                code /= atoms.len();
            }
            let f = sc.template.substitute(&s)?;
            pool.add(f, How::Axiom(sc.name.clone(), s));
        }
    }
    let scp_bound = goal.size() + 4;
    let mut level = 1;
    while !pool.index.contains_key(goal) && level < depth_cap && pool.nodes.len() < MAX_POOL {
        level += 1;
        let mut fresh: Vec<(Formula, How)> = Vec::new();
        let mut seen: HashMap<Formula, ()> = HashMap::new();
        let mut offer = |f: Formula, how: How, pool: &Pool| {
            if !pool.index.contains_key(&f) && !seen.contains_key(&f) {
                seen.insert(f.clone(), ());
                fresh.push((f, how));
            }
        };
        for (idx, (f, _)) in pool.nodes.iter().enumerate() {
            if l.rules.contains(&Rule::Smp) {
                if let Some((a, g)) = f.as_imp_h() {
                    if let Some(&ia) = pool.index.get(a) {
                        offer(g.clone(), How::Smp(ia, idx), &pool);
                    }
                }
            }
            if l.rules.contains(&Rule::Mp) {
                if let Formula::Imp(a, g) = f {
                    if let Some(&ia) = pool.index.get(a.as_ref()) {
                        offer((**g).clone(), How::Mp(ia, idx), &pool);
                    }
                }
            }
            if l.rules.contains(&Rule::Scp) {
                if let Some(g) = scp_of(f).filter(|g| g.size() <= scp_bound) {
                    offer(g, How::Scp(idx), &pool);
                }
            }
            if l.rules.contains(&Rule::Cp) {
                if let Some(g) = cp_of(f).filter(|g| g.size() <= scp_bound) {
                    offer(g, How::Cp(idx), &pool);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        for (f, how) in fresh {
            pool.add(f, how);
        }
    }
    let Some(&target) = pool.index.get(goal) else {
        return Ok(None);
    };
    // emit the needed nodes children-first
    let mut line_of: HashMap<usize, usize> = HashMap::new();
    let mut lines: Vec<ProofLine> = Vec::new();
    let mut stack = vec![(target, false)];
    while let Some((n, expanded)) = stack.pop() {
        if line_of.contains_key(&n) {
            continue;
        }
        let how = &pool.nodes[n].1;
        let deps: Vec<usize> = match how {
            How::Smp(a, b) | How::Mp(a, b) => vec![*a, *b],
            How::Scp(a) | How::Cp(a) => vec![*a],
            _ => Vec::new(),
        };
        if !expanded {
            stack.push((n, true));
            for d in deps.into_iter().rev() {
                if !line_of.contains_key(&d) {
                    stack.push((d, false));
                }
            }
            continue;
        }
        let j = match how.clone() {
            How::Premise(i) => Justification::Premise { index: i },
            How::Axiom(schema, s) => Justification::Axiom { schema, subst: Some(s) },
            How::Smp(a, b) => Justification::Smp {
                minor: line_of[&a],
                major: line_of[&b],
            },
            How::Mp(a, b) => Justification::Mp {
                minor: line_of[&a],
                major: line_of[&b],
            },
            How::Scp(a) => Justification::Scp { from: line_of[&a] },
            How::Cp(a) => Justification::Cp { from: line_of[&a] },
        };
        lines.push(ProofLine {
            formula: pool.nodes[n].0.clone(),
            justification: j,
        });
        line_of.insert(n, lines.len());
    }
    Ok(Some(ProofScript {
        logic: l.name.clone(),
        premises: premises
            .iter()
            .map(|f| Premise {
                formula: f.clone(),
                note: PremiseNote::Plain,
            })
            .collect(),
        lines,
    }))
}

#[cfg(test)]
mod tests {
    use super::super::check_proof;
    use super::*;
    use crate::formula::parse;

    fn found(logic: &str, prem: &[&str], goal: &str, depth: usize) -> Option<ProofScript> {
        let prem: Vec<Formula> = prem.iter().map(|p| parse(p).unwrap()).collect();
        let s = search_proof(logic, &prem, &parse(goal).unwrap(), depth).unwrap();
        if let Some(s) = &s {
            assert!(check_proof(s).accepted, "{}", s.render());
            assert_eq!(s.conclusion().unwrap(), &parse(goal).unwrap());
        }
        s
    }

    #[test]
    fn examples() {
        assert_eq!(found("DHMSH", &[], "1", 1).unwrap().lines.len(), 1);
        let s = found("DHMSH", &["x => y"], "y' => x'", 2).unwrap();
        assert_eq!(s.lines.len(), 2);
        assert!(found("DHMSH", &["x => y"], "y' => x'", 1).is_none());
        assert!(found("DHMSH", &[], "(x | y)' => (x' & y')", 4).is_some());
        assert!(found("DHMSH", &[], "(x => y) => (y' => x')", 3).is_none());
        assert!(found("LM", &["x"], "x''", 2).is_some());
    }
}

//! Proof-script text format.
//!
//! ```text
//! logic DHMSH
//! premises:
//! - x => y
//! - (x => y) => ((y => z) => (x => z)) ; cited transitivity
//! 1. x => y ; premise 1
//! 2. (x | y)' => x' ; scp 1
//! 3. 1 ; axiom A6
//! 4. x => (x | y) ; axiom A1 [α=x, β=y]
//! ```
//!
//! Premise items may carry `; hypothesis` or `; cited NAME`. Substitution
//! keys may be spelled `alpha`, `beta`, `gamma`, `delta`, `epsilon`.
//! `#` starts a comment.

use super::{Justification, Premise, PremiseNote, ProofLine, ProofScript};
use crate::error::{Error, Result};
use crate::formula::{parse, Substitution};
use crate::varieties::logic;

const KEY_ALIASES: [(&str, &str); 5] = [
    ("alpha", "α"),
    ("beta", "β"),
    ("gamma", "γ"),
    ("delta", "δ"),
    ("epsilon", "ε"),
];

fn bad(line: usize, reason: impl Into<String>) -> Error {
    Error::ProofFormat {
        line,
        reason: reason.into(),
    }
}

fn formula_at(line: usize, text: &str) -> Result<crate::formula::Formula> {
    parse(text).map_err(|e| bad(line, e.to_string()))
}

fn index(line: usize, tok: Option<&str>) -> Result<usize> {
    let t = tok.ok_or_else(|| bad(line, "missing line index"))?;
    t.parse::<usize>()
        .map_err(|_| bad(line, format!("`{t}` is not a line index")))
}

fn parse_subst(line: usize, text: &str) -> Result<Substitution> {
    let mut s = Substitution::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| bad(line, format!("expected `key=formula`, got `{part}`")))?;
        let k = k.trim();
        let key = KEY_ALIASES
            .iter()
            .find(|(a, _)| *a == k)
            .map(|(_, g)| g.to_string())
            .unwrap_or_else(|| k.to_string());
        if s.insert(key, formula_at(line, v)?).is_some() {
            return Err(bad(line, format!("metavariable `{k}` bound twice")));
        }
    }
    Ok(s)
}

fn parse_justification(line: usize, text: &str) -> Result<Justification> {
    let text = text.trim();
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    if head == "axiom" {
        let (name, subst) = match rest.split_once('[') {
            Some((n, s)) => {
                let inner = s
                    .trim_end()
                    .strip_suffix(']')
                    .ok_or_else(|| bad(line, "unclosed `[` in substitution"))?;
                (n.trim(), Some(parse_subst(line, inner)?))
            }
            None => (rest.trim(), None),
        };
        if name.is_empty() {
            return Err(bad(line, "axiom without a schema name"));
        }
        return Ok(Justification::Axiom {
            schema: name.to_string(),
            subst,
        });
    }
    let mut toks = rest.split_whitespace();
    let j = match head {
        "premise" => Justification::Premise {
            index: index(line, toks.next())?,
        },
        "smp" | "mp" => {
            let minor = index(line, toks.next())?;
            let major = index(line, toks.next())?;
            if head == "smp" {
                Justification::Smp { minor, major }
            } else {
                Justification::Mp { minor, major }
            }
        }
        "scp" => Justification::Scp {
            from: index(line, toks.next())?,
        },
        "cp" => Justification::Cp {
            from: index(line, toks.next())?,
        },
        other => return Err(bad(line, format!("unknown justification `{other}`"))),
    };
    if let Some(extra) = toks.next() {
        return Err(bad(line, format!("unexpected `{extra}`")));
    }
    Ok(j)
}

pub fn parse_script(text: &str) -> Result<ProofScript> {
    let mut logic_name: Option<String> = None;
    let mut in_premises = false;
    let mut premises = Vec::new();
    let mut lines: Vec<ProofLine> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if logic_name.is_none() {
            let name = body
                .strip_prefix("logic ")
                .map(str::trim)
                .ok_or_else(|| bad(ln, "script must start with `logic NAME`"))?;
            logic(name).map_err(|e| bad(ln, e.to_string()))?;
            logic_name = Some(name.to_string());
            continue;
        }
        if body == "premises:" {
            if in_premises || !premises.is_empty() || !lines.is_empty() {
                return Err(bad(ln, "`premises:` must come once, before the proof lines"));
            }
            in_premises = true;
            continue;
        }
        if let Some(item) = body.strip_prefix('-') {
            if !in_premises || !lines.is_empty() {
                return Err(bad(ln, "premise item outside the `premises:` block"));
            }
            let (f, note) = match item.split_once(';') {
                Some((f, n)) => {
                    let n = n.trim();
                    let note = if n == "hypothesis" {
                        PremiseNote::Hypothesis
                    } else if let Some(name) = n.strip_prefix("cited") {
                        PremiseNote::Cited(name.trim().to_string())
                    } else {
                        return Err(bad(ln, format!("unknown premise note `{n}`")));
                    };
                    (f, note)
                }
                None => (item, PremiseNote::Plain),
            };
            premises.push(Premise {
                formula: formula_at(ln, f)?,
                note,
            });
            continue;
        }
        let (num, rest) = body
            .split_once('.')
            .ok_or_else(|| bad(ln, "expected `n. formula ; justification`"))?;
        let n: usize = num
            .trim()
            .parse()
            .map_err(|_| bad(ln, format!("`{}` is not a line number", num.trim())))?;
        if n != lines.len() + 1 {
            return Err(bad(ln, format!("expected line number {}, got {n}", lines.len() + 1)));
        }
        let (f, j) = rest
            .split_once(';')
            .ok_or_else(|| bad(ln, "missing `; justification`"))?;
        lines.push(ProofLine {
            formula: formula_at(ln, f)?,
            justification: parse_justification(ln, j)?,
        });
    }
    let logic = logic_name.ok_or_else(|| bad(0, "empty script"))?;
    Ok(ProofScript { logic, premises, lines })
}

pub fn render(s: &ProofScript) -> String {
    let mut out = format!("logic {}\n", s.logic);
    if !s.premises.is_empty() {
        out.push_str("premises:\n");
        for p in &s.premises {
            out.push_str(&format!("- {}", p.formula.render_sugared()));
            match &p.note {
                PremiseNote::Plain => {}
                PremiseNote::Hypothesis => out.push_str(" ; hypothesis"),
                PremiseNote::Cited(n) => out.push_str(&format!(" ; cited {n}")),
            }
            out.push('\n');
        }
    }
    for (k, l) in s.lines.iter().enumerate() {
        let j = match &l.justification {
            Justification::Axiom { schema, subst: None } => format!("axiom {schema}"),
            Justification::Axiom {
                schema,
                subst: Some(sub),
            } => {
                let parts: Vec<String> = sub.iter().map(|(k, v)| format!("{k}={}", v.render_sugared())).collect();
                if parts.is_empty() {
                    format!("axiom {schema}")
                } else {
                    format!("axiom {schema} [{}]", parts.join(", "))
                }
            }
            Justification::Premise { index } => format!("premise {index}"),
            Justification::Smp { minor, major } => format!("smp {minor} {major}"),
            Justification::Mp { minor, major } => format!("mp {minor} {major}"),
            Justification::Scp { from } => format!("scp {from}"),
            Justification::Cp { from } => format!("cp {from}"),
        };
        out.push_str(&format!("{}. {} ; {j}\n", k + 1, l.formula.render_sugared()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "logic DHMSH\npremises:\n- x => y\n- z ; hypothesis\n- 1 => 1 ; cited reflexivity\n\
                    1. x => y ; premise 1\n2. y' => x' ; scp 1\n3. x => x | y ; axiom A1 [α=x, β=y]\n4. 1 ; axiom A6\n";
        let s = parse_script(text).unwrap();
        assert_eq!(s.premises.len(), 3);
        assert_eq!(s.hypothesis(), Some(2));
        assert_eq!(s.render(), text);
        assert_eq!(parse_script(&s.render()).unwrap(), s);
    }

    #[test]
    fn aliases_and_errors() {
        let s = parse_script("logic DHMSH\n1. x => (x | y) ; axiom A1 [alpha=x, beta = y]").unwrap();
        assert!(super::super::check_proof(&s).accepted);
        let cases = [
            ("1. 1 ; axiom A6", 1),
            ("logic Nope\n", 1),
            ("logic DHMSH\n2. 1 ; axiom A6", 2),
            ("logic DHMSH\n1. 1 ; frobnicate 2", 2),
            ("logic DHMSH\n1. 1 & ; axiom A6", 2),
            ("logic DHMSH\n1. 1 ; axiom A1 [α=x", 2),
            ("logic DHMSH\n1. 1 ; axiom A6\n- x", 3),
            ("logic DHMSH\n1. 1", 2),
        ];
        for (text, line) in cases {
            match parse_script(text) {
                Err(Error::ProofFormat { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}

//! Formula language over `{∧, ∨, →, ′, ⊥, ⊤}`.
//!
//! Concrete syntax (ASCII, Unicode aliases in parentheses):
//!
//! ```text
//! formula := join (("->" | "=>" | "<=>") formula)?
//! join    := meet ("|" meet)*
//! meet    := unary ("&" unary)*
//! unary   := atom ("'" | "*")* | "~" unary
//! atom    := ident | "0" | "1" | "bot" | "top" | "(" formula ")"
//! ```
//!
//! `->` is right-associative and binds loosest; `&` and `|` fold to the left.
//! Three sugar forms expand at parse time and never appear in the AST:
//! `a => b` is `a -> (a & b)`, `a <=> b` is `(a => b) & (b => a)`, and the
//! postfix `a*` is `a -> 0`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Bot,
    Top,
    Neg(Box<Formula>),
    Meet(Box<Formula>, Box<Formula>),
    Join(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

/// Mapping from variable names to formulas.
pub type Substitution = BTreeMap<String, Formula>;

pub fn var(name: &str) -> Formula {
    Formula::Var(name.to_string())
}

pub fn neg(a: Formula) -> Formula {
    Formula::Neg(Box::new(a))
}

pub fn meet(a: Formula, b: Formula) -> Formula {
    Formula::Meet(Box::new(a), Box::new(b))
}

pub fn join(a: Formula, b: Formula) -> Formula {
    Formula::Join(Box::new(a), Box::new(b))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Imp(Box::new(a), Box::new(b))
}

/// `a →H b`, i.e. `a → (a ∧ b)`.
pub fn imp_h(a: Formula, b: Formula) -> Formula {
    imp(a.clone(), meet(a, b))
}

/// Pseudocomplement `a* = a → ⊥`.
pub fn star(a: Formula) -> Formula {
    imp(a, Formula::Bot)
}

/// `a⁺ = a′*′`.
pub fn plus(a: Formula) -> Formula {
    neg(star(neg(a)))
}

/// `a ↔H b = (a →H b) ∧ (b →H a)`.
pub fn iff_h(a: Formula, b: Formula) -> Formula {
    meet(imp_h(a.clone(), b.clone()), imp_h(b, a))
}

/// Left-folded join of a nonempty list.
pub fn join_all(items: Vec<Formula>) -> Formula {
    let mut it = items.into_iter();
    let first = it.next().expect("join_all on empty list");
    it.fold(first, join)
}

/// Left-folded meet of a nonempty list.
pub fn meet_all(items: Vec<Formula>) -> Formula {
    let mut it = items.into_iter();
    let first = it.next().expect("meet_all on empty list");
    it.fold(first, meet)
}

impl Formula {
    /// Variables in order of first occurrence (left to right).
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Formula::Bot | Formula::Top => {}
            Formula::Neg(a) => a.collect_vars(out),
            Formula::Meet(a, b) | Formula::Join(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 1,
            Formula::Neg(a) => 1 + a.size(),
            Formula::Meet(a, b) | Formula::Join(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 0,
            Formula::Neg(a) => 1 + a.depth(),
            Formula::Meet(a, b) | Formula::Join(a, b) | Formula::Imp(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Distinct subformulas in post-order (children before parents).
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut out: Vec<Formula> = Vec::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut Vec<Formula>) {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => {}
            Formula::Neg(a) => a.collect_subformulas(out),
            Formula::Meet(a, b) | Formula::Join(a, b) | Formula::Imp(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
        if !out.contains(self) {
            out.push(self.clone());
        }
    }

    /// If `self` has the shape `a → (a ∧ b)`, returns `(a, b)`.
    pub fn as_imp_h(&self) -> Option<(&Formula, &Formula)> {
        if let Formula::Imp(a, rhs) = self {
            if let Formula::Meet(a2, b) = rhs.as_ref() {
                if a == a2 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Homomorphic replacement of variables; every variable must be bound.
    pub fn substitute(&self, s: &Substitution) -> Result<Formula> {
        Ok(match self {
            Formula::Var(v) => s.get(v).cloned().ok_or_else(|| Error::UnboundVariable(v.clone()))?,
            Formula::Bot => Formula::Bot,
            Formula::Top => Formula::Top,
            Formula::Neg(a) => neg(a.substitute(s)?),
            Formula::Meet(a, b) => meet(a.substitute(s)?, b.substitute(s)?),
            Formula::Join(a, b) => join(a.substitute(s)?, b.substitute(s)?),
            Formula::Imp(a, b) => imp(a.substitute(s)?, b.substitute(s)?),
        })
    }

    /// Like [`Formula::substitute`] but leaves unbound variables in place.
    pub fn substitute_partial(&self, s: &Substitution) -> Formula {
        match self {
            Formula::Var(v) => s.get(v).cloned().unwrap_or_else(|| self.clone()),
            Formula::Bot => Formula::Bot,
            Formula::Top => Formula::Top,
            Formula::Neg(a) => neg(a.substitute_partial(s)),
            Formula::Meet(a, b) => meet(a.substitute_partial(s), b.substitute_partial(s)),
            Formula::Join(a, b) => join(a.substitute_partial(s), b.substitute_partial(s)),
            Formula::Imp(a, b) => imp(a.substitute_partial(s), b.substitute_partial(s)),
        }
    }

    /// Canonical ASCII rendering; `parse(f.render()) == f`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        write_formula(self, &mut s, false);
        s
    }

    /// Rendering that folds `a -> (a & b)` into `a => b` and `a -> 0` into
    /// `a*`. Also parses back to the same AST.
    pub fn render_sugared(&self) -> String {
        let mut s = String::new();
        write_formula(self, &mut s, true);
        s
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Serialized as its sugared text form.
impl serde::Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render_sugared())
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Formula> {
        parse(s)
    }
}

// Precedence levels: 1 implication, 2 join, 3 meet, 4 unary/atom.
fn level(f: &Formula, sugar: bool) -> u8 {
    match f {
        Formula::Imp(_, b) => {
            if sugar && **b == Formula::Bot {
                4
            } else {
                1
            }
        }
        Formula::Join(..) => 2,
        Formula::Meet(..) => 3,
        _ => 4,
    }
}

fn write_child(f: &Formula, out: &mut String, sugar: bool, min_level: u8) {
    if level(f, sugar) < min_level {
        out.push('(');
        write_formula(f, out, sugar);
        out.push(')');
    } else {
        write_formula(f, out, sugar);
    }
}

fn write_formula(f: &Formula, out: &mut String, sugar: bool) {
    match f {
        Formula::Var(v) => out.push_str(v),
        Formula::Bot => out.push('0'),
        Formula::Top => out.push('1'),
        Formula::Neg(a) => {
            write_child(a, out, sugar, 4);
            out.push('\'');
        }
        Formula::Meet(a, b) => {
            write_child(a, out, sugar, 3);
            out.push_str(" & ");
            write_child(b, out, sugar, 4);
        }
        Formula::Join(a, b) => {
            write_child(a, out, sugar, 2);
            out.push_str(" | ");
            write_child(b, out, sugar, 3);
        }
        Formula::Imp(a, b) => {
            if sugar {
                if **b == Formula::Bot {
                    write_child(a, out, sugar, 4);
                    out.push('*');
                    return;
                }
                if let Some((x, y)) = f.as_imp_h() {
                    write_child(x, out, sugar, 2);
                    out.push_str(" => ");
                    write_child(y, out, sugar, 1);
                    return;
                }
            }
            write_child(a, out, sugar, 2);
            out.push_str(" -> ");
            write_child(b, out, sugar, 1);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Zero,
    One,
    LParen,
    RParen,
    Prime,
    Star,
    Tilde,
    Amp,
    Bar,
    Arrow,
    FatArrow,
    Iff,
    /// `=` or `≈`, used by identity files.
    Eq,
    /// `<=` or `≤`, used by identity files.
    Le,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Prime => "`'`".into(),
            Tok::Star => "`*`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::FatArrow => "`=>`".into(),
            Tok::Iff => "`<=>`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

pub(crate) fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let starts = |i: usize, pat: &str| -> bool { text[chars[i].0..].starts_with(pat) };
    while i < chars.len() {
        let (off, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (tok, width) = if starts(i, "<=>") || c == '↔' {
            (Tok::Iff, if c == '↔' { 1 } else { 3 })
        } else if starts(i, "<=") || c == '≤' {
            (Tok::Le, if c == '≤' { 1 } else { 2 })
        } else if starts(i, "->") {
            (Tok::Arrow, 2)
        } else if starts(i, "=>") {
            (Tok::FatArrow, 2)
        } else {
            let t = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '\'' | '′' | '’' => Tok::Prime,
                '*' => Tok::Star,
                '~' | '¬' => Tok::Tilde,
                '&' | '∧' => Tok::Amp,
                '|' | '∨' => Tok::Bar,
                '→' => Tok::Arrow,
                '=' | '≈' => Tok::Eq,
                ',' => Tok::Comma,
                '⊥' => Tok::Zero,
                '⊤' => Tok::One,
                '0' | '1' => {
                    let next_is_word = chars
                        .get(i + 1)
                        .map(|&(_, n)| n.is_alphanumeric() || n == '_')
                        .unwrap_or(false);
                    if next_is_word {
                        return Err(Error::Parse {
                            offset: off,
                            expected: vec!["`0`".into(), "`1`".into(), "identifier".into()],
                            found: format!("numeral starting with `{c}`"),
                        });
                    }
                    if c == '0' {
                        Tok::Zero
                    } else {
                        Tok::One
                    }
                }
                c if c.is_alphabetic() || c == '_' => {
                    let mut j = i;
                    while j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_') {
                        j += 1;
                    }
                    let end = chars.get(j).map(|&(o, _)| o).unwrap_or(text.len());
                    let word = &text[off..end];
                    let tok = match word {
                        "bot" => Tok::Zero,
                        "top" => Tok::One,
                        _ => Tok::Ident(word.to_string()),
                    };
                    toks.push((off, tok));
                    i = j;
                    continue;
                }
                other => {
                    return Err(Error::Parse {
                        offset: off,
                        expected: vec!["a formula token".into()],
                        found: format!("`{other}`"),
                    })
                }
            };
            (t, 1)
        };
        toks.push((off, tok));
        i += width;
    }
    Ok(toks)
}

/// Recursive-descent parser over a token slice. Shared with the identity
/// and proof-script readers, which parse several formulas per line.
pub(crate) struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(toks: &'a [(usize, Tok)], end: usize) -> Self {
        Parser { toks, pos: 0, end }
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    pub(crate) fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    pub(crate) fn error(&self, expected: &[&str]) -> Error {
        Error::Parse {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self
                .peek()
                .map(|t| t.describe())
                .unwrap_or_else(|| "end of input".into()),
        }
    }

    pub(crate) fn formula(&mut self) -> Result<Formula> {
        let lhs = self.join()?;
        match self.peek() {
            Some(Tok::Arrow) => {
                self.bump();
                Ok(imp(lhs, self.formula()?))
            }
            Some(Tok::FatArrow) => {
                self.bump();
                Ok(imp_h(lhs, self.formula()?))
            }
            Some(Tok::Iff) => {
                self.bump();
                Ok(iff_h(lhs, self.formula()?))
            }
            _ => Ok(lhs),
        }
    }

    fn join(&mut self) -> Result<Formula> {
        let mut acc = self.meet()?;
        while self.peek() == Some(&Tok::Bar) {
            self.bump();
            acc = join(acc, self.meet()?);
        }
        Ok(acc)
    }

    fn meet(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.bump();
            acc = meet(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.peek() == Some(&Tok::Tilde) {
            self.bump();
            return Ok(neg(self.unary()?));
        }
        let mut a = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Prime) => {
                    self.bump();
                    a = neg(a);
                }
                Some(Tok::Star) => {
                    self.bump();
                    a = star(a);
                }
                _ => return Ok(a),
            }
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        const EXPECTED: &[&str] = &["identifier", "`0`", "`1`", "`(`", "`~`"];
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Some(Tok::Zero) => {
                self.bump();
                Ok(Formula::Bot)
            }
            Some(Tok::One) => {
                self.bump();
                Ok(Formula::Top)
            }
            Some(Tok::LParen) => {
                self.bump();
                let f = self.formula()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error(&["`)`", "`->`", "`|`", "`&`", "`'`"]));
                }
                self.bump();
                Ok(f)
            }
            _ => Err(self.error(EXPECTED)),
        }
    }
}

/// Parses a single formula; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Formula> {
    let toks = lex(text)?;
    let mut p = Parser::new(&toks, text.len());
    let f = p.formula()?;
    if !p.at_end() {
        return Err(p.error(&["`->`", "`|`", "`&`", "`'`", "end of input"]));
    }
    Ok(f)
}

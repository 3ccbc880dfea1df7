//! Line-oriented algebra files.
//!
//! ```text
//! algebra L1dm
//! order 3
//! elements 0 a 1
//! bottom 0
//! top 1
//! meet
//! 0 0 0
//! 0 a a
//! 0 a 1
//! join
//! ...
//! imp
//! ...
//! neg
//! 1 a 0
//! ```
//!
//! `neg` may be omitted for plain semi-Heyting algebras. A file may hold
//! several algebras, each starting at its own `algebra` line. `#` starts a
//! comment.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

pub fn render(a: &FiniteAlgebra) -> String {
    let n = a.order();
    let mut s = String::new();
    s.push_str(&format!("algebra {}\n", a.name));
    s.push_str(&format!("order {n}\n"));
    s.push_str(&format!("elements {}\n", a.labels.join(" ")));
    s.push_str(&format!("bottom {}\n", a.label(a.bottom)));
    s.push_str(&format!("top {}\n", a.label(a.top)));
    for (name, t) in [("meet", &a.meet), ("join", &a.join), ("imp", &a.imp)] {
        s.push_str(name);
        s.push('\n');
        for r in 0..n {
            let row: Vec<&str> = (0..n).map(|c| a.label(t[r * n + c])).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
    }
    if let Some(neg) = &a.neg {
        s.push_str("neg\n");
        let row: Vec<&str> = neg.iter().map(|&e| a.label(e)).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[derive(Default)]
struct Draft {
    name: Option<String>,
    order: Option<usize>,
    labels: Option<Vec<String>>,
    bottom: Option<String>,
    top: Option<String>,
    meet: Option<Vec<Elem>>,
    join: Option<Vec<Elem>>,
    imp: Option<Vec<Elem>>,
    neg: Option<Vec<Elem>>,
    start_line: usize,
}

impl Draft {
    fn finish(self) -> Result<FiniteAlgebra> {
        let line = self.start_line;
        let missing = |what: &str| Error::AlgebraFormat {
            line,
            reason: format!("algebra is missing `{what}`"),
        };
        let name = self.name.ok_or_else(|| missing("algebra"))?;
        let labels = self.labels.ok_or_else(|| missing("elements"))?;
        let find = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .map(|i| i as Elem)
                .ok_or_else(|| Error::AlgebraFormat {
                    line,
                    reason: format!("unknown element `{l}`"),
                })
        };
        let bottom = find(&self.bottom.ok_or_else(|| missing("bottom"))?)?;
        let top = find(&self.top.ok_or_else(|| missing("top"))?)?;
        FiniteAlgebra::new(
            name,
            labels,
            bottom,
            top,
            self.meet.ok_or_else(|| missing("meet"))?,
            self.join.ok_or_else(|| missing("join"))?,
            self.imp.ok_or_else(|| missing("imp"))?,
            self.neg,
        )
    }
}

/// Parses every algebra in `text`.
pub fn parse_all(text: &str) -> Result<Vec<FiniteAlgebra>> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            (
                i + 1,
                l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>(),
            )
        })
        .filter(|(_, w)| !w.is_empty())
        .collect();
    let mut out = Vec::new();
    let mut cur: Option<Draft> = None;
    let mut i = 0;
    while i < lines.len() {
        let (line, words) = &lines[i];
        let line = *line;
        let err = |reason: String| Error::AlgebraFormat { line, reason };
        let key = words[0];
        if key == "algebra" {
            if let Some(d) = cur.take() {
                out.push(d.finish()?);
            }
            if words.len() != 2 {
                return Err(err("expected `algebra <name>`".into()));
            }
            cur = Some(Draft {
                name: Some(words[1].to_string()),
                start_line: line,
                ..Draft::default()
            });
            i += 1;
            continue;
        }
        let d = cur
            .as_mut()
            .ok_or_else(|| err("expected `algebra <name>` first".into()))?;
        match key {
            "order" => {
                let n: usize = words
                    .get(1)
                    .and_then(|w| w.parse().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| err("expected `order <n>` with n >= 1".into()))?;
                d.order = Some(n);
            }
            "elements" => {
                let labels: Vec<String> = words[1..].iter().map(|s| s.to_string()).collect();
                if let Some(n) = d.order {
                    if labels.len() != n {
                        return Err(err(format!("expected {n} elements, found {}", labels.len())));
                    }
                }
                d.labels = Some(labels);
            }
            "bottom" | "top" => {
                let v = words
                    .get(1)
                    .ok_or_else(|| err(format!("expected `{key} <label>`")))?
                    .to_string();
                if key == "bottom" {
                    d.bottom = Some(v);
                } else {
                    d.top = Some(v);
                }
            }
            "meet" | "join" | "imp" | "neg" => {
                let labels = d
                    .labels
                    .clone()
                    .ok_or_else(|| err("`elements` must precede tables".into()))?;
                let n = labels.len();
                let rows = if key == "neg" { 1 } else { n };
                let mut table = Vec::with_capacity(rows * n);
                for r in 0..rows {
                    let (rline, rwords) = lines
                        .get(i + 1 + r)
                        .ok_or_else(|| err(format!("table `{key}` ends early")))?;
                    if rwords.len() != n {
                        return Err(Error::AlgebraFormat {
                            line: *rline,
                            reason: format!("expected {n} entries in `{key}` row, found {}", rwords.len()),
                        });
                    }
                    for w in rwords {
                        let e = labels.iter().position(|l| l == w).ok_or_else(|| Error::AlgebraFormat {
                            line: *rline,
                            reason: format!("unknown element `{w}`"),
                        })?;
                        table.push(e as Elem);
                    }
                }
                i += rows;
                match key {
                    "meet" => d.meet = Some(table),
                    "join" => d.join = Some(table),
                    "imp" => d.imp = Some(table),
                    _ => d.neg = Some(table),
                }
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
        i += 1;
    }
    if let Some(d) = cur {
        out.push(d.finish()?);
    }
    Ok(out)
}

/// Parses a file holding exactly one algebra.
pub fn parse_one(text: &str) -> Result<FiniteAlgebra> {
    let mut all = parse_all(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        k => Err(Error::AlgebraFormat {
            line: 1,
            reason: format!("expected one algebra, found {k}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::library;

    #[test]
    fn round_trip_library() {
        for name in library::fixed_names() {
            let a = library::get(&name).unwrap();
            assert_eq!(parse_one(&render(&a)).unwrap(), a, "{name}");
        }
    }

    #[test]
    fn reports_bad_rows() {
        let text = "algebra t\norder 2\nelements 0 1\nbottom 0\ntop 1\nmeet\n0 0\n0\n";
        match parse_all(text) {
            Err(Error::AlgebraFormat { line, .. }) => assert_eq!(line, 8),
            other => panic!("{other:?}"),
        }
    }
}

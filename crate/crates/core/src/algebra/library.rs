//! Builtin algebras.
//!
//! Fixed names: `2`, `2bar` (two-element semi-Heyting algebras), `2e`,
//! `2bare` (their expansions by the swap negation), `L1`..`L10` (the
//! three-element semi-Heyting chains), `L1dm`..`L10dm` (with `a' = a`),
//! `L1dp`..`L10dp` (with `a' = 1`), `D1`, `D2`, `D3` (four-element De Morgan
//! expansions of the Boolean lattice), and `B4` (the four-element Boolean
//! Heyting algebra).
//!
//! Parametric names: `Ch<n>` (Heyting chain), `Ch<n>dp` (with the dual
//! pseudocomplement) and `DMH<n>` (with the order-reversing involution),
//! for `2 <= n <= 12`.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

/// Largest parametric chain the library builds.
pub const MAX_CHAIN: usize = 12;

/// Rows for `0` and `a` of each three-element chain; the row for `1` is
/// always `0 a 1`. Columns are `0 a 1`.
const CHAIN3: [(&str, [&str; 3], [&str; 3]); 10] = [
    ("L1", ["1", "1", "1"], ["0", "1", "1"]),
    ("L2", ["1", "a", "1"], ["0", "1", "1"]),
    ("L3", ["1", "1", "1"], ["0", "1", "a"]),
    ("L4", ["1", "a", "1"], ["0", "1", "a"]),
    ("L5", ["1", "a", "a"], ["0", "1", "1"]),
    ("L6", ["1", "1", "a"], ["0", "1", "1"]),
    ("L7", ["1", "a", "a"], ["0", "1", "a"]),
    ("L8", ["1", "1", "a"], ["0", "1", "a"]),
    ("L9", ["1", "0", "0"], ["0", "1", "1"]),
    ("L10", ["1", "0", "0"], ["0", "1", "a"]),
];

/// Implication tables of D1..D3, rows and columns in the order `0 1 a b`.
const DIAMOND: [(&str, [[&str; 4]; 4]); 3] = [
    (
        "D1",
        [
            ["1", "0", "b", "a"],
            ["0", "1", "a", "b"],
            ["b", "a", "1", "0"],
            ["a", "b", "0", "1"],
        ],
    ),
    (
        "D2",
        [
            ["1", "1", "1", "1"],
            ["0", "1", "a", "b"],
            ["b", "1", "1", "b"],
            ["a", "1", "a", "1"],
        ],
    ),
    (
        "D3",
        [
            ["1", "a", "1", "a"],
            ["0", "1", "a", "b"],
            ["b", "a", "1", "0"],
            ["a", "1", "a", "1"],
        ],
    ),
];

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

fn idx(ls: &[&str], l: &str) -> Elem {
    ls.iter().position(|x| *x == l).expect("label in table") as Elem
}

fn chain_leq(i: usize, j: usize) -> bool {
    i <= j
}

fn two(name: &str, zero_to_one: &str, neg: bool) -> FiniteAlgebra {
    let ls = ["0", "1"];
    let imp = vec![1, idx(&ls, zero_to_one), 0, 1];
    FiniteAlgebra::from_order(name, labels(&ls), chain_leq, imp, neg.then(|| vec![1, 0]))
        .expect("two-element table is valid")
}

fn chain3(index: usize, neg_a: Option<&str>) -> FiniteAlgebra {
    let ls = ["0", "a", "1"];
    let (base, row0, rowa) = CHAIN3[index];
    let mut imp = Vec::with_capacity(9);
    for row in [row0, rowa, ["0", "a", "1"]] {
        imp.extend(row.iter().map(|l| idx(&ls, l)));
    }
    let (name, neg) = match neg_a {
        None => (base.to_string(), None),
        Some(v) => {
            let suffix = if v == "a" { "dm" } else { "dp" };
            (format!("{base}{suffix}"), Some(vec![2, idx(&ls, v), 0]))
        }
    };
    FiniteAlgebra::from_order(name, labels(&ls), chain_leq, imp, neg).expect("three-element table is valid")
}

fn boolean4_leq(i: usize, j: usize) -> bool {
    // 0 1 a b as bit sets: 0 = {}, 1 = {a, b}
    const BITS: [u8; 4] = [0b00, 0b11, 0b01, 0b10];
    BITS[i] & !BITS[j] == 0
}

fn diamond(index: usize) -> FiniteAlgebra {
    let ls = ["0", "1", "a", "b"];
    let (name, rows) = DIAMOND[index];
    let imp = rows.iter().flat_map(|r| r.iter().map(|l| idx(&ls, l))).collect();
    FiniteAlgebra::from_order(name, labels(&ls), boolean4_leq, imp, Some(vec![1, 0, 2, 3]))
        .expect("four-element table is valid")
}

fn boolean4() -> FiniteAlgebra {
    let n = 4;
    let (meet, join) = crate::algebra::lattice_from_order(n, &boolean4_leq).expect("Boolean lattice");
    let mut imp = vec![0; n * n];
    // Heyting implication: largest c with x ∧ c <= y
    for x in 0..n {
        for y in 0..n {
            imp[x * n + y] = (0..n)
                .filter(|&c| boolean4_leq(meet[x * n + c] as usize, y))
                .find(|&c| (0..n).all(|d| !boolean4_leq(meet[x * n + d] as usize, y) || boolean4_leq(d, c)))
                .expect("Boolean lattice is Heyting") as Elem;
        }
    }
    FiniteAlgebra::new("B4", labels(&["0", "1", "a", "b"]), 0, 1, meet, join, imp, None).expect("B4 is valid")
}

fn chain_labels(n: usize) -> Vec<String> {
    let mut ls = vec!["0".to_string()];
    for i in 0..n - 2 {
        let c = (b'a' + i as u8) as char;
        ls.push(c.to_string());
    }
    ls.push("1".to_string());
    ls
}

/// Kinds of parametric chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// Heyting chain, no negation.
    Heyting,
    /// Heyting chain with `x' = 1` for `x < 1` and `1' = 0`.
    DualPseudocomplement,
    /// Heyting chain with the order-reversing involution.
    DeMorgan,
}

/// `n`-element Heyting chain of the given kind.
pub fn chain(kind: ChainKind, n: usize) -> Result<FiniteAlgebra> {
    if !(2..=MAX_CHAIN).contains(&n) {
        return Err(Error::ChainParameter { n, min: 2 });
    }
    let mut imp = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            imp[x * n + y] = if x <= y { n - 1 } else { y } as Elem;
        }
    }
    let (name, neg) = match kind {
        ChainKind::Heyting => (format!("Ch{n}"), None),
        ChainKind::DualPseudocomplement => {
            let mut neg = vec![(n - 1) as Elem; n];
            neg[n - 1] = 0;
            (format!("Ch{n}dp"), Some(neg))
        }
        ChainKind::DeMorgan => (format!("DMH{n}"), Some((0..n).map(|i| (n - 1 - i) as Elem).collect())),
    };
    FiniteAlgebra::from_order(name, chain_labels(n), chain_leq, imp, neg)
}

/// The 25 algebras every sweep runs over: `2e`, `2bare`, the twenty
/// three-element expansions, and `D1`..`D3`.
pub fn core_names() -> Vec<String> {
    let mut out = vec!["2e".to_string(), "2bare".to_string()];
    out.extend(dm_names());
    out.extend(dp_names());
    out.extend(["D1", "D2", "D3"].iter().map(|s| s.to_string()));
    out
}

pub fn dm_names() -> Vec<String> {
    (1..=10).map(|i| format!("L{i}dm")).collect()
}

pub fn dp_names() -> Vec<String> {
    (1..=10).map(|i| format!("L{i}dp")).collect()
}

/// The twenty three-element expansions.
pub fn c20_names() -> Vec<String> {
    let mut v = dm_names();
    v.extend(dp_names());
    v
}

/// Every fixed library name, in display order.
pub fn fixed_names() -> Vec<String> {
    let mut out = vec!["2".to_string(), "2bar".to_string()];
    out.extend((1..=10).map(|i| format!("L{i}")));
    out.push("B4".into());
    out.extend(core_names());
    out
}

pub fn core() -> Vec<FiniteAlgebra> {
    core_names().iter().map(|n| get(n).expect("core algebra")).collect()
}

/// Looks up a library algebra by name.
pub fn get(name: &str) -> Result<FiniteAlgebra> {
    let unknown = || Error::UnknownAlgebra(name.to_string());
    match name {
        "2" => return Ok(two("2", "1", false)),
        "2bar" => return Ok(two("2bar", "0", false)),
        "2e" => return Ok(two("2e", "1", true)),
        "2bare" => return Ok(two("2bare", "0", true)),
        "B4" => return Ok(boolean4()),
        "D1" => return Ok(diamond(0)),
        "D2" => return Ok(diamond(1)),
        "D3" => return Ok(diamond(2)),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('L') {
        let (num, neg) = if let Some(n) = rest.strip_suffix("dm") {
            (n, Some("a"))
        } else if let Some(n) = rest.strip_suffix("dp") {
            (n, Some("1"))
        } else {
            (rest, None)
        };
        let i: usize = num.parse().map_err(|_| unknown())?;
        if !(1..=10).contains(&i) || num.starts_with('0') {
            return Err(unknown());
        }
        return Ok(chain3(i - 1, neg));
    }
    let parametric = |prefix: &str, suffix: &str, kind: ChainKind| -> Option<Result<FiniteAlgebra>> {
        let num = name.strip_prefix(prefix)?.strip_suffix(suffix)?;
        if num.is_empty() || num.starts_with('0') || !num.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Some(chain(kind, num.parse().ok()?))
    };
    if let Some(r) = parametric("Ch", "dp", ChainKind::DualPseudocomplement) {
        return r;
    }
    if let Some(r) = parametric("DMH", "", ChainKind::DeMorgan) {
        return r;
    }
    if let Some(r) = parametric("Ch", "", ChainKind::Heyting) {
        return r;
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(core_names().len(), 25);
        for n in fixed_names() {
            assert_eq!(get(&n).unwrap().name, n);
        }
        assert_eq!(get("Ch4dp").unwrap().order(), 4);
        assert_eq!(get("DMH5").unwrap().order(), 5);
        assert!(get("L11").is_err());
        assert!(get("L01dm").is_err());
        assert!(get("Ch1dp").is_err());
        assert!(get("nope").is_err());
    }

    #[test]
    fn table_spot_checks() {
        let d1 = get("D1").unwrap();
        let (a, b) = (d1.index_of("a").unwrap(), d1.index_of("b").unwrap());
        assert_eq!(d1.i(a, b), d1.bottom);
        assert_eq!(d1.star(a), b);
        let l1 = get("L1").unwrap();
        assert_eq!(l1.i(l1.top, 1), 1);
        let ch3 = get("Ch3dp").unwrap();
        let l1dp = get("L1dp").unwrap();
        assert_eq!(
            (ch3.meet.clone(), ch3.imp.clone(), ch3.neg.clone()),
            (l1dp.meet, l1dp.imp, l1dp.neg)
        );
    }
}

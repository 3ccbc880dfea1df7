//! The three-valued Łukasiewicz algebra against `L1dm`.
//!
//! From `L1dm` the Moisil operators come out as `d1(x) = x'*` and
//! `d2(x) = x*'`. Going back, the pseudocomplement is `d1((d2 x)')` and
//! Katriňák's term rebuilds the semi-Heyting implication of `L1`.

use serde::Serialize;

use crate::algebra::{library, FiniteAlgebra};

/// Stated Moisil tables over `0 a 1`.
pub const D1_TABLE: [&str; 3] = ["0", "0", "1"];
pub const D2_TABLE: [&str; 3] = ["0", "1", "1"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LukasiewiczReport {
    /// `x'*` in `L1dm` for `x = 0, a, 1`.
    pub d1_from_l1dm: Vec<String>,
    /// `x*'` in `L1dm`.
    pub d2_from_l1dm: Vec<String>,
    /// Moisil operators computed inside the Łukasiewicz algebra.
    pub d1_lukasiewicz: Vec<String>,
    pub d2_lukasiewicz: Vec<String>,
    /// Katriňák's term over the Łukasiewicz algebra, row-major over `0 a 1`.
    pub katrinak_imp: Vec<String>,
    /// `L1`'s implication, same layout.
    pub l1_imp: Vec<String>,
    /// `(x, y, katrinak, l1)` for every differing entry.
    pub mismatches: Vec<(String, String, String, String)>,
    pub passed: bool,
}

/// Three-valued Łukasiewicz algebra on `0 < 1 < 2` (for `0 < a < 1`).
struct Luk;

impl Luk {
    fn neg(x: u8) -> u8 {
        2 - x
    }
    fn imp(x: u8, y: u8) -> u8 {
        (2 - x + y).min(2)
    }
    /// `d1(x) = ¬(x → ¬x)`.
    fn d1(x: u8) -> u8 {
        Self::neg(Self::imp(x, Self::neg(x)))
    }
    /// `d2(x) = ¬x → x`.
    fn d2(x: u8) -> u8 {
        Self::imp(Self::neg(x), x)
    }
    fn star(x: u8) -> u8 {
        Self::d1(Self::neg(Self::d2(x)))
    }
    fn katrinak(x: u8, y: u8) -> u8 {
        let s = Self::star;
        let left = s(x).max(s(s(y)));
        let right = Self::neg(s(Self::neg(x.max(s(x))))).max(s(x)).max(y).max(s(y));
        left.min(right)
    }
}

const LABELS: [&str; 3] = ["0", "a", "1"];

pub fn lukasiewicz_term_equivalence_check() -> LukasiewiczReport {
    let l1dm = library::get("L1dm").expect("L1dm");
    let l1 = library::get("L1").expect("L1");
    let idx = |a: &FiniteAlgebra, l: &str| a.index_of(l).expect("label");
    let label = |a: &FiniteAlgebra, x| a.label(x).to_string();
    let d1_from_l1dm = LABELS
        .iter()
        .map(|l| label(&l1dm, l1dm.star(l1dm.n(idx(&l1dm, l)))))
        .collect::<Vec<_>>();
    let d2_from_l1dm = LABELS
        .iter()
        .map(|l| label(&l1dm, l1dm.n(l1dm.star(idx(&l1dm, l)))))
        .collect::<Vec<_>>();
    let d1_lukasiewicz = (0..3)
        .map(|x| LABELS[Luk::d1(x) as usize].to_string())
        .collect::<Vec<_>>();
    let d2_lukasiewicz = (0..3)
        .map(|x| LABELS[Luk::d2(x) as usize].to_string())
        .collect::<Vec<_>>();
    let mut katrinak_imp = Vec::new();
    let mut l1_imp = Vec::new();
    let mut mismatches = Vec::new();
    for x in 0..3u8 {
        for y in 0..3u8 {
            let k = LABELS[Luk::katrinak(x, y) as usize].to_string();
            let h = label(&l1, l1.i(idx(&l1, LABELS[x as usize]), idx(&l1, LABELS[y as usize])));
            if k != h {
                mismatches.push((
                    LABELS[x as usize].into(),
                    LABELS[y as usize].into(),
                    k.clone(),
                    h.clone(),
                ));
            }
            katrinak_imp.push(k);
            l1_imp.push(h);
        }
    }
    let stated = |t: &[&str; 3], v: &[String]| t.iter().zip(v).all(|(a, b)| a == b);
    let passed = stated(&D1_TABLE, &d1_from_l1dm)
        && stated(&D2_TABLE, &d2_from_l1dm)
        && stated(&D1_TABLE, &d1_lukasiewicz)
        && stated(&D2_TABLE, &d2_lukasiewicz)
        && mismatches.is_empty();
    LukasiewiczReport {
        d1_from_l1dm,
        d2_from_l1dm,
        d1_lukasiewicz,
        d2_lukasiewicz,
        katrinak_imp,
        l1_imp,
        mismatches,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bridge_holds() {
        let r = lukasiewicz_term_equivalence_check();
        assert!(r.passed, "{r:?}");
        // d1(a) = a'* = a* = 0
        assert_eq!(r.d1_from_l1dm[1], "0");
        // Katriňák at (a, 0) is 0 and the diagonal is 1
        assert_eq!(r.katrinak_imp[3], "0");
        for x in 0..3 {
            assert_eq!(r.katrinak_imp[4 * x], "1");
        }
    }
}

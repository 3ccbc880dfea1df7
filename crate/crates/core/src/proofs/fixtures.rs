//! Shipped proof scripts.
//!
//! `SCRIPTS` are accepted derivations. `DEDUCTION_CORPUS` scripts each mark
//! one premise as the hypothesis for the deduction transform; they use only
//! the base axioms and are rebound to the logic under test. Each of the
//! `MUTATIONS` starts with `# reject N`, the line the kernel must reject.

use super::{parse_script, ProofScript};
use crate::error::Result;

macro_rules! fixtures {
    ($dir:literal: $($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../data/proofs/", $dir, $name, ".proof")))),*]
    };
}

pub const SCRIPTS: &[(&str, &str)] = fixtures!("":
    "transitivity-rule",
    "contraposition-rule",
    "neg-join",
    "join-monotone",
    "neg-meet",
    "deduction-axiom-case",
    "deduction-smp-case",
    "deduction-scp-case",
);

pub const DEDUCTION_CORPUS: &[(&str, &str)] = fixtures!("deduction/":
    "identity",
    "axiom-line",
    "meet-self",
    "contraposition",
    "modus-ponens",
    "chained",
);

pub const MUTATIONS: &[(&str, &str)] = fixtures!("mutations/":
    "neg-join-wrong-scp",
    "neg-join-bad-instance",
    "scp-on-atom",
    "transitivity-swapped",
    "neg-meet-wrong-premise",
    "smp-forward-ref",
    "monotone-wrong-rule",
);

pub fn script(name: &str) -> Option<Result<ProofScript>> {
    SCRIPTS
        .iter()
        .chain(DEDUCTION_CORPUS)
        .chain(MUTATIONS)
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_script(text))
}

/// The line a mutation fixture must be rejected at.
pub fn expected_rejection(text: &str) -> Option<usize> {
    text.lines()
        .next()?
        .trim()
        .strip_prefix("# reject ")?
        .trim()
        .parse()
        .ok()
}

//! The named identity catalog, loaded from `data/identities.txt`.

use std::sync::OnceLock;

use crate::equations::Identity;
use crate::error::{Error, Result};

const CATALOG_TEXT: &str = include_str!("../../data/identities.txt");

/// Parses an identity file: one `id NAME: lhs = rhs` (or `<=`) per line.
pub fn parse_identity_file(text: &str) -> Result<Vec<Identity>> {
    let mut out: Vec<Identity> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |reason: String| Error::IdentityFormat { line, reason };
        let rest = body
            .strip_prefix("id ")
            .ok_or_else(|| err("expected `id NAME: ...`".into()))?;
        let (name, eq) = rest
            .split_once(':')
            .ok_or_else(|| err("missing `:` after the identity name".into()))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || "-_".contains(c)) {
            return Err(err(format!("bad identity name `{name}`")));
        }
        if out.iter().any(|id| id.name.as_deref() == Some(name)) {
            return Err(err(format!("duplicate identity name `{name}`")));
        }
        let id = Identity::parse(eq).map_err(|e| err(e.to_string()))?;
        out.push(id.named(name));
    }
    Ok(out)
}

/// Every catalog entry, in file order.
pub fn catalog() -> &'static [Identity] {
    static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_identity_file(CATALOG_TEXT).expect("builtin identity catalog parses"))
}

/// Looks up a catalog identity by name. Chain identities are available as
/// `DMHC3_<n>`, `A_<n>` and `E_<n>`.
pub fn lookup(name: &str) -> Result<Identity> {
    if let Some(id) = catalog().iter().find(|id| id.name.as_deref() == Some(name)) {
        return Ok(id.clone());
    }
    use crate::equations::{chain_identity, chain_identity_unchecked, ChainIdentityKind};
    let param = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    if let Some(n) = param("DMHC3_") {
        return chain_identity(ChainIdentityKind::Dmhc3, n);
    }
    if let Some(n) = param("A_") {
        return chain_identity(ChainIdentityKind::An, n);
    }
    if let Some(n) = param("E_") {
        if n >= 2 {
            return Ok(chain_identity_unchecked(n).named(name));
        }
    }
    Err(Error::UnknownIdentity(name.to_string()))
}

/// Resolves a list of names.
pub fn lookup_all<S: AsRef<str>>(names: &[S]) -> Result<Vec<Identity>> {
    names.iter().map(|n| lookup(n.as_ref())).collect()
}

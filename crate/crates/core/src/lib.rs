//! Finite algebras, identities and Hilbert-style logics around dually
//! hemimorphic semi-Heyting algebras.

pub mod algebra;
pub mod cli;
pub mod equations;
pub mod error;
pub mod formula;
pub mod matrices;
pub mod proofs;
pub mod varieties;

pub use error::{Error, Result};
pub use formula::{parse, Formula};

//! Generalized non-coprime graphs of finite groups.
//!
//! The crate builds the graph Γ_{G,H} on the non-identity elements of a
//! finite group G (a ~ b iff gcd(|a|,|b|) ≠ 1 and at least one of a, b lies
//! in the subgroup H), evaluates closed-form predictions for cyclic groups,
//! and cross-checks every prediction against brute-force graph oracles.

pub mod closedform;
pub mod error;
pub mod graphcore;
pub mod groups;
pub mod harness;
pub mod ncg;
pub mod numthy;

pub use error::NcError;

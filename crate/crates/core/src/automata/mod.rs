//! Factor-oracle based backward matching.

mod bom;
mod oracle;

pub use bom::{search_bom, search_ebom, Bom, Ebom, FirstTransitionTable};
pub use oracle::FactorOracle;

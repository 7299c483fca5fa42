//! Exact single-pattern string matching.
//!
//! The crate collects a set of online search algorithms from the three
//! classic families (character comparison, factor automata and
//! bit-parallelism), a brute-force oracle they are all checked against, a
//! registry describing where each algorithm applies, a selector mapping
//! alphabet size and pattern length to a recommended algorithm, and a
//! benchmark harness with table and map reports.
//!
//! ```
//! use strmatch::{Pattern, search_hor};
//!
//! let p = Pattern::new(&b"aba"[..]).unwrap();
//! assert_eq!(search_hor(&p, b"ababa").positions(), &[0, 2]);
//! ```

pub mod automata;
pub mod bench;
pub mod bitparallel;
pub mod comparison;
pub mod error;
pub mod oracle;
pub mod registry;
pub mod report;
pub mod searcher;
pub mod select;
pub mod text;
pub mod verify;
pub mod word;

#[cfg(test)]
pub(crate) mod testutil;

pub use automata::{search_bom, search_ebom, Bom, Ebom, FactorOracle};
pub use bitparallel::{
    search_bmh_sbndm, search_bndm, search_fsbndm, search_lbndm, search_sa, search_sbndm,
    search_sbndm_bmh, search_sbndmq, search_so,
};
pub use comparison::{
    search_br, search_fjs, search_hashq, search_hor, search_qs, search_ssef, search_tvsbs,
};
pub use error::{ApplicabilityError, Error, Result};
pub use oracle::{brute_force_search, verify_equal};
pub use registry::{AlgorithmDescriptor, Family};
pub use searcher::{Scan, Searcher};
pub use text::{Haystack, InstrumentedText, Occurrences, Pattern, Text};
pub use word::{BitWord, WordSpec};

//! Character-comparison algorithms: shift tables, q-gram hashing and the
//! block fingerprint filter.

mod berry_ravindran;
mod fjs;
mod hashq;
mod horspool;
mod ssef;
mod tables;

pub use berry_ravindran::{search_br, search_tvsbs, BerryRavindran, Tvsbs};
pub use fjs::{search_fjs, Fjs};
pub use hashq::{gram_hash, search_hashq, Hash3, Hash5, Hash8, HashQ, QGramHash};
pub use horspool::{search_hor, search_qs, Horspool, QuickSearch};
pub use ssef::{search_ssef, BlockFilter, Ssef, SSEF_MIN_M};
pub use tables::{BadCharTable, PairShiftTable};

pub(crate) use tables::period;

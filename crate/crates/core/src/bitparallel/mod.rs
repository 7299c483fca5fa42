//! Bit-parallel algorithms.

mod bndm;
mod lbndm;
mod masks;
mod shift;

pub use bndm::{
    search_bmh_sbndm, search_bndm, search_fsbndm, search_sbndm, search_sbndm_bmh, search_sbndmq,
    BmhSbndm, Bndm, Fsbndm, Sbndm, Sbndm2, Sbndm4, Sbndm6, Sbndm8, SbndmBmh, SbndmQ,
};
pub use lbndm::{search_lbndm, Lbndm, SuperimposedPattern};
pub use masks::{CharMaskTable, MultiwordState};
pub use shift::{search_sa, search_so, ShiftAnd, ShiftOr};

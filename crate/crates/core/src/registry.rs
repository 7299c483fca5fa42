//! Catalog of the implemented algorithms and where each one applies.

use std::fmt;

use crate::automata::{Bom, Ebom};
use crate::bitparallel::{
    BmhSbndm, Bndm, Fsbndm, Lbndm, Sbndm, Sbndm2, Sbndm4, Sbndm6, Sbndm8, SbndmBmh, ShiftAnd,
    ShiftOr,
};
use crate::comparison::{
    BerryRavindran, Fjs, Hash3, Hash5, Hash8, Horspool, QuickSearch, Ssef, Tvsbs,
};
use crate::error::{ApplicabilityError, Error};
use crate::oracle::BruteForce;
use crate::searcher::Searcher;
use crate::text::Pattern;
use crate::word::WordSpec;

/// Algorithm family, in table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Comparison,
    Automata,
    BitParallel,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Comparison => "comparison",
            Family::Automata => "automata",
            Family::BitParallel => "bit-parallel",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "comparison" => Some(Family::Comparison),
            "automata" => Some(Family::Automata),
            "bit-parallel" => Some(Family::BitParallel),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

type Builder = fn(&Pattern, WordSpec) -> Result<Box<dyn Searcher>, ApplicabilityError>;

pub struct AlgorithmDescriptor {
    pub id: &'static str,
    pub name: &'static str,
    pub family: Family,
    pub m_min: usize,
    /// Fixed upper bound on `m`, independent of the word size.
    pub m_max: Option<usize>,
    /// `Some(s)` when the algorithm needs `m <= w - s`.
    pub word_slack: Option<usize>,
    build: Builder,
}

impl AlgorithmDescriptor {
    pub fn needs_word(&self) -> bool {
        self.word_slack.is_some()
    }

    /// Largest supported `m` under `word`, or `None` if unbounded.
    pub fn max_len(&self, word: WordSpec) -> Option<usize> {
        let by_word = self.word_slack.map(|s| word.bits() - s);
        match (self.m_max, by_word) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn is_applicable(&self, m: usize, word: WordSpec) -> bool {
        m >= self.m_min && self.max_len(word).is_none_or(|max| m <= max)
    }

    pub fn check(&self, m: usize, word: WordSpec) -> Result<(), ApplicabilityError> {
        if self.is_applicable(m, word) {
            return Ok(());
        }
        let bound = match self.max_len(word) {
            Some(max) => format!("{} <= m <= {max}", self.m_min),
            None => format!("m >= {}", self.m_min),
        };
        Err(ApplicabilityError::new(self.id, m, bound))
    }

    /// Preprocesses `p` with the default word size.
    pub fn build(&self, p: &Pattern) -> Result<Box<dyn Searcher>, ApplicabilityError> {
        self.build_with(p, WordSpec::DEFAULT)
    }

    pub fn build_with(
        &self,
        p: &Pattern,
        word: WordSpec,
    ) -> Result<Box<dyn Searcher>, ApplicabilityError> {
        self.check(p.len(), word)?;
        (self.build)(p, word)
    }
}

impl fmt::Debug for AlgorithmDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgorithmDescriptor")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("m_min", &self.m_min)
            .field("m_max", &self.m_max)
            .field("word_slack", &self.word_slack)
            .finish()
    }
}

impl PartialEq for AlgorithmDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for AlgorithmDescriptor {}

macro_rules! plain {
    ($ty:ty) => {
        |p, _| Ok(Box::new(<$ty>::new(p)) as Box<dyn Searcher>)
    };
}

macro_rules! fallible {
    ($ty:ty) => {
        |p, _| Ok(Box::new(<$ty>::new(p)?) as Box<dyn Searcher>)
    };
}

macro_rules! by_word {
    ($ty:ident $(<$q:literal>)?, plain) => {
        |p, w| {
            Ok(match w {
                WordSpec::W32 => Box::new($ty::<$($q,)? u32>::new(p)) as Box<dyn Searcher>,
                WordSpec::W64 => Box::new($ty::<$($q,)? u64>::new(p)),
                WordSpec::W128 => Box::new($ty::<$($q,)? u128>::new(p)),
            })
        }
    };
    ($ty:ident $(<$q:literal>)?) => {
        |p, w| {
            Ok(match w {
                WordSpec::W32 => Box::new($ty::<$($q,)? u32>::new(p)?) as Box<dyn Searcher>,
                WordSpec::W64 => Box::new($ty::<$($q,)? u64>::new(p)?),
                WordSpec::W128 => Box::new($ty::<$($q,)? u128>::new(p)?),
            })
        }
    };
}

const fn entry(
    id: &'static str,
    name: &'static str,
    family: Family,
    m_min: usize,
    word_slack: Option<usize>,
    build: Builder,
) -> AlgorithmDescriptor {
    AlgorithmDescriptor {
        id,
        name,
        family,
        m_min,
        m_max: None,
        word_slack,
        build,
    }
}

use Family::{Automata, BitParallel, Comparison};

static REGISTRY: [AlgorithmDescriptor; 24] = [
    entry("BF", "Brute-Force", Comparison, 1, None, plain!(BruteForce)),
    entry("HOR", "Horspool", Comparison, 1, None, plain!(Horspool)),
    entry(
        "QS",
        "Quick-Search",
        Comparison,
        1,
        None,
        plain!(QuickSearch),
    ),
    entry(
        "BR",
        "Berry-Ravindran",
        Comparison,
        1,
        None,
        plain!(BerryRavindran),
    ),
    entry(
        "TVSBS",
        "Thathoo-Virmani-Sai-Balakrishnan-Sekar",
        Comparison,
        1,
        None,
        plain!(Tvsbs),
    ),
    entry(
        "FJS",
        "Franek-Jennings-Smyth",
        Comparison,
        1,
        None,
        plain!(Fjs),
    ),
    entry(
        "HASH3",
        "Wu-Manber for single patterns, q = 3",
        Comparison,
        3,
        None,
        fallible!(Hash3),
    ),
    entry(
        "HASH5",
        "Wu-Manber for single patterns, q = 5",
        Comparison,
        5,
        None,
        fallible!(Hash5),
    ),
    entry(
        "HASH8",
        "Wu-Manber for single patterns, q = 8",
        Comparison,
        8,
        None,
        fallible!(Hash8),
    ),
    entry(
        "SSEF",
        "SSEF fingerprint filter",
        Comparison,
        32,
        None,
        |p, w| Ok(Box::new(Ssef::with_word(p, w)?)),
    ),
    entry(
        "BOM",
        "Backward-Oracle-Matching",
        Automata,
        1,
        None,
        plain!(Bom),
    ),
    entry(
        "EBOM",
        "Extended Backward Oracle Matching",
        Automata,
        2,
        None,
        fallible!(Ebom),
    ),
    entry(
        "SO",
        "Shift-Or",
        BitParallel,
        1,
        None,
        by_word!(ShiftOr, plain),
    ),
    entry(
        "SA",
        "Shift-And",
        BitParallel,
        1,
        None,
        by_word!(ShiftAnd, plain),
    ),
    entry(
        "BNDM",
        "Backward-Nondeterministic-DAWG-Matching",
        BitParallel,
        1,
        Some(0),
        by_word!(Bndm),
    ),
    entry(
        "SBNDM",
        "Simplified BNDM",
        BitParallel,
        1,
        Some(0),
        by_word!(Sbndm),
    ),
    entry(
        "SBNDM-BMH",
        "SBNDM with Horspool shift",
        BitParallel,
        1,
        Some(0),
        by_word!(SbndmBmh),
    ),
    entry(
        "BMH-SBNDM",
        "Horspool with SBNDM test",
        BitParallel,
        1,
        Some(0),
        by_word!(BmhSbndm),
    ),
    entry(
        "FSBNDM",
        "Forward SBNDM",
        BitParallel,
        1,
        Some(1),
        by_word!(Fsbndm),
    ),
    entry(
        "SBNDMq2",
        "Simplified BNDM with 2-grams",
        BitParallel,
        2,
        Some(0),
        by_word!(Sbndm2),
    ),
    entry(
        "SBNDMq4",
        "Simplified BNDM with 4-grams",
        BitParallel,
        4,
        Some(0),
        by_word!(Sbndm4),
    ),
    entry(
        "SBNDMq6",
        "Simplified BNDM with 6-grams",
        BitParallel,
        6,
        Some(0),
        by_word!(Sbndm6),
    ),
    entry(
        "SBNDMq8",
        "Simplified BNDM with 8-grams",
        BitParallel,
        8,
        Some(0),
        by_word!(Sbndm8),
    ),
    entry(
        "LBNDM",
        "Long patterns BNDM",
        BitParallel,
        1,
        None,
        by_word!(Lbndm, plain),
    ),
];

/// Every registered algorithm, grouped by family.
pub fn all() -> &'static [AlgorithmDescriptor] {
    &REGISTRY
}

/// Looks an algorithm up by id, ignoring ASCII case.
pub fn by_id(id: &str) -> Option<&'static AlgorithmDescriptor> {
    REGISTRY.iter().find(|d| d.id.eq_ignore_ascii_case(id))
}

pub fn get(id: &str) -> Result<&'static AlgorithmDescriptor, Error> {
    by_id(id).ok_or_else(|| Error::UnknownAlgorithm(id.to_string()))
}

/// Position in registry order, used to order report rows.
pub fn position(id: &str) -> Option<usize> {
    REGISTRY.iter().position(|d| d.id == id)
}

/// All algorithms defined for patterns of length `m`.
pub fn applicable_algorithms(m: usize, word: WordSpec) -> Vec<&'static AlgorithmDescriptor> {
    REGISTRY
        .iter()
        .filter(|d| d.is_applicable(m, word))
        .collect()
}

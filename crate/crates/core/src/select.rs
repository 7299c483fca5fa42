//! Alphabet/length size classes and the best-algorithm selection map.

use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::registry::{self, AlgorithmDescriptor};
use crate::word::WordSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaClass {
    VerySmall,
    Small,
    Large,
    VeryLarge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MClass {
    VeryShort,
    Short,
    Long,
    VeryLong,
}

impl SigmaClass {
    pub const ALL: [SigmaClass; 4] = [
        SigmaClass::VerySmall,
        SigmaClass::Small,
        SigmaClass::Large,
        SigmaClass::VeryLarge,
    ];

    pub fn of(sigma: usize) -> SigmaClass {
        match sigma {
            0..=3 => SigmaClass::VerySmall,
            4..=31 => SigmaClass::Small,
            32..=127 => SigmaClass::Large,
            _ => SigmaClass::VeryLarge,
        }
    }

    /// Inclusive range of alphabet sizes in the class.
    pub fn range(self) -> (usize, usize) {
        match self {
            SigmaClass::VerySmall => (1, 3),
            SigmaClass::Small => (4, 31),
            SigmaClass::Large => (32, 127),
            SigmaClass::VeryLarge => (128, 256),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SigmaClass::VerySmall => "very_small",
            SigmaClass::Small => "small",
            SigmaClass::Large => "large",
            SigmaClass::VeryLarge => "very_large",
        }
    }
}

impl MClass {
    pub const ALL: [MClass; 4] = [
        MClass::VeryShort,
        MClass::Short,
        MClass::Long,
        MClass::VeryLong,
    ];

    pub fn of(m: usize) -> MClass {
        match m {
            0..=4 => MClass::VeryShort,
            5..=32 => MClass::Short,
            33..=256 => MClass::Long,
            _ => MClass::VeryLong,
        }
    }

    /// Inclusive range of pattern lengths; the last class is open-ended.
    pub fn range(self) -> (usize, Option<usize>) {
        match self {
            MClass::VeryShort => (1, Some(4)),
            MClass::Short => (5, Some(32)),
            MClass::Long => (33, Some(256)),
            MClass::VeryLong => (257, None),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MClass::VeryShort => "very_short",
            MClass::Short => "short",
            MClass::Long => "long",
            MClass::VeryLong => "very_long",
        }
    }
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for MClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SizeClasses {
    pub sigma: SigmaClass,
    pub m: MClass,
}

pub fn classify(sigma: usize, m: usize) -> SizeClasses {
    SizeClasses {
        sigma: SigmaClass::of(sigma),
        m: MClass::of(m),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PaperStated,
    DerivedFill,
    Measured,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::PaperStated => "paper-stated",
            Provenance::DerivedFill => "derived-fill",
            Provenance::Measured => "measured",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCell {
    pub algorithm: &'static str,
    pub provenance: Provenance,
    /// Runner-up choices, tried in order when the primary does not apply.
    pub alternates: &'static [&'static str],
}

const fn cell(
    algorithm: &'static str,
    provenance: Provenance,
    alternates: &'static [&'static str],
) -> MapCell {
    MapCell {
        algorithm,
        provenance,
        alternates,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionMap {
    // indexed [sigma class][m class]
    cells: [[MapCell; 4]; 4],
}

impl Default for SelectionMap {
    fn default() -> Self {
        use Provenance::{DerivedFill as D, PaperStated as P};
        SelectionMap {
            cells: [
                [
                    cell("SA", P, &["SO"]),
                    cell("HASH5", D, &["HASH3"]),
                    cell("HASH8", D, &["SBNDMq8"]),
                    cell("SSEF", P, &["LBNDM"]),
                ],
                [
                    cell("TVSBS", P, &["SA"]),
                    cell("HASH5", P, &["SBNDMq4", "HASH3"]),
                    cell("HASH8", P, &["SBNDMq8"]),
                    cell("SSEF", P, &["LBNDM"]),
                ],
                [
                    cell("FJS", P, &["TVSBS"]),
                    cell("EBOM", P, &["SBNDM-BMH"]),
                    cell("FSBNDM", P, &["TVSBS"]),
                    cell("SSEF", P, &["LBNDM"]),
                ],
                [
                    cell("FJS", P, &["TVSBS"]),
                    cell("EBOM", P, &["SBNDM-BMH", "BMH-SBNDM"]),
                    cell("FSBNDM", P, &["TVSBS"]),
                    cell("LBNDM", P, &["SSEF"]),
                ],
            ],
        }
    }
}

impl SelectionMap {
    pub fn cell(&self, sigma: SigmaClass, m: MClass) -> &MapCell {
        &self.cells[sigma as usize][m as usize]
    }

    /// All 16 cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (SigmaClass, MClass, &MapCell)> + '_ {
        SigmaClass::ALL
            .into_iter()
            .flat_map(|s| MClass::ALL.into_iter().map(move |m| (s, m)))
            .map(move |(s, m)| (s, m, self.cell(s, m)))
    }

    /// The map entry for the cell containing `(sigma, m)`.
    pub fn select(&self, sigma: usize, m: usize) -> &'static AlgorithmDescriptor {
        let c = classify(sigma, m);
        registry::by_id(self.cell(c.sigma, c.m).algorithm).expect("map ids are registered")
    }

    /// Like [`select`](Self::select) but falls back to the cell's alternates,
    /// then to Horspool, so the result always applies at `m`.
    pub fn resolve(&self, sigma: usize, m: usize, word: WordSpec) -> &'static AlgorithmDescriptor {
        let c = classify(sigma, m);
        let cell = self.cell(c.sigma, c.m);
        std::iter::once(cell.algorithm)
            .chain(cell.alternates.iter().copied())
            .filter_map(registry::by_id)
            .find(|d| d.is_applicable(m, word))
            .unwrap_or_else(|| registry::by_id("HOR").expect("HOR is registered"))
    }

    /// Writes `sigma_class,m_class,algorithm,provenance` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["sigma_class", "m_class", "algorithm", "provenance"])?;
        for (s, m, c) in self.cells() {
            w.write_record([s.as_str(), m.as_str(), c.algorithm, c.provenance.as_str()])?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }
}

/// Selection with the default map.
pub fn select(sigma: usize, m: usize) -> &'static AlgorithmDescriptor {
    SelectionMap::default().select(sigma, m)
}

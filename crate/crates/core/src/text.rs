//! Texts, patterns and occurrence lists, plus the [`Haystack`] abstraction
//! that lets every algorithm run unchanged over plain bytes or over an
//! [`InstrumentedText`] that counts character accesses.

use std::cell::Cell;
use std::fmt;
use std::ops::Deref;
use std::path::Path;

use crate::error::{Error, Result};

/// A named, immutable byte buffer to search in.
#[derive(Clone, PartialEq, Eq)]
pub struct Text {
    id: String,
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(id: impl Into<String>, bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::EmptyTextId);
        }
        Ok(Text {
            id,
            bytes: bytes.into(),
        })
    }

    /// Reads a raw binary file; the bytes are taken as-is.
    pub fn from_file(id: impl Into<String>, path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let bytes = std::fs::read(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Text::new(id, bytes)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Number of distinct byte values present.
    pub fn sigma(&self) -> usize {
        distinct_bytes(&self.bytes)
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Text")
            .field("id", &self.id)
            .field("len", &self.bytes.len())
            .finish()
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.bytes
    }
}

pub(crate) fn distinct_bytes(bytes: &[u8]) -> usize {
    let mut seen = [false; 256];
    for &b in bytes {
        seen[b as usize] = true;
    }
    seen.iter().filter(|&&s| s).count()
}

/// A non-empty needle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<u8>);

impl Pattern {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern(bytes))
    }

    /// Parses a pattern written with `\xNN` escapes (plus `\\`, `\n`, `\t`,
    /// `\r` and `\0`). Any other byte stands for itself.
    pub fn parse_escaped(src: &str) -> Result<Self> {
        Pattern::new(unescape(src.as_bytes())?)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    // `is_empty` would always be false.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl Deref for Pattern {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern(\"{}\")", self.0.escape_ascii())
    }
}

/// Decodes backslash escapes in a byte string.
pub fn unescape(src: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(src.len());
    let mut i = 0;
    while i < src.len() {
        if src[i] != b'\\' {
            out.push(src[i]);
            i += 1;
            continue;
        }
        let esc = *src.get(i + 1).ok_or(Error::BadEscape {
            offset: i,
            reason: "dangling backslash",
        })?;
        match esc {
            b'\\' => out.push(b'\\'),
            b'n' => out.push(b'\n'),
            b't' => out.push(b'\t'),
            b'r' => out.push(b'\r'),
            b'0' => out.push(0),
            b'x' => {
                let hex = src.get(i + 2..i + 4).ok_or(Error::BadEscape {
                    offset: i,
                    reason: "\\x needs two hex digits",
                })?;
                let hi = hex_val(hex[0]);
                let lo = hex_val(hex[1]);
                match (hi, lo) {
                    (Some(hi), Some(lo)) => out.push(hi << 4 | lo),
                    _ => {
                        return Err(Error::BadEscape {
                            offset: i,
                            reason: "\\x needs two hex digits",
                        })
                    }
                }
                i += 2;
            }
            _ => {
                return Err(Error::BadEscape {
                    offset: i,
                    reason: "unknown escape",
                })
            }
        }
        i += 2;
    }
    Ok(out)
}

fn hex_val(c: u8) -> Option<u8> {
    (c as char).to_digit(16).map(|d| d as u8)
}

/// Start positions of all matches, strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Occurrences(Vec<usize>);

impl Occurrences {
    pub fn new() -> Self {
        Occurrences(Vec::new())
    }

    /// Wraps positions produced by a searcher. Debug builds check ordering.
    pub fn from_sorted(positions: Vec<usize>) -> Self {
        debug_assert!(
            positions.windows(2).all(|w| w[0] < w[1]),
            "occurrences must be strictly increasing"
        );
        Occurrences(positions)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for Occurrences {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Occurrences {
    fn from(v: Vec<usize>) -> Self {
        Occurrences(v)
    }
}

/// Read access to a text, one character at a time.
///
/// Algorithms are written against this trait so that the same code path runs
/// both in timing mode (plain slices, no overhead) and in metering mode.
pub trait Haystack {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn at(&self, i: usize) -> u8;

    /// Compares `pat` against the text at `pos`, left to right, stopping at
    /// the first mismatch. Caller guarantees `pos + pat.len() <= len()`.
    #[inline]
    fn matches_at(&self, pos: usize, pat: &[u8]) -> bool {
        pat.iter().enumerate().all(|(k, &c)| self.at(pos + k) == c)
    }
}

impl Haystack for [u8] {
    #[inline(always)]
    fn len(&self) -> usize {
        <[u8]>::len(self)
    }

    #[inline(always)]
    fn at(&self, i: usize) -> u8 {
        self[i]
    }

    #[inline]
    fn matches_at(&self, pos: usize, pat: &[u8]) -> bool {
        &self[pos..pos + pat.len()] == pat
    }
}

/// A text paired with a counter of single-character reads.
///
/// Not `Sync`: one counter, no synchronization.
pub struct InstrumentedText<'a> {
    inner: &'a [u8],
    reads: Cell<u64>,
}

impl<'a> InstrumentedText<'a> {
    pub fn new(inner: &'a [u8]) -> Self {
        InstrumentedText {
            inner,
            reads: Cell::new(0),
        }
    }

    pub fn reads(&self) -> u64 {
        self.reads.get()
    }

    pub fn reset(&self) {
        self.reads.set(0);
    }

    pub fn bytes(&self) -> &'a [u8] {
        self.inner
    }
}

impl Haystack for InstrumentedText<'_> {
    #[inline]
    fn len(&self) -> usize {
        self.inner.len()
    }

    #[inline]
    fn at(&self, i: usize) -> u8 {
        self.reads.set(self.reads.get() + 1);
        self.inner[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_pattern_rejected() {
        assert!(matches!(Pattern::new(Vec::new()), Err(Error::EmptyPattern)));
    }

    #[test]
    fn empty_id_rejected() {
        assert!(matches!(
            Text::new("", b"abc".to_vec()),
            Err(Error::EmptyTextId)
        ));
    }

    #[test]
    fn sigma_counts_distinct_bytes() {
        let t = Text::new("t", b"abcabcz".to_vec()).unwrap();
        assert_eq!(t.sigma(), 4);
        assert_eq!(Text::new("e", Vec::new()).unwrap().sigma(), 0);
    }

    #[test]
    fn escapes() {
        assert_eq!(unescape(br"a\x00\xffb").unwrap(), b"a\x00\xffb");
        assert_eq!(unescape(br"\\\n\t\r\0").unwrap(), b"\\\n\t\r\0");
        assert_eq!(unescape(br"\xAb").unwrap(), vec![0xab]);
        assert!(unescape(br"\x1").is_err());
        assert!(unescape(br"\xg0").is_err());
        assert!(unescape(br"abc\").is_err());
        assert!(unescape(br"\q").is_err());
        assert!(Pattern::parse_escaped("").is_err());
    }

    #[test]
    fn instrumented_counts_every_access() {
        let bytes = b"hello";
        let t = InstrumentedText::new(bytes);
        assert_eq!(t.at(0), b'h');
        assert_eq!(t.at(4), b'o');
        assert_eq!(t.reads(), 2);
        assert!(!t.matches_at(1, b"ex"));
        // stops after the first mismatch
        assert_eq!(t.reads(), 4);
        t.reset();
        assert_eq!(t.reads(), 0);
    }
}

use crate::text::{Haystack, InstrumentedText, Occurrences};

/// A preprocessed pattern ready to be run over any number of texts.
///
/// Implementations are immutable after construction and may be shared
/// between threads.
pub trait Searcher: Send + Sync {
    fn name(&self) -> &'static str;

    fn pattern_len(&self) -> usize;

    fn find_all(&self, text: &[u8]) -> Occurrences;

    /// Same search, with every character access counted by `text`.
    fn find_all_metered(&self, text: &InstrumentedText<'_>) -> Occurrences;
}

/// Implemented by each algorithm; the blanket [`Searcher`] impl
/// monomorphizes the scan for plain and metered haystacks.
///
/// `scan` must push every occurrence exactly once, in increasing order.
pub trait Scan: Send + Sync {
    const NAME: &'static str;

    fn m(&self) -> usize;

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>);
}

impl<S: Scan> Searcher for S {
    fn name(&self) -> &'static str {
        S::NAME
    }

    fn pattern_len(&self) -> usize {
        self.m()
    }

    fn find_all(&self, text: &[u8]) -> Occurrences {
        let mut out = Vec::new();
        self.scan(text, &mut out);
        Occurrences::from_sorted(out)
    }

    fn find_all_metered(&self, text: &InstrumentedText<'_>) -> Occurrences {
        let mut out = Vec::new();
        self.scan(text, &mut out);
        Occurrences::from_sorted(out)
    }
}

impl Searcher for Box<dyn Searcher> {
    fn name(&self) -> &'static str {
        (**self).name()
    }

    fn pattern_len(&self) -> usize {
        (**self).pattern_len()
    }

    fn find_all(&self, text: &[u8]) -> Occurrences {
        (**self).find_all(text)
    }

    fn find_all_metered(&self, text: &InstrumentedText<'_>) -> Occurrences {
        (**self).find_all_metered(text)
    }
}

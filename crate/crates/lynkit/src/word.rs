use crate::Error;

/// A nonempty sequence of byte symbols.
///
/// Emptiness is ruled out at construction so every factorization routine can
/// rely on it. Words deref to `[u8]`; display is lossy UTF-8 and intended for
/// diagnostics only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    /// Copies `bytes` into a word; empty input is an error.
    pub fn new(bytes: impl AsRef<[u8]>) -> Result<Self, Error> {
        Self::from_vec(bytes.as_ref().to_vec())
    }

    /// Takes ownership of `bytes`; empty input is an error.
    pub fn from_vec(bytes: Vec<u8>) -> Result<Self, Error> {
        if bytes.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// Length in symbols; always at least 1.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for interface completeness.
    pub fn is_empty(&self) -> bool {
        false
    }
}

impl std::ops::Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Word({})", String::from_utf8_lossy(&self.0))
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", String::from_utf8_lossy(&self.0))
    }
}

/// A half-open, nonempty index range `start..end` into a word.
///
/// Spans are the canonical way factors are reported: they stay exact even
/// when the underlying bytes are not printable.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    /// A span must be nonempty; bounds against a word are checked where a
    /// word is available, e.g. [`Factorization::from_spans`].
    pub fn new(start: usize, end: usize) -> Result<Self, Error> {
        if start >= end {
            return Err(Error::InvalidSpan {
                start,
                end,
                word_len: end,
            });
        }
        Ok(Span { start, end })
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    /// Always false; spans are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The factor this span denotes inside `bytes`.
    ///
    /// Panics if the span is out of bounds for `bytes`; spans produced by this
    /// crate are always in bounds for their word.
    pub fn slice<'a>(&self, bytes: &'a [u8]) -> &'a [u8] {
        &bytes[self.start..self.end]
    }
}

impl std::fmt::Debug for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// A word together with spans that tile it from left to right.
///
/// The spans are the ground truth; accessor methods slice the owned word, so
/// a factorization can always be recombined into exactly its word. Equality
/// compares the word and the span boundaries.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    word: Word,
    spans: Vec<Span>,
}

impl Factorization {
    /// Validates that `spans` are in bounds and tile `word` without gaps.
    pub fn from_spans(word: Word, spans: Vec<Span>) -> Result<Self, Error> {
        let n = word.len();
        let mut expected_start = 0;
        for (index, span) in spans.iter().enumerate() {
            if span.start >= span.end || span.end > n {
                return Err(Error::InvalidSpan {
                    start: span.start,
                    end: span.end,
                    word_len: n,
                });
            }
            if span.start != expected_start {
                return Err(Error::SpansNotContiguous { index });
            }
            expected_start = span.end;
        }
        if expected_start != n {
            return Err(Error::SpansNotContiguous { index: spans.len() });
        }
        Ok(Factorization { word, spans })
    }

    /// Builds the factorization whose factors have the given lengths.
    pub fn from_lengths(word: Word, lengths: &[usize]) -> Result<Self, Error> {
        let mut spans = Vec::with_capacity(lengths.len());
        let mut start = 0;
        for &len in lengths {
            spans.push(Span {
                start,
                end: start + len,
            });
            start += len;
        }
        Self::from_spans(word, spans)
    }

    /// The trivial factorization with a single factor.
    pub fn singleton(word: Word) -> Self {
        let span = Span {
            start: 0,
            end: word.len(),
        };
        Factorization {
            word,
            spans: vec![span],
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    /// Number of factors; always at least 1.
    pub fn len(&self) -> usize {
        self.spans.len()
    }

    /// Always false; a factorization has at least one factor.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn factor(&self, index: usize) -> &[u8] {
        self.spans[index].slice(&self.word)
    }

    pub fn factors(&self) -> impl Iterator<Item = &[u8]> {
        self.spans.iter().map(|s| s.slice(&self.word))
    }

    /// Factor lengths, in order.
    pub fn lengths(&self) -> Vec<usize> {
        self.spans.iter().map(Span::len).collect()
    }
}

impl std::fmt::Debug for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Factorization(")?;
        for (i, factor) in self.factors().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{}", String::from_utf8_lossy(factor))?;
        }
        write!(f, ")")
    }
}

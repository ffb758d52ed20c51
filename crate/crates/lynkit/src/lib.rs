//! Lyndon and inverse Lyndon factorizations over ordered byte alphabets.
//!
//! A *Lyndon word* is strictly smaller than all of its proper suffixes; an
//! *inverse Lyndon word* is strictly greater than all of its proper suffixes.
//! Every word factors uniquely into a nonincreasing product of Lyndon words
//! ([`cfl`]), but it can admit many inverse Lyndon factorizations. Exactly one
//! of them satisfies the border property checked by [`has_border_property`],
//! and that distinguished factorization is what [`icfl_linear`] and
//! [`icfl_recursive`] compute.
//!
//! The crate is organized in three layers:
//!
//! * word plumbing: [`OrderedAlphabet`], [`Word`], [`Span`], [`Factorization`],
//!   lexicographic comparison ([`cmp_lex`], [`ll`]) and borders
//!   ([`shortest_border`], [`all_borders`]);
//! * factorization algorithms: [`cfl`], [`cfl_in`], [`compact_factors`],
//!   [`chain_decompose`], [`icfl_linear`], [`icfl_recursive`],
//!   [`canonical_pair`], [`longest_il_suffix`], plus the property checkers
//!   [`is_inverse_lyndon_factorization`], [`has_border_property`],
//!   [`is_grouping`], [`is_compact_factorization`];
//! * the [`oracle`] module: independent brute-force reimplementations used to
//!   certify the fast algorithms on exhaustive small universes.
//!
//! ```
//! use lynkit::{icfl_linear, OrderedAlphabet, Word};
//!
//! let order = OrderedAlphabet::from_symbols(b"abcd")?;
//! let w = Word::new("dabadabdabdadac")?;
//! let f = icfl_linear(&w, &order)?;
//! let parts: Vec<&[u8]> = f.factors().collect();
//! assert_eq!(parts, [b"daba".as_slice(), b"dabdab", b"dadac"]);
//! # Ok::<(), lynkit::Error>(())
//! ```

mod alphabet;
mod border;
mod cmp;
mod icfl;
mod lyndon;
mod word;

pub mod bench;
pub mod oracle;

pub use alphabet::OrderedAlphabet;
pub use border::{all_borders, shortest_border};
pub use cmp::{cmp_lex, ll, Cmp};
pub use icfl::{
    canonical_pair, has_border_property, icfl_linear, icfl_recursive,
    is_compact_factorization, is_grouping, is_inverse_lyndon_factorization,
    longest_il_suffix, CanonicalPair,
};
pub use lyndon::{
    cfl, cfl_in, chain_decompose, compact_factors, is_anti_lyndon, is_inverse_lyndon,
    is_lyndon, ChainDecomposition, CompactRun,
};
pub use word::{Factorization, Span, Word};

/// Errors reported by factorization routines and constructors.
///
/// Contract violations (empty words, foreign symbols, malformed spans) are
/// rejected eagerly so that every constructed value upholds its invariants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// Words are nonempty by construction.
    #[error("word must be nonempty")]
    EmptyWord,

    /// An alphabet needs at least one symbol.
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    /// Alphabet symbols must be pairwise distinct.
    #[error("duplicate symbol {0:#04x} in alphabet")]
    DuplicateSymbol(u8),

    /// The word contains a byte the alphabet does not rank.
    #[error("symbol {0:#04x} is not in the alphabet")]
    SymbolNotInAlphabet(u8),

    /// A span must satisfy `start < end <= word_len`.
    #[error("span {start}..{end} is invalid for a word of length {word_len}")]
    InvalidSpan {
        start: usize,
        end: usize,
        word_len: usize,
    },

    /// Factorization spans must tile the word left to right without gaps.
    #[error("span at index {index} does not continue where the previous one ended")]
    SpansNotContiguous { index: usize },

    /// Compact runs carry at least one repetition of their root.
    #[error("compact run exponent must be at least 1")]
    ZeroExponent,

    /// Input runs were promised nonincreasing but are not.
    #[error("run roots are not nonincreasing at index {index}")]
    RunsNotNonincreasing { index: usize },

    /// The canonical pair of `w` exists only when `w` is *not* inverse Lyndon.
    #[error("word is inverse Lyndon, so it has no canonical pair")]
    InverseLyndonWord,

    /// Brute-force search refuses inputs whose cost would explode.
    #[error("word length {len} exceeds the brute-force bound {bound}")]
    LengthBoundExceeded { len: usize, bound: usize },

    /// Exhaustive search found a number of factorizations that contradicts a
    /// uniqueness guarantee.
    #[error("expected exactly one factorization, found {count}")]
    UniquenessViolation { count: usize },

    /// An internal invariant failed; indicates a bug in this crate.
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

use crate::{Error, OrderedAlphabet, Word};

/// Outcome of a lexicographic comparison.
///
/// `x` can be smaller than `y` for two reasons: `x` is a proper prefix of
/// `y`, or the words disagree at their first mismatch. Several factorization
/// arguments hinge on that distinction, so `Less` carries it.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Cmp {
    /// `x` precedes `y`; `non_prefix` is true when a symbol mismatch, rather
    /// than `x` being a proper prefix of `y`, decides it.
    Less { non_prefix: bool },
    Equal,
    Greater,
}

impl Cmp {
    pub fn is_less(self) -> bool {
        matches!(self, Cmp::Less { .. })
    }

    /// True exactly for the mismatch-witnessed strict order used between
    /// adjacent factors of an inverse Lyndon factorization.
    pub fn is_less_non_prefix(self) -> bool {
        matches!(self, Cmp::Less { non_prefix: true })
    }
}

/// Compares `x` and `y` in the lexicographic order induced by `alphabet`.
pub fn cmp_lex(x: &Word, y: &Word, alphabet: &OrderedAlphabet) -> Result<Cmp, Error> {
    alphabet.validate(x)?;
    alphabet.validate(y)?;
    Ok(cmp_bytes(x, y, alphabet))
}

/// The strict order `x` before `y` witnessed by a symbol mismatch.
///
/// Equivalent to `x` being lexicographically smaller without being a proper
/// prefix of `y`. Consecutive factors of every inverse Lyndon factorization
/// are related this way.
pub fn ll(x: &Word, y: &Word, alphabet: &OrderedAlphabet) -> Result<bool, Error> {
    Ok(cmp_lex(x, y, alphabet)?.is_less_non_prefix())
}

/// Comparison on byte slices already validated against `alphabet`.
pub(crate) fn cmp_bytes(x: &[u8], y: &[u8], alphabet: &OrderedAlphabet) -> Cmp {
    for (&cx, &cy) in x.iter().zip(y.iter()) {
        if cx != cy {
            let rx = alphabet.rank_unchecked(cx);
            let ry = alphabet.rank_unchecked(cy);
            return if rx < ry {
                Cmp::Less { non_prefix: true }
            } else {
                Cmp::Greater
            };
        }
    }
    match x.len().cmp(&y.len()) {
        std::cmp::Ordering::Less => Cmp::Less { non_prefix: false },
        std::cmp::Ordering::Equal => Cmp::Equal,
        std::cmp::Ordering::Greater => Cmp::Greater,
    }
}

/// Slice counterpart of [`ll`]; cost is bounded by `min(|x|, |y|) + 1`.
pub(crate) fn ll_bytes(x: &[u8], y: &[u8], alphabet: &OrderedAlphabet) -> bool {
    cmp_bytes(x, y, alphabet).is_less_non_prefix()
}

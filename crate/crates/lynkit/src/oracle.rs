//! Brute-force reference implementations and exhaustive verifiers.
//!
//! Everything here works directly from definitions: quadratic suffix scans,
//! literal rotation checks, and full composition enumeration. None of it
//! shares algorithmic code with the linear implementations it certifies,
//! which is what makes differential runs against this module meaningful.
//!
//! Costs are exponential in the word length, so the entry points refuse
//! words longer than [`DEFAULT_MAX_LEN`] unless a caller passes an explicit
//! bound.

use crate::{
    icfl_linear, icfl_recursive, is_compact_factorization, is_grouping, Error, Factorization,
    OrderedAlphabet, Span, Word,
};

/// Default refusal threshold for exhaustive searches; a word of this length
/// already has 2^15 compositions.
pub const DEFAULT_MAX_LEN: usize = 16;

/// One theorem checked per word by [`verify_claims`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// Exactly one enumerated inverse Lyndon factorization has the border
    /// property.
    UniqueBorderIlf,
    /// That unique factorization equals the linear algorithm's output.
    MatchesLinear,
    /// That unique factorization equals the recursive algorithm's output.
    MatchesRecursive,
    /// The canonical factorization is a grouping of the inverse-order
    /// factorization.
    IsGrouping,
    /// The canonical factorization is a compact factorization.
    IsCompactFactorization,
    /// Its last factor is the longest inverse Lyndon suffix.
    LastFactorIsLongestSuffix,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::UniqueBorderIlf,
        Claim::MatchesLinear,
        Claim::MatchesRecursive,
        Claim::IsGrouping,
        Claim::IsCompactFactorization,
        Claim::LastFactorIsLongestSuffix,
    ];
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Claim::UniqueBorderIlf => "unique border ILF",
            Claim::MatchesLinear => "matches linear algorithm",
            Claim::MatchesRecursive => "matches recursive algorithm",
            Claim::IsGrouping => "is a grouping",
            Claim::IsCompactFactorization => "is a compact factorization",
            Claim::LastFactorIsLongestSuffix => "last factor is longest inverse Lyndon suffix",
        };
        f.write_str(name)
    }
}

/// Everything [`verify_claims`] learned about one word.
#[derive(Clone, Debug)]
pub struct EnumerationReport {
    word: Word,
    all_ilfs: Vec<Factorization>,
    border_ilfs: Vec<Factorization>,
    failures: Vec<Claim>,
}

impl EnumerationReport {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Every inverse Lyndon factorization of the word, in span order.
    pub fn all_ilfs(&self) -> &[Factorization] {
        &self.all_ilfs
    }

    /// The subset with the border property; exactly one element on pass.
    pub fn border_ilfs(&self) -> &[Factorization] {
        &self.border_ilfs
    }

    /// Claims that failed; empty on pass.
    pub fn failures(&self) -> &[Claim] {
        &self.failures
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All inverse Lyndon factorizations of `w`, via pruned composition search
/// against the quadratic predicates, under the default length bound.
///
/// Deterministic order: lexicographic in the factor-length vector.
pub fn enumerate_ilfs(w: &Word, alphabet: &OrderedAlphabet) -> Result<Vec<Factorization>, Error> {
    enumerate_ilfs_bounded(w, alphabet, DEFAULT_MAX_LEN)
}

/// [`enumerate_ilfs`] with an explicit refusal bound.
pub fn enumerate_ilfs_bounded(
    w: &Word,
    alphabet: &OrderedAlphabet,
    bound: usize,
) -> Result<Vec<Factorization>, Error> {
    alphabet.validate(w)?;
    let n = w.len();
    if n > bound {
        return Err(Error::LengthBoundExceeded { len: n, bound });
    }

    // il[i][j - i - 1] says whether w[i..j] is an inverse Lyndon word.
    let il: Vec<Vec<bool>> = (0..n)
        .map(|i| (i + 1..=n).map(|j| is_il(&w[i..j], alphabet)).collect())
        .collect();

    let mut out = Vec::new();
    let mut acc: Vec<Span> = Vec::new();
    dfs_ilfs(w, alphabet, &il, 0, &mut acc, &mut out);
    out.into_iter()
        .map(|spans| Factorization::from_spans(w.clone(), spans))
        .collect()
}

fn dfs_ilfs(
    w: &Word,
    alphabet: &OrderedAlphabet,
    il: &[Vec<bool>],
    start: usize,
    acc: &mut Vec<Span>,
    out: &mut Vec<Vec<Span>>,
) {
    let n = w.len();
    for end in start + 1..=n {
        if !il[start][end - start - 1] {
            continue;
        }
        if let Some(prev) = acc.last() {
            if !ll(prev.slice(w), &w[start..end], alphabet) {
                continue;
            }
        }
        acc.push(Span { start, end });
        if end == n {
            out.push(acc.clone());
        } else {
            dfs_ilfs(w, alphabet, il, end, acc, out);
        }
        acc.pop();
    }
}

/// Literal Lyndon test: `w` must be strictly smaller than each of its
/// nontrivial rotations, which also rules out imprimitive words.
pub fn brute_is_lyndon(w: &Word, alphabet: &OrderedAlphabet) -> Result<bool, Error> {
    alphabet.validate(w)?;
    if w.len() > DEFAULT_MAX_LEN {
        return Err(Error::LengthBoundExceeded {
            len: w.len(),
            bound: DEFAULT_MAX_LEN,
        });
    }
    Ok(is_lyndon_rotations(w, alphabet))
}

/// Finds the unique nonincreasing composition of `w` into Lyndon words by
/// exhaustive search; errors if the count is not exactly one, since that
/// would contradict the factorization theorem.
pub fn brute_cfl(w: &Word, alphabet: &OrderedAlphabet) -> Result<Factorization, Error> {
    alphabet.validate(w)?;
    let n = w.len();
    if n > DEFAULT_MAX_LEN {
        return Err(Error::LengthBoundExceeded {
            len: n,
            bound: DEFAULT_MAX_LEN,
        });
    }

    let lyndon: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (i + 1..=n)
                .map(|j| is_lyndon_rotations(&w[i..j], alphabet))
                .collect()
        })
        .collect();

    let mut found = Vec::new();
    let mut acc: Vec<Span> = Vec::new();
    dfs_cfl(w, alphabet, &lyndon, 0, &mut acc, &mut found);
    if found.len() != 1 {
        return Err(Error::UniquenessViolation { count: found.len() });
    }
    Factorization::from_spans(w.clone(), found.pop().expect("exactly one"))
}

fn dfs_cfl(
    w: &Word,
    alphabet: &OrderedAlphabet,
    lyndon: &[Vec<bool>],
    start: usize,
    acc: &mut Vec<Span>,
    out: &mut Vec<Vec<Span>>,
) {
    let n = w.len();
    for end in start + 1..=n {
        if !lyndon[start][end - start - 1] {
            continue;
        }
        if let Some(prev) = acc.last() {
            // Nonincreasing: the previous factor must not be smaller.
            if less(prev.slice(w), &w[start..end], alphabet) {
                continue;
            }
        }
        acc.push(Span { start, end });
        if end == n {
            out.push(acc.clone());
        } else {
            dfs_cfl(w, alphabet, lyndon, end, acc, out);
        }
        acc.pop();
    }
}

/// Runs every claim against every word of length 1..=maxlen over `alphabet`.
///
/// Failures are collected in the reports, not raised; the only error is a
/// maxlen beyond the exhaustive-search bound.
pub fn verify_claims(
    maxlen: usize,
    alphabet: &OrderedAlphabet,
) -> Result<Vec<EnumerationReport>, Error> {
    if maxlen > DEFAULT_MAX_LEN {
        return Err(Error::LengthBoundExceeded {
            len: maxlen,
            bound: DEFAULT_MAX_LEN,
        });
    }
    words_up_to(alphabet, maxlen).map(|w| check_word(&w, alphabet)).collect()
}

/// The claim suite for a single word; see [`Claim`] for the list.
pub fn check_word(w: &Word, alphabet: &OrderedAlphabet) -> Result<EnumerationReport, Error> {
    let all_ilfs = enumerate_ilfs(w, alphabet)?;
    let border_ilfs: Vec<Factorization> = all_ilfs
        .iter()
        .filter(|f| {
            let factors: Vec<&[u8]> = f.factors().collect();
            border_property(&factors)
        })
        .cloned()
        .collect();

    let linear = icfl_linear(w, alphabet)?;
    let recursive = icfl_recursive(w, alphabet)?;

    let unique = border_ilfs.len() == 1;
    let canonical = border_ilfs.first();
    let mut failures = Vec::new();
    let mut claim = |ok: bool, c: Claim| {
        if !ok {
            failures.push(c);
        }
    };
    claim(unique, Claim::UniqueBorderIlf);
    claim(unique && canonical == Some(&linear), Claim::MatchesLinear);
    claim(unique && canonical == Some(&recursive), Claim::MatchesRecursive);
    claim(
        unique && is_grouping(canonical.expect("unique"), alphabet)?,
        Claim::IsGrouping,
    );
    claim(
        unique && is_compact_factorization(canonical.expect("unique"), alphabet)?,
        Claim::IsCompactFactorization,
    );
    let longest = longest_il_suffix_scan(w, alphabet);
    claim(
        unique
            && canonical
                .map(|f| f.factor(f.len() - 1) == longest)
                .unwrap_or(false),
        Claim::LastFactorIsLongestSuffix,
    );

    Ok(EnumerationReport {
        word: w.clone(),
        all_ilfs,
        border_ilfs,
        failures,
    })
}

/// Every word of length 1..=maxlen over `alphabet`, by length then by rank,
/// materialized lazily.
pub fn words_up_to(alphabet: &OrderedAlphabet, maxlen: usize) -> WordsUpTo {
    WordsUpTo {
        symbols: alphabet.symbols().to_vec(),
        maxlen,
        digits: Vec::new(),
        done: maxlen == 0,
    }
}

/// Iterator behind [`words_up_to`]; an odometer over symbol ranks.
pub struct WordsUpTo {
    symbols: Vec<u8>,
    maxlen: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for WordsUpTo {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if self.digits.is_empty() {
            self.digits.push(0);
        } else {
            let mut i = self.digits.len();
            while i > 0 {
                i -= 1;
                self.digits[i] += 1;
                if self.digits[i] < self.symbols.len() {
                    break;
                }
                self.digits[i] = 0;
                if i == 0 {
                    // Carry past the leftmost digit: step up to the next length.
                    if self.digits.len() == self.maxlen {
                        self.done = true;
                        return None;
                    }
                    self.digits.push(0);
                }
            }
        }
        let bytes: Vec<u8> = self.digits.iter().map(|&d| self.symbols[d]).collect();
        Some(Word::from_vec(bytes).expect("digits are nonempty"))
    }
}

// Definition-level predicates, quadratic or worse on purpose.

fn less(x: &[u8], y: &[u8], alphabet: &OrderedAlphabet) -> bool {
    for (&cx, &cy) in x.iter().zip(y.iter()) {
        let rx = alphabet.rank(cx).expect("validated");
        let ry = alphabet.rank(cy).expect("validated");
        if rx != ry {
            return rx < ry;
        }
    }
    x.len() < y.len()
}

fn proper_prefix(x: &[u8], y: &[u8]) -> bool {
    x.len() < y.len() && x == &y[..x.len()]
}

fn ll(x: &[u8], y: &[u8], alphabet: &OrderedAlphabet) -> bool {
    less(x, y, alphabet) && !proper_prefix(x, y)
}

fn is_il(x: &[u8], alphabet: &OrderedAlphabet) -> bool {
    (1..x.len()).all(|i| less(&x[i..], x, alphabet))
}

fn is_lyndon_rotations(w: &[u8], alphabet: &OrderedAlphabet) -> bool {
    let n = w.len();
    for rot in 1..n {
        let mut decided = false;
        for i in 0..n {
            let rx = alphabet.rank(w[i]).expect("validated");
            let ry = alphabet.rank(w[(rot + i) % n]).expect("validated");
            if rx != ry {
                if rx > ry {
                    return false;
                }
                decided = true;
                break;
            }
        }
        if !decided {
            // Equal to a nontrivial rotation: not primitive.
            return false;
        }
    }
    true
}

fn border_lens(x: &[u8]) -> Vec<usize> {
    (1..x.len()).filter(|&len| x[..len] == x[x.len() - len..]).collect()
}

/// Full-chain border-property check: every border of every factor, not just
/// the shortest, is tested against the next factor.
fn border_property(factors: &[&[u8]]) -> bool {
    factors.windows(2).all(|pair| {
        border_lens(pair[0])
            .into_iter()
            .all(|len| !(len <= pair[1].len() && pair[0][..len] == pair[1][..len]))
    })
}

fn longest_il_suffix_scan<'a>(w: &'a [u8], alphabet: &OrderedAlphabet) -> &'a [u8] {
    for start in 0..w.len() {
        if is_il(&w[start..], alphabet) {
            return &w[start..];
        }
    }
    unreachable!("a single symbol is always inverse Lyndon")
}

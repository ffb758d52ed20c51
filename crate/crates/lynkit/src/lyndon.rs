use crate::border::shortest_border_len;
use crate::{Error, OrderedAlphabet, Span, Word};

/// A maximal run `root^exponent` of equal factors inside a Lyndon
/// factorization.
///
/// Duval's algorithm emits factors grouped into such runs; in a nonincreasing
/// factorization equal factors are always adjacent, so runs are also the
/// maximal compact sequences of the factorization they came from.
#[derive(Clone, PartialEq, Eq)]
pub struct CompactRun {
    root: Word,
    exponent: usize,
    span: Span,
}

impl CompactRun {
    /// A run of `exponent` copies of `root` starting at `start` in its word.
    ///
    /// The covered span is derived, so its length is `exponent * |root|` by
    /// construction.
    pub fn new(root: Word, exponent: usize, start: usize) -> Result<Self, Error> {
        if exponent == 0 {
            return Err(Error::ZeroExponent);
        }
        let span = Span {
            start,
            end: start + exponent * root.len(),
        };
        Ok(CompactRun {
            root,
            exponent,
            span,
        })
    }

    pub fn root(&self) -> &Word {
        &self.root
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// The span covering all `exponent` repetitions.
    pub fn span(&self) -> Span {
        self.span
    }

    /// One span per repetition of the root, left to right.
    pub fn factor_spans(&self) -> impl Iterator<Item = Span> + '_ {
        let len = self.root.len();
        (0..self.exponent).map(move |i| Span {
            start: self.span.start + i * len,
            end: self.span.start + (i + 1) * len,
        })
    }
}

impl std::fmt::Debug for CompactRun {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})^{}", self.root, self.exponent)
    }
}

/// The runs of a nonincreasing factorization grouped into maximal chains
/// under the prefix order.
///
/// Each chain is a maximal stretch of consecutive runs in which every root is
/// a prefix of (or equal to) the root before it. Chains partition the run
/// sequence, so concatenating them restores the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Vec<CompactRun>>,
}

impl ChainDecomposition {
    pub fn chains(&self) -> &[Vec<CompactRun>] {
        &self.chains
    }

    /// Number of chains.
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// The span each chain covers, in order.
    pub fn chain_spans(&self) -> Vec<Span> {
        self.chains
            .iter()
            .map(|chain| Span {
                start: chain.first().expect("chains are nonempty").span().start,
                end: chain.last().expect("chains are nonempty").span().end,
            })
            .collect()
    }

    /// All runs in their original order.
    pub fn runs(&self) -> impl Iterator<Item = &CompactRun> {
        self.chains.iter().flatten()
    }
}

/// True iff `w` is strictly smaller than all of its nonempty proper suffixes
/// under `alphabet`'s order.
///
/// Linear time: `w` is Lyndon exactly when its longest Lyndon prefix is `w`
/// itself, which the first step of Duval's scan reports.
pub fn is_lyndon(w: &Word, alphabet: &OrderedAlphabet) -> Result<bool, Error> {
    alphabet.validate(w)?;
    let (root_len, _) = lyndon_prefix(w, alphabet);
    Ok(root_len == w.len())
}

/// True iff `w` is Lyndon under the inverse of `alphabet`'s order.
pub fn is_anti_lyndon(w: &Word, alphabet: &OrderedAlphabet) -> Result<bool, Error> {
    is_lyndon(w, &alphabet.inverse())
}

/// True iff every nonempty proper suffix of `w` is strictly smaller than `w`.
///
/// Linear time via the prenecklace characterization: `w` is inverse Lyndon
/// exactly when it is a prefix of a power of an anti-Lyndon word, i.e. a
/// prenecklace under the inverse order.
pub fn is_inverse_lyndon(w: &Word, alphabet: &OrderedAlphabet) -> Result<bool, Error> {
    alphabet.validate(w)?;
    Ok(prenecklace_failure(w, &alphabet.inverse()).is_none())
}

/// The unique nonincreasing Lyndon factorization of `w`, as maximal runs.
///
/// Roots are strictly decreasing Lyndon words under `alphabet`; repeating
/// each root by its exponent and concatenating restores `w`.
pub fn cfl(w: &Word, alphabet: &OrderedAlphabet) -> Result<Vec<CompactRun>, Error> {
    alphabet.validate(w)?;
    Ok(runs_of(w, alphabet))
}

/// The Lyndon factorization of `w` under the inverse order, as maximal runs.
///
/// Roots are anti-Lyndon words. Flattening gives the inverse-order
/// counterpart of [`cfl`].
pub fn cfl_in(w: &Word, alphabet: &OrderedAlphabet) -> Result<Vec<CompactRun>, Error> {
    alphabet.validate(w)?;
    Ok(runs_of(w, &alphabet.inverse()))
}

/// The maximal compact sequences of the inverse-order factorization of `w`.
///
/// Equal factors of a nonincreasing factorization are necessarily adjacent,
/// so the run list of [`cfl_in`] is already the compact decomposition; this
/// is the same data under its other name.
pub fn compact_factors(w: &Word, alphabet: &OrderedAlphabet) -> Result<Vec<CompactRun>, Error> {
    cfl_in(w, alphabet)
}

/// Groups consecutive runs into maximal chains under the prefix order.
///
/// Expects the run list of an inverse-order factorization: adjacent spans
/// must be contiguous and roots nonincreasing under the inverse order. A new
/// chain starts exactly where the next root stops being a prefix of the
/// previous one.
pub fn chain_decompose(
    runs: &[CompactRun],
    alphabet: &OrderedAlphabet,
) -> Result<ChainDecomposition, Error> {
    use crate::cmp::cmp_bytes;

    for run in runs {
        alphabet.validate(run.root())?;
    }
    let inverse = alphabet.inverse();
    for (index, pair) in runs.windows(2).enumerate() {
        if pair[0].span().end != pair[1].span().start {
            return Err(Error::SpansNotContiguous { index: index + 1 });
        }
        if cmp_bytes(pair[0].root(), pair[1].root(), &inverse).is_less() {
            return Err(Error::RunsNotNonincreasing { index: index + 1 });
        }
    }

    let mut chains: Vec<Vec<CompactRun>> = Vec::new();
    for run in runs {
        let continues = chains.last().is_some_and(|chain| {
            let prev = chain.last().expect("chains are nonempty").root();
            run.root().len() <= prev.len() && prev[..run.root().len()] == **run.root()
        });
        if continues {
            chains.last_mut().expect("just checked").push(run.clone());
        } else {
            chains.push(vec![run.clone()]);
        }
    }
    Ok(ChainDecomposition { chains })
}

/// Longest Lyndon prefix of `w` under `order`: (root length, exponent of the
/// maximal leading power of that root).
pub(crate) fn lyndon_prefix(w: &[u8], order: &OrderedAlphabet) -> (usize, usize) {
    debug_assert!(!w.is_empty());
    let n = w.len();
    let mut j = 1;
    let mut k = 0;
    while j < n {
        let prev = order.rank_unchecked(w[k]);
        let cur = order.rank_unchecked(w[j]);
        if prev > cur {
            break;
        }
        k = if prev < cur { 0 } else { k + 1 };
        j += 1;
    }
    let root_len = j - k;
    (root_len, j / root_len)
}

/// Duval's algorithm under `order`, with equal adjacent factors grouped:
/// returns (start, root length, exponent) per maximal run.
pub(crate) fn duval_runs(w: &[u8], order: &OrderedAlphabet) -> Vec<(usize, usize, usize)> {
    let n = w.len();
    let mut runs = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n {
            let prev = order.rank_unchecked(w[k]);
            let cur = order.rank_unchecked(w[j]);
            if prev > cur {
                break;
            }
            k = if prev < cur { i } else { k + 1 };
            j += 1;
        }
        // w[i..j] = root^e * (proper prefix of root); the run is maximal
        // because the scan only stops at a strict descent or at the end.
        let root_len = j - k;
        let exponent = (j - i) / root_len;
        runs.push((i, root_len, exponent));
        i += root_len * exponent;
    }
    runs
}

/// First position where the prefix of `w` stops being a prenecklace under
/// `order`, with the period of the prefix before it; None when all of `w` is
/// a prenecklace.
///
/// A prenecklace is a prefix of a power of a Lyndon word. The scan keeps the
/// candidate period p: an equal symbol extends the period, a strictly larger
/// one makes the whole prefix Lyndon (period t+1), a strictly smaller one
/// ends the prenecklace.
pub(crate) fn prenecklace_failure(w: &[u8], order: &OrderedAlphabet) -> Option<(usize, usize)> {
    debug_assert!(!w.is_empty());
    let mut period = 1;
    for t in 1..w.len() {
        let prev = order.rank_unchecked(w[t - period]);
        let cur = order.rank_unchecked(w[t]);
        if cur > prev {
            period = t + 1;
        } else if cur < prev {
            return Some((t, period));
        }
    }
    None
}

fn runs_of(w: &[u8], order: &OrderedAlphabet) -> Vec<CompactRun> {
    duval_runs(w, order)
        .into_iter()
        .map(|(start, root_len, exponent)| {
            let root = Word::new(&w[start..start + root_len]).expect("roots are nonempty");
            debug_assert!(
                shortest_border_len(&root).is_none(),
                "Lyndon roots are unbordered"
            );
            CompactRun {
                root,
                exponent,
                span: Span {
                    start,
                    end: start + root_len * exponent,
                },
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmp::cmp_bytes;

    fn w(s: &str) -> Word {
        Word::new(s).unwrap()
    }

    fn ab() -> OrderedAlphabet {
        OrderedAlphabet::from_symbols(b"ab").unwrap()
    }

    fn abcd() -> OrderedAlphabet {
        OrderedAlphabet::from_symbols(b"abcd").unwrap()
    }

    fn run_view(runs: &[CompactRun]) -> Vec<(String, usize)> {
        runs.iter()
            .map(|r| (r.root().to_string(), r.exponent()))
            .collect()
    }

    #[test]
    fn lyndon_classification_examples() {
        let a = ab();
        for s in ["a", "b", "aaab", "abbb", "aabab", "aababaabb"] {
            assert!(is_lyndon(&w(s), &a).unwrap(), "{s} should be Lyndon");
        }
        for s in ["abab", "aba", "abaab"] {
            assert!(!is_lyndon(&w(s), &a).unwrap(), "{s} should not be Lyndon");
        }
    }

    #[test]
    fn anti_lyndon_examples() {
        assert!(is_anti_lyndon(&w("dab"), &abcd()).unwrap());
        // baaab has border b, and anti-Lyndon words are unbordered.
        assert!(!is_anti_lyndon(&w("baaab"), &ab()).unwrap());
        assert!(is_anti_lyndon(&w("b"), &ab()).unwrap());
        assert!(is_anti_lyndon(&w("baa"), &ab()).unwrap());
    }

    #[test]
    fn inverse_lyndon_examples() {
        let a = ab();
        for s in ["a", "b", "aaaaa", "bbba", "baaab", "bbaba", "bbababbaa"] {
            assert!(is_inverse_lyndon(&w(s), &a).unwrap(), "{s} should be IL");
        }
        for s in ["aaba", "aabba", "ab"] {
            assert!(!is_inverse_lyndon(&w(s), &a).unwrap(), "{s} should not be IL");
        }
        assert!(is_inverse_lyndon(&w("dab"), &abcd()).unwrap());
    }

    #[test]
    fn cfl_small_cases() {
        assert_eq!(run_view(&cfl(&w("aba"), &ab()).unwrap()), [("ab".into(), 1), ("a".into(), 1)]);
        assert_eq!(run_view(&cfl(&w("abab"), &ab()).unwrap()), [("ab".into(), 2)]);
        assert_eq!(run_view(&cfl(&w("aababaabb"), &ab()).unwrap()), [("aababaabb".into(), 1)]);
        assert_eq!(
            run_view(&cfl(&w("bbaaaba"), &ab()).unwrap()),
            [("b".into(), 2), ("aaab".into(), 1), ("a".into(), 1)]
        );
    }

    #[test]
    fn cfl_in_worked_examples() {
        assert_eq!(
            run_view(&cfl_in(&w("dabadabdabdadac"), &abcd()).unwrap()),
            [("daba".into(), 1), ("dab".into(), 2), ("dadac".into(), 1)]
        );
        assert_eq!(
            run_view(&cfl_in(&w("dabadabdabdabdadac"), &abcd()).unwrap()),
            [("daba".into(), 1), ("dab".into(), 3), ("dadac".into(), 1)]
        );
        assert_eq!(
            run_view(&cfl_in(&w("dabdadacddbdc"), &abcd()).unwrap()),
            [("dab".into(), 1), ("dadac".into(), 1), ("ddbdc".into(), 1)]
        );
        assert_eq!(run_view(&cfl_in(&w("aaaaa"), &ab()).unwrap()), [("a".into(), 5)]);
    }

    #[test]
    fn runs_tile_the_word_with_decreasing_roots() {
        let a = ab();
        for s in ["abaabbab", "bbbaaa", "abababa", "a", "babab"] {
            let word = w(s);
            let runs = cfl(&word, &a).unwrap();
            let mut pos = 0;
            for run in &runs {
                assert_eq!(run.span().start, pos);
                assert_eq!(run.span().len(), run.exponent() * run.root().len());
                for span in run.factor_spans() {
                    assert_eq!(span.slice(&word), run.root().as_bytes());
                }
                pos = run.span().end;
            }
            assert_eq!(pos, word.len());
            for pair in runs.windows(2) {
                assert_eq!(cmp_bytes(pair[0].root(), pair[1].root(), &a), crate::Cmp::Greater);
            }
        }
    }

    #[test]
    fn compact_factors_equal_inverse_runs() {
        let word = w("dabadabdabdabdadac");
        assert_eq!(
            compact_factors(&word, &abcd()).unwrap(),
            cfl_in(&word, &abcd()).unwrap()
        );
    }

    #[test]
    fn chain_decompose_worked_examples() {
        let a = abcd();
        let runs = cfl_in(&w("dabadabdabdadac"), &a).unwrap();
        let chains = chain_decompose(&runs, &a).unwrap();
        let view: Vec<Vec<(String, usize)>> =
            chains.chains().iter().map(|c| run_view(c)).collect();
        assert_eq!(
            view,
            [
                vec![("daba".into(), 1), ("dab".into(), 2)],
                vec![("dadac".into(), 1)]
            ]
        );
        assert_eq!(
            chains.chain_spans(),
            [Span { start: 0, end: 10 }, Span { start: 10, end: 15 }]
        );

        let runs = cfl_in(&w("dabdadacddbdc"), &a).unwrap();
        let chains = chain_decompose(&runs, &a).unwrap();
        assert_eq!(chains.len(), 3);
        for chain in chains.chains() {
            assert_eq!(chain.len(), 1);
        }
    }

    #[test]
    fn chain_decompose_rejects_increasing_input() {
        let a = abcd();
        // (dab, daba) increases under the inverse order: daba ≺_in dab fails.
        let runs = vec![
            CompactRun::new(w("dab"), 1, 0).unwrap(),
            CompactRun::new(w("daba"), 1, 3).unwrap(),
        ];
        assert_eq!(
            chain_decompose(&runs, &a),
            Err(Error::RunsNotNonincreasing { index: 1 })
        );
        // Gap between spans.
        let runs = vec![
            CompactRun::new(w("daba"), 1, 0).unwrap(),
            CompactRun::new(w("dab"), 1, 5).unwrap(),
        ];
        assert_eq!(
            chain_decompose(&runs, &a),
            Err(Error::SpansNotContiguous { index: 1 })
        );
    }

    #[test]
    fn compact_run_rejects_zero_exponent() {
        assert_eq!(
            CompactRun::new(w("ab"), 0, 0),
            Err(Error::ZeroExponent)
        );
    }

    #[test]
    fn single_run_is_one_chain() {
        let a = ab();
        let runs = cfl_in(&w("baabaa"), &a).unwrap();
        let chains = chain_decompose(&runs, &a).unwrap();
        assert_eq!(chains.len(), 1);
    }
}

use crate::border::{border_len_chain, shortest_border_len};
use crate::cmp::ll_bytes;
use crate::lyndon::{duval_runs, prenecklace_failure};
use crate::{Error, Factorization, OrderedAlphabet, Span, Word};

/// The canonical split of the shortest non-inverse-Lyndon prefix of a word.
///
/// For a word `w` that is not inverse Lyndon, the shortest prefix `z` that is
/// not inverse Lyndon decomposes as `z = r·a·s·r·b` where `r` is the shortest
/// prefix admitting such a split and `a` precedes `b` in the active order.
/// The pair is `p = r·a·s` and `p_bar = r·b`; `p_bar` is itself an inverse
/// Lyndon word, and `p` is the first factor the recursive factorization
/// peels off.
#[derive(Clone, PartialEq, Eq)]
pub struct CanonicalPair {
    p: Word,
    p_bar: Word,
    r_len: usize,
}

impl CanonicalPair {
    /// The left half `r·a·s`; a proper prefix of the word it was built from.
    pub fn p(&self) -> &Word {
        &self.p
    }

    /// The right half `r·b`; always an inverse Lyndon word.
    pub fn p_bar(&self) -> &Word {
        &self.p_bar
    }

    /// The shared prefix `r`; possibly empty.
    pub fn r(&self) -> &[u8] {
        &self.p[..self.r_len]
    }

    /// The tail `s` of `p = r·a·s`; possibly empty.
    pub fn s(&self) -> &[u8] {
        &self.p[self.r_len + 1..]
    }

    /// The mismatch witness `(a, b)`: `a` follows `r` inside `p`, `b` ends
    /// `p_bar`, and `a` strictly precedes `b` in the active order.
    pub fn mismatch(&self) -> (u8, u8) {
        (self.p[self.r_len], self.p_bar[self.r_len])
    }

    /// Length of `z = p·p_bar`, the shortest non-inverse-Lyndon prefix.
    pub fn prefix_len(&self) -> usize {
        self.p.len() + self.p_bar.len()
    }
}

impl std::fmt::Debug for CanonicalPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CanonicalPair(p={}, p_bar={}, r={})",
            self.p,
            self.p_bar,
            String::from_utf8_lossy(self.r())
        )
    }
}

/// Computes the canonical pair of `w`; `w` must not be inverse Lyndon.
pub fn canonical_pair(w: &Word, alphabet: &OrderedAlphabet) -> Result<CanonicalPair, Error> {
    alphabet.validate(w)?;
    let inverse = alphabet.inverse();
    let (t, _) = prenecklace_failure(w, &inverse).ok_or(Error::InverseLyndonWord)?;
    let (p_len, r_len) = canonical_split(w, t, alphabet)?;
    Ok(CanonicalPair {
        p: Word::new(&w[..p_len]).expect("p is nonempty"),
        p_bar: Word::new(&w[p_len..=t]).expect("p_bar is nonempty"),
        r_len,
    })
}

/// Locates the split of `z = w[..=t]` (the shortest non-inverse-Lyndon
/// prefix, `t` from the prenecklace scan) and returns `(|p|, |r|)`.
///
/// In any valid split `z = r·a·s·r·b`, the second occurrence of `r` makes
/// `r` a border of `z` minus its final symbol, and borders nested shortest
/// first are exactly the failure chain. The shortest border whose following
/// symbol precedes `b` is therefore the canonical `r`; one always exists,
/// because the partial period left by the prenecklace scan qualifies.
fn canonical_split(w: &[u8], t: usize, alphabet: &OrderedAlphabet) -> Result<(usize, usize), Error> {
    let b_rank = alphabet.rank_unchecked(w[t]);
    let head = &w[..t];
    let mut chosen = None;
    if alphabet.rank_unchecked(w[0]) < b_rank {
        chosen = Some(0);
    } else {
        for len in border_len_chain(head) {
            // Border lengths ascend; past t/2 the split r·a·s·r·b no longer fits.
            if 2 * len >= t {
                break;
            }
            if alphabet.rank_unchecked(w[len]) < b_rank {
                chosen = Some(len);
                break;
            }
        }
    }
    let r_len = chosen.ok_or(Error::Internal("no border admits a canonical split"))?;
    #[cfg(debug_assertions)]
    assert_canonical_split(w, t, r_len, alphabet);
    Ok((t - r_len, r_len))
}

/// Quadratic revalidation of a canonical split, active in debug builds only.
#[cfg(debug_assertions)]
fn assert_canonical_split(w: &[u8], t: usize, r_len: usize, alphabet: &OrderedAlphabet) {
    use crate::cmp::cmp_bytes;

    let is_il = |x: &[u8]| (1..x.len()).all(|i| cmp_bytes(&x[i..], x, alphabet).is_less());
    assert!(!is_il(&w[..=t]), "z must not be inverse Lyndon");
    assert!(
        (1..=t).all(|len| is_il(&w[..len])),
        "every proper prefix of z must be inverse Lyndon"
    );
    let b_rank = alphabet.rank_unchecked(w[t]);
    let shortest = (0..t.div_ceil(2)).find(|&len| {
        w[..len] == w[t - len..t] && alphabet.rank_unchecked(w[len]) < b_rank
    });
    assert_eq!(shortest, Some(r_len), "r must be the shortest valid split");
    let p_bar_start = t - r_len;
    assert!(is_il(&w[p_bar_start..=t]), "p_bar must be inverse Lyndon");
}

/// The canonical inverse Lyndon factorization, by the linear right-to-left
/// scan over compact factors.
///
/// Maintains the rightmost unfinished factor `m` while walking the maximal
/// runs of the inverse-order Lyndon factorization from right to left. A run
/// whose root is mismatch-smaller than `m` seals `m` as a factor; otherwise
/// the run is prepended to `m`. Each guard costs at most the root length
/// plus one symbol, so the whole scan is linear in `|w|`.
pub fn icfl_linear(w: &Word, alphabet: &OrderedAlphabet) -> Result<Factorization, Error> {
    alphabet.validate(w)?;
    let runs = duval_runs(w, &alphabet.inverse());
    let mut rev_spans: Vec<Span> = Vec::new();
    let last = runs[runs.len() - 1];
    let mut m = Span {
        start: last.0,
        end: w.len(),
    };
    for t in (0..runs.len() - 1).rev() {
        let (start, root_len, _) = runs[t];
        let root = &w[start..start + root_len];
        if ll_bytes(root, m.slice(w), alphabet) {
            rev_spans.push(m);
            m = Span {
                start,
                end: runs[t + 1].0,
            };
        } else {
            m.start = start;
        }
    }
    rev_spans.push(m);
    rev_spans.reverse();
    Factorization::from_spans(w.clone(), rev_spans)
}

/// The canonical inverse Lyndon factorization, by the recursive definition.
///
/// Peels canonical pairs off the front until an inverse Lyndon suffix
/// remains, then rebuilds: a peeled `p` becomes its own factor when `p_bar`
/// is a prefix of the first inner factor, and fuses with the first inner
/// factor when that factor is a prefix of `r`. Kept as an independent twin
/// of [`icfl_linear`] for differential testing; it re-scans the remainder at
/// every split, so it is quadratic in the worst case.
pub fn icfl_recursive(w: &Word, alphabet: &OrderedAlphabet) -> Result<Factorization, Error> {
    alphabet.validate(w)?;
    let inverse = alphabet.inverse();

    struct Peel {
        start: usize,
        p_len: usize,
        r_len: usize,
    }

    let mut peels = Vec::new();
    let mut start = 0;
    while let Some((t, _)) = prenecklace_failure(&w[start..], &inverse) {
        let (p_len, r_len) = canonical_split(&w[start..], t, alphabet)?;
        peels.push(Peel {
            start,
            p_len,
            r_len,
        });
        start += p_len;
    }

    let mut spans = vec![Span {
        start,
        end: w.len(),
    }];
    for peel in peels.iter().rev() {
        let p_bar_start = peel.start + peel.p_len;
        let p_bar = &w[p_bar_start..p_bar_start + peel.r_len + 1];
        let r = &w[peel.start..peel.start + peel.r_len];
        let first = spans[0].slice(w);
        if is_prefix(p_bar, first) {
            spans.insert(
                0,
                Span {
                    start: peel.start,
                    end: p_bar_start,
                },
            );
        } else if is_prefix(first, r) {
            spans[0].start = peel.start;
        } else {
            return Err(Error::Internal("canonical pair fits neither recursion case"));
        }
    }
    Factorization::from_spans(w.clone(), spans)
}

/// `x` is a prefix of `y`, equality allowed.
fn is_prefix(x: &[u8], y: &[u8]) -> bool {
    x.len() <= y.len() && x == &y[..x.len()]
}

/// The longest suffix of `w` that is an inverse Lyndon word.
///
/// Runs the same right-to-left scan as [`icfl_linear`] but stops at the
/// first sealed factor, which is exactly the last factor of the canonical
/// factorization.
pub fn longest_il_suffix(w: &Word, alphabet: &OrderedAlphabet) -> Result<Word, Error> {
    alphabet.validate(w)?;
    let runs = duval_runs(w, &alphabet.inverse());
    let last = runs[runs.len() - 1];
    let mut m = Span {
        start: last.0,
        end: w.len(),
    };
    for t in (0..runs.len() - 1).rev() {
        let (start, root_len, _) = runs[t];
        let root = &w[start..start + root_len];
        if ll_bytes(root, m.slice(w), alphabet) {
            break;
        }
        m.start = start;
    }
    Word::new(m.slice(w))
}

/// True iff no nonempty border of any factor is a prefix of the next factor.
///
/// Borders nest: every border of `m_i` extends the shortest one, so if any
/// border of `m_i` prefixes `m_{i+1}`, the shortest does too. Checking just
/// the shortest border per boundary therefore decides the property. Borders
/// and prefixes are symbol equalities, so no alphabet order is involved.
pub fn has_border_property(f: &Factorization) -> bool {
    let word = f.word().as_bytes();
    f.spans().windows(2).all(|pair| {
        let cur = pair[0].slice(word);
        let next = pair[1].slice(word);
        match shortest_border_len(cur) {
            None => true,
            Some(len) => !is_prefix(&cur[..len], next),
        }
    })
}

/// True iff every factor is an inverse Lyndon word and each factor is
/// mismatch-smaller than its successor.
pub fn is_inverse_lyndon_factorization(
    f: &Factorization,
    alphabet: &OrderedAlphabet,
) -> Result<bool, Error> {
    alphabet.validate(f.word())?;
    let inverse = alphabet.inverse();
    let word = f.word().as_bytes();
    let il = f
        .spans()
        .iter()
        .all(|span| prenecklace_failure(span.slice(word), &inverse).is_none());
    Ok(il
        && f.spans()
            .windows(2)
            .all(|pair| ll_bytes(pair[0].slice(word), pair[1].slice(word), alphabet)))
}

/// True iff `f` is an inverse Lyndon factorization whose every factor is a
/// product of consecutive inverse-order factors lying in one prefix chain.
pub fn is_grouping(f: &Factorization, alphabet: &OrderedAlphabet) -> Result<bool, Error> {
    if !is_inverse_lyndon_factorization(f, alphabet)? {
        return Ok(false);
    }
    let word = f.word().as_bytes();
    let runs = duval_runs(word, &alphabet.inverse());

    // Flatten runs into factor starts, tagging each factor with its chain.
    let mut starts = Vec::new();
    let mut chain_ids = Vec::new();
    let mut chain = 0;
    for (i, &(start, root_len, exponent)) in runs.iter().enumerate() {
        if i > 0 {
            let (ps, pl, _) = runs[i - 1];
            if !is_prefix(&word[start..start + root_len], &word[ps..ps + pl]) {
                chain += 1;
            }
        }
        for rep in 0..exponent {
            starts.push(start + rep * root_len);
            chain_ids.push(chain);
        }
    }

    Ok(aligned_sweep(f, &starts, Some(&chain_ids)))
}

/// True iff `f` is an inverse Lyndon factorization whose every factor is a
/// product of whole compact factors (maximal runs) of the inverse-order
/// factorization.
pub fn is_compact_factorization(
    f: &Factorization,
    alphabet: &OrderedAlphabet,
) -> Result<bool, Error> {
    if !is_inverse_lyndon_factorization(f, alphabet)? {
        return Ok(false);
    }
    let word = f.word().as_bytes();
    let starts: Vec<usize> = duval_runs(word, &alphabet.inverse())
        .iter()
        .map(|&(start, _, _)| start)
        .collect();
    Ok(aligned_sweep(f, &starts, None))
}

/// Sweeps the factors of `f` across unit boundaries given by `starts`
/// (ascending, first 0). Every factor must start and end on a boundary;
/// when `chain_ids` is given, the units inside one factor must share a
/// chain id.
fn aligned_sweep(f: &Factorization, starts: &[usize], chain_ids: Option<&[usize]>) -> bool {
    let n = f.word().len();
    let mut unit = 0;
    for span in f.spans() {
        debug_assert_eq!(starts[unit], span.start, "spans tile the word");
        let first_unit = unit;
        while unit < starts.len() && starts[unit] < span.end {
            unit += 1;
        }
        let end = if unit < starts.len() { starts[unit] } else { n };
        if end != span.end {
            return false;
        }
        if let Some(ids) = chain_ids {
            if ids[first_unit] != ids[unit - 1] {
                return false;
            }
        }
    }
    true
}

//! Input generators and a small timing harness for the scaling checks.
//!
//! The factorization pipeline is linear in the input length; these helpers
//! produce inputs with very different run structure (one giant run, many
//! tiny runs, Fibonacci-style self-similarity, uniform noise) so that the
//! claim can be exercised beyond a single shape.

use crate::{compact_factors, icfl_linear, Error, OrderedAlphabet, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

/// Shape of a generated benchmark input.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Uniform symbols from {a, b, c, d}, seeded and reproducible.
    Random,
    /// `dab` repeated; a single compact run.
    Periodic,
    /// Prefix of the Fibonacci word over {a, b}.
    FibonacciLike,
    /// `a` repeated; the degenerate one-symbol case.
    SingleSymbol,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [
        Pattern::Random,
        Pattern::Periodic,
        Pattern::FibonacciLike,
        Pattern::SingleSymbol,
    ];

    /// The hyphenated name used on command lines.
    pub fn name(self) -> &'static str {
        match self {
            Pattern::Random => "random",
            Pattern::Periodic => "periodic",
            Pattern::FibonacciLike => "fibonacci-like",
            Pattern::SingleSymbol => "single-symbol",
        }
    }
}

impl std::str::FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown pattern {s:?}"))
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A word of exactly `len` symbols in the given shape. The seed only
/// matters for [`Pattern::Random`].
pub fn generate(pattern: Pattern, len: usize, seed: u64) -> Result<Word, Error> {
    if len == 0 {
        return Err(Error::EmptyWord);
    }
    let bytes = match pattern {
        Pattern::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..len).map(|_| b"abcd"[rng.gen_range(0..4)]).collect()
        }
        Pattern::Periodic => b"dab".iter().copied().cycle().take(len).collect(),
        Pattern::FibonacciLike => {
            // s(1) = a, s(2) = ab, s(k) = s(k-1)s(k-2), truncated to len.
            let mut prev: Vec<u8> = vec![b'a'];
            let mut cur: Vec<u8> = vec![b'a', b'b'];
            while cur.len() < len {
                let next: Vec<u8> = cur.iter().chain(prev.iter()).copied().collect();
                prev = cur;
                cur = next;
            }
            cur.truncate(len);
            cur
        }
        Pattern::SingleSymbol => vec![b'a'; len],
    };
    Word::from_vec(bytes)
}

/// Wall time of one full factorization pass (compact factors, then the
/// canonical inverse Lyndon factorization), best of `runs` after one warmup.
pub fn time_factorization(
    w: &Word,
    alphabet: &OrderedAlphabet,
    runs: usize,
) -> Result<Duration, Error> {
    let pass = || -> Result<Duration, Error> {
        let started = Instant::now();
        let compact = compact_factors(w, alphabet)?;
        let f = icfl_linear(w, alphabet)?;
        let elapsed = started.elapsed();
        // Touch the results so the work cannot be optimized away.
        std::hint::black_box((compact.len(), f.len()));
        Ok(elapsed)
    };
    pass()?;
    let mut best = Duration::MAX;
    for _ in 0..runs.max(1) {
        best = best.min(pass()?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain_decompose;

    fn natural() -> OrderedAlphabet {
        OrderedAlphabet::natural()
    }

    #[test]
    fn patterns_generate_exact_lengths() {
        for pattern in Pattern::ALL {
            for len in [1, 2, 3, 10, 1000] {
                let word = generate(pattern, len, 7).unwrap();
                assert_eq!(word.len(), len, "{pattern} at {len}");
            }
        }
        assert_eq!(generate(Pattern::Periodic, 0, 7), Err(Error::EmptyWord));
    }

    #[test]
    fn random_is_reproducible() {
        let x = generate(Pattern::Random, 64, 42).unwrap();
        let y = generate(Pattern::Random, 64, 42).unwrap();
        let z = generate(Pattern::Random, 64, 43).unwrap();
        assert_eq!(x, y);
        assert_ne!(x, z);
    }

    #[test]
    fn fibonacci_prefix_is_self_similar() {
        let long = generate(Pattern::FibonacciLike, 100, 0).unwrap();
        let short = generate(Pattern::FibonacciLike, 30, 0).unwrap();
        assert_eq!(&long[..30], short.as_bytes());
    }

    #[test]
    fn periodic_input_is_one_compact_run() {
        let a = natural();
        let word = generate(Pattern::Periodic, 3 * 50, 0).unwrap();
        let runs = compact_factors(&word, &a).unwrap();
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].root().as_bytes(), b"dab");
        assert_eq!(runs[0].exponent(), 50);
        assert_eq!(icfl_linear(&word, &a).unwrap().len(), 1);
    }

    #[test]
    fn single_symbol_input_is_one_factor() {
        let a = natural();
        let word = generate(Pattern::SingleSymbol, 128, 0).unwrap();
        let runs = compact_factors(&word, &a).unwrap();
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].exponent(), 128);
        assert_eq!(chain_decompose(&runs, &a).unwrap().len(), 1);
        assert_eq!(icfl_linear(&word, &a).unwrap().len(), 1);
    }

    #[test]
    fn timing_returns_a_measurement() {
        let word = generate(Pattern::Random, 4096, 1).unwrap();
        let t = time_factorization(&word, &natural(), 2).unwrap();
        assert!(t > Duration::ZERO);
    }
}

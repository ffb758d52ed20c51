use crate::Error;

/// A totally ordered alphabet of byte symbols.
///
/// The order is given by the position of each symbol in the defining
/// sequence, not by numeric byte value. Every comparison in this crate goes
/// through [`OrderedAlphabet::rank`], so reversing an alphabet with
/// [`OrderedAlphabet::inverse`] is all it takes to move between a lexicographic
/// order and its inverse.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedAlphabet {
    symbols: Vec<u8>,
    /// rank[b] is the position of byte b in `symbols`, or `NOT_A_SYMBOL`.
    rank: [u16; 256],
}

const NOT_A_SYMBOL: u16 = u16::MAX;

impl OrderedAlphabet {
    /// All 256 bytes in their numeric order.
    pub fn natural() -> Self {
        let mut symbols = Vec::with_capacity(256);
        let mut rank = [NOT_A_SYMBOL; 256];
        for b in 0..=255u8 {
            rank[b as usize] = b as u16;
            symbols.push(b);
        }
        OrderedAlphabet { symbols, rank }
    }

    /// Builds an alphabet whose order is the order of `symbols`.
    ///
    /// Rejects an empty sequence and repeated symbols.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self, Error> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut rank = [NOT_A_SYMBOL; 256];
        for (i, &b) in symbols.iter().enumerate() {
            if rank[b as usize] != NOT_A_SYMBOL {
                return Err(Error::DuplicateSymbol(b));
            }
            rank[b as usize] = i as u16;
        }
        Ok(OrderedAlphabet {
            symbols: symbols.to_vec(),
            rank,
        })
    }

    /// The same symbols under the reversed order.
    ///
    /// A word is anti-Lyndon for `self` exactly when it is Lyndon for
    /// `self.inverse()`, and the inverse comparisons used by `cfl_in` are
    /// plain comparisons against the inverse alphabet.
    pub fn inverse(&self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        let n = symbols.len() as u16;
        let mut rank = [NOT_A_SYMBOL; 256];
        for (&b, r) in self.symbols.iter().zip(0..n) {
            rank[b as usize] = n - 1 - r;
        }
        OrderedAlphabet {
            symbols,
            rank,
        }
    }

    /// Symbols in ascending order.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Number of symbols; always at least 1.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; kept for interface completeness.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.rank[symbol as usize] != NOT_A_SYMBOL
    }

    /// Position of `symbol` in this order, if it is a symbol at all.
    pub fn rank(&self, symbol: u8) -> Option<usize> {
        match self.rank[symbol as usize] {
            NOT_A_SYMBOL => None,
            r => Some(r as usize),
        }
    }

    /// Rank lookup for bytes already validated with [`Self::validate`].
    pub(crate) fn rank_unchecked(&self, symbol: u8) -> u16 {
        self.rank[symbol as usize]
    }

    /// Checks that every byte is a symbol, reporting the first that is not.
    pub fn validate(&self, bytes: &[u8]) -> Result<(), Error> {
        match bytes.iter().find(|&&b| !self.contains(b)) {
            Some(&b) => Err(Error::SymbolNotInAlphabet(b)),
            None => Ok(()),
        }
    }
}

impl std::fmt::Debug for OrderedAlphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.symbols.len() == 256 {
            return f.write_str("OrderedAlphabet(natural)");
        }
        write!(
            f,
            "OrderedAlphabet({})",
            String::from_utf8_lossy(&self.symbols)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_symbols_orders_by_position() {
        let a = OrderedAlphabet::from_symbols(b"dcba").unwrap();
        assert_eq!(a.rank(b'd'), Some(0));
        assert_eq!(a.rank(b'a'), Some(3));
        assert_eq!(a.rank(b'z'), None);
        assert_eq!(a.len(), 4);
    }

    #[test]
    fn rejects_empty_and_duplicates() {
        assert_eq!(OrderedAlphabet::from_symbols(b""), Err(Error::EmptyAlphabet));
        assert_eq!(
            OrderedAlphabet::from_symbols(b"aba"),
            Err(Error::DuplicateSymbol(b'a'))
        );
    }

    #[test]
    fn inverse_reverses_ranks() {
        let a = OrderedAlphabet::from_symbols(b"abcd").unwrap();
        let inv = a.inverse();
        assert_eq!(inv.symbols(), b"dcba");
        assert_eq!(inv.rank(b'd'), Some(0));
        assert_eq!(inv.rank(b'a'), Some(3));
        assert_eq!(inv.inverse(), a);
    }

    #[test]
    fn natural_covers_all_bytes() {
        let a = OrderedAlphabet::natural();
        assert_eq!(a.len(), 256);
        assert_eq!(a.rank(0x00), Some(0));
        assert_eq!(a.rank(0xff), Some(255));
        assert!(a.validate(&[0, 17, 255]).is_ok());
    }

    #[test]
    fn validate_reports_first_foreign_byte() {
        let a = OrderedAlphabet::from_symbols(b"ab").unwrap();
        assert_eq!(a.validate(b"abba"), Ok(()));
        assert_eq!(a.validate(b"abxa"), Err(Error::SymbolNotInAlphabet(b'x')));
    }
}

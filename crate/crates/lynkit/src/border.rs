use crate::{Error, Word};

/// Longest proper border length of every prefix.
///
/// `out[i]` is the length of the longest border of `w[0..=i]`, the classic
/// failure function. Borders depend only on symbol equality, never on an
/// alphabet order.
pub(crate) fn border_array(w: &[u8]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = out[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        out[i] = k;
    }
    out
}

/// All border lengths of `w`, shortest first, excluding 0 and `|w|`.
///
/// The borders of a word are totally ordered by the prefix relation: each is
/// a border of the next longer one, which is why walking the failure links
/// from the longest border enumerates them all.
pub(crate) fn border_len_chain(w: &[u8]) -> Vec<usize> {
    let array = border_array(w);
    let mut lens = Vec::new();
    let mut k = match array.last() {
        Some(&k) => k,
        None => return lens,
    };
    while k > 0 {
        lens.push(k);
        k = array[k - 1];
    }
    lens.reverse();
    lens
}

/// The shortest nonempty border of `w`, if `w` is bordered.
///
/// A border is a proper prefix that is also a suffix. Unbordered words give
/// `None`.
pub fn shortest_border(w: &Word) -> Option<Word> {
    shortest_border_len(w).map(|len| {
        Word::new(&w[..len]).expect("border lengths are positive")
    })
}

/// Length variant of [`shortest_border`] for internal use on slices.
pub(crate) fn shortest_border_len(w: &[u8]) -> Option<usize> {
    border_len_chain(w).first().copied()
}

/// Every nonempty border of `w`, shortest first.
pub fn all_borders(w: &Word) -> Result<Vec<Word>, Error> {
    border_len_chain(w)
        .into_iter()
        .map(|len| Word::new(&w[..len]))
        .collect()
}

//! Classification predicates and the prepend law: putting a strictly smaller
//! unbordered word in front never yields an inverse Lyndon word, and the
//! longest inverse Lyndon suffix survives unchanged.

use lynkit::{
    is_anti_lyndon, is_inverse_lyndon, is_lyndon, ll, longest_il_suffix, shortest_border,
    OrderedAlphabet, Word,
};

fn main() -> Result<(), lynkit::Error> {
    let alphabet = OrderedAlphabet::from_symbols(b"ab")?;

    println!("{:<10} {:>7} {:>9} {:>13} {:>8}", "word", "lyndon", "anti", "inverse", "border");
    for text in ["aabab", "ba", "baa", "bab", "abab", "bbab"] {
        let w = Word::new(text)?;
        println!(
            "{:<10} {:>7} {:>9} {:>13} {:>8}",
            text,
            is_lyndon(&w, &alphabet)?,
            is_anti_lyndon(&w, &alphabet)?,
            is_inverse_lyndon(&w, &alphabet)?,
            shortest_border(&w).map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
        );
    }
    println!();

    let ell = Word::new("ba")?;
    let w = Word::new("bbab")?;
    assert!(is_anti_lyndon(&ell, &alphabet)?);
    assert!(is_inverse_lyndon(&w, &alphabet)?);
    assert!(ll(&ell, &w, &alphabet)?);

    for k in 1..=3 {
        let mut bytes = Vec::new();
        for _ in 0..k {
            bytes.extend_from_slice(&ell);
        }
        bytes.extend_from_slice(&w);
        let stacked = Word::from_vec(bytes)?;
        let suffix = longest_il_suffix(&stacked, &alphabet)?;
        println!(
            "{stacked}: inverse Lyndon = {}, longest inverse Lyndon suffix = {suffix}",
            is_inverse_lyndon(&stacked, &alphabet)?,
        );
    }
    Ok(())
}

//! A word with several inverse Lyndon factorizations: the checkers tell them
//! apart, and exactly one passes the border test.

use lynkit::{
    has_border_property, icfl_linear, is_compact_factorization, is_grouping,
    is_inverse_lyndon_factorization, Factorization, OrderedAlphabet, Word,
};

fn main() -> Result<(), lynkit::Error> {
    let alphabet = OrderedAlphabet::from_symbols(b"abcd")?;
    let word = Word::new("dabdadacddbdc")?;

    let candidates: [&[usize]; 3] = [&[3, 6, 2, 2], &[5, 3, 5], &[3, 5, 5]];
    println!("word {word}");
    println!("{:<22} {:>4} {:>7} {:>9} {:>8}", "factorization", "ilf", "border", "grouping", "compact");
    for lengths in candidates {
        let f = Factorization::from_lengths(word.clone(), lengths)?;
        let text: Vec<String> =
            f.factors().map(|x| String::from_utf8_lossy(x).into_owned()).collect();
        println!(
            "{:<22} {:>4} {:>7} {:>9} {:>8}",
            text.join("|"),
            is_inverse_lyndon_factorization(&f, &alphabet)?,
            has_border_property(&f),
            is_grouping(&f, &alphabet)?,
            is_compact_factorization(&f, &alphabet)?,
        );
    }

    let canonical = icfl_linear(&word, &alphabet)?;
    let text: Vec<String> =
        canonical.factors().map(|x| String::from_utf8_lossy(x).into_owned()).collect();
    println!("icfl picks {}", text.join("|"));
    Ok(())
}

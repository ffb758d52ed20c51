//! How the recursive factorization peels a word: the shortest prefix that is
//! not inverse Lyndon splits as (r a s, r b), and the recursion continues on
//! the rest.

use lynkit::{canonical_pair, icfl_recursive, is_inverse_lyndon, OrderedAlphabet, Word};

fn main() -> Result<(), lynkit::Error> {
    let alphabet = OrderedAlphabet::from_symbols(b"abcd")?;

    for text in ["dabadabdabdadac", "dcdbdcdd", "aaba"] {
        let word = Word::new(text)?;
        println!("word {word}");

        let mut rest = word.clone();
        while !is_inverse_lyndon(&rest, &alphabet)? {
            let pair = canonical_pair(&rest, &alphabet)?;
            let (a, b) = pair.mismatch();
            println!(
                "  prefix {} splits: p = {}, p-bar = {}, r = {:?}, mismatch {} < {}",
                String::from_utf8_lossy(&rest[..pair.prefix_len()]),
                pair.p(),
                pair.p_bar(),
                String::from_utf8_lossy(pair.r()),
                a as char,
                b as char,
            );
            rest = Word::new(&rest[pair.p().len()..])?;
        }
        println!("  rest {rest} is inverse Lyndon");

        let f = icfl_recursive(&word, &alphabet)?;
        let factors: Vec<String> =
            f.factors().map(|x| String::from_utf8_lossy(x).into_owned()).collect();
        println!("  icfl {}", factors.join("|"));
        println!();
    }
    Ok(())
}

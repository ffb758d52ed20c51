//! The three factorizations of one word, side by side.

use lynkit::{cfl, cfl_in, icfl_linear, OrderedAlphabet, Word};

fn main() -> Result<(), lynkit::Error> {
    let alphabet = OrderedAlphabet::from_symbols(b"abcd")?;

    for text in ["dabadabdabdadac", "dabdadacddbdc", "bacbcabc"] {
        let word = Word::new(text)?;
        println!("word {word}");

        let runs = cfl(&word, &alphabet)?;
        let factors: Vec<String> = runs
            .iter()
            .flat_map(|run| {
                let root = run.root().to_string();
                std::iter::repeat_n(root, run.exponent())
            })
            .collect();
        println!("  smallest-first factorization   {}", factors.join("|"));

        let runs = cfl_in(&word, &alphabet)?;
        let factors: Vec<String> = runs
            .iter()
            .flat_map(|run| {
                let root = run.root().to_string();
                std::iter::repeat_n(root, run.exponent())
            })
            .collect();
        println!("  largest-first factorization    {}", factors.join("|"));

        let f = icfl_linear(&word, &alphabet)?;
        let factors: Vec<String> =
            f.factors().map(|x| String::from_utf8_lossy(x).into_owned()).collect();
        println!("  canonical inverse factorization {}", factors.join("|"));
        println!();
    }
    Ok(())
}

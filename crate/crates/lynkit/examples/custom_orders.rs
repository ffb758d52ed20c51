//! The same word factorizes differently under different symbol orders.

use lynkit::{cfl, icfl_linear, OrderedAlphabet, Word};

fn join(factors: impl Iterator<Item = String>) -> String {
    factors.collect::<Vec<_>>().join("|")
}

fn main() -> Result<(), lynkit::Error> {
    let word = Word::new("dabadabdab")?;

    for order in ["abcd", "dcba", "badc"] {
        let alphabet = OrderedAlphabet::from_symbols(order.as_bytes())?;
        let flat = cfl(&word, &alphabet)?;
        let cfl_text = join(flat.iter().flat_map(|run| {
            let root = run.root().to_string();
            std::iter::repeat_n(root, run.exponent())
        }));
        let icfl_text = join(
            icfl_linear(&word, &alphabet)?
                .factors()
                .map(|x| String::from_utf8_lossy(x).into_owned()),
        );
        println!("order {order}:  cfl {cfl_text}   icfl {icfl_text}");
    }

    // inverse() flips the order, so cfl over it is the largest-first factorization.
    let natural = OrderedAlphabet::from_symbols(b"abcd")?;
    let flipped = natural.inverse();
    let largest_first = join(cfl(&word, &flipped)?.iter().flat_map(|run| {
        let root = run.root().to_string();
        std::iter::repeat_n(root, run.exponent())
    }));
    println!("cfl under inverted abcd: {largest_first}");
    Ok(())
}

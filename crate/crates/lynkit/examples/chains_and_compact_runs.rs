//! Runs, chains, and how the canonical factorization respects both: factor
//! boundaries land on run boundaries, and each factor stays inside one chain.

use lynkit::{chain_decompose, compact_factors, icfl_linear, OrderedAlphabet, Word};

fn main() -> Result<(), lynkit::Error> {
    let alphabet = OrderedAlphabet::from_symbols(b"abcd")?;
    let word = Word::new("dabadabdabdabdadacdabdab")?;
    println!("word {word}");

    let runs = compact_factors(&word, &alphabet)?;
    print!("compact runs:");
    for run in &runs {
        print!(" ({}){}", run.root(), superscript(run.exponent()));
    }
    println!();

    let chains = chain_decompose(&runs, &alphabet)?;
    for (i, span) in chains.chain_spans().iter().enumerate() {
        println!(
            "chain {i}: [{:>2}, {:>2})  {}",
            span.start,
            span.end,
            String::from_utf8_lossy(span.slice(&word))
        );
    }

    let f = icfl_linear(&word, &alphabet)?;
    for span in f.spans() {
        println!(
            "icfl factor: [{:>2}, {:>2})  {}",
            span.start,
            span.end,
            String::from_utf8_lossy(span.slice(&word))
        );
    }
    Ok(())
}

fn superscript(n: usize) -> String {
    if n == 1 {
        String::new()
    } else {
        format!("^{n}")
    }
}

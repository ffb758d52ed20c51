//! Factorization time across doubling input sizes; the ratio column staying
//! near 2 is the linear-time behavior.

use lynkit::bench::{generate, time_factorization, Pattern};
use lynkit::OrderedAlphabet;

fn main() -> Result<(), lynkit::Error> {
    let alphabet = OrderedAlphabet::from_symbols(b"abcd")?;

    for pattern in Pattern::ALL {
        println!("pattern {pattern}");
        let mut previous: Option<f64> = None;
        for len in [250_000usize, 500_000, 1_000_000, 2_000_000] {
            let word = generate(pattern, len, 42)?;
            let elapsed = time_factorization(&word, &alphabet, 3)?.as_secs_f64();
            match previous {
                None => println!("  {len:>9} bytes  {:>8.3} ms", elapsed * 1e3),
                Some(prev) => println!(
                    "  {len:>9} bytes  {:>8.3} ms  x{:.2}",
                    elapsed * 1e3,
                    elapsed / prev
                ),
            }
            previous = Some(elapsed);
        }
    }
    Ok(())
}

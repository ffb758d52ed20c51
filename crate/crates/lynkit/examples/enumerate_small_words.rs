//! Every inverse Lyndon factorization of every short binary word, with the
//! border-qualified one marked. Exactly one per word carries the mark.

use lynkit::oracle::{enumerate_ilfs, words_up_to};
use lynkit::{has_border_property, OrderedAlphabet};

fn main() -> Result<(), lynkit::Error> {
    let alphabet = OrderedAlphabet::from_symbols(b"ab")?;

    for word in words_up_to(&alphabet, 6) {
        let ilfs = enumerate_ilfs(&word, &alphabet)?;
        if ilfs.len() < 2 {
            continue;
        }
        print!("{word}:");
        for f in &ilfs {
            let text: Vec<String> =
                f.factors().map(|x| String::from_utf8_lossy(x).into_owned()).collect();
            let mark = if has_border_property(f) { "*" } else { "" };
            print!("  {}{mark}", text.join("|"));
        }
        println!();
    }
    println!("(* = has the border property; that one is the canonical factorization)");
    Ok(())
}

//! Exhaustive check of the library's structural claims on all short words.

use lynkit::oracle;
use lynkit::OrderedAlphabet;

fn main() -> Result<(), lynkit::Error> {
    for (symbols, maxlen) in [(&b"ab"[..], 10usize), (b"abc", 6)] {
        let alphabet = OrderedAlphabet::from_symbols(symbols)?;
        let reports = oracle::verify_claims(maxlen, &alphabet)?;

        let failures: usize = reports.iter().filter(|r| !r.passed()).count();
        let ilfs: usize = reports.iter().map(|r| r.all_ilfs().len()).sum();
        println!(
            "alphabet {}, maxlen {maxlen}: {} words, {ilfs} factorizations enumerated, {failures} failures",
            String::from_utf8_lossy(symbols),
            reports.len(),
        );
        for report in reports.iter().filter(|r| !r.passed()) {
            println!("  FAIL {}: {:?}", report.word(), report.failures());
        }
    }
    Ok(())
}

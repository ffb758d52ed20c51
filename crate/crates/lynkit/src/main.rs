//! `lynkit`: factorize byte words, verify the factorization theorems on
//! exhaustive small universes, enumerate inverse Lyndon factorizations, and
//! benchmark scaling.
//!
//! Exit codes: 0 success, 1 any per-line or claim failure, 2 usage or
//! configuration error.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lynkit::{
    bench, cfl, cfl_in, chain_decompose, compact_factors, icfl_linear, icfl_recursive, oracle,
    Error, OrderedAlphabet, Span, Word,
};

#[derive(Parser)]
#[command(name = "lynkit", version, about = "Lyndon and inverse Lyndon factorizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factorize each input line (raw bytes, one word per line).
    Factorize {
        /// Which factorization to compute.
        #[arg(long, value_enum)]
        mode: Mode,
        /// Symbol order, smallest first, e.g. "abcd"; default is byte order.
        #[arg(long)]
        order: Option<String>,
        /// Emit one JSON record per line instead of delimited text.
        #[arg(long)]
        json: bool,
        /// Separator between factors in text output.
        #[arg(long, default_value = "|")]
        delim: String,
        /// Input file; standard input when absent.
        file: Option<PathBuf>,
    },
    /// Exhaustively check the factorization theorems on all words up to a
    /// length bound.
    Verify {
        /// Maximum word length (the exhaustive bound caps this).
        #[arg(long)]
        maxlen: usize,
        /// Alphabet symbols, smallest first.
        #[arg(long)]
        alphabet: String,
        /// Emit one JSON record per word.
        #[arg(long)]
        json: bool,
    },
    /// List every inverse Lyndon factorization of every word up to a length.
    Enumerate {
        /// Maximum word length (the exhaustive bound caps this).
        #[arg(long)]
        maxlen: usize,
        /// Alphabet symbols, smallest first.
        #[arg(long)]
        alphabet: String,
        /// Emit one JSON record per word.
        #[arg(long)]
        json: bool,
        /// Separator between factors in text output.
        #[arg(long, default_value = "|")]
        delim: String,
    },
    /// Time the factorization pipeline at three doubling sizes.
    Bench {
        /// Base input size in bytes; also runs 2x and 4x.
        #[arg(long)]
        size: usize,
        /// Input shape.
        #[arg(long, value_enum)]
        pattern: PatternArg,
        /// Seed for the random pattern.
        #[arg(long, default_value_t = 0x1f0c)]
        seed: u64,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    Cfl,
    CflIn,
    Icfl,
    IcflRecursive,
    Compact,
    Chains,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Cfl => "cfl",
            Mode::CflIn => "cfl-in",
            Mode::Icfl => "icfl",
            Mode::IcflRecursive => "icfl-recursive",
            Mode::Compact => "compact",
            Mode::Chains => "chains",
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum PatternArg {
    Random,
    Periodic,
    FibonacciLike,
    SingleSymbol,
}

impl From<PatternArg> for bench::Pattern {
    fn from(p: PatternArg) -> bench::Pattern {
        match p {
            PatternArg::Random => bench::Pattern::Random,
            PatternArg::Periodic => bench::Pattern::Periodic,
            PatternArg::FibonacciLike => bench::Pattern::FibonacciLike,
            PatternArg::SingleSymbol => bench::Pattern::SingleSymbol,
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Factorize {
            mode,
            order,
            json,
            delim,
            file,
        } => cmd_factorize(mode, order.as_deref(), json, delim.as_bytes(), file.as_deref()),
        Command::Verify {
            maxlen,
            alphabet,
            json,
        } => cmd_verify(maxlen, &alphabet, json),
        Command::Enumerate {
            maxlen,
            alphabet,
            json,
            delim,
        } => cmd_enumerate(maxlen, &alphabet, json, delim.as_bytes()),
        Command::Bench { size, pattern, seed } => cmd_bench(size, pattern.into(), seed),
    }
}

fn config_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("lynkit: {message}");
    ExitCode::from(2)
}

fn build_alphabet(order: Option<&str>) -> Result<OrderedAlphabet, Error> {
    match order {
        Some(symbols) => OrderedAlphabet::from_symbols(symbols.as_bytes()),
        None => Ok(OrderedAlphabet::natural()),
    }
}

fn cmd_factorize(
    mode: Mode,
    order: Option<&str>,
    json: bool,
    delim: &[u8],
    file: Option<&std::path::Path>,
) -> ExitCode {
    let alphabet = match build_alphabet(order) {
        Ok(a) => a,
        Err(e) => return config_error(format_args!("invalid --order: {e}")),
    };
    let input = match read_input(file) {
        Ok(bytes) => bytes,
        Err(e) => return config_error(format_args!("cannot read input: {e}")),
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut any_failed = false;
    for (lineno, line) in split_lines(&input).enumerate() {
        match factorize_line(line, mode, &alphabet) {
            Ok(spans) => {
                if json {
                    let record = json_record(line, mode, &spans);
                    writeln!(out, "{record}").expect("stdout");
                } else {
                    let mut first = true;
                    for span in &spans {
                        if !first {
                            out.write_all(delim).expect("stdout");
                        }
                        out.write_all(span.slice(line)).expect("stdout");
                        first = false;
                    }
                    out.write_all(b"\n").expect("stdout");
                }
            }
            Err(e) => {
                any_failed = true;
                if json {
                    let record = serde_json::json!({
                        "line": lineno + 1,
                        "error": e.to_string(),
                    });
                    writeln!(out, "{record}").expect("stdout");
                } else {
                    eprintln!("lynkit: line {}: {e}", lineno + 1);
                }
            }
        }
    }
    if any_failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn factorize_line(line: &[u8], mode: Mode, alphabet: &OrderedAlphabet) -> Result<Vec<Span>, Error> {
    let word = Word::new(line)?;
    let spans = match mode {
        Mode::Cfl => cfl(&word, alphabet)?
            .iter()
            .flat_map(|run| run.factor_spans())
            .collect(),
        Mode::CflIn => cfl_in(&word, alphabet)?
            .iter()
            .flat_map(|run| run.factor_spans())
            .collect(),
        Mode::Compact => compact_factors(&word, alphabet)?
            .iter()
            .map(|run| run.span())
            .collect(),
        Mode::Chains => {
            let runs = compact_factors(&word, alphabet)?;
            chain_decompose(&runs, alphabet)?.chain_spans()
        }
        Mode::Icfl => icfl_linear(&word, alphabet)?.spans().to_vec(),
        Mode::IcflRecursive => icfl_recursive(&word, alphabet)?.spans().to_vec(),
    };
    Ok(spans)
}

fn json_record(line: &[u8], mode: Mode, spans: &[Span]) -> serde_json::Value {
    serde_json::json!({
        "word_len": line.len(),
        "mode": mode.name(),
        "spans": spans.iter().map(|s| [s.start, s.end]).collect::<Vec<_>>(),
        "factors": spans
            .iter()
            .map(|s| String::from_utf8_lossy(s.slice(line)).into_owned())
            .collect::<Vec<_>>(),
    })
}

fn cmd_verify(maxlen: usize, alphabet: &str, json: bool) -> ExitCode {
    let alphabet = match OrderedAlphabet::from_symbols(alphabet.as_bytes()) {
        Ok(a) => a,
        Err(e) => return config_error(format_args!("invalid --alphabet: {e}")),
    };
    let reports = match oracle::verify_claims(maxlen, &alphabet) {
        Ok(r) => r,
        Err(e) => return config_error(e),
    };

    let mut failures = 0usize;
    for report in &reports {
        if json {
            let record = serde_json::json!({
                "word": report.word().to_string(),
                "ilfs": report.all_ilfs().len(),
                "border_ilfs": report.border_ilfs().len(),
                "failures": report
                    .failures()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
            });
            println!("{record}");
        } else if !report.passed() {
            for claim in report.failures() {
                println!("FAIL {} {}", report.word(), claim);
            }
        }
        if !report.passed() {
            failures += 1;
        }
    }
    println!(
        "checked {} words up to length {maxlen} over {}: {failures} failures",
        reports.len(),
        String::from_utf8_lossy(alphabet.symbols()),
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_enumerate(maxlen: usize, alphabet: &str, json: bool, delim: &[u8]) -> ExitCode {
    let alphabet = match OrderedAlphabet::from_symbols(alphabet.as_bytes()) {
        Ok(a) => a,
        Err(e) => return config_error(format_args!("invalid --alphabet: {e}")),
    };
    if maxlen > oracle::DEFAULT_MAX_LEN {
        return config_error(Error::LengthBoundExceeded {
            len: maxlen,
            bound: oracle::DEFAULT_MAX_LEN,
        });
    }

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for word in oracle::words_up_to(&alphabet, maxlen) {
        let ilfs = match oracle::enumerate_ilfs(&word, &alphabet) {
            Ok(list) => list,
            Err(e) => return config_error(e),
        };
        if json {
            let record = serde_json::json!({
                "word": word.to_string(),
                "count": ilfs.len(),
                "ilfs": ilfs
                    .iter()
                    .map(|f| {
                        f.factors()
                            .map(|x| String::from_utf8_lossy(x).into_owned())
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>(),
            });
            writeln!(out, "{record}").expect("stdout");
        } else {
            write!(out, "{word}:").expect("stdout");
            for f in &ilfs {
                out.write_all(b" ").expect("stdout");
                let mut first = true;
                for factor in f.factors() {
                    if !first {
                        out.write_all(delim).expect("stdout");
                    }
                    out.write_all(factor).expect("stdout");
                    first = false;
                }
            }
            out.write_all(b"\n").expect("stdout");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_bench(size: usize, pattern: bench::Pattern, seed: u64) -> ExitCode {
    if size == 0 {
        return config_error("--size must be at least 1");
    }
    let alphabet = OrderedAlphabet::natural();
    println!("pattern {pattern}, sizes {size}/{}/{} bytes", 2 * size, 4 * size);
    let mut previous: Option<f64> = None;
    for factor in [1usize, 2, 4] {
        let len = size * factor;
        let word = match bench::generate(pattern, len, seed) {
            Ok(w) => w,
            Err(e) => return config_error(e),
        };
        let elapsed = match bench::time_factorization(&word, &alphabet, 3) {
            Ok(d) => d,
            Err(e) => return config_error(e),
        };
        let millis = elapsed.as_secs_f64() * 1e3;
        match previous {
            None => println!("{len:>12} bytes  {millis:>10.3} ms"),
            Some(prev) => {
                println!("{len:>12} bytes  {millis:>10.3} ms  x{:.2}", millis / prev)
            }
        }
        previous = Some(millis);
    }
    ExitCode::SUCCESS
}

fn read_input(file: Option<&std::path::Path>) -> std::io::Result<Vec<u8>> {
    match file {
        Some(path) => std::fs::read(path),
        None => {
            let mut buf = Vec::new();
            std::io::stdin().lock().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

/// Lines split on LF; a final line without a trailing LF is still a line,
/// and empty input has no lines.
fn split_lines(input: &[u8]) -> Box<dyn Iterator<Item = &[u8]> + '_> {
    if input.is_empty() {
        return Box::new(std::iter::empty());
    }
    let body = input.strip_suffix(b"\n").unwrap_or(input);
    Box::new(body.split(|&b| b == b'\n'))
}

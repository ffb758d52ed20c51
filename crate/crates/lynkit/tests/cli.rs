//! Black-box tests of the lynkit binary over stdin/stdout/file inputs.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lynkit(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lynkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn lynkit");
    child.stdin.as_mut().expect("stdin").write_all(stdin).expect("write stdin");
    child.wait_with_output().expect("wait for lynkit")
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8_lossy(&output.stdout).lines().map(str::to_owned).collect()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn factorize_icfl_fixture() {
    let out = lynkit(&["factorize", "--mode", "icfl"], b"dabadabdabdadac\n");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["daba|dabdab|dadac"]);
}

#[test]
fn factorize_cfl_in_fixture() {
    let out = lynkit(&["factorize", "--mode", "cfl-in"], b"dabadabdabdadac\n");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["daba|dab|dab|dadac"]);
}

#[test]
fn factorize_compact_and_chain_modes() {
    let word = b"dabadabdabdabdadac\n";
    let compact = lynkit(&["factorize", "--mode", "compact"], word);
    assert_eq!(exit_code(&compact), 0);
    assert_eq!(stdout_lines(&compact), ["daba|dabdabdab|dadac"]);

    let chains = lynkit(&["factorize", "--mode", "chains"], word);
    assert_eq!(exit_code(&chains), 0);
    assert_eq!(stdout_lines(&chains), ["dabadabdabdab|dadac"]);
}

#[test]
fn factorize_recursive_agrees_with_linear() {
    let input = b"dabadabdabdadac\ndabdadb\nbanana\n";
    let linear = lynkit(&["factorize", "--mode", "icfl"], input);
    let recursive = lynkit(&["factorize", "--mode", "icfl-recursive"], input);
    assert_eq!(exit_code(&linear), 0);
    assert_eq!(linear.stdout, recursive.stdout);
}

#[test]
fn factorize_single_symbol_line() {
    let out = lynkit(&["factorize", "--mode", "icfl"], b"q\n");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["q"]);
}

#[test]
fn json_records_round_trip_and_match_text() {
    let input = b"dabadabdabdadac\nbanana\nzzz\n";
    for mode in ["cfl", "cfl-in", "icfl", "icfl-recursive", "compact", "chains"] {
        let json_out = lynkit(&["factorize", "--mode", mode, "--json"], input);
        let text_out = lynkit(&["factorize", "--mode", mode], input);
        assert_eq!(exit_code(&json_out), 0, "mode {mode}");
        let text_lines = stdout_lines(&text_out);
        let json_lines = stdout_lines(&json_out);
        assert_eq!(json_lines.len(), 3);

        let words: Vec<&[u8]> = vec![b"dabadabdabdadac", b"banana", b"zzz"];
        for ((line, word), text) in json_lines.iter().zip(&words).zip(&text_lines) {
            let record: serde_json::Value = serde_json::from_str(line).expect("valid json");
            let object = record.as_object().expect("object");
            let mut keys: Vec<&str> = object.keys().map(String::as_str).collect();
            keys.sort_unstable();
            assert_eq!(keys, ["factors", "mode", "spans", "word_len"]);

            assert_eq!(record["word_len"].as_u64().unwrap() as usize, word.len());
            assert_eq!(record["mode"].as_str().unwrap(), mode);

            // Spans tile [0, word_len) and each factor is the spanned slice.
            let spans = record["spans"].as_array().unwrap();
            let factors = record["factors"].as_array().unwrap();
            assert_eq!(spans.len(), factors.len());
            let mut cursor = 0usize;
            let mut rebuilt = Vec::new();
            for (span, factor) in spans.iter().zip(factors) {
                let start = span[0].as_u64().unwrap() as usize;
                let end = span[1].as_u64().unwrap() as usize;
                assert_eq!(start, cursor);
                assert!(end > start);
                assert_eq!(factor.as_str().unwrap().as_bytes(), &word[start..end]);
                rebuilt.extend_from_slice(&word[start..end]);
                cursor = end;
            }
            assert_eq!(cursor, word.len());
            assert_eq!(rebuilt.as_slice(), *word);

            let joined: Vec<&str> =
                factors.iter().map(|f| f.as_str().unwrap()).collect();
            assert_eq!(&joined.join("|"), text, "mode {mode}");
        }
    }
}

#[test]
fn custom_delimiter() {
    let out = lynkit(&["factorize", "--mode", "cfl-in", "--delim", ", "], b"dabadabdabdadac\n");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["daba, dab, dab, dadac"]);
}

#[test]
fn custom_order_changes_factorization() {
    let natural = lynkit(&["factorize", "--mode", "cfl"], b"ab\n");
    assert_eq!(stdout_lines(&natural), ["ab"]);
    let reversed = lynkit(&["factorize", "--mode", "cfl", "--order", "dcba"], b"ab\n");
    assert_eq!(exit_code(&reversed), 0);
    assert_eq!(stdout_lines(&reversed), ["a|b"]);
}

#[test]
fn symbol_outside_custom_order_fails_that_line_only() {
    let out = lynkit(&["factorize", "--mode", "icfl", "--order", "ab"], b"abba\nabz\nbaab\n");
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout_lines(&out), ["a|bba", "baab"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn empty_line_fails_without_stopping_batch() {
    let out = lynkit(&["factorize", "--mode", "icfl"], b"dab\n\ndab\n");
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout_lines(&out), ["dab", "dab"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn empty_line_error_in_json_mode() {
    let out = lynkit(&["factorize", "--mode", "icfl", "--json"], b"\n");
    assert_eq!(exit_code(&out), 1);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let record: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(record["line"].as_u64(), Some(1));
    assert!(record["error"].is_string());
}

#[test]
fn final_line_without_newline_is_accepted() {
    let out = lynkit(&["factorize", "--mode", "icfl"], b"dabadabdabdadac");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["daba|dabdab|dadac"]);
}

#[test]
fn empty_input_produces_no_output() {
    let out = lynkit(&["factorize", "--mode", "icfl"], b"");
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());
}

#[test]
fn file_input() {
    let path = std::env::temp_dir().join(format!("lynkit-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, b"dabdadacddbdc\n").unwrap();
    let out = lynkit(&["factorize", "--mode", "icfl", path.to_str().unwrap()], b"");
    std::fs::remove_file(&path).ok();
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["dab|dadac|ddbdc"]);
}

#[test]
fn missing_file_is_a_config_error() {
    let out = lynkit(&["factorize", "--mode", "icfl", "/nonexistent/lynkit-input"], b"");
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_small_alphabet_passes() {
    let out = lynkit(&["verify", "--maxlen", "6", "--alphabet", "ab"], b"");
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(
        lines.last().map(String::as_str),
        Some("checked 126 words up to length 6 over ab: 0 failures")
    );
}

#[test]
fn verify_refuses_oversized_bound() {
    let out = lynkit(&["verify", "--maxlen", "40", "--alphabet", "ab"], b"");
    assert_eq!(exit_code(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn enumerate_lists_every_factorization() {
    let out = lynkit(&["enumerate", "--maxlen", "2", "--alphabet", "ab"], b"");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), ["a: a", "b: b", "aa: aa", "ab: a|b", "ba: ba", "bb: bb"]);
}

#[test]
fn enumerate_refuses_oversized_bound() {
    let out = lynkit(&["enumerate", "--maxlen", "40", "--alphabet", "ab"], b"");
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn bench_reports_three_sizes() {
    let out = lynkit(&["bench", "--size", "30000", "--pattern", "periodic"], b"");
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 4);
    assert!(lines[0].contains("periodic"));
    assert!(lines[1].contains("30000 bytes"));
    assert!(lines[3].contains("120000 bytes"));
}

#[test]
fn unknown_mode_is_a_usage_error() {
    let out = lynkit(&["factorize", "--mode", "bogus"], b"");
    assert_eq!(exit_code(&out), 2);
}

use std::collections::HashMap;
use std::path::Path;

use clearread::cli::{run, Io, LEXICON_DIR_VAR};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let env: HashMap<String, String> = env.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut io = Io { stdin: &mut input, stdout: &mut out, stderr: &mut err };
    let argv = std::iter::once("clearread").chain(args.iter().copied());
    let code = run(argv, &env, &mut io);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn clearread(args: &[&str], stdin: &str) -> Output {
    invoke(args, stdin, &[])
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn empty_stdin_lints_clean_json() {
    let out = clearread(&["lint", "--format", "json", "-"], "");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "{\"schema_version\":\"1\",\"file\":\"<stdin>\",\"violations\":[],\"diagnostics\":[]}\n");
}

#[test]
fn double_negative_file_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "neg.txt", "I don't know nothing!\n");
    let out = clearread(&["lint", &f], "");
    assert_eq!(out.code, 1);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].ends_with(":1:1: R10 double negative (`don't`, `nothing`)"), "{}", lines[0]);
    assert_eq!(lines[1], "1 violation");
}

#[test]
fn fix_modes_are_exclusive() {
    let out = clearread(&["fix", "--in-place", "--stdout", "f.txt"], "");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cannot be used with"), "{}", out.stderr);
    assert_eq!(clearread(&["fix", "--in-place", "-"], "x").code, 2);
}

#[test]
fn fix_from_stdin_prints_text() {
    let out = clearread(&["fix", "-"], "u r so gr8 for buying us tix and fud at the theater! tysm!");
    assert_eq!(out.stdout, "You are so great for buying us tickets and food at the theater! Thank you so much!");
    // the first sentence is still 13 words long, which has no safe fix
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains(" R02 sentence has 13 words"), "{}", out.stderr);
}

#[test]
fn fix_reports_residual_findings() {
    let out = clearread(&["fix", "-"], "Mistakes were made.");
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "Mistakes were made.");
    assert!(out.stderr.contains("R04"), "{}", out.stderr);
}

#[test]
fn fix_in_place_and_diff() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "a.txt", "teh cat sat.\n");
    let diff = clearread(&["fix", "--diff", &f], "");
    assert!(diff.stdout.contains("-teh cat sat.\n+the cat sat.\n"), "{}", diff.stdout);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), "teh cat sat.\n");

    let out = clearread(&["fix", "--in-place", &f], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "");
    assert_eq!(std::fs::read_to_string(&f).unwrap(), "the cat sat.\n");
}

#[test]
fn reports_follow_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let b = write(dir.path(), "b.txt", "u r gr8.\n");
    let a = write(dir.path(), "a.txt", "The cat sat.\n");
    let out = clearread(&["lint", "--format", "json", &b, &a], "");
    let files: Vec<String> = out
        .stdout
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["file"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(files, vec![b, a]);
    assert_eq!(out.code, 1);
}

#[test]
fn rule_selection() {
    let text = "u r gr8. I don't know nothing!";
    let out = clearread(&["lint", "--rules", "r10", "-"], text);
    assert_eq!(out.stdout.matches(" R10 ").count(), 1);
    assert!(!out.stdout.contains("R08"));
    let bad = clearread(&["lint", "--rules", "R10,R42", "-"], text);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("R42"));
}

#[test]
fn score_prints_metrics() {
    let out = clearread(&["score", "--format", "json", "-"], "The cat sat.");
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(v["metrics"]["words"], 3);
    assert!((v["metrics"]["grade_level"].as_f64().unwrap() + 2.62).abs() < 1e-9);
    assert_eq!(clearread(&["score", "-"], "...").code, 2);
}

#[test]
fn audit_exit_codes() {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let seeded = fixtures.join("deck_seeded.json");
    let out = clearread(&["audit", seeded.to_str().unwrap()], "");
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout.lines().last(), Some("6 violations"));
    assert!(out.stdout.contains(": slide 2: D1 image 'img1' missing alt text\n"));

    let clean = fixtures.join("deck_clean.json");
    assert_eq!(clearread(&["audit", clean.to_str().unwrap()], "").code, 0);
    assert_eq!(clearread(&["audit", "-"], "{\"slides\": 3}").code, 2);
}

#[test]
fn config_file_is_strict() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", r#"{"max_sentence_words": 3, "enabled_rules": ["R02"]}"#);
    let out = clearread(&["lint", "--config", &good, "-"], "One two three four.");
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("sentence has 4 words (max 3)"));

    let typo = write(dir.path(), "typo.json", r#"{"max_sentence_wrds": 3}"#);
    let out = clearread(&["lint", "--config", &typo, "-"], "Hi.");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("max_sentence_wrds"), "{}", out.stderr);
}

#[test]
fn lexicon_dir_precedence() {
    let flag_dir = tempfile::tempdir().unwrap();
    std::fs::write(flag_dir.path().join("slang.tsv"), "zz\tsleep\n").unwrap();
    let env_dir = tempfile::tempdir().unwrap();
    std::fs::write(env_dir.path().join("slang.tsv"), "qq\tquestion\n").unwrap();
    let env = [(LEXICON_DIR_VAR, env_dir.path().to_str().unwrap())];
    let text = "zz qq gr8";

    let from_env = invoke(&["lint", "--rules", "R08", "-"], text, &env);
    assert!(from_env.stdout.contains("`qq`") && !from_env.stdout.contains("`zz`"), "{}", from_env.stdout);

    let flag = flag_dir.path().to_str().unwrap();
    let from_flag = invoke(&["lint", "--rules", "R08", "--lexicon-dir", flag, "-"], text, &env);
    assert!(from_flag.stdout.contains("`zz`") && !from_flag.stdout.contains("`qq`"), "{}", from_flag.stdout);

    let bundled = invoke(&["lint", "--rules", "R08", "-"], text, &[]);
    assert!(bundled.stdout.contains("`gr8`"));

    let missing = invoke(&["lint", "-"], text, &[(LEXICON_DIR_VAR, "/definitely/not/here")]);
    assert_eq!(missing.code, 2);
}

#[test]
fn unreadable_input_is_an_error() {
    let out = clearread(&["lint", "/no/such/file.txt"], "");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("/no/such/file.txt"));
    assert_eq!(clearread(&["frobnicate"], "").code, 2);
}

#[test]
fn binary_reads_stdin() {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new(env!("CARGO_BIN_EXE_clearread"))
        .args(["lint", "--format", "json"])
        .env_remove(LEXICON_DIR_VAR)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"I don't know nothing!").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["violations"][0]["code"], "R10");
}

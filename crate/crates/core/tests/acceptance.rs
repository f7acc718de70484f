//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::path::{Path, PathBuf};
use std::process::Command;

use clearread::deck::{audit, contrast_ratio, AuditConfig, CheckCode, Deck};
use clearread::engine::{fix, lint, Config, FixOutcome};
use clearread::lexicon::{bundled_syllable_gold, Lexicons};
use clearread::metrics::readability;
use clearread::rules::RuleCode;
use clearread::textmodel::Document;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

#[derive(Deserialize)]
struct Example {
    rule: RuleCode,
    text: String,
    flagged: Vec<String>,
    clean: String,
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn fuzz_corpus(n: usize, seed: u64) -> Vec<String> {
    let pool = std::fs::read_to_string(fixtures().join("fuzz_sentences.txt")).unwrap();
    let sentences: Vec<&str> = pool.lines().filter(|l| !l.trim().is_empty()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let count = rng.gen_range(6..=14);
            let mut doc = String::new();
            for k in 0..count {
                if k > 0 {
                    doc.push_str(if rng.gen_bool(0.25) { "\n\n" } else { " " });
                }
                doc.push_str(sentences.choose(&mut rng).unwrap());
            }
            if rng.gen_bool(0.5) {
                doc.push('\n');
            }
            doc
        })
        .collect()
}

fn fix_text(text: &str, config: &Config, lex: &Lexicons) -> FixOutcome {
    match fix(&Document::new(text), config, lex) {
        Ok(o) => o,
        Err(e) => e.outcome().clone(),
    }
}

type Check = Result<String, String>;

fn worked_examples() -> Check {
    let examples: Vec<Example> =
        serde_json::from_str(&std::fs::read_to_string(fixtures().join("worked_examples.json")).unwrap()).unwrap();
    let lex = Lexicons::bundled();
    let mut failures = Vec::new();
    for ex in &examples {
        let config = Config::default().with_rules([ex.rule]);
        let got: Vec<String> = lint(&Document::new(&ex.text), &config, lex)
            .violations
            .iter()
            .map(|v| ex.text[v.span.range()].to_string())
            .collect();
        if got != ex.flagged {
            failures.push(format!("{}: flagged {got:?}, expected {:?}", ex.rule, ex.flagged));
        }
        let clean = lint(&Document::new(&ex.clean), &config, lex);
        if !clean.violations.is_empty() {
            failures.push(format!("{}: {} false positive(s) on the clean text", ex.rule, clean.violations.len()));
        }
    }
    if failures.is_empty() {
        Ok(format!("{} rules, spans match, clean counterparts silent", examples.len()))
    } else {
        Err(failures.join("; "))
    }
}

fn slang_rewrite() -> Check {
    let input = "u r so gr8 for buying us tix and fud at the theater! tysm!";
    let expected = "You are so great for buying us tickets and food at the theater! Thank you so much!";
    let out = fix_text(input, &Config::default(), Lexicons::bundled());
    if out.text == expected {
        Ok(format!("\"{}\"", out.text))
    } else {
        Err(format!("got \"{}\"", out.text))
    }
}

fn idempotence(corpus: &[String], fixed: &[FixOutcome]) -> Check {
    let lex = Lexicons::bundled();
    let config = Config::default();
    let bad: Vec<usize> = fixed
        .iter()
        .enumerate()
        .filter(|(_, once)| fix_text(&once.text, &config, lex).text != once.text)
        .map(|(i, _)| i)
        .collect();
    if bad.is_empty() {
        Ok(format!("{}/{} documents stable", corpus.len(), corpus.len()))
    } else {
        Err(format!("{} unstable, first: {:?}", bad.len(), corpus[bad[0]]))
    }
}

fn soundness(corpus: &[String], fixed: &[FixOutcome]) -> Check {
    let lex = Lexicons::bundled();
    let config = Config::default();
    let bad: Vec<usize> = fixed
        .iter()
        .enumerate()
        .filter(|(_, o)| lint(&Document::new(&o.text), &config, lex).fixable_count() > 0)
        .map(|(i, _)| i)
        .collect();
    if bad.is_empty() {
        Ok(format!("0 fixable violations across {} fixed documents", corpus.len()))
    } else {
        Err(format!("{} documents keep fixable violations, first: {:?}", bad.len(), fixed[bad[0]].text))
    }
}

fn syllable_oracle() -> Check {
    let gold = bundled_syllable_gold();
    let agreement = gold.agreement();
    let msg = format!("{:.1}% agreement on {} words", agreement * 100.0, gold.entries.len());
    if agreement >= 0.90 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn monotonicity(corpus: &[String], fixed: &[FixOutcome]) -> Check {
    let lex = Lexicons::bundled();
    let config = Config::default();
    let mut ok = 0;
    for (before, after) in corpus.iter().zip(fixed) {
        let g0 = readability(&Document::new(before), lex, &config).map(|m| m.grade_level);
        let g1 = readability(&Document::new(&after.text), lex, &config).map(|m| m.grade_level);
        if let (Ok(g0), Ok(g1)) = (g0, g1) {
            if g1 <= g0 + 0.1 {
                ok += 1;
            }
        }
    }
    let share = ok as f64 / corpus.len() as f64;
    let msg = format!("{ok}/{} documents within +0.1 grade", corpus.len());
    if share >= 0.95 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn deck_fixture() -> Check {
    let config = AuditConfig::default();
    let seeded = Deck::load(&fixtures().join("deck_seeded.json")).map_err(|e| e.to_string())?;
    let mut codes: Vec<CheckCode> = audit(&seeded, &config).iter().map(|v| v.check_code).collect();
    codes.sort();
    let all = vec![CheckCode::D1, CheckCode::D2, CheckCode::D3, CheckCode::D4, CheckCode::D5, CheckCode::D6];
    if codes != all {
        return Err(format!("seeded deck reported {codes:?}"));
    }
    let clean = Deck::load(&fixtures().join("deck_clean.json")).map_err(|e| e.to_string())?;
    let residual = audit(&clean, &config);
    if !residual.is_empty() {
        return Err(format!("corrected deck reported {} finding(s)", residual.len()));
    }
    Ok("seeded deck: D1-D6 once each; corrected deck: 0".into())
}

fn contrast() -> Check {
    let cases = [("#FFFFFF", "#000000", 21.0), ("#3A7BD5", "#3A7BD5", 1.0), ("#FFFF00", "#000000", 19.56)];
    let mut parts = Vec::new();
    for (fg, bg, want) in cases {
        let got = contrast_ratio(fg, bg).map_err(|e| e.to_string())?;
        if (got - want).abs() > 0.01 {
            return Err(format!("{fg}/{bg}: {got:.4}, expected {want}"));
        }
        parts.push(format!("{fg}/{bg}={got:.2}"));
    }
    Ok(parts.join(" "))
}

fn determinism(corpus: &[String]) -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for (i, doc) in corpus.iter().take(5).enumerate() {
        let path = dir.path().join(format!("doc{i}.txt"));
        std::fs::write(&path, doc).map_err(|e| e.to_string())?;
        files.push(path.to_string_lossy().into_owned());
    }
    let seeded = fixtures().join("deck_seeded.json").to_string_lossy().into_owned();
    let mut invocations: Vec<Vec<String>> = Vec::new();
    for format in ["text", "json"] {
        for cmd in ["lint", "score"] {
            invocations.push([cmd, "--format", format].iter().map(|s| s.to_string()).chain(files.clone()).collect());
        }
        invocations.push(vec!["audit".into(), "--format".into(), format.into(), seeded.clone()]);
    }
    invocations.push(["fix", "--stdout"].iter().map(|s| s.to_string()).chain(files.clone()).collect());
    invocations.push(["fix", "--diff"].iter().map(|s| s.to_string()).chain(files.clone()).collect());

    let exe = env!("CARGO_BIN_EXE_clearread");
    for args in &invocations {
        let run = || Command::new(exe).args(args).env_remove("CLEARREAD_LEXICON_DIR").output();
        let (a, b) = (run().map_err(|e| e.to_string())?, run().map_err(|e| e.to_string())?);
        if a.stdout != b.stdout || a.status.code() != b.status.code() {
            return Err(format!("`{}` differs between runs", args[..3.min(args.len())].join(" ")));
        }
        if a.status.code() == Some(2) {
            return Err(format!("`{}` failed: {}", args.join(" "), String::from_utf8_lossy(&a.stderr)));
        }
    }
    Ok(format!("{} invocations byte-identical across two runs", invocations.len()))
}

fn main() {
    let corpus = fuzz_corpus(100, 0x5EED);
    let lex = Lexicons::bundled();
    let fixed: Vec<FixOutcome> = corpus.iter().map(|d| fix_text(d, &Config::default(), lex)).collect();

    let results: Vec<(&str, Check)> = vec![
        ("worked examples", worked_examples()),
        ("slang end-to-end rewrite", slang_rewrite()),
        ("fix idempotence", idempotence(&corpus, &fixed)),
        ("fix soundness", soundness(&corpus, &fixed)),
        ("syllable oracle", syllable_oracle()),
        ("readability monotonicity", monotonicity(&corpus, &fixed)),
        ("deck audit fixture", deck_fixture()),
        ("contrast anchors", contrast()),
        ("CLI determinism", determinism(&corpus)),
    ];
    let mut failed = 0;
    for (i, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({detail})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

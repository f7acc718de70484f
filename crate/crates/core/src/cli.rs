//! Command-line front end: `lint`, `fix`, `score` and `audit`.
//!
//! Exit codes: 0 clean, 1 findings, 2 usage or I/O error.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::deck::{audit, AuditConfig, Deck};
use crate::engine::{fix, lint, Config, FixError};
use crate::lexicon::Lexicons;
use crate::metrics::readability;
use crate::report::{render_diff, render_json, render_metrics_text, render_text, Report, STDIN_NAME};
use crate::rules::RuleCode;
use crate::textmodel::Document;

pub const LEXICON_DIR_VAR: &str = "CLEARREAD_LEXICON_DIR";

#[derive(Debug, Parser)]
#[command(name = "clearread", version, about = "Plain-language linter and slide-deck accessibility auditor")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report rule violations.
    Lint {
        #[command(flatten)]
        common: Common,
        #[arg(default_value = "-")]
        inputs: Vec<String>,
    },
    /// Apply safe fixes until nothing more can be fixed.
    Fix {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        mode: FixMode,
        #[arg(default_value = "-")]
        inputs: Vec<String>,
    },
    /// Print readability metrics.
    Score {
        #[command(flatten)]
        common: Common,
        #[arg(default_value = "-")]
        inputs: Vec<String>,
    },
    /// Audit slide-deck manifests.
    Audit {
        #[command(flatten)]
        common: Common,
        #[arg(required = true)]
        inputs: Vec<String>,
    },
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Comma-separated rule codes to enable, e.g. R01,R05.
    #[arg(long, value_delimiter = ',')]
    rules: Option<Vec<String>>,
    /// JSON config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Directory of lexicon tables, overriding the bundled ones.
    #[arg(long)]
    lexicon_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct FixMode {
    /// Overwrite each input file.
    #[arg(long)]
    in_place: bool,
    /// Print fixed text (the default).
    #[arg(long)]
    stdout: bool,
    /// Print a unified diff.
    #[arg(long)]
    diff: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Process streams handed to [`run`].
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, env: &HashMap<String, String>, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let stream: &mut dyn Write = if e.use_stderr() { io.stderr } else { io.stdout };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, env, io) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(io.stderr, "clearread: {msg}");
            2
        }
    }
}

struct Setup {
    config: Config,
    lexicons: Lexicons,
    format: Format,
}

fn setup(common: &Common, env: &HashMap<String, String>) -> Result<Setup, Failure> {
    let mut config = match &common.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(rules) = &common.rules {
        let codes = rules
            .iter()
            .filter(|r| !r.trim().is_empty())
            .map(|r| r.parse::<RuleCode>())
            .collect::<Result<Vec<_>, _>>()?;
        config = config.with_rules(codes);
    }
    let dir = common
        .lexicon_dir
        .clone()
        .or_else(|| env.get(LEXICON_DIR_VAR).filter(|v| !v.is_empty()).map(PathBuf::from))
        .or_else(|| config.lexicon_dir.clone());
    let lexicons = match dir {
        Some(dir) => Lexicons::from_dir(&dir)?,
        None => Lexicons::bundled().clone(),
    };
    Ok(Setup { config, lexicons, format: common.format })
}

fn read_input(input: &str, stdin: &mut dyn Read) -> Result<(String, String), Failure> {
    if input == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|e| Failure(format!("{STDIN_NAME}: {e}")))?;
        return Ok((STDIN_NAME.to_string(), text));
    }
    let text = std::fs::read_to_string(input).map_err(|e| Failure(format!("{input}: {e}")))?;
    Ok((input.to_string(), text))
}

fn emit(out: &mut dyn Write, format: Format, report: &Report) -> Result<(), Failure> {
    match format {
        Format::Text => write!(out, "{}", render_text(report))?,
        Format::Json => writeln!(out, "{}", render_json(report))?,
    }
    Ok(())
}

fn execute(command: Command, env: &HashMap<String, String>, io: &mut Io<'_>) -> Result<i32, Failure> {
    match command {
        Command::Lint { common, inputs } => {
            let s = setup(&common, env)?;
            // read everything first so an unreadable file fails before any output
            let docs = inputs.iter().map(|i| read_input(i, io.stdin)).collect::<Result<Vec<_>, _>>()?;
            let mut findings = false;
            for (name, text) in &docs {
                let result = lint(&Document::new(text), &s.config, &s.lexicons);
                findings |= !result.is_clean();
                emit(io.stdout, s.format, &Report::from_lint(name.as_str(), text, &result))?;
            }
            Ok(findings as i32)
        }
        Command::Fix { common, mode, inputs } => {
            let s = setup(&common, env)?;
            if mode.in_place && inputs.iter().any(|i| i == "-") {
                return Err(Failure("--in-place cannot be used with stdin".into()));
            }
            let docs = inputs.iter().map(|i| read_input(i, io.stdin)).collect::<Result<Vec<_>, _>>()?;
            let mut unclean = false;
            for (name, text) in &docs {
                let (outcome, capped) = match fix(&Document::new(text), &s.config, &s.lexicons) {
                    Ok(o) => (o, false),
                    Err(FixError::PassLimitExceeded(o)) => (*o, true),
                };
                if mode.in_place {
                    if outcome.text != *text {
                        std::fs::write(Path::new(name), &outcome.text).map_err(|e| Failure(format!("{name}: {e}")))?;
                    }
                } else if mode.diff {
                    write!(io.stdout, "{}", render_diff(text, &outcome.text, name))?;
                } else {
                    write!(io.stdout, "{}", outcome.text)?;
                }
                if capped {
                    writeln!(io.stderr, "{name}: stopped after {} fix passes", outcome.passes)?;
                }
                unclean |= capped || !outcome.residual.is_clean();
                if s.format == Format::Json || !outcome.residual.violations.is_empty() {
                    emit(io.stderr, s.format, &Report::from_lint(name.as_str(), &outcome.text, &outcome.residual))?;
                }
            }
            Ok(unclean as i32)
        }
        Command::Score { common, inputs } => {
            let s = setup(&common, env)?;
            let docs = inputs.iter().map(|i| read_input(i, io.stdin)).collect::<Result<Vec<_>, _>>()?;
            for (name, text) in &docs {
                let metrics = readability(&Document::new(text), &s.lexicons, &s.config)
                    .map_err(|e| Failure(format!("{name}: {e}")))?;
                match s.format {
                    Format::Text => write!(io.stdout, "{}", render_metrics_text(name, &metrics))?,
                    Format::Json => writeln!(io.stdout, "{}", render_json(&Report::new(name.as_str()).with_metrics(metrics)))?,
                }
            }
            Ok(0)
        }
        Command::Audit { common, inputs } => {
            let s = setup(&common, env)?;
            let config = AuditConfig::from(&s.config);
            let decks = inputs
                .iter()
                .map(|i| {
                    let (name, text) = read_input(i, io.stdin)?;
                    let deck = Deck::from_json(&text, Path::new(&name))?;
                    Ok((name, deck))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let mut findings = false;
            for (name, deck) in &decks {
                let violations = audit(deck, &config);
                findings |= !violations.is_empty();
                emit(io.stdout, s.format, &Report::from_deck(name.as_str(), &violations))?;
            }
            Ok(findings as i32)
        }
    }
}

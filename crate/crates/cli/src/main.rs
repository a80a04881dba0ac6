//! `binmorph`: analyze, apply and decode binary morphisms, search for
//! ultimately periodic fits, trace phases and run the falsification harness.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 usage error, 2 negative outcome (no decoding, refuted candidate, no
//! fit, not enough evidence), 3 invariant violation or an unexpected
//! falsification result.

mod input;
mod output;

use std::process::ExitCode;

use binmorph::morphism::DecodeError;
use binmorph::periodicity::{search_min_up, SearchBounds};
use binmorph::witness::falsify::{falsify_with, FalsifyConfig};
use binmorph::witness::{analyze, WitnessError};
use binmorph::{Exec, UpDecomposition};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::input::{parse_generator, read_morphism, UsageError, WordSource};

#[derive(Debug, Parser)]
#[command(name = "binmorph", version, about = "Binary morphisms and ultimately periodic words")]
struct Cli {
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Commutation, injectivity and primitive roots of a morphism.
    Analyze {
        #[arg(long)]
        morphism: String,
    },
    /// Image of a binary word.
    Apply {
        #[arg(long)]
        morphism: String,
        #[command(flatten)]
        source: WordSource,
        #[arg(long)]
        length: Option<usize>,
    },
    /// Unique preimage of a word under a non-commuting morphism.
    Decode {
        #[arg(long)]
        morphism: String,
        #[command(flatten)]
        source: WordSource,
    },
    /// Prefix of a generated word.
    Generate {
        #[arg(long)]
        generator: String,
        #[arg(long)]
        length: usize,
    },
    /// Shortest ultimately periodic fit of a word.
    Period {
        #[command(flatten)]
        source: WordSource,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, default_value_t = 64)]
        max_preperiod: usize,
        #[arg(long, default_value_t = 128)]
        max_period: usize,
        #[arg(long, default_value_t = 3)]
        min_reps: usize,
    },
    /// Phase trace of h(w) against the candidate PREPERIOD·PERIOD^ω.
    Witness {
        #[arg(long)]
        morphism: String,
        #[command(flatten)]
        source: WordSource,
        /// Prefix length of w; defaults to the whole inline word.
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, default_value = "")]
        preperiod: String,
        #[arg(long)]
        period: String,
    },
    /// Randomised search for periodic images of aperiodic words.
    Falsify {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 4096)]
        length: usize,
        #[arg(long, default_value_t = 3)]
        alphabet: usize,
        #[arg(long, default_value_t = 4)]
        max_image_len: usize,
        #[arg(long, default_value_t = 64)]
        max_preperiod: usize,
        #[arg(long, default_value_t = 128)]
        max_period: usize,
        #[arg(long, default_value_t = 3)]
        min_reps: usize,
        /// Run trials on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Success = 0,
    Negative = 2,
    Violation = 3,
}

/// What a subcommand produced: JSON lines for stdout and an exit status.
struct Outcome {
    lines: Vec<Value>,
    status: Status,
}

impl Outcome {
    fn one(value: Value, status: Status) -> Self {
        Outcome {
            lines: vec![value],
            status,
        }
    }
}

fn bounds(max_preperiod: usize, max_period: usize, min_reps: usize) -> Result<SearchBounds, UsageError> {
    if max_period == 0 {
        return Err(UsageError::new("--max-period", "must be at least 1"));
    }
    if min_reps == 0 {
        return Err(UsageError::new("--min-reps", "must be at least 1"));
    }
    Ok(SearchBounds {
        max_preperiod,
        max_period,
        min_full_periods: min_reps,
    })
}

fn decomposition_json(d: &UpDecomposition) -> Value {
    json!({"preperiod": d.preperiod(), "period": d.period()})
}

fn run(command: Command) -> Result<Outcome, UsageError> {
    match command {
        Command::Analyze { morphism } => {
            let h = read_morphism(&morphism)?;
            Ok(Outcome::one(json!(h.classify()), Status::Success))
        }
        Command::Apply { morphism, source, length } => {
            let h = read_morphism(&morphism)?;
            let a = source.word(length)?;
            let image = h.apply(&a).map_err(|e| UsageError::new("--input", e.to_string()))?;
            Ok(Outcome::one(json!({"image": image}), Status::Success))
        }
        Command::Decode { morphism, source } => {
            let h = read_morphism(&morphism)?;
            let s = source.word(None)?;
            Ok(match h.decode(&s) {
                Ok(a) => Outcome::one(json!({"preimage": a}), Status::Success),
                Err(DecodeError::Commuting) => Outcome::one(
                    json!({"preimage": null, "error": "commuting"}),
                    Status::Negative,
                ),
                Err(DecodeError::NoDecode { position }) => Outcome::one(
                    json!({"preimage": null, "error": "no-decode", "position": position}),
                    Status::Negative,
                ),
            })
        }
        Command::Generate { generator, length } => {
            let word = parse_generator(&generator)?
                .prefix(length)
                .map_err(|e| UsageError::new("--length", e.to_string()))?;
            Ok(Outcome::one(json!({"word": word}), Status::Success))
        }
        Command::Period {
            source,
            length,
            max_preperiod,
            max_period,
            min_reps,
        } => {
            let bounds = bounds(max_preperiod, max_period, min_reps)?;
            let s = source.word(length)?;
            Ok(match search_min_up(&s, bounds) {
                None => Outcome::one(json!({"fit": null}), Status::Negative),
                Some(d) => {
                    let verdict = d.check_fit(&s);
                    Outcome::one(
                        json!({
                            "fit": {
                                "preperiod": d.preperiod(),
                                "period": d.period(),
                                "full_periods": verdict.full_periods_observed,
                            },
                            "canonical": decomposition_json(&d.canonicalize()),
                        }),
                        Status::Success,
                    )
                }
            })
        }
        Command::Witness {
            morphism,
            source,
            length,
            preperiod,
            period,
        } => {
            let h = read_morphism(&morphism)?;
            let w = source.stream()?;
            let n = match (&w, length) {
                (_, Some(n)) => n,
                (binmorph::WordStream::Explicit(word), None) => word.len(),
                (_, None) => return Err(UsageError::new("--length", "required with --generator")),
            };
            let d = UpDecomposition::new(preperiod.as_str(), period.as_str())
                .map_err(|e| UsageError::new("--period", e.to_string()))?;
            Ok(match analyze(&h, &w, &d, n) {
                Ok((trace, verdict)) => {
                    let status = if trace.is_some() { Status::Success } else { Status::Negative };
                    Outcome::one(json!({"verdict": verdict, "trace": trace}), status)
                }
                Err(WitnessError::InsufficientEvidence { hits }) => Outcome::one(
                    json!({"verdict": null, "error": "insufficient-evidence", "hits": hits}),
                    Status::Negative,
                ),
                Err(e @ WitnessError::InvariantViolation(_)) => Outcome::one(
                    json!({"verdict": null, "error": "invariant-violation", "message": e.to_string()}),
                    Status::Violation,
                ),
                Err(WitnessError::EmptyPrefix) => {
                    return Err(UsageError::new("--length", "must be at least 1"))
                }
                Err(e @ WitnessError::Stream(_)) => return Err(UsageError::new("--length", e.to_string())),
                Err(e) => return Err(UsageError::new("--input", e.to_string())),
            })
        }
        Command::Falsify {
            seed,
            trials,
            length,
            alphabet,
            max_image_len,
            max_preperiod,
            max_period,
            min_reps,
            sequential,
        } => {
            let config = FalsifyConfig {
                trials,
                prefix_len: length,
                alphabet_size: alphabet,
                max_image_len,
                bounds: bounds(max_preperiod, max_period, min_reps)?,
                seed,
            };
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let report = falsify_with(&config, exec).map_err(|e| UsageError::new("--alphabet", e.to_string()))?;
            let status = if report.is_consistent() { Status::Success } else { Status::Violation };
            let mut lines: Vec<Value> = report.records.iter().map(|r| json!(r)).collect();
            lines.push(json!({"summary": report.summary}));
            Ok(Outcome { lines, status })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            output::emit(&outcome.lines, cli.pretty);
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {}: {}", e.flag, e.message);
            ExitCode::from(1)
        }
    }
}

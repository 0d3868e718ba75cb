use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rskdyn_core::{
    bracket, decode, enumerate_coplactic_class, enumerate_plactic_class, rsk, rsk_inverse, Alphabet, RskPair,
    SemistandardTableau, StandardTableau, Tableau, Word, DEFAULT_CANDIDATE_CAP,
};
use rskdyn_experiments::{ExperimentKind, ExperimentReport, PartialConfig};
use serde_json::json;

mod selftest;

#[derive(Parser, Debug)]
#[command(
    name = "rskdyn",
    version,
    about = "RSK transforms, Young partitions and youngization experiments"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the RSK pair (P, Q) of a word.
    Rsk {
        /// Digits for k <= 9, otherwise comma-separated letters.
        word: String,
        /// Alphabet size (default: the largest letter, at least 1).
        #[arg(long)]
        k: Option<u32>,
    },
    /// Recover the word from a pair given as JSON `{"p": ..., "q": ...}`.
    Inverse {
        /// File path, `-` for stdin, or inline JSON.
        pair: String,
        #[arg(long)]
        k: Option<u32>,
    },
    /// List the plactic class of a semistandard tableau or the coplactic class of a standard one.
    Class {
        #[arg(value_enum)]
        kind: ClassKind,
        /// Tableau as `{"rows": [[...]]}` or `[[...]]`: file path, `-`, or inline.
        tableau: String,
        /// Alphabet size; required for coplactic classes.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Bracketing of a binary word: rank, pairs and free letters.
    Rank { word: String },
    /// Letters of the source word fixed by a recording tableau.
    Decode {
        q: String,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP)]
        cap: usize,
    },
    /// Run a seeded experiment and write its report.
    Simulate(Box<SimulateArgs>),
    /// Exhaustive small-size checks of the core algorithms.
    Selftest,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassKind {
    Plactic,
    Coplactic,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    /// transition_stats, thoma_frequencies, separation_time, determination,
    /// first_row_vanishing, coupled_walk_domination, transposition_coupling
    /// or de_finetti_to_eta.
    experiment: String,
    /// TOML file with experiment keys; explicit flags override it.
    #[arg(long, env = "RSKDYN_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    k: Option<u32>,
    /// Letter probabilities, comma-separated.
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<f64>>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    horizon: Option<usize>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    ell: Option<u32>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    segment_len: Option<usize>,
    #[arg(long)]
    min_visits: Option<usize>,
    #[arg(long)]
    max_gap: Option<usize>,
    #[arg(long)]
    min_fraction: Option<f64>,
    #[arg(long)]
    window: Option<usize>,
    /// Accept p that is not nonincreasing (the report carries a warning).
    #[arg(long)]
    allow_unsorted: bool,
    /// Record the empirical kernel without comparing to the two-letter formula.
    #[arg(long)]
    no_formula_check: bool,
    /// Worker threads (0 = all cores). Does not affect the report.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write per-trial rows as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn read_input(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_owned());
    }
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

fn parse_tableau(text: &str) -> Result<Tableau> {
    if let Ok(t) = serde_json::from_str::<Tableau>(text) {
        return Ok(t);
    }
    let rows: Vec<Vec<u32>> =
        serde_json::from_str(text).context("expected a tableau as {\"rows\": [[...]]} or [[...]]")?;
    Ok(Tableau::new(rows))
}

fn alphabet_for(k: Option<u32>, max_entry: Option<u32>) -> Result<Alphabet> {
    let k = match (k, max_entry) {
        (Some(k), _) => k,
        (None, m) => m.unwrap_or(1).max(1),
    };
    Ok(Alphabet::new(k)?)
}

fn parse_word(s: &str, k: Option<u32>) -> Result<Word> {
    Ok(match k {
        Some(k) => Word::parse(s, Alphabet::new(k)?)?,
        None => Word::parse_inferred(s)?,
    })
}

fn emit(out: &mut impl Write, text: &str) -> Result<()> {
    writeln!(out, "{text}")?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = cli.format;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if format == Format::Csv && !matches!(cli.command, Command::Simulate(_)) {
        bail!("--format csv applies to simulate only");
    }
    match cli.command {
        Command::Rsk { word, k } => {
            let w = parse_word(&word, k)?;
            let pair = rsk(&w);
            match format {
                Format::Json => emit(&mut out, &serde_json::to_string(&pair)?)?,
                _ => emit(&mut out, &format!("P={} Q={}", pair.p(), pair.q()))?,
            }
        }
        Command::Inverse { pair, k } => {
            let pair: RskPair = serde_json::from_str(&read_input(&pair)?).context("invalid pair")?;
            let alphabet = alphabet_for(k, pair.p().as_tableau().max_entry())?;
            let w = rsk_inverse(&pair, alphabet)?;
            match format {
                Format::Json => emit(&mut out, &w.to_json().to_string())?,
                _ => emit(&mut out, &w.to_string())?,
            }
        }
        Command::Class { kind, tableau, k } => {
            let t = parse_tableau(&read_input(&tableau)?)?;
            let words = match kind {
                ClassKind::Plactic => {
                    let alphabet = alphabet_for(k, t.max_entry())?;
                    let t = SemistandardTableau::new(t.rows)?;
                    enumerate_plactic_class(&t, alphabet)?
                }
                ClassKind::Coplactic => {
                    let Some(k) = k else {
                        bail!("coplactic classes need --k")
                    };
                    let t = StandardTableau::new(t.rows)?;
                    enumerate_coplactic_class(&t, Alphabet::new(k)?)
                }
            };
            match format {
                Format::Json => {
                    let list: Vec<_> = words.iter().map(Word::to_json).collect();
                    emit(&mut out, &serde_json::to_string(&list)?)?
                }
                _ => {
                    for w in &words {
                        emit(&mut out, &w.to_string())?;
                    }
                }
            }
        }
        Command::Rank { word } => {
            let w = Word::parse(&word, Alphabet::BINARY)?;
            let analysis = bracket(&w)?;
            match format {
                Format::Json => emit(&mut out, &serde_json::to_string(&analysis)?)?,
                _ => {
                    let pairs: Vec<String> = analysis.pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
                    let free: Vec<String> = analysis.free_indices.iter().map(usize::to_string).collect();
                    emit(&mut out, &format!("rank {}", analysis.rank))?;
                    emit(&mut out, &format!("pairs {}", pairs.join(" ")))?;
                    emit(&mut out, &format!("free {}", free.join(" ")))?;
                }
            }
        }
        Command::Decode { q, k, cap } => {
            let t = parse_tableau(&read_input(&q)?)?;
            let q = StandardTableau::new(t.rows)?;
            let decoded = decode(&q, Alphabet::new(k)?, cap)?;
            match format {
                Format::Json => emit(&mut out, &serde_json::to_string(&decoded)?)?,
                _ => {
                    emit(&mut out, &decoded.to_string())?;
                    emit(&mut out, &format!("candidates {}", decoded.candidates))?;
                }
            }
        }
        Command::Simulate(args) => return simulate(args, format, &mut out),
        Command::Selftest => {
            let ok = selftest::run(&mut out)?;
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn simulate(args: Box<SimulateArgs>, format: Format, out: &mut impl Write) -> Result<ExitCode> {
    let experiment: ExperimentKind = args.experiment.parse()?;
    let file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            PartialConfig::from_toml(&text)?
        }
        None => PartialConfig::default(),
    };
    let flags = PartialConfig {
        experiment: Some(experiment),
        k: args.k,
        p: args.p,
        n: args.n,
        trials: args.trials,
        horizon: args.horizon,
        steps: args.steps,
        seed: args.seed,
        epsilon: args.epsilon,
        tolerance: args.tolerance,
        ell: args.ell,
        q: args.q,
        segment_len: args.segment_len,
        min_visits: args.min_visits,
        max_gap: args.max_gap,
        min_fraction: args.min_fraction,
        window: args.window,
        allow_unsorted: args.allow_unsorted.then_some(true),
        formula_check: args.no_formula_check.then_some(false),
    };
    let cfg = file.merge(flags).resolve()?;
    let report = rskdyn_experiments::run(&cfg, args.threads)?;
    for w in &report.warnings {
        eprintln!("{w}");
    }
    if let Some(path) = &args.csv {
        fs::write(path, report.to_csv()).with_context(|| format!("writing {}", path.display()))?;
    }
    match &args.output {
        Some(path) => {
            fs::write(path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?
        }
        None => match format {
            Format::Json => emit(out, &report.to_json())?,
            Format::Csv => write!(out, "{}", report.to_csv())?,
            Format::Text => emit(out, &summary(&report))?,
        },
    }
    Ok(ExitCode::from(report.verdict.exit_code() as u8))
}

fn summary(report: &ExperimentReport) -> String {
    let verdict = serde_json::to_value(report.verdict).unwrap_or(json!(null));
    let mut s = format!(
        "{} seed={} verdict={}\n{}",
        report.experiment,
        report.parameters.seed,
        verdict.as_str().unwrap_or("?"),
        serde_json::to_string_pretty(&report.statistics).unwrap_or_default()
    );
    if !report.failures.is_empty() {
        s.push_str(&format!(
            "\n{} exact-invariant failures, first: {:?}",
            report.failures.len(),
            report.failures[0]
        ));
    }
    s
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
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

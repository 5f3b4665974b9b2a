//! Command dispatch for the `gammapath` binary.
//!
//! [`run`] never touches the process streams or exit status; it returns a
//! [`CommandOutcome`] that `main` forwards.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gammapath::{
    alpha, analyze, beta, census, decompile, dn_form, gamma, gamma_orbit, gen_gamma_path,
    is_alpha_fixed, is_beta_fixed, is_gamma_fixed, render, Error, GammaDecomposition, SeedArray,
    Word,
};
use serde::Serialize;

/// Longest word accepted directly on the command line.
pub const MAX_INLINE_WORD: usize = 64 * 1024;

/// Highest semilength `census` accepts.
pub const CENSUS_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> CommandOutcome {
        CommandOutcome {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn rejected(message: String) -> CommandOutcome {
        CommandOutcome {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn usage(message: String) -> CommandOutcome {
        CommandOutcome {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gammapath", version, about = "Dyck-word permutations and the fixed points of gamma")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct WordInput {
    /// Word over {a, b}
    #[arg(long, value_parser = parse_word, required_unless_present = "file", conflicts_with = "file")]
    word: Option<Word>,
    /// Read one word per line instead
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Operator {
    Alpha,
    Beta,
    Gamma,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CensusFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate the fixed point of a seed array such as 1,1,1
    Gen {
        #[arg(long, value_parser = parse_seed_syntax)]
        seed: RawSeed,
        /// Append the trailing b (the D_n view)
        #[arg(long)]
        dn: bool,
        /// Print the full generation trace as JSON
        #[arg(long)]
        trace: bool,
    },
    /// Report the fixed-point predicates of a word as JSON
    Check(WordInput),
    /// Apply alpha, beta or gamma repeatedly
    Apply {
        #[arg(long, value_enum)]
        op: Operator,
        #[command(flatten)]
        input: WordInput,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        iterations: u64,
    },
    /// Print the gamma-orbit of a D_n word as JSON
    Orbit(WordInput),
    /// Tabulate gamma-orbits for n = 1..=max-n
    Census {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=CENSUS_CAP as u64))]
        max_n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: CensusFormat,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the seed array of a fixed point
    Decompile(WordInput),
    /// Draw a word as an ASCII lattice path
    Render(WordInput),
}

fn parse_word(s: &str) -> Result<Word, String> {
    if s.is_empty() {
        return Err("word must be non-empty".into());
    }
    if s.len() > MAX_INLINE_WORD {
        return Err(format!(
            "word longer than {MAX_INLINE_WORD} letters; pass it with --file"
        ));
    }
    s.parse().map_err(|e: Error| e.to_string())
}

/// Seed entries as typed, before the seed invariants are checked.
#[derive(Debug, Clone)]
struct RawSeed(Vec<usize>);

/// Syntax only (`^[0-9]+(,[0-9]+)*$`); seed invariants are checked later so
/// that a violation is a domain rejection rather than a usage error.
fn parse_seed_syntax(s: &str) -> Result<RawSeed, String> {
    s.split(',')
        .map(|part| {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("malformed seed {s:?}: expected e.g. 1,1,1"));
            }
            part.parse::<usize>().map_err(|e| format!("seed entry {part:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(RawSeed)
}

enum Failure {
    Usage(String),
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Rejected(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn words_of(input: &WordInput) -> Result<Vec<Word>, Failure> {
    if let Some(w) = &input.word {
        return Ok(vec![w.clone()]);
    }
    let path = input.file.as_ref().expect("clap enforces --word or --file");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Rejected(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim_end)
        .filter(|line| !line.is_empty())
        .map(|line| {
            line.parse::<Word>()
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        })
        .collect()
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("payloads always serialize");
    s.push('\n');
    s
}

fn cmd_gen(seed: &[usize], dn: bool, trace: bool) -> CmdResult {
    let seed = SeedArray::new(seed.to_vec())?;
    let generated = gen_gamma_path(&seed);
    if trace {
        return Ok(json_line(&generated));
    }
    let word = if dn {
        generated.dn_word()
    } else {
        generated.output
    };
    Ok(format!("{word}\n"))
}

#[derive(Debug, Serialize)]
struct CheckReport {
    word: Word,
    is_dyck: bool,
    in_dn: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dn_form: Option<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_fixed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta_fixed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_fixed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<SeedArray>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<GammaDecomposition>,
}

fn check_report(word: &Word) -> Result<CheckReport, Error> {
    let mut report = CheckReport {
        word: word.clone(),
        is_dyck: word.is_dyck(),
        in_dn: word.in_dn(),
        dn_form: None,
        alpha_fixed: None,
        beta_fixed: None,
        gamma_fixed: None,
        degree: None,
        seed: None,
        decomposition: None,
    };
    let Ok(dn) = dn_form(word) else {
        return Ok(report);
    };
    let fixed = is_gamma_fixed(&dn)?;
    report.alpha_fixed = Some(is_alpha_fixed(&dn)?);
    report.beta_fixed = Some(is_beta_fixed(&dn)?);
    report.gamma_fixed = Some(fixed);
    // D_0 = {b} is fixed but has no seed
    if fixed && dn.len() > 1 {
        let seed = decompile(&dn)?;
        report.degree = Some(seed.degree());
        report.seed = Some(seed);
        report.decomposition = Some(analyze(&dn)?);
    }
    report.dn_form = Some(dn);
    Ok(report)
}

fn cmd_check(input: &WordInput) -> CmdResult {
    let mut out = String::new();
    for word in words_of(input)? {
        out.push_str(&json_line(&check_report(&word)?));
    }
    Ok(out)
}

fn cmd_apply(op: Operator, input: &WordInput, iterations: u64) -> CmdResult {
    let apply = match op {
        Operator::Alpha => alpha,
        Operator::Beta => beta,
        Operator::Gamma => gamma,
    };
    let mut out = String::new();
    for word in words_of(input)? {
        let mut current = word;
        for _ in 0..iterations {
            current = apply(&current)?;
            out.push_str(&format!("{current}\n"));
        }
    }
    Ok(out)
}

fn cmd_orbit(input: &WordInput) -> CmdResult {
    let mut out = String::new();
    for word in words_of(input)? {
        out.push_str(&json_line(&gamma_orbit(&word)?));
    }
    Ok(out)
}

fn cmd_census(max_n: usize, format: CensusFormat, jobs: usize, path: Option<&PathBuf>) -> CmdResult {
    let mut out = String::new();
    if let CensusFormat::Csv = format {
        out.push_str(gammapath::CensusRow::CSV_HEADER);
        out.push('\n');
    }
    for n in 1..=max_n {
        let row = census(n, jobs)?;
        let line = match format {
            CensusFormat::Csv => row.to_csv_line(),
            CensusFormat::Json => row.to_json_line(),
        };
        out.push_str(&line);
        out.push('\n');
    }
    match path {
        None => Ok(out),
        Some(path) => {
            fs::write(path, out)
                .map_err(|e| Failure::Rejected(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
    }
}

fn cmd_decompile(input: &WordInput) -> CmdResult {
    let mut out = String::new();
    for word in words_of(input)? {
        out.push_str(&format!("{}\n", decompile(&word)?));
    }
    Ok(out)
}

fn cmd_render(input: &WordInput) -> CmdResult {
    let mut out = String::new();
    for word in words_of(input)? {
        out.push_str(&render(&word));
        out.push('\n');
    }
    Ok(out)
}

/// Parses `args` (program name first) and runs the selected command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                CommandOutcome::ok(rendered)
            } else {
                CommandOutcome {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };

    let result = match &cli.command {
        Command::Gen { seed, dn, trace } => cmd_gen(&seed.0, *dn, *trace),
        Command::Check(input) => cmd_check(input),
        Command::Apply {
            op,
            input,
            iterations,
        } => cmd_apply(*op, input, *iterations),
        Command::Orbit(input) => cmd_orbit(input),
        Command::Census {
            max_n,
            format,
            jobs,
            out,
        } => cmd_census(*max_n as usize, *format, *jobs as usize, out.as_ref()),
        Command::Decompile(input) => cmd_decompile(input),
        Command::Render(input) => cmd_render(input),
    };

    match result {
        Ok(stdout) => CommandOutcome::ok(stdout),
        Err(Failure::Usage(message)) => CommandOutcome::usage(message),
        Err(Failure::Rejected(message)) => CommandOutcome::rejected(message),
    }
}

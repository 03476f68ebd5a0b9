//! Command-line front end for `bblab-core`.
//!
//! Three commands: `analyze` profiles a complex or poset (from a file or by
//! corpus name) and runs every applicable bound check; `construct` writes
//! builder output as a JSON facet list or poset file; `verify` runs a named
//! check suite over the whole corpus.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 input
//! or usage error. All randomness flows from `--seed` (default `24301` =
//! `0x5EED`), and reports embed their seeds, so identical invocations
//! produce byte-identical output.

pub mod analyze;
pub mod construct;
pub mod formats;
pub mod report;
pub mod verify;

use bblab_core::complex::SimplicialComplex;
use bblab_core::constructions::{corpus, corpus_entry};
use bblab_core::posets::SimplicialPoset;
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

/// Characteristic used when no `--field` is given: large enough that every
/// corpus member admits a linear system of parameters.
pub const DEFAULT_FIELD: u64 = 32003;

#[derive(Parser)]
#[command(
    name = "bblab",
    version,
    about = "Simplicial complexes and posets: enumeration, homology over prime fields, \
             face-ring quotients, and socle bound checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Profile one input and run every applicable bound check.
    Analyze {
        /// Corpus member name (e.g. torus_7) or path to a JSON input file.
        input: String,
        /// Field characteristic, repeatable for one section per field
        /// [default: 32003].
        #[arg(long = "field", value_name = "P")]
        fields: Vec<u64>,
        /// Master seed for the parameter and linear-form draws
        /// [default: 24301].
        #[arg(long, default_value_t = bblab_core::DEFAULT_SEED)]
        seed: u64,
        /// Skip the face-ring quotient computation.
        #[arg(long)]
        no_algebra: bool,
        /// Write the report to this path instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Output format (only json).
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Build a named family and write it as a complex or poset file.
    Construct {
        /// Family: simplex D | cyclic D N | stacked D N | x-poset I D |
        /// corpus NAME (or a bare corpus member name).
        family: String,
        /// Integer parameters of the family.
        params: Vec<String>,
        /// Write the file to this path instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Output format (only json).
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run a check suite: schenzel | main2 | newbounds | klee | kuhnel |
    /// g2 | posets | all.
    Verify {
        suite: String,
        /// Master seed for the suites' algebra computations
        /// [default: 24301].
        #[arg(long, default_value_t = bblab_core::DEFAULT_SEED)]
        seed: u64,
        /// Output format: text | json.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

/// A loaded analysis input.
pub enum Loaded {
    Complex(SimplicialComplex),
    Poset(SimplicialPoset),
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap reports usage problems on stderr with exit code 2 and
        // handles --help/--version with exit code 0.
        Err(e) => e.exit(),
    };
    match execute(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32, String> {
    match cli.cmd {
        Cmd::Analyze { input, fields, seed, no_algebra, out, format } => {
            expect_format(&format, &["json"])?;
            let fields = if fields.is_empty() { vec![DEFAULT_FIELD] } else { fields };
            let (source, name, loaded) = resolve_input(&input)?;
            let opts = analyze::AnalyzeOptions { fields, seed, algebra: !no_algebra };
            let report = analyze::analyze(&input, &source, name, &loaded, &opts)?;
            emit(out.as_deref(), formats::to_json_bytes(&report))?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Cmd::Construct { family, params, out, format } => {
            expect_format(&format, &["json"])?;
            let text = match construct::build_family(&family, &params)? {
                construct::Built::Complex(k, name) => {
                    formats::to_json_bytes(&formats::ComplexFile::from_complex(&k, Some(name)))
                }
                construct::Built::Poset(p, name) => {
                    formats::to_json_bytes(&formats::PosetFile::from_poset(&p, Some(name)))
                }
            };
            emit(out.as_deref(), text)?;
            Ok(0)
        }
        Cmd::Verify { suite, seed, format } => {
            expect_format(&format, &["text", "json"])?;
            let mut stdout = std::io::stdout().lock();
            verify::run_verify(&suite, seed, &format, &mut stdout)
        }
    }
}

fn expect_format(format: &str, allowed: &[&str]) -> Result<(), String> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(format!("unsupported format {format:?}; available: {}", allowed.join(", ")))
    }
}

fn emit(out: Option<&Path>, text: String) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Maps the `analyze` input argument to a loaded object. Precedence: an
/// existing file path; `$BBLAB_CORPUS_DIR/<input>.json` when that variable
/// is set (per-name override of the builtin corpus); the builtin corpus.
fn resolve_input(input: &str) -> Result<(String, Option<String>, Loaded), String> {
    let path = Path::new(input);
    if path.is_file() {
        let (name, loaded) = load_file(path)?;
        return Ok((format!("file {input}"), name, loaded));
    }
    if let Ok(dir) = std::env::var("BBLAB_CORPUS_DIR") {
        let candidate = Path::new(&dir).join(format!("{input}.json"));
        if candidate.is_file() {
            let (name, loaded) = load_file(&candidate)?;
            return Ok((format!("file {}", candidate.display()), name, loaded));
        }
    }
    if let Some(entry) = corpus_entry(input) {
        let k = entry.build().map_err(|e| e.to_string())?;
        return Ok(("builtin corpus".to_string(), Some(entry.name.to_string()), Loaded::Complex(k)));
    }
    Err(format!(
        "{input:?} is neither a readable file nor a corpus member; corpus: {}",
        corpus().iter().map(|e| e.name).collect::<Vec<_>>().join(", ")
    ))
}

fn load_file(path: &Path) -> Result<(Option<String>, Loaded), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    match formats::parse_input(&text)? {
        formats::InputFile::Complex(file) => {
            let k = file.to_complex()?;
            Ok((file.name, Loaded::Complex(k)))
        }
        formats::InputFile::Poset(file) => {
            let p = file.to_poset()?;
            Ok((file.name, Loaded::Poset(p)))
        }
    }
}

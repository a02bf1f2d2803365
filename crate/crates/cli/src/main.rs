use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use selfdual_core::harness::verify::Realization;
use selfdual_core::harness::{self, Corpus, RaMode, SearchConfig, Status, VerifyOptions};
use selfdual_core::{GroupKind, Listing, RingId};

#[derive(Parser)]
#[command(name = "selfdual", version, about = "Build and verify self-dual codes from group rings")]
struct Cli {
    /// Corpus file to use instead of the built-in one.
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild corpus rows and compare them with their published parameters.
    Verify {
        /// Comma-separated row ids; their ancestors are verified too.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<String>,
        #[arg(long)]
        workers: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Enumerate every codeword instead of counting weights up to 14.
        #[arg(long)]
        full: bool,
    },
    /// Random search for self-dual constructions.
    Search {
        #[arg(long)]
        ring: RingId,
        #[arg(long)]
        group: GroupKind,
        #[arg(long, default_value = "natural")]
        listing: Listing,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        trials: u64,
        #[arg(long = "min-dist")]
        min_dist: usize,
        /// Fix v2 = 0.
        #[arg(long)]
        v2_zero: bool,
        /// Fix A = 0.
        #[arg(long)]
        ra_zero: bool,
    },
    /// Print the reconstructed generator of one row.
    ShowRow { id: String },
    /// Check corpus expectations for internal consistency.
    Lint,
}

fn load(path: Option<&PathBuf>) -> Result<Corpus> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(text.parse()?)
        }
        None => Ok(Corpus::builtin()),
    }
}

fn hex_row(word: u128, length: usize) -> String {
    (0..length.div_ceil(4))
        .map(|c| {
            let nibble = (0..4)
                .filter(|&b| 4 * c + b < length && word >> (4 * c + b) & 1 == 1)
                .fold(0u32, |acc, b| acc | 8 >> b);
            char::from_digit(nibble, 16).unwrap().to_ascii_uppercase()
        })
        .collect()
}

fn print_realization(id: &str, r: &Realization) {
    let m = &r.measured;
    println!("{id}: [{}, {}, {}] self-dual={}", m.n, m.k, m.d.map_or("?".into(), |d| d.to_string()), m.self_dual);
    if let Some((g, l)) = &r.origin {
        println!("origin {g} listing {l}");
    }
    if let Some(l) = r.layout {
        println!("gray layout {l}");
    }
    match &r.ring_code {
        Some(code) => {
            println!("generator over {} ({} x {}):", code.ring, code.rows.len(), code.length);
            for row in &code.rows {
                println!("{}", RingId::format_vector(row));
            }
        }
        None => {
            println!("binary generator ({} x {}), 4 coordinates per hex digit:", r.binary.dimension(), r.binary.length());
            for &row in r.binary.rows() {
                println!("{}", hex_row(row, r.binary.length()));
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let corpus = load(cli.corpus.as_ref())?;
    match cli.command {
        Command::Verify { rows, workers, report, full } => {
            let corpus = if rows.is_empty() { corpus } else { corpus.restrict(&rows)? };
            let result = harness::verify_all(&corpus, &VerifyOptions { full, workers })?;
            for row in corpus.rows() {
                let r = &result.rows[&row.id];
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Downgraded => "DOWNGRADED",
                    Status::Fail => "FAIL",
                };
                let params = match (r.form, r.beta, r.gamma) {
                    (Some(f), Some(b), Some(g)) => format!("{f} beta={b} gamma={g}"),
                    (Some(f), Some(b), None) => format!("{f} beta={b}"),
                    _ => "-".into(),
                };
                let d = r.d.map_or("?".into(), |d| d.to_string());
                println!("{:<3} {:<10} [{}, {}, {d}] {params:<28} {}ms", row.id, status, r.n, r.k, r.millis);
                if let Some(note) = &r.discrepancy {
                    println!("    {note}");
                }
            }
            let s = &result.summary;
            println!("{} rows: {} passed, {} downgraded, {} failed", s.total, s.passed, s.downgraded, s.failed);
            println!("new codes reproduced: {} of {}", s.inventory.reproduced_count, s.inventory.expected_count);
            for (family, betas) in &s.inventory.reproduced {
                println!("  {family}: {betas:?}");
            }
            if let Some(path) = report {
                std::fs::write(&path, result.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(if s.failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Search { ring, group, listing, seed, trials, min_dist, v2_zero, ra_zero } => {
            let config = SearchConfig {
                listing,
                v2_zero,
                ra: if ra_zero { RaMode::Zero } else { RaMode::Uniform },
                ..SearchConfig::new(ring, group, seed, trials, min_dist)
            };
            let result = harness::search(&config)?;
            println!("{}", serde_json::to_string_pretty(&result)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::ShowRow { id } => {
            let sub = corpus.restrict(&[&id])?;
            let (_, realizations) = harness::verify_corpus(&sub, &VerifyOptions::default())?;
            match realizations.get(&id).and_then(|r| r.first()) {
                Some(r) => print_realization(&id, r),
                None => bail!("row {id} produced no code"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lint => {
            let issues = harness::lint(&corpus);
            for issue in &issues {
                println!("{issue}");
            }
            println!("{} rows, {} issues", corpus.rows().len(), issues.len());
            Ok(if issues.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

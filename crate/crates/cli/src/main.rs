//! `gagc` — build, encode, decode, simulate and compare generalized
//! algebraic geometry codes over rational function fields.
//!
//! Exit codes: 0 on success, 1 when `decode` hits an uncorrectable word,
//! 2 on usage or spec errors.

mod sim;
mod symbols;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use gagc::bch::best_bch_curve;
use gagc::bounds::{correctable_errors, designed_distance, min_cover, DegreeProfile};
use gagc::code::GagCode;
use gagc::codespec::CodeSpec;
use gagc::decoder::{decode_with_radius, DecodeOutcome};

#[derive(Parser)]
#[command(name = "gagc", version, about = "Generalized algebraic geometry codes toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// Path to a code-spec file.
    #[arg(long)]
    spec: PathBuf,
    /// Override the divisor degree g from the spec file.
    #[arg(long)]
    g: Option<usize>,
}

impl SpecArgs {
    fn load(&self) -> Result<CodeSpec> {
        let text = fs::read_to_string(&self.spec)
            .with_context(|| format!("cannot read {}", self.spec.display()))?;
        let mut spec = CodeSpec::parse(&text)
            .with_context(|| format!("invalid spec {}", self.spec.display()))?;
        if let Some(g) = self.g {
            spec.g = g;
        }
        Ok(spec)
    }

    fn build(&self) -> Result<GagCode> {
        let spec = self.load()?;
        let code = spec.build()?;
        Ok(code)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the code summary: n, k, m, designed distance, correctable count.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        /// Write the spec back with the place shorthand expanded.
        #[arg(long)]
        emit_spec: Option<PathBuf>,
    },
    /// Encode a message file (k symbols, one per line) into a codeword.
    Encode {
        #[command(flatten)]
        spec: SpecArgs,
        /// Message file; canonical element encoding, one symbol per line.
        #[arg(long)]
        message: PathBuf,
        /// Output path for the codeword (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decode a received word file (n symbols, one per line).
    Decode {
        #[command(flatten)]
        spec: SpecArgs,
        /// Received word file.
        #[arg(long)]
        input: PathBuf,
        /// Output path for the recovered message (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Decoding radius for the lifted code (defaults to half distance).
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Seeded error-injection simulation.
    Simulate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of symbol errors injected per trial.
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Decoding radius override for the lifted code.
        #[arg(long)]
        radius: Option<usize>,
        /// Write per-trial results as CSV.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the bound formulas on a degree profile.
    Bounds {
        /// Degree profile, e.g. "1:7,2:28,3:168".
        #[arg(long)]
        profile: String,
        /// Divisor degree for the designed distance.
        #[arg(long)]
        g: Option<usize>,
        /// Radius of the lifted-code decoder for the correctable count.
        #[arg(long)]
        t: Option<usize>,
        /// Target weight for the cover minimization.
        #[arg(long)]
        w: Option<usize>,
    },
    /// Emit the best-BCH-bound staircase as CSV.
    BchCurve {
        /// Symbol field size q.
        #[arg(long)]
        q: u64,
        /// Parent code length (must be coprime to q).
        #[arg(long)]
        length: u64,
        /// Shortened length (check-symbol budget).
        #[arg(long)]
        shortened: u64,
        /// Only allow runs starting at exponent 1.
        #[arg(long)]
        narrow_sense: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare correctable errors against shortened BCH codes, as CSV.
    Compare {
        #[command(flatten)]
        spec: SpecArgs,
        /// Parent BCH length; defaults to the smallest q^l - 1 >= n.
        #[arg(long)]
        bch_length: Option<u64>,
        /// Only narrow-sense BCH codes on the baseline side.
        #[arg(long)]
        narrow_sense: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn write_out(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Build { spec, emit_spec } => {
            let parsed = spec.load()?;
            let code = parsed.build()?;
            if let Some(path) = emit_spec {
                let expanded = parsed.expand()?;
                fs::write(&path, expanded.to_text())
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let t = code.decoding_radius();
            println!(
                "label={} q={} p={} e={} g={} profile={}",
                parsed.label.as_deref().unwrap_or("-"),
                code.tower().q(),
                code.tower().p(),
                code.tower().e(),
                code.g(),
                code.profile(),
            );
            println!(
                "n={} k={} m={} d*={} t={} t_C={}",
                code.n(),
                code.k(),
                code.m(),
                code.designed_distance(),
                t,
                code.correctable_errors(),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Encode {
            spec,
            message,
            output,
        } => {
            let code = spec.build()?;
            let text = fs::read_to_string(&message)
                .with_context(|| format!("cannot read {}", message.display()))?;
            let msg = symbols::parse_message(&code, &text)?;
            let cw = code.encode(&msg)?;
            write_out(output.as_deref(), &symbols::render(code.tower(), cw.as_slice()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode {
            spec,
            input,
            output,
            radius,
        } => {
            let code = spec.build()?;
            let text = fs::read_to_string(&input)
                .with_context(|| format!("cannot read {}", input.display()))?;
            let word = symbols::parse_word(&code, &text)?;
            let radius = effective_radius(&code, radius)?;
            match decode_with_radius(&code, &word, radius) {
                DecodeOutcome::Success {
                    message,
                    error_count,
                    ..
                } => {
                    write_out(output.as_deref(), &symbols::render(code.tower(), message.as_slice()))?;
                    eprintln!("decoded: corrected {error_count} symbol errors");
                    Ok(ExitCode::SUCCESS)
                }
                DecodeOutcome::Failure(reason) => {
                    eprintln!("decode failed: {reason}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Simulate {
            spec,
            weight,
            trials,
            seed,
            radius,
            output,
        } => {
            let parsed = spec.load()?;
            let code = parsed.build()?;
            if weight > code.n() {
                bail!("weight {} exceeds the block length {}", weight, code.n());
            }
            let radius = effective_radius(&code, radius)?;
            let report = sim::run(
                &code,
                &sim::Config {
                    label: parsed.label.clone().unwrap_or_else(|| "-".into()),
                    weight,
                    trials,
                    seed,
                    radius,
                },
            );
            print!("{}", report.summary());
            if let Some(path) = output {
                fs::write(&path, report.csv())
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { profile, g, t, w } => {
            let profile = DegreeProfile::parse(&profile)?;
            let n = profile.total_degree();
            println!("profile={} n={} mu={}", profile, n, profile.max_degree());
            if let Some(g) = g {
                println!("d*(g={}) = {}", g, designed_distance(&profile, n, g)?);
            }
            if let Some(t) = t {
                println!("t_C(t={}) = {}", t, correctable_errors(&profile, t)?);
            }
            if let Some(w) = w {
                let b = min_cover(&profile, w)?;
                println!("min_cover(w={}) = {} a={}", w, b.ell, b.a);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::BchCurve {
            q,
            length,
            shortened,
            narrow_sense,
            output,
        } => {
            let curve = best_bch_curve(q, length, shortened, narrow_sense)?;
            let mut csv = String::from("check_symbols,designed_distance,correctable\n");
            for pt in curve {
                csv.push_str(&format!(
                    "{},{},{}\n",
                    pt.check_symbols, pt.designed_distance, pt.correctable
                ));
            }
            write_out(output.as_deref(), &csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            spec,
            bch_length,
            narrow_sense,
            output,
        } => {
            let parsed = spec.load()?;
            let code = parsed.build()?;
            let profile = code.profile();
            let n = code.n();
            let q = code.tower().q();
            let parent = match bch_length {
                Some(len) => len,
                None => default_bch_length(q, n as u64)?,
            };
            let curve = best_bch_curve(q, parent, n as u64, narrow_sense)?;
            let mut csv = String::from("check_symbols,gag_correctable,bch_correctable\n");
            for r in 0..n {
                // r check symbols means dimension k = n - r, i.e. g = n-r-1.
                let t_ord = r / 2;
                let gag = correctable_errors(profile, t_ord)?;
                let bch = curve[r].correctable;
                csv.push_str(&format!("{r},{gag},{bch}\n"));
            }
            write_out(output.as_deref(), &csv)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn effective_radius(code: &GagCode, radius: Option<usize>) -> Result<usize> {
    let max = code.decoding_radius();
    match radius {
        Some(r) if r > max => {
            bail!("radius {r} exceeds half the lifted minimum distance ({max})")
        }
        Some(r) => Ok(r),
        None => Ok(max),
    }
}

/// Smallest primitive BCH parent length q^l - 1 covering the code length.
fn default_bch_length(q: u64, n: u64) -> Result<u64> {
    let mut len = q - 1;
    for _ in 0..24 {
        if len >= n {
            return Ok(len);
        }
        len = (len + 1) * q - 1;
    }
    bail!("no primitive BCH length q^l - 1 >= {n} for q = {q}")
}

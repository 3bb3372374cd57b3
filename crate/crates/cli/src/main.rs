use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pentile::calc;
use pentile::report::to_json;
use pentile::svg::{ball_scene, render_svg, trace_scene};
use pentile::{CliError, ParityFilter, Real, SampleConfig};
use pentile_core::bounds::LerfInput;
use pentile_core::coxgroup::enumerate_ball;

#[derive(Parser)]
#[command(name = "pentile", version, about = "Right-angled pentagon tilings: hulls of closed geodesics, covers and index bounds")]
struct Cli {
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pentagon constants and bound coefficients.
    Constants,
    /// Conjugacy class and translation length of a word.
    Classify { word: String },
    /// Full pipeline for one axial word.
    Trace {
        word: String,
        /// Also write a figure of the lifted hull.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Seeded batch run of the pipeline.
    Verify(VerifyArgs),
    /// Closed-form index bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Figure of the tiles of a word ball, optionally with a traced word.
    Render {
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long)]
        word: Option<String>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    max_word_len: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    min_ell: f64,
    #[arg(long, default_value_t = 8.0, allow_negative_numbers = true)]
    max_ell: f64,
    #[arg(long, default_value = "both")]
    parity: String,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Tiles in the hull of a closed geodesic of length ell.
    Lift {
        #[arg(long, allow_negative_numbers = true)]
        ell: f64,
        #[arg(long)]
        tessline: bool,
    },
    /// Index of a subgroup separating an element of length ell.
    Rf {
        #[arg(long, allow_negative_numbers = true)]
        ell: f64,
        #[arg(long)]
        tessline: bool,
    },
    /// Index for separating an element from a finitely generated subgroup.
    Lerf {
        /// Rank of the subgroup.
        #[arg(long)]
        n: u32,
        /// Boundary lengths of the convex core, comma separated.
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        ells: Vec<f64>,
        #[arg(long, conflicts_with = "excursion")]
        in_core: bool,
        /// Length of the part of the element outside the core.
        #[arg(long, allow_negative_numbers = true)]
        excursion: Option<f64>,
        /// Per-boundary tessellation-line flags, comma separated.
        #[arg(long, value_delimiter = ',')]
        tessline: Vec<bool>,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Constants => emit(&cli.out, &to_json(&calc::constants_report())),
        Command::Classify { word } => emit(&cli.out, &to_json(&calc::classify_report(&word)?)),
        Command::Trace { word, svg } => {
            let (report, analysis) = pentile::trace(&word)?;
            if let Some(path) = svg {
                fs::write(path, render_svg(&trace_scene(&analysis)))?;
            }
            emit(&cli.out, &report.to_json())?;
            match report.aggregate.failures {
                0 => Ok(()),
                n => Err(CliError::Failures(n)),
            }
        }
        Command::Verify(v) => {
            let cfg = SampleConfig {
                seed: v.seed,
                count: v.count,
                max_word_len: v.max_word_len,
                min_ell: Real(v.min_ell),
                max_ell: Real(v.max_ell),
                parity: v.parity.parse::<ParityFilter>()?,
            };
            let report = pentile::verify(&cfg)?;
            emit(&cli.out, &report.to_json())?;
            match report.aggregate.failures {
                0 => Ok(()),
                n => Err(CliError::Failures(n)),
            }
        }
        Command::Bounds(b) => {
            let report = match b {
                BoundsCommand::Lift { ell, tessline } => calc::lift_report(ell, tessline)?,
                BoundsCommand::Rf { ell, tessline } => calc::rf_report(ell, tessline)?,
                BoundsCommand::Lerf {
                    n,
                    ells,
                    in_core,
                    excursion,
                    tessline,
                } => {
                    let input = LerfInput {
                        rank: n,
                        boundary_lengths: ells,
                        excursion,
                        tessline,
                    };
                    calc::lerf_report(&input, in_core || input.excursion.is_none())?
                }
            };
            emit(&cli.out, &to_json(&report))
        }
        Command::Render { radius, word } => {
            let words = enumerate_ball(radius)?;
            let mut scene = ball_scene(&words);
            if let Some(w) = word {
                let (_, analysis) = pentile::trace(&w)?;
                let traced = trace_scene(&analysis);
                scene.tiles.extend(traced.tiles);
                scene.lines.extend(traced.lines);
                scene.marks.extend(traced.marks);
            }
            emit(&cli.out, &render_svg(&scene))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::NotAxial(tag) = &e {
                println!("{}", tag.name());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

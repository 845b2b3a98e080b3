use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use ratcurve::error::{CurveError, Result};
use ratcurve::exactalg::parse_rational;
use ratcurve::fibers::P2Point;
use ratcurve::input::read_curve;
use ratcurve::report::{self, Options};

#[derive(Parser)]
#[command(name = "ratcurve", version, about = "Invariants of rational plane curves from a parametrization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Human-readable output.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct CurveArg {
    /// Curve file: {"f0": [...], "f1": [...], "f2": [...]}
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline with the cross-check ledger.
    Analyze {
        #[command(flatten)]
        curve: CurveArg,
        /// Adds tilde-kernel checks at q = 2d-2 and q = 2d.
        #[arg(long)]
        deep: bool,
        /// Last q of the reported a(q) sequence.
        #[arg(long)]
        max_q: Option<usize>,
        #[arg(long)]
        skip_dual: bool,
    },
    /// Implicit equation F.
    Implicitize(CurveArg),
    /// Dual parametrization, dual equation and discriminant factorization.
    Dual(CurveArg),
    /// Global Tjurina number and delta invariant.
    Tjurina(CurveArg),
    /// Free / nearly free verdict with mdr and the a(q) sequence.
    Freeness {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        max_q: Option<usize>,
    },
    /// Pull-back polynomial of a point.
    Pullback {
        #[command(flatten)]
        curve: CurveArg,
        /// Homogeneous coordinates a,b,c (integers or p/q).
        #[arg(long)]
        point: String,
    },
    /// Degrees and generators of a mu-basis.
    Mubasis(CurveArg),
    /// Cuspidality verdict with singular points and witness.
    Cuspidal(CurveArg),
    /// Cokernel dimensions (c0, c1, c2) at form degree q and a(q).
    Forms {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        q: usize,
    },
}

fn parse_point(text: &str) -> Result<P2Point> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CurveError::InvalidInput(format!("point {text:?} needs three coordinates")));
    }
    let coords = parts
        .iter()
        .map(|p| parse_rational(p).map_err(|e| CurveError::InvalidInput(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let coords: [_; 3] = coords.try_into().expect("three coordinates");
    if coords.iter().all(num_traits::Zero::is_zero) {
        return Err(CurveError::InvalidInput("(0:0:0) is not a point".into()));
    }
    Ok(P2Point::new(&coords))
}

fn emit(v: &Value, text: bool) {
    if text {
        print!("{}", report::render_text(v));
    } else {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let value = match &cli.command {
        Command::Analyze {
            curve,
            deep,
            max_q,
            skip_dual,
        } => {
            let phi = read_curve(&curve.file)?;
            let opts = Options {
                deep: *deep,
                max_q: *max_q,
                skip_dual: *skip_dual,
            };
            let r = report::analyze(&phi, &opts)?;
            if cli.text {
                print!("{}", r.to_text());
            } else {
                println!("{}", r.to_json());
            }
            if !r.passed() {
                for c in r.failures() {
                    eprintln!("cross-check failed: {} ({} vs {})", c.name, c.lhs, c.rhs);
                }
                return Ok(ExitCode::from(4));
            }
            return Ok(ExitCode::SUCCESS);
        }
        Command::Implicitize(c) => report::implicitize_value(&read_curve(&c.file)?)?,
        Command::Dual(c) => report::dual_value(&read_curve(&c.file)?)?,
        Command::Tjurina(c) => report::tjurina_value(&read_curve(&c.file)?)?,
        Command::Freeness { curve, max_q } => report::freeness_value(&read_curve(&curve.file)?, *max_q)?,
        Command::Pullback { curve, point } => {
            let phi = read_curve(&curve.file)?;
            report::pullback_value(&phi, &parse_point(point)?)?
        }
        Command::Mubasis(c) => report::mubasis_value(&read_curve(&c.file)?)?,
        Command::Cuspidal(c) => report::cuspidal_value(&read_curve(&c.file)?)?,
        Command::Forms { curve, q } => report::forms_value(&read_curve(&curve.file)?, *q)?,
    };
    emit(&value, cli.text);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

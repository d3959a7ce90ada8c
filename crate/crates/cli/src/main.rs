use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tamagawa_cli::commands::{self, Outcome};
use tamagawa_cli::CliError;

#[derive(Parser)]
#[command(
    name = "tamagawa",
    version,
    about = "Tamagawa divisibility checks for elliptic curves with a point of order 5, 7 or 11"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symbolic identities for the order-11 family over Q(r, s).
    Check11Symbolic {
        /// Replace the discriminant by a perturbed polynomial; the run must fail.
        #[arg(long)]
        perturb: bool,
    },
    /// Realize the four valuation cases of the order-11 family over truncated Q_p.
    Check11Padic {
        #[arg(long, value_delimiter = ',', default_value = "5,7,13,17,19,23")]
        primes: Vec<u64>,
        #[arg(long = "pole-orders", value_delimiter = ',', default_value = "1,2,3")]
        pole_orders: Vec<u32>,
    },
    /// Random members of the F_p(t) families: divisibility of the Tamagawa product.
    CheckFf {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check one parameter given as an element literal instead of random ones.
        #[arg(long)]
        f: Option<String>,
        /// Write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Local reduction data of a curve at one place.
    Tamagawa {
        /// Curve as JSON: {"field": {...}, "a": [a1, a2, a3, a4, a6]}.
        #[arg(long)]
        curve: String,
        #[arg(long)]
        place: String,
    },
    /// Order of a torsion point.
    TorsionOrder {
        #[arg(long, conflicts_with_all = ["curve", "point"])]
        fixture: Option<String>,
        #[arg(long, requires = "point")]
        curve: Option<String>,
        #[arg(long, requires = "curve")]
        point: Option<String>,
    },
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check11Symbolic { perturb } => Ok(commands::check11_symbolic(perturb)),
        Command::Check11Padic {
            primes,
            pole_orders,
        } => commands::check11_padic(&primes, &pole_orders),
        Command::CheckFf {
            p,
            count,
            seed,
            f,
            report,
        } => {
            let out = commands::check_ff(p, count, seed, f.as_deref())?;
            if let Some(path) = report {
                let mut text = serde_json::to_string_pretty(&out.report)?;
                text.push('\n');
                std::fs::write(path, text)?;
            }
            Ok(Outcome {
                stdout: out.tsv,
                pass: out.pass,
            })
        }
        Command::Tamagawa { curve, place } => commands::tamagawa_at(&curve, &place),
        Command::TorsionOrder {
            fixture,
            curve,
            point,
        } => match (fixture, curve, point) {
            (Some(label), _, _) => commands::torsion_order_fixture(&label),
            (None, Some(curve), Some(point)) => commands::torsion_order_curve(&curve, &point),
            _ => Err(CliError::Usage(
                "give --fixture or --curve with --point".into(),
            )),
        },
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

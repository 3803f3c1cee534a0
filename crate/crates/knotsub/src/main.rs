//! `knotsub`: classify one-parameter subgroups of matrix Lie groups.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use knotsub::cli::{
    cmd_canonicalize, cmd_classify, cmd_oracle, cmd_period, cmd_sample, ClassifyFlags,
};
use knotsub::error::Result;
use knotsub::io::{ErrorReport, MatrixDocument};

#[derive(Parser)]
#[command(
    name = "knotsub",
    about = "Classify one-parameter subgroups of matrix Lie groups",
    long_about = "Reads one JSON matrix document per line and emits one structured \
                  report per line. Complex entries are bare reals or [re, im] pairs. \
                  KNOTSUB_SEED pins the seed of randomized self-checks."
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Algebra family tag (su, so, sl2R, sl3R, slnR, heisenberg); documents
    /// carrying their own family field win over this flag
    #[arg(long)]
    family: Option<String>,
    /// Input file with one JSON document per line; "-" reads stdin
    #[arg(long)]
    input: String,
    /// Write reports here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verdict, period, frequencies, and torus-knot label
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        /// Cross-check the verdict with the numerical period scan
        #[arg(long)]
        oracle: bool,
        /// Largest denominator tried for frequency ratios
        #[arg(long, default_value_t = knotsub::classify::DEFAULT_QMAX)]
        qmax: i64,
        /// Residual tolerance for frequency-ratio approximation
        #[arg(long, default_value_t = knotsub::classify::DEFAULT_TOL)]
        tol: f64,
        /// Scan horizon for --oracle (default: 2.5 analytic periods)
        #[arg(long)]
        tmax: Option<f64>,
        /// Scan grid size for --oracle (default: resolution-based)
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Canonical generator, conjugating matrix, and residual
    Canonicalize {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Analytic minimal period
    Period {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sample exp(tX) over one period (plot-ready, with torus embedding)
    Sample {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of uniform samples
        #[arg(long, default_value_t = 128)]
        samples: usize,
    },
    /// Brute-force numerical period scan
    Oracle {
        #[command(flatten)]
        common: CommonArgs,
        /// Scan horizon
        #[arg(long, default_value_t = 100.0)]
        tmax: f64,
        /// Scan grid size (default: resolution-based)
        #[arg(long)]
        steps: Option<usize>,
        /// Identity-distance threshold for accepting a period
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

fn read_lines(input: &str) -> io::Result<Vec<String>> {
    let text = if input == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(input)?
    };
    Ok(text
        .lines()
        .map(str::to_string)
        .filter(|l| !l.trim().is_empty())
        .collect())
}

fn process_line(line: &str, family: Option<&str>, command: &Command) -> Result<Vec<String>> {
    let doc = MatrixDocument::parse(line)?;
    let elem = doc.to_element(family)?;
    let reports: Vec<String> = match command {
        Command::Classify {
            oracle,
            qmax,
            tol,
            tmax,
            steps,
            ..
        } => {
            let flags = ClassifyFlags {
                oracle: *oracle,
                qmax: *qmax,
                tol: *tol,
                tmax: *tmax,
                steps: *steps,
            };
            vec![serde_json::to_string(&cmd_classify(&elem, &flags)?).expect("serializable")]
        }
        Command::Canonicalize { .. } => {
            vec![serde_json::to_string(&cmd_canonicalize(&elem)?).expect("serializable")]
        }
        Command::Period { .. } => {
            vec![serde_json::to_string(&cmd_period(&elem)?).expect("serializable")]
        }
        Command::Sample { samples, .. } => cmd_sample(&elem, *samples)?
            .iter()
            .map(|s| serde_json::to_string(s).expect("serializable"))
            .collect(),
        Command::Oracle {
            tmax, steps, tol, ..
        } => {
            vec![
                serde_json::to_string(&cmd_oracle(&elem, *tmax, *steps, *tol)?)
                    .expect("serializable"),
            ]
        }
    };
    Ok(reports)
}

fn main() {
    let args = Args::parse();
    let common = match &args.command {
        Command::Classify { common, .. }
        | Command::Canonicalize { common }
        | Command::Period { common }
        | Command::Sample { common, .. }
        | Command::Oracle { common, .. } => common,
    };

    let lines = match read_lines(&common.input) {
        Ok(lines) => lines,
        Err(e) => {
            eprintln!("knotsub: cannot read {}: {e}", common.input);
            std::process::exit(2);
        }
    };

    let mut out: Box<dyn Write> = match &common.output {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(io::BufWriter::new(f)),
            Err(e) => {
                eprintln!("knotsub: cannot create {}: {e}", path.display());
                std::process::exit(2);
            }
        },
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };

    let mut failed = false;
    for line in &lines {
        match process_line(line, common.family.as_deref(), &args.command) {
            Ok(reports) => {
                for r in reports {
                    writeln!(out, "{r}").expect("write report");
                }
            }
            Err(err) => {
                failed = true;
                let record = serde_json::to_string(&ErrorReport::new(&err)).expect("serializable");
                writeln!(out, "{record}").expect("write report");
            }
        }
    }
    out.flush().expect("flush reports");
    if failed {
        std::process::exit(1);
    }
}

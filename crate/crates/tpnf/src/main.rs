//! Command-line interface: construct, verify, solve and classify over
//! exact rationals, speaking JSON on stdout and a machine-parsable error
//! object on stderr.
//!
//! Exit codes: 0 success, 1 a requested check failed, 2 input error.

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use tpnf::classify::{are_isomorphic, canonical_form, classification_table, shift_reduce};
use tpnf::doc::{
    parse_alpha_csv, AlgebraDocument, CanonicalDoc, ChecksDoc, ErrorDocument, IsomorphismDocument,
    ReportDocument, SolutionDoc, TableDocument, TranscriptDoc,
};
use tpnf::error::Error;
use tpnf::identities::{check_all, is_poisson, is_transposed_poisson};
use tpnf::nullfiliform::build_mu0;

use tpnf::tensor::{AlgebraPair, BilinearMap};
use tpnf::tp::{build_tp_bracket, solve_bracket_space, SolveMode};

#[derive(Parser)]
#[command(
    name = "tpnf",
    version,
    about = "Poisson and transposed Poisson brackets on null-filiform algebras, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the null-filiform product algebra of the given dimension
    Mu0 {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the algebra together with the family bracket TP(alpha2,...,alphan)
    Tp {
        #[arg(long)]
        dim: usize,
        /// Comma-separated rational values for alpha_2..alpha_n, e.g. "1,0,-2/3"
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the identities of an algebra document (stdin unless --input)
    Verify {
        /// JSON algebra document; "-" or absent reads standard input
        #[arg(long)]
        input: Option<PathBuf>,
        /// Exit nonzero unless the pair is a (transposed) Poisson algebra
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve for all compatible antisymmetric brackets on the algebra
    Solve {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Canonical form and reduction transcript of a parameter vector
    Classify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether two parameter vectors give isomorphic algebras
    Isomorphic {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        alpha_a: String,
        #[arg(long)]
        alpha_b: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the classification families for a dimension
    Table {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Expectation {
    Poisson,
    Transposed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Transposed,
    Poisson,
}

fn read_input(input: &Option<PathBuf>) -> Result<String, Error> {
    match input {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| Error::Document {
                location: path.display().to_string(),
                message: e.to_string(),
            })
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Document {
                    location: "stdin".to_string(),
                    message: e.to_string(),
                })?;
            Ok(text)
        }
    }
}

struct Outcome {
    json: String,
    check_passed: bool,
    output: Option<PathBuf>,
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Mu0 { dim, output } => {
            let dot = build_mu0(dim)?;
            Ok(Outcome {
                json: AlgebraDocument::from_parts(&dot, None, None).emit(),
                check_passed: true,
                output,
            })
        }
        Command::Tp { dim, alpha, output } => {
            let params = parse_alpha_csv(dim, &alpha, "--alpha")?;
            let dot = build_mu0(dim)?;
            let bracket = build_tp_bracket(&params);
            Ok(Outcome {
                json: AlgebraDocument::from_parts(&dot, Some(&bracket), None).emit(),
                check_passed: true,
                output,
            })
        }
        Command::Verify {
            input,
            expect,
            output,
        } => {
            let text = read_input(&input)?;
            let doc = AlgebraDocument::parse(&text)?;
            let (dot, bracket) = doc.to_maps()?;
            let dim = dot.dim();
            let bracket = match bracket {
                Some(b) => b,
                None => BilinearMap::zero(dim)?,
            };
            let pair = AlgebraPair::new(dot, bracket)?;
            let report = check_all(&pair);
            let passed = match expect {
                Some(Expectation::Poisson) => is_poisson(&pair),
                Some(Expectation::Transposed) => is_transposed_poisson(&pair),
                None => true,
            };
            let out = ReportDocument {
                checks: Some(ChecksDoc::from(&report)),
                ..ReportDocument::default()
            };
            Ok(Outcome {
                json: out.emit(),
                check_passed: passed,
                output,
            })
        }
        Command::Solve { dim, mode, output } => {
            let mode = match mode {
                ModeArg::Transposed => SolveMode::Transposed,
                ModeArg::Poisson => SolveMode::Poisson,
            };
            let sol = solve_bracket_space(dim, mode)?;
            let out = ReportDocument {
                solution: Some(SolutionDoc::from(&sol)),
                ..ReportDocument::default()
            };
            Ok(Outcome {
                json: out.emit(),
                check_passed: true,
                output,
            })
        }
        Command::Classify { dim, alpha, output } => {
            let params = parse_alpha_csv(dim, &alpha, "--alpha")?;
            let form = canonical_form(&params);
            let transcript = if params.is_zero() {
                None
            } else {
                Some(shift_reduce(&params)?.1)
            };
            let out = ReportDocument {
                canonical: Some(CanonicalDoc::from(&form)),
                transcript: transcript.as_ref().map(TranscriptDoc::from),
                ..ReportDocument::default()
            };
            Ok(Outcome {
                json: out.emit(),
                check_passed: true,
                output,
            })
        }
        Command::Isomorphic {
            dim,
            alpha_a,
            alpha_b,
            output,
        } => {
            let a = parse_alpha_csv(dim, &alpha_a, "--alpha-a")?;
            let b = parse_alpha_csv(dim, &alpha_b, "--alpha-b")?;
            let (iso, witness) = are_isomorphic(&a, &b)?;
            Ok(Outcome {
                json: IsomorphismDocument::new(iso, witness.as_ref()).emit(),
                check_passed: true,
                output,
            })
        }
        Command::Table { dim, output } => {
            let families = classification_table(dim)?;
            Ok(Outcome {
                json: TableDocument::new(dim, &families).emit(),
                check_passed: true,
                output,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{}", ErrorDocument::usage(err.to_string()).emit());
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            match &outcome.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, format!("{}\n", outcome.json)) {
                        let err = Error::Document {
                            location: path.display().to_string(),
                            message: e.to_string(),
                        };
                        eprintln!("{}", ErrorDocument::from_error(&err).emit());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{}", outcome.json),
            }
            if outcome.check_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("{}", ErrorDocument::from_error(&err).emit());
            ExitCode::from(2)
        }
    }
}

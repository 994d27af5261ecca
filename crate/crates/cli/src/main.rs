use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gftable::catalog;
use gftable::exact::format_rational;
use gftable::harness::{self, CheckConfig, Execution, HarnessError, EVAL_FUNCTIONS};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "gftable", version, about = "Generating-function identities, evaluated and cross-checked")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function, e.g. `eval zeta 2` or `eval besselj 0.5 2`.
    Eval {
        function: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<f64>,
    },
    /// Print the exact coefficients c_0..c_K of a catalog identity.
    Coeffs {
        id: String,
        /// Highest coefficient index K.
        #[arg(long = "n", default_value_t = 10)]
        n: usize,
    },
    /// Run one catalog or quadrature check and print its report.
    Check {
        id: String,
        /// Highest power of z in the partial sums.
        #[arg(long)]
        terms: Option<usize>,
        /// Absolute and relative tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run every check and write the suite report.
    Suite {
        /// `key = value` configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run the checks one after another.
        #[arg(long)]
        sequential: bool,
    },
    /// Dump the catalog: anchors, domains and leading coefficients.
    Table,
    /// List check ids and evaluable functions.
    List,
}

/// Sixteen significant digits with trailing zeros removed.
fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.15e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
    if (-5..16).contains(&exponent) {
        let value: f64 = format!("{mantissa}e{exponent}").parse().expect("round trip");
        let digits = (15 - exponent).max(0) as usize;
        let fixed = format!("{value:.digits$}");
        if fixed.contains('.') {
            fixed.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            fixed
        }
    } else {
        format!("{mantissa}e{exponent}")
    }
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn harness_failure(e: HarnessError) -> ExitCode {
    match e {
        HarnessError::UnknownCheck(_)
        | HarnessError::UnknownFunction(_)
        | HarnessError::BadParameters(_)
        | HarnessError::Config(_)
        | HarnessError::Catalog(catalog::CatalogError::UnknownIdentity(_)) => usage(e),
        other => {
            eprintln!("error: {other}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Eval { function, args } => match harness::evaluate(&function, &args) {
            Ok(v) => {
                println!("{}", format_real(v));
                ExitCode::SUCCESS
            }
            Err(e) => harness_failure(e),
        },
        Command::Coeffs { id, n } => match catalog::entry(&id) {
            Ok(entry) => {
                let coeffs: Vec<String> = entry.coefficients(n).iter().map(format_rational).collect();
                println!("{}", coeffs.join(" "));
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Command::Check { id, terms, tol } => {
            let mut config = CheckConfig::default();
            if let Some(terms) = terms {
                config.terms = terms;
            }
            if let Some(tol) = tol {
                config.abs_tol = tol;
                config.rel_tol = tol;
            }
            if let Err(e) = config.validate() {
                return usage(e);
            }
            match harness::run_check(&id, &config) {
                Ok(report) => {
                    println!("{}", report.to_json());
                    verdict(report.passed())
                }
                Err(e) => harness_failure(e),
            }
        }
        Command::Suite { config, out, sequential } => {
            let config = match config {
                None => CheckConfig::default(),
                Some(path) => match fs::read_to_string(&path) {
                    Err(e) => return usage(format!("{}: {e}", path.display())),
                    Ok(text) => match CheckConfig::parse(&text) {
                        Ok(c) => c,
                        Err(e) => return usage(format!("{}: {e}", path.display())),
                    },
                },
            };
            let execution = if sequential { Execution::Sequential } else { Execution::default() };
            let report = harness::run_suite_with(&config, execution).stamped();
            let json = report.to_json();
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, json + "\n") {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(EXIT_FAIL);
                    }
                    eprintln!(
                        "{} checks, {} passed, {} failed; report written to {}",
                        report.totals.checks,
                        report.totals.passed,
                        report.totals.failed,
                        path.display()
                    );
                }
                None => println!("{json}"),
            }
            verdict(report.all_passed())
        }
        Command::Table => {
            print!("{}", catalog::export_table());
            ExitCode::SUCCESS
        }
        Command::List => {
            println!("checks:");
            for id in harness::check_ids() {
                println!("  {id}");
            }
            println!("functions:");
            for (name, synopsis) in EVAL_FUNCTIONS {
                println!("  {name} {synopsis}");
            }
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_digit_formatting() {
        assert_eq!(format_real(std::f64::consts::PI.powi(2) / 6.0), "1.644934066848226");
        assert_eq!(format_real(24.0), "24");
        assert_eq!(format_real(-0.5), "-0.5");
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(1e-7), "1e-7");
        assert_eq!(format_real(4.156968929685324e-6), "4.156968929685324e-6");
        assert_eq!(format_real(1.5e-5), "0.000015");
        assert_eq!(format_real(6.02214076e23), "6.02214076e23");
        assert_eq!(format_real(0.1 + 0.2), "0.3");
    }
}

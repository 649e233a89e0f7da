//! Command-line front end for the verification engine: argument parsing,
//! suite dispatch, and deterministic report rendering.
//!
//! Exit codes: 0 when everything requested passed, 1 when a check failed
//! or the engine reported a runtime error, 2 for usage errors.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cweyl::report::{conventions_text, float_repr, Report, SuiteReport};
use cweyl::scalar::Complex64;
use cweyl::{chevalley, matoracle, qdilog, suites};

#[derive(Parser)]
#[command(
    name = "cweyl",
    version,
    about = "Exact and numerical verification for the modular double of SL_q(2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every suite at its default degree, controls included.
    VerifyAll(ReportArgs),
    /// Run a single named suite.
    Verify {
        /// Suite name; see the error message for the catalogue.
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Evaluate the noncompact quantum dilogarithm at one point.
    EvalPsi {
        /// Base parameter, a complex literal like 0.7071+0.7071i.
        #[arg(long, value_parser = parse_complex)]
        b: Complex64,
        /// Argument, same literal form.
        #[arg(long, value_parser = parse_complex)]
        p: Complex64,
    },
    /// Classify the star structure at b and print the central charge.
    CentralCharge {
        #[arg(long, value_parser = parse_complex)]
        b: Complex64,
    },
    /// Print the adopted conventions and the flagged discrepancies.
    ConventionsReport(ReportArgs),
    /// Residual and homomorphism spot checks of the clock-shift model.
    OracleCheck {
        /// Matrix dimension; q0 is a primitive root of unity of that order.
        #[arg(long)]
        dim: usize,
        /// Number of random product pairs for the homomorphism check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Truncation degree for the symbolic suites (default 4 for a single
    /// suite; verify-all uses each suite's own default).
    #[arg(long)]
    degree: Option<i64>,
    /// Also write the rendered report to this path, atomically.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<cweyl::Error> for Failure {
    fn from(e: cweyl::Error) -> Self {
        match e {
            cweyl::Error::BadParameter(m) => Failure::Usage(m),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::VerifyAll(args) => verify(suites::SUITE_NAMES, &args),
        Command::Verify { suite, report } => verify(&[suite.as_str()], &report),
        Command::EvalPsi { b, p } => eval_psi(b, p),
        Command::CentralCharge { b } => central_charge(b),
        Command::ConventionsReport(args) => conventions_report(&args),
        Command::OracleCheck { dim, trials } => oracle_check(dim, trials),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            1
        }
    }
}

fn verify(names: &[&str], args: &ReportArgs) -> Result<u8, Failure> {
    let results: Vec<cweyl::Result<SuiteReport>> = names
        .par_iter()
        .map(|n| suites::run_suite(n, args.degree.unwrap_or_else(|| suites::default_degree(n))))
        .collect();
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    let report = Report::new(reports, suites::conventions()?);
    let rendered = match args.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    print!("{rendered}");
    if let Some(path) = &args.report {
        write_atomic(path, &rendered)?;
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn eval_psi(b: Complex64, p: Complex64) -> Result<u8, Failure> {
    let value = qdilog::psi(p, b)?;
    println!("b = {}", format_complex(b));
    println!("p = {}", format_complex(p));
    println!("psi(p) = {}", format_complex(value));

    let product_ok = (b * b).im > 0.0;
    let contour_ok = qdilog::decay_margin(p, b) > 0.0;
    if product_ok && contour_ok {
        let params = qdilog::PsiParams::new(b)?;
        let contour = qdilog::psi_integral(p, &params)?;
        let product = qdilog::psi_product(p, b, qdilog::product_factor_count(p, b)?)?;
        let diff = (contour - product).norm();
        let ok = diff < 1e-8;
        println!(
            "representations agree within 1.0e-8: {} (difference {})",
            if ok { "yes" } else { "NO" },
            float_repr(diff)
        );
        Ok(if ok { 0 } else { 1 })
    } else {
        println!(
            "single valid representation: {}",
            if product_ok { "shift-product" } else { "contour" }
        );
        Ok(0)
    }
}

fn central_charge(b: Complex64) -> Result<u8, Failure> {
    let case = chevalley::star_classify(b)?;
    println!("family: {}", case.family.token());
    println!("central charge = {}", format_complex(case.central_charge));
    Ok(0)
}

fn conventions_report(args: &ReportArgs) -> Result<u8, Failure> {
    let c = suites::conventions()?;
    let rendered = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&c).expect("conventions serialization");
            s.push('\n');
            s
        }
        Format::Text => conventions_text(&c),
    };
    print!("{rendered}");
    if let Some(path) = &args.report {
        write_atomic(path, &rendered)?;
    }
    Ok(0)
}

fn oracle_check(dim: usize, trials: usize) -> Result<u8, Failure> {
    let rep = matoracle::realize_w(dim, Complex64::new(0.7, -0.3), Complex64::new(1.2, 0.5))?;
    println!("dimension {dim}, q0 = {}", format_complex(rep.q0()));

    let relations = rep
        .relation_residuals()
        .into_iter()
        .chain(rep.centrality_residuals())
        .map(|(_, r)| r)
        .fold(0.0f64, f64::max);
    let hom = matoracle::homomorphism_trials(&rep, trials, 1000 + dim as u64)?;
    let uq = matoracle::uq_matrix_residuals(&rep)?
        .into_iter()
        .map(|(_, r)| r)
        .fold(0.0f64, f64::max);
    let casimir = matoracle::casimir_matrix_defect(&rep)?;

    let rows = [
        ("w relations and centrality".to_string(), relations, 1e-12),
        (format!("homomorphism on {trials} pairs"), hom, 1e-10),
        ("U_q relations".to_string(), uq, 1e-10),
        ("casimir equals z1 + z2".to_string(), casimir, 1e-10),
    ];
    let mut all_ok = true;
    for (name, value, tol) in rows {
        let ok = value < tol;
        all_ok &= ok;
        println!(
            "{} {name}: max residual {} (tolerance {})",
            if ok { "pass" } else { "FAIL" },
            float_repr(value),
            float_repr(tol)
        );
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        float_repr(z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", float_repr(z.re), float_repr(-z.im))
    } else {
        format!("{} + {}i", float_repr(z.re), float_repr(z.im))
    }
}

/// Parse a complex literal: decimal floats as `a`, `bi`, or `a+bi`, with
/// exponent notation allowed in either part.
fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".to_string());
    }
    let bad = || format!("bad complex literal '{s}'; expected a+bi with decimal floats");

    // Split before the sign of the imaginary part, skipping a leading sign
    // and signs inside exponents.
    let bytes = t.as_bytes();
    let mut split = None;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
        }
    }

    if let Some(body) = t.strip_suffix(['i', 'I']) {
        let (re_s, im_s) = match split {
            Some(i) => (&t[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im_s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => im_s.parse::<f64>(),
        };
        match (re_s.parse::<f64>(), im) {
            (Ok(re), Ok(im)) => Ok(Complex64::new(re, im)),
            _ => Err(bad()),
        }
    } else {
        t.parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad())
    }
}

mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, ValueEnum};
use newtonbound::oracle::{default_radii, unboundedness_evidence, DEFAULT_SAMPLES};
use newtonbound::witness::{default_scales, default_width, witness_for_verdict};
use newtonbound::{decide, parse_polynomial, parse_source, Rational, Status};
use num_bigint::BigInt;
use num_traits::{One, Signed};

use report::Report;

const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Decide compactness of the real plane curve p(x, y) = 0 from the Newton
/// polygon of p.
///
/// Exit status: 0 compact, 1 noncompact, 2 unknown, 64 usage error,
/// 65 parse error.
#[derive(Debug, Parser)]
#[command(name = "newtonbound", version)]
#[command(group(ArgGroup::new("input").required(true).args(["poly", "file"])))]
struct Args {
    /// Polynomial expression, e.g. "x^2 + y^2 - 1"
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// File holding one polynomial expression; '#' starts a comment
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Construct unbounded witness points when noncompact
    #[arg(long)]
    witness: bool,
    /// Witness scales n, comma separated [default: 2,4,16,256,65536]
    #[arg(long, value_delimiter = ',')]
    scales: Option<Vec<u64>>,
    /// Witness bisection width, dyadic: "2^-32" or e.g. "1/1024" [default: 2^-32]
    #[arg(long)]
    width: Option<String>,
    /// Probe circles for sign changes
    #[arg(long)]
    oracle: bool,
    /// Oracle radii, comma separated [default: 10,100,1000,10000]
    #[arg(long, value_delimiter = ',')]
    radii: Option<Vec<String>>,
    /// Samples per oracle circle (at least 8)
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("newtonbound: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn positive_rational(text: &str) -> Option<Rational> {
    let p = parse_polynomial(text).ok()?;
    (p.total_degree() == 0 && p.len() == 1)
        .then(|| p.coeff(0, 0))
        .filter(Signed::is_positive)
}

fn parse_width(text: &str) -> Result<Rational, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let width = if let Some(bits) = compact.strip_prefix("2^-") {
        let bits: usize = bits.parse().map_err(|_| format!("invalid width '{text}'"))?;
        Rational::new(BigInt::one(), BigInt::one() << bits)
    } else {
        positive_rational(&compact).ok_or_else(|| format!("invalid width '{text}'"))?
    };
    let den = width.denom();
    if (den & (den - BigInt::one())) != BigInt::from(0) || !width.is_positive() {
        return Err(format!("width '{text}' is not a positive dyadic rational"));
    }
    Ok(width)
}

fn run(args: Args) -> ExitCode {
    let started = Instant::now();
    if args.samples < 8 {
        return usage("--samples must be at least 8");
    }
    let width = match args.width.as_deref().map(parse_width).transpose() {
        Ok(w) => w.unwrap_or_else(default_width),
        Err(e) => return usage(e),
    };
    let scales = args.scales.clone().unwrap_or_else(default_scales);
    if scales.is_empty() || scales[0] == 0 || scales.windows(2).any(|w| w[0] >= w[1]) {
        return usage("--scales must be positive and strictly increasing");
    }
    let radii = match &args.radii {
        None => default_radii(),
        Some(list) => {
            let parsed: Option<Vec<Rational>> = list.iter().map(|r| positive_rational(r)).collect();
            match parsed {
                Some(r) if !r.is_empty() => r,
                _ => return usage("--radii must be positive rationals"),
            }
        }
    };

    let parsed = match (&args.poly, &args.file) {
        (Some(expr), None) => parse_polynomial(expr),
        (None, Some(path)) => match std::fs::read_to_string(path) {
            Ok(text) => parse_source(&text),
            Err(e) => return usage(format!("cannot read {}: {e}", path.display())),
        },
        _ => return usage("exactly one of --poly or --file is required"),
    };
    let p = match parsed {
        Ok(p) => p,
        Err(e) => {
            eprintln!("newtonbound: parse error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };

    let verdict = decide(&p);
    let mut report = Report::new(&p, &verdict);
    if args.witness {
        let w = witness_for_verdict(&p, &verdict, &scales, &width).map_err(|e| e.to_string());
        report.set_witness(&verdict, w);
    }
    if args.oracle {
        report.set_oracle(args.samples, &unboundedness_evidence(&p, &radii, args.samples));
    }
    report.timing.elapsed_us = started.elapsed().as_micros() as u64;
    let rendered = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().write_all(rendered.as_bytes());
    ExitCode::from(match verdict.status {
        Status::CompactCertified => 0,
        Status::NoncompactCertified => 1,
        Status::Unknown => 2,
    })
}

fn main() -> ExitCode {
    match Args::try_parse() {
        Ok(args) => run(args),
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            ExitCode::from(EXIT_USAGE)
        }
    }
}

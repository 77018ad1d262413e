//! `symgen`: generating series of symmetric products and their checks.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symgen::genera::{self, Flavor, GenusSeriesRequest, WeightConvention};
use symgen::io::{self, Format};
use symgen::lefschetz::{self, ModelBundle, ModelManifold, RrSeriesCheck};
use symgen::verify::{self, Suite, SuiteReport, VerifyConfig};
use symgen::{Error, QSeries};

#[derive(Parser, Debug)]
#[command(name = "symgen", version, about = "Exact generating series for genera of symmetric products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generating series.
    Series(SeriesArgs),
    /// Run a verification suite, or `all`.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesKind {
    EulerSym,
    EulerOrb,
    ChiySym,
    ChiyOrb,
    ChihatSym,
    ChihatOrb,
    RrSym,
    RrOrb,
    RrGraded,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    PositiveY,
    MinusY,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    kind: SeriesKind,
    /// Hodge-diamond file.
    #[arg(long)]
    hodge: Option<PathBuf>,
    /// Euler number, instead of a Hodge file (euler-sym, euler-orb).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "hodge")]
    chi: Option<i64>,
    /// Model manifold: point, p1^d or p^d (rr-*).
    #[arg(long)]
    model: Option<String>,
    /// Bundle: k for O(k), trivial:r, cotangent or tangent (rr-*).
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    bundle: String,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Twisted-sector weights; `minus-y` switches the orbifold series to
    /// class sums weighted by `(-y)^F`.
    #[arg(long, value_enum, default_value_t = ConventionArg::PositiveY)]
    weight_convention: ConventionArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name or `all`.
    suite: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest truncation (local-term).
    #[arg(long)]
    trunc: Option<u32>,
}

/// Terminal outcome with its exit status.
enum Failure {
    Input(String),
    Guard(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Guard { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Series(a) => series(&a),
        Command::Verify(a) => verify_cmd(&a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(msg)) => {
            print!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    }
}

fn convention_of(c: ConventionArg) -> WeightConvention {
    match c {
        ConventionArg::PositiveY => WeightConvention::PositiveY,
        ConventionArg::MinusY => WeightConvention::MinusY,
    }
}

fn flavor_of(k: SeriesKind) -> Option<Flavor> {
    Some(match k {
        SeriesKind::EulerSym => Flavor::EulerSym,
        SeriesKind::EulerOrb => Flavor::EulerOrb,
        SeriesKind::ChiySym => Flavor::ChiySym,
        SeriesKind::ChiyOrb => Flavor::ChiyOrb,
        SeriesKind::ChihatSym => Flavor::ChihatSym,
        SeriesKind::ChihatOrb => Flavor::ChihatOrb,
        _ => return None,
    })
}

fn read_hodge(path: &PathBuf) -> Result<symgen::hodge::HodgeDiamond, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::parse_hodge(&text).map_err(|e| match e {
        Error::Guard { .. } => Failure::Guard(format!("{}: {e}", path.display())),
        _ => Failure::Input(format!("{}: {e}", path.display())),
    })
}

fn series(a: &SeriesArgs) -> Result<String, Failure> {
    symgen::guards::check_bound("series order --max-n", a.max_n as u128, 64)?;
    let s = match flavor_of(a.kind) {
        Some(flavor) => genus_series(a, flavor)?,
        None => rr_series(a)?,
    };
    Ok(io::render_series(&s, format_of(a.format)))
}

fn genus_series(a: &SeriesArgs, flavor: Flavor) -> Result<QSeries, Failure> {
    let euler = matches!(flavor, Flavor::EulerSym | Flavor::EulerOrb);
    if let Some(chi) = a.chi {
        if !euler {
            return Err(Failure::Input(format!("--chi only applies to euler-sym and euler-orb, not {flavor}")));
        }
        return Ok(match flavor {
            Flavor::EulerSym => genera::euler_sym_series(chi, a.max_n),
            _ => genera::euler_orb_series(chi, a.max_n),
        });
    }
    let path = a
        .hodge
        .as_ref()
        .ok_or_else(|| Failure::Input(format!("{flavor} needs --hodge FILE{}", if euler { " or --chi C" } else { "" })))?;
    let h = read_hodge(path)?;
    for w in h.symmetry_warnings() {
        eprintln!("warning: {w}");
    }
    let convention = convention_of(a.weight_convention);
    if convention == WeightConvention::MinusY && matches!(flavor, Flavor::ChiyOrb | Flavor::ChihatOrb) {
        let coeffs = (0..=a.max_n)
            .map(|n| match flavor {
                Flavor::ChiyOrb => genera::chiy_orb_delocalized(&h, n, convention),
                _ => genera::chihat_orb_delocalized(&h, n, convention),
            })
            .collect::<symgen::Result<Vec<_>>>()?;
        return Ok(QSeries::from_coeffs(a.max_n, coeffs));
    }
    Ok(GenusSeriesRequest {
        diamond: h,
        max_n: a.max_n,
        flavor,
    }
    .compute()?)
}

fn rr_series(a: &SeriesArgs) -> Result<QSeries, Failure> {
    let model: ModelManifold = a
        .model
        .as_deref()
        .ok_or_else(|| Failure::Input("rr series need --model point|p1^d|p^d".into()))?
        .parse()?;
    let bundle = ModelBundle::parse(&model, &a.bundle)?;
    let check: RrSeriesCheck = match a.kind {
        SeriesKind::RrSym => lefschetz::sym_rr_series(&model, &bundle, a.max_n)?,
        SeriesKind::RrOrb => lefschetz::orb_rr_series(&model, &bundle, a.max_n)?,
        _ => lefschetz::graded_sym_series(&model, &bundle, a.max_n)?,
    };
    if let Some(k) = check.first_mismatch() {
        return Err(Failure::Verification(format!(
            "mismatch at p^{k} for {model}, bundle {}: closed form {}, cycle data {}\n",
            a.bundle,
            check.closed_form.coeffs()[k],
            check.computed.coeffs()[k]
        )));
    }
    Ok(check.computed)
}

fn render_reports(reports: &[SuiteReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

fn verify_cmd(a: &VerifyArgs) -> Result<String, Failure> {
    let cfg = VerifyConfig {
        seed: a.seed,
        rank: a.rank,
        max_n: a.max_n,
        trunc: a.trunc,
    };
    let reports: Vec<SuiteReport> = if a.suite == "all" {
        verify::run_all(&cfg).into_iter().collect::<symgen::Result<_>>()?
    } else {
        let suite: Suite = a.suite.parse()?;
        vec![verify::run(suite, &cfg)?]
    };
    let out = render_reports(&reports);
    if reports.iter().all(SuiteReport::passed) {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use relspin::bell::tsirelson_bound;
use relspin::emit::{emit, render_report, render_rows, resolve_output};
use relspin::scan::{AxisRange, EnergyAxis, FamilyChoice, OutputFormat, QuadrupleChoice, Scenario};
use relspin::{
    asymptotic_half_angle, consistency_report, czachor_eigenvalues, run_scan,
    single_particle_oracle, single_particle_report, wigner_angle, wigner_angle_oracle, BoostF64,
    Direction, Error, ParticleF64, Real, ScanConfig, LIMIT_BETA,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "relspin",
    version,
    about = "Relativistic spin-1/2 states, Wigner rotations, and CHSH audits"
)]
struct Cli {
    /// Tolerance for algebraic identities and closed-form comparisons.
    #[arg(long, global = true, value_name = "TOL")]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wigner angle from the closed form and from Lorentz-matrix decomposition.
    WignerAngle(PointArgs),
    /// Lab- and moving-frame spin expectations for |+> measured along (1,0,1)/√2.
    Single(PointArgs),
    /// Sweep a scenario over a (β, Γ) grid and emit one row per cell.
    Scan(ScanArgs),
    /// Compare every printed closed form with its dense evaluation over a grid.
    Report(ReportArgs),
}

#[derive(Args)]
struct PointArgs {
    /// Boost speed in units of c.
    #[arg(long, default_value_t = 0.0)]
    beta: f64,
    /// Particle energy factor Γ = p0/m.
    #[arg(long, conflicts_with = "beta1")]
    gamma: Option<f64>,
    /// Particle lab speed, as an alternative to --gamma.
    #[arg(long)]
    beta1: Option<f64>,
    /// Evaluate at β = 1 − 1e−9 (overrides --beta).
    #[arg(long)]
    limit: bool,
}

impl PointArgs {
    fn resolve(&self) -> relspin::Result<(BoostF64, ParticleF64)> {
        let beta = if self.limit { LIMIT_BETA } else { self.beta };
        let boost = BoostF64::from_speed(beta)?;
        let particle = match (self.gamma, self.beta1) {
            (Some(g), _) => ParticleF64::from_gamma(g)?,
            (None, Some(b1)) => ParticleF64::from_speed(b1)?,
            (None, None) => {
                return Err(Error::Config(
                    "one of --gamma or --beta1 is required".into(),
                ))
            }
        };
        Ok((boost, particle))
    }
}

#[derive(Args)]
struct GridArgs {
    /// Boost-speed axis lo:hi:n.
    #[arg(long, value_name = "LO:HI:N", default_value = "0:0.999:50")]
    beta_range: String,
    /// Energy axis lo:hi:n in Γ.
    #[arg(long, value_name = "LO:HI:N", conflicts_with = "beta1_range")]
    gamma_range: Option<String>,
    /// Energy axis lo:hi:n in particle lab speed β₁.
    #[arg(long, value_name = "LO:HI:N")]
    beta1_range: Option<String>,
    /// Replace the β axis by the single probe β = 1 − 1e−9.
    #[arg(long)]
    limit: bool,
}

impl GridArgs {
    fn apply(&self, config: &mut ScanConfig) -> relspin::Result<()> {
        config.beta = self.beta_range.parse()?;
        config.energy = match (&self.gamma_range, &self.beta1_range) {
            (Some(g), _) => EnergyAxis::Gamma(g.parse()?),
            (None, Some(b)) => EnergyAxis::Beta1(b.parse()?),
            (None, None) => EnergyAxis::Gamma(AxisRange::new(1.0, 20.0, 50)),
        };
        config.limit = self.limit;
        Ok(())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Single,
    BellPhi,
    BellPsi,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Pauli,
    Czachor,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuadrupleArg {
    Standard,
    AsPrinted,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    scenario: ScenarioArg,
    #[arg(long, value_enum, default_value = "pauli")]
    family: FamilyArg,
    #[arg(long, value_enum, default_value = "standard")]
    quadruple: QuadrupleArg,
    /// Twelve comma-separated components a, a', b, b' for --quadruple custom.
    #[arg(long, value_name = "AX,AY,AZ,...", allow_hyphen_values = true)]
    directions: Option<String>,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output file; stdout when omitted. Relative paths go under $RELSPIN_OUTPUT_DIR if set.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Exit with status 1 if any cell deviates from its closed form or breaks the 2√2 bound.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Exit with status 1 unless every check comes out as expected.
    #[arg(long)]
    check: bool,
}

fn parse_directions(raw: Option<&str>) -> relspin::Result<[f64; 12]> {
    let raw = raw.ok_or_else(|| {
        Error::Config("--quadruple custom needs --directions with 12 values".into())
    })?;
    let values = raw
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Error::Config(format!("--directions: {e}")))?;
    values.try_into().map_err(|v: Vec<f64>| {
        Error::Config(format!("--directions needs 12 values, got {}", v.len()))
    })
}

fn scan_config(args: &ScanArgs) -> relspin::Result<ScanConfig> {
    let mut config = ScanConfig {
        scenario: match args.scenario {
            ScenarioArg::Single => Scenario::SingleParticle,
            ScenarioArg::BellPhi => Scenario::BellPhi,
            ScenarioArg::BellPsi => Scenario::BellPsi,
        },
        family: match args.family {
            FamilyArg::Pauli => FamilyChoice::Pauli,
            FamilyArg::Czachor => FamilyChoice::Czachor,
        },
        quadruple: match args.quadruple {
            QuadrupleArg::Standard => QuadrupleChoice::Standard,
            QuadrupleArg::AsPrinted => QuadrupleChoice::AsPrinted,
            QuadrupleArg::Custom => {
                QuadrupleChoice::Custom(parse_directions(args.directions.as_deref())?)
            }
        },
        format: match args.format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        },
        output: args.output.as_deref().map(resolve_output),
        ..ScanConfig::default()
    };
    if args.directions.is_some() && !matches!(args.quadruple, QuadrupleArg::Custom) {
        return Err(Error::Config(
            "--directions requires --quadruple custom".into(),
        ));
    }
    args.grid.apply(&mut config)?;
    config.validate()?;
    Ok(config)
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn cmd_wigner_angle(args: &PointArgs) -> relspin::Result<Outcome> {
    let (boost, particle) = args.resolve()?;
    let omega = wigner_angle(&boost, &particle).radians();
    let oracle = wigner_angle_oracle(&boost, &particle)?.radians();
    println!("beta                  {:.17e}", boost.beta());
    println!("alpha                 {:.17e}", boost.alpha());
    println!("gamma                 {:.17e}", particle.gamma());
    println!("beta1                 {:.17e}", particle.beta1());
    println!("delta                 {:.17e}", particle.delta());
    println!("omega_rad             {omega:.17e}");
    println!("omega_oracle_rad      {oracle:.17e}");
    println!("abs_deviation         {:.3e}", (omega - oracle).abs());
    println!("sin_half_omega        {:.17e}", (omega / 2.0).sin());
    println!(
        "asymptotic_sin_half   {:.17e}",
        asymptotic_half_angle(&particle)
    );
    Ok(Outcome::Ok)
}

fn cmd_single(args: &PointArgs) -> relspin::Result<Outcome> {
    let (boost, particle) = args.resolve()?;
    let closed = single_particle_report(&boost, &particle);
    let dense = single_particle_oracle(&boost, &particle)?;
    println!(
        "beta {:.17e}  gamma {:.17e}  omega_rad {:.17e}",
        boost.beta(),
        particle.gamma(),
        wigner_angle(&boost, &particle).radians()
    );
    println!(
        "{:<16} {:>25} {:>25} {:>10}",
        "quantity", "closed_form", "oracle", "abs_dev"
    );
    for (name, c, d) in [
        ("lab_pauli", closed.lab_pauli, dense.lab_pauli),
        ("moving_pauli", closed.moving_pauli, dense.moving_pauli),
        ("lab_czachor", closed.lab_czachor, dense.lab_czachor),
        (
            "moving_czachor",
            closed.moving_czachor,
            dense.moving_czachor,
        ),
    ] {
        println!(
            "{name:<16} {c:>25.17e} {d:>25.17e} {:>10.3e}",
            (c - d).abs()
        );
    }
    let spectrum =
        czachor_eigenvalues(&Direction::new(1.0, 0.0, 1.0)?, &boost, &Direction::x_hat())?;
    println!(
        "czachor eigenvalues ({:.17e}, {:.17e}), |numerator|/normalization {:.17e}",
        spectrum.eigenvalues.0, spectrum.eigenvalues.1, spectrum.analytic_ratio
    );
    Ok(Outcome::Ok)
}

fn cmd_scan(args: &ScanArgs) -> relspin::Result<Outcome> {
    let config = scan_config(args)?;
    let rows = run_scan(&config)?;
    let text = render_rows(&rows, config.format)?;
    emit(&text, config.output.as_deref())?;
    if config.limit {
        eprintln!("# beta->1 probe: every row evaluated at beta = {LIMIT_BETA:.17e}");
    }
    if !args.check {
        return Ok(Outcome::Ok);
    }
    let tol = <f64 as Real>::tolerance();
    let bound = tsirelson_bound::<f64>() + tol;
    let deviating = rows
        .iter()
        .filter(|r| r.abs_deviation.is_nan() || r.abs_deviation > tol)
        .count();
    let over_bound = rows
        .iter()
        .filter(|r| r.value_oracle.is_nan() || r.value_oracle.abs() > bound)
        .count();
    if deviating + over_bound > 0 {
        eprintln!(
            "check failed: {deviating} of {} cells deviate from the closed form by more than {tol:e}; {over_bound} exceed 2√2",
            rows.len()
        );
        return Ok(Outcome::CheckFailed);
    }
    Ok(Outcome::Ok)
}

fn cmd_report(args: &ReportArgs) -> relspin::Result<Outcome> {
    let mut config = ScanConfig::default();
    args.grid.apply(&mut config)?;
    config.validate()?;
    let report = consistency_report(&config)?;
    let format = match args.format {
        ReportFormatArg::Text => None,
        ReportFormatArg::Json => Some(OutputFormat::Json),
    };
    let text = render_report(&report, format)?;
    let output = args.output.as_deref().map(resolve_output);
    emit(&text, output.as_deref())?;
    if args.check && !report.passed() {
        eprintln!("check failed: at least one comparison did not come out as expected");
        return Ok(Outcome::CheckFailed);
    }
    Ok(Outcome::Ok)
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Json(_) => EXIT_IO,
        Error::BoundViolation { .. }
        | Error::NonHermitianObservable { .. }
        | Error::ImaginaryResidue { .. }
        | Error::NotNormalized { .. }
        | Error::DecompositionFailure { .. } => EXIT_CHECK_FAILED,
        _ => EXIT_CONFIG,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(tol) = cli.tolerance {
        if !(tol.is_finite() && tol > 0.0) {
            eprintln!("error: --tolerance must be a positive number");
            return ExitCode::from(EXIT_CONFIG);
        }
        relspin::scalar::set_tolerance_override(Some(tol));
    }
    let result = match &cli.command {
        Command::WignerAngle(a) => cmd_wigner_angle(a),
        Command::Single(a) => cmd_single(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Report(a) => cmd_report(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

//! Command-line front end: ordering algebra, analytic and oracle scattering,
//! numerical solves, and parameter sweeps with CSV output.
//!
//! Exit codes: 0 on success, 2 on usage/config errors, 3 on domain and I/O
//! errors; every failure prints a single-line diagnostic on stderr.

pub mod config;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::massmodel::{MassProfile, Regularizer};
use crate::numeric::{self, SolverConfig};
use crate::ordering::{self, OrderingParams};
use crate::pct::{self, CouplingMode};
use crate::pointscatter::{self, ScatteringAmplitudes};
use config::{parse_config, ConfigError, ConfigFragment};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) | CliError::Io(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Io(m) => m,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(err: ConfigError) -> Self {
        CliError::Usage(err.to_string())
    }
}

macro_rules! domain_error_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::Domain(err.to_string())
            }
        }
    )*};
}

domain_error_from!(
    crate::massmodel::ProfileError,
    crate::ordering::OrderingError,
    crate::pct::PctError,
    crate::pointscatter::ScatterError,
    crate::numeric::SolveError
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Published coupling convention b = U(0)/2.
    Paper,
    /// First-principles reduction b = G1·U(0) (derived symmetric root).
    Pipeline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstraintArg {
    /// G1 = 0 and G2 = 0: the deformed-coordinate particle stays free.
    #[value(name = "free-particle")]
    FreeParticle,
    /// 2G1 − G2 = 0 with alpha = gamma: delta-squared term cancels.
    #[value(name = "delta2-free")]
    Delta2Free,
}

#[derive(Parser, Debug)]
#[command(
    name = "pdmjump",
    version,
    about = "Scattering off a position-dependent-mass jump: ordering algebra, \
             closed forms, matching-condition oracle, and transfer-matrix solvers"
)]
struct Cli {
    /// Read defaults from a `key = value` config file; flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Output format for single results (sweeps always emit CSV).
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordering-exponent algebra: presets, coefficients, constraint solving.
    Ordering {
        #[command(subcommand)]
        action: OrderingAction,
    },
    /// Reflection/transmission of the jump-induced point scatterer.
    Scatter {
        #[command(subcommand)]
        action: ScatterAction,
    },
    /// Parameter sweeps, emitted as CSV.
    Sweep {
        #[command(subcommand)]
        action: SweepAction,
    },
}

#[derive(Subcommand, Debug)]
enum OrderingAction {
    /// List the named presets with their coefficients.
    List,
    /// Coefficients for a custom (alpha, beta) pair; gamma is derived.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
    },
    /// Solve an admissibility constraint.
    Solve {
        #[arg(long, value_enum)]
        constraint: Option<ConstraintArg>,
    },
}

#[derive(Subcommand, Debug)]
enum ScatterAction {
    /// Closed-form amplitudes for the mass jump m(x) = 1 + mu·h(x).
    Analytic {
        #[arg(long, allow_negative_numbers = true)]
        mu: Option<f64>,
        /// Strength of an extra attractive delta well −a·δ(x) (default 0).
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        /// Wavenumber (default 1; irrelevant when a = 0).
        #[arg(long)]
        k: Option<f64>,
        /// Coupling convention for the delta-prime term.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Independent matching-condition solve at couplings (a, b = u0/2).
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        u0: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long)]
        k: Option<f64>,
    },
    /// Transfer-matrix solve for the tanh-regularized jump in the physical
    /// coordinate (kinetic-only ordering).
    Numeric {
        #[arg(long, allow_negative_numbers = true)]
        mu: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        energy: Option<f64>,
        #[arg(long)]
        segments: Option<usize>,
        #[arg(long = "half-width")]
        half_width: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
enum SweepAction {
    /// Sweep the jump size mu through the closed forms.
    Mu {
        #[arg(long, allow_negative_numbers = true)]
        from: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        to: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long)]
        k: Option<f64>,
    },
    /// Sweep the regularization width through the numerical solver.
    Epsilon {
        #[arg(long, allow_negative_numbers = true)]
        mu: Option<f64>,
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        energy: Option<f64>,
    },
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code. Never panics on bad input.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                print!("{err}");
                return EXIT_OK;
            }
            let text = err.to_string();
            let first_line = text.lines().next().unwrap_or("invalid usage");
            eprintln!("{first_line}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let fragment = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read config file {}: {e}", path.display()))
            })?;
            let (fragment, warnings) = parse_config(&text)?;
            for warning in warnings {
                eprintln!("warning: {warning}");
            }
            fragment
        }
        None => ConfigFragment::default(),
    };
    let merged = Merged { fragment };

    let format = match cli.format {
        Some(f) => f,
        None => match merged.fragment.get("format") {
            Some("csv") => OutputFormat::Csv,
            Some("human") => OutputFormat::Human,
            Some(other) => {
                return Err(CliError::Usage(format!(
                    "invalid value `{other}` for config key `format` (expected csv or human)"
                )))
            }
            None => OutputFormat::Human,
        },
    };
    let out = cli
        .out
        .or_else(|| merged.fragment.get("out").map(PathBuf::from));

    let output = match cli.command {
        Command::Ordering { action } => run_ordering(action, &merged, format)?,
        Command::Scatter { action } => run_scatter(action, &merged, format)?,
        Command::Sweep { action } => run_sweep(action, &merged)?,
    };
    emit(out.as_deref(), &output)
}

fn emit(path: Option<&std::path::Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
                .and_then(|_| lock.flush())
                .map_err(|e| CliError::Io(format!("cannot write to standard output: {e}")))
        }
    }
}

/// Flag/config merge: flags win, config fills gaps, defaults last.
struct Merged {
    fragment: ConfigFragment,
}

impl Merged {
    fn f64_opt(&self, flag: Option<f64>, key: &str) -> Result<Option<f64>, CliError> {
        let value = match flag {
            Some(v) => Some(v),
            None => match self.fragment.get(key) {
                Some(raw) => Some(raw.parse::<f64>().map_err(|_| {
                    CliError::Usage(format!("invalid numeric value `{raw}` for `{key}`"))
                })?),
                None => None,
            },
        };
        if let Some(v) = value {
            if !v.is_finite() {
                return Err(CliError::Usage(format!(
                    "value for `{key}` must be finite, got {v}"
                )));
            }
        }
        Ok(value)
    }

    fn f64_required(&self, flag: Option<f64>, key: &str) -> Result<f64, CliError> {
        self.f64_opt(flag, key)?.ok_or_else(|| {
            CliError::Usage(format!("missing required value for --{key} (flag or config)"))
        })
    }

    fn usize_opt(&self, flag: Option<usize>, key: &str) -> Result<Option<usize>, CliError> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => match self.fragment.get(key) {
                Some(raw) => raw.parse::<usize>().map(Some).map_err(|_| {
                    CliError::Usage(format!("invalid integer value `{raw}` for `{key}`"))
                }),
                None => Ok(None),
            },
        }
    }

    fn usize_required(&self, flag: Option<usize>, key: &str) -> Result<usize, CliError> {
        self.usize_opt(flag, key)?.ok_or_else(|| {
            CliError::Usage(format!("missing required value for --{key} (flag or config)"))
        })
    }

    fn mode(&self, flag: Option<ModeArg>) -> Result<ModeArg, CliError> {
        match flag {
            Some(m) => Ok(m),
            None => match self.fragment.get("mode") {
                Some("paper") => Ok(ModeArg::Paper),
                Some("pipeline") => Ok(ModeArg::Pipeline),
                Some(other) => Err(CliError::Usage(format!(
                    "invalid value `{other}` for config key `mode` (expected paper or pipeline)"
                ))),
                None => Ok(ModeArg::Paper),
            },
        }
    }

    fn constraint(&self, flag: Option<ConstraintArg>) -> Result<ConstraintArg, CliError> {
        match flag {
            Some(c) => Ok(c),
            None => match self.fragment.get("constraint") {
                Some("free-particle") => Ok(ConstraintArg::FreeParticle),
                Some("delta2-free") => Ok(ConstraintArg::Delta2Free),
                Some(other) => Err(CliError::Usage(format!(
                    "invalid value `{other}` for config key `constraint` \
                     (expected free-particle or delta2-free)"
                ))),
                None => Err(CliError::Usage(
                    "missing required value for --constraint (flag or config)".into(),
                )),
            },
        }
    }
}

/// Formats with 17 significant digits (enough to round-trip any f64) in plain
/// positional notation, trailing zeros trimmed.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let scientific = format!("{x:.16e}");
    let (mantissa, exponent) = scientific.split_once('e').expect("scientific notation");
    let exponent: i32 = exponent.parse().expect("valid exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let body = if exponent >= 16 {
        let mut s = digits;
        s.push_str(&"0".repeat((exponent - 16) as usize));
        s
    } else if exponent >= 0 {
        let (int_part, frac_part) = digits.split_at((exponent + 1) as usize);
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac_part}")
        }
    } else {
        let zeros = "0".repeat((-exponent - 1) as usize);
        let frac = format!("{zeros}{digits}");
        format!("0.{}", frac.trim_end_matches('0'))
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// One row of scattering output: the swept parameter, the jump coupling, and
/// the amplitudes.
pub struct SweepRow {
    pub sweep_value: f64,
    pub u0: f64,
    pub amplitudes: ScatteringAmplitudes,
}

/// CSV rendering with header
/// `<first>,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect`, 17
/// significant digits per value, `\n` line endings, trailing newline.
pub fn render_sweep_csv(first_column: &str, rows: &[SweepRow]) -> String {
    let mut text = format!("{first_column},u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect\n");
    for row in rows {
        let a = &row.amplitudes;
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{},{},{}",
            format_sig17(row.sweep_value),
            format_sig17(row.u0),
            format_sig17(a.r.re),
            format_sig17(a.r.im),
            format_sig17(a.t.re),
            format_sig17(a.t.im),
            format_sig17(a.prob_r),
            format_sig17(a.prob_t),
            format_sig17(a.unitarity_defect),
        );
    }
    text
}

fn human_amplitude_block(pairs: &[(&str, f64)], amps: &ScatteringAmplitudes) -> String {
    let mut text = String::new();
    for (name, value) in pairs {
        let _ = writeln!(text, "{name:<17} = {}", format_sig17(*value));
    }
    if let Some(k) = amps.k {
        let _ = writeln!(text, "{:<17} = {}", "k", format_sig17(k));
    } else {
        let _ = writeln!(text, "{:<17} = (not applicable)", "k");
    }
    for (name, value) in [
        ("re_r", amps.r.re),
        ("im_r", amps.r.im),
        ("re_t", amps.t.re),
        ("im_t", amps.t.im),
        ("prob_r", amps.prob_r),
        ("prob_t", amps.prob_t),
        ("unitarity_defect", amps.unitarity_defect),
    ] {
        let _ = writeln!(text, "{name:<17} = {}", format_sig17(value));
    }
    text
}

fn ordering_csv_line(name: &str, params: &OrderingParams) -> String {
    let c = params.coefficients();
    format!(
        "{name},{},{},{},{},{},{},{},{}\n",
        format_sig17(params.alpha()),
        format_sig17(params.beta()),
        format_sig17(params.gamma()),
        format_sig17(c.g1),
        format_sig17(c.g2),
        format_sig17(c.big_g1),
        format_sig17(c.big_g2),
        format_sig17(c.delta2_residual()),
    )
}

const ORDERING_CSV_HEADER: &str = "name,alpha,beta,gamma,g1,g2,G1,G2,two_G1_minus_G2\n";

fn ordering_human_line(name: &str, params: &OrderingParams) -> String {
    let c = params.coefficients();
    format!(
        "{name:<13} alpha={:<8} beta={:<8} gamma={:<8} g1={:<9} g2={:<9} G1={:<9} G2={:<9} 2G1-G2={}\n",
        format_sig17(params.alpha()),
        format_sig17(params.beta()),
        format_sig17(params.gamma()),
        format_sig17(c.g1),
        format_sig17(c.g2),
        format_sig17(c.big_g1),
        format_sig17(c.big_g2),
        format_sig17(c.delta2_residual()),
    )
}

fn run_ordering(
    action: OrderingAction,
    merged: &Merged,
    format: OutputFormat,
) -> Result<String, CliError> {
    match action {
        OrderingAction::List => {
            let mut text = String::new();
            if format == OutputFormat::Csv {
                text.push_str(ORDERING_CSV_HEADER);
                for (name, params) in ordering::presets() {
                    text.push_str(&ordering_csv_line(name, &params));
                }
            } else {
                for (name, params) in ordering::presets() {
                    text.push_str(&ordering_human_line(name, &params));
                }
            }
            Ok(text)
        }
        OrderingAction::Eval { alpha, beta } => {
            let alpha = merged.f64_required(alpha, "alpha")?;
            let beta = merged.f64_required(beta, "beta")?;
            let params = OrderingParams::from_alpha_beta(alpha, beta)?;
            let mut text = String::new();
            if format == OutputFormat::Csv {
                text.push_str(ORDERING_CSV_HEADER);
                text.push_str(&ordering_csv_line("custom", &params));
            } else {
                text.push_str(&ordering_human_line("custom", &params));
                let residual = params.coefficients().delta2_residual();
                let verdict = if residual.abs() < pct::DELTA_SQUARED_TOL {
                    "yes"
                } else {
                    "no"
                };
                let _ = writeln!(text, "delta2-admissible on a jump: {verdict}");
            }
            Ok(text)
        }
        OrderingAction::Solve { constraint } => {
            let constraint = merged.constraint(constraint)?;
            let mut text = String::new();
            match constraint {
                ConstraintArg::FreeParticle => {
                    if format == OutputFormat::Csv {
                        text.push_str(ORDERING_CSV_HEADER);
                        for params in ordering::solve_free_particle() {
                            text.push_str(&ordering_csv_line("free-particle", &params));
                        }
                    } else {
                        text.push_str(
                            "constraint G1 = 0 and G2 = 0 (deformed-coordinate particle stays free)\n",
                        );
                        for params in ordering::solve_free_particle() {
                            text.push_str(&ordering_human_line("root", &params));
                        }
                    }
                }
                ConstraintArg::Delta2Free => {
                    let roots = ordering::solve_delta2_free_symmetric();
                    let claimed = ordering::preset("MM1_paper").expect("preset exists");
                    let claimed_residual = claimed.coefficients().delta2_residual();
                    if format == OutputFormat::Csv {
                        text.push_str(ORDERING_CSV_HEADER);
                        for root in &roots {
                            text.push_str(&ordering_csv_line("root", &root.params));
                        }
                        text.push_str(&ordering_csv_line("MM1_paper", &claimed));
                    } else {
                        text.push_str(
                            "constraint 2G1 - G2 = 0 with alpha = gamma \
                             (quadratic alpha^2/2 - 1/32 = 0, roots alpha = +/- 1/4)\n",
                        );
                        for root in &roots {
                            text.push_str(&ordering_human_line("root", &root.params));
                        }
                        let _ = writeln!(
                            text,
                            "claimed MM1_paper ({}, {}, {}) fails constraint: 2G1-G2 = {}",
                            format_sig17(claimed.alpha()),
                            format_sig17(claimed.beta()),
                            format_sig17(claimed.gamma()),
                            format_sig17(claimed_residual),
                        );
                    }
                }
            }
            Ok(text)
        }
    }
}

fn warn_mu_range(mu: f64) {
    if mu > -1.0 && mu <= 0.0 {
        eprintln!(
            "warning: mu = {mu} lies outside the positive-jump range the closed forms \
             are stated for (the mass stays positive down to mu > -1)"
        );
    }
}

fn run_scatter(
    action: ScatterAction,
    merged: &Merged,
    format: OutputFormat,
) -> Result<String, CliError> {
    match action {
        ScatterAction::Analytic { mu, a, k, mode } => {
            let mu = merged.f64_required(mu, "mu")?;
            let a = merged.f64_opt(a, "a")?.unwrap_or(0.0);
            let k = merged.f64_opt(k, "k")?.unwrap_or(1.0);
            let mode = merged.mode(mode)?;
            warn_mu_range(mu);
            let profile = MassProfile::heaviside_mu(mu)?;
            let u0 = profile.jump_coupling()?.u_at_zero;
            let amps = match mode {
                ModeArg::Paper => pointscatter::amplitudes_with_delta(a, u0, k)?,
                ModeArg::Pipeline => {
                    let interaction = pct::reduce_point_interaction(
                        &profile,
                        &ordering::preset("MM1_derived").expect("preset exists"),
                        CouplingMode::Pipeline,
                    )?;
                    pointscatter::amplitudes_from_coupling(
                        a,
                        interaction.delta_prime_coupling,
                        k,
                    )?
                }
            };
            if format == OutputFormat::Csv {
                let rows = [SweepRow {
                    sweep_value: mu,
                    u0,
                    amplitudes: amps,
                }];
                Ok(render_sweep_csv("mu", &rows))
            } else {
                let mode_name = match mode {
                    ModeArg::Paper => "paper",
                    ModeArg::Pipeline => "pipeline",
                };
                let mut text = format!("mode              = {mode_name}\n");
                text.push_str(&human_amplitude_block(
                    &[("mu", mu), ("u0", u0), ("a", a)],
                    &amps,
                ));
                Ok(text)
            }
        }
        ScatterAction::Oracle { u0, a, k } => {
            let u0 = merged.f64_required(u0, "u0")?;
            let a = merged.f64_required(a, "a")?;
            let k = merged.f64_required(k, "k")?;
            let amps = pointscatter::amplitudes_matching_oracle(a, u0 / 2.0, k)?;
            if format == OutputFormat::Csv {
                let rows = [SweepRow {
                    sweep_value: k,
                    u0,
                    amplitudes: amps,
                }];
                Ok(render_sweep_csv("k", &rows))
            } else {
                Ok(human_amplitude_block(
                    &[("u0", u0), ("a", a), ("b", u0 / 2.0)],
                    &amps,
                ))
            }
        }
        ScatterAction::Numeric {
            mu,
            epsilon,
            energy,
            segments,
            half_width,
        } => {
            let mu = merged.f64_required(mu, "mu")?;
            let epsilon = merged.f64_required(epsilon, "epsilon")?;
            let energy = merged.f64_required(energy, "energy")?;
            let segments = merged.usize_opt(segments, "segments")?;
            let half_width = merged.f64_opt(half_width, "half-width")?;
            warn_mu_range(mu);
            let profile = MassProfile::heaviside_mu(mu)?.regularize(Regularizer::Tanh, epsilon)?;
            let u0 = MassProfile::heaviside_mu(mu)?.jump_coupling()?.u_at_zero;
            let mut cfg = SolverConfig::for_regularization(epsilon);
            cfg.energy = energy;
            if let Some(n) = segments {
                cfg.segment_count = n;
            }
            if let Some(l) = half_width {
                cfg.domain_half_width = l;
            }
            let params = ordering::preset("BenDanielDuke").expect("preset exists");
            let amps = numeric::scatter_pdm_xspace(&profile, &params, &cfg)?;
            if format == OutputFormat::Csv {
                let rows = [SweepRow {
                    sweep_value: mu,
                    u0,
                    amplitudes: amps,
                }];
                Ok(render_sweep_csv("mu", &rows))
            } else {
                Ok(human_amplitude_block(
                    &[
                        ("mu", mu),
                        ("epsilon", epsilon),
                        ("energy", energy),
                        ("half_width", cfg.domain_half_width),
                        ("segments", cfg.segment_count as f64),
                        ("u0", u0),
                    ],
                    &amps,
                ))
            }
        }
    }
}

fn sweep_grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![from],
        _ => {
            let width = (to - from) / (steps - 1) as f64;
            (0..steps).map(|i| from + width * i as f64).collect()
        }
    }
}

fn run_sweep(action: SweepAction, merged: &Merged) -> Result<String, CliError> {
    match action {
        SweepAction::Mu { from, to, steps, a, k } => {
            let from = merged.f64_required(from, "from")?;
            let to = merged.f64_required(to, "to")?;
            let steps = merged.usize_required(steps, "steps")?;
            let a = merged.f64_opt(a, "a")?.unwrap_or(0.0);
            let k = merged.f64_opt(k, "k")?.unwrap_or(1.0);
            if from.min(to) <= -1.0 {
                return Err(CliError::Domain(format!(
                    "mu sweep range [{}, {}] leaves the positive-mass region (mu > -1)",
                    from.min(to),
                    from.max(to)
                )));
            }
            if from.min(to) <= 0.0 {
                warn_mu_range(from.min(to));
            }
            let mut rows = Vec::with_capacity(steps);
            for mu in sweep_grid(from, to, steps) {
                let u0 = MassProfile::heaviside_mu(mu)?.jump_coupling()?.u_at_zero;
                let amplitudes = pointscatter::amplitudes_with_delta(a, u0, k)?;
                rows.push(SweepRow {
                    sweep_value: mu,
                    u0,
                    amplitudes,
                });
            }
            Ok(render_sweep_csv("mu", &rows))
        }
        SweepAction::Epsilon {
            mu,
            from,
            to,
            steps,
            energy,
        } => {
            let mu = merged.f64_required(mu, "mu")?;
            let from = merged.f64_required(from, "from")?;
            let to = merged.f64_required(to, "to")?;
            let steps = merged.usize_required(steps, "steps")?;
            let energy = merged.f64_required(energy, "energy")?;
            if from.min(to) <= 0.0 {
                return Err(CliError::Domain(format!(
                    "epsilon sweep range [{}, {}] must stay positive",
                    from.min(to),
                    from.max(to)
                )));
            }
            warn_mu_range(mu);
            let base = MassProfile::heaviside_mu(mu)?;
            let u0 = base.jump_coupling()?.u_at_zero;
            let params = ordering::preset("BenDanielDuke").expect("preset exists");
            let mut rows = Vec::with_capacity(steps);
            for epsilon in sweep_grid(from, to, steps) {
                let profile = base.regularize(Regularizer::Tanh, epsilon)?;
                let mut cfg = SolverConfig::for_regularization(epsilon);
                cfg.energy = energy;
                let amplitudes = numeric::scatter_pdm_xspace(&profile, &params, &cfg)?;
                rows.push(SweepRow {
                    sweep_value: epsilon,
                    u0,
                    amplitudes,
                });
            }
            Ok(render_sweep_csv("epsilon", &rows))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig17_renders_expected_strings() {
        assert_eq!(format_sig17(4.0 / 9.0), "0.44444444444444442");
        assert_eq!(format_sig17(1.0), "1");
        assert_eq!(format_sig17(0.0), "0");
        assert_eq!(format_sig17(-0.0), "0");
        assert_eq!(format_sig17(0.5), "0.5");
        assert_eq!(format_sig17(-0.125), "-0.125");
        assert_eq!(format_sig17(123456.0), "123456");
        // 1e-5 is not exactly representable; all 17 digits are meaningful.
        assert_eq!(format_sig17(1e-5), "0.000010000000000000001");
        assert_eq!(format_sig17(2.0f64.powi(-17)), "0.00000762939453125");
        assert_eq!(format_sig17(1e20), "100000000000000000000");
    }

    #[test]
    fn sig17_round_trips_f64() {
        for &x in &[
            4.0 / 9.0,
            -36.0 / 85.0,
            77.0 / 85.0,
            1.0,
            0.0,
            1e-17,
            -2.5e13,
            f64::MIN_POSITIVE,
            std::f64::consts::PI,
        ] {
            let rendered = format_sig17(x);
            let parsed: f64 = rendered.parse().unwrap();
            assert_eq!(parsed, x, "{x} rendered as {rendered}");
        }
    }

    #[test]
    fn sweep_grid_shapes() {
        assert!(sweep_grid(0.0, 1.0, 0).is_empty());
        assert_eq!(sweep_grid(0.3, 1.0, 1), vec![0.3]);
        assert_eq!(sweep_grid(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn csv_header_and_unit_row() {
        let rows = [SweepRow {
            sweep_value: 0.0,
            u0: 0.0,
            amplitudes: pointscatter::amplitudes_pure_dprime(0.0),
        }];
        let text = render_sweep_csv("mu", &rows);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "mu,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect"
        );
        assert_eq!(lines.next().unwrap(), "0,0,0,0,1,0,0,1,0");
        assert!(text.ends_with('\n'));
    }
}

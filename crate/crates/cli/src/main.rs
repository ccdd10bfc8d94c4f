//! `diagcount` — count natural solutions of diagonal equations and
//! confront them with lower bounds and upper exponents.
//!
//! Exit codes: 0 success, 2 parse/validation error, 3 budget or overflow
//! guard, 4 no applicable rule. Reports go to a file or a single final
//! stdout write.

mod report;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use diagcount::{
    best_lower_bound, best_upper_exponent, count, count_representations, count_sweep, find_seed,
    parse_equation, BoundForm, Cube, DiagonalEquation, EngineConfig, EngineError, EquationError,
    ExponentBound, MethodChoice, UpperError,
};

use report::{
    render_bound_json, render_bound_text, render_count, render_reps, render_search, render_sweep,
    Direction, SweepFormat,
};

#[derive(Parser)]
#[command(
    name = "diagcount",
    version,
    about = "Exact solution counts and bounds for diagonal equations c1*x1^k + ... + cs*xs^k = 0"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the exact number of solutions in {1..N}^s
    Count(CountArgs),
    /// Compute a lower bound or an upper exponent for the count
    Bound(BoundArgs),
    /// Count over a range of box sides and emit a CSV/JSON table
    Sweep(SweepArgs),
    /// Find the least seed solution within a budgeted box
    Search(SearchArgs),
    /// Count ordered representations n = x1^k + ... + xs^k
    Reps(RepsArgs),
}

/// The equation is given either as text or as --coeffs/--degree flags.
#[derive(Args)]
struct EquationArgs {
    /// Equation text, e.g. "x1^2 + x2^2 - 4*x3^2 = 0"
    #[arg(value_name = "EQUATION")]
    equation: Option<String>,

    /// Comma-separated coefficients, e.g. 1,-1,1,-1
    #[arg(long, value_name = "C1,C2,...", allow_hyphen_values = true)]
    coeffs: Option<String>,

    /// Common degree k (used with --coeffs)
    #[arg(long, value_name = "K")]
    degree: Option<u32>,
}

#[derive(Args)]
struct RunArgs {
    /// Counting method
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,

    /// Worker threads (default: all available parallelism)
    #[arg(long, value_name = "W")]
    workers: Option<usize>,

    /// Histogram entry cap for the meet-in-the-middle counter
    #[arg(long, value_name = "ENTRIES", default_value_t = 100_000_000)]
    memory_cap: u128,

    /// Tuple evaluation budget for the brute-force counter
    #[arg(long, value_name = "TUPLES", default_value_t = 1_000_000_000)]
    eval_budget: u128,

    /// Box budget for seed search
    #[arg(long, value_name = "B", default_value_t = 200)]
    seed_budget: u64,

    /// Output format (text is the default; sweep defaults to csv)
    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    output: Option<String>,

    /// Omit timing fields (byte-deterministic output)
    #[arg(long)]
    no_timing: bool,
}

impl RunArgs {
    fn engine_config(&self) -> EngineConfig {
        EngineConfig {
            brute_budget: self.eval_budget,
            mem_cap: self.memory_cap,
            workers: self.workers,
        }
    }

    fn method_choice(&self) -> MethodChoice {
        match self.method {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Brute => MethodChoice::Brute,
            MethodArg::Mitm => MethodChoice::Mitm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Mitm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    equation: EquationArgs,
    /// Box side N
    #[arg(short = 'N', long = "side", value_name = "N")]
    n: u64,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct BoundArgs {
    /// Bound direction
    #[arg(value_enum)]
    direction: DirectionArg,
    #[command(flatten)]
    equation: EquationArgs,
    /// Box side N (required for lower bounds)
    #[arg(short = 'N', long = "side", value_name = "N")]
    n: Option<u64>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Lower,
    Upper,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    equation: EquationArgs,
    /// Box sides: a comma list (50,100,150) or a range start:stop:step
    #[arg(short = 'N', long = "sides", value_name = "SIDES")]
    sides: String,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    equation: EquationArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RepsArgs {
    /// Target value n
    n: u64,
    /// Number of terms s
    s: u32,
    /// Degree k
    k: u32,
    #[command(flatten)]
    run: RunArgs,
}

// ---------------------------------------------------------------------------
// Error-to-exit-code mapping
// ---------------------------------------------------------------------------

pub(crate) enum CliError {
    /// Bad input: exit 2
    Validation(String),
    /// Budget or overflow guard: exit 3
    Budget(String),
    /// No applicable rule: exit 4
    NoRule(String),
    /// I/O failure: exit 1
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Budget(_) => 3,
            CliError::NoRule(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Budget(m) | CliError::NoRule(m)
            | CliError::Io(m) => m,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Equation(inner) => CliError::Validation(inner.to_string()),
            EngineError::Sweep { ref source, .. } => match **source {
                EngineError::Equation(_) => CliError::Validation(e.to_string()),
                _ => CliError::Budget(e.to_string()),
            },
            other => CliError::Budget(other.to_string()),
        }
    }
}

impl From<EquationError> for CliError {
    fn from(e: EquationError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<UpperError> for CliError {
    fn from(e: UpperError) -> Self {
        CliError::NoRule(e.to_string())
    }
}

impl EquationArgs {
    fn resolve(&self) -> Result<DiagonalEquation, CliError> {
        match (&self.equation, &self.coeffs) {
            (Some(_), Some(_)) => Err(CliError::Validation(
                "give either an equation string or --coeffs, not both".into(),
            )),
            (Some(text), None) => {
                if self.degree.is_some() {
                    return Err(CliError::Validation(
                        "--degree only applies with --coeffs".into(),
                    ));
                }
                parse_equation(text).map_err(|e| CliError::Validation(e.to_string()))
            }
            (None, Some(list)) => {
                let degree = self.degree.ok_or_else(|| {
                    CliError::Validation("--coeffs requires --degree".into())
                })?;
                let coeffs: Result<Vec<i64>, _> = list
                    .split(',')
                    .map(|tok| tok.trim().parse::<i64>())
                    .collect();
                let coeffs = coeffs.map_err(|e| {
                    CliError::Validation(format!("bad coefficient in --coeffs: {e}"))
                })?;
                Ok(DiagonalEquation::new(coeffs, degree)?)
            }
            (None, None) => Err(CliError::Validation(
                "an equation is required: pass text or --coeffs with --degree".into(),
            )),
        }
    }
}

/// Parse `-N` for sweeps: either `a,b,c` or `start:stop:step` (stop
/// inclusive when aligned with the step).
fn parse_sides(text: &str) -> Result<Vec<u64>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Validation(format!(
                "range must be start:stop:step, got {text}"
            )));
        }
        let parse = |p: &str, what: &str| {
            p.trim().parse::<u64>().map_err(|e| {
                CliError::Validation(format!("bad {what} in range {text}: {e}"))
            })
        };
        let start = parse(parts[0], "start")?;
        let stop = parse(parts[1], "stop")?;
        let step = parse(parts[2], "step")?;
        if step == 0 {
            return Err(CliError::Validation("range step must be positive".into()));
        }
        Ok((start..=stop).step_by(step as usize).collect())
    } else {
        text.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim().parse::<u64>().map_err(|e| {
                    CliError::Validation(format!("bad side value {t:?}: {e}"))
                })
            })
            .collect()
    }
}

fn emit(run: &RunArgs, body: String) -> Result<(), CliError> {
    match &run.output {
        Some(path) => fs::write(path, body)
            .map_err(|e| CliError::Io(format!("cannot write {path}: {e}"))),
        None => {
            // single final stdout write
            print!("{body}");
            Ok(())
        }
    }
}

/// Upper exponent for an equation: the moment rules when it is an
/// alternating +-1 form, with the circle-method regime as fallback.
pub(crate) fn upper_exponent_for(eq: &DiagonalEquation) -> Result<ExponentBound, UpperError> {
    let eq = eq.normalize();
    let general = || best_upper_exponent(eq.s() as u64, eq.degree(), BoundForm::General);
    match diagcount::alternating_moment_order(&eq) {
        Some(v) => best_upper_exponent(v, eq.degree(), BoundForm::AlternatingMoment)
            .or_else(|_| general()),
        None => general(),
    }
}

fn run_count(args: CountArgs) -> Result<(), CliError> {
    let eq = args.equation.resolve()?;
    let cube = Cube::new(args.n)?;
    let result = count(&eq, cube, args.run.method_choice(), &args.run.engine_config())?;
    let body = render_count(
        &eq,
        &result,
        args.run.no_timing,
        args.run.format.unwrap_or(FormatArg::Text) == FormatArg::Json,
    );
    emit(&args.run, body)
}

fn run_bound(args: BoundArgs) -> Result<(), CliError> {
    let eq = args.equation.resolve()?.normalize();
    let json = args.run.format.unwrap_or(FormatArg::Text) == FormatArg::Json;
    match args.direction {
        DirectionArg::Lower => {
            let n = args.n.ok_or_else(|| {
                CliError::Validation("lower bounds need a box side: pass -N".into())
            })?;
            let bound = best_lower_bound(&eq, n, args.run.seed_budget, &args.run.engine_config());
            let body = if json {
                render_bound_json(&eq, Some(n), Direction::Lower, &bound, None)
            } else {
                render_bound_text(&bound, None)
            };
            emit(&args.run, body)
        }
        DirectionArg::Upper => {
            let exponent = upper_exponent_for(&eq)?;
            let body = if json {
                render_bound_json(&eq, args.n, Direction::Upper, &empty_lower(), Some(&exponent))
            } else {
                render_bound_text(&empty_lower(), Some(&exponent))
            };
            emit(&args.run, body)
        }
    }
}

// placeholder used only to keep one bound-report renderer
fn empty_lower() -> diagcount::LowerBound {
    diagcount::LowerBound {
        value: Default::default(),
        rule: diagcount::Rule::Grouping,
        trace: Vec::new(),
        diagnosis: None,
    }
}

fn run_sweep(args: SweepArgs) -> Result<(), CliError> {
    let eq = args.equation.resolve()?;
    let sides = parse_sides(&args.sides)?;
    let cfg = args.run.engine_config();
    let points = count_sweep(&eq, &sides, args.run.method_choice(), &cfg)?;
    let lower: Vec<diagcount::LowerBound> = points
        .iter()
        .map(|p| best_lower_bound(&eq, p.n, args.run.seed_budget, &cfg))
        .collect();
    let upper = upper_exponent_for(&eq).ok();
    let format = match args.run.format.unwrap_or(FormatArg::Csv) {
        FormatArg::Json => SweepFormat::Json,
        _ => SweepFormat::Csv,
    };
    let body = render_sweep(&eq, &points, &lower, upper.as_ref(), args.run.no_timing, format);
    emit(&args.run, body)
}

fn run_search(args: SearchArgs) -> Result<(), CliError> {
    let eq = args.equation.resolve()?;
    let budget = args.run.seed_budget;
    let seed = find_seed(&eq, budget, &args.run.engine_config())?;
    let body = render_search(
        &eq,
        budget,
        seed.as_ref(),
        args.run.format.unwrap_or(FormatArg::Text) == FormatArg::Json,
    );
    emit(&args.run, body)
}

fn run_reps(args: RepsArgs) -> Result<(), CliError> {
    let rep = count_representations(args.n, args.s, args.k, &args.run.engine_config())?;
    let body = render_reps(
        &rep,
        args.run.format.unwrap_or(FormatArg::Text) == FormatArg::Json,
    );
    emit(&args.run, body)
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count(args) => run_count(args),
        Command::Bound(args) => run_bound(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Search(args) => run_search(args),
        Command::Reps(args) => run_reps(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

//! The `gately` command line tool.
//!
//! Exit codes: 0 when the question was answered (including degenerate
//! statuses such as `UndefinedEqualPropensityMinusOne`), 2 for unreadable or
//! malformed input, 3 when the input violates a command's precondition, 4 for
//! internal errors.

pub mod report;

use std::fs;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gately_core::cost::{aca_allocation, savings_game, AcaStatus};
use gately_core::format::{serialize_game, serialize_tu_game};
use gately_core::gately::{equal_propensity, gately_point, propensity_to_disrupt, utopia_payoffs, GatelyStatus};
use gately_core::oracle::grid_minmax_propensity;
use gately_core::properties::classify;
use gately_core::tau::{minimal_rights, tau_value, TauStatus};
use gately_core::transforms::{zero_normalize, zero_one_normalize};
use gately_core::{parse_game, Allocation, CostGame, ParsedGame, Rational, TuGame};
use sha2::{Digest, Sha256};

pub use report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Input = 2,
    Precondition = 3,
    Internal = 4,
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: ExitCode::Input, message: message.into() }
    }

    fn precondition(message: impl Into<String>) -> Self {
        CliError { code: ExitCode::Precondition, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizeMode {
    Zero,
    ZeroOne,
}

#[derive(Debug, Parser)]
#[command(name = "gately", version, about = "Gately point, tau-value and ACA cost allocation over exact rationals")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classification flags of a TU game.
    Props { file: PathBuf },
    /// Gately point with its uniqueness status.
    Gately { file: PathBuf },
    /// Equal propensity to disrupt d*.
    Dstar { file: PathBuf },
    /// Propensity to disrupt of every player at an allocation.
    Propensity {
        file: PathBuf,
        /// Comma-separated payoffs, e.g. 23/6,29/6,35/6
        #[arg(long)]
        allocation: String,
    },
    /// Tau-value.
    Tau { file: PathBuf },
    /// Minimal-rights vector.
    MinimalRights { file: PathBuf },
    /// ACA allocation of a cost game.
    Aca { file: PathBuf },
    /// Savings game of a cost game.
    Savings { file: PathBuf },
    /// 0- or 0-1-normalization of a TU game.
    Normalize {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: NormalizeMode,
    },
    /// Brute-force cross-checks.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Grid search for the minimal largest propensity to disrupt.
    Minmax {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        resolution: u32,
    },
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { ExitCode::Input } else { ExitCode::Ok };
            let rendered = err.render().to_string();
            let _ = if err.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code as i32;
        }
    };
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| execute(&cli.command)));
    let report = match outcome {
        Ok(Ok(report)) => report,
        Ok(Err(err)) => {
            let _ = writeln!(stderr, "error: {}", err.message);
            return err.code as i32;
        }
        Err(_) => {
            let _ = writeln!(stderr, "error: internal failure");
            return ExitCode::Internal as i32;
        }
    };
    let rendered = match cli.format {
        OutputFormat::Text => report.render_text(),
        OutputFormat::Structured => report.render_structured(),
    };
    match &cli.output {
        Some(path) => {
            if let Err(err) = fs::write(path, rendered) {
                let _ = writeln!(stderr, "error: cannot write {}: {err}", path.display());
                return ExitCode::Input as i32;
            }
        }
        None => {
            if stdout.write_all(rendered.as_bytes()).is_err() {
                return ExitCode::Internal as i32;
            }
        }
    }
    ExitCode::Ok as i32
}

struct Loaded {
    game: ParsedGame,
    digest: String,
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|err| CliError::input(format!("cannot read {}: {err}", path.display())))?;
    let game = parse_game(&text).map_err(|err| CliError::input(format!("{}: {err}", path.display())))?;
    let digest = hex::encode(Sha256::digest(serialize_game(&game).as_bytes()));
    Ok(Loaded { game, digest })
}

fn load_tu(path: &Path) -> Result<(TuGame, String), CliError> {
    let loaded = load(path)?;
    match loaded.game {
        ParsedGame::Tu(g) => Ok((g, loaded.digest)),
        ParsedGame::Cost(_) => Err(CliError::input(format!(
            "{}: expected a game of kind \"tu\"; use `savings` to turn a cost game into its savings game",
            path.display()
        ))),
    }
}

fn load_cost(path: &Path) -> Result<(CostGame, String), CliError> {
    let loaded = load(path)?;
    match loaded.game {
        ParsedGame::Cost(g) => Ok((g, loaded.digest)),
        ParsedGame::Tu(_) => {
            Err(CliError::input(format!("{}: expected a game of kind \"cost\"", path.display())))
        }
    }
}

fn parse_allocation(text: &str, n: usize) -> Result<Allocation, CliError> {
    let payoffs = text
        .split(',')
        .map(|token| {
            token
                .trim()
                .parse::<Rational>()
                .map_err(|err| CliError::input(format!("bad allocation entry `{}`: {err}", token.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if payoffs.len() != n {
        return Err(CliError::input(format!(
            "allocation has {} entries but the game has {n} players",
            payoffs.len()
        )));
    }
    Ok(Allocation::new(payoffs))
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Props { file } => props(file),
        Command::Gately { file } => gately(file),
        Command::Dstar { file } => dstar(file),
        Command::Propensity { file, allocation } => propensity(file, allocation),
        Command::Tau { file } => tau(file),
        Command::MinimalRights { file } => minimal_rights_cmd(file),
        Command::Aca { file } => aca(file),
        Command::Savings { file } => savings(file),
        Command::Normalize { file, mode } => normalize(file, *mode),
        Command::Oracle(OracleCommand::Minmax { file, resolution }) => oracle_minmax(file, *resolution),
    }
}

fn props(file: &Path) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let mut report = Report::new("props", digest, "Classified");
    for (name, value) in classify(&game).flags() {
        report.flag(name, value);
    }
    Ok(report)
}

fn gately(file: &Path) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let result = gately_point(&game);
    let mut report = Report::new("gately", digest, result.status.as_str());
    if let Some(point) = &result.point {
        report.vector("x", point.as_slice());
    }
    if let Some(d) = &result.d_star {
        report.scalar("d_star", d.clone());
    }
    if let Some(t) = &result.line_parameter {
        report.scalar("t", t.clone());
    }
    match result.status {
        GatelyStatus::UniqueImputation => {}
        GatelyStatus::InessentialBoundary => {
            report.message("inessential game: the only imputation is (v_1, ..., v_n), returned as the Gately point");
        }
        GatelyStatus::UndefinedEqualPropensityMinusOne => {
            report.message(
                "equal propensity to disrupt d* = -1 (sum of M_i equals sum of v_i): every imputation \
                 has the same propensity to disrupt, so the Gately point is not unique",
            );
            if classify(&game).weakly_constant_sum {
                report.message("the game is weakly constant-sum: v_i = M_i for every player");
            }
        }
        GatelyStatus::OutsideImputationSet => {
            let point = result.point.as_ref().expect("point present");
            let below: Vec<String> = (1..=game.n())
                .filter(|&i| point.payoff(i) < game.singleton(i))
                .map(|i| i.to_string())
                .collect();
            report.message(format!(
                "the efficient point on the line from v to M is not individually rational for player(s) {}",
                below.join(", ")
            ));
        }
        GatelyStatus::NotEssential => {
            report.message("game is neither essential nor inessential: sum of v_i >= v(N); no Gately point");
        }
    }
    Ok(report)
}

fn dstar(file: &Path) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let d = equal_propensity(&game).map_err(|err| CliError::precondition(err.to_string()))?;
    let mut report = Report::new("dstar", digest, "Computed");
    if d == Rational::from(-1) {
        report.message("d* = -1: the Gately point is not unique");
    }
    report.scalar("d_star", d);
    Ok(report)
}

fn propensity(file: &Path, allocation: &str) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let x = parse_allocation(allocation, game.n())?;
    let d = (1..=game.n())
        .map(|i| propensity_to_disrupt(&game, &x, i))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|err| CliError::precondition(err.to_string()))?;
    let mut report = Report::new("propensity", digest, "Computed");
    report.vector("x", x.as_slice()).vector("d", &d);
    Ok(report)
}

fn tau(file: &Path) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let result = tau_value(&game);
    let mut report = Report::new("tau", digest, result.status.as_str());
    report
        .vector("m", result.minimal_rights.as_slice())
        .vector("M", result.utopia.as_slice());
    if let Some(point) = &result.point {
        report.vector("tau", point.as_slice());
    }
    if let Some(alpha) = &result.alpha {
        report.scalar("alpha", alpha.clone());
    }
    match result.status {
        TauStatus::Unique => {}
        TauStatus::DegenerateEndpoints => {
            report.message("minimal rights and utopia payoffs coincide; the tau-value is M");
        }
        TauStatus::NotQuasibalanced => {
            report.message("game is not quasibalanced; the tau-value is not defined");
        }
    }
    Ok(report)
}

fn minimal_rights_cmd(file: &Path) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let mut report = Report::new("minimal-rights", digest, "Computed");
    report
        .vector("m", minimal_rights(&game).as_slice())
        .vector("M", utopia_payoffs(&game).as_slice());
    Ok(report)
}

fn aca(file: &Path) -> Result<Report, CliError> {
    let (cost, digest) = load_cost(file)?;
    let result = aca_allocation(&cost);
    let mut report = Report::new("aca", digest, result.status.as_str());
    report.vector("SC", &result.separable);
    if let Some(y) = &result.allocation {
        report.vector("y", y.as_slice());
    }
    report.scalar("NSC", result.nsc.clone());
    match result.status {
        AcaStatus::Allocated => {}
        AcaStatus::AllocatedNegativeNSC => {
            report.message("nonseparable cost is negative; ACA is normally not applied in this case");
        }
        AcaStatus::UndefinedZeroDenominator => {
            report.message(
                "sum of (c_i - SC_i) is zero: ACA cannot share the nonseparable cost and no unique \
                 allocation exists",
            );
        }
    }
    Ok(report)
}

fn savings(file: &Path) -> Result<Report, CliError> {
    let (cost, digest) = load_cost(file)?;
    let mut report = Report::new("savings", digest, "Computed");
    report.game = Some(serialize_tu_game(&savings_game(&cost)));
    Ok(report)
}

fn normalize(file: &Path, mode: NormalizeMode) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let normalized = match mode {
        NormalizeMode::Zero => zero_normalize(&game),
        NormalizeMode::ZeroOne => {
            zero_one_normalize(&game).map_err(|err| CliError::precondition(err.to_string()))?
        }
    };
    let mut report = Report::new("normalize", digest, "Computed");
    report.game = Some(serialize_tu_game(&normalized));
    Ok(report)
}

fn oracle_minmax(file: &Path, resolution: u32) -> Result<Report, CliError> {
    let (game, digest) = load_tu(file)?;
    let grid = grid_minmax_propensity(&game, resolution)
        .map_err(|err| CliError::precondition(err.to_string()))?;
    let mut report = Report::new("oracle minmax", digest, "Computed");
    report
        .vector("best_point", grid.best_point.as_slice())
        .scalar("best_minmax", grid.best_minmax)
        .scalar("resolution", Rational::from(resolution as i64));
    if let Ok(d) = equal_propensity(&game) {
        report.scalar("d_star", d);
    }
    Ok(report)
}

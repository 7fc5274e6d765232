use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "zetasums",
    version,
    about = "Evaluate and cross-check sums of Hurwitz zeta values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one sum.
    Eval(EvalArgs),
    /// Check identities against direct summation.
    IdentityCheck(IdentityArgs),
    /// Compare direct and transformed evaluation of sum_k zeta(s, ka+b).
    Benchmark(BenchmarkArgs),
    /// Emit an identity sweep or a coefficient table.
    Table(TableArgs),
}

#[derive(Args, Debug, Clone)]
struct SumArgs {
    /// Exponent s.
    #[arg(long)]
    s: Option<f64>,
    /// Moment power m.
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    /// Exponential weight c.
    #[arg(long, default_value_t = 0.0)]
    c: f64,
    /// plus or minus.
    #[arg(long, default_value = "plus", allow_hyphen_values = true)]
    sign: String,
    /// Absolute tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MethodArg {
    Auto,
    Direct,
    Closed,
    Transformed,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TailArg {
    Auto,
    Truncate,
    EulerMaclaurin,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Sum family, e.g. kappa, moment, general-ab, exp-weighted.
    #[arg(long)]
    family: String,
    #[command(flatten)]
    sum: SumArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Tail handling for summed series.
    #[arg(long, value_enum, default_value_t = TailArg::Auto)]
    tail: TailArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum GridArg {
    /// The built-in sweep for each identity.
    Default,
}

#[derive(Args, Debug)]
struct IdentityArgs {
    /// Catalog key (2.1, 2.2, 2.3, 2.4, 3.1, 3.2, 3.3, 3.7, 3.8, even-m1,
    /// even-m2, 4.2, 4.3, 4.4, corollary) or `all`.
    name: String,
    /// Sweep the default grid instead of the point given by the flags.
    #[arg(long, value_enum)]
    grid: Option<GridArg>,
    #[command(flatten)]
    sum: SumArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct BenchmarkArgs {
    #[arg(long, default_value_t = 4.0)]
    s: f64,
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Comma-separated values of a.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.01")]
    a_list: Vec<f64>,
    /// Tail handling on both sides.
    #[arg(long, value_enum, default_value_t = TailArg::Truncate)]
    tail: TailArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CoefficientTable {
    Eulerian,
    Faulhaber,
    Bernoulli,
    ClosedForms,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Identity to sweep.
    #[arg(long, conflicts_with = "family")]
    identity: Option<String>,
    /// Grid over s as start:stop:step.
    #[arg(long, conflicts_with = "c_grid")]
    s_grid: Option<String>,
    /// Grid over c as start:stop:step.
    #[arg(long)]
    c_grid: Option<String>,
    /// Coefficient table to emit.
    #[arg(long, value_enum)]
    family: Option<CoefficientTable>,
    /// Largest m (or Bernoulli index) in a coefficient table.
    #[arg(long, default_value_t = 6)]
    m_max: u32,
    #[command(flatten)]
    sum: SumArgs,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => commands::eval(args),
        Command::IdentityCheck(args) => commands::identity_check(args),
        Command::Benchmark(args) => commands::benchmark(args),
        Command::Table(args) => commands::table(args),
    };
    match result {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

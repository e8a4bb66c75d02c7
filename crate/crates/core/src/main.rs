use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use setvec::cli::{
    apply_overrides, builtin, emit_problem, parse_problem, run, Against, Command, Emit, Overrides,
    Problem, RunOptions, BUILTIN_NAMES,
};
use setvec::set_orders::SolveMethod;
use setvec::{Error, Sense};

/// Set optimization through Gerstewitz vectorization.
#[derive(Parser)]
#[command(name = "setvec", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the family problem.
    Solve(Common),
    /// Print the v-table, or the w-table against one member.
    Scalarize(Common),
    /// Compare two members under every relation.
    Relate(Common),
    /// Scalarize as CSV.
    Table(Common),
    /// Print the canonical form of a problem.
    Show(Source),
    /// List built-in problems.
    Builtins,
}

#[derive(Args)]
struct Source {
    /// Problem file (JSON).
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    file: Option<PathBuf>,
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t = MethodArg::Pairwise)]
    method: MethodArg,
    #[arg(long)]
    weak: bool,
    #[arg(long, value_enum)]
    sense: Option<SenseArg>,
    /// Direction as comma-separated coordinates, e.g. `-1,-1`.
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true, value_delimiter = ',')]
    e: Option<Vec<f64>>,
    #[arg(long, value_name = "N")]
    samples: Option<usize>,
    #[arg(long, value_enum, default_value_t = EmitArg::Text)]
    emit: EmitArg,
    #[arg(long, value_name = "T")]
    tolerance: Option<f64>,
    /// `origin` or a member id.
    #[arg(long, default_value = "origin")]
    against: Against,
    /// Two member ids, e.g. `0,0.5`.
    #[arg(long, value_name = "A,B")]
    pair: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Pairwise,
    VopW,
    VopV,
}

#[derive(Clone, Copy, ValueEnum)]
enum SenseArg {
    Min,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Text,
    Csv,
}

fn load(source: &Source) -> setvec::Result<Problem> {
    match (&source.builtin, &source.file) {
        (Some(name), _) => builtin(name),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|err| Error::Parse {
                    at: path.display().to_string(),
                    message: err.to_string(),
                })?;
            parse_problem(&text)
        }
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn execute(command: Command, args: &Common) -> setvec::Result<String> {
    let mut problem = load(&args.source)?;
    apply_overrides(
        &mut problem,
        &Overrides {
            weak: args.weak,
            sense: args.sense.map(|s| match s {
                SenseArg::Min => Sense::Min,
                SenseArg::Max => Sense::Max,
            }),
            e: args.e.clone(),
            samples: args.samples,
        },
    )?;
    let pair = match &args.pair {
        None => None,
        Some(text) => match text.split_once(',') {
            Some((a, b)) => Some((a.to_string(), b.to_string())),
            None => {
                return Err(Error::Parse {
                    at: "--pair".into(),
                    message: "expected two ids separated by a comma".into(),
                })
            }
        },
    };
    let opts = RunOptions {
        method: match args.method {
            MethodArg::Pairwise => SolveMethod::Pairwise,
            MethodArg::VopW => SolveMethod::VopW,
            MethodArg::VopV => SolveMethod::VopV,
        },
        emit: match args.emit {
            EmitArg::Text => Emit::Text,
            EmitArg::Csv => Emit::Csv,
        },
        tolerance: args.tolerance,
        against: args.against.clone(),
        pair,
    };
    run(&problem, command, &opts)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Cmd::Solve(args) => execute(Command::Solve, args),
        Cmd::Scalarize(args) => execute(Command::Scalarize, args),
        Cmd::Relate(args) => execute(Command::Relate, args),
        Cmd::Table(args) => execute(Command::Table, args),
        Cmd::Show(source) => load(source).map(|p| emit_problem(&p) + "\n"),
        Cmd::Builtins => Ok(BUILTIN_NAMES.join("\n") + "\n"),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(if err.is_precondition() { 3 } else { 2 })
        }
    }
}

//! Command-line front end: solve an instance, cross-check it against the
//! exhaustive oracle, list partitions, or evaluate one diagram.

use clap::{Args, Parser, Subcommand, ValueEnum};

use young_opt::funcspec::table_from_spec;
use young_opt::oracle::{
    brute_force_solve_with_limit, enumerate_partitions_with_limit, DEFAULT_ORACLE_LIMIT,
};
use young_opt::solver::{solve, solve_for_type};
use young_opt::{objective, Error, FuncTable, OutputRecord, Partition, SolveResult};

/// Minimize f(λ) + f*(λ*) over Young diagrams λ with n cells.
#[derive(Parser)]
#[command(name = "young-opt", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find the minimizing diagram with the layered shortest-path sweep
    Solve(SolveArgs),
    /// Minimize by exhaustive enumeration; optionally cross-check the solver
    Oracle(OracleArgs),
    /// List the partitions of n in decreasing lexicographic order
    Enumerate(EnumerateArgs),
    /// Evaluate the objective of one given partition
    Eval(EvalArgs),
}

#[derive(Args)]
struct Instance {
    /// Number of diagram cells
    #[arg(long)]
    n: u32,
    /// Row-value function: square | identity | zero | expr:<e> | table:<path>
    #[arg(long)]
    f: String,
    /// Column-value function, same forms as --f
    #[arg(long)]
    fstar: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: Instance,
    /// Restrict to diagrams with exactly this many distinct part values
    #[arg(long = "type")]
    type_filter: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    instance: Instance,
    /// Restrict to diagrams with exactly this many distinct part values
    #[arg(long = "type")]
    type_filter: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Also run the solver and fail on any disagreement
    #[arg(long)]
    verify: bool,
    /// Largest n the enumeration will accept
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: u32,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of diagram cells
    #[arg(long)]
    n: u32,
    /// Keep only partitions with exactly this many distinct part values
    #[arg(long = "type")]
    type_filter: Option<u32>,
    /// Print how many partitions there are instead of listing them
    #[arg(long)]
    count: bool,
    /// Largest n the enumeration will accept
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: u32,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    instance: Instance,
    /// The partition to evaluate, as comma-separated parts, e.g. 3,2,1
    #[arg(long)]
    partition: String,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Internal(_) => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> young_opt::Result<i32> {
    match cli.cmd {
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Oracle(args) => cmd_oracle(args),
        Cmd::Enumerate(args) => cmd_enumerate(args),
        Cmd::Eval(args) => cmd_eval(args),
    }
}

fn load_tables(instance: &Instance) -> young_opt::Result<(FuncTable, FuncTable)> {
    if instance.n < 1 {
        return Err(Error::BadArgument("n must be at least 1".into()));
    }
    let f = table_from_spec(&instance.f, instance.n)?;
    let fstar = table_from_spec(&instance.fstar, instance.n)?;
    Ok((f, fstar))
}

fn emit(n: u32, result: &SolveResult, engine: &str, format: Format) {
    match format {
        Format::Text => {
            println!("partition: {}", result.partition);
            println!("conjugate: {}", result.conjugate);
            println!("type: {}", result.k);
            println!("value: {}", result.value);
            println!("{}", result.partition.render());
        }
        Format::Json => {
            let record = OutputRecord::new(n, result, engine);
            println!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
    }
}

fn report_infeasible(n: u32, k: u32) -> i32 {
    eprintln!("no diagram of size {} has type {}", n, k);
    1
}

fn cmd_solve(args: SolveArgs) -> young_opt::Result<i32> {
    let n = args.instance.n;
    let (f, fstar) = load_tables(&args.instance)?;
    let result = match args.type_filter {
        Some(k) => match solve_for_type(n, k, &f, &fstar)? {
            Some(r) => r,
            None => return Ok(report_infeasible(n, k)),
        },
        None => solve(n, &f, &fstar)?,
    };
    emit(n, &result, "dp", args.format);
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> young_opt::Result<i32> {
    let n = args.instance.n;
    let (f, fstar) = load_tables(&args.instance)?;
    let oracle =
        brute_force_solve_with_limit(n, &f, &fstar, args.type_filter, args.oracle_limit)?;
    if args.verify {
        let dp = match args.type_filter {
            Some(k) => solve_for_type(n, k, &f, &fstar)?,
            None => Some(solve(n, &f, &fstar)?),
        };
        match (&oracle, &dp) {
            (Some(o), Some(d)) => {
                if o.value != d.value || o.partition != d.partition {
                    eprintln!(
                        "verify mismatch: oracle found {} (value {}), solver found {} (value {})",
                        o.partition, o.value, d.partition, d.value
                    );
                    return Ok(3);
                }
            }
            (None, None) => {}
            (o, d) => {
                eprintln!(
                    "verify mismatch: oracle feasible = {}, solver feasible = {}",
                    o.is_some(),
                    d.is_some()
                );
                return Ok(3);
            }
        }
    }
    match oracle {
        Some(result) => {
            emit(n, &result, "oracle", args.format);
            Ok(0)
        }
        None => Ok(report_infeasible(n, args.type_filter.unwrap_or(0))),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> young_opt::Result<i32> {
    if args.type_filter == Some(0) {
        return Err(Error::BadArgument("type must be at least 1".into()));
    }
    let iter = enumerate_partitions_with_limit(args.n, args.oracle_limit)?;
    let mut count = 0u64;
    for p in iter {
        if let Some(k) = args.type_filter {
            if p.type_of() != k {
                continue;
            }
        }
        if args.count {
            count += 1;
        } else {
            println!("{}", p);
        }
    }
    if args.count {
        println!("{}", count);
    }
    Ok(0)
}

fn cmd_eval(args: EvalArgs) -> young_opt::Result<i32> {
    let n = args.instance.n;
    let partition: Partition = args.partition.parse()?;
    if partition.n() != n {
        return Err(Error::BadArgument(format!(
            "partition sums to {} but n = {}",
            partition.n(),
            n
        )));
    }
    let (f, fstar) = load_tables(&args.instance)?;
    println!("{}", objective(&partition, &f, &fstar)?);
    Ok(0)
}

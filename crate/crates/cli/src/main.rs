use std::fs;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::Value;

use lacune::commands::COMMANDS;
use lacune::job::{parse_batch, parse_job, Input};
use lacune::{batch_status, execute, run_batch, CliError, Format, JobSpec, Report};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

/// Dimension bounds for symmetries and integrals, in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "lacune", version)]
struct Args {
    /// symbol, tanaka, flag, symcheck, polysym, killing, liealg, gap-report or batch
    command: String,
    /// preset such as `free235`, `flat(3)`, `w7(m)`
    preset: Option<String>,
    /// JSON job file (a list of jobs for `batch`)
    #[arg(long)]
    input: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    cap: Option<u32>,
    #[arg(long)]
    extra_orders: Option<usize>,
    /// name=value, value a rational like 1/3
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// expected primary value; a JSON literal or a bare string
    #[arg(long)]
    expect: Option<String>,
    /// momentum degree for `killing`
    #[arg(long)]
    d: Option<u32>,
    /// field list for `symcheck`
    #[arg(long)]
    fields: Option<String>,
    /// cohomology degrees for `liealg`, comma separated
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// run the symbolic invariant checks (`liealg`)
    #[arg(long)]
    invariants: bool,
    /// largest n for `gap-report`
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|err| CliError::Io { path: path.to_string(), err })
}

/// Command-line values override the file.
fn merge(args: &Args, mut job: JobSpec) -> Result<JobSpec, CliError> {
    match &job.command {
        Some(c) if c != &args.command => {
            return Err(CliError::Usage(format!("input file is a `{c}` job, not `{}`", args.command)));
        }
        _ => job.command = Some(args.command.clone()),
    }
    if let Some(p) = &args.preset {
        job.input = Some(Input::Preset(p.clone()));
    }
    let o = &mut job.options;
    o.seed = args.seed.or(o.seed);
    o.cap = args.cap.or(o.cap);
    o.extra_orders = args.extra_orders.or(o.extra_orders);
    o.d = args.d.or(o.d);
    o.max_n = args.max_n.or(o.max_n);
    o.invariants |= args.invariants;
    if let Some(d) = &args.degrees {
        o.degrees = Some(d.clone());
    }
    if let Some(f) = &args.fields {
        o.fields = Some(lacune::job::Fields::Preset(f.clone()));
    }
    for p in &args.params {
        let (k, v) = p.split_once('=').ok_or_else(|| CliError::Usage(format!("--param `{p}` is not name=value")))?;
        o.params.insert(k.trim().to_string(), v.trim().to_string());
    }
    if let Some(e) = &args.expect {
        o.expect = Some(serde_json::from_str(e).unwrap_or_else(|_| Value::String(e.clone())));
    }
    Ok(job)
}

fn render(r: &Report, f: Format) -> String {
    match f {
        Format::Machine => r.machine(),
        Format::Text => r.text(),
    }
}

fn main_inner(args: Args) -> Result<i32, CliError> {
    let format = match args.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Machine => Format::Machine,
    };
    if args.command == "batch" {
        let path = args.input.as_deref().ok_or_else(|| CliError::Usage("batch needs --input FILE".into()))?;
        let mut jobs = parse_batch(&read(path)?, path)?;
        for j in &mut jobs {
            j.options.seed = args.seed.or(j.options.seed);
        }
        let reports = run_batch(&jobs, format);
        match format {
            Format::Machine => {
                let all: Vec<Value> = reports.iter().map(|r| serde_json::from_str(&r.machine()).expect("report JSON")).collect();
                println!("{}", serde_json::to_string_pretty(&all).expect("report JSON"));
            }
            Format::Text => {
                let parts: Vec<String> = reports.iter().map(|r| render(r, format)).collect();
                print!("{}", parts.join("\n"));
            }
        }
        return Ok(batch_status(&reports).exit_code());
    }
    if !COMMANDS.contains(&args.command.as_str()) {
        return Err(CliError::Usage(format!("unknown command `{}`; expected one of {} or batch", args.command, COMMANDS.join(", "))));
    }
    let base = match &args.input {
        Some(path) => parse_job(&read(path)?, path)?,
        None => JobSpec::default(),
    };
    let job = merge(&args, base)?;
    let report = execute(&job, format)?;
    print!("{}", render(&report, format));
    Ok(report.status.exit_code())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match main_inner(args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

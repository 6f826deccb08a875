use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use relideal_cli::job::{parse_int_list, read, read_basis_lines, Generator, GroupSpec, Int, JobSpec};
use relideal_cli::{commands, CliError, Format, Output, EXIT_ERROR, EXIT_FAILED};

#[derive(Parser, Debug)]
#[command(name = "relideal", version, about = "Triangular Groebner bases of relation ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for the coset sums.
    #[arg(long, global = true, env = "RELIDEAL_THREADS")]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct JobArgs {
    /// JSON job file; the other flags override its fields.
    #[arg(long)]
    job: Option<PathBuf>,
    /// The polynomial f, e.g. "Z^5 - Z^4 - 4*Z^3 + 3*Z^2 + 3*Z - 1".
    #[arg(long = "f")]
    f: Option<String>,
    /// Group descriptor: a JSON file or inline JSON `{"n": 5, "generators": ["(1 2 3 4 5)"]}`.
    #[arg(long)]
    group: Option<String>,
    /// Generators in cycle notation, acting on 1..deg f (repeatable).
    #[arg(long = "generator")]
    generators: Vec<String>,
    #[arg(long)]
    prime: Option<String>,
    /// p-adic precision exponent; must be at least the required one.
    #[arg(long)]
    precision: Option<u32>,
    /// Root residues modulo p in labelling order, e.g. "19,9,13,17,12".
    #[arg(long)]
    labeling: Option<String>,
    /// Basis file: one polynomial per line, or JSON with a `basis` array.
    #[arg(long)]
    basis: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute and verify the basis of the relation ideal.
    Compute(JobArgs),
    /// Check a given basis.
    Verify(JobArgs),
    /// Buchberger-Moeller on a JSON point set.
    Bm {
        /// `{"prime": 5, "points": [[0, 0], [1, 1]]}`; omit `prime` for the rationals.
        points: PathBuf,
    },
    /// Normal form of a polynomial modulo the basis.
    Reduce {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        element: String,
    },
    /// Inverse in the splitting field.
    Inv {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        element: String,
    },
    /// Roots as polynomials in the earlier roots.
    Express {
        #[command(flatten)]
        job: JobArgs,
        /// One-based index; all indices when omitted.
        #[arg(long)]
        index: Option<usize>,
    },
}

fn job_from(a: &JobArgs) -> Result<JobSpec, CliError> {
    let mut job = match &a.job {
        Some(p) => JobSpec::load(p)?,
        None => JobSpec::default(),
    };
    if let Some(f) = &a.f {
        job.f = Some(f.clone());
    }
    if let Some(g) = &a.group {
        let text = if g.trim_start().starts_with('{') { g.clone() } else { read(&PathBuf::from(g))? };
        job.group = Some(serde_json::from_str(&text).map_err(|e| CliError::input(format!("group: {}", e)))?);
    }
    if !a.generators.is_empty() {
        let n = job.f()?.degree().unwrap_or(0);
        job.group = Some(GroupSpec { n, generators: a.generators.iter().cloned().map(Generator::Cycles).collect() });
    }
    if let Some(p) = &a.prime {
        job.prime = Some(Int::Big(p.clone()));
    }
    if a.precision.is_some() {
        job.precision = a.precision;
    }
    if let Some(l) = &a.labeling {
        job.labeling = Some(parse_int_list(l)?);
    }
    if let Some(b) = &a.basis {
        job.basis = Some(read_basis_lines(b)?);
    }
    Ok(job)
}

fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Compute(a) => {
            let job = job_from(a)?;
            // an explicit basis is irrelevant here
            let job = JobSpec { basis: None, ..job };
            let c = commands::compute(&job)?;
            Ok(commands::render_compute(&job, &c))
        }
        Command::Verify(a) => commands::verify(&job_from(a)?),
        Command::Bm { points } => {
            let v = serde_json::from_str(&read(points)?)
                .map_err(|e| CliError::input(format!("{}: {}", points.display(), e)))?;
            commands::bm(&v)
        }
        Command::Reduce { job, element } => commands::reduce(&job_from(job)?, element),
        Command::Inv { job, element } => commands::inv(&job_from(job)?, element),
        Command::Express { job, index } => commands::express(&job_from(job)?, *index),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let result = match relideal::parallel::with_threads(cli.threads, || run(&cli.command)) {
        Ok(r) => r,
        Err(e) => Err(e.into()),
    };
    match result {
        Ok(out) => {
            print!("{}", out.render(format));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED as u8)
            }
        }
        Err(e) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"format": 1, "error": {"kind": e.kind(), "message": e.to_string()}})
                ),
                Format::Text => eprintln!("error ({}): {}", e.kind(), e),
            }
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}

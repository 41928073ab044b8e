use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use siglat::verify::Mode;
use siglat::Limits;
use siglat_cli::error::exit;
use siglat_cli::input::{self, DEFAULT_PARTITIONS};
use siglat_cli::report::{self, AnalysisReport, BatchReport, HuntReport};
use siglat_cli::{builtin_corpus, run, CliError};

#[derive(Parser)]
#[command(name = "siglat", version, about = "Sigma-permutable subgroup lattices of finite permutation groups")]
struct Cli {
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, env = "SIGLAT_MAX_ORDER")]
    max_order: Option<usize>,
    /// Largest number of subgroups that will be enumerated.
    #[arg(long, global = true)]
    max_subgroups: Option<usize>,
    /// Exit with code 3 when any instance was skipped at a cap.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    Covers,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Full => Mode::Full,
            ModeArg::Covers => Mode::Covers,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(clap::Args)]
struct Output {
    /// Directory for the report files (JSON and Markdown). Without it the
    /// report goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Format written to stdout.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one group file against one partition.
    Analyze {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Run every check over the built-in corpus.
    Corpus {
        #[arg(long, default_value = DEFAULT_PARTITIONS)]
        partitions: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Corpus run that succeeds only with no violations and no skips.
    Verify {
        #[arg(long, default_value = DEFAULT_PARTITIONS)]
        partitions: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Report modularity of the sigma-permutable lattice for each pair.
    Hunt {
        #[arg(long, default_value = DEFAULT_PARTITIONS)]
        partitions: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: Output,
    },
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = cli.max_order {
        l.max_order = n;
    }
    if let Some(n) = cli.max_subgroups {
        l.max_subgroups = n;
    }
    l
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn emit(output: &Output, stem: &str, json: String, md: String) -> Result<(), CliError> {
    match &output.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| CliError::Io {
                path: dir.display().to_string(),
                message: e.to_string(),
            })?;
            write_file(&dir.join(format!("{stem}.json")), &json)?;
            write_file(&dir.join(format!("{stem}.md")), &md)?;
        }
        None => match output.format {
            Format::Json => print!("{json}"),
            Format::Md => print!("{md}"),
        },
    }
    Ok(())
}

fn sanitize(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}

fn batch(cli: &Cli, partitions: &str, jobs: usize, mode: Mode, output: &Output, skips_fail: bool) -> Result<i32, CliError> {
    let partitions = input::parse_partition_list(partitions)?;
    let report: BatchReport = run::run_batch(&builtin_corpus(), &partitions, mode, &limits(cli), jobs);
    emit(output, "corpus", report::to_json(&report), report::batch_markdown(&report))?;
    let t = &report.totals;
    eprintln!(
        "{} pairs, {} sigma-full, {} violations, {} skips",
        t.pairs, t.sigma_full, t.violations, t.skips
    );
    Ok(exit::outcome(t.violations, t.skips, skips_fail))
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Analyze {
            group,
            partition,
            mode,
            output,
        } => {
            let spec = input::parse_group_file(group)?;
            let partition = input::parse_partition(partition)?;
            if let Err(e) = spec.build(&limits(cli)) {
                if !e.is_cap() {
                    return Err(CliError::Usage(format!("{}: {e}", group.display())));
                }
            }
            let reports: Vec<AnalysisReport> =
                run::analyze_group(&spec, std::slice::from_ref(&partition), (*mode).into(), &limits(cli));
            let r = &reports[0];
            let stem = format!("{}-{}", sanitize(&r.group), sanitize(&r.partition));
            emit(output, &stem, report::to_json(r), report::analysis_markdown(&reports))?;
            Ok(exit::outcome(r.analysis.violations.len(), r.analysis.skips.len(), cli.strict))
        }
        Command::Corpus {
            partitions,
            jobs,
            mode,
            output,
        } => batch(cli, partitions, *jobs, (*mode).into(), output, cli.strict),
        Command::Verify {
            partitions,
            jobs,
            output,
        } => batch(cli, partitions, *jobs, Mode::Full, output, true),
        Command::Hunt {
            partitions,
            jobs,
            output,
        } => {
            let partitions = input::parse_partition_list(partitions)?;
            let hunt: HuntReport = run::run_hunt(&builtin_corpus(), &partitions, &limits(cli), *jobs);
            emit(output, "hunt", report::to_json(&hunt), report::hunt_markdown(&hunt))?;
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let started = Instant::now();
    let code = match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit::USAGE
        }
    };
    eprintln!("elapsed: {:.2}s", started.elapsed().as_secs_f64());
    ExitCode::from(code as u8)
}

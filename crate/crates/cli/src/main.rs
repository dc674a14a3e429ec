//! `hicent` binary: argument parsing and dispatch. All configuration comes
//! from flags — environment variables are not read — and validation problems
//! exit with code 2 before any work starts.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hicent_cli::config::{self, ConfigError, MeasureSelect, OutputFormat, RunConfig};
use hicent_cli::run;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hicent",
    version,
    about = "Node hierarchy and centrality measures for undirected networks, \
             with a cross-measure comparison pipeline"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Whole-graph statistics for each input network
    Stats(StatsArgs),
    /// Per-node hierarchy and centrality tables for each input network
    Measures(MeasuresArgs),
    /// Measures plus combination matrices and aggregate comparisons
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input edge-list files, or directories of them
    #[arg(short, long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,

    /// Output directory root
    #[arg(short, long, default_value = "out")]
    output: PathBuf,

    /// Format for tabular outputs (manifest and nested results are always JSON)
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Abort at the first failure instead of continuing with the rest
    #[arg(long)]
    strict: bool,

    /// Worker threads for per-network computation (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Both,
}

impl FormatArg {
    fn into_format(self) -> OutputFormat {
        match self {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Both => OutputFormat::Both,
        }
    }
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct MeasuresArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Comma-separated measure ids (default: all ten)
    #[arg(long, value_delimiter = ',')]
    measures: Vec<String>,

    /// Katz attenuation factor (default: 0.9 / spectral radius, per network)
    #[arg(long)]
    katz_s: Option<f64>,
}

#[derive(Args)]
struct PipelineArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Comma-separated evaluation measures
    #[arg(
        long = "eval",
        value_delimiter = ',',
        default_values_t = config::default_eval_tokens()
    )]
    evals: Vec<String>,

    /// RBO persistence values; each adds one evaluation instance
    #[arg(long = "rbo-p", value_delimiter = ',', default_values_t = [0.5, 0.9])]
    rbo_p: Vec<f64>,

    /// Top-k list size: 'adaptive' or an explicit positive integer
    #[arg(long, default_value = "adaptive")]
    topk: String,

    /// Meaningfulness threshold: cells pass when |value| >= threshold
    #[arg(long, default_value_t = 0.7)]
    threshold: f64,

    /// Cluster count override (default: 3 for correlations, 2 for rank overlaps)
    #[arg(long)]
    k: Option<usize>,

    /// Seed for clustering initialization
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Katz attenuation factor (default: 0.9 / spectral radius, per network)
    #[arg(long)]
    katz_s: Option<f64>,
}

fn build_common(common: &CommonArgs) -> Result<RunConfig, ConfigError> {
    let inputs = config::expand_inputs(&common.input)?;
    let mut cfg = RunConfig::new(inputs, common.output.clone())?;
    cfg.format = common.format.into_format();
    cfg.strict = common.strict;
    cfg.jobs = config::validate_jobs(common.jobs)?;
    Ok(cfg)
}

fn dispatch(cli: Cli) -> Result<u8, ConfigError> {
    match cli.command {
        Command::Stats(args) => {
            let cfg = build_common(&args.common)?;
            Ok(run::cmd_stats(&cfg))
        }
        Command::Measures(args) => {
            let mut cfg = build_common(&args.common)?;
            if !args.measures.is_empty() {
                let mut selected: Vec<MeasureSelect> = Vec::new();
                for token in &args.measures {
                    let measure = MeasureSelect::parse(token)?;
                    if !selected.contains(&measure) {
                        selected.push(measure);
                    }
                }
                cfg.measures = selected;
            }
            cfg.centrality.katz_s = config::validate_katz_s(args.katz_s)?;
            Ok(run::cmd_measures(&cfg))
        }
        Command::Pipeline(args) => {
            let mut cfg = build_common(&args.common)?;
            cfg.topk = config::parse_topk(&args.topk)?;
            cfg.evals = config::parse_evals(&args.evals, &args.rbo_p, cfg.topk)?;
            cfg.threshold = config::validate_threshold(args.threshold)?;
            cfg.cluster_k = config::validate_cluster_k(args.k)?;
            cfg.seed = args.seed;
            cfg.centrality.katz_s = config::validate_katz_s(args.katz_s)?;
            Ok(run::cmd_pipeline(&cfg))
        }
    }
}

fn main() -> ExitCode {
    // Fixed log level: configuration is flags-only by design, so the usual
    // RUST_LOG override is deliberately not consulted.
    env_logger::Builder::new()
        .filter_level(log::LevelFilter::Info)
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(run::EXIT_CONFIG)
        }
    }
}

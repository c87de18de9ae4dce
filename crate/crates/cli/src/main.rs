use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use permplane::bounds::{max_complexity_curve, min_complexity_curve, DEFAULT_GRID};
use permplane::ordinal::factorial;
use permplane_cli::{run_pipeline, InputSpec, OutputFormat, PipelineError, RunConfig};

#[derive(Parser)]
#[command(
    name = "permplane",
    version,
    about = "Permutation entropy and statistical complexity over sliding windows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one or more series and write trajectories, plane data and reports.
    Run(RunArgs),
    /// Write the minimum and maximum complexity curves for D! patterns.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct RunArgs {
    /// TOML or JSON run configuration (a previous run's metadata.json works too).
    /// Flags given on the command line override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// NAME:PATH:VALUE_COLUMN[:DATE_COLUMN]; repeat for several series.
    #[arg(long = "input", value_parser = InputSpec::parse)]
    inputs: Vec<InputSpec>,
    #[arg(long)]
    embedding_dimension: Option<usize>,
    #[arg(long)]
    embedding_delay: Option<usize>,
    #[arg(long)]
    window_length: Option<usize>,
    #[arg(long)]
    step: Option<usize>,
    #[arg(long)]
    max_windows: Option<usize>,
    /// Analyse first differences instead of levels.
    #[arg(long)]
    difference: bool,
    /// Comma-separated shuffle-surrogate seeds.
    #[arg(long, value_delimiter = ',')]
    surrogate_seeds: Option<Vec<u64>>,
    /// Series every other one is tested against for equal mean entropy.
    #[arg(long)]
    reference_series: Option<String>,
    #[arg(long)]
    subsample_ratio: Option<usize>,
    #[arg(long)]
    bounds_grid: Option<usize>,
    #[arg(long)]
    output_dir: Option<PathBuf>,
    #[arg(long, value_enum)]
    output_format: Option<OutputFormat>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 4)]
    embedding_dimension: usize,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    bounds_grid: usize,
    #[arg(long)]
    output_dir: PathBuf,
}

impl RunArgs {
    fn into_config(self) -> Result<RunConfig, PipelineError> {
        let mut c = match &self.config {
            Some(path) => RunConfig::from_file(path)?,
            None => RunConfig::default(),
        };
        if !self.inputs.is_empty() {
            c.inputs = self.inputs;
        }
        macro_rules! set {
            ($($field:ident),*) => {$(
                if let Some(v) = self.$field { c.$field = v; }
            )*};
        }
        set!(
            embedding_dimension,
            embedding_delay,
            window_length,
            step,
            surrogate_seeds,
            subsample_ratio,
            bounds_grid,
            output_format
        );
        if self.max_windows.is_some() {
            c.max_windows = self.max_windows;
        }
        if self.reference_series.is_some() {
            c.reference_series = self.reference_series;
        }
        if self.output_dir.is_some() {
            c.output_dir = self.output_dir;
        }
        c.difference |= self.difference;
        Ok(c)
    }
}

fn write_bounds(args: BoundsArgs) -> Result<(), PipelineError> {
    let d = args.embedding_dimension;
    if !(2..=permplane::ordinal::MAX_DIMENSION).contains(&d) {
        return Err(PipelineError::Config(format!(
            "unsupported embedding dimension {d}"
        )));
    }
    let m = factorial(d);
    std::fs::create_dir_all(&args.output_dir).map_err(|source| PipelineError::Write {
        path: args.output_dir.clone(),
        source,
    })?;
    for (name, curve) in [
        ("bounds_min.csv", min_complexity_curve(m, args.bounds_grid)),
        ("bounds_max.csv", max_complexity_curve(m, args.bounds_grid)),
    ] {
        let curve = curve.map_err(|e| PipelineError::Config(e.to_string()))?;
        let mut text = String::from("H,C\n");
        for p in curve {
            text.push_str(&format!("{},{}\n", p.entropy, p.complexity));
        }
        let path = args.output_dir.join(name);
        std::fs::write(&path, text).map_err(|source| PipelineError::Write { path, source })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => args.into_config().and_then(|config| {
            if let Ok(spec) = config.window_spec() {
                if spec.is_undersampled() {
                    eprintln!(
                        "warning: window length {} is below 5·D! = {}; histograms will be poorly sampled",
                        spec.length(),
                        5 * spec.ordinal().alphabet_size()
                    );
                }
            }
            let report = run_pipeline(&config)?;
            for s in &report.analysis.series {
                eprintln!("{}: {} rows, {} windows", s.input.name, s.rows, s.trajectory.len());
            }
            Ok(())
        }),
        Command::Bounds(args) => write_bounds(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

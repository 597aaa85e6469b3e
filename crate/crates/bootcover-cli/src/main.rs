//! Command-line front end for the bootstrap coverage experiments.
//!
//! Subcommands: `synthetic` (parametric ground truth), `empirical` (CSV
//! ground truth), `moments` (distribution statistics table), and
//! `weights-check` (Dirichlet weight construction diagnostics).
//!
//! Exit codes: 0 success, 1 runtime/I-O failure, 2 validation failure.

mod config;
mod output;

use std::path::Path;
use std::process::ExitCode;

use bootcover::evaluation::sweep_sizes;
use bootcover::math::ks_distance;
use bootcover::resampling::{dirichlet_weights_gaps, dirichlet_weights_naive};
use bootcover::{DistributionSpec, Experiment, Stream};
use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{
    load_config_file, ExperimentConfig, GroundTruthConfig, HalfMaxArg, PseudovalueArg,
};
use output::{WeightsHistRow, WeightsKsRow};

/// Error carrying its process exit code: validation failures exit 2,
/// runtime/I-O failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Io(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "bootcover",
    about = "Bootstrap coverage experiments for small-sample, high log-variance data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run coverage experiments against a parametric ground truth.
    Synthetic {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run coverage experiments against an empirical CSV ground truth.
    Empirical {
        /// Dataset CSV: one positive real per line, # comments allowed.
        #[arg(long)]
        data: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print a distribution's moment statistics.
    Moments {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Diagnose Dirichlet weight constructions against the Beta(1, n-1) marginal.
    WeightsCheck {
        /// Weight vector length.
        #[arg(long)]
        n: usize,
        /// Number of weight vectors to draw.
        #[arg(long, default_value_t = 10_000)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "bootcover_out")]
        out: String,
        /// Overwrite existing output files.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// log10(x) uniform on [-k, 0]
    LogUniform,
    /// power law x^-alpha on (0, 1], alpha in (0,1)
    PowerLawUnit,
    /// power law x^-alpha on [1, inf), alpha > 2
    ParetoTail,
    /// rate lambda
    Exponential,
    /// normal(mu, sigma) truncated to positive values
    Normal,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Decades spanned (log-uniform).
    #[arg(long)]
    k: Option<f64>,
    /// Power-law exponent (power-law-unit, pareto-tail).
    #[arg(long)]
    alpha: Option<f64>,
    /// Rate (exponential).
    #[arg(long)]
    lambda: Option<f64>,
    /// Location (normal).
    #[arg(long)]
    mu: Option<f64>,
    /// Scale (normal).
    #[arg(long)]
    sigma: Option<f64>,
}

#[derive(Args)]
struct RunArgs {
    /// JSON config: a bare config object or a summary.json. Flags override.
    #[arg(long)]
    config: Option<String>,
    /// Sample size per trial.
    #[arg(long)]
    n: Option<usize>,
    /// Number of synthetic datasets (trials).
    #[arg(long = "N")]
    num_sets: Option<usize>,
    /// Bootstrap replicates per trial and method.
    #[arg(long = "B")]
    replicates: Option<usize>,
    /// Nominal coverage in (0,1); repeat for several.
    #[arg(long = "coverage")]
    coverage: Vec<f64>,
    /// Comma-separated sample sizes; switches to sweep mode.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long)]
    out: Option<String>,
    /// Overwrite existing output files.
    #[arg(long)]
    force: bool,
    /// Augment each sample with a pseudovalue before analysis.
    #[arg(long, value_enum)]
    pseudovalue: Option<PseudovalueArg>,
    /// Use likelihood-weighted credibility regions for the Bayesian side.
    #[arg(long)]
    weighted_bayes: bool,
    /// Which half-max CDF ratio definition the run highlights.
    #[arg(long, value_enum)]
    half_max_def: Option<HalfMaxArg>,
}

fn need(value: Option<f64>, name: &str, family: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Validation(format!("--{name} is required for {family}")))
}

fn reject_foreign(params: &[(&str, Option<f64>)], family: &str) -> Result<(), CliError> {
    for (name, value) in params {
        if value.is_some() {
            return Err(CliError::Validation(format!(
                "--{name} does not apply to family {family}"
            )));
        }
    }
    Ok(())
}

/// Ground truth from family flags alone.
fn ground_truth_from_flags(args: &FamilyArgs) -> Result<GroundTruthConfig, CliError> {
    let family = args
        .family
        .ok_or_else(|| CliError::Validation("--family is required".into()))?;
    match family {
        FamilyArg::LogUniform => {
            reject_foreign(
                &[("alpha", args.alpha), ("lambda", args.lambda), ("mu", args.mu), ("sigma", args.sigma)],
                "log-uniform",
            )?;
            Ok(GroundTruthConfig::LogUniform {
                k: need(args.k, "k", "log-uniform")?,
            })
        }
        FamilyArg::PowerLawUnit => {
            reject_foreign(
                &[("k", args.k), ("lambda", args.lambda), ("mu", args.mu), ("sigma", args.sigma)],
                "power-law-unit",
            )?;
            Ok(GroundTruthConfig::PowerLawUnit {
                alpha: need(args.alpha, "alpha", "power-law-unit")?,
            })
        }
        FamilyArg::ParetoTail => {
            reject_foreign(
                &[("k", args.k), ("lambda", args.lambda), ("mu", args.mu), ("sigma", args.sigma)],
                "pareto-tail",
            )?;
            Ok(GroundTruthConfig::ParetoTail {
                alpha: need(args.alpha, "alpha", "pareto-tail")?,
            })
        }
        FamilyArg::Exponential => {
            reject_foreign(
                &[("k", args.k), ("alpha", args.alpha), ("mu", args.mu), ("sigma", args.sigma)],
                "exponential",
            )?;
            Ok(GroundTruthConfig::Exponential {
                lambda: need(args.lambda, "lambda", "exponential")?,
            })
        }
        FamilyArg::Normal => {
            reject_foreign(
                &[("k", args.k), ("alpha", args.alpha), ("lambda", args.lambda)],
                "normal",
            )?;
            Ok(GroundTruthConfig::Normal {
                mu: need(args.mu, "mu", "normal")?,
                sigma: need(args.sigma, "sigma", "normal")?,
            })
        }
    }
}

/// Ground truth from flags, falling back to (and overriding params of) the
/// config file's ground truth.
fn resolve_ground_truth(
    args: &FamilyArgs,
    base: Option<GroundTruthConfig>,
) -> Result<GroundTruthConfig, CliError> {
    if args.family.is_some() {
        return ground_truth_from_flags(args);
    }
    let Some(mut gt) = base else {
        return Err(CliError::Validation(
            "--family is required (no config file supplies a ground truth)".into(),
        ));
    };
    match &mut gt {
        GroundTruthConfig::LogUniform { k } => {
            reject_foreign(
                &[("alpha", args.alpha), ("lambda", args.lambda), ("mu", args.mu), ("sigma", args.sigma)],
                "log-uniform",
            )?;
            if let Some(v) = args.k {
                *k = v;
            }
        }
        GroundTruthConfig::PowerLawUnit { alpha } | GroundTruthConfig::ParetoTail { alpha } => {
            reject_foreign(
                &[("k", args.k), ("lambda", args.lambda), ("mu", args.mu), ("sigma", args.sigma)],
                "power-law",
            )?;
            if let Some(v) = args.alpha {
                *alpha = v;
            }
        }
        GroundTruthConfig::Exponential { lambda } => {
            reject_foreign(
                &[("k", args.k), ("alpha", args.alpha), ("mu", args.mu), ("sigma", args.sigma)],
                "exponential",
            )?;
            if let Some(v) = args.lambda {
                *lambda = v;
            }
        }
        GroundTruthConfig::Normal { mu, sigma } => {
            reject_foreign(
                &[("k", args.k), ("alpha", args.alpha), ("lambda", args.lambda)],
                "normal",
            )?;
            if let Some(v) = args.mu {
                *mu = v;
            }
            if let Some(v) = args.sigma {
                *sigma = v;
            }
        }
        GroundTruthConfig::Empirical { .. } => {
            // Param flags never apply to an empirical ground truth.
            reject_foreign(
                &[
                    ("k", args.k),
                    ("alpha", args.alpha),
                    ("lambda", args.lambda),
                    ("mu", args.mu),
                    ("sigma", args.sigma),
                ],
                "empirical",
            )?;
        }
    }
    Ok(gt)
}

/// Merges run flags over the optional config file into a full config.
fn resolve_run_config(
    run: &RunArgs,
    ground_truth: GroundTruthConfig,
    base: Option<ExperimentConfig>,
) -> Result<ExperimentConfig, CliError> {
    let n = run.n.or(base.as_ref().and_then(|c| c.n));
    let sizes = run.sizes.clone().or(base.as_ref().and_then(|c| c.sizes.clone()));
    if n.is_some() && sizes.is_some() {
        return Err(CliError::Validation(
            "--n and --sizes are mutually exclusive (a sweep provides its own sizes)".into(),
        ));
    }
    let coverages = if !run.coverage.is_empty() {
        run.coverage.clone()
    } else {
        base.as_ref()
            .map(|c| c.coverages.clone())
            .unwrap_or_else(Experiment::default_coverages)
    };
    Ok(ExperimentConfig {
        ground_truth,
        n,
        num_sets: run
            .num_sets
            .or(base.as_ref().map(|c| c.num_sets))
            .unwrap_or(1000),
        replicates: run
            .replicates
            .or(base.as_ref().map(|c| c.replicates))
            .unwrap_or(10_000),
        coverages,
        sizes,
        seed: run.seed.or(base.as_ref().map(|c| c.seed)).unwrap_or(0),
        out: run
            .out
            .clone()
            .or(base.as_ref().map(|c| c.out.clone()))
            .unwrap_or_else(|| "bootcover_out".into()),
        pseudovalue: run
            .pseudovalue
            .or(base.as_ref().and_then(|c| c.pseudovalue)),
        weighted_bayes: run.weighted_bayes
            || base.as_ref().map(|c| c.weighted_bayes).unwrap_or(false),
        half_max_def: run
            .half_max_def
            .or(base.as_ref().map(|c| c.half_max_def))
            .unwrap_or(HalfMaxArg::LogRatio),
    })
}

/// Shared body of `synthetic` and `empirical`: resolve, run, write, print.
fn run_experiment_command(config: ExperimentConfig, force: bool) -> Result<(), CliError> {
    let spec = config.distribution()?;
    let out_dir = Path::new(&config.out).to_path_buf();
    let summary_text = if let Some(sizes) = &config.sizes {
        output::prepare_out_dir(&out_dir, output::SWEEP_FILES, force)?;
        eprintln!(
            "running sweep: {} sizes={:?} N={} B={} seed={}",
            spec.descriptor(),
            sizes,
            config.num_sets,
            config.replicates,
            config.seed
        );
        let results = sweep_sizes(
            &spec,
            sizes,
            config.num_sets,
            config.replicates,
            &config.coverages,
            config.seed,
            config.options(),
        )
        .map_err(|e| CliError::Validation(e.to_string()))?;
        output::write_sweep_outputs(&out_dir, &config, &spec, &results)?
    } else {
        let exp = config.experiment(&spec)?;
        output::prepare_out_dir(&out_dir, output::RUN_FILES, force)?;
        eprintln!(
            "running {} n={} N={} B={} seed={}",
            spec.descriptor(),
            exp.n,
            exp.num_sets,
            exp.replicates,
            exp.master_seed
        );
        let records = exp.run().map_err(|e| CliError::Validation(e.to_string()))?;
        output::write_run_outputs(&out_dir, &config, &spec, &exp, &records)?
    };
    println!("{summary_text}");
    Ok(())
}

fn cmd_synthetic(family: &FamilyArgs, run: &RunArgs) -> Result<(), CliError> {
    let base = run.config.as_deref().map(load_config_file).transpose()?;
    let ground_truth =
        resolve_ground_truth(family, base.as_ref().map(|c| c.ground_truth.clone()))?;
    if ground_truth.is_empirical() {
        return Err(CliError::Validation(
            "synthetic requires a parametric ground truth (config file is empirical)".into(),
        ));
    }
    let config = resolve_run_config(run, ground_truth, base)?;
    run_experiment_command(config, run.force)
}

fn cmd_empirical(data: Option<&str>, run: &RunArgs) -> Result<(), CliError> {
    let base = run.config.as_deref().map(load_config_file).transpose()?;
    let ground_truth = match data {
        Some(path) => GroundTruthConfig::Empirical { data: path.into() },
        None => match base.as_ref().map(|c| c.ground_truth.clone()) {
            Some(gt @ GroundTruthConfig::Empirical { .. }) => gt,
            Some(_) => {
                return Err(CliError::Validation(
                    "empirical requires a dataset (config file ground truth is parametric)"
                        .into(),
                ))
            }
            None => {
                return Err(CliError::Validation(
                    "--data is required (no config file supplies a dataset)".into(),
                ))
            }
        },
    };
    let mut config = resolve_run_config(run, ground_truth, base)?;
    // Default n: analyze samples of the same size as the dataset itself.
    if config.n.is_none() && config.sizes.is_none() {
        let spec = config.distribution()?;
        if let DistributionSpec::Empirical { values } = &spec {
            config.n = Some(values.len());
        }
    }
    run_experiment_command(config, run.force)
}

fn cmd_moments(family: &FamilyArgs) -> Result<(), CliError> {
    let ground_truth = ground_truth_from_flags(family)?;
    let config_stub = ExperimentConfig {
        ground_truth,
        n: None,
        num_sets: 1,
        replicates: 1,
        coverages: vec![0.5],
        sizes: None,
        seed: 0,
        out: String::new(),
        pseudovalue: None,
        weighted_bayes: false,
        half_max_def: HalfMaxArg::LogRatio,
    };
    let spec = config_stub.distribution()?;
    let moments = spec
        .moment_summary()
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let fmt = |v: Option<f64>| match v {
        Some(x) => output::format_num(x),
        None => "not defined".to_string(),
    };
    println!("family: {}", spec.descriptor());
    println!("true_mean: {}", output::format_num(spec.true_mean()));
    println!("sigma_x: {}", fmt(moments.sigma_x));
    println!("sigma_log10_x: {}", output::format_num(moments.sigma_log10_x));
    println!("skewness: {}", fmt(moments.skewness));
    println!("excess_kurtosis: {}", fmt(moments.excess_kurtosis));
    Ok(())
}

fn cmd_weights_check(
    n: usize,
    draws: usize,
    seed: u64,
    out: &str,
    force: bool,
) -> Result<(), CliError> {
    if n < 1 {
        return Err(CliError::Validation("--n must be at least 1".into()));
    }
    if draws < 1 {
        return Err(CliError::Validation("--draws must be at least 1".into()));
    }
    let out_dir = Path::new(out).to_path_buf();
    output::prepare_out_dir(&out_dir, output::WEIGHTS_FILES, force)?;
    eprintln!("weights check n={n} draws={draws} seed={seed}");

    let mut gaps_stream = Stream::child(seed, &[1]);
    let mut gaps_pool = Vec::with_capacity(n * draws);
    for _ in 0..draws {
        gaps_pool.extend_from_slice(dirichlet_weights_gaps(n, &mut gaps_stream).weights());
    }
    // The naive construction needs n >= 2 by definition.
    let naive_pool = if n >= 2 {
        let mut stream = Stream::child(seed, &[2]);
        let mut pool = Vec::with_capacity(n * draws);
        for _ in 0..draws {
            let w = dirichlet_weights_naive(n, &mut stream)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            pool.extend_from_slice(w.weights());
        }
        Some(pool)
    } else {
        None
    };

    const BINS: usize = 50;
    let mut hist = Vec::new();
    let mut ks_rows = Vec::new();
    let mut add = |label: &'static str, pool: &mut Vec<f64>| {
        let mut counts = [0usize; BINS];
        for &w in pool.iter() {
            let idx = ((w * BINS as f64) as usize).min(BINS - 1);
            counts[idx] += 1;
        }
        for (i, &count) in counts.iter().enumerate() {
            hist.push(WeightsHistRow {
                construction: label,
                bin_lo: i as f64 / BINS as f64,
                bin_hi: (i + 1) as f64 / BINS as f64,
                count,
            });
        }
        pool.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        // Marginal of a flat Dirichlet is Beta(1, n-1); for n=1 the weight
        // is the constant 1, which matches that degenerate limit exactly.
        let ks = if n == 1 {
            0.0
        } else {
            let e = (n - 1) as f64;
            ks_distance(pool, |x| 1.0 - (1.0 - x.clamp(0.0, 1.0)).powf(e))
        };
        ks_rows.push(WeightsKsRow {
            construction: label,
            n,
            draws,
            ks,
        });
    };
    add("gaps", &mut gaps_pool);
    if let Some(mut pool) = naive_pool {
        add("naive", &mut pool);
    }
    output::write_weights_outputs(&out_dir, &hist, &ks_rows)
}

fn run_cli(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Synthetic { family, run } => cmd_synthetic(family, run),
        Command::Empirical { data, run } => cmd_empirical(data.as_deref(), run),
        Command::Moments { family } => cmd_moments(family),
        Command::WeightsCheck {
            n,
            draws,
            seed,
            out,
            force,
        } => cmd_weights_check(*n, *draws, *seed, out, *force),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_cli(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

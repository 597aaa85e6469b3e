//! The coverage-measurement pipeline: N synthetic datasets drawn from a
//! ground truth, both bootstraps on each dataset at several nominal
//! coverages, and the aggregated under-/over-estimation statistics, limit
//! CDFs, and half-max CDF ratio.
//!
//! Trials are independent work units executed in parallel; every trial's
//! randomness comes from child streams keyed by (master_seed, trial, method),
//! so results are bitwise identical for any thread count.

use rayon::prelude::*;

use crate::distributions::{DistributionSpec, Sample};
use crate::error::Error;
use crate::resampling::{
    self, bayesian_bootstrap, bayesian_bootstrap_weighted, standard_bootstrap, BootstrapMethod,
    IntervalEstimate, PseudovalueMode,
};
use crate::stream::{Stream, LABEL_BAYESIAN, LABEL_SAMPLE, LABEL_STANDARD};

/// Optional analysis variants probing refinements of the two base methods.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ExperimentOptions {
    /// Augment each synthetic sample with a pseudovalue before analysis.
    pub pseudovalue: Option<PseudovalueMode>,
    /// Extract the Bayesian region from the likelihood-weighted CDF instead
    /// of the plain percentile CDF.
    pub weighted_bayes: bool,
}

/// A fully validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub ground_truth: DistributionSpec,
    /// Synthetic sample size n.
    pub n: usize,
    /// Number of synthetic datasets N.
    pub num_sets: usize,
    /// Bootstrap replicates B per dataset and method.
    pub replicates: usize,
    /// Nominal coverages, sorted ascending, each in (0,1).
    pub coverages: Vec<f64>,
    pub master_seed: u64,
    pub options: ExperimentOptions,
}

impl Experiment {
    pub fn new(
        ground_truth: DistributionSpec,
        n: usize,
        num_sets: usize,
        replicates: usize,
        mut coverages: Vec<f64>,
        master_seed: u64,
        options: ExperimentOptions,
    ) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::param("n", n as f64, "sample size must be at least 1"));
        }
        if num_sets < 1 {
            return Err(Error::param("N", num_sets as f64, "need at least one synthetic set"));
        }
        if replicates < 1 {
            return Err(Error::param("B", replicates as f64, "need at least one replicate"));
        }
        if coverages.is_empty() {
            return Err(Error::InvalidData("at least one nominal coverage required".into()));
        }
        for &c in &coverages {
            if !(c > 0.0 && c < 1.0) {
                return Err(Error::param(
                    "coverage",
                    c,
                    "nominal coverage must lie strictly between 0 and 1",
                ));
            }
        }
        coverages.sort_by(|a, b| a.partial_cmp(b).unwrap());
        coverages.dedup();
        if options.pseudovalue == Some(PseudovalueMode::ScaledMax) && n < 2 {
            return Err(Error::param(
                "n",
                n as f64,
                "scaled-max pseudovalue needs sample size of at least 2",
            ));
        }
        Ok(Experiment {
            ground_truth,
            n,
            num_sets,
            replicates,
            coverages,
            master_seed,
            options,
        })
    }

    /// The nominal coverages examined throughout: 50, 65, 80, 95 percent.
    pub fn default_coverages() -> Vec<f64> {
        vec![0.50, 0.65, 0.80, 0.95]
    }

    /// The sample-size ladder used by the size sweeps.
    pub fn default_sizes() -> Vec<usize> {
        vec![5, 10, 25, 50, 100, 250, 500, 1000]
    }

    /// Method tag of the Bayesian-side intervals under the current options.
    pub fn bayes_method(&self) -> BootstrapMethod {
        if self.options.weighted_bayes {
            BootstrapMethod::BayesianWeighted
        } else {
            BootstrapMethod::Bayesian
        }
    }

    pub fn run(&self) -> Result<Vec<TrialRecord>, Error> {
        run_experiment(self)
    }
}

/// One trial: the synthetic sample's mean plus every requested interval.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub trial_index: usize,
    /// Mean of the analyzed sample (after pseudovalue augmentation when that
    /// option is active).
    pub sample_mean: f64,
    /// All (method, coverage) intervals: standard first, then the Bayesian
    /// side, each in ascending coverage order.
    pub intervals: Vec<IntervalEstimate>,
}

impl TrialRecord {
    /// The interval for a (method, coverage) pair, if it was requested.
    pub fn interval(&self, method: BootstrapMethod, coverage: f64) -> Option<&IntervalEstimate> {
        self.intervals
            .iter()
            .find(|iv| iv.method == method && iv.nominal_coverage == coverage)
    }
}

fn run_trial(exp: &Experiment, t: usize) -> Result<TrialRecord, Error> {
    let mut sample_stream = Stream::child(exp.master_seed, &[t as u64, LABEL_SAMPLE]);
    let drawn = exp.ground_truth.sample(exp.n, &mut sample_stream)?;
    let analyzed: Sample = match exp.options.pseudovalue {
        Some(mode) => resampling::pseudovalue_augment(&drawn, mode)?,
        None => drawn,
    };

    let mut intervals = Vec::with_capacity(2 * exp.coverages.len());

    let mut std_stream = Stream::child(exp.master_seed, &[t as u64, LABEL_STANDARD]);
    let std_reps = standard_bootstrap(&analyzed, exp.replicates, &mut std_stream);
    let mut sorted = std_reps.means().to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    for &c in &exp.coverages {
        intervals.push(resampling::interval_from_sorted(
            &sorted,
            c,
            BootstrapMethod::Standard,
        ));
    }

    let mut bay_stream = Stream::child(exp.master_seed, &[t as u64, LABEL_BAYESIAN]);
    if exp.options.weighted_bayes {
        let reps = bayesian_bootstrap_weighted(&analyzed, exp.replicates, &mut bay_stream);
        let likes = reps.likelihoods().expect("weighted variant records likelihoods");
        let mut order: Vec<usize> = (0..reps.len()).collect();
        order.sort_unstable_by(|&a, &b| {
            reps.means()[a].partial_cmp(&reps.means()[b]).unwrap()
        });
        let sorted_means: Vec<f64> = order.iter().map(|&i| reps.means()[i]).collect();
        let sorted_likes: Vec<f64> = order.iter().map(|&i| likes[i]).collect();
        for &c in &exp.coverages {
            intervals.push(resampling::weighted_interval_from_sorted(
                &sorted_means,
                &sorted_likes,
                c,
                BootstrapMethod::BayesianWeighted,
            ));
        }
    } else {
        let reps = bayesian_bootstrap(&analyzed, exp.replicates, &mut bay_stream);
        let mut sorted = reps.means().to_vec();
        sorted.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        for &c in &exp.coverages {
            intervals.push(resampling::interval_from_sorted(
                &sorted,
                c,
                BootstrapMethod::Bayesian,
            ));
        }
    }

    Ok(TrialRecord {
        trial_index: t,
        sample_mean: analyzed.mean(),
        intervals,
    })
}

/// Runs all N trials, in parallel across trials, returning records in trial
/// order. Bitwise deterministic for a fixed experiment regardless of thread
/// count, because each trial derives its own streams.
pub fn run_experiment(exp: &Experiment) -> Result<Vec<TrialRecord>, Error> {
    (0..exp.num_sets)
        .into_par_iter()
        .map(|t| run_trial(exp, t))
        .collect()
}

/// Coverage outcome counts for one (method, nominal coverage) cell. Counts
/// are disjoint by construction (strict inequalities; ties count as covered),
/// so under + over + covered = num_trials exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageCell {
    pub method: BootstrapMethod,
    pub nominal_coverage: f64,
    pub under_count: usize,
    pub over_count: usize,
    pub covered_count: usize,
    pub num_trials: usize,
}

impl CoverageCell {
    /// Fraction of trials whose upper limit fell strictly below the true mean.
    pub fn under(&self) -> f64 {
        self.under_count as f64 / self.num_trials as f64
    }

    /// Fraction of trials whose lower limit exceeded the true mean.
    pub fn over(&self) -> f64 {
        self.over_count as f64 / self.num_trials as f64
    }

    /// Fraction of trials whose interval covered the true mean.
    pub fn effective(&self) -> f64 {
        self.covered_count as f64 / self.num_trials as f64
    }
}

/// Aggregated coverage statistics for a finished experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageReport {
    pub cells: Vec<CoverageCell>,
    /// Standard deviation (divisor N-1) of log10 of the trial sample means.
    pub sigma_log10_mean: f64,
    pub n: usize,
    pub num_sets: usize,
    pub replicates: usize,
    pub descriptor: String,
}

impl CoverageReport {
    pub fn cell(&self, method: BootstrapMethod, coverage: f64) -> Option<&CoverageCell> {
        self.cells
            .iter()
            .find(|c| c.method == method && c.nominal_coverage == coverage)
    }
}

/// Counts under-/over-estimation per (method, coverage) against the true
/// mean `mu` and computes sigma_log10 of the trial means.
pub fn coverage_report(records: &[TrialRecord], mu: f64, exp: &Experiment) -> CoverageReport {
    assert!(!records.is_empty(), "coverage report needs at least one record");
    assert!(mu.is_finite(), "true mean must be finite");
    let methods = [BootstrapMethod::Standard, exp.bayes_method()];
    let mut cells = Vec::with_capacity(methods.len() * exp.coverages.len());
    for &method in &methods {
        for &c in &exp.coverages {
            let mut under = 0usize;
            let mut over = 0usize;
            for rec in records {
                let iv = rec
                    .interval(method, c)
                    .expect("records carry every requested (method, coverage) pair");
                if iv.upper < mu {
                    under += 1;
                } else if iv.lower > mu {
                    over += 1;
                }
            }
            cells.push(CoverageCell {
                method,
                nominal_coverage: c,
                under_count: under,
                over_count: over,
                covered_count: records.len() - under - over,
                num_trials: records.len(),
            });
        }
    }
    let logs: Vec<f64> = records.iter().map(|r| r.sample_mean.log10()).collect();
    let sigma_log10_mean = if logs.len() < 2 {
        0.0
    } else {
        let m = logs.iter().sum::<f64>() / logs.len() as f64;
        let var =
            logs.iter().map(|l| (l - m) * (l - m)).sum::<f64>() / (logs.len() - 1) as f64;
        var.sqrt()
    };
    CoverageReport {
        cells,
        sigma_log10_mean,
        n: exp.n,
        num_sets: exp.num_sets,
        replicates: exp.replicates,
        descriptor: exp.ground_truth.descriptor(),
    }
}

/// Which interval limit a CDF tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitSide {
    Lower,
    Upper,
}

impl LimitSide {
    pub fn label(&self) -> &'static str {
        match self {
            LimitSide::Lower => "lower",
            LimitSide::Upper => "upper",
        }
    }
}

/// Empirical CDF of log10(limit / mu) across trials for one method, side,
/// and nominal coverage.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitCdf {
    pub method: BootstrapMethod,
    pub side: LimitSide,
    pub nominal_coverage: f64,
    /// Sorted ascending; zero-valued limits are remapped (see `zero_limit_count`).
    pub log_ratios: Vec<f64>,
    /// Cumulative fractions i/N, i = 1..N.
    pub fractions: Vec<f64>,
    /// Number of exactly-zero limits remapped to one decade below the
    /// smallest finite log-ratio (log10 of 0 would otherwise be -inf).
    pub zero_limit_count: usize,
}

impl LimitCdf {
    /// Fraction of trials with log-ratio strictly below `x`. At x = 0 on the
    /// upper side this equals the under-estimation rate (ties covered).
    pub fn fraction_below(&self, x: f64) -> f64 {
        let k = self.log_ratios.partition_point(|r| *r < x);
        k as f64 / self.log_ratios.len() as f64
    }

    /// The log-ratio at cumulative fraction q (order statistic ceil(q N)).
    pub fn quantile(&self, q: f64) -> f64 {
        let idx = resampling::quantile_index(q, self.log_ratios.len());
        self.log_ratios[idx - 1]
    }
}

/// Builds the limit CDF for one (method, coverage, side).
pub fn limit_cdf(
    records: &[TrialRecord],
    mu: f64,
    method: BootstrapMethod,
    coverage: f64,
    side: LimitSide,
) -> Result<LimitCdf, Error> {
    if records.is_empty() {
        return Err(Error::InvalidData("no trial records".into()));
    }
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::param("mu", mu, "limit CDFs need a positive true mean"));
    }
    let mut zero_limit_count = 0usize;
    let mut log_ratios = Vec::with_capacity(records.len());
    for rec in records {
        let iv = rec.interval(method, coverage).ok_or_else(|| {
            Error::InvalidData(format!(
                "records lack intervals for method {} at coverage {coverage}",
                method.label()
            ))
        })?;
        let limit = match side {
            LimitSide::Lower => iv.lower,
            LimitSide::Upper => iv.upper,
        };
        if limit == 0.0 {
            zero_limit_count += 1;
            log_ratios.push(f64::NEG_INFINITY);
        } else {
            log_ratios.push((limit / mu).log10());
        }
    }
    // Zero limits become one decade below the smallest finite entry so the
    // CDF stays plottable; the count is preserved alongside.
    if zero_limit_count > 0 {
        let min_finite = log_ratios
            .iter()
            .cloned()
            .filter(|r| r.is_finite())
            .fold(f64::INFINITY, f64::min);
        let floor = if min_finite.is_finite() { min_finite - 1.0 } else { -1.0 };
        for r in &mut log_ratios {
            if !r.is_finite() {
                *r = floor;
            }
        }
    }
    log_ratios.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let n = log_ratios.len();
    let fractions = (1..=n).map(|i| i as f64 / n as f64).collect();
    Ok(LimitCdf {
        method,
        side,
        nominal_coverage: coverage,
        log_ratios,
        fractions,
        zero_limit_count,
    })
}

/// The two candidate readings of the half-max CDF ratio contrasting the two
/// methods' lower limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfMaxDefinition {
    /// m_s / m_b: the quotient of the median log-ratios (the literal wording).
    LogRatio,
    /// 10^(m_b - m_s): the ratio of the median lower limits themselves.
    ValueRatio,
}

impl HalfMaxDefinition {
    pub fn label(&self) -> &'static str {
        match self {
            HalfMaxDefinition::LogRatio => "log-ratio",
            HalfMaxDefinition::ValueRatio => "value-ratio",
        }
    }
}

/// Half-max CDF ratio from the two lower-limit CDFs. `None` when the
/// Bayesian median log-ratio is exactly zero under the log-ratio definition
/// (degenerate CDF; quotient undefined).
pub fn half_max_cdf_ratio(
    standard_lower: &LimitCdf,
    bayes_lower: &LimitCdf,
    definition: HalfMaxDefinition,
) -> Option<f64> {
    let m_s = standard_lower.quantile(0.5);
    let m_b = bayes_lower.quantile(0.5);
    match definition {
        HalfMaxDefinition::LogRatio => {
            if m_b == 0.0 {
                None
            } else {
                Some(m_s / m_b)
            }
        }
        HalfMaxDefinition::ValueRatio => Some(10f64.powf(m_b - m_s)),
    }
}

/// Runs one experiment per sample size, reusing every other parameter.
pub fn sweep_sizes(
    ground_truth: &DistributionSpec,
    sizes: &[usize],
    num_sets: usize,
    replicates: usize,
    coverages: &[f64],
    master_seed: u64,
    options: ExperimentOptions,
) -> Result<Vec<(usize, CoverageReport)>, Error> {
    if sizes.is_empty() {
        return Err(Error::InvalidData("size sweep needs at least one size".into()));
    }
    let mu = ground_truth.true_mean();
    let mut out = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let exp = Experiment::new(
            ground_truth.clone(),
            n,
            num_sets,
            replicates,
            coverages.to_vec(),
            master_seed,
            options,
        )?;
        let records = run_experiment(&exp)?;
        out.push((n, coverage_report(&records, mu, &exp)));
    }
    Ok(out)
}

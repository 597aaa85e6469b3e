//! Bootstrap resampling: the standard percentile bootstrap, the Bayesian
//! bootstrap built on flat-Dirichlet weights (gaps construction), percentile
//! interval extraction, and the optional variants (naive weights as a
//! negative control, likelihood-weighted regions, pseudovalue augmentation).

use crate::distributions::Sample;
use crate::error::Error;
use crate::stream::Stream;

/// Which resampling scheme produced a replicate set or interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BootstrapMethod {
    Standard,
    Bayesian,
    BayesianWeighted,
}

impl BootstrapMethod {
    pub fn label(&self) -> &'static str {
        match self {
            BootstrapMethod::Standard => "standard",
            BootstrapMethod::Bayesian => "bayesian",
            BootstrapMethod::BayesianWeighted => "bayesian-weighted",
        }
    }
}

/// One Bayesian-bootstrap replicate's multinomial parameters: n nonnegative
/// weights summing to 1 within 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

const WEIGHT_SUM_TOL: f64 = 1e-12;

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::InvalidData("weight vector is empty".into()));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidData("weights must be finite and nonnegative".into()));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidData(format!(
                "weights sum to {sum}, outside 1 +- {WEIGHT_SUM_TOL}"
            )));
        }
        Ok(WeightVector { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }
}

/// B bootstrap replicate means, with relative likelihoods when produced by
/// the weighted Bayesian variant.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplicateSet {
    means: Vec<f64>,
    /// Relative posterior likelihoods exp(log L* - max log L*), present iff
    /// method is BayesianWeighted. Accumulated in log space so that n >~ 50
    /// does not underflow, and clamped positive.
    likelihoods: Option<Vec<f64>>,
    method: BootstrapMethod,
}

impl ReplicateSet {
    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn likelihoods(&self) -> Option<&[f64]> {
        self.likelihoods.as_deref()
    }

    pub fn method(&self) -> BootstrapMethod {
        self.method
    }

    pub fn len(&self) -> usize {
        self.means.len()
    }

    pub fn is_empty(&self) -> bool {
        self.means.is_empty()
    }
}

/// A percentile interval or credibility region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalEstimate {
    pub lower: f64,
    pub upper: f64,
    pub nominal_coverage: f64,
    pub method: BootstrapMethod,
}

/// Pseudovalue augmentation modes: ways to extend a sample with one extra
/// synthetic value meant to widen small-sample intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PseudovalueMode {
    /// Append x_max.
    Max,
    /// Append (x_max/x_min)^(1/n), the printed formula.
    ScaledMax,
}

/// Standard percentile bootstrap: B replicates, each the mean of n values
/// drawn with replacement from the sample.
pub fn standard_bootstrap(sample: &Sample, b: usize, stream: &mut Stream) -> ReplicateSet {
    assert!(b >= 1, "replicate count must be at least 1");
    let values = sample.values();
    let n = values.len();
    let inv_n = 1.0 / n as f64;
    let mut means = Vec::with_capacity(b);
    for _ in 0..b {
        let mut sum = 0.0;
        for _ in 0..n {
            sum += values[stream.index(n)];
        }
        means.push(sum * inv_n);
    }
    ReplicateSet {
        means,
        likelihoods: None,
        method: BootstrapMethod::Standard,
    }
}

/// Writes one flat-Dirichlet draw into `weights` using the gaps construction:
/// n-1 sorted uniforms partition (0,1) into n gaps. `scratch` holds the
/// uniforms between calls to avoid per-replicate allocation.
fn gaps_into(weights: &mut [f64], scratch: &mut Vec<f64>, stream: &mut Stream) {
    let n = weights.len();
    if n == 1 {
        weights[0] = 1.0;
        return;
    }
    scratch.clear();
    for _ in 0..n - 1 {
        scratch.push(stream.open01());
    }
    scratch.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let mut prev = 0.0;
    for i in 0..n - 1 {
        weights[i] = scratch[i] - prev;
        prev = scratch[i];
    }
    weights[n - 1] = 1.0 - prev;
}

/// Flat-Dirichlet weight draw by the gaps construction; each marginal is
/// Beta(1, n-1).
pub fn dirichlet_weights_gaps(n: usize, stream: &mut Stream) -> WeightVector {
    assert!(n >= 1, "weight vector needs at least one entry");
    let mut weights = vec![0.0; n];
    let mut scratch = Vec::with_capacity(n.saturating_sub(1));
    gaps_into(&mut weights, &mut scratch, stream);
    WeightVector { weights }
}

/// Normalized-uniforms weight draw. This is NOT a flat Dirichlet (its
/// marginals are visibly non-Beta for small n); provided only as the
/// negative control and never used by [`bayesian_bootstrap`].
pub fn dirichlet_weights_naive(n: usize, stream: &mut Stream) -> Result<WeightVector, Error> {
    if n < 2 {
        return Err(Error::param("n", n as f64, "naive construction needs n >= 2"));
    }
    let mut weights: Vec<f64> = (0..n).map(|_| stream.open01()).collect();
    let sum: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= sum;
    }
    Ok(WeightVector { weights })
}

fn bayesian_replicates(
    sample: &Sample,
    b: usize,
    stream: &mut Stream,
    with_likelihoods: bool,
) -> (Vec<f64>, Option<Vec<f64>>) {
    assert!(b >= 1, "replicate count must be at least 1");
    let values = sample.values();
    let n = values.len();
    let mut weights = vec![0.0; n];
    let mut scratch = Vec::with_capacity(n.saturating_sub(1));
    let mut means = Vec::with_capacity(b);
    let mut log_likes = if with_likelihoods { Vec::with_capacity(b) } else { Vec::new() };
    for _ in 0..b {
        gaps_into(&mut weights, &mut scratch, stream);
        let mut mean = 0.0;
        for i in 0..n {
            mean += weights[i] * values[i];
        }
        means.push(mean);
        if with_likelihoods {
            let log_l: f64 = weights.iter().map(|w| w.ln()).sum();
            log_likes.push(log_l);
        }
    }
    let likelihoods = with_likelihoods.then(|| {
        let max = log_likes.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        log_likes
            .iter()
            .map(|l| (l - max).exp().max(f64::MIN_POSITIVE))
            .collect()
    });
    (means, likelihoods)
}

/// Bayesian bootstrap: B flat-Dirichlet weightings of the fixed sample
/// values, each contributing the weighted mean x* = sum(pi_i x_i).
pub fn bayesian_bootstrap(sample: &Sample, b: usize, stream: &mut Stream) -> ReplicateSet {
    let (means, _) = bayesian_replicates(sample, b, stream, false);
    ReplicateSet {
        means,
        likelihoods: None,
        method: BootstrapMethod::Bayesian,
    }
}

/// Bayesian bootstrap that also records each replicate's posterior
/// likelihood L* = prod(pi_i), for weighted-CDF interval extraction.
pub fn bayesian_bootstrap_weighted(sample: &Sample, b: usize, stream: &mut Stream) -> ReplicateSet {
    let (means, likelihoods) = bayesian_replicates(sample, b, stream, true);
    ReplicateSet {
        means,
        likelihoods,
        method: BootstrapMethod::BayesianWeighted,
    }
}

/// Order-statistic index for quantile q of B sorted values: ceil(q*B) clamped
/// to [1, B], evaluated as ceil(q*B - 1e-9) so that binary results like
/// 0.975*10000 = 9750.000000000002 do not round up a step. True q*B values
/// are rationals with small denominators, always farther than 1e-9 from an
/// unintended integer.
pub(crate) fn quantile_index(q: f64, b: usize) -> usize {
    let raw = (q * b as f64 - 1e-9).ceil() as i64;
    raw.clamp(1, b as i64) as usize
}

/// Percentile interval at the given nominal coverage: empirical inverse CDF
/// at (1-c)/2 and (1+c)/2 with no interpolation. Ignores likelihoods.
pub fn percentile_interval(
    reps: &ReplicateSet,
    nominal_coverage: f64,
) -> Result<IntervalEstimate, Error> {
    if reps.is_empty() {
        return Err(Error::InvalidData("empty replicate set".into()));
    }
    if !(nominal_coverage > 0.0 && nominal_coverage < 1.0) {
        return Err(Error::param(
            "nominal_coverage",
            nominal_coverage,
            "must lie strictly between 0 and 1",
        ));
    }
    let mut sorted = reps.means.clone();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(interval_from_sorted(
        &sorted,
        nominal_coverage,
        reps.method,
    ))
}

/// Percentile interval extraction on means that are already sorted
/// ascending; used by the evaluation loop to sort once per replicate set.
pub(crate) fn interval_from_sorted(
    sorted: &[f64],
    nominal_coverage: f64,
    method: BootstrapMethod,
) -> IntervalEstimate {
    let b = sorted.len();
    let q_lo = (1.0 - nominal_coverage) / 2.0;
    let q_up = (1.0 + nominal_coverage) / 2.0;
    IntervalEstimate {
        lower: sorted[quantile_index(q_lo, b) - 1],
        upper: sorted[quantile_index(q_up, b) - 1],
        nominal_coverage,
        method,
    }
}

/// Weighted percentile interval: sorts (mean, likelihood) pairs by mean and
/// returns the first mean whose normalized cumulative likelihood reaches the
/// lower and upper quantiles.
pub fn weighted_percentile_interval(
    reps: &ReplicateSet,
    nominal_coverage: f64,
) -> Result<IntervalEstimate, Error> {
    let likelihoods = reps
        .likelihoods()
        .ok_or_else(|| Error::InvalidData("replicate set has no likelihoods".into()))?;
    if !(nominal_coverage > 0.0 && nominal_coverage < 1.0) {
        return Err(Error::param(
            "nominal_coverage",
            nominal_coverage,
            "must lie strictly between 0 and 1",
        ));
    }
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_unstable_by(|&a, &b| reps.means[a].partial_cmp(&reps.means[b]).unwrap());
    let sorted_means: Vec<f64> = order.iter().map(|&i| reps.means[i]).collect();
    let sorted_likes: Vec<f64> = order.iter().map(|&i| likelihoods[i]).collect();
    Ok(weighted_interval_from_sorted(
        &sorted_means,
        &sorted_likes,
        nominal_coverage,
        reps.method,
    ))
}

pub(crate) fn weighted_interval_from_sorted(
    sorted_means: &[f64],
    sorted_likes: &[f64],
    nominal_coverage: f64,
    method: BootstrapMethod,
) -> IntervalEstimate {
    let total: f64 = sorted_likes.iter().sum();
    // The same guard as quantile_index: q*total picks up float noise (e.g.
    // 0.975*1000 = 975.0000000000001 for unit likelihoods), which without a
    // margin would push the crossing one replicate too far.
    let guard = 1e-9 * total;
    let q_lo = (1.0 - nominal_coverage) / 2.0 * total - guard;
    let q_up = (1.0 + nominal_coverage) / 2.0 * total - guard;
    let mut lower = sorted_means[sorted_means.len() - 1];
    let mut upper = sorted_means[sorted_means.len() - 1];
    let mut cum = 0.0;
    let mut lower_found = false;
    for (i, &m) in sorted_means.iter().enumerate() {
        cum += sorted_likes[i];
        if !lower_found && cum >= q_lo {
            lower = m;
            lower_found = true;
        }
        if cum >= q_up {
            upper = m;
            break;
        }
    }
    IntervalEstimate {
        lower,
        upper,
        nominal_coverage,
        method,
    }
}

/// Appends a pseudovalue to the sample: x_max (mode Max) or
/// (x_max/x_min)^(1/n) (mode ScaledMax, the printed formula, which need not
/// lie between x_min and x_max).
pub fn pseudovalue_augment(sample: &Sample, mode: PseudovalueMode) -> Result<Sample, Error> {
    let values = sample.values();
    if values.iter().any(|v| *v <= 0.0) {
        return Err(Error::InvalidData(
            "pseudovalue augmentation requires strictly positive values".into(),
        ));
    }
    let n = values.len();
    let extra = match mode {
        PseudovalueMode::Max => sample.max(),
        PseudovalueMode::ScaledMax => {
            if n < 2 {
                return Err(Error::InvalidData(
                    "scaled-max pseudovalue needs at least two values".into(),
                ));
            }
            (sample.max() / sample.min()).powf(1.0 / n as f64)
        }
    };
    let mut out = values.to_vec();
    out.push(extra);
    Sample::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math;

    fn sample(values: &[f64]) -> Sample {
        Sample::new(values.to_vec()).unwrap()
    }

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![0.5, 0.6]).is_err());
        assert!(WeightVector::new(vec![-0.1, 1.1]).is_err());
        assert!(WeightVector::new(vec![0.25; 4]).is_ok());
        // Within the 1e-12 sum tolerance.
        assert!(WeightVector::new(vec![0.5, 0.5 + 5e-13]).is_ok());
    }

    #[test]
    fn constant_sample_gives_constant_replicates() {
        let s = sample(&[3.5; 8]);
        let mut stream = Stream::from_seed(1);
        let std = standard_bootstrap(&s, 100, &mut stream);
        assert!(std.means().iter().all(|m| *m == 3.5));
        let bay = bayesian_bootstrap(&s, 100, &mut stream);
        assert!(bay.means().iter().all(|m| (m - 3.5).abs() < 1e-12));
        let iv = percentile_interval(&std, 0.95).unwrap();
        assert_eq!((iv.lower, iv.upper), (3.5, 3.5));
    }

    #[test]
    fn replicate_means_stay_within_sample_hull() {
        let s = sample(&[1e-17, 4.2e-3, 0.9, 1.7e3]);
        let mut stream = Stream::from_seed(2);
        for reps in [
            standard_bootstrap(&s, 5000, &mut stream),
            bayesian_bootstrap(&s, 5000, &mut stream),
        ] {
            for m in reps.means() {
                assert!(*m >= s.min() && *m <= s.max());
            }
        }
    }

    // The introduction's toy sample: four zeros and a one.
    #[test]
    fn toy_sample_standard_bootstrap_collapses_to_zero() {
        let s = sample(&[0.0, 0.0, 0.0, 0.0, 1.0]);
        let mut stream = Stream::from_seed(42);
        let reps = standard_bootstrap(&s, 100_000, &mut stream);
        let zero_fraction =
            reps.means().iter().filter(|m| **m == 0.0).count() as f64 / reps.len() as f64;
        // P(the single 1 is never drawn) = (4/5)^5 = 0.32768.
        assert!((zero_fraction - 0.32768).abs() < 0.005, "got {zero_fraction}");
        let iv = percentile_interval(&reps, 0.95).unwrap();
        assert_eq!(iv.lower, 0.0);
        assert!(iv.upper > 0.0);
    }

    #[test]
    fn toy_sample_bayesian_region_matches_beta_quantiles() {
        let s = sample(&[0.0, 0.0, 0.0, 0.0, 1.0]);
        let mut stream = Stream::from_seed(42);
        let reps = bayesian_bootstrap(&s, 100_000, &mut stream);
        assert!(reps.means().iter().all(|m| *m > 0.0));
        let iv = percentile_interval(&reps, 0.95).unwrap();
        // x* = pi_5 ~ Beta(1,4); quantiles from 1-(1-q)^4.
        assert!((iv.lower - 0.006307245295376674).abs() < 1e-3, "lower {}", iv.lower);
        assert!((iv.upper - 0.6023646595854861).abs() < 1e-2, "upper {}", iv.upper);
    }

    #[test]
    fn gaps_weights_have_dirichlet_moments() {
        let n = 5;
        let draws = 100_000;
        let mut stream = Stream::from_seed(7);
        let mut sums = vec![0.0; n];
        let mut sq_sums = vec![0.0; n];
        for _ in 0..draws {
            let w = dirichlet_weights_gaps(n, &mut stream);
            let sum: f64 = w.weights().iter().sum();
            assert!((sum - 1.0).abs() <= WEIGHT_SUM_TOL);
            for (i, &wi) in w.weights().iter().enumerate() {
                sums[i] += wi;
                sq_sums[i] += wi * wi;
            }
        }
        for i in 0..n {
            let mean = sums[i] / draws as f64;
            let var = sq_sums[i] / draws as f64 - mean * mean;
            assert!((mean - 0.2).abs() < 0.003, "marginal {i} mean {mean}");
            // Beta(1,4) variance = 4/150.
            let want = 4.0 / 150.0;
            assert!((var - want).abs() < 0.05 * want, "marginal {i} var {var}");
        }
    }

    #[test]
    fn gaps_weights_single_entry_is_unit() {
        let mut stream = Stream::from_seed(1);
        let w = dirichlet_weights_gaps(1, &mut stream);
        assert_eq!(w.weights(), &[1.0]);
    }

    #[test]
    fn gaps_marginals_pass_ks_against_beta() {
        // Beta(1, n-1) CDF is 1-(1-x)^(n-1); every marginal must pass at
        // KS < 0.02 with 1e4 draws.
        for &n in &[2usize, 5, 10, 50] {
            let draws = 10_000;
            let mut stream = Stream::child(0xD1CE, &[n as u64]);
            let mut marginals = vec![Vec::with_capacity(draws); n];
            for _ in 0..draws {
                let w = dirichlet_weights_gaps(n, &mut stream);
                for (i, &wi) in w.weights().iter().enumerate() {
                    marginals[i].push(wi);
                }
            }
            let e = (n - 1) as f64;
            for (i, mut xs) in marginals.into_iter().enumerate() {
                xs.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
                let d = math::ks_distance(&xs, |x| 1.0 - (1.0 - x).powf(e));
                assert!(d < 0.02, "n={n} marginal {i}: KS {d}");
            }
        }
    }

    #[test]
    fn naive_weights_fail_ks_for_small_n() {
        // The negative control: normalized uniforms are not flat-Dirichlet.
        for &n in &[2usize, 3] {
            let draws = 10_000;
            let mut stream = Stream::child(0xD1CF, &[n as u64]);
            let mut first = Vec::with_capacity(draws);
            for _ in 0..draws {
                let w = dirichlet_weights_naive(n, &mut stream).unwrap();
                let sum: f64 = w.weights().iter().sum();
                assert!((sum - 1.0).abs() <= WEIGHT_SUM_TOL);
                first.push(w.weights()[0]);
            }
            first.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
            let e = (n - 1) as f64;
            let d = math::ks_distance(&first, |x| 1.0 - (1.0 - x).powf(e));
            assert!(d > 0.05, "n={n}: naive KS {d} unexpectedly small");
        }
        assert!(dirichlet_weights_naive(1, &mut Stream::from_seed(0)).is_err());
    }

    #[test]
    fn percentile_interval_order_statistics() {
        let means: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        let reps = ReplicateSet {
            means,
            likelihoods: None,
            method: BootstrapMethod::Standard,
        };
        let iv95 = percentile_interval(&reps, 0.95).unwrap();
        assert_eq!((iv95.lower, iv95.upper), (3.0, 98.0));
        let iv50 = percentile_interval(&reps, 0.50).unwrap();
        assert_eq!((iv50.lower, iv50.upper), (25.0, 75.0));
        assert!(percentile_interval(&reps, 0.0).is_err());
        assert!(percentile_interval(&reps, 1.0).is_err());
    }

    #[test]
    fn quantile_index_guards_float_noise() {
        // 0.975 * 10000 evaluates to 9750.000000000002 in binary; the guard
        // must keep the index at 9750.
        assert_eq!(quantile_index(0.975, 10_000), 9750);
        assert_eq!(quantile_index(0.025, 10_000), 250);
        assert_eq!(quantile_index(0.025, 100), 3);
        assert_eq!(quantile_index(0.5, 1), 1);
        assert_eq!(quantile_index(1e-9, 100), 1);
        assert_eq!(quantile_index(0.999999999, 100), 100);
    }

    #[test]
    fn percentile_interval_is_monotone_in_coverage() {
        let s = sample(&[0.1, 0.4, 1.0, 30.0, 800.0]);
        let mut stream = Stream::from_seed(9);
        let reps = standard_bootstrap(&s, 4000, &mut stream);
        let mut prev = percentile_interval(&reps, 0.5).unwrap();
        for c in [0.65, 0.8, 0.95] {
            let iv = percentile_interval(&reps, c).unwrap();
            assert!(iv.lower <= prev.lower && iv.upper >= prev.upper);
            prev = iv;
        }
    }

    #[test]
    fn weighted_interval_concentrates_on_heavy_likelihoods() {
        let reps = ReplicateSet {
            means: vec![1.0, 2.0, 3.0],
            likelihoods: Some(vec![0.98, 0.01, 0.01]),
            method: BootstrapMethod::BayesianWeighted,
        };
        let iv = weighted_percentile_interval(&reps, 0.5).unwrap();
        assert_eq!((iv.lower, iv.upper), (1.0, 1.0));
        let reps2 = ReplicateSet {
            means: vec![1.0, 2.0],
            likelihoods: Some(vec![0.5, 0.5]),
            method: BootstrapMethod::BayesianWeighted,
        };
        let iv2 = weighted_percentile_interval(&reps2, 0.95).unwrap();
        assert_eq!((iv2.lower, iv2.upper), (1.0, 2.0));
    }

    #[test]
    fn weighted_interval_with_uniform_likelihoods_matches_unweighted() {
        let s = sample(&[2.0, 5.0, 11.0, 17.0, 23.0]);
        let mut stream = Stream::from_seed(13);
        let reps = bayesian_bootstrap_weighted(&s, 4000, &mut stream);
        let mut uniform = reps.clone();
        uniform.likelihoods = Some(vec![1.0; reps.len()]);
        for c in [0.5, 0.8, 0.95] {
            let weighted = weighted_percentile_interval(&uniform, c).unwrap();
            let plain = percentile_interval(&reps, c).unwrap();
            assert_eq!(weighted.lower, plain.lower, "c={c}");
            assert_eq!(weighted.upper, plain.upper, "c={c}");
        }
    }

    #[test]
    fn weighted_variants_record_positive_likelihoods() {
        let s = sample(&[1.0, 2.0, 4.0, 8.0]);
        let mut stream = Stream::from_seed(3);
        let reps = bayesian_bootstrap_weighted(&s, 1000, &mut stream);
        let likes = reps.likelihoods().unwrap();
        assert_eq!(likes.len(), 1000);
        assert!(likes.iter().all(|l| *l > 0.0 && *l <= 1.0));
        // The plain variant records none, and the interval extractor refuses it.
        let plain = bayesian_bootstrap(&s, 100, &mut stream);
        assert!(plain.likelihoods().is_none());
        assert!(weighted_percentile_interval(&plain, 0.95).is_err());
    }

    #[test]
    fn weighted_likelihoods_survive_large_n() {
        // prod(pi_i) for n=200 is far below f64 range; the log-space path
        // must still produce usable relative likelihoods.
        let values: Vec<f64> = (1..=200).map(|i| i as f64).collect();
        let s = sample(&values);
        let mut stream = Stream::from_seed(4);
        let reps = bayesian_bootstrap_weighted(&s, 200, &mut stream);
        let likes = reps.likelihoods().unwrap();
        assert!(likes.iter().all(|l| l.is_finite() && *l > 0.0));
        assert!(likes.iter().cloned().fold(f64::MIN, f64::max) == 1.0);
    }

    #[test]
    fn pseudovalue_modes() {
        let s = sample(&[1.0, 1.0, 1.0]);
        let a = pseudovalue_augment(&s, PseudovalueMode::Max).unwrap();
        assert_eq!(a.values(), &[1.0, 1.0, 1.0, 1.0]);

        let s = sample(&[1e-4, 1e-2, 1.0]);
        let b = pseudovalue_augment(&s, PseudovalueMode::ScaledMax).unwrap();
        let appended = *b.values().last().unwrap();
        assert!((appended - 10f64.powf(4.0 / 3.0)).abs() < 1e-12, "got {appended}");

        let s = sample(&[2.0, 8.0]);
        let c = pseudovalue_augment(&s, PseudovalueMode::Max).unwrap();
        assert_eq!(c.values(), &[2.0, 8.0, 8.0]);

        let zero = sample(&[0.0, 1.0]);
        assert!(pseudovalue_augment(&zero, PseudovalueMode::Max).is_err());
        let single = sample(&[5.0]);
        assert!(pseudovalue_augment(&single, PseudovalueMode::ScaledMax).is_err());
        assert!(pseudovalue_augment(&single, PseudovalueMode::Max).is_ok());
    }

    #[test]
    fn bootstraps_are_deterministic_per_stream() {
        let s = sample(&[0.3, 12.0, 7.5, 0.004]);
        let a = standard_bootstrap(&s, 500, &mut Stream::child(5, &[0, 1]));
        let b = standard_bootstrap(&s, 500, &mut Stream::child(5, &[0, 1]));
        assert_eq!(a, b);
        let c = bayesian_bootstrap(&s, 500, &mut Stream::child(5, &[0, 2]));
        let d = bayesian_bootstrap(&s, 500, &mut Stream::child(5, &[0, 2]));
        assert_eq!(c, d);
    }
}

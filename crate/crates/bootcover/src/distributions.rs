//! Ground-truth sources: five parametric families plus empirical datasets,
//! with seeded sampling, exact means, and moment statistics.
//!
//! All parametric families except the truncated normal have strictly positive
//! support spanning (potentially) many orders of magnitude; the truncated
//! normal is included as the well-behaved control and is truncated at zero so
//! that log statistics stay defined.

use crate::error::Error;
use crate::math;
use crate::stream::Stream;

const LN_10: f64 = std::f64::consts::LN_10;

/// A validated description of a ground-truth distribution.
#[derive(Debug, Clone, PartialEq)]
pub enum DistributionSpec {
    /// x = 10^y with y uniform on [-k, 0]; values span k decades below 1.
    LogUniform { k: f64 },
    /// Density (1-alpha) x^(-alpha) on (0, 1], alpha in (0,1).
    PowerLawUnit { alpha: f64 },
    /// Pareto density (alpha-1) x^(-alpha) on [1, inf), alpha > 2.
    ParetoTail { alpha: f64 },
    /// Rate-lambda exponential.
    Exponential { lambda: f64 },
    /// Normal(mu, sigma) conditioned on x > 0.
    TruncatedNormal { mu: f64, sigma: f64 },
    /// Discrete uniform over a fixed dataset of positive reals.
    Empirical { values: Vec<f64> },
}

/// Moment statistics of a ground truth (the columns of the distribution
/// metrics table). Entries whose defining integral diverges are `None`,
/// never a sentinel value.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSummary {
    pub sigma_x: Option<f64>,
    pub sigma_log10_x: f64,
    pub skewness: Option<f64>,
    pub excess_kurtosis: Option<f64>,
}

/// An ordered sample of n finite observations.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Validates n >= 1 and finiteness. Positivity is an invariant of the
    /// family samplers, not of this constructor: resampling operations also
    /// accept nonnegative data (e.g. a sample containing exact zeros).
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::InvalidData("sample must hold at least one value".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidData(format!("non-finite sample value {bad}")));
        }
        Ok(Sample { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }
}

impl DistributionSpec {
    pub fn log_uniform(k: f64) -> Result<Self, Error> {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::param("k", k, "decade span must be positive"));
        }
        Ok(DistributionSpec::LogUniform { k })
    }

    pub fn power_law_unit(alpha: f64) -> Result<Self, Error> {
        if !(alpha.is_finite() && alpha > 0.0 && alpha < 1.0) {
            return Err(Error::param("alpha", alpha, "exponent must lie in (0,1)"));
        }
        Ok(DistributionSpec::PowerLawUnit { alpha })
    }

    pub fn pareto_tail(alpha: f64) -> Result<Self, Error> {
        if !(alpha.is_finite() && alpha > 2.0) {
            return Err(Error::param("alpha", alpha, "exponent must exceed 2"));
        }
        Ok(DistributionSpec::ParetoTail { alpha })
    }

    pub fn exponential(lambda: f64) -> Result<Self, Error> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::param("lambda", lambda, "rate must be positive"));
        }
        Ok(DistributionSpec::Exponential { lambda })
    }

    pub fn truncated_normal(mu: f64, sigma: f64) -> Result<Self, Error> {
        if !mu.is_finite() {
            return Err(Error::param("mu", mu, "location must be finite"));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::param("sigma", sigma, "scale must be positive"));
        }
        Ok(DistributionSpec::TruncatedNormal { mu, sigma })
    }

    pub fn empirical(values: Vec<f64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::InvalidData("empirical dataset is empty".into()));
        }
        if let Some(bad) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::InvalidData(format!(
                "empirical dataset values must be finite and strictly positive, found {bad}"
            )));
        }
        Ok(DistributionSpec::Empirical { values })
    }

    /// Short human-readable tag used in reports and file metadata.
    pub fn descriptor(&self) -> String {
        match self {
            DistributionSpec::LogUniform { k } => format!("log-uniform(k={k})"),
            DistributionSpec::PowerLawUnit { alpha } => format!("power-law-unit(alpha={alpha})"),
            DistributionSpec::ParetoTail { alpha } => format!("pareto(alpha={alpha})"),
            DistributionSpec::Exponential { lambda } => format!("exponential(lambda={lambda})"),
            DistributionSpec::TruncatedNormal { mu, sigma } => {
                format!("normal(mu={mu},sigma={sigma})")
            }
            DistributionSpec::Empirical { values } => format!("empirical(n={})", values.len()),
        }
    }

    /// Draws n values using inverse-CDF transforms of open-(0,1) uniforms
    /// (rejection for the truncated normal, index draws for empirical data).
    pub fn sample(&self, n: usize, stream: &mut Stream) -> Result<Sample, Error> {
        if n < 1 {
            return Err(Error::param("n", n as f64, "sample size must be at least 1"));
        }
        let mut values = Vec::with_capacity(n);
        match self {
            DistributionSpec::LogUniform { k } => {
                for _ in 0..n {
                    values.push(10f64.powf(-k * stream.open01()));
                }
            }
            DistributionSpec::PowerLawUnit { alpha } => {
                let exp = 1.0 / (1.0 - alpha);
                for _ in 0..n {
                    values.push(stream.open01().powf(exp));
                }
            }
            DistributionSpec::ParetoTail { alpha } => {
                let exp = -1.0 / (alpha - 1.0);
                for _ in 0..n {
                    values.push(stream.open01().powf(exp));
                }
            }
            DistributionSpec::Exponential { lambda } => {
                for _ in 0..n {
                    values.push(-stream.open01().ln() / lambda);
                }
            }
            DistributionSpec::TruncatedNormal { mu, sigma } => {
                let mut spare = None;
                for _ in 0..n {
                    loop {
                        let x = mu + sigma * stream.standard_normal(&mut spare);
                        if x > 0.0 {
                            values.push(x);
                            break;
                        }
                    }
                }
            }
            DistributionSpec::Empirical { values: data } => {
                for _ in 0..n {
                    values.push(data[stream.index(data.len())]);
                }
            }
        }
        Sample::new(values)
    }

    /// Exact mean of the ground truth.
    pub fn true_mean(&self) -> f64 {
        match self {
            DistributionSpec::LogUniform { k } => (1.0 - 10f64.powf(-k)) / (k * LN_10),
            DistributionSpec::PowerLawUnit { alpha } => (1.0 - alpha) / (2.0 - alpha),
            DistributionSpec::ParetoTail { alpha } => (alpha - 1.0) / (alpha - 2.0),
            DistributionSpec::Exponential { lambda } => 1.0 / lambda,
            DistributionSpec::TruncatedNormal { mu, sigma } => {
                let a = -mu / sigma;
                let z = 1.0 - math::normal_cdf(a);
                mu + sigma * math::normal_pdf(a) / z
            }
            DistributionSpec::Empirical { values } => {
                values.iter().sum::<f64>() / values.len() as f64
            }
        }
    }

    /// Moment statistics, analytic where closed forms exist and by adaptive
    /// quadrature over the density otherwise. Rejects empirical specs; use
    /// [`sample_moment_summary`] for dataset statistics.
    pub fn moment_summary(&self) -> Result<MomentSummary, Error> {
        match self {
            DistributionSpec::LogUniform { k } => {
                let raw = |m: f64| (1.0 - 10f64.powf(-m * k)) / (m * k * LN_10);
                let (sigma, skew, exkurt) = central_from_raw(raw(1.0), raw(2.0), raw(3.0), raw(4.0));
                Ok(MomentSummary {
                    sigma_x: Some(sigma),
                    sigma_log10_x: k / 12f64.sqrt(),
                    skewness: Some(skew),
                    excess_kurtosis: Some(exkurt),
                })
            }
            DistributionSpec::PowerLawUnit { alpha } => {
                let raw = |m: f64| (1.0 - alpha) / (m + 1.0 - alpha);
                let (sigma, skew, exkurt) = central_from_raw(raw(1.0), raw(2.0), raw(3.0), raw(4.0));
                Ok(MomentSummary {
                    sigma_x: Some(sigma),
                    sigma_log10_x: 1.0 / ((1.0 - alpha) * LN_10),
                    skewness: Some(skew),
                    excess_kurtosis: Some(exkurt),
                })
            }
            DistributionSpec::ParetoTail { alpha } => {
                // E[x^m] = (alpha-1)/(alpha-1-m) requires alpha-1 > m; with
                // 2 < alpha <= 3 the variance already diverges.
                let moment_defined = |m: f64| alpha - 1.0 > m;
                let raw = |m: f64| (alpha - 1.0) / (alpha - 1.0 - m);
                let (sigma_x, skewness, excess_kurtosis) = if moment_defined(4.0) {
                    let (s, sk, xk) = central_from_raw(raw(1.0), raw(2.0), raw(3.0), raw(4.0));
                    (Some(s), Some(sk), Some(xk))
                } else if moment_defined(3.0) {
                    let e1 = raw(1.0);
                    let e2 = raw(2.0);
                    let e3 = raw(3.0);
                    let var = e2 - e1 * e1;
                    let c3 = e3 - 3.0 * e1 * e2 + 2.0 * e1.powi(3);
                    (Some(var.sqrt()), Some(c3 / var.powf(1.5)), None)
                } else if moment_defined(2.0) {
                    let var = raw(2.0) - raw(1.0).powi(2);
                    (Some(var.sqrt()), None, None)
                } else {
                    (None, None, None)
                };
                Ok(MomentSummary {
                    sigma_x,
                    sigma_log10_x: 1.0 / ((alpha - 1.0) * LN_10),
                    skewness,
                    excess_kurtosis,
                })
            }
            DistributionSpec::Exponential { lambda } => Ok(MomentSummary {
                sigma_x: Some(1.0 / lambda),
                // log10(x) has the lambda-independent variance pi^2/6 nats^2.
                sigma_log10_x: std::f64::consts::PI / (6f64.sqrt() * LN_10),
                skewness: Some(2.0),
                excess_kurtosis: Some(6.0),
            }),
            DistributionSpec::TruncatedNormal { mu, sigma } => {
                Ok(truncated_normal_moments(*mu, *sigma))
            }
            DistributionSpec::Empirical { .. } => Err(Error::Unsupported(
                "moment_summary is defined for parametric families; use sample_moment_summary for datasets"
                    .into(),
            )),
        }
    }
}

/// Central-moment statistics (sigma, skewness, excess kurtosis) from raw
/// moments E[x^m], m = 1..4.
fn central_from_raw(e1: f64, e2: f64, e3: f64, e4: f64) -> (f64, f64, f64) {
    let var = e2 - e1 * e1;
    let c3 = e3 - 3.0 * e1 * e2 + 2.0 * e1.powi(3);
    let c4 = e4 - 4.0 * e1 * e3 + 6.0 * e1 * e1 * e2 - 3.0 * e1.powi(4);
    let sigma = var.sqrt();
    (sigma, c3 / var.powf(1.5), c4 / (var * var) - 3.0)
}

/// Relative tolerance of the numeric moment quadrature.
const QUAD_REL_TOL: f64 = 1e-6;
/// Tail mass excluded on each side of the quadrature domain.
const QUAD_TAIL: f64 = 1e-12;

/// Moments of the zero-truncated normal: mean and sigma from the standard
/// hazard-function identities, higher and log moments by adaptive Simpson on
/// a log-spaced grid over [F^-1(QUAD_TAIL), F^-1(1-QUAD_TAIL)].
fn truncated_normal_moments(mu: f64, sigma: f64) -> MomentSummary {
    let a = -mu / sigma;
    let z = 1.0 - math::normal_cdf(a);
    let hazard = math::normal_pdf(a) / z;
    let mean = mu + sigma * hazard;
    let var = sigma * sigma * (1.0 + a * hazard - hazard * hazard);
    let sigma_x = var.sqrt();

    let phi_a = math::normal_cdf(a);
    let quantile = |p: f64| mu + sigma * math::normal_quantile(phi_a + p * z);
    let lo = quantile(QUAD_TAIL).max(f64::MIN_POSITIVE);
    let hi = quantile(1.0 - QUAD_TAIL);
    let density = move |x: f64| {
        let t = (x - mu) / sigma;
        math::normal_pdf(t) / (sigma * z)
    };
    let expect = |f: &dyn Fn(f64) -> f64| {
        math::integrate_log_spaced(|x| f(x) * density(x), lo, hi, QUAD_REL_TOL)
    };

    // Two passes for the log variance: E[(log x - E log x)^2] stays
    // well-conditioned where E[log^2] - (E log)^2 would cancel badly for
    // narrow distributions far from 1.
    let l1 = expect(&|x: f64| x.log10());
    let vlog = expect(&|x: f64| {
        let d = x.log10() - l1;
        d * d
    });
    let c3 = expect(&|x: f64| (x - mean).powi(3));
    let c4 = expect(&|x: f64| (x - mean).powi(4));

    MomentSummary {
        sigma_x: Some(sigma_x),
        sigma_log10_x: vlog.sqrt(),
        skewness: Some(c3 / sigma_x.powi(3)),
        excess_kurtosis: Some(c4 / sigma_x.powi(4) - 3.0),
    }
}

/// Population moment statistics of a dataset treated as its own ground truth
/// (divisor n, not n-1). Requires strictly positive values so that log
/// statistics are defined.
pub fn sample_moment_summary(values: &[f64]) -> Result<MomentSummary, Error> {
    if values.is_empty() {
        return Err(Error::InvalidData("empty dataset".into()));
    }
    if let Some(bad) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        return Err(Error::InvalidData(format!(
            "dataset values must be finite and strictly positive, found {bad}"
        )));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let mut c2 = 0.0;
    let mut c3 = 0.0;
    let mut c4 = 0.0;
    let mut l1 = 0.0;
    let mut l2 = 0.0;
    for &x in values {
        let d = x - mean;
        c2 += d * d;
        c3 += d * d * d;
        c4 += d * d * d * d;
        let lg = x.log10();
        l1 += lg;
        l2 += lg * lg;
    }
    c2 /= n;
    c3 /= n;
    c4 /= n;
    l1 /= n;
    l2 /= n;
    let sigma = c2.sqrt();
    Ok(MomentSummary {
        sigma_x: Some(sigma),
        sigma_log10_x: (l2 - l1 * l1).max(0.0).sqrt(),
        skewness: Some(c3 / c2.powf(1.5)),
        excess_kurtosis: Some(c4 / (c2 * c2) - 3.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(got: f64, want: f64, tol: f64) -> bool {
        (got - want).abs() <= tol
    }

    fn rel_close(got: f64, want: f64, tol: f64) -> bool {
        (got - want).abs() <= tol * want.abs()
    }

    #[test]
    fn constructors_reject_out_of_range_parameters() {
        assert!(DistributionSpec::log_uniform(0.0).is_err());
        assert!(DistributionSpec::log_uniform(-1.0).is_err());
        assert!(DistributionSpec::log_uniform(f64::NAN).is_err());
        assert!(DistributionSpec::power_law_unit(0.0).is_err());
        assert!(DistributionSpec::power_law_unit(1.0).is_err());
        assert!(DistributionSpec::pareto_tail(2.0).is_err());
        assert!(DistributionSpec::exponential(0.0).is_err());
        assert!(DistributionSpec::truncated_normal(30.0, 0.0).is_err());
        assert!(DistributionSpec::truncated_normal(f64::INFINITY, 1.0).is_err());
        assert!(DistributionSpec::empirical(vec![]).is_err());
        assert!(DistributionSpec::empirical(vec![1.0, 0.0]).is_err());
        assert!(DistributionSpec::empirical(vec![1.0, -2.0]).is_err());
        assert!(DistributionSpec::empirical(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn sample_type_enforces_structure() {
        assert!(Sample::new(vec![]).is_err());
        assert!(Sample::new(vec![1.0, f64::INFINITY]).is_err());
        let s = Sample::new(vec![0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.mean(), 0.2);
        assert_eq!(s.min(), 0.0);
        assert_eq!(s.max(), 1.0);
    }

    // Closed-form true means, frozen from independent evaluation.
    #[test]
    fn true_means_match_closed_forms() {
        assert!(rel_close(
            DistributionSpec::log_uniform(20.0).unwrap().true_mean(),
            0.021714724095162587,
            1e-12
        ));
        assert_eq!(DistributionSpec::exponential(1.0).unwrap().true_mean(), 1.0);
        assert!(rel_close(
            DistributionSpec::exponential(1e-6).unwrap().true_mean(),
            1e6,
            1e-12
        ));
        assert!(rel_close(
            DistributionSpec::power_law_unit(0.9).unwrap().true_mean(),
            0.09090909090909088,
            1e-12
        ));
        assert!(rel_close(
            DistributionSpec::pareto_tail(2.1).unwrap().true_mean(),
            11.0,
            1e-12
        ));
        // Zero-truncated normal mean exceeds mu by sigma*phi(a)/Z.
        let tn = DistributionSpec::truncated_normal(30.0, 10.0).unwrap();
        assert!(close(tn.true_mean(), 30.044378390319544, 1e-6));
        let tn1 = DistributionSpec::truncated_normal(30.0, 1.0).unwrap();
        assert!(close(tn1.true_mean(), 30.0, 1e-9));
        let emp = DistributionSpec::empirical(vec![1.0, 2.0, 6.0]).unwrap();
        assert_eq!(emp.true_mean(), 3.0);
    }

    // Moment summaries against closed forms evaluated independently.
    #[test]
    fn moment_summary_log_uniform() {
        let m = DistributionSpec::log_uniform(20.0)
            .unwrap()
            .moment_summary()
            .unwrap();
        assert!(rel_close(m.sigma_x.unwrap(), 0.1019109062124965, 1e-10));
        assert!(rel_close(m.sigma_log10_x, 5.773502691896258, 1e-12));
        assert!(rel_close(m.skewness.unwrap(), 6.189760331923396, 1e-10));
        assert!(rel_close(m.excess_kurtosis.unwrap(), 41.778216366485765, 1e-10));
        let m5 = DistributionSpec::log_uniform(5.0)
            .unwrap()
            .moment_summary()
            .unwrap();
        assert!(rel_close(m5.sigma_x.unwrap(), 0.18943371187336439, 1e-10));
        assert!(rel_close(m5.sigma_log10_x, 1.4433756729740645, 1e-12));
        assert!(rel_close(m5.skewness.unwrap(), 2.7871953271758, 1e-10));
        assert!(rel_close(m5.excess_kurtosis.unwrap(), 7.44514388292929, 1e-10));
    }

    #[test]
    fn moment_summary_power_law() {
        let m = DistributionSpec::power_law_unit(0.9)
            .unwrap()
            .moment_summary()
            .unwrap();
        assert!(rel_close(m.sigma_x.unwrap(), 0.19837990021453852, 1e-10));
        assert!(rel_close(m.sigma_log10_x, 4.342944819032519, 1e-12));
        assert!(rel_close(m.skewness.unwrap(), 2.660850403522746, 1e-10));
        assert!(rel_close(m.excess_kurtosis.unwrap(), 6.566483084185684, 1e-10));
        let m1 = DistributionSpec::power_law_unit(0.1)
            .unwrap()
            .moment_summary()
            .unwrap();
        assert!(rel_close(m1.sigma_x.unwrap(), 0.2932031655427135, 1e-10));
        assert!(rel_close(m1.sigma_log10_x, 0.4825494243369464, 1e-12));
        assert!(rel_close(m1.skewness.unwrap(), 0.09205409926725752, 1e-10));
        assert!((m1.excess_kurtosis.unwrap() - -1.2143729286586589).abs() < 1e-10);
    }

    #[test]
    fn moment_summary_pareto_flags_divergent_moments() {
        for alpha in [2.9, 2.1] {
            let m = DistributionSpec::pareto_tail(alpha)
                .unwrap()
                .moment_summary()
                .unwrap();
            assert_eq!(m.sigma_x, None);
            assert_eq!(m.skewness, None);
            assert_eq!(m.excess_kurtosis, None);
        }
        assert!(rel_close(
            DistributionSpec::pareto_tail(2.9)
                .unwrap()
                .moment_summary()
                .unwrap()
                .sigma_log10_x,
            0.22857604310697463,
            1e-12
        ));
        assert!(rel_close(
            DistributionSpec::pareto_tail(2.1)
                .unwrap()
                .moment_summary()
                .unwrap()
                .sigma_log10_x,
            0.3948131653665925,
            1e-12
        ));
        // With alpha > 5 every tabulated moment exists again.
        let m = DistributionSpec::pareto_tail(6.0)
            .unwrap()
            .moment_summary()
            .unwrap();
        assert!(m.sigma_x.is_some() && m.skewness.is_some() && m.excess_kurtosis.is_some());
    }

    #[test]
    fn moment_summary_exponential_is_lambda_independent_beyond_sigma_x() {
        let a = DistributionSpec::exponential(1.0).unwrap().moment_summary().unwrap();
        let b = DistributionSpec::exponential(1e-6).unwrap().moment_summary().unwrap();
        assert!(rel_close(a.sigma_log10_x, 0.5570043140052504, 1e-12));
        assert_eq!(a.sigma_log10_x, b.sigma_log10_x);
        assert_eq!(a.skewness, b.skewness);
        assert_eq!(a.excess_kurtosis, b.excess_kurtosis);
        assert_eq!(a.sigma_x, Some(1.0));
        assert!(rel_close(b.sigma_x.unwrap(), 1e6, 1e-12));
        assert_eq!(a.skewness, Some(2.0));
        assert_eq!(a.excess_kurtosis, Some(6.0));
    }

    // Quadrature values frozen from an independent dense-Simpson evaluation.
    #[test]
    fn moment_summary_truncated_normal_matches_quadrature_oracle() {
        let m = DistributionSpec::truncated_normal(30.0, 10.0)
            .unwrap()
            .moment_summary()
            .unwrap();
        assert!(rel_close(m.sigma_x.unwrap(), 9.933110229922166, 1e-6));
        assert!(rel_close(m.sigma_log10_x, 0.1785916946062344, 1e-4));
        assert!(close(m.skewness.unwrap(), 0.03640581376250236, 1e-4));
        assert!(close(m.excess_kurtosis.unwrap(), -0.08325144259649742, 1e-3));

        let m = DistributionSpec::truncated_normal(30.0, 1.0)
            .unwrap()
            .moment_summary()
            .unwrap();
        assert!(rel_close(m.sigma_x.unwrap(), 1.0, 1e-9));
        assert!(rel_close(m.sigma_log10_x, 0.014496670998675106, 1e-4));
        assert!(close(m.skewness.unwrap(), 0.0, 1e-4));
        assert!(close(m.excess_kurtosis.unwrap(), 0.0, 1e-3));
    }

    #[test]
    fn moment_summary_rejects_empirical() {
        let emp = DistributionSpec::empirical(vec![1.0, 2.0]).unwrap();
        assert!(matches!(emp.moment_summary(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn sample_moment_summary_population_statistics() {
        // Population (divisor n) statistics of {1, 10, 100}.
        let m = sample_moment_summary(&[1.0, 10.0, 100.0]).unwrap();
        assert!(close(m.sigma_x.unwrap(), 44.69899327725402, 1e-10));
        // log10 values {0,1,2}: population sigma = sqrt(2/3).
        assert!(close(m.sigma_log10_x, (2.0f64 / 3.0).sqrt(), 1e-12));
        assert!(sample_moment_summary(&[]).is_err());
        assert!(sample_moment_summary(&[0.0, 1.0]).is_err());
    }

    // Sampling checks: empirical means within 5 Monte Carlo standard errors,
    // log sigmas against closed forms.
    #[test]
    fn sampling_matches_true_mean_within_monte_carlo_error() {
        let n = 1_000_000usize;
        let cases: Vec<DistributionSpec> = vec![
            DistributionSpec::log_uniform(20.0).unwrap(),
            DistributionSpec::log_uniform(5.0).unwrap(),
            DistributionSpec::power_law_unit(0.9).unwrap(),
            DistributionSpec::power_law_unit(0.1).unwrap(),
            DistributionSpec::pareto_tail(2.9).unwrap(),
            DistributionSpec::exponential(1.0).unwrap(),
            DistributionSpec::exponential(1e-6).unwrap(),
            DistributionSpec::truncated_normal(30.0, 10.0).unwrap(),
            DistributionSpec::truncated_normal(30.0, 1.0).unwrap(),
            DistributionSpec::empirical(vec![1.0, 2.0, 3.0]).unwrap(),
        ];
        for (i, spec) in cases.iter().enumerate() {
            let mut stream = Stream::child(0xB007, &[i as u64]);
            let s = spec.sample(n, &mut stream).unwrap();
            let mean = s.mean();
            let sd = {
                let m = mean;
                (s.values().iter().map(|x| (x - m) * (x - m)).sum::<f64>() / n as f64).sqrt()
            };
            let se = sd / (n as f64).sqrt();
            let mu = spec.true_mean();
            assert!(
                (mean - mu).abs() < 5.0 * se,
                "{}: mean {mean} vs mu {mu} (se {se})",
                spec.descriptor()
            );
            assert!(s.values().iter().all(|v| *v > 0.0), "{}", spec.descriptor());
        }
    }

    #[test]
    fn pareto_heavy_tail_checked_by_median() {
        // alpha=2.1 has infinite sample-mean variance; check the median of x
        // against 2^(1/(alpha-1)) instead.
        let spec = DistributionSpec::pareto_tail(2.1).unwrap();
        let mut stream = Stream::child(0xB007, &[99]);
        let mut v = spec.sample(1_000_000, &mut stream).unwrap().values().to_vec();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = v[v.len() / 2];
        assert!(close(median, 1.8778618213234126, 0.01), "median {median}");
    }

    #[test]
    fn sample_log_sigma_matches_closed_forms() {
        let check = |spec: DistributionSpec, want: f64, tol: f64, label: u64| {
            let mut stream = Stream::child(0x516A, &[label]);
            let s = spec.sample(1_000_000, &mut stream).unwrap();
            let logs: Vec<f64> = s.values().iter().map(|x| x.log10()).collect();
            let m = logs.iter().sum::<f64>() / logs.len() as f64;
            let var = logs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / logs.len() as f64;
            let sd = var.sqrt();
            assert!((sd - want).abs() < tol, "{}: sigma_log {sd}", spec.descriptor());
        };
        check(DistributionSpec::log_uniform(20.0).unwrap(), 5.773502691896258, 0.02, 0);
        check(DistributionSpec::pareto_tail(2.1).unwrap(), 0.3948131653665925, 0.005, 1);
        check(DistributionSpec::exponential(1.0).unwrap(), 0.5570043140052504, 0.005, 2);
    }

    #[test]
    fn sampling_is_deterministic_per_stream() {
        let spec = DistributionSpec::log_uniform(20.0).unwrap();
        let a = spec.sample(50, &mut Stream::child(7, &[3])).unwrap();
        let b = spec.sample(50, &mut Stream::child(7, &[3])).unwrap();
        assert_eq!(a, b);
        let c = spec.sample(50, &mut Stream::child(7, &[4])).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn truncated_normal_rejection_never_emits_nonpositive() {
        // mu=1, sigma=10 rejects ~46% of raw draws.
        let spec = DistributionSpec::truncated_normal(1.0, 10.0).unwrap();
        let mut stream = Stream::from_seed(11);
        let s = spec.sample(100_000, &mut stream).unwrap();
        assert!(s.values().iter().all(|v| *v > 0.0));
        assert!(s.min() < 1.0, "rejection sampler should reach small values");
    }

    #[test]
    fn empirical_sampling_draws_with_replacement() {
        let spec = DistributionSpec::empirical(vec![1.0, 2.0, 4.0]).unwrap();
        let mut stream = Stream::from_seed(3);
        let s = spec.sample(10_000, &mut stream).unwrap();
        for v in s.values() {
            assert!([1.0, 2.0, 4.0].contains(v));
        }
        // All three values appear (probability of omission ~ 1e-1761).
        for target in [1.0, 2.0, 4.0] {
            assert!(s.values().contains(&target));
        }
    }
}

//! Artifact writers: trials.csv, coverage.csv, limit CDF files, sweep.csv,
//! summary.json, and the weight-diagnostic files.
//!
//! All real numbers are written in scientific notation with 6 significant
//! digits; integer columns (trial, coverage percent, n, counts) stay plain.

use std::fs;
use std::path::{Path, PathBuf};

use bootcover::distributions::sample_moment_summary;
use bootcover::evaluation::{
    coverage_report, half_max_cdf_ratio, limit_cdf, CoverageReport, Experiment,
    HalfMaxDefinition, LimitSide, TrialRecord,
};
use bootcover::resampling::BootstrapMethod;
use bootcover::{DistributionSpec, MomentSummary};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::CliError;

pub fn format_num(x: f64) -> String {
    format!("{x:.5e}")
}

fn coverage_percent(c: f64) -> i64 {
    (c * 100.0).round() as i64
}

/// Short method label used in CSV headers and file names. The Bayesian side
/// is always "bayes"; the weighted variant is recorded in the config echo.
fn short_label(method: BootstrapMethod) -> &'static str {
    match method {
        BootstrapMethod::Standard => "std",
        BootstrapMethod::Bayesian | BootstrapMethod::BayesianWeighted => "bayes",
    }
}

/// Creates the output directory and refuses to clobber existing artifacts
/// unless `force` is set.
pub fn prepare_out_dir(dir: &Path, files: &[&str], force: bool) -> Result<(), CliError> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    if !force {
        for name in files {
            let path = dir.join(name);
            if path.exists() {
                return Err(CliError::Io(format!(
                    "{} already exists; pass --force to overwrite",
                    path.display()
                )));
            }
        }
    }
    Ok(())
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

pub const RUN_FILES: &[&str] = &[
    "trials.csv",
    "coverage.csv",
    "limit_cdf_std_lower.csv",
    "limit_cdf_std_upper.csv",
    "limit_cdf_bayes_lower.csv",
    "limit_cdf_bayes_upper.csv",
    "summary.json",
];

pub const SWEEP_FILES: &[&str] = &["sweep.csv", "summary.json"];

pub const WEIGHTS_FILES: &[&str] = &["weights_hist.csv", "weights_ks.csv"];

fn trials_csv(records: &[TrialRecord], exp: &Experiment) -> String {
    let mut out = String::from("trial,xbar");
    for method in [BootstrapMethod::Standard, exp.bayes_method()] {
        for &c in &exp.coverages {
            let label = short_label(method);
            let pct = coverage_percent(c);
            out.push_str(&format!(",{label}_{pct}_lo,{label}_{pct}_up"));
        }
    }
    out.push('\n');
    for rec in records {
        out.push_str(&format!("{},{}", rec.trial_index, format_num(rec.sample_mean)));
        for iv in &rec.intervals {
            out.push_str(&format!(",{},{}", format_num(iv.lower), format_num(iv.upper)));
        }
        out.push('\n');
    }
    out
}

fn coverage_csv(report: &CoverageReport) -> String {
    let mut out = String::from("method,coverage,under_pct,over_pct,effective_pct\n");
    for cell in &report.cells {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            short_label(cell.method),
            coverage_percent(cell.nominal_coverage),
            format_num(100.0 * cell.under()),
            format_num(100.0 * cell.over()),
            format_num(100.0 * cell.effective()),
        ));
    }
    out
}

fn limit_cdf_csv(
    records: &[TrialRecord],
    mu: f64,
    method: BootstrapMethod,
    side: LimitSide,
    coverages: &[f64],
) -> Result<String, CliError> {
    let mut out = String::from("coverage,log10_ratio,cum_fraction\n");
    for &c in coverages {
        let cdf = limit_cdf(records, mu, method, c, side)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        if cdf.zero_limit_count > 0 {
            out.push_str(&format!(
                "# coverage={}: {} zero-valued limits mapped one decade below the minimum\n",
                coverage_percent(c),
                cdf.zero_limit_count
            ));
        }
        let pct = coverage_percent(c);
        for (ratio, fraction) in cdf.log_ratios.iter().zip(&cdf.fractions) {
            out.push_str(&format!(
                "{pct},{},{}\n",
                format_num(*ratio),
                format_num(*fraction)
            ));
        }
    }
    Ok(out)
}

fn sweep_csv(results: &[(usize, CoverageReport)]) -> String {
    let mut out = String::from("n,method,coverage,under_pct,over_pct,effective_pct\n");
    for (n, report) in results {
        for cell in &report.cells {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                n,
                short_label(cell.method),
                coverage_percent(cell.nominal_coverage),
                format_num(100.0 * cell.under()),
                format_num(100.0 * cell.over()),
                format_num(100.0 * cell.effective()),
            ));
        }
    }
    out
}

#[derive(Serialize)]
struct MomentsJson {
    sigma_x: Option<f64>,
    sigma_log10_x: f64,
    skewness: Option<f64>,
    excess_kurtosis: Option<f64>,
}

impl From<MomentSummary> for MomentsJson {
    fn from(m: MomentSummary) -> Self {
        MomentsJson {
            sigma_x: m.sigma_x,
            sigma_log10_x: m.sigma_log10_x,
            skewness: m.skewness,
            excess_kurtosis: m.excess_kurtosis,
        }
    }
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    config: &'a ExperimentConfig,
    true_mean: f64,
    sigma_log10_xbar: Option<f64>,
    half_max_ratio_log: Option<f64>,
    half_max_ratio_value: Option<f64>,
    moments: MomentsJson,
}

/// Ground-truth moments: closed/quadrature forms for parametric families,
/// population statistics for empirical datasets.
fn ground_truth_moments(spec: &DistributionSpec) -> Result<MomentSummary, CliError> {
    let result = match spec {
        DistributionSpec::Empirical { values } => sample_moment_summary(values),
        other => other.moment_summary(),
    };
    result.map_err(|e| CliError::Validation(e.to_string()))
}

/// Writes every single-run artifact and returns the summary JSON text.
pub fn write_run_outputs(
    dir: &Path,
    config: &ExperimentConfig,
    spec: &DistributionSpec,
    exp: &Experiment,
    records: &[TrialRecord],
) -> Result<String, CliError> {
    let mu = spec.true_mean();
    let report = coverage_report(records, mu, exp);

    write_file(&dir.join("trials.csv"), &trials_csv(records, exp))?;
    write_file(&dir.join("coverage.csv"), &coverage_csv(&report))?;
    let bayes = exp.bayes_method();
    for (method, side, name) in [
        (BootstrapMethod::Standard, LimitSide::Lower, "limit_cdf_std_lower.csv"),
        (BootstrapMethod::Standard, LimitSide::Upper, "limit_cdf_std_upper.csv"),
        (bayes, LimitSide::Lower, "limit_cdf_bayes_lower.csv"),
        (bayes, LimitSide::Upper, "limit_cdf_bayes_upper.csv"),
    ] {
        let body = limit_cdf_csv(records, mu, method, side, &exp.coverages)?;
        write_file(&dir.join(name), &body)?;
    }

    // Half-max ratios contrast the lower-limit CDFs at the highest coverage.
    let top = *exp.coverages.last().expect("validated nonempty");
    let std_lower = limit_cdf(records, mu, BootstrapMethod::Standard, top, LimitSide::Lower)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let bay_lower = limit_cdf(records, mu, bayes, top, LimitSide::Lower)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let summary = SummaryJson {
        config,
        true_mean: mu,
        sigma_log10_xbar: Some(report.sigma_log10_mean),
        half_max_ratio_log: half_max_cdf_ratio(
            &std_lower,
            &bay_lower,
            HalfMaxDefinition::LogRatio,
        ),
        half_max_ratio_value: half_max_cdf_ratio(
            &std_lower,
            &bay_lower,
            HalfMaxDefinition::ValueRatio,
        ),
        moments: ground_truth_moments(spec)?.into(),
    };
    let text = serde_json::to_string_pretty(&summary)
        .map_err(|e| CliError::Io(format!("cannot serialize summary: {e}")))?;
    write_file(&dir.join("summary.json"), &text)?;
    Ok(text)
}

/// Writes sweep artifacts and returns the summary JSON text. Per-trial and
/// limit-CDF statistics are single-experiment concepts, so their summary
/// fields are null in sweep mode.
pub fn write_sweep_outputs(
    dir: &Path,
    config: &ExperimentConfig,
    spec: &DistributionSpec,
    results: &[(usize, CoverageReport)],
) -> Result<String, CliError> {
    write_file(&dir.join("sweep.csv"), &sweep_csv(results))?;
    let summary = SummaryJson {
        config,
        true_mean: spec.true_mean(),
        sigma_log10_xbar: None,
        half_max_ratio_log: None,
        half_max_ratio_value: None,
        moments: ground_truth_moments(spec)?.into(),
    };
    let text = serde_json::to_string_pretty(&summary)
        .map_err(|e| CliError::Io(format!("cannot serialize summary: {e}")))?;
    write_file(&dir.join("summary.json"), &text)?;
    Ok(text)
}

pub struct WeightsKsRow {
    pub construction: &'static str,
    pub n: usize,
    pub draws: usize,
    pub ks: f64,
}

pub struct WeightsHistRow {
    pub construction: &'static str,
    pub bin_lo: f64,
    pub bin_hi: f64,
    pub count: usize,
}

pub fn write_weights_outputs(
    dir: &Path,
    hist: &[WeightsHistRow],
    ks: &[WeightsKsRow],
) -> Result<(), CliError> {
    let mut h = String::from("construction,bin_lo,bin_hi,count\n");
    for row in hist {
        h.push_str(&format!(
            "{},{},{},{}\n",
            row.construction,
            format_num(row.bin_lo),
            format_num(row.bin_hi),
            row.count
        ));
    }
    write_file(&dir.join("weights_hist.csv"), &h)?;
    let mut k = String::from("construction,n,draws,ks_distance\n");
    for row in ks {
        k.push_str(&format!(
            "{},{},{},{}\n",
            row.construction,
            row.n,
            row.draws,
            format_num(row.ks)
        ));
    }
    write_file(&dir.join("weights_ks.csv"), &k)?;
    Ok(())
}

//! Experiment configuration: the JSON shape echoed into summary.json, the
//! flag-over-file merge, and conversion into library types.

use std::fs;
use std::path::Path;

use bootcover::evaluation::HalfMaxDefinition;
use bootcover::resampling::PseudovalueMode;
use bootcover::{DistributionSpec, Experiment, ExperimentOptions};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Ground-truth source as configured (parametric family or a CSV path).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroundTruthConfig {
    LogUniform { k: f64 },
    PowerLawUnit { alpha: f64 },
    ParetoTail { alpha: f64 },
    Exponential { lambda: f64 },
    Normal { mu: f64, sigma: f64 },
    Empirical { data: String },
}

impl GroundTruthConfig {
    pub fn is_empirical(&self) -> bool {
        matches!(self, GroundTruthConfig::Empirical { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PseudovalueArg {
    Max,
    ScaledMax,
}

impl From<PseudovalueArg> for PseudovalueMode {
    fn from(arg: PseudovalueArg) -> Self {
        match arg {
            PseudovalueArg::Max => PseudovalueMode::Max,
            PseudovalueArg::ScaledMax => PseudovalueMode::ScaledMax,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HalfMaxArg {
    LogRatio,
    ValueRatio,
}

impl From<HalfMaxArg> for HalfMaxDefinition {
    fn from(arg: HalfMaxArg) -> Self {
        match arg {
            HalfMaxArg::LogRatio => HalfMaxDefinition::LogRatio,
            HalfMaxArg::ValueRatio => HalfMaxDefinition::ValueRatio,
        }
    }
}

/// The full experiment configuration. Serialized verbatim under the
/// `config` key of summary.json, from which a run can be reproduced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub ground_truth: GroundTruthConfig,
    /// Sample size for single-n runs; absent in sweep mode.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(rename = "N")]
    pub num_sets: usize,
    #[serde(rename = "B")]
    pub replicates: usize,
    pub coverages: Vec<f64>,
    /// Sample-size ladder; presence switches the run into sweep mode.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sizes: Option<Vec<usize>>,
    pub seed: u64,
    pub out: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pseudovalue: Option<PseudovalueArg>,
    #[serde(default)]
    pub weighted_bayes: bool,
    pub half_max_def: HalfMaxArg,
}

impl ExperimentConfig {
    pub fn options(&self) -> ExperimentOptions {
        ExperimentOptions {
            pseudovalue: self.pseudovalue.map(Into::into),
            weighted_bayes: self.weighted_bayes,
        }
    }

    /// Builds the library ground truth, loading the CSV for empirical mode.
    pub fn distribution(&self) -> Result<DistributionSpec, CliError> {
        let spec = match &self.ground_truth {
            GroundTruthConfig::LogUniform { k } => DistributionSpec::log_uniform(*k),
            GroundTruthConfig::PowerLawUnit { alpha } => DistributionSpec::power_law_unit(*alpha),
            GroundTruthConfig::ParetoTail { alpha } => DistributionSpec::pareto_tail(*alpha),
            GroundTruthConfig::Exponential { lambda } => DistributionSpec::exponential(*lambda),
            GroundTruthConfig::Normal { mu, sigma } => {
                DistributionSpec::truncated_normal(*mu, *sigma)
            }
            GroundTruthConfig::Empirical { data } => {
                let path = Path::new(data);
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("cannot read {data}: {e}")))?;
                let values = bootcover::datasets::parse_csv(&text, data)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                DistributionSpec::empirical(values)
            }
        };
        spec.map_err(|e| CliError::Validation(e.to_string()))
    }

    /// The single-n experiment (sweep mode uses `sweep_sizes` instead).
    pub fn experiment(&self, spec: &DistributionSpec) -> Result<Experiment, CliError> {
        let n = self.n.ok_or_else(|| {
            CliError::Validation("sample size n is required for a single run".into())
        })?;
        Experiment::new(
            spec.clone(),
            n,
            self.num_sets,
            self.replicates,
            self.coverages.clone(),
            self.seed,
            self.options(),
        )
        .map_err(|e| CliError::Validation(e.to_string()))
    }
}

/// Reads a config file: either a bare `ExperimentConfig` object or a whole
/// summary.json (whose `config` member is used).
pub fn load_config_file(path: &str) -> Result<ExperimentConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Validation(format!("{path}: invalid JSON: {e}")))?;
    let config_value = match value.get("config") {
        Some(inner) => inner.clone(),
        None => value,
    };
    serde_json::from_value(config_value)
        .map_err(|e| CliError::Validation(format!("{path}: invalid config: {e}")))
}

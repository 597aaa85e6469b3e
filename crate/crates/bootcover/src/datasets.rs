//! CSV loading for empirical datasets, plus the two bundled rate-constant
//! sets from weighted ensemble protein folding simulations.
//!
//! Format: one positive real per line (scientific notation accepted), with
//! optional whole-line `#` comments and blank lines.

use std::fs;
use std::path::Path;

use crate::error::Error;

/// Parses dataset text; `origin` names the source in error messages.
pub fn parse_csv(text: &str, origin: &str) -> Result<Vec<f64>, Error> {
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: f64 = trimmed.parse().map_err(|_| Error::Csv {
            path: origin.to_string(),
            line,
            reason: format!("expected one real number per line, got {trimmed:?}"),
        })?;
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Csv {
                path: origin.to_string(),
                line,
                reason: format!("values must be finite and positive, got {trimmed}"),
            });
        }
        values.push(value);
    }
    if values.is_empty() {
        return Err(Error::Csv {
            path: origin.to_string(),
            line: 0,
            reason: "no data rows found".to_string(),
        });
    }
    Ok(values)
}

/// Loads a dataset from a CSV file on disk.
pub fn load_csv(path: &Path) -> Result<Vec<f64>, Error> {
    let origin = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| Error::Csv {
        path: origin.clone(),
        line: 0,
        reason: format!("cannot read file: {e}"),
    })?;
    parse_csv(&text, &origin)
}

/// System A: 15 folding rate constants spanning 20 orders of magnitude.
pub fn system_a() -> Vec<f64> {
    parse_csv(include_str!("../data/system_a.csv"), "system_a.csv")
        .expect("bundled dataset parses")
}

/// System B: 13 folding rate constants spanning 69 orders of magnitude.
pub fn system_b() -> Vec<f64> {
    parse_csv(include_str!("../data/system_b.csv"), "system_b.csv")
        .expect("bundled dataset parses")
}

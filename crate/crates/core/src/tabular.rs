//! Raw tabular ingestion and the deterministic stratified split.

use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::seeding::{derive_seed, stream};

/// A numeric feature table with binary labels.
#[derive(Debug, Clone)]
pub struct TabularDataset {
    /// Row-major n×d feature matrix.
    pub features: Vec<Vec<f64>>,
    /// One 0/1 label per row.
    pub labels: Vec<u8>,
    /// Column names in feature order.
    pub feature_names: Vec<String>,
}

impl TabularDataset {
    pub fn n_rows(&self) -> usize {
        self.labels.len()
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn count_label(&self, label: u8) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }

    /// New dataset containing the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> TabularDataset {
        TabularDataset {
            features: rows.iter().map(|&i| self.features[i].clone()).collect(),
            labels: rows.iter().map(|&i| self.labels[i]).collect(),
            feature_names: self.feature_names.clone(),
        }
    }
}

/// Loads a headered, comma-delimited CSV into a [`TabularDataset`].
///
/// `label_column` names the 0/1 outcome column; every other column is a
/// feature, kept in header order. Rows with unparseable numerics are
/// collected and reported together by 1-based file line number (the header
/// is line 1). Non-binary label values are rejected with their line number.
pub fn load_csv(path: &Path, label_column: &str) -> Result<TabularDataset> {
    let display = path.display().to_string();
    let io_err = |e: std::io::Error| Error::Io {
        path: display.clone(),
        source: e,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => io_err(io),
            other => Error::CsvFormat {
                path: display.clone(),
                reason: format!("{other:?}"),
            },
        })?;

    let headers = reader
        .headers()
        .map_err(|e| Error::CsvFormat {
            path: display.clone(),
            reason: e.to_string(),
        })?
        .clone();
    let label_idx = headers
        .iter()
        .position(|h| h == label_column)
        .ok_or_else(|| Error::CsvFormat {
            path: display.clone(),
            reason: format!("label column {label_column:?} not found in header"),
        })?;
    let feature_names: Vec<String> = headers
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != label_idx)
        .map(|(_, h)| h.to_string())
        .collect();
    if feature_names.is_empty() {
        return Err(Error::CsvFormat {
            path: display,
            reason: "no feature columns besides the label column".into(),
        });
    }

    let mut features = Vec::new();
    let mut labels = Vec::new();
    let mut bad_lines: Vec<u64> = Vec::new();
    for (row_idx, record) in reader.records().enumerate() {
        let line = row_idx as u64 + 2; // header occupies line 1
        let record = record.map_err(|e| Error::CsvFormat {
            path: display.clone(),
            reason: format!("line {line}: {e}"),
        })?;
        if record.len() != headers.len() {
            bad_lines.push(line);
            continue;
        }
        let label_raw = &record[label_idx];
        let label = match label_raw.parse::<f64>() {
            Ok(v) if v == 0.0 || v == 1.0 => v as u8,
            _ => {
                return Err(Error::NonBinaryLabel {
                    value: label_raw.to_string(),
                    line,
                })
            }
        };
        let mut row = Vec::with_capacity(feature_names.len());
        let mut ok = true;
        for (i, field) in record.iter().enumerate() {
            if i == label_idx {
                continue;
            }
            match field.parse::<f64>() {
                Ok(v) if v.is_finite() => row.push(v),
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            features.push(row);
            labels.push(label);
        } else {
            bad_lines.push(line);
        }
    }
    if !bad_lines.is_empty() {
        return Err(Error::BadNumericRows {
            path: display,
            lines: bad_lines,
        });
    }
    if labels.is_empty() {
        return Err(Error::CsvFormat {
            path: display,
            reason: "no data rows".into(),
        });
    }
    Ok(TabularDataset {
        features,
        labels,
        feature_names,
    })
}

/// Replaces zeros in the named columns by that column's median over its
/// non-zero values (an opt-in cleanup for datasets that encode missing
/// measurements as 0). Columns with no non-zero values are left unchanged.
pub fn impute_zeros_with_median(data: &mut TabularDataset, columns: &[String]) -> Result<()> {
    for name in columns {
        let col = data
            .feature_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| {
                Error::InvalidInput(format!("unknown feature column {name:?} for imputation"))
            })?;
        let mut nonzero: Vec<f64> = data
            .features
            .iter()
            .map(|row| row[col])
            .filter(|&v| v != 0.0)
            .collect();
        if nonzero.is_empty() {
            continue;
        }
        nonzero.sort_unstable_by(f64::total_cmp);
        let n = nonzero.len();
        let median = if n % 2 == 1 {
            nonzero[n / 2]
        } else {
            0.5 * (nonzero[n / 2 - 1] + nonzero[n / 2])
        };
        for row in &mut data.features {
            if row[col] == 0.0 {
                row[col] = median;
            }
        }
    }
    Ok(())
}

/// Deterministic per-class proportional split.
///
/// Each class contributes `floor(frac * class_size)` training rows; if the
/// floors fall short of `floor(frac * n)` overall, the remainder goes to the
/// larger class first. Row order within each side follows the shuffled
/// draw, so the same seed always yields the same partition.
pub fn stratified_split(
    data: &TabularDataset,
    train_fraction: f64,
    seed: u64,
) -> Result<(TabularDataset, TabularDataset)> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::BadTrainFraction(train_fraction));
    }
    let mut class_indices: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (i, &label) in data.labels.iter().enumerate() {
        class_indices[label as usize].push(i);
    }
    for label in [0u8, 1u8] {
        let count = class_indices[label as usize].len();
        if count < 2 {
            return Err(Error::ClassTooSmall { label, count });
        }
    }

    let total_target = (train_fraction * data.n_rows() as f64).floor() as usize;
    let mut take = [0usize; 2];
    for label in 0..2 {
        take[label] =
            (train_fraction * class_indices[label].len() as f64).floor() as usize;
    }
    // Hand any rounding shortfall to the larger class (ties: label 0).
    let mut shortfall = total_target.saturating_sub(take[0] + take[1]);
    let order = if class_indices[1].len() > class_indices[0].len() {
        [1usize, 0]
    } else {
        [0usize, 1]
    };
    for label in order {
        while shortfall > 0 && take[label] < class_indices[label].len() {
            take[label] += 1;
            shortfall -= 1;
        }
    }

    let mut train_rows = Vec::new();
    let mut test_rows = Vec::new();
    for label in 0..2 {
        let mut idx = class_indices[label].clone();
        let mut rng =
            ChaCha8Rng::seed_from_u64(derive_seed(seed, stream::SPLIT, label as u64));
        idx.shuffle(&mut rng);
        train_rows.extend_from_slice(&idx[..take[label]]);
        test_rows.extend_from_slice(&idx[take[label]..]);
    }
    Ok((data.select_rows(&train_rows), data.select_rows(&test_rows)))
}

//! Stable on-disk representations: the report JSON document, CSV tables,
//! and atomic file writing.
//!
//! Field names and orders here are a compatibility contract (golden-file
//! tested); changing them breaks downstream consumers.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bootstrap::PredictionMatrix;
use crate::error::{Error, Result};
use crate::pairwise::{BoundInterval, EvaluationReport, SweepRow};
use crate::rates::RocCurve;
use crate::synth::BoundValidationRow;

/// The JSON shape of one evaluation. Flat, with nullable `uauc`,
/// `bounds`, and `confidence_level`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportDocument {
    pub auc_l: f64,
    pub auc_u: f64,
    pub p_correct: f64,
    pub p_overlap: f64,
    pub p_incorrect: f64,
    pub uauc: Option<f64>,
    pub abstention_rate: f64,
    pub bounds: Option<BoundsDocument>,
    pub confidence_level: Option<f64>,
    pub n_pos: u64,
    pub n_neg: u64,
}

/// JSON shape of the optimal-AUC bounds block.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundsDocument {
    pub lower: f64,
    pub upper: f64,
    pub p_pair: f64,
    pub raw_lower: f64,
    pub raw_upper: f64,
}

impl From<&BoundInterval> for BoundsDocument {
    fn from(b: &BoundInterval) -> Self {
        BoundsDocument {
            lower: b.lower_bound,
            upper: b.upper_bound,
            p_pair: b.p_pair,
            raw_lower: b.raw_lower,
            raw_upper: b.raw_upper,
        }
    }
}

impl From<&EvaluationReport> for ReportDocument {
    fn from(r: &EvaluationReport) -> Self {
        ReportDocument {
            auc_l: r.auc_l,
            auc_u: r.auc_u,
            p_correct: r.three_region.p_correct,
            p_overlap: r.three_region.p_overlap,
            p_incorrect: r.three_region.p_incorrect,
            uauc: r.uauc,
            abstention_rate: r.abstention_rate,
            bounds: r.bounds.as_ref().map(BoundsDocument::from),
            confidence_level: r.confidence_level,
            n_pos: r.n_pos as u64,
            n_neg: r.n_neg as u64,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Integration-vs-counting cross-check for one curve.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveDiagnostic {
    /// Counting-route value (the canonical estimate).
    pub counting: f64,
    pub trapezoid_area: f64,
    pub step_area: f64,
    pub trapezoid_delta: f64,
    pub step_delta: f64,
}

/// Diagnostics block written next to an evaluation report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagnosticsDocument {
    pub strict: CurveDiagnostic,
    pub permissive: CurveDiagnostic,
}

/// Formats a threshold for CSV: literal `-inf` / `inf` for the sentinels.
fn format_threshold(t: f64) -> String {
    if t == f64::NEG_INFINITY {
        "-inf".into()
    } else if t == f64::INFINITY {
        "inf".into()
    } else {
        format!("{t}")
    }
}

/// CSV of one or more curves: `threshold,x,y,pairing`.
pub fn curves_to_csv(curves: &[&RocCurve]) -> String {
    let mut out = String::from("threshold,x,y,pairing\n");
    for curve in curves {
        for p in &curve.points {
            out.push_str(&format!(
                "{},{},{},{}\n",
                format_threshold(p.threshold),
                p.x,
                p.y,
                curve.pairing.as_str()
            ));
        }
    }
    out
}

/// CSV of sweep rows, one evaluation per confidence level. An undefined
/// selective AUC is written as an empty cell.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "level,auc_l,auc_u,p_correct,p_overlap,p_incorrect,uauc,abstention_rate,n_pos,n_neg\n",
    );
    for row in rows {
        let r = &row.report;
        let uauc = r.uauc.map_or(String::new(), |v| format!("{v}"));
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            row.level,
            r.auc_l,
            r.auc_u,
            r.three_region.p_correct,
            r.three_region.p_overlap,
            r.three_region.p_incorrect,
            uauc,
            r.abstention_rate,
            r.n_pos,
            r.n_neg
        ));
    }
    out
}

/// CSV of the stacked three-region series: `level,p_correct,p_overlap,p_incorrect`.
pub fn three_region_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("level,p_correct,p_overlap,p_incorrect\n");
    for row in rows {
        let r = &row.report.three_region;
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.level, r.p_correct, r.p_overlap, r.p_incorrect
        ));
    }
    out
}

/// CSV of bound-validation rows.
pub fn validation_to_csv(rows: &[BoundValidationRow]) -> String {
    let mut out =
        String::from("alpha,auc_l,auc_u,p_pair,lower_bound,upper_bound,auc_star,contained\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.alpha,
            r.auc_l,
            r.auc_u,
            r.p_pair,
            r.lower_bound,
            r.upper_bound,
            r.auc_star,
            r.contained
        ));
    }
    out
}

/// Headerless CSV of the prediction matrix, 17 significant digits per
/// entry (lossless round-trip for f64 probabilities).
pub fn matrix_to_csv(matrix: &PredictionMatrix) -> String {
    let mut out = String::new();
    for row in &matrix.values {
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            out.push_str(&format!("{v:.16e}"));
            first = false;
        }
        out.push('\n');
    }
    out
}

/// One-column labels CSV with a `label` header.
pub fn labels_to_csv(labels: &[u8]) -> String {
    let mut out = String::from("label\n");
    for l in labels {
        out.push_str(&format!("{l}\n"));
    }
    out
}

/// Parses a headerless numeric matrix CSV (inverse of [`matrix_to_csv`]).
pub fn matrix_from_csv(path: &Path) -> Result<PredictionMatrix> {
    let display = path.display().to_string();
    let content = fs::read_to_string(path).map_err(|e| Error::Io {
        path: display.clone(),
        source: e,
    })?;
    let mut values: Vec<Vec<f64>> = Vec::new();
    let mut bad_lines = Vec::new();
    for (i, line) in content.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut ok = true;
        for field in line.split(',') {
            match field.trim().parse::<f64>() {
                Ok(v) if v.is_finite() => row.push(v),
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok || (!values.is_empty() && row.len() != values[0].len()) {
            bad_lines.push(i as u64 + 1);
        } else {
            values.push(row);
        }
    }
    if !bad_lines.is_empty() {
        return Err(Error::BadNumericRows {
            path: display,
            lines: bad_lines,
        });
    }
    if values.is_empty() {
        return Err(Error::CsvFormat {
            path: display,
            reason: "no data rows".into(),
        });
    }
    let b = values.len();
    Ok(PredictionMatrix {
        values,
        replicate_seeds: vec![0; b],
    })
}

/// Parses a one-column labels CSV with a `label` header.
pub fn labels_from_csv(path: &Path) -> Result<Vec<u8>> {
    let display = path.display().to_string();
    let content = fs::read_to_string(path).map_err(|e| Error::Io {
        path: display.clone(),
        source: e,
    })?;
    let mut lines = content.lines();
    match lines.next() {
        Some(h) if h.trim() == "label" => {}
        other => {
            return Err(Error::CsvFormat {
                path: display,
                reason: format!("expected 'label' header, got {other:?}"),
            })
        }
    }
    let mut labels = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match line.trim() {
            "0" => labels.push(0u8),
            "1" => labels.push(1u8),
            other => {
                return Err(Error::NonBinaryLabel {
                    value: other.to_string(),
                    line: i as u64 + 2,
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::CsvFormat {
            path: display,
            reason: "no label rows".into(),
        });
    }
    Ok(labels)
}

/// Parses an interval file: headered CSV with `label,lower,upper` columns
/// (extra columns are ignored). Malformed numerics are reported together by
/// line number; an inverted or non-finite interval names its line.
pub fn intervals_from_csv(path: &Path) -> Result<crate::interval::ClassedIntervalDataset> {
    let display = path.display().to_string();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io {
                path: display.clone(),
                source: io,
            },
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
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::CsvFormat {
                path: display.clone(),
                reason: format!("missing column {name:?}"),
            })
    };
    let (label_idx, lower_idx, upper_idx) = (col("label")?, col("lower")?, col("upper")?);

    let mut positives = Vec::new();
    let mut negatives = Vec::new();
    let mut bad_lines = Vec::new();
    for (row_idx, record) in reader.records().enumerate() {
        let line = row_idx as u64 + 2;
        let record = record.map_err(|e| Error::CsvFormat {
            path: display.clone(),
            reason: format!("line {line}: {e}"),
        })?;
        let label = match record.get(label_idx).map(str::trim) {
            Some("0") => 0u8,
            Some("1") => 1u8,
            Some(other) => {
                return Err(Error::NonBinaryLabel {
                    value: other.to_string(),
                    line,
                })
            }
            None => {
                bad_lines.push(line);
                continue;
            }
        };
        let parse = |idx: usize| record.get(idx).and_then(|f| f.parse::<f64>().ok());
        let (lower, upper) = match (parse(lower_idx), parse(upper_idx)) {
            (Some(l), Some(u)) => (l, u),
            _ => {
                bad_lines.push(line);
                continue;
            }
        };
        let iv = crate::interval::IntervalPrediction::new(lower, upper).map_err(|e| {
            Error::CsvFormat {
                path: display.clone(),
                reason: format!("line {line}: {e}"),
            }
        })?;
        match label {
            1 => positives.push(iv),
            _ => negatives.push(iv),
        }
    }
    if !bad_lines.is_empty() {
        return Err(Error::BadNumericRows {
            path: display,
            lines: bad_lines,
        });
    }
    let ds = crate::interval::ClassedIntervalDataset::new(positives, negatives);
    if ds.n_pos() + ds.n_neg() == 0 {
        return Err(Error::CsvFormat {
            path: display,
            reason: "no data rows".into(),
        });
    }
    Ok(ds)
}

/// Writes `content` to `path` atomically: a temp file in the same
/// directory, flushed, then renamed over the target.
pub fn write_atomic(path: &Path, content: &str) -> Result<()> {
    let display = path.display().to_string();
    let io_err = |e: std::io::Error| Error::Io {
        path: display.clone(),
        source: e,
    };
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(io_err)?;
        }
    }
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::InvalidInput(format!("not a file path: {display}")))?;
    let mut tmp = path.to_path_buf();
    tmp.set_file_name(format!(".{}.tmp", file_name.to_string_lossy()));
    fs::write(&tmp, content).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::ClassedIntervalDataset;
    use crate::pairwise::evaluate;
    use crate::rates::{build_curve, Pairing};
    use std::io::Write;

    fn sample_dataset() -> ClassedIntervalDataset {
        ClassedIntervalDataset::from_rows(&[
            (1, 0.6, 0.8),
            (1, 0.3, 0.5),
            (0, 0.1, 0.2),
            (0, 0.4, 0.7),
        ])
        .unwrap()
    }

    #[test]
    fn report_document_has_the_pinned_field_order() {
        let report = evaluate(&sample_dataset(), Some((0.05, 0.1)), Some(0.9)).unwrap();
        let json = to_json_pretty(&ReportDocument::from(&report)).unwrap();
        let field_order: Vec<&str> = [
            "auc_l",
            "auc_u",
            "p_correct",
            "p_overlap",
            "p_incorrect",
            "uauc",
            "abstention_rate",
            "bounds",
            "confidence_level",
            "n_pos",
            "n_neg",
        ]
        .to_vec();
        let mut last = 0;
        for field in field_order {
            let needle = format!("\"{field}\"");
            let pos = json.find(&needle).unwrap_or_else(|| panic!("missing {field}"));
            assert!(pos > last || last == 0, "{field} out of order");
            last = pos;
        }
        for bound_field in ["lower", "upper", "p_pair", "raw_lower", "raw_upper"] {
            assert!(json.contains(&format!("\"{bound_field}\"")));
        }
        assert!(json.ends_with('\n'));
    }

    #[test]
    fn undefined_uauc_serializes_as_null() {
        let ds = ClassedIntervalDataset::from_rows(&[(1, 0.2, 0.6), (0, 0.2, 0.6)]).unwrap();
        let report = evaluate(&ds, None, None).unwrap();
        let json = to_json_pretty(&ReportDocument::from(&report)).unwrap();
        assert!(json.contains("\"uauc\": null"));
        assert!(json.contains("\"bounds\": null"));
        assert!(json.contains("\"confidence_level\": null"));
        let parsed: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.uauc, None);
    }

    #[test]
    fn curves_csv_uses_inf_sentinels() {
        let ds = sample_dataset();
        let strict = build_curve(&ds, Pairing::Strict).unwrap();
        let permissive = build_curve(&ds, Pairing::Permissive).unwrap();
        let csv = curves_to_csv(&[&strict, &permissive]);
        assert!(csv.starts_with("threshold,x,y,pairing\n"));
        assert!(csv.contains("inf,0,0,strict"));
        assert!(csv.contains("-inf,1,1,strict"));
        assert!(csv.contains(",permissive\n"));
    }

    #[test]
    fn matrix_csv_round_trips_exactly() {
        let matrix = PredictionMatrix {
            values: vec![
                vec![0.12345678901234568, 1.0 / 3.0],
                vec![f64::MIN_POSITIVE, 0.9999999999999999],
            ],
            replicate_seeds: vec![1, 2],
        };
        let csv = matrix_to_csv(&matrix);
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(csv.as_bytes()).unwrap();
        f.flush().unwrap();
        let parsed = matrix_from_csv(f.path()).unwrap();
        assert_eq!(parsed.values, matrix.values);
    }

    #[test]
    fn labels_csv_round_trips() {
        let labels = vec![0u8, 1, 1, 0, 1];
        let csv = labels_to_csv(&labels);
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(csv.as_bytes()).unwrap();
        f.flush().unwrap();
        assert_eq!(labels_from_csv(f.path()).unwrap(), labels);

        let mut bad = tempfile::NamedTempFile::new().unwrap();
        bad.write_all(b"label\n0\n7\n").unwrap();
        bad.flush().unwrap();
        assert!(matches!(
            labels_from_csv(bad.path()),
            Err(Error::NonBinaryLabel { line: 3, .. })
        ));
    }

    #[test]
    fn interval_csv_parses_and_validates() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(b"label,lower,upper\n1,0.6,0.8\n0,0.1,0.2\n")
            .unwrap();
        f.flush().unwrap();
        let ds = intervals_from_csv(f.path()).unwrap();
        assert_eq!(ds.n_pos(), 1);
        assert_eq!(ds.n_neg(), 1);

        let mut inverted = tempfile::NamedTempFile::new().unwrap();
        inverted
            .write_all(b"label,lower,upper\n1,0.6,0.8\n0,0.9,0.2\n")
            .unwrap();
        inverted.flush().unwrap();
        match intervals_from_csv(inverted.path()) {
            Err(Error::CsvFormat { reason, .. }) => {
                assert!(reason.contains("line 3"), "reason was {reason:?}")
            }
            other => panic!("expected CsvFormat naming the line, got {other:?}"),
        }

        let mut badnum = tempfile::NamedTempFile::new().unwrap();
        badnum
            .write_all(b"label,lower,upper\n1,x,0.8\n0,0.1,0.2\n1,0.2,\n")
            .unwrap();
        badnum.flush().unwrap();
        match intervals_from_csv(badnum.path()) {
            Err(Error::BadNumericRows { lines, .. }) => assert_eq!(lines, vec![2, 4]),
            other => panic!("expected BadNumericRows, got {other:?}"),
        }
    }

    #[test]
    fn sweep_csv_leaves_undefined_uauc_empty() {
        let all_overlap =
            ClassedIntervalDataset::from_rows(&[(1, 0.2, 0.6), (0, 0.2, 0.6)]).unwrap();
        let report = evaluate(&all_overlap, None, Some(0.9)).unwrap();
        let csv = sweep_to_csv(&[SweepRow {
            level: 0.9,
            report,
        }]);
        let data_line = csv.lines().nth(1).unwrap();
        let cells: Vec<&str> = data_line.split(',').collect();
        assert_eq!(cells[6], "", "uauc cell should be empty");
    }

    #[test]
    fn atomic_write_replaces_content() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested").join("out.txt");
        write_atomic(&path, "first\n").unwrap();
        write_atomic(&path, "second\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "second\n");
        // No stray temp files left behind.
        let entries: Vec<_> = fs::read_dir(path.parent().unwrap())
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        assert_eq!(entries.len(), 1);
    }
}

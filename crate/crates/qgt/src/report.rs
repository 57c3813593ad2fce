//! Tabular experiment reports and their CSV / JSON encodings.
//!
//! CSV layout: a `# params: key=value;...` comment line, a header line, then
//! one RFC-4180 row per record with every number printed to 12 significant
//! digits. JSON layout: `{experiment, params, rows, verdict, notes}` with
//! rows as named-column records and lower_snake_case keys throughout.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Outcome labels for the composite diagnostics. These are statements about
/// numerical evidence at finite resolution, never proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "consistent-with-quasi-greedy")]
    ConsistentWithQuasiGreedy,
    #[serde(rename = "witnesses-failure")]
    WitnessesFailure,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::ConsistentWithQuasiGreedy => "consistent-with-quasi-greedy",
            Verdict::WitnessesFailure => "witnesses-failure",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Named-column table plus the parameters that fully determine it.
#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub experiment: String,
    pub params: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub verdict: Option<Verdict>,
    pub notes: String,
}

impl ExperimentReport {
    pub fn new(experiment: impl Into<String>, columns: &[&str]) -> Self {
        ExperimentReport {
            experiment: experiment.into(),
            params: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            verdict: None,
            notes: String::new(),
        }
    }

    pub fn set_param(&mut self, key: &str, value: impl fmt::Display) {
        self.params.insert(key.to_string(), value.to_string());
    }

    /// Panics on arity mismatch or non-finite entries; both are programming
    /// errors in the experiment that produced the row.
    pub fn push_row(&mut self, row: Vec<f64>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row arity {} does not match {} columns",
            row.len(),
            self.columns.len()
        );
        assert!(
            row.iter().all(|v| v.is_finite()),
            "non-finite value in report row {row:?}"
        );
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// All values of one column, in row order.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn append_note(&mut self, note: &str) {
        if !self.notes.is_empty() {
            self.notes.push(' ');
        }
        self.notes.push_str(note);
    }

    /// CSV encoding; see the module docs for the layout.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        out.push_str("# params: ");
        let mut parts: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", sanitize_param(v)))
            .collect();
        if let Some(v) = self.verdict {
            parts.push(format!("verdict={v}"));
        }
        if !self.notes.is_empty() {
            parts.push(format!("notes={}", sanitize_param(&self.notes)));
        }
        out.push_str(&parts.join(";"));
        out.push('\n');
        out.push_str(
            &self
                .columns
                .iter()
                .map(|c| quote_csv_field(c))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| format_sig12(*v)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON encoding with rows as named-column records.
    pub fn to_json_string(&self) -> String {
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut record = serde_json::Map::new();
            for (name, value) in self.columns.iter().zip(row) {
                record.insert(
                    name.clone(),
                    serde_json::Number::from_f64(*value)
                        .map(serde_json::Value::Number)
                        .expect("report rows are finite"),
                );
            }
            rows.push(serde_json::Value::Object(record));
        }
        let doc = serde_json::json!({
            "experiment": self.experiment,
            "params": self.params,
            "rows": rows,
            "verdict": self.verdict,
            "notes": self.notes,
        });
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    /// Parses row values back out of [`Self::to_csv_string`] output.
    pub fn parse_csv_rows(text: &str) -> Result<Vec<Vec<f64>>> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if i < 2 || line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|field| {
                    field.trim().parse::<f64>().map_err(|_| {
                        Error::invalid(format!("line {}: `{field}` is not a number", i + 1))
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        Ok(rows)
    }
}

/// 12 significant digits, scientific; stable across runs and platforms.
pub fn format_sig12(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.11e}")
}

fn sanitize_param(v: &str) -> String {
    v.replace(';', ",").replace('\n', " ")
}

fn quote_csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_rows_still_emit_header_lines() {
        let mut r = ExperimentReport::new("demo", &["n", "value"]);
        r.set_param("seed", 1);
        let csv = r.to_csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("# params: seed=1"));
        assert_eq!(lines[1], "n,value");
    }

    #[test]
    fn verdict_strings_are_exact() {
        assert_eq!(
            Verdict::ConsistentWithQuasiGreedy.to_string(),
            "consistent-with-quasi-greedy"
        );
        assert_eq!(Verdict::WitnessesFailure.to_string(), "witnesses-failure");
        assert_eq!(Verdict::Inconclusive.to_string(), "inconclusive");
    }

    #[test]
    fn json_has_verdict_field() {
        let mut r = ExperimentReport::new("demo", &["x"]);
        r.verdict = Some(Verdict::WitnessesFailure);
        r.push_row(vec![1.5]);
        let parsed: serde_json::Value = serde_json::from_str(&r.to_json_string()).unwrap();
        assert_eq!(parsed["verdict"], "witnesses-failure");
        assert_eq!(parsed["rows"][0]["x"], 1.5);
        assert_eq!(parsed["experiment"], "demo");
    }

    #[test]
    fn csv_round_trip_preserves_12_digits() {
        let mut r = ExperimentReport::new("demo", &["a", "b"]);
        let rows = vec![
            vec![std::f64::consts::PI, -1.234567890123e-9],
            vec![0.0, 123456789.0123],
        ];
        for row in &rows {
            r.push_row(row.clone());
        }
        let parsed = ExperimentReport::parse_csv_rows(&r.to_csv_string()).unwrap();
        for (orig, back) in rows.iter().flatten().zip(parsed.iter().flatten()) {
            let scale = orig.abs().max(1e-300);
            assert!((orig - back).abs() <= 1e-11 * scale, "{orig} vs {back}");
        }
    }

    #[test]
    fn rows_reject_non_finite_values() {
        let mut r = ExperimentReport::new("demo", &["a"]);
        let res = std::panic::catch_unwind(move || r.push_row(vec![f64::NAN]));
        assert!(res.is_err());
    }

    #[test]
    fn column_lookup() {
        let mut r = ExperimentReport::new("demo", &["n", "v"]);
        r.push_row(vec![1.0, 10.0]);
        r.push_row(vec![2.0, 20.0]);
        assert_eq!(r.column("v").unwrap(), vec![10.0, 20.0]);
        assert!(r.column("missing").is_none());
    }
}

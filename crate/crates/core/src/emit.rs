//! CSV/JSON rendering and all-or-nothing file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::report::ConsistencyReport;
use crate::scan::{OutputFormat, ScanRow};

pub const CSV_HEADER: &str =
    "beta,beta1,gamma,omega_rad,value_closed_form,value_oracle,abs_deviation";

/// Environment variable that relocates relative output paths.
pub const OUTPUT_DIR_ENV: &str = "RELSPIN_OUTPUT_DIR";

/// 17 significant digits, scientific notation, locale-independent.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_csv(rows: &[ScanRow]) -> String {
    let mut out = String::with_capacity(64 + rows.len() * 180);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let fields = [
            r.beta,
            r.beta1,
            r.gamma,
            r.omega_rad,
            r.value_closed_form,
            r.value_oracle,
            r.abs_deviation,
        ];
        for (i, v) in fields.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", format_f64(*v));
        }
        out.push('\n');
    }
    out
}

pub fn render_json(rows: &[ScanRow]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(rows)?;
    s.push('\n');
    Ok(s)
}

pub fn render_rows(rows: &[ScanRow], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => Ok(render_csv(rows)),
        OutputFormat::Json => render_json(rows),
    }
}

pub fn render_report(report: &ConsistencyReport, format: Option<OutputFormat>) -> Result<String> {
    match format {
        Some(OutputFormat::Json) => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        _ => Ok(report.to_text()),
    }
}

/// Resolve a user-supplied output path: relative paths are placed under
/// `$RELSPIN_OUTPUT_DIR` when that variable is set.
pub fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() && !dir.is_empty() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Write `contents` to `path` through a temporary sibling file that is
/// renamed into place, or to stdout when `path` is `None`.
pub fn emit(contents: &str, path: Option<&Path>) -> Result<()> {
    let Some(path) = path else {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(contents.as_bytes())?;
        stdout.flush()?;
        return Ok(());
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(beta: f64) -> ScanRow {
        ScanRow {
            beta,
            beta1: 0.5,
            gamma: 1.1547005383792515,
            omega_rad: 0.1,
            value_closed_form: 2.0,
            value_oracle: 2.0 + 1e-13,
            abs_deviation: 1e-13,
        }
    }

    #[test]
    fn csv_shape() {
        let csv = render_csv(&[row(0.25)]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER);
        let fields: Vec<f64> = lines[1].split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 7);
        assert_eq!(fields[0], 0.25);
        assert_eq!(fields[2], 1.1547005383792515);
    }

    #[test]
    fn full_precision_round_trips() {
        for x in [std::f64::consts::PI, 1e-300, -2.5e17, 0.1 + 0.2, 0.0] {
            assert_eq!(format_f64(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(format_f64(2.0), "2.0000000000000000e0");
    }

    #[test]
    fn json_keys() {
        let json = render_json(&[row(0.1), row(0.2)]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        let keys: Vec<&String> = arr[0].as_object().unwrap().keys().collect();
        let mut want: Vec<&str> = CSV_HEADER.split(',').collect();
        want.sort_unstable();
        let mut got: Vec<&str> = keys.iter().map(|k| k.as_str()).collect();
        got.sort_unstable();
        assert_eq!(got, want);
        let back: Vec<ScanRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![row(0.1), row(0.2)]);
    }

    #[test]
    fn emit_writes_file_atomically() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        emit("a,b\n", Some(&path)).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "a,b\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        let missing = dir.path().join("nope").join("out.csv");
        assert!(emit("x", Some(&missing)).is_err());
        assert!(!missing.exists());
    }
}

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

/// Numbers are written with 17 significant digits so they parse back to
/// the same `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum ColumnValues {
    Float(Vec<f64>),
    Index(Vec<usize>),
}

impl ColumnValues {
    fn len(&self) -> usize {
        match self {
            Self::Float(v) => v.len(),
            Self::Index(v) => v.len(),
        }
    }

    fn cell(&self, i: usize) -> String {
        match self {
            Self::Float(v) => fmt_f64(v[i]),
            Self::Index(v) => v[i].to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: &'static str,
    pub values: ColumnValues,
}

impl Column {
    pub fn float(name: &'static str, values: Vec<f64>) -> Self {
        Self { name, values: ColumnValues::Float(values) }
    }

    pub fn index(name: &'static str, values: Vec<usize>) -> Self {
        Self { name, values: ColumnValues::Index(values) }
    }
}

/// CSV text: mandatory header row, `\n` line endings, one row per sample.
pub fn render_csv(columns: &[Column]) -> String {
    let rows = columns.first().map_or(0, |c| c.values.len());
    debug_assert!(columns.iter().all(|c| c.values.len() == rows));
    let mut out = String::with_capacity(rows * columns.len() * 24 + 64);
    let header: Vec<&str> = columns.iter().map(|c| c.name).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for i in 0..rows {
        for (j, c) in columns.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&c.values.cell(i));
        }
        out.push('\n');
    }
    out
}

/// JSON document `{ "metadata": ..., "data": ... }` with a trailing newline.
pub fn render_json<M: Serialize>(metadata: &M, data: &Value) -> Result<String> {
    #[derive(Serialize)]
    struct Doc<'a, M> {
        metadata: &'a M,
        data: &'a Value,
    }
    let mut s = serde_json::to_string_pretty(&Doc { metadata, data })?;
    s.push('\n');
    Ok(s)
}

/// Metadata block shared by every output.
#[derive(Debug, Clone, Serialize)]
pub struct Metadata<C> {
    pub config: C,
    pub library: &'static str,
    pub library_version: &'static str,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub provenance: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_unix_s: Option<u64>,
}

/// Writes `contents` to `path` via a temporary file in the same directory
/// and an atomic rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())
        .with_context(|| format!("cannot write {}", path.display()))?;
    tmp.as_file().sync_all().ok();
    tmp.persist(path)
        .map_err(|e| e.error)
        .with_context(|| format!("cannot write {}", path.display()))?;
    // NamedTempFile creates 0600 files; match what fs::write would produce.
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        let _ = fs::set_permissions(path, fs::Permissions::from_mode(0o644));
    }
    Ok(())
}

/// Path of the metadata file written next to a CSV output.
pub fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".meta.json");
    path.with_file_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digit_round_trip() {
        for x in [0.0, 1.0, -0.15, 0.045_418_670_867_185_73, 1e-300, 6.02e23, f64::MIN_POSITIVE] {
            let s = fmt_f64(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
            assert!(!s.contains(','));
        }
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn empty_table_still_has_header() {
        let csv = render_csv(&[Column::float("theta_rad", vec![]), Column::float("density", vec![])]);
        assert_eq!(csv, "theta_rad,density\n");
    }

    #[test]
    fn csv_layout() {
        let csv = render_csv(&[
            Column::index("k", vec![1, 2]),
            Column::float("x", vec![0.5, 0.25]),
        ]);
        assert_eq!(csv, "k,x\n1,5.0000000000000000e-1\n2,2.5000000000000000e-1\n");
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let values = vec![0.1, 1.0 / 3.0, 2.0_f64.sqrt() * 1e-17, 0.045_418_670_867_185_73];
        let doc = render_json(&serde_json::json!({}), &serde_json::json!({ "density": values }))
            .unwrap();
        let parsed: Value = serde_json::from_str(&doc).unwrap();
        let back: Vec<f64> = serde_json::from_value(parsed["data"]["density"].clone()).unwrap();
        for (a, b) in values.iter().zip(&back) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, "a\n").unwrap();
        write_atomic(&path, "b\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "b\n");
        assert_eq!(sidecar_path(&path), dir.path().join("out.csv.meta.json"));
    }

    #[test]
    fn unwritable_path_reports_context() {
        let err = write_atomic(Path::new("/nonexistent-dir/x.csv"), "a").unwrap_err();
        assert!(format!("{err:#}").contains("/nonexistent-dir"));
    }
}

//! CSV and JSON files.
//!
//! CSV: comma-separated, header row, LF line endings, numbers in scientific
//! notation with 17 significant digits (`NaN` marks masked nodes). JSON:
//! pretty-printed, keys in struct declaration order, trailing newline.

use crate::error::CliError;
use conformon::geometry::{Axis, Grid1D, MongePatch};
use serde::Serialize;
use std::fs;
use std::path::Path;

/// Formats a float with 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        // NaN, inf, -inf
        format!("{v}")
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path, e: csv::Error) -> CliError {
    match e.into_kind() {
        csv::ErrorKind::Io(source) => CliError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => CliError::Input(format!("{}: {other:?}", path.display())),
    }
}

/// Writes a table of already formatted cells.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(|e| csv_err(path, e))?;
    w.write_record(header).map_err(|e| csv_err(path, e))?;
    for row in rows {
        w.write_record(row).map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Input(format!("cannot serialize {}: {e}", path.display())))?;
    text.push('\n');
    fs::write(path, text).map_err(io_err(path))
}

/// Columns of a CSV file, looked up by header name.
pub struct Table {
    pub columns: Vec<Vec<f64>>,
}

/// Reads the named numeric columns. Missing columns and unparsable cells
/// are input errors naming the column or line.
pub fn read_columns(path: &Path, names: &[&str]) -> Result<Table, CliError> {
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| csv_err(path, e))?;
    let headers = r.headers().map_err(|e| csv_err(path, e))?.clone();
    let idx: Vec<usize> = names
        .iter()
        .map(|name| {
            headers.iter().position(|h| h == *name).ok_or_else(|| {
                CliError::Input(format!("{}: missing column '{name}'", path.display()))
            })
        })
        .collect::<Result<_, _>>()?;
    let mut columns = vec![Vec::new(); names.len()];
    for record in r.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            CliError::Input(format!("{}: line {line}: {e}", path.display()))
        })?;
        let line = record.position().map_or(0, |p| p.line());
        for (c, &k) in idx.iter().enumerate() {
            let cell = record.get(k).unwrap_or("");
            let v: f64 = cell.parse().map_err(|_| {
                CliError::Input(format!(
                    "{}: line {line}: column '{}' is not a number: {cell:?}",
                    path.display(),
                    names[c]
                ))
            })?;
            columns[c].push(v);
        }
    }
    Ok(Table { columns })
}

/// Distinct sorted coordinates, merging values closer than `tol`.
fn distinct(values: &[f64], tol: f64) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::new();
    for x in v {
        if out.last().is_none_or(|&last| x - last > tol) {
            out.push(x);
        }
    }
    out
}

fn uniform_axis(coords: &[f64], name: &str, path: &Path) -> Result<Axis, CliError> {
    let n = coords.len();
    if n < 5 {
        return Err(CliError::Input(format!(
            "{}: need at least 5 distinct {name} values, found {n}",
            path.display()
        )));
    }
    let axis = Axis::span(coords[0], coords[n - 1], n);
    let tol = 1e-9 * (coords[n - 1] - coords[0]).abs().max(f64::MIN_POSITIVE);
    if let Some(k) = (0..n).find(|&k| (coords[k] - axis.node(k)).abs() > tol) {
        return Err(CliError::Input(format!(
            "{}: {name} values are not uniformly spaced (at {})",
            path.display(),
            coords[k]
        )));
    }
    Ok(axis)
}

/// Reads a Monge patch from `x,y,z` rows covering a complete rectangular
/// lattice in any order.
pub fn read_patch(path: &Path) -> Result<MongePatch, CliError> {
    let t = read_columns(path, &["x", "y", "z"])?;
    let (xs, ys, zs) = (&t.columns[0], &t.columns[1], &t.columns[2]);
    if xs.is_empty() {
        return Err(CliError::Input(format!("{}: no data rows", path.display())));
    }
    let span = |v: &[f64]| v.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    let ux = distinct(xs, 1e-9 * span(xs));
    let uy = distinct(ys, 1e-9 * span(ys));
    let ax = uniform_axis(&ux, "x", path)?;
    let ay = uniform_axis(&uy, "y", path)?;

    let locate = |v: f64, axis: &Axis| {
        let k = ((v - axis.origin) / axis.spacing).round();
        (k >= 0.0 && (k as usize) < axis.n).then_some(k as usize)
    };
    let mut z = vec![f64::NAN; ax.n * ay.n];
    let mut seen = vec![false; ax.n * ay.n];
    for r in 0..xs.len() {
        let (i, j) = match (locate(xs[r], &ax), locate(ys[r], &ay)) {
            (Some(i), Some(j)) => (i, j),
            _ => {
                return Err(CliError::Input(format!(
                    "{}: line {}: point off the lattice",
                    path.display(),
                    r + 2
                )))
            }
        };
        let k = i * ay.n + j;
        if seen[k] {
            return Err(CliError::Input(format!(
                "{}: line {}: duplicate lattice point ({}, {})",
                path.display(),
                r + 2,
                xs[r],
                ys[r]
            )));
        }
        seen[k] = true;
        z[k] = zs[r];
    }
    if let Some(k) = seen.iter().position(|s| !s) {
        return Err(CliError::Input(format!(
            "{}: incomplete lattice, missing point ({}, {})",
            path.display(),
            ax.node(k / ay.n),
            ay.node(k % ay.n)
        )));
    }
    MongePatch::new(ax, ay, z).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Writes a patch as `x,y,z` rows (x-major).
pub fn write_patch(path: &Path, patch: &MongePatch) -> Result<(), CliError> {
    let mut rows = Vec::with_capacity(patch.len());
    for i in 0..patch.nx() {
        for j in 0..patch.ny() {
            rows.push(vec![
                fmt_f64(patch.x(i)),
                fmt_f64(patch.y(j)),
                fmt_f64(patch.z(i, j)),
            ]);
        }
    }
    write_csv(path, &["x", "y", "z"], &rows)
}

/// Reads an arclength column `s` plus further columns; `s` must be a
/// uniform grid.
pub fn read_profile(path: &Path, names: &[&str]) -> Result<(Grid1D, Vec<Vec<f64>>), CliError> {
    let mut all = vec!["s"];
    all.extend_from_slice(names);
    let mut t = read_columns(path, &all)?;
    let s = t.columns.remove(0);
    let n = s.len();
    if n < 3 {
        return Err(CliError::Input(format!(
            "{}: need at least 3 rows, found {n}",
            path.display()
        )));
    }
    let grid = Grid1D::linspace(s[0], s[n - 1], n)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let tol = 1e-9 * (s[n - 1] - s[0]).abs();
    if let Some(k) = (0..n).find(|&k| (s[k] - grid.values()[k]).abs() > tol) {
        return Err(CliError::Input(format!(
            "{}: line {}: column 's' is not uniformly spaced",
            path.display(),
            k + 2
        )));
    }
    Ok((grid, t.columns))
}

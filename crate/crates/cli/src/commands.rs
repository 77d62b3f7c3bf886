//! Subcommand implementations. Each writes its data files into the output
//! directory plus a `run.json` sidecar holding the resolved configuration.

use crate::config::RunConfig;
use crate::error::{CliError, StageExt};
use crate::io::{fmt_f64, read_patch, read_profile, write_csv, write_json};
use conformon::geometry::{
    curvature_fields, principal_curvatures, reconstruct_profile, Grid1D, MongePatch, ProfileCurve,
};
use conformon::quantum::{
    bound_states, build_operator_1d, correspondence_metric, peak_index, QuantumParams,
    SpectrumResult,
};
use conformon::shape::{
    reduced_ode_residual, shape_residual_general, soliton_profile, solve_reduced_bvp,
    MembraneParams, ReducedProblem,
};
use conformon::symmetry::{characteristics, invariance_test, max_characteristic};
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};

/// What a successful command reports on stdout.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub summary: String,
    pub files: Vec<PathBuf>,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    command: &'a str,
    version: &'a str,
    config: &'a RunConfig,
}

fn prepare_out(cfg: &RunConfig) -> Result<(), CliError> {
    fs::create_dir_all(&cfg.out).map_err(|source| CliError::Io {
        path: cfg.out.clone(),
        source,
    })
}

fn write_sidecar(cfg: &RunConfig, command: &str) -> Result<PathBuf, CliError> {
    let path = cfg.out.join("run.json");
    write_json(
        &path,
        &Sidecar {
            command,
            version: env!("CARGO_PKG_VERSION"),
            config: cfg,
        },
    )?;
    Ok(path)
}

fn require_input<'a>(cfg: &'a RunConfig, what: &str) -> Result<&'a Path, CliError> {
    cfg.input
        .as_deref()
        .ok_or_else(|| CliError::Input(format!("--input is required ({what})")))
}

fn grid(cfg: &RunConfig) -> Result<Grid1D, CliError> {
    let g = cfg.grid_spec();
    Grid1D::linspace(g.min, g.max, g.n).stage("grid")
}

fn bool_cell(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

fn max_abs(values: &[f64]) -> f64 {
    values
        .iter()
        .filter(|v| !v.is_nan())
        .fold(0.0, |m, v| m.max(v.abs()))
}

/// Writes the patch-indexed rows `x, y, <columns...>`.
fn patch_rows(patch: &MongePatch, columns: &[&[f64]], valid: &[bool]) -> Vec<Vec<String>> {
    let mut rows = Vec::with_capacity(patch.len());
    for i in 0..patch.nx() {
        for j in 0..patch.ny() {
            let k = patch.index(i, j);
            let mut row = vec![fmt_f64(patch.x(i)), fmt_f64(patch.y(j))];
            row.extend(columns.iter().map(|c| fmt_f64(c[k])));
            row.push(bool_cell(valid[k]));
            rows.push(row);
        }
    }
    rows
}

/// Mean and Gaussian curvature of an input patch.
pub fn cmd_curvature(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let patch = read_patch(require_input(cfg, "patch CSV with x,y,z")?)?;
    let field = curvature_fields(&patch).stage("curvature")?;
    principal_curvatures(&field, cfg.tol.geom).stage("curvature")?;
    prepare_out(cfg)?;
    let path = cfg.out.join("curvature.csv");
    let rows = patch_rows(
        &patch,
        &[patch.heights(), &field.h, &field.k, &field.sqrt_g],
        &field.valid,
    );
    write_csv(&path, &["x", "y", "z", "H", "K", "sqrt_g", "valid"], &rows)?;
    Ok(Outcome {
        summary: format!("max |H| = {}", fmt_f64(field.max_abs_h())),
        files: vec![path, write_sidecar(cfg, "curvature")?],
    })
}

/// Residual of the general shape equation on an input patch.
pub fn cmd_shape_residual(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let patch = read_patch(require_input(cfg, "patch CSV with x,y,z")?)?;
    let params = MembraneParams::new(cfg.k_c, cfg.lambda, cfg.delta_p, cfg.c0).stage("params")?;
    let residual = shape_residual_general(&patch, &params).stage("shape-residual")?;
    let valid: Vec<bool> = residual.iter().map(|r| !r.is_nan()).collect();
    prepare_out(cfg)?;
    let path = cfg.out.join("shape_residual.csv");
    write_csv(
        &path,
        &["x", "y", "residual", "valid"],
        &patch_rows(&patch, &[&residual], &valid),
    )?;
    Ok(Outcome {
        summary: format!("max |residual| = {}", fmt_f64(max_abs(&residual))),
        files: vec![path, write_sidecar(cfg, "shape-residual")?],
    })
}

#[derive(Serialize)]
struct ReducedSummary {
    alpha: f64,
    eps: f64,
    n: usize,
    iterations: usize,
    residual: f64,
    trivial: bool,
    max_abs_h: f64,
}

/// Newton solve of the reduced equation from a scaled soliton (or an
/// `s,H` profile given with `--input`).
pub fn cmd_solve_reduced(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (s, init) = match &cfg.input {
        Some(path) => {
            let (s, mut cols) = read_profile(path, &["H"])?;
            (s, cols.remove(0))
        }
        None => {
            let s = grid(cfg)?;
            let p = ReducedProblem::new(cfg.alpha, cfg.eps, s.clone()).stage("reduced")?;
            let init = soliton_profile(&p).iter().map(|v| cfg.init_scale * v).collect();
            (s, init)
        }
    };
    let problem = ReducedProblem::new(cfg.alpha, cfg.eps, s.clone()).stage("reduced")?;
    let sol = solve_reduced_bvp(&problem, &init, cfg.tol.newton).stage("newton")?;
    let residual = reduced_ode_residual(&sol.values, &problem).stage("residual")?;
    prepare_out(cfg)?;
    let csv_path = cfg.out.join("reduced.csv");
    let rows: Vec<Vec<String>> = (0..s.len())
        .map(|k| {
            vec![
                fmt_f64(s.values()[k]),
                fmt_f64(init[k]),
                fmt_f64(sol.values[k]),
                fmt_f64(residual[k]),
            ]
        })
        .collect();
    write_csv(&csv_path, &["s", "H_init", "H", "residual"], &rows)?;
    let json_path = cfg.out.join("reduced.json");
    write_json(
        &json_path,
        &ReducedSummary {
            alpha: cfg.alpha,
            eps: cfg.eps,
            n: s.len(),
            iterations: sol.iterations,
            residual: sol.residual,
            trivial: sol.trivial,
            max_abs_h: max_abs(&sol.values),
        },
    )?;
    Ok(Outcome {
        summary: format!(
            "converged in {} iterations, residual {}",
            sol.iterations,
            fmt_f64(sol.residual)
        ),
        files: vec![csv_path, json_path, write_sidecar(cfg, "solve-reduced")?],
    })
}

/// Scalar summary of the soliton pipeline, serialized as `spectrum.json`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolitonReport {
    pub alpha: f64,
    pub eps: f64,
    pub n: usize,
    pub coupling: f64,
    /// Bound-state values `ε_q²`, descending.
    pub eigenvalues: Vec<f64>,
    /// Energies `ħ²ε_q²/(2m*)`.
    pub energies: Vec<f64>,
    pub continuum_edge: f64,
    pub residual_max: f64,
    pub correspondence: f64,
    pub threshold: f64,
    pub peak_density: usize,
    pub peak_curvature: usize,
    pub colocalized: bool,
    pub passed: bool,
}

/// Soliton → residual → operator → bound states → correspondence →
/// reconstructed profile. Files are written before the threshold check, so
/// a failing run still leaves its diagnostics behind.
pub fn cmd_soliton_pipeline(cfg: &RunConfig) -> Result<(SolitonReport, Outcome), CliError> {
    let s = grid(cfg)?;
    let problem = ReducedProblem::new(cfg.alpha, cfg.eps, s.clone()).stage("soliton")?;
    let h = soliton_profile(&problem);
    let residual = reduced_ode_residual(&h, &problem).stage("residual")?;
    let coupling = cfg.coupling.unwrap_or(cfg.alpha);
    let op = build_operator_1d(&h, &s, coupling).stage("hamiltonian")?;
    let spectrum = bound_states(&op, cfg.kmax).stage("eigen")?;
    let qp = QuantumParams::new(cfg.hbar, cfg.mass).stage("params")?;
    let kappa: Vec<f64> = h.iter().map(|v| 2.0 * v).collect();
    let curve = reconstruct_profile(&kappa, &s, cfg.theta0, cfg.x0, cfg.z0).stage("reconstruct")?;

    let ground = spectrum.eigenvectors.first();
    let correspondence = match ground {
        Some(psi) => correspondence_metric(psi, &h, &s).stage("correspondence")?,
        None => f64::INFINITY,
    };
    let density: Vec<f64> = match ground {
        Some(psi) => psi.iter().map(|p| p * p).collect(),
        None => vec![0.0; s.len()],
    };
    let h_sq: Vec<f64> = h.iter().map(|v| v * v).collect();
    let peak_density = peak_index(&density, |v| v).unwrap_or(0);
    let peak_curvature = peak_index(&h_sq, |v| v).unwrap_or(0);
    let colocalized = ground.is_some() && peak_density == peak_curvature;
    let passed = colocalized && correspondence <= cfg.tol.correspondence;

    let report = SolitonReport {
        alpha: cfg.alpha,
        eps: cfg.eps,
        n: s.len(),
        coupling,
        energies: spectrum.eigenvalues.iter().map(|&e| qp.energy(e)).collect(),
        eigenvalues: spectrum.eigenvalues.clone(),
        continuum_edge: spectrum.continuum_edge,
        residual_max: max_abs(&residual),
        correspondence,
        threshold: cfg.tol.correspondence,
        peak_density,
        peak_curvature,
        colocalized,
        passed,
    };

    prepare_out(cfg)?;
    let profile_path = cfg.out.join("profile.csv");
    let rows: Vec<Vec<String>> = (0..s.len())
        .map(|k| {
            vec![
                fmt_f64(s.values()[k]),
                fmt_f64(h[k]),
                fmt_f64(curve.x[k]),
                fmt_f64(curve.z[k]),
            ]
        })
        .collect();
    write_csv(&profile_path, &["s", "H", "x", "z"], &rows)?;
    let spectrum_path = cfg.out.join("spectrum.json");
    write_json(&spectrum_path, &report)?;
    let density_path = cfg.out.join("density.csv");
    let rows: Vec<Vec<String>> = (0..s.len())
        .map(|k| {
            vec![
                fmt_f64(s.values()[k]),
                fmt_f64(density[k]),
                fmt_f64(h_sq[k]),
            ]
        })
        .collect();
    write_csv(&density_path, &["s", "psi0_sq", "H_sq"], &rows)?;
    let sidecar = write_sidecar(cfg, "soliton")?;

    if spectrum.is_empty() {
        return Err(CliError::Invariant(
            "correspondence: no bound state above the continuum edge".into(),
        ));
    }
    if !passed {
        return Err(CliError::Invariant(format!(
            "correspondence: metric {} exceeds threshold {} or peaks differ (density node {}, curvature node {})",
            fmt_f64(correspondence),
            fmt_f64(cfg.tol.correspondence),
            peak_density,
            peak_curvature
        )));
    }
    let outcome = Outcome {
        summary: format!(
            "{} bound state(s), top eps_q^2 = {}, correspondence = {}",
            spectrum.len(),
            fmt_f64(spectrum.eigenvalues[0]),
            fmt_f64(correspondence)
        ),
        files: vec![profile_path, spectrum_path, density_path, sidecar],
    };
    Ok((report, outcome))
}

fn spectrum_rows(spectrum: &SpectrumResult, qp: &QuantumParams) -> Vec<Vec<String>> {
    spectrum
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, &e)| vec![i.to_string(), fmt_f64(e), fmt_f64(qp.energy(e))])
        .collect()
}

/// Bound-state table of `d²/ds² + coupling·H²` for an `s,H` profile
/// (default: the soliton on the configured grid).
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (s, h) = match &cfg.input {
        Some(path) => {
            let (s, mut cols) = read_profile(path, &["H"])?;
            (s, cols.remove(0))
        }
        None => {
            let s = grid(cfg)?;
            let p = ReducedProblem::new(cfg.alpha, cfg.eps, s.clone()).stage("soliton")?;
            let h = soliton_profile(&p);
            (s, h)
        }
    };
    let op = build_operator_1d(&h, &s, cfg.coupling.unwrap_or(1.0)).stage("hamiltonian")?;
    let spectrum = bound_states(&op, cfg.kmax).stage("eigen")?;
    let qp = QuantumParams::new(cfg.hbar, cfg.mass).stage("params")?;
    prepare_out(cfg)?;
    let path = cfg.out.join("spectrum.csv");
    write_csv(
        &path,
        &["index", "eps_q2", "energy"],
        &spectrum_rows(&spectrum, &qp),
    )?;
    Ok(Outcome {
        summary: format!(
            "{} bound state(s) above continuum edge {}",
            spectrum.len(),
            fmt_f64(spectrum.continuum_edge)
        ),
        files: vec![path, write_sidecar(cfg, "spectrum")?],
    })
}

#[derive(Serialize)]
struct CorrespondenceSummary {
    metric: f64,
    threshold: f64,
    peak_density: usize,
    peak_curvature: usize,
    colocalized: bool,
    passed: bool,
}

/// Compares a state `psi` with a curvature profile `H` from one CSV.
pub fn cmd_correspondence(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (s, cols) = read_profile(require_input(cfg, "CSV with s,psi,H")?, &["psi", "H"])?;
    let (psi, h) = (&cols[0], &cols[1]);
    let metric = correspondence_metric(psi, h, &s).stage("correspondence")?;
    let peak_density = peak_index(psi, |v| v * v).unwrap_or(0);
    let peak_curvature = peak_index(h, |v| v * v).unwrap_or(0);
    let colocalized = peak_density == peak_curvature;
    let passed = colocalized && metric <= cfg.tol.correspondence;
    prepare_out(cfg)?;
    let path = cfg.out.join("correspondence.json");
    write_json(
        &path,
        &CorrespondenceSummary {
            metric,
            threshold: cfg.tol.correspondence,
            peak_density,
            peak_curvature,
            colocalized,
            passed,
        },
    )?;
    let sidecar = write_sidecar(cfg, "correspondence")?;
    if !passed {
        return Err(CliError::Invariant(format!(
            "correspondence: metric {} exceeds threshold {} or peaks differ",
            fmt_f64(metric),
            fmt_f64(cfg.tol.correspondence)
        )));
    }
    Ok(Outcome {
        summary: format!("correspondence = {}", fmt_f64(metric)),
        files: vec![path, sidecar],
    })
}

/// Planar curve from a curvature profile `s,kappa` (default: `κ = 2H` of
/// the soliton).
pub fn cmd_reconstruct(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (s, kappa) = match &cfg.input {
        Some(path) => {
            let (s, mut cols) = read_profile(path, &["kappa"])?;
            (s, cols.remove(0))
        }
        None => {
            let s = grid(cfg)?;
            let p = ReducedProblem::new(cfg.alpha, cfg.eps, s.clone()).stage("soliton")?;
            let kappa = soliton_profile(&p).iter().map(|v| 2.0 * v).collect();
            (s, kappa)
        }
    };
    let curve: ProfileCurve =
        reconstruct_profile(&kappa, &s, cfg.theta0, cfg.x0, cfg.z0).stage("reconstruct")?;
    prepare_out(cfg)?;
    let path = cfg.out.join("curve.csv");
    let rows: Vec<Vec<String>> = (0..curve.len())
        .map(|k| {
            vec![
                fmt_f64(curve.s.values()[k]),
                fmt_f64(curve.theta[k]),
                fmt_f64(curve.x[k]),
                fmt_f64(curve.z[k]),
                fmt_f64(curve.kappa[k]),
            ]
        })
        .collect();
    write_csv(&path, &["s", "theta", "x", "z", "kappa"], &rows)?;
    Ok(Outcome {
        summary: format!(
            "max unit-speed deviation = {}",
            fmt_f64(curve.max_speed_deviation())
        ),
        files: vec![path, write_sidecar(cfg, "reconstruct")?],
    })
}

#[derive(Serialize)]
struct GeneratorSummary {
    index: usize,
    max_abs_q: f64,
    invariant: bool,
}

#[derive(Serialize)]
struct SymmetrySummary {
    scale: f64,
    tolerance: f64,
    generators: Vec<GeneratorSummary>,
}

/// Characteristics `Q₁..Q₆` of an input patch and the invariance verdicts.
pub fn cmd_symmetry(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let patch = read_patch(require_input(cfg, "patch CSV with x,y,z")?)?;
    let set = characteristics(&patch);
    let indices: Vec<usize> = match cfg.generator {
        Some(j) => vec![j],
        None => (1..=6).collect(),
    };
    let mut generators = Vec::with_capacity(indices.len());
    for j in indices {
        generators.push(GeneratorSummary {
            index: j,
            max_abs_q: max_characteristic(&patch, j),
            invariant: invariance_test(&patch, j, cfg.tol.invariance).stage("symmetry")?,
        });
    }
    prepare_out(cfg)?;
    let csv_path = cfg.out.join("characteristics.csv");
    let cols: Vec<&[f64]> = set.q.iter().map(Vec::as_slice).collect();
    write_csv(
        &csv_path,
        &["x", "y", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "valid"],
        &patch_rows(&patch, &cols, &set.valid),
    )?;
    let json_path = cfg.out.join("symmetry.json");
    let invariant: Vec<String> = generators
        .iter()
        .filter(|g| g.invariant)
        .map(|g| g.index.to_string())
        .collect();
    write_json(
        &json_path,
        &SymmetrySummary {
            scale: patch.scale(),
            tolerance: cfg.tol.invariance,
            generators,
        },
    )?;
    Ok(Outcome {
        summary: format!("invariant generators: [{}]", invariant.join(", ")),
        files: vec![csv_path, json_path, write_sidecar(cfg, "symmetry")?],
    })
}

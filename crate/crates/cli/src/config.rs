//! Run configuration: built-in defaults, overridden by an optional
//! `key=value` file, overridden by command-line flags.

use crate::error::CliError;
use clap::Args;
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Uniform grid `min:max:n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(format!("grid must be min:max:n, got {s:?}"));
        }
        let min: f64 = parts[0].parse().map_err(|_| format!("bad grid min {:?}", parts[0]))?;
        let max: f64 = parts[1].parse().map_err(|_| format!("bad grid max {:?}", parts[1]))?;
        let n: usize = parts[2].parse().map_err(|_| format!("bad grid size {:?}", parts[2]))?;
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(format!("grid needs min < max, got {min}:{max}"));
        }
        if n < 3 {
            return Err(format!("grid needs n >= 3, got {n}"));
        }
        Ok(Self { min, max, n })
    }
}

impl std::fmt::Display for GridSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}", self.min, self.max, self.n)
    }
}

/// Named tolerances settable with `--tol NAME=VALUE`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TolConfig {
    pub geom: f64,
    pub newton: f64,
    pub eigen: f64,
    pub correspondence: f64,
    pub invariance: f64,
}

impl Default for TolConfig {
    fn default() -> Self {
        let core = conformon::Tolerances::default();
        Self {
            geom: core.geom,
            newton: core.newton,
            eigen: core.eigen,
            correspondence: 1e-3,
            invariance: 1e-8,
        }
    }
}

impl TolConfig {
    fn set(&mut self, name: &str, value: f64) -> Result<(), String> {
        if !(value.is_finite() && value > 0.0) {
            return Err(format!("tolerance {name} must be positive, got {value}"));
        }
        let slot = match name {
            "geom" => &mut self.geom,
            "newton" => &mut self.newton,
            "eigen" => &mut self.eigen,
            "correspondence" => &mut self.correspondence,
            "invariance" => &mut self.invariance,
            _ => {
                return Err(format!(
                    "unknown tolerance {name:?} (expected geom, newton, eigen, correspondence, invariance)"
                ))
            }
        };
        *slot = value;
        Ok(())
    }
}

/// Fully resolved parameters of one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub alpha: f64,
    pub eps: f64,
    pub k_c: f64,
    pub lambda: f64,
    pub delta_p: f64,
    pub c0: f64,
    pub hbar: f64,
    pub mass: f64,
    /// `None` means `[-10/eps, 10/eps]` with 2001 nodes.
    pub grid: Option<GridSpec>,
    pub kmax: usize,
    pub coupling: Option<f64>,
    pub generator: Option<usize>,
    pub init_scale: f64,
    pub theta0: f64,
    pub x0: f64,
    pub z0: f64,
    pub tol: TolConfig,
    pub input: Option<PathBuf>,
    pub out: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: 2.0,
            eps: 1.0,
            k_c: 1.0,
            lambda: 1.0,
            delta_p: 0.0,
            c0: 0.0,
            hbar: 1.0,
            mass: 1.0,
            grid: None,
            kmax: 10,
            coupling: None,
            generator: None,
            init_scale: 1.0,
            theta0: 0.0,
            x0: 0.0,
            z0: 0.0,
            tol: TolConfig::default(),
            input: None,
            out: PathBuf::from("."),
        }
    }
}

pub const DEFAULT_GRID_NODES: usize = 2001;

impl RunConfig {
    /// The arclength grid: explicit, or `[-10/eps, 10/eps]` with 2001 nodes.
    pub fn grid_spec(&self) -> GridSpec {
        self.grid.unwrap_or(GridSpec {
            min: -10.0 / self.eps,
            max: 10.0 / self.eps,
            n: DEFAULT_GRID_NODES,
        })
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let key = key.trim().replace('-', "_");
        let value = value.trim();
        let num = || -> Result<f64, String> {
            value
                .parse::<f64>()
                .map_err(|_| format!("{key}: not a number: {value:?}"))
        };
        let count = || -> Result<usize, String> {
            value
                .parse::<usize>()
                .map_err(|_| format!("{key}: not a non-negative integer: {value:?}"))
        };
        match key.as_str() {
            "alpha" => self.alpha = num()?,
            "eps" => self.eps = num()?,
            "k_c" => self.k_c = num()?,
            "lambda" => self.lambda = num()?,
            "delta_p" => self.delta_p = num()?,
            "c0" => self.c0 = num()?,
            "hbar" => self.hbar = num()?,
            "mass" => self.mass = num()?,
            "grid" => self.grid = Some(value.parse()?),
            "kmax" => self.kmax = count()?,
            "coupling" => self.coupling = Some(num()?),
            "generator" => self.generator = Some(count()?),
            "init_scale" => self.init_scale = num()?,
            "theta0" => self.theta0 = num()?,
            "x0" => self.x0 = num()?,
            "z0" => self.z0 = num()?,
            "input" => self.input = Some(PathBuf::from(value)),
            "out" => self.out = PathBuf::from(value),
            "tol" => {
                let (name, v) = split_tol(value)?;
                self.tol.set(&name, v)?;
            }
            other => match other.strip_prefix("tol_") {
                Some(name) => self.tol.set(name, num()?)?,
                None => return Err(format!("unknown key {other:?}")),
            },
        }
        Ok(())
    }

    /// Applies a `key=value` config file. Blank lines and `#` comments are
    /// skipped.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::Input(format!(
                    "{}: line {}: expected key=value",
                    path.display(),
                    lineno + 1
                ))
            })?;
            self.set(k, v).map_err(|e| {
                CliError::Input(format!("{}: line {}: {e}", path.display(), lineno + 1))
            })?;
        }
        Ok(())
    }

    /// Range checks shared by all commands.
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Input(msg));
        if !(self.eps.is_finite() && self.eps > 0.0) {
            return bad(format!("eps must be positive, got {}", self.eps));
        }
        if self.alpha != 1.0 && self.alpha != 2.0 {
            return bad(format!("alpha must be 1 or 2, got {}", self.alpha));
        }
        if self.kmax == 0 {
            return bad("kmax must be at least 1".into());
        }
        if let Some(j) = self.generator {
            if !(1..=6).contains(&j) {
                return bad(format!("generator must be in 1..=6, got {j}"));
            }
        }
        for (name, v) in [
            ("k_c", self.k_c),
            ("lambda", self.lambda),
            ("delta_p", self.delta_p),
            ("c0", self.c0),
            ("hbar", self.hbar),
            ("mass", self.mass),
            ("init_scale", self.init_scale),
            ("theta0", self.theta0),
            ("x0", self.x0),
            ("z0", self.z0),
        ] {
            if !v.is_finite() {
                return bad(format!("{name} must be finite"));
            }
        }
        if let Some(c) = self.coupling {
            if !c.is_finite() {
                return bad("coupling must be finite".into());
            }
        }
        Ok(())
    }

    /// Lines of `key=value` for every parameter, valid as a config file.
    pub fn to_key_values(&self) -> Vec<String> {
        let opt = |v: Option<String>| v.unwrap_or_default();
        vec![
            format!("alpha={}", self.alpha),
            format!("eps={}", self.eps),
            format!("k_c={}", self.k_c),
            format!("lambda={}", self.lambda),
            format!("delta_p={}", self.delta_p),
            format!("c0={}", self.c0),
            format!("hbar={}", self.hbar),
            format!("mass={}", self.mass),
            format!("grid={}", self.grid_spec()),
            format!("kmax={}", self.kmax),
            format!("# coupling defaults to alpha for soliton, 1 for spectrum"),
            format!("# coupling={}", opt(self.coupling.map(|c| c.to_string()))),
            format!("# generator=1..6 (all six when unset)"),
            format!("init_scale={}", self.init_scale),
            format!("theta0={}", self.theta0),
            format!("x0={}", self.x0),
            format!("z0={}", self.z0),
            format!("tol_geom={:e}", self.tol.geom),
            format!("tol_newton={:e}", self.tol.newton),
            format!("tol_eigen={:e}", self.tol.eigen),
            format!("tol_correspondence={:e}", self.tol.correspondence),
            format!("tol_invariance={:e}", self.tol.invariance),
            format!("out={}", self.out.display()),
        ]
    }
}

fn split_tol(s: &str) -> Result<(String, f64), String> {
    let (name, v) = s
        .split_once('=')
        .ok_or_else(|| format!("tolerance must be NAME=VALUE, got {s:?}"))?;
    let v: f64 = v
        .trim()
        .parse()
        .map_err(|_| format!("tolerance {name}: not a number: {v:?}"))?;
    Ok((name.trim().to_string(), v))
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Coupling of the reduced equation: 2 elastic, 1 quantum
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Decay rate ε, with ε² = λ/k_c
    #[arg(long, allow_negative_numbers = true)]
    pub eps: Option<f64>,
    /// Bending rigidity
    #[arg(long = "k-c", allow_negative_numbers = true)]
    pub k_c: Option<f64>,
    /// Surface tension
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Pressure difference (may be negative)
    #[arg(long = "delta-p", allow_negative_numbers = true)]
    pub delta_p: Option<f64>,
    /// Spontaneous curvature
    #[arg(long, allow_negative_numbers = true)]
    pub c0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    /// Effective mass
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    /// Arclength grid as min:max:n
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,
    /// Maximum number of bound states
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Potential coupling of the 1D operator d²/ds² + coupling·H²
    #[arg(long, allow_negative_numbers = true)]
    pub coupling: Option<f64>,
    /// Symmetry generator index 1..6
    #[arg(long)]
    pub generator: Option<usize>,
    /// Initial guess = init_scale × soliton (solve-reduced)
    #[arg(long = "init-scale", allow_negative_numbers = true)]
    pub init_scale: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub z0: Option<f64>,
    /// Input file (patch or profile CSV)
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Tolerance override NAME=VALUE (geom, newton, eigen, correspondence, invariance)
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// key=value configuration file, overridden by flags
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl CommonArgs {
    /// Defaults, then the config file, then flags.
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        macro_rules! over {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field { cfg.$field = v; })*
            };
        }
        over!(alpha, eps, k_c, lambda, delta_p, c0, hbar, mass, kmax, init_scale, theta0, x0, z0);
        if self.grid.is_some() {
            cfg.grid = self.grid;
        }
        if self.coupling.is_some() {
            cfg.coupling = self.coupling;
        }
        if self.generator.is_some() {
            cfg.generator = self.generator;
        }
        if let Some(p) = &self.input {
            cfg.input = Some(p.clone());
        }
        if let Some(p) = &self.out {
            cfg.out = p.clone();
        }
        for t in &self.tol {
            let (name, v) = split_tol(t).map_err(CliError::Input)?;
            cfg.tol.set(&name, v).map_err(CliError::Input)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

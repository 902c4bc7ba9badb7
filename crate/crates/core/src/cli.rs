//! Command-line surface: argument parsing, experiment drivers and JSON reports.
//!
//! Every command returns the text it prints, so the binary stays a thin shell
//! and the commands can be exercised in-process.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Quaternion, RingTag};
use crate::cayley::cayley_eps;
use crate::covering::{default_cover, verify_cover, CoverageReport, Space};
use crate::document::{matrix_to_json, parse_matrix, MatrixDocument};
use crate::error::{Error, Result};
use crate::lefteig::{
    detect_infinite_family, left_eigen_residual, left_eigenvalues_2x2, noncover_witness,
    LeftSpectrum,
};
use crate::matrix::{DenseMatrix, GroupElement};
use crate::morse::{classify_critical_set, compare_flows, gradient, is_morse, HeightFunction};
use crate::tol::{EPS_CRIT, EPS_INPUT, EPS_INV};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "cayley",
    version,
    about = "Cayley transforms, trace height functions and categorical coverings"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Seed for every random draw.
    #[arg(long, global = true, env = "CAYLEY_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Smallest singular value, relative to the Frobenius norm, below which `A + X` counts as singular.
    #[arg(long, global = true, default_value_t = EPS_INV)]
    pub eps_inv: f64,
    /// Gradient norm below which a point counts as critical.
    #[arg(long, global = true, default_value_t = EPS_CRIT)]
    pub eps_crit: f64,
    /// Invertibility threshold used when testing cover membership.
    #[arg(long, global = true, default_value_t = EPS_INV)]
    pub eps_cover: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print c_A(X) for a center A and a point X.
    Cayley { center: PathBuf, x: PathBuf },
    /// Monte-Carlo check of a covering by Cayley domains.
    Cover {
        /// unitary, sp2, mprime or symunitary.
        space: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Where to write the full JSON report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the closed-form gradient flow of h_X near a critical point A with RK4.
    Flow {
        x: PathBuf,
        a: PathBuf,
        alpha0: PathBuf,
        #[arg(long, default_value_t = 5.0)]
        t_end: f64,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
        /// Report every `stride`-th RK4 step.
        #[arg(long, default_value_t = 100)]
        stride: usize,
    },
    /// Left eigenvalues of a 2x2 quaternionic matrix.
    Lefteig { a: PathBuf },
    /// Critical-set structure of h_X.
    Critical { x: PathBuf },
    /// A point of Sp(2) outside four Cayley domains σ_k·I.
    Witness {
        /// JSON list of four quaternions [w, x, y, z].
        #[arg(long)]
        sigmas: PathBuf,
    },
}

/// Settings echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: Option<usize>,
    pub tolerances: BTreeMap<String, f64>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(global: &GlobalArgs) -> Result<Self> {
        let tolerances = BTreeMap::from([
            ("eps_cover".to_string(), global.eps_cover),
            ("eps_crit".to_string(), global.eps_crit),
            ("eps_inv".to_string(), global.eps_inv),
        ]);
        if let Some((name, v)) = tolerances
            .iter()
            .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
        {
            return Err(Error::Parse(format!(
                "tolerance {name} must be positive, got {v}"
            )));
        }
        Ok(Self {
            seed: global.seed,
            samples: None,
            tolerances,
            out: None,
        })
    }

    fn tol(&self, name: &str) -> f64 {
        self.tolerances[name]
    }
}

fn report(config: &RunConfig, command: &str, body: Value) -> Value {
    json!({ "version": VERSION, "command": command, "config": config, "result": body })
}

fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("reports always serialize")
}

fn read_matrix(path: &Path) -> Result<DenseMatrix> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn group_element(m: DenseMatrix) -> Result<GroupElement> {
    GroupElement::new(m, EPS_INPUT)
}

/// Runs a parsed command and returns what it prints on standard output.
pub fn run(cli: &Cli) -> Result<String> {
    let mut config = RunConfig::new(&cli.global)?;
    match &cli.command {
        Command::Cayley { center, x } => cmd_cayley(
            &read_matrix(center)?,
            &read_matrix(x)?,
            config.tol("eps_inv"),
        ),
        Command::Cover {
            space,
            n,
            samples,
            out,
        } => {
            config.samples = Some(*samples);
            config.out = out.clone();
            let (summary, json) = cmd_cover(space, *n, *samples, &config)?;
            if let Some(path) = out {
                fs::write(path, json)?;
            }
            Ok(summary)
        }
        Command::Flow {
            x,
            a,
            alpha0,
            t_end,
            dt,
            stride,
        } => {
            let v = cmd_flow(
                &read_matrix(x)?,
                &read_matrix(a)?,
                &read_matrix(alpha0)?,
                *t_end,
                *dt,
                *stride,
                &config,
            )?;
            Ok(to_pretty(&v))
        }
        Command::Lefteig { a } => Ok(to_pretty(&cmd_lefteig(&read_matrix(a)?, &config)?)),
        Command::Critical { x } => Ok(to_pretty(&cmd_critical(&read_matrix(x)?, &config)?)),
        Command::Witness { sigmas } => {
            let text = fs::read_to_string(sigmas)
                .map_err(|e| Error::Parse(format!("{}: {e}", sigmas.display())))?;
            let raw: Vec<[f64; 4]> = serde_json::from_str(&text)?;
            let quad: [Quaternion; 4] = raw
                .into_iter()
                .map(Quaternion::from_array)
                .collect::<Vec<_>>()
                .try_into()
                .map_err(|v: Vec<Quaternion>| {
                    Error::Parse(format!("expected 4 quaternions, got {}", v.len()))
                })?;
            Ok(to_pretty(&cmd_witness(&quad, &config)?))
        }
    }
}

/// `c_A(X)` as a matrix document.
pub fn cmd_cayley(center: &DenseMatrix, x: &DenseMatrix, eps_inv: f64) -> Result<String> {
    let a = group_element(center.clone())?;
    Ok(matrix_to_json(&cayley_eps(&a, x, eps_inv)?))
}

/// Returns the `covered/samples` summary line and the full JSON report.
pub fn cmd_cover(
    space: &str,
    n: usize,
    samples: usize,
    config: &RunConfig,
) -> Result<(String, String)> {
    let space = Space::from_name(space, n)?;
    let spec = default_cover(space)?.with_eps(config.tol("eps_cover"));
    let r: CoverageReport = verify_cover(&spec, samples, config.seed)?;
    let body = json!({
        "space": space.to_string(),
        "centers": spec.centers.iter().map(|c| MatrixDocument::from(c.mat())).collect::<Vec<_>>(),
        "report": r,
    });
    Ok((
        format!("{}/{}", r.covered, r.samples),
        to_pretty(&report(config, "cover", body)),
    ))
}

pub fn cmd_flow(
    x: &DenseMatrix,
    a: &DenseMatrix,
    alpha0: &DenseMatrix,
    t_end: f64,
    dt: f64,
    stride: usize,
    config: &RunConfig,
) -> Result<Value> {
    let h = HeightFunction::new(x.clone())?;
    let a = group_element(a.clone())?;
    let g = gradient(&h, &a)?.fro_norm();
    if g > config.tol("eps_crit") {
        return Err(Error::NotCritical(g));
    }
    let alpha0 = group_element(alpha0.clone())?;
    let cmp = compare_flows(&h, &a, &alpha0, t_end, dt, stride)?;
    let docs = |c: &crate::morse::FlowCurve| {
        c.samples
            .iter()
            .map(|s| MatrixDocument::from(&s.alpha))
            .collect::<Vec<_>>()
    };
    let body = json!({
        "times": cmp.rk4.samples.iter().map(|s| s.t).collect::<Vec<_>>(),
        "closed_form": docs(&cmp.closed_form),
        "rk4": docs(&cmp.rk4),
        "max_deviation": cmp.max_deviation,
        "max_height_decrease": cmp.max_height_decrease,
        "final_gradient_norm": cmp.final_gradient_norm,
        "rk4_drift": cmp.rk4.max_drift,
    });
    Ok(report(config, "flow", body))
}

pub fn cmd_lefteig(a: &DenseMatrix, config: &RunConfig) -> Result<Value> {
    if a.ring() != RingTag::H {
        return Err(Error::ShapeMismatch(format!(
            "expected a quaternionic matrix, got ring {}",
            a.ring()
        )));
    }
    let body = match left_eigenvalues_2x2(a)? {
        LeftSpectrum::Finite(roots) => {
            let residuals = roots
                .iter()
                .map(|r| left_eigen_residual(a, *r))
                .collect::<Result<Vec<_>>>()?;
            json!({
                "kind": "finite",
                "roots": roots.iter().map(|r| r.to_array()).collect::<Vec<_>>(),
                "residuals": residuals,
            })
        }
        sphere @ LeftSpectrum::InfiniteSphere { center, axis } => {
            let probes = [Quaternion::I, Quaternion::J, Quaternion::K];
            let residuals = probes
                .iter()
                .map(|t| left_eigen_residual(a, sphere.sphere_point(*t).expect("sphere")))
                .collect::<Result<Vec<_>>>()?;
            let family = detect_infinite_family(a, 1e-9)?;
            json!({
                "kind": "sphere",
                "center": center.to_array(),
                "axis": axis.to_array(),
                "q": family.map(|(q, _)| q.to_array()),
                "theta": family.map(|(_, t)| t),
                "residuals": residuals,
            })
        }
    };
    Ok(report(config, "lefteig", body))
}

pub fn cmd_critical(x: &DenseMatrix, config: &RunConfig) -> Result<Value> {
    let h = HeightFunction::new(x.clone())?;
    let s = classify_critical_set(&h)?;
    let body = json!({
        "n0": s.n0,
        "levels": s.levels,
        "is_morse": is_morse(&h)?,
        "predicted_total_dim": s.predicted_total_dim,
    });
    Ok(report(config, "critical", body))
}

pub fn cmd_witness(sigmas: &[Quaternion; 4], config: &RunConfig) -> Result<Value> {
    let w = noncover_witness(sigmas)?;
    let body = json!({
        "matrix": MatrixDocument::from(w.matrix.mat()),
        "q": w.q.to_array(),
        "cos_theta": w.cos_theta,
        "sin_theta": w.sin_theta,
        "certificate": w.certificate,
        "orthogonality_residual": w.matrix.residual(),
    });
    Ok(report(config, "witness", body))
}

/// Parses `args`, runs the command and returns `(exit code, stdout, stderr)`.
pub fn main_with_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => return (1, String::new(), e.render().to_string()),
        Err(e) => return (0, e.render().to_string(), String::new()),
    };
    match run(&cli) {
        Ok(out) => (0, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}")),
    }
}

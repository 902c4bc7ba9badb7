//! Trace height functions `h_X(A) = Re Tr(XA)` on `O(n, K)`.
//!
//! With the metric `⟨A, B⟩ = Re Tr(A*B)` the gradient at `A` is
//! `(X* − AXA)/2`, so `A` is critical iff `XA` is hermitian. At a critical
//! point the gradient flow is linearized by the Cayley transform: with
//! `β₀ = c_A(α(0))`,
//!
//! ```text
//! α(t) = c_{A*}( exp(−XAt/2) · β₀ · exp(−AXt/2) )
//! ```
//!
//! and the curve `β` is constant exactly on `S(A) = {β ∈ T_{A*}G : XAβ + βAX = 0}`,
//! which therefore charts the critical set near `A`.

use nalgebra::{DMatrix, SVD};
use serde::Serialize;

use crate::algebra::RingTag;
use crate::cayley::{cayley, cayley_from_tangent, in_omega, is_tangent, tangency_residual};
use crate::error::{Error, Result};
use crate::matrix::{matexp, orthogonality_residual, DenseMatrix, GroupElement};
use crate::tol::{EPS_CLUSTER, EPS_CRIT, EPS_NULL};

/// `A ↦ Re Tr(XA)` on `O(n, K)`.
#[derive(Clone, Debug)]
pub struct HeightFunction {
    x: DenseMatrix,
}

impl HeightFunction {
    pub fn new(x: DenseMatrix) -> Result<Self> {
        x.check_square()?;
        Ok(Self { x })
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.x
    }

    pub fn ring(&self) -> RingTag {
        self.x.ring()
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    fn check(&self, a: &DenseMatrix) -> Result<()> {
        if a.ring() != self.ring() {
            return Err(Error::RingMismatch {
                left: self.ring(),
                right: a.ring(),
            });
        }
        if a.shape() != self.x.shape() {
            return Err(Error::ShapeMismatch(format!(
                "height function is {n}x{n}, point is {}x{}",
                a.rows(),
                a.cols(),
                n = self.n()
            )));
        }
        Ok(())
    }
}

pub fn height(h: &HeightFunction, a: &GroupElement) -> Result<f64> {
    h.check(a.mat())?;
    Ok((h.matrix() * a.mat()).trace().w)
}

/// `(X* − AXA)/2`, the gradient of `h` at `A`.
pub fn gradient(h: &HeightFunction, a: &GroupElement) -> Result<DenseMatrix> {
    h.check(a.mat())?;
    Ok(gradient_at(h.matrix(), a.mat()))
}

fn gradient_at(x: &DenseMatrix, a: &DenseMatrix) -> DenseMatrix {
    (&x.adjoint() - &(&(a * x) * a)).scale(0.5)
}

pub fn is_critical(h: &HeightFunction, a: &GroupElement, tol: f64) -> bool {
    gradient(h, a).is_ok_and(|g| g.fro_norm() <= tol)
}

fn require_critical(h: &HeightFunction, a: &GroupElement) -> Result<()> {
    let g = gradient(h, a)?.fro_norm();
    if g > EPS_CRIT {
        return Err(Error::NotCritical(g));
    }
    Ok(())
}

/// Hessian operator `U ↦ −(AXU + UXA)/2` at a critical point.
pub fn hessian_form(h: &HeightFunction, a: &GroupElement, u: &DenseMatrix) -> Result<DenseMatrix> {
    require_critical(h, a)?;
    h.check(u)?;
    let r = tangency_residual(a, u);
    if r > 1e-9 * (1.0 + u.fro_norm()) {
        return Err(Error::NotTangent(r));
    }
    let x = h.matrix();
    let am = a.mat();
    Ok((&(&(am * x) * u) + &(&(u * x) * am)).scale(-0.5))
}

/// Decomposition of the critical set of `h_X` by the spectrum of `XX*`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalStructure {
    /// Dimension of the kernel of `X`.
    pub n0: usize,
    /// Distinct singular values `t_i > 0` of `X`, ascending, with multiplicities.
    pub levels: Vec<(f64, usize)>,
    /// Real dimension of `O(n₀, K)` plus the largest Grassmannian component of each level.
    pub predicted_total_dim: usize,
}

/// Real dimension of `O(m, K)`.
pub fn orthogonal_group_dim(ring: RingTag, m: usize) -> usize {
    match ring {
        RingTag::R => m * m.saturating_sub(1) / 2,
        RingTag::C => m * m,
        RingTag::H => m * (2 * m + 1),
    }
}

/// Largest real dimension of a Grassmannian `O(m)/(O(p) × O(q))`, `p + q = m`.
pub fn max_grassmannian_dim(ring: RingTag, m: usize) -> usize {
    ring.real_dim() * (m / 2) * m.div_ceil(2)
}

pub fn classify_critical_set(h: &HeightFunction) -> Result<CriticalStructure> {
    let x = h.matrix();
    let xx = x * &x.adjoint();
    let mut e: Vec<f64> = xx
        .hermitian_eigenvalues()?
        .into_iter()
        .map(|v| v.max(0.0))
        .collect();
    e.sort_by(|a, b| a.total_cmp(b));

    // cluster the eigenvalues of XX* themselves: taking square roots first
    // would blow roundoff of order eps·|X|² up to sqrt(eps)·|X|
    let e_max = e.last().copied().unwrap_or(0.0);
    let tol = EPS_CLUSTER * e_max;
    let mut n0 = 0;
    let mut clusters: Vec<(f64, usize)> = Vec::new();
    for &v in &e {
        if e_max == 0.0 || v <= tol {
            n0 += 1;
            continue;
        }
        match clusters.last_mut() {
            Some((first, count)) if v - *first <= tol => *count += 1,
            _ => clusters.push((v, 1)),
        }
    }
    // each level of the H-image appears twice
    let f = h.ring().complex_factor();
    let n0 = n0 / f;
    let levels: Vec<(f64, usize)> = clusters
        .into_iter()
        .map(|(first, count)| {
            let mean = e
                .iter()
                .filter(|&&v| v >= first && v - first <= tol)
                .sum::<f64>()
                / count as f64;
            (mean.sqrt(), count / f)
        })
        .collect();
    let predicted_total_dim = orthogonal_group_dim(h.ring(), n0)
        + levels
            .iter()
            .map(|&(_, m)| max_grassmannian_dim(h.ring(), m))
            .sum::<usize>();
    Ok(CriticalStructure {
        n0,
        levels,
        predicted_total_dim,
    })
}

/// `h_X` is Morse iff `XX*` is invertible with `n` distinct eigenvalues.
pub fn is_morse(h: &HeightFunction) -> Result<bool> {
    let s = classify_critical_set(h)?;
    Ok(s.n0 == 0 && s.levels.iter().all(|&(_, m)| m == 1))
}

#[derive(Clone, Debug)]
pub struct FlowSample {
    pub t: f64,
    pub alpha: DenseMatrix,
}

/// A sampled trajectory of the gradient flow.
#[derive(Clone, Debug)]
pub struct FlowCurve {
    /// Critical point used for the linearization, if any.
    pub center: Option<GroupElement>,
    /// `c_A(α(0))`, if the curve came from the closed form.
    pub beta0: Option<DenseMatrix>,
    pub samples: Vec<FlowSample>,
    /// Largest orthogonality residual over the samples.
    pub max_drift: f64,
}

impl FlowCurve {
    fn from_samples(
        center: Option<GroupElement>,
        beta0: Option<DenseMatrix>,
        samples: Vec<FlowSample>,
    ) -> Self {
        let max_drift = samples
            .iter()
            .map(|s| orthogonality_residual(&s.alpha))
            .fold(0.0, f64::max);
        Self {
            center,
            beta0,
            samples,
            max_drift,
        }
    }

    pub fn last(&self) -> Option<&FlowSample> {
        self.samples.last()
    }

    /// Largest `‖α(t) − α'(t)‖_F` over the times both curves sample (times
    /// matched to within `1e-9`).
    pub fn max_deviation(&self, other: &FlowCurve) -> f64 {
        let mut worst = 0.0f64;
        let mut j = 0;
        for s in &self.samples {
            while j < other.samples.len() && other.samples[j].t < s.t - 1e-9 {
                j += 1;
            }
            if let Some(o) = other.samples.get(j) {
                if (o.t - s.t).abs() <= 1e-9 {
                    worst = worst.max(s.alpha.distance(&o.alpha));
                }
            }
        }
        worst
    }
}

/// Closed-form gradient flow through the Cayley chart at a critical point `A`.
pub fn flow_closed_form(
    h: &HeightFunction,
    a: &GroupElement,
    alpha0: &GroupElement,
    times: &[f64],
) -> Result<FlowCurve> {
    require_critical(h, a)?;
    h.check(alpha0.mat())?;
    if !in_omega(a, alpha0.mat())? {
        return Err(Error::OutsideDomain);
    }
    let beta0 = cayley(a, alpha0.mat())?;
    let x = h.matrix();
    let xa = x * a.mat();
    let ax = a.mat() * x;
    let a_star = a.adjoint();
    let samples = times
        .iter()
        .map(|&t| {
            let beta = linearized_beta(&xa, &ax, &beta0, t)?;
            Ok(FlowSample {
                t,
                alpha: cayley_from_tangent(&a_star, &beta)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FlowCurve::from_samples(
        Some(a.clone()),
        Some(beta0),
        samples,
    ))
}

/// `exp(−XAt/2) · β₀ · exp(−AXt/2)`.
pub fn linearized_beta(
    xa: &DenseMatrix,
    ax: &DenseMatrix,
    beta0: &DenseMatrix,
    t: f64,
) -> Result<DenseMatrix> {
    let left = matexp(&xa.scale(-0.5 * t))?;
    let right = matexp(&ax.scale(-0.5 * t))?;
    Ok(&(&left * beta0) * &right)
}

/// Classical RK4 for `α' = (X* − αXα)/2`, recording every step. The iterate
/// is never projected back onto the group; `max_drift` measures how far it
/// wandered.
pub fn flow_rk4(
    h: &HeightFunction,
    alpha0: &GroupElement,
    t_end: f64,
    dt: f64,
) -> Result<FlowCurve> {
    integrate_rk4(h, alpha0.mat(), t_end, dt)
}

/// RK4 on the ambient matrix space; the start point need not lie on the group.
pub(crate) fn integrate_rk4(
    h: &HeightFunction,
    alpha0: &DenseMatrix,
    t_end: f64,
    dt: f64,
) -> Result<FlowCurve> {
    h.check(alpha0)?;
    if !(dt > 0.0) || !t_end.is_finite() || t_end < 0.0 {
        return Err(Error::Parse(format!(
            "invalid integration window t_end={t_end}, dt={dt}"
        )));
    }
    let x = h.matrix();
    let field = |a: &DenseMatrix| gradient_at(x, a);
    let steps = (t_end / dt).round() as usize;
    let mut alpha = alpha0.clone();
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(FlowSample {
        t: 0.0,
        alpha: alpha.clone(),
    });
    for k in 0..steps {
        let k1 = field(&alpha);
        let k2 = field(&(&alpha + &k1.scale(0.5 * dt)));
        let k3 = field(&(&alpha + &k2.scale(0.5 * dt)));
        let k4 = field(&(&alpha + &k3.scale(dt)));
        let incr = &(&(&k1 + &k2.scale(2.0)) + &k3.scale(2.0)) + &k4;
        alpha = &alpha + &incr.scale(dt / 6.0);
        samples.push(FlowSample {
            t: (k + 1) as f64 * dt,
            alpha: alpha.clone(),
        });
    }
    Ok(FlowCurve::from_samples(None, None, samples))
}

/// Summary of a closed-form versus RK4 comparison.
#[derive(Clone, Debug)]
pub struct FlowComparison {
    pub closed_form: FlowCurve,
    pub rk4: FlowCurve,
    pub max_deviation: f64,
    /// Largest decrease of `h` between consecutive closed-form samples (0 if monotone).
    pub max_height_decrease: f64,
    pub final_gradient_norm: f64,
}

/// Runs both integrators on `[0, t_end]` and compares them every `stride` RK4 steps.
pub fn compare_flows(
    h: &HeightFunction,
    a: &GroupElement,
    alpha0: &GroupElement,
    t_end: f64,
    dt: f64,
    stride: usize,
) -> Result<FlowComparison> {
    let mut rk4 = flow_rk4(h, alpha0, t_end, dt)?;
    let stride = stride.max(1);
    let last = rk4.samples.len() - 1;
    rk4.samples = rk4
        .samples
        .into_iter()
        .enumerate()
        .filter(|(i, _)| i % stride == 0 || *i == last)
        .map(|(_, s)| s)
        .collect();
    let times: Vec<f64> = rk4.samples.iter().map(|s| s.t).collect();
    let closed_form = flow_closed_form(h, a, alpha0, &times)?;
    let max_deviation = closed_form.max_deviation(&rk4);

    let heights: Vec<f64> = closed_form
        .samples
        .iter()
        .map(|s| (h.matrix() * &s.alpha).trace().w)
        .collect();
    let max_height_decrease = heights
        .windows(2)
        .map(|w| (w[0] - w[1]).max(0.0))
        .fold(0.0, f64::max);
    let final_gradient_norm = closed_form
        .last()
        .map_or(0.0, |s| gradient_at(h.matrix(), &s.alpha).fro_norm());
    Ok(FlowComparison {
        closed_form,
        rk4,
        max_deviation,
        max_height_decrease,
        final_gradient_norm,
    })
}

/// Real-linear map `β ↦ (Aβ + β*A*, XAβ + βAX)` whose kernel is `S(A)`.
fn model_constraints(
    x: &DenseMatrix,
    a: &DenseMatrix,
    beta: &DenseMatrix,
) -> (DenseMatrix, DenseMatrix) {
    let ab = a * beta;
    let tangency = &ab + &ab.adjoint();
    let slice = &(&(x * a) * beta) + &(&(beta * a) * x);
    (tangency, slice)
}

/// The slice `S(A)`: its real dimension and an orthonormal basis (in real
/// coordinates).
#[derive(Clone, Debug)]
pub struct ModelSpace {
    pub dimension: usize,
    pub basis: Vec<DenseMatrix>,
}

pub fn critical_model_space(h: &HeightFunction, a: &GroupElement) -> Result<ModelSpace> {
    require_critical(h, a)?;
    let (ring, n) = (h.ring(), h.n());
    let unknowns = n * n * ring.real_dim();
    let x = h.matrix();
    let mut columns = Vec::with_capacity(unknowns);
    for k in 0..unknowns {
        let mut e = vec![0.0; unknowns];
        e[k] = 1.0;
        let beta = DenseMatrix::from_real_coords(ring, n, n, &e);
        let (t, s) = model_constraints(x, a.mat(), &beta);
        let mut col = t.real_coords();
        col.extend(s.real_coords());
        columns.push(col);
    }
    let rows = columns[0].len();
    let m = DMatrix::from_fn(rows, unknowns, |r, c| columns[c][r]);
    let svd = SVD::new(m, false, true);
    let v_t = svd.v_t.ok_or(Error::NoConvergence)?;
    let s_max = svd.singular_values.max();
    let threshold = EPS_NULL * s_max.max(1.0);
    let basis: Vec<DenseMatrix> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s < threshold)
        .map(|(i, _)| {
            let coords: Vec<f64> = v_t.row(i).iter().copied().collect();
            DenseMatrix::from_real_coords(ring, n, n, &coords)
        })
        .collect();
    Ok(ModelSpace {
        dimension: basis.len(),
        basis,
    })
}

/// Checks that `c_{A*}(β₀)` is critical for `β₀ ∈ S(A)`.
pub fn model_chart_check(
    h: &HeightFunction,
    a: &GroupElement,
    beta0: &DenseMatrix,
) -> Result<bool> {
    require_critical(h, a)?;
    h.check(beta0)?;
    let (t, s) = model_constraints(h.matrix(), a.mat(), beta0);
    let residual = t.fro_norm().max(s.fro_norm());
    if residual > 1e-9 {
        return Err(Error::NotInModelSpace(residual));
    }
    let image = cayley(&a.adjoint(), beta0)?;
    let g = GroupElement::new(image, 1e-8)?;
    Ok(is_critical(h, &g, 1e-7))
}

/// True when `β` is tangent at `A*` (the curve of the linearized flow stays there).
pub fn beta_is_tangent(a: &GroupElement, beta: &DenseMatrix, tol: f64) -> bool {
    is_tangent(&a.adjoint(), beta, tol)
}

//! Left eigenvalues of 2×2 quaternionic matrices.
//!
//! `σ` is a left eigenvalue of `A` when `Av = σv` for some `v ≠ 0`, i.e. when
//! `A − σI` is singular. For `A = [[a, b], [c, d]]` with `b ≠ 0`, scaling the
//! eigenvector to `v = (1, y)` gives `a + by = σ` and `c + dy = σy`, hence
//!
//! ```text
//! y² + b⁻¹(a − d) y − b⁻¹c = 0,    σ = a + by.
//! ```
//!
//! A quaternionic quadratic has one root, two roots or a whole 2-sphere of
//! roots, so the same holds for the left spectrum.

use nalgebra::{Matrix3, Matrix4, Vector4};

use crate::algebra::{Quaternion, RingTag};
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, GroupElement};

/// Roots closer than this are merged.
const DEDUP_TOL: f64 = 1e-7;
/// Residual accepted for a root of `y² + By + C`, relative to the coefficient scale.
const ROOT_TOL: f64 = 1e-9;

/// Left spectrum of a 2×2 matrix, or root set of a quadratic.
#[derive(Clone, Debug, PartialEq)]
pub enum LeftSpectrum {
    Finite(Vec<Quaternion>),
    /// `{center + axis·t : t² = −1}`.
    InfiniteSphere {
        center: Quaternion,
        axis: Quaternion,
    },
}

impl LeftSpectrum {
    pub fn is_infinite(&self) -> bool {
        matches!(self, LeftSpectrum::InfiniteSphere { .. })
    }

    /// Number of roots; `None` for a sphere.
    pub fn count(&self) -> Option<usize> {
        match self {
            LeftSpectrum::Finite(v) => Some(v.len()),
            LeftSpectrum::InfiniteSphere { .. } => None,
        }
    }

    /// The sphere point at the imaginary unit `t`.
    pub fn sphere_point(&self, t: Quaternion) -> Option<Quaternion> {
        match *self {
            LeftSpectrum::InfiniteSphere { center, axis } => Some(center + axis * t),
            LeftSpectrum::Finite(_) => None,
        }
    }

    /// Writes a sphere as `{q(cosθ − sinθ·t)}` with `|q| = 1`, `sinθ > 0`,
    /// returning `(q, cosθ, sinθ)` when that form fits within `tol`.
    pub fn rotation_family(&self, tol: f64) -> Option<(Quaternion, f64, f64)> {
        let LeftSpectrum::InfiniteSphere { center, axis } = *self else {
            return None;
        };
        let sin = axis.norm();
        if sin <= tol {
            return None;
        }
        let q = -axis.scale(1.0 / sin);
        let cos = q.dot(center);
        let fits =
            (q.scale(cos) - center).norm() <= tol && (cos * cos + sin * sin - 1.0).abs() <= tol;
        fits.then_some((q, cos, sin))
    }
}

/// The equation `y² + By + C = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticProblem {
    pub b: Quaternion,
    pub c: Quaternion,
}

impl QuadraticProblem {
    pub fn new(b: Quaternion, c: Quaternion) -> Self {
        Self { b, c }
    }

    pub fn residual(&self, y: Quaternion) -> f64 {
        (y * y + self.b * y + self.c).norm()
    }

    fn scale(&self) -> f64 {
        1.0f64.max(self.b.norm_sqr()).max(self.c.norm())
    }
}

fn vec3(q: Quaternion) -> [f64; 3] {
    [q.x, q.y, q.z]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Newton's method on the four real components of `y² + By + C`.
fn polish(p: &QuadraticProblem, mut y: Quaternion) -> Quaternion {
    let basis = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
    for _ in 0..30 {
        let f = y * y + p.b * y + p.c;
        if f.norm() <= 1e-15 * p.scale() {
            break;
        }
        let mut jac = Matrix4::zeros();
        for (k, e) in basis.iter().enumerate() {
            let col = y * *e + *e * y + p.b * *e;
            jac.set_column(k, &Vector4::from(col.to_array()));
        }
        let Some(step) = jac.lu().solve(&Vector4::from(f.to_array())) else {
            break;
        };
        let next = y - Quaternion::new(step[0], step[1], step[2], step[3]);
        if !next.norm().is_finite() {
            break;
        }
        y = next;
    }
    y
}

/// Real roots `u > 0` of `u³ + p₂u² + p₁u + p₀`.
fn positive_cubic_roots(p2: f64, p1: f64, p0: f64) -> Vec<f64> {
    let companion = Matrix3::new(-p2, -p1, -p0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    companion
        .complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs()) && z.re > 1e-14)
        .map(|z| z.re)
        .collect()
}

fn push_unique(roots: &mut Vec<Quaternion>, y: Quaternion) {
    if roots.iter().all(|r| (*r - y).norm() > DEDUP_TOL) {
        roots.push(y);
    }
}

/// All roots of `y² + By + C = 0`.
///
/// Shifting `y = x − Re(B)/2` makes the linear coefficient `b` pure imaginary.
/// If `b = 0` and the constant is real the roots are real or form a sphere.
/// Otherwise `x² = Tx − N` with `T = 2 Re x`, `N = |x|²` turns the equation
/// into `(T + b)x = N − C`, and consistency of `T` and `N` reduces to a real
/// cubic in `T²`. Candidates are polished by Newton's method and kept only if
/// their residual is small.
pub fn quadratic_roots(p: &QuadraticProblem) -> LeftSpectrum {
    let b0 = p.b.w;
    let bv = p.b.imag();
    let c = p.c - p.b.scale(b0 / 2.0) + Quaternion::real(b0 * b0 / 4.0);
    let shift = Quaternion::real(-b0 / 2.0);
    let scale = p.scale();
    let flat = 1e-10 * scale;

    let c0 = c.w;
    let cv = c.imag();
    if bv.norm() <= flat && cv.norm() <= flat {
        return if c0 < -flat {
            let r = (-c0).sqrt();
            LeftSpectrum::Finite(vec![
                shift + Quaternion::real(r),
                shift - Quaternion::real(r),
            ])
        } else if c0 <= flat {
            LeftSpectrum::Finite(vec![shift])
        } else {
            LeftSpectrum::InfiniteSphere {
                center: shift,
                axis: Quaternion::real(c0.sqrt()),
            }
        };
    }

    let beta2 = bv.norm_sqr();
    let cv2 = cv.norm_sqr();
    let d = dot3(vec3(bv), vec3(cv));

    let mut candidates = Vec::new();
    for u in positive_cubic_roots(
        2.0 * beta2 + 4.0 * c0,
        beta2 * beta2 + 4.0 * c0 * beta2 - 4.0 * cv2,
        -4.0 * d * d,
    ) {
        let k = u + beta2;
        for t in [u.sqrt(), -u.sqrt()] {
            let m = k / 2.0 + d / t;
            if let Ok(inv) = (Quaternion::real(t) + bv).inv() {
                candidates.push(inv * (Quaternion::real(m) - cv));
            }
        }
    }
    if d.abs() <= flat && beta2 > flat * flat {
        // T = 0: m² − β²m + |c|² − c₀β² = 0
        let disc = beta2 * beta2 / 4.0 - cv2 + c0 * beta2;
        if disc >= -flat {
            let s = disc.max(0.0).sqrt();
            let inv = bv.inv().expect("nonzero imaginary part");
            for m in [beta2 / 2.0 + s, beta2 / 2.0 - s] {
                candidates.push(inv * (Quaternion::real(m) - cv));
            }
        }
    }
    if candidates.is_empty() {
        candidates.extend([
            Quaternion::ONE,
            Quaternion::I,
            Quaternion::J,
            Quaternion::K,
            -Quaternion::ONE,
        ]);
    }

    let mut roots = Vec::new();
    for x in candidates {
        let y = polish(p, x + shift);
        if p.residual(y) <= ROOT_TOL * scale {
            push_unique(&mut roots, y);
        }
    }
    LeftSpectrum::Finite(roots)
}

/// `A − σI` is singular, judged by the smallest singular value of its complex image.
pub fn is_left_eigenvalue(a: &DenseMatrix, sigma: Quaternion, eps: f64) -> Result<bool> {
    Ok(left_eigen_residual(a, sigma)? < eps)
}

/// Smallest singular value of `A − σI`.
pub fn left_eigen_residual(a: &DenseMatrix, sigma: Quaternion) -> Result<f64> {
    let n = a.check_square()?;
    let shifted = a
        .promote(RingTag::H)?
        .try_sub(&DenseMatrix::scalar(RingTag::H, n, sigma))?;
    Ok(shifted.min_singular_value())
}

fn entries_2x2(a: &DenseMatrix) -> Result<[Quaternion; 4]> {
    if a.shape() != (2, 2) {
        return Err(Error::ShapeMismatch(format!(
            "expected a 2x2 matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok([a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]])
}

/// Left spectrum of a 2×2 matrix.
///
/// The reduction pivots on the larger off-diagonal entry: with `v = (x, 1)`
/// instead of `(1, y)` the roles of `b` and `c` swap.
pub fn left_eigenvalues_2x2(a: &DenseMatrix) -> Result<LeftSpectrum> {
    let [a11, a12, a21, a22] = entries_2x2(a)?;
    let scale = a11
        .norm()
        .max(a12.norm())
        .max(a21.norm())
        .max(a22.norm())
        .max(1.0);
    if a12.norm().max(a21.norm()) <= 1e-14 * scale {
        let mut roots = vec![a11];
        push_unique(&mut roots, a22);
        return Ok(LeftSpectrum::Finite(roots));
    }
    // σ = base + pivot·y where y² + pivot⁻¹(base_other)y − pivot⁻¹·other = 0
    let (base, pivot, other, diff) = if a12.norm() >= a21.norm() {
        (a11, a12, a21, a11 - a22)
    } else {
        (a22, a21, a12, a22 - a11)
    };
    let inv = pivot.inv()?;
    let roots = quadratic_roots(&QuadraticProblem::new(inv * diff, -(inv * other)));
    Ok(match roots {
        LeftSpectrum::Finite(ys) => {
            let mut sigmas = Vec::new();
            for y in ys {
                push_unique(&mut sigmas, base + pivot * y);
            }
            LeftSpectrum::Finite(sigmas)
        }
        LeftSpectrum::InfiniteSphere { center, axis } => LeftSpectrum::InfiniteSphere {
            center: base + pivot * center,
            axis: pivot * axis,
        },
    })
}

/// `L_q ∘ R_θ = [[q cosθ, −q sinθ], [q sinθ, q cosθ]]`.
pub fn rotation_family_matrix(q: Quaternion, theta: f64) -> DenseMatrix {
    let (s, c) = theta.sin_cos();
    DenseMatrix::from_quaternion_rows(&[&[q.scale(c), q.scale(-s)], &[q.scale(s), q.scale(c)]])
}

/// Recognises `A = L_q ∘ R_θ` with `sinθ ≠ 0`, returning `(q, θ)` with `θ ∈ (0, π)`.
pub fn detect_infinite_family(a: &DenseMatrix, tol: f64) -> Result<Option<(Quaternion, f64)>> {
    let [a11, a12, a21, a22] = entries_2x2(a)?;
    if (a11 - a22).norm() > tol || (a12 + a21).norm() > tol {
        return Ok(None);
    }
    let sin = a21.norm();
    if sin <= tol {
        return Ok(None);
    }
    let q = a21.scale(1.0 / sin);
    let cos = q.dot(a11);
    let theta = sin.atan2(cos);
    let rebuilt = rotation_family_matrix(q, theta);
    Ok((rebuilt.distance(&a.promote(RingTag::H)?) <= tol).then_some((q, theta)))
}

/// A point of `Sp(2)` that no domain `Ω(σ_k I)` contains.
#[derive(Clone, Debug)]
pub struct NoncoverWitness {
    pub matrix: GroupElement,
    pub q: Quaternion,
    pub cos_theta: f64,
    pub sin_theta: f64,
    /// Smallest singular value of `σ_k I + A` for each `k`.
    pub certificate: [f64; 4],
}

/// Builds `A = L_q ∘ R_θ ∈ Sp(2)` with every `−σ_k` a left eigenvalue, so
/// `σ_k I + A` is singular for all four `k`.
///
/// The left spectrum of `L_q ∘ R_θ` is `{q(cosθ − sinθ·t)}`, which contains a
/// unit quaternion `−σ` iff `Re(q̄σ) = −cosθ`. Equal real parts for the four
/// `σ_k` is a homogeneous linear system in `q`.
pub fn noncover_witness(sigmas: &[Quaternion; 4]) -> Result<NoncoverWitness> {
    for s in sigmas {
        if (s.norm() - 1.0).abs() > 1e-9 {
            return Err(Error::DegenerateConfiguration(format!(
                "{s:?} is not a unit quaternion"
            )));
        }
    }
    let mut system = Matrix4::zeros();
    for j in 1..4 {
        let row = (sigmas[j] - sigmas[0]).to_array();
        for k in 0..4 {
            system[(j - 1, k)] = row[k];
        }
    }
    let svd = system.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let null: Vec<Quaternion> = (0..4)
        .filter(|&i| svd.singular_values[i] <= 1e-10)
        .map(|i| {
            let r = v_t.row(i);
            Quaternion::new(r[0], r[1], r[2], r[3])
        })
        .collect();

    let s0 = sigmas[0];
    let q = match null.len() {
        0 => {
            return Err(Error::DegenerateConfiguration(
                "no solution of the linear system".into(),
            ))
        }
        1 => null[0],
        _ => {
            // remove the component along s0 within the null space
            let proj = null
                .iter()
                .fold(Quaternion::ZERO, |acc, v| acc + v.scale(v.dot(s0)));
            let pick = null
                .iter()
                .map(|v| *v - proj.scale(proj.dot(*v) / proj.norm_sqr().max(f64::MIN_POSITIVE)))
                .max_by(|a, b| a.norm().total_cmp(&b.norm()))
                .expect("nonempty");
            pick.normalize()?
        }
    };
    let cos = (-q.dot(s0)).clamp(-1.0, 1.0);
    let sin = (1.0 - cos * cos).sqrt();
    if sin < 1e-6 {
        return Err(Error::DegenerateConfiguration(format!(
            "sin(theta) = {sin:e}"
        )));
    }
    let mat = DenseMatrix::from_quaternion_rows(&[
        &[q.scale(cos), q.scale(-sin)],
        &[q.scale(sin), q.scale(cos)],
    ]);
    let mut certificate = [0.0; 4];
    for (k, s) in sigmas.iter().enumerate() {
        certificate[k] = left_eigen_residual(&mat, -*s)?;
    }
    Ok(NoncoverWitness {
        matrix: GroupElement::new(mat, 1e-9)?,
        q,
        cos_theta: cos,
        sin_theta: sin,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::in_omega;
    use crate::matrix::{haar_sample, random_gaussian};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    fn random_unit_imag(rng: &mut ChaCha8Rng) -> Quaternion {
        let v = q(
            0.0,
            rng.random::<f64>() - 0.5,
            rng.random::<f64>() - 0.5,
            rng.random::<f64>() - 0.5,
        );
        v.normalize().unwrap()
    }

    fn random_unit(rng: &mut ChaCha8Rng) -> Quaternion {
        let m = random_gaussian(RingTag::H, 1, 1, rng);
        m[(0, 0)].normalize().unwrap()
    }

    fn finite(s: &LeftSpectrum) -> &[Quaternion] {
        match s {
            LeftSpectrum::Finite(v) => v,
            _ => panic!("expected finitely many roots, got {s:?}"),
        }
    }

    fn contains(roots: &[Quaternion], y: Quaternion) -> bool {
        roots.iter().any(|r| r.approx_eq(y, 1e-9))
    }

    #[test]
    fn oracle_examples() {
        let d = DenseMatrix::diag(RingTag::H, &[Quaternion::I, Quaternion::J]);
        assert!(is_left_eigenvalue(&d, Quaternion::I, 1e-9).unwrap());
        assert!(
            !is_left_eigenvalue(&DenseMatrix::identity(RingTag::H, 2), Quaternion::I, 1e-9)
                .unwrap()
        );
        let a = DenseMatrix::from_quaternion_rows(&[
            &[Quaternion::ZERO, -Quaternion::I],
            &[Quaternion::I, Quaternion::ZERO],
        ]);
        assert!(is_left_eigenvalue(&a, Quaternion::ONE, 1e-9).unwrap());
        // v = (−i, 1)
        let v = [-Quaternion::I, Quaternion::ONE];
        let av0 = a[(0, 0)] * v[0] + a[(0, 1)] * v[1];
        let av1 = a[(1, 0)] * v[0] + a[(1, 1)] * v[1];
        assert!(av0.approx_eq(v[0], 1e-15) && av1.approx_eq(v[1], 1e-15));
    }

    #[test]
    fn quadratic_examples() {
        let r = quadratic_roots(&QuadraticProblem::new(
            Quaternion::ZERO,
            Quaternion::real(-1.0),
        ));
        let roots = finite(&r);
        assert_eq!(roots.len(), 2);
        assert!(contains(roots, Quaternion::ONE) && contains(roots, -Quaternion::ONE));

        let r = quadratic_roots(&QuadraticProblem::new(Quaternion::ZERO, Quaternion::ONE));
        assert_eq!(
            r,
            LeftSpectrum::InfiniteSphere {
                center: Quaternion::ZERO,
                axis: Quaternion::ONE
            }
        );

        let p = QuadraticProblem::new(-(Quaternion::ONE + Quaternion::I), Quaternion::I);
        let roots = finite(&quadratic_roots(&p)).to_vec();
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots, Quaternion::ONE) && contains(&roots, Quaternion::I));

        let r = quadratic_roots(&QuadraticProblem::new(
            Quaternion::real(-2.0),
            Quaternion::ONE,
        ));
        assert_eq!(finite(&r), &[Quaternion::ONE]);
    }

    #[test]
    fn planted_roots_are_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let m = random_gaussian(RingTag::H, 1, 2, &mut rng);
            let (y0, b) = (m[(0, 0)], m[(0, 1)]);
            let p = QuadraticProblem::new(b, -(y0 * y0) - b * y0);
            let roots = finite(&quadratic_roots(&p)).to_vec();
            assert!(
                roots.iter().any(|r| r.approx_eq(y0, 1e-7)),
                "{y0:?} {roots:?}"
            );
            assert!(roots.len() <= 2);
            for r in &roots {
                assert!(p.residual(*r) < 1e-9 * p.scale());
            }
        }
    }

    #[test]
    fn quadratic_roots_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let m = random_gaussian(RingTag::H, 1, 2, &mut rng);
            let p = QuadraticProblem::new(m[(0, 0)], m[(0, 1)]);
            let roots = finite(&quadratic_roots(&p)).to_vec();
            assert!(!roots.is_empty() && roots.len() <= 2, "{p:?} {roots:?}");
            for r in &roots {
                assert!(p.residual(*r) < 1e-9);
            }
        }
    }

    #[test]
    fn square_roots_of_non_real() {
        let c = q(0.3, -0.4, 1.2, 0.5);
        let roots = finite(&quadratic_roots(&QuadraticProblem::new(
            Quaternion::ZERO,
            -c,
        )))
        .to_vec();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!((r * r).approx_eq(c, 1e-12));
        }
    }

    #[test]
    fn spectrum_examples() {
        let d = DenseMatrix::diag(RingTag::H, &[Quaternion::I, Quaternion::J]);
        assert_eq!(
            left_eigenvalues_2x2(&d).unwrap(),
            LeftSpectrum::Finite(vec![Quaternion::I, Quaternion::J])
        );

        let swap = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
            .promote(RingTag::H)
            .unwrap();
        let s = left_eigenvalues_2x2(&swap).unwrap();
        let roots = finite(&s);
        assert_eq!(roots.len(), 2);
        assert!(contains(roots, Quaternion::ONE) && contains(roots, -Quaternion::ONE));

        let a = rotation_family_matrix(Quaternion::I, std::f64::consts::FRAC_PI_2);
        let s = left_eigenvalues_2x2(&a).unwrap();
        let (qq, c, sn) = s.rotation_family(1e-12).unwrap();
        assert!(qq.approx_eq(Quaternion::I, 1e-12) && c.abs() < 1e-12 && (sn - 1.0).abs() < 1e-12);
        let one = s.sphere_point(Quaternion::I).unwrap();
        assert!(one.approx_eq(Quaternion::ONE, 1e-12));
        assert!(is_left_eigenvalue(&a, one, 1e-8).unwrap());
    }

    #[test]
    fn finite_spectra_pass_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let a = random_gaussian(RingTag::H, 2, 2, &mut rng);
            let s = left_eigenvalues_2x2(&a).unwrap();
            assert!(!finite(&s).is_empty());
            for sigma in finite(&s) {
                assert!(
                    is_left_eigenvalue(&a, *sigma, 1e-8).unwrap(),
                    "{a:?} {sigma:?}"
                );
            }
        }
    }

    #[test]
    fn sphere_points_pass_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let qq = random_unit(&mut rng);
            let theta = rng.random_range(0.1..3.0);
            let a = rotation_family_matrix(qq, theta);
            let s = left_eigenvalues_2x2(&a).unwrap();
            let (q2, c, sn) = s.rotation_family(1e-9).unwrap();
            assert!(
                q2.approx_eq(qq, 1e-9)
                    && (c - theta.cos()).abs() < 1e-9
                    && (sn - theta.sin()).abs() < 1e-9
            );
            for _ in 0..50 {
                let t = random_unit_imag(&mut rng);
                let sigma = s.sphere_point(t).unwrap();
                assert!(is_left_eigenvalue(&a, sigma, 1e-8).unwrap());
            }
        }
    }

    #[test]
    fn count_law_on_sp2() {
        for seed in 0..1000 {
            let a = haar_sample(RingTag::H, 2, seed).unwrap().into_mat();
            let s = left_eigenvalues_2x2(&a).unwrap();
            if let LeftSpectrum::Finite(v) = &s {
                assert!(matches!(v.len(), 1 | 2), "{seed}: {v:?}");
            }
        }
    }

    #[test]
    fn omega_duality() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for seed in 0..100 {
            let a = haar_sample(RingTag::H, 2, seed).unwrap();
            let s = left_eigenvalues_2x2(a.mat()).unwrap();
            let sigma = match &s {
                LeftSpectrum::Finite(v) => -v[0],
                _ => unreachable!(),
            };
            let unit = sigma.normalize().unwrap();
            let center = GroupElement::scalar(RingTag::H, 2, unit).unwrap();
            // left eigenvalues of a symplectic matrix are unit quaternions
            assert!((sigma.norm() - 1.0).abs() < 1e-9);
            assert!(!in_omega(&center, a.mat()).unwrap());
            let z = random_unit(&mut rng);
            let other = GroupElement::scalar(RingTag::H, 2, z).unwrap();
            assert_eq!(
                in_omega(&other, a.mat()).unwrap(),
                !is_left_eigenvalue(a.mat(), -z, 1e-8).unwrap()
            );
        }
    }

    #[test]
    fn detect_examples() {
        let id = DenseMatrix::identity(RingTag::H, 2);
        assert_eq!(detect_infinite_family(&id, 1e-9).unwrap(), None);
        let a = DenseMatrix::from_quaternion_rows(&[
            &[Quaternion::ZERO, -Quaternion::I],
            &[Quaternion::I, Quaternion::ZERO],
        ]);
        let (qq, theta) = detect_infinite_family(&a, 1e-9).unwrap().unwrap();
        assert!(qq.approx_eq(Quaternion::I, 1e-15));
        assert!((theta - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let d = DenseMatrix::diag(RingTag::H, &[Quaternion::I, Quaternion::J]);
        assert_eq!(detect_infinite_family(&d, 1e-9).unwrap(), None);
    }

    #[test]
    fn witness_examples() {
        let w = noncover_witness(&[Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K])
            .unwrap();
        assert!(
            w.certificate.iter().all(|r| *r < 1e-7),
            "{:?}",
            w.certificate
        );
        for s in [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K] {
            assert!(is_left_eigenvalue(w.matrix.mat(), -s, 1e-8).unwrap());
        }

        let w = noncover_witness(&[Quaternion::ONE; 4]).unwrap();
        assert!(w.cos_theta.abs() < 1e-12);
        assert!(is_left_eigenvalue(w.matrix.mat(), -Quaternion::ONE, 1e-8).unwrap());

        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let s = [
                random_unit(&mut rng),
                random_unit(&mut rng),
                random_unit(&mut rng),
                random_unit(&mut rng),
            ];
            let w = noncover_witness(&s).unwrap();
            assert!(w.certificate.iter().all(|r| *r < 1e-7));
            for sk in s {
                let center = GroupElement::scalar(RingTag::H, 2, sk).unwrap();
                assert!(!in_omega(&center, w.matrix.mat()).unwrap());
            }
        }
        assert!(noncover_witness(&[Quaternion::real(2.0); 4]).is_err());
    }
}

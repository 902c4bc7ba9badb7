//! The generalized Cayley transform centered at an orthogonal matrix.
//!
//! For `A ∈ O(n, K)` and `X` with `A + X` invertible,
//!
//! ```text
//! c_A(X) = (I − A* X)(A + X)⁻¹ = (A + X)⁻¹(I − X A*)
//! ```
//!
//! It maps `Ω(A) = {X : A + X invertible}` onto `Ω(A*)`, its inverse is
//! `c_{A*}`, and it sends `Ω(A) ∩ G` onto the tangent space `T_{A*}G`. Since a
//! tangent space is a real vector space, `t ↦ c_{A*}(t · c_A(X))` contracts
//! `Ω(A) ∩ G` to the point `A` inside the group.

use crate::error::{Error, Result};
use crate::matrix::{
    haar_sample, is_invertible, left_divide, solve_right, stream_seed, DenseMatrix, GroupElement,
};
use crate::tol::EPS_INV;

/// The Cayley domain `Ω(A)` of a center `A`.
#[derive(Clone, Debug)]
pub struct OmegaDomain {
    pub center: GroupElement,
    pub eps: f64,
}

impl OmegaDomain {
    pub fn new(center: GroupElement) -> Self {
        Self {
            center,
            eps: EPS_INV,
        }
    }

    pub fn contains(&self, x: &DenseMatrix) -> Result<bool> {
        in_omega_eps(&self.center, x, self.eps)
    }
}

/// A matrix `Y` tangent to the group at `base`, i.e. `A*Y + Y*A = 0`.
#[derive(Clone, Debug)]
pub struct TangentVector {
    pub base: GroupElement,
    pub vec: DenseMatrix,
}

fn check_shape(a: &GroupElement, x: &DenseMatrix) -> Result<()> {
    if a.group() != x.ring() {
        return Err(Error::RingMismatch {
            left: a.group(),
            right: x.ring(),
        });
    }
    if a.mat().shape() != x.shape() {
        return Err(Error::ShapeMismatch(format!(
            "center is {n}x{n}, point is {}x{}",
            x.rows(),
            x.cols(),
            n = a.n()
        )));
    }
    Ok(())
}

pub fn in_omega(a: &GroupElement, x: &DenseMatrix) -> Result<bool> {
    in_omega_eps(a, x, EPS_INV)
}

/// `A + X` counts as invertible when its smallest singular value exceeds
/// `eps · (‖A‖_F + ‖X‖_F)`. Measuring against the operands rather than the
/// sum keeps `X ≈ −A` out, where the sum is tiny but well conditioned.
pub fn in_omega_eps(a: &GroupElement, x: &DenseMatrix, eps: f64) -> Result<bool> {
    check_shape(a, x)?;
    let scale = a.mat().fro_norm() + x.fro_norm();
    Ok(is_invertible(&(a.mat() + x), eps) && (a.mat() + x).min_singular_value() > eps * scale)
}

/// `c_A(X) = (I − A*X)(A + X)⁻¹`.
pub fn cayley(a: &GroupElement, x: &DenseMatrix) -> Result<DenseMatrix> {
    cayley_eps(a, x, EPS_INV)
}

/// [`cayley`] with an explicit invertibility threshold for `A + X`.
pub fn cayley_eps(a: &GroupElement, x: &DenseMatrix, eps: f64) -> Result<DenseMatrix> {
    if !in_omega_eps(a, x, eps)? {
        return Err(Error::OutsideDomain);
    }
    let id = DenseMatrix::identity(x.ring(), x.rows());
    let num = &id - &(&a.mat().adjoint() * x);
    solve_right(&num, &(a.mat() + x)).map_err(|_| Error::OutsideDomain)
}

/// The left-handed form `(A + X)⁻¹(I − XA*)`.
pub fn cayley_left(a: &GroupElement, x: &DenseMatrix) -> Result<DenseMatrix> {
    if !in_omega(a, x)? {
        return Err(Error::OutsideDomain);
    }
    let id = DenseMatrix::identity(x.ring(), x.rows());
    let num = &id - &(x * &a.mat().adjoint());
    left_divide(&(a.mat() + x), &num).map_err(|_| Error::OutsideDomain)
}

/// Residuals of the two defining identities of the transform.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InverseIdentityResiduals {
    /// `‖(A* + c_A(X)) · ½(A + X) − I‖_F`
    pub half_inverse: f64,
    /// `‖(I − A*X)(A + X)⁻¹ − (A + X)⁻¹(I − XA*)‖_F`
    pub factorization: f64,
}

pub fn cayley_inverse_identity(
    a: &GroupElement,
    x: &DenseMatrix,
) -> Result<InverseIdentityResiduals> {
    let c = cayley(a, x)?;
    let id = DenseMatrix::identity(x.ring(), x.rows());
    let lhs = &(&a.mat().adjoint() + &c) * &(a.mat() + x).scale(0.5);
    Ok(InverseIdentityResiduals {
        half_inverse: lhs.distance(&id),
        factorization: c.distance(&cayley_left(a, x)?),
    })
}

/// Residuals of the three equivariance identities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EquivarianceResiduals {
    /// `‖c_{A*}(X*) − c_A(X)*‖_F`
    pub adjoint: f64,
    /// `‖c_{UAU*}(UXU*) − U c_A(X) U*‖_F`
    pub conjugation: f64,
    /// `‖c_{A*}(X⁻¹) + A c_A(X) A‖_F`; `None` when `X` is singular.
    pub inversion: Option<f64>,
}

impl EquivarianceResiduals {
    pub fn max(&self) -> f64 {
        self.adjoint
            .max(self.conjugation)
            .max(self.inversion.unwrap_or(0.0))
    }
}

pub fn prop2_identities(
    a: &GroupElement,
    u: &GroupElement,
    x: &DenseMatrix,
) -> Result<EquivarianceResiduals> {
    check_shape(u, x)?;
    let c = cayley(a, x)?;
    let a_star = a.adjoint();

    let adjoint = cayley(&a_star, &x.adjoint())?.distance(&c.adjoint());

    let um = u.mat();
    let ua = GroupElement::new(
        &(um * a.mat()) * &um.adjoint(),
        (a.tol() + u.tol()) * 4.0 + 1e-12,
    )?;
    let ux = &(um * x) * &um.adjoint();
    let conjugation = cayley(&ua, &ux)?.distance(&(&(um * &c) * &um.adjoint()));

    let inversion = if is_invertible(x, EPS_INV) {
        let xi = x.inverse()?;
        let rhs = -&(&(a.mat() * &c) * a.mat());
        Some(cayley(&a_star, &xi)?.distance(&rhs))
    } else {
        None
    };
    Ok(EquivarianceResiduals {
        adjoint,
        conjugation,
        inversion,
    })
}

/// `‖A*Y + Y*A‖_F`.
pub fn tangency_residual(a: &GroupElement, y: &DenseMatrix) -> f64 {
    if check_shape(a, y).is_err() {
        return f64::INFINITY;
    }
    let ay = &a.mat().adjoint() * y;
    (&ay + &ay.adjoint()).fro_norm()
}

pub fn is_tangent(a: &GroupElement, y: &DenseMatrix, tol: f64) -> bool {
    tangency_residual(a, y) <= tol
}

/// Orthogonal projection `(M − A M* A)/2` onto `T_A G`.
pub fn tangent_project(a: &GroupElement, m: &DenseMatrix) -> Result<TangentVector> {
    check_shape(a, m)?;
    let am = a.mat();
    let y = (m - &(&(am * &m.adjoint()) * am)).scale(0.5);
    Ok(TangentVector {
        base: a.clone(),
        vec: y,
    })
}

/// `c_B(β)` for `β` tangent at `B`, landing in `Ω_G(B*)`.
///
/// `B + β = B(I + B*β)` with `B*β` skew, so every singular value of `B + β`
/// is at least 1 and no domain test is needed however large `β` is.
pub fn cayley_from_tangent(b: &GroupElement, beta: &DenseMatrix) -> Result<DenseMatrix> {
    check_shape(b, beta)?;
    let r = tangency_residual(b, beta);
    if r > 1e-9 * (1.0 + beta.fro_norm()) {
        return Err(Error::NotTangent(r));
    }
    let id = DenseMatrix::identity(beta.ring(), beta.rows());
    let num = &id - &(&b.mat().adjoint() * beta);
    solve_right(&num, &(b.mat() + beta))
}

/// `c_A(X)` for `X` in the group, as a tangent vector at `A*`.
///
/// The image is tangent in exact arithmetic; projecting onto `T_{A*}G` strips
/// the roundoff normal to it, which grows like `ε κ(A + X) ‖c_A(X)‖`.
pub fn cayley_tangent(a: &GroupElement, x: &GroupElement) -> Result<TangentVector> {
    let c = cayley(a, x.mat())?;
    tangent_project(&a.adjoint(), &c)
}

/// The contraction `t ↦ c_{A*}(t · c_A(X))` of `Ω_G(A)` to the center:
/// `t = 1` gives `X`, `t = 0` gives `A`.
pub fn contraction_path(a: &GroupElement, x: &GroupElement, t: f64) -> Result<DenseMatrix> {
    let beta = cayley_tangent(a, x)?.vec;
    cayley(&a.adjoint(), &beta.scale(t))
}

/// Draws a Haar-like group element lying in `Ω_G(A)`.
///
/// Over R half of all samples sit in the other component of `O(n)`, where
/// `A + X` is always singular; those are redrawn from derived seeds.
pub fn sample_domain_point(a: &GroupElement, seed: u64) -> Result<GroupElement> {
    for attempt in 0..64 {
        let x = haar_sample(a.group(), a.n(), stream_seed(seed, attempt))?;
        if in_omega(a, x.mat())? {
            return Ok(x);
        }
    }
    Err(Error::DegenerateSample { attempts: 64 })
}

/// Checks that a skew-hermitian matrix has no non-zero real eigenvalue by
/// verifying that the spectrum of its complex image is purely imaginary.
pub fn skew_real_spectrum_check(y: &DenseMatrix) -> Result<bool> {
    let n = y.check_square()?;
    let id = GroupElement::identity(y.ring(), n);
    let residual = tangency_residual(&id, y);
    if residual > 1e-9 * (1.0 + y.fro_norm()) {
        return Err(Error::NotSkew(residual));
    }
    let eig = y.eigenvalues()?;
    Ok(eig.iter().all(|l| l.re.abs() < 1e-9 * (1.0 + y.fro_norm())))
}

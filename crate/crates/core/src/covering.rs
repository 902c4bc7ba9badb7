//! Explicit coverings by Cayley domains, and Monte-Carlo checks of them.
//!
//! * `U(n)`: the `n + 1` centers `−z_k I` with `z_k` the `(n+1)`-th roots of
//!   unity. `X ∈ Ω(−zI)` iff `z` is not an eigenvalue of `X`, and a unitary
//!   `n × n` matrix has at most `n` distinct eigenvalues.
//! * `Sp(2)`: the four centers `I, −I, P, −P` with `P = diag(−1, 1)`.
//! * `U(2n)/Sp(n)`, modelled as `M′ = {Y ∈ U(2n) : Yᵀ = −JYJ}`. Eigenvalues of
//!   `Y ∈ M′` come in equal pairs (`v ↦ J v̄`), so `n + 1` centers `z_k I` suffice.
//! * `U(n)/O(n)`, modelled as the symmetric unitary matrices, covered by
//!   `n + 1` centers `z_k I`.
//!
//! For the two homogeneous models the contraction `c_{z̄I}(t · c_{zI}(Y))`
//! stays in the model because `c_{zI}(Yᵀ) = c_{zI}(Y)ᵀ` and
//! `c_{zI}(−JYJ) = −J c_{zI}(Y) J`, so the defining linear relation passes to
//! the tangent vector and survives scaling.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Quaternion, RingTag};
use crate::cayley::{cayley, in_omega, in_omega_eps};
use crate::error::{Error, Result};
use crate::matrix::{haar_sample, orthogonality_residual, stream_seed, DenseMatrix, GroupElement};
use crate::tol::{EPS_GROUP, EPS_INPUT, EPS_INV};

/// Most uncovered points kept in a [`CoverageReport`].
pub const WITNESS_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Space {
    /// `U(n)`.
    Unitary(usize),
    /// `Sp(2)`.
    Sp2,
    /// `M′ ⊂ U(2n)`, a model of `U(2n)/Sp(n)`; the payload is `n`.
    MPrime(usize),
    /// Symmetric unitary `n × n` matrices, a model of `U(n)/O(n)`.
    SymUnitary(usize),
}

impl Space {
    /// Builds a space from its command-line name.
    pub fn from_name(name: &str, n: usize) -> Result<Self> {
        match name {
            "unitary" => Ok(Space::Unitary(n)),
            "sp2" => Ok(Space::Sp2),
            "mprime" => Ok(Space::MPrime(n)),
            "symunitary" => Ok(Space::SymUnitary(n)),
            other => Err(Error::UnknownSpace(other.to_string())),
        }
    }

    /// Side length of the matrices in the space.
    pub fn matrix_size(self) -> usize {
        match self {
            Space::Unitary(n) | Space::SymUnitary(n) => n,
            Space::Sp2 => 2,
            Space::MPrime(n) => 2 * n,
        }
    }

    pub fn ring(self) -> RingTag {
        match self {
            Space::Sp2 => RingTag::H,
            _ => RingTag::C,
        }
    }

    /// Membership residual; zero on the space.
    pub fn residual(self, y: &DenseMatrix) -> f64 {
        let k = self.matrix_size();
        if y.ring() != self.ring() || y.shape() != (k, k) {
            return f64::INFINITY;
        }
        let orth = orthogonality_residual(y);
        match self {
            Space::Unitary(_) | Space::Sp2 => orth,
            Space::MPrime(n) => orth.max(mprime_relation_residual(y, n)),
            Space::SymUnitary(_) => orth.max(y.transpose().distance(y)),
        }
    }

    pub fn contains(self, y: &DenseMatrix, tol: f64) -> bool {
        self.residual(y) <= tol
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Unitary(n) => write!(f, "U({n})"),
            Space::Sp2 => write!(f, "Sp(2)"),
            Space::MPrime(n) => write!(f, "M'(U({})/Sp({n}))", 2 * n),
            Space::SymUnitary(n) => write!(f, "U({n})/O({n})"),
        }
    }
}

/// A family of Cayley domains claimed to cover a space.
#[derive(Clone, Debug)]
pub struct CoverSpec {
    pub space: Space,
    pub centers: Vec<GroupElement>,
    pub eps: f64,
}

impl CoverSpec {
    /// Validates that the centers are pairwise distinct and fit the space.
    pub fn new(space: Space, centers: Vec<GroupElement>) -> Result<Self> {
        let k = space.matrix_size();
        for c in &centers {
            if c.group() != space.ring() || c.n() != k {
                return Err(Error::SpaceMismatch(format!(
                    "center does not act on {space}"
                )));
            }
        }
        for (i, a) in centers.iter().enumerate() {
            if centers[..i]
                .iter()
                .any(|b| b.mat().distance(a.mat()) < 1e-9)
            {
                return Err(Error::DegenerateConfiguration(
                    "cover centers must be distinct".into(),
                ));
            }
        }
        Ok(Self {
            space,
            centers,
            eps: EPS_INV,
        })
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }
}

/// `z_k = exp(2πik/m)`, `k = 0..m`.
pub fn roots_of_unity(m: usize) -> Vec<Complex64> {
    (0..m)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64))
        .collect()
}

fn scalar_centers(n: usize, phases: &[Complex64], sign: f64) -> Result<Vec<GroupElement>> {
    phases
        .iter()
        .map(|z| GroupElement::scalar(RingTag::C, n, Quaternion::from_complex(z * sign)))
        .collect()
}

/// The `n + 1` centers `−z_k I` covering `U(n)`.
pub fn unitary_cover(n: usize) -> Result<CoverSpec> {
    if n == 0 {
        return Err(Error::ShapeMismatch("U(0) has no cover".into()));
    }
    CoverSpec::new(
        Space::Unitary(n),
        scalar_centers(n, &roots_of_unity(n + 1), -1.0)?,
    )
}

/// `P = diag(−1, 1)` in `Sp(2)`.
pub fn sp2_p() -> GroupElement {
    GroupElement::new(DenseMatrix::real_diag(RingTag::H, &[-1.0, 1.0]), 0.0)
        .expect("P is symplectic")
}

/// The four centers `[I, −I, P, −P]` covering `Sp(2)`.
pub fn sp2_cover() -> CoverSpec {
    let id = GroupElement::identity(RingTag::H, 2);
    let p = sp2_p();
    CoverSpec::new(Space::Sp2, vec![id.clone(), id.neg(), p.clone(), p.neg()])
        .expect("four distinct centers")
}

/// The `n + 1` centers `z_k I` covering `M′ ⊂ U(2n)`.
pub fn mprime_cover(n: usize) -> Result<CoverSpec> {
    if n == 0 {
        return Err(Error::ShapeMismatch("M' needs n >= 1".into()));
    }
    CoverSpec::new(
        Space::MPrime(n),
        scalar_centers(2 * n, &roots_of_unity(n + 1), 1.0)?,
    )
}

/// The `n + 1` centers `z_k I` covering the symmetric unitary matrices.
pub fn symunitary_cover(n: usize) -> Result<CoverSpec> {
    if n == 0 {
        return Err(Error::ShapeMismatch("U(0)/O(0) has no cover".into()));
    }
    CoverSpec::new(
        Space::SymUnitary(n),
        scalar_centers(n, &roots_of_unity(n + 1), 1.0)?,
    )
}

/// The default cover of a space.
pub fn default_cover(space: Space) -> Result<CoverSpec> {
    match space {
        Space::Unitary(n) => unitary_cover(n),
        Space::Sp2 => Ok(sp2_cover()),
        Space::MPrime(n) => mprime_cover(n),
        Space::SymUnitary(n) => symunitary_cover(n),
    }
}

/// Index of the first center whose domain contains `x`; `None` if no center does.
pub fn cover_index(spec: &CoverSpec, x: &DenseMatrix) -> Result<Option<usize>> {
    let residual = spec.space.residual(x);
    if residual > EPS_INPUT {
        return Err(Error::SpaceMismatch(format!(
            "{} (residual {residual:e})",
            spec.space
        )));
    }
    for (k, c) in spec.centers.iter().enumerate() {
        if in_omega_eps(c, x, spec.eps)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Index into `[I, −I, P, −P]`.
pub fn sp2_cover_index(x: &DenseMatrix) -> Result<Option<usize>> {
    cover_index(&sp2_cover(), x)
}

/// `J = [[0, −I_n], [I_n, 0]]`.
pub fn j_matrix(n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(RingTag::C, 2 * n, 2 * n, |r, c| {
        if r + n == c {
            Quaternion::real(-1.0)
        } else if c + n == r {
            Quaternion::ONE
        } else {
            Quaternion::ZERO
        }
    })
}

/// `‖Yᵀ + JYJ‖_F`.
fn mprime_relation_residual(y: &DenseMatrix, n: usize) -> f64 {
    let j = j_matrix(n);
    y.transpose().distance(&-&(&(&j * y) * &j))
}

pub fn mprime_membership(y: &DenseMatrix, n: usize, tol: f64) -> bool {
    Space::MPrime(n).contains(y, tol)
}

pub fn mprime_cover_index(y: &DenseMatrix, n: usize) -> Result<Option<usize>> {
    cover_index(&mprime_cover(n)?, y)
}

pub fn symunitary_membership(y: &DenseMatrix, tol: f64) -> bool {
    y.is_square() && Space::SymUnitary(y.rows()).contains(y, tol)
}

/// Largest membership residual along `t ↦ c_{z̄I}(t · c_{zI}(Y))` sampled at
/// `steps` evenly spaced `t ∈ [0, 1]`.
pub fn contraction_check(space: Space, y: &DenseMatrix, z: Complex64, steps: usize) -> Result<f64> {
    if !space.contains(y, EPS_INPUT) {
        return Err(Error::SpaceMismatch(space.to_string()));
    }
    let k = space.matrix_size();
    let center = GroupElement::scalar(RingTag::C, k, Quaternion::from_complex(z))?;
    if !in_omega(&center, y)? {
        return Err(Error::OutsideDomain);
    }
    let beta = cayley(&center, y)?;
    let back = center.adjoint();
    let steps = steps.max(1);
    let mut worst = 0.0f64;
    for i in 0..steps {
        let t = if steps == 1 {
            1.0
        } else {
            i as f64 / (steps - 1) as f64
        };
        let p = cayley(&back, &beta.scale(t))?;
        worst = worst.max(space.residual(&p));
    }
    Ok(worst)
}

pub fn mprime_contraction_check(
    y: &DenseMatrix,
    n: usize,
    z: Complex64,
    steps: usize,
) -> Result<f64> {
    contraction_check(Space::MPrime(n), y, z, steps)
}

pub fn symunitary_contraction_check(y: &DenseMatrix, z: Complex64, steps: usize) -> Result<f64> {
    contraction_check(Space::SymUnitary(y.rows()), y, z, steps)
}

/// Residuals of `c_{zI}(Yᵀ) = c_{zI}(Y)ᵀ` and, for `Y` of size `2n`,
/// `c_{zI}(−JYJ) = −J c_{zI}(Y) J`.
pub fn transport_residuals(y: &DenseMatrix, z: Complex64) -> Result<(f64, Option<f64>)> {
    let k = y.check_square()?;
    let center = GroupElement::scalar(RingTag::C, k, Quaternion::from_complex(z))?;
    let c = cayley(&center, y)?;
    let transpose = cayley(&center, &y.transpose())?.distance(&c.transpose());
    let conj = if k % 2 == 0 {
        let j = j_matrix(k / 2);
        let lhs = cayley(&center, &-&(&(&j * y) * &j))?;
        Some(lhs.distance(&-&(&(&j * &c) * &j)))
    } else {
        None
    };
    Ok((transpose, conj))
}

/// Largest distance between paired eigenvalues of `Y` (greedy nearest pairing).
/// Zero iff every eigenvalue has even multiplicity.
pub fn doubled_spectrum_residual(y: &DenseMatrix) -> Result<f64> {
    let mut eig = y.eigenvalues()?;
    if eig.len() % 2 == 1 {
        return Ok(f64::INFINITY);
    }
    let mut worst = 0.0f64;
    while let Some(l) = eig.pop() {
        let (idx, d) = eig
            .iter()
            .enumerate()
            .map(|(i, m)| (i, (m - l).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("even count");
        eig.swap_remove(idx);
        worst = worst.max(d);
    }
    Ok(worst)
}

/// Deterministic sample of a space.
///
/// Groups use [`haar_sample`]; `M′` uses `Y = J · U J Uᵀ` and the symmetric
/// model `Y = U Uᵀ`, both with Haar `U`, which sweep out the orbits of the
/// transitive actions `U · X = U X Uᵀ`.
pub fn sample_space(space: Space, seed: u64) -> Result<DenseMatrix> {
    match space {
        Space::Unitary(n) => Ok(haar_sample(RingTag::C, n, seed)?.into_mat()),
        Space::Sp2 => Ok(haar_sample(RingTag::H, 2, seed)?.into_mat()),
        Space::MPrime(n) => {
            let u = haar_sample(RingTag::C, 2 * n, seed)?;
            let j = j_matrix(n);
            let x = &(u.mat() * &j) * &u.mat().transpose();
            Ok(&j * &x)
        }
        Space::SymUnitary(n) => {
            let u = haar_sample(RingTag::C, n, seed)?;
            Ok(u.mat() * &u.mat().transpose())
        }
    }
}

/// A point `U P U*` of the adjoint orbit of `P` in `Sp(2)`.
pub fn sample_p_orbit(seed: u64) -> Result<DenseMatrix> {
    let u = haar_sample(RingTag::H, 2, seed)?;
    Ok(&(u.mat() * sp2_p().mat()) * &u.mat().adjoint())
}

/// Tally of a Monte-Carlo coverage run.
#[derive(Clone, Debug, Serialize)]
pub struct CoverageReport {
    pub space: Space,
    pub samples: usize,
    pub covered: usize,
    pub per_center_counts: Vec<usize>,
    pub uncovered_witnesses: Vec<DenseMatrix>,
    pub seed: u64,
}

impl CoverageReport {
    pub fn all_covered(&self) -> bool {
        self.covered == self.samples
    }
}

/// Draws `samples` points of the space and records which center covers each.
/// Sample `i` is drawn from seed `stream_seed(seed, i)`, so the report does not
/// depend on the parallel schedule.
pub fn verify_cover(spec: &CoverSpec, samples: usize, seed: u64) -> Result<CoverageReport> {
    let space = spec.space;
    verify_cover_with(spec, samples, seed, |s| sample_space(space, s))
}

/// [`verify_cover`] with a caller-supplied sampler.
pub fn verify_cover_with<F>(
    spec: &CoverSpec,
    samples: usize,
    seed: u64,
    sampler: F,
) -> Result<CoverageReport>
where
    F: Fn(u64) -> Result<DenseMatrix> + Sync,
{
    let outcomes: Vec<(Option<usize>, DenseMatrix)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let x = sampler(stream_seed(seed, i as u64))?;
            Ok((cover_index(spec, &x)?, x))
        })
        .collect::<Result<_>>()?;

    let mut per_center_counts = vec![0; spec.centers.len()];
    let mut uncovered_witnesses = Vec::new();
    for (hit, x) in outcomes {
        match hit {
            Some(k) => per_center_counts[k] += 1,
            None if uncovered_witnesses.len() < WITNESS_CAP => uncovered_witnesses.push(x),
            None => {}
        }
    }
    Ok(CoverageReport {
        space: spec.space,
        samples,
        covered: per_center_counts.iter().sum(),
        per_center_counts,
        uncovered_witnesses,
        seed,
    })
}

/// Checks the orbit argument for `Sp(2)`: for `X = UPU* ≠ −P`, `P + X` is
/// invertible. Returns `None` for `X = −P`.
pub fn sp2_orbit_dichotomy(x: &DenseMatrix) -> Result<Option<bool>> {
    let p = sp2_p();
    if x.distance(p.neg().mat()) < 1e-9 {
        return Ok(None);
    }
    Ok(Some(in_omega(&p, x)?))
}

/// Group element `U diag(d) U*` in `U(n)` with prescribed eigenvalues.
pub fn unitary_with_spectrum(spectrum: &[Complex64], seed: u64) -> Result<GroupElement> {
    let n = spectrum.len();
    let u = haar_sample(RingTag::C, n, seed)?;
    let d: Vec<Quaternion> = spectrum
        .iter()
        .map(|&z| Quaternion::from_complex(z))
        .collect();
    let m = &(u.mat() * &DenseMatrix::diag(RingTag::C, &d)) * &u.mat().adjoint();
    GroupElement::new(m, EPS_GROUP * 10.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn unitary_cover_centers() {
        let s = unitary_cover(1).unwrap();
        assert_eq!(s.centers.len(), 2);
        assert!(
            s.centers[0]
                .mat()
                .distance(&DenseMatrix::identity(RingTag::C, 1).scale(-1.0))
                < 1e-15
        );
        assert!(
            s.centers[1]
                .mat()
                .distance(&DenseMatrix::identity(RingTag::C, 1))
                < 1e-15
        );

        let s = unitary_cover(2).unwrap();
        assert_eq!(s.centers.len(), 3);
        for (k, center) in s.centers.iter().enumerate() {
            let z = -center.mat()[(0, 0)].complex_part();
            assert!((z - Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 3.0)).norm() < 1e-15);
            assert!((z.powu(3) - 1.0).norm() < 1e-14);
        }
        assert!(unitary_cover(0).is_err());
    }

    #[test]
    fn cover_spec_rejects_duplicates() {
        let id = GroupElement::identity(RingTag::C, 2);
        assert!(CoverSpec::new(Space::Unitary(2), vec![id.clone(), id]).is_err());
        let h = GroupElement::identity(RingTag::H, 2);
        assert!(matches!(
            CoverSpec::new(Space::Unitary(2), vec![h]),
            Err(Error::SpaceMismatch(_))
        ));
    }

    #[test]
    fn cover_index_examples() {
        let s = unitary_cover(1).unwrap();
        let one = DenseMatrix::identity(RingTag::C, 1);
        assert_eq!(cover_index(&s, &one).unwrap(), Some(1));

        let s = unitary_cover(2).unwrap();
        let k = cover_index(&s, &DenseMatrix::identity(RingTag::C, 2))
            .unwrap()
            .unwrap();
        assert_ne!(k, 0);

        let s = unitary_cover(3).unwrap();
        for seed in 0..500 {
            let x = sample_space(Space::Unitary(3), seed).unwrap();
            assert!(cover_index(&s, &x).unwrap().is_some());
        }

        let not_unitary = DenseMatrix::identity(RingTag::C, 2).scale(2.0);
        assert!(matches!(
            cover_index(&unitary_cover(2).unwrap(), &not_unitary),
            Err(Error::SpaceMismatch(_))
        ));
    }

    #[test]
    fn sp2_examples() {
        assert_eq!(
            sp2_cover_index(&DenseMatrix::identity(RingTag::H, 2)).unwrap(),
            Some(0)
        );
        let minus_p = sp2_p().neg().into_mat();
        assert_eq!(sp2_cover_index(&minus_p).unwrap(), Some(3));
        assert_eq!(sp2_orbit_dichotomy(&minus_p).unwrap(), None);
        for seed in 0..200 {
            let x = sample_p_orbit(seed).unwrap();
            assert_eq!(sp2_orbit_dichotomy(&x).unwrap(), Some(true));
            assert!(sp2_cover_index(&x).unwrap().is_some());
        }
    }

    #[test]
    fn sp2_orbit_squares() {
        // (P + X)² = 2·diag(1 − x₁₁, 1 + x₂₂) for X in the orbit of P
        for seed in 0..20 {
            let x = sample_p_orbit(seed).unwrap();
            let p = sp2_p().into_mat();
            let s = &p + &x;
            let sq = &s * &s;
            let expected = DenseMatrix::diag(
                RingTag::H,
                &[
                    (Quaternion::ONE - x[(0, 0)]).scale(2.0),
                    (Quaternion::ONE + x[(1, 1)]).scale(2.0),
                ],
            );
            assert!(sq.distance(&expected) < 1e-12);
            assert!(x[(0, 0)].is_real(1e-12) && x[(1, 1)].is_real(1e-12));
        }
    }

    #[test]
    fn mprime_examples() {
        for n in 1..=3 {
            let j = j_matrix(n);
            // Jᵀ + J·J·J = −2J
            assert!(!mprime_membership(&j, n, 1e-6));
            assert!(mprime_membership(&(&j * &j).scale(-1.0), n, 1e-12));
            assert!(mprime_membership(
                &DenseMatrix::identity(RingTag::C, 2 * n),
                n,
                1e-12
            ));
            let y = sample_space(Space::MPrime(n), 5).unwrap();
            assert!(mprime_membership(&y, n, 1e-9));
            // U · X = U X Uᵀ acting on X = J⁻¹Y keeps Y = J X in M′
            let u = haar_sample(RingTag::C, 2 * n, 6).unwrap();
            let x = &j.scale(-1.0) * &y;
            let moved = &j * &(&(u.mat() * &x) * &u.mat().transpose());
            assert!(mprime_membership(&moved, n, 1e-9));
        }
        let generic = haar_sample(RingTag::C, 2, 1).unwrap().into_mat();
        assert!(!mprime_membership(&generic, 1, 1e-6));
    }

    #[test]
    fn mprime_cover_examples() {
        let j = j_matrix(1);
        assert!(matches!(
            mprime_cover_index(&j, 1),
            Err(Error::SpaceMismatch(_))
        ));
        assert!(mprime_cover_index(&DenseMatrix::identity(RingTag::C, 2), 1)
            .unwrap()
            .is_some());
        let eig = j.eigenvalues().unwrap();
        assert!(eig
            .iter()
            .all(|l| (l.norm() - 1.0).abs() < 1e-12 && l.re.abs() < 1e-12));
        for seed in 0..200 {
            let y = sample_space(Space::MPrime(2), seed).unwrap();
            assert!(doubled_spectrum_residual(&y).unwrap() < 1e-8);
            assert!(mprime_cover_index(&y, 2).unwrap().is_some());
        }
        // a generic unitary has a simple spectrum
        let u = haar_sample(RingTag::C, 4, 3).unwrap().into_mat();
        assert!(doubled_spectrum_residual(&u).unwrap() > 1e-3);
    }

    #[test]
    fn contraction_examples() {
        let n = 2;
        let y = sample_space(Space::MPrime(n), 9).unwrap();
        let z = c(0.6, 0.8);
        assert!(mprime_contraction_check(&y, n, z, 1).unwrap() < 1e-10);
        assert!(mprime_contraction_check(&y, n, z, 32).unwrap() < 1e-8);

        let center = GroupElement::scalar(RingTag::C, 2 * n, Quaternion::from_complex(z)).unwrap();
        let beta = cayley(&center, &y).unwrap();
        let start = cayley(&center.adjoint(), &beta.scale(0.0)).unwrap();
        assert!(start.distance(center.mat()) < 1e-12);
        assert!(Space::MPrime(n).residual(&start) < 1e-10);

        let s = sample_space(Space::SymUnitary(3), 4).unwrap();
        assert!(symunitary_contraction_check(&s, c(-1.0, 0.0), 16).unwrap() < 1e-8);
    }

    #[test]
    fn transport_identities() {
        for seed in 0..20 {
            let y = haar_sample(RingTag::C, 4, seed).unwrap().into_mat();
            let z = Complex64::from_polar(1.0, seed as f64);
            let (t, j) = transport_residuals(&y, z).unwrap();
            assert!(t < 1e-10 && j.unwrap() < 1e-10);
        }
        // the transpose identity holds with a plus sign: 1x1 matrices are their own transpose
        let y = DenseMatrix::from_complex_rows(&[&[Complex64::from_polar(1.0, 1.0)]]);
        let center = GroupElement::identity(RingTag::C, 1);
        let cy = cayley(&center, &y).unwrap();
        assert!(
            cayley(&center, &y.transpose())
                .unwrap()
                .distance(&cy.transpose().scale(-1.0))
                > 0.1
        );
    }

    #[test]
    fn symunitary_examples() {
        assert!(symunitary_membership(
            &DenseMatrix::identity(RingTag::C, 3),
            1e-12
        ));
        let d: Vec<Quaternion> = [0.3, 1.7, -2.0]
            .iter()
            .map(|&t| Quaternion::from_complex(Complex64::from_polar(1.0, t)))
            .collect();
        assert!(symunitary_membership(
            &DenseMatrix::diag(RingTag::C, &d),
            1e-12
        ));
        let generic = haar_sample(RingTag::C, 3, 2).unwrap().into_mat();
        assert!(!symunitary_membership(&generic, 1e-6));
        let s = sample_space(Space::SymUnitary(3), 8).unwrap();
        assert!(symunitary_membership(&s, 1e-9));
    }

    #[test]
    fn sample_space_delegates() {
        let a = sample_space(Space::Sp2, 12).unwrap();
        assert_eq!(a, haar_sample(RingTag::H, 2, 12).unwrap().into_mat());
    }

    #[test]
    fn verify_cover_examples() {
        let r = verify_cover(&unitary_cover(2).unwrap(), 500, 7).unwrap();
        assert!(r.all_covered());
        assert_eq!(r.per_center_counts.iter().sum::<usize>(), r.covered);
        assert!(r.uncovered_witnesses.is_empty());

        let again = verify_cover(&unitary_cover(2).unwrap(), 500, 7).unwrap();
        assert_eq!(r.per_center_counts, again.per_center_counts);

        let r = verify_cover(&sp2_cover(), 500, 7).unwrap();
        assert!(r.all_covered());

        let empty = verify_cover(&unitary_cover(2).unwrap(), 0, 7).unwrap();
        assert_eq!((empty.samples, empty.covered), (0, 0));
    }

    #[test]
    fn broken_cover_has_witnesses() {
        // U(2) with only the centers ∓I misses every matrix with spectrum {1, −1}
        let centers = unitary_cover(1).unwrap().centers;
        let lifted: Vec<GroupElement> = centers
            .iter()
            .map(|c| GroupElement::scalar(RingTag::C, 2, c.mat()[(0, 0)]).unwrap())
            .collect();
        let spec = CoverSpec::new(Space::Unitary(2), lifted).unwrap();
        let r = verify_cover_with(&spec, 40, 1, |s| {
            Ok(unitary_with_spectrum(&[c(1.0, 0.0), c(-1.0, 0.0)], s)?.into_mat())
        })
        .unwrap();
        assert_eq!(r.covered, 0);
        assert_eq!(r.uncovered_witnesses.len(), WITNESS_CAP);
    }

    #[test]
    fn space_names() {
        assert_eq!(Space::from_name("mprime", 2).unwrap(), Space::MPrime(2));
        assert!(matches!(
            Space::from_name("flag", 2),
            Err(Error::UnknownSpace(_))
        ));
    }
}

//! Dense matrices over R, C or H.
//!
//! Entries are stored as [`Quaternion`]s in row-major order, tagged with the
//! ring they belong to. Products follow the entry order `a_ik · b_kj`, so the
//! non-commutativity of H is respected.
//!
//! Everything that needs a factorization (inversion, singular values,
//! eigenvalues, the exponential) goes through the *complex image*: the matrix
//! itself for R and C, and the `2n × 2n` Study image for H, whose `2 × 2`
//! blocks are [`Quaternion::study_embed`] of the entries. The image map is an
//! injective ring homomorphism that also commutes with `*`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::{DMatrix, Schur, SymmetricEigen, SVD};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{Quaternion, RingTag};
use crate::error::{Error, Result};
use crate::tol::{EPS_GROUP, EPS_INV};

#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    ring: RingTag,
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "DenseMatrix<{}> {}x{} [",
            self.ring, self.rows, self.cols
        )?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let q = self[(r, c)];
                match self.ring {
                    RingTag::R => write!(f, "{:>12.6} ", q.w)?,
                    RingTag::C => write!(f, "({:.6}, {:.6}) ", q.w, q.x)?,
                    RingTag::H => write!(f, "({:.4}, {:.4}, {:.4}, {:.4}) ", q.w, q.x, q.y, q.z)?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl DenseMatrix {
    pub fn zeros(ring: RingTag, rows: usize, cols: usize) -> Self {
        Self {
            ring,
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(ring: RingTag, n: usize) -> Self {
        Self::scalar(ring, n, Quaternion::ONE)
    }

    /// `s · I`. The scalar must belong to `ring`.
    pub fn scalar(ring: RingTag, n: usize, s: Quaternion) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = s;
        }
        m.sanitize();
        m
    }

    pub fn from_fn(
        ring: RingTag,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Quaternion,
    ) -> Self {
        let mut m = Self::zeros(ring, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m.sanitize();
        m
    }

    /// Builds a matrix from row-major entries. Components outside `ring` are
    /// rejected.
    pub fn from_entries(
        ring: RingTag,
        rows: usize,
        cols: usize,
        data: Vec<Quaternion>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(q) = data.iter().find(|q| !ring.contains(**q, 0.0)) {
            return Err(Error::Parse(format!(
                "entry {q} does not belong to ring {ring}"
            )));
        }
        Ok(Self {
            ring,
            rows,
            cols,
            data,
        })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(RingTag::R, r, c, |i, j| Quaternion::real(rows[i][j]))
    }

    pub fn from_complex_rows(rows: &[&[Complex64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(RingTag::C, r, c, |i, j| {
            Quaternion::from_complex(rows[i][j])
        })
    }

    pub fn from_quaternion_rows(rows: &[&[Quaternion]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(RingTag::H, r, c, |i, j| rows[i][j])
    }

    pub fn diag(ring: RingTag, entries: &[Quaternion]) -> Self {
        let n = entries.len();
        Self::from_fn(ring, n, n, |i, j| {
            if i == j {
                entries[i]
            } else {
                Quaternion::ZERO
            }
        })
    }

    pub fn real_diag(ring: RingTag, entries: &[f64]) -> Self {
        let q: Vec<_> = entries.iter().map(|&e| Quaternion::real(e)).collect();
        Self::diag(ring, &q)
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.data
    }

    /// Re-tags the matrix in a larger ring. Narrowing is refused.
    pub fn promote(&self, ring: RingTag) -> Result<Self> {
        if ring < self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: ring,
            });
        }
        Ok(Self {
            ring,
            ..self.clone()
        })
    }

    /// Zeroes components that do not belong to the ring.
    fn sanitize(&mut self) {
        match self.ring {
            RingTag::R => self
                .data
                .iter_mut()
                .for_each(|q| *q = Quaternion::real(q.w)),
            RingTag::C => self.data.iter_mut().for_each(|q| {
                q.y = 0.0;
                q.z = 0.0
            }),
            RingTag::H => {}
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub(crate) fn check_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| *a + *b)
            .collect();
        Ok(self.with_data(data))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| *a - *b)
            .collect();
        Ok(self.with_data(data))
    }

    fn with_data(&self, data: Vec<Quaternion>) -> Self {
        Self {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Multiplication by a real scalar.
    pub fn scale(&self, s: f64) -> Self {
        self.with_data(self.data.iter().map(|q| q.scale(s)).collect())
    }

    /// Left multiplication of every entry by a ring scalar.
    pub fn left_scale(&self, s: Quaternion) -> Self {
        let mut m = self.with_data(self.data.iter().map(|q| s * *q).collect());
        m.sanitize();
        m
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring, self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Conjugate transpose `A*`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.ring, self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Entrywise quaternion conjugate (complex conjugate for C).
    pub fn conj(&self) -> Self {
        self.with_data(self.data.iter().map(|q| q.conj()).collect())
    }

    pub fn trace(&self) -> Quaternion {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)])
            .fold(Quaternion::ZERO, |a, b| a + b)
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// `‖self − other‖_F`; `∞` when shapes or rings differ.
    pub fn distance(&self, other: &Self) -> f64 {
        self.try_sub(other).map_or(f64::INFINITY, |d| d.fro_norm())
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.fro_norm() <= tol
    }

    /// Real coordinates in the order (entry-major, then component).
    pub fn real_coords(&self) -> Vec<f64> {
        let d = self.ring.real_dim();
        self.data
            .iter()
            .flat_map(|q| q.to_array().into_iter().take(d))
            .collect()
    }

    /// Inverse of [`DenseMatrix::real_coords`].
    pub fn from_real_coords(ring: RingTag, rows: usize, cols: usize, coords: &[f64]) -> Self {
        let d = ring.real_dim();
        assert_eq!(
            coords.len(),
            rows * cols * d,
            "coordinate vector has the wrong length"
        );
        let data = coords
            .chunks(d)
            .map(|c| {
                let mut a = [0.0; 4];
                a[..d].copy_from_slice(c);
                Quaternion::from_array(a)
            })
            .collect();
        Self {
            ring,
            rows,
            cols,
            data,
        }
    }

    /// Complex image: the matrix itself for R and C, the Study image for H.
    pub fn complex_image(&self) -> DMatrix<Complex64> {
        match self.ring {
            RingTag::R | RingTag::C => {
                DMatrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].complex_part())
            }
            RingTag::H => {
                let mut m = DMatrix::zeros(2 * self.rows, 2 * self.cols);
                for r in 0..self.rows {
                    for c in 0..self.cols {
                        let b = self[(r, c)].study_embed();
                        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                            m[(2 * r + i, 2 * c + j)] = b[(i, j)];
                        }
                    }
                }
                m
            }
        }
    }

    /// Reads a matrix back from its complex image. For H only the first
    /// column of every `2 × 2` block is used.
    pub fn from_complex_image(ring: RingTag, m: &DMatrix<Complex64>) -> Self {
        let f = ring.complex_factor();
        let (rows, cols) = (m.nrows() / f, m.ncols() / f);
        match ring {
            RingTag::R | RingTag::C => {
                Self::from_fn(ring, rows, cols, |r, c| Quaternion::from_complex(m[(r, c)]))
            }
            RingTag::H => Self::from_fn(ring, rows, cols, |r, c| {
                Quaternion::from_study_parts(m[(2 * r, 2 * c)], m[(2 * r + 1, 2 * c)])
            }),
        }
    }

    pub fn singular_values(&self) -> Vec<f64> {
        let img = self.complex_image();
        let sv = SVD::new(img, false, false).singular_values;
        let mut v: Vec<f64> = sv.iter().copied().collect();
        v.sort_by(|a, b| a.total_cmp(b));
        v
    }

    /// Smallest singular value of the complex image.
    pub fn min_singular_value(&self) -> f64 {
        self.singular_values().first().copied().unwrap_or(0.0)
    }

    /// Eigenvalues of the complex image (each H eigenvalue pair appears as
    /// `λ, conj λ`).
    pub fn eigenvalues(&self) -> Result<Vec<Complex64>> {
        self.check_square()?;
        complex_eigenvalues(self.complex_image())
    }

    /// Eigenvalues of a hermitian matrix, ascending. H eigenvalues appear twice.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        self.check_square()?;
        let img = self.complex_image();
        let herm = (&img + img.adjoint()).scale(0.5);
        let mut v: Vec<f64> = SymmetricEigen::new(herm)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        v.sort_by(|a, b| a.total_cmp(b));
        Ok(v)
    }

    pub fn is_invertible(&self, eps: f64) -> bool {
        is_invertible(self, eps)
    }

    pub fn inverse(&self) -> Result<Self> {
        inverse(self)
    }
}

/// Eigenvalues of a complex square matrix through its Schur form.
pub(crate) fn complex_eigenvalues(m: DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    let schur = Schur::try_new(m, f64::EPSILON, 0).ok_or(Error::NoConvergence)?;
    let t = schur.unpack().1;
    Ok((0..t.nrows()).map(|i| t[(i, i)]).collect())
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Quaternion;
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, o: &DenseMatrix) -> DenseMatrix {
        self.try_add(o).expect("matrix addition")
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, o: &DenseMatrix) -> DenseMatrix {
        self.try_sub(o).expect("matrix subtraction")
    }
}

impl Neg for &DenseMatrix {
    type Output = DenseMatrix;
    fn neg(self) -> DenseMatrix {
        self.scale(-1.0)
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, o: &DenseMatrix) -> DenseMatrix {
        matmul(self, o).expect("matrix product")
    }
}

impl Mul<f64> for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, s: f64) -> DenseMatrix {
        self.scale(s)
    }
}

/// Matrix product with entries multiplied in the order `a_ik · b_kj`.
pub fn matmul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch {
            left: a.ring,
            right: b.ring,
        });
    }
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = DenseMatrix::zeros(a.ring, a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let aik = a[(r, k)];
            for c in 0..b.cols {
                out.data[r * b.cols + c] += aik * b[(k, c)];
            }
        }
    }
    Ok(out)
}

pub fn conjtranspose(a: &DenseMatrix) -> DenseMatrix {
    a.adjoint()
}

/// True iff the smallest singular value of the complex image exceeds
/// `eps · ‖A‖_F`. The zero matrix is never invertible.
pub fn is_invertible(a: &DenseMatrix, eps: f64) -> bool {
    if !a.is_square() {
        return false;
    }
    let scale = a.fro_norm();
    scale > 0.0 && a.min_singular_value() > eps * scale
}

pub fn inverse(a: &DenseMatrix) -> Result<DenseMatrix> {
    a.check_square()?;
    if !is_invertible(a, EPS_INV) {
        return Err(Error::Singular);
    }
    let inv = a.complex_image().try_inverse().ok_or(Error::Singular)?;
    Ok(DenseMatrix::from_complex_image(a.ring, &inv))
}

/// `B · M⁻¹`, computed by an LU solve on the complex images.
pub fn right_divide(b: &DenseMatrix, m: &DenseMatrix) -> Result<DenseMatrix> {
    m.check_square()?;
    if b.ring != m.ring {
        return Err(Error::RingMismatch {
            left: b.ring,
            right: m.ring,
        });
    }
    if b.cols != m.rows {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} / {}x{}",
            b.rows, b.cols, m.rows, m.cols
        )));
    }
    if !is_invertible(m, EPS_INV) {
        return Err(Error::Singular);
    }
    solve_right(b, m)
}

/// `B · M⁻¹` without the conditioning test; the caller vouches for `M`.
pub(crate) fn solve_right(b: &DenseMatrix, m: &DenseMatrix) -> Result<DenseMatrix> {
    // X M = B  <=>  Mᵀ Xᵀ = Bᵀ
    let mt = m.complex_image().transpose();
    let bt = b.complex_image().transpose();
    let xt = mt.lu().solve(&bt).ok_or(Error::Singular)?;
    Ok(DenseMatrix::from_complex_image(b.ring, &xt.transpose()))
}

/// `M⁻¹ · B`, computed by an LU solve on the complex images.
pub fn left_divide(m: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    m.check_square()?;
    if b.ring != m.ring {
        return Err(Error::RingMismatch {
            left: b.ring,
            right: m.ring,
        });
    }
    if b.rows != m.cols {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} \\ {}x{}",
            m.rows, m.cols, b.rows, b.cols
        )));
    }
    if !is_invertible(m, EPS_INV) {
        return Err(Error::Singular);
    }
    let x = m
        .complex_image()
        .lu()
        .solve(&b.complex_image())
        .ok_or(Error::Singular)?;
    Ok(DenseMatrix::from_complex_image(b.ring, &x))
}

/// Real inner product `Re Tr(A* B)`.
pub fn trace_inner(a: &DenseMatrix, b: &DenseMatrix) -> Result<f64> {
    a.check_same(b)?;
    Ok(a.data.iter().zip(&b.data).map(|(x, y)| x.dot(*y)).sum())
}

/// Matrix exponential by scaling and squaring of the Taylor series,
/// evaluated on the complex image.
pub fn matexp(a: &DenseMatrix) -> Result<DenseMatrix> {
    a.check_square()?;
    let img = a.complex_image();
    Ok(DenseMatrix::from_complex_image(a.ring, &complex_expm(&img)))
}

pub(crate) fn complex_expm(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = m.nrows();
    let norm = m.norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.scale(0.5f64.powi(squarings as i32));

    let mut sum = DMatrix::<Complex64>::identity(n, n);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    for k in 1..64 {
        term = (&term * &scaled).unscale(k as f64);
        sum += &term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// A square matrix certified to satisfy `‖A A* − I‖_F ≤ tol`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    mat: DenseMatrix,
    tol: f64,
}

impl GroupElement {
    pub fn new(mat: DenseMatrix, tol: f64) -> Result<Self> {
        mat.check_square()?;
        let residual = orthogonality_residual(&mat);
        if residual > tol {
            return Err(Error::NotOrthogonal { residual, tol });
        }
        Ok(Self { mat, tol })
    }

    pub fn identity(ring: RingTag, n: usize) -> Self {
        Self {
            mat: DenseMatrix::identity(ring, n),
            tol: 0.0,
        }
    }

    /// `s · I` for a unit scalar `s`.
    pub fn scalar(ring: RingTag, n: usize, s: Quaternion) -> Result<Self> {
        Self::new(DenseMatrix::scalar(ring, n, s), EPS_GROUP)
    }

    pub fn mat(&self) -> &DenseMatrix {
        &self.mat
    }

    pub fn into_mat(self) -> DenseMatrix {
        self.mat
    }

    pub fn group(&self) -> RingTag {
        self.mat.ring
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn n(&self) -> usize {
        self.mat.rows
    }

    /// `A*`, which is also `A⁻¹`.
    pub fn adjoint(&self) -> Self {
        Self {
            mat: self.mat.adjoint(),
            tol: self.tol,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mat: -&self.mat,
            tol: self.tol,
        }
    }

    pub fn residual(&self) -> f64 {
        orthogonality_residual(&self.mat)
    }
}

/// `‖A A* − I‖_F`.
pub fn orthogonality_residual(a: &DenseMatrix) -> f64 {
    if !a.is_square() {
        return f64::INFINITY;
    }
    let aa = a * &a.adjoint();
    aa.distance(&DenseMatrix::identity(a.ring, a.rows))
}

/// Gaussian matrix with independent standard normal real coordinates.
pub fn random_gaussian<R: Rng + ?Sized>(
    ring: RingTag,
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> DenseMatrix {
    let d = ring.real_dim();
    DenseMatrix::from_fn(ring, rows, cols, |_, _| {
        let mut a = [0.0; 4];
        for v in a.iter_mut().take(d) {
            *v = rng.sample(StandardNormal);
        }
        Quaternion::from_array(a)
    })
}

/// Haar-like sample of `O(n, K)` from an explicit seed.
///
/// Gaussian entries are orthonormalized by modified Gram-Schmidt on columns
/// (right-linear for H: `v ← v − q (q* v)`, then `v ← v · |v|⁻¹`). Without a
/// phase correction of the R factor this is not exactly Haar for R and C,
/// but it has full support, which is what coverage checks need.
pub fn haar_sample(ring: RingTag, n: usize, seed: u64) -> Result<GroupElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_sample_with(ring, n, &mut rng)
}

pub fn haar_sample_with<R: Rng + ?Sized>(
    ring: RingTag,
    n: usize,
    rng: &mut R,
) -> Result<GroupElement> {
    const ATTEMPTS: usize = 8;
    for _ in 0..ATTEMPTS {
        let g = random_gaussian(ring, n, n, rng);
        if let Some(q) = gram_schmidt(&g) {
            return GroupElement::new(q, EPS_GROUP);
        }
    }
    Err(Error::DegenerateSample { attempts: ATTEMPTS })
}

/// Orthonormalizes the columns of a square matrix; `None` on a near-zero column.
fn gram_schmidt(m: &DenseMatrix) -> Option<DenseMatrix> {
    let n = m.rows;
    let mut cols: Vec<Vec<Quaternion>> = (0..m.cols)
        .map(|c| (0..n).map(|r| m[(r, c)]).collect())
        .collect();
    for j in 0..cols.len() {
        // two passes keep orthogonality at machine precision
        for _ in 0..2 {
            for i in 0..j {
                let coeff = cols[i]
                    .iter()
                    .zip(&cols[j])
                    .fold(Quaternion::ZERO, |acc, (qi, vj)| acc + qi.conj() * *vj);
                let qi = cols[i].clone();
                for (v, q) in cols[j].iter_mut().zip(&qi) {
                    *v -= *q * coeff;
                }
            }
        }
        let norm = cols[j].iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-10 {
            return None;
        }
        cols[j].iter_mut().for_each(|v| *v = v.scale(1.0 / norm));
    }
    Some(DenseMatrix::from_fn(m.ring, n, m.cols, |r, c| cols[c][r]))
}

/// Derives an independent stream seed for sample `index` of a run seeded with `seed`.
pub fn stream_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

//! Scalars over the reals, complexes and quaternions.
//!
//! Every matrix entry in this crate is stored as a [`Quaternion`]. Reals live
//! in the `w` slot and complex numbers `a + bi` in `(w, x)`, so the quaternion
//! product restricted to those subspaces is ordinary real or complex
//! multiplication. The [`RingTag`] on a matrix says which subspace is in use.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol::EPS_ZERO;

/// Complex scalars are plain `num_complex` values.
pub type ComplexPair = Complex64;

/// The ground ring of a matrix: R ⊂ C ⊂ H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RingTag {
    R,
    C,
    H,
}

impl RingTag {
    /// Real dimension of the ring (1, 2 or 4).
    pub fn real_dim(self) -> usize {
        match self {
            RingTag::R => 1,
            RingTag::C => 2,
            RingTag::H => 4,
        }
    }

    /// Side length multiplier of the complex image: `2` for H, `1` otherwise.
    pub fn complex_factor(self) -> usize {
        match self {
            RingTag::H => 2,
            _ => 1,
        }
    }

    /// Name of the orthogonal group over this ring.
    pub fn group_name(self) -> &'static str {
        match self {
            RingTag::R => "O",
            RingTag::C => "U",
            RingTag::H => "Sp",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::R => "R",
            RingTag::C => "C",
            RingTag::H => "H",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "R" => Some(RingTag::R),
            "C" => Some(RingTag::C),
            "H" => Some(RingTag::H),
            _ => None,
        }
    }

    /// True if `q` has no components outside this ring (within `tol`).
    pub fn contains(self, q: Quaternion, tol: f64) -> bool {
        match self {
            RingTag::R => q.x.abs() <= tol && q.y.abs() <= tol && q.z.abs() <= tol,
            RingTag::C => q.y.abs() <= tol && q.z.abs() <= tol,
            RingTag::H => true,
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A quaternion `w + xi + yj + zk`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// Explicit coercion C → H: `a + bi` lands in `(w, x)`.
    pub fn from_complex(c: Complex64) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// The `(w, x)` part as a complex number. Lossy for genuinely quaternionic values.
    pub fn complex_part(self) -> Complex64 {
        Complex64::new(self.w, self.x)
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Imaginary part `xi + yj + zk`.
    pub fn imag(self) -> Self {
        Self::new(0.0, self.x, self.y, self.z)
    }

    /// Euclidean inner product on R⁴, equal to `Re(conj(self) · other)`.
    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn is_real(self, tol: f64) -> bool {
        self.imag().norm() <= tol
    }

    /// Multiplicative inverse `conj(q) / |q|²`.
    pub fn inv(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2.sqrt() <= EPS_ZERO {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    /// Unit quaternion in the direction of `self`.
    pub fn normalize(self) -> Result<Self> {
        let n = self.norm();
        if n <= EPS_ZERO {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.scale(1.0 / n))
    }

    /// Complex adjoint (Study) image: writing `q = α + jβ` with α, β complex,
    /// returns `[[α, −conj β], [β, conj α]]`.
    pub fn study_embed(self) -> Matrix2<Complex64> {
        let (alpha, beta) = self.study_parts();
        Matrix2::new(alpha, -beta.conj(), beta, alpha.conj())
    }

    /// The pair `(α, β)` with `q = α + jβ`.
    pub fn study_parts(self) -> (Complex64, Complex64) {
        // jβ = j(b₀ + b₁i) = b₀j − b₁k
        (
            Complex64::new(self.w, self.x),
            Complex64::new(self.y, -self.z),
        )
    }

    /// Inverse of [`Quaternion::study_parts`].
    pub fn from_study_parts(alpha: Complex64, beta: Complex64) -> Self {
        Self::new(alpha.re, alpha.im, beta.re, -beta.im)
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self - other).norm() <= tol
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.w, self.x, self.y, self.z)
    }
}

impl From<f64> for Quaternion {
    fn from(w: f64) -> Self {
        Self::real(w)
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    /// Hamilton product; `i·j = k`, `j·i = −k`.
    fn mul(self, o: Self) -> Self {
        qmul(self, o)
    }
}

impl MulAssign for Quaternion {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        self.scale(1.0 / s)
    }
}

/// Hamilton product of two quaternions.
pub fn qmul(a: Quaternion, b: Quaternion) -> Quaternion {
    Quaternion::new(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )
}

pub fn qinv(a: Quaternion) -> Result<Quaternion> {
    a.inv()
}

pub fn study_embed(a: Quaternion) -> Matrix2<Complex64> {
    a.study_embed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    fn arb_q() -> impl Strategy<Value = Quaternion> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64)
            .prop_map(|(w, x, y, z)| q(w, x, y, z))
    }

    fn mat_close(a: &Matrix2<Complex64>, b: &Matrix2<Complex64>, tol: f64) -> bool {
        (a - b).iter().all(|e| e.norm() <= tol)
    }

    #[test]
    fn hamilton_relations() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::I * Q::I, -Q::ONE);
        // (1+i)(1+j) = 1 + j + i + k
        assert_eq!(
            q(1.0, 1.0, 0.0, 0.0) * q(1.0, 0.0, 1.0, 0.0),
            q(1.0, 1.0, 1.0, 1.0)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Quaternion::I.inv().unwrap(), -Quaternion::I);
        assert_eq!(Quaternion::real(2.0).inv().unwrap(), Quaternion::real(0.5));
        let h = q(0.5, 0.5, 0.5, 0.5);
        let hi = h.inv().unwrap();
        assert!(hi.approx_eq(q(0.5, -0.5, -0.5, -0.5), 1e-15));
        assert!((h * hi).approx_eq(Quaternion::ONE, 1e-15));
        assert!(matches!(Quaternion::ZERO.inv(), Err(Error::ZeroDivisor)));
        assert!(matches!(
            q(1e-14, 0.0, 0.0, 0.0).inv(),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn study_examples() {
        let one = Quaternion::ONE.study_embed();
        assert_eq!(one, Matrix2::identity());
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let j = Quaternion::J.study_embed();
        assert_eq!(
            j,
            Matrix2::new(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
        );
        let ij = Quaternion::I.study_embed() * Quaternion::J.study_embed();
        assert_eq!(ij, Quaternion::K.study_embed());
    }

    #[test]
    fn ring_coercions() {
        let z = Complex64::new(0.3, -0.7);
        let h = Quaternion::from_complex(z);
        assert_eq!(h.complex_part(), z);
        assert!(RingTag::C.contains(h, 0.0));
        assert!(!RingTag::R.contains(h, 0.0));
        assert!(!RingTag::C.contains(Quaternion::J, 0.0));
        assert!(RingTag::R < RingTag::C && RingTag::C < RingTag::H);
    }

    proptest! {
        #[test]
        fn multiplication_is_associative_and_norm_multiplicative(a in arb_q(), b in arb_q(), c in arb_q()) {
            prop_assert!(((a * b) * c).approx_eq(a * (b * c), 1e-12));
            prop_assert!(((a * b).norm() - a.norm() * b.norm()).abs() < 1e-12);
            let n = a * a.conj();
            prop_assert!(n.approx_eq(Quaternion::real(a.norm_sqr()), 1e-12));
        }

        #[test]
        fn inverse_is_an_involution(a in arb_q()) {
            prop_assume!(a.norm() > 1e-3);
            let ai = a.inv().unwrap();
            prop_assert!((a * ai).approx_eq(Quaternion::ONE, 1e-12));
            prop_assert!((ai * a).approx_eq(Quaternion::ONE, 1e-12));
            prop_assert!(ai.inv().unwrap().approx_eq(a, 1e-12 * (1.0 + a.norm())));
        }

        #[test]
        fn study_is_a_ring_homomorphism(a in arb_q(), b in arb_q()) {
            prop_assert!(mat_close(&(a * b).study_embed(), &(a.study_embed() * b.study_embed()), 1e-12));
            prop_assert!(mat_close(&(a + b).study_embed(), &(a.study_embed() + b.study_embed()), 1e-12));
            prop_assert!(mat_close(&a.conj().study_embed(), &a.study_embed().adjoint(), 0.0));
            let (al, be) = a.study_parts();
            prop_assert_eq!(Quaternion::from_study_parts(al, be), a);
        }

        #[test]
        fn study_determinant_is_norm_squared(a in arb_q()) {
            let d = a.study_embed().determinant();
            prop_assert!((d.re - a.norm_sqr()).abs() < 1e-12);
            prop_assert!(d.im.abs() < 1e-12);
            let u = a.normalize().unwrap();
            prop_assert!((u.study_embed().determinant().norm() - 1.0).abs() < 1e-12);
        }
    }
}

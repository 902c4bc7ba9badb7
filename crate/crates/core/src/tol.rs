//! Default numerical thresholds.

/// Scalar zero test.
pub const EPS_ZERO: f64 = 1e-12;
/// Smallest admissible singular value, relative to the Frobenius norm.
pub const EPS_INV: f64 = 1e-9;
/// Gradient norm below which a point counts as critical.
pub const EPS_CRIT: f64 = 1e-8;
/// Orthogonality certificate carried by sampled group elements.
pub const EPS_GROUP: f64 = 1e-10;
/// Orthogonality tolerance accepted from user input.
pub const EPS_INPUT: f64 = 1e-9;
/// Relative clustering tolerance for eigenvalues of `XX*`.
pub const EPS_CLUSTER: f64 = 1e-8;
/// Null-space threshold for the critical model space.
pub const EPS_NULL: f64 = 1e-9;

//! Numeric tolerances shared across the crate.

/// Relative eigensolver residual, scaled by order and matrix norm.
pub const EIG: f64 = 1e-12;
/// Value comparisons (traces, coronals, energies).
pub const NUM: f64 = 1e-9;
/// Adjacent sorted eigenvalues closer than this share a multiplicity group.
pub const CLUSTER: f64 = 1e-7;
/// Max-norm of `P(A) - J` for Hoffman polynomials.
pub const HOFFMAN: f64 = 1e-8;
/// Minimum distance from an eigenvalue for coronal evaluation.
pub const SING: f64 = 1e-8;
/// Closed-form spectrum vs eigensolver, per sorted position.
pub const MATCH: f64 = 1e-8;
/// Relative agreement of characteristic-polynomial values.
pub const DET: f64 = 1e-9;
/// Root residual relative to the polynomial's coefficient norm.
pub const ROOT: f64 = 1e-10;

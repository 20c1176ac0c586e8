//! Numerical core for counting stationary points of the random
//! sphere-constrained least-squares loss `H(x) = ||Ax - b||^2 / 2`,
//! `||x||^2 = N`, with Gaussian `A` (entry variance `1/N`) and `b = sigma xi`.
//!
//! Stationary points are in bijection with the real roots of the secular
//! equation
//!
//! ```text
//! sum_i  s_i t_i / (lambda - s_i)^2  =  N / sigma^2
//! ```
//!
//! where `s_i` are the eigenvalues of `A^T A` and `t_i` the squared noise
//! projections onto the corresponding eigendirections. The crate provides
//!
//! * [`numerics`] — self-contained special functions, adaptive quadrature and
//!   safeguarded 1-D root finding / minimization,
//! * [`ensemble`] — reproducible random instances, spectral decomposition and
//!   Wishart eigenvalue densities (Marchenko-Pastur and empirical),
//! * [`stationary`] — per-instance root finding for the secular equation,
//!   losses, counts and the trivialization staircase,
//! * [`kacrice`] — the exact finite-`N` mean density of Lagrange multipliers
//!   and expected counts over windows, in overflow-safe log-space form,
//! * [`asymptotics`] — large-`N` closed forms: bulk density and count, Airy
//!   edge density and count, large-deviation rate of the smallest multiplier,
//!   and the typical minimal loss.

pub mod asymptotics;
pub mod ensemble;
pub mod kacrice;
pub mod numerics;
pub mod stationary;

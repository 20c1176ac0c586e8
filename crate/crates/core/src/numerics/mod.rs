//! Self-contained numerical kernels: log-gamma, scaled Bessel-Macdonald
//! functions, Airy functions, adaptive Gauss-Kronrod quadrature and
//! safeguarded 1-D root finding / minimization.
//!
//! Everything here is a pure function of its inputs and safe for unrestricted
//! concurrent use.

mod airy;
mod bessel;
mod gamma;
mod quad;
mod roots;

pub use airy::{airy_ai, airy_ai_prime, airy_ai_scaled, airy_tail};
pub use bessel::log_bessel_k_scaled;
pub use gamma::log_gamma;
pub use quad::{integrate, integrate_finite, Bound};
pub use roots::{find_root, minimize_unimodal, MinResult, RootResult};

use thiserror::Error;

/// Absolute/relative accuracy targets plus an iteration budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize) -> Result<Self, NumericsError> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter == 0 {
            return Err(NumericsError::InvalidTolerance {
                abs_tol,
                rel_tol,
                max_iter,
            });
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_iter,
        })
    }

    /// Combined target for a quantity of magnitude `scale`.
    pub fn target(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_iter: 200,
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum NumericsError {
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("accuracy target not reached after {iterations} iterations; best estimate {best:e} (error estimate {err_estimate:e})")]
    Accuracy {
        best: f64,
        err_estimate: f64,
        iterations: usize,
    },

    #[error("function evaluated at a pole: x = {x}")]
    Pole { x: f64 },

    #[error("invalid tolerance: abs_tol = {abs_tol}, rel_tol = {rel_tol}, max_iter = {max_iter}")]
    InvalidTolerance {
        abs_tol: f64,
        rel_tol: f64,
        max_iter: usize,
    },
}

//! Safeguarded scalar root finding (Brent) and derivative-free unimodal
//! minimization (golden section).

use super::{NumericsError, Tolerance};

/// Outcome of a bracketing root search.
#[derive(Debug, Clone, Copy)]
pub struct RootResult {
    pub x: f64,
    /// Residual f(x) at the returned point.
    pub f_value: f64,
    pub iterations: usize,
}

/// Outcome of a unimodal minimization.
#[derive(Debug, Clone, Copy)]
pub struct MinResult {
    pub x: f64,
    pub f_value: f64,
    pub iterations: usize,
}

/// Brent's method on a sign-changing bracket [lo, hi].
///
/// Inverse quadratic interpolation and secant steps are accepted only when
/// they stay inside the current bracket and shrink fast enough; otherwise the
/// step falls back to bisection, so convergence is guaranteed.
pub fn find_root<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: &Tolerance,
) -> Result<RootResult, NumericsError> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(RootResult { x: a, f_value: 0.0, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(RootResult { x: b, f_value: 0.0, iterations: 0 });
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(NumericsError::Bracket { lo, hi, f_lo: fa, f_hi: fb });
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = b - a;
    for iter in 1..=tol.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol.abs_tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(RootResult { x: b, f_value: fb, iterations: iter });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // attempt inverse quadratic / secant interpolation
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
    }
    Err(NumericsError::Accuracy {
        best: b,
        err_estimate: (c - b).abs(),
        iterations: tol.max_iter,
    })
}

const INV_GOLDEN: f64 = 0.618_033_988_749_894_8; // 1/phi
const INV_GOLDEN2: f64 = 0.381_966_011_250_105_2; // 1/phi^2

/// Golden-section minimization of a strictly unimodal function on [lo, hi].
pub fn minimize_unimodal<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: &Tolerance,
) -> Result<MinResult, NumericsError> {
    if !(lo < hi) {
        return Err(NumericsError::Domain {
            op: "minimize_unimodal",
            msg: format!("requires lo < hi, got [{lo}, {hi}]"),
        });
    }
    let mut a = lo;
    let mut b = hi;
    let mut x1 = a + INV_GOLDEN2 * (b - a);
    let mut x2 = a + INV_GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for iter in 1..=tol.max_iter {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + INV_GOLDEN2 * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_GOLDEN * (b - a);
            f2 = f(x2);
        }
        let (xm, fm) = if f1 < f2 { (x1, f1) } else { (x2, f2) };
        if (b - a).abs() <= tol.abs_tol.max(tol.rel_tol * xm.abs()) {
            return Ok(MinResult { x: xm, f_value: fm, iterations: iter });
        }
    }
    let (xm, fm) = if f1 < f2 { (x1, f1) } else { (x2, f2) };
    Err(NumericsError::Accuracy {
        best: xm,
        err_estimate: (b - a).abs(),
        iterations: tol.max_iter,
    })
}

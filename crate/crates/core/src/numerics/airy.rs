//! Airy function of the first kind, its derivative, and the upper tail
//! integral `airy_tail(x) = int_x^inf Ai(t) dt`.
//!
//! Branch layout (seams chosen where both sides agree to ~1e-11 absolute):
//!
//! * |x| <= 7           Maclaurin series with compensated summation
//! * x > 7              scaled asymptotic expansion in xi = (2/3) x^{3/2}
//! * x < -7             oscillatory asymptotic expansion
//!
//! The tail uses the same series for |x| <= 5 and asymptotic expansions for
//! x >= 9 and x <= -13; on the two remaining bands the asymptotic series
//! cannot reach 1e-10 absolute, so the tail is anchored at the asymptotic
//! endpoint and carried across by adaptive quadrature of Ai itself.

use super::quad::integrate_finite;
use super::Tolerance;

const AI_ZERO: f64 = 0.355_028_053_888_817_24; // Ai(0)  = 3^{-2/3}/Gamma(2/3)
const AIP_ZERO: f64 = -0.258_819_403_792_806_8; // Ai'(0) = -3^{-1/3}/Gamma(1/3)
const SQRT_PI: f64 = 1.772_453_850_905_516;
const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;

/// Ai(x).
pub fn airy_ai(x: f64) -> f64 {
    if x.abs() <= 7.0 {
        maclaurin(x).0
    } else if x > 0.0 {
        let (ai_s, _, xi) = asym_pos(x);
        ai_s * (-xi).exp()
    } else {
        asym_neg(-x).0
    }
}

/// Ai'(x).
pub fn airy_ai_prime(x: f64) -> f64 {
    if x.abs() <= 7.0 {
        maclaurin(x).1
    } else if x > 0.0 {
        let (_, aip_s, xi) = asym_pos(x);
        aip_s * (-xi).exp()
    } else {
        asym_neg(-x).1
    }
}

/// Scaled pair (e^xi Ai(x), e^xi Ai'(x), xi) with xi = (2/3) x^{3/2}.
///
/// Valid for x >= 7; callers integrating products with growing exponentials
/// use this to stay in log space where Ai itself underflows.
pub fn airy_ai_scaled(x: f64) -> (f64, f64, f64) {
    debug_assert!(x >= 7.0);
    asym_pos(x)
}

/// int_x^inf Ai(t) dt.
pub fn airy_tail(x: f64) -> f64 {
    if x.abs() <= 5.0 {
        maclaurin(x).2
    } else if x >= 9.0 {
        tail_asym_pos(x)
    } else if x > 5.0 {
        // anchor at 9, bridge by quadrature
        let tol = Tolerance::new(1e-14, 1e-12, 100).expect("static tolerance");
        let bridge = integrate_finite(airy_ai, x, 9.0, &tol).unwrap_or_else(|e| match e {
            super::NumericsError::Accuracy { best, .. } => best,
            _ => unreachable!("finite bounds"),
        });
        tail_asym_pos(9.0) + bridge
    } else if x <= -13.0 {
        asym_neg(-x).2
    } else {
        // x in (-13, -5): anchor at -13
        let tol = Tolerance::new(5e-13, 1e-12, 200).expect("static tolerance");
        let bridge = integrate_finite(airy_ai, -13.0, x, &tol).unwrap_or_else(|e| match e {
            super::NumericsError::Accuracy { best, .. } => best,
            _ => unreachable!("finite bounds"),
        });
        asym_neg(13.0).2 - bridge
    }
}

#[inline]
fn kahan_add(sum: &mut f64, comp: &mut f64, v: f64) {
    let y = v - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

/// Maclaurin series of Ai, Ai' and the tail, all driven by the two classical
/// solutions f (even-ish) and g (odd-ish) of w'' = x w.
fn maclaurin(x: f64) -> (f64, f64, f64) {
    let x3 = x * x * x;
    let mut fa = 1.0; // term of f
    let mut gb = x; // term of g
    let (mut f, mut g) = (1.0, x);
    let (mut fp, mut gp) = (0.0, 1.0);
    let (mut intf, mut intg) = (x, 0.5 * x * x);
    let (mut cf, mut cg, mut cfp, mut cgp, mut cif, mut cig) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    let mut k = 0_u32;
    loop {
        let kf = k as f64;
        fa *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        gb *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        k += 1;
        let kf = k as f64;
        kahan_add(&mut f, &mut cf, fa);
        kahan_add(&mut g, &mut cg, gb);
        if x != 0.0 {
            kahan_add(&mut fp, &mut cfp, fa * 3.0 * kf / x);
            kahan_add(&mut gp, &mut cgp, gb * (3.0 * kf + 1.0) / x);
        }
        kahan_add(&mut intf, &mut cif, fa * x / (3.0 * kf + 1.0));
        kahan_add(&mut intg, &mut cig, gb * x / (3.0 * kf + 2.0));
        if fa.abs() < 1e-19 * f.abs() && gb.abs() < 1e-19 * g.abs().max(1e-300) {
            break;
        }
        if k > 120 {
            break;
        }
    }
    let ai = AI_ZERO * f + AIP_ZERO * g;
    let aip = AI_ZERO * fp + AIP_ZERO * gp;
    let tail = 1.0 / 3.0 - (AI_ZERO * intf + AIP_ZERO * intg);
    (ai, aip, tail)
}

/// u_{k+1} from u_k: the universal Airy asymptotic coefficients.
#[inline]
fn next_u(u: f64, k: usize) -> f64 {
    let kf = k as f64;
    u * (6.0 * kf + 1.0) * (6.0 * kf + 5.0) / (72.0 * (kf + 1.0))
}

/// Scaled sums for x > 7: Ai = e^{-xi} su/(2 sqrt(pi) x^{1/4}),
/// Ai' = -e^{-xi} sv x^{1/4}/(2 sqrt(pi)).
fn asym_pos(x: f64) -> (f64, f64, f64) {
    let xi = 2.0 / 3.0 * x.powf(1.5);
    let mut su = 0.0;
    let mut sv = 0.0;
    let mut u = 1.0;
    let mut sign = 1.0;
    let mut pow = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..40 {
        let v = if k == 0 {
            1.0
        } else {
            let kf = k as f64;
            -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u
        };
        let tu = sign * u * pow;
        if tu.abs() >= prev {
            break;
        }
        prev = tu.abs();
        su += tu;
        sv += sign * v * pow;
        u = next_u(u, k);
        sign = -sign;
        pow /= xi;
    }
    let ai_s = su / (2.0 * SQRT_PI * x.powf(0.25));
    let aip_s = -sv * x.powf(0.25) / (2.0 * SQRT_PI);
    (ai_s, aip_s, xi)
}

/// Tail for x >= 9: e^{-xi}/(2 sqrt(pi) x^{3/4}) sum c_k xi^{-k} with
/// c_0 = 1, c_k = (-1)^k u_k - (k - 1/2) c_{k-1}.
fn tail_asym_pos(x: f64) -> f64 {
    let xi = 2.0 / 3.0 * x.powf(1.5);
    let mut sum = 0.0;
    let mut u = 1.0;
    let mut c = 1.0;
    let mut pow = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..60 {
        let t = c * pow;
        if t.abs() >= prev {
            break;
        }
        prev = t.abs();
        sum += t;
        let u_next = next_u(u, k);
        let sign = if (k + 1) % 2 == 0 { 1.0 } else { -1.0 };
        c = sign * u_next - (k as f64 + 0.5) * c;
        u = u_next;
        pow /= xi;
    }
    (-xi).exp() / (2.0 * SQRT_PI * x.powf(0.75)) * sum
}

/// Oscillatory expansions for x = -t, t >= 7. Returns (Ai, Ai', tail).
fn asym_neg(t: f64) -> (f64, f64, f64) {
    let xi = 2.0 / 3.0 * t.powf(1.5);
    let phi = xi - FRAC_PI_4;
    let (sin_phi, cos_phi) = phi.sin_cos();

    // u_k, v_k and the tail coefficient pair (c_k odd-only, s_k even-only):
    //   s_k = (k - 1/2) c_{k-1} - [k even] (-1)^{k/2} u_k
    //   c_k = [k odd] (-1)^{(k-1)/2} u_k - (k - 1/2) s_{k-1}
    const KMAX: usize = 40;
    let mut us = [0.0_f64; KMAX + 1];
    let mut vs = [0.0_f64; KMAX + 1];
    us[0] = 1.0;
    vs[0] = 1.0;
    for k in 0..KMAX {
        us[k + 1] = next_u(us[k], k);
        let kf = (k + 1) as f64;
        vs[k + 1] = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * us[k + 1];
    }
    let mut cs = [0.0_f64; KMAX + 1];
    let mut ss = [0.0_f64; KMAX + 1];
    ss[0] = -1.0;
    for k in 1..=KMAX {
        let kf = k as f64;
        ss[k] = (kf - 0.5) * cs[k - 1]
            - if k % 2 == 0 {
                sign_pow(k / 2) * us[k]
            } else {
                0.0
            };
        cs[k] = if k % 2 == 1 {
            sign_pow((k - 1) / 2) * us[k]
        } else {
            0.0
        } - (kf - 0.5) * ss[k - 1];
    }

    // alternating even/odd splits of u and v, truncated at the smallest term
    let sum_parity = |coef: &[f64], start: usize| -> f64 {
        let mut acc = 0.0;
        let mut prev = f64::INFINITY;
        let mut sign = 1.0;
        let mut idx = start;
        while idx < coef.len() {
            let term = sign * coef[idx] / xi.powi(idx as i32);
            if term.abs() >= prev {
                break;
            }
            prev = term.abs();
            acc += term;
            sign = -sign;
            idx += 2;
        }
        acc
    };
    let u_even = sum_parity(&us, 0);
    let u_odd = sum_parity(&us, 1);
    let v_even = sum_parity(&vs, 0);
    let v_odd = sum_parity(&vs, 1);

    let t4 = t.powf(0.25);
    let ai = (cos_phi * u_even + sin_phi * u_odd) / (SQRT_PI * t4);
    let aip = (sin_phi * v_even - cos_phi * v_odd) * t4 / SQRT_PI;

    // nonzero entries only, truncated at the smallest term
    let sum_min_term = |coef: &[f64], start: usize| -> f64 {
        let mut acc = 0.0;
        let mut prev = f64::INFINITY;
        let mut idx = start;
        while idx < coef.len() {
            let term = coef[idx] / xi.powi(idx as i32);
            if term.abs() >= prev {
                break;
            }
            prev = term.abs();
            acc += term;
            idx += 2;
        }
        acc
    };
    let c_sum = sum_min_term(&cs, 1);
    let s_sum = sum_min_term(&ss, 0);
    let tail = 1.0 - (cos_phi * c_sum + sin_phi * s_sum) / (SQRT_PI * t.powf(0.75));
    (ai, aip, tail)
}

#[inline]
fn sign_pow(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

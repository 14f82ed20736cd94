//! Error function of complex argument, the scaled complementary error
//! function erfcx, and overflow-safe products exp(a)*erfc(z).
//!
//! The overlap-factor integrand multiplies a growing exponential into a
//! decaying erfc; evaluated separately the factors overflow long before the
//! product leaves the representable range. [`exp_times_erfc`] assembles the
//! total exponent analytically and never forms the bare factors.
//!
//! erfcx in the right half-plane is computed by a midpoint-rule sum over
//! Gaussian samples plus a pole-correction term; the quadrature error of
//! that rule decays like exp(-pi^2/h^2), which at h = 0.4 is far below
//! double precision. A Maclaurin series covers the disc |z| <= 3 near the
//! imaginary axis and an asymptotic expansion takes over for |z| >= 100.
//! Accuracy is pinned by the committed golden table
//! (`tests/data/special_golden.csv`, regenerated by
//! `scripts/gen_golden_special.py`), which the acceptance suite checks at
//! 1e-12 relative.

use num_complex::Complex64;

use crate::error::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516;
/// Largest exponent exp() can take before overflowing to infinity.
const EXP_OVERFLOW: f64 = 709.78;

/// Primary midpoint-rule step and the alternate used when the argument sits
/// close to the imaginary axis on top of a node of the primary grid.
const STEP_A: f64 = 0.4;
const STEP_B: f64 = 0.34;

fn require_finite(v: Complex64, context: &'static str) -> Result<()> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { context })
    }
}

/// Distance from y to the nearest midpoint node (n + 1/2) h.
fn node_distance(y: f64, h: f64) -> f64 {
    let m = (y / h - 0.5).round();
    (y - (m + 0.5) * h).abs()
}

/// Midpoint-rule evaluation of erfcx for Re(z) >= 0 with step h:
/// (2 z h / pi) sum_n exp(-t_n^2)/(t_n^2 + z^2) over t_n = (n + 1/2) h,
/// plus the pole correction 2 exp(z^2 - 2 pi z / h)/(1 + exp(-2 pi z / h))
/// whenever Re(z) <= pi / h. The correction's exponent has non-positive
/// real part on that strip, so it never overflows.
fn erfcx_midpoint(z: Complex64, h: f64) -> Complex64 {
    let z2 = z * z;
    let n_terms = (7.5 / h).ceil() as usize;
    let mut s = Complex64::new(0.0, 0.0);
    for n in 0..n_terms {
        let t = (n as f64 + 0.5) * h;
        s += (-t * t).exp() / (z2 + t * t);
    }
    let mut v = s * z * (2.0 * h / std::f64::consts::PI);
    let pole_bound = std::f64::consts::PI / h;
    if z.re <= pole_bound {
        let c = 2.0 * pole_bound * z;
        v += 2.0 * (z2 - c).exp() / (Complex64::new(1.0, 0.0) + (-c).exp());
    }
    v
}

/// Maclaurin series for erf(z); adequate for |z| <= 3 where the largest
/// term stays near 1e3 and at most three digits cancel.
fn erf_series(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = z;
    let mut total = z;
    let mut n = 0usize;
    loop {
        n += 1;
        term = term * z2 / (n as f64);
        let c = term / (2 * n + 1) as f64;
        if n.is_multiple_of(2) {
            total += c;
        } else {
            total -= c;
        }
        if c.norm_sqr() < 1e-36 * total.norm_sqr() || n > 160 {
            break;
        }
    }
    total * std::f64::consts::FRAC_2_SQRT_PI
}

/// erfcx(z) for Re(z) >= 0.
pub(crate) fn erfcx_halfplane(z: Complex64) -> Complex64 {
    let r2 = z.norm_sqr();
    if r2 >= 1.0e4 {
        // 1/(z sqrt(pi)) (1 - 1/(2 z^2) + 3/(4 z^4) - 15/(8 z^6)); the
        // truncation error is below 1e-15 relative for |z| >= 100.
        if r2 > 1.0e300 {
            return 1.0 / (z * SQRT_PI);
        }
        let iz2 = 1.0 / (z * z);
        return (1.0 / (z * SQRT_PI)) * (1.0 + iz2 * (-0.5 + iz2 * (0.75 + iz2 * -1.875)));
    }
    if z.re >= 0.25 || r2 >= 9.0 {
        let mut h = STEP_A;
        if z.re < 0.5 {
            // Near the imaginary axis the summand and the pole correction
            // grow large individually around z ~ i t_n and cancel; picking
            // the grid whose nodes are farther away caps the cancellation.
            let y = z.im.abs();
            if node_distance(y, STEP_B) > node_distance(y, STEP_A) {
                h = STEP_B;
            }
        }
        return erfcx_midpoint(z, h);
    }
    (z * z).exp() * (Complex64::new(1.0, 0.0) - erf_series(z))
}

/// Error function of complex argument.
///
/// Computed in the first quadrant and unfolded through the exact
/// symmetries erf(-z) = -erf(z) and erf(conj z) = conj(erf z), so both
/// hold bit-exactly. Relative accuracy is better than 1e-12 for |z| <= 10;
/// components may legitimately overflow to infinity once |Im z| is large
/// against |Re z| (the function value itself exceeds the double range).
pub fn erf_complex(z: Complex64) -> Result<Complex64> {
    require_finite(z, "erf_complex argument")?;
    let zq = Complex64::new(z.re.abs(), z.im.abs());
    let base = if zq.norm_sqr() <= 9.0 {
        erf_series(zq)
    } else {
        Complex64::new(1.0, 0.0) - (-zq * zq).exp() * erfcx_halfplane(zq)
    };
    let v = match (z.re < 0.0, z.im < 0.0) {
        (false, false) => base,
        (false, true) => base.conj(),
        (true, false) => -base.conj(),
        (true, true) => -base,
    };
    Ok(v)
}

/// Scaled complementary error function exp(x^2) erfc(x) on the real line.
///
/// Relative accuracy better than 1e-12 on [-6, 1e7]; for x below roughly
/// -26.6 the value exceeds the double range and +infinity is returned.
pub fn erfcx_real(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            context: "erfcx_real argument",
        });
    }
    Ok(erfcx_real_inner(x))
}

pub(crate) fn erfcx_real_inner(x: f64) -> f64 {
    if x >= 0.0 {
        erfcx_halfplane(Complex64::new(x, 0.0)).re
    } else {
        // erfcx(x) = 2 exp(x^2) - erfcx(-x); the reflected term is in (0, 1]
        // so there is no cancellation.
        let e = if x * x > EXP_OVERFLOW {
            f64::INFINITY
        } else {
            (x * x).exp()
        };
        2.0 * e - erfcx_halfplane(Complex64::new(-x, 0.0)).re
    }
}

/// exp(a) * erfc(z), assembled without forming either factor.
///
/// For Re(z) >= 0 the product is exp(a - z^2 + ln erfcx(z)) in one
/// exponential, so exponents up to the overflow limit are fine whenever the
/// mathematical result is representable. For Re(z) < 0 the reflection
/// erfc(z) = 2 - erfc(-z) is applied first.
pub fn exp_times_erfc(a: Complex64, z: Complex64) -> Result<Complex64> {
    require_finite(a, "exp_times_erfc exponent")?;
    require_finite(z, "exp_times_erfc argument")?;
    if z.re >= 0.0 {
        scaled_product(a, z)
    } else {
        // 2 exp(a) - exp(a) erfc(-z); the subtracted term is bounded by
        // 2|exp(a)| so the leading term decides overflow.
        if a.re > EXP_OVERFLOW - std::f64::consts::LN_2 {
            return Err(Error::Overflow { exponent: a.re });
        }
        let lead = 2.0 * a.exp();
        let tail = scaled_product(a, -z)?;
        Ok(lead - tail)
    }
}

/// exp(a - z^2) * erfcx(z) for Re(z) >= 0 via a single exponential.
fn scaled_product(a: Complex64, z: Complex64) -> Result<Complex64> {
    let v = erfcx_halfplane(z);
    let total = a - z * z + v.ln();
    if total.re > EXP_OVERFLOW {
        return Err(Error::Overflow { exponent: total.re });
    }
    Ok(total.exp())
}

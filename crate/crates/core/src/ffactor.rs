//! The pulse/focus overlap factor F(chi, chi0, rho) and its closed-form
//! asymptotic limits.
//!
//! F carries every dependence of the signal on the pulse durations, the
//! pump Rayleigh range, and the longitudinal focus offset:
//!
//! F = sqrt((1 + 2 rho^2)/3) chi^2 e^{2(chi^2 - chi0^2)}
//!     \int dkappa e^{-kappa^2}
//!     | sum_{l = +-1} e^{2 l (rho kappa - i chi0) chi}
//!       [1 - erf(l (rho kappa - i chi0) + chi)] |^2.
//!
//! The e^{2 chi^2} prefactor alone overflows doubles for chi above ~26.6
//! while F itself stays order one, so the prefactor is split evenly into
//! the two l-terms and folded into their exponents; each term is then an
//! overflow-free [`special::exp_times_erfc`] evaluation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{self, QuadOptions};
use crate::special;

/// Dimensionless arguments of the overlap factor: the scaled Rayleigh
/// range, the scaled longitudinal offset, and the duration ratio T/tau.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FArgs {
    pub chi: f64,
    pub chi0: f64,
    pub rho: f64,
}

impl FArgs {
    pub fn new(chi: f64, chi0: f64, rho: f64) -> Result<Self> {
        if !(chi.is_finite() && chi0.is_finite() && rho.is_finite()) {
            return Err(Error::NonFinite { context: "FArgs" });
        }
        if chi < 0.0 {
            return Err(Error::InvalidParameter {
                name: "chi",
                reason: format!("scaled Rayleigh range must be >= 0, got {chi}"),
            });
        }
        if rho <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "rho",
                reason: format!("duration ratio must be positive, got {rho}"),
            });
        }
        Ok(Self { chi, chi0, rho })
    }
}

/// Default relative quadrature tolerance: far below the few-percent
/// physics tolerances at negligible cost.
pub const DEFAULT_TOL: f64 = 1.0e-8;

/// The largest tolerance callers may request.
pub const MAX_TOL: f64 = 1.0e-4;

#[derive(Debug, Clone, Copy)]
pub struct FEval {
    pub value: f64,
    /// Absolute quadrature error estimate.
    pub error: f64,
    pub evals: usize,
}

/// |sum_l exp-erfc terms|^2 with the prefactor folded in; shared by the
/// quadrature and the Gauss–Hermite cross-check.
fn kernel(args: &FArgs, kappa: f64) -> Result<f64> {
    let FArgs { chi, chi0, rho } = *args;
    let u = Complex64::new(rho * kappa, -chi0);
    let mut s = Complex64::new(0.0, 0.0);
    for l in [1.0, -1.0] {
        let a = Complex64::new(chi * chi - chi0 * chi0, 0.0) + 2.0 * l * u * chi;
        let z = l * u + chi;
        s += special::exp_times_erfc(a, z)?;
    }
    Ok(s.norm_sqr())
}

fn prefactor(args: &FArgs) -> f64 {
    ((1.0 + 2.0 * args.rho * args.rho) / 3.0).sqrt() * args.chi * args.chi
}

/// Overlap factor by adaptive quadrature with relative tolerance `tol`.
pub fn f(args: &FArgs, tol: f64) -> Result<f64> {
    Ok(f_with_budget(args, tol, 4096)?.value)
}

/// Overlap factor at the default tolerance.
pub fn f_default(args: &FArgs) -> Result<f64> {
    f(args, DEFAULT_TOL)
}

/// As [`f`], but with an explicit interval budget and a reported error
/// estimate. Doubling the budget must change the value by less than the
/// reported estimate; the invariant suite checks this.
pub fn f_with_budget(args: &FArgs, tol: f64, max_intervals: usize) -> Result<FEval> {
    FArgs::new(args.chi, args.chi0, args.rho)?;
    if !(tol > 0.0 && tol <= MAX_TOL) {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: format!("relative tolerance must lie in (0, {MAX_TOL}], got {tol}"),
        });
    }
    if args.chi == 0.0 {
        // the chi^2 prefactor kills the integral exactly
        return Ok(FEval {
            value: 0.0,
            error: 0.0,
            evals: 0,
        });
    }
    let cut = (1.0f64 / tol).ln().sqrt() + 6.0;
    // seed the subdivision with the branch switches of the l-terms at
    // rho |kappa| = chi and the width of the e^{-(rho kappa)^2} structure
    let mut pts = vec![-cut, 0.0, cut];
    for scale in [args.chi / args.rho, 1.0 / args.rho, 5.0 / args.rho] {
        if scale.is_finite() && scale > 0.0 && scale < cut {
            pts.push(scale);
            pts.push(-scale);
        }
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let eval_error = std::cell::RefCell::new(None);
    let opts = QuadOptions {
        rel_tol: tol,
        abs_tol: 0.0,
        max_intervals,
        context: "overlap factor",
    };
    let result = quad::adaptive_with_breaks(
        |kappa| match kernel(args, kappa) {
            Ok(v) => (-kappa * kappa).exp() * v,
            Err(e) => {
                // surfaced after the quadrature finishes
                eval_error.borrow_mut().get_or_insert(e);
                0.0
            }
        },
        &pts,
        &opts,
    );
    // integrand failures outrank quadrature accuracy complaints
    if let Some(e) = eval_error.into_inner() {
        return Err(e);
    }
    let r = result?;
    let p = prefactor(args);
    Ok(FEval {
        value: p * r.value,
        error: p * r.error,
        evals: r.evals,
    })
}

/// Fixed-order Gauss–Hermite evaluation; an independent cross-check of the
/// adaptive path for moderate rho * chi, where the non-Gaussian factor is
/// resolved by polynomials.
pub fn f_gauss_hermite(args: &FArgs, order: usize) -> Result<f64> {
    FArgs::new(args.chi, args.chi0, args.rho)?;
    if args.chi == 0.0 {
        return Ok(0.0);
    }
    let (nodes, weights) = quad::gauss_hermite(order);
    let mut total = 0.0;
    for (x, w) in nodes.iter().zip(weights.iter()) {
        total += w * kernel(args, *x)?;
    }
    Ok(prefactor(args) * total)
}

/// T-independent coefficient of the large-probe-duration limit: the limit
/// itself is (tau/T) * sqrt(2 pi / 3) u^2 erfcx(u) with u = 8 z_R / tau,
/// and the caller multiplies the (tau/T) factor so the limit stays usable
/// at finite T. Arguments are natural-unit values.
pub fn f_limit_large_t(z_r: f64, tau: f64) -> f64 {
    let u = 8.0 * z_r / tau;
    (2.0 * std::f64::consts::PI / 3.0).sqrt() * u * u * special::erfcx_real_inner(u)
}

/// Large-Rayleigh-range limit: 4 / sqrt(3 pi).
pub fn f_limit_large_zr() -> f64 {
    4.0 / (3.0 * std::f64::consts::PI).sqrt()
}

/// Equal durations (tau = T) with z_R much shorter than the pulse:
/// (128/3) sqrt(pi) (z_R/tau)^2.
pub fn f_limit_equal_durations_small_zr(z_r: f64, tau: f64) -> f64 {
    let r = z_r / tau;
    128.0 / 3.0 * std::f64::consts::PI.sqrt() * r * r
}

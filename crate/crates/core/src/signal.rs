//! Reduced far-field observables of the flipped-polarization signal:
//! differential and total photon numbers, divergences, polarimetry
//! thresholds, the circular-probe closed form, the two-crossing background
//! model, spectral width, scaling exponents, and the comparison against the
//! conventional phase-shift estimate.
//!
//! [`SignalEval`] caches the overlap factor and all scenario-derived
//! prefactors once; the free functions mirror it for one-shot use. Angular
//! densities are per `dphi dtheta theta`, so integrating `value * theta`
//! over theta and phi gives photon counts. All counts are absolute photon
//! numbers; divide by the probe photon count for relative yields.

use serde::Serialize;

use crate::beams::{Background, ProbePulse, Scenario, Warning};
use crate::error::{Error, Result};
use crate::ffactor::{self, FArgs};
use crate::quad::{self, QuadOptions};
use crate::units::CONSTANTS;

/// Direction in the far field; polar angle measured against the probe
/// forward axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularPoint {
    pub theta: f64,
    pub phi: f64,
}

impl AngularPoint {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(theta.is_finite() && phi.is_finite()) {
            return Err(Error::NonFinite {
                context: "AngularPoint",
            });
        }
        if theta < 0.0 {
            return Err(Error::InvalidParameter {
                name: "theta",
                reason: format!("polar angle must be >= 0, got {theta}"),
            });
        }
        Ok(Self { theta, phi })
    }

    /// From Cartesian angle coordinates X = theta cos(phi), Y = theta sin(phi).
    pub fn from_cartesian(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(Error::NonFinite {
                context: "AngularPoint::from_cartesian",
            });
        }
        Ok(Self {
            theta: x.hypot(y),
            phi: y.atan2(x).rem_euclid(2.0 * std::f64::consts::PI),
        })
    }

    pub fn cartesian(&self) -> (f64, f64) {
        (self.theta * self.phi.cos(), self.theta * self.phi.sin())
    }
}

/// Summary of one scenario evaluation, mirrored by the CLI's
/// machine-readable output.
#[derive(Debug, Clone, Serialize)]
pub struct SignalReport {
    pub n_perp: f64,
    pub n_perp_over_n: f64,
    pub f_value: f64,
    pub chi: f64,
    pub chi0: f64,
    pub rho: f64,
    pub theta_probe_phi0: f64,
    pub theta_probe_phi90: f64,
    pub theta_perp_phi0: f64,
    pub theta_perp_phi90: f64,
    /// (phi, theta(phi), theta_perp(phi)) sampled over one period.
    pub divergence_by_phi: Vec<(f64, f64, f64)>,
    pub n_perp_discernible: Option<f64>,
    pub warnings: Vec<Warning>,
}

/// Relative width below which two probe waists count as circular.
const CIRCULAR_EPS: f64 = 1.0e-12;
/// Relative distance to the singular reorganization locus of the
/// closed-form threshold expressions below which the direct numerical
/// integral takes over.
const GAP_GUARD: f64 = 1.0e-9;

/// Probe-only fields of the far-field probe distribution.
#[derive(Debug, Clone, Copy)]
struct ProbeView {
    n: f64,
    omega: f64,
    w1: f64,
    w2: f64,
}

fn probe_d2n_view(p: &ProbeView, point: &AngularPoint) -> f64 {
    let (s, c) = point.phi.sin_cos();
    let wt = p.omega * point.theta;
    p.n / (2.0 * std::f64::consts::PI)
        * p.omega
        * p.omega
        * p.w1
        * p.w2
        * (-0.5 * wt * wt * (p.w1 * p.w1 * c * c + p.w2 * p.w2 * s * s)).exp()
}

fn probe_divergence_view(p: &ProbeView, phi: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    2.0 / (p.omega * (p.w1 * p.w1 * c * c + p.w2 * p.w2 * s * s).sqrt())
}

/// Far-field angular density of the probe photons per `dphi dtheta theta`.
pub fn probe_d2n(probe: &ProbePulse, point: &AngularPoint) -> f64 {
    probe_d2n_view(&probe_view(probe), point)
}

/// Radial 1/e^2 divergence of the probe beam.
pub fn probe_divergence(probe: &ProbePulse, phi: f64) -> f64 {
    probe_divergence_view(&probe_view(probe), phi)
}

fn probe_view(probe: &ProbePulse) -> ProbeView {
    ProbeView {
        n: probe.photon_count(),
        omega: probe.photon_energy(),
        w1: probe.waist_1(),
        w2: probe.waist_2(),
    }
}

/// Scenario evaluation context with the overlap factor and geometric
/// prefactors computed once.
#[derive(Debug, Clone)]
pub struct SignalEval {
    n: f64,
    omega: f64,
    pulse_energy: f64,
    w: f64,
    w0: f64,
    w1: f64,
    w2: f64,
    r1: f64,
    r2: f64,
    /// Transverse offsets in the ellipse frame, scaled by the effective waist.
    xt: f64,
    yt: f64,
    z_r: f64,
    tau: f64,
    purity: Option<f64>,
    background: Option<Background>,
    f_args: FArgs,
    f_value: f64,
    /// F at the same (chi, rho) but zero longitudinal offset.
    f_zero: f64,
    warnings: Vec<Warning>,
}

impl SignalEval {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        Self::with_tol(scenario, ffactor::DEFAULT_TOL)
    }

    pub fn with_tol(scenario: &Scenario, tol: f64) -> Result<Self> {
        let args = crate::beams::f_args(scenario);
        let f_value = ffactor::f(&args, tol)?;
        let f_zero = if args.chi0 == 0.0 {
            f_value
        } else {
            ffactor::f(&FArgs { chi0: 0.0, ..args }, tol)?
        };
        let w = scenario.pump.effective_waist();
        let (a, b) = scenario.offsets_in_ellipse_frame();
        Ok(Self {
            n: scenario.probe.photon_count(),
            omega: scenario.probe.photon_energy(),
            pulse_energy: scenario.pump.pulse_energy(),
            w,
            w0: scenario.pump.waist(),
            w1: scenario.probe.waist_1(),
            w2: scenario.probe.waist_2(),
            r1: scenario.probe.waist_1() / w,
            r2: scenario.probe.waist_2() / w,
            xt: a / w,
            yt: b / w,
            z_r: scenario.pump.rayleigh_range(),
            tau: scenario.pump.duration(),
            purity: scenario.purity(),
            background: scenario.background(),
            f_args: args,
            f_value,
            f_zero,
            warnings: scenario.warnings(),
        })
    }

    pub fn f_value(&self) -> f64 {
        self.f_value
    }

    pub fn f_args(&self) -> FArgs {
        self.f_args
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    /// 1 + 2 (r1 + r2)^2, the waist-mixing denominator.
    fn big_d(&self) -> f64 {
        1.0 + 2.0 * (self.r1 + self.r2) * (self.r1 + self.r2)
    }

    /// r1^2 cos^2 + r2^2 sin^2.
    fn q_of(&self, phi: f64) -> f64 {
        let (s, c) = phi.sin_cos();
        self.r1 * self.r1 * c * c + self.r2 * self.r2 * s * s
    }

    /// Angular-exponent combination q + 2 (r1 r2)^2.
    fn e_s(&self, phi: f64) -> f64 {
        self.q_of(phi) + 2.0 * (self.r1 * self.r2) * (self.r1 * self.r2)
    }

    /// (r1 + r2)^2 q - (r1 r2)^2; positive for positive waists. The
    /// closed-form threshold expressions reorganize around its zero, so
    /// values inside `GAP_GUARD` of zero divert to the numerical path.
    fn gap(&self, phi: f64) -> f64 {
        (self.r1 + self.r2) * (self.r1 + self.r2) * self.q_of(phi)
            - (self.r1 * self.r2) * (self.r1 * self.r2)
    }

    fn gap_near_singular(&self, phi: f64) -> bool {
        let scale = (self.r1 + self.r2) * (self.r1 + self.r2) * self.q_of(phi)
            + (self.r1 * self.r2) * (self.r1 * self.r2);
        self.gap(phi).abs() < GAP_GUARD * scale
    }

    /// 4 ([1 + 2 r2^2] (x0/w)^2 + [1 + 2 r1^2] (y0/w)^2); the transverse
    /// offset exponent of the totals is -offset_numerator / D.
    fn offset_numerator(&self) -> f64 {
        4.0 * ((1.0 + 2.0 * self.r2 * self.r2) * self.xt * self.xt
            + (1.0 + 2.0 * self.r1 * self.r1) * self.yt * self.yt)
    }

    /// 4 alpha^4 / (25 (3 pi)^{3/2}).
    fn c_const() -> f64 {
        let alpha = CONSTANTS.fine_structure;
        4.0 * alpha.powi(4) / (25.0 * (3.0 * std::f64::consts::PI).powf(1.5))
    }

    /// (W/m * omega/m)^2 (lambda_C / w0)^4.
    fn k_factor(&self) -> f64 {
        let m = CONSTANTS.electron_mass;
        let a = (self.pulse_energy / m) * (self.omega / m);
        let lc_over_w0 = 1.0 / (m * self.w0);
        a * a * lc_over_w0.powi(4)
    }

    /// Flip-to-probe density ratio in forward direction.
    fn forward_ratio(&self) -> f64 {
        Self::c_const() * self.k_factor() / self.big_d()
            * (-self.offset_numerator() / self.big_d()).exp()
            * self.f_value
    }

    /// Differential flipped-photon number per `dphi dtheta theta`.
    pub fn d2n_perp(&self, point: &AngularPoint) -> f64 {
        let m = CONSTANTS.electron_mass;
        let d = self.big_d();
        let a = (self.pulse_energy / m) * (1.0 / (m * self.w));
        let b = (self.w / self.w0) * (self.omega / m);
        let pref = self.n / (2.0 * std::f64::consts::PI)
            * Self::c_const()
            * a
            * a
            * b.powi(4)
            * (self.r1 * self.r2 / d);
        let wt = self.omega * point.theta;
        let angular = (-0.5 * wt * wt * self.w * self.w * self.e_s(point.phi) / d).exp();
        let offset = (-self.offset_numerator() / d).exp();
        pref * angular * offset * self.f_value
    }

    /// Total flipped-photon number (closed-form Gaussian integral of the
    /// angular density).
    pub fn n_perp_total(&self) -> f64 {
        let d1 = 1.0 + 2.0 * self.r1 * self.r1;
        let d2 = 1.0 + 2.0 * self.r2 * self.r2;
        self.n * Self::c_const() * self.k_factor() / (d1 * d2).sqrt()
            * (-self.offset_numerator() / self.big_d()).exp()
            * self.f_value
    }

    pub fn n_perp_over_n(&self) -> f64 {
        self.n_perp_total() / self.n
    }

    /// Point-probe limit w1, w2 -> 0 with the transverse offset exponential.
    pub fn n_perp_point(&self) -> f64 {
        self.n
            * Self::c_const()
            * self.k_factor()
            * (-4.0 * (self.xt * self.xt + self.yt * self.yt)).exp()
            * self.f_value
    }

    /// Point-probe limit with all spatio-temporal offsets dropped.
    pub fn n_perp_point_nooffset(&self) -> f64 {
        self.n * Self::c_const() * self.k_factor() * self.f_zero
    }

    /// Radial 1/e^2 divergence of the signal photons; never below the probe
    /// divergence.
    pub fn signal_divergence(&self, phi: f64) -> f64 {
        let q = self.q_of(phi);
        let base = 2.0 / (self.omega * self.w * q.sqrt());
        let widen = self.big_d().sqrt();
        let narrow = (1.0 + 2.0 * (self.r1 * self.r2) * (self.r1 * self.r2) / q).sqrt();
        base * widen / narrow
    }

    /// Angular cutoff beyond which every admissible density is negligible
    /// against its forward peak.
    pub fn theta_cap(&self) -> f64 {
        12.0 / (self.omega * self.w1.min(self.w2).min(self.w))
    }

    /// Polar angle where the flip-to-probe density ratio reaches the purity.
    pub fn theta_equal(&self, phi: f64) -> Result<f64> {
        let purity = self.purity.ok_or(Error::PurityRequired)?;
        let r0 = self.forward_ratio();
        if r0 <= 0.0 {
            return Err(Error::BelowPurityFloor { log_argument: r0 });
        }
        if self.gap_near_singular(phi) {
            return self.theta_equal_numeric(phi, purity);
        }
        let t2 = self.big_d() * (purity / r0).ln()
            / (self.omega * self.omega * self.w * self.w * self.gap(phi));
        if t2 < 0.0 {
            return Err(Error::ThetaEqualDomain {
                phi,
                factor: "purity below the forward flip ratio",
                theta_sq: t2,
            });
        }
        Ok(t2.sqrt())
    }

    /// Bisection on the density ratio; the fallback near the singular locus
    /// of the closed form.
    fn theta_equal_numeric(&self, phi: f64, purity: f64) -> Result<f64> {
        let probe = self.probe_view();
        let ratio = |theta: f64| {
            let p = AngularPoint { theta, phi };
            self.d2n_perp(&p) / probe_d2n_view(&probe, &p)
        };
        if ratio(0.0) > purity {
            return Err(Error::ThetaEqualDomain {
                phi,
                factor: "purity below the forward flip ratio",
                theta_sq: -1.0,
            });
        }
        let cap = self.theta_cap();
        let mut lo = 0.0;
        let mut hi = cap / 64.0;
        while ratio(hi) < purity {
            lo = hi;
            hi *= 2.0;
            if hi > cap {
                return Err(Error::ThetaEqualDomain {
                    phi,
                    factor: "no crossing below the angular cutoff",
                    theta_sq: cap * cap,
                });
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if ratio(mid) < purity {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1.0e-15 * hi {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    fn probe_view(&self) -> ProbeView {
        ProbeView {
            n: self.n,
            omega: self.omega,
            w1: self.w1,
            w2: self.w2,
        }
    }

    /// Azimuthal density of the flipped photons, all polar angles included.
    pub fn dn_perp_dphi(&self, phi: f64) -> f64 {
        self.n / (2.0 * std::f64::consts::PI)
            * Self::c_const()
            * self.k_factor()
            * self.f_value
            * (self.r1 * self.r2 / self.e_s(phi))
            * (-self.offset_numerator() / self.big_d()).exp()
    }

    /// Azimuthal density of the discernible flipped photons, emitted beyond
    /// the purity crossing angle.
    pub fn dn_perp_gt_dphi(&self, phi: f64) -> Result<f64> {
        let purity = self.purity.ok_or(Error::PurityRequired)?;
        // surfaces the same domain errors as the threshold angle
        let theta_eq = self.theta_equal(phi)?;
        if self.gap_near_singular(phi) {
            return self.dn_perp_gt_dphi_numeric(phi, theta_eq);
        }
        let d = self.big_d();
        let q = self.q_of(phi);
        let gap = self.gap(phi);
        let exponent = d * q / gap;
        let ln_l = (Self::c_const() * self.k_factor() * self.f_value / (d * purity)).ln();
        let off = -2.0
            * ((1.0 + 2.0 * self.r2 * self.r2) * self.xt * self.xt
                + (1.0 + 2.0 * self.r1 * self.r1) * self.yt * self.yt)
            * q
            / gap;
        Ok(self.n / (2.0 * std::f64::consts::PI)
            * purity
            * (d * self.r1 * self.r2 / self.e_s(phi))
            * (0.5 * exponent * ln_l + off).exp())
    }

    /// Direct polar integration of the angular density from the crossing
    /// angle; the fallback when the closed form reorganizes singularly.
    fn dn_perp_gt_dphi_numeric(&self, phi: f64, theta_eq: f64) -> Result<f64> {
        let opts = QuadOptions {
            rel_tol: 1.0e-10,
            abs_tol: 0.0,
            max_intervals: 2048,
            context: "discernible azimuthal density",
        };
        let hi = self.theta_cap().max(theta_eq * 1.5);
        let r = quad::adaptive(
            |theta| theta * self.d2n_perp(&AngularPoint { theta, phi }),
            theta_eq,
            hi,
            &opts,
        )?;
        Ok(r.value)
    }

    fn is_circular(&self) -> bool {
        (self.w1 - self.w2).abs() <= CIRCULAR_EPS * self.w1.max(self.w2)
    }

    /// Total discernible count. Closed form for circular probes, adaptive
    /// azimuthal integration of the per-phi density otherwise.
    pub fn n_perp_gt(&self) -> Result<f64> {
        if self.is_circular() {
            return self.n_perp_gt_circular();
        }
        let err = std::cell::RefCell::new(None);
        let r = quad::trapezoid_periodic(
            |phi| match self.dn_perp_gt_dphi(phi) {
                Ok(v) => v,
                Err(e) => {
                    err.borrow_mut().get_or_insert(e);
                    0.0
                }
            },
            2.0 * std::f64::consts::PI,
            1.0e-10,
            "discernible count, azimuthal integral",
        );
        if let Some(e) = err.into_inner() {
            return Err(e);
        }
        Ok(r?.value)
    }

    /// Closed-form total discernible count for circular probes.
    pub fn n_perp_gt_circular(&self) -> Result<f64> {
        if !self.is_circular() {
            return Err(Error::CircularProbeRequired {
                w1: self.w1,
                w2: self.w2,
            });
        }
        let purity = self.purity.ok_or(Error::PurityRequired)?;
        // same solvability condition as the threshold angle itself
        self.theta_equal(0.0)?;
        let r2 = self.r1 * self.r1;
        let d = 1.0 + 8.0 * r2;
        let m = CONSTANTS.electron_mass;
        let amp = Self::c_const().sqrt()
            * (self.pulse_energy / m)
            * (self.omega / m)
            * (1.0 / (m * self.w0)).powi(2)
            * (self.f_value / purity).sqrt()
            / d.sqrt();
        let exponent = 2.0 + (1.0 + 2.0 * r2) / (3.0 * r2);
        let off = -2.0 * (1.0 + 2.0 * r2) / (3.0 * r2) * (self.xt * self.xt + self.yt * self.yt);
        Ok(self.n * purity * d / (1.0 + 2.0 * r2) * (exponent * amp.ln() + off).exp())
    }

    /// The two crossing angles of the purity condition in the presence of
    /// the wide background component. The inner angle clamps to zero when
    /// the signal is discernible already in forward direction; the outer is
    /// infinite when the widened component never overtakes the signal.
    pub fn background_crossings(&self, phi: f64) -> Result<(f64, f64)> {
        let purity = self.purity.ok_or(Error::PurityRequired)?;
        let bg = self.background.ok_or(Error::BackgroundRequired)?;
        let r0 = self.forward_ratio();
        if r0 <= 0.0 {
            return Err(Error::BelowPurityFloor { log_argument: r0 });
        }
        let d = self.big_d();
        let q = self.q_of(phi);
        let ow2 = self.omega * self.omega * self.w * self.w;
        // the narrow component carries N/(1 + b/eps^2) photons
        let amp_narrow = 1.0 + bg.b / (bg.epsilon * bg.epsilon);
        let t_low_sq = (d * (purity / (amp_narrow * r0)).ln() / (ow2 * self.gap(phi))).max(0.0);
        // wide component: divergence widened by 1/eps at weight b
        let r12 = self.r1 * self.r2;
        let eps2 = bg.epsilon * bg.epsilon;
        let denom_wide =
            r12 * r12 - q * (eps2 * (self.r1 + self.r2) * (self.r1 + self.r2) + 0.5 * (eps2 - 1.0));
        let amp_wide = 1.0 / eps2 + 1.0 / bg.b;
        let log_wide = (amp_wide * r0 / purity).ln();
        if log_wide <= 0.0 {
            return Err(Error::NoDiscernibleWindow {
                theta_low_sq: t_low_sq,
                theta_high_sq: d * log_wide / (ow2 * denom_wide.abs().max(f64::MIN_POSITIVE)),
            });
        }
        let t_high_sq = if denom_wide > 0.0 {
            d * log_wide / (ow2 * denom_wide)
        } else {
            f64::INFINITY
        };
        if t_high_sq <= t_low_sq {
            return Err(Error::NoDiscernibleWindow {
                theta_low_sq: t_low_sq,
                theta_high_sq: t_high_sq,
            });
        }
        Ok((t_low_sq.sqrt(), t_high_sq.sqrt()))
    }

    /// Discernible count restricted to the background window; polar angles
    /// integrated numerically, azimuth by quadrature. The wide background
    /// only removes signal, so the result never exceeds the window-free
    /// count in practice.
    pub fn n_perp_gt_background(&self) -> Result<f64> {
        let err = std::cell::RefCell::new(None);
        let cap = self.theta_cap();
        let inner = |phi: f64| -> Result<f64> {
            let (lo, hi) = self.background_crossings(phi)?;
            let hi = hi.min(cap.max(lo));
            if hi <= lo {
                return Ok(0.0);
            }
            let opts = QuadOptions {
                rel_tol: 1.0e-9,
                abs_tol: 0.0,
                max_intervals: 2048,
                context: "background-window polar integral",
            };
            Ok(quad::adaptive(
                |theta| theta * self.d2n_perp(&AngularPoint { theta, phi }),
                lo,
                hi,
                &opts,
            )?
            .value)
        };
        let r = quad::trapezoid_periodic(
            |phi| match inner(phi) {
                Ok(v) => v,
                Err(e) => {
                    err.borrow_mut().get_or_insert(e);
                    0.0
                }
            },
            2.0 * std::f64::consts::PI,
            1.0e-8,
            "background-window count, azimuthal integral",
        );
        if let Some(e) = err.into_inner() {
            return Err(e);
        }
        Ok(r?.value)
    }

    /// Probe-energy scaling exponents of the discernible azimuthal density
    /// along the two ellipse axes; both exceed 2 for all waists.
    pub fn scaling_exponents(&self) -> (f64, f64) {
        let b = |ra: f64, rb: f64| 2.0 + (1.0 + 2.0 * rb * rb) / (ra * ra + 2.0 * ra * rb);
        (b(self.r1, self.r2), b(self.r2, self.r1))
    }

    /// Conventional constant-phase-shift estimate of the flipped-photon
    /// total in the aligned point-probe configuration.
    pub fn conventional_estimate(&self) -> f64 {
        let alpha = CONSTANTS.fine_structure;
        let zr_tau = self.z_r / self.tau;
        self.n * 2048.0 * alpha.powi(4) / (225.0 * std::f64::consts::PI)
            * self.k_factor()
            * zr_tau
            * zr_tau
    }

    /// Ratio of the conventional estimate to the aligned point-probe total.
    pub fn conventional_ratio(&self) -> f64 {
        let zr_tau = self.z_r / self.tau;
        512.0 * (std::f64::consts::PI / 3.0).sqrt() * zr_tau * zr_tau / self.f_zero
    }

    /// Full report for one scenario.
    pub fn report(&self) -> SignalReport {
        let probe = self.probe_view();
        let total = self.n_perp_total();
        let steps = 24;
        let divergence_by_phi = (0..=steps)
            .map(|i| {
                let phi = 2.0 * std::f64::consts::PI * i as f64 / steps as f64;
                (
                    phi,
                    probe_divergence_view(&probe, phi),
                    self.signal_divergence(phi),
                )
            })
            .collect();
        SignalReport {
            n_perp: total,
            n_perp_over_n: total / self.n,
            f_value: self.f_value,
            chi: self.f_args.chi,
            chi0: self.f_args.chi0,
            rho: self.f_args.rho,
            theta_probe_phi0: probe_divergence_view(&probe, 0.0),
            theta_probe_phi90: probe_divergence_view(&probe, std::f64::consts::FRAC_PI_2),
            theta_perp_phi0: self.signal_divergence(0.0),
            theta_perp_phi90: self.signal_divergence(std::f64::consts::FRAC_PI_2),
            divergence_by_phi,
            n_perp_discernible: match (self.purity, self.background) {
                (Some(_), Some(_)) => self.n_perp_gt_background().ok(),
                (Some(_), None) => self.n_perp_gt().ok(),
                _ => None,
            },
            warnings: self.warnings.clone(),
        }
    }

    /// Ratio of the angular flipped density to the probe density; the
    /// quantity the purity threshold is defined on.
    pub fn flip_to_probe_ratio(&self, point: &AngularPoint) -> f64 {
        self.d2n_perp(point) / probe_d2n_view(&self.probe_view(), point)
    }

    #[cfg(test)]
    pub(crate) fn force_numeric_gt(&self, phi: f64) -> Result<f64> {
        let theta_eq = self.theta_equal(phi)?;
        self.dn_perp_gt_dphi_numeric(phi, theta_eq)
    }

    #[cfg(test)]
    pub(crate) fn force_numeric_theta_equal(&self, phi: f64) -> Result<f64> {
        self.theta_equal_numeric(phi, self.purity.ok_or(Error::PurityRequired)?)
    }
}

/// 1/e^2 full width of the signal-photon spectrum around the probe energy:
/// (8/tau) sqrt(2 + (tau/T)^2); natural units in, eV out.
pub fn spectrum_width(tau: f64, t: f64) -> f64 {
    8.0 / tau * (2.0 + (tau / t) * (tau / t)).sqrt()
}

/// Limit of [`SignalEval::conventional_ratio`] under the equal-duration,
/// short-Rayleigh-range closed form of the overlap factor; the Rayleigh
/// range cancels and the value is 4 sqrt(3) for any argument.
pub fn conventional_ratio_short_focus_limit(z_r: f64, tau: f64) -> f64 {
    let r = z_r / tau;
    512.0 * (std::f64::consts::PI / 3.0).sqrt() * r * r
        / ffactor::f_limit_equal_durations_small_zr(z_r, tau)
}

macro_rules! one_shot {
    ($(#[$doc:meta])* $name:ident -> $ty:ty) => {
        $(#[$doc])*
        pub fn $name(scenario: &Scenario) -> Result<$ty> {
            Ok(SignalEval::new(scenario)?.$name())
        }
    };
}

one_shot!(
    /// One-shot total flipped-photon count; builds a fresh [`SignalEval`],
    /// so prefer the context type for grids and scans.
    n_perp_total -> f64
);
one_shot!(n_perp_point -> f64);
one_shot!(n_perp_point_nooffset -> f64);
one_shot!(conventional_estimate -> f64);
one_shot!(conventional_ratio -> f64);
one_shot!(scaling_exponents -> (f64, f64));

pub fn d2n_perp(scenario: &Scenario, point: &AngularPoint) -> Result<f64> {
    Ok(SignalEval::new(scenario)?.d2n_perp(point))
}

pub fn signal_divergence(scenario: &Scenario, phi: f64) -> Result<f64> {
    Ok(SignalEval::new(scenario)?.signal_divergence(phi))
}

pub fn theta_equal(scenario: &Scenario, phi: f64) -> Result<f64> {
    SignalEval::new(scenario)?.theta_equal(phi)
}

pub fn dn_perp_dphi(scenario: &Scenario, phi: f64) -> Result<f64> {
    Ok(SignalEval::new(scenario)?.dn_perp_dphi(phi))
}

pub fn dn_perp_gt_dphi(scenario: &Scenario, phi: f64) -> Result<f64> {
    SignalEval::new(scenario)?.dn_perp_gt_dphi(phi)
}

pub fn n_perp_gt(scenario: &Scenario) -> Result<f64> {
    SignalEval::new(scenario)?.n_perp_gt()
}

pub fn n_perp_gt_circular(scenario: &Scenario) -> Result<f64> {
    SignalEval::new(scenario)?.n_perp_gt_circular()
}

pub fn background_crossings(scenario: &Scenario, phi: f64) -> Result<(f64, f64)> {
    SignalEval::new(scenario)?.background_crossings(phi)
}

pub fn n_perp_gt_background(scenario: &Scenario) -> Result<f64> {
    SignalEval::new(scenario)?.n_perp_gt_background()
}

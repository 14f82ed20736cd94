//! One-dimensional adaptive quadrature on a nested Gauss–Kronrod pair,
//! a refining trapezoidal rule for periodic integrands, and Gauss–Hermite
//! nodes for the cross-check path.
//!
//! The adaptive driver keeps a worst-first queue of intervals, splits the
//! interval with the largest nested-rule error estimate, and stops when the
//! summed estimate meets the tolerance or the interval budget runs out.
//! Summation order is deterministic, so identical inputs give bit-identical
//! results.

use crate::error::{Error, Result};

/// 15-point Kronrod abscissae (positive half) for the embedded G7/K15 pair.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// 7-point Gauss weights on the odd Kronrod abscissae.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    /// Absolute error estimate from the nested-rule differences.
    pub error: f64,
    pub intervals: usize,
    pub evals: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub rel_tol: f64,
    /// Absolute floor below which the relative criterion is not pressed.
    pub abs_tol: f64,
    pub max_intervals: usize,
    /// Context tag carried into accuracy errors.
    pub context: &'static str,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1.0e-10,
            abs_tol: 0.0,
            max_intervals: 4096,
            context: "adaptive quadrature",
        }
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = XGK[j];
        let s = f(mid - half * x) + f(mid + half * x);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * half, (kron - gauss).abs() * half.abs())
}

#[derive(Debug)]
struct Segment {
    err: f64,
    id: u64,
    a: f64,
    b: f64,
    value: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.id == other.id
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.id.cmp(&self.id))
    }
}

/// Adaptive integration of `f` over `[a, b]`.
pub fn adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadResult> {
    adaptive_with_breaks(f, &[a, b], opts)
}

/// Adaptive integration over `[pts[0], pts[last]]` with the interior points
/// used as initial subdivision boundaries (feature locations known to the
/// caller).
pub fn adaptive_with_breaks<F: Fn(f64) -> f64>(
    f: F,
    pts: &[f64],
    opts: &QuadOptions,
) -> Result<QuadResult> {
    assert!(pts.len() >= 2, "need at least the two endpoints");
    let mut heap = std::collections::BinaryHeap::new();
    let mut next_id = 0u64;
    let mut evals = 0usize;
    for w in pts.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let (v, e) = gk15(&f, w[0], w[1]);
        evals += 15;
        heap.push(Segment {
            err: e.abs(),
            id: next_id,
            a: w[0],
            b: w[1],
            value: v,
        });
        next_id += 1;
    }
    loop {
        let (total, err): (f64, f64) = heap
            .iter()
            .fold((0.0, 0.0), |(t, e), s| (t + s.value, e + s.err));
        if err <= (opts.rel_tol * total.abs()).max(opts.abs_tol) {
            return Ok(QuadResult {
                value: total,
                error: err,
                intervals: heap.len(),
                evals,
            });
        }
        if heap.len() >= opts.max_intervals {
            return Err(Error::Accuracy {
                context: opts.context,
                value: total,
                error: err,
                requested: (opts.rel_tol * total.abs()).max(opts.abs_tol),
            });
        }
        let worst = heap.pop().expect("heap cannot be empty here");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval at floating-point resolution; keep it as converged
            heap.push(Segment { err: 0.0, ..worst });
            continue;
        }
        for (lo, hi) in [(worst.a, mid), (mid, worst.b)] {
            let (v, e) = gk15(&f, lo, hi);
            evals += 15;
            heap.push(Segment {
                err: e.abs(),
                id: next_id,
                a: lo,
                b: hi,
                value: v,
            });
            next_id += 1;
        }
    }
}

/// Trapezoidal integration of a periodic integrand over one period,
/// refining by doubling until two consecutive levels agree.
pub fn trapezoid_periodic<F: Fn(f64) -> f64>(
    f: F,
    period: f64,
    rel_tol: f64,
    context: &'static str,
) -> Result<QuadResult> {
    let mut n = 16usize;
    let mut evals = 0usize;
    let mut prev = {
        let h = period / n as f64;
        let mut s = 0.0;
        for i in 0..n {
            s += f(i as f64 * h);
        }
        evals += n;
        s * h
    };
    // for smooth periodic integrands the equispaced rule converges
    // spectrally, so one agreement check is a sound stopping rule
    let mut last_change = f64::INFINITY;
    for _ in 0..12 {
        n *= 2;
        let h = period / n as f64;
        let mut s = 0.0;
        // reuse structure: new points are the odd multiples of h
        for i in (1..n).step_by(2) {
            s += f(i as f64 * h);
        }
        evals += n / 2;
        let value = 0.5 * prev + s * h;
        last_change = (value - prev).abs();
        if last_change <= rel_tol * value.abs().max(f64::MIN_POSITIVE) {
            return Ok(QuadResult {
                value,
                error: last_change,
                intervals: n,
                evals,
            });
        }
        prev = value;
    }
    Err(Error::Accuracy {
        context,
        value: prev,
        error: last_change,
        requested: rel_tol,
    })
}

/// Nodes and weights of the n-point Gauss–Hermite rule (weight e^{-x^2}).
///
/// Newton iteration on the orthonormal Hermite recurrence; initial guesses
/// follow the standard interlacing construction. Weights come from the
/// Christoffel identity w_i = 1 / sum_k p_k(x_i)^2.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0f64; n];
    let mut weights = vec![0.0f64; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        // Newton on the orthonormal recurrence
        for _ in 0..100 {
            let (p, dp, _) = hermite_orthonormal(n, z);
            let step = p / dp;
            z -= step;
            if step.abs() < 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        let (_, _, sum_sq) = hermite_orthonormal(n, z);
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        let w = 1.0 / sum_sq;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, _, sum_sq) = hermite_orthonormal(n, 0.0);
        weights[n / 2] = 1.0 / sum_sq;
    }
    // ascending order
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

/// Returns (p_n(x), p_n'(x), sum_{k=0}^{n-1} p_k(x)^2) for the orthonormal
/// Hermite polynomials with respect to e^{-x^2}.
fn hermite_orthonormal(n: usize, x: f64) -> (f64, f64, f64) {
    const PI_QUARTER: f64 = 1.331_335_363_800_389_7; // pi^{1/4}
    let mut p_prev = 1.0 / PI_QUARTER; // p_0
    let mut sum_sq = p_prev * p_prev;
    let mut p = x * std::f64::consts::SQRT_2 / PI_QUARTER; // p_1
    if n == 1 {
        return (p, std::f64::consts::SQRT_2 / PI_QUARTER, sum_sq);
    }
    for k in 1..n {
        sum_sq += p * p;
        let kf = k as f64;
        let p_next = x * (2.0 / (kf + 1.0)).sqrt() * p - (kf / (kf + 1.0)).sqrt() * p_prev;
        p_prev = p;
        p = p_next;
    }
    // p' from the recurrence p_n'(x) = sqrt(2 n) p_{n-1}(x)
    let dp = (2.0 * n as f64).sqrt() * p_prev;
    (p, dp, sum_sq)
}

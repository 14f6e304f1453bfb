//! Adaptive quadrature primitives.
//!
//! A 7-point Gauss / 15-point Kronrod pair drives the adaptive routines; the
//! Kronrod-minus-Gauss difference is the per-interval error estimate.
//! Cumulative integrals over a fixed knot sequence use 5-point
//! Gauss–Legendre per interval, and oscillatory integrals get a dedicated
//! segment rule that treats the phase exactly and the amplitude linearly.

use num_complex::Complex64;

use crate::error::CoreError;
use crate::Result;

/// Kronrod abscissae on [0, 1] of the G7–K15 pair (symmetric about 0).
const XK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];

/// Kronrod weights matching `XK`.
const WK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Gauss weights for the embedded 7-point rule (nodes XK[1], XK[3], XK[5], XK[7]).
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// 5-point Gauss–Legendre nodes (positive half) and weights.
const XG5: [f64; 3] = [0.0, 0.538469310105683, 0.906179845938664];
const WG5: [f64; 3] = [0.568888888888889, 0.478628670499366, 0.236926885056189];

/// Scalars that adaptive quadrature can accumulate.
pub trait QuadValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn scale(self, k: f64) -> Self;
    fn norm(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        num_complex::Complex::norm(self)
    }
}

/// Value and error estimate returned by the adaptive routines.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult<T> {
    pub value: T,
    pub error: f64,
    pub evals: usize,
}

fn gk15<T: QuadValue, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64) -> (T, T) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc.scale(WK[7]);
    let mut gauss = fc.scale(WG[3]);
    for (i, &x) in XK.iter().enumerate().take(7) {
        let fl = f(c - h * x);
        let fr = f(c + h * x);
        let pair = fl.add(fr);
        kron = kron.add(pair.scale(WK[i]));
        if i % 2 == 1 {
            gauss = gauss.add(pair.scale(WG[i / 2]));
        }
    }
    (kron.scale(h), gauss.scale(h))
}

/// Adaptive Gauss–Kronrod integration of `f` over `[a, b]`.
///
/// Converges when the accumulated error estimate drops below
/// `max(abs_tol, rel_tol * |value|)`.
pub fn adaptive<T: QuadValue, F: FnMut(f64) -> T>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult<T>> {
    adaptive_with_breakpoints(&mut f, &[a, b], rel_tol, abs_tol)
}

/// Adaptive integration over the interval spanned by `points`, with every
/// interior point used as an initial subdivision (useful to pre-split at a
/// known narrow feature such as a gap minimum).
pub fn adaptive_with_breakpoints<T: QuadValue, F: FnMut(f64) -> T>(
    f: &mut F,
    points: &[f64],
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult<T>> {
    if points.len() < 2 {
        return Err(CoreError::InvalidParameter(
            "quadrature needs at least two breakpoints".into(),
        ));
    }
    struct Seg<T> {
        a: f64,
        b: f64,
        value: T,
        error: f64,
    }
    let mut evals = 0usize;
    let mut segs: Vec<Seg<T>> = Vec::new();
    for w in points.windows(2) {
        let (kron, gauss) = gk15(f, w[0], w[1]);
        evals += 15;
        segs.push(Seg {
            a: w[0],
            b: w[1],
            value: kron,
            error: kron.add(gauss.scale(-1.0)).norm(),
        });
    }
    let max_evals = 2_000_000usize;
    loop {
        let mut total = T::zero();
        let mut err = 0.0;
        for s in &segs {
            total = total.add(s.value);
            err += s.error;
        }
        let tol = abs_tol.max(rel_tol * total.norm());
        if err <= tol {
            return Ok(QuadResult {
                value: total,
                error: err,
                evals,
            });
        }
        if evals > max_evals {
            return Err(CoreError::Quadrature(format!(
                "no convergence after {evals} evaluations (error {err:.3e}, tol {tol:.3e})"
            )));
        }
        // split the worst segment
        let (worst, _) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("non-empty segment list");
        let Seg { a, b, .. } = segs[worst];
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            return Err(CoreError::Quadrature(format!(
                "interval [{a}, {b}] cannot be subdivided further"
            )));
        }
        let (kl, gl) = gk15(f, a, m);
        let (kr, gr) = gk15(f, m, b);
        evals += 30;
        segs[worst] = Seg {
            a,
            b: m,
            value: kl,
            error: kl.add(gl.scale(-1.0)).norm(),
        };
        segs.push(Seg {
            a: m,
            b,
            value: kr,
            error: kr.add(gr.scale(-1.0)).norm(),
        });
    }
}

/// Cumulative integral of `f` along a fixed knot sequence.
///
/// Returns `F` with `F[0] = 0` and `F[k] = ∫_{knots[0]}^{knots[k]} f`,
/// each interval handled by 5-point Gauss–Legendre. The knots must already
/// resolve all features of the integrand.
pub fn cumulative_gl5<F: FnMut(f64) -> f64>(mut f: F, knots: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(knots.len());
    let mut acc = 0.0;
    out.push(0.0);
    for w in knots.windows(2) {
        let c = 0.5 * (w[0] + w[1]);
        let h = 0.5 * (w[1] - w[0]);
        let mut v = WG5[0] * f(c);
        for i in 1..3 {
            v += WG5[i] * (f(c - h * XG5[i]) + f(c + h * XG5[i]));
        }
        acc += v * h;
        out.push(acc);
    }
    out
}

/// Integral of a linearly interpolated amplitude against a linear phase:
/// `∫_0^h (a0 + (a1-a0) τ/h) · exp(-i (φ0 + k τ)) dτ`.
///
/// The phase factor is integrated exactly, so the rule stays accurate for
/// many radians per segment as long as the amplitude is well approximated
/// linearly.
pub fn osc_segment(a0: Complex64, a1: Complex64, phi0: f64, k: f64, h: f64) -> Complex64 {
    let (i0, i1) = osc_moments(k, h);
    let slope = (a1 - a0) / h;
    Complex64::from_polar(1.0, -phi0) * (a0 * i0 + slope * i1)
}

/// Moments `I0 = ∫_0^h e^{-ikτ} dτ` and `I1 = ∫_0^h τ e^{-ikτ} dτ`.
fn osc_moments(k: f64, h: f64) -> (Complex64, Complex64) {
    let kh = k * h;
    if kh.abs() < 1e-4 {
        // series in (-i k h); four terms give ~1e-16 relative accuracy here
        let z = Complex64::new(0.0, -kh);
        let mut i0 = Complex64::new(0.0, 0.0);
        let mut i1 = Complex64::new(0.0, 0.0);
        let mut zn = Complex64::new(1.0, 0.0);
        let mut fact = 1.0;
        for n in 0u32..5 {
            i0 += zn / (fact * (n as f64 + 1.0));
            i1 += zn / (fact * (n as f64 + 2.0));
            fact *= n as f64 + 1.0;
            zn *= z;
        }
        (i0 * h, i1 * h * h)
    } else {
        let e = Complex64::from_polar(1.0, -kh);
        let ik = Complex64::new(0.0, k);
        let i0 = (Complex64::new(1.0, 0.0) - e) / ik;
        let i1 = e * (Complex64::new(0.0, h / k) + Complex64::new(1.0 / (k * k), 0.0))
            - Complex64::new(1.0 / (k * k), 0.0);
        (i0, i1)
    }
}

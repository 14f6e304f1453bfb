//! Interpolation functions `s(t)` generated from a gap function.
//!
//! The dynamics class is `ds/dt = ΔE(s) h(s)` with `h(s) = α_d ΔE^d(s)`:
//! `d = -1` is the constant-velocity ramp, `d = 0` a constant `h`, and
//! `d = 1` the locally adiabatic evolution. A schedule is built by
//! cumulative quadrature of `t(s) = (1/α_d) ∫_0^s ΔE^{-(d+1)}` on a grid
//! refined around the gap minimum, then inverted by monotone interpolation.
//!
//! Endpoint smoothing replaces the boundary layers `[0, t1]` and `[t2, T]`
//! with cubic segments (`C1`) or mollifier-blended segments (`C∞`); the
//! interior is untouched.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::model::GapSource;
use crate::quad;
use crate::Result;

/// Smoothness class of a schedule at the switching points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Smoothness {
    /// As generated by the classification; derivative jumps at `t = 0, T`
    /// where `s` is held constant outside `[0, T]`.
    Raw,
    /// Identical to [`Smoothness::Raw`]; the tag records that only
    /// continuity is claimed.
    C0,
    /// Cubic boundary segments with zero slope at `t = 0, T`; curvature
    /// jumps remain.
    C1,
    /// Mollifier-blended boundary segments; all derivatives vanish at
    /// `t = 0, T`.
    Cinf,
}

impl Smoothness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Smoothness::Raw => "raw",
            Smoothness::C0 => "c0",
            Smoothness::C1 => "c1",
            Smoothness::Cinf => "cinf",
        }
    }
}

/// Exponent range accepted for `h = α_d ΔE^d`.
pub const EXPONENT_RANGE: std::ops::RangeInclusive<i32> = -1..=3;

fn check_exponent(d: i32) -> Result<()> {
    if !EXPONENT_RANGE.contains(&d) {
        return Err(CoreError::InvalidParameter(format!(
            "schedule exponent d must lie in [-1, 3], got {d}"
        )));
    }
    Ok(())
}

fn check_gap_positive(source: &GapSource) -> Result<()> {
    let min_gap = match source.minimum() {
        Some((s_min, _)) => source.gap(s_min),
        None => source.gap(0.5),
    };
    if !(min_gap > 0.0) {
        return Err(CoreError::InvalidParameter(format!(
            "gap function must be strictly positive (minimum {min_gap})"
        )));
    }
    Ok(())
}

/// Knot sequence on `[0, 1]`, refined around the gap minimum so that the
/// feature of width `|Im s̃|` carries at least 200 points.
fn build_s_grid(source: &GapSource) -> Vec<f64> {
    let base_n = 1024usize;
    let mut knots: Vec<f64> = (0..=base_n).map(|k| k as f64 / base_n as f64).collect();
    if let Some((s_min, width)) = source.minimum() {
        let lo = (s_min - 8.0 * width).max(0.0);
        let hi = (s_min + 8.0 * width).min(1.0);
        let spacing = width / 200.0;
        if spacing < 1.0 / base_n as f64 {
            let n = ((hi - lo) / spacing).ceil() as usize;
            for k in 0..=n {
                knots.push(lo + (hi - lo) * k as f64 / n as f64);
            }
        }
    }
    knots.sort_by(f64::total_cmp);
    knots.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    knots
}

/// `∫_0^1 ΔE^{-(d+1)}(s) ds`, the normalization integral of Eq.-(11) form:
/// a schedule of runtime `T` uses `α_d = integral / T`.
pub fn normalization_constant(source: &GapSource, d: i32) -> Result<f64> {
    check_exponent(d)?;
    check_gap_positive(source)?;
    let mut points = vec![0.0];
    if let Some((s_min, width)) = source.minimum() {
        for m in [-8.0, -1.0, 0.0, 1.0, 8.0] {
            let p = s_min + m * width;
            if p > 0.0 && p < 1.0 {
                points.push(p);
            }
        }
    }
    points.push(1.0);
    points.sort_by(f64::total_cmp);
    points.dedup();
    let p = d + 1;
    let r = quad::adaptive_with_breakpoints(
        &mut |s: f64| source.gap(s).powi(-p),
        &points,
        1e-9,
        0.0,
    )?;
    Ok(r.value)
}

/// Precomputed `t(s)` map for one `(gap, d)` pair; schedules for any total
/// runtime are cheap rescalings of it.
#[derive(Debug, Clone)]
pub struct SchedulePlan {
    source: GapSource,
    exponent: i32,
    s_grid: Vec<f64>,
    /// `∫_0^{s_k} ΔE^{-(d+1)}`, i.e. `α_d · t(s_k)`.
    t_unit: Vec<f64>,
    norm_integral: f64,
}

impl SchedulePlan {
    pub fn new(source: GapSource, d: i32) -> Result<Self> {
        check_exponent(d)?;
        check_gap_positive(&source)?;
        let s_grid = build_s_grid(&source);
        let p = d + 1;
        let t_unit = quad::cumulative_gl5(|s| source.gap(s).powi(-p), &s_grid);
        if t_unit.windows(2).any(|w| w[1] <= w[0]) {
            return Err(CoreError::Internal(
                "t(s) not strictly increasing for a positive gap".into(),
            ));
        }
        let norm_integral = *t_unit.last().expect("non-empty grid");
        Ok(Self {
            source,
            exponent: d,
            s_grid,
            t_unit,
            norm_integral,
        })
    }

    /// `∫_0^1 ΔE^{-(d+1)} ds` as accumulated on the plan grid.
    pub fn norm_integral(&self) -> f64 {
        self.norm_integral
    }

    /// Raw schedule reaching `s = 1` at `total_time`.
    pub fn schedule(&self, total_time: f64) -> Result<Schedule> {
        if !(total_time > 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "schedule runtime must be positive, got {total_time}"
            )));
        }
        let alpha = self.norm_integral / total_time;
        let t_grid: Vec<f64> = self.t_unit.iter().map(|&u| u / alpha).collect();
        Ok(Schedule {
            source: self.source,
            exponent: self.exponent,
            alpha,
            total_time,
            smoothness: Smoothness::Raw,
            match_fracs: (0.1, 0.9),
            s_grid: self.s_grid.clone(),
            t_grid,
            boundary: Boundary::None,
        })
    }

    /// Schedule of the requested smoothness class.
    pub fn smoothed(
        &self,
        total_time: f64,
        class: Smoothness,
        match_fracs: (f64, f64),
    ) -> Result<Schedule> {
        self.schedule(total_time)?.smooth(class, match_fracs)
    }
}

/// Convenience constructor for a raw schedule.
pub fn make_schedule(source: GapSource, d: i32, total_time: f64) -> Result<Schedule> {
    SchedulePlan::new(source, d)?.schedule(total_time)
}

#[derive(Debug, Clone)]
enum Boundary {
    None,
    /// Head cubic `c2 t^2 + c3 t^3` on `[0, t1]`; tail cubic in `u = t - t2`
    /// on `[t2, T]` with coefficients `[b, v2, c2, c3]`.
    Cubic {
        t1: f64,
        t2: f64,
        head: [f64; 2],
        tail: [f64; 4],
    },
    /// Mollifier blend on `[0, t1]` and `[t2, T]`.
    Mollified { t1: f64, t2: f64 },
    /// Diagnostic fixture: hold `s = 0` for the whole run.
    Frozen,
}

/// A monotone map `t ↦ s` on `[0, T]` with its defining velocity.
///
/// Immutable after construction; sampling is pure and reentrant.
#[derive(Debug, Clone)]
pub struct Schedule {
    source: GapSource,
    exponent: i32,
    alpha: f64,
    total_time: f64,
    smoothness: Smoothness,
    match_fracs: (f64, f64),
    s_grid: Vec<f64>,
    t_grid: Vec<f64>,
    boundary: Boundary,
}

impl Schedule {
    pub fn total_time(&self) -> f64 {
        self.total_time
    }
    pub fn exponent(&self) -> i32 {
        self.exponent
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }
    pub fn match_fracs(&self) -> (f64, f64) {
        self.match_fracs
    }
    pub fn source(&self) -> &GapSource {
        &self.source
    }

    /// Test fixture holding `H` fixed at `s = 0` for the whole run.
    pub fn frozen(total_time: f64) -> Self {
        Schedule {
            source: GapSource::Constant(1.0),
            exponent: 0,
            alpha: 0.0,
            total_time,
            smoothness: Smoothness::Raw,
            match_fracs: (0.1, 0.9),
            s_grid: vec![0.0, 0.0],
            t_grid: vec![0.0, total_time],
            boundary: Boundary::Frozen,
        }
    }

    /// Apply endpoint smoothing, replacing the boundary layers outside the
    /// match points `t1 = f1 T`, `t2 = f2 T`. `C0` returns the raw schedule
    /// under its new tag. A cubic segment that would lose monotonicity
    /// shrinks the match fractions and warns.
    pub fn smooth(mut self, class: Smoothness, match_fracs: (f64, f64)) -> Result<Schedule> {
        let (f1, f2) = match_fracs;
        if !(0.0 < f1 && f1 < f2 && f2 < 1.0) {
            return Err(CoreError::InvalidParameter(format!(
                "match fractions must satisfy 0 < f1 < f2 < 1, got ({f1}, {f2})"
            )));
        }
        if matches!(self.boundary, Boundary::Frozen) {
            return Err(CoreError::Unsupported(
                "cannot smooth the frozen fixture".into(),
            ));
        }
        self.match_fracs = (f1, f2);
        self.smoothness = class;
        self.boundary = Boundary::None;
        match class {
            Smoothness::Raw | Smoothness::C0 => Ok(self),
            Smoothness::Cinf => {
                self.boundary = Boundary::Mollified {
                    t1: f1 * self.total_time,
                    t2: f2 * self.total_time,
                };
                Ok(self)
            }
            Smoothness::C1 => {
                let mut fracs = (f1, f2);
                for attempt in 0..8 {
                    let t1 = fracs.0 * self.total_time;
                    let t2 = fracs.1 * self.total_time;
                    let (a, v1) = self.raw_sample(t1);
                    let (b, v2) = self.raw_sample(t2);
                    let head = [
                        (3.0 * a - v1 * t1) / (t1 * t1),
                        (v1 * t1 - 2.0 * a) / (t1 * t1 * t1),
                    ];
                    let ell = self.total_time - t2;
                    let rest = 1.0 - b - v2 * ell;
                    let tail = [
                        b,
                        v2,
                        (3.0 * rest + v2 * ell) / (ell * ell),
                        -(v2 * ell + 2.0 * rest) / (ell * ell * ell),
                    ];
                    if Self::cubic_monotone(&head, t1) && Self::tail_monotone(&tail, ell) {
                        if attempt > 0 {
                            log::warn!(
                                "C1 smoothing: match fractions shrunk to ({}, {}) to keep \
                                 monotonicity",
                                fracs.0,
                                fracs.1
                            );
                        }
                        self.match_fracs = fracs;
                        self.boundary = Boundary::Cubic { t1, t2, head, tail };
                        return Ok(self);
                    }
                    fracs = (0.5 * fracs.0, 0.5 * (1.0 + fracs.1));
                }
                Err(CoreError::Internal(
                    "C1 smoothing could not find monotone cubic segments".into(),
                ))
            }
        }
    }

    fn cubic_monotone(c: &[f64; 2], t1: f64) -> bool {
        (0..=64).all(|k| {
            let t = t1 * k as f64 / 64.0;
            2.0 * c[0] * t + 3.0 * c[1] * t * t >= -1e-12
        })
    }

    fn tail_monotone(c: &[f64; 4], ell: f64) -> bool {
        (0..=64).all(|k| {
            let u = ell * k as f64 / 64.0;
            c[1] + 2.0 * c[2] * u + 3.0 * c[3] * u * u >= -1e-12
        })
    }

    /// Defining velocity `ds/dt = α_d ΔE^{d+1}(s)`.
    fn defining_velocity(&self, s: f64) -> f64 {
        self.alpha * self.source.gap(s).powi(self.exponent + 1)
    }

    /// Raw map: Hermite interpolation on the grid, velocity from the
    /// defining relation rather than numerical differencing.
    fn raw_sample(&self, t: f64) -> (f64, f64) {
        if t <= 0.0 {
            return (0.0, self.defining_velocity(0.0));
        }
        if t >= self.total_time {
            return (1.0, self.defining_velocity(1.0));
        }
        let idx = self.t_grid.partition_point(|&tk| tk <= t) - 1;
        let idx = idx.min(self.t_grid.len() - 2);
        let (t0, t1) = (self.t_grid[idx], self.t_grid[idx + 1]);
        let (s0, s1) = (self.s_grid[idx], self.s_grid[idx + 1]);
        let h = t1 - t0;
        let tau = (t - t0) / h;
        let v0 = self.defining_velocity(s0);
        let v1 = self.defining_velocity(s1);
        let h00 = (1.0 + 2.0 * tau) * (1.0 - tau) * (1.0 - tau);
        let h10 = tau * (1.0 - tau) * (1.0 - tau);
        let h01 = tau * tau * (3.0 - 2.0 * tau);
        let h11 = tau * tau * (tau - 1.0);
        let s = s0 * h00 + h * v0 * h10 + s1 * h01 + h * v1 * h11;
        (s.clamp(0.0, 1.0), self.defining_velocity(s))
    }

    /// Evaluate `(s, ds/dt)` at time `t`. The Hamiltonian is held outside
    /// the run: `t < 0` gives `(0, 0)` and `t > T` gives `(1, 0)`.
    pub fn sample(&self, t: f64) -> (f64, f64) {
        if matches!(self.boundary, Boundary::Frozen) {
            return (0.0, 0.0);
        }
        if t < 0.0 {
            return (0.0, 0.0);
        }
        if t > self.total_time {
            return (1.0, 0.0);
        }
        match &self.boundary {
            Boundary::Frozen => unreachable!(),
            Boundary::None => self.raw_sample(t),
            Boundary::Cubic { t1, t2, head, tail } => {
                if t < *t1 {
                    let s = head[0] * t * t + head[1] * t * t * t;
                    let v = 2.0 * head[0] * t + 3.0 * head[1] * t * t;
                    (s.clamp(0.0, 1.0), v)
                } else if t <= *t2 {
                    self.raw_sample(t)
                } else {
                    let u = t - t2;
                    let s = tail[0] + tail[1] * u + tail[2] * u * u + tail[3] * u * u * u;
                    let v = tail[1] + 2.0 * tail[2] * u + 3.0 * tail[3] * u * u;
                    (s.clamp(0.0, 1.0), v)
                }
            }
            Boundary::Mollified { t1, t2 } => {
                if t < *t1 {
                    let (s_raw, v_raw) = self.raw_sample(t);
                    let x = t / t1;
                    let (w, wp) = bump_weight(x);
                    (w * s_raw, wp / t1 * s_raw + w * v_raw)
                } else if t <= *t2 {
                    self.raw_sample(t)
                } else {
                    let (s_raw, v_raw) = self.raw_sample(t);
                    let ell = self.total_time - t2;
                    let x = (self.total_time - t) / ell;
                    let (w, wp) = bump_weight(x);
                    (1.0 - w * (1.0 - s_raw), wp / ell * (1.0 - s_raw) + w * v_raw)
                }
            }
        }
    }

    /// Inverse lookup: the time at which the schedule reaches `s`.
    pub fn time_at(&self, s: f64) -> f64 {
        let s = s.clamp(0.0, 1.0);
        let (mut lo, mut hi) = (0.0, self.total_time);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if self.sample(mid).0 < s {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// `h(0) + h(1)` along the realized trajectory, where `h = ṡ/ΔE`.
    pub fn endpoint_h_sum(&self) -> f64 {
        let (s0, v0) = self.sample(0.0);
        let (s1, v1) = self.sample(self.total_time);
        v0 / self.source.gap(s0) + v1 / self.source.gap(s1)
    }
}

/// Mollifier blend weight `w(x) = f(x) / (f(x) + f(1-x))` with
/// `f(x) = exp(-1/x)` for `x > 0`, and its derivative. Flat to all orders
/// at `x = 0` (value 0) and `x = 1` (value 1).
fn bump_weight(x: f64) -> (f64, f64) {
    if x <= 0.0 {
        return (0.0, 0.0);
    }
    if x >= 1.0 {
        return (1.0, 0.0);
    }
    let f = (-1.0 / x).exp();
    let g = (-1.0 / (1.0 - x)).exp();
    let fp = f / (x * x);
    let gp = g / ((1.0 - x) * (1.0 - x));
    let denom = f + g;
    (f / denom, (fp * g + f * gp) / (denom * denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GapAnsatz, HamiltonianModel};
    use approx::assert_relative_eq;

    fn grover_source(n: u64) -> GapSource {
        GapSource::Model(HamiltonianModel::grover_linear(n, 0).unwrap())
    }

    #[test]
    fn constant_gap_is_linear_ramp() {
        for d in -1..=3 {
            let sched = make_schedule(GapSource::Constant(1.0), d, 10.0).unwrap();
            let (s, v) = sched.sample(5.0);
            assert_relative_eq!(s, 0.5, epsilon = 1e-12);
            assert_relative_eq!(v, 0.1, epsilon = 1e-12);
            assert_relative_eq!(
                normalization_constant(&GapSource::Constant(1.0), d).unwrap(),
                1.0,
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn constant_velocity_for_d_minus_one() {
        let sched = make_schedule(grover_source(100), -1, 7.0).unwrap();
        for k in 0..=20 {
            let t = 7.0 * k as f64 / 20.0;
            assert_relative_eq!(sched.sample(t).0, t / 7.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn grover_d1_normalization_matches_closed_form() {
        // ∫ ds / ΔE² = ∫ ds / (4c(s-1/2)² + 1/N) = sqrt(N/c)·arctan(sqrt(cN))
        let n = 100.0_f64;
        let c = 1.0 - 1.0 / n;
        let closed = (n / c).sqrt() * (c * n).sqrt().atan();
        let got = normalization_constant(&grover_source(100), 1).unwrap();
        assert_relative_eq!(got, closed, max_relative = 1e-8);
        let plan = SchedulePlan::new(grover_source(100), 1).unwrap();
        assert_relative_eq!(plan.norm_integral(), closed, max_relative = 1e-8);
    }

    #[test]
    fn grover_d0_normalization_grows_logarithmically() {
        // ΔE^{-1} integral gains ~ln(10) per decade of N
        let i2 = normalization_constant(&grover_source(100), 0).unwrap();
        let i3 = normalization_constant(&grover_source(1000), 0).unwrap();
        let i4 = normalization_constant(&grover_source(10000), 0).unwrap();
        let g32 = i3 - i2;
        let g43 = i4 - i3;
        assert_relative_eq!(g43 / g32, 1.0, max_relative = 0.05);
        assert_relative_eq!(g43, 10.0_f64.ln() / 2.0, max_relative = 0.05);
    }

    #[test]
    fn exponent_range_enforced() {
        assert!(make_schedule(GapSource::Constant(1.0), -2, 1.0).is_err());
        assert!(make_schedule(GapSource::Constant(1.0), 4, 1.0).is_err());
        assert!(make_schedule(GapSource::Constant(0.0), 0, 1.0).is_err());
        assert!(make_schedule(GapSource::Constant(1.0), 0, -1.0).is_err());
    }

    #[test]
    fn local_adiabatic_slows_at_minimum() {
        // ds/dt at s = 1/2 is ΔE_min²/ΔE(0)² = 1/N of its s = 0 value
        let sched = make_schedule(grover_source(100), 1, 50.0).unwrap();
        let v_start = sched.sample(0.0).1;
        let t_mid = sched.time_at(0.5);
        let v_mid = sched.sample(t_mid).1;
        assert_relative_eq!(v_mid / v_start, 0.01, max_relative = 1e-6);
    }

    #[test]
    fn raw_schedule_satisfies_defining_ode() {
        let sched = make_schedule(grover_source(100), 1, 50.0).unwrap();
        let dt = 1e-4 * sched.total_time();
        for k in 1..40 {
            let t = sched.total_time() * k as f64 / 40.0;
            let fd = (sched.sample(t + dt).0 - sched.sample(t - dt).0) / (2.0 * dt);
            let (_, v) = sched.sample(t);
            assert_relative_eq!(fd, v, max_relative = 1e-6, epsilon = 1e-10);
        }
    }

    #[test]
    fn runtime_identity() {
        // recomputing T = ∫ ds/(ΔE h) from the schedule's α reproduces T
        for d in [-1, 0, 1, 2] {
            let sched = make_schedule(grover_source(400), d, 123.0).unwrap();
            let alpha = sched.alpha();
            let t = quad::adaptive_with_breakpoints(
                &mut |s: f64| {
                    let gap = sched.source().gap(s);
                    1.0 / (gap * alpha * gap.powi(d))
                },
                &[0.0, 0.45, 0.5, 0.55, 1.0],
                1e-9,
                0.0,
            )
            .unwrap();
            assert_relative_eq!(t.value, 123.0, max_relative = 1e-6);
        }
    }

    #[test]
    fn endpoints_reached() {
        for class in [Smoothness::Raw, Smoothness::C0, Smoothness::C1, Smoothness::Cinf] {
            let sched = SchedulePlan::new(grover_source(64), 1)
                .unwrap()
                .smoothed(20.0, class, (0.1, 0.9))
                .unwrap();
            assert!(sched.sample(0.0).0.abs() < 1e-9);
            assert!((sched.sample(20.0).0 - 1.0).abs() < 1e-9);
            assert_eq!(sched.sample(-1.0), (0.0, 0.0));
            assert_eq!(sched.sample(21.0), (1.0, 0.0));
        }
    }

    #[test]
    fn monotone_for_all_classes() {
        for class in [Smoothness::Raw, Smoothness::C0, Smoothness::C1, Smoothness::Cinf] {
            for d in [-1, 1] {
                let sched = SchedulePlan::new(grover_source(256), d)
                    .unwrap()
                    .smoothed(30.0, class, (0.1, 0.9))
                    .unwrap();
                let mut last = -1.0;
                for k in 0..=2000 {
                    let s = sched.sample(30.0 * k as f64 / 2000.0).0;
                    assert!(s >= last - 1e-12, "class {class:?} d {d} at k {k}");
                    last = s;
                }
            }
        }
    }

    #[test]
    fn cinf_velocity_vanishes_at_ends() {
        let sched = SchedulePlan::new(grover_source(100), 0)
            .unwrap()
            .smoothed(40.0, Smoothness::Cinf, (0.1, 0.9))
            .unwrap();
        assert!(sched.sample(0.0).1.abs() < 1e-10);
        assert!(sched.sample(40.0).1.abs() < 1e-10);
        assert_eq!(sched.sample(40.0), (1.0, 0.0));
        assert!(sched.endpoint_h_sum().abs() < 1e-10);
        // numerically vanishing higher differences at the endpoints
        let eps = 1e-3 * 40.0 / 100.0;
        let s0 = sched.sample(0.0).0;
        let s1 = sched.sample(eps).0;
        let s2 = sched.sample(2.0 * eps).0;
        assert!((s2 - 2.0 * s1 + s0).abs() < 1e-12);
    }

    #[test]
    fn smoothing_preserves_interior() {
        let plan = SchedulePlan::new(grover_source(100), 1).unwrap();
        let raw = plan.schedule(25.0).unwrap();
        let c1 = plan.smoothed(25.0, Smoothness::C1, (0.1, 0.9)).unwrap();
        let cinf = plan.smoothed(25.0, Smoothness::Cinf, (0.1, 0.9)).unwrap();
        let c0 = plan.smoothed(25.0, Smoothness::C0, (0.1, 0.9)).unwrap();
        for k in 0..=100 {
            let t = 2.5 + 20.0 * k as f64 / 100.0; // inside [t1, t2]
            let s = raw.sample(t).0;
            assert_relative_eq!(c1.sample(t).0, s, epsilon = 1e-14);
            assert_relative_eq!(cinf.sample(t).0, s, epsilon = 1e-14);
        }
        for k in 0..=100 {
            let t = 25.0 * k as f64 / 100.0;
            assert_eq!(c0.sample(t), raw.sample(t));
        }
    }

    #[test]
    fn c1_of_linear_ramp_is_cubic_ease() {
        let plan = SchedulePlan::new(GapSource::Constant(1.0), 0).unwrap();
        let c1 = plan.smoothed(10.0, Smoothness::C1, (0.1, 0.9)).unwrap();
        // value and slope match the ramp exactly at the seam
        assert_relative_eq!(c1.sample(1.0).0, 0.1, epsilon = 1e-12);
        assert_relative_eq!(c1.sample(1.0).1, 0.1, epsilon = 1e-12);
        assert!(c1.sample(0.0).1.abs() < 1e-12);
        assert!(c1.sample(10.0).1.abs() < 1e-12);
        // head cubic of the ramp: s(t) = a(2τ² - τ³), τ = t/t1
        let tau = 0.5;
        assert_relative_eq!(
            c1.sample(0.5).0,
            0.1 * (2.0 * tau * tau - tau * tau * tau),
            epsilon = 1e-12
        );
    }

    #[test]
    fn boundary_layer_deviation_bounded() {
        let plan = SchedulePlan::new(grover_source(64), 1).unwrap();
        let raw = plan.schedule(30.0).unwrap();
        let max_v = (0..=1000)
            .map(|k| raw.sample(30.0 * k as f64 / 1000.0).1)
            .fold(0.0, f64::max);
        let bound = (0.1 + 0.1) * 30.0 * max_v;
        for class in [Smoothness::C1, Smoothness::Cinf] {
            let sm = plan.smoothed(30.0, class, (0.1, 0.9)).unwrap();
            for k in 0..=1000 {
                let t = 30.0 * k as f64 / 1000.0;
                let dev = (sm.sample(t).0 - raw.sample(t).0).abs();
                assert!(dev < bound, "class {class:?}: deviation {dev} vs {bound}");
            }
        }
    }

    #[test]
    fn bad_match_fracs_rejected() {
        let plan = SchedulePlan::new(GapSource::Constant(1.0), 0).unwrap();
        assert!(plan.smoothed(1.0, Smoothness::C1, (0.9, 0.1)).is_err());
        assert!(plan.smoothed(1.0, Smoothness::Cinf, (0.0, 0.9)).is_err());
    }

    #[test]
    fn frozen_fixture_holds_origin() {
        let sched = Schedule::frozen(5.0);
        assert_eq!(sched.sample(2.5), (0.0, 0.0));
        assert_eq!(sched.sample(5.0), (0.0, 0.0));
    }

    #[test]
    fn ansatz_schedule_resolves_narrow_minimum() {
        let a = GapAnsatz::new(1, 2.0, 1e-3, 0.5).unwrap();
        let sched = make_schedule(GapSource::Ansatz(a), 1, 1000.0).unwrap();
        // the schedule must spend most of its time near the minimum
        let t_in = sched.time_at(0.5 + 5e-3) - sched.time_at(0.5 - 5e-3);
        assert!(t_in > 0.5 * sched.total_time());
    }
}

//! Hamiltonian families in reduced representations.
//!
//! All families interpolate between an initial Hamiltonian with a known
//! ground state and a final one encoding the target state. Their dynamics
//! is exactly confined to a two-dimensional invariant subspace, so the
//! working representation is a real-symmetric 2×2 matrix; the dense N×N
//! Grover representation is kept only as a validation path for N ≤ 512.

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;

use crate::error::CoreError;
use crate::Result;

/// Largest database size for which the dense validation representation is
/// constructed.
pub const FULL_REP_LIMIT: u64 = 512;

/// Parameters of the gap ansatz
/// `ΔE(s) = [(s - s_min)^{2a} + ΔE_min^b]^{1/b}`.
///
/// With `b = 2` the ansatz is realized exactly by a two-level Hamiltonian
/// (see [`HamiltonianModel::two_level_ansatz`]); for gap-only analyses any
/// `b > 0` is accepted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapAnsatz {
    a: u32,
    b: f64,
    gap_min: f64,
    s_min: f64,
}

impl GapAnsatz {
    pub fn new(a: u32, b: f64, gap_min: f64, s_min: f64) -> Result<Self> {
        if a == 0 {
            return Err(CoreError::InvalidParameter(
                "gap ansatz: exponent a must be a positive integer".into(),
            ));
        }
        if !(b > 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "gap ansatz: b must be positive, got {b}"
            )));
        }
        if !(gap_min > 0.0 && gap_min < 1.0) {
            return Err(CoreError::InvalidParameter(format!(
                "gap ansatz: gap_min must lie in (0, 1), got {gap_min}"
            )));
        }
        if !(s_min > 0.0 && s_min < 1.0) {
            return Err(CoreError::InvalidParameter(format!(
                "gap ansatz: s_min must lie in (0, 1), got {s_min}"
            )));
        }
        Ok(Self {
            a,
            b,
            gap_min,
            s_min,
        })
    }

    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn gap_min(&self) -> f64 {
        self.gap_min
    }
    pub fn s_min(&self) -> f64 {
        self.s_min
    }

    /// Gap at real `s`. Defined (and ≥ `gap_min`) for every real `s`.
    pub fn gap(&self, s: f64) -> f64 {
        let u = s - self.s_min;
        (u.powi(2 * self.a as i32) + self.gap_min.powf(self.b)).powf(1.0 / self.b)
    }

    /// Analytic continuation of the gap to complex `s` (principal branch).
    pub fn gap_complex(&self, s: Complex64) -> Complex64 {
        let u = s - Complex64::new(self.s_min, 0.0);
        (u.powu(2 * self.a) + self.gap_min.powf(self.b)).powf(1.0 / self.b)
    }

    /// `ΔE^p(s)` continued to complex `s`, evaluated without an intermediate
    /// root so the principal branch is taken once.
    pub fn gap_pow_complex(&self, s: Complex64, p: f64) -> Complex64 {
        let u = s - Complex64::new(self.s_min, 0.0);
        (u.powu(2 * self.a) + self.gap_min.powf(self.b)).powf(p / self.b)
    }
}

/// A Hamiltonian family `H(s)`, `s ∈ [0, 1]`, in its reduced representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HamiltonianModel {
    /// Grover search with linear interpolation between
    /// `H_i = 1 - |in><in|` and `H_f = 1 - |w><w|`.
    GroverLinear { n: u64, marked: u64 },
    /// Grover search with the quadratic interpolation
    /// `H(s) = [(1-s) H_i + s H_f]^2 + s(1-s) (2N-2)/N^2 · 1`.
    GroverQuadratic { n: u64, marked: u64 },
    /// `M` independent qubits, each with
    /// `H_1(s) = (1 - s σ_z - (1-s) σ_x)/2`; the reduced block is the
    /// single-qubit Hamiltonian.
    QubitProduct { qubits: u64 },
    /// Minimal two-level realization of the gap ansatz with `b = 2`:
    /// `H(s) = 1/2 + [(s - s_min)^a σ_z + ΔE_min σ_x]/2`.
    TwoLevelAnsatz { ansatz: GapAnsatz },
}

pub type Mat2 = Matrix2<f64>;

fn clamp_s(s: f64) -> f64 {
    if s < 0.0 || s > 1.0 {
        if s < -1e-12 || s > 1.0 + 1e-12 {
            log::warn!("interpolation parameter s = {s} outside [0, 1]; clamping");
        }
        s.clamp(0.0, 1.0)
    } else {
        s
    }
}

impl HamiltonianModel {
    /// Grover search, linear interpolation. `n ≥ 2`, `marked < n`.
    pub fn grover_linear(n: u64, marked: u64) -> Result<Self> {
        Self::check_grover(n, marked)?;
        Ok(Self::GroverLinear { n, marked })
    }

    /// Grover search, quadratic interpolation. `n ≥ 2`, `marked < n`.
    pub fn grover_quadratic(n: u64, marked: u64) -> Result<Self> {
        Self::check_grover(n, marked)?;
        Ok(Self::GroverQuadratic { n, marked })
    }

    /// Product of `qubits ≥ 1` identical non-interacting qubits.
    pub fn qubit_product(qubits: u64) -> Result<Self> {
        if qubits < 1 {
            return Err(CoreError::InvalidParameter(
                "qubit product: need at least one qubit".into(),
            ));
        }
        Ok(Self::QubitProduct { qubits })
    }

    /// Two-level realization of a gap ansatz. Requires `b = 2` and
    /// `a ∈ {1, 2, 3}`; other shapes have no finite-dimensional realization
    /// here and are only usable as pure gap functions.
    pub fn two_level_ansatz(ansatz: GapAnsatz) -> Result<Self> {
        if ansatz.b() != 2.0 {
            return Err(CoreError::InvalidParameter(format!(
                "two-level ansatz requires b = 2, got b = {}",
                ansatz.b()
            )));
        }
        if !(1..=3).contains(&ansatz.a()) {
            return Err(CoreError::InvalidParameter(format!(
                "two-level ansatz requires a in {{1, 2, 3}}, got a = {}",
                ansatz.a()
            )));
        }
        Ok(Self::TwoLevelAnsatz { ansatz })
    }

    fn check_grover(n: u64, marked: u64) -> Result<()> {
        if n < 2 {
            return Err(CoreError::InvalidParameter(format!(
                "grover: need n >= 2 (the gap formula degenerates), got {n}"
            )));
        }
        if marked >= n {
            return Err(CoreError::InvalidParameter(format!(
                "grover: marked index {marked} out of range for n = {n}"
            )));
        }
        Ok(())
    }

    /// Reduced matrix dimension (2 for every family).
    pub fn dim(&self) -> usize {
        2
    }

    /// Overlap `<in|w> = 1/sqrt(N)` used in the Grover reduction; `None` for
    /// non-Grover families.
    pub fn reduction_overlap(&self) -> Option<f64> {
        match self {
            Self::GroverLinear { n, .. } | Self::GroverQuadratic { n, .. } => {
                Some(1.0 / (*n as f64).sqrt())
            }
            _ => None,
        }
    }

    /// The gap ansatz backing a [`Self::TwoLevelAnsatz`] model.
    pub fn ansatz(&self) -> Option<&GapAnsatz> {
        match self {
            Self::TwoLevelAnsatz { ansatz } => Some(ansatz),
            _ => None,
        }
    }

    fn grover_linear_reduced(n: u64, s: f64) -> Mat2 {
        let ov = 1.0 / (n as f64).sqrt();
        let pv = (1.0 - ov * ov).sqrt();
        // basis {|w>, complement of |w> inside span{|in>, |w>}}
        let hi = Mat2::new(pv * pv, -ov * pv, -ov * pv, ov * ov);
        let hf = Mat2::new(0.0, 0.0, 0.0, 1.0);
        hi * (1.0 - s) + hf * s
    }

    fn grover_quadratic_shift(n: u64, s: f64) -> f64 {
        let nf = n as f64;
        s * (1.0 - s) * (2.0 * nf - 2.0) / (nf * nf)
    }

    /// `H(s)` in the reduced representation. Values of `s` outside `[0, 1]`
    /// clamp (schedules hold the endpoints).
    pub fn hamiltonian_at(&self, s: f64) -> Mat2 {
        let s = clamp_s(s);
        match *self {
            Self::GroverLinear { n, .. } => Self::grover_linear_reduced(n, s),
            Self::GroverQuadratic { n, .. } => {
                let lin = Self::grover_linear_reduced(n, s);
                lin * lin + Mat2::identity() * Self::grover_quadratic_shift(n, s)
            }
            Self::QubitProduct { .. } => {
                Mat2::new(1.0 - s, -(1.0 - s), -(1.0 - s), 1.0 + s) * 0.5
            }
            Self::TwoLevelAnsatz { ansatz } => {
                let z = (s - ansatz.s_min()).powi(ansatz.a() as i32);
                let x = ansatz.gap_min();
                Mat2::new(0.5 * (1.0 + z), 0.5 * x, 0.5 * x, 0.5 * (1.0 - z))
            }
        }
    }

    /// Analytic derivative `H'(s)` in the reduced representation.
    pub fn derivative_at(&self, s: f64) -> Mat2 {
        let s = clamp_s(s);
        match *self {
            Self::GroverLinear { n, .. } => {
                let ov = 1.0 / (n as f64).sqrt();
                let pv = (1.0 - ov * ov).sqrt();
                // H_f - H_i, independent of s
                Mat2::new(-pv * pv, ov * pv, ov * pv, 1.0 - ov * ov)
            }
            Self::GroverQuadratic { n, .. } => {
                let lin = Self::grover_linear_reduced(n, s);
                let dlin = Self::GroverLinear { n, marked: 0 }.derivative_at(s);
                let nf = n as f64;
                dlin * lin + lin * dlin
                    + Mat2::identity() * ((1.0 - 2.0 * s) * (2.0 * nf - 2.0) / (nf * nf))
            }
            Self::QubitProduct { .. } => Mat2::new(-0.5, 0.5, 0.5, 0.5),
            Self::TwoLevelAnsatz { ansatz } => {
                let a = ansatz.a();
                let d = if a == 1 {
                    0.5
                } else {
                    0.5 * a as f64 * (s - ansatz.s_min()).powi(a as i32 - 1)
                };
                Mat2::new(d, 0.0, 0.0, -d)
            }
        }
    }

    /// Trace of `H(s)` over the physical space.
    ///
    /// For the Grover families this is the full N-dimensional trace
    /// (reduced block plus the complement, on which the quadratic scheme's
    /// identity shift also acts). For the qubit product it is the per-factor
    /// trace — the full trace is `M 2^{M-1}` times it, so constancy of one
    /// implies constancy of the other. The two-level ansatz trace is fixed
    /// to 1.
    pub fn trace_at(&self, s: f64) -> f64 {
        let s = clamp_s(s);
        let reduced = self.hamiltonian_at(s).trace();
        match *self {
            Self::GroverLinear { n, .. } => reduced + (n - 2) as f64,
            Self::GroverQuadratic { n, .. } => {
                // complement eigenvalue: 1 (from H_lin^2) plus the identity shift
                reduced + (n - 2) as f64 * (1.0 + Self::grover_quadratic_shift(n, s))
            }
            Self::QubitProduct { .. } | Self::TwoLevelAnsatz { .. } => reduced,
        }
    }

    /// Closed-form fundamental gap `E_1(s) - E_0(s)`.
    pub fn gap(&self, s: f64) -> f64 {
        let s = clamp_s(s);
        match *self {
            // the quadratic scheme distorts the spectrum but not the gap
            Self::GroverLinear { n, .. } | Self::GroverQuadratic { n, .. } => {
                let c = 1.0 - 1.0 / n as f64;
                (1.0 - 4.0 * c * s * (1.0 - s)).sqrt()
            }
            Self::QubitProduct { .. } => (1.0 - 2.0 * s * (1.0 - s)).sqrt(),
            Self::TwoLevelAnsatz { ansatz } => ansatz.gap(s),
        }
    }

    /// The analytically continued gap is only available through a
    /// [`GapAnsatz`]; matrix models reject complex arguments.
    pub fn gap_complex(&self, s: Complex64) -> Result<Complex64> {
        let _ = s;
        Err(CoreError::Unsupported(
            "complex-s gap evaluation is defined for gap ansätze only".into(),
        ))
    }

    /// Upper bound on the spectral norm of the reduced `H(s)`.
    pub fn norm_bound(&self, s: f64) -> f64 {
        let h = self.hamiltonian_at(s);
        let mu = 0.5 * h.trace();
        let delta = 0.5 * (h[(0, 0)] - h[(1, 1)]);
        let r = (delta * delta + h[(0, 1)] * h[(0, 1)]).sqrt();
        mu.abs() + r
    }

    /// Dense N×N Grover Hamiltonian, kept as a validation path
    /// (`n ≤ FULL_REP_LIMIT` only; other families have no dense form here).
    pub fn full_hamiltonian(&self, s: f64) -> Result<DMatrix<f64>> {
        let s = clamp_s(s);
        match *self {
            Self::GroverLinear { n, marked } => {
                Self::check_full(n)?;
                Ok(Self::grover_full_linear(n, marked, s))
            }
            Self::GroverQuadratic { n, marked } => {
                Self::check_full(n)?;
                let lin = Self::grover_full_linear(n, marked, s);
                let mut sq = &lin * &lin;
                let shift = Self::grover_quadratic_shift(n, s);
                for k in 0..n as usize {
                    sq[(k, k)] += shift;
                }
                Ok(sq)
            }
            _ => Err(CoreError::Unsupported(
                "dense representation exists for the Grover families only".into(),
            )),
        }
    }

    fn check_full(n: u64) -> Result<()> {
        if n > FULL_REP_LIMIT {
            return Err(CoreError::Unsupported(format!(
                "dense validation representation is limited to n <= {FULL_REP_LIMIT}, got {n}"
            )));
        }
        Ok(())
    }

    fn grover_full_linear(n: u64, marked: u64, s: f64) -> DMatrix<f64> {
        let n = n as usize;
        let w = marked as usize;
        let inv_n = 1.0 / n as f64;
        // (1-s)(1 - |in><in|) + s(1 - |w><w|)
        let mut h = DMatrix::from_element(n, n, -(1.0 - s) * inv_n);
        for k in 0..n {
            h[(k, k)] += 1.0;
        }
        h[(w, w)] -= s;
        h
    }
}

/// A gap function usable to generate schedules: either a model's fundamental
/// gap, a bare ansatz, or a constant (test fixture).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GapSource {
    Model(HamiltonianModel),
    Ansatz(GapAnsatz),
    Constant(f64),
}

impl GapSource {
    pub fn gap(&self, s: f64) -> f64 {
        match self {
            Self::Model(m) => m.gap(s),
            Self::Ansatz(a) => a.gap(s),
            Self::Constant(g) => *g,
        }
    }

    /// Location of the gap minimum and the width `|Im s̃|` of the feature
    /// around it (the scale that must be resolved by quadrature grids).
    pub fn minimum(&self) -> Option<(f64, f64)> {
        match self {
            Self::Model(HamiltonianModel::GroverLinear { n, .. })
            | Self::Model(HamiltonianModel::GroverQuadratic { n, .. }) => {
                let c = 1.0 - 1.0 / *n as f64;
                Some((0.5, 0.5 / (c * *n as f64).sqrt()))
            }
            Self::Model(HamiltonianModel::QubitProduct { .. }) => Some((0.5, 0.5)),
            Self::Model(HamiltonianModel::TwoLevelAnsatz { ansatz }) => {
                Some(Self::ansatz_minimum(ansatz))
            }
            Self::Ansatz(ansatz) => Some(Self::ansatz_minimum(ansatz)),
            Self::Constant(_) => None,
        }
    }

    fn ansatz_minimum(a: &GapAnsatz) -> (f64, f64) {
        let radius = a.gap_min().powf(a.b() / (2.0 * a.a() as f64));
        let width = radius * (std::f64::consts::PI / (2.0 * a.a() as f64)).sin();
        (a.s_min(), width)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn grover(n: u64) -> HamiltonianModel {
        HamiltonianModel::grover_linear(n, 0).unwrap()
    }

    #[test]
    fn constructor_domain_checks() {
        assert!(HamiltonianModel::grover_linear(1, 0).is_err());
        assert!(HamiltonianModel::grover_linear(4, 4).is_err());
        assert!(HamiltonianModel::grover_quadratic(0, 0).is_err());
        assert!(HamiltonianModel::qubit_product(0).is_err());
        let a = GapAnsatz::new(1, 3.0, 0.1, 0.5).unwrap();
        assert!(HamiltonianModel::two_level_ansatz(a).is_err());
        let a = GapAnsatz::new(4, 2.0, 0.1, 0.5).unwrap();
        assert!(HamiltonianModel::two_level_ansatz(a).is_err());
        assert!(GapAnsatz::new(0, 2.0, 0.1, 0.5).is_err());
        assert!(GapAnsatz::new(1, 2.0, 0.0, 0.5).is_err());
        assert!(GapAnsatz::new(1, 2.0, 0.1, 1.0).is_err());
    }

    #[test]
    fn grover_trace_is_n_minus_one() {
        // Tr(1 - |v><v|) = N - 1 for any unit v, preserved by interpolation
        let m = grover(100);
        for k in 0..=100 {
            let s = k as f64 / 100.0;
            assert_relative_eq!(m.trace_at(s), 99.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn grover_full_final_spectrum_is_projector() {
        let m = HamiltonianModel::grover_linear(4, 3).unwrap();
        let h = m.full_hamiltonian(1.0).unwrap();
        let mut eig = h.symmetric_eigenvalues().as_slice().to_vec();
        eig.sort_by(f64::total_cmp);
        let expect = [0.0, 1.0, 1.0, 1.0];
        for (got, want) in eig.iter().zip(expect) {
            assert_relative_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn grover_gap_midpoint() {
        assert_relative_eq!(grover(100).gap(0.5), 0.1, epsilon = 1e-14);
        assert_relative_eq!(grover(4).gap(0.5), 0.5, epsilon = 1e-14);
        assert_relative_eq!(grover(100).gap(0.0), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn quadratic_trace_constant_over_full_space() {
        let m = HamiltonianModel::grover_quadratic(100, 0).unwrap();
        for s in [0.0, 0.3, 1.0] {
            assert_relative_eq!(m.trace_at(s), 99.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn quadratic_gap_equals_linear_gap() {
        let lin = grover(100);
        let quad = HamiltonianModel::grover_quadratic(100, 0).unwrap();
        for k in 0..=20 {
            let s = k as f64 / 20.0;
            assert_relative_eq!(quad.gap(s), lin.gap(s), epsilon = 1e-10);
            // and the matrix realization agrees: eigenvalue split of the
            // reduced quadratic block
            let h = quad.hamiltonian_at(s);
            let delta = 0.5 * (h[(0, 0)] - h[(1, 1)]);
            let split = 2.0 * (delta * delta + h[(0, 1)] * h[(0, 1)]).sqrt();
            assert_relative_eq!(split, lin.gap(s), epsilon = 1e-10);
        }
    }

    #[test]
    fn quadratic_at_zero_is_projector_for_n2() {
        // H_i is a projector, so H_nl(0) = H_i^2 = H_i
        let quad = HamiltonianModel::grover_quadratic(2, 0).unwrap();
        let lin = grover(2);
        let d = quad.hamiltonian_at(0.0) - lin.hamiltonian_at(0.0);
        assert!(d.amax() < 1e-14);
        assert_relative_eq!(quad.gap(0.0), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn qubit_product_gap() {
        let m1 = HamiltonianModel::qubit_product(1).unwrap();
        let m8 = HamiltonianModel::qubit_product(8).unwrap();
        assert_relative_eq!(m1.gap(0.5), 0.5_f64.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(m1.gap(0.0), 1.0, epsilon = 1e-14);
        assert_relative_eq!(m1.gap(1.0), 1.0, epsilon = 1e-14);
        for k in 0..=10 {
            let s = k as f64 / 10.0;
            // the reduced block, and hence the gap, ignores the qubit count
            assert_relative_eq!(m8.gap(s), m1.gap(s), epsilon = 1e-15);
            assert_relative_eq!(m1.gap(s), (1.0 - 2.0 * s * (1.0 - s)).sqrt(), epsilon = 1e-14);
        }
    }

    #[test]
    fn qubit_product_endpoints() {
        let m = HamiltonianModel::qubit_product(1).unwrap();
        let h1 = m.hamiltonian_at(1.0);
        assert!((h1 - Mat2::new(0.0, 0.0, 0.0, 1.0)).amax() < 1e-15);
        let dh = m.derivative_at(0.3);
        assert!((dh - Mat2::new(-0.5, 0.5, 0.5, 0.5)).amax() < 1e-15);
    }

    #[test]
    fn two_level_ansatz_matrix() {
        let a = GapAnsatz::new(1, 2.0, 0.1, 0.5).unwrap();
        let m = HamiltonianModel::two_level_ansatz(a).unwrap();
        assert_relative_eq!(m.gap(0.5), 0.1, epsilon = 1e-14);
        // sqrt(0.0625 + 0.01); for a = 2 the value coincides since 0.5^4 = 0.0625
        assert_relative_eq!(m.gap(0.0), 0.0725_f64.sqrt(), epsilon = 1e-14);
        let a2 = GapAnsatz::new(2, 2.0, 0.1, 0.5).unwrap();
        let m2 = HamiltonianModel::two_level_ansatz(a2).unwrap();
        assert_relative_eq!(m2.gap(0.0), 0.0725_f64.sqrt(), epsilon = 1e-14);
        let h = m.hamiltonian_at(0.5);
        assert_relative_eq!(h[(0, 1)], 0.05, epsilon = 1e-15);
        assert_relative_eq!(h[(0, 0)] - h[(1, 1)], 0.0, epsilon = 1e-15);
        for k in 0..=10 {
            let s = k as f64 / 10.0;
            assert_relative_eq!(m.trace_at(s), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn ansatz_gap_floor() {
        let a = GapAnsatz::new(2, 2.0, 0.3, 0.4).unwrap();
        assert_relative_eq!(a.gap(0.4), 0.3, epsilon = 1e-12);
        for k in -10..=20 {
            let s = k as f64 / 10.0;
            assert!(a.gap(s) >= a.gap_min());
        }
    }

    #[test]
    fn grover_derivative_is_constant() {
        let m = grover(100);
        let d = m.derivative_at(0.2) - m.derivative_at(0.9);
        assert!(d.amax() < 1e-15);
    }

    #[test]
    fn derivatives_match_central_differences() {
        let eps = 1e-5;
        let models = [
            grover(100),
            HamiltonianModel::grover_quadratic(100, 0).unwrap(),
            HamiltonianModel::qubit_product(3).unwrap(),
            HamiltonianModel::two_level_ansatz(GapAnsatz::new(2, 2.0, 0.1, 0.5).unwrap())
                .unwrap(),
        ];
        for m in models {
            for k in 1..10 {
                let s = k as f64 / 10.0;
                let fd = (m.hamiltonian_at(s + eps) - m.hamiltonian_at(s - eps)) / (2.0 * eps);
                assert!(
                    (fd - m.derivative_at(s)).amax() < 1e-8,
                    "central-difference mismatch for {m:?} at s = {s}"
                );
            }
        }
    }

    #[test]
    fn out_of_range_s_clamps() {
        let m = grover(100);
        assert!((m.hamiltonian_at(-0.5) - m.hamiltonian_at(0.0)).amax() == 0.0);
        assert!((m.hamiltonian_at(1.5) - m.hamiltonian_at(1.0)).amax() == 0.0);
    }

    #[test]
    fn reduction_overlap_reported() {
        assert_relative_eq!(grover(100).reduction_overlap().unwrap(), 0.1);
        assert!(HamiltonianModel::qubit_product(2)
            .unwrap()
            .reduction_overlap()
            .is_none());
    }

    #[test]
    fn complex_gap_rejected_for_matrix_models() {
        let m = grover(100);
        assert!(m.gap_complex(Complex64::new(0.5, -0.1)).is_err());
    }
}

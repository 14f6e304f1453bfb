//! Simulation and analysis toolkit for adiabatic quantum evolution.
//!
//! The crate is organized around a small set of reduced (mostly two-level)
//! Hamiltonian families whose interpolation dynamics can be classified by
//! `ds/dt = ΔE(s) h(s)` with `h(s) = α_d ΔE^d(s)`:
//!
//! - [`model`] — Hamiltonian families `H(s)` and the gap ansatz.
//! - [`spectrum`] — instantaneous eigensystems, gap functions, complex gap
//!   zeros, and the suppression-criterion integral.
//! - [`schedule`] — interpolation functions `s(t)` generated from the gap,
//!   with `C0`/`C1`/`C∞` endpoint smoothing.
//! - [`evolve`] — adaptive Schrödinger integration, instantaneous-basis
//!   occupations, and perturbative error estimators.
//! - [`experiments`] — runtime-to-fidelity searches, scaling sweeps,
//!   error-decay curves, and the degeneracy study.
//!
//! Numerical support lives in [`quad`] (adaptive quadrature), [`rk`]
//! (embedded Runge–Kutta), and [`fit`] (least-squares scaling fits).

pub mod error;
pub mod evolve;
pub mod experiments;
pub mod fit;
pub mod model;
pub mod quad;
pub mod rk;
pub mod schedule;
pub mod spectrum;

pub use error::CoreError;
pub use evolve::{occupations, EvolutionResult, FirstOrderEstimate};
pub use experiments::{RuntimeSearchResult, ScheduleSpec, SearchConfig};
pub use fit::{LinearFit, ScalingFit};
pub use model::{GapAnsatz, GapSource, HamiltonianModel};
pub use schedule::{Schedule, SchedulePlan, Smoothness};
pub use spectrum::{CriterionReport, EigenSystem, SingularitySet};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;

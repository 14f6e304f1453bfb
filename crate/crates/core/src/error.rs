use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// A constructor or operation received parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested operation is not defined for this object.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// The adaptive integrator underflowed its step size.
    #[error("step underflow at t = {t} (dt = {dt}); local error cannot be met")]
    StepUnderflow { t: f64, dt: f64 },

    /// Resolving the oscillatory phase would exceed the node budget.
    #[error(
        "phase resolution unattainable: {needed} nodes needed, budget is {budget}; \
         refusing to return an aliased value"
    )]
    PhaseResolution { needed: usize, budget: usize },

    /// A runtime search hit its cap without meeting the fidelity target.
    #[error(
        "fidelity target {target} not met by T = {t_cap:.3e} (best fidelity {best_fidelity})"
    )]
    TargetUnreachable {
        target: f64,
        t_cap: f64,
        best_fidelity: f64,
    },

    /// An internal consistency check failed (should not happen).
    #[error("internal error: {0}")]
    Internal(String),
}

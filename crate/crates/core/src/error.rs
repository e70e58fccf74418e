use thiserror::Error;

/// Errors raised by the numerical kernel and the geometric layers above it.
///
/// Payloads are reported as `f64` regardless of the scalar type in use.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("evaluation budget of {max_evals} exhausted (value {value}, error estimate {error_estimate})")]
    BudgetExhausted {
        max_evals: usize,
        value: f64,
        error_estimate: f64,
    },
    #[error("integrand is not finite at x = {x}")]
    NonFiniteIntegrand { x: f64 },
    #[error("improper integral appears divergent (transformed integrand grows like {growth} near infinity)")]
    DivergenceDetected { growth: f64 },
    #[error("step size underflow at t = {t} (h = {h})")]
    StepUnderflow { t: f64, h: f64 },
    #[error("non-finite ODE state at t = {t}")]
    NonFiniteState { t: f64 },
    #[error("no sign change on [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("function value not finite at x = {x}")]
    NonFiniteValue { x: f64 },
    #[error("need at least {needed} points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("log-log fit requires strictly positive data (index {index})")]
    NonPositiveData { index: usize },
    #[error("mass must be positive, got {mass}")]
    NonPositiveMass { mass: f64 },
    #[error("area must be positive, got {area}")]
    NonPositiveArea { area: f64 },
    #[error("horizon condition violated: {0}")]
    HorizonConditionViolated(String),
    #[error("matching with the exact tail failed: {0}")]
    MatchingFailed(String),
    #[error("{what} = {value} outside the domain [{lo}, {hi}]")]
    OutOfDomain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("metric has no horizon")]
    NoHorizon,
    #[error("renormalized volume tail does not converge")]
    TailDivergence,
    #[error("swept-volume integrand is not positive at t = {t}")]
    IntegrandNonPositive { t: f64 },
    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("area {area} does not exceed the horizon area {horizon_area}")]
    AreaBelowHorizon { area: f64, horizon_area: f64 },
    #[error("could not invert {what} at {target}")]
    InversionFailure { what: &'static str, target: f64 },
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("mean curvature not above 2 at r = {r} (H = {h})")]
    PositivityFailed { r: f64, h: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

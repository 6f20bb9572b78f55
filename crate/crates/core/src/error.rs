use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("integrand is not finite at t = {at}")]
    NonFiniteIntegrand { at: f64 },

    /// The evaluation budget ran out; `value` is the best estimate reached.
    #[error(
        "tolerance {tol:e} not reached after {evaluations} evaluations \
         (estimate {value}, error estimate {abs_error_estimate:e})"
    )]
    ToleranceNotReached {
        value: f64,
        abs_error_estimate: f64,
        evaluations: usize,
        tol: f64,
    },

    #[error("argument {0} is not finite")]
    NonFiniteArgument(f64),

    #[error("invalid tolerance {0}: must be positive and finite")]
    InvalidTolerance(f64),

    #[error("invalid cutoff parameters: {0}")]
    InvalidCutoff(String),

    #[error("invalid interval [{a}, {b}): a must be less than b")]
    InvalidInterval { a: f64, b: f64 },

    #[error("invalid piecewise spec: {0}")]
    InvalidSpec(String),

    #[error("argument {value} is outside the precision plan (n_max = {n_max})")]
    OutOfPlan { value: f64, n_max: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid precision plan: {0}")]
    InvalidPlan(String),
}

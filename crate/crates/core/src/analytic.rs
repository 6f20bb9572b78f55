//! Step, sign, zero-indicator and nascent-delta functions written as
//! integrals with elementary antiderivatives.
//!
//! Every function is evaluated at finite cutoffs (see [`CutoffParams`]) and
//! has two backends: [`Backend::Quadrature`] integrates the integral form,
//! [`Backend::ClosedForm`] evaluates its antiderivative at the cutoffs. The
//! exact discrete values (0, ½, 1) are recovered only as limits, or on
//! request through [`snap`].
//!
//! | name  | integral form                                   | closed form at cutoffs            |
//! |-------|-------------------------------------------------|-----------------------------------|
//! | `f`   | `∫₀^T x e^{xt}/(1+e^{xt})² dt`                   | `½ − 1/(1+e^{xT})`                |
//! | `c`   | `∫₀^{π/2−ε} x sec²t e^{−x tan t}/(1+e^{−x tan t})² dt` | `½ − 1/(1+e^{xU})`          |
//! | `u`   | `∫₀^T x² e^{−t x²} dt`                           | `1 − e^{−T x²}`                   |
//! | `q`   | `∫₀^{π/2−ε} x² sec²t e^{−x² tan t} dt`           | `1 − e^{−U x²}`                   |
//! | `rt`  | `1 − q(x)`                                      | `e^{−U x²}`                       |
//! | `H2`  | `c(x) + ½`                                      | `logistic(U x)`                   |
//! | `H1`  | `1 + ∫₀^{π/2−ε} (c-integrand − ½ q-integrand) dt` | `logistic(U x) + ½ e^{−U x²}`   |
//! | delta | derivative of the half-line `H1` under the integral | `T ρ(T x) − 2 T x e^{−T x²}`  |
//!
//! `ρ` is the logistic density. Exponentials are only ever formed with
//! non-positive arguments, so nothing overflows at large `x·T`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_half_line, integrate_tan_interval, CutoffParams};
use crate::scalar::{logistic, logistic_density, Scalar};

/// Absolute tolerance used by [`snap`] unless the caller picks another.
pub const DEFAULT_SNAP_ATOL: f64 = 1e-9;

/// Which discrete Heaviside convention a step evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `H1(0) = 1`.
    H1,
    /// `H2(0) = ½`.
    H2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    Quadrature,
    #[default]
    ClosedForm,
}

/// The named functions, for dispatch by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    F,
    C,
    U,
    Q,
    Rt,
    H1,
    H2,
    Delta,
}

impl Function {
    pub const ALL: [Function; 8] = [
        Function::F,
        Function::C,
        Function::U,
        Function::Q,
        Function::Rt,
        Function::H1,
        Function::H2,
        Function::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Function::F => "f",
            Function::C => "c",
            Function::U => "u",
            Function::Q => "q",
            Function::Rt => "rt",
            Function::H1 => "H1",
            Function::H2 => "H2",
            Function::Delta => "delta",
        }
    }

    pub fn eval<S: Scalar>(self, x: S, params: &CutoffParams<S>, backend: Backend, tol: S) -> Result<S> {
        match self {
            Function::F => eval_f(x, params, backend, tol),
            Function::C => eval_c(x, params, backend, tol),
            Function::U => eval_u(x, params, backend, tol),
            Function::Q => eval_q(x, params, backend, tol),
            Function::Rt => eval_rt(x, params, backend, tol),
            Function::H1 => eval_step(StepKind::H1, x, params, backend, tol),
            Function::H2 => eval_step(StepKind::H2, x, params, backend, tol),
            Function::Delta => eval_delta(x, params, backend, tol),
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFunction(pub String);

impl fmt::Display for UnknownFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown function `{}` (expected one of f, c, u, q, rt, H1, H2, delta)", self.0)
    }
}

impl std::error::Error for UnknownFunction {}

impl FromStr for Function {
    type Err = UnknownFunction;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Function::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFunction(s.to_string()))
    }
}

/// The integrands exactly as they appear under the integral signs, written in
/// overflow-free form.
pub mod integrands {
    use super::*;

    /// `x e^{xt} / (1 + e^{xt})²`
    pub fn f<S: Scalar>(x: S, t: S) -> S {
        x * logistic_density(x * t)
    }

    /// `x sec²t e^{−x tan t} / (1 + e^{−x tan t})²`
    pub fn c<S: Scalar>(x: S, t: S) -> S {
        let w = t.tan();
        x * (S::one() + w * w) * logistic_density(x * w)
    }

    /// `x² e^{−t x²}`
    pub fn u<S: Scalar>(x: S, t: S) -> S {
        let k = x * x;
        k * (-t * k).exp()
    }

    /// `e^{−x² tan t} x² sec²t`
    pub fn q<S: Scalar>(x: S, t: S) -> S {
        let w = t.tan();
        let k = x * x;
        (-k * w).exp() * k * (S::one() + w * w)
    }

    /// First grouped integrand of the delta derivative:
    /// `(e^{tx} + e^{tx} t x)/(1+e^{tx})² − 2 e^{−t x²} x`.
    pub fn delta_first<S: Scalar>(x: S, t: S) -> S {
        let z = t * x;
        logistic_density(z) * (S::one() + z) - S::two() * (-t * x * x).exp() * x
    }

    /// Second grouped integrand of the delta derivative:
    /// `2 e^{−t x²} t x³ − 2 e^{2tx} t x/(1+e^{tx})³`.
    pub fn delta_second<S: Scalar>(x: S, t: S) -> S {
        let z = t * x;
        // e^{2z}/(1+e^z)³ = ρ(z)·σ(z)
        S::two() * (-t * x * x).exp() * t * x * x * x - S::two() * z * logistic_density(z) * logistic(z)
    }
}

fn check_inputs<S: Scalar>(x: S, tol: S) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::NonFiniteArgument(x.as_f64()));
    }
    if !(tol > S::zero() && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol.as_f64()));
    }
    Ok(())
}

/// Sign-like function `f`: `−½`, `0`, `½` in the limit `T → ∞`.
pub fn eval_f<S: Scalar>(x: S, params: &CutoffParams<S>, backend: Backend, tol: S) -> Result<S> {
    check_inputs(x, tol)?;
    match backend {
        // ½ − 1/(1+e^z) = ½ tanh(z/2)
        Backend::ClosedForm => Ok(S::half() * (x * params.half_line() * S::half()).tanh()),
        Backend::Quadrature => Ok(integrate_half_line(|t| integrands::f(x, t), params, tol)?.value),
    }
}

/// Tangent-interval twin of [`eval_f`], with `U` in place of `T`.
pub fn eval_c<S: Scalar>(x: S, params: &CutoffParams<S>, backend: Backend, tol: S) -> Result<S> {
    check_inputs(x, tol)?;
    match backend {
        Backend::ClosedForm => Ok(S::half() * (x * params.indicator_scale() * S::half()).tanh()),
        Backend::Quadrature => Ok(integrate_tan_interval(|t| integrands::c(x, t), params, tol)?.value),
    }
}

/// Non-zero indicator `u`: `0` at `x = 0`, `1 − e^{−T x²}` elsewhere.
pub fn eval_u<S: Scalar>(x: S, params: &CutoffParams<S>, backend: Backend, tol: S) -> Result<S> {
    check_inputs(x, tol)?;
    match backend {
        Backend::ClosedForm => Ok(-(-params.half_line() * x * x).exp_m1()),
        Backend::Quadrature => Ok(integrate_half_line(|t| integrands::u(x, t), params, tol)?.value),
    }
}

/// Tangent-interval twin of [`eval_u`].
pub fn eval_q<S: Scalar>(x: S, params: &CutoffParams<S>, backend: Backend, tol: S) -> Result<S> {
    check_inputs(x, tol)?;
    match backend {
        Backend::ClosedForm => Ok(-(-params.indicator_scale() * x * x).exp_m1()),
        Backend::Quadrature => Ok(integrate_tan_interval(|t| integrands::q(x, t), params, tol)?.value),
    }
}

/// Zero indicator `rt = 1 − q`: exactly 1 at `x = 0`, a Gaussian bump of scale `U`.
pub fn eval_rt<S: Scalar>(x: S, params: &CutoffParams<S>, backend: Backend, tol: S) -> Result<S> {
    check_inputs(x, tol)?;
    match backend {
        Backend::ClosedForm => Ok((-params.indicator_scale() * x * x).exp()),
        Backend::Quadrature => Ok(S::one() - eval_q(x, params, backend, tol)?),
    }
}

/// Heaviside step in either convention.
pub fn eval_step<S: Scalar>(
    kind: StepKind,
    x: S,
    params: &CutoffParams<S>,
    backend: Backend,
    tol: S,
) -> Result<S> {
    check_inputs(x, tol)?;
    let scale = params.indicator_scale();
    match (kind, backend) {
        (StepKind::H2, Backend::ClosedForm) => Ok(logistic(scale * x)),
        (StepKind::H1, Backend::ClosedForm) => Ok(logistic(scale * x) + S::half() * (-scale * x * x).exp()),
        (StepKind::H2, Backend::Quadrature) => Ok(eval_c(x, params, backend, tol)? + S::half()),
        (StepKind::H1, Backend::Quadrature) => {
            let combined = |t: S| integrands::c(x, t) - S::half() * integrands::q(x, t);
            Ok(S::one() + integrate_tan_interval(combined, params, tol)?.value)
        }
    }
}

/// Nascent Dirac delta: the `x`-derivative of the half-line `H1`
/// (`1 + ∫₀^T (e^{−t} − x² e^{−t x²} + x e^{xt}/(1+e^{xt})²) dt` up to the
/// constant `e^{−t}` term). Finite at every cutoff, `T/4` at `x = 0`.
pub fn eval_delta<S: Scalar>(x: S, params: &CutoffParams<S>, backend: Backend, tol: S) -> Result<S> {
    check_inputs(x, tol)?;
    let t_max = params.half_line();
    match backend {
        Backend::ClosedForm => {
            Ok(t_max * logistic_density(t_max * x) - S::two() * t_max * x * (-t_max * x * x).exp())
        }
        Backend::Quadrature => {
            let half_tol = tol * S::half();
            let first = integrate_half_line(|t| integrands::delta_first(x, t), params, half_tol)?;
            let second = integrate_half_line(|t| integrands::delta_second(x, t), params, half_tol)?;
            Ok(first.value + second.value)
        }
    }
}

/// Rounds `value` to the nearest multiple of ½ when it lies within `atol`
/// of one; otherwise returns it unchanged. Never applied implicitly.
pub fn snap<S: Scalar>(value: S, atol: S) -> S {
    let target = (value * S::two()).round() * S::half();
    if (value - target).abs() <= atol {
        target
    } else {
        value
    }
}

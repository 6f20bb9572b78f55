//! Composition of a piecewise definition into one expression built from
//! `H1` steps and unit impulses.
//!
//! For breakpoints `x₁ < … < xₙ` and branches `t₀ … tₙ` the composed value is
//!
//! ```text
//! (1 − H1(x − x₁))·t₀(x) + Σᵢ₌₁ⁿ⁻¹ I(x, xᵢ, xᵢ₊₁)·tᵢ(x) + H1(x − xₙ)·tₙ(x)
//! ```
//!
//! with `I(x, a, b) = H1(x − a) − H1(x − b)`. Every interval `[xᵢ, xᵢ₊₁)` gets
//! exactly one impulse, so a single breakpoint needs none.

use std::fmt;
use std::sync::Arc;

use crate::analytic::{eval_step, Backend, StepKind};
use crate::error::{Error, Result};
use crate::quadrature::CutoffParams;
use crate::scalar::Scalar;

pub type Branch<S> = Arc<dyn Fn(S) -> S + Send + Sync>;

#[derive(Clone)]
pub struct PiecewiseSpec<S> {
    breakpoints: Vec<S>,
    branches: Vec<Branch<S>>,
}

impl<S: Scalar> PiecewiseSpec<S> {
    pub fn new(breakpoints: Vec<S>, branches: Vec<Branch<S>>) -> Result<Self> {
        if breakpoints.is_empty() {
            return Err(Error::InvalidSpec("at least one breakpoint is required".into()));
        }
        if let Some(bad) = breakpoints.iter().find(|b| !b.is_finite()) {
            return Err(Error::InvalidSpec(format!("breakpoint {bad} is not finite")));
        }
        if let Some(i) = breakpoints.windows(2).position(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidSpec(format!(
                "breakpoints must be strictly increasing ({} then {})",
                breakpoints[i],
                breakpoints[i + 1]
            )));
        }
        if branches.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidSpec(format!(
                "{} breakpoints need {} branches, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                branches.len()
            )));
        }
        Ok(Self { breakpoints, branches })
    }

    /// Convenience constructor from plain closures.
    pub fn from_fns<F>(breakpoints: Vec<S>, branches: Vec<F>) -> Result<Self>
    where
        F: Fn(S) -> S + Send + Sync + 'static,
    {
        let branches = branches.into_iter().map(|f| Arc::new(f) as Branch<S>).collect();
        Self::new(breakpoints, branches)
    }

    pub fn breakpoints(&self) -> &[S] {
        &self.breakpoints
    }

    pub fn branches(&self) -> &[Branch<S>] {
        &self.branches
    }

    /// Smallest gap between consecutive breakpoints, `None` for a single breakpoint.
    pub fn min_gap(&self) -> Option<S> {
        self.breakpoints
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(None, |acc: Option<S>, g| Some(acc.map_or(g, |m| m.min(g))))
    }

    /// Index of the branch that owns `x` under left-closed, right-open intervals.
    pub fn branch_index(&self, x: S) -> usize {
        self.breakpoints.partition_point(|&b| b <= x)
    }

    /// Direct evaluation by picking the owning branch.
    pub fn dispatch(&self, x: S) -> S {
        (self.branches[self.branch_index(x)])(x)
    }
}

impl<S: fmt::Debug> fmt::Debug for PiecewiseSpec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PiecewiseSpec")
            .field("breakpoints", &self.breakpoints)
            .field("branches", &self.branches.len())
            .finish()
    }
}

/// Indicator scale that keeps every step sharp relative to the breakpoint
/// spacing: `max(50, 50/g, 200/g²)` for minimum gap `g`.
///
/// The logistic part of `H1` has width `~1/U` while its `½·rt` part has
/// width `~1/√U`; the last term keeps the latter below a quarter gap.
pub fn default_scale<S: Scalar>(min_gap: Option<S>) -> S {
    let base = S::lit(50.0);
    match min_gap {
        None => base,
        Some(g) => base.max(S::lit(50.0) / g).max(S::lit(200.0) / (g * g)),
    }
}

/// Distance from a breakpoint beyond which the step leakage
/// `logistic(−U d) + ½ e^{−U d²}` is below `e^{−36}`.
pub fn transition_width<S: Scalar>(scale: S) -> S {
    let k = S::lit(36.0);
    (k / scale).max((k / scale).sqrt())
}

/// Unit impulse `I(x, a, b) = H1(x − a) − H1(x − b)`: ≈1 on `[a, b)`, ≈0 elsewhere.
pub fn impulse<S: Scalar>(x: S, a: S, b: S, params: &CutoffParams<S>) -> Result<S> {
    impulse_with(x, a, b, params, Backend::ClosedForm, S::lit(1e-10))
}

pub fn impulse_with<S: Scalar>(
    x: S,
    a: S,
    b: S,
    params: &CutoffParams<S>,
    backend: Backend,
    tol: S,
) -> Result<S> {
    if !(a < b) {
        return Err(Error::InvalidInterval {
            a: a.as_f64(),
            b: b.as_f64(),
        });
    }
    Ok(eval_step(StepKind::H1, x - a, params, backend, tol)? - eval_step(StepKind::H1, x - b, params, backend, tol)?)
}

/// Composes `spec` with `T = 100` and the [`default_scale`] for its spacing.
pub fn compose<S: Scalar>(spec: PiecewiseSpec<S>) -> Composed<S> {
    let params = CutoffParams::with_scale(S::lit(100.0), default_scale(spec.min_gap()))
        .expect("default scale exceeds 1");
    compose_with(spec, params)
}

pub fn compose_with<S: Scalar>(spec: PiecewiseSpec<S>, params: CutoffParams<S>) -> Composed<S> {
    Composed { spec, params }
}

/// A piecewise function expressed through step functions. Immutable.
#[derive(Clone, Debug)]
pub struct Composed<S> {
    spec: PiecewiseSpec<S>,
    params: CutoffParams<S>,
}

impl<S: Scalar> Composed<S> {
    pub fn spec(&self) -> &PiecewiseSpec<S> {
        &self.spec
    }

    pub fn params(&self) -> &CutoffParams<S> {
        &self.params
    }

    /// Closed-form evaluation.
    pub fn eval(&self, x: S) -> S {
        self.eval_with(x, Backend::ClosedForm, S::lit(1e-10))
            .expect("closed-form steps accept any finite argument")
    }

    pub fn eval_with(&self, x: S, backend: Backend, tol: S) -> Result<S> {
        let weights = self.indicators_with(x, backend, tol)?;
        Ok(weights
            .iter()
            .zip(&self.spec.branches)
            .fold(S::zero(), |acc, (&w, branch)| acc + w * branch(x)))
    }

    /// The weight attached to each branch at `x`; they sum to 1.
    pub fn indicators(&self, x: S) -> Vec<S> {
        self.indicators_with(x, Backend::ClosedForm, S::lit(1e-10))
            .expect("closed-form steps accept any finite argument")
    }

    pub fn indicators_with(&self, x: S, backend: Backend, tol: S) -> Result<Vec<S>> {
        let bps = &self.spec.breakpoints;
        let mut weights = Vec::with_capacity(bps.len() + 1);
        let first = eval_step(StepKind::H1, x - bps[0], &self.params, backend, tol)?;
        weights.push(S::one() - first);
        for w in bps.windows(2) {
            weights.push(impulse_with(x, w[0], w[1], &self.params, backend, tol)?);
        }
        weights.push(eval_step(StepKind::H1, x - bps[bps.len() - 1], &self.params, backend, tol)?);
        Ok(weights)
    }
}

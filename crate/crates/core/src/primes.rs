//! Divisor count, prime indicator and prime-counting function assembled from
//! the zero indicator `rt` and the step `H1`, next to exact integer oracles.
//!
//! * `σ₀(n) = Σᵢ₌₁ⁿ rt(sin(π·(n mod i)/i))`
//! * `fes(n) = rt(σ₀(n) − 2)`
//! * `π(x) = Σᵢ₌₁^{⌊x⌋+1} fes(i)·H1(x − i)`
//!
//! The sums stop where every further term is exactly zero in exact
//! arithmetic (no divisor exceeds `n`; `H1(x − i)` vanishes for `i > x`).
//! Evaluating the `i > n` tail numerically would be wrong, not merely slow:
//! `sin(πn/i) → 0` as `i` grows, so each truncated `rt` term leaks toward 1.
//!
//! The sine argument uses the exact remainder `n mod i`, so divisor terms are
//! exactly `rt(0) = 1`; `sin(π·k)` for integer `k` is not zero in floating point.

use crate::analytic::{eval_rt, eval_step, Backend, StepKind};
use crate::error::{Error, Result};
use crate::quadrature::CutoffParams;
use crate::scalar::Scalar;

/// Upper limit the CLI accepts for `n_max`.
pub const N_MAX_LIMIT: u64 = 10_000;

pub const DEFAULT_ROUND_MARGIN: f64 = 0.25;

// Closed-form evaluation ignores the tolerance; any positive value will do.
const CLOSED_FORM_TOL: f64 = 1e-12;

/// Indicator scale chosen for a range `1..=n_max` so that non-divisor
/// leakage, summed over at most `n_max` terms, stays below `round_margin`:
/// `e^{−U·sin²(π/n_max)} < round_margin / n_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPlan<S> {
    n_max: u64,
    indicator_scale: S,
    round_margin: S,
    cutoffs: CutoffParams<S>,
}

impl<S: Scalar> PrecisionPlan<S> {
    /// A plan with an explicit scale; the leakage invariant is not enforced
    /// (see [`PrecisionPlan::satisfies_invariant`]). `U` must exceed 1.
    pub fn with_scale(n_max: u64, indicator_scale: S, round_margin: S) -> Result<Self> {
        check_plan_inputs(n_max, round_margin.as_f64())?;
        let cutoffs = CutoffParams::with_scale(S::lit(100.0), indicator_scale)
            .map_err(|e| Error::InvalidPlan(e.to_string()))?;
        Ok(Self {
            n_max,
            indicator_scale,
            round_margin,
            cutoffs,
        })
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn indicator_scale(&self) -> S {
        self.indicator_scale
    }

    pub fn round_margin(&self) -> S {
        self.round_margin
    }

    /// The cutoffs used for every `rt` and `H1` evaluation under this plan.
    pub fn cutoffs(&self) -> &CutoffParams<S> {
        &self.cutoffs
    }

    pub fn satisfies_invariant(&self) -> bool {
        leakage_ok(self.n_max, self.indicator_scale.as_f64(), self.round_margin.as_f64())
    }

    /// Nearest integer when `value` lies within the rounding margin of it,
    /// otherwise `value` unchanged.
    pub fn snap(&self, value: S) -> S {
        let target = value.round();
        if (value - target).abs() <= self.round_margin {
            target
        } else {
            value
        }
    }

    fn check(&self, value: f64) -> Result<()> {
        if value >= 0.0 && value <= self.n_max as f64 {
            Ok(())
        } else {
            Err(Error::OutOfPlan {
                value,
                n_max: self.n_max,
            })
        }
    }
}

fn check_plan_inputs(n_max: u64, round_margin: f64) -> Result<()> {
    if n_max == 0 {
        return Err(Error::InvalidPlan("n_max must be at least 1".into()));
    }
    if !(round_margin > 0.0 && round_margin < 0.5) {
        return Err(Error::InvalidPlan(format!("round margin {round_margin} must lie in (0, 0.5)")));
    }
    Ok(())
}

fn leakage_ok(n_max: u64, scale: f64, round_margin: f64) -> bool {
    // Step and indicator tails one unit from their breakpoint, over the
    // n_max + 1 terms of the counting sum.
    let tails = (n_max + 1) as f64 * (-scale).exp() < round_margin;
    if n_max == 1 {
        // No non-divisor exists below 2.
        return tails;
    }
    let s = (std::f64::consts::PI / n_max as f64).sin();
    tails && (-scale * s * s).exp() < round_margin / n_max as f64
}

/// Smallest power of two `U ≥ 2` satisfying the plan invariant.
pub fn plan_precision<S: Scalar>(n_max: u64, round_margin: S) -> Result<PrecisionPlan<S>> {
    let margin = round_margin.as_f64();
    check_plan_inputs(n_max, margin)?;
    let mut scale = 2.0_f64;
    while !leakage_ok(n_max, scale, margin) {
        scale *= 2.0;
    }
    PrecisionPlan::with_scale(n_max, S::lit(scale), round_margin)
}

fn check_n<S: Scalar>(n: u64, plan: &PrecisionPlan<S>) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfPlan { value: 0.0, n_max: plan.n_max });
    }
    plan.check(n as f64)
}

/// `rt(sin(π·r/i))` for remainder `r = n mod i`.
fn divisor_term<S: Scalar>(n: u64, i: u64, plan: &PrecisionPlan<S>) -> S {
    let r = n % i;
    let arg = (S::PI() * S::lit(r as f64) / S::lit(i as f64)).sin();
    eval_rt(arg, plan.cutoffs(), Backend::ClosedForm, S::lit(CLOSED_FORM_TOL)).expect("finite argument")
}

fn sigma0_unchecked<S: Scalar>(n: u64, plan: &PrecisionPlan<S>) -> S {
    (1..=n).fold(S::zero(), |acc, i| acc + divisor_term(n, i, plan))
}

fn fes_from_sigma0<S: Scalar>(sigma0: S, plan: &PrecisionPlan<S>) -> S {
    eval_rt(sigma0 - S::two(), plan.cutoffs(), Backend::ClosedForm, S::lit(CLOSED_FORM_TOL))
        .expect("finite argument")
}

fn h1<S: Scalar>(x: S, plan: &PrecisionPlan<S>) -> S {
    eval_step(StepKind::H1, x, plan.cutoffs(), Backend::ClosedForm, S::lit(CLOSED_FORM_TOL)).expect("finite argument")
}

/// Analytic divisor count; within the plan's rounding margin of `σ₀(n)`.
pub fn sigma0_analytic<S: Scalar>(n: u64, plan: &PrecisionPlan<S>) -> Result<S> {
    check_n(n, plan)?;
    Ok(sigma0_unchecked(n, plan))
}

/// Exact divisor count by trial division.
pub fn sigma0_oracle(n: u64) -> u64 {
    assert!(n >= 1, "divisor count is defined for n >= 1");
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

/// Analytic prime indicator: ≈1 for primes, ≈0 for composites and for 1.
pub fn fes<S: Scalar>(n: u64, plan: &PrecisionPlan<S>) -> Result<S> {
    check_n(n, plan)?;
    Ok(fes_from_sigma0(sigma0_unchecked(n, plan), plan))
}

/// Analytic prime-counting function for `0 ≤ x ≤ n_max`.
pub fn pi_analytic<S: Scalar>(x: S, plan: &PrecisionPlan<S>) -> Result<S> {
    if !x.is_finite() {
        return Err(Error::NonFiniteArgument(x.as_f64()));
    }
    plan.check(x.as_f64())?;
    let last = x.floor().as_f64() as u64 + 1;
    Ok((1..=last).fold(S::zero(), |acc, i| {
        let weight = fes_from_sigma0(sigma0_unchecked(i, plan), plan);
        acc + weight * h1(x - S::lit(i as f64), plan)
    }))
}

/// Sieve of Eratosthenes: `is_prime[k]` for `k ≤ n`.
pub fn sieve(n: usize) -> Vec<bool> {
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2;
    while p * p <= n {
        if is_prime[p] {
            for m in (p * p..=n).step_by(p) {
                is_prime[m] = false;
            }
        }
        p += 1;
    }
    is_prime
}

/// Exact number of primes `≤ x`.
pub fn pi_sieve(x: f64) -> u64 {
    assert!(x >= 0.0 && x.is_finite(), "pi_sieve needs a finite non-negative argument");
    let n = x.floor() as usize;
    sieve(n).iter().filter(|&&p| p).count() as u64
}

/// σ₀ and fes tabulated once for `1..=n_max + 1`, so that `π` at many points
/// costs `O(x)` each instead of `O(x²)`. Values are identical to the free
/// functions.
#[derive(Debug, Clone)]
pub struct PrimeChain<S> {
    plan: PrecisionPlan<S>,
    sigma0: Vec<S>,
    fes: Vec<S>,
}

impl<S: Scalar> PrimeChain<S> {
    pub fn new(plan: PrecisionPlan<S>) -> Self {
        let sigma0: Vec<S> = (1..=plan.n_max + 1).map(|n| sigma0_unchecked(n, &plan)).collect();
        let fes = sigma0.iter().map(|&s| fes_from_sigma0(s, &plan)).collect();
        Self { plan, sigma0, fes }
    }

    pub fn plan(&self) -> &PrecisionPlan<S> {
        &self.plan
    }

    pub fn sigma0(&self, n: u64) -> Result<S> {
        check_n(n, &self.plan)?;
        Ok(self.sigma0[n as usize - 1])
    }

    pub fn fes(&self, n: u64) -> Result<S> {
        check_n(n, &self.plan)?;
        Ok(self.fes[n as usize - 1])
    }

    pub fn pi(&self, x: S) -> Result<S> {
        if !x.is_finite() {
            return Err(Error::NonFiniteArgument(x.as_f64()));
        }
        self.plan.check(x.as_f64())?;
        let last = x.floor().as_f64() as usize + 1;
        Ok(self.fes[..last]
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (k, &w)| acc + w * h1(x - S::lit((k + 1) as f64), &self.plan)))
    }
}

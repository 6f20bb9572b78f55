//! Adaptive Gauss–Kronrod integration over the two domains the analytic
//! representations need: the truncated half-line `[0, T]` and the truncated
//! tangent interval `[0, π/2 − ε]`.
//!
//! Both entry points start from a panel set graded geometrically toward the
//! endpoints where the integrands concentrate, then bisect the panel with the
//! largest error estimate until the summed estimate drops below `tol`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Hard cap on integrand evaluations per call.
pub const MAX_EVALUATIONS: usize = 1_000_000;

/// Number of geometric grading levels applied toward a graded endpoint.
const GRADING_LEVELS: i32 = 40;

// 15-point Kronrod abscissae on [-1, 1] (non-negative half), with the
// interleaved 7-point Gauss weights for the odd-indexed nodes and the centre.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Truncation and regularisation knobs that replace the exact limits
/// `t → ∞` and `t → π/2` by computable endpoints.
///
/// * `half_line` is the upper limit `T` standing in for `∞`.
/// * `tan_margin` is `ε`; tangent-interval integrals stop at `π/2 − ε`.
/// * `indicator_scale` is `U`, the effective scale of the indicator
///   functions built on the tangent interval. Under the substitution
///   `u = tan t` the endpoint `π/2 − ε` maps to `u = U`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffParams<S> {
    half_line: S,
    tan_margin: S,
    indicator_scale: S,
}

impl<S: Scalar> CutoffParams<S> {
    /// Builds parameters from `T` and `ε`; `U` is derived as `tan(π/2 − ε)`.
    pub fn new(half_line: S, tan_margin: S) -> Result<Self> {
        Self::check_half_line(half_line)?;
        if !(tan_margin > S::zero() && tan_margin < S::FRAC_PI_4()) {
            return Err(Error::InvalidCutoff(format!(
                "tan margin {tan_margin} must lie in (0, π/4)"
            )));
        }
        let indicator_scale = (S::FRAC_PI_2() - tan_margin).tan();
        Ok(Self {
            half_line,
            tan_margin,
            indicator_scale,
        })
    }

    /// Builds parameters from `T` and `U`; `ε` is derived as `atan(1/U)`.
    /// `U` must exceed 1 so that `ε < π/4`.
    pub fn with_scale(half_line: S, indicator_scale: S) -> Result<Self> {
        Self::check_half_line(half_line)?;
        if !(indicator_scale > S::one() && indicator_scale.is_finite()) {
            return Err(Error::InvalidCutoff(format!(
                "indicator scale {indicator_scale} must be finite and greater than 1"
            )));
        }
        Ok(Self {
            half_line,
            tan_margin: indicator_scale.recip().atan(),
            indicator_scale,
        })
    }

    fn check_half_line(half_line: S) -> Result<()> {
        if half_line > S::zero() && half_line.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidCutoff(format!(
                "half-line cutoff {half_line} must be positive and finite"
            )))
        }
    }

    pub fn half_line(&self) -> S {
        self.half_line
    }

    pub fn tan_margin(&self) -> S {
        self.tan_margin
    }

    pub fn indicator_scale(&self) -> S {
        self.indicator_scale
    }

    /// Upper limit `π/2 − ε` of the tangent interval.
    pub fn tan_upper(&self) -> S {
        S::FRAC_PI_2() - self.tan_margin
    }

    /// Returns a copy with a different half-line cutoff.
    pub fn with_half_line(self, half_line: S) -> Result<Self> {
        Self::check_half_line(half_line)?;
        Ok(Self { half_line, ..self })
    }
}

impl<S: Scalar> Default for CutoffParams<S> {
    /// `T = 100`, `U = 2^7`.
    fn default() -> Self {
        Self::with_scale(S::lit(100.0), S::lit(128.0)).expect("default cutoffs are valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<S> {
    pub value: S,
    pub abs_error_estimate: S,
    pub evaluations: usize,
}

/// `∫₀^T f(t) dt` with `T = params.half_line()`.
pub fn integrate_half_line<S, F>(integrand: F, params: &CutoffParams<S>, tol: S) -> Result<QuadratureResult<S>>
where
    S: Scalar,
    F: Fn(S) -> S,
{
    let breaks = graded_breaks(S::zero(), params.half_line(), true, false);
    integrate_panels(integrand, &breaks, tol)
}

/// `∫₀^{π/2−ε} f(t) dt` with `ε = params.tan_margin()`.
pub fn integrate_tan_interval<S, F>(
    integrand: F,
    params: &CutoffParams<S>,
    tol: S,
) -> Result<QuadratureResult<S>>
where
    S: Scalar,
    F: Fn(S) -> S,
{
    let breaks = graded_breaks(S::zero(), params.tan_upper(), true, true);
    integrate_panels(integrand, &breaks, tol)
}

/// `∫ₐᵇ f(t) dt` over a finite interval, graded toward both ends.
pub fn integrate<S, F>(integrand: F, a: S, b: S, tol: S) -> Result<QuadratureResult<S>>
where
    S: Scalar,
    F: Fn(S) -> S,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInterval {
            a: a.as_f64(),
            b: b.as_f64(),
        });
    }
    integrate_panels(integrand, &graded_breaks(a, b, true, true), tol)
}

/// Integrates over `[breaks[0], breaks[last]]` starting from the panels the
/// strictly increasing `breaks` define.
pub fn integrate_panels<S, F>(integrand: F, breaks: &[S], tol: S) -> Result<QuadratureResult<S>>
where
    S: Scalar,
    F: Fn(S) -> S,
{
    if !(tol > S::zero() && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol.as_f64()));
    }
    if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[0] < w[1])) {
        let (a, b) = (
            breaks.first().map_or(f64::NAN, |v| v.as_f64()),
            breaks.last().map_or(f64::NAN, |v| v.as_f64()),
        );
        return Err(Error::InvalidInterval { a, b });
    }

    let mut evaluations = 0usize;
    let mut heap = BinaryHeap::with_capacity(2 * breaks.len());
    let mut total_error = S::zero();
    for w in breaks.windows(2) {
        let panel = Panel::evaluate(&integrand, w[0], w[1], &mut evaluations)?;
        total_error = total_error + panel.error;
        heap.push(panel);
    }

    loop {
        if total_error <= tol {
            // The running sum drifts; confirm against a fresh sum.
            total_error = heap.iter().fold(S::zero(), |acc, p| acc + p.error);
            if total_error <= tol {
                break;
            }
        }
        if evaluations + 30 > MAX_EVALUATIONS {
            return Err(not_reached(&heap, evaluations, tol));
        }
        let worst = heap.pop().expect("panel set is never empty");
        let mid = (worst.a + worst.b) * S::half();
        if !(worst.a < mid && mid < worst.b) {
            heap.push(worst);
            return Err(not_reached(&heap, evaluations, tol));
        }
        let left = Panel::evaluate(&integrand, worst.a, mid, &mut evaluations)?;
        let right = Panel::evaluate(&integrand, mid, worst.b, &mut evaluations)?;
        total_error = total_error - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
    }

    Ok(QuadratureResult {
        value: sum_in_order(&heap),
        abs_error_estimate: total_error,
        evaluations,
    })
}

/// Panel values summed left to right, independent of heap layout.
fn sum_in_order<S: Scalar>(heap: &BinaryHeap<Panel<S>>) -> S {
    let mut panels: Vec<&Panel<S>> = heap.iter().collect();
    panels.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal));
    panels.iter().fold(S::zero(), |acc, p| acc + p.value)
}

fn not_reached<S: Scalar>(heap: &BinaryHeap<Panel<S>>, evaluations: usize, tol: S) -> Error {
    Error::ToleranceNotReached {
        value: sum_in_order(heap).as_f64(),
        abs_error_estimate: heap.iter().fold(S::zero(), |acc, p| acc + p.error).as_f64(),
        evaluations,
        tol: tol.as_f64(),
    }
}

/// Breakpoints for `[a, b]` refined geometrically toward the selected ends:
/// `a + L·2^-k` and/or `b − L·2^-k` for `k = 1, 2, …`.
fn graded_breaks<S: Scalar>(a: S, b: S, toward_a: bool, toward_b: bool) -> Vec<S> {
    let len = b - a;
    let floor = S::epsilon() * S::lit(64.0) * a.abs().max(b.abs()).max(len);
    let mut breaks = vec![a, b];
    let mut step = len;
    for k in 1..=GRADING_LEVELS {
        step = step * S::half();
        if step <= floor {
            break;
        }
        if toward_a {
            breaks.push(a + step);
        }
        // Both ends graded: the midpoint is already present from the left.
        if toward_b && !(toward_a && k == 1) {
            breaks.push(b - step);
        }
    }
    breaks.sort_by(|p, q| p.partial_cmp(q).unwrap_or(Ordering::Equal));
    breaks.dedup();
    breaks.retain(|&x| x >= a && x <= b);
    breaks
}

#[derive(Debug, Clone, Copy)]
struct Panel<S> {
    a: S,
    b: S,
    value: S,
    error: S,
}

impl<S: Scalar> Panel<S> {
    fn evaluate<F: Fn(S) -> S>(f: &F, a: S, b: S, evaluations: &mut usize) -> Result<Self> {
        let sample = |t: S, evaluations: &mut usize| -> Result<S> {
            *evaluations += 1;
            let y = f(t);
            if y.is_finite() {
                Ok(y)
            } else {
                Err(Error::NonFiniteIntegrand { at: t.as_f64() })
            }
        };
        let center = (a + b) * S::half();
        let half = (b - a) * S::half();
        let fc = sample(center, evaluations)?;
        let mut kronrod = fc * S::lit(WGK[7]);
        let mut gauss = fc * S::lit(WG[3]);
        for j in 0..7 {
            let dx = half * S::lit(XGK[j]);
            let pair = sample(center - dx, evaluations)? + sample(center + dx, evaluations)?;
            kronrod = kronrod + S::lit(WGK[j]) * pair;
            if j % 2 == 1 {
                gauss = gauss + S::lit(WG[j / 2]) * pair;
            }
        }
        Ok(Self {
            a,
            b,
            value: kronrod * half,
            error: ((kronrod - gauss) * half).abs(),
        })
    }
}

impl<S: PartialOrd> PartialEq for Panel<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<S: PartialOrd> Eq for Panel<S> {}

impl<S: PartialOrd> PartialOrd for Panel<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: PartialOrd> Ord for Panel<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        // Errors are finite; ties broken by position so the order is total.
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

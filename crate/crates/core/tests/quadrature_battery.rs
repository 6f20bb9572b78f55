use std::f64::consts::{E, PI};

use heaviforge::quadrature::{integrate, integrate_half_line, integrate_tan_interval, CutoffParams};
use proptest::prelude::*;

type Case = (&'static str, fn(f64) -> f64, f64, f64, f64);

fn battery() -> Vec<Case> {
    vec![
        ("square", |x| x * x, 0.0, 1.0, 1.0 / 3.0),
        ("sine", f64::sin, 0.0, PI, 2.0),
        ("exp", f64::exp, -1.0, 2.0, E * E - 1.0 / E),
        ("cauchy", |x| 1.0 / (1.0 + x * x), -3.0, 3.0, 2.0 * 3f64.atan()),
        ("sqrt", f64::sqrt, 0.0, 4.0, 16.0 / 3.0),
        ("log", f64::ln, 0.0, 1.0, -1.0),
        ("inverse_sqrt", |x| 1.0 / x.sqrt(), 0.0, 1.0, 2.0),
        ("oscillating", |x| (10.0 * x).cos(), 0.0, 2.0, 20f64.sin() / 10.0),
        ("gamma_two", |x| x * (-x).exp(), 0.0, 20.0, 1.0 - 21.0 * (-20f64).exp()),
        ("runge", |x| 1.0 / (1.0 + 25.0 * x * x), -1.0, 1.0, 0.4 * 5f64.atan()),
    ]
}

#[test]
fn battery_meets_tolerance() {
    for tol in [1e-6, 1e-9, 1e-12] {
        for (name, f, a, b, truth) in battery() {
            let r = integrate(f, a, b, tol).unwrap_or_else(|e| panic!("{name} at tol {tol}: {e}"));
            let err = (r.value - truth).abs();
            assert!(err <= tol, "{name}: |{} - {truth}| = {err:e} > {tol:e}", r.value);
            assert!(r.abs_error_estimate <= tol);
        }
    }
}

#[test]
fn half_line_and_tangent_interval() {
    let params = CutoffParams::with_scale(40.0, 60.0).unwrap();
    let r = integrate_half_line(|t: f64| (-t).exp(), &params, 1e-12).unwrap();
    assert!((r.value - (1.0 - (-40f64).exp())).abs() < 1e-12);
    let sec2 = |t: f64| 1.0 / t.cos().powi(2);
    let r = integrate_tan_interval(|t: f64| sec2(t) * (-t.tan()).exp(), &params, 1e-12).unwrap();
    assert!((r.value - (1.0 - (-60f64).exp())).abs() < 1e-12);
    let r = integrate_tan_interval(|t: f64| sec2(t) * (-(t.tan()) * 0.01).exp(), &params, 1e-12).unwrap();
    assert!((r.value - 100.0 * (1.0 - (-0.6f64).exp())).abs() < 1e-10);
}

#[test]
fn tightening_tolerance_never_moves_away_from_truth() {
    for (name, f, a, b, truth) in battery() {
        let mut prev = f64::INFINITY;
        for k in 3..=13 {
            let tol = 10f64.powi(-k);
            let err = (integrate(f, a, b, tol).unwrap().value - truth).abs();
            assert!(err <= prev + 1e-15 * truth.abs().max(1.0), "{name}: error rose to {err:e} at tol {tol:e}");
            prev = prev.min(err);
        }
    }
}

proptest! {
    #[test]
    fn integration_is_linear(alpha in -5.0f64..5.0, beta in -5.0f64..5.0, a in -2.0f64..0.0, w in 0.1f64..3.0) {
        let b = a + w;
        let tol = 1e-11;
        let f = |x: f64| x.sin() * x;
        let g = |x: f64| (-x * x).exp();
        let combined = integrate(|x| alpha * f(x) + beta * g(x), a, b, tol).unwrap().value;
        let parts = alpha * integrate(f, a, b, tol).unwrap().value + beta * integrate(g, a, b, tol).unwrap().value;
        let slack = tol * (1.0 + alpha.abs() + beta.abs());
        prop_assert!((combined - parts).abs() <= slack, "{combined} vs {parts}");
    }
}

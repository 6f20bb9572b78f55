//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any criterion fails.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use heaviforge::analytic::{eval_delta, eval_step, snap, Backend, Function, StepKind};
use heaviforge::piecewise::{compose, transition_width, Branch, PiecewiseSpec};
use heaviforge::primes::{pi_sieve, plan_precision, sieve, sigma0_oracle, PrimeChain, DEFAULT_ROUND_MARGIN};
use heaviforge::quadrature::CutoffParams;
use heaviforge::xiset::{
    eval_chain, grandi_demo, xi_cap, xi_cup, xi_difference, xi_intersection, xi_union, ChainStrategy, FiniteSet,
    SetExprChain, XiSet,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Probe = (&'static str, fn(f64) -> f64);
type Criterion = (&'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let inner: f64 = (1..n).map(|i| f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 }).sum();
    h / 3.0 * (f(a) + inner + f(b))
}

fn discrete_values() -> Check {
    let p = CutoffParams::default();
    for backend in [Backend::ClosedForm, Backend::Quadrature] {
        for (x, h1, h2) in [(-1.0, 0.0, 0.0), (0.0, 1.0, 0.5), (1.0, 1.0, 1.0)] {
            let got1 = snap(eval_step(StepKind::H1, x, &p, backend, 1e-9).map_err(|e| e.to_string())?, 1e-6);
            let got2 = snap(eval_step(StepKind::H2, x, &p, backend, 1e-9).map_err(|e| e.to_string())?, 1e-6);
            ensure!(got1 == h1 && got2 == h2, "x={x} {backend:?}: H1={got1} H2={got2}");
        }
    }
    Ok("H1 = 0,1,1 and H2 = 0,½,1 at x = −1,0,1 under both backends".into())
}

fn backend_cross_check() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let tol = 1e-9;
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let t = rng.gen_range(5.0..250.0);
        let u = rng.gen_range(5.0..250.0);
        let limit = 500.0 / f64::max(t, u);
        let x = rng.gen_range(-limit..limit);
        let p = CutoffParams::with_scale(t, u).map_err(|e| e.to_string())?;
        for func in Function::ALL {
            let closed = func.eval(x, &p, Backend::ClosedForm, tol).map_err(|e| e.to_string())?;
            let quad = func.eval(x, &p, Backend::Quadrature, tol).map_err(|e| e.to_string())?;
            let diff = (closed - quad).abs();
            worst = worst.max(diff);
            ensure!(diff <= 1e-8, "{func} at x={x}, T={t}, U={u}: |Δ| = {diff:e}");
        }
    }
    Ok(format!("8000 evaluations, worst |quadrature − closed form| = {worst:.2e}"))
}

fn prime_chain() -> Check {
    let plan = plan_precision(200, DEFAULT_ROUND_MARGIN).map_err(|e| e.to_string())?;
    let chain = PrimeChain::new(plan);
    let is_prime = sieve(200);
    let mut mismatches = 0;
    for n in 1..=200u64 {
        let sigma = chain.sigma0(n).map_err(|e| e.to_string())?;
        if sigma.round() as u64 != sigma0_oracle(n) {
            mismatches += 1;
        }
        let fes = plan.snap(chain.fes(n).map_err(|e| e.to_string())?);
        if fes != if is_prime[n as usize] { 1.0 } else { 0.0 } {
            mismatches += 1;
        }
    }
    for k in 2..=400 {
        let x = k as f64 * 0.5;
        if plan.snap(chain.pi(x).map_err(|e| e.to_string())?) != pi_sieve(x) as f64 {
            mismatches += 1;
        }
    }
    let pi100 = plan.snap(chain.pi(100.0).map_err(|e| e.to_string())?);
    let pi10 = plan.snap(chain.pi(10.0).map_err(|e| e.to_string())?);
    ensure!(pi100 == 25.0 && pi10 == 4.0, "π(100) = {pi100}, π(10) = {pi10}");
    ensure!(mismatches == 0, "{mismatches} mismatches");
    Ok(format!(
        "U = {}, zero mismatches over σ₀, fes and π on [1, 200]",
        plan.indicator_scale()
    ))
}

fn delta_properties() -> Check {
    let delta = |t: f64| {
        let p = CutoffParams::with_scale(t, 128.0).unwrap();
        move |x: f64| eval_delta(x, &p, Backend::ClosedForm, 1e-9).unwrap()
    };
    let mass = simpson(delta(100.0), -1.0, 1.0, 200_000);
    ensure!((mass - 1.0).abs() <= 1e-6, "∫δ = {mass}");
    let peak = delta(100.0)(0.0);
    ensure!((peak - 25.0).abs() <= 1e-9, "δ(0) = {peak}");
    let tests: [Probe; 2] = [("cos", f64::cos), ("exp(−x²)", |x| (-x * x).exp())];
    for (name, g) in tests {
        let errs: Vec<f64> = [10.0, 20.0, 40.0, 80.0]
            .iter()
            .map(|&t| {
                let d = delta(t);
                (simpson(|x| d(x) * g(x), -1.0, 1.0, 200_000) - g(0.0)).abs()
            })
            .collect();
        ensure!(errs.windows(2).all(|w| w[1] < w[0]), "{name}: sifting errors {errs:?}");
    }
    Ok(format!("|∫δ − 1| = {:.1e}, δ(0) = {peak}, sifting error decreasing", (mass - 1.0).abs()))
}

fn random_branch(rng: &mut ChaCha8Rng) -> Branch<f64> {
    if rng.gen_bool(0.5) {
        let coeffs: Vec<f64> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(-2.0..2.0)).collect();
        Arc::new(move |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c))
    } else {
        let (a, b, c) = (rng.gen_range(-3.0..3.0), rng.gen_range(-4.0..4.0), rng.gen_range(-3.0..3.0));
        Arc::new(move |x: f64| a * (b * x + c).sin())
    }
}

fn composer() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut points = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let mut bps: Vec<f64> = Vec::new();
        while bps.len() < n {
            let b = rng.gen_range(-5.0..5.0);
            if bps.iter().all(|&p: &f64| (p - b).abs() > 1e-2) {
                bps.push(b);
            }
        }
        bps.sort_by(f64::total_cmp);
        let branches = (0..=n).map(|_| random_branch(&mut rng)).collect();
        let spec = PiecewiseSpec::new(bps.clone(), branches).map_err(|e| e.to_string())?;
        let composed = compose(spec.clone());
        let width = transition_width(composed.params().indicator_scale());
        let mut xs = bps.clone();
        while xs.len() < 100 {
            let x = rng.gen_range(-6.0..6.0);
            if bps.iter().all(|&b| (x - b).abs() > width) {
                xs.push(x);
            }
        }
        for (k, &x) in xs.iter().enumerate() {
            let want = spec.dispatch(x);
            let got = composed.eval(x);
            ensure!(
                (got - want).abs() <= 1e-6 * (1.0 + want.abs()),
                "x={x}, bps={bps:?}: {got} vs {want}"
            );
            if k >= bps.len() {
                let sum: f64 = composed.indicators(x).into_iter().map(|w| snap(w, 1e-6)).sum();
                ensure!(sum == 1.0, "x={x}: snapped indicator sum {sum}");
            }
            points += 1;
        }
    }
    Ok(format!("200 specs, {points} points agree with branch dispatch"))
}

fn xi_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mask_set = |m: u8| (0..6u8).filter(|i| m & (1 << i) != 0).collect::<FiniteSet<u8>>();
    let random_xi = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(1..=4);
        XiSet::from_components((0..k).map(|_| mask_set(rng.gen_range(0..64)))).unwrap()
    };
    for _ in 0..500 {
        let (x, y) = (random_xi(&mut rng), random_xi(&mut rng));
        for z in [xi_union(&x, &y), xi_intersection(&x, &y), xi_difference(&x, &y)] {
            ensure!(z.xi_class() <= x.xi_class() * y.xi_class(), "class bound fails for {x} and {y}");
        }
        let (a, b) = (mask_set(rng.gen_range(0..64)), mask_set(rng.gen_range(0..64)));
        for w in [xi_cap(&a, &b), xi_cup(&a, &b)] {
            let c = w.components();
            ensure!(
                c.len() == 1 || c[0].is_subset(&c[1]) || c[1].is_subset(&c[0]),
                "subset chain fails for {w}"
            );
        }
    }
    for mask in 1..64u8 {
        let g = mask_set(mask);
        for length in 2..=10 {
            let run = |s| eval_chain(&SetExprChain::new(g.clone(), FiniteSet::empty(), length, s).unwrap()).value;
            let (aligned, shifted) = (run(ChainStrategy::Aligned), run(ChainStrategy::Shifted));
            ensure!(aligned.is_empty() && shifted == g, "G={g}, length {length}: {aligned} / {shifted}");
        }
    }
    for k in [4u64, 101, 1000] {
        let mean = grandi_demo(k as usize).map_err(|e| e.to_string())?.cesaro_mean;
        let half = Ratio::new(1, 2);
        let gap = if mean > half { mean - half } else { half - mean };
        ensure!(gap <= Ratio::new(1, 2 * k), "k={k}: mean {mean}");
    }
    Ok("class bound, subset chain, chain divergence and Cesàro means hold".into())
}

fn cli_contract() -> Check {
    let bin = env!("CARGO_BIN_EXE_heaviforge");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let code = |args: &[&str]| run(args).map(|o| o.status.code().unwrap_or(-1));
    ensure!(code(&["eval", "H2", "0"])? == 0, "eval H2 0 should exit 0");
    ensure!(code(&["primes", "40", "--U", "4"])? == 1, "an undersized plan should exit 1");
    ensure!(code(&["eval", "nope", "0"])? == 2, "unknown function should exit 2");
    ensure!(code(&["xiset", "{1,"])? == 2, "bad set literal should exit 2");
    let table = ["table", "H1", "-2", "2", "0.25", "--backend", "quadrature"];
    let (a, b) = (run(&table)?.stdout, run(&table)?.stdout);
    ensure!(!a.is_empty() && a == b, "table output differs between runs");
    let primes = run(&["primes", "200"])?;
    let summary = String::from_utf8_lossy(&primes.stderr);
    ensure!(
        primes.status.code() == Some(0) && summary.contains("mismatches=0"),
        "primes 200: {summary}"
    );
    ensure!(run(&["primes", "200"])?.stdout == primes.stdout, "primes CSV differs between runs");
    Ok("exit codes 0/1/2, byte-stable CSV, primes 200 with 0 mismatches".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("discrete step values", discrete_values, Duration::from_secs(1)),
        ("backend cross-check", backend_cross_check, Duration::from_secs(10)),
        ("prime chain", prime_chain, Duration::from_secs(30)),
        ("delta properties", delta_properties, Duration::from_secs(5)),
        ("piecewise composer", composer, Duration::from_secs(20)),
        ("xi-set algebra", xi_algebra, Duration::from_secs(5)),
        ("command line", cli_contract, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}, but took {elapsed:.2?} > {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

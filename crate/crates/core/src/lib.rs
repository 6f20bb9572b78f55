//! Integral representations of discrete functions.
//!
//! Step functions, the zero indicator, a nascent Dirac delta, piecewise
//! composition, and the divisor / prime-counting chain are all written as
//! integrals with elementary antiderivatives, evaluated at finite cutoffs
//! through either adaptive quadrature or the closed form, and checked against
//! exact integer oracles. A small algebra of finite multi-valued sets
//! ([`xiset`]) sits alongside.
//!
//! The numerical modules are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the common `f64` instantiations.
//!
//! ```
//! use heaviforge::{eval_step, snap, Backend, CutoffParams, StepKind};
//!
//! let params = CutoffParams::with_scale(100.0, 128.0)?;
//! let h = eval_step(StepKind::H1, 0.0, &params, Backend::Quadrature, 1e-10)?;
//! assert_eq!(snap(h, 1e-6), 1.0);
//! # Ok::<(), heaviforge::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod cli;
pub mod error;
pub mod piecewise;
pub mod primes;
pub mod quadrature;
pub mod scalar;
pub mod xiset;

pub use analytic::{
    eval_c, eval_delta, eval_f, eval_q, eval_rt, eval_step, eval_u, snap, Backend, Function, StepKind,
    DEFAULT_SNAP_ATOL,
};
pub use error::{Error, Result};
pub use piecewise::{compose, compose_with, impulse};
pub use primes::{fes, pi_analytic, pi_sieve, plan_precision, sigma0_analytic, sigma0_oracle};
pub use quadrature::{integrate, integrate_half_line, integrate_tan_interval};
pub use scalar::Scalar;
pub use xiset::{eval_chain, grandi_demo, membership, xi_cap, xi_cup, xi_difference, xi_intersection, xi_union};

pub type CutoffParams = quadrature::CutoffParams<f64>;
pub type CutoffParams32 = quadrature::CutoffParams<f32>;
pub type QuadratureResult = quadrature::QuadratureResult<f64>;
pub type QuadratureResult32 = quadrature::QuadratureResult<f32>;
pub type PiecewiseSpec = piecewise::PiecewiseSpec<f64>;
pub type PiecewiseSpec32 = piecewise::PiecewiseSpec<f32>;
pub type Composed = piecewise::Composed<f64>;
pub type PrecisionPlan = primes::PrecisionPlan<f64>;
pub type PrecisionPlan32 = primes::PrecisionPlan<f32>;
pub type PrimeChain = primes::PrimeChain<f64>;

/// Atoms used by the command-line set language.
pub type Atom = i64;
pub type FiniteSet = xiset::FiniteSet<Atom>;
pub type XiSet = xiset::XiSet<Atom>;
pub type SetExprChain = xiset::SetExprChain<Atom>;
pub type MembershipReport = xiset::MembershipReport<Atom>;

/// Exact rational used for Cesàro means.
pub type Rational = num_rational::Ratio<u64>;

//! Large-scale simultaneous one-sample t testing with false discovery rate
//! control.
//!
//! The pipeline is: t statistics per variable ([`tstats`]), a p-value
//! calibration ([`calibrate`]: normal, Student t, pooled bootstrap or
//! regularized bootstrap), then the Benjamini–Hochberg step-up ([`bh`]).
//! [`theory`] evaluates the skewness-corrected tail expansion that explains
//! when normal and t calibrations lose FDR control, and [`sim`] reproduces
//! the effect by Monte Carlo.
//!
//! Numeric routines are generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`, which is what the tail probabilities are
//! tuned for.

pub mod bh;
pub mod calibrate;
pub mod data;
pub mod dist;
mod error;
pub mod rng;
mod scalar;
pub mod sim;
pub mod theory;
pub mod tstats;

pub use data::{validate_matrix, Calibration, GroundTruth, LambdaMode, RunConfig};
pub use error::{Error, Result};
pub use rng::{make_rng_stream, RandomStream};
pub use scalar::Real;

pub type Matrix = data::DataMatrix<f64>;
pub type Truth = data::GroundTruth<f64>;
pub type Stats = tstats::TestStatVector<f64>;
pub type PValues = calibrate::PValueVector<f64>;
pub type Ecdf = calibrate::PooledBootstrapECDF<f64>;
pub type Plan = calibrate::TruncationPlan<f64>;
pub type Rejections = bh::BHResult<f64>;
pub type Metrics = bh::ErrorMetrics<f64>;
pub type Profile = theory::SkewProfile<f64>;

/// Statistics, p-values and rejections of one testing run.
#[derive(Debug, Clone, PartialEq)]
pub struct TestOutcome<T> {
    pub stats: tstats::TestStatVector<T>,
    pub pvalues: calibrate::PValueVector<T>,
    pub rejections: bh::BHResult<T>,
}

/// Computes t statistics, calibrates them per `config`, and applies the
/// step-up procedure at `config.alpha`.
pub fn run_test<T: Real>(x: &data::DataMatrix<T>, config: &RunConfig) -> Result<TestOutcome<T>> {
    config.validate()?;
    let stats = tstats::t_statistics(x)?;
    let pvalues = calibrate::calibrate(x, &stats, config)?;
    let rejections = bh::bh_stepup(&pvalues.p, T::lit(config.alpha))?;
    Ok(TestOutcome {
        stats,
        pvalues,
        rejections,
    })
}

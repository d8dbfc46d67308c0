//! p-value calibrations for the per-variable t statistics.
//!
//! Four reference distributions are available: standard normal, Student
//! `t_{n−1}`, the bootstrap null pooled over all variables, and the same
//! pooled bootstrap run on truncated data. A per-variable bootstrap is
//! provided for comparison.

mod bootstrap;
mod regularized;

pub use bootstrap::{bootstrap_pooled_ecdf, pvals_bootstrap, pvals_bootstrap_individual, PooledBootstrapECDF};
pub use regularized::{
    cv_risk_curve, cv_select_lambda, default_lambda_grid, fixed_rate_lambda, pvals_regularized_bootstrap,
    truncate_matrix, truncated_skewness, CvSelection, PlanSource, RiskCurve, TruncationPlan,
    DEFAULT_GRID_POINTS,
};

use crate::data::{Calibration, DataMatrix, LambdaMode, RunConfig};
use crate::dist::{normal_sf2_unchecked, t_sf2_unchecked};
use crate::error::Result;
use crate::scalar::Real;
use crate::tstats::TestStatVector;

/// Diagnostics attached to a p-value vector.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CalibrationMeta<T> {
    /// Number of pooled bootstrap statistics, `N·m`.
    pub pool_size: Option<usize>,
    /// Selected scalar truncation level (cross-validated mode).
    pub lambda_hat: Option<T>,
    /// Share of matrix entries zeroed by truncation.
    pub truncated_fraction: Option<T>,
    /// Columns left out of the cross-validation risk.
    pub cv_skipped_columns: Option<usize>,
}

/// Estimated p-values tagged with the calibration that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct PValueVector<T> {
    pub p: Vec<T>,
    pub method: Calibration,
    pub meta: CalibrationMeta<T>,
}

impl<T: Real> PValueVector<T> {
    pub fn new(p: Vec<T>, method: Calibration) -> Self {
        debug_assert!(p.iter().all(|v| *v >= T::zero() && *v <= T::one()));
        Self {
            p,
            method,
            meta: CalibrationMeta::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }
}

/// `p_i = 2 − 2Φ(|T_i|)`.
pub fn pvals_normal<T: Real>(stats: &TestStatVector<T>) -> PValueVector<T> {
    let p = stats.abs_t().map(normal_sf2_unchecked).collect();
    PValueVector::new(p, Calibration::Normal)
}

/// `p_i = 2 − 2Ψ_{n−1}(|T_i|)`.
pub fn pvals_student_t<T: Real>(stats: &TestStatVector<T>, n: usize) -> PValueVector<T> {
    let df = u32::try_from(n.saturating_sub(1).max(1)).unwrap_or(u32::MAX);
    let p = stats.abs_t().map(|t| t_sf2_unchecked(t, df)).collect();
    PValueVector::new(p, Calibration::StudentT)
}

/// Runs the calibration selected in `config`.
///
/// Resampling calibrations use `config.seed` as the bootstrap seed, with
/// variable `i` drawing from stream `i`.
pub fn calibrate<T: Real>(
    x: &DataMatrix<T>,
    stats: &TestStatVector<T>,
    config: &RunConfig,
) -> Result<PValueVector<T>> {
    calibrate_with_seed(x, stats, config.calibration, config, config.seed)
}

pub(crate) fn calibrate_with_seed<T: Real>(
    x: &DataMatrix<T>,
    stats: &TestStatVector<T>,
    method: Calibration,
    config: &RunConfig,
    seed: u64,
) -> Result<PValueVector<T>> {
    let resamples = config.bootstrap_resamples;
    match method {
        Calibration::Normal => Ok(pvals_normal(stats)),
        Calibration::StudentT => Ok(pvals_student_t(stats, x.n())),
        Calibration::Bootstrap => {
            let ecdf = bootstrap_pooled_ecdf(x, resamples, seed)?;
            Ok(pvals_bootstrap(stats, &ecdf))
        }
        Calibration::IndividualBootstrap => pvals_bootstrap_individual(stats, x, resamples, seed),
        Calibration::RegularizedBootstrap => {
            let (plan, skipped) = match config.lambda_mode {
                LambdaMode::FixedRate(c) => (fixed_rate_lambda(x, T::lit(c))?, None),
                LambdaMode::CrossValidated => {
                    let grid = default_lambda_grid(x, DEFAULT_GRID_POINTS)?;
                    let sel = cv_select_lambda(x, &grid)?;
                    (sel.plan, Some(sel.curve.skipped_columns))
                }
            };
            let mut out = pvals_regularized_bootstrap(x, &plan, resamples, seed, stats)?;
            out.meta.cv_skipped_columns = skipped;
            Ok(out)
        }
    }
}

//! Truncation levels, the split-sample choice of the level, and the
//! regularized bootstrap built on the truncated data.

use rayon::prelude::*;

use super::bootstrap::{column_means, pooled_from_centers};
use super::PValueVector;
use crate::data::{Calibration, DataMatrix};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tstats::{is_constant, moments, skewness_at, TestStatVector};

/// Grid size used when the level is cross-validated without an explicit grid.
pub const DEFAULT_GRID_POINTS: usize = 30;

/// Smallest candidate of the default grid.
const GRID_FLOOR: f64 = 0.5;

/// Where a truncation plan came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlanSource {
    FixedRate(f64),
    CrossValidated,
    Manual,
}

/// Per-variable truncation levels `λ_i`; entries with `|x| > λ_i` are zeroed.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncationPlan<T> {
    lambda: Vec<T>,
    mode: PlanSource,
    lambda_scalar: Option<T>,
}

impl<T: Real> TruncationPlan<T> {
    pub fn new(lambda: Vec<T>, mode: PlanSource, lambda_scalar: Option<T>) -> Result<Self> {
        if let Some(i) = lambda.iter().position(|l| !(*l > T::zero())) {
            return Err(Error::Domain(format!("truncation level {i} must be positive, got {}", lambda[i])));
        }
        Ok(Self {
            lambda,
            mode,
            lambda_scalar,
        })
    }

    /// A plan that truncates nothing.
    pub fn inert(m: usize) -> Self {
        Self {
            lambda: vec![T::infinity(); m],
            mode: PlanSource::Manual,
            lambda_scalar: None,
        }
    }

    pub fn lambda(&self) -> &[T] {
        &self.lambda
    }

    pub fn mode(&self) -> PlanSource {
        self.mode
    }

    /// The scalar level `λ̂` when the plan was cross-validated.
    pub fn lambda_scalar(&self) -> Option<T> {
        self.lambda_scalar
    }
}

#[inline]
fn truncate_value<T: Real>(v: T, lambda: T) -> T {
    if v.abs() <= lambda {
        v
    } else {
        T::zero()
    }
}

fn truncate_into<T: Real>(col: &[T], lambda: T, out: &mut Vec<T>) {
    out.clear();
    out.extend(col.iter().map(|&v| truncate_value(v, lambda)));
}

/// Zeroes every entry whose magnitude exceeds its column's level.
pub fn truncate_matrix<T: Real>(x: &DataMatrix<T>, plan: &TruncationPlan<T>) -> Result<DataMatrix<T>> {
    if plan.lambda.len() != x.m() {
        return Err(Error::DimensionMismatch {
            expected: x.m(),
            found: plan.lambda.len(),
        });
    }
    let mut values = Vec::with_capacity(x.n() * x.m());
    for (i, (col, &lambda)) in x.columns().zip(&plan.lambda).enumerate() {
        let start = values.len();
        values.extend(col.iter().map(|&v| truncate_value(v, lambda)));
        if is_constant(&values[start..]) {
            return Err(Error::AllTruncated(i));
        }
    }
    DataMatrix::from_column_major(x.n(), x.m(), values)
}

fn truncated_fraction<T: Real>(x: &DataMatrix<T>, plan: &TruncationPlan<T>) -> T {
    let zeroed = x
        .columns()
        .zip(&plan.lambda)
        .map(|(c, &l)| c.iter().filter(|v| v.abs() > l).count())
        .sum::<usize>();
    T::from_count(zeroed) / T::from_count(x.n() * x.m())
}

/// Sample mean and divisor-`n − 1` standard deviation of each column.
fn mean_sd<T: Real>(x: &DataMatrix<T>) -> Result<Vec<(T, T)>> {
    let n = T::from_count(x.n());
    x.columns()
        .enumerate()
        .map(|(i, c)| {
            if is_constant(c) {
                return Err(Error::DegenerateColumn(i));
            }
            let mo = moments(c);
            Ok((mo.mean, (mo.m2 * n / (n - T::one())).sqrt()))
        })
        .collect()
}

/// `λ_i = |mean_i| + sd_i · c · (n / ln m)^{1/6}`.
pub fn fixed_rate_lambda<T: Real>(x: &DataMatrix<T>, c: T) -> Result<TruncationPlan<T>> {
    if x.m() < 2 {
        return Err(Error::Domain("rate-based truncation needs m >= 2".into()));
    }
    if !(c > T::zero() && c.is_finite()) {
        return Err(Error::Domain(format!("rate constant must be positive, got {c}")));
    }
    let rate = (T::from_count(x.n()) / T::from_count(x.m()).ln()).powf(T::lit(1.0 / 6.0));
    let lambda = mean_sd(x)?
        .into_iter()
        .map(|(mean, sd)| mean.abs() + sd * c * rate)
        .collect();
    TruncationPlan::new(
        lambda,
        PlanSource::FixedRate(c.to_f64().unwrap_or(f64::NAN)),
        None,
    )
}

/// Skewness of `col` after zeroing entries above `lambda`, divisor-`n`.
pub fn truncated_skewness<T: Real>(col: &[T], lambda: T) -> Result<T> {
    let mut buf = Vec::with_capacity(col.len());
    truncate_into(col, lambda, &mut buf);
    skewness_at(&buf, 0)
}

/// 30 (or `points`) log-spaced levels from 0.5 up to the largest
/// standardized deviation `max |x_ki − mean_i| / sd_i`.
pub fn default_lambda_grid<T: Real>(x: &DataMatrix<T>, points: usize) -> Result<Vec<T>> {
    if points == 0 {
        return Err(Error::EmptyGrid);
    }
    let stats = mean_sd(x)?;
    let mut hi = T::zero();
    for (col, (mean, sd)) in x.columns().zip(stats) {
        for &v in col {
            hi = hi.max((v - mean).abs() / sd);
        }
    }
    let lo = T::lit(GRID_FLOOR);
    let hi = hi.max(lo);
    if points == 1 {
        return Ok(vec![hi]);
    }
    let ratio = (hi / lo).ln();
    let last = T::from_count(points - 1);
    let mut grid: Vec<T> = (0..points)
        .map(|j| lo * (ratio * T::from_count(j) / last).exp())
        .collect();
    grid[points - 1] = hi;
    Ok(grid)
}

/// Split-sample risk `R₀(λ) + R₁(λ)` over a grid of scalar levels.
#[derive(Debug, Clone, PartialEq)]
pub struct RiskCurve<T> {
    /// `(λ, R₀(λ) + R₁(λ))` in grid order. A level at which some
    /// contributing column truncates to a constant carries infinite risk.
    pub points: Vec<(T, T)>,
    /// Columns left out of the sum: constant on a half, or degenerate at
    /// every grid level.
    pub skipped_columns: usize,
}

/// Outcome of the cross-validated level choice.
#[derive(Debug, Clone, PartialEq)]
pub struct CvSelection<T> {
    pub plan: TruncationPlan<T>,
    pub lambda_hat: T,
    pub curve: RiskCurve<T>,
}

struct HalfStats<T> {
    mean: T,
    sd: T,
    skew: T,
}

fn half_stats<T: Real>(x: &[T]) -> Option<HalfStats<T>> {
    if is_constant(x) {
        return None;
    }
    let mo = moments(x);
    if !(mo.m2 > T::zero()) {
        return None;
    }
    Some(HalfStats {
        mean: mo.mean,
        sd: mo.m2.sqrt(),
        skew: mo.m3 / (mo.m2 * mo.m2.sqrt()),
    })
}

// Per-level contribution of one column, `None` where the column degenerates.
fn column_risk<T: Real>(col: &[T], split: usize, grid: &[T]) -> Option<Vec<Option<T>>> {
    let halves = [&col[..split], &col[split..]];
    let hs = [half_stats(halves[0])?, half_stats(halves[1])?];
    let mut buf = Vec::with_capacity(col.len() - split);
    let contrib: Vec<Option<T>> = grid
        .iter()
        .map(|&lambda| {
            let mut total = T::zero();
            for j in 0..2 {
                let level = hs[j].mean.abs() + hs[j].sd * lambda;
                truncate_into(halves[j], level, &mut buf);
                let k = skewness_at(&buf, 0).ok()?;
                let d = k - hs[1 - j].skew;
                total = total + d * d;
            }
            Some(total)
        })
        .collect();
    contrib.iter().any(Option::is_some).then_some(contrib)
}

/// Evaluates the split-sample risk on `grid`. Rows `0..⌊n/2⌋` form the
/// first half and the remaining rows the second; half-sample levels are
/// `|mean| + sd·λ` with divisor-`|I|` moments.
pub fn cv_risk_curve<T: Real>(x: &DataMatrix<T>, grid: &[T]) -> Result<RiskCurve<T>> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if let Some(l) = grid.iter().find(|l| !(**l > T::zero())) {
        return Err(Error::Domain(format!("grid levels must be positive, got {l}")));
    }
    if x.n() < 4 {
        return Err(Error::TooFewSamples(x.n()));
    }
    let split = x.n() / 2;
    let per_column: Vec<Option<Vec<Option<T>>>> = (0..x.m())
        .into_par_iter()
        .map(|i| column_risk(x.column(i), split, grid))
        .collect();

    let mut risk = vec![T::zero(); grid.len()];
    let mut skipped = 0;
    for col in &per_column {
        match col {
            None => skipped += 1,
            Some(contrib) => {
                for (r, c) in risk.iter_mut().zip(contrib) {
                    *r = match c {
                        Some(v) => *r + *v,
                        None => T::infinity(),
                    };
                }
            }
        }
    }
    Ok(RiskCurve {
        points: grid.iter().copied().zip(risk).collect(),
        skipped_columns: skipped,
    })
}

/// Picks `λ̂` minimizing the split-sample risk (smallest level among ties)
/// and returns the full-sample plan `λ_i = |mean_i| + sd_i · λ̂`.
pub fn cv_select_lambda<T: Real>(x: &DataMatrix<T>, grid: &[T]) -> Result<CvSelection<T>> {
    let curve = cv_risk_curve(x, grid)?;
    if curve.skipped_columns == x.m() {
        return Err(Error::NoFeasibleLambda);
    }
    let mut best: Option<(T, T)> = None;
    for &(lambda, risk) in &curve.points {
        if risk.is_infinite() {
            continue;
        }
        best = match best {
            Some((bl, br)) if br < risk || (br == risk && bl <= lambda) => Some((bl, br)),
            _ => Some((lambda, risk)),
        };
    }
    let (lambda_hat, _) = best.ok_or(Error::NoFeasibleLambda)?;
    let lambda = mean_sd(x)?
        .into_iter()
        .map(|(mean, sd)| mean.abs() + sd * lambda_hat)
        .collect();
    Ok(CvSelection {
        plan: TruncationPlan::new(lambda, PlanSource::CrossValidated, Some(lambda_hat))?,
        lambda_hat,
        curve,
    })
}

/// Pooled bootstrap of the truncated data, each truncated column centered
/// at its own mean, evaluated at the untruncated `|T_i|`.
pub fn pvals_regularized_bootstrap<T: Real>(
    x: &DataMatrix<T>,
    plan: &TruncationPlan<T>,
    resamples: usize,
    seed: u64,
    stats: &TestStatVector<T>,
) -> Result<PValueVector<T>> {
    if stats.m() != x.m() {
        return Err(Error::DimensionMismatch {
            expected: x.m(),
            found: stats.m(),
        });
    }
    let truncated = truncate_matrix(x, plan)?;
    let centers = column_means(&truncated);
    let ecdf = pooled_from_centers(&truncated, &centers, resamples, seed)?;
    let p = stats.abs_t().map(|t| ecdf.tail(t)).collect();
    let mut out = PValueVector::new(p, Calibration::RegularizedBootstrap);
    out.meta.pool_size = Some(ecdf.len());
    out.meta.lambda_hat = plan.lambda_scalar;
    out.meta.truncated_fraction = Some(truncated_fraction(x, plan));
    Ok(out)
}

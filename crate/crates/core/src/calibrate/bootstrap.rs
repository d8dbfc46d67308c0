use rand::Rng;
use rayon::prelude::*;

use super::PValueVector;
use crate::data::{Calibration, DataMatrix};
use crate::error::{Error, Result};
use crate::rng::{make_rng_stream, RandomStream};
use crate::scalar::Real;
use crate::tstats::{moments, t_of, TestStatVector};

/// Redraws allowed for a constant resample before giving up.
pub(crate) const MAX_REDRAWS: usize = 100;

/// Pooled null distribution of `|T*|` over all variables and resamples.
#[derive(Debug, Clone, PartialEq)]
pub struct PooledBootstrapECDF<T> {
    sorted_abs_t: Vec<T>,
}

impl<T: Real> PooledBootstrapECDF<T> {
    /// Builds the pool from bootstrap statistics (signs are dropped).
    pub fn from_statistics(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("empty bootstrap pool".into()));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("non-finite bootstrap statistic at {pos}")));
        }
        let mut sorted_abs_t: Vec<T> = values.into_iter().map(T::abs).collect();
        sorted_abs_t.sort_unstable_by(T::cmp_finite);
        Ok(Self { sorted_abs_t })
    }

    pub fn len(&self) -> usize {
        self.sorted_abs_t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted_abs_t.is_empty()
    }

    pub fn sorted_abs_t(&self) -> &[T] {
        &self.sorted_abs_t
    }

    /// `#{|T*| ≥ t}`.
    pub fn tail_count(&self, t: T) -> usize {
        self.sorted_abs_t.len() - self.sorted_abs_t.partition_point(|v| *v < t)
    }

    /// `#{|T*| ≥ t} / (N·m)`.
    pub fn tail(&self, t: T) -> T {
        T::from_count(self.tail_count(t)) / T::from_count(self.len())
    }
}

/// `resamples` values of `|T*|` for one variable, resampling `col` with
/// replacement and centering at `center`.
fn column_bootstrap<T: Real>(
    col: &[T],
    center: T,
    resamples: usize,
    rng: &mut RandomStream,
    col_idx: usize,
) -> Result<Vec<T>> {
    let n = col.len();
    let n32 = u32::try_from(n).expect("sample count fits in u32");
    let mut buf = vec![T::zero(); n];
    let mut out = Vec::with_capacity(resamples);
    for _ in 0..resamples {
        let mut attempts = 0;
        loop {
            for b in buf.iter_mut() {
                *b = col[rng.random_range(0..n32) as usize] - center;
            }
            if let Some(t) = t_of(&buf) {
                out.push(t.abs());
                break;
            }
            attempts += 1;
            if attempts >= MAX_REDRAWS {
                return Err(Error::DegenerateResample {
                    column: col_idx,
                    attempts,
                });
            }
        }
    }
    Ok(out)
}

/// Per-variable bootstrap statistics; variable `i` uses stream `i` of `seed`.
pub(crate) fn bootstrap_by_column<T: Real>(
    x: &DataMatrix<T>,
    centers: &[T],
    resamples: usize,
    seed: u64,
) -> Result<Vec<Vec<T>>> {
    if resamples == 0 {
        return Err(Error::Config("bootstrap resamples must be at least 1".into()));
    }
    (0..x.m())
        .into_par_iter()
        .map(|i| {
            let mut rng = make_rng_stream(seed, i as u64);
            column_bootstrap(x.column(i), centers[i], resamples, &mut rng, i)
        })
        .collect()
}

pub(crate) fn column_means<T: Real>(x: &DataMatrix<T>) -> Vec<T> {
    x.columns().map(|c| moments(c).mean).collect()
}

/// Resamples every column `resamples` times (centered at its own sample
/// mean) and pools the `N·m` absolute t statistics.
pub fn bootstrap_pooled_ecdf<T: Real>(
    x: &DataMatrix<T>,
    resamples: usize,
    seed: u64,
) -> Result<PooledBootstrapECDF<T>> {
    let centers = column_means(x);
    pooled_from_centers(x, &centers, resamples, seed)
}

pub(crate) fn pooled_from_centers<T: Real>(
    x: &DataMatrix<T>,
    centers: &[T],
    resamples: usize,
    seed: u64,
) -> Result<PooledBootstrapECDF<T>> {
    let per_column = bootstrap_by_column(x, centers, resamples, seed)?;
    PooledBootstrapECDF::from_statistics(per_column.concat())
}

/// `p_i = G*_{N,m}(|T_i|)`.
pub fn pvals_bootstrap<T: Real>(stats: &TestStatVector<T>, ecdf: &PooledBootstrapECDF<T>) -> PValueVector<T> {
    let p = stats.abs_t().map(|t| ecdf.tail(t)).collect();
    let mut out = PValueVector::new(p, Calibration::Bootstrap);
    out.meta.pool_size = Some(ecdf.len());
    out
}

/// Per-variable bootstrap p-values, `#{|T*_{ki}| ≥ |T_i|} / N`.
pub fn pvals_bootstrap_individual<T: Real>(
    stats: &TestStatVector<T>,
    x: &DataMatrix<T>,
    resamples: usize,
    seed: u64,
) -> Result<PValueVector<T>> {
    if stats.m() != x.m() {
        return Err(Error::DimensionMismatch {
            expected: x.m(),
            found: stats.m(),
        });
    }
    let centers = column_means(x);
    let per_column = bootstrap_by_column(x, &centers, resamples, seed)?;
    let p = per_column
        .iter()
        .zip(stats.abs_t())
        .map(|(pool, t)| individual_tail(pool, t))
        .collect();
    Ok(PValueVector::new(p, Calibration::IndividualBootstrap))
}

fn individual_tail<T: Real>(pool: &[T], t: T) -> T {
    let count = pool.iter().filter(|v| **v >= t).count();
    T::from_count(count) / T::from_count(pool.len())
}

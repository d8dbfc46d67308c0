//! One-sample t statistics and sample moments per variable.

use rayon::prelude::*;

use crate::data::DataMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Per-variable t statistics with the moments they were built from.
#[derive(Debug, Clone, PartialEq)]
pub struct TestStatVector<T> {
    pub n: usize,
    pub t: Vec<T>,
    pub mean: Vec<T>,
    /// Standard deviation with divisor `n − 1`.
    pub sd: Vec<T>,
    /// Skewness with divisor-`n` moments.
    pub skew: Vec<T>,
}

impl<T: Real> TestStatVector<T> {
    pub fn m(&self) -> usize {
        self.t.len()
    }

    pub fn abs_t(&self) -> impl ExactSizeIterator<Item = T> + '_ {
        self.t.iter().map(|t| t.abs())
    }
}

/// Mean and divisor-`n` central moments of order 2 and 3, two-pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Moments<T> {
    pub mean: T,
    pub m2: T,
    pub m3: T,
}

pub(crate) fn moments<T: Real>(x: &[T]) -> Moments<T> {
    let n = T::from_count(x.len());
    let mean = x.iter().fold(T::zero(), |a, &v| a + v) / n;
    let (s2, s3) = x.iter().fold((T::zero(), T::zero()), |(s2, s3), &v| {
        let d = v - mean;
        let d2 = d * d;
        (s2 + d2, s3 + d2 * d)
    });
    Moments {
        mean,
        m2: s2 / n,
        m3: s3 / n,
    }
}

pub(crate) fn is_constant<T: Real>(x: &[T]) -> bool {
    x.split_first()
        .is_none_or(|(first, rest)| rest.iter().all(|v| v == first))
}

/// Skewness `m3 / m2^{3/2}` with divisor-`n` central moments.
pub fn column_skewness<T: Real>(x: &[T]) -> Result<T> {
    skewness_at(x, 0)
}

pub(crate) fn skewness_at<T: Real>(x: &[T], col: usize) -> Result<T> {
    if is_constant(x) {
        return Err(Error::DegenerateColumn(col));
    }
    let mo = moments(x);
    if !(mo.m2 > T::zero()) {
        return Err(Error::DegenerateColumn(col));
    }
    Ok(mo.m3 / (mo.m2 * mo.m2.sqrt()))
}

/// t statistic of a sample, `None` if the sample is constant.
#[inline]
pub(crate) fn t_of<T: Real>(x: &[T]) -> Option<T> {
    if is_constant(x) {
        return None;
    }
    let n = x.len();
    let mo = moments(x);
    let var = mo.m2 * T::from_count(n) / T::from_count(n - 1);
    let sd = var.sqrt();
    (sd > T::zero()).then(|| mo.mean / (sd / T::from_count(n).sqrt()))
}

struct ColumnStats<T> {
    t: T,
    mean: T,
    sd: T,
    skew: T,
}

fn column_stats<T: Real>(x: &[T], col: usize) -> Result<ColumnStats<T>> {
    if is_constant(x) {
        return Err(Error::DegenerateColumn(col));
    }
    let n = T::from_count(x.len());
    let mo = moments(x);
    if !(mo.m2 > T::zero()) {
        return Err(Error::DegenerateColumn(col));
    }
    let sd = (mo.m2 * n / (n - T::one())).sqrt();
    Ok(ColumnStats {
        t: mo.mean / (sd / n.sqrt()),
        mean: mo.mean,
        sd,
        skew: mo.m3 / (mo.m2 * mo.m2.sqrt()),
    })
}

/// Computes `T_i = mean_i / (sd_i / √n)` for every column.
pub fn t_statistics<T: Real>(x: &DataMatrix<T>) -> Result<TestStatVector<T>> {
    let per_col: Vec<ColumnStats<T>> = (0..x.m())
        .into_par_iter()
        .map(|i| column_stats(x.column(i), i))
        .collect::<Result<_>>()?;
    let m = per_col.len();
    let mut out = TestStatVector {
        n: x.n(),
        t: Vec::with_capacity(m),
        mean: Vec::with_capacity(m),
        sd: Vec::with_capacity(m),
        skew: Vec::with_capacity(m),
    };
    for c in per_col {
        out.t.push(c.t);
        out.mean.push(c.mean);
        out.sd.push(c.sd);
        out.skew.push(c.skew);
    }
    Ok(out)
}

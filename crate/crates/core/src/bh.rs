//! Benjamini–Hochberg step-up procedure and error metrics.

use crate::data::GroundTruth;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Outcome of the step-up procedure.
#[derive(Debug, Clone, PartialEq)]
pub struct BHResult<T> {
    /// Rejected hypothesis indices, ascending.
    pub rejected: Vec<usize>,
    /// Step-up index `k̂`.
    pub k_hat: usize,
    /// `p_(k̂)`, zero when nothing is rejected.
    pub p_threshold: T,
    /// Number of hypotheses tested.
    pub m: usize,
}

impl<T> BHResult<T> {
    pub fn num_rejections(&self) -> usize {
        self.rejected.len()
    }
}

/// Confusion counts against known truth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorMetrics<T> {
    /// False rejections.
    pub v: usize,
    /// Total rejections.
    pub r: usize,
    pub fdp: T,
    pub power: T,
}

fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha > T::zero() && alpha < T::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha must lie in (0,1), got {alpha}")))
    }
}

/// Rejects every hypothesis with `p_i ≤ p_(k̂)` where
/// `k̂ = max{i : p_(i) ≤ α i / m}`.
pub fn bh_stepup<T: Real>(p: &[T], alpha: T) -> Result<BHResult<T>> {
    check_alpha(alpha)?;
    let m = p.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| p[a].cmp_finite(&p[b]).then(a.cmp(&b)));
    let mf = T::from_count(m);
    let k_hat = order
        .iter()
        .enumerate()
        .rev()
        .find(|(rank, &i)| p[i] <= alpha * T::from_count(rank + 1) / mf)
        .map_or(0, |(rank, _)| rank + 1);
    if k_hat == 0 {
        return Ok(BHResult {
            rejected: Vec::new(),
            k_hat,
            p_threshold: T::zero(),
            m,
        });
    }
    let p_threshold = p[order[k_hat - 1]];
    let rejected = (0..m).filter(|&i| p[i] <= p_threshold).collect();
    Ok(BHResult {
        rejected,
        k_hat,
        p_threshold,
        m,
    })
}

/// Threshold form of the step-up rule on the statistic scale:
/// `t̂ = inf{t ≥ 0 : G(t) ≤ α · max(#{|T_i| ≥ t}, 1) / m}` for a continuous,
/// strictly decreasing two-sided tail `G`. Hypotheses with `|T_i| ≥ t̂` are
/// rejected (see [`reject_at_threshold`]).
///
/// The scan runs over the order statistics of `|T|` (any input order). The
/// infimum is `G⁻¹(α max(k, 1)/m)` for the largest qualifying rank `k`,
/// found by bisection and capped at the `k`-th largest statistic.
pub fn bh_threshold_form<T: Real, F: Fn(T) -> T>(t_abs: &[T], sf2: F, alpha: T) -> Result<T> {
    check_alpha(alpha)?;
    let m = t_abs.len();
    if m == 0 {
        return Err(Error::Domain("no statistics".into()));
    }
    let mut desc: Vec<T> = t_abs.iter().map(|t| t.abs()).collect();
    desc.sort_unstable_by(|a, b| b.cmp_finite(a));
    let mf = T::from_count(m);
    let mut k = 0;
    for j in (1..=m).rev() {
        // Ties: all copies of a value count towards #{|T| ≥ t}.
        if j < m && desc[j] == desc[j - 1] {
            continue;
        }
        if sf2(desc[j - 1]) <= alpha * T::from_count(j) / mf {
            k = j;
            break;
        }
    }
    let target = alpha * T::from_count(k.max(1)) / mf;
    let root = invert_decreasing(&sf2, target);
    Ok(if k >= 1 { root.min(desc[k - 1]) } else { root })
}

/// Indices with `|T_i| ≥ threshold`, ascending.
pub fn reject_at_threshold<T: Real>(t_abs: &[T], threshold: T) -> Vec<usize> {
    (0..t_abs.len()).filter(|&i| t_abs[i].abs() >= threshold).collect()
}

// Smallest t ≥ 0 with f(t) ≤ target, to bisection precision.
fn invert_decreasing<T: Real, F: Fn(T) -> T>(f: &F, target: T) -> T {
    if f(T::zero()) <= target {
        return T::zero();
    }
    let mut lo = T::zero();
    let mut hi = T::one();
    while f(hi) > target {
        lo = hi;
        hi = hi * T::lit(2.0);
        if hi > T::lit(1e6) {
            return T::infinity();
        }
    }
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Scores a rejection set: `FDP = V / max(R, 1)`, power = true rejections / m₁.
pub fn score<T: Real>(result: &BHResult<T>, truth: &GroundTruth<T>) -> Result<ErrorMetrics<T>> {
    if truth.m() != result.m {
        return Err(Error::DimensionMismatch {
            expected: result.m,
            found: truth.m(),
        });
    }
    let r = result.rejected.len();
    let v = result.rejected.iter().filter(|&&i| truth.is_null(i)).count();
    let m1 = truth.alt_count();
    let fdp = T::from_count(v) / T::from_count(r.max(1));
    let power = if m1 == 0 {
        T::zero()
    } else {
        T::from_count(r - v) / T::from_count(m1)
    };
    Ok(ErrorMetrics { v, r, fdp, power })
}

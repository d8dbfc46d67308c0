//! Skewness-corrected tail approximations for the t statistic and the
//! FDR inflation they imply under normal calibration.
//!
//! For a null variable with standardized skewness `κ`,
//! `P(|T| ≥ t) ≈ G(t) · cosh(t³κ / (3√n))` for `0 ≤ t ≤ o(n^{1/4})`,
//! where `G(t) = 2 − 2Φ(t)`.

use crate::dist::{normal_sf2_unchecked, TailProb};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `cosh` argument clamp.
const MAX_COSH_ARG: f64 = 700.0;

/// Null skewnesses and sample size feeding the expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewProfile<T> {
    kappa: Vec<T>,
    n: usize,
}

impl<T: Real> SkewProfile<T> {
    pub fn new(kappa: Vec<T>, n: usize) -> Result<Self> {
        if kappa.is_empty() {
            return Err(Error::Domain("skew profile needs at least one null".into()));
        }
        if kappa.iter().any(|k| !k.is_finite()) {
            return Err(Error::Domain("skewness values must be finite".into()));
        }
        if n == 0 {
            return Err(Error::Domain("sample size must be positive".into()));
        }
        Ok(Self { kappa, n })
    }

    /// `m₀` copies of one skewness value.
    pub fn uniform(kappa: T, m0: usize, n: usize) -> Result<Self> {
        Self::new(vec![kappa; m0], n)
    }

    pub fn kappa(&self) -> &[T] {
        &self.kappa
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mean absolute skewness.
    pub fn tau(&self) -> T {
        self.kappa.iter().fold(T::zero(), |a, k| a + k.abs()) / T::from_count(self.kappa.len())
    }

    /// `n^{1/4}`, the edge of the region where the expansion is used.
    pub fn validity_edge(&self) -> T {
        T::from_count(self.n).powf(T::lit(0.25))
    }
}

fn cosh_guarded<T: Real>(x: T) -> T {
    let cap = T::lit(MAX_COSH_ARG);
    x.abs().min(cap).cosh()
}

/// `m₀⁻¹ Σ cosh(t³κ_i / (3√n))`; always `≥ 1`.
pub fn inflation_factor<T: Real>(t: T, profile: &SkewProfile<T>) -> T {
    let t = t.max(T::zero());
    if t > T::lit(0.8) * profile.validity_edge() {
        log::warn!(
            "t = {t} is beyond 0.8·n^(1/4) = {}; the tail expansion is unreliable there",
            T::lit(0.8) * profile.validity_edge()
        );
    }
    let scale = t * t * t / (T::lit(3.0) * T::from_count(profile.n).sqrt());
    let sum = profile
        .kappa
        .iter()
        .fold(T::zero(), |a, &k| a + cosh_guarded(scale * k));
    (sum / T::from_count(profile.kappa.len())).max(T::one())
}

fn g_kappa_raw<T: Real>(t: T, profile: &SkewProfile<T>) -> T {
    let scale = t * t * t / (T::lit(3.0) * T::from_count(profile.n).sqrt());
    let sum = profile
        .kappa
        .iter()
        .fold(T::zero(), |a, &k| a + cosh_guarded(scale * k));
    let v = normal_sf2_unchecked(t) * (sum / T::from_count(profile.kappa.len()));
    v.min(T::one())
}

/// Skewness-corrected two-sided tail `G_κ(t) = G(t) · m₀⁻¹ Σ cosh(t³κ_i/(3√n))`,
/// clamped to 1.
pub fn g_kappa<T: Real>(t: T, profile: &SkewProfile<T>) -> Result<TailProb<T>> {
    if !(t >= T::zero()) {
        return Err(Error::Domain(format!("g_kappa needs t >= 0, got {t}")));
    }
    Ok(TailProb::new(g_kappa_raw(t, profile)))
}

/// Smallest `t ∈ [0, n^{1/4}]` with `G_κ(t) = p`, by bisection.
pub fn g_kappa_inverse<T: Real>(p: T, profile: &SkewProfile<T>) -> Result<T> {
    if !(p > T::zero() && p <= T::one()) {
        return Err(Error::Domain(format!("g_kappa_inverse needs p in (0,1], got {p}")));
    }
    if p == T::one() {
        return Ok(T::zero());
    }
    let edge = profile.validity_edge();
    if g_kappa_raw(edge, profile) > p {
        return Err(Error::NotBracketed {
            target: p.to_f64().unwrap_or(f64::NAN),
            edge: edge.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut lo = T::zero();
    let mut hi = edge;
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if g_kappa_raw(mid, profile) > p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Both ends agree to the last bit; return the one closer in value.
    let (gl, gh) = (g_kappa_raw(lo, profile), g_kappa_raw(hi, profile));
    Ok(if (gl - p).abs() < (gh - p).abs() { lo } else { hi })
}

/// Predicted FDR of normal calibration, `(m₀/m) α min(κ_Φ(t̂), 2/(α(1 − m₁/m)))`.
pub fn predict_fdr<T: Real>(alpha: T, m: usize, m0: usize, profile: &SkewProfile<T>, t_hat: T) -> Result<T> {
    if !(alpha > T::zero() && alpha < T::one()) {
        return Err(Error::Domain(format!("alpha must lie in (0,1), got {alpha}")));
    }
    if m0 == 0 || m0 > m {
        return Err(Error::Domain(format!("need 0 < m0 <= m, got m0 = {m0}, m = {m}")));
    }
    let pi0 = T::from_count(m0) / T::from_count(m);
    let cap = T::lit(2.0) / (alpha * pi0);
    Ok(pi0 * alpha * inflation_factor(t_hat, profile).min(cap))
}

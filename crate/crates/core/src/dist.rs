//! Normal and Student t tail probabilities and the normal quantile.
//!
//! `erfc` uses the positive-term series for `erf` below 2 and a Lentz
//! continued fraction above; the Student t tail goes through the
//! regularized incomplete beta function. Nothing here defers to the
//! platform libm beyond `exp`/`ln`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_ITER: usize = 10_000;

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TailProb<T>(T);

impl<T: Real> TailProb<T> {
    /// Wraps `value`, clamping rounding spill outside `[0, 1]`.
    pub fn new(value: T) -> Self {
        Self(value.max(T::zero()).min(T::one()))
    }

    pub fn value(self) -> T {
        self.0
    }
}

fn tiny<T: Real>() -> T {
    T::min_positive_value() / T::epsilon()
}

/// Error function.
pub fn erf<T: Real>(x: T) -> T {
    if x < T::zero() {
        return -erf(-x);
    }
    if x < T::lit(2.0) {
        erf_series(x)
    } else {
        T::one() - erfc_cf(x)
    }
}

/// Complementary error function, accurate to near machine precision in
/// relative terms on the whole positive axis.
pub fn erfc<T: Real>(x: T) -> T {
    if x < T::zero() {
        return T::lit(2.0) - erfc(-x);
    }
    if x < T::lit(2.0) {
        T::one() - erf_series(x)
    } else {
        erfc_cf(x)
    }
}

// erf(x) = 2/√π e^{-x²} Σ 2ⁿ x^{2n+1} / (2n+1)!!
fn erf_series<T: Real>(x: T) -> T {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    for k in 1..MAX_ITER {
        term = term * T::lit(2.0) * x2 / T::from_count(2 * k + 1);
        sum = sum + term;
        if term <= sum * T::epsilon() {
            break;
        }
    }
    T::lit(2.0 / PI.sqrt()) * (-x2).exp() * sum
}

// erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
fn erfc_cf<T: Real>(x: T) -> T {
    let tiny = tiny::<T>();
    let mut f = x;
    let mut c = f;
    let mut d = T::zero();
    for j in 1..MAX_ITER {
        let a = T::from_count(j) * T::lit(0.5);
        d = x + a * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = x + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = d.recip();
        let delta = c * d;
        f = f * delta;
        if (delta - T::one()).abs() <= T::epsilon() {
            break;
        }
    }
    (-x * x).exp() / (f * T::lit(PI.sqrt()))
}

/// Standard normal CDF Φ(x).
pub fn normal_cdf<T: Real>(x: T) -> T {
    T::lit(0.5) * erfc(-x * T::lit(FRAC_1_SQRT_2))
}

/// Upper tail 1 − Φ(x), computed without subtraction.
pub fn normal_sf<T: Real>(x: T) -> T {
    T::lit(0.5) * erfc(x * T::lit(FRAC_1_SQRT_2))
}

pub fn normal_pdf<T: Real>(x: T) -> T {
    T::lit(1.0 / (2.0 * PI).sqrt()) * (-x * x * T::lit(0.5)).exp()
}

/// Two-sided normal tail `G(t) = 2 − 2Φ(t)` for `t ≥ 0`.
pub fn normal_sf2<T: Real>(t: T) -> Result<TailProb<T>> {
    if !(t >= T::zero()) {
        return Err(Error::Domain(format!("normal_sf2 needs t >= 0, got {t}")));
    }
    Ok(TailProb::new(normal_sf2_unchecked(t)))
}

#[inline]
pub(crate) fn normal_sf2_unchecked<T: Real>(t: T) -> T {
    erfc(t * T::lit(FRAC_1_SQRT_2))
}

/// ln Γ(x) for x > 0 (Lanczos, g = 7, nine terms).
pub fn ln_gamma<T: Real>(x: T) -> T {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < T::lit(0.5) {
        // Γ(x) = Γ(x+1)/x keeps the Lanczos sum in its accurate range.
        return ln_gamma(x + T::one()) - x.ln();
    }
    let x = x - T::one();
    let mut acc = T::lit(COEF[0]);
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (x + T::from_count(i));
    }
    let t = x + T::lit(G + 0.5);
    T::lit(0.5 * (2.0 * PI).ln()) + (x + T::lit(0.5)) * t.ln() - t + acc.ln()
}

/// Regularized incomplete beta `I_x(a, b)`.
pub fn regularized_incomplete_beta<T: Real>(a: T, b: T, x: T) -> Result<T> {
    if !(a > T::zero() && b > T::zero()) {
        return Err(Error::Domain(format!("incomplete beta needs a, b > 0, got ({a}, {b})")));
    }
    if !(x >= T::zero() && x <= T::one()) {
        return Err(Error::Domain(format!("incomplete beta needs x in [0,1], got {x}")));
    }
    Ok(inc_beta(a, b, x, T::one() - x))
}

// `y` is 1 − x supplied by the caller so it can be formed without
// cancellation.
fn inc_beta<T: Real>(a: T, b: T, x: T, y: T) -> T {
    if x <= T::zero() {
        return T::zero();
    }
    if y <= T::zero() {
        return T::one();
    }
    let half = T::lit(0.5);
    let ln_x = if x < half { x.ln() } else { (-y).ln_1p() };
    let ln_y = if y < half { y.ln() } else { (-x).ln_1p() };
    let ln_beta = ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
    let front = (a * ln_x + b * ln_y - ln_beta).exp();
    if x < (a + T::one()) / (a + b + T::lit(2.0)) {
        front * beta_cf(a, b, x) / a
    } else {
        T::one() - front * beta_cf(b, a, y) / b
    }
}

// Continued fraction for I_x(a,b), modified Lentz.
fn beta_cf<T: Real>(a: T, b: T, x: T) -> T {
    let tiny = tiny::<T>();
    let one = T::one();
    let two = T::lit(2.0);
    let qab = a + b;
    let qap = a + one;
    let qam = a - one;
    let mut c = one;
    let mut d = one - qab * x / qap;
    if d.abs() < tiny {
        d = tiny;
    }
    d = d.recip();
    let mut h = d;
    for k in 1..MAX_ITER {
        let mk = T::from_count(k);
        let m2 = two * mk;
        let aa = mk * (b - mk) * x / ((qam + m2) * (a + m2));
        d = one + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = one + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = d.recip();
        h = h * d * c;
        let aa = -(a + mk) * (qab + mk) * x / ((a + m2) * (qap + m2));
        d = one + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = one + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = d.recip();
        let delta = d * c;
        h = h * delta;
        if (delta - one).abs() <= T::epsilon() {
            break;
        }
    }
    h
}

/// Two-sided Student t tail `2 − 2Ψ_df(t)` for `t ≥ 0`.
pub fn t_sf2<T: Real>(t: T, df: u32) -> Result<TailProb<T>> {
    if !(t >= T::zero()) {
        return Err(Error::Domain(format!("t_sf2 needs t >= 0, got {t}")));
    }
    if df == 0 {
        return Err(Error::Domain("t_sf2 needs df >= 1".into()));
    }
    Ok(TailProb::new(t_sf2_unchecked(t, df)))
}

pub(crate) fn t_sf2_unchecked<T: Real>(t: T, df: u32) -> T {
    if t.is_infinite() {
        return T::zero();
    }
    let nu = T::from_u32(df).expect("df representable");
    let t2 = t * t;
    let denom = nu + t2;
    inc_beta(nu * T::lit(0.5), T::lit(0.5), nu / denom, t2 / denom)
}

/// Standard normal quantile Φ⁻¹(p).
pub fn normal_quantile<T: Real>(p: T) -> Result<T> {
    if !(p > T::zero() && p < T::one()) {
        return Err(Error::Domain(format!("normal_quantile needs p in (0,1), got {p}")));
    }
    let half = T::lit(0.5);
    Ok(if p < half {
        -upper_quantile(p)
    } else {
        upper_quantile(T::one() - p)
    })
}

// Solves 1 − Φ(x) = q for x ≥ 0 with q ≤ 1/2: Newton on ln(1 − Φ),
// falling back to bisection whenever a step leaves the bracket.
fn upper_quantile<T: Real>(q: T) -> T {
    if q >= T::lit(0.5) {
        return T::zero();
    }
    let target = q.ln();
    let mut lo = T::zero();
    let mut hi = T::one();
    while normal_sf(hi) > q {
        lo = hi;
        hi = hi * T::lit(2.0);
    }
    let mut x = acklam_upper(q).max(lo).min(hi);
    for _ in 0..200 {
        let s = normal_sf(x);
        if s > q {
            lo = x;
        } else {
            hi = x;
        }
        let step = (s.ln() - target) * s / normal_pdf(x);
        let mut next = x + step;
        if !(next > lo && next < hi) {
            next = (lo + hi) * T::lit(0.5);
        }
        if (next - x).abs() <= T::lit(4.0) * T::epsilon() * next.abs().max(T::one()) {
            return next;
        }
        x = next;
    }
    x
}

// Acklam's rational approximation for the starting point.
fn acklam_upper<T: Real>(q: T) -> T {
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    let q = q.to_f64().unwrap_or(0.5);
    // Lower-tail quantile of q, negated.
    let x = if q < 0.02425 {
        let r = (-2.0 * q.ln()).sqrt();
        (((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5])
            / ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1.0)
    } else {
        let u = q - 0.5;
        let r = u * u;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * u
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    };
    T::lit(-x)
}

//! The four noise models used in the simulation study.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{ChiSquared, Distribution, Exp1, Gamma, LogNormal, StandardNormal};

use crate::data::{DataMatrix, GroundTruth};
use crate::error::{Error, Result};
use crate::rng::RandomStream;

/// Noise law of a simulation model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelId {
    /// Centered Exp(1).
    Exp1,
    /// Centered Gamma(shape 0.5, scale 1).
    Gamma05,
    /// Student t with 4 degrees of freedom.
    T4,
    /// Difference of two independent LogNormal(0, 1).
    LogNormalDiff,
}

impl ModelId {
    pub const ALL: [ModelId; 4] = [ModelId::Exp1, ModelId::Gamma05, ModelId::T4, ModelId::LogNormalDiff];

    pub fn name(self) -> &'static str {
        match self {
            ModelId::Exp1 => "exp1",
            ModelId::Gamma05 => "gamma05",
            ModelId::T4 => "t4",
            ModelId::LogNormalDiff => "lognormal",
        }
    }

    pub(crate) fn code(self) -> u64 {
        match self {
            ModelId::Exp1 => 1,
            ModelId::Gamma05 => 2,
            ModelId::T4 => 3,
            ModelId::LogNormalDiff => 4,
        }
    }

    /// Standard deviation of the noise.
    pub fn noise_sd(self) -> f64 {
        match self {
            ModelId::Exp1 => 1.0,
            ModelId::Gamma05 => 0.5f64.sqrt(),
            ModelId::T4 => 2.0f64.sqrt(),
            ModelId::LogNormalDiff => {
                let e = std::f64::consts::E;
                (2.0 * (e * e - e)).sqrt()
            }
        }
    }

    /// Standardized third moment of the noise.
    pub fn noise_skewness(self) -> f64 {
        match self {
            ModelId::Exp1 => 2.0,
            ModelId::Gamma05 => 2.0 / 0.5f64.sqrt(),
            ModelId::T4 | ModelId::LogNormalDiff => 0.0,
        }
    }

    /// Mean of the raw noise draw, subtracted before use.
    fn noise_mean(self) -> f64 {
        match self {
            ModelId::Exp1 => 1.0,
            ModelId::Gamma05 => 0.5,
            ModelId::T4 | ModelId::LogNormalDiff => 0.0,
        }
    }

    fn alt_fraction(self) -> f64 {
        match self {
            ModelId::Exp1 | ModelId::Gamma05 => 0.05,
            ModelId::T4 | ModelId::LogNormalDiff => 0.1,
        }
    }

    /// Alternative mean `μ = c · scale · √(ln m / n)`.
    fn alt_mean(self, n: usize, m: usize) -> f64 {
        let rate = ((m as f64).ln() / n as f64).sqrt();
        match self {
            ModelId::Exp1 => 2.0 * self.noise_sd() * rate,
            ModelId::Gamma05 => 4.0 * self.noise_sd() * rate,
            ModelId::T4 => 2.0 * rate,
            ModelId::LogNormalDiff => 4.0 * rate,
        }
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exp1" | "exp" | "model1" => Ok(ModelId::Exp1),
            "gamma05" | "gamma" | "model2" => Ok(ModelId::Gamma05),
            "t4" | "model3" => Ok(ModelId::T4),
            "lognormal" | "lognormaldiff" | "model4" => Ok(ModelId::LogNormalDiff),
            other => Err(Error::Config(format!("unknown model '{other}'"))),
        }
    }
}

/// A fully specified simulation model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSpec {
    pub id: ModelId,
    pub m: usize,
    pub n: usize,
    /// Alternatives occupy variables `0..m1`.
    pub m1: usize,
    pub mu_alt: f64,
    pub sigma: f64,
}

impl ModelSpec {
    /// Standard setting: `m1 = round(fraction · m)` (half rounded up).
    pub fn new(id: ModelId, n: usize, m: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewSamples(n));
        }
        if m < 2 {
            return Err(Error::Config(format!("model needs m >= 2, got {m}")));
        }
        let m1 = (id.alt_fraction() * m as f64 + 0.5).floor() as usize;
        Ok(Self {
            id,
            m,
            n,
            m1: m1.min(m),
            mu_alt: id.alt_mean(n, m),
            sigma: id.noise_sd(),
        })
    }

    /// Overrides the number of alternatives.
    pub fn with_alternatives(mut self, m1: usize) -> Result<Self> {
        if m1 > self.m {
            return Err(Error::Config(format!("m1 = {m1} exceeds m = {}", self.m)));
        }
        self.m1 = m1;
        Ok(self)
    }

    pub fn m0(&self) -> usize {
        self.m - self.m1
    }

    pub fn truth(&self) -> GroundTruth<f64> {
        GroundTruth::from_means((0..self.m).map(|i| if i < self.m1 { self.mu_alt } else { 0.0 }).collect())
    }
}

/// Sampler for one model's centered noise.
#[derive(Debug, Clone, Copy)]
pub struct NoiseSampler {
    id: ModelId,
    gamma: Gamma<f64>,
    chi2: ChiSquared<f64>,
    lognormal: LogNormal<f64>,
}

impl NoiseSampler {
    pub fn new(id: ModelId) -> Self {
        Self {
            id,
            gamma: Gamma::new(0.5, 1.0).expect("valid gamma"),
            chi2: ChiSquared::new(4.0).expect("valid chi-square"),
            lognormal: LogNormal::new(0.0, 1.0).expect("valid lognormal"),
        }
    }
}

impl Distribution<f64> for NoiseSampler {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let raw = match self.id {
            ModelId::Exp1 => Exp1.sample(rng),
            ModelId::Gamma05 => self.gamma.sample(rng),
            ModelId::T4 => {
                let z: f64 = StandardNormal.sample(rng);
                z / (self.chi2.sample(rng) / 4.0).sqrt()
            }
            ModelId::LogNormalDiff => self.lognormal.sample(rng) - self.lognormal.sample(rng),
        };
        raw - self.id.noise_mean()
    }
}

/// Draws an `n × m` data set, variable by variable.
pub fn generate(model: &ModelSpec, rng: &mut RandomStream) -> Result<(DataMatrix<f64>, GroundTruth<f64>)> {
    let truth = model.truth();
    let noise = NoiseSampler::new(model.id);
    let mut values = Vec::with_capacity(model.n * model.m);
    for &mu in truth.mu() {
        for _ in 0..model.n {
            values.push(mu + noise.sample(rng));
        }
    }
    Ok((DataMatrix::from_column_major(model.n, model.m, values)?, truth))
}

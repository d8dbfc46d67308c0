//! Replicated simulation experiments: empirical FDR and power of each
//! calibration on the four noise models.
//!
//! Within one `(model, n, m)` cell every method and every level sees the
//! same generated data sets. Replication `r` of a cell draws its data from
//! stream `r` of the cell seed and bootstraps under a seed derived from
//! `(cell seed, r)`, so a cell gives identical results whether it runs
//! alone or inside a grid, and on any number of threads.

mod model;

pub use model::{generate, ModelId, ModelSpec, NoiseSampler};

use std::time::Instant;

use rayon::prelude::*;

use crate::bh::{bh_stepup, score, ErrorMetrics};
use crate::calibrate::calibrate_with_seed;
use crate::data::{Calibration, LambdaMode, RunConfig};
use crate::error::{Error, Result};
use crate::rng::{derive_seed, make_rng_stream};
use crate::scalar::compensated_sum;
use crate::tstats::t_statistics;

const BOOTSTRAP_LABEL: u64 = 0xB007;

/// Seed of the `(model, n, m)` cell under a run seed.
pub fn cell_seed(seed: u64, model: &ModelSpec) -> u64 {
    derive_seed(seed, &[model.id.code(), model.n as u64, model.m as u64, model.m1 as u64])
}

/// Result of one method at one level in one replication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelOutcome {
    pub alpha: f64,
    pub k_hat: usize,
    pub metrics: ErrorMetrics<f64>,
}

/// One method in one replication.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodOutcome {
    pub method: Calibration,
    pub levels: Vec<LevelOutcome>,
    pub lambda_hat: Option<f64>,
    pub seconds: f64,
}

/// All methods in one replication.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplicationOutcome {
    pub replication: usize,
    pub methods: Vec<MethodOutcome>,
}

/// Settings shared by every cell of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct SimSettings {
    pub alphas: Vec<f64>,
    pub methods: Vec<Calibration>,
    pub replications: usize,
    pub resamples: usize,
    pub lambda_mode: LambdaMode,
    pub seed: u64,
}

impl Default for SimSettings {
    fn default() -> Self {
        Self {
            alphas: vec![0.1],
            methods: Calibration::TABLE_METHODS.to_vec(),
            replications: 500,
            resamples: 200,
            lambda_mode: LambdaMode::CrossValidated,
            seed: 0,
        }
    }
}

impl SimSettings {
    fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() || self.methods.is_empty() {
            return Err(Error::Config("need at least one level and one method".into()));
        }
        if self.replications == 0 {
            return Err(Error::Config("replications must be at least 1".into()));
        }
        for &alpha in &self.alphas {
            self.run_config(alpha).validate()?;
        }
        Ok(())
    }

    fn run_config(&self, alpha: f64) -> RunConfig {
        RunConfig {
            alpha,
            calibration: self.methods[0],
            bootstrap_resamples: self.resamples,
            lambda_mode: self.lambda_mode,
            seed: self.seed,
        }
    }
}

/// Per-replication outcomes of one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellRun {
    pub model: ModelSpec,
    pub settings: SimSettings,
    pub replications: Vec<ReplicationOutcome>,
}

fn run_replication(model: &ModelSpec, settings: &SimSettings, seed: u64, r: usize) -> Result<ReplicationOutcome> {
    let mut rng = make_rng_stream(seed, r as u64);
    let (x, truth) = generate(model, &mut rng)?;
    let stats = t_statistics(&x)?;
    let boot_seed = derive_seed(seed, &[BOOTSTRAP_LABEL, r as u64]);
    let config = settings.run_config(settings.alphas[0]);
    let methods = settings
        .methods
        .iter()
        .map(|&method| {
            let start = Instant::now();
            let pv = calibrate_with_seed(&x, &stats, method, &config, boot_seed)?;
            let levels = settings
                .alphas
                .iter()
                .map(|&alpha| {
                    let res = bh_stepup(&pv.p, alpha)?;
                    Ok(LevelOutcome {
                        alpha,
                        k_hat: res.k_hat,
                        metrics: score(&res, &truth)?,
                    })
                })
                .collect::<Result<_>>()?;
            Ok(MethodOutcome {
                method,
                levels,
                lambda_hat: pv.meta.lambda_hat,
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(ReplicationOutcome { replication: r, methods })
}

/// Runs every replication of one cell; replications execute in parallel.
pub fn run_cell(model: &ModelSpec, settings: &SimSettings) -> Result<CellRun> {
    settings.validate()?;
    let seed = cell_seed(settings.seed, model);
    let replications = (0..settings.replications)
        .into_par_iter()
        .map(|r| run_replication(model, settings, seed, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(CellRun {
        model: *model,
        settings: settings.clone(),
        replications,
    })
}

/// Aggregated empirical FDR and power for one `(model, n, m, α, method)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimRow {
    pub model: ModelId,
    pub n: usize,
    pub m: usize,
    pub alpha: f64,
    pub method: Calibration,
    pub fdr: f64,
    pub power: f64,
    pub fdr_se: f64,
    pub power_se: f64,
    pub replications: usize,
    /// Time spent calibrating and testing with this method, summed over
    /// replications.
    pub seconds: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SimReport {
    pub rows: Vec<SimRow>,
}

/// Mean and Monte Carlo standard error `sd / √reps`.
pub fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let mean = compensated_sum(values.iter().copied()) / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let ss = compensated_sum(values.iter().map(|v| (v - mean) * (v - mean)));
    (mean, (ss / (n - 1) as f64).sqrt() / (n as f64).sqrt())
}

impl CellRun {
    /// FDP and power of every replication for one method and level.
    pub fn series(&self, method: Calibration, alpha: f64) -> Option<(Vec<f64>, Vec<f64>)> {
        let mi = self.settings.methods.iter().position(|&m| m == method)?;
        let ai = self.settings.alphas.iter().position(|&a| a == alpha)?;
        Some(
            self.replications
                .iter()
                .map(|r| {
                    let lv = &r.methods[mi].levels[ai];
                    (lv.metrics.fdp, lv.metrics.power)
                })
                .unzip(),
        )
    }

    /// Rows ordered by level, then method.
    pub fn rows(&self) -> Vec<SimRow> {
        let mut rows = Vec::new();
        for (ai, &alpha) in self.settings.alphas.iter().enumerate() {
            for (mi, &method) in self.settings.methods.iter().enumerate() {
                let fdp: Vec<f64> = self.replications.iter().map(|r| r.methods[mi].levels[ai].metrics.fdp).collect();
                let pow: Vec<f64> = self.replications.iter().map(|r| r.methods[mi].levels[ai].metrics.power).collect();
                let (fdr, fdr_se) = mean_and_se(&fdp);
                let (power, power_se) = mean_and_se(&pow);
                rows.push(SimRow {
                    model: self.model.id,
                    n: self.model.n,
                    m: self.model.m,
                    alpha,
                    method,
                    fdr,
                    power,
                    fdr_se,
                    power_se,
                    replications: self.replications.len(),
                    seconds: self.replications.iter().map(|r| r.methods[mi].seconds).sum(),
                });
            }
        }
        rows
    }
}

/// One method at one level on one model.
pub fn run_experiment(model: &ModelSpec, config: &RunConfig, replications: usize) -> Result<SimRow> {
    config.validate()?;
    let settings = SimSettings {
        alphas: vec![config.alpha],
        methods: vec![config.calibration],
        replications,
        resamples: config.bootstrap_resamples,
        lambda_mode: config.lambda_mode,
        seed: config.seed,
    };
    Ok(run_cell(model, &settings)?.rows().remove(0))
}

/// Full factorial sweep; rows ordered by model, n, m, α, method.
pub fn run_grid(models: &[ModelId], n_values: &[usize], m_values: &[usize], settings: &SimSettings) -> Result<SimReport> {
    if models.is_empty() || n_values.is_empty() || m_values.is_empty() {
        return Err(Error::Config("simulation grid has an empty axis".into()));
    }
    let mut rows = Vec::new();
    for &id in models {
        for &n in n_values {
            for &m in m_values {
                let model = ModelSpec::new(id, n, m)?;
                rows.extend(run_cell(&model, settings)?.rows());
            }
        }
    }
    Ok(SimReport { rows })
}

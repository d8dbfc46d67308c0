use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use fdrlab::calibrate::{cv_select_lambda, default_lambda_grid, DEFAULT_GRID_POINTS};
use fdrlab::sim::{run_grid, ModelId, SimSettings};
use fdrlab::{run_test, Calibration, LambdaMode, RunConfig};

use crate::config::KeyValues;
use crate::input::read_matrix;
use crate::report::{num, write_output};
use crate::Failure;

fn load_config(path: Option<&PathBuf>) -> Result<KeyValues, Failure> {
    match path {
        Some(p) => KeyValues::load(p),
        None => Ok(KeyValues::default()),
    }
}

#[derive(Debug, Args)]
pub struct TestArgs {
    /// Data file: rows are samples, columns are variables.
    #[arg(long)]
    input: Option<PathBuf>,
    /// normal, t, boot, regboot or indboot.
    #[arg(long)]
    method: Option<Calibration>,
    #[arg(long)]
    alpha: Option<f64>,
    /// Bootstrap resamples per variable.
    #[arg(long)]
    resamples: Option<usize>,
    /// Truncation level choice for regboot: `cv` or `rate:<c>`.
    #[arg(long)]
    lambda: Option<LambdaMode>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print full-precision numbers.
    #[arg(long)]
    raw: bool,
    /// key = value file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

pub fn cmd_test(args: TestArgs) -> Result<(), Failure> {
    let mut kv = load_config(args.config.as_ref())?;
    let defaults = RunConfig::default();
    let input: Option<PathBuf> = kv.take("input")?;
    let output: Option<PathBuf> = kv.take("output")?;
    let config = RunConfig {
        alpha: args.alpha.or(kv.take("alpha")?).unwrap_or(defaults.alpha),
        calibration: args.method.or(kv.take("method")?).unwrap_or(defaults.calibration),
        bootstrap_resamples: args.resamples.or(kv.take("resamples")?).unwrap_or(defaults.bootstrap_resamples),
        lambda_mode: args.lambda.or(kv.take("lambda")?).unwrap_or(defaults.lambda_mode),
        seed: args.seed.or(kv.take("seed")?).unwrap_or(defaults.seed),
    };
    kv.finish()?;
    config.validate().map_err(Failure::from_lib)?;
    let input = args
        .input
        .or(input)
        .ok_or_else(|| Failure::Input("test needs --input".into()))?;
    let output = args.output.or(output);
    let raw = args.raw;

    let x = read_matrix(&input)?;
    let out = run_test(&x, &config).map_err(Failure::from_lib)?;

    let mut rejected = vec![false; out.stats.m()];
    for &i in &out.rejections.rejected {
        rejected[i] = true;
    }
    let mut text = String::from("index,t,p,rejected\n");
    for i in 0..out.stats.m() {
        writeln!(
            text,
            "{},{},{},{}",
            i + 1,
            num(out.stats.t[i], raw),
            num(out.pvalues.p[i], raw),
            u8::from(rejected[i])
        )
        .unwrap();
    }
    let t_cut = out
        .rejections
        .rejected
        .iter()
        .map(|&i| out.stats.t[i].abs())
        .min_by(f64::total_cmp);
    writeln!(text, "# method={}", config.calibration).unwrap();
    writeln!(text, "# alpha={}", num(config.alpha, raw)).unwrap();
    writeln!(text, "# m={}", out.rejections.m).unwrap();
    writeln!(text, "# k_hat={}", out.rejections.k_hat).unwrap();
    writeln!(text, "# rejections={}", out.rejections.num_rejections()).unwrap();
    writeln!(text, "# p_threshold={}", num(out.rejections.p_threshold, raw)).unwrap();
    writeln!(text, "# t_threshold={}", t_cut.map_or(String::new(), |t| num(t, raw))).unwrap();
    if config.calibration.needs_resampling() {
        writeln!(text, "# resamples={}", config.bootstrap_resamples).unwrap();
        writeln!(text, "# seed={}", config.seed).unwrap();
    }
    if config.calibration == Calibration::RegularizedBootstrap {
        writeln!(text, "# lambda={}", config.lambda_mode).unwrap();
        if let Some(l) = out.pvalues.meta.lambda_hat {
            writeln!(text, "# lambda_hat={}", num(l, raw)).unwrap();
        }
        if let Some(f) = out.pvalues.meta.truncated_fraction {
            writeln!(text, "# truncated_fraction={}", num(f, raw)).unwrap();
        }
    }
    write_output(output.as_deref(), &text)
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Grid file with keys models, n, m, alpha, methods, reps, resamples,
    /// lambda, seed.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    models: Option<Vec<ModelId>>,
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    methods: Option<Vec<Calibration>>,
    #[arg(long)]
    reps: Option<usize>,
    #[arg(long)]
    resamples: Option<usize>,
    #[arg(long)]
    lambda: Option<LambdaMode>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    raw: bool,
    /// Fill the `seconds` column with wall-clock calibration time. Off by
    /// default so reports are reproducible byte for byte.
    #[arg(long)]
    timing: bool,
}

pub fn cmd_simulate(args: SimulateArgs) -> Result<(), Failure> {
    let mut kv = load_config(args.config.as_ref())?;
    let defaults = SimSettings::default();
    let models = args.models.or(kv.take_list("models")?);
    let n_values = args.n.or(kv.take_list("n")?);
    let m_values = args.m.or(kv.take_list("m")?);
    let settings = SimSettings {
        alphas: args.alpha.or(kv.take_list("alpha")?).unwrap_or(defaults.alphas),
        methods: args.methods.or(kv.take_list("methods")?).unwrap_or(defaults.methods),
        replications: args.reps.or(kv.take("reps")?).unwrap_or(defaults.replications),
        resamples: args.resamples.or(kv.take("resamples")?).unwrap_or(defaults.resamples),
        lambda_mode: args.lambda.or(kv.take("lambda")?).unwrap_or(defaults.lambda_mode),
        seed: args.seed.or(kv.take("seed")?).unwrap_or(defaults.seed),
    };
    let output: Option<PathBuf> = kv.take("output")?;
    kv.finish()?;
    let missing = |what: &str| Failure::Input(format!("simulation grid needs '{what}'"));
    let models = models.ok_or_else(|| missing("models"))?;
    let n_values = n_values.ok_or_else(|| missing("n"))?;
    let m_values = m_values.ok_or_else(|| missing("m"))?;
    let output = args.output.or(output);
    let raw = args.raw;

    let report = run_grid(&models, &n_values, &m_values, &settings).map_err(Failure::from_lib)?;
    let mut text = String::from("model,n,m,alpha,method,fdr,power,fdr_se,power_se,reps,seconds\n");
    for row in &report.rows {
        let seconds = if args.timing { num(row.seconds, raw) } else { String::new() };
        writeln!(
            text,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.model.name(),
            row.n,
            row.m,
            num(row.alpha, raw),
            row.method,
            num(row.fdr, raw),
            num(row.power, raw),
            num(row.fdr_se, raw),
            num(row.power_se, raw),
            row.replications,
            seconds
        )
        .unwrap();
    }
    write_output(output.as_deref(), &text)
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    #[arg(long)]
    input: PathBuf,
    /// Points in the log-spaced candidate grid.
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
    /// Explicit candidate levels, replacing the default grid.
    #[arg(long, value_delimiter = ',', conflicts_with = "grid_points")]
    grid: Option<Vec<f64>>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    raw: bool,
}

pub fn cmd_lambda(args: LambdaArgs) -> Result<(), Failure> {
    let x = read_matrix(&args.input)?;
    let grid = match args.grid {
        Some(g) => g,
        None => default_lambda_grid(&x, args.grid_points).map_err(Failure::from_lib)?,
    };
    let sel = cv_select_lambda(&x, &grid).map_err(Failure::from_lib)?;
    let raw = args.raw;
    let mut text = String::from("lambda,risk,selected\n");
    for &(lambda, risk) in &sel.curve.points {
        writeln!(
            text,
            "{},{},{}",
            num(lambda, raw),
            num(risk, raw),
            u8::from(lambda == sel.lambda_hat)
        )
        .unwrap();
    }
    writeln!(text, "# lambda_hat={}", num(sel.lambda_hat, raw)).unwrap();
    writeln!(text, "# skipped_columns={}", sel.curve.skipped_columns).unwrap();
    write_output(args.output.as_deref(), &text)
}

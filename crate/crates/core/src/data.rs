//! Input matrices, ground truth and run configuration.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// An `n × m` sample matrix: `n` observations of `m` variables, stored one
/// variable after another.
#[derive(Debug, Clone, PartialEq)]
pub struct DataMatrix<T> {
    n: usize,
    m: usize,
    values: Vec<T>,
}

impl<T: Real> DataMatrix<T> {
    /// Builds a matrix from column-contiguous storage, validating it.
    pub fn from_column_major(n: usize, m: usize, values: Vec<T>) -> Result<Self> {
        if values.len() != n * m {
            return Err(Error::DimensionMismatch {
                expected: n * m,
                found: values.len(),
            });
        }
        if n < 2 {
            return Err(Error::TooFewSamples(n));
        }
        if m == 0 {
            return Err(Error::NoVariables);
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry {
                row: pos % n,
                col: pos / n,
            });
        }
        Ok(Self { n, m, values })
    }

    /// Builds a matrix from a list of columns of equal length.
    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self> {
        let m = columns.len();
        let n = columns.first().map_or(0, Vec::len);
        for (i, c) in columns.iter().enumerate() {
            if c.len() != n {
                return Err(Error::RaggedRow {
                    row: i,
                    found: c.len(),
                    expected: n,
                });
            }
        }
        Self::from_column_major(n, m, columns.into_iter().flatten().collect())
    }

    /// Sample count (rows).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Variable count (columns).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn column(&self, i: usize) -> &[T] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    pub fn columns(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        self.values.chunks_exact(self.n)
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.values[col * self.n + row]
    }

    /// Column-contiguous backing storage.
    pub fn as_slice(&self) -> &[T] {
        &self.values
    }

    /// Keeps only rows in `rows` (a contiguous range), preserving order.
    pub fn row_range(&self, rows: std::ops::Range<usize>) -> Result<Self> {
        let values = self
            .columns()
            .flat_map(|c| c[rows.clone()].iter().copied())
            .collect();
        Self::from_column_major(rows.len(), self.m, values)
    }

    /// Row-major copy, one `Vec` per observation.
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.n)
            .map(|k| (0..self.m).map(|i| self.get(k, i)).collect())
            .collect()
    }
}

/// Checks a row-major matrix (one `Vec` per observation) and converts it
/// into column-contiguous storage.
pub fn validate_matrix<T: Real>(rows: &[Vec<T>]) -> Result<DataMatrix<T>> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    for (k, row) in rows.iter().enumerate() {
        if row.len() != m {
            return Err(Error::RaggedRow {
                row: k,
                found: row.len(),
                expected: m,
            });
        }
    }
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    if m == 0 {
        return Err(Error::NoVariables);
    }
    let mut values = Vec::with_capacity(n * m);
    for i in 0..m {
        for (k, row) in rows.iter().enumerate() {
            let v = row[i];
            if !v.is_finite() {
                return Err(Error::NonFiniteEntry { row: k, col: i });
            }
            values.push(v);
        }
    }
    Ok(DataMatrix { n, m, values })
}

/// True means and the induced null set.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundTruth<T> {
    mu: Vec<T>,
    null_set: Vec<usize>,
}

impl<T: Real> GroundTruth<T> {
    pub fn from_means(mu: Vec<T>) -> Self {
        let null_set = mu
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_zero())
            .map(|(i, _)| i)
            .collect();
        Self { mu, null_set }
    }

    pub fn mu(&self) -> &[T] {
        &self.mu
    }

    /// Indices with a zero true mean, ascending.
    pub fn null_set(&self) -> &[usize] {
        &self.null_set
    }

    pub fn is_null(&self, i: usize) -> bool {
        self.mu[i].is_zero()
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    pub fn null_count(&self) -> usize {
        self.null_set.len()
    }

    pub fn alt_count(&self) -> usize {
        self.mu.len() - self.null_set.len()
    }
}

/// Reference distribution used to turn a t statistic into a p-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Calibration {
    Normal,
    StudentT,
    /// Pooled bootstrap over all variables.
    Bootstrap,
    /// Pooled bootstrap of the truncated data.
    RegularizedBootstrap,
    /// Per-variable bootstrap.
    IndividualBootstrap,
}

impl Calibration {
    pub const TABLE_METHODS: [Calibration; 4] = [
        Calibration::Normal,
        Calibration::StudentT,
        Calibration::Bootstrap,
        Calibration::RegularizedBootstrap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Calibration::Normal => "normal",
            Calibration::StudentT => "t",
            Calibration::Bootstrap => "boot",
            Calibration::RegularizedBootstrap => "regboot",
            Calibration::IndividualBootstrap => "indboot",
        }
    }

    pub fn needs_resampling(self) -> bool {
        matches!(
            self,
            Calibration::Bootstrap
                | Calibration::RegularizedBootstrap
                | Calibration::IndividualBootstrap
        )
    }
}

impl fmt::Display for Calibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Calibration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "normal" | "phi" => Ok(Calibration::Normal),
            "t" | "student" | "studentt" | "psi" => Ok(Calibration::StudentT),
            "boot" | "bootstrap" => Ok(Calibration::Bootstrap),
            "regboot" | "rb" | "regularized" => Ok(Calibration::RegularizedBootstrap),
            "indboot" | "individual" => Ok(Calibration::IndividualBootstrap),
            other => Err(Error::Config(format!("unknown method '{other}'"))),
        }
    }
}

/// How truncation levels are chosen for the regularized bootstrap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LambdaMode {
    /// `λ_i = |mean_i| + sd_i · c · (n / ln m)^{1/6}`.
    FixedRate(f64),
    /// Split-sample skewness-matching choice of the scalar level.
    CrossValidated,
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::FixedRate(c) => write!(f, "rate:{c}"),
            LambdaMode::CrossValidated => f.write_str("cv"),
        }
    }
}

impl FromStr for LambdaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("cv") {
            return Ok(LambdaMode::CrossValidated);
        }
        let c = s
            .strip_prefix("rate:")
            .ok_or_else(|| Error::Config(format!("lambda mode must be 'cv' or 'rate:<c>', got '{s}'")))?;
        let c: f64 = c
            .parse()
            .map_err(|_| Error::Config(format!("bad rate constant '{c}'")))?;
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::Config(format!("rate constant must be positive, got {c}")));
        }
        Ok(LambdaMode::FixedRate(c))
    }
}

/// Settings for one testing run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub alpha: f64,
    pub calibration: Calibration,
    pub bootstrap_resamples: usize,
    pub lambda_mode: LambdaMode,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: 0.1,
            calibration: Calibration::Normal,
            bootstrap_resamples: 200,
            lambda_mode: LambdaMode::CrossValidated,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Config(format!("alpha must lie in (0,1), got {}", self.alpha)));
        }
        if self.bootstrap_resamples == 0 {
            return Err(Error::Config("bootstrap resamples must be at least 1".into()));
        }
        if let LambdaMode::FixedRate(c) = self.lambda_mode {
            if !(c.is_finite() && c > 0.0) {
                return Err(Error::Config(format!("rate constant must be positive, got {c}")));
            }
        }
        Ok(())
    }
}

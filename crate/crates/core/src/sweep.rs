//! Parameter sweeps over the transport channel and the reservoir embedding,
//! with deterministic CSV emission.
//!
//! A sweep is a rectangular grid over (q, λ, βE). Rows are ordered by the
//! configured q list, then the configured λ list, then βE ascending, and all
//! floats are printed with 12 significant digits, so the output is
//! byte-for-byte reproducible. With the `parallel` feature (on by default)
//! grid points are evaluated on a rayon pool; assembly keeps the row order,
//! so both code paths emit identical bytes.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::embedding::{embed_unitary, equal_mix_unitary, ideal_action, LadderReservoir};
use crate::error::CoreError;
use crate::scenarios::{run_channel, ChannelInitialState};
use crate::state::{trace_distance, DensityMatrix};
use crate::thermal::ThermalOpParams;

/// Failures of configuration loading, grid evaluation or output writing.
#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Inclusive βE grid `start, start + step, ..` up to `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnergyGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl EnergyGrid {
    fn validate(&self) -> Result<(), SweepError> {
        let ok = self.start.is_finite()
            && self.stop.is_finite()
            && self.step.is_finite()
            && self.step > 0.0
            && self.start >= 0.0
            && self.start <= self.stop;
        if ok {
            Ok(())
        } else {
            Err(SweepError::Config(format!(
                "energy grid needs 0 <= start <= stop and step > 0, got \
                 start {}, stop {}, step {}",
                self.start, self.stop, self.step
            )))
        }
    }

    /// Grid values, computed as `start + i * step` (no running accumulation,
    /// so the i-th point is identical however the grid is traversed).
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|i| self.start + i as f64 * self.step)
            .collect()
    }
}

/// A coupling specifier: either a fixed λ or the token `"equilibrium"`,
/// which resolves per grid point to 1/Z(βE), the full-thermalization value.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum LambdaSpec {
    Fixed(f64),
    Named(String),
}

pub const EQUILIBRIUM_TOKEN: &str = "equilibrium";

impl LambdaSpec {
    fn validate(&self) -> Result<(), SweepError> {
        match self {
            Self::Fixed(v) if v.is_finite() && (0.0..=1.0).contains(v) => Ok(()),
            Self::Fixed(v) => Err(SweepError::Config(format!(
                "lambda must lie in [0, 1], got {v}"
            ))),
            Self::Named(s) if s == EQUILIBRIUM_TOKEN => Ok(()),
            Self::Named(s) => Err(SweepError::Config(format!(
                "unknown lambda token {s:?}, expected a number or \
                 \"{EQUILIBRIUM_TOKEN}\""
            ))),
        }
    }

    /// Text form used in the `lambda_spec` CSV column.
    pub fn label(&self) -> String {
        match self {
            Self::Fixed(v) => format!("{v}"),
            Self::Named(s) => s.clone(),
        }
    }

    /// The numeric coupling at a given grid point.
    pub fn resolve(&self, beta_e: f64) -> f64 {
        match self {
            Self::Fixed(v) => *v,
            Self::Named(_) => 1.0 / (1.0 + (-beta_e).exp()),
        }
    }
}

/// Full sweep description. Deserializes from a JSON file; the built-in
/// [`Default`] reproduces the standard figure grid.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub e_grid: EnergyGrid,
    pub lambdas: Vec<LambdaSpec>,
    pub q_values: Vec<f64>,
    pub output_path: PathBuf,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            e_grid: EnergyGrid {
                start: 0.0,
                stop: 5.0,
                step: 0.1,
            },
            lambdas: vec![
                LambdaSpec::Fixed(1.0),
                LambdaSpec::Fixed(0.2),
                LambdaSpec::Named(EQUILIBRIUM_TOKEN.to_string()),
            ],
            q_values: vec![1.0, 0.5],
            output_path: PathBuf::from("sweep.csv"),
        }
    }
}

impl SweepConfig {
    /// Loads and validates a JSON config.
    ///
    /// # Errors
    /// [`SweepError::Io`] when the file cannot be read, [`SweepError::Config`]
    /// on malformed JSON or out-of-range values.
    pub fn from_json_file(path: &Path) -> Result<Self, SweepError> {
        let text = fs::read_to_string(path)?;
        let cfg: Self =
            serde_json::from_str(&text).map_err(|e| SweepError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// # Errors
    /// [`SweepError::Config`] describing the first violated constraint.
    pub fn validate(&self) -> Result<(), SweepError> {
        self.e_grid.validate()?;
        if self.lambdas.is_empty() {
            return Err(SweepError::Config("lambda list is empty".into()));
        }
        for spec in &self.lambdas {
            spec.validate()?;
        }
        if self.q_values.is_empty() {
            return Err(SweepError::Config("q list is empty".into()));
        }
        for &q in &self.q_values {
            if !q.is_finite() || !(0.0..=1.0).contains(&q) {
                return Err(SweepError::Config(format!("q must lie in [0, 1], got {q}")));
            }
        }
        Ok(())
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub q: f64,
    pub lambda_label: String,
    pub lambda_value: f64,
    pub beta_e: f64,
    pub transport_yield: f64,
    pub sigma_total: f64,
    pub sigma_classical: f64,
    pub sigma_quantum: f64,
}

fn grid_points(cfg: &SweepConfig) -> Vec<(f64, LambdaSpec, f64)> {
    let energies = cfg.e_grid.values();
    let mut points = Vec::with_capacity(cfg.q_values.len() * cfg.lambdas.len() * energies.len());
    for &q in &cfg.q_values {
        for spec in &cfg.lambdas {
            for &beta_e in &energies {
                points.push((q, spec.clone(), beta_e));
            }
        }
    }
    points
}

fn evaluate_point(q: f64, spec: &LambdaSpec, beta_e: f64) -> Result<SweepRow, SweepError> {
    let lambda = spec.resolve(beta_e);
    let initial = ChannelInitialState::new(q)?;
    let params = ThermalOpParams::new(beta_e, lambda)?;
    let report = run_channel(&initial, &params)?;
    Ok(SweepRow {
        q,
        lambda_label: spec.label(),
        lambda_value: lambda,
        beta_e,
        transport_yield: report.transport_yield,
        sigma_total: report.sigma_total,
        sigma_classical: report.sigma_classical,
        sigma_quantum: report.sigma_quantum,
    })
}

/// Evaluates every grid point sequentially, in output order.
pub fn evaluate_grid_sequential(cfg: &SweepConfig) -> Result<Vec<SweepRow>, SweepError> {
    cfg.validate()?;
    grid_points(cfg)
        .iter()
        .map(|(q, spec, beta_e)| evaluate_point(*q, spec, *beta_e))
        .collect()
}

/// Evaluates grid points on the rayon pool. Collection is index-ordered, so
/// the rows come back in the same order as the sequential path.
#[cfg(feature = "parallel")]
pub fn evaluate_grid_parallel(cfg: &SweepConfig) -> Result<Vec<SweepRow>, SweepError> {
    cfg.validate()?;
    grid_points(cfg)
        .into_par_iter()
        .map(|(q, spec, beta_e)| evaluate_point(q, &spec, beta_e))
        .collect()
}

/// Evaluates the grid with the best available strategy.
pub fn evaluate_grid(cfg: &SweepConfig) -> Result<Vec<SweepRow>, SweepError> {
    #[cfg(feature = "parallel")]
    {
        evaluate_grid_parallel(cfg)
    }
    #[cfg(not(feature = "parallel"))]
    {
        evaluate_grid_sequential(cfg)
    }
}

/// Formats with 12 significant digits; the one fixed float format of every
/// CSV column. Negative zero is normalized so equal values print equally.
pub fn fmt_sig(value: f64) -> String {
    let v = if value == 0.0 { 0.0 } else { value };
    format!("{v:.11e}")
}

pub const SWEEP_CSV_HEADER: &str =
    "q,lambda_spec,lambda_value,beta_E,yield,sigma_total,sigma_classical,sigma_quantum";

/// Renders rows to CSV text (UTF-8, LF, trailing newline).
pub fn csv_string(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_sig(row.q));
        out.push(',');
        out.push_str(&row.lambda_label);
        out.push(',');
        out.push_str(&fmt_sig(row.lambda_value));
        out.push(',');
        out.push_str(&fmt_sig(row.beta_e));
        out.push(',');
        out.push_str(&fmt_sig(row.transport_yield));
        out.push(',');
        out.push_str(&fmt_sig(row.sigma_total));
        out.push(',');
        out.push_str(&fmt_sig(row.sigma_classical));
        out.push(',');
        out.push_str(&fmt_sig(row.sigma_quantum));
        out.push('\n');
    }
    out
}

/// Runs the configured sweep and writes the CSV to `cfg.output_path`.
///
/// # Errors
/// Everything [`evaluate_grid`] reports, plus [`SweepError::Io`] on write.
pub fn run_sweep(cfg: &SweepConfig) -> Result<PathBuf, SweepError> {
    let rows = evaluate_grid(cfg)?;
    fs::write(&cfg.output_path, csv_string(&rows))?;
    Ok(cfg.output_path.clone())
}

/// One reservoir size in the embedding convergence sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbedRow {
    pub support_length: usize,
    /// Worst trace distance between the embedded and the ideal channel over
    /// the probe set {ground, excited, balanced superposition}.
    pub trace_distance: f64,
    /// Off-diagonal magnitude of the embedded output on the excited probe.
    pub output_coherence: f64,
}

fn probe_states() -> [DensityMatrix; 3] {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [
        DensityMatrix::basis_state(2, 0),
        DensityMatrix::basis_state(2, 1),
        DensityMatrix::from_pure(&[s, s]).expect("balanced probe is normalized"),
    ]
}

/// Evaluates one reservoir geometry: worst-probe trace distance to the ideal
/// channel plus the coherence injected into the excited probe.
///
/// # Errors
/// Everything [`embed_unitary`] reports, notably [`CoreError::Truncation`]
/// for windows touching the ladder edge.
pub fn embedding_row(
    u: &Matrix2<Complex64>,
    reservoir: &LadderReservoir,
) -> Result<EmbedRow, CoreError> {
    let mut worst = 0.0_f64;
    for probe in &probe_states() {
        let embedded = embed_unitary(u, reservoir, probe)?;
        worst = worst.max(trace_distance(&embedded, &ideal_action(u, probe))?);
    }
    let excited = DensityMatrix::basis_state(2, 1);
    let out = embed_unitary(u, reservoir, &excited)?;
    Ok(EmbedRow {
        support_length: reservoir.support_length(),
        trace_distance: worst,
        output_coherence: out.entry(0, 1).norm(),
    })
}

/// Embedding convergence rows for the given unitary, sequentially.
pub fn embedding_rows_sequential(
    u: &Matrix2<Complex64>,
    l_values: &[usize],
) -> Result<Vec<EmbedRow>, CoreError> {
    l_values
        .iter()
        .map(|&l| embedding_row(u, &LadderReservoir::centered(l)))
        .collect()
}

/// Embedding convergence rows on the rayon pool, in input order.
#[cfg(feature = "parallel")]
pub fn embedding_rows_parallel(
    u: &Matrix2<Complex64>,
    l_values: &[usize],
) -> Result<Vec<EmbedRow>, CoreError> {
    l_values
        .par_iter()
        .map(|&l| embedding_row(u, &LadderReservoir::centered(l)))
        .collect()
}

/// Embedding convergence rows with the best available strategy.
pub fn embedding_rows(
    u: &Matrix2<Complex64>,
    l_values: &[usize],
) -> Result<Vec<EmbedRow>, CoreError> {
    #[cfg(feature = "parallel")]
    {
        embedding_rows_parallel(u, l_values)
    }
    #[cfg(not(feature = "parallel"))]
    {
        embedding_rows_sequential(u, l_values)
    }
}

/// The default unitary of the embedding sweep.
pub fn default_embed_unitary() -> Matrix2<Complex64> {
    equal_mix_unitary()
}

pub const EMBED_CSV_HEADER: &str = "L,trace_distance,output_coherence";

/// Renders embedding rows to CSV text (UTF-8, LF, trailing newline).
pub fn embed_csv_string(rows: &[EmbedRow]) -> String {
    let mut out = String::with_capacity(48 * (rows.len() + 1));
    out.push_str(EMBED_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.support_length.to_string());
        out.push(',');
        out.push_str(&fmt_sig(row.trace_distance));
        out.push(',');
        out.push_str(&fmt_sig(row.output_coherence));
        out.push('\n');
    }
    out
}

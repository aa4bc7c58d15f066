//! Thermomajorization curves and population-transition feasibility.
//!
//! For populations p over levels with Boltzmann weights g_x = exp(-βE_x), sort
//! the levels by p_x / g_x descending (the β-order) and draw the concave
//! piecewise-linear curve through the cumulative points
//! (Σ g_x, Σ p_x), starting at (0, 0) and ending at (Z, 1). A population a can
//! be mapped to b by some Gibbs-stochastic matrix exactly when the curve of a
//! lies nowhere below the curve of b.

use crate::error::CoreError;
use crate::state::{GibbsContext, PopulationVector};
use crate::thermal::{gibbs_stochastic_matrix, ThermalOpParams};

/// Slack allowed when comparing curve heights.
pub const CURVE_TOL: f64 = 1e-10;
/// Per-component tolerance used by the grid-search feasibility oracle.
pub const ORACLE_TOL: f64 = 1e-6;

/// A thermomajorization curve: concave, piecewise linear, from (0, 0) to
/// (Z, 1), with one vertex per energy level.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermoCurve {
    points: Vec<(f64, f64)>,
}

impl ThermoCurve {
    /// The vertices, starting at (0, 0); x is cumulative Boltzmann weight,
    /// y cumulative probability.
    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Total Boltzmann weight, i.e. the partition function Z.
    pub fn total_weight(&self) -> f64 {
        self.points.last().expect("curve has vertices").0
    }

    /// Curve height at abscissa `x`, clamped to the domain [0, Z].
    pub fn evaluate(&self, x: f64) -> f64 {
        let x = x.clamp(0.0, self.total_weight());
        for pair in self.points.windows(2) {
            let (x0, y0) = pair[0];
            let (x1, y1) = pair[1];
            if x <= x1 {
                if x1 == x0 {
                    return y1;
                }
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
            }
        }
        self.points.last().expect("curve has vertices").1
    }
}

/// β-ordered level indices: descending p_x exp(βE_x), ties broken by lower
/// energy first, then by index. The sort key uses energies relative to the
/// ground level so a global shift cannot reorder anything.
fn beta_order(populations: &PopulationVector, ctx: &GibbsContext) -> Vec<usize> {
    let e_min = ctx.energies()[0];
    let keys: Vec<f64> = (0..ctx.dim())
        .map(|i| populations.get(i) * (ctx.beta() * (ctx.energies()[i] - e_min)).exp())
        .collect();
    let mut order: Vec<usize> = (0..ctx.dim()).collect();
    order.sort_by(|&a, &b| {
        keys[b]
            .partial_cmp(&keys[a])
            .expect("sort keys are finite")
            .then(
                ctx.energies()[a]
                    .partial_cmp(&ctx.energies()[b])
                    .expect("energies are finite"),
            )
            .then(a.cmp(&b))
    });
    order
}

/// Builds the thermomajorization curve of `populations` in `ctx`.
///
/// # Errors
/// [`CoreError::DimensionMismatch`] when the populations and context disagree
/// on the number of levels.
pub fn build_curve(
    populations: &PopulationVector,
    ctx: &GibbsContext,
) -> Result<ThermoCurve, CoreError> {
    if populations.dim() != ctx.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: ctx.dim(),
            actual: populations.dim(),
        });
    }
    let order = beta_order(populations, ctx);
    let mut points = Vec::with_capacity(ctx.dim() + 1);
    points.push((0.0, 0.0));
    let (mut x, mut y) = (0.0, 0.0);
    for &i in &order {
        x += ctx.gibbs_weight(i);
        y += populations.get(i);
        points.push((x, y));
    }
    Ok(ThermoCurve { points })
}

/// True when `a` thermomajorizes `b`: curve(a) >= curve(b) at every vertex
/// abscissa of either curve, within [`CURVE_TOL`].
///
/// # Errors
/// [`CoreError::DimensionMismatch`] when either population disagrees with the
/// context dimension.
pub fn thermomajorizes(
    a: &PopulationVector,
    b: &PopulationVector,
    ctx: &GibbsContext,
) -> Result<bool, CoreError> {
    let curve_a = build_curve(a, ctx)?;
    let curve_b = build_curve(b, ctx)?;
    let dominated = curve_a
        .points()
        .iter()
        .chain(curve_b.points())
        .all(|&(x, _)| curve_a.evaluate(x) >= curve_b.evaluate(x) - CURVE_TOL);
    Ok(dominated)
}

/// Brute-force qubit feasibility check: scans `grid + 1` equally spaced mixing
/// weights λ = k / grid over [0, 1] and reports whether any of the resulting
/// two-level Gibbs-stochastic matrices maps `a` to `b` within [`ORACLE_TOL`]
/// per component. Exists as an independent cross-check of `thermomajorizes`.
///
/// # Errors
/// [`CoreError::DimensionMismatch`] unless everything is two-level;
/// [`CoreError::Domain`] when `grid` is zero.
pub fn qubit_feasibility_oracle(
    a: &PopulationVector,
    b: &PopulationVector,
    ctx: &GibbsContext,
    grid: usize,
) -> Result<bool, CoreError> {
    if ctx.dim() != 2 {
        return Err(CoreError::DimensionMismatch {
            expected: 2,
            actual: ctx.dim(),
        });
    }
    if a.dim() != 2 || b.dim() != 2 {
        return Err(CoreError::DimensionMismatch {
            expected: 2,
            actual: a.dim().max(b.dim()),
        });
    }
    if grid == 0 {
        return Err(CoreError::Domain("oracle grid must be nonzero".into()));
    }
    let gap = ctx.beta() * (ctx.energies()[1] - ctx.energies()[0]);
    for k in 0..=grid {
        let lambda = k as f64 / grid as f64;
        let params = ThermalOpParams::new(gap, lambda)?;
        let g = gibbs_stochastic_matrix(&params);
        let out0 = g[(0, 0)] * a.get(0) + g[(0, 1)] * a.get(1);
        let out1 = g[(1, 0)] * a.get(0) + g[(1, 1)] * a.get(1);
        if (out0 - b.get(0)).abs() <= ORACLE_TOL && (out1 - b.get(1)).abs() <= ORACLE_TOL {
            return Ok(true);
        }
    }
    Ok(false)
}

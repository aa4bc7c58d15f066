//! Monotones: classical Renyi divergences, generalized free energies and the
//! relative-entropy asymmetry measure.
//!
//! For populations x against a strictly positive reference g,
//!
//! ```text
//! S_alpha(x || g) = 1/(alpha - 1) * ln sum_i x_i^alpha g_i^(1-alpha)
//! ```
//!
//! with the continuous extensions S_1 = KL divergence, S_0 = -ln of the
//! reference mass on supp(x), and S_inf = ln max_i x_i / g_i. All values are
//! nonnegative and vanish exactly at x = g. The generalized free energy
//! F_alpha(x) = -ln(Z)/beta + S_alpha(x || gamma)/beta never increases under
//! any Gibbs-stochastic map, one inequality per alpha.
//!
//! Coherences are governed separately by the asymmetry A(rho) =
//! S(rho || dephase(rho)), which never increases under covariant channels.

use crate::error::CoreError;
use crate::state::{relative_entropy, DensityMatrix, GibbsContext, PopulationVector};

/// A validated set of Renyi orders: nonnegative, containing alpha = 1 so the
/// ordinary free energy is always among the monotones evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid {
    values: Vec<f64>,
}

impl AlphaGrid {
    /// # Errors
    /// [`CoreError::Domain`] when the grid is empty, contains a negative or
    /// NaN order, or misses alpha = 1.
    pub fn new(values: Vec<f64>) -> Result<Self, CoreError> {
        if values.is_empty() {
            return Err(CoreError::Domain("alpha grid must be nonempty".into()));
        }
        for &a in &values {
            if a.is_nan() || a < 0.0 {
                return Err(CoreError::Domain(format!(
                    "Renyi order must be nonnegative, got {a}"
                )));
            }
        }
        if !values.contains(&1.0) {
            return Err(CoreError::Domain("alpha grid must contain 1".into()));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl Default for AlphaGrid {
    /// The working grid {0, 1/2, 1, 2, inf}.
    fn default() -> Self {
        Self {
            values: vec![0.0, 0.5, 1.0, 2.0, f64::INFINITY],
        }
    }
}

fn check_alpha(alpha: f64) -> Result<(), CoreError> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(CoreError::Domain(format!(
            "Renyi order must be nonnegative, got {alpha}"
        )));
    }
    Ok(())
}

/// Classical Renyi divergence of order `alpha` in nats.
///
/// Zeros in `x` are handled by support restriction; if `x` puts mass where
/// `g` vanishes the divergence is `+inf` for alpha >= 1 (and the term simply
/// drops out for alpha < 1). Computation uses a log-sum-exp so large orders do
/// not overflow.
///
/// # Errors
/// [`CoreError::Domain`] for negative or NaN `alpha`;
/// [`CoreError::DimensionMismatch`] when the vectors differ in length.
pub fn renyi_divergence_classical(
    x: &PopulationVector,
    g: &PopulationVector,
    alpha: f64,
) -> Result<f64, CoreError> {
    check_alpha(alpha)?;
    if x.dim() != g.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: x.dim(),
            actual: g.dim(),
        });
    }
    let value = if alpha == 0.0 {
        let mass: f64 = (0..x.dim())
            .filter(|&i| x.get(i) > 0.0)
            .map(|i| g.get(i))
            .sum();
        if mass > 0.0 {
            -mass.ln()
        } else {
            f64::INFINITY
        }
    } else if alpha == 1.0 {
        let mut kl = 0.0;
        for i in 0..x.dim() {
            let (xi, gi) = (x.get(i), g.get(i));
            if xi > 0.0 {
                if gi <= 0.0 {
                    return Ok(f64::INFINITY);
                }
                kl += xi * (xi.ln() - gi.ln());
            }
        }
        kl
    } else if alpha == f64::INFINITY {
        let mut max_ratio = 0.0_f64;
        for i in 0..x.dim() {
            let (xi, gi) = (x.get(i), g.get(i));
            if xi > 0.0 {
                if gi <= 0.0 {
                    return Ok(f64::INFINITY);
                }
                max_ratio = max_ratio.max(xi / gi);
            }
        }
        max_ratio.ln()
    } else {
        // Generic order: log-sum-exp over t_i = alpha ln x_i + (1-alpha) ln g_i.
        let mut terms = Vec::with_capacity(x.dim());
        for i in 0..x.dim() {
            let (xi, gi) = (x.get(i), g.get(i));
            if xi <= 0.0 {
                continue;
            }
            if gi <= 0.0 {
                if alpha > 1.0 {
                    return Ok(f64::INFINITY);
                }
                continue;
            }
            terms.push(alpha * xi.ln() + (1.0 - alpha) * gi.ln());
        }
        match terms.iter().copied().fold(f64::NEG_INFINITY, f64::max) {
            m if m.is_finite() => {
                let sum: f64 = terms.iter().map(|t| (t - m).exp()).sum();
                (m + sum.ln()) / (alpha - 1.0)
            }
            _ => f64::INFINITY,
        }
    };
    Ok(value.max(0.0))
}

/// Generalized free energy `F_alpha(x) = -ln(Z)/beta + S_alpha(x || gamma)/beta`
/// in the units of the context's energies.
///
/// # Errors
/// Propagates the checks of [`renyi_divergence_classical`]; additionally
/// [`CoreError::DimensionMismatch`] when `x` does not match the ladder.
pub fn free_energy(x: &PopulationVector, ctx: &GibbsContext, alpha: f64) -> Result<f64, CoreError> {
    if x.dim() != ctx.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: ctx.dim(),
            actual: x.dim(),
        });
    }
    let divergence = renyi_divergence_classical(x, &ctx.gibbs_populations(), alpha)?;
    Ok((-ctx.partition_function().ln() + divergence) / ctx.beta())
}

/// Asymmetry monotone at order one: `A(rho) = S(rho || dephase(rho))` in nats.
/// Equals the relative entropy of coherence; computed here through the
/// relative-entropy route so the two stay independent cross-checks.
pub fn asymmetry_alpha1(rho: &DensityMatrix) -> f64 {
    relative_entropy(rho, &rho.dephase())
        .expect("a state is always supported inside its own dephasing")
}

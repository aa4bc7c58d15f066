//! The one-parameter family of two-level thermal operations.
//!
//! For a gate with dimensionless gap βE, write q = exp(-βE) and Z = 1 + q. The
//! population action of the channel is the column-stochastic matrix
//!
//! ```text
//! G(βE, λ) = (1 - λ) I + λ [ 1 - q   1 ]
//!                          [   q     0 ]
//! ```
//!
//! which fixes the thermal vector (1/Z, q/Z) for every λ in [0, 1]. λ = 0 is
//! the identity, λ = 1 the full β-swap, and λ = 1/Z the rank-one projector
//! onto the thermal vector (population equilibration). Coupling strengths up
//! to 1/Z admit a Markovian (Davies-type) realization; beyond that the map
//! requires memory effects.
//!
//! The channel itself acts through three Kraus operators, one per Bohr
//! frequency ω in {0, +E, -E}. Its off-diagonal action multiplies the single
//! qubit coherence by exactly sqrt(G00 * G11), the largest damping factor any
//! Gibbs-stochastic qubit channel with these populations can achieve.

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;

use crate::error::CoreError;
use crate::state::DensityMatrix;

/// Entrywise tolerance for the time-translation covariance check.
pub const COVARIANCE_TOL: f64 = 1e-9;
/// Slack on the Markovianity boundary λ <= 1/Z.
pub const MARKOV_BOUNDARY_TOL: f64 = 1e-12;

/// Validated parameters of one two-level thermal operation: the dimensionless
/// gap βE >= 0 and the mixing weight λ in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalOpParams {
    energy_gap: f64,
    lambda: f64,
}

impl ThermalOpParams {
    /// # Errors
    /// [`CoreError::Domain`] when the gap is negative or not finite, or when
    /// λ lies outside [0, 1]. Out-of-range λ is rejected, never clamped.
    pub fn new(energy_gap: f64, lambda: f64) -> Result<Self, CoreError> {
        if !energy_gap.is_finite() || energy_gap < 0.0 {
            return Err(CoreError::Domain(format!(
                "energy gap must be finite and nonnegative, got {energy_gap}"
            )));
        }
        if !lambda.is_finite() || !(0.0..=1.0).contains(&lambda) {
            return Err(CoreError::Domain(format!(
                "mixing weight must lie in [0, 1], got {lambda}"
            )));
        }
        Ok(Self { energy_gap, lambda })
    }

    pub fn energy_gap(&self) -> f64 {
        self.energy_gap
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Boltzmann factor q = exp(-βE) of the gap.
    pub fn gibbs_factor(&self) -> f64 {
        (-self.energy_gap).exp()
    }

    /// Two-level partition function Z = 1 + exp(-βE).
    pub fn partition_function(&self) -> f64 {
        1.0 + self.gibbs_factor()
    }

    /// The weight λ = 1/Z that fully equilibrates populations.
    pub fn equilibrium_lambda(&self) -> f64 {
        1.0 / self.partition_function()
    }

    /// True when the map admits a Markovian realization, i.e. λ <= 1/Z
    /// (boundary inclusive).
    pub fn is_markovian(&self) -> bool {
        self.lambda <= self.equilibrium_lambda() + MARKOV_BOUNDARY_TOL
    }
}

/// Population action of the channel as a column-stochastic 2x2 matrix; entry
/// `(x', x)` is the transition probability x -> x'.
pub fn gibbs_stochastic_matrix(params: &ThermalOpParams) -> Matrix2<f64> {
    let q = params.gibbs_factor();
    let l = params.lambda;
    Matrix2::new(1.0 - l * q, l, l * q, 1.0 - l)
}

/// The three Kraus operators of the channel, ordered by their Bohr frequency:
/// `[k(ω=0), k(ω=+E), k(ω=-E)]`.
///
/// `k(0)` is diagonal with entries sqrt(G00) and sqrt(G11); `k(+E)` is the
/// excitation sqrt(G10)|1><0|; `k(-E)` is the decay sqrt(G01)|0><1|. The decay
/// coefficient must be G01 for the set to be trace preserving.
pub fn kraus_operators(params: &ThermalOpParams) -> [Matrix2<Complex64>; 3] {
    let g = gibbs_stochastic_matrix(params);
    let zero = Complex64::new(0.0, 0.0);
    let re = |v: f64| Complex64::new(v, 0.0);
    [
        Matrix2::new(re(g[(0, 0)].sqrt()), zero, zero, re(g[(1, 1)].sqrt())),
        Matrix2::new(zero, zero, re(g[(1, 0)].sqrt()), zero),
        Matrix2::new(zero, re(g[(0, 1)].sqrt()), zero, zero),
    ]
}

/// One coherence mode of the qubit: the Bohr frequency ω of an off-diagonal
/// position together with the factor multiplying it under the channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceMode {
    pub omega: f64,
    pub damping: Complex64,
}

/// The two off-diagonal modes ω = ±E and their damping factors. Both factors
/// have magnitude sqrt(G00 * G11) <= 1.
pub fn coherence_modes(params: &ThermalOpParams) -> [CoherenceMode; 2] {
    let g = gibbs_stochastic_matrix(params);
    let factor = (g[(0, 0)] * g[(1, 1)]).sqrt();
    let damping = Complex64::new(factor, 0.0);
    [
        CoherenceMode {
            omega: params.energy_gap,
            damping,
        },
        CoherenceMode {
            omega: -params.energy_gap,
            damping,
        },
    ]
}

fn to_matrix2(rho: &DensityMatrix) -> Result<Matrix2<Complex64>, CoreError> {
    if rho.dim() != 2 {
        return Err(CoreError::DimensionMismatch {
            expected: 2,
            actual: rho.dim(),
        });
    }
    Ok(Matrix2::new(
        rho.entry(0, 0),
        rho.entry(0, 1),
        rho.entry(1, 0),
        rho.entry(1, 1),
    ))
}

fn from_matrix2(m: Matrix2<Complex64>) -> Result<DensityMatrix, CoreError> {
    let entries = DMatrix::from_fn(2, 2, |i, j| m[(i, j)]);
    DensityMatrix::new(entries)
}

fn apply_kraus_set(kraus: &[Matrix2<Complex64>], rho: &Matrix2<Complex64>) -> Matrix2<Complex64> {
    let mut out = Matrix2::zeros();
    for k in kraus {
        out += k * rho * k.adjoint();
    }
    out
}

/// Applies the channel to a qubit state via its Kraus representation.
///
/// Populations evolve by [`gibbs_stochastic_matrix`]; the coherence picks up
/// the factor sqrt(G00 * G11).
///
/// # Errors
/// [`CoreError::DimensionMismatch`] when the state is not a qubit.
pub fn apply_thermal_op(
    params: &ThermalOpParams,
    rho: &DensityMatrix,
) -> Result<DensityMatrix, CoreError> {
    let m = to_matrix2(rho)?;
    let kraus = kraus_operators(params);
    from_matrix2(apply_kraus_set(&kraus, &m))
}

/// Largest entrywise deviation between "rotate then apply" and "apply then
/// rotate" for the free evolution exp(-i H t), H = diag(0, gap), under an
/// arbitrary Kraus set. Zero (to rounding) exactly when the set is
/// time-translation covariant.
pub fn covariance_defect(
    kraus: &[Matrix2<Complex64>],
    energy_gap: f64,
    rho: &DensityMatrix,
    time: f64,
) -> Result<f64, CoreError> {
    let m = to_matrix2(rho)?;
    let phase = Complex64::new(0.0, -energy_gap * time).exp();
    let rotation = Matrix2::new(
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        phase,
    );
    let rotate = |x: &Matrix2<Complex64>| rotation * x * rotation.adjoint();
    let lhs = apply_kraus_set(kraus, &rotate(&m));
    let rhs = rotate(&apply_kraus_set(kraus, &m));
    let defect = (lhs - rhs).iter().map(|v| v.norm()).fold(0.0_f64, f64::max);
    Ok(defect)
}

/// Checks time-translation covariance of the channel on a given state and
/// time: `T(U_t rho U_t^dag) = U_t T(rho) U_t^dag` within [`COVARIANCE_TOL`].
///
/// # Errors
/// [`CoreError::DimensionMismatch`] when the state is not a qubit.
pub fn check_covariance(
    params: &ThermalOpParams,
    rho: &DensityMatrix,
    time: f64,
) -> Result<bool, CoreError> {
    let kraus = kraus_operators(params);
    Ok(covariance_defect(&kraus, params.energy_gap, rho, time)? <= COVARIANCE_TOL)
}

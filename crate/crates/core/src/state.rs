//! Density matrices, thermal contexts and entropy functionals.
//!
//! States live on a finite ladder of energy levels `E_0 <= E_1 <= ...` held by a
//! [`GibbsContext`] together with an inverse temperature β. Everything here is
//! dimensionless: energies are expected as βE products and all entropies are in
//! nats. Matrix functions go through a Hermitian eigendecomposition; there are
//! no series expansions.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::CoreError;

/// Max allowed deviation from exact Hermiticity at construction.
pub const HERMITICITY_TOL: f64 = 1e-9;
/// Max allowed deviation of the trace from one at construction.
pub const TRACE_TOL: f64 = 1e-9;
/// Eigenvalues in `[-PSD_TOL, 0)` count as zero; anything lower is rejected.
pub const PSD_TOL: f64 = 1e-9;
/// Probabilities may stray this far outside `[0, 1]` before clamping.
pub const PROB_TOL: f64 = 1e-12;
/// Eigenvalues of a reference state at or below this are treated as exact zeros
/// when checking support containment.
pub const SUPPORT_EIG_TOL: f64 = 1e-12;

/// `x ln x` with the continuous extension `0 ln 0 = 0`; eigenvalue noise in
/// `[-PSD_TOL, 0)` is clamped to zero before the logarithm.
fn x_ln_x(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

fn clamp_eigenvalue(x: f64) -> f64 {
    if x < 0.0 {
        0.0
    } else {
        x
    }
}

/// Hermitian eigendecomposition returning (eigenvalues, eigenvector columns).
fn hermitian_eigen(m: &DMatrix<Complex64>) -> (DVector<f64>, DMatrix<Complex64>) {
    let eig = m.clone().symmetric_eigen();
    (eig.eigenvalues, eig.eigenvectors)
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite
/// (all within fixed tolerances).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates and wraps a raw matrix.
    ///
    /// # Errors
    /// [`CoreError::NotSquare`], [`CoreError::NotHermitian`],
    /// [`CoreError::InvalidTrace`] or [`CoreError::NotPositiveSemidefinite`]
    /// when the corresponding property fails beyond tolerance.
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self, CoreError> {
        let (rows, cols) = entries.shape();
        if rows != cols || rows == 0 {
            return Err(CoreError::NotSquare { rows, cols });
        }
        let mut deviation = 0.0_f64;
        for i in 0..rows {
            for j in 0..rows {
                let d = (entries[(i, j)] - entries[(j, i)].conj()).norm();
                deviation = deviation.max(d);
            }
        }
        if deviation > HERMITICITY_TOL {
            return Err(CoreError::NotHermitian { deviation });
        }
        let trace = entries.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(CoreError::InvalidTrace { trace: trace.re });
        }
        let (eigenvalues, _) = hermitian_eigen(&entries);
        let min_eigenvalue = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        if min_eigenvalue < -PSD_TOL {
            return Err(CoreError::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self { entries })
    }

    /// Builds the pure state `|psi><psi|` from an amplitude vector.
    ///
    /// # Errors
    /// [`CoreError::InvalidTrace`] when the amplitudes are not normalized,
    /// [`CoreError::NotSquare`] when the vector is empty.
    pub fn from_pure(amplitudes: &[Complex64]) -> Result<Self, CoreError> {
        if amplitudes.is_empty() {
            return Err(CoreError::NotSquare { rows: 0, cols: 0 });
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > TRACE_TOL {
            return Err(CoreError::InvalidTrace { trace: norm_sq });
        }
        let dim = amplitudes.len();
        let entries = DMatrix::from_fn(dim, dim, |i, j| amplitudes[i] * amplitudes[j].conj());
        Ok(Self { entries })
    }

    /// The computational basis state `|level><level|`.
    pub fn basis_state(dim: usize, level: usize) -> Self {
        assert!(level < dim, "basis level out of range");
        let mut entries = DMatrix::zeros(dim, dim);
        entries[(level, level)] = Complex64::new(1.0, 0.0);
        Self { entries }
    }

    /// Diagonal state carrying the given populations.
    pub fn from_populations(populations: &PopulationVector) -> Self {
        let dim = populations.dim();
        let mut entries = DMatrix::zeros(dim, dim);
        for (i, p) in populations.probs().iter().enumerate() {
            entries[(i, i)] = Complex64::new(*p, 0.0);
        }
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    /// Diagonal populations, clamped into `[0, 1]`.
    pub fn populations(&self) -> PopulationVector {
        let probs: Vec<f64> = (0..self.dim()).map(|i| self.entries[(i, i)].re).collect();
        PopulationVector::new(probs).expect("diagonal of a valid state is a distribution")
    }

    /// Projects onto the energy eigenbasis: zeroes every off-diagonal entry.
    pub fn dephase(&self) -> DensityMatrix {
        let dim = self.dim();
        let entries = DMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::new(self.entries[(i, i)].re, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self { entries }
    }

    /// Eigenvalues in ascending order, clamped to be nonnegative.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let (vals, _) = hermitian_eigen(&self.entries);
        let mut out: Vec<f64> = vals.iter().copied().map(clamp_eigenvalue).collect();
        out.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
        out
    }
}

/// Von Neumann entropy `S(rho) = -Tr[rho ln rho]` in nats.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let (vals, _) = hermitian_eigen(rho.matrix());
    -vals
        .iter()
        .map(|&v| x_ln_x(clamp_eigenvalue(v)))
        .sum::<f64>()
}

/// Quantum relative entropy `S(rho || sigma) = Tr[rho ln rho] - Tr[rho ln sigma]`
/// in nats, computed through the eigendecompositions of both arguments.
///
/// # Errors
/// [`CoreError::DimensionMismatch`] when the states have different dimensions;
/// [`CoreError::SupportViolation`] when `sigma` has a zero eigenvalue whose
/// eigenvector overlaps the support of `rho`.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64, CoreError> {
    if rho.dim() != sigma.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: rho.dim(),
            actual: sigma.dim(),
        });
    }
    let (rho_vals, _) = hermitian_eigen(rho.matrix());
    let tr_rho_ln_rho: f64 = rho_vals.iter().map(|&v| x_ln_x(clamp_eigenvalue(v))).sum();

    let (sigma_vals, sigma_vecs) = hermitian_eigen(sigma.matrix());
    let mut tr_rho_ln_sigma = 0.0;
    for k in 0..sigma.dim() {
        let s = clamp_eigenvalue(sigma_vals[k]);
        let col = sigma_vecs.column(k).into_owned();
        let overlap = col.dotc(&(rho.matrix() * &col)).re.max(0.0);
        if s <= SUPPORT_EIG_TOL {
            if overlap > PSD_TOL {
                return Err(CoreError::SupportViolation { overlap });
            }
        } else {
            tr_rho_ln_sigma += overlap * s.ln();
        }
    }
    Ok((tr_rho_ln_rho - tr_rho_ln_sigma).max(0.0))
}

/// Relative entropy of coherence `A(rho) = S(dephase(rho)) - S(rho)` in nats.
///
/// Equals `S(rho || dephase(rho))`, so it is nonnegative and vanishes exactly
/// on diagonal states.
pub fn relative_entropy_of_coherence(rho: &DensityMatrix) -> f64 {
    (von_neumann_entropy(&rho.dephase()) - von_neumann_entropy(rho)).max(0.0)
}

/// Trace distance `T(a, b) = (1/2) ||a - b||_1`.
///
/// # Errors
/// [`CoreError::DimensionMismatch`] when the states have different dimensions.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64, CoreError> {
    if a.dim() != b.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: a.dim(),
            actual: b.dim(),
        });
    }
    let delta = a.matrix() - b.matrix();
    let (vals, _) = hermitian_eigen(&delta);
    Ok(0.5 * vals.iter().map(|v| v.abs()).sum::<f64>())
}

/// Inverse temperature plus an ascending energy ladder. By convention the
/// ground energy is zero; every exported quantity except the raw partition
/// function is invariant under a global energy shift.
#[derive(Debug, Clone, PartialEq)]
pub struct GibbsContext {
    beta: f64,
    energies: Vec<f64>,
}

impl GibbsContext {
    /// # Errors
    /// [`CoreError::Domain`] when `beta <= 0`, an energy is not finite, the
    /// ladder is empty, or the energies are not ascending.
    pub fn new(beta: f64, energies: Vec<f64>) -> Result<Self, CoreError> {
        if beta <= 0.0 || !beta.is_finite() {
            return Err(CoreError::Domain(format!(
                "inverse temperature must be positive and finite, got {beta}"
            )));
        }
        if energies.is_empty() {
            return Err(CoreError::Domain("energy ladder must be nonempty".into()));
        }
        if energies.iter().any(|e| !e.is_finite()) {
            return Err(CoreError::Domain("energies must be finite".into()));
        }
        if energies.windows(2).any(|w| w[1] < w[0]) {
            return Err(CoreError::Domain("energies must be ascending".into()));
        }
        Ok(Self { beta, energies })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    /// Partition function `Z = sum_x exp(-beta E_x)` over the raw energies.
    pub fn partition_function(&self) -> f64 {
        self.energies.iter().map(|e| (-self.beta * e).exp()).sum()
    }

    /// Boltzmann weight `exp(-beta E_x)` of one level.
    pub fn gibbs_weight(&self, level: usize) -> f64 {
        (-self.beta * self.energies[level]).exp()
    }

    /// Thermal populations `exp(-beta E_x) / Z`, computed relative to the
    /// ground energy so a global shift cannot change them.
    pub fn gibbs_populations(&self) -> PopulationVector {
        let e_min = self.energies[0];
        let weights: Vec<f64> = self
            .energies
            .iter()
            .map(|e| (-self.beta * (e - e_min)).exp())
            .collect();
        let total: f64 = weights.iter().sum();
        PopulationVector::new(weights.into_iter().map(|w| w / total).collect())
            .expect("normalized Boltzmann weights form a distribution")
    }

    /// The thermal state as a diagonal density matrix.
    pub fn gibbs_state(&self) -> DensityMatrix {
        DensityMatrix::from_populations(&self.gibbs_populations())
    }
}

/// A classical probability vector over energy levels. Entries are validated to
/// `[-PROB_TOL, 1 + PROB_TOL]` with unit sum, then clamped into `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationVector {
    probs: Vec<f64>,
}

impl PopulationVector {
    /// # Errors
    /// [`CoreError::Domain`] when an entry strays outside `[0, 1]` beyond
    /// tolerance or the entries do not sum to one within tolerance.
    pub fn new(probs: Vec<f64>) -> Result<Self, CoreError> {
        if probs.is_empty() {
            return Err(CoreError::Domain(
                "population vector must be nonempty".into(),
            ));
        }
        for (i, p) in probs.iter().enumerate() {
            if !p.is_finite() || *p < -PROB_TOL || *p > 1.0 + PROB_TOL {
                return Err(CoreError::Domain(format!(
                    "population {i} out of range: {p}"
                )));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > TRACE_TOL {
            return Err(CoreError::Domain(format!(
                "populations must sum to 1, got {sum}"
            )));
        }
        let clamped = probs.into_iter().map(|p| p.clamp(0.0, 1.0)).collect();
        Ok(Self { probs: clamped })
    }

    /// Point mass on one level.
    pub fn point_mass(dim: usize, level: usize) -> Self {
        assert!(level < dim, "level out of range");
        let mut probs = vec![0.0; dim];
        probs[level] = 1.0;
        Self { probs }
    }

    /// Uniform distribution.
    pub fn uniform(dim: usize) -> Self {
        assert!(dim > 0);
        Self {
            probs: vec![1.0 / dim as f64; dim],
        }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.probs[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn plus_state() -> DensityMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        DensityMatrix::from_pure(&[c(s, 0.0), c(s, 0.0)]).unwrap()
    }

    fn random_density(rng: &mut ChaCha12Rng, dim: usize) -> DensityMatrix {
        let a = DMatrix::from_fn(dim, dim, |_, _| {
            c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        let m = &a * a.adjoint();
        let trace = m.trace().re;
        DensityMatrix::new(m / c(trace, 0.0)).unwrap()
    }

    #[test]
    fn gibbs_degenerate_levels_uniform() {
        let ctx = GibbsContext::new(1.0, vec![0.0, 0.0]).unwrap();
        let pops = ctx.gibbs_populations();
        assert!((pops.get(0) - 0.5).abs() < 1e-15);
        assert!((pops.get(1) - 0.5).abs() < 1e-15);
        assert!((ctx.partition_function() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn gibbs_two_level_ln2_gap() {
        let ctx = GibbsContext::new(1.0, vec![0.0, 2.0_f64.ln()]).unwrap();
        let pops = ctx.gibbs_populations();
        assert!((pops.get(0) - 2.0 / 3.0).abs() < 1e-12);
        assert!((pops.get(1) - 1.0 / 3.0).abs() < 1e-12);
        assert!((ctx.partition_function() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn gibbs_single_level() {
        let ctx = GibbsContext::new(2.0, vec![0.0]).unwrap();
        let state = ctx.gibbs_state();
        assert_eq!(state.dim(), 1);
        assert!((state.entry(0, 0).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gibbs_shift_invariance() {
        let shift = 1.7;
        let beta = 0.9;
        let energies = vec![0.0, 0.4, 1.3, 2.2];
        let shifted: Vec<f64> = energies.iter().map(|e| e + shift).collect();
        let a = GibbsContext::new(beta, energies)
            .unwrap()
            .gibbs_populations();
        let b = GibbsContext::new(beta, shifted)
            .unwrap()
            .gibbs_populations();
        for i in 0..4 {
            assert!((a.get(i) - b.get(i)).abs() < 1e-9);
        }
    }

    #[test]
    fn context_rejects_bad_input() {
        assert!(GibbsContext::new(0.0, vec![0.0]).is_err());
        assert!(GibbsContext::new(-1.0, vec![0.0]).is_err());
        assert!(GibbsContext::new(1.0, vec![]).is_err());
        assert!(GibbsContext::new(1.0, vec![0.0, -0.1]).is_err());
        assert!(GibbsContext::new(1.0, vec![0.0, f64::NAN]).is_err());
    }

    #[test]
    fn dephase_fixes_diagonal_states() {
        let rho = DensityMatrix::basis_state(3, 1);
        assert_eq!(rho.dephase(), rho);
    }

    #[test]
    fn dephase_plus_state_is_maximally_mixed() {
        let d = plus_state().dephase();
        assert!((d.entry(0, 0).re - 0.5).abs() < 1e-12);
        assert!((d.entry(1, 1).re - 0.5).abs() < 1e-12);
        assert_eq!(d.entry(0, 1), c(0.0, 0.0));
    }

    #[test]
    fn dephase_is_idempotent() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..20 {
            let rho = random_density(&mut rng, 3);
            let once = rho.dephase();
            assert_eq!(once.dephase(), once);
        }
    }

    #[test]
    fn entropy_of_pure_state_is_zero() {
        assert!(von_neumann_entropy(&plus_state()).abs() < 1e-12);
        assert!(von_neumann_entropy(&DensityMatrix::basis_state(4, 2)).abs() < 1e-12);
    }

    #[test]
    fn entropy_of_maximally_mixed_qubit() {
        let rho = DensityMatrix::from_populations(&PopulationVector::uniform(2));
        assert!((von_neumann_entropy(&rho) - 2.0_f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn entropy_two_thirds_one_third() {
        let pops = PopulationVector::new(vec![2.0 / 3.0, 1.0 / 3.0]).unwrap();
        let rho = DensityMatrix::from_populations(&pops);
        // (2/3) ln(3/2) + (1/3) ln 3
        let expected = (2.0 / 3.0) * 1.5_f64.ln() + (1.0 / 3.0) * 3.0_f64.ln();
        assert!((von_neumann_entropy(&rho) - expected).abs() < 1e-12);
        assert!((expected - 0.636_514_168_294_8).abs() < 1e-9);
    }

    #[test]
    fn dephasing_never_lowers_entropy() {
        let mut rng = ChaCha12Rng::seed_from_u64(12);
        for _ in 0..50 {
            let rho = random_density(&mut rng, 3);
            assert!(von_neumann_entropy(&rho.dephase()) >= von_neumann_entropy(&rho) - 1e-12);
        }
    }

    #[test]
    fn relative_entropy_of_identical_states_vanishes() {
        let mut rng = ChaCha12Rng::seed_from_u64(13);
        for _ in 0..20 {
            let rho = random_density(&mut rng, 3);
            assert!(relative_entropy(&rho, &rho).unwrap() < 1e-8);
        }
    }

    #[test]
    fn relative_entropy_point_mass_vs_uniform() {
        let rho = DensityMatrix::basis_state(2, 0);
        let sigma = DensityMatrix::from_populations(&PopulationVector::uniform(2));
        let val = relative_entropy(&rho, &sigma).unwrap();
        assert!((val - 2.0_f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_plus_vs_maximally_mixed() {
        // Dephased part contributes nothing, the coherence part contributes ln 2.
        let sigma = DensityMatrix::from_populations(&PopulationVector::uniform(2));
        let val = relative_entropy(&plus_state(), &sigma).unwrap();
        assert!((val - 2.0_f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_is_nonnegative_and_detects_difference() {
        let mut rng = ChaCha12Rng::seed_from_u64(14);
        for _ in 0..30 {
            let rho = random_density(&mut rng, 2);
            let sigma = random_density(&mut rng, 2);
            let val = relative_entropy(&rho, &sigma).unwrap();
            assert!(val >= 0.0);
            let diff: f64 = (rho.matrix() - sigma.matrix()).norm();
            if diff > 1e-3 {
                assert!(val > 0.0);
            }
        }
    }

    #[test]
    fn relative_entropy_support_violation() {
        let rho = DensityMatrix::from_populations(&PopulationVector::uniform(2));
        let sigma = DensityMatrix::basis_state(2, 0);
        match relative_entropy(&rho, &sigma) {
            Err(CoreError::SupportViolation { .. }) => {}
            other => panic!("expected support violation, got {other:?}"),
        }
    }

    #[test]
    fn relative_entropy_allows_matching_singular_support() {
        let rho = DensityMatrix::basis_state(2, 0);
        let sigma = DensityMatrix::basis_state(2, 0);
        assert!(relative_entropy(&rho, &sigma).unwrap() < 1e-12);
    }

    #[test]
    fn relative_entropy_dimension_mismatch() {
        let rho = DensityMatrix::basis_state(2, 0);
        let sigma = DensityMatrix::basis_state(3, 0);
        assert!(matches!(
            relative_entropy(&rho, &sigma),
            Err(CoreError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn coherence_of_diagonal_states_vanishes() {
        let rho = DensityMatrix::from_populations(&PopulationVector::new(vec![0.3, 0.7]).unwrap());
        assert_eq!(relative_entropy_of_coherence(&rho), 0.0);
    }

    #[test]
    fn coherence_of_plus_state_is_ln2() {
        assert!((relative_entropy_of_coherence(&plus_state()) - 2.0_f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn coherence_of_biased_pure_qubit() {
        let rho =
            DensityMatrix::from_pure(&[c(0.9_f64.sqrt(), 0.0), c(0.1_f64.sqrt(), 0.0)]).unwrap();
        // Binary entropy of 0.9: -0.9 ln 0.9 - 0.1 ln 0.1.
        let expected = -(0.9_f64 * 0.9_f64.ln() + 0.1 * 0.1_f64.ln());
        let got = relative_entropy_of_coherence(&rho);
        assert!((got - expected).abs() < 1e-12);
        assert!((got - 0.325_082_973_391).abs() < 1e-9);
    }

    #[test]
    fn coherence_equals_relative_entropy_to_dephased() {
        let mut rng = ChaCha12Rng::seed_from_u64(15);
        for _ in 0..40 {
            let rho = random_density(&mut rng, 3);
            let direct = relative_entropy(&rho, &rho.dephase()).unwrap();
            let split = relative_entropy_of_coherence(&rho);
            assert!((direct - split).abs() < 1e-9);
        }
    }

    #[test]
    fn trace_distance_basics() {
        let zero = DensityMatrix::basis_state(2, 0);
        let one = DensityMatrix::basis_state(2, 1);
        assert!((trace_distance(&zero, &one).unwrap() - 1.0).abs() < 1e-12);
        assert!(trace_distance(&zero, &zero).unwrap() < 1e-15);
        let mixed = DensityMatrix::from_populations(&PopulationVector::uniform(2));
        assert!((trace_distance(&zero, &mixed).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn density_matrix_rejects_invalid_input() {
        let not_hermitian =
            DMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.3, 0.0), c(0.1, 0.0), c(0.5, 0.0)]);
        assert!(matches!(
            DensityMatrix::new(not_hermitian),
            Err(CoreError::NotHermitian { .. })
        ));

        let wrong_trace =
            DMatrix::from_row_slice(2, 2, &[c(0.7, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.7, 0.0)]);
        assert!(matches!(
            DensityMatrix::new(wrong_trace),
            Err(CoreError::InvalidTrace { .. })
        ));

        let not_psd =
            DMatrix::from_row_slice(2, 2, &[c(1.1, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-0.1, 0.0)]);
        assert!(matches!(
            DensityMatrix::new(not_psd),
            Err(CoreError::NotPositiveSemidefinite { .. })
        ));

        assert!(matches!(
            DensityMatrix::from_pure(&[c(1.0, 0.0), c(0.5, 0.0)]),
            Err(CoreError::InvalidTrace { .. })
        ));
    }

    #[test]
    fn population_vector_validation() {
        assert!(PopulationVector::new(vec![0.5, 0.5]).is_ok());
        // Rounding noise below tolerance is clamped.
        let p = PopulationVector::new(vec![1.0 + 5e-13, -5e-13]).unwrap();
        assert_eq!(p.get(0), 1.0);
        assert_eq!(p.get(1), 0.0);
        assert!(PopulationVector::new(vec![0.6, 0.6]).is_err());
        assert!(PopulationVector::new(vec![1.2, -0.2]).is_err());
        assert!(PopulationVector::new(vec![]).is_err());
    }
}

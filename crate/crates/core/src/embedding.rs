//! Coherent driving of the gate through a ladder reservoir.
//!
//! A strict thermal operation can never create coherence from an incoherent
//! input. Borrowing it from an ancilla works around that: take a reservoir
//! with equally spaced levels matching the gate gap, prepare it in a uniform
//! superposition over L consecutive levels, and lift a target qubit unitary u
//! to the energy-conserving joint unitary V(u) that applies u_ij to the gate
//! while shifting the ladder by j - i steps. On the two edge states of the
//! truncated ladder V(u) acts as the identity.
//!
//! Tracing the reservoir back out leaves an approximation of u rho u^dag whose
//! error shrinks like 1/L: the shifted superpositions overlap on L - 1 of
//! their L levels. At L = 1 the ladder records which-path information and the
//! output coherence is destroyed entirely.

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64;

use crate::error::CoreError;
use crate::state::DensityMatrix;

/// Max allowed deviation of the embedded qubit unitary from exact unitarity.
pub const UNITARITY_TOL: f64 = 1e-10;

/// A truncated ladder reservoir prepared in a uniform superposition over
/// `support_length` consecutive levels starting at `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LadderReservoir {
    num_levels: usize,
    support_length: usize,
    offset: usize,
}

impl LadderReservoir {
    /// # Errors
    /// [`CoreError::Domain`] when the support is empty or does not fit inside
    /// the ladder.
    pub fn new(num_levels: usize, support_length: usize, offset: usize) -> Result<Self, CoreError> {
        if support_length == 0 {
            return Err(CoreError::Domain("support length must be positive".into()));
        }
        if offset + support_length > num_levels {
            return Err(CoreError::Domain(format!(
                "support [{offset}, {}] exceeds the {num_levels}-level ladder",
                offset + support_length - 1
            )));
        }
        Ok(Self {
            num_levels,
            support_length,
            offset,
        })
    }

    /// Default geometry: 4L levels with the L-level superposition centered,
    /// leaving L-sized margins and change from the edges.
    pub fn centered(support_length: usize) -> Self {
        assert!(support_length > 0, "support length must be positive");
        let num_levels = 4 * support_length;
        let offset = (num_levels - support_length) / 2;
        Self {
            num_levels,
            support_length,
            offset,
        }
    }

    pub fn num_levels(&self) -> usize {
        self.num_levels
    }

    pub fn support_length(&self) -> usize {
        self.support_length
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Amplitudes of the uniform superposition over the support window.
    pub fn amplitudes(&self) -> DVector<Complex64> {
        let weight = Complex64::new(1.0 / (self.support_length as f64).sqrt(), 0.0);
        DVector::from_fn(self.num_levels, |n, _| {
            if n >= self.offset && n < self.offset + self.support_length {
                weight
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }
}

/// The equal-weight mixer: the real rotation by pi/4, sending each basis state
/// to a balanced superposition.
pub fn equal_mix_unitary() -> Matrix2<Complex64> {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    Matrix2::new(s, -s, s, s)
}

/// The reference channel the embedding approximates: conjugation of the gate
/// state by `u` alone, as if energy conservation posed no obstacle.
pub fn ideal_action(u: &Matrix2<Complex64>, rho: &DensityMatrix) -> DensityMatrix {
    let m = Matrix2::new(
        rho.entry(0, 0),
        rho.entry(0, 1),
        rho.entry(1, 0),
        rho.entry(1, 1),
    );
    let out = u * m * u.adjoint();
    DensityMatrix::new(DMatrix::from_fn(2, 2, |i, j| out[(i, j)]))
        .expect("conjugation by a unitary preserves state validity")
}

fn check_unitary(u: &Matrix2<Complex64>) -> Result<(), CoreError> {
    let defect = (u.adjoint() * u - Matrix2::identity())
        .iter()
        .map(|v| v.norm())
        .fold(0.0_f64, f64::max);
    if defect > UNITARITY_TOL {
        return Err(CoreError::Domain(format!(
            "matrix is not unitary (defect {defect:.3e})"
        )));
    }
    Ok(())
}

/// Applies V(u) to a joint gate-ladder vector indexed as `i * n + level`.
///
/// Interior blocks span {|0, level>, |1, level - 1>} and carry a copy of u;
/// the states |0, 0> and |1, n-1> are fixed.
fn apply_joint_unitary(
    u: &Matrix2<Complex64>,
    n: usize,
    w: &DVector<Complex64>,
) -> DVector<Complex64> {
    let mut out = DVector::zeros(2 * n);
    out[0] = w[0];
    out[2 * n - 1] = w[2 * n - 1];
    for level in 1..n {
        let a = level; // |0, level>
        let b = n + level - 1; // |1, level - 1>
        out[a] = u[(0, 0)] * w[a] + u[(0, 1)] * w[b];
        out[b] = u[(1, 0)] * w[a] + u[(1, 1)] * w[b];
    }
    out
}

/// Runs the embedded unitary: prepares `rho (x) |alpha><alpha|`, applies V(u)
/// and traces out the ladder.
///
/// # Errors
/// [`CoreError::Domain`] when `u` is not unitary;
/// [`CoreError::DimensionMismatch`] when `rho` is not a qubit;
/// [`CoreError::Truncation`] when the superposition sits within one shift of
/// the ladder boundary, where the edge identity would corrupt the action.
pub fn embed_unitary(
    u: &Matrix2<Complex64>,
    reservoir: &LadderReservoir,
    rho: &DensityMatrix,
) -> Result<DensityMatrix, CoreError> {
    check_unitary(u)?;
    if rho.dim() != 2 {
        return Err(CoreError::DimensionMismatch {
            expected: 2,
            actual: rho.dim(),
        });
    }
    let n = reservoir.num_levels();
    let top = reservoir.offset() + reservoir.support_length() - 1;
    if reservoir.offset() < 1 || top > n - 2 {
        return Err(CoreError::Truncation {
            offset: reservoir.offset(),
            support_length: reservoir.support_length(),
            num_levels: n,
        });
    }

    let alpha = reservoir.amplitudes();
    let eig = rho.matrix().clone().symmetric_eigen();
    let mut reduced = Matrix2::<Complex64>::zeros();
    for k in 0..2 {
        let p = eig.eigenvalues[k].max(0.0);
        if p == 0.0 {
            continue;
        }
        let v = eig.eigenvectors.column(k);
        // Joint vector v (x) alpha, evolved by one application of V(u).
        let mut w = DVector::zeros(2 * n);
        for i in 0..2 {
            for level in 0..n {
                w[i * n + level] = v[i] * alpha[level];
            }
        }
        let w = apply_joint_unitary(u, n, &w);
        // Accumulate p * Tr_ladder |w><w|.
        for i in 0..2 {
            for j in 0..2 {
                let mut sum = Complex64::new(0.0, 0.0);
                for level in 0..n {
                    sum += w[i * n + level] * w[j * n + level].conj();
                }
                reduced[(i, j)] += Complex64::new(p, 0.0) * sum;
            }
        }
    }
    DensityMatrix::new(DMatrix::from_fn(2, 2, |i, j| reduced[(i, j)]))
}

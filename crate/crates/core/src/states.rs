//! The one-parameter 3⊗3 density-matrix family, its maximally entangled
//! ingredient, and the local basis-swap unitary used for invariance checks.
//!
//! Composite basis order is |00>, |01>, ..., |22> (first label = subsystem
//! A), so the flat index of |ij> is 3i + j.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{hermitian_eigenvalues, ComplexMatrix};

/// Single-qutrit dimension.
pub const QUTRIT_DIM: usize = 3;

/// Absolute tolerance on `tr ρ = 1` when validating a density matrix.
pub const TRACE_TOLERANCE: f64 = 1e-12;

/// Absolute entrywise tolerance on Hermiticity when validating a density
/// matrix.
pub const DENSITY_HERMITICITY_TOLERANCE: f64 = 1e-12;

/// Eigenvalue floor below which a matrix is rejected as not positive
/// semidefinite.
pub const PSD_FLOOR: f64 = -1e-10;

/// Family mixing parameter, restricted to [2, 5]: the state is separable
/// on [2, 3], bound entangled on [3, 4], and free entangled on (4, 5].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if !(2.0..=5.0).contains(&value) || !value.is_finite() {
            return Err(Error::AlphaOutOfRange(value));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// A validated density matrix together with its subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates unit trace, Hermiticity, positive semidefiniteness (up to
    /// [`PSD_FLOOR`]), and that the subsystem dimensions multiply out to
    /// the matrix size.
    pub fn new(matrix: ComplexMatrix, dims: Vec<usize>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let expected: usize = dims.iter().product();
        if expected != matrix.rows() || dims.is_empty() {
            return Err(Error::InvalidDensityMatrix(format!(
                "subsystem dims {:?} do not match matrix size {}",
                dims,
                matrix.rows()
            )));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE_TOLERANCE || trace.im.abs() > TRACE_TOLERANCE {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace {} + {}i is not 1",
                trace.re, trace.im
            )));
        }
        let herm = matrix.hermiticity_deviation();
        if herm > DENSITY_HERMITICITY_TOLERANCE {
            return Err(Error::InvalidDensityMatrix(format!(
                "Hermiticity deviation {herm:.3e} exceeds {DENSITY_HERMITICITY_TOLERANCE:.1e}"
            )));
        }
        let eigenvalues = hermitian_eigenvalues(&matrix)?;
        if eigenvalues[0] < PSD_FLOOR {
            return Err(Error::InvalidDensityMatrix(format!(
                "smallest eigenvalue {:.3e} below {PSD_FLOOR:.1e}",
                eigenvalues[0]
            )));
        }
        Ok(Self { matrix, dims })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_two_qutrit(&self) -> bool {
        self.dims == [QUTRIT_DIM, QUTRIT_DIM]
    }

    /// tr ρ².
    pub fn purity(&self) -> f64 {
        self.matrix.matmul(&self.matrix).trace().re
    }
}

fn two_qutrit(matrix: ComplexMatrix) -> DensityMatrix {
    DensityMatrix::new(matrix, vec![QUTRIT_DIM, QUTRIT_DIM])
        .expect("exact construction satisfies the density-matrix invariants")
}

/// Projector onto the maximally entangled state (|00> + |11> + |22>)/√3.
pub fn psi_plus() -> DensityMatrix {
    let mut m = ComplexMatrix::zeros(9, 9);
    for i in 0..3 {
        for j in 0..3 {
            m.set(4 * i, 4 * j, Complex64::new(1.0 / 3.0, 0.0));
        }
    }
    two_qutrit(m)
}

/// Equal mixture of |01><01|, |12><12|, |20><20|.
pub fn sigma_plus() -> DensityMatrix {
    let mut m = ComplexMatrix::zeros(9, 9);
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let idx = 3 * i + j;
        m.set(idx, idx, Complex64::new(1.0 / 3.0, 0.0));
    }
    two_qutrit(m)
}

/// Equal mixture of |10><10|, |21><21|, |02><02|.
pub fn sigma_minus() -> DensityMatrix {
    let mut m = ComplexMatrix::zeros(9, 9);
    for (i, j) in [(1, 0), (2, 1), (0, 2)] {
        let idx = 3 * i + j;
        m.set(idx, idx, Complex64::new(1.0 / 3.0, 0.0));
    }
    two_qutrit(m)
}

/// The family member 2/7 |Ψ+><Ψ+| + α/7 σ+ + (5-α)/7 σ-.
pub fn horodecki_state(alpha: Alpha) -> DensityMatrix {
    let a = alpha.value();
    let m = psi_plus()
        .matrix()
        .scale_re(2.0 / 7.0)
        .add(&sigma_plus().matrix().scale_re(a / 7.0))
        .add(&sigma_minus().matrix().scale_re((5.0 - a) / 7.0));
    two_qutrit(m)
}

/// The 3x3 swap of basis states |0> and |1> (an involution).
pub fn theta_unitary() -> ComplexMatrix {
    let one = Complex64::new(1.0, 0.0);
    let mut t = ComplexMatrix::zeros(3, 3);
    t.set(0, 1, one);
    t.set(1, 0, one);
    t.set(2, 2, one);
    t
}

/// Conjugates a two-qutrit state by I₃ ⊗ θ, swapping |0> and |1> on
/// subsystem B only.
pub fn apply_local_unitary(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if !rho.is_two_qutrit() {
        return Err(Error::DimensionMismatch {
            expected: 9,
            rows: rho.matrix().rows(),
            cols: rho.matrix().cols(),
        });
    }
    let u = ComplexMatrix::identity(QUTRIT_DIM).tensor(&theta_unitary());
    let rotated = u.matmul(rho.matrix()).matmul(&u.adjoint());
    DensityMatrix::new(rotated, rho.dims().to_vec())
}

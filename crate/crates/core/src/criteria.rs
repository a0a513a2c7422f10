//! Entanglement criteria for two-qutrit states: the partial-transpose
//! (negativity) test and the realignment (computable cross norm) test.
//!
//! Index conventions, with composite index 3m + ν for |m ν>:
//! * partial transpose over B: out(3m+μ, 3n+ν) = ρ(3m+ν, 3n+μ);
//! * realignment: R(3m+n, 3ν+μ) = ρ(3m+ν, 3n+μ). Other reshuffle
//!   conventions are transposes or permutations of this one and share its
//!   singular values, so the trace norm is convention independent.

use crate::error::{Error, Result};
use crate::numerics::{hermitian_eigenvalues, trace_norm, ComplexMatrix};
use crate::states::{DensityMatrix, QUTRIT_DIM};

/// Detection threshold shared by both criteria: negativity counts PT
/// eigenvalues below -1e-10, and a realignment excess must exceed 1e-10
/// to flag entanglement.
pub const DETECTION_THRESHOLD: f64 = 1e-10;

/// Which qutrit to transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Transposes one subsystem of a two-qutrit state. The result is
/// Hermitian but in general indefinite.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: Subsystem) -> Result<ComplexMatrix> {
    ensure_two_qutrit(rho)?;
    let d = QUTRIT_DIM;
    let m = rho.matrix();
    let out = match subsystem {
        Subsystem::B => ComplexMatrix::from_fn(9, 9, |row, col| {
            let (a_row, b_row) = (row / d, row % d);
            let (a_col, b_col) = (col / d, col % d);
            m.get(a_row * d + b_col, a_col * d + b_row)
        }),
        Subsystem::A => ComplexMatrix::from_fn(9, 9, |row, col| {
            let (a_row, b_row) = (row / d, row % d);
            let (a_col, b_col) = (col / d, col % d);
            m.get(a_col * d + b_row, a_row * d + b_col)
        }),
    };
    Ok(out)
}

/// Sum of |λ| over partial-transpose eigenvalues below the detection
/// threshold; zero exactly when the state is PPT.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let eigenvalues = pt_eigenvalues(rho)?;
    Ok(sum_negative_magnitudes(&eigenvalues))
}

/// Empty float sums start at -0.0; the `+ 0.0` normalizes that to +0.0 so
/// PPT states report a cleanly signed zero.
fn sum_negative_magnitudes(eigenvalues: &[f64]) -> f64 {
    eigenvalues
        .iter()
        .filter(|&&v| v < -DETECTION_THRESHOLD)
        .map(|v| -v)
        .sum::<f64>()
        + 0.0
}

/// Ascending eigenvalues of the partial transpose over B.
pub fn pt_eigenvalues(rho: &DensityMatrix) -> Result<Vec<f64>> {
    let pt = partial_transpose(rho, Subsystem::B)?;
    hermitian_eigenvalues(&pt)
}

/// Trace norm of the realigned matrix minus one. Positive values witness
/// entanglement; the criterion is one-sided, so a non-positive excess
/// says nothing.
pub fn realignment_excess(rho: &DensityMatrix) -> Result<f64> {
    ensure_two_qutrit(rho)?;
    let d = QUTRIT_DIM;
    let m = rho.matrix();
    let realigned = ComplexMatrix::from_fn(9, 9, |row, col| {
        let (a_row, a_col) = (row / d, row % d); // (m, n)
        let (b_row, b_col) = (col / d, col % d); // (ν, μ)
        m.get(a_row * d + b_row, a_col * d + b_col)
    });
    Ok(trace_norm(&realigned) - 1.0)
}

/// Outcome of running both criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntanglementLabel {
    /// Negative partial transpose: free (distillable) entanglement.
    NptFreeEntangled,
    /// PPT but flagged by the realignment criterion: bound entanglement.
    PptBoundEntangledByRealignment,
    /// Neither criterion fires; separability is not implied.
    Undetected,
}

impl EntanglementLabel {
    pub fn name(self) -> &'static str {
        match self {
            EntanglementLabel::NptFreeEntangled => "NptFreeEntangled",
            EntanglementLabel::PptBoundEntangledByRealignment => {
                "PptBoundEntangledByRealignment"
            }
            EntanglementLabel::Undetected => "Undetected",
        }
    }
}

impl std::fmt::Display for EntanglementLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Both criteria evaluated on one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub label: EntanglementLabel,
    pub negativity: f64,
    pub realignment_excess: f64,
    pub min_pt_eigenvalue: f64,
}

/// Runs both criteria: NPT wins if the negativity fires; otherwise the
/// realignment excess decides between bound-entangled and undetected.
pub fn classify(rho: &DensityMatrix) -> Result<Classification> {
    let eigenvalues = pt_eigenvalues(rho)?;
    let min_pt_eigenvalue = eigenvalues[0];
    let negativity = sum_negative_magnitudes(&eigenvalues);
    let realignment_excess = realignment_excess(rho)?;
    let label = if negativity > DETECTION_THRESHOLD {
        EntanglementLabel::NptFreeEntangled
    } else if realignment_excess > DETECTION_THRESHOLD {
        EntanglementLabel::PptBoundEntangledByRealignment
    } else {
        EntanglementLabel::Undetected
    };
    Ok(Classification {
        label,
        negativity,
        realignment_excess,
        min_pt_eigenvalue,
    })
}

fn ensure_two_qutrit(rho: &DensityMatrix) -> Result<()> {
    if !rho.is_two_qutrit() {
        return Err(Error::DimensionMismatch {
            expected: 9,
            rows: rho.matrix().rows(),
            cols: rho.matrix().cols(),
        });
    }
    Ok(())
}

//! Simulation and classification of a two-qutrit state family under
//! depolarizing noise.
//!
//! The crate evolves 3⊗3 density matrices through local, multilocal,
//! collective, and global depolarizing channels built from the qutrit
//! shift/phase operator basis, classifies the results with the
//! partial-transpose and realignment criteria, provides closed-form
//! partial-transpose spectra as an independent cross-check, and drives
//! parameter sweeps (negativity curves, PPT crossings, bound-entanglement
//! windows) behind a small CLI.

pub mod channels;
pub mod cli;
pub mod closedform;
pub mod criteria;
pub mod error;
pub mod numerics;
pub mod states;
pub mod sweeps;

pub use channels::{KrausSet, NoiseConfig, Topology};
pub use closedform::PtSpectrum;
pub use criteria::{classify, Classification, EntanglementLabel};
pub use error::{Error, Result};
pub use numerics::ComplexMatrix;
pub use states::{Alpha, DensityMatrix};
pub use sweeps::{AxisParameter, FixedParameters, SweepRecord};

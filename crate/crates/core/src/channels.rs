//! Depolarizing noise channels for one and two qutrits.
//!
//! The single-qutrit channel has nine Kraus operators: √(1-p) I plus
//! √(p/8) times the eight non-identity shift/phase operators Y^a Z^b.
//! `p` is the decoherence parameter on [0, 1]; physically it plays the
//! role of 1 - e^(-Γt/2) for a coupling rate Γ, so p = 0 is no noise and
//! p grows monotonically with time. The channel reaches the fully
//! depolarizing map (everything to I/3) at p = 8/9, after which the state
//! moves back out of the maximally mixed point. Only depolarizing noise
//! is modeled here; dephasing and amplitude-damping families are out of
//! scope.
//!
//! Two-qutrit topologies compose lifted copies of the single-qutrit set:
//! A-side only, B-side only, both sides (multilocal), a collective stage
//! whose Kraus set is all 81 tensor products E_m ⊗ E_n, and a global
//! topology that applies the A, B, and collective stages in sequence.
//! A 9-element diagonal-only product set {E_m ⊗ E_m} would violate the
//! completeness relation ((1-p)² + p²/8 ≠ 1) and is not a channel, which
//! is why the collective stage uses the full cross product. All stages
//! commute, so the global stage order is a convention, not a physical
//! choice.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::states::{DensityMatrix, QUTRIT_DIM};

/// Max entrywise deviation allowed in the completeness sum Σ E†E = I.
pub const COMPLETENESS_TOLERANCE: f64 = 1e-12;

/// The cyclic shift: column j holds basis vector j-1 mod 3, so the
/// operator sends |0> to |2>, |1> to |0>, |2> to |1>.
pub fn weyl_shift() -> ComplexMatrix {
    let one = Complex64::new(1.0, 0.0);
    let mut y = ComplexMatrix::zeros(3, 3);
    y.set(0, 1, one);
    y.set(1, 2, one);
    y.set(2, 0, one);
    y
}

/// The phase operator diag(1, ω, ω²) with ω = e^(2πi/3).
pub fn weyl_phase() -> ComplexMatrix {
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut z = ComplexMatrix::zeros(3, 3);
    z.set(0, 0, Complex64::new(1.0, 0.0));
    z.set(1, 1, omega);
    z.set(2, 2, omega.conj());
    z
}

/// A labeled, completeness-checked set of Kraus operators.
#[derive(Debug, Clone)]
pub struct KrausSet {
    operators: Vec<ComplexMatrix>,
    label: String,
}

impl KrausSet {
    /// Validates Σ E†E = I entrywise within [`COMPLETENESS_TOLERANCE`].
    pub fn new(operators: Vec<ComplexMatrix>, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        let dim = operators
            .first()
            .map(ComplexMatrix::rows)
            .unwrap_or_default();
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for op in &operators {
            sum = sum.add(&op.adjoint().matmul(op));
        }
        let deviation = sum.max_abs_diff(&ComplexMatrix::identity(dim));
        if deviation > COMPLETENESS_TOLERANCE {
            return Err(Error::IncompleteKrausSet { label, deviation });
        }
        Ok(Self { operators, label })
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.operators
            .first()
            .map(ComplexMatrix::rows)
            .unwrap_or_default()
    }

    /// Max entrywise deviation of Σ E†E from the identity.
    pub fn completeness_deviation(&self) -> f64 {
        let dim = self.dim();
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for op in &self.operators {
            sum = sum.add(&op.adjoint().matmul(op));
        }
        sum.max_abs_diff(&ComplexMatrix::identity(dim))
    }
}

fn check_parameter(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) || !value.is_finite() {
        return Err(Error::ParameterOutOfRange { name, value });
    }
    Ok(())
}

/// The nine single-qutrit depolarizing Kraus operators, ordered as
/// √(1-p) I, then √(p/8) {Y, Z, Y², YZ, Y²Z, YZ², Y²Z², Z²}.
pub fn depolarizing_kraus(p: f64) -> Result<KrausSet> {
    check_parameter("p", p)?;
    let y = weyl_shift();
    let z = weyl_phase();
    let y2 = y.matmul(&y);
    let z2 = z.matmul(&z);
    let words = [
        y.clone(),
        z.clone(),
        y2.clone(),
        y.matmul(&z),
        y2.matmul(&z),
        y.matmul(&z2),
        y2.matmul(&z2),
        z2,
    ];
    let mut operators = Vec::with_capacity(9);
    operators.push(ComplexMatrix::identity(QUTRIT_DIM).scale_re((1.0 - p).sqrt()));
    let weight = (p / 8.0).sqrt();
    for w in words {
        operators.push(w.scale_re(weight));
    }
    KrausSet::new(operators, format!("depolarizing(p={p})"))
}

/// Which qutrit a lifted single-qutrit operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Lifts a single-qutrit Kraus set to the pair: E ⊗ I for side A,
/// I ⊗ E for side B.
pub fn lift(kraus: &KrausSet, side: Side) -> Result<KrausSet> {
    if kraus.dim() != QUTRIT_DIM {
        return Err(Error::DimensionMismatch {
            expected: QUTRIT_DIM,
            rows: kraus.dim(),
            cols: kraus.dim(),
        });
    }
    let identity = ComplexMatrix::identity(QUTRIT_DIM);
    let operators = kraus
        .operators()
        .iter()
        .map(|e| match side {
            Side::A => e.tensor(&identity),
            Side::B => identity.tensor(e),
        })
        .collect();
    let tag = match side {
        Side::A => "A",
        Side::B => "B",
    };
    KrausSet::new(operators, format!("{}⊗{tag}", kraus.label()))
}

/// The 81-operator collective set: every product E_m ⊗ E_n of the
/// single-qutrit operators at the same p, ordered with the A index slow.
pub fn collective_kraus(p: f64) -> Result<KrausSet> {
    let single = depolarizing_kraus(p)?;
    let mut operators = Vec::with_capacity(81);
    for em in single.operators() {
        for en in single.operators() {
            operators.push(em.tensor(en));
        }
    }
    KrausSet::new(operators, format!("collective(p={p})"))
}

/// Applies Σ E ρ E† and revalidates the output as a density matrix.
pub fn apply_channel(rho: &DensityMatrix, kraus: &KrausSet) -> Result<DensityMatrix> {
    if kraus.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            rows: kraus.dim(),
            cols: kraus.dim(),
        });
    }
    let mut out = ComplexMatrix::zeros(rho.dim(), rho.dim());
    for e in kraus.operators() {
        out = out.add(&e.matmul(rho.matrix()).matmul(&e.adjoint()));
    }
    DensityMatrix::new(out, rho.dims().to_vec())
}

/// Noise topology: which decoherence parameters drive which stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    /// Qutrit A only (parameter p1).
    LocalA,
    /// Qutrit B only (parameter p2).
    LocalB,
    /// Independent noise on both qutrits (p1, p2).
    Multilocal,
    /// One shared environment for the pair (parameter p).
    Collective,
    /// Both local environments plus the shared one (p1, p2, p).
    Global,
}

impl Topology {
    pub fn name(self) -> &'static str {
        match self {
            Topology::LocalA => "local-a",
            Topology::LocalB => "local-b",
            Topology::Multilocal => "multilocal",
            Topology::Collective => "collective",
            Topology::Global => "global",
        }
    }

    /// Whether the topology consumes (p1, p2, p).
    fn uses(self) -> (bool, bool, bool) {
        match self {
            Topology::LocalA => (true, false, false),
            Topology::LocalB => (false, true, false),
            Topology::Multilocal => (true, true, false),
            Topology::Collective => (false, false, true),
            Topology::Global => (true, true, true),
        }
    }
}

impl std::fmt::Display for Topology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A topology plus its decoherence parameters. Parameters the topology
/// does not consume must be zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseConfig {
    topology: Topology,
    p1: f64,
    p2: f64,
    p: f64,
}

impl NoiseConfig {
    pub fn new(topology: Topology, p1: f64, p2: f64, p: f64) -> Result<Self> {
        check_parameter("p1", p1)?;
        check_parameter("p2", p2)?;
        check_parameter("p", p)?;
        let (uses_p1, uses_p2, uses_p) = topology.uses();
        for (used, name, value) in [
            (uses_p1, "p1", p1),
            (uses_p2, "p2", p2),
            (uses_p, "p", p),
        ] {
            if !used && value != 0.0 {
                return Err(Error::UnusedParameterNonzero {
                    name,
                    value,
                    topology: topology.name(),
                });
            }
        }
        Ok(Self {
            topology,
            p1,
            p2,
            p,
        })
    }

    pub fn local_a(p1: f64) -> Result<Self> {
        Self::new(Topology::LocalA, p1, 0.0, 0.0)
    }

    pub fn local_b(p2: f64) -> Result<Self> {
        Self::new(Topology::LocalB, 0.0, p2, 0.0)
    }

    pub fn multilocal(p1: f64, p2: f64) -> Result<Self> {
        Self::new(Topology::Multilocal, p1, p2, 0.0)
    }

    pub fn collective(p: f64) -> Result<Self> {
        Self::new(Topology::Collective, 0.0, 0.0, p)
    }

    pub fn global(p1: f64, p2: f64, p: f64) -> Result<Self> {
        Self::new(Topology::Global, p1, p2, p)
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Evolves a two-qutrit state through the configured noise: the A-local
/// stage, then the B-local stage, then the collective stage, skipping
/// stages the topology excludes. The stages commute, so the order does
/// not affect the result.
pub fn evolve(rho: &DensityMatrix, config: &NoiseConfig) -> Result<DensityMatrix> {
    if !rho.is_two_qutrit() {
        return Err(Error::DimensionMismatch {
            expected: 9,
            rows: rho.matrix().rows(),
            cols: rho.matrix().cols(),
        });
    }
    let (uses_p1, uses_p2, uses_p) = config.topology.uses();
    let mut state = rho.clone();
    if uses_p1 {
        let stage = lift(&depolarizing_kraus(config.p1)?, Side::A)?;
        state = apply_channel(&state, &stage)?;
    }
    if uses_p2 {
        let stage = lift(&depolarizing_kraus(config.p2)?, Side::B)?;
        state = apply_channel(&state, &stage)?;
    }
    if uses_p {
        let stage = collective_kraus(config.p)?;
        state = apply_channel(&state, &stage)?;
    }
    Ok(state)
}

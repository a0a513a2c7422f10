//! Closed-form partial-transpose spectrum of the one-parameter family under
//! independent per-side depolarizing noise.
//!
//! Both reduced states of the family are maximally mixed, so evolving each
//! side with strengths p1 and p2 contracts the state affinely toward I/9:
//! rho(p1, p2) = s * rho(0) + (1 - s) * I/9 with
//! s = (1 - 9 p1 / 8)(1 - 9 p2 / 8). Partial transposition is linear and
//! fixes I/9, so every eigenvalue of the noiseless partial transpose maps
//! through mu -> s * mu + (1 - s) / 9. The noiseless spectrum consists of
//! three triples, hence so does the evolved one.
//!
//! Expanding s in the noise strengths gives, with
//! radical = sqrt(4 alpha^2 - 20 alpha + 41) * |(8 - 9 p1)(8 - 9 p2)|:
//!
//! * lambda_135 = (320 - 24 p1 - 24 p2 + 27 p1 p2 + radical) / 2688
//! * lambda_246 = (320 - 24 p1 - 24 p2 + 27 p1 p2 - radical) / 2688
//! * lambda_789 = (128 + 24 p1 + 24 p2 - 27 p1 p2) / 1344
//!
//! Only lambda_246 can turn negative; it is the entanglement bellwether.
//! Past the fixed point p = 8/9 the contraction factor s changes sign and
//! the absolute value swaps the two radical branches; the spectrum as a
//! multiset is unaffected, which is all the crosscheck compares.

use crate::channels::{evolve, NoiseConfig, Topology};
use crate::criteria::pt_eigenvalues;
use crate::error::{Error, Result};
use crate::states::{horodecki_state, Alpha};

/// The three triply degenerate partial-transpose eigenvalues of the evolved
/// family state. Field names record the positions of each triple in the
/// conventional 1..9 numbering of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtSpectrum {
    pub lambda_135: f64,
    pub lambda_246: f64,
    pub lambda_789: f64,
}

impl PtSpectrum {
    /// All nine eigenvalues (each triple repeated), ascending.
    pub fn sorted_values(&self) -> [f64; 9] {
        let mut values = [
            self.lambda_135,
            self.lambda_135,
            self.lambda_135,
            self.lambda_246,
            self.lambda_246,
            self.lambda_246,
            self.lambda_789,
            self.lambda_789,
            self.lambda_789,
        ];
        values.sort_by(f64::total_cmp);
        values
    }
}

/// Closed-form spectrum for independent depolarizing noise of strengths
/// p1 on side A and p2 on side B.
pub fn pt_spectrum_multilocal(alpha: Alpha, p1: f64, p2: f64) -> PtSpectrum {
    let a = alpha.value();
    let radical = (4.0 * a * a - 20.0 * a + 41.0).sqrt() * ((8.0 - 9.0 * p1) * (8.0 - 9.0 * p2)).abs();
    let prefix = 320.0 - 24.0 * p1 - 24.0 * p2 + 27.0 * p1 * p2;
    PtSpectrum {
        lambda_135: (prefix + radical) / 2688.0,
        lambda_246: (prefix - radical) / 2688.0,
        lambda_789: (128.0 + 24.0 * p1 + 24.0 * p2 - 27.0 * p1 * p2) / 1344.0,
    }
}

/// Noise on side A only.
pub fn pt_spectrum_local_a(alpha: Alpha, p1: f64) -> PtSpectrum {
    pt_spectrum_multilocal(alpha, p1, 0.0)
}

/// Collective noise: every pairwise Kraus product at a common strength,
/// which composes to equal per-side noise.
pub fn pt_spectrum_collective(alpha: Alpha, p: f64) -> PtSpectrum {
    pt_spectrum_multilocal(alpha, p, p)
}

/// Largest absolute gap between the closed-form spectrum and the
/// numerically evolved-and-transposed spectrum, both sorted ascending.
///
/// Supported for every topology whose channel reduces to per-side noise;
/// the global topology composes three stages and has no closed form here.
pub fn crosscheck(alpha: Alpha, config: &NoiseConfig) -> Result<f64> {
    let (p1, p2) = match config.topology() {
        Topology::LocalA => (config.p1(), 0.0),
        Topology::LocalB => (0.0, config.p2()),
        Topology::Multilocal => (config.p1(), config.p2()),
        Topology::Collective => (config.p(), config.p()),
        Topology::Global => return Err(Error::UnsupportedTopology("global")),
    };
    let predicted = pt_spectrum_multilocal(alpha, p1, p2).sorted_values();
    let evolved = evolve(&horodecki_state(alpha), config)?;
    let observed = pt_eigenvalues(&evolved)?;
    Ok(predicted
        .iter()
        .zip(&observed)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alphas() -> Vec<Alpha> {
        [2.0, 2.75, 3.5, 4.25, 5.0]
            .iter()
            .map(|&a| Alpha::new(a).unwrap())
            .collect()
    }

    const NOISE_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

    #[test]
    fn triples_always_sum_to_the_unit_trace() {
        for alpha in alphas() {
            for p1 in NOISE_GRID {
                for p2 in NOISE_GRID {
                    let s = pt_spectrum_multilocal(alpha, p1, p2);
                    let trace = 3.0 * (s.lambda_135 + s.lambda_246 + s.lambda_789);
                    assert!((trace - 1.0).abs() < 1e-12, "alpha={alpha:?} p1={p1} p2={p2}");
                }
            }
        }
    }

    #[test]
    fn noiseless_spectrum_matches_the_block_form() {
        let s = pt_spectrum_multilocal(Alpha::new(5.0).unwrap(), 0.0, 0.0);
        assert!((s.lambda_246 - (5.0 - 41f64.sqrt()) / 42.0).abs() < 1e-15);
        assert!((s.lambda_135 - (5.0 + 41f64.sqrt()) / 42.0).abs() < 1e-15);
        assert!((s.lambda_789 - 2.0 / 21.0).abs() < 1e-15);
    }

    #[test]
    fn fixed_point_collapses_the_spectrum_to_one_ninth() {
        let s = pt_spectrum_multilocal(Alpha::new(3.3).unwrap(), 8.0 / 9.0, 8.0 / 9.0);
        for v in s.sorted_values() {
            assert!((v - 1.0 / 9.0).abs() < 1e-15);
        }
    }

    #[test]
    fn crosscheck_agrees_with_numerics_for_single_side_noise() {
        for alpha in alphas() {
            for p in NOISE_GRID {
                let gap_a = crosscheck(alpha, &NoiseConfig::local_a(p).unwrap()).unwrap();
                let gap_b = crosscheck(alpha, &NoiseConfig::local_b(p).unwrap()).unwrap();
                assert!(gap_a < 1e-10, "A side: alpha={alpha:?} p={p} gap={gap_a:e}");
                assert!(gap_b < 1e-10, "B side: alpha={alpha:?} p={p} gap={gap_b:e}");
            }
        }
    }

    #[test]
    fn crosscheck_agrees_with_numerics_for_both_sides_noisy() {
        for alpha in alphas() {
            for p1 in NOISE_GRID {
                for p2 in NOISE_GRID {
                    let config = NoiseConfig::multilocal(p1, p2).unwrap();
                    let gap = crosscheck(alpha, &config).unwrap();
                    assert!(gap < 1e-10, "alpha={alpha:?} p1={p1} p2={p2} gap={gap:e}");
                }
            }
        }
    }

    #[test]
    fn crosscheck_agrees_with_numerics_for_collective_noise() {
        for alpha in alphas() {
            for p in NOISE_GRID {
                let config = NoiseConfig::collective(p).unwrap();
                let gap = crosscheck(alpha, &config).unwrap();
                assert!(gap < 1e-10, "alpha={alpha:?} p={p} gap={gap:e}");
            }
        }
    }

    #[test]
    fn global_topology_has_no_closed_form() {
        let config = NoiseConfig::global(0.1, 0.2, 0.3).unwrap();
        let err = crosscheck(Alpha::new(4.0).unwrap(), &config).unwrap_err();
        assert!(matches!(err, Error::UnsupportedTopology("global")));
    }

    #[test]
    fn quadratic_discriminant_coefficient_is_pinned_by_the_numerics() {
        // A plausible misreading scales the quadratic term by ten. At the
        // noiseless alpha = 5 corner that variant is off by more than 0.1,
        // while the implemented form agrees with the numerics to 1e-10.
        let alpha = Alpha::new(5.0).unwrap();
        let a = alpha.value();
        let wrong_radical = (41.0 * a * a - 20.0 * a + 41.0).sqrt() * 64.0;
        let wrong_lambda_246 = (320.0 - wrong_radical) / 2688.0;
        let true_lambda_246 = pt_spectrum_multilocal(alpha, 0.0, 0.0).lambda_246;
        assert!((wrong_lambda_246 - true_lambda_246).abs() > 0.1);
        let gap = crosscheck(alpha, &NoiseConfig::multilocal(0.0, 0.0).unwrap()).unwrap();
        assert!(gap < 1e-10);
    }

    #[test]
    fn branch_swap_past_the_fixed_point_keeps_the_multiset_correct() {
        // For p beyond 8/9 the contraction factor is negative and the
        // absolute value in the radical swaps the two branch labels; the
        // sorted spectrum still matches the numerics.
        let alpha = Alpha::new(5.0).unwrap();
        let config = NoiseConfig::multilocal(1.0, 0.0).unwrap();
        assert!(crosscheck(alpha, &config).unwrap() < 1e-10);
        let s = pt_spectrum_multilocal(alpha, 1.0, 0.0);
        // Contraction factor s = -1/8: branch values straddle 1/9.
        assert!(s.lambda_246 < s.lambda_135);
        assert!(s.sorted_values()[0] > 0.0, "past the fixed point the state is PPT");
    }
}

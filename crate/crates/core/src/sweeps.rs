//! Parameter sweeps over noise strength: per-point classification records,
//! entanglement-loss crossings, and windows of bound entanglement.
//!
//! A crossing is the noise strength at which the negativity first drops to
//! zero along the swept axis. For this family every member with alpha > 4
//! starts out negative-partial-transpose, and the affine contraction toward
//! the maximally mixed state shrinks the negativity monotonically up to the
//! completely depolarizing strength 8/9 (alpha = 4 is the boundary case
//! whose smallest partial-transpose eigenvalue is exactly zero at zero
//! noise, so no crossing exists there or below). Beyond the crossing the
//! realignment criterion can still fire, yielding a window of detectable
//! bound entanglement whose right endpoint is the realignment zero.

use crate::channels::{evolve, NoiseConfig, Topology};
use crate::criteria::{classify, EntanglementLabel};
use crate::error::{Error, Result};
use crate::states::{apply_local_unitary, horodecki_state, Alpha, DensityMatrix};

/// Default family parameters used by the figure sweeps.
pub const DEFAULT_ALPHA_SAMPLES: [f64; 5] = [4.2, 4.4, 4.6, 4.8, 5.0];

/// Default number of grid points per sweep.
pub const DEFAULT_GRID_POINTS: usize = 201;

/// Bracket width at which crossing bisection stops.
pub const CROSSING_TOLERANCE: f64 = 1e-4;

/// Bracket width at which window-endpoint bisection stops.
pub const WINDOW_TOLERANCE: f64 = 1e-3;

/// Uniformly spaced grid on [0, 1], endpoints included.
pub fn uniform_grid(points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::ParameterOutOfRange {
            name: "grid_points",
            value: points as f64,
        });
    }
    let last = (points - 1) as f64;
    Ok((0..points).map(|i| i as f64 / last).collect())
}

/// Which noise-strength parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisParameter {
    P1,
    P2,
    P,
}

impl AxisParameter {
    pub fn name(self) -> &'static str {
        match self {
            AxisParameter::P1 => "p1",
            AxisParameter::P2 => "p2",
            AxisParameter::P => "p",
        }
    }
}

impl std::fmt::Display for AxisParameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Values held constant for the parameters a sweep does not vary.
/// Entries for parameters the topology does not use are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FixedParameters {
    pub p1: f64,
    pub p2: f64,
    pub p: f64,
}

/// One classified point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub alpha: f64,
    pub p1: f64,
    pub p2: f64,
    pub p: f64,
    pub topology: Topology,
    pub negativity: f64,
    pub realignment_excess: f64,
    pub min_pt_eigenvalue: f64,
    pub label: EntanglementLabel,
}

/// Builds the noise configuration with the axis parameter set to `x` and
/// the remaining used parameters taken from `fixed`. Fails when the
/// topology does not sweep the requested axis.
pub fn config_for(
    topology: Topology,
    axis: AxisParameter,
    fixed: FixedParameters,
    x: f64,
) -> Result<NoiseConfig> {
    match (topology, axis) {
        (Topology::LocalA, AxisParameter::P1) => NoiseConfig::local_a(x),
        (Topology::LocalB, AxisParameter::P2) => NoiseConfig::local_b(x),
        (Topology::Multilocal, AxisParameter::P1) => NoiseConfig::multilocal(x, fixed.p2),
        (Topology::Multilocal, AxisParameter::P2) => NoiseConfig::multilocal(fixed.p1, x),
        (Topology::Collective, AxisParameter::P) => NoiseConfig::collective(x),
        (Topology::Global, AxisParameter::P1) => NoiseConfig::global(x, fixed.p2, fixed.p),
        (Topology::Global, AxisParameter::P2) => NoiseConfig::global(fixed.p1, x, fixed.p),
        (Topology::Global, AxisParameter::P) => NoiseConfig::global(fixed.p1, fixed.p2, x),
        (topology, axis) => Err(Error::InvalidAxis {
            topology: topology.name(),
            axis: axis.name(),
        }),
    }
}

fn classify_at(
    rho: &DensityMatrix,
    alpha: Alpha,
    topology: Topology,
    axis: AxisParameter,
    fixed: FixedParameters,
    x: f64,
) -> Result<SweepRecord> {
    let config = config_for(topology, axis, fixed, x)?;
    let evolved = evolve(rho, &config)?;
    let c = classify(&evolved)?;
    Ok(SweepRecord {
        alpha: alpha.value(),
        p1: config.p1(),
        p2: config.p2(),
        p: config.p(),
        topology,
        negativity: c.negativity,
        realignment_excess: c.realignment_excess,
        min_pt_eigenvalue: c.min_pt_eigenvalue,
        label: c.label,
    })
}

/// Classifies the evolved family state at every grid value of the axis
/// parameter.
pub fn sweep(
    alpha: Alpha,
    topology: Topology,
    axis: AxisParameter,
    fixed: FixedParameters,
    grid: &[f64],
) -> Result<Vec<SweepRecord>> {
    let rho = horodecki_state(alpha);
    grid.iter()
        .map(|&x| classify_at(&rho, alpha, topology, axis, fixed, x))
        .collect()
}

fn negativity_at(
    rho: &DensityMatrix,
    topology: Topology,
    axis: AxisParameter,
    fixed: FixedParameters,
    x: f64,
) -> Result<f64> {
    let config = config_for(topology, axis, fixed, x)?;
    let evolved = evolve(rho, &config)?;
    Ok(classify(&evolved)?.negativity)
}

/// Noise strength at which the negativity first vanishes along the grid,
/// refined by bisection to a bracket no wider than `CROSSING_TOLERANCE`.
/// Returns `None` when the state is already not detectably negative at the
/// first grid point, or stays negative across the whole grid.
pub fn find_crossing(
    alpha: Alpha,
    topology: Topology,
    axis: AxisParameter,
    fixed: FixedParameters,
    grid: &[f64],
) -> Result<Option<f64>> {
    use crate::criteria::DETECTION_THRESHOLD;
    if grid.len() < 2 {
        return Err(Error::ParameterOutOfRange {
            name: "grid_points",
            value: grid.len() as f64,
        });
    }
    let rho = horodecki_state(alpha);
    if negativity_at(&rho, topology, axis, fixed, grid[0])? <= DETECTION_THRESHOLD {
        return Ok(None);
    }
    let mut bracket = None;
    for window in grid.windows(2) {
        if negativity_at(&rho, topology, axis, fixed, window[1])? <= DETECTION_THRESHOLD {
            bracket = Some((window[0], window[1]));
            break;
        }
    }
    let Some((mut lo, mut hi)) = bracket else {
        return Ok(None);
    };
    while hi - lo > CROSSING_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if negativity_at(&rho, topology, axis, fixed, mid)? > DETECTION_THRESHOLD {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

fn label_at(
    rho: &DensityMatrix,
    topology: Topology,
    axis: AxisParameter,
    fixed: FixedParameters,
    x: f64,
) -> Result<EntanglementLabel> {
    let config = config_for(topology, axis, fixed, x)?;
    let evolved = evolve(rho, &config)?;
    Ok(classify(&evolved)?.label)
}

/// Endpoints of the widest grid run classified as bound entangled, each
/// refined by bisection against the adjacent differently labelled grid
/// point to a bracket no wider than `WINDOW_TOLERANCE`. Returns `None`
/// when no grid point is classified as bound entangled.
pub fn bound_window(
    alpha: Alpha,
    topology: Topology,
    axis: AxisParameter,
    fixed: FixedParameters,
    grid: &[f64],
) -> Result<Option<(f64, f64)>> {
    if grid.len() < 2 {
        return Err(Error::ParameterOutOfRange {
            name: "grid_points",
            value: grid.len() as f64,
        });
    }
    let rho = horodecki_state(alpha);
    let labels: Vec<EntanglementLabel> = grid
        .iter()
        .map(|&x| label_at(&rho, topology, axis, fixed, x))
        .collect::<Result<_>>()?;

    let bound = EntanglementLabel::PptBoundEntangledByRealignment;
    let mut best: Option<(usize, usize)> = None;
    let mut run_start = None;
    for (i, &label) in labels.iter().enumerate() {
        match (label == bound, run_start) {
            (true, None) => run_start = Some(i),
            (false, Some(start)) => {
                if best.is_none_or(|(s, e)| i - 1 - start > e - s) {
                    best = Some((start, i - 1));
                }
                run_start = None;
            }
            _ => {}
        }
    }
    if let Some(start) = run_start {
        let end = labels.len() - 1;
        if best.is_none_or(|(s, e)| end - start > e - s) {
            best = Some((start, end));
        }
    }
    let Some((start, end)) = best else {
        return Ok(None);
    };

    let refine = |inside: f64, outside: f64| -> Result<f64> {
        let (mut good, mut bad) = (inside, outside);
        while (good - bad).abs() > WINDOW_TOLERANCE {
            let mid = 0.5 * (good + bad);
            if label_at(&rho, topology, axis, fixed, mid)? == bound {
                good = mid;
            } else {
                bad = mid;
            }
        }
        Ok(0.5 * (good + bad))
    };

    let left = if start == 0 {
        grid[0]
    } else {
        refine(grid[start], grid[start - 1])?
    };
    let right = if end == labels.len() - 1 {
        grid[end]
    } else {
        refine(grid[end], grid[end + 1])?
    };
    Ok(Some((left, right)))
}

/// One point of a spectrum trace: the axis value, the nine
/// partial-transpose eigenvalues ascending, and the realignment excess.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRecord {
    pub x: f64,
    pub pt_eigenvalues: [f64; 9],
    pub realignment_excess: f64,
}

/// Traces the full partial-transpose spectrum of the globally evolved
/// state as the collective strength varies, with the per-side strengths
/// held fixed.
pub fn global_spectrum_trace(
    alpha: Alpha,
    fixed: FixedParameters,
    grid: &[f64],
) -> Result<Vec<SpectrumRecord>> {
    use crate::criteria::{pt_eigenvalues, realignment_excess};
    let rho = horodecki_state(alpha);
    grid.iter()
        .map(|&x| {
            let config = NoiseConfig::global(fixed.p1, fixed.p2, x)?;
            let evolved = evolve(&rho, &config)?;
            let values = pt_eigenvalues(&evolved)?;
            let mut pt = [0.0; 9];
            pt.copy_from_slice(&values);
            Ok(SpectrumRecord {
                x,
                pt_eigenvalues: pt,
                realignment_excess: realignment_excess(&evolved)?,
            })
        })
        .collect()
}

/// Largest gap in negativity and realignment excess between the evolved
/// state and the evolved locally rotated state. Local unitaries commute
/// with depolarizing noise and leave both criteria invariant, so this
/// should vanish to numerical precision.
pub fn unitary_invariance_check(alpha: Alpha, config: &NoiseConfig) -> Result<f64> {
    let rho = horodecki_state(alpha);
    let rotated = apply_local_unitary(&rho)?;
    let plain = classify(&evolve(&rho, config)?)?;
    let moved = classify(&evolve(&rotated, config)?)?;
    Ok((plain.negativity - moved.negativity)
        .abs()
        .max((plain.realignment_excess - moved.realignment_excess).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(a: f64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    fn grid() -> Vec<f64> {
        uniform_grid(DEFAULT_GRID_POINTS).unwrap()
    }

    #[test]
    fn uniform_grid_covers_the_unit_interval() {
        let g = uniform_grid(201).unwrap();
        assert_eq!(g.len(), 201);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[200], 1.0);
        assert!((g[1] - 0.005).abs() < 1e-15);
        assert!(matches!(
            uniform_grid(1),
            Err(Error::ParameterOutOfRange { name: "grid_points", .. })
        ));
    }

    #[test]
    fn sweep_records_start_from_the_noiseless_values() {
        let records = sweep(
            alpha(5.0),
            Topology::LocalA,
            AxisParameter::P1,
            FixedParameters::default(),
            &[0.0, 0.5],
        )
        .unwrap();
        assert_eq!(records.len(), 2);
        let first = &records[0];
        assert!((first.negativity - (41f64.sqrt() - 5.0) / 14.0).abs() < 1e-10);
        assert_eq!(first.label, EntanglementLabel::NptFreeEntangled);
        assert_eq!(first.p1, 0.0);
        assert_eq!(first.p2, 0.0);
        assert_eq!(first.p, 0.0);
        assert_eq!(records[1].label, EntanglementLabel::Undetected);
    }

    #[test]
    fn axis_must_match_topology() {
        let err = config_for(
            Topology::LocalA,
            AxisParameter::P2,
            FixedParameters::default(),
            0.1,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidAxis { topology: "local-a", axis: "p2" }
        ));
        assert!(config_for(
            Topology::Collective,
            AxisParameter::P1,
            FixedParameters::default(),
            0.1
        )
        .is_err());
    }

    #[test]
    fn single_side_crossing_matches_the_closed_form_root() {
        // lambda_246(p1, 0) = 0 at p1 = (8 sqrt(41) - 40) / (9 sqrt(41) - 3).
        let exact = (8.0 * 41f64.sqrt() - 40.0) / (9.0 * 41f64.sqrt() - 3.0);
        let found = find_crossing(
            alpha(5.0),
            Topology::LocalA,
            AxisParameter::P1,
            FixedParameters::default(),
            &grid(),
        )
        .unwrap()
        .expect("the alpha = 5 member starts out free entangled");
        assert!((found - exact).abs() < 1e-4, "found={found} exact={exact}");
    }

    #[test]
    fn crossing_is_absent_at_and_below_the_boundary_family_member() {
        for a in [2.0, 3.0, 4.0] {
            let result = find_crossing(
                alpha(a),
                Topology::LocalA,
                AxisParameter::P1,
                FixedParameters::default(),
                &grid(),
            )
            .unwrap();
            assert_eq!(result, None, "alpha={a}");
        }
    }

    #[test]
    fn every_family_member_above_the_boundary_crosses_under_single_side_noise() {
        for a in DEFAULT_ALPHA_SAMPLES {
            let result = find_crossing(
                alpha(a),
                Topology::LocalA,
                AxisParameter::P1,
                FixedParameters::default(),
                &grid(),
            )
            .unwrap();
            assert!(result.is_some(), "alpha={a}");
        }
    }

    #[test]
    fn fixed_first_side_crossing_matches_the_closed_form_root() {
        // With p1 = 0.05 the contraction reaches the PPT boundary at
        // p2 = (1 - 0.768833.../0.94375) / 1.125 = 0.164747...
        let fixed = FixedParameters { p1: 0.05, p2: 0.0, p: 0.0 };
        let found = find_crossing(
            alpha(5.0),
            Topology::Multilocal,
            AxisParameter::P2,
            fixed,
            &grid(),
        )
        .unwrap()
        .unwrap();
        let s_star = 14.0 / (3.0 * 41f64.sqrt() - 1.0);
        let exact = (1.0 - s_star / 0.94375) / 1.125;
        assert!((found - exact).abs() < 1e-4, "found={found} exact={exact}");
        assert!((exact - 0.164747).abs() < 1e-5);
    }

    #[test]
    fn both_sides_noisy_window_has_the_predicted_endpoints() {
        let fixed = FixedParameters { p1: 0.05, p2: 0.0, p: 0.0 };
        let (left, right) = bound_window(
            alpha(5.0),
            Topology::Multilocal,
            AxisParameter::P2,
            fixed,
            &grid(),
        )
        .unwrap()
        .unwrap();
        // Left endpoint: negativity crossing. Right endpoint: realignment
        // zero at contraction factor 7 (6 - sqrt(19)) / 17.
        let s_star = 14.0 / (3.0 * 41f64.sqrt() - 1.0);
        let exact_left = (1.0 - s_star / 0.94375) / 1.125;
        let s_zero = 7.0 * (6.0 - 19f64.sqrt()) / 17.0;
        let exact_right = (1.0 - s_zero / 0.94375) / 1.125;
        assert!((left - exact_left).abs() < 1e-3, "left={left} exact={exact_left}");
        assert!((right - exact_right).abs() < 1e-3, "right={right} exact={exact_right}");
        assert!((exact_right - 0.2524227).abs() < 1e-6);
    }

    #[test]
    fn moderate_first_side_noise_still_leaves_a_crossing() {
        // At p1 = 0.1 the second-side crossing sits near 0.1189.
        let fixed = FixedParameters { p1: 0.1, p2: 0.0, p: 0.0 };
        let found = find_crossing(
            alpha(5.0),
            Topology::Multilocal,
            AxisParameter::P2,
            fixed,
            &grid(),
        )
        .unwrap()
        .unwrap();
        let s_star = 14.0 / (3.0 * 41f64.sqrt() - 1.0);
        let exact = (1.0 - s_star / 0.8875) / 1.125;
        assert!((found - exact).abs() < 1e-4);
        assert!((exact - 0.118851).abs() < 1e-5);
    }

    #[test]
    fn collective_noise_crossing_and_window_match_the_quadratic_roots() {
        // Collective noise contracts by (1 - 9p/8)^2.
        let found = find_crossing(
            alpha(5.0),
            Topology::Collective,
            AxisParameter::P,
            FixedParameters::default(),
            &grid(),
        )
        .unwrap()
        .unwrap();
        let s_star = 14.0 / (3.0 * 41f64.sqrt() - 1.0);
        let exact = (1.0 - s_star.sqrt()) * 8.0 / 9.0;
        assert!((found - exact).abs() < 1e-4);
        assert!((exact - 0.109483).abs() < 1e-5);

        let (left, right) = bound_window(
            alpha(5.0),
            Topology::Collective,
            AxisParameter::P,
            FixedParameters::default(),
            &grid(),
        )
        .unwrap()
        .unwrap();
        let s_zero = 7.0 * (6.0 - 19f64.sqrt()) / 17.0;
        let exact_right = (1.0 - s_zero.sqrt()) * 8.0 / 9.0;
        assert!((left - exact).abs() < 1e-3);
        assert!((right - exact_right).abs() < 1e-3);
        assert!((exact_right - 0.158188).abs() < 1e-5);
    }

    #[test]
    fn window_is_absent_for_a_separable_family_member() {
        let result = bound_window(
            alpha(2.5),
            Topology::LocalA,
            AxisParameter::P1,
            FixedParameters::default(),
            &grid(),
        )
        .unwrap();
        assert_eq!(result, None);
    }

    #[test]
    fn global_trace_reduces_to_per_side_noise_at_zero_collective_strength() {
        use crate::closedform::pt_spectrum_multilocal;
        let a = alpha(4.3);
        let fixed = FixedParameters { p1: 0.5, p2: 0.5, p: 0.0 };
        let records = global_spectrum_trace(a, fixed, &[0.0, 8.0 / 9.0]).unwrap();
        let expected = pt_spectrum_multilocal(a, 0.5, 0.5).sorted_values();
        for (got, want) in records[0].pt_eigenvalues.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-10);
        }
        // A completely depolarizing collective stage erases everything.
        for v in records[1].pt_eigenvalues {
            assert!((v - 1.0 / 9.0).abs() < 1e-10);
        }
        assert!((records[1].realignment_excess + 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn spectrum_trace_columns_are_sorted_ascending() {
        let records = global_spectrum_trace(
            alpha(4.3),
            FixedParameters { p1: 0.5, p2: 0.5, p: 0.0 },
            &uniform_grid(11).unwrap(),
        )
        .unwrap();
        for r in &records {
            for pair in r.pt_eigenvalues.windows(2) {
                assert!(pair[0] <= pair[1] + 1e-14, "x={}", r.x);
            }
        }
    }

    #[test]
    fn sweep_negativity_is_three_times_the_negative_branch_or_zero() {
        use crate::closedform::pt_spectrum_multilocal;
        type StrengthPair = fn(f64, FixedParameters) -> (f64, f64);
        let a = alpha(5.0);
        let coarse = uniform_grid(21).unwrap();
        let cases: [(Topology, AxisParameter, FixedParameters, StrengthPair); 3] = [
            (
                Topology::LocalA,
                AxisParameter::P1,
                FixedParameters::default(),
                |x, _| (x, 0.0),
            ),
            (
                Topology::Multilocal,
                AxisParameter::P2,
                FixedParameters { p1: 0.3, p2: 0.0, p: 0.0 },
                |x, f| (f.p1, x),
            ),
            (
                Topology::Collective,
                AxisParameter::P,
                FixedParameters::default(),
                |x, _| (x, x),
            ),
        ];
        for (topology, axis, fixed, to_pair) in cases {
            let records = sweep(a, topology, axis, fixed, &coarse).unwrap();
            for (r, &x) in records.iter().zip(&coarse) {
                let (p1, p2) = to_pair(x, fixed);
                let branch = pt_spectrum_multilocal(a, p1, p2).lambda_246;
                let expected = if branch < 0.0 { 3.0 * branch.abs() } else { 0.0 };
                assert!(
                    (r.negativity - expected).abs() < 1e-9,
                    "topology={topology:?} x={x} got={} want={expected}",
                    r.negativity
                );
            }
        }
    }

    #[test]
    fn crossing_is_stable_under_grid_refinement() {
        let coarse = find_crossing(
            alpha(5.0),
            Topology::LocalA,
            AxisParameter::P1,
            FixedParameters::default(),
            &grid(),
        )
        .unwrap()
        .unwrap();
        let fine = find_crossing(
            alpha(5.0),
            Topology::LocalA,
            AxisParameter::P1,
            FixedParameters::default(),
            &uniform_grid(2 * DEFAULT_GRID_POINTS - 1).unwrap(),
        )
        .unwrap()
        .unwrap();
        assert!((coarse - fine).abs() < CROSSING_TOLERANCE);
    }

    #[test]
    fn local_rotation_changes_neither_criterion() {
        for (a, config) in [
            (4.7, NoiseConfig::local_a(0.1).unwrap()),
            (3.4, NoiseConfig::multilocal(0.2, 0.3).unwrap()),
            (5.0, NoiseConfig::collective(0.05).unwrap()),
            (4.0, NoiseConfig::global(0.1, 0.2, 0.05).unwrap()),
        ] {
            let gap = unitary_invariance_check(alpha(a), &config).unwrap();
            assert!(gap < 1e-10, "alpha={a} topology={} gap={gap:e}", config.topology());
        }
    }
}

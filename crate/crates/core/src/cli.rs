//! Command-line front end: bundled figure datasets, single-state
//! classification, parameter sweeps, crossing searches, and a validation
//! suite. All tabular output is CSV with a '#'-prefixed manifest header,
//! full round-trip float formatting (17 significant digits), and
//! byte-deterministic content for fixed inputs and tool version.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or parameter error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::channels::{
    collective_kraus, depolarizing_kraus, evolve, lift, NoiseConfig, Side, Topology,
};
use crate::closedform::crosscheck;
use crate::criteria::classify;
use crate::states::{horodecki_state, Alpha};
use crate::sweeps::{
    bound_window, config_for, find_crossing, global_spectrum_trace, sweep, uniform_grid,
    AxisParameter, FixedParameters, DEFAULT_ALPHA_SAMPLES, DEFAULT_GRID_POINTS,
};

const COMPLETENESS_LIMIT: f64 = 1e-13;
const CROSSCHECK_LIMIT: f64 = 1e-10;
const INVARIANCE_LIMIT: f64 = 1e-10;

#[derive(Parser)]
#[command(
    name = "qutrit-depol",
    version,
    about = "Two-qutrit states under depolarizing noise: evolution, entanglement criteria, sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the bundled figure datasets as CSV.
    Figure(FigureArgs),
    /// Evolve one family state and report both entanglement criteria.
    Classify(ClassifyArgs),
    /// Classify the evolved state at every grid point of the noise axis.
    Sweep(SweepArgs),
    /// Locate where the negativity vanishes along the noise axis.
    Crossing(CrossingArgs),
    /// Run completeness, closed-form, and invariance checks.
    Validate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl FigureId {
    fn name(self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TopologyArg {
    /// No noise at all; classify the initial state.
    None,
    LocalA,
    LocalB,
    Multilocal,
    Collective,
    Global,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    P1,
    P2,
    P,
}

impl From<AxisArg> for AxisParameter {
    fn from(axis: AxisArg) -> Self {
        match axis {
            AxisArg::P1 => AxisParameter::P1,
            AxisArg::P2 => AxisParameter::P2,
            AxisArg::P => AxisParameter::P,
        }
    }
}

#[derive(Args)]
struct FigureArgs {
    /// Which bundled dataset to produce.
    #[arg(value_enum)]
    id: FigureId,
    /// Family parameter; replaces the default sample set.
    #[arg(long)]
    alpha: Option<f64>,
    /// First-side noise strength, where the dataset holds it fixed.
    #[arg(long)]
    p1: Option<f64>,
    /// Second-side noise strength, where the dataset holds it fixed.
    #[arg(long)]
    p2: Option<f64>,
    /// Number of grid points on the swept axis.
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
    /// Output path; defaults to <id>.csv in the working directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Family parameter in [2, 5].
    #[arg(long)]
    alpha: f64,
    /// Noise topology; `none` classifies the initial state.
    #[arg(long, value_enum)]
    topology: TopologyArg,
    /// First-side noise strength.
    #[arg(long, default_value_t = 0.0)]
    p1: f64,
    /// Second-side noise strength.
    #[arg(long, default_value_t = 0.0)]
    p2: f64,
    /// Collective noise strength.
    #[arg(long, default_value_t = 0.0)]
    p: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Family parameter in [2, 5].
    #[arg(long)]
    alpha: f64,
    /// Noise topology (must have a swept axis; `none` is not sweepable).
    #[arg(long, value_enum)]
    topology: TopologyArg,
    /// Swept parameter; defaults to the topology's natural axis.
    #[arg(long, value_enum)]
    axis: Option<AxisArg>,
    /// Fixed first-side strength for topologies that use it off-axis.
    #[arg(long, default_value_t = 0.0)]
    p1: f64,
    /// Fixed second-side strength for topologies that use it off-axis.
    #[arg(long, default_value_t = 0.0)]
    p2: f64,
    /// Fixed collective strength for topologies that use it off-axis.
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Number of grid points on the swept axis.
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
    /// Output path.
    #[arg(long, default_value = "sweep.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct CrossingArgs {
    /// Family parameter in [2, 5].
    #[arg(long)]
    alpha: f64,
    /// Noise topology (must have a swept axis; `none` is not sweepable).
    #[arg(long, value_enum)]
    topology: TopologyArg,
    /// Swept parameter; defaults to the topology's natural axis.
    #[arg(long, value_enum)]
    axis: Option<AxisArg>,
    /// Fixed first-side strength for topologies that use it off-axis.
    #[arg(long, default_value_t = 0.0)]
    p1: f64,
    /// Fixed second-side strength for topologies that use it off-axis.
    #[arg(long, default_value_t = 0.0)]
    p2: f64,
    /// Fixed collective strength for topologies that use it off-axis.
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Number of scan grid points before bisection refinement.
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
    /// Also report the detectable bound-entanglement window.
    #[arg(long, default_value_t = false)]
    window: bool,
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Figure(args) => cmd_figure(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Crossing(args) => cmd_crossing(&args),
        Command::Validate => return cmd_validate(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Run-information header embedded at the top of every CSV output.
struct RunManifest {
    command: String,
    parameters: Vec<(String, String)>,
    output_path: String,
}

impl RunManifest {
    fn header(&self) -> String {
        let parameters = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "# command: {}\n# parameters: {}\n# output: {}\n# tool_version: {} {}\n",
            self.command,
            parameters,
            self.output_path,
            env!("CARGO_PKG_NAME"),
            env!("CARGO_PKG_VERSION"),
        )
    }
}

fn fmt_value(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_csv(
    path: &Path,
    manifest: &RunManifest,
    columns: &[String],
    rows: &[Vec<f64>],
) -> Result<(), String> {
    let mut body = manifest.header();
    body.push_str(&columns.join(","));
    body.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), columns.len());
        let line = row.iter().map(|&v| fmt_value(v)).collect::<Vec<_>>().join(",");
        body.push_str(&line);
        body.push('\n');
    }
    if let Err(e) = std::fs::write(path, body) {
        // Never leave a truncated dataset behind.
        let _ = std::fs::remove_file(path);
        return Err(format!("cannot write {}: {e}", path.display()));
    }
    Ok(())
}

fn alpha_list(override_alpha: Option<f64>, default: &[f64]) -> Result<Vec<Alpha>, String> {
    let raw: Vec<f64> = match override_alpha {
        Some(a) => vec![a],
        None => default.to_vec(),
    };
    raw.into_iter()
        .map(|a| Alpha::new(a).map_err(|e| e.to_string()))
        .collect()
}

fn reject_override(name: &str, value: Option<f64>, figure: FigureId) -> Result<(), String> {
    if value.is_some() {
        return Err(format!(
            "--{name} is not a free parameter of {}; it is swept or unused there",
            figure.name()
        ));
    }
    Ok(())
}

fn cmd_figure(args: &FigureArgs) -> Result<(), String> {
    let grid = uniform_grid(args.grid_points).map_err(|e| e.to_string())?;
    let path = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}.csv", args.id.name())));

    let mut parameters: Vec<(String, String)> = Vec::new();
    let push = |params: &mut Vec<(String, String)>, k: &str, v: String| {
        params.push((k.to_string(), v));
    };

    let (columns, rows): (Vec<String>, Vec<Vec<f64>>) = match args.id {
        // Single-side noise: per-alpha negativity plus the alpha = 5
        // realignment excess, all against p1.
        FigureId::Fig1 => {
            reject_override("p1", args.p1, args.id)?;
            reject_override("p2", args.p2, args.id)?;
            let alphas = alpha_list(args.alpha, &DEFAULT_ALPHA_SAMPLES)?;
            push(&mut parameters, "alpha", join_alphas(&alphas));
            let mut columns = vec!["p1".to_string()];
            let mut series = Vec::new();
            for &alpha in &alphas {
                columns.push(format!("negativity_alpha{}", alpha.value()));
                let records = sweep(
                    alpha,
                    Topology::LocalA,
                    AxisParameter::P1,
                    FixedParameters::default(),
                    &grid,
                )
                .map_err(|e| e.to_string())?;
                series.push(records);
            }
            columns.push("realignment_excess_alpha5".to_string());
            let excess = sweep(
                Alpha::new(5.0).expect("5 is in range"),
                Topology::LocalA,
                AxisParameter::P1,
                FixedParameters::default(),
                &grid,
            )
            .map_err(|e| e.to_string())?;
            let rows = grid
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    let mut row = vec![x];
                    row.extend(series.iter().map(|s| s[i].negativity));
                    row.push(excess[i].realignment_excess);
                    row
                })
                .collect();
            (columns, rows)
        }
        // Both sides noisy with the first side fixed: per-alpha negativity
        // and the largest-alpha realignment excess, against p2.
        FigureId::Fig2 | FigureId::Fig3 => {
            reject_override("p2", args.p2, args.id)?;
            let default_p1 = if args.id == FigureId::Fig2 { 0.1 } else { 0.05 };
            let p1 = args.p1.unwrap_or(default_p1);
            let default_alphas: &[f64] = if args.id == FigureId::Fig2 {
                &DEFAULT_ALPHA_SAMPLES
            } else {
                &[5.0]
            };
            let alphas = alpha_list(args.alpha, default_alphas)?;
            push(&mut parameters, "alpha", join_alphas(&alphas));
            push(&mut parameters, "p1", format!("{p1}"));
            let fixed = FixedParameters { p1, p2: 0.0, p: 0.0 };
            let mut columns = vec!["p2".to_string()];
            let mut series = Vec::new();
            for &alpha in &alphas {
                columns.push(format!("negativity_alpha{}", alpha.value()));
                let records = sweep(alpha, Topology::Multilocal, AxisParameter::P2, fixed, &grid)
                    .map_err(|e| e.to_string())?;
                series.push(records);
            }
            columns.push("realignment_excess".to_string());
            let rows = grid
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    let mut row = vec![x];
                    row.extend(series.iter().map(|s| s[i].negativity));
                    row.push(series.last().expect("alpha list is nonempty")[i].realignment_excess);
                    row
                })
                .collect();
            (columns, rows)
        }
        // Collective noise: per-alpha negativity against p.
        FigureId::Fig4 => {
            reject_override("p1", args.p1, args.id)?;
            reject_override("p2", args.p2, args.id)?;
            let alphas = alpha_list(args.alpha, &DEFAULT_ALPHA_SAMPLES)?;
            push(&mut parameters, "alpha", join_alphas(&alphas));
            let mut columns = vec!["p".to_string()];
            let mut series = Vec::new();
            for &alpha in &alphas {
                columns.push(format!("negativity_alpha{}", alpha.value()));
                let records = sweep(
                    alpha,
                    Topology::Collective,
                    AxisParameter::P,
                    FixedParameters::default(),
                    &grid,
                )
                .map_err(|e| e.to_string())?;
                series.push(records);
            }
            let rows = grid
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    let mut row = vec![x];
                    row.extend(series.iter().map(|s| s[i].negativity));
                    row
                })
                .collect();
            (columns, rows)
        }
        // Global noise: the full partial-transpose spectrum and the
        // realignment excess against the collective strength, with both
        // per-side strengths held fixed.
        FigureId::Fig5 => {
            let alpha = Alpha::new(args.alpha.unwrap_or(4.3)).map_err(|e| e.to_string())?;
            let p1 = args.p1.unwrap_or(0.5);
            let p2 = args.p2.unwrap_or(0.5);
            push(&mut parameters, "alpha", format!("{}", alpha.value()));
            push(&mut parameters, "p1", format!("{p1}"));
            push(&mut parameters, "p2", format!("{p2}"));
            let fixed = FixedParameters { p1, p2, p: 0.0 };
            let records =
                global_spectrum_trace(alpha, fixed, &grid).map_err(|e| e.to_string())?;
            let mut columns = vec!["p".to_string()];
            columns.extend((1..=9).map(|i| format!("eig{i}")));
            columns.push("realignment_excess".to_string());
            let rows = records
                .iter()
                .map(|r| {
                    let mut row = vec![r.x];
                    row.extend(r.pt_eigenvalues);
                    row.push(r.realignment_excess);
                    row
                })
                .collect();
            (columns, rows)
        }
    };

    parameters.push(("grid_points".to_string(), format!("{}", args.grid_points)));
    let manifest = RunManifest {
        command: format!("figure {}", args.id.name()),
        parameters,
        output_path: path.display().to_string(),
    };
    write_csv(&path, &manifest, &columns, &rows)?;
    println!("wrote {} ({} rows)", path.display(), rows.len());
    Ok(())
}

fn join_alphas(alphas: &[Alpha]) -> String {
    alphas
        .iter()
        .map(|a| format!("{}", a.value()))
        .collect::<Vec<_>>()
        .join(";")
}

fn noise_config(args_topology: TopologyArg, p1: f64, p2: f64, p: f64) -> Result<NoiseConfig, String> {
    let build = match args_topology {
        TopologyArg::None => {
            for (name, value) in [("p1", p1), ("p2", p2), ("p", p)] {
                if value != 0.0 {
                    return Err(format!(
                        "--{name} = {value} has no effect with --topology none; omit it"
                    ));
                }
            }
            NoiseConfig::new(Topology::Global, 0.0, 0.0, 0.0)
        }
        TopologyArg::LocalA => NoiseConfig::new(Topology::LocalA, p1, p2, p),
        TopologyArg::LocalB => NoiseConfig::new(Topology::LocalB, p1, p2, p),
        TopologyArg::Multilocal => NoiseConfig::new(Topology::Multilocal, p1, p2, p),
        TopologyArg::Collective => NoiseConfig::new(Topology::Collective, p1, p2, p),
        TopologyArg::Global => NoiseConfig::new(Topology::Global, p1, p2, p),
    };
    build.map_err(|e| e.to_string())
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), String> {
    let alpha = Alpha::new(args.alpha).map_err(|e| e.to_string())?;
    let config = noise_config(args.topology, args.p1, args.p2, args.p)?;
    let rho = horodecki_state(alpha);
    let evolved = evolve(&rho, &config).map_err(|e| e.to_string())?;
    let c = classify(&evolved).map_err(|e| e.to_string())?;
    println!(
        "{} negativity={} realignment_excess={} min_pt_eigenvalue={}",
        c.label,
        fmt_value(c.negativity),
        fmt_value(c.realignment_excess),
        fmt_value(c.min_pt_eigenvalue),
    );
    Ok(())
}

/// The axis a topology sweeps when the user does not pick one.
fn default_axis(topology: Topology) -> AxisParameter {
    match topology {
        Topology::LocalA => AxisParameter::P1,
        Topology::LocalB | Topology::Multilocal => AxisParameter::P2,
        Topology::Collective | Topology::Global => AxisParameter::P,
    }
}

fn sweepable_topology(arg: TopologyArg) -> Result<Topology, String> {
    match arg {
        TopologyArg::None => {
            Err("--topology none has no noise axis to sweep; pick a noisy topology".to_string())
        }
        TopologyArg::LocalA => Ok(Topology::LocalA),
        TopologyArg::LocalB => Ok(Topology::LocalB),
        TopologyArg::Multilocal => Ok(Topology::Multilocal),
        TopologyArg::Collective => Ok(Topology::Collective),
        TopologyArg::Global => Ok(Topology::Global),
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), String> {
    let alpha = Alpha::new(args.alpha).map_err(|e| e.to_string())?;
    let topology = sweepable_topology(args.topology)?;
    let axis = args.axis.map(AxisParameter::from).unwrap_or_else(|| default_axis(topology));
    let fixed = FixedParameters { p1: args.p1, p2: args.p2, p: args.p };
    // Surface axis/topology mismatches before grinding through the grid.
    config_for(topology, axis, fixed, 0.0).map_err(|e| e.to_string())?;
    let grid = uniform_grid(args.grid_points).map_err(|e| e.to_string())?;
    let records = sweep(alpha, topology, axis, fixed, &grid).map_err(|e| e.to_string())?;

    let columns = vec![
        axis.name().to_string(),
        "negativity".to_string(),
        "realignment_excess".to_string(),
        "min_pt_eigenvalue".to_string(),
    ];
    let rows: Vec<Vec<f64>> = records
        .iter()
        .zip(&grid)
        .map(|(r, &x)| vec![x, r.negativity, r.realignment_excess, r.min_pt_eigenvalue])
        .collect();
    let manifest = RunManifest {
        command: "sweep".to_string(),
        parameters: vec![
            ("alpha".to_string(), format!("{}", alpha.value())),
            ("topology".to_string(), topology.name().to_string()),
            ("axis".to_string(), axis.name().to_string()),
            ("p1".to_string(), format!("{}", args.p1)),
            ("p2".to_string(), format!("{}", args.p2)),
            ("p".to_string(), format!("{}", args.p)),
            ("grid_points".to_string(), format!("{}", args.grid_points)),
        ],
        output_path: args.out.display().to_string(),
    };
    write_csv(&args.out, &manifest, &columns, &rows)?;
    println!("wrote {} ({} rows)", args.out.display(), rows.len());
    Ok(())
}

fn cmd_crossing(args: &CrossingArgs) -> Result<(), String> {
    let alpha = Alpha::new(args.alpha).map_err(|e| e.to_string())?;
    let topology = sweepable_topology(args.topology)?;
    let axis = args.axis.map(AxisParameter::from).unwrap_or_else(|| default_axis(topology));
    let fixed = FixedParameters { p1: args.p1, p2: args.p2, p: args.p };
    config_for(topology, axis, fixed, 0.0).map_err(|e| e.to_string())?;
    let grid = uniform_grid(args.grid_points).map_err(|e| e.to_string())?;

    match find_crossing(alpha, topology, axis, fixed, &grid).map_err(|e| e.to_string())? {
        Some(x) => println!("crossing={}", fmt_value(x)),
        None => println!("crossing=none"),
    }
    if args.window {
        match bound_window(alpha, topology, axis, fixed, &grid).map_err(|e| e.to_string())? {
            Some((left, right)) => println!(
                "bound_window={},{}",
                fmt_value(left),
                fmt_value(right)
            ),
            None => println!("bound_window=none"),
        }
    }
    Ok(())
}

struct CheckReport {
    all_pass: bool,
}

impl CheckReport {
    fn new() -> Self {
        CheckReport { all_pass: true }
    }

    fn check(&mut self, name: &str, value: f64, limit: f64) {
        let pass = value <= limit;
        self.all_pass &= pass;
        println!("CHECK {name} {} {value:.3e}", if pass { "PASS" } else { "FAIL" });
    }
}

const VALIDATE_ALPHAS: [f64; 5] = [2.0, 2.75, 3.5, 4.25, 5.0];
const VALIDATE_STRENGTHS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

fn cmd_validate() -> ExitCode {
    match run_validation() {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run_validation() -> Result<bool, String> {
    let to_msg = |e: crate::error::Error| e.to_string();
    let mut report = CheckReport::new();

    // Kraus completeness at eleven strengths for every operator set.
    let strengths: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let mut single: f64 = 0.0;
    let mut lifted_a: f64 = 0.0;
    let mut lifted_b: f64 = 0.0;
    let mut collective: f64 = 0.0;
    for &p in &strengths {
        let base = depolarizing_kraus(p).map_err(to_msg)?;
        single = single.max(base.completeness_deviation());
        lifted_a = lifted_a.max(lift(&base, Side::A).map_err(to_msg)?.completeness_deviation());
        lifted_b = lifted_b.max(lift(&base, Side::B).map_err(to_msg)?.completeness_deviation());
        collective = collective.max(collective_kraus(p).map_err(to_msg)?.completeness_deviation());
    }
    report.check("kraus-completeness-single", single, COMPLETENESS_LIMIT);
    report.check("kraus-completeness-lifted-a", lifted_a, COMPLETENESS_LIMIT);
    report.check("kraus-completeness-lifted-b", lifted_b, COMPLETENESS_LIMIT);
    report.check("kraus-completeness-collective", collective, COMPLETENESS_LIMIT);

    // Closed-form spectrum against the numerics on the validation grid.
    let mut gap_local_a: f64 = 0.0;
    let mut gap_local_b: f64 = 0.0;
    let mut gap_multilocal: f64 = 0.0;
    let mut gap_collective: f64 = 0.0;
    for &a in &VALIDATE_ALPHAS {
        let alpha = Alpha::new(a).map_err(to_msg)?;
        for &p1 in &VALIDATE_STRENGTHS {
            let config = NoiseConfig::local_a(p1).map_err(to_msg)?;
            gap_local_a = gap_local_a.max(crosscheck(alpha, &config).map_err(to_msg)?);
            let config = NoiseConfig::local_b(p1).map_err(to_msg)?;
            gap_local_b = gap_local_b.max(crosscheck(alpha, &config).map_err(to_msg)?);
            let config = NoiseConfig::collective(p1).map_err(to_msg)?;
            gap_collective = gap_collective.max(crosscheck(alpha, &config).map_err(to_msg)?);
            for &p2 in &VALIDATE_STRENGTHS {
                let config = NoiseConfig::multilocal(p1, p2).map_err(to_msg)?;
                gap_multilocal = gap_multilocal.max(crosscheck(alpha, &config).map_err(to_msg)?);
            }
        }
    }
    report.check("closed-form-crosscheck-local-a", gap_local_a, CROSSCHECK_LIMIT);
    report.check("closed-form-crosscheck-local-b", gap_local_b, CROSSCHECK_LIMIT);
    report.check("closed-form-crosscheck-multilocal", gap_multilocal, CROSSCHECK_LIMIT);
    report.check("closed-form-crosscheck-collective", gap_collective, CROSSCHECK_LIMIT);

    // Criteria invariance under a local basis rotation.
    let mut invariance: f64 = 0.0;
    for &a in &[4.3, 5.0] {
        let alpha = Alpha::new(a).map_err(to_msg)?;
        for &q in &[0.3, 0.5] {
            let configs = [
                NoiseConfig::local_a(q),
                NoiseConfig::local_b(q),
                NoiseConfig::multilocal(q, q),
                NoiseConfig::collective(q),
                NoiseConfig::global(q, q, q),
            ];
            for config in configs {
                let config = config.map_err(to_msg)?;
                let gap = crate::sweeps::unitary_invariance_check(alpha, &config)
                    .map_err(to_msg)?;
                invariance = invariance.max(gap);
            }
        }
    }
    report.check("unitary-invariance", invariance, INVARIANCE_LIMIT);

    Ok(report.all_pass)
}

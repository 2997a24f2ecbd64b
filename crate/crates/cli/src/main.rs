//! Command-line surface for the three-qubit ring toolkit: spectra,
//! ground-state reports, figure-ready sweeps, time evolution, and the
//! W-state schedule, rendered as deterministic CSV or JSON.
//!
//! Data always goes to stdout (or `--out`); human-oriented summaries go
//! to stderr so pipelines stay clean. Exit codes: 0 success, 1 internal
//! or I/O failure, 2 argument error, 3 request outside the supported
//! coupling region, 4 frozen or degenerate dynamics request.

mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{emit, Column, Table};
use std::fmt;
use std::path::PathBuf;
use std::process;
use tim_core::{
    dynamics, entangle, linalg, model, spectrum3, DynamicsError, EntangleError, LinalgError,
    MixingAngles, ModelError, ModelParams, SpectrumError, StateVector,
};

#[derive(Parser)]
#[command(
    name = "tim",
    version,
    about = "Transverse-field Ising ring laboratory for three qubits: \
             exact spectra, entanglement, spin squeezing, and W-state dynamics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Args)]
struct OutputArgs {
    /// Output format for the data stream.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write the data stream to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energy levels next to the numeric spectrum.
    Spectrum {
        /// Exchange coupling J.
        #[arg(long, allow_negative_numbers = true)]
        j: f64,
        /// Transverse field B.
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Ground-state amplitudes, concurrence, squeezing, and cross-checks.
    Ground {
        /// Exchange coupling J (must be positive).
        #[arg(long, allow_negative_numbers = true)]
        j: f64,
        /// Transverse field B (must be positive).
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Concurrence and squeezing across the superposition angle.
    SweepTheta {
        /// First angle of the grid (radians).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        start: f64,
        /// Last angle of the grid (radians).
        #[arg(long, default_value_t = std::f64::consts::PI, allow_negative_numbers = true)]
        stop: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 501)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Ground-state concurrence and squeezing across a log-spaced field grid.
    SweepField {
        /// Exchange coupling J (must be positive).
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
        /// Smallest field value (must be positive).
        #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
        start: f64,
        /// Largest field value.
        #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
        stop: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 500)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full-space evolution from |111> with a subspace-leakage audit.
    Evolve {
        /// Exchange coupling J.
        #[arg(long, allow_negative_numbers = true)]
        j: f64,
        /// Transverse field B.
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        /// End of the time grid (must be positive).
        #[arg(long = "t-max", allow_negative_numbers = true)]
        t_max: f64,
        /// Number of time samples.
        #[arg(long, default_value_t = 201)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Resonant field and timing that turn |111> into the W state.
    MakeW {
        /// Exchange coupling J (must be nonzero).
        #[arg(long, allow_negative_numbers = true)]
        j: f64,
        /// Number of time samples over [0, 2 t*].
        #[arg(long, default_value_t = 201)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug)]
enum CliError {
    /// Exit code 2: malformed or out-of-domain arguments.
    Usage(String),
    /// Exit code 3: parameters outside the positive-coupling region.
    Region(String),
    /// Exit code 4: dynamics request with nothing to evolve.
    Frozen(String),
    /// Exit code 1: I/O or internal numeric failure.
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Region(_) => 3,
            CliError::Frozen(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m)
            | CliError::Region(m)
            | CliError::Frozen(m)
            | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SpectrumError> for CliError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::OutOfRegion { .. } => CliError::Region(e.to_string()),
            SpectrumError::WrongSize { .. } => CliError::Failure(e.to_string()),
        }
    }
}

impl From<EntangleError> for CliError {
    fn from(e: EntangleError) -> Self {
        match e {
            EntangleError::Spectrum(inner) => inner.into(),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::FrozenDynamics | DynamicsError::ZeroCoupling => {
                CliError::Frozen(e.to_string())
            }
            DynamicsError::Model(inner) => inner.into(),
            DynamicsError::Linalg(inner) => inner.into(),
        }
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        CliError::Failure(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(format!("i/o error: {e}"))
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        process::exit(e.exit_code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Spectrum { j, b, output } => cmd_spectrum(j, b, &output),
        Command::Ground { j, b, output } => cmd_ground(j, b, &output),
        Command::SweepTheta {
            start,
            stop,
            steps,
            output,
        } => cmd_sweep_theta(start, stop, steps, &output),
        Command::SweepField {
            j,
            start,
            stop,
            steps,
            output,
        } => cmd_sweep_field(j, start, stop, steps, &output),
        Command::Evolve {
            j,
            b,
            t_max,
            steps,
            output,
        } => cmd_evolve(j, b, t_max, steps, &output),
        Command::MakeW { j, steps, output } => cmd_make_w(j, steps, &output),
    }
}

fn render(
    table: &Table,
    parameters: serde_json::Value,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let text = match output.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(parameters),
    };
    emit(&text, output.out.as_deref())?;
    Ok(())
}

fn check_grid(start: f64, stop: f64, steps: usize) -> Result<(), CliError> {
    if !start.is_finite() || !stop.is_finite() {
        return Err(CliError::Usage("start and stop must be finite".into()));
    }
    if steps < 2 {
        return Err(CliError::Usage("steps must be at least 2".into()));
    }
    if start >= stop {
        return Err(CliError::Usage("start must be less than stop".into()));
    }
    Ok(())
}

/// Uniform grid with bit-exact endpoints; interior points use the
/// two-sided interpolation `(start (k - i) + stop i) / k`.
fn grid(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    let k = (steps - 1) as f64;
    (0..steps)
        .map(|i| match i {
            0 => start,
            _ if i == steps - 1 => stop,
            _ => (start * (k - i as f64) + stop * i as f64) / k,
        })
        .collect()
}

/// Log-spaced grid with bit-exact endpoints.
fn log_grid(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    let (ln_start, ln_stop) = (start.ln(), stop.ln());
    let k = (steps - 1) as f64;
    (0..steps)
        .map(|i| match i {
            0 => start,
            _ if i == steps - 1 => stop,
            _ => ((ln_start * (k - i as f64) + ln_stop * i as f64) / k).exp(),
        })
        .collect()
}

fn cmd_spectrum(j: f64, b: f64, output: &OutputArgs) -> Result<(), CliError> {
    let p = ModelParams::new(3, j, b)?;
    let analytic = spectrum3::eigenvalues(&p)?.sorted();
    let h = model::hamiltonian(&p)?;
    let numeric = linalg::eig_hermitian(&h)?.eigenvalues;
    let deviation: Vec<f64> = analytic
        .iter()
        .zip(&numeric)
        .map(|(a, n)| (a - n).abs())
        .collect();
    let max_deviation = deviation.iter().cloned().fold(0.0, f64::max);

    let table = Table::new(vec![
        Column::Int {
            name: "level",
            values: (0..8).collect(),
        },
        Column::Num {
            name: "analytic",
            values: analytic.to_vec(),
        },
        Column::Num {
            name: "numeric",
            values: numeric,
        },
        Column::Num {
            name: "deviation",
            values: deviation,
        },
    ]);
    eprintln!("max_deviation={max_deviation}");
    render(&table, serde_json::json!({ "j": j, "b": b }), output)
}

fn cmd_ground(j: f64, b: f64, output: &OutputArgs) -> Result<(), CliError> {
    let p = ModelParams::new(3, j, b)?;
    let amps = spectrum3::ground_amplitudes(&p)?;
    let report = entangle::ground_report(&p)?;
    let closed = spectrum3::ground_state(&p)?;

    let eig = linalg::eig_hermitian(&model::hamiltonian(&p)?)?;
    let numeric = StateVector::from_unit((0..8).map(|r| eig.eigenvectors[(r, 0)]).collect());
    let ground_fidelity = closed.fidelity(&numeric);
    let relation_residual = (report.xi_squared - (1.0 - 2.0 * report.concurrence)).abs();

    let scalar = |name, value: f64| Column::Num {
        name,
        values: vec![value],
    };
    let table = Table::new(vec![
        scalar("a1", amps.a1),
        scalar("a2", amps.a2),
        scalar("concurrence", report.concurrence),
        scalar("xi_squared", report.xi_squared),
        scalar("ground_fidelity", ground_fidelity),
        scalar("relation_residual", relation_residual),
    ]);
    render(&table, serde_json::json!({ "j": j, "b": b }), output)
}

fn cmd_sweep_theta(
    start: f64,
    stop: f64,
    steps: usize,
    output: &OutputArgs,
) -> Result<(), CliError> {
    check_grid(start, stop, steps)?;
    let thetas = grid(start, stop, steps);
    let mut concurrence = Vec::with_capacity(steps);
    let mut xi_squared = Vec::with_capacity(steps);
    for &theta in &thetas {
        let m = MixingAngles::new(theta, 0.0);
        concurrence.push(entangle::concurrence_mixing(&m));
        xi_squared.push(entangle::squeezing_mixing(&m));
    }
    let table = Table::new(vec![
        Column::Num {
            name: "theta",
            values: thetas,
        },
        Column::Num {
            name: "concurrence",
            values: concurrence,
        },
        Column::Num {
            name: "xi_squared",
            values: xi_squared,
        },
    ]);
    render(
        &table,
        serde_json::json!({ "start": start, "stop": stop, "steps": steps }),
        output,
    )
}

fn cmd_sweep_field(
    j: f64,
    start: f64,
    stop: f64,
    steps: usize,
    output: &OutputArgs,
) -> Result<(), CliError> {
    check_grid(start, stop, steps)?;
    if !j.is_finite() {
        return Err(CliError::Usage("j must be finite".into()));
    }
    if j <= 0.0 || start <= 0.0 {
        return Err(CliError::Region(format!(
            "field sweep needs j > 0 and start > 0, got j = {j}, start = {start}"
        )));
    }
    let fields = log_grid(start, stop, steps);
    let mut concurrence = Vec::with_capacity(steps);
    let mut xi_squared = Vec::with_capacity(steps);
    for &b in &fields {
        let report = entangle::ground_report(&ModelParams::new(3, j, b)?)?;
        concurrence.push(report.concurrence);
        xi_squared.push(report.xi_squared);
    }
    let table = Table::new(vec![
        Column::Num {
            name: "b",
            values: fields,
        },
        Column::Num {
            name: "concurrence",
            values: concurrence,
        },
        Column::Num {
            name: "xi_squared",
            values: xi_squared,
        },
    ]);
    render(
        &table,
        serde_json::json!({ "j": j, "start": start, "stop": stop, "steps": steps }),
        output,
    )
}

fn cmd_evolve(
    j: f64,
    b: f64,
    t_max: f64,
    steps: usize,
    output: &OutputArgs,
) -> Result<(), CliError> {
    if !t_max.is_finite() || t_max <= 0.0 {
        return Err(CliError::Usage("t-max must be positive and finite".into()));
    }
    if steps < 2 {
        return Err(CliError::Usage("steps must be at least 2".into()));
    }
    let p = ModelParams::new(3, j, b)?;
    let excited = StateVector::basis(8, 7);
    let w = spectrum3::w_state();

    let times = grid(0.0, t_max, steps);
    let mut p111 = Vec::with_capacity(steps);
    let mut p_w = Vec::with_capacity(steps);
    let mut leakage = Vec::with_capacity(steps);
    for &t in &times {
        let evolved = dynamics::evolve_full(&p, &excited, t)?;
        let population_111 = excited.fidelity(&evolved);
        let population_w = w.fidelity(&evolved);
        p111.push(population_111);
        p_w.push(population_w);
        leakage.push(1.0 - population_111 - population_w);
    }
    let table = Table::new(vec![
        Column::Num {
            name: "t",
            values: times,
        },
        Column::Num {
            name: "p111",
            values: p111,
        },
        Column::Num {
            name: "pW",
            values: p_w,
        },
        Column::Num {
            name: "leakage",
            values: leakage,
        },
    ]);
    render(
        &table,
        serde_json::json!({ "j": j, "b": b, "t_max": t_max, "steps": steps }),
        output,
    )
}

fn cmd_make_w(j: f64, steps: usize, output: &OutputArgs) -> Result<(), CliError> {
    if steps < 2 {
        return Err(CliError::Usage("steps must be at least 2".into()));
    }
    let schedule = dynamics::w_schedule(j)?;
    let p = ModelParams::new(3, j, schedule.b)?;
    let excited = StateVector::basis(8, 7);
    let w = spectrum3::w_state();

    let times = grid(0.0, 2.0 * schedule.t_star, steps);
    let mut w_fidelity = Vec::with_capacity(steps);
    for &t in &times {
        let evolved = dynamics::evolve_full(&p, &excited, t)?;
        w_fidelity.push(w.fidelity(&evolved));
    }
    let at_t_star = w.fidelity(&dynamics::evolve_full(&p, &excited, schedule.t_star)?);

    let table = Table::new(vec![
        Column::Num {
            name: "t",
            values: times,
        },
        Column::Num {
            name: "w_fidelity",
            values: w_fidelity,
        },
    ]);
    eprintln!("b={}", schedule.b);
    eprintln!("t_star={}", schedule.t_star);
    eprintln!("w_fidelity_at_t_star={at_t_star}");
    render(
        &table,
        serde_json::json!({
            "j": j,
            "b": schedule.b,
            "t_star": schedule.t_star,
            "steps": steps,
            "w_fidelity_at_t_star": at_t_star,
        }),
        output,
    )
}

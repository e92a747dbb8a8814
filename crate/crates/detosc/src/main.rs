//! Thin command-line front end over the `report` harness.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use detosc::report::{
    export_figure_data_with, run_contraction_study, run_identity_suite, run_phase_check, Figure,
    SuiteConfig,
};
use detosc::spectral::hamiltonian_spectrum;

#[derive(Parser)]
#[command(name = "detosc", version, about = "Deterministic cyclic models and their quantum limit", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichFigure {
    Fig1,
    Fig2,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full identity suite and write a JSON report.
    Identities(IdentitiesArgs),
    /// Tabulate the su(2) → oscillator contraction error over an l grid.
    Contract(ContractArgs),
    /// Check the geometric phase after whole periods.
    Phase(PhaseArgs),
    /// Export trajectory and touch-event data files.
    Figures(FiguresArgs),
    /// Print the finite-N Hamiltonian spectrum.
    Spectrum(SpectrumArgs),
}

#[derive(Args)]
struct IdentitiesArgs {
    /// JSON file holding a SuiteConfig; flags below override nothing when set.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Cutoffs N for the automaton/spectral checks.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// su(1,1) weights 2k.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    two_k: Option<Vec<u64>>,
    /// su(2) weights 2l.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    two_l: Option<Vec<u64>>,
    /// Truncation dimension for su(1,1) and oscillator checks.
    #[arg(long)]
    dim: Option<usize>,
    /// Base absolute tolerance (default 1e-12); scaled checks follow it.
    #[arg(long)]
    tol: Option<f64>,
    /// Reserved for sampled checks; recorded in the report.
    #[arg(long)]
    seed: Option<u64>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ContractArgs {
    /// Ascending l grid.
    #[arg(long = "l-values", num_args = 1.., value_delimiter = ',', default_values_t = [10_000u64, 100_000, 1_000_000])]
    l_values: Vec<u64>,
    /// Largest rung n.
    #[arg(long, default_value_t = 8)]
    n_max: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhaseArgs {
    /// Truncation dimension of the k = 1/2 ladder.
    #[arg(long, default_value_t = 32)]
    dim: usize,
    /// Whole periods to evolve through.
    #[arg(long, default_value_t = 1)]
    cycles: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FiguresArgs {
    /// Which captioned configuration to export.
    #[arg(long, value_enum)]
    which: WhichFigure,
    /// Directory for the CSV files and the JSON sidecar.
    #[arg(long)]
    out: PathBuf,
    /// Trajectory samples per touch interval.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Cutoff N.
    #[arg(long)]
    n: usize,
    /// Time step.
    #[arg(long, default_value_t = 1.0)]
    tau: f64,
    /// Integer branch of the one-step eigenphase.
    #[arg(long, default_value_t = 1)]
    n_branch: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> detosc::Result<ExitCode> {
    match cli.command {
        Command::Identities(args) => identities(args),
        Command::Contract(args) => {
            let report = run_contraction_study(&args.l_values, args.n_max)?;
            let body = match args.format {
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json()?,
            };
            emit(args.out.as_deref(), &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Phase(args) => {
            let result = run_phase_check(args.dim, args.cycles)?;
            let mut body = serde_json::to_string_pretty(&result).map_err(detosc::Error::Json)?;
            body.push('\n');
            emit(args.out.as_deref(), &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Figures(args) => {
            let which = match args.which {
                WhichFigure::Fig1 => Figure::Fig1,
                WhichFigure::Fig2 => Figure::Fig2,
            };
            let files = export_figure_data_with(
                which,
                &args.out,
                args.samples,
                which.default_touches(),
                which.default_trajectory_span(),
            )?;
            println!("wrote {}", files.trajectory.display());
            println!("wrote {}", files.touches.display());
            println!("wrote {}", files.sidecar.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum(args) => {
            let entries = hamiltonian_spectrum(args.n, args.tau, args.n_branch)?;
            let body = match args.format {
                Format::Csv => {
                    let mut s =
                        String::from("two_j,two_m,n_a,m_b,energy,phase_re,phase_im\n");
                    for e in &entries {
                        s.push_str(&format!(
                            "{},{},{},{},{},{},{}\n",
                            e.label.two_j,
                            e.label.two_m,
                            e.label.n_a(),
                            e.label.m_b(),
                            e.energy,
                            e.phase_eigenvalue.re,
                            e.phase_eigenvalue.im
                        ));
                    }
                    s
                }
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&entries).map_err(detosc::Error::Json)?;
                    s.push('\n');
                    s
                }
            };
            emit(args.out.as_deref(), &body)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn identities(args: IdentitiesArgs) -> detosc::Result<ExitCode> {
    let mut config = match &args.config {
        Some(path) => {
            let body = std::fs::read_to_string(path).map_err(|e| detosc::Error::io(path, e))?;
            serde_json::from_str::<SuiteConfig>(&body)
                .map_err(|e| detosc::Error::Config(format!("{}: {e}", path.display())))?
        }
        None => SuiteConfig::default(),
    };
    if let Some(n) = args.n {
        config.n_values = n;
    }
    if let Some(two_k) = args.two_k {
        config.two_k_values = two_k;
    }
    if let Some(two_l) = args.two_l {
        config.two_l_values = two_l;
    }
    if let Some(dim) = args.dim {
        config.su11_dim = dim;
    }
    if let Some(tol) = args.tol {
        if !(tol > 0.0) {
            return Err(detosc::Error::Config(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        config.base_tolerance = tol;
    }
    if args.seed.is_some() {
        config.seed = args.seed;
    }

    let report = run_identity_suite(&config)?;
    // per-check lines go wherever the JSON does not
    for r in &report.results {
        if args.out.is_some() {
            println!("{}", r.line());
        } else {
            eprintln!("{}", r.line());
        }
    }
    let passed = report.results.iter().filter(|r| r.pass).count();
    let summary = format!("{passed}/{} checks passed", report.results.len());
    match &args.out {
        Some(path) => {
            report.write_json(path)?;
            println!("{summary}; report written to {}", path.display());
        }
        None => {
            eprintln!("{summary}");
            print!("{}", report.to_json()?);
        }
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit(out: Option<&std::path::Path>, body: &str) -> detosc::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| detosc::Error::io(path, e)),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ecc_spectra::verify::{self, round_sig, VerificationReport};
use ecc_spectra::{
    closed_forms, distance_profile, eccentricity_matrix, eigenvalues_symmetric_with_tol,
    free_trees, graph6, trees_with_diameter, FamilySpec, Graph, Graph6Error, GraphError,
    VerifyOptions,
};
use serde_json::{json, Value};

const EXIT_FALSIFIED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ecc-spectra",
    version,
    about = "Eccentricity-matrix spectra of trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eccentricities, ε-matrix and spectrum of one graph
    Spectrum(SpectrumArgs),
    /// List all non-isomorphic trees of a given order as graph6
    Enumerate(EnumerateArgs),
    /// Run an exhaustive or sampled check and print JSON lines
    Verify(VerifyArgs),
    /// Evaluate a closed form
    Formula {
        #[command(subcommand)]
        which: FormulaCommand,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "input")]
struct InputArgs {
    /// graph6 string
    #[arg(long)]
    graph6: Option<String>,
    /// file holding a graph6 line or a JSON edge list {"n": .., "edges": [[u, v], ..]}
    #[arg(long)]
    file: Option<PathBuf>,
    /// path:n, star:n, broom:n,d,a,b or spider:p,q
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    show_matrix: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Jacobi off-diagonal tolerance relative to the Frobenius norm
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    diameter: Option<usize>,
    /// CSV with ε₁ and ε_n next to each graph6 string
    #[arg(long)]
    with_spectrum: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Bounds,
    Diam3Max,
    OddDiamMax,
    LeastInterval,
    Transforms,
    ClosedForms,
    Interlacing,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    check: Check,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, default_value_t = 7)]
    d_max: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, env = "ECC_SPECTRA_JOBS")]
    jobs: Option<usize>,
    /// Append the JSON lines to this file as well
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include wall-clock time as elapsed_ms
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// Quartic f_a for diameter-3 trees
    Fa {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
    },
    /// Γ(d) for odd d
    Gamma {
        #[arg(long)]
        d: usize,
    },
    /// ρ² of a double broom with odd diameter
    Rho2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Factored ε-polynomial of H_{p,q}
    Hpoly {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Least ε-eigenvalue of H_{p,q}
    Hleast {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Whether ε_n(H_{p,q}) = −2−√13
    Hcond {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Invalid(String),
}

impl CliError {
    fn invalid(e: impl std::fmt::Display) -> CliError {
        CliError::Invalid(e.to_string())
    }
}

impl From<Graph6Error> for CliError {
    fn from(e: Graph6Error) -> Self {
        match e {
            Graph6Error::Malformed(_) => CliError::Parse(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::MalformedEdgeList(_) => CliError::Parse(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum(args) => spectrum(&args),
        Command::Enumerate(args) => enumerate(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Formula { which } => formula(&which),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn read_input(input: &InputArgs) -> Result<Graph, CliError> {
    if let Some(text) = &input.graph6 {
        return Ok(graph6::decode(text.trim())?);
    }
    if let Some(spec) = &input.family {
        let spec: FamilySpec = spec.parse().map_err(|e| CliError::Parse(format!("{e}")))?;
        return spec.build().map_err(CliError::invalid);
    }
    let path = input.file.as_ref().expect("clap requires one input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    let text = text.trim();
    if text.starts_with('{') {
        Ok(Graph::from_json(text)?)
    } else {
        let line = text.lines().next().unwrap_or("");
        Ok(graph6::decode(line.trim())?)
    }
}

fn rounded(values: &[f64]) -> Vec<f64> {
    values.iter().map(|&v| round_sig(v)).collect()
}

fn spectrum(args: &SpectrumArgs) -> Result<ExitCode, CliError> {
    if !(args.tol >= 1e-14 && args.tol < 1.0) {
        return Err(CliError::Invalid(format!(
            "--tol must be in [1e-14, 1), got {}",
            args.tol
        )));
    }
    let g = read_input(&args.input)?;
    let profile = distance_profile(&g);
    let em = eccentricity_matrix(&g);
    let spec = eigenvalues_symmetric_with_tol::<f64>(&em, args.tol).map_err(CliError::invalid)?;
    let irreducible = em.support_is_connected().ok();
    match args.format {
        Format::Json => {
            let mut out = json!({
                "n": g.order(),
                "graph6": graph6::encode(&g).ok(),
                "eccentricities": profile.ecc,
                "diameter": profile.diameter,
                "radius": profile.radius(),
                "spectrum": rounded(&spec.values),
                "eps1": spec.largest().map(round_sig),
                "eps_n": spec.least().map(round_sig),
                "spectral_radius": round_sig(spec.spectral_radius()),
                "irreducible": irreducible,
            });
            if args.show_matrix {
                out["matrix"] = json!(em.rows());
            }
            println!("{out}");
        }
        Format::Csv => {
            if args.show_matrix {
                for row in em.rows() {
                    let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                    println!("{}", cells.join(","));
                }
                println!();
            }
            println!("index,eigenvalue");
            for (i, v) in spec.values.iter().enumerate() {
                println!("{},{}", i + 1, round_sig(*v));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(args: &EnumerateArgs) -> Result<ExitCode, CliError> {
    let stream = match args.diameter {
        Some(d) => trees_with_diameter(args.n, d),
        None => free_trees(args.n),
    }
    .map_err(CliError::invalid)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if args.with_spectrum {
        let _ = writeln!(out, "graph6,diameter,eps1,eps_n");
    }
    for g in stream {
        let code = graph6::encode(&g)?;
        let written = if args.with_spectrum {
            let em = eccentricity_matrix(&g);
            let spec = ecc_spectra::eigenvalues_symmetric::<f64>(&em).map_err(CliError::invalid)?;
            writeln!(
                out,
                "{code},{},{},{}",
                g.tree_diameter(),
                round_sig(spec.largest().unwrap_or(0.0)),
                round_sig(spec.least().unwrap_or(0.0))
            )
        } else {
            writeln!(out, "{code}")
        };
        if written.is_err() {
            // closed pipe
            break;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn require(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Invalid(format!("this check needs --{flag}")))
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let opts = VerifyOptions {
        jobs: match args.jobs {
            Some(0) => return Err(CliError::Invalid("--jobs must be at least 1".into())),
            Some(j) => j,
            None => VerifyOptions::default().jobs,
        },
        seed: args.seed,
    };
    let reports: Vec<VerificationReport> = match args.check {
        Check::Bounds => vec![verify::verify_basic_bounds(args.n_max, &opts)],
        Check::Diam3Max => vec![verify::verify_diam3_max(require(args.n, "n")?, &opts)],
        Check::OddDiamMax => vec![verify::verify_odd_diam_max(
            require(args.n, "n")?,
            require(args.d, "d")?,
            &opts,
        )],
        Check::LeastInterval => vec![verify::verify_least_interval(args.n_max, &opts)],
        Check::Transforms => vec![verify::verify_transforms(
            require(args.n, "n")?,
            require(args.d, "d")?,
            &opts,
        )],
        Check::ClosedForms => vec![Ok(verify::verify_closed_forms(&opts))],
        Check::Interlacing => vec![verify::verify_interlacing(args.samples, &opts)],
        Check::All => match verify::verify_all(args.n_max, args.d_max, args.samples, &opts) {
            Ok(all) => all.into_iter().map(Ok).collect(),
            Err(e) => vec![Err(e)],
        },
    }
    .into_iter()
    .collect::<Result<_, _>>()
    .map_err(CliError::invalid)?;

    let lines: Vec<String> = reports
        .iter()
        .map(|r| r.to_json_line(args.timings))
        .collect();
    for line in &lines {
        println!("{line}");
    }
    if let Some(path) = &args.output {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
        for line in &lines {
            writeln!(file, "{line}")
                .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
        }
    }
    if reports.iter().all(VerificationReport::is_ok) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_FALSIFIED))
    }
}

fn formula(which: &FormulaCommand) -> Result<ExitCode, CliError> {
    let out: Value = match *which {
        FormulaCommand::Fa { n, a } => {
            let f = closed_forms::f_a_quartic(n, a).map_err(CliError::invalid)?;
            let roots: Vec<f64> = f.real_roots();
            json!({
                "n": n, "a": a, "c2": f.c2, "c0": f.c0,
                "roots": rounded(&roots),
                "largest_root": roots.first().copied().map(round_sig),
            })
        }
        FormulaCommand::Gamma { d } => {
            json!({ "d": d, "gamma": closed_forms::gamma_d(d).map_err(CliError::invalid)? })
        }
        FormulaCommand::Rho2 { n, d, a, b } => {
            let data =
                closed_forms::rho_squared_broom::<f64>(n, d, a, b).map_err(CliError::invalid)?;
            json!({
                "n": n, "d": d, "a": a, "b": b,
                "gamma": data.gamma, "x": data.x, "base": data.base,
                "delta": data.delta.to_string(),
                "rho_squared": round_sig(data.rho_squared),
                "rho": round_sig(data.rho()),
            })
        }
        FormulaCommand::Hpoly { p, q } => {
            let poly = closed_forms::h_eps_poly(p, q).map_err(CliError::invalid)?;
            let [_, b, c] = poly.main_quadratic;
            let roots: Vec<f64> = poly.roots();
            json!({
                "p": p, "q": q,
                "factored": format!(
                    "x^{} * (x^2 + 4x - 9)^{} * (x^2 {} {}x {} {})",
                    poly.zero_multiplicity,
                    poly.repeated_multiplicity,
                    if b < 0 { '-' } else { '+' }, b.abs(),
                    if c < 0 { '-' } else { '+' }, c.abs(),
                ),
                "coefficients": poly.expand().iter().map(i128::to_string).collect::<Vec<_>>(),
                "roots": rounded(&roots),
            })
        }
        FormulaCommand::Hleast { p, q } => {
            let v: f64 = closed_forms::h_least_eigenvalue(p, q).map_err(CliError::invalid)?;
            json!({ "p": p, "q": q, "least": round_sig(v) })
        }
        FormulaCommand::Hcond { p, q } => {
            let holds = closed_forms::h_equality_condition(p, q).map_err(CliError::invalid)?;
            json!({ "p": p, "q": q, "attains_lower_bound": holds })
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

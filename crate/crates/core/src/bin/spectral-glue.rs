//! Command-line front end. Results go to standard output as one document;
//! diagnostics go to standard error.
//!
//! Exit codes: 0 success, 1 failed self-check, 2 unreadable or malformed
//! input, 3 invalid graph or gluing, 4 `--verify` mismatch, 5 size limit.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spectral_glue::charpoly::{charpoly, minor_charpoly};
use spectral_glue::checks::{run_all, DEFAULT_SEED};
use spectral_glue::gluing::{canonical_interface_layout, glue_bridge, glue_interface};
use spectral_glue::io::{self, DocumentError, GlueSpec};
use spectral_glue::laplacian::{even_laplacian, odd_laplacian};
use spectral_glue::matrix_gluing::{
    even_laplacian_bridge_glued, even_laplacian_interface_glued, odd_laplacian_bridge_glued,
    odd_laplacian_interface_glued,
};
use spectral_glue::quantum::{evolve, EvolutionParams, WaveFunction};
use spectral_glue::spectral::{cheeger_constant, eigenvalues_sym, even_spectrum, fiedler_value, spanning_tree_count};
use spectral_glue::spectral_gluing::{multi_bridge_charpoly, vertex_interface_charpoly};
use spectral_glue::{Error, IntMatrix, IntPoly, OrientedGraph};

#[derive(Parser)]
#[command(name = "spectral-glue", version, about = "Laplacians and spectra of glued graphs")]
struct Cli {
    /// Relative tolerance of the eigenvalue solver.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph,
    Even,
    Odd,
    Charpoly,
    Spectrum,
}

#[derive(Subcommand)]
enum Command {
    /// Print the even (vertex) or odd (edge) Laplacian of a graph.
    Laplacian {
        graph: PathBuf,
        #[arg(value_enum)]
        which: Which,
    },
    /// Glue two graphs and print the result.
    Glue {
        graph1: PathBuf,
        graph2: PathBuf,
        glue: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Graph)]
        emit: Emit,
        /// Also compute the result directly from the glued graph and
        /// require equality.
        #[arg(long)]
        verify: bool,
    },
    /// Ascending eigenvalues of the even Laplacian.
    Spectrum {
        graph: PathBuf,
        /// Use the odd Laplacian instead.
        #[arg(long)]
        odd: bool,
    },
    /// Smallest nonzero even-Laplacian eigenvalue.
    Fiedler { graph: PathBuf },
    /// Number of spanning trees.
    Trees { graph: PathBuf },
    /// Cheeger constant by exhaustive search (at most 20 vertices).
    Cheeger { graph: PathBuf },
    /// Evolve a wave function under the free-particle propagator.
    Evolve {
        graph: PathBuf,
        psi: PathBuf,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        coeff: f64,
        #[arg(long, allow_hyphen_values = true)]
        dt: f64,
    },
    /// Run the built-in verification suite.
    Check,
}

enum Failure {
    Parse(String),
    Invalid(String),
    Mismatch(String),
    TooLarge(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Invalid(_) => 3,
            Failure::Mismatch(_) => 4,
            Failure::TooLarge(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Invalid(m) | Failure::Mismatch(m) | Failure::TooLarge(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Parse(m) => Failure::Parse(m),
            DocumentError::Invalid(e) => e.into(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<OrientedGraph, Failure> {
    io::parse_graph(&read(path)?).map_err(|e| match Failure::from(e) {
        Failure::Parse(m) => Failure::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// What a command prints: a JSON document plus its plain rendering.
struct Output {
    json: Value,
    plain: String,
}

fn matrix_out(m: &IntMatrix) -> Output {
    Output { json: io::matrix_to_json(m), plain: io::matrix_plain(m) }
}

fn poly_out(p: &IntPoly) -> Output {
    Output { json: io::poly_to_json(p), plain: io::poly_plain(p) }
}

fn verify<T: PartialEq>(enabled: bool, got: &T, direct: impl FnOnce() -> Result<T, Error>, what: &str) -> Result<(), Failure> {
    if enabled && *got != direct()? {
        return Err(Failure::Mismatch(format!("{what} from the gluing formulas differs from the direct computation")));
    }
    Ok(())
}

fn glue(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    spec: &GlueSpec,
    emit: Emit,
    check: bool,
    tol: f64,
) -> Result<Output, Failure> {
    let glued = match spec {
        GlueSpec::Interface(s) => glue_interface(g1, g2, s)?,
        GlueSpec::Bridge(b) => glue_bridge(g1, g2, b)?,
    }
    .graph;
    let assembled_even = || -> Result<IntMatrix, Error> {
        match spec {
            GlueSpec::Interface(s) => {
                let c = canonical_interface_layout(g1, g2, s)?;
                even_laplacian_interface_glued(&even_laplacian(&c.g1), &even_laplacian(&c.g2), c.q())
            }
            GlueSpec::Bridge(b) => even_laplacian_bridge_glued(&even_laplacian(g1), &even_laplacian(g2), b),
        }
    };
    Ok(match emit {
        Emit::Graph => Output { json: io::graph_to_json(&glued, None), plain: io::graph_plain(&glued) },
        Emit::Even => {
            let m = assembled_even()?;
            verify(check, &m, || Ok(even_laplacian(&glued)), "even Laplacian")?;
            matrix_out(&m)
        }
        Emit::Odd => {
            let m = match spec {
                GlueSpec::Interface(s) => odd_laplacian_interface_glued(g1, g2, s)?,
                GlueSpec::Bridge(b) => odd_laplacian_bridge_glued(g1, g2, b)?,
            };
            verify(check, &m, || Ok(odd_laplacian(&glued)), "odd Laplacian")?;
            matrix_out(&m)
        }
        Emit::Charpoly => {
            let p = match spec {
                GlueSpec::Bridge(b) => multi_bridge_charpoly(g1, g2, b)?,
                GlueSpec::Interface(s) if s.n_vertices() == 1 => {
                    let (l1, l2) = (even_laplacian(g1), even_laplacian(g2));
                    vertex_interface_charpoly(
                        &charpoly(&l1)?,
                        &minor_charpoly(&l1, s.vertices_1[0])?,
                        &charpoly(&l2)?,
                        &minor_charpoly(&l2, s.vertices_2[0])?,
                    )
                }
                GlueSpec::Interface(s) if s.n_vertices() == 0 => {
                    charpoly(&even_laplacian(g1))? * charpoly(&even_laplacian(g2))?
                }
                // no compact formula for larger interfaces
                GlueSpec::Interface(_) => charpoly(&even_laplacian(&glued))?,
            };
            verify(check, &p, || charpoly(&even_laplacian(&glued)), "characteristic polynomial")?;
            poly_out(&p)
        }
        Emit::Spectrum => {
            let m = assembled_even()?;
            verify(check, &m, || Ok(even_laplacian(&glued)), "even Laplacian")?;
            let mut s = eigenvalues_sym(&m, tol)?;
            s.zero_count = spectral_glue::spectral::betti_numbers(&glued).0;
            Output { json: io::spectrum_to_json(&s), plain: io::spectrum_plain(&s) }
        }
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Laplacian { graph, which } => {
            let g = load_graph(graph)?;
            Ok(matrix_out(&match which {
                Which::Even => even_laplacian(&g),
                Which::Odd => odd_laplacian(&g),
            }))
        }
        Command::Glue { graph1, graph2, glue: glue_path, emit, verify } => {
            let g1 = load_graph(graph1)?;
            let g2 = load_graph(graph2)?;
            let spec = io::parse_glue(&read(glue_path)?)?.resolve(&g1, &g2)?;
            glue(&g1, &g2, &spec, *emit, *verify, cli.tol)
        }
        Command::Spectrum { graph, odd } => {
            let g = load_graph(graph)?;
            let s = if *odd {
                spectral_glue::spectral::odd_spectrum(&g, cli.tol)?
            } else {
                even_spectrum(&g, cli.tol)?
            };
            Ok(Output { json: io::spectrum_to_json(&s), plain: io::spectrum_plain(&s) })
        }
        Command::Fiedler { graph } => {
            let f = fiedler_value(&load_graph(graph)?)?;
            Ok(Output { json: json!({ "fiedler": io::real_to_json(f) }), plain: format!("{}\n", io::format_real(f)) })
        }
        Command::Trees { graph } => {
            let t = spanning_tree_count(&load_graph(graph)?)?;
            let n = serde_json::Number::from_string_unchecked(t.to_string());
            Ok(Output { json: json!({ "spanning_trees": n }), plain: format!("{t}\n") })
        }
        Command::Cheeger { graph } => {
            let h = cheeger_constant(&load_graph(graph)?)?;
            let num = serde_json::Number::from_string_unchecked(h.numer().to_string());
            let den = serde_json::Number::from_string_unchecked(h.denom().to_string());
            Ok(Output {
                json: json!({ "cheeger": h.to_string(), "numerator": num, "denominator": den }),
                plain: format!("{h}\n"),
            })
        }
        Command::Evolve { graph, psi, coeff, dt } => {
            let g = load_graph(graph)?;
            let psi0: WaveFunction = io::parse_wave(&read(psi)?)?;
            let out = evolve(&psi0, &g, EvolutionParams::new(*coeff, *dt))?;
            let mut doc = io::wave_to_json(&out);
            doc["input_norm"] = io::real_to_json(psi0.norm());
            Ok(Output { json: doc, plain: io::wave_plain(&out) })
        }
        Command::Check => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Check = cli.command {
        let outcomes = run_all(cli.seed.unwrap_or(DEFAULT_SEED));
        for o in &outcomes {
            println!("{o}");
        }
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        println!("{} of {} checks passed", outcomes.len() - failed, outcomes.len());
        return if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) };
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("documents serialize")),
                Format::Plain => print!("{}", out.plain),
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("spectral-glue: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

//! Command-line interface: spectra, characteristic polynomials, rank and
//! radius classification, switching equivalence, orientation enumeration,
//! cospectral search, and the verification suites.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hermix::classify;
use hermix::core::{parse_graph, serialize_graph, MixedGraph};
use hermix::harness;
use hermix::nmatrix;
use hermix::switching;

#[derive(Parser)]
#[command(name = "hermix", about = "Exact spectra of mixed graphs over the sixth roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharpolyMethod {
    Exact,
    Subgraph,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Numeric eigenvalues plus the exact characteristic polynomial.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Exact characteristic polynomial by the chosen route(s).
    Charpoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CharpolyMethod::Exact)]
        method: CharpolyMethod,
    },
    /// Exact rank and nullity with the rank-2/rank-3 structure tags.
    Rank { file: PathBuf },
    /// Exact spectral-radius verdict at √2, √3 or 2 with the catalog tag.
    Classify {
        file: PathBuf,
        #[arg(long)]
        alpha2: u32,
    },
    /// Decide switching equivalence of two mixed graphs.
    SwitchEquiv { file1: PathBuf, file2: PathBuf },
    /// Stream orientations of an underlying graph (or of every connected
    /// graph up to --all-n) in the text format.
    Enumerate {
        #[arg(long, conflicts_with = "all_n")]
        underlying: Option<PathBuf>,
        #[arg(long)]
        all_n: Option<usize>,
        #[arg(long)]
        dedupe: Option<String>,
    },
    /// Group input graphs by exact characteristic polynomial and switching
    /// class.
    Cospectral {
        #[arg(long, required = true)]
        inputs: String,
    },
    /// Run a named verification suite; exits nonzero on failure.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
    },
}

fn load(path: &Path) -> hermix::Result<MixedGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| hermix::Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

fn run() -> hermix::Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum { file, tol } => {
            let m = load(&file)?;
            let spec = nmatrix::eigenvalues(&nmatrix::build_nmatrix(&m), tol)?;
            let rendered: Vec<String> =
                spec.eigenvalues.iter().map(|x| format!("{x:.12}")).collect();
            println!("spectrum: {}", rendered.join(" "));
            if !spec.eigenvalues.is_empty() {
                println!("radius: {:.12}", nmatrix::spectral_radius(&spec)?);
            }
            let p = nmatrix::charpoly_of(&m)?;
            println!("{}", p.machine_line());
            println!("polynomial: {}", p.pretty());
        }
        Command::Charpoly { file, method } => {
            let m = load(&file)?;
            match method {
                CharpolyMethod::Exact => {
                    let p = nmatrix::charpoly_of(&m)?;
                    println!("{}", p.machine_line());
                    println!("polynomial: {}", p.pretty());
                }
                CharpolyMethod::Subgraph => {
                    let p = nmatrix::charpoly_subgraphs(&m)?;
                    println!("{}", p.machine_line());
                    println!("polynomial: {}", p.pretty());
                }
                CharpolyMethod::Both => {
                    let a = nmatrix::charpoly_of(&m)?;
                    let b = nmatrix::charpoly_subgraphs(&m)?;
                    if a != b {
                        return Err(hermix::Error::Arithmetic(
                            "determinant and subgraph routes disagree".into(),
                        ));
                    }
                    println!("{}", a.machine_line());
                    println!("polynomial: {}", a.pretty());
                    println!("routes: agree");
                }
            }
        }
        Command::Rank { file } => {
            let m = load(&file)?;
            let r = classify::rank_exact(&m);
            let mut tag = String::new();
            if let Some(r2) = classify::rank2_recognize(&m) {
                tag = format!(" tag=K_{{{},{}}}+{}K1", r2.a, r2.b, r2.isolated);
            } else if m.is_connected() {
                if let Some(t3) = classify::rank3_recognize(&m)? {
                    tag = format!(" tag={t3}");
                }
            }
            println!("rank: {}{tag}", r.rank);
            println!("nullity: {}", r.nullity);
        }
        Command::Classify { file, alpha2 } => {
            let m = load(&file)?;
            let class = classify::small_radius_classify(&m, alpha2)?;
            println!("{}", class.render());
            let bound = classify::delta_bound_report(&m)?;
            if let Some(part) = bound.extremal {
                println!("{}", part.render());
            }
        }
        Command::SwitchEquiv { file1, file2 } => {
            let m1 = load(&file1)?;
            let m2 = load(&file2)?;
            match switching::switching_equivalent(&m1, &m2) {
                switching::Equivalence::Equivalent {
                    theta,
                    used_converse,
                } => {
                    println!("equivalent: yes");
                    println!("{}", theta.render(used_converse));
                }
                switching::Equivalence::UnderlyingMismatch => {
                    println!("equivalent: no reason=underlying-mismatch");
                }
                switching::Equivalence::NotEquivalent => {
                    println!("equivalent: no reason=cycle-weight-obstruction");
                }
            }
        }
        Command::Enumerate {
            underlying,
            all_n,
            dedupe,
        } => {
            let dedupe_on = match dedupe.as_deref() {
                None => false,
                Some("switching") => true,
                Some(other) => {
                    return Err(hermix::Error::Usage(format!(
                        "unknown dedupe mode {other:?}"
                    )))
                }
            };
            let graphs: Vec<MixedGraph> = match (underlying, all_n) {
                (Some(path), None) => {
                    let g = load(&path)?.underlying();
                    if dedupe_on {
                        harness::enumerate_orientations_deduped(&g)?
                    } else {
                        harness::enumerate_orientations(&g)?.collect()
                    }
                }
                (None, Some(n)) => {
                    let spec = harness::SweepSpec {
                        n_max: n,
                        dedupe: if dedupe_on {
                            harness::Dedupe::IsomorphismSwitching
                        } else {
                            harness::Dedupe::None
                        },
                    };
                    spec.run()?
                }
                _ => {
                    return Err(hermix::Error::Usage(
                        "pass exactly one of --underlying or --all-n".into(),
                    ))
                }
            };
            for (index, m) in graphs.iter().enumerate() {
                println!("# graph {index}");
                print!("{}", serialize_graph(m));
            }
        }
        Command::Cospectral { inputs } => {
            let mut files: Vec<PathBuf> = Vec::new();
            let path = Path::new(&inputs);
            if path.is_dir() {
                let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
                    .map_err(|e| hermix::Error::Usage(format!("cannot list {inputs}: {e}")))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.is_file())
                    .collect();
                entries.sort();
                files.extend(entries);
            } else {
                files.extend(inputs.split(',').map(PathBuf::from));
            }
            let mut graphs = Vec::new();
            for f in &files {
                graphs.push(load(f)?);
            }
            let report = harness::find_cospectral(&graphs)?;
            for (i, f) in files.iter().enumerate() {
                println!("# input {i}: {}", f.display());
            }
            print!("{}", report.render());
        }
        Command::Verify { suite, nmax } => {
            let report = harness::verify_suite(&suite, nmax)?;
            print!("{}", report.render());
            return Ok(report.pass);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

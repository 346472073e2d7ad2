use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use complex2::collapse::collapse_to_core;
use complex2::density::density_report;
use complex2::format::{parse_complex, write_complex, write_with_skeleton};
use complex2::homology::homology_profile;
use complex2::patterns::{count_embeddings, count_immersions, find_embedding, find_immersion, VertexMap};
use complex2::random::{sample_complex, SampleSpec};
use complex2::subdivision::center_subdivide;
use complex2::{catalog, Complex2};
use complex2_lab::config::PartialConfig;
use complex2_lab::experiment::{run_experiment, write_output};
use complex2_lab::{LabError, Result};

#[derive(Parser)]
#[command(name = "cx2lab", version, about = "Random 2-complexes: sampling, invariants and experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a random complex and print it in the complex file format.
    Sample {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a catalog complex, e.g. `catalog lxy 5 4`; `--list` shows the fixtures.
    Catalog {
        name: Option<String>,
        params: Vec<u32>,
        #[arg(long)]
        list: bool,
    },
    /// mu, mu~ and balancedness as one CSV row.
    Density {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        subdivide: u32,
    },
    /// Collapse to a graph or a closed core.
    Collapse { file: PathBuf },
    /// Search for an immersion or embedding of a pattern, or count embeddings.
    Embed {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Embedding)]
        mode: Mode,
        /// Center-subdivide the pattern this many times first.
        #[arg(long, default_value_t = 0)]
        subdivide: u32,
    },
    /// Betti numbers over Q and Z/2 and the torsion of H1.
    Homology { file: PathBuf },
    /// Run a Monte Carlo experiment from a config file and/or flags.
    Experiment(ExperimentArgs),
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    Immersion,
    Embedding,
    Count,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Flat `key = value` config; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    n: Option<String>,
    /// Grid of c values with p = c/n, comma separated.
    #[arg(long)]
    c: Option<String>,
    /// Grid of exponents with p = n^-alpha.
    #[arg(long)]
    alpha: Option<String>,
    /// Grid of probabilities.
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    trials: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// Catalog pattern such as `tetrahedron` or `lxy 5 4`.
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

fn read(path: &Path) -> Result<Complex2> {
    let text = fs::read_to_string(path).map_err(|source| LabError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_complex(&text)?)
}

fn stdout_err(source: io::Error) -> LabError {
    LabError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn print_map(out: &mut impl Write, m: Option<VertexMap>) -> io::Result<()> {
    match m {
        None => writeln!(out, "none"),
        Some(m) => {
            writeln!(out, "found")?;
            for (v, w) in m.assignment {
                writeln!(out, "{} -> {}", v.label(), w.label())?;
            }
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Sample { n, p, seed } => {
            let s = sample_complex(&SampleSpec::new(n, p, seed)?);
            write_with_skeleton(&mut out, &s, n).map_err(stdout_err)?;
        }
        Command::Catalog { list: true, .. } => {
            for (name, _) in catalog::fixtures() {
                writeln!(out, "{name}").map_err(stdout_err)?;
            }
        }
        Command::Catalog { name, params, .. } => {
            let name = name.ok_or_else(|| LabError::Invalid("catalog needs a name or --list".into()))?;
            let s = catalog::by_name(&name, &params)?;
            write_complex(&mut out, &s).map_err(stdout_err)?;
        }
        Command::Density { file, subdivide } => {
            let s = center_subdivide(&read(&file)?, subdivide);
            let r = density_report::<i64>(&s)?;
            let row = [
                s.num_vertices().to_string(),
                s.num_edges().to_string(),
                s.num_faces().to_string(),
                r.mu.to_string(),
                r.mu_tilde.to_string(),
                r.balanced.to_string(),
                r.sign.as_i8().to_string(),
                r.witness_faces.len().to_string(),
            ];
            writeln!(out, "v,e,f,mu,mu_tilde,balanced,sign,witness_faces").map_err(stdout_err)?;
            writeln!(out, "{}", row.join(",")).map_err(stdout_err)?;
        }
        Command::Collapse { file } => {
            let s = read(&file)?;
            let r = collapse_to_core(&s);
            writeln!(out, "kind,steps,faces_before,faces_after,chi,chi_preserved").map_err(stdout_err)?;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.kind.as_str(),
                r.steps,
                s.num_faces(),
                r.core.num_faces(),
                s.euler_characteristic(),
                r.chi_per_step.iter().all(|&c| c == s.euler_characteristic())
            )
            .map_err(stdout_err)?;
        }
        Command::Embed {
            pattern,
            host,
            mode,
            subdivide,
        } => {
            let pat = center_subdivide(&read(&pattern)?, subdivide);
            let host = read(&host)?;
            if pat.num_faces() == 0 {
                return Err(complex2::Error::NoFaces.into());
            }
            match mode {
                Mode::Immersion => print_map(&mut out, find_immersion(&pat, &host)),
                Mode::Embedding => print_map(&mut out, find_embedding(&pat, &host)),
                Mode::Count => writeln!(
                    out,
                    "embeddings,immersions\n{},{}",
                    count_embeddings(&pat, &host),
                    count_immersions(&pat, &host)
                ),
            }
            .map_err(stdout_err)?;
        }
        Command::Homology { file } => {
            let s = read(&file)?;
            let h = homology_profile(&s)?;
            let torsion: Vec<String> = h.torsion_h1.iter().map(u64::to_string).collect();
            writeln!(out, "b0,b1,b2,b0_mod2,b1_mod2,b2_mod2,torsion_h1,chi").map_err(stdout_err)?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                h.betti[0],
                h.betti[1],
                h.betti[2],
                h.betti_mod2[0],
                h.betti_mod2[1],
                h.betti_mod2[2],
                torsion.join(" "),
                h.chi
            )
            .map_err(stdout_err)?;
        }
        Command::Experiment(args) => {
            let file = match &args.config {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|source| LabError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    PartialConfig::parse(&text)?
                }
                None => PartialConfig::default(),
            };
            let mut flags = PartialConfig::default();
            for (key, value) in [
                ("name", &args.name),
                ("n", &args.n),
                ("c", &args.c),
                ("alpha", &args.alpha),
                ("p", &args.p),
                ("trials", &args.trials),
                ("seed", &args.seed),
                ("pattern", &args.pattern),
                ("out", &args.out),
            ] {
                if let Some(v) = value {
                    flags.set(key, v).map_err(LabError::Invalid)?;
                }
            }
            let cfg = file.merge(flags).finish()?;
            let output = run_experiment(&cfg)?;
            if let Some(path) = &cfg.out {
                let summary = write_output(path, &output)?;
                eprintln!("wrote {} and {}", path.display(), summary.display());
            }
            let mut w = csv::Writer::from_writer(&mut out);
            for row in &output.summary {
                w.serialize(row)?;
            }
            w.flush().map_err(stdout_err)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}


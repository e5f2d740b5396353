use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hextile::analysis::{census, invariants, invariants_with, recognize, CapPolicy, CensusConfig, Recognition};
use hextile::duality::{dual_tiling, is_locally_c6};
use hextile::graph::{isomorphic, parse_graph, write_graph, Graph};
use hextile::grid_families::{build_grid, build_grid_unchecked, grid_dual, identify_grid, is_locally_grid, GridFamilyId};
use hextile::hex_families::{build_hex, HexFamilyId};
use hextile::minors::{c6_minor, matching_plan, minor_target, plan_tiling, tiling_minor};
use hextile::surface::certify_tiling;

#[derive(Parser)]
#[command(name = "hextile", version, about = "Hexagonal tilings, locally C6 graphs and locally grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph of a family spec such as `Hr:5,4,2` or `K0:6,5`.
    Gen {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a graph file against one of the three classes.
    Verify {
        file: PathBuf,
        #[arg(long = "as", value_enum)]
        class: Class,
    },
    /// Report the invariants of a hexagonal tiling.
    Invariants {
        input: String,
        /// Fixed length bound for the essential-cycle search.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Dual of a hexagonal tiling or of a locally grid graph.
    Dual {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Contract a family member to a locally grid graph and name the result.
    Minor {
        spec: String,
        /// Work on the dual side instead.
        #[arg(long)]
        dual_side: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Name the family member a graph file is isomorphic to.
    Recognize { file: PathBuf },
    /// Test two graph files for isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// Sweep every family member up to a vertex count.
    Census {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Hextile,
    Locgrid,
    Locc6,
}

enum Failure {
    Negative(String),
    Input(String),
    Internal(String),
}

type Outcome = Result<String, Failure>;

fn input_err(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A file path if one exists, else a hex or grid family spec.
fn load(input: &str) -> Result<Graph, Failure> {
    let path = Path::new(input);
    if path.exists() {
        return read_graph(path);
    }
    if let Ok(id) = input.parse::<HexFamilyId>() {
        return build_hex(&id).map(|t| t.graph().clone()).map_err(input_err);
    }
    match input.parse::<GridFamilyId>() {
        Ok(id) => build_grid(&id).map(|g| g.graph).map_err(input_err),
        Err(_) => Err(Failure::Input(format!("`{input}` is neither a file nor a family spec"))),
    }
}

fn emit(text: String, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Gen { spec, output } => {
            if !spec.starts_with('H') && spec.parse::<GridFamilyId>().is_err() {
                return Err(Failure::Input(format!("malformed family spec `{spec}`")));
            }
            emit(write_graph(&load(&spec)?), output.as_deref())
        }
        Command::Verify { file, class } => {
            let g = read_graph(&file)?;
            let verdict = match class {
                Class::Hextile => certify_tiling(&g).map(|_| ()).map_err(|e| e.to_string()),
                Class::Locgrid => is_locally_grid(&g).map_err(|e| e.to_string()),
                Class::Locc6 => is_locally_c6(&g).map_err(|e| e.to_string()),
            };
            verdict.map(|()| "accepted\n".to_string()).map_err(|why| Failure::Negative(format!("rejected: {why}")))
        }
        Command::Invariants { input, cap } => {
            let t = certify_tiling(&load(&input)?)
                .map_err(|e| Failure::Negative(format!("not a hexagonal tiling: {e}")))?;
            let report = match cap {
                Some(c) => invariants_with(&t, CapPolicy::Fixed(c)),
                None => invariants(&t),
            };
            Ok(report.to_key_values() + "\n")
        }
        Command::Dual { input, output } => {
            let g = load(&input)?;
            let dual = match certify_tiling(&g) {
                Ok(t) => dual_tiling(&t).graph,
                Err(hex) => match is_locally_grid(&g) {
                    Ok(()) => grid_dual(&g).map_err(|e| Failure::Internal(e.to_string()))?.graph,
                    Err(grid) => {
                        return Err(Failure::Negative(format!(
                            "neither a hexagonal tiling ({hex}) nor locally grid ({grid})"
                        )))
                    }
                },
            };
            emit(write_graph(&dual), output.as_deref())
        }
        Command::Minor { spec, dual_side, output } => minor(&spec, dual_side, output.as_deref()),
        Command::Recognize { file } => match recognize(&read_graph(&file)?) {
            Recognition::Member { id, .. } => Ok(format!("{id}\n")),
            Recognition::NotATiling(e) => Err(Failure::Negative(format!("not a hexagonal tiling: {e}"))),
            Recognition::Unmatched => Err(Failure::Internal("tiling matches no family member".into())),
        },
        Command::Iso { a, b } => {
            let (g, h) = (read_graph(&a)?, read_graph(&b)?);
            let map = isomorphic(&g, &h).ok_or_else(|| Failure::Negative("not isomorphic".into()))?;
            let mut out = String::from("isomorphic\n");
            for (v, w) in map.iter().enumerate() {
                writeln!(out, "{v} -> {w}").unwrap();
            }
            Ok(out)
        }
        Command::Census { max_n, json } => {
            let c = census(CensusConfig::new(max_n));
            if let Some(path) = json {
                fs::write(&path, c.to_json()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(c.to_text())
        }
    }
}

fn minor(spec: &str, dual_side: bool, output: Option<&Path>) -> Outcome {
    let id: HexFamilyId = spec.parse().map_err(input_err)?;
    let target = minor_target(&id).map_err(input_err)?;
    let t = plan_tiling(&id).map_err(input_err)?;
    let plan = matching_plan(&id).map_err(|e| Failure::Internal(e.to_string()))?;
    let (g, want) = if dual_side {
        (c6_minor(&dual_tiling(&t), &plan).map_err(|e| Failure::Internal(e.to_string()))?, target.dual)
    } else {
        (tiling_minor(&t, &plan).map_err(|e| Failure::Internal(e.to_string()))?.graph, target.primal)
    };
    let name = match identify_grid(&g) {
        Some(found) => found.to_string(),
        None if isomorphic(&g, &build_grid_unchecked(&want).graph).is_some() => {
            let why = is_locally_grid(&g).err().map_or("outside the parameter ranges".to_string(), |e| e.to_string());
            format!("{want}\n# matches the recipe but is not a valid locally grid member: {why}")
        }
        None => return Err(Failure::Internal(format!("minor of {id} matches no locally grid family"))),
    };
    if let Some(path) = output {
        emit(write_graph(&g), Some(path))?;
    }
    Ok(format!("{name}\n"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match std::panic::catch_unwind(|| run(cli.command)) {
        Ok(Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err(Failure::Negative(msg))) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => ExitCode::from(3),
    }
}

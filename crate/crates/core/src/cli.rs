//! The `fillperm` command line.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 a semantic failure
//! (an invalid permutation, an infeasible gluing), 3 a search resource cap.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{error::ErrorKind, ArgGroup, Args, Parser, Subcommand};

use crate::moves::{extend_to, MoveError};
use crate::perm::Permutation;
use crate::search::{enumerate, SearchError, SearchQuery, DEFAULT_MAX_NODES};
use crate::svg::render_svg;
use crate::tables::{cross_validate, min_intersection, TableError};
use crate::verifier::{glue, validate, FillingInstance, VerifyError};

#[derive(Parser, Debug)]
#[command(name = "fillperm", version)]
#[command(about = "Verify, glue, extend and enumerate filling permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every condition for a filling permutation on S_{g,p}
    Verify {
        #[command(flatten)]
        sigma: SigmaInput,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        punctures: usize,
    },
    /// Glue the polygons and print faces, vertices and genus
    Glue {
        #[command(flatten)]
        sigma: SigmaInput,
        #[arg(long, default_value_t = 0)]
        punctures: usize,
    },
    /// Enumerate all filling permutations for (g, p, n)
    Search {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        punctures: usize,
        #[arg(long)]
        n: usize,
        /// Print one canonical representative per symmetry class
        #[arg(long)]
        dedup: bool,
        /// Use brute force (degree 8 at most)
        #[arg(long)]
        naive: bool,
        /// Stop after K raw solutions
        #[arg(long, value_name = "K")]
        limit: Option<usize>,
        /// Fix the symmetry orbit of sigma(1) during the search
        #[arg(long)]
        break_symmetry: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: u64,
        #[arg(long, default_value_t = 600)]
        max_seconds: u64,
    },
    /// Apply the double-bigon move until the target puncture count
    Extend {
        #[command(flatten)]
        sigma: SigmaInput,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        punctures: usize,
        #[arg(long = "target-p")]
        target_p: usize,
    },
    /// Minimal intersection numbers of filling pairs
    #[command(group(ArgGroup::new("single").args(["genus"]).requires("punctures")))]
    Table {
        #[arg(long, conflicts_with_all = ["max_genus", "max_punctures"])]
        genus: Option<usize>,
        #[arg(long, requires = "genus")]
        punctures: Option<usize>,
        #[arg(long, requires = "max_punctures")]
        max_genus: Option<usize>,
        #[arg(long, requires = "max_genus")]
        max_punctures: Option<usize>,
        /// Also search n = 1..=N and compare with the table value
        #[arg(long, value_name = "N", requires = "genus")]
        cross_validate: Option<usize>,
    },
    /// Draw the polygon decomposition as SVG
    ExportSvg {
        #[command(flatten)]
        sigma: SigmaInput,
        #[arg(long, default_value_t = 0)]
        punctures: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct SigmaInput {
    /// Permutation in cycle notation, e.g. "(1,2,3,4)"
    #[arg(
        long,
        required_unless_present = "sigma_file",
        conflicts_with = "sigma_file"
    )]
    sigma: Option<String>,
    /// Read the permutation from a file ("-" for standard input)
    #[arg(long, value_name = "PATH")]
    sigma_file: Option<PathBuf>,
    /// Intersection number; the degree is 4n (inferred when omitted)
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Semantic(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Semantic(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Semantic(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Degree(_) => Failure::Usage(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

impl From<MoveError> for Failure {
    fn from(e: MoveError) -> Self {
        match e {
            MoveError::TargetParity { .. } | MoveError::NoSuchSite(_) => {
                Failure::Usage(e.to_string())
            }
            MoveError::Verify(v) => v.into(),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

impl From<TableError> for Failure {
    fn from(e: TableError) -> Self {
        match e {
            TableError::Search(s) => s.into(),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

impl SigmaInput {
    fn read(&self) -> Result<Permutation, Failure> {
        let text = match (&self.sigma, &self.sigma_file) {
            (Some(s), _) => s.clone(),
            (None, Some(path)) if path.as_os_str() == "-" => {
                let mut buf = String::new();
                io::stdin().read_to_string(&mut buf)?;
                buf
            }
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
            (None, None) => return Err(Failure::Usage("no permutation given".into())),
        };
        Permutation::parse(text.trim(), self.n.map(|n| 4 * n))
            .map_err(|e| Failure::Usage(e.to_string()))
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if informational {
                let _ = write!(out, "{text}");
                return 0;
            }
            let _ = write!(err, "{text}");
            return 1;
        }
    };
    let mut buf = Vec::new();
    let result = execute(cli.command, &mut buf);
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(command: Command, out: &mut Vec<u8>) -> Result<i32, Failure> {
    match command {
        Command::Verify {
            sigma,
            genus,
            punctures,
        } => {
            let inst = FillingInstance::new(sigma.read()?, genus, punctures)?;
            let report = validate(&inst);
            writeln!(out, "{report}")?;
            Ok(if report.is_valid() { 0 } else { 2 })
        }
        Command::Glue { sigma, punctures } => {
            let surface = glue(&sigma.read()?, punctures)?;
            write!(out, "{}", surface.face_text())?;
            writeln!(out, "{}", surface.summary_line())?;
            Ok(0)
        }
        Command::Search {
            genus,
            punctures,
            n,
            dedup,
            naive,
            limit,
            break_symmetry,
            max_nodes,
            max_seconds,
        } => {
            let query = SearchQuery::new(genus, punctures, n)
                .dedup(dedup)
                .naive(naive)
                .limit(limit)
                .break_symmetry(break_symmetry)
                .max_nodes(max_nodes)
                .max_time(Duration::from_secs(max_seconds));
            let result = enumerate(&query)?;
            for s in &result.solutions {
                writeln!(out, "{s}")?;
            }
            writeln!(
                out,
                "count={} dedup={} nodes={}",
                result.raw_count, result.dedup_count, result.nodes_explored
            )?;
            Ok(0)
        }
        Command::Extend {
            sigma,
            genus,
            punctures,
            target_p,
        } => {
            let inst = FillingInstance::new(sigma.read()?, genus, punctures)?;
            let extended = extend_to(&inst, target_p)?;
            writeln!(out, "sigma={}", extended.sigma)?;
            writeln!(out, "{}", validate(&extended))?;
            Ok(0)
        }
        Command::Table {
            genus,
            punctures,
            max_genus,
            max_punctures,
            cross_validate: n_max,
        } => {
            let show = |g: usize, p: usize| match min_intersection(g, p) {
                Ok(v) => Ok(v.to_string()),
                Err(TableError::NoFillingPair { .. }) => Ok("none".to_string()),
                Err(e) => Err(Failure::from(e)),
            };
            match (genus, punctures, max_genus, max_punctures) {
                (Some(g), Some(p), _, _) => {
                    writeln!(out, "{}", show(g, p)?)?;
                    if let Some(n_max) = n_max {
                        let report = cross_validate(g, p, n_max)?;
                        writeln!(out, "{report}")?;
                        if !report.agrees() {
                            return Ok(2);
                        }
                    }
                }
                (None, None, Some(mg), Some(mp)) => {
                    write!(out, "g\\p")?;
                    for p in 0..=mp {
                        write!(out, "\t{p}")?;
                    }
                    writeln!(out)?;
                    for g in 0..=mg {
                        write!(out, "{g}")?;
                        for p in 0..=mp {
                            write!(out, "\t{}", show(g, p)?)?;
                        }
                        writeln!(out)?;
                    }
                }
                _ => {
                    return Err(Failure::Usage(
                        "give --genus and --punctures, or --max-genus and --max-punctures".into(),
                    ))
                }
            }
            Ok(0)
        }
        Command::ExportSvg {
            sigma,
            punctures,
            out: path,
        } => {
            let surface = glue(&sigma.read()?, punctures)?;
            fs::write(&path, render_svg(&surface))
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            writeln!(
                out,
                "wrote {} ({} faces)",
                path.display(),
                surface.face_count()
            )?;
            Ok(0)
        }
    }
}

mod input;
mod render;
mod reports;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lie_frattini_core::classify::{
    self, analyze, exhaustive_search, is_isomorphic, AnalyzeConfig, SearchConfig, DEFAULT_MAX_GL_ORDER,
    DEFAULT_MAX_TABLES, SCHEMA,
};
use lie_frattini_core::families::FamilySpec;
use lie_frattini_core::lattice::DEFAULT_MAX_SUBSPACES;
use lie_frattini_core::liecore::{AlgebraJson, AnyDraft, AnyValidation};
use lie_frattini_core::{AnyAlgebra, Field, FieldSpec, FiniteField, LatticeConfig, SubalgebraLattice};

use input::{finite, CliError, CliResult, Source};
use reports::{ClassifyReport, IsomorphismReport, LatticeReport, ValidateReport, Violation};

#[derive(Parser)]
#[command(name = "lie-frattini", version, about = "Subalgebra lattices and Frattini ideals of small Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[arg(long, default_value_t = DEFAULT_MAX_SUBSPACES, global = true)]
    max_subspaces: u64,

    #[arg(long, default_value_t = DEFAULT_MAX_TABLES, global = true)]
    max_tables: u64,

    #[arg(long, default_value_t = DEFAULT_MAX_GL_ORDER, global = true)]
    max_gl_order: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// One algebra: a file, a family name or inline JSON.
#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "family", "json"])))]
struct SourceArgs {
    /// Algebra JSON file.
    #[arg(long)]
    file: Option<PathBuf>,

    /// Named family, e.g. `jordan:alpha=1`, `heisenberg`, `sl2+abelian:n=1`.
    #[arg(long)]
    family: Option<String>,

    /// Inline algebra JSON.
    #[arg(long)]
    json: Option<String>,

    /// Field to work over. Rational tables are reduced, prime-field tables extended.
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldSpec>,
}

impl SourceArgs {
    fn source(&self) -> CliResult<Source> {
        if let Some(p) = &self.file {
            Ok(Source::File(p.clone()))
        } else if let Some(f) = &self.family {
            Ok(Source::Family(f.parse()?))
        } else {
            Ok(Source::Json(self.json.clone().unwrap_or_default()))
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity and report the first failing basis triple.
    Validate(SourceArgs),
    /// Series, lattice structure, Frattini ideal and every predicate.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Primes to reduce a rational table by, e.g. `3,7`.
        #[arg(long, value_delimiter = ',')]
        companion_primes: Vec<u32>,
    },
    /// Subalgebra lattice summary, or every node and cover edge with `--full`.
    Lattice {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        full: bool,
    },
    /// Frattini ideal, predicates and shape.
    Classify(SourceArgs),
    /// Every structure table of a given dimension over a finite field.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Print a family's algebra JSON.
    Family {
        spec: String,
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: FieldSpec,
    },
    /// Reduce an integer rational table modulo a prime.
    Reduce {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        prime: u32,
    },
    /// Search for an isomorphism. Each algebra is a file path, `family:<spec>` or inline JSON.
    Isomorphic {
        left: String,
        right: String,
        #[arg(long, value_parser = parse_field)]
        field: Option<FieldSpec>,
    },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: lie_frattini_core::Error| e.to_string())
}

struct Output {
    json: String,
    text: String,
}

fn output<T: Serialize>(report: &T, text: String) -> Output {
    let mut json = serde_json::to_string_pretty(report).expect("reports serialize");
    json.push('\n');
    Output { json, text }
}

fn note(notes: &[String]) {
    for n in notes {
        eprintln!("note: {n}");
    }
}

fn run(cli: &Cli) -> CliResult<Output> {
    let lattice_config = LatticeConfig {
        max_subspaces: cli.max_subspaces,
    };
    match &cli.command {
        Command::Validate(args) => {
            let source = args.source()?;
            if args.field.is_some() && !matches!(source, Source::Family(_)) {
                return Err(CliError::Usage("validate checks a table as written; --field applies only to --family".into()));
            }
            let draft = input::draft(&source, args.field.as_ref())?;
            let json: AlgebraJson = match &draft {
                AnyDraft::Rational(d) => d.to_json(),
                AnyDraft::Finite(d) => d.to_json(),
            };
            let violation = match draft.validate() {
                AnyValidation::Valid(_) => None,
                AnyValidation::Violation { triple, defect } => Some(Violation {
                    triple: [triple.0, triple.1, triple.2],
                    defect,
                }),
            };
            let report = ValidateReport {
                schema: SCHEMA,
                field: json.field.clone(),
                dim: json.dim,
                valid: violation.is_none(),
                violation,
            };
            let text = render::validate(&report, &json);
            Ok(output(&report, text))
        }
        Command::Analyze { source, companion_primes } => {
            let loaded = input::load(&source.source()?, source.field.as_ref())?;
            note(&loaded.notes);
            let config = AnalyzeConfig {
                lattice: lattice_config,
                companion_primes: companion_primes.clone(),
            };
            let report = analyze(&loaded.algebra, &config)?;
            let text = render::analysis(&report, &loaded.algebra.to_json());
            Ok(output(&report, text))
        }
        Command::Lattice { source, full } => {
            let loaded = input::load(&source.source()?, source.field.as_ref())?;
            note(&loaded.notes);
            let l = finite(loaded.algebra, "lattice")?;
            let lat = SubalgebraLattice::build(&l, lattice_config)?;
            let report = LatticeReport {
                schema: SCHEMA,
                lattice: lat.to_json(*full),
            };
            let text = render::lattice(&report.lattice, l.labels());
            Ok(output(&report, text))
        }
        Command::Classify(args) => {
            let loaded = input::load(&args.source()?, args.field.as_ref())?;
            note(&loaded.notes);
            let l = finite(loaded.algebra, "classify")?;
            let lat = SubalgebraLattice::build(&l, lattice_config)?;
            let report = ClassifyReport {
                schema: SCHEMA,
                field: l.field().spec(),
                dim: l.dim(),
                labels: l.labels().to_vec(),
                frattini: lat.frattini().to_json(l.field()),
                predicates: classify::predicates(&lat)?,
            };
            let text = render::classify(&report, &l.to_json());
            Ok(output(&report, text))
        }
        Command::Search { dim, field } => {
            let f = FiniteField::new(field)?;
            let config = SearchConfig {
                max_tables: cli.max_tables,
                max_gl_order: cli.max_gl_order,
                lattice: lattice_config,
            };
            let report = exhaustive_search(*dim, &f, config)?;
            let text = render::search(&report);
            Ok(output(&report, text))
        }
        Command::Family { spec, field } => {
            let fam: FamilySpec = spec.parse()?;
            note(&fam.notes(field));
            let json = fam.instantiate(field)?.to_json();
            let text = render::algebra(&json);
            Ok(output(&json, text))
        }
        Command::Reduce { source, prime } => {
            let loaded = input::load(&source.source()?, source.field.as_ref())?;
            let reduced = match loaded.algebra {
                AnyAlgebra::Rational(l) => l.reduce_mod_p(*prime)?,
                AnyAlgebra::Finite(l) => {
                    return Err(CliError::Usage(format!(
                        "reduce needs a rational table, got one over {}",
                        l.field().spec()
                    )))
                }
            };
            let json = reduced.to_json();
            let text = render::algebra(&json);
            Ok(output(&json, text))
        }
        Command::Isomorphic { left, right, field } => {
            let load = |s: &str| -> CliResult<_> {
                let loaded = input::load(&Source::parse(s)?, field.as_ref())?;
                note(&loaded.notes);
                finite(loaded.algebra, "isomorphic")
            };
            let (a, b) = (load(left)?, load(right)?);
            let map = is_isomorphic(&a, &b, cli.max_gl_order)?;
            let f = a.field();
            let report = IsomorphismReport {
                schema: SCHEMA,
                field: f.spec(),
                dims: [a.dim(), b.dim()],
                isomorphic: map.is_some(),
                map: map.map(|m| {
                    (0..m.cols())
                        .map(|j| m.column(j).iter().map(|x| f.encode(x)).collect())
                        .collect()
                }),
            };
            let text = render::isomorphism(&report);
            Ok(output(&report, text))
        }
    }
}

fn emit(cli: &Cli, out: &Output) -> CliResult<()> {
    let body = match cli.format {
        Format::Json => &out.json,
        Format::Text => &out.text,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli).and_then(|out| emit(&cli, &out)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

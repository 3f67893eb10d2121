mod error;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use formagraph::cache::{Cache, CacheMode};
use formagraph::catalog::{builtin, builtin_entries, default_catalog, ingest};
use formagraph::lab::{with_workers, Lab, SuiteName, SuiteResult};
use formagraph::report::{analyze_cached, export_graph, GraphFormat};
use formagraph::{FiniteGroup, FormationSpec};

use error::CliError;

#[derive(Parser)]
#[command(name = "formagraph", version, about = "Non-F-graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group against one class.
    Analyze(AnalyzeArgs),
    /// Run verification suites over the catalog.
    Verify(VerifyArgs),
    /// Show the builtin groups.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// `builtin:NAME` or `file:PATH` (a group-spec JSON file).
    #[arg(long)]
    group: String,
    /// abelian | nilpotent | soluble | supersoluble | nilpotent-derived |
    /// fitting:<t> | pcore-fitting:<p>:<t> | tgroups
    #[arg(long)]
    formation: String,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the full non-F graph as DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the full non-F graph as GraphML.
    #[arg(long)]
    graphml: Option<PathBuf>,
    /// Keep isolated vertices in graph exports.
    #[arg(long)]
    include_isolated: bool,
    #[arg(long, value_enum, default_value_t = CacheArg::On)]
    cache: CacheArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheArg {
    Off,
    On,
    /// Recompute on every hit and fail if the record disagrees.
    Validate,
}

#[derive(Args)]
struct VerifyArgs {
    /// A suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 200)]
    max_order: usize,
    /// Restrict to these classes instead of the suite's defaults.
    #[arg(long)]
    formation: Vec<String>,
    /// Worker threads; defaults to FORMAGRAPH_WORKERS, then 1.
    #[arg(long)]
    workers: Option<usize>,
    /// Write the JSON results here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    /// List the named builtins.
    #[arg(long)]
    list: bool,
    /// List the default catalog up to this order instead.
    #[arg(long)]
    max_order: Option<usize>,
}

fn resolve_group(arg: &str) -> Result<(String, FiniteGroup), CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        Ok((name.to_string(), builtin(name)?))
    } else if let Some(path) = arg.strip_prefix("file:") {
        let name = Path::new(path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.to_string());
        Ok((name, ingest(Path::new(path))?))
    } else {
        Err(CliError::Usage(format!(
            "--group must be builtin:NAME or file:PATH, got {arg:?}"
        )))
    }
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Write {
            path: p.display().to_string(),
            source,
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os("FORMAGRAPH_CACHE_DIR")
        .map(PathBuf::from)
        .or_else(|| dirs::cache_dir().map(|d| d.join("formagraph")))
}

fn run_analyze(a: AnalyzeArgs) -> Result<(), CliError> {
    let (name, g) = resolve_group(&a.group)?;
    let f: FormationSpec = a.formation.parse()?;
    let mode = match a.cache {
        CacheArg::Off => CacheMode::Off,
        CacheArg::On => CacheMode::On,
        CacheArg::Validate => CacheMode::Validate,
    };
    let (cache, mode) = match (mode, cache_dir()) {
        (CacheMode::Off, _) | (_, None) => (None, CacheMode::Off),
        (m, Some(dir)) => (Some(Cache::open(dir)?), m),
    };
    let report = match &cache {
        Some(c) => analyze_cached(&name, &g, f, c, mode)?,
        None => formagraph::report::analyze(&name, &g, f)?,
    };
    let json = serde_json::to_string_pretty(&report).expect("reports serialize");
    write_or_print(a.out.as_deref(), &json)?;
    for (path, format) in [(&a.dot, GraphFormat::Dot), (&a.graphml, GraphFormat::GraphMl)] {
        if let Some(p) = path {
            let text = export_graph(&name, &g, f, format, a.include_isolated)?;
            write_or_print(Some(p), &text)?;
        }
    }
    Ok(())
}

fn workers(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("FORMAGRAPH_WORKERS") {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("FORMAGRAPH_WORKERS must be a number, got {v:?}"))),
        Err(_) => Ok(1),
    }
}

fn run_verify(a: VerifyArgs) -> Result<(), CliError> {
    let suites: Vec<SuiteName> = if a.suite == "all" {
        SuiteName::ALL.to_vec()
    } else {
        vec![a.suite.parse()?]
    };
    let formations = a
        .formation
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<FormationSpec>, _>>()?;
    let fs = (!formations.is_empty()).then_some(formations.as_slice());
    let catalog = default_catalog(a.max_order)?;
    let results: Vec<SuiteResult> = with_workers(workers(a.workers)?, || {
        let lab = Lab::new(&catalog);
        suites.iter().map(|&s| lab.run(s, fs)).collect()
    });
    for r in &results {
        eprintln!(
            "{:<22} {:>6} cases  {:>6} pass  {:>4} fail  {:>4} skipped  asserted failures {}",
            r.suite, r.summary.total, r.summary.pass, r.summary.fail, r.summary.skipped,
            r.summary.asserted_failures
        );
    }
    let json = if results.len() == 1 {
        serde_json::to_string_pretty(&results[0])
    } else {
        serde_json::to_string_pretty(&results)
    }
    .expect("suite results serialize");
    write_or_print(a.out.as_deref(), &json)?;
    let failed: usize = results.iter().map(|r| r.summary.asserted_failures).sum();
    if failed > 0 {
        return Err(CliError::Assertions(failed));
    }
    Ok(())
}

fn run_catalog(a: CatalogArgs) -> Result<(), CliError> {
    if let Some(max) = a.max_order {
        for c in default_catalog(max)? {
            println!("{:<12} {:>4}", c.name, c.group.order());
        }
    } else if a.list {
        for e in builtin_entries() {
            println!("{:<8} {:>4}  {}", e.name, e.expected_order, e.notes);
        }
    } else {
        return Err(CliError::Usage("catalog needs --list or --max-order".into()));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Verify(a) => run_verify(a),
        Command::Catalog(a) => run_catalog(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

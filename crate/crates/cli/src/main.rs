//! `truth` — evaluate, graph and check `.tsys` sentence systems.
//!
//! Exit codes: 0 success / all checks pass, 1 expectation or check
//! failure, 2 input or usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use truth_core::closure::{check_final_properties, classical_closure};
use truth_core::dsl::RawSystem;
use truth_core::fixpoint::{analyze, check_primary_properties, DEFAULT_MAX_ENUM};
use truth_core::graph::semantic_graph;
use truth_core::report::{render_table, verdict, EvalOptions, VerdictMode, VerdictTable};
use truth_core::{SentenceSystem, Valuation};

const ENV_MAX_ENUM: &str = "TRUTH_MAX_ENUM";

#[derive(Parser)]
#[command(
    name = "truth",
    version,
    about = "Fixed-point semantics for self-referential sentence systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the verdict table for a system
    Eval {
        /// Path to a .tsys file
        file: PathBuf,
        /// Cap on the number of valuations the enumerator may scan
        #[arg(long)]
        max_enum: Option<u64>,
        /// mfp: skip enumeration and close over the minimal fixed point
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        /// Emit JSON instead of the table
        #[arg(long)]
        json: bool,
        /// Worker threads for the enumeration scan
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Export a sentence's semantic graph in DOT syntax
    Graph {
        /// Path to a .tsys file
        file: PathBuf,
        /// Sentence to root the graph at
        #[arg(long)]
        sentence: String,
        /// Label nodes with their values under this valuation
        #[arg(long, value_enum, default_value_t = GraphValuation::None)]
        valuation: GraphValuation,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        max_enum: Option<u64>,
    },
    /// Evaluate every .tsys file in a directory against its expect lines
    Corpus {
        dir: PathBuf,
        #[arg(long)]
        max_enum: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Run the structural checks on a system's primary and final valuations
    Check {
        /// Path to a .tsys file
        file: PathBuf,
        #[arg(long)]
        max_enum: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Mfp,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphValuation {
    None,
    Mfp,
    Lifp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval {
            file,
            max_enum,
            mode,
            json,
            threads,
        } => cmd_eval(&file, resolve_limit(max_enum), mode, json, threads),
        Command::Graph {
            file,
            sentence,
            valuation,
            output,
            max_enum,
        } => cmd_graph(
            &file,
            &sentence,
            valuation,
            output.as_deref(),
            resolve_limit(max_enum),
        ),
        Command::Corpus {
            dir,
            max_enum,
            threads,
        } => cmd_corpus(&dir, resolve_limit(max_enum), threads),
        Command::Check { file, max_enum } => cmd_check(&file, resolve_limit(max_enum)),
    };
    ExitCode::from(code)
}

/// Flag beats the TRUTH_MAX_ENUM variable beats the default.
fn resolve_limit(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(ENV_MAX_ENUM)
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_MAX_ENUM)
}

fn load(path: &Path) -> Result<(RawSystem, SentenceSystem), String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    truth_core::load_system(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_eval(path: &Path, limit: u64, mode: Mode, json: bool, threads: usize) -> u8 {
    let (_, system) = match load(path) {
        Ok(loaded) => loaded,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let options = EvalOptions {
        limit,
        mode: match mode {
            Mode::Mfp => VerdictMode::MfpOnly,
            Mode::Full => VerdictMode::Full,
        },
        threads,
    };
    let table = verdict(&system, &options);
    if json {
        println!("{}", table_json(&table));
    } else {
        print!("{}", render_table(&table));
    }
    0
}

/// JSON form, schema 1: verdicts keyed by sentence name in declaration
/// order, verdict letters t/f/u, unavailable fields null.
fn table_json(table: &VerdictTable) -> String {
    let mut verdicts = Map::new();
    for row in &table.rows {
        verdicts.insert(
            row.name.clone(),
            json!({
                "mfp": row.mfp.to_string(),
                "lifp": row.lifp.map(|v| v.to_string()),
                "final": row.final_value.map(|v| v.to_string()),
                "fp_count": table.fixed_point_count,
                "intrinsic_count": table.intrinsic_count,
            }),
        );
    }
    let doc = json!({
        "schema": "1",
        "system": table.system,
        "verdicts": Value::Object(verdicts),
        "limit_exceeded": table.limit_exceeded,
        "notes": table.notes,
    });
    serde_json::to_string_pretty(&doc).expect("verdict table serializes")
}

fn cmd_graph(
    path: &Path,
    sentence: &str,
    which: GraphValuation,
    output: Option<&Path>,
    limit: u64,
) -> u8 {
    let (_, system) = match load(path) {
        Ok(loaded) => loaded,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let graph = match semantic_graph(&system, sentence) {
        Ok(graph) => graph,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return 2;
        }
    };
    let valuation: Option<Valuation> = match which {
        GraphValuation::None => None,
        GraphValuation::Mfp => Some(truth_core::fixpoint::minimal_fixed_point(&system)),
        GraphValuation::Lifp => {
            match truth_core::fixpoint::largest_intrinsic_fixed_point(&system, limit) {
                Ok(v) => Some(v),
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    return 2;
                }
            }
        }
    };
    let dot = graph.to_dot(&system, valuation.as_ref());
    match output {
        None => {
            print!("{dot}");
            0
        }
        Some(out_path) => match fs::write(out_path, dot) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {}: {e}", out_path.display());
                2
            }
        },
    }
}

fn cmd_corpus(dir: &Path, limit: u64, threads: usize) -> u8 {
    let entries = match fs::read_dir(dir) {
        Ok(entries) => entries,
        Err(e) => {
            eprintln!("error: {}: {e}", dir.display());
            return 2;
        }
    };
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "tsys"))
        .collect();
    files.sort();
    if files.is_empty() {
        eprintln!("error: {}: no .tsys files", dir.display());
        return 2;
    }

    let options = EvalOptions {
        limit,
        mode: VerdictMode::Full,
        threads,
    };
    let mut passed = 0usize;
    let mut failed = 0usize;
    for path in &files {
        let file = path.file_name().unwrap().to_string_lossy();
        match check_expectations(path, &options) {
            Ok(mismatches) if mismatches.is_empty() => {
                println!("PASS {file}");
                passed += 1;
            }
            Ok(mismatches) => {
                println!("FAIL {file}");
                for line in mismatches {
                    println!("  {line}");
                }
                failed += 1;
            }
            Err(message) => {
                println!("FAIL {file}");
                println!("  {message}");
                failed += 1;
            }
        }
    }
    println!("corpus: {passed} passed, {failed} failed");
    if failed == 0 {
        0
    } else {
        1
    }
}

fn check_expectations(path: &Path, options: &EvalOptions) -> Result<Vec<String>, String> {
    let (raw, system) = load(path)?;
    let table = verdict(&system, options);
    let mut mismatches = Vec::new();
    let mut any = false;
    for expect in raw.expects() {
        any = true;
        let Some(row) = table.row(&expect.name) else {
            mismatches.push(format!("{}: no verdict row", expect.name));
            continue;
        };
        if let Some(want) = expect.mfp {
            if row.mfp != want {
                mismatches.push(format!("{}: mfp expected {want}, got {}", expect.name, row.mfp));
            }
        }
        if let Some(want) = expect.lifp {
            match row.lifp {
                Some(got) if got == want => {}
                Some(got) => mismatches.push(format!(
                    "{}: lifp expected {want}, got {got}",
                    expect.name
                )),
                None => mismatches.push(format!(
                    "{}: lifp expected {want}, got unavailable",
                    expect.name
                )),
            }
        }
        if let Some(want) = expect.final_value {
            match row.final_value {
                Some(got) if got == want => {}
                Some(got) => mismatches.push(format!(
                    "{}: final expected {want}, got {got}",
                    expect.name
                )),
                None => mismatches.push(format!(
                    "{}: final expected {want}, got unavailable",
                    expect.name
                )),
            }
        }
    }
    if !any {
        mismatches.push("no expect directives".to_string());
    }
    Ok(mismatches)
}

fn cmd_check(path: &Path, limit: u64) -> u8 {
    let (_, system) = match load(path) {
        Ok(loaded) => loaded,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    println!("check {}", system.name());
    let report = analyze(&system, limit, 1);
    let mut failed = 0usize;
    let mut shown = 0usize;

    match check_primary_properties(&system, &report) {
        Some(checks) => {
            for check in checks {
                shown += 1;
                if check.passed {
                    println!("PASS {} ({})", check.name, check.detail);
                } else {
                    failed += 1;
                    println!("FAIL {} ({})", check.name, check.detail);
                }
            }
        }
        None => {
            println!(
                "SKIP primary property checks (enumeration needs {} valuations, limit {limit})",
                truth_core::fixpoint::valuation_space(system.len())
            );
        }
    }

    match &report.lifp {
        Some(lifp) => {
            let finals = classical_closure(&system, lifp).expect("lifp is a fixed point");
            for check in check_final_properties(&system, lifp, &finals) {
                shown += 1;
                if check.passed {
                    println!("PASS {} ({})", check.name, check.detail);
                } else {
                    failed += 1;
                    println!("FAIL {} ({})", check.name, check.detail);
                }
            }
        }
        None => {
            println!("SKIP final valuation checks (no lifp under the enumeration limit)");
        }
    }

    println!("check: {} passed, {failed} failed", shown - failed);
    if failed == 0 {
        0
    } else {
        1
    }
}

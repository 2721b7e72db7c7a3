use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use kronlab::bounds::{column_bounds, leading_coefficient, row_bounds, sharpness_predicate};
use kronlab::genfunc::{cached_b_series, caps_for, Form};
use kronlab::kronecker::characters::{self, DEFAULT_MAX_N};
use kronlab::kronecker::{kronecker, reduced_kronecker};
use kronlab::stability::{
    classify, dom_contains, monotone_chain, monotonicity_scan, set_l4_contains, DefaultThreshold, GrowthVector,
    MoveKind, ScanReport, StabilityParams,
};
use kronlab::tables::{diff_against_fixture, generate_table, render, Format};
use kronlab::{Execution, KronError, Partition};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "kronlab", version, about = "Exact Kronecker and B coefficients")]
struct Cli {
    /// Directory for cached character tables [env: KRONLAB_CACHE_DIR]
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Keep character tables in memory only
    #[arg(long, global = true)]
    no_cache: bool,

    /// Largest n for which a character table may be built
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N, value_parser = clap::value_parser!(u32).range(1..))]
    max_n: u32,

    /// Largest per-alphabet degree for B series
    #[arg(long, global = true, default_value_t = 4)]
    max_series_weight: u32,

    /// Worker threads; 1 runs sequentially
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    /// Write a JSON run report to this file
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Serialize)]
struct Triple {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
}

#[derive(Args, Debug, Serialize)]
struct AlphaTriple {
    #[arg(long)]
    alpha: Partition,
    #[arg(long)]
    beta: Partition,
    #[arg(long)]
    gamma: Partition,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kronecker coefficient g(λ, μ, ν)
    Kron(Triple),
    /// Reduced Kronecker coefficient of (α, β, γ)
    Reduced(AlphaTriple),
    /// B coefficient of (α, β, γ)
    Bcoeff {
        #[command(flatten)]
        triple: AlphaTriple,
        #[arg(long, default_value = "theorem")]
        form: Form,
        /// Write the whole series as JSON to this file
        #[arg(long)]
        dump_series: Option<PathBuf>,
    },
    /// Column and row bounds with the sharpness verdict, as JSON
    Bounds(AlphaTriple),
    /// B-coefficient table for all rows with weights up to --max-weight
    Table {
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Compare against the shipped fixture; exit 1 on any mismatch
        #[arg(long)]
        check: bool,
    },
    /// Search for triples where growing by op11 lowers the coefficient
    ScanConjecture {
        #[arg(long, default_value_t = 5)]
        max_weight: u32,
        /// Also write the report, with timing, to this file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Stability data of a base triple and a growth vector, as JSON
    Stability {
        #[command(flatten)]
        triple: Triple,
        /// Growth vector `a,b,c,m`
        #[arg(long)]
        vector: GrowthVector,
    },
}

enum Failure {
    Kron(KronError),
    Mismatch(String),
}

impl From<KronError> for Failure {
    fn from(e: KronError) -> Self {
        Failure::Kron(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Kron(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Kron(e.into())
    }
}

struct Done {
    stdout: String,
    inputs: Value,
    outputs: Value,
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("KRONLAB_CACHE_DIR").filter(|d| !d.is_empty()) {
        return Some(PathBuf::from(dir));
    }
    if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return Some(PathBuf::from(xdg).join("kronlab"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("kronlab"))
}

fn usable_cache_dir(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    let dir = cli.cache_dir.clone().or_else(default_cache_dir)?;
    match fs::create_dir_all(&dir) {
        Ok(()) => Some(dir),
        Err(e) => {
            eprintln!(
                "warning: cache directory {} unusable ({e}); caching disabled",
                dir.display()
            );
            None
        }
    }
}

fn execution(cli: &Cli) -> Execution {
    match cli.jobs {
        Some(1) => Execution::Sequential,
        #[cfg(feature = "parallel")]
        Some(n) => {
            // Fails only if the pool was already built; the default pool is then used.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(usize::from(n))
                .build_global();
            Execution::Parallel
        }
        _ => Execution::Parallel,
    }
}

fn guard_series(caps: [u32; 3], max: u32) -> Result<(), KronError> {
    if caps.iter().any(|&c| c > max) {
        return Err(KronError::SeriesTooLarge { caps, max });
    }
    Ok(())
}

fn scan(max_weight: u32, exec: Execution) -> Result<ScanReport, KronError> {
    let mut total = ScanReport {
        max_weight,
        triples_checked: 0,
        counterexamples: Vec::new(),
    };
    for w in 1..=max_weight {
        let part = monotonicity_scan(MoveKind::Conjecture510, w, w, exec)?;
        eprintln!(
            "weight {w}: {} triples, {} counterexamples",
            part.triples_checked,
            part.counterexamples.len()
        );
        total.triples_checked += part.triples_checked;
        total.counterexamples.extend(part.counterexamples);
    }
    Ok(total)
}

fn write_json(path: &Path, value: &Value) -> Result<(), Failure> {
    fs::write(path, serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}

fn run(cli: &Cli, exec: Execution, start: Instant) -> Result<Done, Failure> {
    let done = match &cli.command {
        Command::Kron(t) => {
            let g = kronecker(&t.lambda, &t.mu, &t.nu)?;
            Done {
                stdout: format!("{g}\n"),
                inputs: json!(t),
                outputs: json!({ "value": g }),
            }
        }
        Command::Reduced(t) => {
            let r = reduced_kronecker(&t.alpha, &t.beta, &t.gamma)?;
            Done {
                stdout: format!("{}\n", r.value),
                inputs: json!(t),
                outputs: json!(r),
            }
        }
        Command::Bcoeff {
            triple: t,
            form,
            dump_series,
        } => {
            let caps = caps_for(&t.alpha, &t.beta, &t.gamma);
            guard_series(caps, cli.max_series_weight)?;
            let series = cached_b_series(*form, caps)?;
            let b = series.coefficient(&t.alpha, &t.beta, &t.gamma)?;
            if let Some(path) = dump_series {
                fs::write(path, serde_json::to_string_pretty(&series.series().to_json())? + "\n")?;
            }
            Done {
                stdout: format!("{b}\n"),
                inputs: json!({ "alpha": t.alpha, "beta": t.beta, "gamma": t.gamma, "form": form.to_string() }),
                outputs: json!({ "value": b, "caps": caps }),
            }
        }
        Command::Bounds(t) => {
            let out = json!({
                "column_bounds": column_bounds(&t.alpha, &t.beta, &t.gamma),
                "row_bounds": row_bounds(&t.alpha, &t.beta, &t.gamma),
                "sharp": sharpness_predicate(&t.alpha, &t.beta, &t.gamma),
                "leading_coefficient": leading_coefficient(&t.alpha, &t.beta, &t.gamma),
            });
            Done {
                stdout: serde_json::to_string_pretty(&out)? + "\n",
                inputs: json!(t),
                outputs: out,
            }
        }
        Command::Table {
            max_weight,
            format,
            check,
        } => {
            guard_series([*max_weight; 3], cli.max_series_weight)?;
            let rows = generate_table(*max_weight, exec)?;
            let text = render(&rows, *format)?;
            let mut outputs = json!({ "rows": rows.len() });
            if *check {
                let mismatches = diff_against_fixture(&rows)?;
                outputs["mismatches"] = json!(mismatches);
                if !mismatches.is_empty() {
                    for m in &mismatches {
                        eprintln!(
                            "mismatch: {} {}: expected {:?}, got {}",
                            m.key, m.column, m.expected, m.actual
                        );
                    }
                    return Err(Failure::Mismatch(format!(
                        "{} cells differ from the fixture",
                        mismatches.len()
                    )));
                }
                eprintln!("{} rows match the fixture", rows.len());
            }
            Done {
                stdout: text,
                inputs: json!({ "max_weight": max_weight, "format": format!("{format:?}").to_lowercase(), "check": check }),
                outputs,
            }
        }
        Command::ScanConjecture { max_weight, output } => {
            let report = scan(*max_weight, exec)?;
            let elapsed_ms = start.elapsed().as_millis();
            eprintln!("elapsed: {elapsed_ms} ms");
            let value = serde_json::to_value(&report)?;
            if let Some(path) = output {
                let mut with_time = value.clone();
                with_time["elapsedMs"] = json!(elapsed_ms);
                write_json(path, &with_time)?;
            }
            Done {
                stdout: serde_json::to_string_pretty(&value)? + "\n",
                inputs: json!({ "max_weight": max_weight }),
                outputs: value,
            }
        }
        Command::Stability { triple: t, vector } => {
            let (l, m, n) = (&t.lambda, &t.mu, &t.nu);
            let params = StabilityParams::new(l, m, n, &DefaultThreshold)?;
            let grown = kronlab::kronecker::hook_grown_triple(l, m, n, *vector)?;
            let grown_value = match kronecker(&grown[0], &grown[1], &grown[2]) {
                Ok(v) => Some(v),
                Err(e) if e.is_resource_guard() => None,
                Err(e) => return Err(e.into()),
            };
            let class = classify(*vector);
            let chain = match class {
                Some(_) => Some(monotone_chain(l, m, n, *vector)?),
                None => None,
            };
            let out = json!({
                "threshold": "weights-plus-first-rows",
                "params": params,
                "dom": dom_contains(l, m, n, *vector, &DefaultThreshold)?,
                "grown": grown,
                "grown_in_l4": set_l4_contains(&grown[0], &grown[1], &grown[2], &DefaultThreshold)?,
                "grown_value": grown_value,
                "class": class,
                "chain": chain,
            });
            Done {
                stdout: serde_json::to_string_pretty(&out)? + "\n",
                inputs: json!({ "lambda": l, "mu": m, "nu": n, "vector": vector.to_string() }),
                outputs: out,
            }
        }
    };
    Ok(done)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Kron(_) => "kron",
        Command::Reduced(_) => "reduced",
        Command::Bcoeff { .. } => "bcoeff",
        Command::Bounds(_) => "bounds",
        Command::Table { .. } => "table",
        Command::ScanConjecture { .. } => "scan-conjecture",
        Command::Stability { .. } => "stability",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let dir = usable_cache_dir(&cli);
    characters::configure_global(cli.max_n, dir);
    let exec = execution(&cli);

    let (code, done) = match run(&cli, exec, start) {
        Ok(done) => (ExitCode::SUCCESS, Some(done)),
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            (ExitCode::from(EXIT_MISMATCH), None)
        }
        Err(Failure::Kron(e)) => {
            eprintln!("error: {e}");
            let code = if e.is_resource_guard() {
                EXIT_RESOURCE
            } else {
                EXIT_INPUT
            };
            (ExitCode::from(code), None)
        }
    };
    if let Some(d) = &done {
        print!("{}", d.stdout);
    }
    if let Some(path) = &cli.report {
        let cache = characters::global();
        let report = json!({
            "command": command_name(&cli.command),
            "inputs": done.as_ref().map(|d| d.inputs.clone()).unwrap_or(Value::Null),
            "outputs": done.as_ref().map(|d| d.outputs.clone()).unwrap_or(Value::Null),
            "elapsed_ms": start.elapsed().as_millis(),
            "cache": { "hits": cache.hits(), "misses": cache.misses() },
            "version": kronlab::VERSION,
        });
        if let Err(e) = fs::write(path, serde_json::to_string_pretty(&report).unwrap_or_default() + "\n") {
            eprintln!("error: cannot write report {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT);
        }
    }
    code
}

//! Command-line front end: DT invariants, motivic series coefficients,
//! plethystic identity checks, word bases, Gröbner classification, and the
//! acceptance suite.
//!
//! Exit codes: 0 on success, 1 when a check fails (the witness goes to
//! stdout), 2 on bad input (the message goes to stderr). Output is
//! deterministic: dimension vectors in lexicographic order, exponents
//! ascending, map keys sorted.

use clap::{Parser, Subcommand, ValueEnum};
use quiver_dt::qseries::dim_vectors;
use quiver_dt::{grobner, lieword, motivic, partitions, selftest};
use quiver_dt::{Quiver, QuiverError};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "quiver-dt",
    version,
    about = "Exact motivic series, refined DT invariants, and Koszul-duality checks for symmetric quivers"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Refined DT invariants with kernel dimensions and parity classes.
    Dt {
        /// Arrow matrix as inline JSON (`[[2,1],[1,0]]`, or `{"arrows": ...}`),
        /// or a path to a file holding it.
        #[arg(long)]
        quiver: String,
        /// Largest total dimension.
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    /// Coefficients of the motivic generating series.
    Series {
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    /// Identity checks tying the series, DT invariants, and the dual
    /// character together.
    Koszul {
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    /// Super-Lyndon word basis of the dual Lie algebra of a one-vertex
    /// quiver.
    Basis {
        /// Loop count at the single vertex.
        #[arg(long)]
        loops: u32,
        /// Largest word length.
        #[arg(long, default_value_t = 4)]
        len: u32,
        /// Largest letter level.
        #[arg(long, default_value_t = 6)]
        level: u32,
    },
    /// Quadratic Gröbner classification of one quiver.
    Grobner {
        #[arg(long)]
        quiver: String,
        /// Internal-degree cap for the weight-three comparison; defaults to
        /// a bound that separates quadratic from non-quadratic bases.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Partition-alphabet factorization check for a one-vertex quiver.
    Partitions {
        #[arg(long)]
        loops: u32,
        #[arg(long, default_value_t = 4)]
        len: u32,
        #[arg(long, default_value_t = 6)]
        level: u32,
    },
    /// Run the acceptance suite.
    Selftest,
}

enum Failure {
    /// A mathematical check failed; the witness is printed to stdout.
    Check(String),
    /// The input could not be used; the message goes to stderr.
    Input(String),
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn main() -> ExitCode {
    reset_sigpipe();
    if let Err(msg) = configure_threads() {
        eprintln!("{msg}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(witness)) => {
            println!("{witness}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

/// Restore the default SIGPIPE disposition so that a closed pipe kills the
/// process quietly, Unix-filter style, instead of panicking in `println!`.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("QUIVER_DT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or(format!("QUIVER_DT_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| format!("cannot configure {threads} worker threads: {e}"))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Dt { quiver, order } => run_dt(&load_quiver(quiver)?, *order, cli.format),
        Command::Series { quiver, order } => {
            run_series(&load_quiver(quiver)?, *order, cli.format);
            Ok(())
        }
        Command::Koszul { quiver, order } => run_koszul(&load_quiver(quiver)?, *order, cli.format),
        Command::Basis { loops, len, level } => {
            run_basis(*loops, *len, *level, cli.format);
            Ok(())
        }
        Command::Grobner { quiver, cap } => run_grobner(&load_quiver(quiver)?, *cap, cli.format),
        Command::Partitions { loops, len, level } => {
            run_partitions(*loops, *len, *level, cli.format)
        }
        Command::Selftest => run_selftest(cli.format),
    }
}

fn load_quiver(arg: &str) -> Result<Quiver, Failure> {
    let text = if arg.trim_start().starts_with(['[', '{']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| input(format!("cannot read quiver file `{arg}`: {e}")))?
    };
    let trimmed = text.trim();
    let bad = |e: QuiverError| input(format!("invalid quiver `{trimmed}`: {e}"));
    if trimmed.starts_with('[') {
        let arrows: Vec<Vec<u32>> = serde_json::from_str(trimmed)
            .map_err(|e| input(format!("invalid arrow matrix `{trimmed}`: {e}")))?;
        Quiver::new(arrows).map_err(bad)
    } else {
        Quiver::parse_json(trimmed).map_err(bad)
    }
}

fn arrows_of(q: &Quiver) -> Vec<Vec<u32>> {
    (0..q.vertex_count())
        .map(|i| (0..q.vertex_count()).map(|j| q.arrow_count(i, j)).collect())
        .collect()
}

fn run_dt(q: &Quiver, order: u32, format: Format) -> Result<(), Failure> {
    let table = motivic::dt_invariants(q, order).map_err(|e| Failure::Check(e.to_string()))?;
    match format {
        Format::Text => {
            println!("quiver {}, DT invariants to order {order}", selftest::quiver_label(q));
            for e in &table.entries {
                println!("DT{} = {}", e.d, e.dt);
                let kernel: Vec<String> =
                    e.ker_dims.iter().map(|(n, c)| format!("{n}: {c}")).collect();
                println!(
                    "  parity class {}, kernel dimensions {{{}}}",
                    e.parity_class,
                    kernel.join(", ")
                );
            }
        }
        Format::Json => {
            let entries: Vec<_> = table
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "d": e.d.0,
                        "dt": e.dt,
                        "parity_class": e.parity_class,
                        "kernel_dims": e
                            .ker_dims
                            .iter()
                            .map(|(n, c)| json!([n, c.to_string()]))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!(
                "{}",
                json!({ "quiver": arrows_of(q), "order": order, "entries": entries })
            );
        }
    }
    Ok(())
}

fn run_series(q: &Quiver, order: u32, format: Format) {
    let series = motivic::motivic_series(q, order);
    let dims = dim_vectors(q.vertex_count(), order);
    match format {
        Format::Text => {
            println!("quiver {}, motivic series to order {order}", selftest::quiver_label(q));
            for d in &dims {
                println!("A{} = {}", d, series.coeff(d));
            }
        }
        Format::Json => {
            let coefficients: Vec<_> = dims
                .iter()
                .map(|d| json!({ "d": d.0, "value": series.coeff(d) }))
                .collect();
            println!(
                "{}",
                json!({ "quiver": arrows_of(q), "order": order, "coefficients": coefficients })
            );
        }
    }
}

fn run_koszul(q: &Quiver, order: u32, format: Format) -> Result<(), Failure> {
    let cap = motivic::default_expansion_cap(q, order);
    let checks: [(&str, Box<dyn Fn() -> Result<(), motivic::CheckError>>); 5] = [
        ("change of variables", Box::new(|| motivic::check_change_of_variables(q, order))),
        ("numerical Koszulness", Box::new(|| motivic::check_numerical_koszulness(q, order))),
        ("DT cross-check", Box::new(|| motivic::dt_cross_check(q, order))),
        ("character positivity", Box::new(|| motivic::check_character_positivity(q, order))),
        ("kernel dimensions", Box::new(move || motivic::check_kernel_dimensions(q, order, cap))),
    ];
    let mut names = Vec::new();
    for (name, check) in &checks {
        check().map_err(|e| Failure::Check(format!("{name}: {e}")))?;
        names.push(*name);
    }
    match format {
        Format::Text => {
            println!("quiver {}, order {order}", selftest::quiver_label(q));
            for name in names {
                println!("{name}: OK");
            }
        }
        Format::Json => {
            println!(
                "{}",
                json!({ "quiver": arrows_of(q), "order": order, "passed": names })
            );
        }
    }
    Ok(())
}

fn run_basis(loops: u32, len: u32, level: u32, format: Format) {
    let words = lieword::one_vertex_basis(loops, len, level);
    match format {
        Format::Text => {
            println!(
                "one-vertex quiver with {loops} loops, basis words of length <= {len}, levels <= {level}"
            );
            for w in &words {
                let levels: Vec<String> = w.iter().map(u32::to_string).collect();
                println!("[{}] degree {}", levels.join(", "), lieword::word_degree(loops, w));
            }
            println!("{} words", words.len());
        }
        Format::Json => {
            println!(
                "{}",
                json!({ "loops": loops, "len": len, "level": level, "words": words })
            );
        }
    }
}

fn run_grobner(q: &Quiver, cap: Option<u32>, format: Format) -> Result<(), Failure> {
    let cap = cap.unwrap_or_else(|| grobner::default_gb_cap(q));
    let predicted = q.almost_n_regular().is_some() || grobner::relation_free(q);
    match (grobner::check_quadratic_gb(q, cap), predicted) {
        (Ok(()), true) => {
            match format {
                Format::Text => {
                    println!("quiver {}: quadratic Groebner basis", selftest::quiver_label(q));
                    println!("normal weight-3 words match graded dimensions to internal degree {cap}");
                }
                Format::Json => {
                    println!(
                        "{}",
                        json!({ "quiver": arrows_of(q), "cap": cap, "quadratic": true })
                    );
                }
            }
            Ok(())
        }
        (Err(e), false) => Err(Failure::Check(format!(
            "quiver {}: no quadratic Groebner basis\n{e}",
            selftest::quiver_label(q)
        ))),
        (Ok(()), false) => Err(Failure::Check(format!(
            "quiver {}: classification disagreement, the weight-3 check passed to degree {cap} \
             but the regularity predicate predicts an obstruction",
            selftest::quiver_label(q)
        ))),
        (Err(e), true) => Err(Failure::Check(format!(
            "quiver {}: classification disagreement, predicted quadratic but {e}",
            selftest::quiver_label(q)
        ))),
    }
}

fn run_partitions(loops: u32, len: u32, level: u32, format: Format) -> Result<(), Failure> {
    partitions::check_bijection(loops, len, level, partitions::PrefixRule::ShorterLarger)
        .map_err(|e| Failure::Check(e.to_string()))?;
    let alphabet = partitions::alphabet(loops, len);
    match format {
        Format::Text => {
            println!(
                "one-vertex quiver with {loops} loops: partition factorization verified for \
                 word lengths <= {len}, levels <= {level}"
            );
            println!("{} alphabet letters up to length {len}", alphabet.len());
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "loops": loops,
                    "len": len,
                    "level": level,
                    "alphabet": alphabet.iter().map(|p| p.0.clone()).collect::<Vec<_>>(),
                    "bijective": true,
                })
            );
        }
    }
    Ok(())
}

fn run_selftest(format: Format) -> Result<(), Failure> {
    let outcomes = selftest::run_all();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    match format {
        Format::Text => {
            for o in &outcomes {
                println!("{}", o.line());
            }
        }
        Format::Json => {
            let rows: Vec<_> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "name": o.name,
                        "passed": o.passed,
                        "seconds": o.elapsed.as_secs_f64(),
                        "detail": o.detail,
                    })
                })
                .collect();
            println!("{}", json!({ "outcomes": rows, "failed": failed }));
        }
    }
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} of {} criteria failed", outcomes.len())));
    }
    Ok(())
}

//! `mibs`: enumeration, characters, the two laws, Runge–Kutta ingestion,
//! verification suites and basis statistics from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 parse
//! error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mibs::rational::to_f64;
use mibs::rk::{order_report, ButcherTableau, OrderReport};
use mibs::trees::enumerate_trees;
use mibs::verify::{self, Suite};
use mibs::{compose, enumerate_forests, enumerate_populated, exact_solution_character, substitute, Character};
use serde::Serialize;

const DEFAULT_MAX_ORDER: usize = 6;

#[derive(Parser)]
#[command(name = "mibs", version, about = "Exact multi-index B-series")]
struct Cli {
    /// Largest order any command may request.
    #[arg(long, global = true, env = "MIBS_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_order_ceiling: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the graded basis of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Kind::Indices)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Character of the exact flow.
    Exact {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        out: CharacterOutput,
    },
    /// LEFT ⋆₂ RIGHT: the method RIGHT applied after the method LEFT.
    Compose {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: CharacterOutput,
    },
    /// LEFT ⋆₁ RIGHT: RIGHT with its vector field replaced by h⁻¹ B(LEFT).
    Substitute {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: CharacterOutput,
    },
    /// Character and order report of a Runge–Kutta method.
    Rk {
        /// Tableau JSON file: {"a": [[..]], "b": [..], "c": [..]}.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        tableau: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        order: usize,
        #[arg(long)]
        float: bool,
    },
    /// Run property suites; exits 2 if any property fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Per-order sizes of the tree and multi-index bases.
    Stats {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        float: bool,
    },
}

#[derive(clap::Args)]
struct CharacterOutput {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Add a decimal column to text output.
    #[arg(long)]
    float: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Indices,
    Forests,
    Trees,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    Euler,
    ImplicitMidpoint,
    Rk4,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Novikov,
    Morphism,
    Composition,
    Substitution,
    Exact,
    Bridge,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Novikov => Suite::Novikov,
            SuiteArg::Morphism => Suite::Morphism,
            SuiteArg::Composition => Suite::Composition,
            SuiteArg::Substitution => Suite::Substitution,
            SuiteArg::Exact => Suite::Exact,
            SuiteArg::Bridge => Suite::Bridge,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Failure {
    Usage(String),
    Verification,
    Parse(String),
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_order(order: usize, ceiling: usize) -> Outcome {
    if order == 0 {
        return Err(usage("order must be at least 1"));
    }
    if order > ceiling {
        return Err(usage(format!(
            "order {order} exceeds the ceiling {ceiling} (raise it with MIBS_MAX_ORDER)"
        )));
    }
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serialisable"));
}

fn print_character(a: &Character, out: &CharacterOutput) {
    match out.format {
        Format::Json => print_json(a),
        Format::Text => {
            let mut rows = vec![("1".to_string(), a.empty_value().clone())];
            rows.extend(a.values().map(|(m, v)| (m.to_string(), v.clone())));
            let width = rows.iter().map(|(m, _)| m.len()).max().unwrap_or(0);
            println!("# order {}", a.order());
            for (m, v) in rows {
                if out.float {
                    println!("{m:<width$}  {v:<12}  {:.12}", to_f64(&v));
                } else {
                    println!("{m:<width$}  {v}");
                }
            }
        }
    }
}

fn enumerate(order: usize, kind: Kind, format: Format) -> Outcome {
    let err = |e: mibs::Error| usage(e.to_string());
    let (label, text, json): (&str, Vec<String>, serde_json::Value) = match kind {
        Kind::Indices => {
            let v = enumerate_populated(order).map_err(err)?;
            (
                "indices",
                v.iter().map(|m| m.to_string()).collect(),
                serde_json::to_value(&v).expect("json"),
            )
        }
        Kind::Forests => {
            let v = enumerate_forests(order).map_err(err)?;
            (
                "forests",
                v.iter().map(|f| f.to_string()).collect(),
                serde_json::to_value(&v).expect("json"),
            )
        }
        Kind::Trees => {
            let v = enumerate_trees(order).map_err(err)?;
            let text: Vec<String> = v.iter().map(|t| t.to_string()).collect();
            let json = serde_json::to_value(&text).expect("json");
            ("trees", text, json)
        }
    };
    match format {
        Format::Text => {
            eprintln!("# {} {label} of order {order}", text.len());
            for line in text {
                println!("{line}");
            }
        }
        Format::Json => print_json(&serde_json::json!({
            "order": order,
            "kind": label,
            "count": text.len(),
            "items": json,
        })),
    }
    Ok(())
}

#[derive(Serialize)]
struct RkOutput {
    character: Character,
    order_report: OrderReport,
    warnings: Vec<String>,
}

fn rk(tableau: ButcherTableau, order: usize, float: bool) -> Outcome {
    let warnings = tableau.validate().map_err(|e| Failure::Parse(e.to_string()))?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let character = tableau.character(order).map_err(|e| usage(e.to_string()))?;
    let report = order_report(&character).map_err(|e| usage(e.to_string()))?;
    if float {
        for (m, v) in character.values() {
            eprintln!("{m}: {v} ~ {:.12}", to_f64(v));
        }
    }
    print_json(&RkOutput {
        character,
        order_report: report,
        warnings,
    });
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let ceiling = cli.max_order_ceiling;
    match cli.command {
        Command::Enumerate { order, kind, format } => {
            check_order(order, ceiling)?;
            enumerate(order, kind, format)
        }
        Command::Exact { order, out } => {
            check_order(order, ceiling)?;
            let a = exact_solution_character(order).map_err(|e| usage(e.to_string()))?;
            print_character(&a, &out);
            Ok(())
        }
        Command::Compose { left, right, out } => {
            let (b, a): (Character, Character) = (read_json(&left)?, read_json(&right)?);
            check_order(b.order().min(a.order()), ceiling)?;
            let c = compose(&b, &a).map_err(|e| usage(e.to_string()))?;
            print_character(&c, &out);
            Ok(())
        }
        Command::Substitute { left, right, out } => {
            let (b, a): (Character, Character) = (read_json(&left)?, read_json(&right)?);
            check_order(b.order().min(a.order()), ceiling)?;
            let c = substitute(&b, &a).map_err(|e| usage(e.to_string()))?;
            print_character(&c, &out);
            Ok(())
        }
        Command::Rk {
            tableau,
            builtin,
            order,
            float,
        } => {
            check_order(order, ceiling)?;
            let t = match (tableau, builtin) {
                (Some(path), _) => read_json(&path)?,
                (None, Some(Builtin::Euler)) => ButcherTableau::euler(),
                (None, Some(Builtin::ImplicitMidpoint)) => ButcherTableau::implicit_midpoint(),
                (None, Some(Builtin::Rk4)) => ButcherTableau::rk4(),
                (None, None) => return Err(usage("pass --tableau or --builtin")),
            };
            rk(t, order, float)
        }
        Command::Verify {
            suite,
            max_order,
            seed,
            format,
        } => {
            check_order(max_order, ceiling)?;
            let config = verify::Config {
                max_order,
                seed,
                ..verify::Config::default()
            };
            let report = verify::run(suite.into(), &config);
            match format {
                Format::Json => print_json(&report),
                Format::Text => {
                    for c in &report.checks {
                        let tag = if c.passed { "pass" } else { "FAIL" };
                        println!("{tag} [{}] {} ({} instances)", c.suite, c.name, c.instances);
                        if let Some(d) = &c.detail {
                            println!("     {d}");
                        }
                    }
                    for d in &report.discrepancies {
                        println!("info: {} ({})", d.name, d.note);
                        for line in &d.lines {
                            println!("     {line}");
                        }
                    }
                }
            }
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Stats {
            max_order,
            format,
            float,
        } => {
            check_order(max_order, ceiling)?;
            let rows = verify::stats(max_order).map_err(|e| usage(e.to_string()))?;
            match format {
                Format::Json => print_json(&rows),
                Format::Text => {
                    println!("order  trees  indices  ratio");
                    for r in rows {
                        let mut line = format!("{:>5}  {:>5}  {:>7}  {}", r.order, r.trees, r.indices, r.ratio);
                        if float {
                            line += &format!("  {:.4}", r.trees as f64 / r.indices as f64);
                        }
                        println!("{line}");
                    }
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(cli);
    let _ = std::io::stdout().flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => {
            eprintln!("error: verification failed");
            ExitCode::from(2)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: cannot parse {msg}");
            ExitCode::from(3)
        }
    }
}

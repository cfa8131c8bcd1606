//! Command-line front end: algebra data inspection, Demazure and graded
//! Weyl module computation, decomposition, canonical JSON emission, and the
//! verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports failures,
//! 2 on malformed input or any violated precondition (the diagnostic on
//! stderr names the precondition, e.g. `error[UnsupportedEvenCase]: …`).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twisted_demazure::demazure::{demazure_d, DemazureResult};
use twisted_demazure::json::{module_output, to_json_string};
use twisted_demazure::rat::{fmt_rat, parse_rat, rat, Rat};
use twisted_demazure::verify::{run_suite, Suite};
use twisted_demazure::weyl::weyl_char;
use twisted_demazure::{AffineData, Error};

/// Exact characters of Demazure and graded Weyl modules for twisted affine
/// algebras.
///
/// Type names follow the grammar LETTER + digits + "(twist)": the twisted
/// types A2(2), A4(2), A6(2), …, A3(2), A5(2), A7(2), …, D3(2), D4(2), …,
/// E6(2), D4(3), and the untwisted series A1(1), B3(1), C2(1), D4(1),
/// E6(1), F4(1), G2(1), …. Node 0 is the affine node; weights list the
/// coefficients m_1,…,m_l on the fundamental weights of the finite
/// subalgebra.
#[derive(Parser)]
#[command(name = "twdem", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    /// Human-readable text.
    Text,
    /// Canonical JSON (byte-stable key order, rationals as "p/q").
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    /// Frozen reference values: dimensions, decompositions, identities.
    Paper,
    /// Structural property sweeps (idempotence, word independence, …).
    Properties,
    /// Both suites.
    All,
}

#[derive(Args)]
struct TypeArg {
    /// Algebra type name, e.g. "A4(2)", "D4(3)", "E6(2)", "A1(1)".
    #[arg(long = "type", value_name = "NAME")]
    type_name: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cartan matrix, marks, comarks, and finite subalgebra of a
    /// type.
    Data {
        #[command(flatten)]
        type_arg: TypeArg,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Compute the Demazure module D(k, λ) from its target weight.
    Demazure {
        #[command(flatten)]
        type_arg: TypeArg,
        /// Level k as a rational "p" or "p/q"; must be positive.
        #[arg(long, value_name = "P/Q")]
        level: String,
        /// Comma-separated coefficients m_1,…,m_l of λ.
        #[arg(long, value_name = "M1,M2,…")]
        weight: String,
        /// Also print the dimension of each graded piece.
        #[arg(long)]
        graded: bool,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Compute the graded Weyl module W(λ) at the distinguished level.
    Weyl {
        #[command(flatten)]
        type_arg: TypeArg,
        /// Comma-separated coefficients m_1,…,m_l of λ.
        #[arg(long, value_name = "M1,M2,…")]
        weight: String,
        /// Also print the dimension of each graded piece.
        #[arg(long)]
        graded: bool,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Decompose the restriction of a module into irreducible characters of
    /// the finite subalgebra.
    Decompose {
        #[command(flatten)]
        type_arg: TypeArg,
        /// Comma-separated coefficients m_1,…,m_l of λ.
        #[arg(long, value_name = "M1,M2,…")]
        weight: String,
        /// Level k as a rational; defaults to the distinguished level.
        #[arg(long, value_name = "P/Q")]
        level: Option<String>,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Run the verification checks and print a PASS/FAIL table.
    Verify {
        /// Which suite to run.
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
}

fn parse_weight(s: &str) -> Result<Vec<Rat>, Error> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            let n: i128 = part
                .parse()
                .map_err(|_| Error::Parse(format!("weight coordinate '{part}' is not an integer")))?;
            Ok(rat(n))
        })
        .collect()
}

fn print_matrix(label: &str, m: &[Vec<i64>]) {
    println!("{label}:");
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn emit_module(
    data: &AffineData,
    result: &DemazureResult,
    graded: bool,
    out: OutFormat,
    extra: Option<String>,
) -> Result<(), Error> {
    match out {
        OutFormat::Json => {
            let obj = module_output(data, result)?;
            print!("{}", to_json_string(&obj)?);
        }
        OutFormat::Text => {
            println!("type: {}", data.name());
            println!(
                "weight: {}",
                result.lambda.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
            );
            println!("level: {}", fmt_rat(&result.level));
            println!("target: {}", result.target);
            println!("chain top: {}", result.top);
            println!("word length: {}", result.word.len());
            if let Some(line) = extra {
                println!("{line}");
            }
            println!("dimension: {}", result.dimension());
            if graded {
                for (deg, piece) in result.graded().buckets() {
                    println!("degree {}: dimension {}", fmt_rat(deg), piece.dimension());
                }
            }
            let decomposition = result.decompose(data)?;
            let parts: Vec<String> = decomposition
                .parts()
                .iter()
                .map(|(mu, m)| {
                    let coords =
                        mu.iter().map(fmt_rat).collect::<Vec<_>>().join(",");
                    format!("V({coords}) x {m}")
                })
                .collect();
            println!("decomposition: {}", parts.join(" + "));
        }
    }
    Ok(())
}

fn cmd_data(type_name: &str, out: OutFormat) -> Result<ExitCode, Error> {
    let data = AffineData::parse(type_name)?;
    match out {
        OutFormat::Json => {
            let obj = serde_json::json!({
                "type": data.name(),
                "rank": data.rank(),
                "twist": data.twist(),
                "cartan": data.cartan(),
                "marks": data.marks(),
                "comarks": data.comarks(),
                "g0": data.g0().ftype().name(),
                "distinguished_level": fmt_rat(&data.distinguished_level()),
            });
            let mut s = serde_json::to_string_pretty(&obj)
                .map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            print!("{s}");
        }
        OutFormat::Text => {
            println!("type: {}", data.name());
            println!("rank: {} ({} nodes, node 0 affine)", data.rank(), data.num_nodes());
            print_matrix("cartan matrix", data.cartan());
            let fmt_row = |v: &[i64]| {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            };
            println!("marks: {}", fmt_row(data.marks()));
            println!("comarks: {}", fmt_row(data.comarks()));
            println!("finite subalgebra: {}", data.g0().ftype().name());
            println!("distinguished level: {}", fmt_rat(&data.distinguished_level()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_demazure(
    type_name: &str,
    level: &str,
    weight: &str,
    graded: bool,
    out: OutFormat,
) -> Result<ExitCode, Error> {
    let data = AffineData::parse(type_name)?;
    let k = parse_rat(level)?;
    let lambda = parse_weight(weight)?;
    let result = demazure_d(&data, k, &lambda)?;
    emit_module(&data, &result, graded, out, None)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_weyl(
    type_name: &str,
    weight: &str,
    graded: bool,
    out: OutFormat,
) -> Result<ExitCode, Error> {
    let data = AffineData::parse(type_name)?;
    let lambda = parse_weight(weight)?;
    let report = weyl_char(&data, &lambda)?;
    let ident = &report.identification;
    let extra = format!(
        "chain top node: {} (predicted {}, {})",
        ident.node,
        ident
            .expected_node
            .map_or_else(|| "none".to_string(), |n| n.to_string()),
        if ident.matches { "matches" } else { "MISMATCH" }
    );
    emit_module(&data, &report.demazure, graded, out, Some(extra))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(
    type_name: &str,
    weight: &str,
    level: Option<&str>,
    out: OutFormat,
) -> Result<ExitCode, Error> {
    let data = AffineData::parse(type_name)?;
    let lambda = parse_weight(weight)?;
    let result = match level {
        Some(s) => demazure_d(&data, parse_rat(s)?, &lambda)?,
        None => weyl_char(&data, &lambda)?.demazure,
    };
    match out {
        OutFormat::Json => emit_module(&data, &result, false, out, None)?,
        OutFormat::Text => {
            let decomposition = result.decompose(&data)?;
            for (mu, m) in decomposition.parts() {
                let coords = mu.iter().map(fmt_rat).collect::<Vec<_>>().join(",");
                println!("V({coords}) x {m}");
            }
            println!(
                "total: {} summands, dimension {}",
                decomposition.num_summands(),
                result.dimension()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: SuiteArg, out: OutFormat) -> Result<ExitCode, Error> {
    let suite = match suite {
        SuiteArg::Paper => Suite::Reference,
        SuiteArg::Properties => Suite::Properties,
        SuiteArg::All => Suite::All,
    };
    let outcomes = run_suite(suite);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    match out {
        OutFormat::Json => {
            let rows: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "name": o.name,
                        "passed": o.passed,
                        "detail": o.detail,
                    })
                })
                .collect();
            let obj = serde_json::json!({ "checks": rows, "failed": failed });
            let mut s = serde_json::to_string_pretty(&obj)
                .map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            print!("{s}");
        }
        OutFormat::Text => {
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                println!("{status}  {:<36} {}", o.name, o.detail);
            }
            println!(
                "{} checks, {} failed",
                outcomes.len(),
                failed
            );
        }
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Data { type_arg, out } => cmd_data(&type_arg.type_name, out),
        Command::Demazure { type_arg, level, weight, graded, out } => {
            cmd_demazure(&type_arg.type_name, &level, &weight, graded, out)
        }
        Command::Weyl { type_arg, weight, graded, out } => {
            cmd_weyl(&type_arg.type_name, &weight, graded, out)
        }
        Command::Decompose { type_arg, weight, level, out } => {
            cmd_decompose(&type_arg.type_name, &weight, level.as_deref(), out)
        }
        Command::Verify { suite, out } => cmd_verify(suite, out),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            ExitCode::from(2)
        }
    }
}

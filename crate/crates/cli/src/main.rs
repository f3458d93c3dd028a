//! `gentotient`: evaluate phi(G) and related quantities on group
//! expressions, run verification suites, solve phi(G) = p.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gentotient::class_c::{catalog_scan_with, solve_phi_eq_prime, SolutionKind};
use gentotient::expr::parse_with;
use gentotient::registry::{Registry, DEFAULT_REGISTRY_FILE, REGISTRY_ENV_VAR};
use gentotient::verify::{self, Report, Suite};
use gentotient::{group, Error};
use serde_json::json;

#[derive(Parser)]
#[command(name = "gentotient", version, about = "Generalized Euler totient of finite groups")]
struct Cli {
    /// Registry of imported groups, referenced in expressions as @id.
    #[arg(long, global = true, env = REGISTRY_ENV_VAR, default_value = DEFAULT_REGISTRY_FILE)]
    registry: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a quantity on a group expression such as Z6xS3 or MC(4,2,2,3).
    Eval {
        expr: String,
        #[arg(value_enum, default_value_t = Quantity::Report)]
        quantity: Quantity,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits 1 if any row fails.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// List the groups with phi(G) = p for a prime p.
    Solve {
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Validate a Cayley table or permutation list and register it.
    Import {
        path: PathBuf,
        /// Registry id; defaults to the file stem.
        #[arg(long)]
        id: Option<String>,
    },
    /// Catalog groups of order at most --bound with phi(G) = target.
    Scan {
        target: u64,
        #[arg(long, default_value_t = 100)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Phi,
    Exp,
    Order,
    Spectrum,
    Report,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidParams(_) | Error::Domain(_) | Error::Precondition(_) => 2,
        Error::ResourceLimit { .. } => 3,
        Error::Import(_) | Error::Io(_) => 4,
        Error::Integrity(_) | Error::Realization(_) => 1,
    }
}

fn eval(registry: &Registry, expr: &str, quantity: Quantity, as_json: bool) -> gentotient::Result<String> {
    let g = parse_with(expr, Some(registry))?;
    Ok(match quantity {
        Quantity::Phi => group::phi(&g)?.to_string(),
        Quantity::Exp => group::exponent(&g)?.to_string(),
        Quantity::Order => g.order().to_string(),
        Quantity::Spectrum => {
            let s = group::order_spectrum(&g)?;
            if as_json {
                let counts: serde_json::Map<String, serde_json::Value> = s
                    .counts()
                    .iter()
                    .map(|(d, c)| (d.to_string(), big_json(c)))
                    .collect();
                serde_json::to_string_pretty(&json!({
                    "group": g.to_string(),
                    "order": big_json(s.group_order()),
                    "exponent": s.exponent()?,
                    "counts": counts,
                }))
                .expect("json")
            } else {
                let mut out = String::from("order count\n");
                for (d, c) in s.counts() {
                    out += &format!("{d} {c}\n");
                }
                out + &format!("exp {}", s.exponent()?)
            }
        }
        Quantity::Report => {
            let r = group::report(&g)?;
            if as_json {
                serde_json::to_string_pretty(&r).expect("json")
            } else {
                let pi: Vec<String> = r.pi_e.iter().map(u64::to_string).collect();
                [
                    format!("group       {}", r.group),
                    format!("order       {}", r.order),
                    format!("exponent    {}", r.exponent),
                    format!("phi         {}", r.phi_g),
                    format!("k           {}", r.k),
                    format!("orders      {}", pi.join(",")),
                    format!("in class C  {}", r.in_class_c),
                    format!("phi(order)  {}", r.phi_of_order),
                    format!("phi(exp)    {}", r.phi_of_exp),
                    format!("phi = phi(order)  {}", r.eq_order_flag),
                    format!("phi = phi(exp)    {}", r.eq_exp_flag),
                ]
                .join("\n")
            }
        }
    })
}

fn big_json(v: &num_bigint::BigUint) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match v.to_u64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

fn to_csv(report: &Report) -> String {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(["label", "expected", "computed", "status"]).expect("csv");
    for r in &report.rows {
        w.write_record([
            r.label.clone(),
            r.expected.to_string(),
            r.computed.to_string(),
            r.status.to_string(),
        ])
        .expect("csv");
    }
    String::from_utf8(w.into_inner().expect("csv")).expect("utf-8")
}

fn run(cli: Cli) -> gentotient::Result<ExitCode> {
    match cli.command {
        Command::Eval { expr, quantity, json } => {
            let registry = Registry::load(&cli.registry)?;
            println!("{}", eval(&registry, &expr, quantity, json)?);
        }
        Command::Verify { suite, json, csv } => {
            let report = verify::run(suite.parse()?)?;
            if json {
                println!("{}", report.to_json());
            } else if csv {
                print!("{}", to_csv(&report));
            } else {
                print!("{}", report.to_text());
            }
            if !report.all_pass() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Solve { p, json } => {
            let s = solve_phi_eq_prime(p)?;
            let names: Vec<String> = s.specs.iter().map(|g| g.to_string()).collect();
            if json {
                let groups: Vec<_> = s
                    .specs
                    .iter()
                    .map(|g| json!({"group": g.to_string(), "order": big_json(&g.order())}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"p": p, "kind": s.kind, "groups": groups}))
                        .expect("json")
                );
            } else if s.kind == SolutionKind::Empty {
                println!("phi(G) = {p}: no solutions");
            } else {
                println!("phi(G) = {p}: {}", names.join(", "));
            }
        }
        Command::Import { path, id } => {
            let mut registry = Registry::load(&cli.registry)?;
            let (id, g) = registry.import_file(&path, id.as_deref())?;
            registry.save(&cli.registry)?;
            println!("registered @{id} (order {}) in {}", g.order(), cli.registry.display());
        }
        Command::Scan { target, bound, json } => {
            let registry = Registry::load(&cli.registry)?;
            let found = catalog_scan_with(target, bound, &registry.specs()?)?;
            let names: Vec<String> = found.iter().map(|g| g.to_string()).collect();
            if json {
                println!("{}", serde_json::to_string_pretty(&names).expect("json"));
            } else {
                for n in names {
                    println!("{n}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

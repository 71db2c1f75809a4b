use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use tcone::analysis::{AnalysisReport, SCHEMA_VERSION};
use tcone::parse::{parse_order, parse_semigroup};
use tcone::ring_invariants::goto_number;
use tcone::search::{search, Check, SearchOptions};
use tcone::toric::{classify, defining_ideal, special_element};
use tcone::{Error, MonomialOrder, NumericalSemigroup, StandardBasis};

/// Tangent cones, standard bases and Goto numbers of numerical semigroup rings.
#[derive(Parser)]
#[command(name = "tcone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Generators, e.g. `5 6 13` or `5,6,13`.
    #[arg(required = true, num_args = 1..)]
    gens: Vec<String>,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: ideal, standard basis, tangent cone, invariants.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Variable order such as `x3,x2,x1`.
        #[arg(long)]
        order: Option<String>,
    },
    /// Minimal standard basis of I and the generators of I*.
    Basis {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        order: Option<String>,
    },
    /// Structure-theorem classification of the defining ideal.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Goto numbers of t^a for the generators, f + n1 + 1 and any `--at` values.
    Goto {
        #[command(flatten)]
        input: Input,
        #[arg(long = "at")]
        at: Vec<u64>,
    },
    /// Exhaustive check over all semigroups with generators up to a bound.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        max_gen: u64,
        /// mu13 | gorenstein-chain | dagger | buchsbaum
        #[arg(long)]
        check: Check,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        symmetric_only: bool,
        #[arg(long)]
        bresinsky_d5_filter: bool,
        #[arg(long)]
        json: bool,
        /// Emit one CSV row per semigroup.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
}

enum Failure {
    Invalid(Error),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

fn semigroup(input: &Input) -> Result<NumericalSemigroup, Error> {
    parse_semigroup(&input.gens.join(" "))
}

fn order_for(g: &NumericalSemigroup, order: &Option<String>) -> Result<MonomialOrder, Error> {
    match order {
        Some(s) => parse_order(s, g.embedding_dimension()),
        None => Ok(MonomialOrder::default_for(g.embedding_dimension())),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Analyze { input, order } => {
            let g = semigroup(&input)?;
            let order = order_for(&g, &order)?;
            let report = AnalysisReport::new(&g, Some(order))?;
            if input.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if !report.violations.is_empty() {
                return Err(Failure::Violation(format!("{g}: {}", report.violations.join("; "))));
            }
        }
        Command::Basis { input, order } => {
            let g = semigroup(&input)?;
            let order = order_for(&g, &order)?;
            let ideal = defining_ideal(&g);
            let sb = StandardBasis::compute(&ideal.elements(), &order, g.generators())?;
            let basis: Vec<String> = sb.generators.iter().map(ToString::to_string).collect();
            let istar = sb.initial_form_ideal().render();
            if input.json {
                print_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "generators": g.generators(),
                    "order": order.render(),
                    "standard_basis": basis,
                    "initial_form_ideal": istar,
                }));
            } else {
                println!("standard basis ({}):", order.render());
                basis.iter().for_each(|b| println!("  {b}"));
                println!("I*:");
                istar.iter().for_each(|b| println!("  {b}"));
            }
        }
        Command::Classify { input } => {
            let g = semigroup(&input)?;
            let ideal = defining_ideal(&g);
            let class = classify(&ideal)?;
            let special = special_element(&ideal, &class).ok();
            if input.json {
                print_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "generators": g.generators(),
                    "defining_ideal": ideal.render(),
                    "classification": class,
                    "special_element": special,
                }));
            } else {
                println!("{}", ideal.render().join("\n"));
                println!("{class:?}");
                if let Some(s) = special {
                    println!("f + n1 = {} with factorization {:?}", s.value, s.coefficients);
                }
            }
        }
        Command::Goto { input, at } => {
            let g = semigroup(&input)?;
            let special = (g.frobenius() + g.multiplicity() as i64 + 1) as u64;
            let mut values: Vec<u64> = g.generators().to_vec();
            values.push(special);
            values.extend(at);
            let numbers = values
                .iter()
                .map(|&a| Ok((a, goto_number(&g, a)?)))
                .collect::<Result<Vec<(u64, u32)>, Error>>()?;
            if input.json {
                let map: serde_json::Map<String, serde_json::Value> =
                    numbers.iter().map(|(a, n)| (a.to_string(), json!(n))).collect();
                print_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "generators": g.generators(),
                    "goto": map,
                }));
            } else {
                for (a, n) in numbers {
                    println!("g(t^{a}) = {n}");
                }
            }
        }
        Command::Search {
            dim,
            max_gen,
            check,
            workers,
            symmetric_only,
            bresinsky_d5_filter,
            json,
            csv,
        } => {
            if let Some(n) = workers {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .map_err(|e| Failure::Invalid(Error::Parse(e.to_string())))?;
            }
            let opts = SearchOptions {
                dim,
                max_gen,
                check,
                symmetric_only,
                bresinsky_d5_filter,
            };
            let summary = search(&opts)?;
            if csv {
                let mut w = csv::Writer::from_writer(std::io::stdout());
                for row in &summary.rows {
                    w.serialize(row).map_err(|e| Failure::Invalid(Error::Parse(e.to_string())))?;
                }
                w.flush().ok();
            } else if json {
                let mut v = serde_json::to_value(&summary).expect("summaries serialize");
                v["schema_version"] = json!(SCHEMA_VERSION);
                print_json(&v);
            } else {
                println!("check {check}, dim {dim}, max generator {max_gen}");
                println!("semigroups examined: {}", summary.examined);
                println!("max mu(I): {}  max mu(I*): {}", summary.max_mu_i, summary.max_mu_istar);
                println!("over symmetric semigroups: max mu(I): {}", summary.max_mu_i_symmetric);
                println!(
                    "over Gorenstein tangent cones: max mu(I): {}  max mu(I*): {}",
                    summary.max_mu_i_gorenstein, summary.max_mu_istar_gorenstein
                );
                println!("violations: {}", summary.violations.len());
                for v in &summary.violations {
                    println!("  <{}>: {}", v.generators, v.violation);
                }
            }
            if !summary.violations.is_empty() {
                return Err(Failure::Violation(format!("{} violations", summary.violations.len())));
            }
            if check == Check::Mu13 && summary.exceeds_thirteen() {
                let worst: Vec<&str> = summary
                    .rows
                    .iter()
                    .filter(|r| (r.symmetric && r.mu_i > 13) || (r.gorenstein == "true" && r.mu_istar > 13))
                    .map(|r| r.generators.as_str())
                    .collect();
                return Err(Failure::Violation(format!("more than 13 generators at {}", worst.join(" | "))));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    std::io::stdout().flush().ok();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(3)
        }
    }
}

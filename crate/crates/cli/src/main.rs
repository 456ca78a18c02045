//! Command-line surface for the orbit-count lower-bound library.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse/schema error (also used
//! by clap for usage errors). Every randomized path honors `--seed`, and
//! identical inputs with the same seed produce byte-identical output.

mod render;
mod schema;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use orbitbound_core::bounds::{delta, orbit_report, ReportConfig};
use orbitbound_core::group::GroupOptions;
use orbitbound_core::meataxe::regular_composition_factors;
use orbitbound_core::presentation::{local_betti, LinearRep};

use render::Format;
use schema::{ParsedExpr, SCHEMA_VERSION};

#[derive(Parser)]
#[command(
    name = "orbitbound",
    version,
    about = "Exact lower bounds for 1-periodic orbit counts from finite-group and chain-complex data"
)]
struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cap on materialized group orders.
    #[arg(long, global = true, default_value_t = orbitbound_core::group::DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal number of generators of the augmentation ideal of Z[G].
    Delta { group: PathBuf },
    /// Minimal number of generators of the group, by exhaustive search.
    Dgen { group: PathBuf },
    /// All irreducible representations over F_p, with multiplicities in
    /// the regular module.
    Irreps {
        group: PathBuf,
        #[arg(long)]
        prime: u64,
    },
    /// Betti numbers b_0, b_1 of a presentation with local coefficients
    /// (trivial coefficients unless --rep gives generator images).
    Betti {
        presentation: PathBuf,
        /// Representation file: one invertible matrix per presentation
        /// generator; relators are verified to map to the identity.
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long)]
        prime: u64,
    },
    /// Fold a Z-graded complex to the cyclic grading mod k.
    Fold {
        complex: PathBuf,
        #[arg(long = "mod")]
        modulus: usize,
    },
    /// Per-index orbit-count lower bounds for a manifold descriptor.
    Bounds {
        descriptor: PathBuf,
        /// Primes to scan (defaults to the primes dividing the cover
        /// group's order).
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, default_value_t = orbitbound_core::coset::DEFAULT_COSET_BUDGET)]
        coset_budget: usize,
        /// Cap on irreducible dimensions scanned by the second-degree
        /// rank-defect bound.
        #[arg(long)]
        dim_cap: Option<usize>,
    },
    /// Evaluate a Novikov-series expression file.
    Novikov {
        expr: PathBuf,
        /// Default truncation depth below the maximal input level, when
        /// the file does not pin a cutoff.
        #[arg(long, default_value_t = 40)]
        truncation: i64,
    },
}

enum Failure {
    Parse(anyhow::Error),
    Domain(anyhow::Error),
}

fn parse_err(e: anyhow::Error) -> Failure {
    Failure::Parse(e)
}

fn domain_err(e: anyhow::Error) -> Failure {
    Failure::Domain(e)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn validate_primes(primes: &Option<Vec<u64>>) -> Result<()> {
    if let Some(ps) = primes {
        for &p in ps {
            if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                bail!("{p} is not prime");
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    let opts = GroupOptions {
        max_order: cli.max_order,
        ..GroupOptions::default()
    };
    match cli.command {
        Command::Delta { group } => {
            let group = schema::load_group(&group, opts).map_err(parse_err)?;
            let breakdown = delta(&group, cli.seed);
            render::emit(
                render::delta_json(&breakdown),
                render::delta_table(&breakdown),
                cli.format,
            );
            Ok(())
        }
        Command::Dgen { group } => {
            let group = schema::load_group(&group, opts).map_err(parse_err)?;
            let d = group.min_generators();
            render::emit(
                json!({"schema": SCHEMA_VERSION, "min_generators": d}),
                format!("minimal number of generators = {d}\n"),
                cli.format,
            );
            Ok(())
        }
        Command::Irreps { group, prime } => {
            validate_primes(&Some(vec![prime])).map_err(parse_err)?;
            let group = schema::load_group(&group, opts).map_err(parse_err)?;
            let factors = regular_composition_factors(&group, prime, cli.seed);
            render::emit(
                render::irreps_json(prime, &factors),
                render::irreps_table(prime, group.order(), &factors),
                cli.format,
            );
            Ok(())
        }
        Command::Betti {
            presentation,
            rep,
            prime,
        } => {
            validate_primes(&Some(vec![prime])).map_err(parse_err)?;
            let pres = schema::load_presentation(&presentation).map_err(parse_err)?;
            let lrep = match rep {
                None => LinearRep::trivial(&pres, prime),
                Some(path) => {
                    let file: schema::RepFile = serde_json::from_str(
                        &std::fs::read_to_string(&path)
                            .map_err(|e| parse_err(anyhow!("cannot read rep file: {e}")))?,
                    )
                    .map_err(|e| parse_err(anyhow!("cannot parse rep file: {e}")))?;
                    if file.prime != prime {
                        return Err(domain_err(anyhow!(
                            "rep file is over F_{}, --prime says {prime}",
                            file.prime
                        )));
                    }
                    let mats = schema::rep_matrices_from_file(&file).map_err(parse_err)?;
                    LinearRep::new(&pres, file.prime, file.dim, mats)
                        .map_err(|e| domain_err(anyhow!("invalid representation: {e}")))?
                }
            };
            let b0 = local_betti(&pres, &lrep, 0);
            let b1 = local_betti(&pres, &lrep, 1);
            render::emit(
                render::betti_json(prime, lrep.dim, b0, b1),
                render::betti_table(prime, lrep.dim, b0, b1),
                cli.format,
            );
            Ok(())
        }
        Command::Fold { complex, modulus } => {
            let c = schema::load_complex(&complex, opts).map_err(parse_err)?;
            let folded = c.fold(modulus).map_err(|e| domain_err(anyhow!("{e}")))?;
            let homology = folded.homology_dims().ok();
            render::emit(
                render::fold_json(&folded, homology.as_deref()),
                render::fold_table(&folded, homology.as_deref()),
                cli.format,
            );
            Ok(())
        }
        Command::Bounds {
            descriptor,
            primes,
            coset_budget,
            dim_cap,
        } => {
            validate_primes(&primes).map_err(parse_err)?;
            let descriptor = schema::load_descriptor(&descriptor, opts).map_err(parse_err)?;
            let config = ReportConfig {
                primes,
                seed: cli.seed,
                coset_budget,
                dim_cap,
            };
            let report = orbit_report(&descriptor, &config).map_err(|e| match e {
                orbitbound_core::bounds::BoundsError::InvalidDescriptor(_) => {
                    parse_err(anyhow!("{e}"))
                }
                other => domain_err(anyhow!("{other}")),
            })?;
            render::emit(
                render::report_json(&report),
                render::report_table(&report),
                cli.format,
            );
            Ok(())
        }
        Command::Novikov { expr, truncation } => {
            let parsed = schema::load_expr(&expr, opts, truncation).map_err(parse_err)?;
            run_novikov(parsed, cli.format).map_err(domain_err)
        }
    }
}

fn run_novikov(parsed: ParsedExpr, format: Format) -> Result<()> {
    match parsed {
        ParsedExpr::Integer { op, series } => {
            let result = match op.as_str() {
                "mul" => fold_mul_int(&series)?,
                "add" => {
                    let mut acc = series
                        .first()
                        .cloned()
                        .ok_or_else(|| anyhow!("'add' needs at least one series"))?;
                    for s in &series[1..] {
                        acc = acc.add(s).map_err(|e| anyhow!("{e}"))?;
                    }
                    acc
                }
                other => {
                    bail!("operation '{other}' is not defined for integer coefficients (mul | add)")
                }
            };
            render::emit(
                json!({"schema": SCHEMA_VERSION, "result": render::series_json_int(&result)}),
                render::series_table(&result, |c| c.to_string()),
                format,
            );
        }
        ParsedExpr::PrimeField { op, series, prime } => {
            let result = match op.as_str() {
                "mul" => {
                    let mut it = series.iter();
                    let mut acc = it
                        .next()
                        .cloned()
                        .ok_or_else(|| anyhow!("'mul' needs a series"))?;
                    for s in it {
                        acc = acc.mul(s).map_err(|e| anyhow!("{e}"))?;
                    }
                    acc
                }
                "invert" => {
                    let s = series
                        .first()
                        .ok_or_else(|| anyhow!("'invert' needs a series"))?;
                    s.invert().map_err(|e| anyhow!("{e}"))?
                }
                other => bail!("operation '{other}' is not defined over F_{prime} (mul | invert)"),
            };
            render::emit(
                json!({"schema": SCHEMA_VERSION, "result": render::series_json_fp(&result)}),
                render::series_table(&result, |c| c.value.to_string()),
                format,
            );
        }
        ParsedExpr::GroupRing { op, series, group } => match op.as_str() {
            "mul" => {
                let mut it = series.iter();
                let mut acc = it
                    .next()
                    .cloned()
                    .ok_or_else(|| anyhow!("'mul' needs a series"))?;
                for s in it {
                    acc = acc.mul(s).map_err(|e| anyhow!("{e}"))?;
                }
                render::emit(
                    json!({"schema": SCHEMA_VERSION, "result": render::series_json_group(&acc)}),
                    render::series_table(&acc, |c| {
                        let parts: Vec<String> = c
                            .terms
                            .iter()
                            .map(|(&g, &v)| format!("{v}*{}", c.group.label(g)))
                            .collect();
                        parts.join(" + ")
                    }),
                    format,
                );
            }
            "augment" => {
                let s = series
                    .first()
                    .ok_or_else(|| anyhow!("'augment' needs a series"))?;
                let result = s.augment();
                render::emit(
                    json!({"schema": SCHEMA_VERSION, "result": render::series_json_int(&result)}),
                    render::series_table(&result, |c| c.to_string()),
                    format,
                );
            }
            "identify" => {
                let s = series
                    .first()
                    .ok_or_else(|| anyhow!("'identify' needs a series"))?;
                let parts = s.split_by_group_element();
                let mut components = BTreeMap::new();
                let mut table = String::new();
                for (g, series) in &parts {
                    components.insert(group.label(*g).to_string(), render::series_json_int(series));
                    table.push_str(&format!("component at {}:\n", group.label(*g)));
                    table.push_str(&render::series_table(series, |c| c.to_string()));
                }
                render::emit(
                    json!({"schema": SCHEMA_VERSION, "components": components}),
                    table,
                    format,
                );
            }
            other => bail!(
                "operation '{other}' is not defined over a group ring (mul | augment | identify)"
            ),
        },
    }
    Ok(())
}

fn fold_mul_int(
    series: &[orbitbound_core::novikov::NovikovSeries<i64>],
) -> Result<orbitbound_core::novikov::NovikovSeries<i64>> {
    let mut it = series.iter();
    let mut acc = it
        .next()
        .cloned()
        .ok_or_else(|| anyhow!("'mul' needs a series"))?;
    for s in it {
        acc = acc.mul(s).map_err(|e| anyhow!("{e}"))?;
    }
    Ok(acc)
}

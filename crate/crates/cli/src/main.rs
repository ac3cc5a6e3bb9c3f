//! `scrolls`: enumerate, classify and tabulate incidence scrolls.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use scrolls_core::base::parse_dims;
use scrolls_core::tables::{check_row, render_table, table, TableFormat};
use scrolls_core::{
    cache, enumerate_bases, CycleSum, Engine, EnumerationFilter, GrassmannSpec, IncidenceBase,
    ScrollError, ScrollReport,
};

/// Largest ambient dimension enumerated without `--force`.
const SOFT_CAP: u32 = 12;

#[derive(Parser, Debug)]
#[command(
    name = "scrolls",
    version,
    about = "Incidence scrolls and Schubert calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Load memoized invariants from PATH before running and save them after.
    #[arg(long, value_name = "PATH", global = true)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every incidence base of P^n together with its scroll.
    Enumerate {
        #[arg(short = 'n', long = "ambient")]
        n: u32,
        /// Only bases whose spaces pairwise span P^n and contain no point.
        #[arg(long)]
        nondegenerate: bool,
        /// Only bases containing a space of dimension K.
        #[arg(long, value_name = "K")]
        contains_dim: Option<u32>,
        /// Only scrolls of genus G.
        #[arg(long, value_name = "G")]
        genus: Option<i64>,
        /// Include degeneration witnesses (json only).
        #[arg(long)]
        tree: bool,
        /// Allow n above the soft cap.
        #[arg(long)]
        force: bool,
    },
    /// Classify the scroll of one base.
    Analyze {
        #[arg(short = 'n', long = "ambient")]
        n: u32,
        /// Comma-separated dimensions of the base spaces.
        #[arg(long, value_name = "D1,D2,...")]
        base: String,
        /// Include the degeneration witness.
        #[arg(long)]
        tree: bool,
    },
    /// Reproduce a closed-form table next to the engine's values.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
    },
    /// Multiply the fundamental class of G(l,n) by special classes w(h,n).
    Product {
        #[arg(long, value_name = "L,N")]
        grassmann: String,
        #[arg(long, value_name = "H1,H2,...")]
        specials: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Md,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            let unresolved = matches!(
                err.downcast_ref::<ScrollError>(),
                Some(ScrollError::UnresolvedDegeneration(_))
            );
            ExitCode::from(if unresolved { 3 } else { 2 })
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    let engine = Engine::new();
    if let Some(path) = &cli.cache {
        if path.exists() {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading cache {}", path.display()))?;
            cache::import(&engine, &text)?;
        }
    }

    let out = match &cli.command {
        Command::Enumerate {
            n,
            nondegenerate,
            contains_dim,
            genus,
            tree,
            force,
        } => {
            if *n > SOFT_CAP && !force {
                bail!("n={n} is above the soft cap {SOFT_CAP}; pass --force to run anyway");
            }
            let filter = EnumerationFilter {
                nondegenerate_only: *nondegenerate,
                contains_dim: *contains_dim,
            };
            let with_tree = *tree && cli.format == Format::Json;
            let bases = enumerate_bases(*n, filter)?;
            let reports = bases
                .par_iter()
                .map(|b| engine.classify(b, with_tree))
                .collect::<Result<Vec<_>, _>>()?;
            let reports: Vec<ScrollReport> = reports
                .into_iter()
                .filter(|r| genus.is_none_or(|g| r.genus == g))
                .collect();
            reports_out(&reports, cli.format, false)?
        }
        Command::Analyze { n, base, tree } => {
            let base = IncidenceBase::new(*n, parse_dims(base)?)?;
            let report = engine
                .classify(&base, *tree)
                .with_context(|| format!("cannot classify {base}"))?;
            reports_out(std::slice::from_ref(&report), cli.format, true)?
        }
        Command::Table { id } => table_out(&engine, *id, cli.format)?,
        Command::Product {
            grassmann,
            specials,
        } => product_out(grassmann, specials, cli.format)?,
    };

    if let Some(path) = &cli.cache {
        std::fs::write(path, cache::export(&engine))
            .with_context(|| format!("writing cache {}", path.display()))?;
    }
    Ok(out)
}

fn reports_out(reports: &[ScrollReport], format: Format, single: bool) -> anyhow::Result<String> {
    Ok(match format {
        Format::Text => render::text(reports, single),
        Format::Csv => render::csv(reports),
        Format::Md => render::markdown(reports),
        Format::Json if single => serde_json::to_string_pretty(&reports[0])? + "\n",
        Format::Json => serde_json::to_string_pretty(reports)? + "\n",
    })
}

#[derive(Serialize)]
struct CheckedRow<'a> {
    printed: &'a scrolls_core::tables::TableRow,
    engine: &'a scrolls_core::tables::RowCheck,
}

fn table_out(engine: &Engine, id: u8, format: Format) -> anyhow::Result<String> {
    let rows = table(id)?
        .into_iter()
        .map(|row| {
            let check = check_row(engine, &row)?;
            Ok((row, check))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(match format {
        Format::Json => {
            let rows: Vec<CheckedRow> = rows
                .iter()
                .map(|(printed, engine)| CheckedRow { printed, engine })
                .collect();
            serde_json::to_string_pretty(&rows)? + "\n"
        }
        Format::Csv => render_table(id, &rows, TableFormat::Csv),
        Format::Text | Format::Md => render_table(id, &rows, TableFormat::Markdown),
    })
}

#[derive(Serialize)]
struct ProductOut {
    grassmann: (u32, u32),
    specials: Vec<u32>,
    cycle: String,
    terms: Vec<(Vec<u32>, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<String>,
}

fn product_out(grassmann: &str, specials: &str, format: Format) -> anyhow::Result<String> {
    let [l, n] = parse_dims(grassmann)?[..] else {
        bail!("--grassmann expects L,N, got `{grassmann}`");
    };
    let spec = GrassmannSpec::new(l, n)?;
    let hs = if specials.trim().is_empty() {
        Vec::new()
    } else {
        parse_dims(specials)?
    };
    let sum: CycleSum = spec.special_product(&hs)?;
    let point = spec.point_class();
    let degree = (sum.dimension() == Some(0)).then(|| sum.coefficient_of(&point).to_string());
    let out = ProductOut {
        grassmann: (l, n),
        specials: hs,
        cycle: sum.to_string(),
        terms: sum
            .terms()
            .map(|(idx, c)| (idx.entries().to_vec(), c.to_string()))
            .collect(),
        degree,
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&out)? + "\n",
        Format::Csv => {
            let mut s = String::from("index,coefficient\n");
            for (idx, c) in sum.terms() {
                s.push_str(&format!("{idx},{c}\n"));
            }
            s
        }
        Format::Md => {
            let mut s = String::from("| index | coefficient |\n|---|---|\n");
            for (idx, c) in sum.terms() {
                s.push_str(&format!("| {idx} | {c} |\n"));
            }
            s
        }
        Format::Text => match &out.degree {
            Some(d) => format!("{}\ndegree: {d}\n", out.cycle),
            None => format!("{}\n", out.cycle),
        },
    })
}

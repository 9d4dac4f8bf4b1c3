use std::fmt::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use snrep::characters::{character_table, CharacterTable};
use snrep::claims::{g_claims, survey, Claim, GShape};
use snrep::perm_core::factorial;
use snrep::projectors::GMatrixDoc;
use snrep::representations::RepDoc;
use snrep::tableaux::{dimension, partitions, standard_tableaux};
use snrep::{verify, Level, Limits, Partition, Permutation, StandardTableau};

use crate::cache::Cache;
use crate::error::{CliError, EXIT_VERIFY_FAILED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub struct Context {
    pub format: Format,
    pub limits: Limits,
    pub seed: u64,
    pub cache: Cache,
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n == 0 || n > Permutation::MAX_DEGREE {
        return Err(CliError::Usage(format!("n must be between 1 and {}", Permutation::MAX_DEGREE)));
    }
    Ok(())
}

pub fn parse_partition(n: usize, text: &str) -> Result<Partition, CliError> {
    check_n(n)?;
    let p: Partition = text
        .parse()
        .map_err(|e: snrep::Error| CliError::Usage(e.to_string()))?;
    if p.size() != n {
        return Err(CliError::Usage(format!("partition {p} does not sum to {n}")));
    }
    Ok(p)
}

pub fn parse_permutation(n: usize, text: &str) -> Result<Permutation, CliError> {
    let p: Permutation = text
        .parse()
        .map_err(|e: snrep::Error| CliError::Usage(e.to_string()))?;
    if p.degree() != n {
        return Err(CliError::Usage(format!("permutation {p} has degree {}, expected {n}", p.degree())));
    }
    Ok(p)
}

fn guard(what: &'static str, n: usize, limit: usize) -> Result<(), CliError> {
    if n > limit {
        return Err(snrep::Error::CostGuard { what, n, limit }.into());
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct TableauEntry {
    index: usize,
    tableau: StandardTableau,
    reading: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableauxDoc {
    n: usize,
    partition: Partition,
    dim: usize,
    tableaux: Vec<TableauEntry>,
}

#[derive(Serialize, Deserialize)]
struct DimensionEntry {
    partition: Partition,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct DimensionsDoc {
    n: usize,
    dimensions: Vec<DimensionEntry>,
    sum_of_squares: String,
    factorial: String,
    holds: bool,
}

pub fn tableaux(ctx: &Context, n: usize, partition: Option<&str>) -> Result<Outcome, CliError> {
    check_n(n)?;
    let Some(text) = partition else {
        let doc: DimensionsDoc = ctx.cache.load_or_compute(&format!("tableaux_{n}.json"), || {
            let dimensions: Vec<DimensionEntry> = partitions(n)
                .into_iter()
                .map(|p| DimensionEntry { dim: dimension(&p), partition: p })
                .collect();
            let total: BigInt = dimensions.iter().map(|d| BigInt::from(d.dim).pow(2)).sum();
            let fact = factorial(n);
            Ok(DimensionsDoc {
                n,
                holds: total == fact,
                sum_of_squares: total.to_string(),
                factorial: fact.to_string(),
                dimensions,
            })
        })?;
        if ctx.format == Format::Json {
            return Ok(Outcome::ok(json(&doc)?));
        }
        let width = doc.dimensions.iter().map(|d| d.partition.to_string().len()).max().unwrap_or(0);
        let mut out = format!("partitions of {n}: {}\n", doc.dimensions.len());
        for d in &doc.dimensions {
            let _ = writeln!(out, "  {:<width$}  dim {}", d.partition.to_string(), d.dim);
        }
        let verdict = if doc.holds { "holds" } else { "FAILS" };
        let _ = writeln!(out, "sum of squared dimensions: {} = {n}! = {} ({verdict})", doc.sum_of_squares, doc.factorial);
        return Ok(Outcome::ok(out));
    };

    let shape = parse_partition(n, text)?;
    let doc: TableauxDoc = ctx
        .cache
        .load_or_compute(&format!("tableaux_{n}_{}.json", shape.dashed()), || {
            let tableaux: Vec<TableauEntry> = standard_tableaux(&shape)
                .into_iter()
                .enumerate()
                .map(|(k, t)| TableauEntry { index: k + 1, reading: t.reading_sequence(), tableau: t })
                .collect();
            Ok(TableauxDoc { n, partition: shape.clone(), dim: tableaux.len(), tableaux })
        })?;
    if ctx.format == Format::Json {
        return Ok(Outcome::ok(json(&doc)?));
    }
    let mut out = format!("shape {} of n={}: {} standard tableaux\n", doc.partition, doc.n, doc.dim);
    let width = doc.tableaux.iter().map(|t| t.tableau.to_string().len()).max().unwrap_or(0);
    let idx = doc.dim.to_string().len();
    for t in &doc.tableaux {
        let reading: Vec<String> = t.reading.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "  {:>idx$}  {:<width$}  reading {}",
            t.index,
            t.tableau.to_string(),
            reading.join(" ")
        );
    }
    Ok(Outcome::ok(out))
}

pub fn gmatrix(ctx: &Context, n: usize, partition: &str) -> Result<Outcome, CliError> {
    let shape = parse_partition(n, partition)?;
    let doc: GMatrixDoc = ctx.cache.load_or_compute(&GMatrixDoc::file_name(n, &shape), || {
        Ok(GMatrixDoc::new(&snrep::IrrepBundle::new(&shape)?))
    })?;
    if ctx.format == Format::Json {
        return Ok(Outcome::ok(json(&doc)?));
    }
    let out = format!(
        "shape {} of n={}: dim {}, f = {}\ng'\n{}g'^-1\n{}",
        doc.partition, doc.n, doc.dim, doc.scale, doc.g_prime, doc.g_prime_inverse
    );
    Ok(Outcome::ok(out))
}

pub fn rep(
    ctx: &Context,
    n: usize,
    partition: &str,
    permutation: Option<&str>,
    conventional: bool,
) -> Result<Outcome, CliError> {
    let shape = parse_partition(n, partition)?;
    let perms = match permutation {
        Some(text) => vec![parse_permutation(n, text)?],
        None => {
            guard("full group representation dump", n, ctx.limits.expansion)?;
            Permutation::all(n)
        }
    };
    let suffix = if conventional { "_m" } else { "" };
    let key = match permutation {
        Some(_) => {
            let images: Vec<String> = perms[0].images().iter().map(usize::to_string).collect();
            format!("rep_{n}_{}_{}{suffix}.json", shape.dashed(), images.join("-"))
        }
        None => format!("rep_{n}_{}{suffix}.json", shape.dashed()),
    };
    let doc: RepDoc = ctx.cache.load_or_compute(&key, || {
        Ok(RepDoc::new(&snrep::IrrepBundle::new(&shape)?, &perms, conventional)?)
    })?;
    if ctx.format == Format::Json {
        return Ok(Outcome::ok(json(&doc)?));
    }
    let label = if conventional { "x'(b) g'" } else { "x'(b)" };
    let mut out = format!("shape {} of n={}: {label}\n", doc.partition, doc.n);
    for e in &doc.matrices {
        let matrix = e.x.as_ref().or(e.m.as_ref()).expect("one of x or m is set");
        let _ = write!(out, "{}\n{matrix}", e.perm);
    }
    Ok(Outcome::ok(out))
}

pub fn chartable(ctx: &Context, n: usize) -> Result<Outcome, CliError> {
    check_n(n)?;
    guard("character table", n, ctx.limits.expansion)?;
    let table: CharacterTable = ctx
        .cache
        .load_or_compute(&format!("chartable_{n}.json"), || Ok(character_table(n, &ctx.limits)?))?;
    Ok(Outcome::ok(match ctx.format {
        Format::Json => json(&table)?,
        Format::Text => table.render_text(),
    }))
}

pub fn verify_cmd(ctx: &Context, n: usize, level: Level) -> Result<Outcome, CliError> {
    check_n(n)?;
    let report = verify::run(n, level, ctx.seed, &ctx.limits)?;
    let code = if report.passed { 0 } else { EXIT_VERIFY_FAILED };
    Ok(match ctx.format {
        Format::Json => Outcome { stdout: json(&report)?, stderr: report.summary(), code },
        Format::Text => Outcome { stdout: report.summary(), stderr: String::new(), code },
    })
}

#[derive(Serialize)]
struct ClaimsDoc {
    survey: Vec<GShape>,
    claims: Vec<Claim>,
}

pub fn claims(ctx: &Context, max_n: usize) -> Result<Outcome, CliError> {
    check_n(max_n)?;
    let doc = ClaimsDoc { survey: survey(max_n)?, claims: g_claims(max_n)? };
    if ctx.format == Format::Json {
        return Ok(Outcome::ok(json(&doc)?));
    }
    let mut out = String::new();
    for s in &doc.survey {
        let _ = writeln!(
            out,
            "n={} ({}) dim {}: g' {}, g'^-1 {} (max |entry| {})",
            s.n,
            s.partition,
            s.dim,
            if s.diagonal { "diagonal" } else { "non-diagonal" },
            if s.inverse_reduced { "reduced" } else { "not reduced" },
            s.inverse_max_abs
        );
    }
    for c in &doc.claims {
        let status = if c.holds { "HOLDS" } else { "DOES NOT HOLD" };
        let _ = writeln!(out, "claim {}: {status}: {} ({})", c.name, c.statement, c.detail);
    }
    Ok(Outcome::ok(out))
}

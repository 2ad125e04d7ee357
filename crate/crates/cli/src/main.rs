//! `multinom` — counts of distinct multinomial coefficients, their closed
//! forms, bounds, and coincidence tables, from the command line.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 computation budget
//! exceeded, 4 internal invariant failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use multinom::partitions::count_partitions;
use multinom::quasipoly::{partial_fractions, quasipolynomial};
use multinom::series::{lower_bound, upper_bound};
use multinom::signatures::count_distinct;
use multinom::{generating_function, groebner_run, irreducible_pairs, Error, PartSet};

#[derive(Parser)]
#[command(
    name = "multinom",
    version,
    about = "Count distinct multinomial coefficients, derive their closed forms, and explore bounds and coincidences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate counts and bounds side by side over a range of n
    Table(TableArgs),
    /// Count the distinct coefficients with upper entry n
    Count(CountArgs),
    /// Derive the closed-form generating function for a finite part set
    Gf(GfArgs),
    /// Derive the quasipolynomial closed form for a finite part set
    ClosedForm(PipelineArgs),
    /// Print the reduced binomial basis and its eliminated part
    Gb(PipelineArgs),
    /// List or count coincidence pairs with no shared part
    Pairs(PairsArgs),
    /// Show the proven bound chain at one n
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// First n
    #[arg(long, default_value_t = 0)]
    from: u64,
    /// Last n (inclusive)
    #[arg(long, default_value_t = 70)]
    to: u64,
    /// Row spacing
    #[arg(long, default_value_t = 10)]
    step: u64,
    /// Comma-separated subset of p_P,L_S,p_star,M,p_hash,U,p
    #[arg(long, default_value = "p_P,L_S,p_star,M,p_hash,U,p")]
    columns: String,
    /// Largest n for which the M column may be requested
    #[arg(long, default_value_t = 70)]
    m_limit: u64,
    /// Pair budget for the basis computation behind the L_S and U columns
    #[arg(long, default_value_t = 1_000_000)]
    budget: usize,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

#[derive(Args)]
struct CountArgs {
    /// Upper entry of the coefficients
    #[arg(long)]
    n: u64,
    /// Part set: all, primes, 1+primes, star, hash, 1..6, or {1,2,5}
    #[arg(long, default_value = "all")]
    parts: String,
    /// Only count coefficients with at most this many lower entries
    #[arg(long)]
    max_parts: Option<u64>,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

#[derive(Args)]
struct GfArgs {
    /// Finite part set, e.g. 1..6 or {1,2,5}
    #[arg(long)]
    parts: String,
    /// Pair budget for the basis computation
    #[arg(long, default_value_t = 1_000_000)]
    budget: usize,
    /// Also list the series coefficients up to --order
    #[arg(long)]
    expand: bool,
    /// Series truncation order for --expand
    #[arg(long, default_value_t = 100)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

#[derive(Args)]
struct PipelineArgs {
    /// Finite part set, e.g. 1..6 or {1,2,5}
    #[arg(long)]
    parts: String,
    /// Pair budget for the basis computation
    #[arg(long, default_value_t = 1_000_000)]
    budget: usize,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

#[derive(Args)]
struct PairsArgs {
    /// Single n to examine
    #[arg(long)]
    n: Option<u64>,
    /// Start of a range of n
    #[arg(long)]
    from: Option<u64>,
    /// End of a range of n (inclusive)
    #[arg(long)]
    to: Option<u64>,
    /// Report counts only, without listing the pairs
    #[arg(long)]
    count_only: bool,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

#[derive(Args)]
struct BoundsArgs {
    /// The n at which to evaluate every bound
    #[arg(long)]
    n: u64,
    /// Finite part set whose numerator feeds the L and U bounds
    #[arg(long, default_value = "1..4")]
    parts: String,
    /// Largest n for which the exact count may be requested
    #[arg(long, default_value_t = 70)]
    m_limit: u64,
    /// Pair budget for the basis computation
    #[arg(long, default_value_t = 1_000_000)]
    budget: usize,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

/// A failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::BudgetExceeded { .. } => 3,
            _ => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Count(args) => cmd_count(args),
        Command::Gf(args) => cmd_gf(args),
        Command::ClosedForm(args) => cmd_closed_form(args),
        Command::Gb(args) => cmd_gb(args),
        Command::Pairs(args) => cmd_pairs(args),
        Command::Bounds(args) => cmd_bounds(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_part_set(text: &str) -> Result<PartSet, Failure> {
    text.parse::<PartSet>().map_err(Failure::from)
}

fn finite_part_set(text: &str) -> Result<PartSet, Failure> {
    let set = parse_part_set(text)?;
    if !set.is_finite() {
        return Err(Failure::parse(format!(
            "this command needs a finite part set like 1..6 or {{1,2,5}}, got {set}"
        )));
    }
    Ok(set)
}

/// A JSON number of any size, by way of its decimal text.
fn big_number(decimal: &str) -> Value {
    Value::Number(serde_json::from_str(decimal).expect("decimal integer is a JSON number"))
}

// ---------------------------------------------------------------- table --

#[derive(Clone, Copy, PartialEq, Eq)]
enum Column {
    PrimeParts,
    Lower,
    Star,
    Distinct,
    Hash,
    Upper,
    All,
}

/// Left-to-right presentation order of the full table.
const COLUMN_ORDER: [Column; 7] = [
    Column::PrimeParts,
    Column::Lower,
    Column::Star,
    Column::Distinct,
    Column::Hash,
    Column::Upper,
    Column::All,
];

impl Column {
    fn token(self) -> &'static str {
        match self {
            Column::PrimeParts => "p_P",
            Column::Lower => "L_S",
            Column::Star => "p_star",
            Column::Distinct => "M",
            Column::Hash => "p_hash",
            Column::Upper => "U",
            Column::All => "p",
        }
    }

    fn header(self) -> &'static str {
        match self {
            Column::PrimeParts => "p_P(n)",
            Column::Lower => "L(n)",
            Column::Star => "p*(n)",
            Column::Distinct => "M(n)",
            Column::Hash => "p#(n)",
            Column::Upper => "U(n)",
            Column::All => "p(n)",
        }
    }

    fn from_token(token: &str) -> Result<Self, Failure> {
        COLUMN_ORDER
            .into_iter()
            .find(|c| c.token() == token)
            .ok_or_else(|| {
                Failure::parse(format!(
                    "unknown column {token:?}; valid columns: p_P, L_S, p_star, M, p_hash, U, p"
                ))
            })
    }
}

fn parse_columns(text: &str) -> Result<Vec<Column>, Failure> {
    let mut requested = Vec::new();
    for token in text.split(',') {
        requested.push(Column::from_token(token.trim())?);
    }
    // Whatever the request order, columns render in canonical order.
    Ok(COLUMN_ORDER
        .into_iter()
        .filter(|c| requested.contains(c))
        .collect())
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    if args.step == 0 {
        return Err(Failure::parse("--step must be at least 1"));
    }
    if args.from > args.to {
        return Err(Failure::parse("--from must not exceed --to"));
    }
    let columns = parse_columns(&args.columns)?;
    if columns.is_empty() {
        return Err(Failure::parse("at least one column is required"));
    }
    if columns.contains(&Column::Distinct) && args.to > args.m_limit {
        return Err(Failure {
            code: 3,
            message: format!(
                "the M column is capped at n = {} (exact counting gets expensive); \
                 raise --m-limit or drop the M column",
                args.m_limit
            ),
        });
    }

    let needs_numerator = columns.contains(&Column::Lower) || columns.contains(&Column::Upper);
    let base = PartSet::range(1, 4).expect("static range");
    let numerator = if needs_numerator {
        Some(generating_function(&base, args.budget)?.numerator().clone())
    } else {
        None
    };

    let ns: Vec<u64> = (args.from..=args.to).step_by(args.step as usize).collect();
    let mut rows: Vec<Vec<String>> = Vec::with_capacity(ns.len());
    for &n in &ns {
        if columns.contains(&Column::Distinct) && n >= 50 {
            eprintln!("computing the exact count at n = {n} ...");
        }
        let mut row = vec![n.to_string()];
        for c in &columns {
            let cell = match c {
                Column::PrimeParts => count_partitions(n, &PartSet::Primes, None).to_string(),
                Column::Lower => {
                    lower_bound(n, &base, numerator.as_ref().expect("computed above"))?.to_string()
                }
                Column::Star => count_partitions(n, &PartSet::ConjectureStar, None).to_string(),
                Column::Distinct => count_distinct(n, &PartSet::AllNaturals, None).to_string(),
                Column::Hash => count_partitions(n, &PartSet::ConjectureHash, None).to_string(),
                Column::Upper => {
                    upper_bound(n, &base, numerator.as_ref().expect("computed above")).to_string()
                }
                Column::All => count_partitions(n, &PartSet::AllNaturals, None).to_string(),
            };
            row.push(cell);
        }
        rows.push(row);
    }

    match args.emit {
        Emit::Text => {
            let mut headers = vec!["n".to_string()];
            headers.extend(columns.iter().map(|c| c.header().to_string()));
            let widths: Vec<usize> = headers
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    rows.iter()
                        .map(|r| r[i].len())
                        .chain([h.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let print_row = |cells: &[String]| {
                let line: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                println!("{}", line.join("  "));
            };
            print_row(&headers);
            for row in &rows {
                print_row(row);
            }
        }
        Emit::Csv => {
            let mut headers = vec!["n"];
            headers.extend(columns.iter().map(|c| c.token()));
            println!("{}", headers.join(","));
            for row in &rows {
                println!("{}", row.join(","));
            }
        }
        Emit::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("n".into(), big_number(&row[0]));
                    for (c, cell) in columns.iter().zip(&row[1..]) {
                        obj.insert(c.token().into(), big_number(cell));
                    }
                    Value::Object(obj)
                })
                .collect();
            let doc = json!({
                "schema": 1,
                "columns": columns.iter().map(|c| c.token()).collect::<Vec<_>>(),
                "rows": json_rows,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- count --

fn cmd_count(args: CountArgs) -> Result<(), Failure> {
    let set = parse_part_set(&args.parts)?;
    let count = count_distinct(args.n, &set, args.max_parts);
    match args.emit {
        Emit::Text => println!("{count}"),
        Emit::Csv => {
            println!("n,count");
            println!("{},{count}", args.n);
        }
        Emit::Json => {
            let doc = json!({
                "schema": 1,
                "n": args.n,
                "parts": set.to_string(),
                "max_parts": args.max_parts,
                "count": count,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

// ------------------------------------------------------------------- gf --

fn cmd_gf(args: GfArgs) -> Result<(), Failure> {
    let set = finite_part_set(&args.parts)?;
    let gf = generating_function(&set, args.budget)?;
    let coefficients: Option<Vec<String>> = args.expand.then(|| {
        let series = gf.expand(args.order);
        series.coeffs().iter().map(|c| c.to_string()).collect()
    });
    match args.emit {
        Emit::Text => {
            println!("{gf}");
            if let Some(cs) = &coefficients {
                println!("coefficients: {}", cs.join(", "));
            }
        }
        Emit::Csv => {
            let cs = coefficients.as_ref().ok_or_else(|| {
                Failure::parse("csv output for gf needs --expand (it lists coefficients)")
            })?;
            println!("n,coefficient");
            for (n, c) in cs.iter().enumerate() {
                println!("{n},{c}");
            }
        }
        Emit::Json => {
            let mut doc = json!({
                "schema": 1,
                "parts": set.to_string(),
                "display": gf.to_string(),
                "numerator": gf.numerator().to_string(),
                "denominator": gf.denominator_exponents(),
            });
            if let Some(cs) = &coefficients {
                doc["coefficients"] = Value::Array(cs.iter().map(|c| big_number(c)).collect());
            }
            println!("{doc}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------- closed-form --

fn cmd_closed_form(args: PipelineArgs) -> Result<(), Failure> {
    let set = finite_part_set(&args.parts)?;
    let gf = generating_function(&set, args.budget)?;
    let fractions = partial_fractions(&gf);
    let closed = quasipolynomial(&gf);
    match args.emit {
        Emit::Text => {
            println!("gf: {gf}");
            println!("partial fractions: {fractions}");
            println!("quasipolynomial: {closed}");
            println!("period: {}", closed.period());
            println!("valid from: {}", closed.valid_from());
        }
        Emit::Csv => {
            return Err(Failure::parse(
                "closed-form has no tabular shape; use text or json",
            ));
        }
        Emit::Json => {
            let doc = json!({
                "schema": 1,
                "parts": set.to_string(),
                "gf": gf.to_string(),
                "partial_fractions": fractions.to_string(),
                "quasipolynomial": closed.to_string(),
                "degree": closed.degree(),
                "period": closed.period(),
                "valid_from": closed.valid_from(),
            });
            println!("{doc}");
        }
    }
    Ok(())
}

// ------------------------------------------------------------------- gb --

fn cmd_gb(args: PipelineArgs) -> Result<(), Failure> {
    let set = finite_part_set(&args.parts)?;
    let parts = match &set {
        PartSet::Finite(v) => v.clone(),
        _ => unreachable!("finite_part_set returned a finite set"),
    };
    let run = groebner_run(&parts, args.budget)?;
    let basis: Vec<String> = run
        .basis
        .iter()
        .map(|b| run.universe.format_binomial(b))
        .collect();
    let eliminated: Vec<String> = run
        .elimination
        .iter()
        .map(|b| run.universe.format_binomial(b))
        .collect();
    match args.emit {
        Emit::Text => {
            for line in &basis {
                println!("{line}");
            }
            println!("eliminated:");
            if eliminated.is_empty() {
                println!("(none)");
            } else {
                for line in &eliminated {
                    println!("{line}");
                }
            }
        }
        Emit::Csv => {
            return Err(Failure::parse("gb has no tabular shape; use text or json"));
        }
        Emit::Json => {
            let doc = json!({
                "schema": 1,
                "parts": set.to_string(),
                "basis": basis,
                "elimination": eliminated,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- pairs --

fn cmd_pairs(args: PairsArgs) -> Result<(), Failure> {
    let range = match (args.n, args.from, args.to) {
        (Some(n), None, None) => n..=n,
        (None, Some(a), Some(b)) if a <= b => a..=b,
        (None, Some(_), Some(_)) => {
            return Err(Failure::parse("--from must not exceed --to"));
        }
        _ => {
            return Err(Failure::parse("give either --n or both --from and --to"));
        }
    };
    let single = range.start() == range.end();

    let mut json_rows = Vec::new();
    let mut csv_lines = Vec::new();
    for n in range {
        let pairs = irreducible_pairs(n);
        match args.emit {
            Emit::Text => {
                if args.count_only {
                    if single {
                        println!("{}", pairs.len());
                    } else {
                        println!("{n} {}", pairs.len());
                    }
                } else {
                    println!("i({n}) = {}", pairs.len());
                    for pair in &pairs {
                        println!("{pair}");
                    }
                }
            }
            Emit::Csv => {
                if args.count_only {
                    csv_lines.push(format!("{n},{}", pairs.len()));
                } else {
                    for pair in &pairs {
                        csv_lines.push(format!("{n},\"{}\",\"{}\"", pair.left(), pair.right()));
                    }
                }
            }
            Emit::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("n".into(), json!(n));
                obj.insert("count".into(), json!(pairs.len()));
                if !args.count_only {
                    let listed: Vec<Value> = pairs
                        .iter()
                        .map(|p| {
                            json!({
                                "left": p.left().parts(),
                                "right": p.right().parts(),
                            })
                        })
                        .collect();
                    obj.insert("pairs".into(), Value::Array(listed));
                }
                json_rows.push(Value::Object(obj));
            }
        }
    }
    match args.emit {
        Emit::Text => {}
        Emit::Csv => {
            if args.count_only {
                println!("n,count");
            } else {
                println!("n,left,right");
            }
            for line in csv_lines {
                println!("{line}");
            }
        }
        Emit::Json => {
            let doc = json!({ "schema": 1, "rows": json_rows });
            println!("{doc}");
        }
    }
    Ok(())
}

// --------------------------------------------------------------- bounds --

fn cmd_bounds(args: BoundsArgs) -> Result<(), Failure> {
    let n = args.n;
    if n > args.m_limit {
        return Err(Failure {
            code: 3,
            message: format!(
                "the exact count is capped at n = {}; raise --m-limit",
                args.m_limit
            ),
        });
    }
    let base = finite_part_set(&args.parts)?;
    let numerator = generating_function(&base, args.budget)?.numerator().clone();

    let prime = count_partitions(n, &PartSet::Primes, None);
    let lower = lower_bound(n, &base, &numerator)?;
    let distinct = count_distinct(n, &PartSet::AllNaturals, None);
    let upper = upper_bound(n, &base, &numerator);
    let all = count_partitions(n, &PartSet::AllNaturals, None);

    let distinct_int = multinom::Int::from(distinct);
    let chain_ok = prime <= lower && lower <= distinct_int && distinct_int <= upper && upper <= all;

    match args.emit {
        Emit::Text => {
            println!("p_P({n}) = {prime}");
            println!("L({n}) = {lower}");
            println!("M({n}) = {distinct}");
            println!("U({n}) = {upper}");
            println!("p({n}) = {all}");
            println!("sandwich: {}", if chain_ok { "ok" } else { "VIOLATED" });
        }
        Emit::Csv => {
            println!("n,p_P,L_S,M,U,p");
            println!("{n},{prime},{lower},{distinct},{upper},{all}");
        }
        Emit::Json => {
            let doc = json!({
                "schema": 1,
                "n": n,
                "p_P": big_number(&prime.to_string()),
                "L_S": big_number(&lower.to_string()),
                "M": json!(distinct),
                "U": big_number(&upper.to_string()),
                "p": big_number(&all.to_string()),
                "sandwich_ok": chain_ok,
            });
            println!("{doc}");
        }
    }
    if chain_ok {
        Ok(())
    } else {
        Err(Failure {
            code: 4,
            message: format!("bound chain violated at n = {n}"),
        })
    }
}

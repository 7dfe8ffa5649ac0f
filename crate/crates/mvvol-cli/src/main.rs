mod cache;
mod pool;
mod render;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mvvol::graphs::mv_polynomial_via_graphs;
use mvvol::siegel_veech::sv_constant;
use mvvol::square_tiled::sts_series;
use mvvol::virasoro::{mv_polynomial, mv_volume};
use mvvol::{PiPoly, Theory};

use crate::pool::par_map;

const USAGE: u8 = 2;
const MISMATCH: u8 = 1;

#[derive(Parser)]
#[command(
    name = "mvvol",
    version,
    about = "Exact Masur–Veech volumes, Siegel–Veech constants and related counts"
)]
struct Cli {
    /// Worker threads for suites and tables.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Coefficient cache to preload when it exists.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Exact,
    Latex,
    Decimal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Virasoro,
    Graphs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Volume,
    Sv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Masur–Veech volume of the moduli space of quadratic differentials.
    Volume {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
    /// Coefficients of the volume polynomial.
    Polynomial {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Virasoro)]
        method: Method,
    },
    /// Area Siegel–Veech constant, printed as pi^2 times the constant.
    Sv {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
    },
    /// Square-tiled surface counting series with fixed boundary lengths.
    Sts {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        lengths: Vec<i64>,
        #[arg(long)]
        order: usize,
    },
    /// Run a verification suite; exits 1 on any mismatch.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
    },
    /// Save or load the coefficient cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Emit a table of volumes or constants.
    Table {
        #[arg(long, value_enum, default_value_t = Quantity::Volume)]
        quantity: Quantity,
        #[arg(long, default_value_t = 3)]
        max_g: u32,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Compute complete levels up to the given bounds and write them.
    Save {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_g: u32,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
    },
    /// Read a cache file and report how many records it holds.
    Load {
        #[arg(long)]
        path: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<mvvol::Error> for Failure {
    fn from(e: mvvol::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn polynomial_line(poly: &mvvol::EvenPolynomial) -> String {
    poly.terms()
        .map(|(d, v)| {
            let d: Vec<String> = d.iter().map(u32::to_string).collect();
            format!("d=[{}]: {v}", d.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ; ")
}

/// Value of a table cell together with the power of π it multiplies.
fn table_entry(quantity: Quantity, g: u32, n: u32) -> Option<(mvvol::Rational, i64)> {
    let (value, shift) = match quantity {
        Quantity::Volume => (mv_volume(g, n).ok()?, 0),
        Quantity::Sv => (sv_constant(g, n).ok()?, -2),
    };
    match value.single_grade() {
        Some((r, k)) => Some((r.clone(), 2 * k as i64 + shift)),
        None => Some((mvvol::Rational::from_integer(0.into()), shift)),
    }
}

fn emit_table(quantity: Quantity, max_g: u32, max_n: u32, format: TableFormat, threads: usize) -> String {
    let cells: Vec<(u32, u32)> = (0..=max_n).flat_map(|n| (0..=max_g).map(move |g| (g, n))).collect();
    let values = par_map(&cells, threads, |&(g, n)| table_entry(quantity, g, n));
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str("g,n,value_rational,pi_power\n");
            let mut rows: Vec<_> = cells
                .iter()
                .zip(&values)
                .filter_map(|(c, v)| Some((c, v.as_ref()?)))
                .collect();
            rows.sort_by_key(|((g, n), _)| (*g, *n));
            for ((g, n), (r, p)) in rows {
                writeln!(out, "{g},{n},{r},{p}").unwrap();
            }
        }
        TableFormat::Latex => {
            let cols = max_g as usize + 1;
            writeln!(out, "\\begin{{tabular}}{{|c|{}|}}", "c".repeat(cols)).unwrap();
            out.push_str("\\hline\n$n$ \\textbackslash \\,\\,$g$");
            for g in 0..=max_g {
                write!(out, " & ${g}$").unwrap();
            }
            out.push_str(" \\\\\n\\hline\\hline\n");
            for (row, chunk) in values.chunks(cols).enumerate() {
                write!(out, "${row}$").unwrap();
                for v in chunk {
                    match v {
                        Some((r, _)) => {
                            let cell = render::latex(&PiPoly::from_rational(r.clone()));
                            write!(out, " & ${cell}$").unwrap()
                        }
                        None => out.push_str(" & -"),
                    }
                }
                out.push_str(" \\\\\n");
            }
            out.push_str("\\hline\n\\end{tabular}\n");
        }
    }
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    if let Some(path) = cli.cache.as_ref().filter(|p| p.exists()) {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        cache::load_global(&text).map_err(Failure::Usage)?;
    }
    let threads = cli.threads.max(1);
    Ok(match cli.command {
        Command::Volume { g, n, format } => {
            let v = mv_volume(g, n).map_err(|_| Failure::Usage("unstable type".into()))?;
            match format {
                Format::Exact => render::exact(&v),
                Format::Latex => render::latex(&v),
                Format::Decimal => render::decimal(&v),
            }
        }
        Command::Polynomial { g, n, method } => {
            let poly = match method {
                Method::Virasoro => mv_polynomial(g, n),
                Method::Graphs => mv_polynomial_via_graphs(g, n),
            }
            .map_err(|_| Failure::Usage("unstable type".into()))?;
            polynomial_line(&poly)
        }
        Command::Sv { g, n } => format!("pi^2*SV = {}", sv_constant(g, n)?),
        Command::Sts { g, n, lengths, order } => sts_series(g, n, &lengths, order)?.to_string(),
        Command::Verify { suite } => {
            let report = verify::run(suite, threads);
            let text = report.to_string();
            let text = text.trim_end().to_string();
            if !report.passed() {
                return Err(Failure::Mismatch(text));
            }
            text
        }
        Command::Cache { action } => match action {
            CacheAction::Save { path, max_g, max_n } => {
                let records = cache::complete_levels(max_g, max_n);
                std::fs::write(&path, cache::serialize(Theory::MasurVeech, &records))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                format!("saved {} records to {}", records.len(), path.display())
            }
            CacheAction::Load { path } => {
                let text =
                    std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                let count = cache::load_global(&text).map_err(Failure::Usage)?;
                format!("loaded {count} records from {}", path.display())
            }
        },
        Command::Table {
            quantity,
            max_g,
            max_n,
            format,
        } => emit_table(quantity, max_g, max_n, format, threads)
            .trim_end()
            .to_string(),
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            println!("{out}");
            ExitCode::from(MISMATCH)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

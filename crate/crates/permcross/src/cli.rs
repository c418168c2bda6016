//! The `permcross` command line.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permcross_core::distribution::triangle;
use permcross_core::identities::{formulas, wilf_classes, Verifier, VerifyConfig, CHECK_NAMES};
use permcross_core::qpoly::continued_fraction;
use permcross_core::{
    enumerate, occurrences, DistributionSource, Error, PatternSet, Permutation, QSeries, RowSelector, Statistic,
};
use rayon::prelude::*;

use crate::engine::{resolve_threads, ParallelSource};
use crate::export::{self, TriangleFormat};
use crate::format;

/// Longest permutations any enumerating command accepts.
pub const MAX_LEN: usize = 16;
/// Largest truncation order for series built from a closed form.
pub const MAX_GF_ORDER: usize = 400;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "permcross", version, about = "Crossing statistics of pattern-avoiding permutations")]
pub struct Cli {
    /// Worker threads: a number or `auto` (falls back to PERMCROSS_THREADS).
    #[arg(long, global = true)]
    threads: Option<String>,
    /// JSON file used to persist computed distributions between runs.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every statistic of one permutation, plus its crossings.
    Stats {
        /// One-line word, e.g. `4735126` or `10,1,2,3,4,5,6,7,8,9`.
        perm: String,
        /// Also count occurrences of this pattern.
        #[arg(long)]
        occurrences: Option<String>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
    /// Lists the members of a class in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
    /// Distribution polynomial of a statistic over one class.
    Dist {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
    /// Coefficient rows for a range of lengths.
    Triangle {
        /// Inclusive range such as `1..10`.
        #[arg(long)]
        rows: String,
        #[command(flatten)]
        class: ClassArgs,
        /// text, csv, json or bfile.
        #[arg(long, default_value = "text")]
        format: String,
        /// First index of a b-file.
        #[arg(long, default_value_t = 1)]
        offset: i64,
    },
    /// Generating series, by enumeration or from a closed form.
    Series {
        /// Pattern set to enumerate (`-` for none).
        #[arg(long, conflicts_with = "gf", required_unless_present = "gf")]
        avoid: Option<String>,
        /// Closed form to expand instead of enumerating.
        #[arg(long, value_enum)]
        gf: Option<Gf>,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Continued-fraction depth for `--gf cf-321` (default 2·order+2).
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value = "crs")]
        stat: String,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
    /// Runs identity checks and prints one JSON report per line.
    Verify {
        /// Checks to run; see `--list`.
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Print the available check names.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Groups pattern sets whose distributions agree up to `--nmax`.
    Wilf {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value = "crs")]
        stat: String,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        format: Output,
    },
}

#[derive(Args, Debug)]
struct ClassArgs {
    /// Comma-separated patterns, `-` for none.
    #[arg(long, default_value = "-")]
    avoid: String,
    /// `all`, `first1@K` or `last@K`; `K` may be `n` or `n-j`.
    #[arg(long, default_value = "all")]
    selector: String,
    #[arg(long, default_value = "crs")]
    stat: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Gf {
    #[value(name = "cf-321")]
    Cf321,
    #[value(name = "pair-321-231")]
    Pair321_231,
    #[value(name = "pair-123-132")]
    Pair123_132,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Singles3,
    Pairs3,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Overflow(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Overflow(_) => EXIT_OVERFLOW,
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Overflow(msg) => write!(f, "{msg}; try a smaller order"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) => CliError::Overflow(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Results go to `out`, diagnostics to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn build_source(cli: &Cli) -> CliResult<ParallelSource> {
    let threads = resolve_threads(cli.threads.as_deref()).map_err(usage)?;
    let source = ParallelSource::new(threads)?;
    Ok(match &cli.cache {
        Some(path) => source.with_cache(path)?,
        None => source,
    })
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let source = build_source(&cli)?;
    let code = match cli.command {
        Command::Stats { perm, occurrences, format } => cmd_stats(&perm, occurrences.as_deref(), format, out)?,
        Command::Enumerate { n, class, format } => cmd_enumerate(n, &class, format, out)?,
        Command::Dist { n, class, format } => cmd_dist(&source, n, &class, format, out)?,
        Command::Triangle { rows, class, format, offset } => {
            cmd_triangle(&source, &rows, &class, &format, offset, out)?
        }
        Command::Series { avoid, gf, order, depth, stat, format } => {
            cmd_series(&source, avoid.as_deref(), gf, order, depth, &stat, format, out)?
        }
        Command::Verify { names, all, list, nmax, order, depth } => {
            cmd_verify(&source, &names, all, list, VerifyConfig { n_max: nmax, order, depth }, out)?
        }
        Command::Wilf { family, stat, nmax, format } => cmd_wilf(&source, family, &stat, nmax, format, out)?,
    };
    source.save_cache()?;
    Ok(code)
}

fn check_len(what: &str, n: usize) -> CliResult<()> {
    if n > MAX_LEN {
        return Err(usage(format!("{what} {n} is larger than the supported maximum {MAX_LEN}")));
    }
    Ok(())
}

fn cmd_stats(word: &str, pattern: Option<&str>, fmt: Output, out: &mut dyn Write) -> CliResult<i32> {
    let p: Permutation = word.parse()?;
    let occ = match pattern {
        Some(s) => {
            let tau: Permutation = s.parse()?;
            let count = occurrences(&p, &tau);
            Some((tau, count))
        }
        None => None,
    };
    if fmt == Output::Json {
        let v = format::stats_json(&p, occ.as_ref().map(|(t, c)| (t, *c)));
        writeln!(out, "{v}")?;
        return Ok(EXIT_OK);
    }
    let s = p.stat_profile();
    writeln!(out, "permutation {p}")?;
    for (name, value) in [
        ("crs", s.crs),
        ("inv", s.inv),
        ("exc", s.exc),
        ("nes", s.nes),
        ("ut", s.ut),
        ("lt", s.lt),
        ("ddes", s.ddes),
        ("dasc", s.dasc),
        ("occ31_2", s.occ31_2),
    ] {
        writeln!(out, "{name}={value}")?;
    }
    let pairs: Vec<String> = p.crossings().iter().map(|c| format!("({},{})", c.i, c.j)).collect();
    writeln!(out, "crossings {}", pairs.join(" "))?;
    if let Some((tau, count)) = occ {
        writeln!(out, "occurrences of {tau}: {count}")?;
    }
    Ok(EXIT_OK)
}

struct Class {
    set: PatternSet,
    selector: RowSelector,
    stat: Statistic,
}

fn parse_class(args: &ClassArgs) -> CliResult<Class> {
    Ok(Class { set: args.avoid.parse()?, selector: args.selector.parse()?, stat: args.stat.parse()? })
}

fn cmd_enumerate(n: usize, args: &ClassArgs, fmt: Output, out: &mut dyn Write) -> CliResult<i32> {
    check_len("length", n)?;
    let class = parse_class(args)?;
    let perms = enumerate(n, &class.set, class.selector.resolve(n)?)?;
    match fmt {
        Output::Json => {
            let words: Vec<Vec<usize>> = perms.map(Permutation::into_word).collect();
            writeln!(out, "{}", serde_json::to_string(&words).expect("integer lists serialize"))?;
        }
        _ => {
            for p in perms {
                writeln!(out, "{p}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_dist(source: &ParallelSource, n: usize, args: &ClassArgs, fmt: Output, out: &mut dyn Write) -> CliResult<i32> {
    check_len("length", n)?;
    let class = parse_class(args)?;
    let poly = source.distribution(n, &class.set, class.selector.resolve(n)?, class.stat)?;
    match fmt {
        Output::Text => writeln!(out, "{poly}")?,
        Output::Json => writeln!(out, "{}", format::poly_json(&poly))?,
        Output::Csv => {
            let cells: Vec<String> = poly.coeffs().iter().map(i64::to_string).collect();
            writeln!(out, "{}", cells.join(","))?
        }
    }
    Ok(EXIT_OK)
}

fn parse_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || usage(format!("invalid row range `{s}` (expected A..B)"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(usage(format!("empty row range `{s}`")));
    }
    Ok((a, b))
}

fn cmd_triangle(
    source: &ParallelSource,
    rows: &str,
    args: &ClassArgs,
    fmt: &str,
    offset: i64,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let (lo, hi) = parse_range(rows)?;
    check_len("row", hi)?;
    let class = parse_class(args)?;
    let fmt = match fmt.parse::<TriangleFormat>().map_err(usage)? {
        TriangleFormat::Bfile { .. } => TriangleFormat::Bfile { offset },
        other => other,
    };
    for n in lo..=hi {
        class.selector.resolve(n)?;
    }
    let t = triangle(source, &class.set, class.selector, class.stat, lo, hi)?;
    out.write_all(export::render(&t, fmt).as_bytes())?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_series(
    source: &ParallelSource,
    avoid: Option<&str>,
    gf: Option<Gf>,
    order: usize,
    depth: Option<usize>,
    stat: &str,
    fmt: Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let series: QSeries = match gf {
        Some(gf) => {
            if order > MAX_GF_ORDER {
                return Err(usage(format!("order {order} is larger than the supported maximum {MAX_GF_ORDER}")));
            }
            match gf {
                Gf::Cf321 => {
                    let depth = depth.unwrap_or(2 * order + 2);
                    if depth > 2 * MAX_GF_ORDER + 2 {
                        return Err(usage(format!("depth {depth} is too large")));
                    }
                    continued_fraction(&formulas::crossing_cf_levels(depth), order)?
                }
                Gf::Pair321_231 => formulas::pair_321_231_gf().expand(order)?,
                Gf::Pair123_132 => formulas::pair_123_132_gf()?.expand(order)?,
            }
        }
        None => {
            check_len("order", order)?;
            let set: PatternSet = avoid.unwrap_or("-").parse()?;
            let stat: Statistic = stat.parse()?;
            source.series_of(&set, stat, order)?
        }
    };
    match fmt {
        Output::Json => writeln!(out, "{}", format::series_json(&series))?,
        Output::Text | Output::Csv => {
            for (n, c) in series.coeffs().iter().enumerate() {
                if fmt == Output::Csv {
                    let cells: Vec<String> = c.coeffs().iter().map(i64::to_string).collect();
                    writeln!(out, "{}", cells.join(","))?;
                } else {
                    writeln!(out, "z^{n}: {c}")?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    source: &ParallelSource,
    names: &[String],
    all: bool,
    list: bool,
    cfg: VerifyConfig,
    out: &mut dyn Write,
) -> CliResult<i32> {
    if list {
        for name in CHECK_NAMES {
            writeln!(out, "{name}")?;
        }
        return Ok(EXIT_OK);
    }
    let selected: Vec<&str> = if all {
        CHECK_NAMES.to_vec()
    } else if names.is_empty() {
        return Err(usage("name at least one check, or pass --all"));
    } else {
        names.iter().map(String::as_str).collect()
    };
    if let Some(bad) = selected.iter().find(|n| !CHECK_NAMES.contains(n)) {
        return Err(usage(format!("unknown check `{bad}` (see `verify --list`)")));
    }
    check_len("nmax", cfg.n_max)?;
    check_len("order", cfg.order)?;

    let results = source.install(|| {
        selected
            .par_iter()
            .map(|name| {
                let start = Instant::now();
                let report = Verifier::new(source).run(name, &cfg)?;
                Ok((report, start.elapsed().as_millis()))
            })
            .collect::<Result<Vec<_>, Error>>()
    })?;
    let mut failed = false;
    for (report, ms) in &results {
        failed |= report.failed();
        writeln!(out, "{}", format::report_json(report, Some(*ms)))?;
        eprintln!("{:<26} {}", report.name, report.status.label());
    }
    Ok(if failed { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn cmd_wilf(
    source: &ParallelSource,
    family: Family,
    stat: &str,
    n_max: usize,
    fmt: Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    check_len("nmax", n_max)?;
    let stat: Statistic = stat.parse()?;
    let sets = match family {
        Family::Singles3 => PatternSet::singletons(3),
        Family::Pairs3 => PatternSet::pairs(3),
    };
    let partition = wilf_classes(source, &sets, stat, n_max)?;
    if fmt == Output::Json {
        writeln!(out, "{}", format::wilf_json(&partition))?;
    } else {
        writeln!(out, "{partition}")?;
        for s in &partition.separations {
            writeln!(out, "  {} / {}: rows differ from n = {}", s.a, s.b, s.n)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let mut full = vec!["permcross"];
        full.extend_from_slice(args);
        let code = run(full, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..8").unwrap(), (2, 8));
        assert_eq!(parse_range("2..=8").unwrap(), (2, 8));
        assert!(parse_range("8..2").is_err());
        assert!(parse_range("8").is_err());
    }

    #[test]
    fn small_commands() {
        assert_eq!(run_str(&["dist", "--n", "3", "--avoid", "321,231"]), (0, "3 + q\n".into()));
        assert_eq!(run_str(&["series", "--avoid", "-", "--order", "0", "--format", "json"]), (0, "[[1]]\n".into()));
        let (code, text) = run_str(&["enumerate", "--n", "3", "--avoid", "123,132"]);
        assert_eq!(code, 0);
        assert_eq!(text, "213\n231\n312\n321\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["dist", "--n", "3", "--avoid", "32x"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["dist", "--n", "3", "--selector", "first1@5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "check_nothing"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["dist", "--n", "40"]).0, EXIT_USAGE);
    }
}

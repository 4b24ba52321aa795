//! The `dowling` command line: triangles, sums, identity checks, reference tables and timings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{build_triangle, sum_by_name};
use crate::error::{Error, Result};
use crate::exactmath::{bit_length, format_rat, parse_rat};
use crate::triangle::{CoeffMatrix, Family, Params, Triangle};
use crate::{tables, verify};

/// Environment variable naming the triangle cache directory.
pub const CACHE_ENV: &str = "DOWLING_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "dowling", version, about = "Exact Stirling, Lah, Whitney and Dowling number triangles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows 0..=nmax of a number triangle.
    Triangle(TriangleArgs),
    /// Print one Bell-type number (or a row sum of any triangle family).
    Sum(SumArgs),
    /// Check a named identity and print a JSON report.
    Verify(VerifyArgs),
    /// Regenerate the published reference tables and worked values.
    PaperTables(OutArgs),
    /// Time triangle generation and report the largest entry size.
    Bench(BenchArgs),
    /// Show how the unified pair reduces to the Whitney and r-families, with sign conventions.
    Specializations(SpecializationArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

impl ParamArgs {
    pub fn to_params(&self) -> Result<Params> {
        let parse = |v: &Option<String>| v.as_deref().map(parse_rat).transpose();
        Ok(Params {
            m: parse(&self.m)?,
            r: parse(&self.r)?,
            alpha: parse(&self.alpha)?,
            beta: parse(&self.beta)?,
            gamma: parse(&self.gamma)?,
        })
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutArgs {
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, short = 'n', visible_alias = "n")]
    pub nmax: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    /// bell, dowling, r-bell, r-dowling, hs-bell, cakic-bell, or a triangle family.
    #[arg(long)]
    pub family: String,
    #[arg(long, short = 'n', visible_alias = "n")]
    pub nmax: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name, or `all` to run the whole registry at default parameters.
    #[arg(long, required_unless_present = "list")]
    pub identity: Option<String>,
    #[arg(long, short = 'n', visible_alias = "n")]
    pub nmax: Option<usize>,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Also compare against brute-force enumeration.
    #[arg(long)]
    pub with_oracle: bool,
    /// List the registered identities.
    #[arg(long)]
    pub list: bool,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, short = 'n', visible_alias = "n")]
    pub nmax: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct SpecializationArgs {
    #[arg(long, short = 'n', visible_alias = "n", default_value_t = 6)]
    pub nmax: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

/// On-disk and wire form of a triangle. Every number is a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleJson {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub nmax: usize,
    pub rows: Vec<Vec<String>>,
}

impl TriangleJson {
    pub fn from_triangle(tri: &CoeffMatrix) -> Self {
        TriangleJson {
            family: tri.family().name().to_string(),
            params: tri.params().to_map(),
            nmax: tri.nmax(),
            rows: tri.rows().iter().map(|r| r.iter().map(format_rat).collect()).collect(),
        }
    }

    pub fn to_triangle(&self) -> Result<CoeffMatrix> {
        let family: Family = self.family.parse()?;
        let mut params = Params::none();
        for (k, v) in &self.params {
            let v = Some(parse_rat(v)?);
            match k.as_str() {
                "m" => params.m = v,
                "r" => params.r = v,
                "alpha" => params.alpha = v,
                "beta" => params.beta = v,
                "gamma" => params.gamma = v,
                other => return Err(Error::InvalidParameter(format!("unknown parameter `{other}`"))),
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| parse_rat(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let tri = Triangle::from_rows(family, params, rows)?;
        if tri.nmax() != self.nmax {
            return Err(Error::SizeMismatch { left: self.nmax, right: tri.nmax() });
        }
        Ok(tri)
    }
}

pub fn to_json(tri: &CoeffMatrix) -> String {
    let mut s = serde_json::to_string(&TriangleJson::from_triangle(tri)).expect("strings always serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<CoeffMatrix> {
    serde_json::from_str::<TriangleJson>(text)?.to_triangle()
}

pub fn to_csv(tri: &CoeffMatrix) -> String {
    let mut s = String::from("n,k,value\n");
    for (n, k, v) in tri.entries() {
        let _ = writeln!(s, "{n},{k},{}", format_rat(v));
    }
    s
}

/// Right-aligned columns under an `n\k` header.
pub fn to_table(tri: &CoeffMatrix) -> String {
    let cells: Vec<Vec<String>> = tri.rows().iter().map(|r| r.iter().map(format_rat).collect()).collect();
    let label_width = tri.nmax().to_string().len().max(3);
    let widths: Vec<usize> = (0..=tri.nmax())
        .map(|k| cells[k..].iter().map(|r| r[k].len()).chain([k.to_string().len()]).max().unwrap_or(1))
        .collect();
    let mut s = format!("{:>label_width$}", "n\\k");
    for (k, w) in widths.iter().enumerate() {
        let _ = write!(s, "  {k:>w$}");
    }
    s.push('\n');
    for (n, row) in cells.iter().enumerate() {
        let _ = write!(s, "{n:>label_width$}");
        for (v, w) in row.iter().zip(&widths) {
            let _ = write!(s, "  {v:>w$}");
        }
        s.push('\n');
    }
    s
}

pub fn render(tri: &CoeffMatrix, format: Format) -> String {
    match format {
        Format::Table => to_table(tri),
        Format::Csv => to_csv(tri),
        Format::Json => to_json(tri),
    }
}

fn cache_file(dir: &Path, family: Family, params: &Params, nmax: usize) -> PathBuf {
    let mut key = family.name().to_string();
    for (k, v) in params.to_map() {
        let _ = write!(key, "_{k}={}", v.replace('/', "over"));
    }
    dir.join(format!("{key}_n={nmax}.json"))
}

/// Builds a triangle, reading and filling the cache directory when `cache` is set.
pub fn cached_triangle(family: Family, params: &Params, nmax: usize, cache: Option<&Path>) -> Result<(CoeffMatrix, bool)> {
    let Some(dir) = cache else {
        return Ok((build_triangle(family, params, nmax)?, false));
    };
    let path = cache_file(dir, family, params, nmax);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(tri) = parse_json(&text) {
            if tri.family() == family && tri.params() == params && tri.nmax() == nmax {
                return Ok((tri, true));
            }
        }
    }
    let tri = build_triangle(family, params, nmax)?;
    std::fs::create_dir_all(dir)?;
    std::fs::write(&path, to_json(&tri))?;
    Ok((tri, false))
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// What a command produced, before it is written anywhere.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub fn cmd_triangle(args: &TriangleArgs) -> Result<Outcome> {
    let family: Family = args.family.parse()?;
    let params = args.params.to_params()?;
    let (tri, _) = cached_triangle(family, &params, args.nmax, cache_dir().as_deref())?;
    Ok(Outcome::ok(render(&tri, args.format)))
}

pub fn cmd_sum(args: &SumArgs) -> Result<Outcome> {
    let v = sum_by_name(&args.family, &args.params.to_params()?, args.nmax)?;
    Ok(Outcome::ok(format!("{}\n", format_rat(&v))))
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    if args.list {
        let mut s = String::new();
        for spec in verify::REGISTRY {
            let _ = writeln!(s, "{:<18} {}", spec.name, spec.summary);
        }
        return Ok(Outcome::ok(s));
    }
    let identity = args.identity.as_deref().expect("clap requires --identity");
    let params = args.params.to_params()?;
    let reports = if identity == "all" {
        if params != Params::none() {
            return Err(Error::Usage("`--identity all` runs default parameters only".into()));
        }
        verify::run_all(args.nmax, args.with_oracle)?
    } else {
        vec![verify::run(identity, &params, args.nmax, args.with_oracle)?]
    };
    let pass = reports.iter().all(|r| r.pass);
    let mut text = if identity == "all" {
        serde_json::to_string(&reports)?
    } else {
        serde_json::to_string(&reports[0])?
    };
    text.push('\n');
    Ok(Outcome { text, code: if pass { 0 } else { 1 } })
}

pub fn cmd_paper_tables() -> Result<Outcome> {
    let report = tables::reproduce()?;
    let code = if report.passed() { 0 } else { 1 };
    Ok(Outcome { text: format!("{report}\n"), code })
}

pub fn cmd_bench(args: &BenchArgs) -> Result<Outcome> {
    let family: Family = args.family.parse()?;
    let params = args.params.to_params()?;
    let start = Instant::now();
    let (tri, cached) = cached_triangle(family, &params, args.nmax, cache_dir().as_deref())?;
    let elapsed = start.elapsed();
    let bits = |v: &crate::Rat| bit_length(v.numer()).max(bit_length(v.denom()));
    let (peak_n, peak_k, peak) = tri
        .entries()
        .map(|(n, k, v)| (n, k, bits(v)))
        .max_by_key(|&(n, k, b)| (b, std::cmp::Reverse((n, k))))
        .expect("a triangle has at least one entry");
    let centre = (tri.nmax(), tri.nmax() / 2);
    let mut s = String::new();
    let _ = writeln!(s, "family      {}", family.name());
    for (k, v) in params.to_map() {
        let _ = writeln!(s, "{k:<11} {v}");
    }
    let _ = writeln!(s, "nmax        {}", tri.nmax());
    let _ = writeln!(s, "entries     {}", tri.entries().count());
    let _ = writeln!(s, "peak bits   {peak} at ({peak_n},{peak_k})");
    let _ = writeln!(s, "centre bits {} at ({},{})", bits(&tri.get(centre.0, centre.1)), centre.0, centre.1);
    let _ = writeln!(s, "source      {}", if cached { "cache" } else { "computed" });
    let _ = writeln!(s, "wall time   {:.3} ms", elapsed.as_secs_f64() * 1e3);
    Ok(Outcome::ok(s))
}

pub fn cmd_specializations(args: &SpecializationArgs) -> Result<Outcome> {
    let report = crate::unified::verify_specializations(args.nmax)?;
    let code = if report.passed() { 0 } else { 1 };
    Ok(Outcome { text: report.to_text(), code })
}

fn dispatch(command: &Command) -> Result<(Outcome, Option<&Path>)> {
    Ok(match command {
        Command::Triangle(a) => (cmd_triangle(a)?, a.out.out.as_deref()),
        Command::Sum(a) => (cmd_sum(a)?, a.out.out.as_deref()),
        Command::Verify(a) => (cmd_verify(a)?, a.out.out.as_deref()),
        Command::PaperTables(a) => (cmd_paper_tables()?, a.out.as_deref()),
        Command::Bench(a) => (cmd_bench(a)?, a.out.out.as_deref()),
        Command::Specializations(a) => (cmd_specializations(a)?, a.out.out.as_deref()),
    })
}

/// Runs a parsed command line. Exit status 0 is success, 1 a failed check, 2 a usage or parameter error.
pub fn run(cli: &Cli) -> ExitCode {
    let written = dispatch(&cli.command).and_then(|(outcome, out)| {
        match out {
            Some(path) => std::fs::write(path, &outcome.text)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(outcome.text.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(outcome.code)
    });
    match written {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("dowling: {e}");
            ExitCode::from(2)
        }
    }
}

/// Parses `std::env::args` and runs. Argument errors exit with status 2.
pub fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn r_lah_2() -> CoeffMatrix {
        build_triangle(Family::RLah, &Params::none().with_r(rat(2)), 5).unwrap()
    }

    #[test]
    fn table_layout() {
        let expected = "\
n\\k     0     1     2    3   4  5
  0     1
  1     4     1
  2    20    10     1
  3   120    90    18    1
  4   840   840   252   28   1
  5  6720  8400  3360  560  40  1
";
        assert_eq!(to_table(&r_lah_2()), expected);
        let single = build_triangle(Family::Stirling2, &Params::none(), 0).unwrap();
        assert_eq!(to_table(&single), "n\\k  0\n  0  1\n");
    }

    #[test]
    fn csv_layout() {
        let tri = build_triangle(Family::Whitney2, &Params::none().with_alpha(rat(3)), 3).unwrap();
        let csv = to_csv(&tri);
        assert_eq!(csv.lines().count(), 11);
        assert!(csv.starts_with("n,k,value\n0,0,1\n1,0,1\n"));
        assert!(csv.ends_with("3,1,21\n3,2,12\n3,3,1\n"));
    }

    #[test]
    fn json_round_trip() {
        let params = Params::none().with_alpha(ratio(1, 2)).with_beta(ratio(-1, 3)).with_gamma(rat(2));
        for tri in [r_lah_2(), build_triangle(Family::HsFirst, &params, 5).unwrap()] {
            let text = to_json(&tri);
            let back = parse_json(&text).unwrap();
            assert_eq!(back, tri);
            assert_eq!(to_json(&back), text);
        }
        assert!(to_json(&r_lah_2()).starts_with(r#"{"family":"r-lah","params":{"r":"2"},"nmax":5,"rows":[["1"],["4","1"]"#));
        assert!(parse_json(r#"{"family":"r-lah","params":{},"nmax":2,"rows":[["1"]]}"#).is_err());
        assert!(parse_json(r#"{"family":"zz","params":{},"nmax":0,"rows":[["1"]]}"#).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let params = Params::none().with_alpha(ratio(1, 2));
        let (first, hit) = cached_triangle(Family::Cakic, &params, 4, Some(dir.path())).unwrap();
        assert!(!hit);
        let (second, hit) = cached_triangle(Family::Cakic, &params, 4, Some(dir.path())).unwrap();
        assert!(hit);
        assert_eq!(first, second);
        let path = cache_file(dir.path(), Family::Cakic, &params, 4);
        assert!(path.file_name().unwrap().to_str().unwrap().contains("alpha=1over2"));
        std::fs::write(&path, "garbage").unwrap();
        assert_eq!(cached_triangle(Family::Cakic, &params, 4, Some(dir.path())).unwrap(), (first, false));
    }
}

//! Command-line front end.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fano_obstruct_core::{
    analyze, convex_hull, Int, LatticePolytope, NormalForm, PairAnalysis, PolytopeAnalysis,
};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::IngestError;
use crate::palp::{parse_json_vertices, parse_palp, PolytopeRecord};
use crate::scan::{analyze_record, scan_palp, write_report, write_table, ScanReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IO: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_NOT_APPLICABLE: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Palp,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Table,
    Records,
}

#[derive(Debug, Parser)]
#[command(
    name = "fano-obstruct",
    version,
    about = "Smoothability obstructions for toric Fano 3-folds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Input format; inferred from the extension when omitted (`.json` or PALP).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    pub emit: Emit,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify facets, find adjacent A_n pairs and report the verdict.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Analyze every polytope of a database file.
    Scan {
        #[arg(long, env = "KS_DB_PATH")]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
        /// Worker threads (default: number of cores).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        parallelism: Option<u32>,
    },
    /// Print the normal form of adjacent A_n pairs.
    NormalForm {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
        /// 0-based index of a single pair, counted across the whole input.
        #[arg(long)]
        pair: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<IngestError> for Failure {
    fn from(e: IngestError) -> Self {
        Failure::new(EXIT_IO, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_IO, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

pub fn run(cli: &Cli) -> u8 {
    let result = match &cli.command {
        Command::Analyze { input, output } => cmd_analyze(input, output),
        Command::Scan {
            input,
            output,
            parallelism,
        } => cmd_scan(input, output, *parallelism),
        Command::NormalForm {
            input,
            output,
            pair,
        } => cmd_normal_form(input, output, *pair),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn format_of(path: &Path, flag: Option<Format>) -> Format {
    flag.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
        _ => Format::Palp,
    })
}

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn read_records(path: &Path, format: Format) -> Result<Vec<PolytopeRecord>, Failure> {
    match format {
        Format::Palp => Ok(parse_palp(open(path)?).collect::<Result<_, _>>()?),
        Format::Json => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
            Ok(vec![PolytopeRecord {
                index: 0,
                vertices: parse_json_vertices(&text)?,
                source_header: String::new(),
            }])
        }
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                Failure::new(EXIT_IO, format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn hulls(records: &[PolytopeRecord]) -> Result<Vec<LatticePolytope>, Failure> {
    if records.is_empty() {
        return Err(Failure::new(EXIT_INVALID, "no polytope in input"));
    }
    records
        .iter()
        .map(|r| {
            convex_hull(&r.vertices)
                .map_err(|e| Failure::new(EXIT_INVALID, format!("polytope {}: {e}", r.index)))
        })
        .collect()
}

fn analysis(index: usize, p: &LatticePolytope) -> Result<PolytopeAnalysis, Failure> {
    analyze(p).map_err(|e| Failure::new(EXIT_INVALID, format!("polytope {index}: {e}")))
}

fn list(xs: &[Int]) -> String {
    let items: Vec<String> = xs.iter().map(Int::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn pair_line(pa: &PairAnalysis) -> String {
    let mut line = format!("A{}-pair, pairing {}", pa.pair.n, pa.pair.pairing);
    if pa.pair.is_almost_flat() {
        line.push_str(", almost-flat");
    }
    let _ = write!(
        line,
        ", Ext degrees {}, class group {}",
        list(&pa.ext_profile.degrees),
        pa.class_group
    );
    line
}

fn cmd_analyze(input: &Path, output: &Output) -> CmdResult {
    let records = read_records(input, format_of(input, output.format))?;
    let polytopes = hulls(&records)?;
    let mut out = sink(&output.out)?;
    match output.emit {
        Emit::Records => {
            let mut report = ScanReport::default();
            for r in &records {
                report.push(analyze_record(r));
            }
            write_report(&report, &mut out)?;
        }
        Emit::Table => {
            for (r, p) in records.iter().zip(&polytopes) {
                let a = analysis(r.index, p)?;
                let (smooth, an, other) = a.class_counts();
                writeln!(
                    out,
                    "polytope {} ({} vertices, {} facets)",
                    r.index,
                    p.vertices().len(),
                    p.facets().len()
                )?;
                writeln!(
                    out,
                    "  reflexive: {}",
                    if a.reflexive { "yes" } else { "no" }
                )?;
                writeln!(
                    out,
                    "  facets: {smooth} smooth, {an} A_n-triangle, {other} other"
                )?;
                if a.pairs.is_empty() {
                    writeln!(out, "  no adjacent A_n pairs")?;
                }
                for pa in &a.pairs {
                    writeln!(out, "  {}", pair_line(pa))?;
                }
                writeln!(out, "  verdict: {}", a.verdict.tag)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_scan(input: &Path, output: &Output, parallelism: Option<u32>) -> CmdResult {
    let threads = parallelism
        .map(|k| k as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |k| k.get()));
    let report = match format_of(input, output.format) {
        Format::Palp => scan_palp(open(input)?, threads)?,
        Format::Json => crate::scan::scan(read_records(input, Format::Json)?, threads),
    };
    let mut out = sink(&output.out)?;
    match output.emit {
        Emit::Records => {
            write_report(&report, &mut out)?;
            eprintln!("{}", report.summary_line());
        }
        Emit::Table => write_table(&report, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct NormalFormRecord {
    polytope: usize,
    pair: usize,
    u: Vec<Vec<i64>>,
    a: i64,
    b: i64,
    n: i64,
    r: i64,
    p: i64,
    q: i64,
    s: i64,
    t: i64,
    d_x: i64,
    d_y: i64,
    d_z: i64,
    kernel: Vec<i64>,
    class_group: crate::scan::ClassGroupRecord,
}

fn small(v: &Int) -> Result<i64, Failure> {
    v.to_i64()
        .ok_or_else(|| Failure::new(EXIT_INVALID, format!("value {v} does not fit in 64 bits")))
}

fn nf_record(polytope: usize, pair: usize, pa: &PairAnalysis) -> Result<NormalFormRecord, Failure> {
    let nf = &pa.normal_form;
    let u = (0..3)
        .map(|i| nf.u.row(i).iter().map(small).collect())
        .collect::<Result<_, _>>()?;
    Ok(NormalFormRecord {
        polytope,
        pair,
        u,
        a: small(&nf.a)?,
        b: small(&nf.b)?,
        n: nf.n,
        r: small(&nf.r)?,
        p: small(&nf.p)?,
        q: small(&nf.q)?,
        s: small(&nf.s)?,
        t: small(&nf.t)?,
        d_x: small(&nf.d_x)?,
        d_y: small(&nf.d_y)?,
        d_z: small(&nf.d_z)?,
        kernel: nf
            .ray_map_kernel()
            .iter()
            .map(small)
            .collect::<Result<_, _>>()?,
        class_group: crate::scan::ClassGroupRecord {
            free_rank: pa.class_group.free_rank,
            torsion: pa
                .class_group
                .torsion
                .iter()
                .map(small)
                .collect::<Result<_, _>>()?,
        },
    })
}

fn write_normal_form(
    out: &mut dyn Write,
    polytope: usize,
    pair: usize,
    pa: &PairAnalysis,
) -> io::Result<()> {
    let nf: &NormalForm = &pa.normal_form;
    let ids = pa
        .pair
        .facet_ids
        .map(|(f0, f1)| format!(", facets {f0} and {f1}"))
        .unwrap_or_default();
    writeln!(out, "polytope {polytope}, pair {pair} (A{}{ids})", nf.n)?;
    writeln!(
        out,
        "  rho0 = {}, rho1 = {}, rho_u = {}, rho_v = {}",
        pa.pair.rho0, pa.pair.rho1, pa.pair.rho_u, pa.pair.rho_v
    )?;
    writeln!(out, "  U = {}", nf.u)?;
    writeln!(out, "  (a, b, n) = ({}, {}, {})", nf.a, nf.b, nf.n)?;
    writeln!(out, "  r = {}", nf.r)?;
    writeln!(
        out,
        "  (p, q, s, t) = ({}, {}, {}, {})",
        nf.p, nf.q, nf.s, nf.t
    )?;
    writeln!(
        out,
        "  (d_x, d_y, d_z) = ({}, {}, {})",
        nf.d_x, nf.d_y, nf.d_z
    )?;
    let [k0, k1, k2, k3] = nf.ray_map_kernel();
    writeln!(out, "  kernel = ({k0}, {k1}, {k2}, {k3})")?;
    writeln!(out, "  class group = {}", pa.class_group)
}

fn cmd_normal_form(input: &Path, output: &Output, selector: Option<usize>) -> CmdResult {
    let records = read_records(input, format_of(input, output.format))?;
    let polytopes = hulls(&records)?;
    let mut pairs: Vec<(usize, PairAnalysis)> = Vec::new();
    for (r, p) in records.iter().zip(&polytopes) {
        pairs.extend(
            analysis(r.index, p)?
                .pairs
                .into_iter()
                .map(|pa| (r.index, pa)),
        );
    }
    if pairs.is_empty() {
        return Err(Failure::new(EXIT_NOT_APPLICABLE, "no adjacent A_n pairs"));
    }
    let selected: Vec<usize> = match selector {
        Some(k) if k >= pairs.len() => {
            return Err(Failure::new(
                EXIT_INVALID,
                format!(
                    "pair {k} out of range: input has {} adjacent A_n pairs",
                    pairs.len()
                ),
            ))
        }
        Some(k) => vec![k],
        None => (0..pairs.len()).collect(),
    };
    let mut out = sink(&output.out)?;
    for k in selected {
        let (polytope, pa) = &pairs[k];
        match output.emit {
            Emit::Table => write_normal_form(&mut out, *polytope, k, pa)?,
            Emit::Records => {
                serde_json::to_writer(&mut out, &nf_record(*polytope, k, pa)?)
                    .map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

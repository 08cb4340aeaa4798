//! Data-parallel analysis of a stream of polytopes with an index-ordered merge.

use std::io::{BufRead, Write};

use fano_obstruct_core::{analyze, convex_hull, Int, PolytopeAnalysis};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::IngestError;
use crate::palp::{parse_palp, PolytopeRecord};

/// Records handed to the thread pool at once. Bounds memory on large inputs.
const BATCH: usize = 512;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetClassCounts {
    pub smooth: usize,
    pub an_triangle: usize,
    pub other: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupRecord {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub n: i64,
    pub pairing: i64,
    pub ext_degrees: Vec<i64>,
    pub class_group: ClassGroupRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub index: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub reflexive: bool,
    pub facet_classes: FacetClassCounts,
    pub pairs: Vec<PairRecord>,
    /// `not_smoothable`, `no_obstruction_found`, `already_smooth` or `invalid`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl AnalysisRecord {
    pub const INVALID: &'static str = "invalid";

    pub fn is_invalid(&self) -> bool {
        self.verdict == Self::INVALID
    }

    fn invalid(rec: &PolytopeRecord, error: String) -> Self {
        Self {
            index: rec.index,
            vertex_count: rec.vertices.len(),
            facet_count: 0,
            reflexive: false,
            facet_classes: FacetClassCounts::default(),
            pairs: Vec::new(),
            verdict: Self::INVALID.to_string(),
            error: Some(error),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub total: usize,
    pub reflexive: usize,
    pub not_smoothable: usize,
    pub invalid: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub total: usize,
    pub reflexive_count: usize,
    pub not_smoothable_count: usize,
    pub invalid_count: usize,
    /// Ordered by `index`.
    pub records: Vec<AnalysisRecord>,
}

impl ScanReport {
    pub fn push(&mut self, rec: AnalysisRecord) {
        self.total += 1;
        self.reflexive_count += usize::from(rec.reflexive);
        self.not_smoothable_count += usize::from(rec.verdict == "not_smoothable");
        self.invalid_count += usize::from(rec.is_invalid());
        self.records.push(rec);
    }

    pub fn summary(&self) -> ScanSummary {
        ScanSummary {
            total: self.total,
            reflexive: self.reflexive_count,
            not_smoothable: self.not_smoothable_count,
            invalid: self.invalid_count,
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "total={}, reflexive={}, not_smoothable={}",
            self.total, self.reflexive_count, self.not_smoothable_count
        )
    }
}

fn small(v: &Int) -> Result<i64, String> {
    v.to_i64()
        .ok_or_else(|| format!("value {v} does not fit in 64 bits"))
}

fn to_record(
    index: usize,
    vertex_count: usize,
    facet_count: usize,
    a: &PolytopeAnalysis,
) -> Result<AnalysisRecord, String> {
    let (smooth, an_triangle, other) = a.class_counts();
    let pairs = a
        .pairs
        .iter()
        .map(|p| {
            Ok(PairRecord {
                n: p.pair.n,
                pairing: small(&p.pair.pairing)?,
                ext_degrees: p
                    .ext_profile
                    .degrees
                    .iter()
                    .map(small)
                    .collect::<Result<_, _>>()?,
                class_group: ClassGroupRecord {
                    free_rank: p.class_group.free_rank,
                    torsion: p
                        .class_group
                        .torsion
                        .iter()
                        .map(small)
                        .collect::<Result<_, _>>()?,
                },
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(AnalysisRecord {
        index,
        vertex_count,
        facet_count,
        reflexive: a.reflexive,
        facet_classes: FacetClassCounts {
            smooth,
            an_triangle,
            other,
        },
        pairs,
        verdict: a.verdict.tag.as_str().to_string(),
        error: None,
    })
}

/// Hull, classification and verdict for one record. Failures become an
/// `invalid` record instead of an error.
pub fn analyze_record(rec: &PolytopeRecord) -> AnalysisRecord {
    let result = convex_hull(&rec.vertices)
        .map_err(|e| e.to_string())
        .and_then(|p| {
            let a = analyze(&p).map_err(|e| e.to_string())?;
            to_record(rec.index, p.vertices().len(), p.facets().len(), &a)
        });
    result.unwrap_or_else(|e| AnalysisRecord::invalid(rec, e))
}

fn pool(parallelism: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .expect("thread pool")
}

fn run_batch(pool: &rayon::ThreadPool, batch: &[PolytopeRecord], report: &mut ScanReport) {
    let done: Vec<AnalysisRecord> = pool.install(|| batch.par_iter().map(analyze_record).collect());
    for rec in done {
        report.push(rec);
    }
}

/// Analyzes every record; the report does not depend on `parallelism`.
pub fn scan<I: IntoIterator<Item = PolytopeRecord>>(records: I, parallelism: usize) -> ScanReport {
    let pool = pool(parallelism);
    let mut report = ScanReport::default();
    let mut batch = Vec::with_capacity(BATCH);
    for rec in records {
        batch.push(rec);
        if batch.len() == BATCH {
            run_batch(&pool, &batch, &mut report);
            batch.clear();
        }
    }
    run_batch(&pool, &batch, &mut report);
    report
}

/// Parses and scans a PALP stream; a parse error aborts the scan.
pub fn scan_palp<R: BufRead>(reader: R, parallelism: usize) -> Result<ScanReport, IngestError> {
    let pool = pool(parallelism);
    let mut report = ScanReport::default();
    let mut batch = Vec::with_capacity(BATCH);
    for rec in parse_palp(reader) {
        batch.push(rec?);
        if batch.len() == BATCH {
            run_batch(&pool, &batch, &mut report);
            batch.clear();
        }
    }
    run_batch(&pool, &batch, &mut report);
    Ok(report)
}

/// One JSON object per record, then `{"summary": {...}}`.
pub fn write_report<W: Write>(report: &ScanReport, sink: &mut W) -> std::io::Result<()> {
    for rec in &report.records {
        serde_json::to_writer(&mut *sink, rec)?;
        sink.write_all(b"\n")?;
    }
    #[derive(Serialize)]
    struct SummaryLine {
        summary: ScanSummary,
    }
    serde_json::to_writer(
        &mut *sink,
        &SummaryLine {
            summary: report.summary(),
        },
    )?;
    sink.write_all(b"\n")?;
    sink.flush()
}

/// Fixed-width table, one row per record.
pub fn write_table<W: Write>(report: &ScanReport, sink: &mut W) -> std::io::Result<()> {
    writeln!(
        sink,
        "{:>6}  {:>8}  {:>6}  {:>9}  {:>5}  {:<22}  pairings",
        "index", "vertices", "facets", "reflexive", "pairs", "verdict"
    )?;
    for r in &report.records {
        let pairings: Vec<String> = r
            .pairs
            .iter()
            .map(|p| format!("A{}:{}", p.n, p.pairing))
            .collect();
        writeln!(
            sink,
            "{:>6}  {:>8}  {:>6}  {:>9}  {:>5}  {:<22}  {}",
            r.index,
            r.vertex_count,
            r.facet_count,
            if r.reflexive { "yes" } else { "no" },
            r.pairs.len(),
            r.verdict,
            pairings.join(" ")
        )?;
    }
    writeln!(sink, "{}", report.summary_line())?;
    sink.flush()
}

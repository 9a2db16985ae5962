//! Verdict tables: the per-sentence summary a caller usually wants —
//! minimal-fixed-point value, largest-intrinsic-fixed-point value and the
//! final (classical-closure) value, plus fixed-point statistics.

use crate::closure::classical_closure;
use crate::fixpoint::{analyze, FixedPointReport};
use crate::model::SentenceSystem;
use crate::value::{ClassicalValue, TruthValue3};

/// How much of the analysis to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictMode {
    /// Minimal fixed point only; the final column closes over it.
    MfpOnly,
    /// Full enumeration; the final column closes over the LIFP.
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    pub limit: u64,
    pub mode: VerdictMode,
    pub threads: usize,
}

impl Default for EvalOptions {
    fn default() -> EvalOptions {
        EvalOptions {
            limit: crate::fixpoint::DEFAULT_MAX_ENUM,
            mode: VerdictMode::Full,
            threads: 1,
        }
    }
}

/// One row per user-declared sentence, in declaration order. `None`
/// fields were unavailable under the requested mode/limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictRow {
    pub name: String,
    pub mfp: TruthValue3,
    pub lifp: Option<TruthValue3>,
    pub final_value: Option<ClassicalValue>,
}

#[derive(Clone, Debug)]
pub struct VerdictTable {
    pub system: String,
    pub rows: Vec<VerdictRow>,
    pub fixed_point_count: Option<u64>,
    pub intrinsic_count: Option<u64>,
    pub limit_exceeded: bool,
    pub notes: Vec<String>,
}

impl VerdictTable {
    pub fn row(&self, name: &str) -> Option<&VerdictRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// Runs the analysis and assembles the table. Enumeration blow-ups are
/// reported as unavailable fields and a note, never as an error.
pub fn verdict(system: &SentenceSystem, opts: &EvalOptions) -> VerdictTable {
    let report = match opts.mode {
        VerdictMode::MfpOnly => FixedPointReport {
            fixed_points: None,
            minimal: crate::fixpoint::minimal_fixed_point(system),
            intrinsic: None,
            lifp: None,
            limit_exceeded: false,
        },
        VerdictMode::Full => analyze(system, opts.limit, opts.threads),
    };

    // in full mode the closure basis is the LIFP; behind the explicit
    // mfp flag it is the minimal fixed point
    let closure_basis = match opts.mode {
        VerdictMode::MfpOnly => Some(&report.minimal),
        VerdictMode::Full => report.lifp.as_ref(),
    };
    let finals = closure_basis.map(|primary| {
        classical_closure(system, primary).expect("closure basis is a fixed point")
    });

    let rows = system
        .user_ids()
        .map(|id| VerdictRow {
            name: system.sentence_name(id).to_string(),
            mfp: report.minimal.get(id),
            lifp: report.lifp.as_ref().map(|v| v.get(id)),
            final_value: finals.as_ref().map(|f| f.get(id)),
        })
        .collect();

    let mut notes = Vec::new();
    if opts.mode == VerdictMode::MfpOnly {
        notes.push(
            "mfp mode: lifp skipped; the final column closes over the minimal fixed point"
                .to_string(),
        );
    }
    if report.limit_exceeded {
        notes.push(format!(
            "enumeration skipped: {} names need {} valuations, over the limit of {}",
            system.len(),
            crate::fixpoint::valuation_space(system.len()),
            opts.limit
        ));
    }
    if system.name().to_ascii_lowercase().contains("yablo") {
        notes.push(
            "yablo truncation: a finite tail makes the last sentence true and the others \
             false; the infinite sequence instead leaves every sentence undetermined in the \
             primary valuation and true in the final one, which no finite system reproduces"
                .to_string(),
        );
    }

    VerdictTable {
        system: system.name().to_string(),
        rows,
        fixed_point_count: report.fixed_points.as_ref().map(|f| f.len() as u64),
        intrinsic_count: report.intrinsic.as_ref().map(|i| i.len() as u64),
        limit_exceeded: report.limit_exceeded,
        notes,
    }
}

/// Fixed-width text rendering; identical inputs give identical bytes.
pub fn render_table(table: &VerdictTable) -> String {
    const UNAVAILABLE: &str = "unavailable";
    let headers = ["name", "mfp", "lifp", "final", "fps", "intrinsic"];
    let count_cell = |c: Option<u64>| c.map_or(UNAVAILABLE.to_string(), |n| n.to_string());
    let rows: Vec<[String; 6]> = table
        .rows
        .iter()
        .map(|r| {
            [
                r.name.clone(),
                r.mfp.to_string(),
                r.lifp.map_or(UNAVAILABLE.to_string(), |v| v.to_string()),
                r.final_value
                    .map_or(UNAVAILABLE.to_string(), |v| v.to_string()),
                count_cell(table.fixed_point_count),
                count_cell(table.intrinsic_count),
            ]
        })
        .collect();

    let mut widths = headers.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }

    fn push_row(out: &mut String, widths: &[usize; 6], cells: [&str; 6]) {
        for (i, (cell, width)) in cells.iter().zip(widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..*width {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    }

    let mut out = format!("system {}\n", table.system);
    push_row(&mut out, &widths, headers);
    for row in &rows {
        push_row(
            &mut out,
            &widths,
            [&row[0], &row[1], &row[2], &row[3], &row[4], &row[5]],
        );
    }
    for note in &table.notes {
        out.push_str("note: ");
        out.push_str(note);
        out.push('\n');
    }
    out
}

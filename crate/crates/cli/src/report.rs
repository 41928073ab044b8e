use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use siglat::verify::{Mode, ModularityFinding, PairAnalysis};

pub const SCHEMA_VERSION: u32 = 1;

/// One (group, partition) analysis as written to disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub partition: String,
    #[serde(flatten)]
    pub analysis: PairAnalysis,
}

impl AnalysisReport {
    /// A placeholder for a group that could not be enumerated within caps.
    pub fn skipped(group: &str, partition: &str, reason: String) -> AnalysisReport {
        AnalysisReport {
            schema_version: SCHEMA_VERSION,
            group: group.to_string(),
            order: 0,
            partition: partition.to_string(),
            analysis: PairAnalysis {
                sigma_full: false,
                sigma_blocks: Vec::new(),
                subgroup_count: 0,
                lattice_size: None,
                lattice: Vec::new(),
                modular: None,
                distributivity: None,
                closure: None,
                characteristic: None,
                lemmas: Vec::new(),
                skips: vec![reason],
                violations: Vec::new(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Totals {
    pub pairs: usize,
    pub sigma_full: usize,
    pub distributive: usize,
    pub violations: usize,
    pub skips: usize,
}

/// A batch of analyses, ordered as the groups and partitions were given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchReport {
    pub schema_version: u32,
    pub mode: Mode,
    pub partitions: Vec<String>,
    pub totals: Totals,
    pub reports: Vec<AnalysisReport>,
}

impl BatchReport {
    pub fn new(mode: Mode, partitions: Vec<String>, reports: Vec<AnalysisReport>) -> BatchReport {
        let mut totals = Totals {
            pairs: reports.len(),
            ..Totals::default()
        };
        for r in &reports {
            let a = &r.analysis;
            totals.sigma_full += a.sigma_full as usize;
            totals.distributive += a
                .distributivity
                .as_ref()
                .is_some_and(|d| d.direct_distributive.holds) as usize;
            totals.violations += a.violations.len();
            totals.skips += a.skips.len();
        }
        BatchReport {
            schema_version: SCHEMA_VERSION,
            mode,
            partitions,
            totals,
            reports,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub schema_version: u32,
    pub partitions: Vec<String>,
    pub findings: Vec<ModularityFinding>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("-", yes_no)
}

pub fn analysis_markdown(reports: &[AnalysisReport]) -> String {
    let mut out = String::new();
    out.push_str("| group | order | partition | σ-full | lattice | modular | distributive | (i) | (ii) | (iii) | (iv) | (iv) covers | verdict | violations | skips |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n");
    for r in reports {
        let a = &r.analysis;
        let d = a.distributivity.as_ref();
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.group,
            r.order,
            r.partition,
            yes_no(a.sigma_full),
            a.lattice_size.map_or("-".to_string(), |n| n.to_string()),
            opt(a.modular.as_ref().map(|c| c.holds)),
            opt(d.map(|d| d.direct_distributive.holds)),
            opt(d.map(|d| d.cond_i.holds)),
            opt(d.map(|d| d.cond_ii.holds)),
            opt(d.map(|d| d.cond_iii.holds)),
            opt(d.and_then(|d| d.cond_iv_full.as_ref()).map(|c| c.holds)),
            opt(d.map(|d| d.cond_iv_covers.holds)),
            d.map_or("skipped", |d| if d.has_violation() { "VIOLATION" } else { "consistent" }),
            a.violations.len(),
            a.skips.len(),
        );
    }
    for r in reports {
        for v in &r.analysis.violations {
            let _ = writeln!(out, "\n- VIOLATION in {} / {}: {v}", r.group, r.partition);
        }
        for s in &r.analysis.skips {
            let _ = writeln!(out, "\n- skipped in {} / {}: {s}", r.group, r.partition);
        }
    }
    out
}

pub fn batch_markdown(batch: &BatchReport) -> String {
    let t = &batch.totals;
    let mut out = format!(
        "# Analysis summary\n\npartitions: {}\n\npairs: {}, σ-full: {}, distributive: {}, violations: {}, skips: {}\n\n",
        batch.partitions.join(" "),
        t.pairs,
        t.sigma_full,
        t.distributive,
        t.violations,
        t.skips
    );
    out.push_str(&analysis_markdown(&batch.reports));
    out
}

pub fn hunt_markdown(hunt: &HuntReport) -> String {
    let mut out = String::from("# Modularity of σ-permutable lattices\n\n| group | order | partition | σ-full | lattice | modular | distributive |\n|---|---|---|---|---|---|---|\n");
    for f in &hunt.findings {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            f.group,
            f.order,
            f.partition,
            yes_no(f.sigma_full),
            f.lattice_size.map_or("-".to_string(), |n| n.to_string()),
            opt(f.modular.as_ref().map(|c| c.holds)),
            opt(f.distributive),
        );
    }
    out
}

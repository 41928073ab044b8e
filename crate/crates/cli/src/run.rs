use std::sync::Arc;

use rayon::prelude::*;
use siglat::verify::{self, GroupContext, Mode};
use siglat::{Limits, PrimePartition};

use crate::corpus::GroupSpec;
use crate::report::{AnalysisReport, BatchReport, HuntReport, SCHEMA_VERSION};

fn context(spec: &GroupSpec, limits: &Limits) -> siglat::Result<GroupContext> {
    let group = spec.build(limits)?;
    GroupContext::new(Arc::new(group), limits)
}

/// Every partition for one group, sharing one context.
pub fn analyze_group(spec: &GroupSpec, partitions: &[PrimePartition], mode: Mode, limits: &Limits) -> Vec<AnalysisReport> {
    let ctx = match context(spec, limits) {
        Ok(ctx) => ctx,
        Err(e) => {
            return partitions
                .iter()
                .map(|p| AnalysisReport::skipped(&spec.name, p.name(), format!("group not enumerated: {e}")))
                .collect()
        }
    };
    let group_lemmas = verify::check_group_lemmas(&ctx);
    partitions
        .iter()
        .map(|p| AnalysisReport {
            schema_version: SCHEMA_VERSION,
            group: spec.name.clone(),
            order: ctx.group().order(),
            partition: p.name().to_string(),
            analysis: verify::analyze_pair(&ctx, p, mode, &group_lemmas),
        })
        .collect()
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

/// Analyses every group against every partition on `jobs` workers. Reports
/// come back sorted by (group name, partition name), whatever the worker
/// count.
pub fn run_batch(
    specs: &[GroupSpec],
    partitions: &[PrimePartition],
    mode: Mode,
    limits: &Limits,
    jobs: usize,
) -> BatchReport {
    let per_group: Vec<Vec<AnalysisReport>> =
        pool(jobs).install(|| specs.par_iter().map(|s| analyze_group(s, partitions, mode, limits)).collect());
    let mut reports: Vec<AnalysisReport> = per_group.into_iter().flatten().collect();
    reports.sort_by(|a, b| (&a.group, &a.partition).cmp(&(&b.group, &b.partition)));
    BatchReport::new(mode, partitions.iter().map(|p| p.name().to_string()).collect(), reports)
}

pub fn run_hunt(specs: &[GroupSpec], partitions: &[PrimePartition], limits: &Limits, jobs: usize) -> HuntReport {
    let findings: Vec<_> = pool(jobs).install(|| {
        specs
            .par_iter()
            .map(|s| match context(s, limits) {
                Ok(ctx) => partitions.iter().map(|p| verify::modularity_finding(&ctx, p)).collect(),
                Err(_) => Vec::new(),
            })
            .collect::<Vec<Vec<_>>>()
    });
    let mut findings: Vec<_> = findings.into_iter().flatten().collect();
    findings.sort_by(|a, b| (&a.group, &a.partition).cmp(&(&b.group, &b.partition)));
    HuntReport {
        schema_version: SCHEMA_VERSION,
        partitions: partitions.iter().map(|p| p.name().to_string()).collect(),
        findings,
    }
}

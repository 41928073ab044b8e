//! Executable checks over a fully enumerated group: the distributivity
//! criterion for σ-permutable subgroups, their closure under meets and
//! joins, the characteristic-subgroup criterion for σ-nilpotent subgroups,
//! and a suite of supporting structural statements.
//!
//! Every check either holds or produces a witness built from subgroups
//! of the analysed group, so a report doubles as a reproducer.

mod characteristic;
mod closure;
mod context;
mod criterion;
mod lemmas;
mod report;

pub use characteristic::{check_characteristic_criterion, halls_of_subgroup};
pub use closure::{check_sublattice_closure, is_closed, s_permutable_subgroups};
pub use context::{GroupContext, QuotientContext, SigmaView};
pub use criterion::{
    check_distributivity_criterion, condition_iv, members_permute, normal_lattice_distributive,
    residual_condition,
};
pub use lemmas::{check_group_lemmas, check_sigma_lemmas};
pub use report::{
    CharacteristicReport, Check, ClosureReport, CriterionReport, LemmaOutcome, ModularityFinding, Mode,
    PairAnalysis, SubgroupRef, Verdict, Witness,
};

use crate::error::Result;
use crate::lattice::{is_distributive, is_modular};
use crate::sigma::PrimePartition;

fn skip_or<T>(result: Result<T>, what: &str, skips: &mut Vec<String>) -> Result<Option<T>> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => {
            skips.push(format!("{what}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Runs every check for one partition. `group_lemmas` are the
/// partition-independent statements, computed once per group by
/// [`check_group_lemmas`] and copied into the report.
pub fn analyze_pair(
    ctx: &GroupContext,
    sigma: &PrimePartition,
    mode: Mode,
    group_lemmas: &[LemmaOutcome],
) -> PairAnalysis {
    let view = SigmaView::new(ctx, sigma);
    let mut skips = Vec::new();
    let mut violations = Vec::new();
    let mut out = PairAnalysis {
        sigma_full: view.is_sigma_full(),
        sigma_blocks: view.blocks().iter().map(|b| b.to_string()).collect(),
        subgroup_count: ctx.len(),
        lattice_size: None,
        lattice: Vec::new(),
        modular: None,
        distributivity: None,
        closure: None,
        characteristic: None,
        lemmas: group_lemmas.to_vec(),
        skips: Vec::new(),
        violations: Vec::new(),
    };

    if view.is_sigma_full() {
        match check_sublattice_closure(&view) {
            Ok(c) => {
                if !c.closed.holds {
                    violations.push("σ-permutable subgroups are not closed under meet and join".into());
                }
                if c.s_permutable_family_agrees == Some(false) {
                    violations.push("σ-permutable family differs from the S-permutable family".into());
                }
                if c.s_permutable_closed == Some(false) {
                    violations.push("S-permutable subgroups are not closed under meet and join".into());
                }
                out.closure = Some(c);
            }
            Err(e) => violations.push(format!("closure check failed: {e}")),
        }
        if let Ok(l) = view.permutable_lattice() {
            out.lattice_size = Some(l.len());
            out.lattice = l.members().iter().map(SubgroupRef::of).collect();
            out.modular = Some(Check::from_witness(is_modular(&l).err().map(|(a, b, c)| Witness::Triple {
                a: SubgroupRef::of(l.member(a)),
                b: SubgroupRef::of(l.member(b)),
                c: SubgroupRef::of(l.member(c)),
            })));
            match skip_or(check_distributivity_criterion(&view, mode), "distributivity criterion", &mut skips) {
                Ok(Some(r)) => {
                    if r.verdict.is_violation() {
                        violations.push("distributivity differs from conditions (i)-(iv)".into());
                    }
                    if r.covers_direction.is_violation() {
                        violations.push("conditions (i)-(iii) with covers-mode (iv) hold but the lattice is not distributive".into());
                    }
                    if r.full_implies_covers.is_violation() {
                        violations.push("full-mode (iv) holds but covers-mode (iv) fails".into());
                    }
                    debug_assert_eq!(r.direct_distributive.holds, is_distributive(&l).is_ok());
                    out.distributivity = Some(r);
                }
                Ok(None) => {}
                Err(e) => violations.push(format!("distributivity criterion failed: {e}")),
            }
        }
        match skip_or(check_characteristic_criterion(&view), "characteristic criterion", &mut skips) {
            Ok(Some(r)) => {
                if !r.equivalent.holds {
                    violations.push("characteristic-subgroup criterion fails".into());
                }
                out.characteristic = Some(r);
            }
            Ok(None) => {}
            Err(e) => violations.push(format!("characteristic criterion failed: {e}")),
        }
    }
    match skip_or(check_sigma_lemmas(&view), "structural statements", &mut skips) {
        Ok(Some(l)) => out.lemmas.extend(l),
        Ok(None) => {}
        Err(e) => violations.push(format!("structural statements failed: {e}")),
    }
    for l in &out.lemmas {
        if l.failures > 0 {
            violations.push(format!("statement {} fails in {} of {} instances", l.name, l.failures, l.instances));
        }
    }
    out.skips = skips;
    out.violations = violations;
    out
}

/// Modularity of the σ-permutable lattice for one pair.
pub fn modularity_finding(ctx: &GroupContext, sigma: &PrimePartition) -> ModularityFinding {
    let view = SigmaView::new(ctx, sigma);
    let lattice = view.permutable_lattice().ok().filter(|_| view.is_sigma_full());
    ModularityFinding {
        group: ctx.group().name().to_string(),
        order: ctx.group().order(),
        partition: sigma.name().to_string(),
        sigma_full: view.is_sigma_full(),
        lattice_size: lattice.as_ref().map(|l| l.len()),
        modular: lattice.as_ref().map(|l| {
            Check::from_witness(is_modular(l).err().map(|(a, b, c)| Witness::Triple {
                a: SubgroupRef::of(l.member(a)),
                b: SubgroupRef::of(l.member(b)),
                c: SubgroupRef::of(l.member(c)),
            }))
        }),
        distributive: lattice.as_ref().map(|l| is_distributive(l).is_ok()),
    }
}

/// Modularity findings for every group and partition, in input order.
pub fn hunt_modularity(contexts: &[GroupContext], partitions: &[PrimePartition]) -> Vec<ModularityFinding> {
    contexts
        .iter()
        .flat_map(|ctx| partitions.iter().map(move |p| modularity_finding(ctx, p)))
        .collect()
}

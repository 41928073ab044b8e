//! Meet/join closure of the σ-permutable subgroups, and for σ⁰ the
//! comparison with S-permutability computed straight from Sylow subgroups.

use std::collections::HashSet;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::subgroups::SubgroupFamily;

use super::context::SigmaView;
use super::report::{Check, ClosureReport, SubgroupRef, Witness};

pub fn check_sublattice_closure(view: &SigmaView) -> Result<ClosureReport> {
    if !view.is_sigma_full() {
        return Err(Error::NotSigmaFull);
    }
    let family = view.permutable_family();
    let closed = match view.permutable_lattice() {
        Ok(_) => Check::pass(),
        Err(Error::NotMeetClosed { a, b } | Error::NotJoinClosed { a, b }) => Check::fail(Witness::Pair {
            a: SubgroupRef::of(family.get(a)),
            b: SubgroupRef::of(family.get(b)),
        }),
        Err(e) => return Err(e),
    };
    let (agrees, s_closed) = if view.sigma().is_sigma0() {
        let s = s_permutable_subgroups(view.ctx().all());
        let ours: Vec<&Subgroup> = family.members().iter().collect();
        let theirs: Vec<&Subgroup> = s.iter().collect();
        (Some(ours == theirs), Some(is_closed(&s)))
    } else {
        (None, None)
    };
    Ok(ClosureReport {
        closed,
        s_permutable_family_agrees: agrees,
        s_permutable_closed: s_closed,
    })
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// Subgroups permuting, as element sets, with every Sylow subgroup of the
/// ambient group (the largest family member), in family order.
pub fn s_permutable_subgroups(all: &SubgroupFamily) -> Vec<Subgroup> {
    let g = all.top().order();
    let primes: Vec<usize> = (2..=g).filter(|&p| g.is_multiple_of(p) && (2..p).all(|d| p % d != 0)).collect();
    let sylows: Vec<&Subgroup> = all
        .members()
        .iter()
        .filter(|s| primes.iter().any(|&p| s.order() == p_part(g, p)))
        .collect();
    all.members()
        .iter()
        .filter(|a| sylows.iter().all(|p| a.permutes(p).expect("same parent")))
        .cloned()
        .collect()
}

/// Closure under intersection and generated subgroup, by direct set
/// computation.
pub fn is_closed(members: &[Subgroup]) -> bool {
    let sets: HashSet<&ElementSet> = members.iter().map(|s| s.members()).collect();
    members.iter().enumerate().all(|(i, a)| {
        members[i + 1..].iter().all(|b| {
            sets.contains(a.intersection(b).expect("same parent").members())
                && sets.contains(a.join(b).expect("same parent").members())
        })
    })
}

//! For a σ-nilpotent subgroup `A` of a σ-full group, three statements
//! should agree: `A` is σ-permutable; each Hall σᵢ-subgroup of `A` is; each
//! characteristic subgroup of `A` is.

use crate::error::{Error, Result};

use super::context::SigmaView;
use super::report::{CharacteristicReport, Check, Witness};

/// Hall σᵢ-subgroups of subgroup `a`, over every block of σ(A).
pub fn halls_of_subgroup(view: &SigmaView, a: usize) -> Vec<usize> {
    let ctx = view.ctx();
    let order = ctx.order_of(a) as u64;
    let blocks = view.sigma().blocks_of(order);
    (0..=a)
        .filter(|&j| ctx.leq(j, a))
        .filter(|&j| {
            let h = ctx.order_of(j) as u64;
            blocks.iter().any(|b| b.divides_only(h) && b.avoids(order / h))
        })
        .collect()
}

pub fn check_characteristic_criterion(view: &SigmaView) -> Result<CharacteristicReport> {
    if !view.is_sigma_full() {
        return Err(Error::NotSigmaFull);
    }
    let ctx = view.ctx();
    let mut nilpotent = 0;
    let mut permutable = 0;
    let mut witness = None;
    for a in 0..ctx.len() {
        if !view.is_nilpotent(a) {
            continue;
        }
        nilpotent += 1;
        let whole = view.is_permutable(a);
        let halls = halls_of_subgroup(view, a).iter().all(|&h| view.is_permutable(h));
        let characteristic = ctx.characteristic(a)?.iter().all(|&c| view.is_permutable(c));
        if whole {
            permutable += 1;
        }
        if (whole != halls || halls != characteristic) && witness.is_none() {
            witness = Some(Witness::Instance {
                subgroups: vec![ctx.subgroup_ref(a)],
                note: format!("permutable={whole}, halls={halls}, characteristic={characteristic}"),
            });
        }
    }
    Ok(CharacteristicReport {
        nilpotent_subgroups: nilpotent,
        permutable_nilpotent_subgroups: permutable,
        equivalent: Check::from_witness(witness),
    })
}

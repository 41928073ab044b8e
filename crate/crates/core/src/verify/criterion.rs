//! The distributivity criterion for the lattice of σ-permutable subgroups:
//! the lattice is distributive exactly when
//!
//! * (i) any two of its members permute,
//! * (ii) the normal subgroup lattice is distributive,
//! * (iii) `G/D` is cyclic and `D` is a meet-distributive element, where
//!   `D` is the σ-nilpotent residual, and
//! * (iv) in every quotient `Ḡ = G/R`, two `O^{σᵢ}(Ḡ)`-isomorphic sections
//!   `H̄/K̄` and `L̄/K̄` with `K̄, H̄, L̄` σ-permutable σᵢ-subgroups coincide.
//!
//! The covers variant of (iv) only looks at `H̄, L̄` covering `K̄` in the
//! σ-permutable lattice of `Ḡ`; together with (i)-(iii) it is still
//! sufficient for distributivity.

use crate::error::{Error, Result};
use crate::iso::{find_equivariant_isomorphism, Section};
use crate::lattice::{is_distributive, SigmaLattice};

use super::context::SigmaView;
use super::report::{Check, CriterionReport, Mode, SubgroupRef, Verdict, Witness};

fn triple(l: &SigmaLattice, (a, b, c): (usize, usize, usize)) -> Witness {
    Witness::Triple {
        a: SubgroupRef::of(l.member(a)),
        b: SubgroupRef::of(l.member(b)),
        c: SubgroupRef::of(l.member(c)),
    }
}

fn distributive_check(l: &SigmaLattice) -> Check {
    Check::from_witness(is_distributive(l).err().map(|t| triple(l, t)))
}

pub fn check_distributivity_criterion(view: &SigmaView, mode: Mode) -> Result<CriterionReport> {
    if !view.is_sigma_full() {
        return Err(Error::NotSigmaFull);
    }
    let lattice = view.permutable_lattice()?;
    let direct_distributive = distributive_check(&lattice);
    let cond_i = members_permute(view, &lattice);
    let cond_ii = normal_lattice_distributive(view);
    let cond_iii = residual_condition(view, &lattice)?;
    let cond_iv_full = match mode {
        Mode::Full => Some(Check::from_witness(condition_iv(view, false)?)),
        Mode::Covers => None,
    };
    let cond_iv_covers = Check::from_witness(condition_iv(view, true)?);

    let first_three = cond_i.holds && cond_ii.holds && cond_iii.holds;
    let covers_direction = Verdict::from_ok(!(first_three && cond_iv_covers.holds) || direct_distributive.holds);
    let (verdict, full_implies_covers) = match &cond_iv_full {
        Some(full) => (
            Verdict::from_ok(direct_distributive.holds == (first_three && full.holds)),
            Verdict::from_ok(!full.holds || cond_iv_covers.holds),
        ),
        None => (covers_direction, Verdict::Consistent),
    };
    Ok(CriterionReport {
        mode,
        direct_distributive,
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv_full,
        cond_iv_covers,
        verdict,
        covers_direction,
        full_implies_covers,
    })
}

/// Condition (i): the first non-permuting pair of lattice members.
pub fn members_permute(view: &SigmaView, lattice: &SigmaLattice) -> Check {
    let ctx = view.ctx();
    let idx: Vec<usize> = lattice.members().iter().map(|s| ctx.index_of(s)).collect();
    for (x, &a) in idx.iter().enumerate() {
        for &b in &idx[x + 1..] {
            if !ctx.permutes(a, b) {
                return Check::fail(Witness::Pair {
                    a: ctx.subgroup_ref(a),
                    b: ctx.subgroup_ref(b),
                });
            }
        }
    }
    Check::pass()
}

/// Condition (ii).
pub fn normal_lattice_distributive(view: &SigmaView) -> Check {
    let normal = SigmaLattice::build(&view.ctx().normal_family()).expect("normal subgroups form a lattice");
    distributive_check(&normal)
}

/// Condition (iii).
pub fn residual_condition(view: &SigmaView, lattice: &SigmaLattice) -> Result<Check> {
    let ctx = view.ctx();
    let d = view.nilpotent_residual()?;
    let residual = ctx.subgroup_ref(d);
    let top = ctx.subgroup(ctx.top());
    if !Section::new(top, ctx.subgroup(d))?.table().is_cyclic() {
        return Ok(Check::fail(Witness::Residual {
            residual,
            reason: "quotient by the residual is not cyclic".into(),
        }));
    }
    let Some(a) = lattice.position(ctx.subgroup(d)) else {
        return Ok(Check::fail(Witness::Residual {
            residual,
            reason: "residual is not in the lattice".into(),
        }));
    };
    let n = lattice.len();
    for b in 0..n {
        for c in 0..n {
            let lhs = lattice.meet(a, lattice.join(b, c));
            let rhs = lattice.join(lattice.meet(a, b), lattice.meet(a, c));
            if lhs != rhs {
                return Ok(Check::fail(Witness::Triple {
                    a: residual,
                    b: SubgroupRef::of(lattice.member(b)),
                    c: SubgroupRef::of(lattice.member(c)),
                }));
            }
        }
    }
    Ok(Check::pass())
}

/// Condition (iv), full or covers variant. Quotients are scanned by
/// ascending kernel, then blocks by smallest prime, then bottoms `K̄` from
/// largest to smallest, then pairs `H̄ < L̄` in family order; the first
/// isomorphic pair is the witness.
pub fn condition_iv(view: &SigmaView, covers: bool) -> Result<Option<Witness>> {
    let base = view.ctx();
    for (q, qv) in base.quotients().iter().zip(view.quotient_views()) {
        if !qv.is_sigma_full() {
            return Err(Error::NotSigmaFull);
        }
        let qctx = qv.ctx();
        let per = if covers { Some(qv.permutable_lattice()?) } else { None };
        let covered = |k: usize, h: usize| match &per {
            None => true,
            Some(l) => {
                let pos = |i: usize| l.position(qctx.subgroup(i)).expect("σ-permutable member");
                l.covers(pos(k), pos(h))
            }
        };
        for b in 0..qv.blocks().len() {
            let members = qv.block_members(b);
            let residual = qctx.subgroup(qv.residual(b));
            let actors: Vec<usize> = residual.generators().iter().map(|&g| g as usize).collect();
            for &k in members.iter().rev() {
                let bottom = qctx.subgroup(k);
                let above: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&h| h != k && bottom.is_normal_in(qctx.subgroup(h)) && covered(k, h))
                    .collect();
                for (x, &h) in above.iter().enumerate() {
                    for &l in &above[x + 1..] {
                        if qctx.order_of(h) != qctx.order_of(l) {
                            continue;
                        }
                        let first = Section::new(qctx.subgroup(h), bottom)?;
                        let second = Section::new(qctx.subgroup(l), bottom)?;
                        if find_equivariant_isomorphism(&first, &second, &actors, base.limits())?.is_some() {
                            return Ok(Some(Witness::Sections {
                                normal: base.subgroup_ref(q.kernel),
                                block: qv.blocks()[b].to_string(),
                                bottom: base.subgroup_ref(q.preimage(base, k)),
                                first: base.subgroup_ref(q.preimage(base, h)),
                                second: base.subgroup_ref(q.preimage(base, l)),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

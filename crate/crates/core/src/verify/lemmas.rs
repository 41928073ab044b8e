//! Structural statements about σ-permutability, σ-subnormality and
//! σ-nilpotency, each checked on every admissible tuple of subgroups.
//! A statement is reported by name with its instance count, failure count
//! and first failing tuple.

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::iso::{self, Section};
use crate::lattice::{find_diamond, find_pentagon, interval, is_distributive, is_modular, SigmaLattice};
use crate::sigma;

use super::context::{GroupContext, SigmaView};
use super::report::{LemmaOutcome, SubgroupRef, Witness};

#[derive(Default)]
struct Tally {
    outcomes: Vec<LemmaOutcome>,
}

impl Tally {
    fn declare(&mut self, name: &str) -> usize {
        match self.outcomes.iter().position(|o| o.name == name) {
            Some(i) => i,
            None => {
                self.outcomes.push(LemmaOutcome {
                    name: name.to_string(),
                    instances: 0,
                    failures: 0,
                    first_failure: None,
                });
                self.outcomes.len() - 1
            }
        }
    }

    fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> Witness) {
        let i = self.declare(name);
        let o = &mut self.outcomes[i];
        o.instances += 1;
        if !ok {
            o.failures += 1;
            if o.first_failure.is_none() {
                o.first_failure = Some(witness());
            }
        }
    }
}

fn instance(ctx: &GroupContext, subgroups: &[usize], note: impl Into<String>) -> Witness {
    Witness::Instance {
        subgroups: subgroups.iter().map(|&i| ctx.subgroup_ref(i)).collect(),
        note: note.into(),
    }
}

fn note_only(note: impl Into<String>) -> Witness {
    Witness::Instance {
        subgroups: Vec::new(),
        note: note.into(),
    }
}

fn lattice_oracles(t: &mut Tally, l: &SigmaLattice, label: &str) {
    let distributive = is_distributive(l).is_ok();
    let modular = is_modular(l).is_ok();
    let diamond_free = find_diamond(l).is_none();
    let pentagon_free = find_pentagon(l).is_none();
    t.check(
        "distributive_iff_modular_without_diamond",
        distributive == (modular && diamond_free),
        || note_only(label),
    );
    t.check("distributive_implies_modular", !distributive || modular, || note_only(label));
    t.check("modular_iff_pentagon_free", modular == pentagon_free, || note_only(label));
    if distributive {
        for x in 0..l.len() {
            let lower = interval(l, l.bottom(), x).expect("bottom is below everything");
            let upper = interval(l, x, l.top()).expect("top is above everything");
            t.check(
                "intervals_of_distributive_lattice_are_distributive",
                is_distributive(&lower).is_ok() && is_distributive(&upper).is_ok(),
                || Witness::Instance {
                    subgroups: vec![SubgroupRef::of(l.member(x))],
                    note: label.to_string(),
                },
            );
        }
    }
}

/// Statements that depend only on the group.
pub fn check_group_lemmas(ctx: &GroupContext) -> Vec<LemmaOutcome> {
    let mut t = Tally::default();
    let n = ctx.len();

    for a in 0..n {
        for b in a + 1..n {
            let direct = ctx.subgroup(a).permutes(ctx.subgroup(b)).expect("same parent");
            t.check("permutability_matches_set_products", ctx.permutes(a, b) == direct, || {
                instance(ctx, &[a, b], format!("table says {}", ctx.permutes(a, b)))
            });
        }
    }

    t.declare("join_preserves_permuting");
    for h in 0..n {
        let with_h: Vec<usize> = (0..n).filter(|&a| ctx.permutes(a, h)).collect();
        for (x, &a) in with_h.iter().enumerate() {
            for &b in &with_h[x + 1..] {
                let j = ctx.join(a, b);
                t.check("join_preserves_permuting", ctx.permutes(j, h), || {
                    instance(ctx, &[a, b, h], "join does not permute")
                });
            }
        }
    }

    let full = ctx.lattice();
    lattice_oracles(&mut t, full, "full subgroup lattice");
    for k in 0..n {
        let sub = interval(full, full.bottom(), k).expect("bottom is below everything");
        t.check(
            "cyclic_iff_distributive_subgroup_lattice",
            is_distributive(&sub).is_ok() == ctx.subgroup(k).to_group("k").is_cyclic(),
            || instance(ctx, &[k], "subgroup lattice disagrees with cyclicity"),
        );
    }

    let normal = SigmaLattice::build(&ctx.normal_family()).expect("normal subgroups form a lattice");
    lattice_oracles(&mut t, &normal, "normal subgroup lattice");
    t.check("normal_lattice_is_modular", is_modular(&normal).is_ok(), || note_only("normal subgroup lattice"));
    let mut criterion_holds = true;
    'quotients: for q in ctx.quotients() {
        let qctx = &q.ctx;
        let actors: Vec<usize> = qctx.group().generator_indices().iter().map(|&g| g as usize).collect();
        let normals = qctx.normal();
        for (x, &a) in normals.iter().enumerate() {
            for &b in &normals[x + 1..] {
                if qctx.order_of(a) != qctx.order_of(b) {
                    continue;
                }
                let first = Section::of_subgroup(qctx.subgroup(a));
                let second = Section::of_subgroup(qctx.subgroup(b));
                let found = iso::find_equivariant_isomorphism(&first, &second, &actors, ctx.limits())
                    .expect("normal subgroups are invariant under the whole group");
                if found.is_some() {
                    criterion_holds = false;
                    break 'quotients;
                }
            }
        }
    }
    t.check(
        "normal_lattice_distributive_iff_isomorphic_normals_coincide",
        is_distributive(&normal).is_ok() == criterion_holds,
        || note_only(format!("isomorphism criterion says {criterion_holds}")),
    );

    for q in ctx.quotients() {
        let above = (0..n).filter(|&i| ctx.leq(q.kernel, i)).count();
        t.check("quotient_subgroups_correspond_to_overgroups", q.ctx.len() == above, || {
            instance(ctx, &[q.kernel], format!("{} subgroups in the quotient, {above} overgroups", q.ctx.len()))
        });
    }

    diagonal_subgroups(&mut t, ctx);
    t.outcomes
}

/// `G = A × B` with `f: A → B` an isomorphism: the diagonal
/// `C = {a·f(a)}` is a common complement of `A` and `B` in `AB`.
fn diagonal_subgroups(t: &mut Tally, ctx: &GroupContext) {
    const NAME: &str = "diagonal_complements_both_factors";
    t.declare(NAME);
    let g = ctx.group();
    for a in 1..ctx.len() {
        for b in a + 1..ctx.len() {
            let (sa, sb) = (ctx.subgroup(a), ctx.subgroup(b));
            if sa.order() != sb.order() || ctx.order_of(ctx.meet(a, b)) != 1 {
                continue;
            }
            let commute = sa.generators().iter().all(|&x| {
                sb.generators()
                    .iter()
                    .all(|&y| g.mul(x as usize, y as usize) == g.mul(y as usize, x as usize))
            });
            if !commute {
                continue;
            }
            let product = sa.set_product(sb).expect("same parent");
            for f in iso::subgroup_isomorphisms(sa, sb, 4) {
                let diagonal = ElementSet::from_indices(g.order(), f.iter().map(|&(x, y)| g.mul(x, y)));
                let c = crate::group::Subgroup::generated(g, diagonal.iter());
                let ok = c.members() == &diagonal
                    && sa.set_product(&c).expect("same parent") == product
                    && sb.set_product(&c).expect("same parent") == product
                    && sa.members().intersection(&diagonal).count() == 1
                    && sb.members().intersection(&diagonal).count() == 1;
                t.check(NAME, ok, || instance(ctx, &[a, b], "diagonal is not a common complement"));
            }
        }
    }
}

/// Statements about one partition. `Err` only for cap overruns.
pub fn check_sigma_lemmas(view: &SigmaView) -> Result<Vec<LemmaOutcome>> {
    let mut t = Tally::default();
    routes(&mut t, view, "group");
    for (q, qv) in view.ctx().quotients().iter().zip(view.quotient_views()) {
        routes(&mut t, qv, &format!("quotient by a normal subgroup of order {}", view.ctx().order_of(q.kernel)));
    }
    nilpotent_class(&mut t, view);
    subnormality(&mut t, view);
    if view.is_sigma_full() {
        permutability(&mut t, view)?;
    }
    Ok(t.outcomes)
}

/// Independent computations of the same object must agree.
fn routes(t: &mut Tally, view: &SigmaView, label: &str) {
    let ctx = view.ctx();
    let top = ctx.subgroup(ctx.top());
    for (b, block) in view.blocks().iter().enumerate() {
        let generated = view.residual(b);
        let intersected = ctx.index_of(&sigma::sigma_residual_via_normals(ctx.all(), block));
        t.check("residual_by_elements_equals_residual_by_normals", generated == intersected, || {
            Witness::Instance {
                subgroups: vec![ctx.subgroup_ref(generated), ctx.subgroup_ref(intersected)],
                note: format!("{label}, block {block}"),
            }
        });
    }

    let by_cores = sigma::is_sigma_nilpotent(ctx.all(), view.sigma());
    let by_elements = view.is_nilpotent(ctx.top());
    let literal = view.is_sigma_full()
        && (0..view.blocks().len()).all(|b| view.halls(b).iter().any(|&h| ctx.is_normal(h)));
    t.check(
        "nilpotency_routes_agree",
        by_cores == by_elements && by_elements == literal,
        || note_only(format!("{label}: cores {by_cores}, elements {by_elements}, direct product {literal}")),
    );
    if view.is_sigma_full() {
        let all_permutable = (0..ctx.len()).all(|i| view.is_permutable(i));
        t.check("nilpotent_iff_all_subgroups_permutable", by_elements == all_permutable, || {
            note_only(format!("{label}: nilpotent {by_elements}, all permutable {all_permutable}"))
        });
    }
    if let Ok(d) = view.nilpotent_residual() {
        let quotient = Section::new(top, ctx.subgroup(d)).expect("residual is normal").table();
        t.check(
            "quotient_by_nilpotent_residual_is_nilpotent",
            sigma::is_sigma_nilpotent_table(&quotient, view.sigma()),
            || instance(ctx, &[d], label),
        );
    }
}

fn nilpotent_class(t: &mut Tally, view: &SigmaView) {
    let ctx = view.ctx();
    let n = ctx.len();
    t.declare("nilpotent_closed_under_subgroups");
    for a in 0..n {
        if view.is_nilpotent(a) {
            for b in 0..a {
                if ctx.leq(b, a) {
                    t.check("nilpotent_closed_under_subgroups", view.is_nilpotent(b), || {
                        instance(ctx, &[a, b], "subgroup of a σ-nilpotent group")
                    });
                }
            }
        }
    }
    let normal = ctx.normal();
    for (x, &a) in normal.iter().enumerate() {
        for &b in &normal[x..] {
            if view.is_nilpotent(a) && view.is_nilpotent(b) {
                t.check("nilpotent_closed_under_normal_products", view.is_nilpotent(ctx.join(a, b)), || {
                    instance(ctx, &[a, b], "product of σ-nilpotent normal subgroups")
                });
            }
        }
    }
    let d = view.nilpotent_residual().ok();
    for (q, qv) in ctx.quotients().iter().zip(view.quotient_views()) {
        for a in 0..n {
            if view.is_nilpotent(a) {
                t.check("nilpotent_closed_under_images", qv.is_nilpotent(q.image(ctx, a)), || {
                    instance(ctx, &[a, q.kernel], "image in the quotient")
                });
            }
        }
        if let (Some(d), Ok(qd)) = (d, qv.nilpotent_residual()) {
            t.check("nilpotent_residual_commutes_with_quotients", q.image(ctx, d) == qd, || {
                instance(ctx, &[q.kernel, d, q.preimage(ctx, qd)], "image of the residual differs")
            });
        }
    }
}

fn subnormality(t: &mut Tally, view: &SigmaView) {
    let ctx = view.ctx();
    let n = ctx.len();
    let g = ctx.group().order() as u64;

    for k in 0..n {
        let below = ctx.all().below(ctx.subgroup(k));
        let flags = sigma::sigma_subnormal_flags(&below, view.sigma());
        for a in 0..n {
            if view.is_subnormal(a) {
                let m = ctx.meet(a, k);
                let pos = below.position(ctx.subgroup(m)).expect("meet lies below k");
                t.check("subnormal_meet_is_subnormal_in_the_other_factor", flags[pos], || {
                    instance(ctx, &[a, k], "intersection not σ-subnormal in the second subgroup")
                });
            }
        }
    }

    let cores: Vec<usize> = (0..view.blocks().len()).map(|b| view.core(b)).collect();
    for a in 0..n {
        if !view.is_subnormal(a) {
            continue;
        }
        let sa = ctx.subgroup(a);
        let order = sa.order() as u64;
        for (b, block) in view.blocks().iter().enumerate() {
            if block.divides_only(g / order) {
                let own = ctx.index_of(&sigma::sigma_residual(sa, block));
                t.check("subnormal_with_block_index_shares_residual", own == view.residual(b), || {
                    instance(ctx, &[a, own, view.residual(b)], format!("block {block}"))
                });
            }
            if order > 1 && block.divides_only(order) {
                t.check("subnormal_block_subgroup_lies_in_core", ctx.leq(a, cores[b]), || {
                    instance(ctx, &[a, cores[b]], format!("block {block}"))
                });
            }
            if !block.avoids(order) {
                for &h in view.halls(b) {
                    let m = ctx.meet(a, h);
                    let mo = ctx.order_of(m) as u64;
                    t.check("subnormal_meets_hall_in_a_hall", mo > 1 && block.avoids(order / mo), || {
                        instance(ctx, &[a, h, m], format!("block {block}"))
                    });
                }
            }
        }
        for (q, qv) in ctx.quotients().iter().zip(view.quotient_views()) {
            t.check("subnormal_image_is_subnormal", qv.is_subnormal(q.image(ctx, a)), || {
                instance(ctx, &[a, q.kernel], "image not σ-subnormal")
            });
        }
        if view.is_nilpotent(a) {
            for k in a..n {
                if view.is_subnormal(k) && view.is_nilpotent(k) {
                    t.check("subnormal_nilpotent_join_is_nilpotent", view.is_nilpotent(ctx.join(a, k)), || {
                        instance(ctx, &[a, k], "join not σ-nilpotent")
                    });
                }
            }
        }
    }
}

fn permutability(t: &mut Tally, view: &SigmaView) -> Result<()> {
    let ctx = view.ctx();
    let n = ctx.len();
    let blocks = view.blocks();

    for a in 0..n {
        let fully = view.is_fully_permutable(a);
        let perm = view.is_permutable(a);
        t.check("permutable_is_fully_permutable", !perm || fully, || instance(ctx, &[a], ""));
        if fully {
            t.check("fully_permutable_is_subnormal", view.is_subnormal(a), || instance(ctx, &[a], ""));
            t.check("fully_permutable_is_permutable", perm, || instance(ctx, &[a], ""));
            let sa = ctx.subgroup(a);
            let core = sa.core_in(ctx.subgroup(ctx.top()))?;
            let quotient = Section::new(sa, &core)?.table();
            t.check(
                "fully_permutable_modulo_core_is_nilpotent",
                sigma::is_sigma_nilpotent_table(&quotient, view.sigma()),
                || instance(ctx, &[a, ctx.index_of(&core)], ""),
            );
        }
        let order = ctx.order_of(a) as u64;
        for (b, block) in blocks.iter().enumerate() {
            if order == 1 || !block.divides_only(order) {
                continue;
            }
            let residual = ctx.subgroup(view.residual(b));
            let normalized = ctx.subgroup(a).is_normalized_by_subgroup(residual);
            if perm {
                t.check("residual_normalizes_permutable_block_subgroup", normalized, || {
                    instance(ctx, &[a, view.residual(b)], format!("block {block}"))
                });
            }
            if normalized {
                t.check("residual_normalized_block_subgroup_is_fully_permutable", fully, || {
                    instance(ctx, &[a, view.residual(b)], format!("block {block}"))
                });
            }
        }
    }

    for a in 0..n {
        if !(view.is_nilpotent(a) && view.is_subnormal(a)) {
            continue;
        }
        let characteristic = ctx.characteristic(a)?;
        for b in 0..blocks.len() {
            for &h in view.halls(b) {
                if !ctx.permutes(a, h) {
                    continue;
                }
                for &v in &characteristic {
                    t.check("characteristic_subgroup_inherits_permuting_with_hall", ctx.permutes(v, h), || {
                        instance(ctx, &[a, v, h], "")
                    });
                }
            }
        }
    }

    t.declare("quotient_preimage_is_permutable");
    for (q, qv) in ctx.quotients().iter().zip(view.quotient_views()) {
        t.check("quotients_are_sigma_full", qv.is_sigma_full(), || instance(ctx, &[q.kernel], ""));
        if !qv.is_sigma_full() {
            continue;
        }
        for j in 0..q.ctx.len() {
            if qv.is_permutable(j) {
                let pre = q.preimage(ctx, j);
                t.check("quotient_preimage_is_permutable", view.is_permutable(pre), || {
                    instance(ctx, &[q.kernel, pre], "")
                });
            }
        }
        for a in 0..n {
            if view.is_permutable(a) {
                t.check("quotient_image_is_permutable", qv.is_permutable(q.image(ctx, a)), || {
                    instance(ctx, &[a, q.kernel], "")
                });
            }
        }
        if let Ok(l) = qv.permutable_lattice() {
            lattice_oracles(t, &l, "σ-permutable lattice of a quotient");
        }
    }

    for (b, block) in blocks.iter().enumerate() {
        let members = view.block_members(b);
        let built = SigmaLattice::build(&view.family_of(&members));
        t.check("block_subgroups_form_a_sublattice", built.is_ok(), || {
            note_only(format!("block {block}"))
        });
        if let Ok(l) = built {
            lattice_oracles(t, &l, "σ-permutable block subgroups");
            if is_distributive(&l).is_ok() {
                for (x, &p) in members.iter().enumerate() {
                    for &r in &members[x + 1..] {
                        t.check("distributive_block_lattice_members_permute", ctx.permutes(p, r), || {
                            instance(ctx, &[p, r], format!("block {block}"))
                        });
                    }
                }
            }
        }
    }

    if let Ok(l) = view.permutable_lattice() {
        lattice_oracles(t, &l, "σ-permutable lattice");
        let idx = view.permutable_indices();
        if is_distributive(&l).is_ok() {
            for (x, &p) in idx.iter().enumerate() {
                for &r in &idx[x + 1..] {
                    t.check("distributive_lattice_members_permute", ctx.permutes(p, r), || {
                        instance(ctx, &[p, r], "")
                    });
                }
            }
        }
        if is_modular(&l).is_ok() {
            modular_permuting_criterion(t, ctx, &idx);
        }
    }
    Ok(())
}

/// In a modular sublattice: if `N ⊴ ⟨U, V⟩` and `U` permutes with both
/// `V ∩ UN` and `VN`, then `U` permutes with `V`.
fn modular_permuting_criterion(t: &mut Tally, ctx: &GroupContext, members: &[usize]) {
    const NAME: &str = "modular_lattice_permuting_criterion";
    t.declare(NAME);
    for &u in members {
        for &v in members {
            if u == v {
                continue;
            }
            let span = ctx.subgroup(ctx.join(u, v));
            for &nn in members {
                if !ctx.leq(nn, ctx.join(u, v)) || !ctx.subgroup(nn).is_normal_in(span) {
                    continue;
                }
                let un = ctx.join(u, nn);
                let hypotheses = ctx.permutes(u, ctx.meet(v, un)) && ctx.permutes(u, ctx.join(v, nn));
                if hypotheses {
                    t.check(NAME, ctx.permutes(u, v), || instance(ctx, &[u, v, nn], ""));
                }
            }
        }
    }
}

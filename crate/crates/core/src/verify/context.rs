use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::group::{Group, Limits, Subgroup};
use crate::iso;
use crate::lattice::SigmaLattice;
use crate::quotient::QuotientGroup;
use crate::sigma::{self, Block, PrimePartition};
use crate::subgroups::{self, SubgroupFamily};

use super::report::SubgroupRef;

/// Everything about one group that does not depend on a partition, computed
/// lazily and shared by every analysis of that group. Subgroups are
/// addressed by their index in the sorted full enumeration.
pub struct GroupContext {
    group: Arc<Group>,
    limits: Limits,
    all: SubgroupFamily,
    normal: Vec<usize>,
    lattice: OnceLock<SigmaLattice>,
    quotients: OnceLock<Vec<QuotientContext>>,
    conjugates: OnceLock<Vec<Vec<usize>>>,
    characteristic: Mutex<HashMap<usize, Result<Vec<usize>>>>,
}

/// `G/R` for one normal subgroup `R`, with its own context.
pub struct QuotientContext {
    pub kernel: usize,
    pub map: QuotientGroup,
    pub ctx: GroupContext,
}

impl QuotientContext {
    /// Index in the quotient context of the image of base subgroup `i`.
    pub fn image(&self, base: &GroupContext, i: usize) -> usize {
        self.ctx.index_of(&self.map.image(base.subgroup(i)))
    }

    /// Index in the base context of the preimage of quotient subgroup `j`.
    pub fn preimage(&self, base: &GroupContext, j: usize) -> usize {
        base.index_of(&self.map.preimage(self.ctx.subgroup(j)))
    }
}

impl GroupContext {
    pub fn new(group: Arc<Group>, limits: &Limits) -> Result<GroupContext> {
        let all = subgroups::all_subgroups(&group, limits)?;
        let normal = (0..all.len()).filter(|&i| all.get(i).is_normal()).collect();
        Ok(GroupContext {
            group,
            limits: *limits,
            all,
            normal,
            lattice: OnceLock::new(),
            quotients: OnceLock::new(),
            conjugates: OnceLock::new(),
            characteristic: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn all(&self) -> &SubgroupFamily {
        &self.all
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        self.all.get(i)
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.all.get(i).order()
    }

    pub fn index_of(&self, s: &Subgroup) -> usize {
        self.all.position(s).expect("every subgroup is enumerated")
    }

    pub fn top(&self) -> usize {
        self.all.len() - 1
    }

    pub fn normal(&self) -> &[usize] {
        &self.normal
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal.binary_search(&i).is_ok()
    }

    pub fn normal_family(&self) -> SubgroupFamily {
        SubgroupFamily::new(&self.group, self.normal.iter().map(|&i| self.all.get(i).clone()).collect())
    }

    /// The full subgroup lattice; its element indices agree with the family.
    pub fn lattice(&self) -> &SigmaLattice {
        self.lattice
            .get_or_init(|| SigmaLattice::build(&self.all).expect("the full subgroup family is a lattice"))
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice().meet(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice().join(a, b)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice().leq(a, b)
    }

    /// `AB = BA`, read off the lattice tables: `AB` is a subgroup exactly
    /// when `|A||B| / |A ∩ B| = |⟨A, B⟩|`.
    pub fn permutes(&self, a: usize, b: usize) -> bool {
        let l = self.lattice();
        self.order_of(a) * self.order_of(b) == self.order_of(l.meet(a, b)) * self.order_of(l.join(a, b))
    }

    /// `G/R` for every normal `R`, in family order.
    pub fn quotients(&self) -> &[QuotientContext] {
        self.quotients.get_or_init(|| {
            self.normal
                .iter()
                .map(|&r| {
                    let map = QuotientGroup::new(&self.group, self.all.get(r)).expect("kernel is normal");
                    let ctx = GroupContext::new(map.quotient().clone(), &self.limits)
                        .expect("a quotient has no more subgroups than the group");
                    QuotientContext { kernel: r, map, ctx }
                })
                .collect()
        })
    }

    /// Indices of the conjugates of subgroup `i`, ascending.
    pub fn conjugates(&self, i: usize) -> &[usize] {
        &self.conjugates.get_or_init(|| {
            let mut classes = vec![Vec::new(); self.len()];
            for i in 0..self.len() {
                if !classes[i].is_empty() {
                    continue;
                }
                let mut orbit = vec![i];
                let mut k = 0;
                while k < orbit.len() {
                    let s = self.subgroup(orbit[k]).clone();
                    for &g in self.group.generator_indices() {
                        let c = self.index_of(&s.conjugate(g as usize));
                        if !orbit.contains(&c) {
                            orbit.push(c);
                        }
                    }
                    k += 1;
                }
                orbit.sort_unstable();
                for &j in &orbit {
                    classes[j] = orbit.clone();
                }
            }
            classes
        })[i]
    }

    /// Characteristic subgroups of subgroup `i`, as ascending indices.
    pub fn characteristic(&self, i: usize) -> Result<Vec<usize>> {
        if let Some(hit) = self.characteristic.lock().expect("cache lock").get(&i) {
            return hit.clone();
        }
        let computed = {
            let a = self.subgroup(i);
            let below: Vec<Subgroup> = (0..=i).filter(|&j| self.leq(j, i)).map(|j| self.subgroup(j).clone()).collect();
            iso::characteristic_among(a, &below, &self.limits)
                .map(|subs| subs.iter().map(|s| self.index_of(s)).collect::<Vec<_>>())
        };
        self.characteristic
            .lock()
            .expect("cache lock")
            .insert(i, computed.clone());
        computed
    }

    pub fn subgroup_ref(&self, i: usize) -> SubgroupRef {
        SubgroupRef::of(self.subgroup(i))
    }
}

/// A group analysed against one partition. Everything is indexed like the
/// context's full family.
pub struct SigmaView<'a> {
    ctx: &'a GroupContext,
    sigma: PrimePartition,
    blocks: Vec<Block>,
    halls: Option<Vec<Vec<usize>>>,
    permutable: Vec<bool>,
    subnormal: OnceLock<Vec<bool>>,
    nilpotent: OnceLock<Vec<bool>>,
    fully: OnceLock<Vec<bool>>,
    quotient_views: OnceLock<Vec<SigmaView<'a>>>,
}

impl<'a> SigmaView<'a> {
    pub fn new(ctx: &'a GroupContext, sigma: &PrimePartition) -> SigmaView<'a> {
        let g = ctx.group().order();
        let blocks = sigma.blocks_of(g as u64);
        let halls: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                (0..ctx.len())
                    .filter(|&i| {
                        let h = ctx.order_of(i) as u64;
                        b.divides_only(h) && b.avoids(g as u64 / h)
                    })
                    .collect()
            })
            .collect();
        let full = halls.iter().all(|h| !h.is_empty());
        let permutable = if full {
            (0..ctx.len())
                .map(|a| halls.iter().flatten().all(|&h| ctx.permutes(a, h)))
                .collect()
        } else {
            Vec::new()
        };
        SigmaView {
            ctx,
            sigma: sigma.clone(),
            blocks,
            halls: full.then_some(halls),
            permutable,
            subnormal: OnceLock::new(),
            nilpotent: OnceLock::new(),
            fully: OnceLock::new(),
            quotient_views: OnceLock::new(),
        }
    }

    pub fn ctx(&self) -> &'a GroupContext {
        self.ctx
    }

    pub fn sigma(&self) -> &PrimePartition {
        &self.sigma
    }

    /// σ(G), ordered by smallest prime.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_sigma_full(&self) -> bool {
        self.halls.is_some()
    }

    /// Hall subgroups for block `b` of σ(G); empty when not σ-full.
    pub fn halls(&self, b: usize) -> &[usize] {
        self.halls.as_ref().map_or(&[], |h| &h[b])
    }

    pub fn is_permutable(&self, i: usize) -> bool {
        self.permutable.get(i).copied().unwrap_or(false)
    }

    pub fn permutable_indices(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&i| self.is_permutable(i)).collect()
    }

    pub fn permutable_family(&self) -> SubgroupFamily {
        self.family_of(&self.permutable_indices())
    }

    pub fn family_of(&self, indices: &[usize]) -> SubgroupFamily {
        SubgroupFamily::new(
            self.ctx.group(),
            indices.iter().map(|&i| self.ctx.subgroup(i).clone()).collect(),
        )
    }

    /// The σ-permutable subgroups as a lattice; an error names the first
    /// pair whose meet or join leaves the family.
    pub fn permutable_lattice(&self) -> Result<SigmaLattice> {
        SigmaLattice::build(&self.permutable_family())
    }

    /// Block index of a nontrivial σ-primary order, if any.
    pub fn block_of_order(&self, n: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.divides_only(n as u64))
    }

    /// `𝓛_{σᵢ}`: σ-permutable subgroups whose order is a σᵢ-number.
    pub fn block_members(&self, b: usize) -> Vec<usize> {
        let block = &self.blocks[b];
        (0..self.ctx.len())
            .filter(|&i| self.is_permutable(i) && block.divides_only(self.ctx.order_of(i) as u64))
            .collect()
    }

    pub fn is_subnormal(&self, i: usize) -> bool {
        self.subnormal
            .get_or_init(|| sigma::sigma_subnormal_flags(self.ctx.all(), &self.sigma))[i]
    }

    /// Subgroup `i` is σ-nilpotent as a group in its own right.
    pub fn is_nilpotent(&self, i: usize) -> bool {
        self.nilpotent.get_or_init(|| {
            (0..self.ctx.len())
                .map(|j| sigma::is_sigma_nilpotent_subgroup(self.ctx.subgroup(j), &self.sigma))
                .collect()
        })[i]
    }

    /// Some complete Hall set has every conjugate of every member permuting
    /// with subgroup `i`. Conjugates of a Hall σᵢ-subgroup are Hall
    /// σᵢ-subgroups, so the choice is made block by block.
    pub fn is_fully_permutable(&self, i: usize) -> bool {
        self.fully.get_or_init(|| {
            let Some(halls) = &self.halls else {
                return vec![false; self.ctx.len()];
            };
            (0..self.ctx.len())
                .map(|a| {
                    halls.iter().all(|block| {
                        block
                            .iter()
                            .any(|&h| self.ctx.conjugates(h).iter().all(|&c| self.ctx.permutes(a, c)))
                    })
                })
                .collect()
        })[i]
    }

    /// `O^{σᵢ}(G)` for block `b`, by generation from σᵢ′-elements.
    pub fn residual(&self, b: usize) -> usize {
        let top = self.ctx.subgroup(self.ctx.top());
        self.ctx.index_of(&sigma::sigma_residual(top, &self.blocks[b]))
    }

    /// `O_{σᵢ}(G)` for block `b`.
    pub fn core(&self, b: usize) -> usize {
        self.ctx.index_of(&sigma::sigma_core(self.ctx.all(), &self.blocks[b]))
    }

    /// `G^{𝔑_σ}`.
    pub fn nilpotent_residual(&self) -> Result<usize> {
        Ok(self
            .ctx
            .index_of(&sigma::sigma_nilpotent_residual(self.ctx.all(), &self.sigma)?))
    }

    /// Views of every quotient `G/R`, in the order of
    /// [`GroupContext::quotients`].
    pub fn quotient_views(&self) -> &[SigmaView<'a>] {
        self.quotient_views.get_or_init(|| {
            let ctx: &'a GroupContext = self.ctx;
            ctx.quotients()
                .iter()
                .map(|q| SigmaView::new(&q.ctx, &self.sigma))
                .collect()
        })
    }
}

//! Sections `H/K`, isomorphisms between them that commute with a set of
//! operators, and automorphism-based characteristic subgroups.
//!
//! Isomorphisms are found by backtracking over images of a generating set.
//! Each partial assignment is extended along the Cayley graph of the
//! subgroup it generates, so an inconsistent or non-injective prefix is
//! pruned as soon as it is made.

use std::ops::ControlFlow;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{Limits, Subgroup};
use crate::subgroups;

/// A finite group given by its Cayley table; element `0` is the identity.
#[derive(Debug, Clone)]
pub struct TableGroup {
    n: usize,
    mul: Vec<u32>,
    orders: Vec<u32>,
}

impl TableGroup {
    fn from_table(n: usize, mul: Vec<u32>) -> TableGroup {
        let mut orders = vec![1u32; n];
        for (i, o) in orders.iter_mut().enumerate() {
            let mut x = i;
            while x != 0 {
                x = mul[x * n + i] as usize;
                *o += 1;
            }
        }
        TableGroup { n, mul, orders }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.n)
    }

    fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::from_indices(self.n, [0]);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    stack.push(y);
                }
            }
        }
        set
    }

    /// Greedy generating set: scan elements in index order and keep each one
    /// not already generated.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElementSet::from_indices(self.n, [0]);
        for x in 0..self.n {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Whether the elements whose orders satisfy `in_block` form a subgroup
    /// of the full block-part order, for every block that meets the order.
    /// `block_of` labels the primes; elements of mixed type belong to none.
    pub fn has_normal_hall_decomposition(&self, block_of: impl Fn(u64) -> usize) -> bool {
        let mut labels: Vec<usize> = crate::primes::prime_divisors(self.n as u64)
            .into_iter()
            .map(&block_of)
            .collect();
        labels.sort_unstable();
        labels.dedup();
        labels.iter().all(|&label| {
            let part = crate::primes::part(self.n as u64, |p| block_of(p) == label) as usize;
            let members: Vec<usize> = (0..self.n)
                .filter(|&x| {
                    crate::primes::prime_divisors(self.orders[x] as u64)
                        .into_iter()
                        .all(|p| block_of(p) == label)
                })
                .collect();
            members.len() == part
                && members.iter().all(|&a| {
                    members
                        .iter()
                        .all(|&b| members.binary_search(&self.mul(a, b)).is_ok())
                })
        })
    }
}

/// A section `top/bottom` of a group: `bottom` normal in `top`.
#[derive(Debug, Clone)]
pub struct Section {
    top: Subgroup,
    bottom: Subgroup,
}

/// A section laid out as a table group over its cosets.
struct SectionTable {
    table: TableGroup,
    /// Coset id per element of the parent group; `u32::MAX` outside `top`.
    coset_of: Vec<u32>,
    reps: Vec<usize>,
}

impl Section {
    pub fn new(top: &Subgroup, bottom: &Subgroup) -> Result<Section> {
        if !bottom.is_subgroup_of(top) {
            return Err(Error::NotContained);
        }
        if !bottom.is_normal_in(top) {
            return Err(Error::NotNormal);
        }
        Ok(Section {
            top: top.clone(),
            bottom: bottom.clone(),
        })
    }

    /// The subgroup itself, as the section over the trivial subgroup.
    pub fn of_subgroup(top: &Subgroup) -> Section {
        Section {
            top: top.clone(),
            bottom: Subgroup::trivial(top.group()),
        }
    }

    pub fn top(&self) -> &Subgroup {
        &self.top
    }

    pub fn bottom(&self) -> &Subgroup {
        &self.bottom
    }

    pub fn order(&self) -> usize {
        self.top.order() / self.bottom.order()
    }

    fn layout(&self) -> SectionTable {
        let g = self.top.group();
        let mut coset_of = vec![u32::MAX; g.order()];
        let mut reps = Vec::new();
        for x in self.top.elements() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            for k in self.bottom.elements() {
                coset_of[g.mul(x, k)] = id;
            }
            reps.push(x);
        }
        let m = reps.len();
        let mut mul = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * m + j] = coset_of[g.mul(a, b)];
            }
        }
        SectionTable {
            table: TableGroup::from_table(m, mul),
            coset_of,
            reps,
        }
    }

    pub fn table(&self) -> TableGroup {
        self.layout().table
    }

    /// Conjugation action of each actor on the cosets.
    fn actions(&self, layout: &SectionTable, actors: &[usize]) -> Result<Vec<Vec<u32>>> {
        let g = self.top.group();
        actors
            .iter()
            .map(|&a| {
                if !self.top.is_normalized_by(a) || !self.bottom.is_normalized_by(a) {
                    return Err(Error::ActorDoesNotNormalize { actor: a });
                }
                Ok(layout
                    .reps
                    .iter()
                    .map(|&x| layout.coset_of[g.conj(x, a)])
                    .collect())
            })
            .collect()
    }
}

struct Search<'a> {
    src: &'a TableGroup,
    dst: &'a TableGroup,
    gens: Vec<usize>,
    /// Pairs of (action on src, action on dst), one per operator.
    actions: Vec<(Vec<u32>, Vec<u32>)>,
}

impl Search<'_> {
    /// Extends `images` (one per leading generator) to the subgroup those
    /// generators span; `None` if the assignment is not an injective
    /// homomorphism there.
    fn extend(&self, images: &[usize]) -> Option<Vec<u32>> {
        let mut map = vec![u32::MAX; self.src.n];
        let mut used = ElementSet::new(self.dst.n);
        map[0] = 0;
        used.insert(0);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for (&g, &img) in self.gens.iter().zip(images) {
                let y = self.src.mul(x, g);
                let v = self.dst.mul(map[x] as usize, img) as u32;
                if map[y] == u32::MAX {
                    if !used.insert(v as usize) {
                        return None;
                    }
                    map[y] = v;
                    stack.push(y);
                } else if map[y] != v {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn equivariant(&self, map: &[u32]) -> bool {
        self.actions.iter().all(|(on_src, on_dst)| {
            (0..self.src.n).all(|x| map[on_src[x] as usize] == on_dst[map[x] as usize])
        })
    }

    fn run(&self, visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>) {
        if self.src.n != self.dst.n {
            return;
        }
        let mut src_orders: Vec<u32> = self.src.orders.clone();
        let mut dst_orders: Vec<u32> = self.dst.orders.clone();
        src_orders.sort_unstable();
        dst_orders.sort_unstable();
        if src_orders != dst_orders {
            return;
        }
        let mut images = Vec::with_capacity(self.gens.len());
        let _ = self.descend(&mut images, visit);
    }

    fn descend(
        &self,
        images: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let depth = images.len();
        if depth == self.gens.len() {
            let map = self.extend(images).expect("checked on the way down");
            if self.equivariant(&map) {
                return visit(&map);
            }
            return ControlFlow::Continue(());
        }
        let want = self.src.element_order(self.gens[depth]);
        for candidate in 0..self.dst.n {
            if self.dst.element_order(candidate) != want {
                continue;
            }
            images.push(candidate);
            if self.extend(images).is_some() {
                self.descend(images, visit)?;
            }
            images.pop();
        }
        ControlFlow::Continue(())
    }
}

/// Visits every isomorphism `src → dst` commuting with the paired actions.
/// Maps are indexed by element of `src`.
pub fn for_each_isomorphism(
    src: &TableGroup,
    dst: &TableGroup,
    actions: Vec<(Vec<u32>, Vec<u32>)>,
    visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
) {
    let search = Search {
        src,
        dst,
        gens: src.generators(),
        actions,
    };
    search.run(visit);
}

/// Plain isomorphism test between two table groups.
pub fn are_isomorphic(a: &TableGroup, b: &TableGroup) -> bool {
    let mut found = false;
    for_each_isomorphism(a, b, Vec::new(), &mut |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

/// Searches for an isomorphism `f: first → second` with `(x^a)f = (xf)^a`
/// for every coset `x` of `first` and every actor `a`.
///
/// Equivariance is checked on the supplied actors only, so callers pass a
/// generating set of the acting group. The returned map sends coset `i` of
/// `first` (cosets numbered by least representative) to a coset of `second`.
pub fn find_equivariant_isomorphism(
    first: &Section,
    second: &Section,
    actors: &[usize],
    limits: &Limits,
) -> Result<Option<Vec<u32>>> {
    if first.order() != second.order() {
        return Err(Error::OrderMismatch {
            left: first.order(),
            right: second.order(),
        });
    }
    if first.order() > limits.max_section_order {
        return Err(Error::OrderCapExceeded {
            order: first.order(),
            cap: limits.max_section_order,
        });
    }
    let l1 = first.layout();
    let l2 = second.layout();
    let a1 = first.actions(&l1, actors)?;
    let a2 = second.actions(&l2, actors)?;
    let mut found = None;
    for_each_isomorphism(&l1.table, &l2.table, a1.into_iter().zip(a2).collect(), &mut |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    Ok(found)
}

/// Every isomorphism between two subgroups of the same group, as maps on
/// parent element indices, up to `cap` of them.
pub fn subgroup_isomorphisms(a: &Subgroup, b: &Subgroup, cap: usize) -> Vec<Vec<(usize, usize)>> {
    let sa = Section::of_subgroup(a);
    let sb = Section::of_subgroup(b);
    let (la, lb) = (sa.layout(), sb.layout());
    let mut out = Vec::new();
    for_each_isomorphism(&la.table, &lb.table, Vec::new(), &mut |map| {
        out.push(
            map.iter()
                .enumerate()
                .map(|(i, &j)| (la.reps[i], lb.reps[j as usize]))
                .collect(),
        );
        if out.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Members of `candidates` (subgroups of `a`) invariant under every
/// automorphism of `a`.
pub fn characteristic_among(
    a: &Subgroup,
    candidates: &[Subgroup],
    limits: &Limits,
) -> Result<Vec<Subgroup>> {
    if a.order() > limits.max_aut_order {
        return Err(Error::OrderCapExceeded {
            order: a.order(),
            cap: limits.max_aut_order,
        });
    }
    let section = Section::of_subgroup(a);
    let layout = section.layout();
    let mut alive: Vec<bool> = candidates.iter().map(|c| c.is_subgroup_of(a)).collect();
    for_each_isomorphism(&layout.table, &layout.table, Vec::new(), &mut |map| {
        for (k, c) in candidates.iter().enumerate() {
            if alive[k] {
                alive[k] = c.elements().all(|x| {
                    let image = layout.reps[map[layout.coset_of[x] as usize] as usize];
                    c.contains(image)
                });
            }
        }
        if alive.iter().any(|&x| x) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok(candidates
        .iter()
        .zip(alive)
        .filter(|&(_c, keep)| keep).map(|(c, _keep)| c.clone())
        .collect())
}

/// All subgroups of `a` invariant under every automorphism of `a`.
pub fn characteristic_subgroups(a: &Subgroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    if a.order() > limits.max_aut_order {
        return Err(Error::OrderCapExceeded {
            order: a.order(),
            cap: limits.max_aut_order,
        });
    }
    let family = subgroups::subgroups_of(a, limits)?;
    characteristic_among(a, family.members(), limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn grp(degree: usize, gens: &[&str]) -> Arc<Group> {
        let gens = gens
            .iter()
            .map(|g| Permutation::parse_cycles(g, degree).unwrap())
            .collect();
        Arc::new(Group::generate("t", degree, gens, &Limits::default()).unwrap())
    }

    fn sub(g: &Arc<Group>, gens: &[&str]) -> Subgroup {
        Subgroup::generated(
            g,
            gens.iter()
                .map(|s| g.index_of(&Permutation::parse_cycles(s, g.degree()).unwrap()).unwrap()),
        )
    }

    #[test]
    fn identity_section_maps_to_itself() {
        let s4 = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let d8 = sub(&s4, &["(1 2 3 4)", "(1 3)"]);
        let v4 = sub(&s4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let s = Section::new(&d8, &v4).unwrap();
        let actors: Vec<usize> = d8.generators().iter().map(|&g| g as usize).collect();
        let f = find_equivariant_isomorphism(&s, &s, &actors, &Limits::default())
            .unwrap()
            .unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn klein_atoms_are_isomorphic_under_trivial_action() {
        let v = grp(4, &["(1 2)", "(3 4)"]);
        let h = Section::of_subgroup(&sub(&v, &["(1 2)"]));
        let l = Section::of_subgroup(&sub(&v, &["(3 4)"]));
        assert!(find_equivariant_isomorphism(&h, &l, &[], &Limits::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn order_mismatch_and_non_normalizing_actor() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let c2 = Section::of_subgroup(&sub(&s3, &["(1 2)"]));
        let c3 = Section::of_subgroup(&sub(&s3, &["(1 2 3)"]));
        assert_eq!(
            find_equivariant_isomorphism(&c2, &c3, &[], &Limits::default()),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
        let c2b = Section::of_subgroup(&sub(&s3, &["(1 3)"]));
        let actor = s3.index_of(&Permutation::parse_cycles("(1 2 3)", 3).unwrap()).unwrap();
        assert!(matches!(
            find_equivariant_isomorphism(&c2, &c2b, &[actor], &Limits::default()),
            Err(Error::ActorDoesNotNormalize { .. })
        ));
    }

    #[test]
    fn equivariance_separates_conjugation_classes() {
        // C3 x C3 with the coordinate swap: the swap fixes the diagonal and
        // exchanges the two factors.
        let g = grp(6, &["(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"]);
        let a = sub(&g, &["(1 2 3)"]);
        let b = sub(&g, &["(4 5 6)"]);
        let diag = sub(&g, &["(1 2 3)(4 5 6)"]);
        let base = sub(&g, &["(1 2 3)", "(4 5 6)"]);
        let swap = g.index_of(&Permutation::parse_cycles("(1 4)(2 5)(3 6)", 6).unwrap()).unwrap();
        let s = |x: &Subgroup| Section::new(x, &Subgroup::trivial(&g)).unwrap();
        let lim = Limits::default();
        // the factors are not invariant under the swap
        assert!(find_equivariant_isomorphism(&s(&a), &s(&b), &[swap], &lim).is_err());
        // inside the base group both are fine without operators
        assert!(find_equivariant_isomorphism(&s(&a), &s(&diag), &[], &lim).unwrap().is_some());
        let base_gens: Vec<usize> = base.generators().iter().map(|&x| x as usize).collect();
        assert!(find_equivariant_isomorphism(&s(&a), &s(&diag), &base_gens, &lim)
            .unwrap()
            .is_some());
    }

    #[test]
    fn characteristic_examples() {
        let lim = Limits::default();
        let v = grp(4, &["(1 2)", "(3 4)"]);
        let chars = characteristic_subgroups(&Subgroup::whole(&v), &lim).unwrap();
        assert_eq!(chars.iter().map(|c| c.order()).collect::<Vec<_>>(), vec![1, 4]);

        let c12 = grp(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]);
        let chars = characteristic_subgroups(&Subgroup::whole(&c12), &lim).unwrap();
        assert_eq!(chars.len(), 6);

        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let chars = characteristic_subgroups(&Subgroup::whole(&s3), &lim).unwrap();
        assert_eq!(chars.iter().map(|c| c.order()).collect::<Vec<_>>(), vec![1, 3, 6]);

        let small = Limits { max_aut_order: 4, ..lim };
        assert!(characteristic_subgroups(&Subgroup::whole(&s3), &small).is_err());
    }

    #[test]
    fn automorphism_counts() {
        // |Aut(V4)| = 6, |Aut(S3)| = 6, |Aut(C8)| = 4
        let count = |g: &Arc<Group>| subgroup_isomorphisms(&Subgroup::whole(g), &Subgroup::whole(g), 10_000).len();
        assert_eq!(count(&grp(4, &["(1 2)", "(3 4)"])), 6);
        assert_eq!(count(&grp(3, &["(1 2)", "(1 2 3)"])), 6);
        assert_eq!(count(&grp(8, &["(1 2 3 4 5 6 7 8)"])), 4);
        assert_eq!(count(&grp(4, &["(1 2 3 4)", "(1 2)"])), 24);
    }
}

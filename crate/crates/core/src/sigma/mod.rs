//! σ-specific group theory over a full subgroup enumeration.
//!
//! Functions taking a [`SubgroupFamily`] treat its largest member as the
//! ambient group `G` and assume the family lists every subgroup of `G`.

mod partition;

pub use partition::{Block, LeftoverRule, PrimePartition};

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::iso::{Section, TableGroup};
use crate::primes::prime_divisors;
use crate::subgroups::SubgroupFamily;

pub fn is_sigma_number(n: u64, block: &Block) -> bool {
    block.divides_only(n)
}

/// σ(G) for a group of the given order.
pub fn sigma_of_group(order: usize, sigma: &PrimePartition) -> Vec<Block> {
    sigma.blocks_of(order as u64)
}

/// σ-primary: the order is a σᵢ-number for a single block (the trivial
/// group included).
pub fn is_sigma_primary(order: usize, sigma: &PrimePartition) -> bool {
    sigma.blocks_of(order as u64).len() <= 1
}

/// Hall σᵢ-subgroups of the ambient group: σᵢ-order and σᵢ′-index.
pub fn hall_subgroups(family: &SubgroupFamily, block: &Block) -> Vec<Subgroup> {
    let g = family.top().order();
    family
        .members()
        .iter()
        .filter(|h| block.divides_only(h.order() as u64) && block.avoids((g / h.order()) as u64))
        .cloned()
        .collect()
}

/// One Hall σᵢ-subgroup for every block of σ(G).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallSet {
    pub members: Vec<(Block, Subgroup)>,
}

pub fn complete_hall_sets(family: &SubgroupFamily, sigma: &PrimePartition) -> Vec<HallSet> {
    let per_block: Vec<(Block, Vec<Subgroup>)> = sigma_of_group(family.top().order(), sigma)
        .into_iter()
        .map(|b| {
            let halls = hall_subgroups(family, &b);
            (b, halls)
        })
        .collect();
    let mut out = vec![HallSet { members: Vec::new() }];
    for (block, halls) in per_block {
        out = out
            .into_iter()
            .flat_map(|set| {
                let block = &block;
                halls.iter().map(move |h| {
                    let mut members = set.members.clone();
                    members.push((block.clone(), h.clone()));
                    HallSet { members }
                })
            })
            .collect();
    }
    out
}

/// σ-full: a Hall σᵢ-subgroup exists for every block of σ(G).
pub fn is_sigma_full(family: &SubgroupFamily, sigma: &PrimePartition) -> bool {
    sigma_of_group(family.top().order(), sigma)
        .iter()
        .all(|b| !hall_subgroups(family, b).is_empty())
}

/// Hall subgroups of every block of σ(G); `NotSigmaFull` if one is missing.
pub fn hall_system(family: &SubgroupFamily, sigma: &PrimePartition) -> Result<Vec<(Block, Vec<Subgroup>)>> {
    sigma_of_group(family.top().order(), sigma)
        .into_iter()
        .map(|b| {
            let halls = hall_subgroups(family, &b);
            if halls.is_empty() {
                Err(Error::NotSigmaFull)
            } else {
                Ok((b, halls))
            }
        })
        .collect()
}

/// `A` permutes with every Hall σᵢ-subgroup of `G` for every block.
pub fn is_sigma_permutable(family: &SubgroupFamily, a: &Subgroup, sigma: &PrimePartition) -> Result<bool> {
    let system = hall_system(family, sigma)?;
    permutes_with_all(a, &system)
}

fn permutes_with_all(a: &Subgroup, system: &[(Block, Vec<Subgroup>)]) -> Result<bool> {
    for (_, halls) in system {
        for h in halls {
            if !a.permutes(h)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn sigma_permutable_family(family: &SubgroupFamily, sigma: &PrimePartition) -> Result<SubgroupFamily> {
    let system = hall_system(family, sigma)?;
    let mut keep = Vec::new();
    for a in family.members() {
        if permutes_with_all(a, &system)? {
            keep.push(a.clone());
        }
    }
    Ok(SubgroupFamily::new(family.group(), keep))
}

/// σ-subnormality of every member, by reachability upward through the
/// containment order. A step `X ≤ Y` is allowed when `X ⊴ Y` or
/// `Y / core_Y(X)` is σ-primary.
pub fn sigma_subnormal_flags(family: &SubgroupFamily, sigma: &PrimePartition) -> Vec<bool> {
    let members = family.members();
    let n = members.len();
    let mut flags = vec![false; n];
    if n == 0 {
        return flags;
    }
    flags[n - 1] = true;
    for x in (0..n - 1).rev() {
        let lower = &members[x];
        flags[x] = (x + 1..n).any(|y| {
            let upper = &members[y];
            flags[y]
                && upper.order() > lower.order()
                && lower.is_subgroup_of(upper)
                && (lower.is_normal_in(upper) || {
                    let core = lower.core_in(upper).expect("contained");
                    is_sigma_primary(upper.order() / core.order(), sigma)
                })
        });
    }
    flags
}

pub fn is_sigma_subnormal(family: &SubgroupFamily, a: &Subgroup, sigma: &PrimePartition) -> bool {
    let flags = sigma_subnormal_flags(family, sigma);
    family.position(a).is_some_and(|i| flags[i])
}

/// σ-nilpotency of the ambient group: `O_{σᵢ}(G)` is a Hall σᵢ-subgroup for
/// every block of σ(G).
pub fn is_sigma_nilpotent(family: &SubgroupFamily, sigma: &PrimePartition) -> bool {
    let g = family.top().order() as u64;
    sigma_of_group(g as usize, sigma).iter().all(|b| {
        let core = sigma_core(family, b);
        core.order() as u64 == crate::primes::part(g, |p| b.contains(p))
    })
}

/// σ-nilpotency of a table group, read off its elements: for every block,
/// the σᵢ-elements form a subgroup of the full σᵢ-part order.
pub fn is_sigma_nilpotent_table(t: &TableGroup, sigma: &PrimePartition) -> bool {
    let blocks = sigma.blocks_of(t.order() as u64);
    t.has_normal_hall_decomposition(|p| {
        blocks
            .iter()
            .position(|b| b.contains(p))
            .expect("prime of the order lies in a block of σ(G)")
    })
}

/// σ-nilpotency of a subgroup regarded as a group in its own right.
pub fn is_sigma_nilpotent_subgroup(a: &Subgroup, sigma: &PrimePartition) -> bool {
    is_sigma_nilpotent_table(&Section::of_subgroup(a).table(), sigma)
}

/// `O_{σᵢ}(G)`: the join of all normal σᵢ-subgroups.
pub fn sigma_core(family: &SubgroupFamily, block: &Block) -> Subgroup {
    let top = family.top();
    let core = family
        .members()
        .iter()
        .filter(|s| block.divides_only(s.order() as u64) && s.is_normal_in(top))
        .fold(Subgroup::trivial(family.group()), |acc, s| acc.join(s).expect("same parent"));
    debug_assert!(block.divides_only(core.order() as u64));
    core
}

/// `O^{σᵢ}(A)`: generated by the elements of `A` whose order is a
/// σᵢ′-number.
pub fn sigma_residual(a: &Subgroup, block: &Block) -> Subgroup {
    let g = a.group();
    Subgroup::generated(
        g,
        a.elements()
            .filter(|&x| block.avoids(g.element_order(x) as u64))
            .collect::<Vec<_>>(),
    )
}

/// `O^{σᵢ}(G)` as the intersection of all normal `N` with `|G/N|` a
/// σᵢ-number.
pub fn sigma_residual_via_normals(family: &SubgroupFamily, block: &Block) -> Subgroup {
    let top = family.top();
    let g = top.order();
    let mut acc = top.members().clone();
    for n in family.members() {
        if n.is_normal_in(top) && block.divides_only((g / n.order()) as u64) {
            acc = acc.intersection(n.members());
        }
    }
    Subgroup::generated(family.group(), acc.iter().collect::<Vec<_>>())
}

/// `G^{𝔑_σ}`: the intersection of all normal `N` with σ-nilpotent `G/N`.
pub fn sigma_nilpotent_residual(family: &SubgroupFamily, sigma: &PrimePartition) -> Result<Subgroup> {
    let top = family.top();
    let mut acc = top.members().clone();
    for n in family.members() {
        if n.is_normal_in(top) {
            let quotient = Section::new(top, n)?.table();
            if is_sigma_nilpotent_table(&quotient, sigma) {
                acc = acc.intersection(n.members());
            }
        }
    }
    Ok(Subgroup::generated(family.group(), acc.iter().collect::<Vec<_>>()))
}

/// Some complete Hall σ-set has every member's conjugates permuting with `A`.
/// Conjugates of a Hall σᵢ-subgroup are Hall σᵢ-subgroups, so the choice
/// splits per block.
pub fn is_fully_permutable(family: &SubgroupFamily, a: &Subgroup, sigma: &PrimePartition) -> Result<bool> {
    let system = hall_system(family, sigma)?;
    let top = family.top();
    for (_, halls) in &system {
        let mut some = false;
        for h in halls {
            let mut all = true;
            for x in top.elements() {
                if !a.permutes(&h.conjugate(x))? {
                    all = false;
                    break;
                }
            }
            if all {
                some = true;
                break;
            }
        }
        if !some {
            return Ok(false);
        }
    }
    Ok(true)
}

/// π(n) as a convenience for reports.
pub fn primes_of(n: usize) -> Vec<u64> {
    prime_divisors(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, Limits};
    use crate::perm::Permutation;
    use crate::subgroups::all_subgroups;
    use std::sync::Arc;

    fn family(degree: usize, gens: &[&str]) -> SubgroupFamily {
        let gens = gens
            .iter()
            .map(|g| Permutation::parse_cycles(g, degree).unwrap())
            .collect();
        let g = Arc::new(Group::generate("t", degree, gens, &Limits::default()).unwrap());
        all_subgroups(&g, &Limits::default()).unwrap()
    }

    fn sub(f: &SubgroupFamily, gens: &[&str]) -> Subgroup {
        let g = f.group();
        Subgroup::generated(
            g,
            gens.iter()
                .map(|s| g.index_of(&Permutation::parse_cycles(s, g.degree()).unwrap()).unwrap()),
        )
    }

    fn p(text: &str) -> PrimePartition {
        text.parse().unwrap()
    }

    fn s3() -> SubgroupFamily {
        family(3, &["(1 2)", "(1 2 3)"])
    }
    fn s4() -> SubgroupFamily {
        family(4, &["(1 2 3 4)", "(1 2)"])
    }
    fn a4() -> SubgroupFamily {
        family(4, &["(1 2 3)", "(1 2)(3 4)"])
    }
    fn a5() -> SubgroupFamily {
        family(5, &["(1 2 3 4 5)", "(1 2 3)"])
    }
    fn q8() -> SubgroupFamily {
        family(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"])
    }
    fn klein() -> SubgroupFamily {
        family(4, &["(1 2)", "(3 4)"])
    }

    fn orders(v: &[Subgroup]) -> Vec<usize> {
        v.iter().map(|s| s.order()).collect()
    }

    #[test]
    fn sigma_of_s4() {
        assert_eq!(
            sigma_of_group(24, &PrimePartition::sigma0()),
            vec![Block::Primes(vec![2]), Block::Primes(vec![3])]
        );
        assert!(is_sigma_number(12, &Block::Primes(vec![2, 3])));
        assert!(is_sigma_number(1, &Block::Primes(vec![5])));
    }

    #[test]
    fn hall_examples() {
        assert_eq!(orders(&hall_subgroups(&s3(), &Block::Primes(vec![2]))), vec![2, 2, 2]);
        assert_eq!(orders(&hall_subgroups(&a5(), &Block::Primes(vec![2, 3]))), vec![12; 5]);
        assert!(hall_subgroups(&a5(), &Block::Primes(vec![2, 5])).is_empty());
    }

    #[test]
    fn complete_hall_set_examples() {
        let sets = complete_hall_sets(&s4(), &PrimePartition::sigma0());
        assert_eq!(sets.len(), 12);
        assert!(is_sigma_full(&s4(), &PrimePartition::sigma0()));
        assert!(!is_sigma_full(&a5(), &p("blocks:[3];rest=one_block")));
        let trivial = family(1, &[]);
        let sets = complete_hall_sets(&trivial, &PrimePartition::sigma0());
        assert_eq!(sets, vec![HallSet { members: vec![] }]);
        assert!(is_sigma_full(&trivial, &PrimePartition::sigma0()));
    }

    #[test]
    fn permutability_examples() {
        let f = s3();
        let s0 = PrimePartition::sigma0();
        assert!(is_sigma_permutable(&f, &sub(&f, &["(1 2 3)"]), &s0).unwrap());
        assert!(!is_sigma_permutable(&f, &sub(&f, &["(1 2)"]), &s0).unwrap());
        let g = a5();
        assert_eq!(
            is_sigma_permutable(&g, g.top(), &p("blocks:[3];rest=one_block")),
            Err(Error::NotSigmaFull)
        );
    }

    #[test]
    fn permutable_family_examples() {
        let s0 = PrimePartition::sigma0();
        assert_eq!(orders(sigma_permutable_family(&s3(), &s0).unwrap().members()), vec![1, 3, 6]);
        let q = q8();
        assert_eq!(sigma_permutable_family(&q, &s0).unwrap().len(), q.len());
        assert_eq!(orders(sigma_permutable_family(&a5(), &s0).unwrap().members()), vec![1, 60]);
    }

    #[test]
    fn subnormal_examples() {
        let s0 = PrimePartition::sigma0();
        let f = a4();
        let c3 = sub(&f, &["(1 2 3)"]);
        assert!(!is_sigma_subnormal(&f, &c3, &s0));
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(is_sigma_subnormal(&f, &v4, &s0));
        let f = s4();
        let d8 = sub(&f, &["(1 2 3 4)", "(1 3)"]);
        assert!(!is_sigma_subnormal(&f, &d8, &s0));
        // with {2,3} in one block every subgroup of S4 is σ-subnormal
        assert!(is_sigma_subnormal(&f, &d8, &p("pi:2,3")));
    }

    #[test]
    fn nilpotency_examples() {
        let s0 = PrimePartition::sigma0();
        assert!(!is_sigma_nilpotent(&s3(), &s0));
        assert!(is_sigma_nilpotent(&s3(), &p("blocks:[2,3];rest=one_block")));
        let c6 = family(6, &["(1 2 3 4 5 6)"]);
        assert!(is_sigma_nilpotent(&c6, &s0));
        assert!(is_sigma_nilpotent(&q8(), &s0));
        assert!(is_sigma_primary(1, &s0));
        assert!(is_sigma_primary(8, &s0));
        assert!(!is_sigma_primary(6, &s0));
        for f in [s3(), s4(), a4(), q8(), klein(), c6] {
            for sigma in [s0.clone(), p("pi:2"), p("pi:3")] {
                assert_eq!(
                    is_sigma_nilpotent(&f, &sigma),
                    is_sigma_nilpotent_subgroup(f.top(), &sigma)
                );
            }
        }
    }

    #[test]
    fn cores_and_residuals() {
        let two = Block::Primes(vec![2]);
        let three = Block::Primes(vec![3]);
        assert_eq!(sigma_core(&s4(), &two).order(), 4);
        assert_eq!(sigma_core(&s3(), &three).order(), 3);
        assert_eq!(sigma_core(&s3(), &two).order(), 1);

        let f = s3();
        assert_eq!(sigma_residual(f.top(), &two).order(), 3);
        assert_eq!(sigma_residual_via_normals(&f, &two).order(), 3);
        assert_eq!(sigma_residual(f.top(), &three).order(), 6);
        assert_eq!(sigma_residual_via_normals(&f, &three).order(), 6);
        let k = klein();
        assert_eq!(sigma_residual(k.top(), &two).order(), 1);
        assert_eq!(sigma_residual_via_normals(&k, &two).order(), 1);
    }

    #[test]
    fn nilpotent_residual_examples() {
        let s0 = PrimePartition::sigma0();
        assert_eq!(sigma_nilpotent_residual(&s3(), &s0).unwrap().order(), 3);
        assert_eq!(sigma_nilpotent_residual(&klein(), &s0).unwrap().order(), 1);
        assert_eq!(sigma_nilpotent_residual(&s4(), &s0).unwrap().order(), 12);
    }

    #[test]
    fn full_permutability_examples() {
        let s0 = PrimePartition::sigma0();
        let f = s3();
        assert!(is_fully_permutable(&f, &sub(&f, &["(1 2 3)"]), &s0).unwrap());
        assert!(!is_fully_permutable(&f, &sub(&f, &["(1 2)"]), &s0).unwrap());
        let q = q8();
        for a in q.members() {
            assert!(is_fully_permutable(&q, a, &s0).unwrap());
        }
    }
}

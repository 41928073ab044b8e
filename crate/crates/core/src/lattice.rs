//! Finite lattices of subgroups: meet is intersection and join is the
//! generated subgroup, both required to stay inside the family.
//!
//! Every check that can fail returns the lexicographically smallest
//! offending tuple of member indices.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::subgroups::SubgroupFamily;

#[derive(Debug, Clone)]
pub struct SigmaLattice {
    members: Vec<Subgroup>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

/// A triple of member indices witnessing a failed identity.
pub type Triple = (usize, usize, usize);

impl SigmaLattice {
    /// Builds meet and join tables, failing on the first pair (in index
    /// order, meet before join) whose meet or join leaves the family.
    pub fn build(family: &SubgroupFamily) -> Result<SigmaLattice> {
        let n = family.len();
        if n == 0 {
            return Err(Error::EmptyFamily);
        }
        let members = family.members().to_vec();
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let (x, y) = (&members[a], &members[b]);
                let m = if x.is_subgroup_of(y) {
                    a
                } else if y.is_subgroup_of(x) {
                    b
                } else {
                    family
                        .position_of_set(&x.members().intersection(y.members()))
                        .ok_or(Error::NotMeetClosed { a, b })?
                };
                let j = if x.is_subgroup_of(y) {
                    b
                } else if y.is_subgroup_of(x) {
                    a
                } else {
                    family
                        .position(&x.join(y)?)
                        .ok_or(Error::NotJoinClosed { a, b })?
                };
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x] as usize);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x] as usize);
        Ok(SigmaLattice {
            members,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Subgroup {
        &self.members[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn position(&self, s: &Subgroup) -> Option<usize> {
        self.members.iter().position(|m| m == s)
    }

    pub fn position_of_set(&self, set: &ElementSet) -> Option<usize> {
        self.members.iter().position(|m| m.members() == set)
    }

    /// `b` covers `a`: `a < b` with nothing strictly between.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        a != b
            && self.leq(a, b)
            && !(0..self.len()).any(|z| z != a && z != b && self.leq(a, z) && self.leq(z, b))
    }
}

/// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for all triples.
pub fn is_distributive(l: &SigmaLattice) -> std::result::Result<(), Triple> {
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)) {
                    return Err((a, b, c));
                }
            }
        }
    }
    Ok(())
}

/// `a ≤ c ⟹ a ∨ (b ∧ c) = (a ∨ b) ∧ c` for all triples.
pub fn is_modular(l: &SigmaLattice) -> std::result::Result<(), Triple> {
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if l.leq(a, c) && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c) {
                    return Err((a, b, c));
                }
            }
        }
    }
    Ok(())
}

pub fn is_meet_distributive_element(l: &SigmaLattice, a: usize) -> Result<bool> {
    if a >= l.len() {
        return Err(Error::ElementNotInLattice);
    }
    let n = l.len();
    Ok((0..n).all(|b| (0..n).all(|c| l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))))
}

/// Three distinct elements with equal pairwise joins and equal pairwise
/// meets.
pub fn find_diamond(l: &SigmaLattice) -> Option<Triple> {
    let n = l.len();
    for a in 0..n {
        for b in a + 1..n {
            let (j, m) = (l.join(a, b), l.meet(a, b));
            for c in b + 1..n {
                if l.join(a, c) == j && l.join(b, c) == j && l.meet(a, c) == m && l.meet(b, c) == m {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// `a < c` and `b` with `a ∨ b = c ∨ b` and `a ∧ b = c ∧ b`: the pentagon
/// sublattice `{a ∧ b, a, c, b, a ∨ b}`.
pub fn find_pentagon(l: &SigmaLattice) -> Option<Triple> {
    let n = l.len();
    for a in 0..n {
        for c in 0..n {
            if a == c || !l.leq(a, c) {
                continue;
            }
            for b in 0..n {
                if l.join(a, b) == l.join(c, b) && l.meet(a, b) == l.meet(c, b) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// The sublattice `{x : a ≤ x ≤ b}`.
pub fn interval(l: &SigmaLattice, a: usize, b: usize) -> Result<SigmaLattice> {
    if a >= l.len() || b >= l.len() {
        return Err(Error::ElementNotInLattice);
    }
    if !l.leq(a, b) {
        return Err(Error::NotComparable { a, b });
    }
    let keep: Vec<usize> = (0..l.len()).filter(|&x| l.leq(a, x) && l.leq(x, b)).collect();
    let pos = |x: usize| keep.binary_search(&x).expect("interval is a sublattice") as u32;
    let m = keep.len();
    let mut meet = vec![0u32; m * m];
    let mut join = vec![0u32; m * m];
    for (i, &x) in keep.iter().enumerate() {
        for (j, &y) in keep.iter().enumerate() {
            meet[i * m + j] = pos(l.meet(x, y));
            join[i * m + j] = pos(l.join(x, y));
        }
    }
    Ok(SigmaLattice {
        members: keep.iter().map(|&x| l.members[x].clone()).collect(),
        meet,
        join,
        bottom: pos(a) as usize,
        top: pos(b) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, Limits};
    use crate::perm::Permutation;
    use crate::subgroups::{all_subgroups, normal_subgroups};
    use std::sync::Arc;

    fn grp(degree: usize, gens: &[&str]) -> Arc<Group> {
        let gens = gens
            .iter()
            .map(|g| Permutation::parse_cycles(g, degree).unwrap())
            .collect();
        Arc::new(Group::generate("t", degree, gens, &Limits::default()).unwrap())
    }

    fn full(g: &Arc<Group>) -> SigmaLattice {
        SigmaLattice::build(&all_subgroups(g, &Limits::default()).unwrap()).unwrap()
    }

    /// Brute-force triple-law check on the member sets themselves, not the
    /// tables: meet is set intersection and join the smallest member
    /// containing both.
    fn distributive_by_sets(members: &[Subgroup]) -> bool {
        let meet = |a: &Subgroup, b: &Subgroup| {
            let set = a.members().intersection(b.members());
            members.iter().find(|m| *m.members() == set).unwrap().clone()
        };
        let join = |a: &Subgroup, b: &Subgroup| {
            members
                .iter()
                .filter(|m| a.is_subgroup_of(m) && b.is_subgroup_of(m))
                .min_by_key(|m| m.order())
                .unwrap()
                .clone()
        };
        members.iter().all(|a| {
            members.iter().all(|b| {
                members
                    .iter()
                    .all(|c| meet(a, &join(b, c)) == join(&meet(a, b), &meet(a, c)))
            })
        })
    }

    #[test]
    fn s3_normal_chain() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let fam = all_subgroups(&s3, &Limits::default()).unwrap();
        let chain = SigmaLattice::build(&normal_subgroups(&fam)).unwrap();
        assert_eq!(chain.len(), 3);
        assert!(is_distributive(&chain).is_ok());
        assert!(is_modular(&chain).is_ok());
        assert!(find_diamond(&chain).is_none());
        assert_eq!((chain.bottom(), chain.top()), (0, 2));
    }

    #[test]
    fn not_join_closed_family() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let fam = all_subgroups(&s3, &Limits::default()).unwrap();
        let pick = fam.filter(|s| s.order() == 1 || s.order() == 2 && !s.contains(s3.index_of(&Permutation::parse_cycles("(2 3)", 3).unwrap()).unwrap()));
        assert_eq!(pick.len(), 3);
        assert!(matches!(SigmaLattice::build(&pick), Err(Error::NotJoinClosed { a: 1, b: 2 })));
    }

    #[test]
    fn klein_four_is_a_diamond() {
        let v = grp(4, &["(1 2)", "(3 4)"]);
        let l = full(&v);
        assert!(!distributive_by_sets(l.members()));
        assert_eq!(is_distributive(&l).unwrap_err(), (1, 2, 3));
        assert!(is_modular(&l).is_ok());
        assert_eq!(find_diamond(&l), Some((1, 2, 3)));
        assert!(find_pentagon(&l).is_none());
        assert!(is_meet_distributive_element(&l, l.bottom()).unwrap());
        assert!(is_meet_distributive_element(&l, l.top()).unwrap());
        assert!(!is_meet_distributive_element(&l, 1).unwrap());
        assert_eq!(is_meet_distributive_element(&l, 9), Err(Error::ElementNotInLattice));
    }

    #[test]
    fn s3_is_modular_not_distributive() {
        let l = full(&grp(3, &["(1 2)", "(1 2 3)"]));
        assert!(!distributive_by_sets(l.members()));
        assert!(is_distributive(&l).is_err());
        assert!(is_modular(&l).is_ok());
        let i = interval(&l, 4, 5).unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(interval(&l, 0, 5).unwrap().len(), l.len());
        assert_eq!(interval(&l, 3, 3).unwrap().len(), 1);
        assert!(matches!(interval(&l, 1, 2), Err(Error::NotComparable { .. })));
    }

    #[test]
    fn cyclic_twelve_is_distributive() {
        let l = full(&grp(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]));
        assert_eq!(l.len(), 6);
        assert!(distributive_by_sets(l.members()));
        assert!(is_distributive(&l).is_ok());
    }

    #[test]
    fn quaternion_diamond_is_the_three_cyclic_fours() {
        let q8 = grp(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]);
        let l = full(&q8);
        let (a, b, c) = find_diamond(&l).unwrap();
        for x in [a, b, c] {
            assert_eq!(l.member(x).order(), 4);
        }
        assert_eq!(l.member(l.meet(a, b)).order(), 2);
        assert_eq!(l.member(l.join(a, b)).order(), 8);
    }

    #[test]
    fn s4_is_not_modular() {
        let l = full(&grp(4, &["(1 2 3 4)", "(1 2)"]));
        assert!(is_modular(&l).is_err());
        assert!(find_pentagon(&l).is_some());
    }
}

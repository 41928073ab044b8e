//! Finite permutation groups with a fully enumerated element table, and
//! subgroups of such a group as membership bit-vectors over that table.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Desk-scale caps. Exceeding any of them is an error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroups: usize,
    /// Largest group whose automorphisms are searched.
    pub max_aut_order: usize,
    /// Largest section handed to the isomorphism search.
    pub max_section_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 2000,
            max_subgroups: 20000,
            max_aut_order: 128,
            max_section_order: 128,
        }
    }
}

/// A finite permutation group. Elements are sorted by image array, so the
/// identity is always element `0` and equal groups have equal tables.
pub struct Group {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<u32>,
    elements: Vec<Permutation>,
    index: HashMap<Vec<u32>, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl Group {
    /// Closure of `generators` under composition.
    pub fn generate(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        limits: &Limits,
    ) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = VecDeque::from([identity]);
        let mut elements = Vec::new();
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    if seen.len() > limits.max_order {
                        return Err(Error::OrderCapExceeded {
                            order: seen.len(),
                            cap: limits.max_order,
                        });
                    }
                    queue.push_back(y);
                }
            }
            elements.push(x);
        }
        Ok(Self::from_elements(name, degree, generators, elements))
    }

    /// Builds the tables for an element list already known to be closed.
    pub(crate) fn from_elements(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Group {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let index: HashMap<Vec<u32>, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images().to_vec(), i as u32))
            .collect();
        let mut mul = vec![0u32; n * n];
        let mut scratch = vec![0u32; degree];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                for (k, s) in scratch.iter_mut().enumerate() {
                    *s = b.images()[a.images()[k] as usize];
                }
                mul[i * n + j] = index[scratch.as_slice()];
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        let mut orders = vec![1u32; n];
        for (i, o) in orders.iter_mut().enumerate() {
            let mut x = i;
            while x != 0 {
                x = mul[x * n + i] as usize;
                *o += 1;
            }
        }
        let generator_indices = generators
            .iter()
            .map(|g| index[g.images()])
            .filter(|&g| g != 0)
            .collect();
        Group {
            name: name.into(),
            degree,
            generators,
            generator_indices,
            elements,
            index,
            mul,
            inv,
            orders,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Non-identity generators as element indices.
    pub fn generator_indices(&self) -> &[u32] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p.images()).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a as usize, b as usize) == self.mul(b as usize, a as usize)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order())
    }

    /// Subgroup generated by `gens` as a bit-vector, via breadth-first right
    /// multiplication from the identity.
    pub(crate) fn closure(&self, gens: &[u32]) -> ElementSet {
        let n = self.order();
        let mut set = ElementSet::new(n);
        set.insert(0);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g as usize);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A subgroup of a fixed parent group, identified by its member set.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<Group>,
    members: ElementSet,
    order: usize,
    gens: Vec<u32>,
}

impl Subgroup {
    pub fn trivial(group: &Arc<Group>) -> Subgroup {
        Subgroup {
            group: group.clone(),
            members: ElementSet::from_indices(group.order(), [0]),
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn whole(group: &Arc<Group>) -> Subgroup {
        let gens = group.generator_indices().to_vec();
        Subgroup::from_closed(group, group.closure(&gens), gens)
    }

    /// Smallest subgroup containing the seed elements.
    pub fn generated(group: &Arc<Group>, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut gens: Vec<u32> = Vec::new();
        let mut members = ElementSet::from_indices(group.order(), [0]);
        for x in seed {
            if !members.contains(x) {
                gens.push(x as u32);
                members = group.closure(&gens);
            }
        }
        Subgroup::from_closed(group, members, gens)
    }

    /// Wraps a member set already known to be a subgroup.
    pub fn from_members(group: &Arc<Group>, members: ElementSet) -> Subgroup {
        let s = Subgroup::generated(group, members.iter());
        debug_assert!(s.members == members, "member set is not a subgroup");
        s
    }

    fn from_closed(group: &Arc<Group>, members: ElementSet, gens: Vec<u32>) -> Subgroup {
        Subgroup {
            group: group.clone(),
            order: members.count(),
            members,
            gens,
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index_in_parent(&self) -> usize {
        self.group.order() / self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    /// A small generating set, as element indices.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn generator_permutations(&self) -> Vec<Permutation> {
        self.gens
            .iter()
            .map(|&g| self.group.element(g as usize).clone())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    fn check_parent(&self, other: &Subgroup) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        let members = self.members.intersection(&other.members);
        Ok(Subgroup::generated(&self.group, members.iter()))
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        if other.is_subgroup_of(self) {
            return Ok(self.clone());
        }
        if self.is_subgroup_of(other) {
            return Ok(other.clone());
        }
        let seed = self.gens.iter().chain(&other.gens).map(|&g| g as usize);
        Ok(Subgroup::generated(&self.group, seed))
    }

    /// The element set `{ab : a ∈ self, b ∈ other}`.
    pub fn set_product(&self, other: &Subgroup) -> Result<ElementSet> {
        self.check_parent(other)?;
        let mut out = ElementSet::new(self.group.order());
        for a in self.elements() {
            for b in other.elements() {
                out.insert(self.group.mul(a, b));
            }
        }
        Ok(out)
    }

    /// `AB = BA` as sets.
    pub fn permutes(&self, other: &Subgroup) -> Result<bool> {
        self.check_parent(other)?;
        if self.is_subgroup_of(other) || other.is_subgroup_of(self) {
            return Ok(true);
        }
        Ok(self.set_product(other)? == other.set_product(self)?)
    }

    /// `{g⁻¹ h g : h ∈ self}`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let members = ElementSet::from_indices(
            self.group.order(),
            self.elements().map(|h| self.group.conj(h, g)),
        );
        let gens = self.gens.iter().map(|&h| self.group.conj(h as usize, g) as u32).collect();
        Subgroup::from_closed(&self.group, members, gens)
    }

    /// True when conjugation by `g` maps the subgroup onto itself.
    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.gens
            .iter()
            .all(|&h| self.members.contains(self.group.conj(h as usize, g)))
    }

    /// Normal in the whole parent group.
    pub fn is_normal(&self) -> bool {
        self.group
            .generator_indices()
            .iter()
            .all(|&g| self.is_normalized_by(g as usize))
    }

    /// Normal in `over`; requires `self ≤ over`.
    pub fn is_normal_in(&self, over: &Subgroup) -> bool {
        self.is_subgroup_of(over) && over.gens.iter().all(|&g| self.is_normalized_by(g as usize))
    }

    /// Whether every element of `other` normalizes `self`.
    pub fn is_normalized_by_subgroup(&self, other: &Subgroup) -> bool {
        other.gens.iter().all(|&g| self.is_normalized_by(g as usize))
    }

    /// The core `⋂_{y∈Y} self^y`: the largest subgroup of `self` normal in `over`.
    pub fn core_in(&self, over: &Subgroup) -> Result<Subgroup> {
        self.check_parent(over)?;
        if !self.is_subgroup_of(over) {
            return Err(Error::NotContained);
        }
        let mut core = self.members.clone();
        loop {
            let mut next = core.clone();
            for &y in &over.gens {
                let conj = ElementSet::from_indices(
                    self.group.order(),
                    core.iter().map(|h| self.group.conj(h, y as usize)),
                );
                next = next.intersection(&conj);
            }
            if next == core {
                break;
            }
            core = next;
        }
        Ok(Subgroup::generated(&self.group, core.iter()))
    }

    /// The subgroup as a standalone permutation group on the same points.
    pub fn to_group(&self, name: impl Into<String>) -> Group {
        Group::from_elements(
            name,
            self.group.degree(),
            self.generator_permutations(),
            self.elements().map(|i| self.group.element(i).clone()).collect(),
        )
    }

    /// Generators in 1-based cycle notation.
    pub fn describe(&self) -> Vec<String> {
        self.generator_permutations().iter().map(|p| p.to_string()).collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then by bit-vector.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>[{}]", self.describe().join(", "), self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn grp(degree: usize, gens: &[&str]) -> Arc<Group> {
        let gens = gens
            .iter()
            .map(|g| Permutation::parse_cycles(g, degree).unwrap())
            .collect();
        Arc::new(Group::generate("test", degree, gens, &Limits::default()).unwrap())
    }

    fn sub(g: &Arc<Group>, gens: &[&str]) -> Subgroup {
        Subgroup::generated(
            g,
            gens.iter()
                .map(|s| g.index_of(&Permutation::parse_cycles(s, g.degree()).unwrap()).unwrap()),
        )
    }

    /// Closure by naive breadth-first multiplication of permutations,
    /// independent of the Cayley table.
    fn naive_closure(degree: usize, gens: &[Permutation]) -> usize {
        let mut set = std::collections::HashSet::new();
        let mut frontier = vec![Permutation::identity(degree)];
        set.insert(Permutation::identity(degree));
        while let Some(x) = frontier.pop() {
            for g in gens {
                for y in [x.then(g), g.then(&x)] {
                    if set.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
        }
        set.len()
    }

    #[test]
    fn generation_examples() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(s3.order(), 6);
        assert_eq!(
            naive_closure(3, s3.generators()),
            6
        );
        let trivial = grp(1, &[]);
        assert_eq!(trivial.order(), 1);
        let c4 = grp(4, &["(1 2 3 4)"]);
        assert_eq!(c4.order(), 4);
        assert!(c4.is_cyclic());
        assert!(s3.element(0).is_identity());
    }

    #[test]
    fn order_cap_is_enforced() {
        let gens = vec![
            Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap(),
            Permutation::parse_cycles("(1 2)", 7).unwrap(),
        ];
        let limits = Limits { max_order: 100, ..Limits::default() };
        assert!(matches!(
            Group::generate("S7", 7, gens, &limits),
            Err(Error::OrderCapExceeded { cap: 100, .. })
        ));
        let bad = vec![Permutation::identity(3)];
        assert!(matches!(
            Group::generate("x", 4, bad, &Limits::default()),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn table_is_closed_and_canonical() {
        let a = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let b = grp(4, &["(1 2)", "(2 3)", "(3 4)"]);
        assert_eq!(a.elements(), b.elements());
        let n = a.order();
        for x in 0..n {
            for y in 0..n {
                let p = a.element(x).then(a.element(y));
                assert_eq!(a.index_of(&p), Some(a.mul(x, y)));
            }
            assert_eq!(a.mul(x, a.inv(x)), 0);
        }
    }

    #[test]
    fn subgroup_generation_examples() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(sub(&s3, &["(1 2)"]).order(), 2);
        assert_eq!(sub(&s3, &["(1 2)", "(1 3)"]).order(), 6);
        assert_eq!(Subgroup::generated(&s3, []).order(), 1);
        let h = sub(&s3, &["(1 2)", "(1 3)"]);
        assert_eq!(Subgroup::generated(&s3, h.elements()), h);
    }

    #[test]
    fn permutability_examples() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let a = sub(&s3, &["(1 2)"]);
        let a3 = sub(&s3, &["(1 2 3)"]);
        let b = sub(&s3, &["(1 3)"]);
        assert!(a.permutes(&a3).unwrap());
        assert_eq!(a.set_product(&a3).unwrap().count(), 6);
        assert!(!a.permutes(&b).unwrap());
        assert_eq!(a.set_product(&b).unwrap().count(), 4);
        assert_ne!(a.set_product(&b).unwrap(), b.set_product(&a).unwrap());
        assert!(a.permutes(&a).unwrap());
        let other = grp(4, &["(1 2 3 4)"]);
        assert_eq!(
            a.permutes(&Subgroup::whole(&other)),
            Err(Error::ParentMismatch)
        );
    }

    #[test]
    fn normality_and_conjugation() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        assert!(sub(&s3, &["(1 2 3)"]).is_normal());
        let a = sub(&s3, &["(1 2)"]);
        assert!(!a.is_normal());
        let g = s3.index_of(&Permutation::parse_cycles("(1 3)", 3).unwrap()).unwrap();
        assert_eq!(a.conjugate(g), sub(&s3, &["(2 3)"]));
        assert!(Subgroup::whole(&s3).is_normal());
    }

    #[test]
    fn core_examples() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let whole = Subgroup::whole(&s3);
        assert!(sub(&s3, &["(1 2)"]).core_in(&whole).unwrap().is_trivial());
        let a3 = sub(&s3, &["(1 2 3)"]);
        assert_eq!(a3.core_in(&whole).unwrap(), a3);
        assert_eq!(whole.core_in(&a3), Err(Error::NotContained));

        let s4 = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let d8 = sub(&s4, &["(1 2 3 4)", "(1 3)"]);
        let v4 = sub(&s4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(d8.core_in(&Subgroup::whole(&s4)).unwrap(), v4);
    }
}

//! Exhaustive subgroup enumeration.
//!
//! Every subgroup is a join of cyclic subgroups, so closing the set of
//! cyclic subgroups under "join with one more cyclic subgroup" reaches all
//! of them without needing to know maximal subgroups.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{Group, Limits, Subgroup};

/// A deduplicated list of subgroups of one parent, sorted by order and then
/// by bit-vector.
#[derive(Debug, Clone)]
pub struct SubgroupFamily {
    group: Arc<Group>,
    members: Vec<Subgroup>,
    index: HashMap<ElementSet, usize>,
}

impl SubgroupFamily {
    pub fn new(group: &Arc<Group>, mut members: Vec<Subgroup>) -> SubgroupFamily {
        members.sort();
        members.dedup();
        let index = members
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        SubgroupFamily {
            group: group.clone(),
            members,
            index,
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.members[i]
    }

    pub fn position(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.members()).copied()
    }

    pub fn position_of_set(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn contains(&self, s: &Subgroup) -> bool {
        self.index.contains_key(s.members())
    }

    /// The largest member; for a full enumeration this is the ambient group.
    pub fn top(&self) -> &Subgroup {
        self.members.last().expect("non-empty family")
    }

    pub fn filter(&self, mut keep: impl FnMut(&Subgroup) -> bool) -> SubgroupFamily {
        SubgroupFamily::new(
            &self.group,
            self.members.iter().filter(|s| keep(s)).cloned().collect(),
        )
    }

    /// Members contained in `over`.
    pub fn below(&self, over: &Subgroup) -> SubgroupFamily {
        self.filter(|s| s.is_subgroup_of(over))
    }
}

/// Every subgroup of `ambient` (itself a subgroup of some parent group).
pub fn subgroups_of(ambient: &Subgroup, limits: &Limits) -> Result<SubgroupFamily> {
    let group = ambient.group();
    let mut cyclic: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    for x in ambient.elements() {
        let c = Subgroup::generated(group, [x]);
        if seen.insert(c.members().clone()) {
            cyclic.push(c);
        }
    }
    let mut found: Vec<Subgroup> = cyclic.clone();
    let mut worklist: Vec<usize> = (0..found.len()).collect();
    while let Some(i) = worklist.pop() {
        for c in &cyclic {
            let x = &found[i];
            if c.is_subgroup_of(x) {
                continue;
            }
            let j = x.join(c)?;
            if seen.insert(j.members().clone()) {
                if seen.len() > limits.max_subgroups {
                    return Err(Error::SubgroupCountCapExceeded {
                        cap: limits.max_subgroups,
                    });
                }
                worklist.push(found.len());
                found.push(j);
            }
        }
    }
    Ok(SubgroupFamily::new(group, found))
}

/// All subgroups of `group`.
pub fn all_subgroups(group: &Arc<Group>, limits: &Limits) -> Result<SubgroupFamily> {
    if group.order() > limits.max_order {
        return Err(Error::OrderCapExceeded {
            order: group.order(),
            cap: limits.max_order,
        });
    }
    subgroups_of(&Subgroup::whole(group), limits)
}

/// Members of a full enumeration that are normal in the parent.
pub fn normal_subgroups(all: &SubgroupFamily) -> SubgroupFamily {
    all.filter(|s| s.is_normal())
}

pub fn all_normal_subgroups(group: &Arc<Group>, limits: &Limits) -> Result<SubgroupFamily> {
    Ok(normal_subgroups(&all_subgroups(group, limits)?))
}

/// Cover pairs `(x, y)` of family indices: `x < y` with no member strictly
/// between them.
pub fn hasse_covers(members: &[Subgroup]) -> Vec<(usize, usize)> {
    let n = members.len();
    let below = |a: usize, b: usize| a != b && members[a].is_subgroup_of(&members[b]);
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if below(x, y) && !(0..n).any(|z| below(x, z) && below(z, y)) {
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out
}

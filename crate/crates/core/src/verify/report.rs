use serde::{Deserialize, Serialize};

use crate::group::Subgroup;

/// A subgroup as printed in reports: its order and a generating set in
/// 1-based cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRef {
    pub order: usize,
    pub generators: Vec<String>,
}

impl SubgroupRef {
    pub fn of(s: &Subgroup) -> SubgroupRef {
        SubgroupRef {
            order: s.order(),
            generators: s.describe(),
        }
    }
}

/// A counterexample attached to a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Pair {
        a: SubgroupRef,
        b: SubgroupRef,
    },
    Triple {
        a: SubgroupRef,
        b: SubgroupRef,
        c: SubgroupRef,
    },
    Residual {
        residual: SubgroupRef,
        reason: String,
    },
    /// Isomorphic sections `first/bottom` and `second/bottom` of `G/normal`,
    /// given by their preimages in `G`.
    Sections {
        normal: SubgroupRef,
        block: String,
        bottom: SubgroupRef,
        first: SubgroupRef,
        second: SubgroupRef,
    },
    Instance {
        subgroups: Vec<SubgroupRef>,
        note: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass() -> Check {
        Check {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Check {
        Check {
            holds: false,
            witness: Some(witness),
        }
    }

    pub fn from_witness(witness: Option<Witness>) -> Check {
        match witness {
            None => Check::pass(),
            Some(w) => Check::fail(w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl Verdict {
    pub fn from_ok(ok: bool) -> Verdict {
        if ok {
            Verdict::Consistent
        } else {
            Verdict::Violation
        }
    }

    pub fn is_violation(self) -> bool {
        self == Verdict::Violation
    }
}

/// Which triples condition (iv) ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every admissible triple; also runs the covers scan.
    #[default]
    Full,
    /// Only triples whose upper members cover the bottom one.
    Covers,
}

/// Direct distributivity of the σ-permutable lattice against the four
/// structural conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub mode: Mode,
    pub direct_distributive: Check,
    pub cond_i: Check,
    pub cond_ii: Check,
    pub cond_iii: Check,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cond_iv_full: Option<Check>,
    pub cond_iv_covers: Check,
    /// `direct_distributive ⟺ (i) ∧ (ii) ∧ (iii) ∧ (iv)` in full mode.
    pub verdict: Verdict,
    /// `(i) ∧ (ii) ∧ (iii) ∧ (iv, covers) ⟹ direct_distributive`.
    pub covers_direction: Verdict,
    /// `(iv, full) ⟹ (iv, covers)`.
    pub full_implies_covers: Verdict,
}

impl CriterionReport {
    pub fn has_violation(&self) -> bool {
        self.verdict.is_violation()
            || self.covers_direction.is_violation()
            || self.full_implies_covers.is_violation()
    }
}

/// Meet/join closure of the σ-permutable subgroups, with the σ⁰ cross-checks
/// against the independently computed S-permutable family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub closed: Check,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_permutable_family_agrees: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_permutable_closed: Option<bool>,
}

impl ClosureReport {
    pub fn has_violation(&self) -> bool {
        !self.closed.holds
            || self.s_permutable_family_agrees == Some(false)
            || self.s_permutable_closed == Some(false)
    }
}

/// For σ-nilpotent subgroups `A`: `A` σ-permutable ⟺ its Hall subgroups
/// are ⟺ its characteristic subgroups are.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicReport {
    pub nilpotent_subgroups: usize,
    pub permutable_nilpotent_subgroups: usize,
    pub equivalent: Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOutcome {
    pub name: String,
    pub instances: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Witness>,
}

/// The full analysis of one (group, partition) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairAnalysis {
    pub sigma_full: bool,
    pub sigma_blocks: Vec<String>,
    pub subgroup_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice_size: Option<usize>,
    /// Members of the σ-permutable lattice, ascending by order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lattice: Vec<SubgroupRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modular: Option<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distributivity: Option<CriterionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<ClosureReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<CharacteristicReport>,
    pub lemmas: Vec<LemmaOutcome>,
    pub skips: Vec<String>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularityFinding {
    pub group: String,
    pub order: usize,
    pub partition: String,
    pub sigma_full: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modular: Option<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distributive: Option<bool>,
}

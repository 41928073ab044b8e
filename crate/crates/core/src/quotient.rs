use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::perm::Permutation;

/// `G/R` realised as the permutation action of `G` on the right cosets of
/// `R` by right multiplication.
pub struct QuotientGroup {
    base: Arc<Group>,
    kernel: Subgroup,
    quotient: Arc<Group>,
    projection: Vec<u32>,
}

impl QuotientGroup {
    pub fn new(base: &Arc<Group>, kernel: &Subgroup) -> Result<QuotientGroup> {
        if !Arc::ptr_eq(kernel.group(), base) && **kernel.group() != **base {
            return Err(Error::ParentMismatch);
        }
        if !kernel.is_normal() {
            return Err(Error::NotNormal);
        }
        let n = base.order();
        // Right coset Rg, numbered in order of first appearance.
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            for r in kernel.elements() {
                coset_of[base.mul(r, g)] = id;
            }
            reps.push(g);
        }
        let degree = reps.len();
        let action = |x: usize| -> Permutation {
            let images = reps
                .iter()
                .map(|&rep| coset_of[base.mul(rep, x)])
                .collect();
            Permutation::from_images(images).expect("coset action is a bijection")
        };
        let images: Vec<Permutation> = (0..n).map(action).collect();
        let generators = base
            .generator_indices()
            .iter()
            .map(|&g| images[g as usize].clone())
            .collect();
        let quotient = Arc::new(Group::from_elements(
            format!("{}/{}", base.name(), kernel.order()),
            degree,
            generators,
            images.clone(),
        ));
        let projection = images
            .iter()
            .map(|p| quotient.index_of(p).expect("image in quotient") as u32)
            .collect();
        Ok(QuotientGroup {
            base: base.clone(),
            kernel: kernel.clone(),
            quotient,
            projection,
        })
    }

    pub fn base(&self) -> &Arc<Group> {
        &self.base
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn quotient(&self) -> &Arc<Group> {
        &self.quotient
    }

    pub fn project(&self, g: usize) -> usize {
        self.projection[g] as usize
    }

    /// `HR/R` for a subgroup `H` of the base group.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        Subgroup::generated(&self.quotient, h.generators().iter().map(|&g| self.project(g as usize)))
    }

    /// The full preimage of a subgroup of the quotient.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let members = ElementSet::from_indices(
            self.base.order(),
            (0..self.base.order()).filter(|&g| h.contains(self.project(g))),
        );
        let seed: Vec<usize> = self
            .kernel
            .generators()
            .iter()
            .map(|&g| g as usize)
            .chain(members.iter())
            .collect();
        Subgroup::generated(&self.base, seed)
    }
}

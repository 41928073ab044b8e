//! Subgroup lattices of small finite permutation groups, with a focus on
//! σ-permutable subgroups: subgroups that permute with every Hall
//! σᵢ-subgroup for a fixed partition σ of the primes.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`], [`group`], [`quotient`], [`iso`]: a permutation group engine
//!   built on full element enumeration and a Cayley table.
//! * [`subgroups`]: exhaustive subgroup enumeration.
//! * [`lattice`]: finite lattice algorithms over subgroup families.
//! * [`sigma`]: partitions of the primes, Hall subgroups, σ-permutability,
//!   σ-subnormality, σ-nilpotency and the associated cores and residuals.
//! * [`verify`]: executable checks of the distributivity criterion and the
//!   supporting structural statements, producing serialisable reports.

pub mod bitset;
pub mod error;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod perm;
pub mod primes;
pub mod quotient;
pub mod sigma;
pub mod subgroups;
pub mod verify;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use group::{Group, Limits, Subgroup};
pub use iso::{Section, TableGroup};
pub use lattice::SigmaLattice;
pub use perm::Permutation;
pub use quotient::QuotientGroup;
pub use sigma::{Block, LeftoverRule, PrimePartition};
pub use subgroups::SubgroupFamily;

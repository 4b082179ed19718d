//! Finite computational algebra for groups up to congruence (c-groups),
//! cssc-crossed modules and categorical groups.
//!
//! The crate is `no_std` (it needs `alloc`). Every structure is a finite
//! table over element indices; element names are kept alongside for
//! reporting and are sorted lexicographically on construction, so index
//! order and name order always agree.
//!
//! The main entry points:
//!
//! * [`cgroup`]: c-groups, their morphisms, c-kernels/c-images and special
//!   congruences.
//! * [`crossmod`]: actions, c-crossed modules and the cssc predicates.
//! * [`catgroup`]: finite categorical groups, their validation, special
//!   isomorphisms and the c-groups extracted from them.
//! * [`functors`]: the functors `L` (categorical group to crossed module)
//!   and `T` (cssc-crossed module to categorical group).
//! * [`equivalence`]: the comparison functors `P`, `F` and morphisms
//!   `phi`, `psi`, and the round-trip checks.
//! * [`gen`] and [`corpus`]: instance generators and the default corpus.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catgroup;
pub mod cgroup;
pub mod corpus;
pub mod crossmod;
pub mod equivalence;
pub mod error;
pub mod functors;
pub mod gen;
pub mod group;
pub mod relation;
pub mod report;

pub use catgroup::{CatGroup, CatGroupFunctor, CatGroupTables, Limits};
pub use cgroup::{CGroup, CMorphism, CSubset};
pub use crossmod::{CAction, CrossedModule, CrossedModuleMorphism};
pub use error::{Error, Result};
pub use functors::{GArrow, LModule, TCatGroup};
pub use group::FiniteGroup;
pub use relation::{Partition, Relation};
pub use report::{Check, ValidationReport};

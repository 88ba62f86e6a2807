//! Core library: finite 2-groups as multiplication tables, modular group
//! algebra arithmetic over small prime fields, unit sweeps, bicyclic units,
//! and the structural classifiers they are verified against.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod bicyclic;
pub mod catalog;
pub mod classify;
pub mod group;
pub mod perm;
pub mod report;
pub mod units;

pub use algebra::{AlgebraElement, AlgebraError, GroupAlgebra, PrimeField};
pub use group::{
    close_generators, decompose_elem_abelian_factor, is_isomorphic, shape_predicates, FiniteGroup,
    GroupError, GroupMap, Subgroup, SubgroupKind,
};
pub use report::{VerificationReport, Verdict, Witness};

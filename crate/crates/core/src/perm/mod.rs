//! Permutation groups: elements, stabilizer chains, classes, Sylow subgroups,
//! subgroup lattices, derived series and derived actions.

mod action;
mod chain;
mod classes;
pub mod field;
mod group;
pub mod io;
mod lattice;
pub mod named;
mod permutation;
mod series;
mod sylow;

pub use action::{coset_action, pair_action, two_subset_action, GroupAction};
pub use classes::ConjugacyClassSet;
pub use group::{EnumeratedGroup, PermGroup, ELEMENT_BOUND, MULT_TABLE_BOUND};
pub use lattice::{subgroup_lattice, SubgroupLattice, SubgroupNode, LATTICE_BOUND};
pub use permutation::Permutation;
pub use series::{
    derived_series, derived_subgroup, elementary_abelian_prime, is_solvable, minimal_normal_subgroups,
    normal_closure, socle,
};
pub use sylow::{all_sylow_subgroups, kaplan_levy_all_choices, kaplan_levy_check, sylow_subgroup};

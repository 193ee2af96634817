//! Equivariant quadratic maps, the Norton algebra of J(n, 2), and the
//! representations of Sₙ they act on.

mod matrix;
mod norton;
mod quadmap;
mod rep;
mod sn;

pub use matrix::{Matrix, Scalar};
pub use norton::{nilpotents, pairing_identity_holds, NilpotentKind, NilpotentReport, NortonAlgebra, NortonChecks};
pub use quadmap::{
    congruence_report, isotypic_projection, quad_map_build, sym_pairs, sym_square_matrix, Admissibility,
    CongruenceReport, QuadraticMap,
};
pub use rep::{subspace_character, MatrixRep, REP_BOUND};
pub use sn::{
    reduce_vminus_to_v, sign_twisted_rep, sn_witness_orbits, standard_matrix, standard_rep, symmetric_group,
    SignedAugmentation, TwistReduction, WitnessOrbits,
};

/// The quaternions as a complex representation of Q8.
pub const Q8_H_REP: &str = include_str!("../../data/reps/q8_h.rep");
/// The sign twist V⁻ of the standard representation of S5.
pub const S5_VMINUS_REP: &str = include_str!("../../data/reps/s5_vminus.rep");

#[cfg(test)]
mod tests;

//! Exact computation of the α-characteristic of finite group representations,
//! with the supporting permutation-group, character-table, cyclotomic,
//! Gröbner-basis and quadratic-map machinery.

pub mod alpha;
pub mod chartable;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod groebner;
pub mod paper;
pub mod perm;
pub mod quad;
pub mod twotrans;
pub mod util;

pub use error::{Error, Result};

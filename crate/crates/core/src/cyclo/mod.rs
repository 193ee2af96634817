//! Exact arithmetic in cyclotomic fields.

mod cyclotomic;
mod parse;

pub use cyclotomic::{field_degree, rat, Cyclotomic, Rational};
pub use parse::parse_cyclotomic;

//! Base polytopes, permutation vertices, and checks of signed indicator
//! relations.

pub mod base;
pub mod decomposition;

pub use base::{contains, rank_seq_multiplicity, vertex_of_permutation, BasePolytope};
pub use decomposition::{
    check_indicator_relation, check_valuative_g, IndicatorCheck, SignedDecomposition, ValuativeCheck,
};

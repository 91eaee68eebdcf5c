//! Coxeter groups of defining graphs: finiteness via the cosine matrix,
//! Tits' solution of the word problem, and exhaustive enumeration of small
//! groups as an independent check.

mod enumerate;
mod gram;
mod reduce;
mod words;

use thiserror::Error;

pub use enumerate::{enumerate_coxeter, Enumeration, FiniteCoxeterGroup};
pub use gram::{
    affine_components, finite_type_name, gram_matrix, gram_matrix_of, irreducible_components,
    is_spherical, CoxeterType, GramMatrix, GRAM_TOLERANCE,
};
pub use reduce::{
    coxeter_equal, coxeter_reduce, coxeter_reduce_with_cap, right_descents, DEFAULT_CLOSURE_CAP,
};
pub use words::{project_to_coxeter, tits_section, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("word is not reduced")]
    NotReduced,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
}

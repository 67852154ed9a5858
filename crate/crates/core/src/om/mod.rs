//! Sign vectors, chirotopes and the vector/covector enumerations built on them.

mod axioms;
mod chirotope;
mod enumerate;
mod matrix;
mod sign;

pub use axioms::{axiom_failure, check_chirotope, circuit_axiom_failure};
pub use chirotope::Chirotope;
pub(crate) use enumerate::filter_eh;
pub use enumerate::{
    build_vector_poset, check_height_bound, cocircuits, composition_closure, covector_set_jj,
    covectors, height, positive_circuits, positive_vector_poset, positive_vectors_eh, topes,
    vectors, VectorPoset,
};
pub use matrix::RationalMatrix;
pub(crate) use sign::bits;
pub use sign::{Sign, SignVector, MAX_ELEMENTS};

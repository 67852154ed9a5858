//! Finite abstract simplicial complexes, Z₂ chains, reduced homology, order
//! complexes and barycentric subdivision.

mod complex;
mod homology;
mod poset;

pub use complex::{boundary, parse_cpx, to_cpx, Face, SimplicialComplex, Z2Chain};
pub use homology::{
    betti_z2, boundary_columns, reduced_betti_numbers, reduced_homology_trivial_up_to,
};
pub use poset::{barycentric_subdivision, face_poset, order_complex, Poset};

//! Verma modules over the Neveu–Schwarz algebra: normal ordering,
//! singular vectors and their leading terms, C₂ generators.

mod mode;
mod monomial;
mod singular;
mod straighten;

pub use mode::{bracket, ModeKind, NSMode};
pub use monomial::{FiltrationDegree, PBWMonomial};
pub use singular::{
    c2_generators, degree_basis, expected_leading, singular_vectors, vacuum, verify_minimal_singular, C2Report,
    SingularVectorReport,
};
pub use straighten::{straighten, Straightener, Terms, VermaVector};

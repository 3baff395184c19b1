//! Exact arithmetic in the genus-2 Goeritz group.
//!
//! The Goeritz group of the genus-2 Heegaard splitting of the 3-sphere
//! decomposes as a free product of two sphere stabilizers amalgamated over
//! an edge stabilizer, and acts on a locally infinite tree of reducing
//! spheres. This crate makes all of that computable, exactly:
//!
//! * [`words`] — the four-generator alphabet, parsing, free reduction,
//!   seeded random words;
//! * [`factors`] — closed-form arithmetic in the stabilizers H_P, H_M and
//!   H_E, with the coset decompositions the normal form needs;
//! * [`amalgam`] — Bass–Serre normal forms, a decidable word problem,
//!   element orders, factor membership, the defining relators, and the
//!   Θ-twist substitution;
//! * [`tree`] — canonical coset vertices, exact distances and geodesics,
//!   truncated neighbor stars, simplex structure, descent toward a
//!   target, and BFS ball enumeration;
//! * [`homology`] — the integer action on H₁ of the surface, a
//!   non-faithful oracle that provably separates words the engine calls
//!   different, together with its invariant intersection form.

pub mod amalgam;
pub mod factors;
pub mod homology;
pub mod tree;
pub mod words;

pub use amalgam::{
    equal, membership, normal_form, order, relators, relators_he, relators_hm, relators_hp,
    theta_twist, AmalgamElem, Factor, Membership, Syllable,
};
pub use factors::{
    enumerate_e, enumerate_m, letter_image_m, letter_image_p, EElem, MElem, Order, PElem,
};
pub use homology::{generator_matrix, invariant_form, represent, HomMatrix, HomologyError};
pub use tree::{
    descend, distance, enumerate_ball, gamma_adjacent, geodesic, neighbors, triangle, Descent,
    Edge, TreeBall, TreeError, Vertex, VertexKind,
};
pub use words::{random_word, Letter, ParseWordError, Word};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_are_shareable_across_threads() {
        // Everything is a plain value; no interior mutability anywhere.
        fn check<T: Send + Sync>() {}
        check::<Word>();
        check::<PElem>();
        check::<MElem>();
        check::<EElem>();
        check::<AmalgamElem>();
        check::<Vertex>();
        check::<TreeBall>();
        check::<HomMatrix>();
    }
}

//! Generalized cycle indices of permutation groups with one-dimensional
//! characters.
//!
//! For `W ≤ S_d` and a linear character `χ` of `W` this crate computes
//! `Z(χ; p_1, …, p_d)`, enumerates the `W`-orbits on `[0,n]^d` on which `χ`
//! is trivial on stabilizers, and checks that the weighted orbit sum equals
//! the specialized cycle index. All arithmetic is exact, over cyclotomic
//! fields.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod character;
pub mod cyclotomic;
pub mod error;
pub mod orbit;
pub mod perm;
pub mod semisym;
pub mod symfun;

pub use character::{
    enumerate_linear_characters, product_character, wreath_character, LinearCharacter,
};
pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use orbit::{
    enumerate_orbits, index_set_j, orbit_census, verify_main_theorem, weighted_sum_g,
    HypercubePoint, MainTheoremReport, OrbitRecord,
};
pub use perm::{
    decompose_wreath_element, direct_product_embed, named_group, wreath_embed, GroupKind,
    PermGroup, Permutation,
};
pub use semisym::{build_projector, verify_basis_prop, BasisReport, ExactMatrix, MonomialModule};
pub use symfun::{cycle_index, elementary_symmetric, MonomialPoly, PowerSumPoly};

/// Work limits for the enumeration-heavy operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Bound on `(n+1)^d · |W|` for orbit enumeration.
    pub orbit_work: u128,
    /// Bound on the number of monomials a specialization may produce.
    pub expansion_terms: u128,
    /// Bound on `(n+1)^d` for projector matrices.
    pub projector_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            orbit_work: 100_000_000,
            expansion_terms: symfun::DEFAULT_TERM_CAP,
            projector_dim: 1024,
        }
    }
}

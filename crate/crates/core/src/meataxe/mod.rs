//! Structural analysis of modules: composition factors, endomorphism
//! rings, decomposition into indecomposables, isomorphism testing and
//! projectivity.

mod decompose;
mod hom;
pub(crate) mod spin;

pub use decompose::{
    chop, decompose, decompose_with, find_isomorphism, fingerprint, is_indecomposable, is_projective, iso_test, strip_free,
    Decomposition, Fingerprint, FreeSplit, Options, Summand,
};
pub(crate) use decompose::{simples_of, socle, Simple};
pub use hom::{commutant, hom, HomSpace};
pub(crate) use hom::hom_space;

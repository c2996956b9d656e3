//! The module category of a finite-dimensional algebra: homs, decomposition,
//! projective covers and injective envelopes, Ext, stable homs, the
//! Auslander–Reiten translate, and enumeration of indecomposables.

mod ar;
mod decompose;
mod enumerate;
mod hom;
mod module;
mod proj;

pub use ar::{
    ar_sequence, ar_translate, ar_translate_inv, is_right_almost_split, minimal_presentation, transpose, ArSequence,
    FreeMap,
};
pub use decompose::{
    decompose, decompose_with, find_iso, is_indecomposable, is_isomorphic, iso_indecomposable, local_radical,
    DecomposeOptions, Decomposition, Summand, DEFAULT_EXHAUSTIVE_CAP,
};
pub use enumerate::{Caps, Catalog};
pub use hom::{hom_basis, hom_dim, hom_space, HomSpace};
pub use module::{FdModule, ModuleHom};
pub use proj::{
    costable_hom_dim, cosyzygy, cosyzygy_n, cosyzygy_sequence, ext_dim, free_module, generator_vector,
    hom_from_generators, indecomposable_injective, indecomposable_injectives, indecomposable_projective,
    indecomposable_projectives, injective_envelope, injective_ideal, is_injective, is_projective, is_self_injective,
    projective_cover, projective_ideal, stable_hom, stable_hom_dim, syzygy, syzygy_n, syzygy_sequence, Cover,
    Envelope,
};

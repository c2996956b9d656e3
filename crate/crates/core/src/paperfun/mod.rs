//! The functors from monomorphism and epimorphism categories of `M` to
//! functor categories: `Υ`, `Φ`, `Ψ`, `Θ`, `Ψ′`, the duality `Σ`, the
//! higher translate `τₙ`, constructive preimages, and kernel-object predicates.

mod functors;
mod pairs;

pub use functors::Instance;
pub use pairs::{
    enumerate_epi_pairs, enumerate_mono_pairs, indecomposable_epis, indecomposable_monos, is_k, is_split_epi,
    is_split_mono, is_u, is_v, is_vprime, is_w, shape, solve_combination, solves, sum_of_maps, EpiPair, MonoPair,
    MorphismCat, PairCaps, SMorphism, Shape,
};

#[cfg(test)]
mod tests;

//! Functor categories on `M` as module categories over Auslander algebras:
//! Yoneda functors, cokernel functors, restricted Ext functors, defects of
//! n-exact sequences, and the recollement functors `v`, `v_λ`, `i_λ`.

mod auslander;
mod functor;
mod quot;
mod recollement;

use std::sync::{Arc, OnceLock};

pub use auslander::{flavor_ideal, AuslanderAlgebra, Flavor, Variance};
pub use functor::{ext_functor, from_values, functor_coker, induced_map, inflate, nat_space, restrict, yoneda, FunctorMod};
pub use quot::QuotSpace;
pub use recollement::{counit, i_lambda, i_lambda_with_map, kill_projectives, presentation, v, v_lambda, Presentation};

use crate::cluster::{ClusterSubcat, NExactSeq};
use crate::error::Result;

/// The six Auslander algebras of `M` (three flavors, two variances), built on demand.
pub struct FunctorCats {
    m: ClusterSubcat,
    cells: [OnceLock<Arc<AuslanderAlgebra>>; 6],
}

impl FunctorCats {
    pub fn new(m: &ClusterSubcat) -> FunctorCats {
        FunctorCats { m: m.clone(), cells: Default::default() }
    }

    pub fn subcat(&self) -> &ClusterSubcat {
        &self.m
    }

    fn slot(flavor: Flavor, variance: Variance) -> usize {
        let f = match flavor {
            Flavor::Plain => 0,
            Flavor::Stable => 1,
            Flavor::Costable => 2,
        };
        2 * f + usize::from(variance == Variance::Covariant)
    }

    pub fn get(&self, flavor: Flavor, variance: Variance) -> Result<Arc<AuslanderAlgebra>> {
        let slot = Self::slot(flavor, variance);
        if let Some(g) = self.cells[slot].get() {
            return Ok(g.clone());
        }
        let built = match variance {
            Variance::Contravariant => Arc::new(AuslanderAlgebra::new(&self.m, flavor)?),
            Variance::Covariant => Arc::new(self.get(flavor, Variance::Contravariant)?.flipped()),
        };
        Ok(self.cells[slot].get_or_init(|| built).clone())
    }

    /// Plain contravariant: functors `M^op -> mod k`.
    pub fn plain(&self) -> Result<Arc<AuslanderAlgebra>> {
        self.get(Flavor::Plain, Variance::Contravariant)
    }

    /// Stable contravariant: `mod-M̲`.
    pub fn stable(&self) -> Result<Arc<AuslanderAlgebra>> {
        self.get(Flavor::Stable, Variance::Contravariant)
    }

    /// Costable covariant: `M̄-mod`.
    pub fn costable_co(&self) -> Result<Arc<AuslanderAlgebra>> {
        self.get(Flavor::Costable, Variance::Covariant)
    }

    /// Contravariant defect `δ* = coker(Hom(-, Mⁿ) -> Hom(-, M^{n+1}))` on `M̲`.
    pub fn contravariant_defect(&self, seq: &NExactSeq) -> Result<FunctorMod> {
        Ok(functor_coker(&self.stable()?, seq.maps.last().expect("nonempty sequence")))
    }

    /// Covariant defect `δ_* = coker(Hom(M¹, -) -> Hom(M⁰, -))` on `M̄`.
    pub fn covariant_defect(&self, seq: &NExactSeq) -> Result<FunctorMod> {
        Ok(functor_coker(&self.costable_co()?, &seq.maps[0]))
    }
}

#[cfg(test)]
mod tests;

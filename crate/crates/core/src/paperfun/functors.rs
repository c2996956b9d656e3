use std::sync::{Arc, OnceLock};

use super::pairs::{solve_combination, EpiPair, MonoPair, MorphismCat, SMorphism};
use crate::algebra::FdAlgebra;
use crate::cluster::{ClusterSubcat, NExactSeq};
use crate::error::{Error, Result};
use crate::functcat::{
    functor_coker, i_lambda_with_map, induced_map, presentation, v, yoneda, AuslanderAlgebra, Flavor, FunctorCats,
    FunctorMod, Variance,
};
use crate::linalg::Matrix;
use crate::modcat::{
    ar_translate, hom_space, Caps, Catalog, injective_envelope, is_self_injective, projective_cover, syzygy_n, FdModule, ModuleHom,
};

/// An `n`-cluster tilting subcategory with its functor categories and morphism category.
pub struct Instance {
    m: ClusterSubcat,
    cats: FunctorCats,
    morphisms: OnceLock<MorphismCat>,
    self_injective: bool,
}

impl Instance {
    pub fn new(m: &ClusterSubcat) -> Instance {
        let self_injective = is_self_injective(m.catalog().algebra());
        Instance { m: m.clone(), cats: FunctorCats::new(m), morphisms: OnceLock::new(), self_injective }
    }

    pub fn subcat(&self) -> &ClusterSubcat {
        &self.m
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn base(&self) -> &Arc<FdAlgebra> {
        self.m.catalog().algebra()
    }

    pub fn cats(&self) -> &FunctorCats {
        &self.cats
    }

    pub fn is_self_injective(&self) -> bool {
        self.self_injective
    }

    pub fn morphism_cat(&self) -> &MorphismCat {
        self.morphisms.get_or_init(|| MorphismCat::new(self.base()))
    }

    pub fn plain(&self) -> Result<Arc<AuslanderAlgebra>> {
        self.cats.plain()
    }

    pub fn stable(&self) -> Result<Arc<AuslanderAlgebra>> {
        self.cats.stable()
    }

    pub fn costable_co(&self) -> Result<Arc<AuslanderAlgebra>> {
        self.cats.costable_co()
    }

    pub fn costable_contra(&self) -> Result<Arc<AuslanderAlgebra>> {
        self.cats.get(Flavor::Costable, Variance::Contravariant)
    }

    // ---- Υ, Φ, Ψ

    /// `Υ(f) = coker(Hom(-, M₁) -> Hom(-, M₂))` on `M`.
    pub fn upsilon(&self, x: &MonoPair) -> Result<FunctorMod> {
        Ok(functor_coker(&self.plain()?, &x.f))
    }

    /// `Φ = i_λ ∘ Υ`, defined over self-injective algebras.
    pub fn phi(&self, x: &MonoPair) -> Result<FunctorMod> {
        Ok(self.phi_with_map(x)?.0)
    }

    fn phi_with_map(&self, x: &MonoPair) -> Result<(FunctorMod, FunctorMod, ModuleHom)> {
        if !self.self_injective {
            return Err(Error::NotSelfInjective);
        }
        let up = self.upsilon(x)?;
        let (phi, q) = i_lambda_with_map(&up, &self.stable()?)?;
        Ok((phi, up, q))
    }

    /// The n-cokernel `0 -> M₁ -> M₂ -> M¹ -> ... -> Mⁿ -> 0` of a mono.
    pub fn n_cokernel(&self, x: &MonoPair) -> Result<NExactSeq> {
        self.m.n_cokernel(&x.f)
    }

    /// `Ψ(f) = coker(Hom(-, M^{n-1}) -> Hom(-, Mⁿ))` on `M̲`.
    pub fn psi(&self, x: &MonoPair) -> Result<FunctorMod> {
        self.cats.contravariant_defect(&self.n_cokernel(x)?)
    }

    // ---- Θ, Ψ′

    /// `Θ(g) = coker(Hom(-, M₁) -> Hom(-, M₂))` on `M̲`.
    pub fn theta(&self, x: &EpiPair) -> Result<FunctorMod> {
        Ok(functor_coker(&self.stable()?, &x.f))
    }

    pub fn n_kernel(&self, x: &EpiPair) -> Result<NExactSeq> {
        self.m.n_kernel(&x.f)
    }

    /// `Ψ′(g) = coker(Hom(M², -) -> Hom(M¹, -))` on `M̄` from the n-kernel of `g`.
    pub fn psi_prime(&self, x: &EpiPair) -> Result<FunctorMod> {
        self.cats.covariant_defect(&self.n_kernel(x)?)
    }

    // ---- preimages

    /// A mono `K -> M_X` with `Υ ≅ F`, where `X = v(F)` and `M_X -> X` is a minimal right approximation.
    pub fn upsilon_preimage(&self, f: &FunctorMod) -> Result<MonoPair> {
        self.require(f, Flavor::Plain, Variance::Contravariant)?;
        let x = v(f)?;
        let (_, incl) = self.m.right_approximation(&x).map.kernel();
        let out = MonoPair::new(&self.m, incl)?;
        if !self.upsilon(&out)?.is_isomorphic(f)? {
            return Err(Error::Internal("Υ of the constructed preimage differs".into()));
        }
        Ok(out)
    }

    /// Indecomposable modules over an Auslander algebra, as functors.
    pub fn indecomposable_functors(&self, gamma: &Arc<AuslanderAlgebra>, caps: Caps) -> Result<Vec<FunctorMod>> {
        if gamma.num_objects() == 0 {
            return Ok(Vec::new());
        }
        let cat = Catalog::enumerate(gamma.algebra(), caps)?;
        Ok(cat.modules().iter().map(|m| FunctorMod::from_carrier(gamma, m.clone())).collect())
    }

    /// An epi `[g π]: M₁ ⊕ P(M₂) -> M₂` with `Θ([g π]) ≅ F`.
    pub fn theta_preimage(&self, f: &FunctorMod) -> Result<EpiPair> {
        self.require(f, Flavor::Stable, Variance::Contravariant)?;
        let g = presentation(f)?.map;
        let cover = projective_cover(g.target());
        let (sum, _, _) = FdModule::direct_sum(&[g.source().clone(), cover.module.clone()], self.base());
        let epi = g.hstack(&cover.map, &sum);
        let out = EpiPair::new(&self.m, epi)?;
        if !self.theta(&out)?.is_isomorphic(f)? {
            return Err(Error::Internal("Θ of the constructed preimage differs".into()));
        }
        Ok(out)
    }

    /// A mono whose `Ψ` is `F`: the first map of the n-kernel of a Θ-preimage.
    pub fn psi_preimage(&self, f: &FunctorMod) -> Result<MonoPair> {
        let epi = self.theta_preimage(f)?;
        let seq = self.n_kernel(&epi)?;
        let out = MonoPair::new(&self.m, seq.maps[0].clone())?;
        if !self.psi(&out)?.is_isomorphic(f)? {
            return Err(Error::Internal("Ψ of the constructed preimage differs".into()));
        }
        Ok(out)
    }

    /// A mono `[f; ι]: M₁ -> M₂ ⊕ I(M₁)` whose `Φ` is `F`.
    pub fn phi_preimage(&self, f: &FunctorMod) -> Result<MonoPair> {
        if !self.self_injective {
            return Err(Error::NotSelfInjective);
        }
        self.require(f, Flavor::Stable, Variance::Contravariant)?;
        let g = presentation(f)?.map;
        let env = injective_envelope(g.source());
        let (sum, _, _) = FdModule::direct_sum(&[g.target().clone(), env.module.clone()], self.base());
        let mono = g.vstack(&env.map, &sum);
        let out = MonoPair::new(&self.m, mono)?;
        if !self.phi(&out)?.is_isomorphic(f)? {
            return Err(Error::Internal("Φ of the constructed preimage differs".into()));
        }
        Ok(out)
    }

    // ---- Σ

    /// `Σ = Ψ′ ∘ Θ⁻¹: mod-M̲ -> M̄-mod`.
    pub fn sigma(&self, f: &FunctorMod) -> Result<FunctorMod> {
        self.require(f, Flavor::Stable, Variance::Contravariant)?;
        if f.is_zero() {
            return Ok(FunctorMod::zero(&self.costable_co()?));
        }
        self.psi_prime(&self.theta_preimage(f)?)
    }

    /// `Σ⁻¹ = Ψ ∘ Θ′⁻¹: M̄-mod -> mod-M̲`, through the mono `[u; ι]`.
    pub fn sigma_inverse(&self, g: &FunctorMod) -> Result<FunctorMod> {
        self.require(g, Flavor::Costable, Variance::Covariant)?;
        if g.is_zero() {
            return Ok(FunctorMod::zero(&self.stable()?));
        }
        let u = presentation(g)?.map;
        let env = injective_envelope(u.source());
        let (sum, _, _) = FdModule::direct_sum(&[u.target().clone(), env.module.clone()], self.base());
        let mono = MonoPair::new(&self.m, u.vstack(&env.map, &sum))?;
        self.psi(&mono)
    }

    // ---- τₙ

    /// `τₙ X = τ Ω^{n-1} X`, as the matching generator.
    pub fn tau_n_direct(&self, x: &FdModule) -> Result<FdModule> {
        let t = ar_translate(&syzygy_n(x, self.n() - 1));
        let k = self
            .m
            .position_of(&t)
            .ok_or_else(|| Error::RepresentabilityFailure("τΩ^{n-1}X is not an indecomposable generator".into()))?;
        Ok(self.m.generator(k).clone())
    }

    /// The generator `T` with `D Σ(M̲(-, X)) ≅ M̄(-, T)`.
    pub fn tau_n_via_sigma(&self, x: &FdModule) -> Result<FdModule> {
        let s = self.sigma(&yoneda(&self.stable()?, x))?;
        let contra = self.costable_contra()?;
        let dual = FunctorMod::from_carrier(&contra, s.carrier().dual().with_algebra(contra.algebra()));
        for &k in contra.objects() {
            let t = self.m.generator(k);
            if yoneda(&contra, t).is_isomorphic(&dual)? {
                return Ok(t.clone());
            }
        }
        Err(Error::RepresentabilityFailure("no generator represents D Σ M̲(-, X)".into()))
    }

    fn require(&self, f: &FunctorMod, flavor: Flavor, variance: Variance) -> Result<()> {
        if f.flavor() != flavor || f.variance() != variance {
            return Err(Error::Input(format!("expected a {flavor:?} {variance:?} functor")));
        }
        Ok(())
    }

    // ---- morphisms

    /// `Υ(α)`: induced by `α₂` on the targets.
    pub fn upsilon_map(&self, x: &MonoPair, y: &MonoPair, a: &SMorphism) -> Result<ModuleHom> {
        induced_map(&self.upsilon(x)?, &self.upsilon(y)?, &a.a2)
    }

    /// `Θ(α)`: induced by `α₂` on the targets.
    pub fn theta_map(&self, x: &EpiPair, y: &EpiPair, a: &SMorphism) -> Result<ModuleHom> {
        induced_map(&self.theta(x)?, &self.theta(y)?, &a.a2)
    }

    /// `Φ(α)`: `Υ(α)` pushed to the quotients by the counits.
    pub fn phi_map(&self, x: &MonoPair, y: &MonoPair, a: &SMorphism) -> Result<ModuleHom> {
        let (px, ux, qx) = self.phi_with_map(x)?;
        let (py, uy, qy) = self.phi_with_map(y)?;
        let u = induced_map(&ux, &uy, &a.a2)?;
        let stable = self.stable()?;
        let p = self.base().field();
        let blocks: Vec<Matrix> = stable
            .objects()
            .iter()
            .map(|&k| {
                let section = qx
                    .block(k)
                    .solve(&Matrix::identity(p, qx.target().dims()[k]))
                    .expect("shapes agree")
                    .expect("quotient map is surjective");
                qy.block(k).mul(u.block(k)).mul(&section)
            })
            .collect();
        ModuleHom::new(px.carrier().clone(), py.carrier().clone(), blocks)
    }

    /// Lifts a square `(α₀, α₁)` along two n-exact sequences.
    pub fn lift_along(&self, sx: &NExactSeq, sy: &NExactSeq, a: &SMorphism) -> Result<Vec<ModuleHom>> {
        let mut out = vec![a.a1.clone(), a.a2.clone()];
        for k in 1..sx.maps.len() {
            let target = sy.maps[k].compose(&out[k]);
            let space = hom_space(&sx.objects[k + 1], &sy.objects[k + 1]);
            let homs: Vec<ModuleHom> = space.basis().iter().map(|h| h.compose(&sx.maps[k])).collect();
            let c = solve_combination(&homs, &target)
                .ok_or_else(|| Error::Internal("square does not extend along the n-cokernels".into()))?;
            out.push(space.combine(&c));
        }
        Ok(out)
    }

    /// `Ψ(α)`: induced by the lift at the last term of the n-cokernels.
    pub fn psi_map(&self, x: &MonoPair, y: &MonoPair, a: &SMorphism) -> Result<ModuleHom> {
        let (sx, sy) = (self.n_cokernel(x)?, self.n_cokernel(y)?);
        let lifts = self.lift_along(&sx, &sy, a)?;
        let fx = self.cats.contravariant_defect(&sx)?;
        let fy = self.cats.contravariant_defect(&sy)?;
        induced_map(&fx, &fy, lifts.last().expect("nonempty"))
    }
}

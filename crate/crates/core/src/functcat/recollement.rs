use std::sync::Arc;

use super::auslander::{AuslanderAlgebra, Flavor, Variance};
use super::functor::{functor_coker, restrict, FunctorMod};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modcat::{
    generator_vector, hom_from_generators, projective_cover, syzygy_sequence, FdModule, FreeMap, ModuleHom,
};

/// Minimal projective presentation of a functor, realized as a map in `add M`:
/// `M¹ -> M⁰` for contravariant functors (`Hom(-, M¹) -> Hom(-, M⁰) -> F -> 0`),
/// `M⁰ -> M¹` for covariant ones (`Hom(M¹, -) -> Hom(M⁰, -) -> F -> 0`).
#[derive(Clone, Debug)]
pub struct Presentation {
    /// Objects (vertices of Γ) of the summands of `M¹` and `M⁰`.
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub map: ModuleHom,
    /// `M⁰` with its summand projections.
    pub tgt_proj: Vec<ModuleHom>,
    /// The projective cover `Hom(-, M⁰) -> F` over Γ.
    pub cover: ModuleHom,
}

fn sum_of_objects(gamma: &AuslanderAlgebra, vs: &[usize]) -> (FdModule, Vec<ModuleHom>, Vec<ModuleHom>) {
    let parts: Vec<FdModule> = vs.iter().map(|&v| gamma.object_module(v).clone()).collect();
    let base = gamma.subcat().catalog().algebra();
    FdModule::direct_sum(&parts, base)
}

/// Minimal projective presentation of a functor; `functor_coker` of its map recovers `F`.
pub fn presentation(f: &FunctorMod) -> Result<Presentation> {
    let gamma = f.gamma();
    let contra = gamma.variance() == Variance::Contravariant;
    let alg = gamma.algebra();
    let (omega, incl, cover0) = syzygy_sequence(f.carrier());
    let cover1 = projective_cover(&omega);
    if cover0.vertices.len() != f.carrier().top_dims().iter().sum::<usize>() {
        return Err(Error::NotMinimal);
    }
    let d = incl.compose(&cover1.map);
    let free = FreeMap::from_hom(alg, &cover1.vertices, &cover0.vertices, &d);
    let (src_mod, src_incl, src_proj) = sum_of_objects(gamma, &cover1.vertices);
    let (tgt_mod, tgt_incl, tgt_proj) = sum_of_objects(gamma, &cover0.vertices);
    let mut map = if contra { ModuleHom::zero(&src_mod, &tgt_mod) } else { ModuleHom::zero(&tgt_mod, &src_mod) };
    for (k, &t) in cover0.vertices.iter().enumerate() {
        for (l, &s) in cover1.vertices.iter().enumerate() {
            let x = &free.entries[k][l];
            let (from, to) = if contra { (s, t) } else { (t, s) };
            let mut h = ModuleHom::zero(gamma.object_module(from), gamma.object_module(to));
            for &b in alg.corner_basis(t, s) {
                if x[b] != 0 {
                    h = h.add(&gamma.lift(b).scale(x[b]));
                }
            }
            let term = if contra {
                tgt_incl[k].compose(&h).compose(&src_proj[l])
            } else {
                src_incl[l].compose(&h).compose(&tgt_proj[k])
            };
            map = map.add(&term);
        }
    }
    Ok(Presentation {
        src: cover1.vertices,
        tgt: cover0.vertices,
        map,
        tgt_proj,
        cover: cover0.map,
    })
}

/// `v(F) = coker(M¹ -> M⁰)` for a plain contravariant functor.
pub fn v(f: &FunctorMod) -> Result<FdModule> {
    if f.flavor() != Flavor::Plain || f.variance() != Variance::Contravariant {
        return Err(Error::Input("v is defined on plain contravariant functors".into()));
    }
    Ok(presentation(f)?.map.cokernel().0)
}

/// `v_λ(X) = coker(Hom(-, Q₁) -> Hom(-, Q₀))` for the minimal presentation `Q₁ -> Q₀ -> X`.
pub fn v_lambda(plain: &Arc<AuslanderAlgebra>, x: &FdModule) -> FunctorMod {
    let (omega, incl, _) = syzygy_sequence(x);
    let cover1 = projective_cover(&omega);
    functor_coker(plain, &incl.compose(&cover1.map))
}

/// The counit `v_λ v(F) -> F` together with its source.
pub fn counit(f: &FunctorMod) -> Result<(FunctorMod, ModuleHom)> {
    let gamma = f.gamma();
    if gamma.flavor() != Flavor::Plain || gamma.variance() != Variance::Contravariant {
        return Err(Error::Input("the counit is defined on plain contravariant functors".into()));
    }
    let pres = presentation(f)?;
    let (x, rho) = pres.map.cokernel();
    let base = x.algebra().clone();
    let p = base.field();
    let (omega, incl, q0) = syzygy_sequence(&x);
    let q1 = projective_cover(&omega);
    let beta = incl.compose(&q1.map);
    // α₀: Q₀ -> M⁰ with ρ α₀ = π
    let images: Vec<Vec<u32>> = (0..q0.vertices.len())
        .map(|l| {
            let w = q0.vertices[l];
            let g = generator_vector(&base, &q0.vertices, l);
            let target = q0.map.block(w).mul(&Matrix::column_vector(p, &g));
            rho.block(w).solve(&target).expect("shapes agree").expect("ρ is surjective").flatten()
        })
        .collect();
    let alpha0 = hom_from_generators(&q0.module, &q0.vertices, pres.map.target(), &images);
    let source = functor_coker(gamma, &beta);
    let values = source.value_spaces().expect("cokernel functors keep their values");
    let alg = gamma.algebra();
    let blocks: Vec<Matrix> = (0..alg.num_vertices())
        .map(|c| {
            let cols: Vec<Vec<u32>> = values[c]
                .reps()
                .iter()
                .map(|h| {
                    let composite = alpha0.compose(h);
                    let mut vec = Vec::new();
                    for (k, &t) in pres.tgt.iter().enumerate() {
                        let comp = pres.tgt_proj[k].compose(&composite);
                        vec.extend(gamma.element_in_corner(c, t, &comp));
                    }
                    pres.cover.block(c).mul(&Matrix::column_vector(p, &vec)).flatten()
                })
                .collect();
            Matrix::from_columns(p, f.carrier().dims()[c], &cols)
        })
        .collect();
    let eta = ModuleHom::new(source.carrier().clone(), f.carrier().clone(), blocks)?;
    Ok((source, eta))
}

/// `i_λ(F) = coker(η_F)`, read over the stable algebra.
pub fn i_lambda(f: &FunctorMod, stable: &Arc<AuslanderAlgebra>) -> Result<FunctorMod> {
    Ok(i_lambda_with_map(f, stable)?.0)
}

/// `i_λ(F)` together with the quotient map `F -> i_λ(F)` of plain carriers.
pub fn i_lambda_with_map(f: &FunctorMod, stable: &Arc<AuslanderAlgebra>) -> Result<(FunctorMod, ModuleHom)> {
    let (_, eta) = counit(f)?;
    let (q, proj) = eta.cokernel();
    Ok((restrict(&FunctorMod::from_carrier(f.gamma(), q), stable)?, proj))
}

/// Largest quotient of `F` vanishing on the projective generators.
pub fn kill_projectives(f: &FunctorMod, stable: &Arc<AuslanderAlgebra>) -> Result<FunctorMod> {
    let gamma = f.gamma();
    let p = gamma.algebra().field();
    let gens: Vec<Matrix> = (0..gamma.num_objects())
        .map(|v| {
            let d = f.carrier().dims()[v];
            if gamma.subcat().is_projective_generator(gamma.objects()[v]) {
                Matrix::identity(p, d)
            } else {
                Matrix::zeros(p, d, 0)
            }
        })
        .collect();
    let (_, incl) = f.carrier().generated_submodule(gens);
    let spans: Vec<Matrix> = (0..gamma.num_objects()).map(|v| incl.block(v).clone()).collect();
    let (q, _) = f.carrier().quotient(&spans);
    restrict(&FunctorMod::from_carrier(gamma, q), stable)
}

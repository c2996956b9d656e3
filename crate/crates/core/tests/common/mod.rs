#![allow(dead_code)]

use std::sync::Arc;

use monocat::algebra::{presets, FdAlgebra};
use monocat::cluster::{search_n_cluster_tilting, ClusterSubcat};
use monocat::linalg::Matrix;
use monocat::functcat::{counit, functor_coker, i_lambda, inflate, v, yoneda, FunctorCats};
use monocat::modcat::{
    ar_translate, ar_translate_inv, decompose, free_module, hom_space, is_isomorphic, is_projective, Caps, Catalog,
    FdModule, ModuleHom,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The anchor algebras: `k A₃/rad²`, the two-cycle modulo length-two paths, `k[x]/(x²)`.
pub fn anchors() -> Vec<Arc<FdAlgebra>> {
    vec![presets::a3r2(), presets::ppa2(), presets::truncated_polynomial(2)]
}

pub fn catalog(alg: &Arc<FdAlgebra>) -> Arc<Catalog> {
    Arc::new(Catalog::enumerate(alg, Caps::default()).unwrap())
}

pub fn a3r2_m3() -> ClusterSubcat {
    ClusterSubcat::from_names(catalog(&presets::a3r2()), &["P1", "P2", "S1", "S3"], 2).unwrap()
}

pub fn ppa2_hits() -> Vec<ClusterSubcat> {
    search_n_cluster_tilting(&catalog(&presets::ppa2()), 2).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(alg: &FdAlgebra, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let p = alg.field();
    let entries: Vec<u32> = (0..rows * cols).map(|_| rng.gen_range(0..p.p())).collect();
    Matrix::from_fn(p, rows, cols, |i, j| entries[i * cols + j])
}

/// A quotient of a free module on up to three random vertices by the
/// submodule generated by up to two random elements.
pub fn random_module(alg: &Arc<FdAlgebra>, rng: &mut ChaCha8Rng) -> FdModule {
    let nv = alg.num_vertices();
    let k = rng.gen_range(1..=3);
    let vertices: Vec<usize> = (0..k).map(|_| rng.gen_range(0..nv)).collect();
    let free = free_module(alg, &vertices);
    let gens: Vec<Matrix> = (0..nv)
        .map(|v| {
            let cols = if free.dims()[v] > 0 { rng.gen_range(0..=1) } else { 0 };
            random_matrix(alg, rng, free.dims()[v], cols)
        })
        .collect();
    let (_, incl) = free.generated_submodule(gens);
    free.quotient(incl.blocks()).0
}

/// A random element of `Hom(x, y)`.
pub fn random_hom(x: &FdModule, y: &FdModule, rng: &mut ChaCha8Rng) -> ModuleHom {
    let space = hom_space(x, y);
    let p = x.field().p();
    let c: Vec<u32> = (0..space.dim()).map(|_| rng.gen_range(0..p)).collect();
    space.combine(&c)
}

/// A direct sum of one or two random generators of `m`.
pub fn random_object(m: &ClusterSubcat, rng: &mut ChaCha8Rng) -> FdModule {
    let k = rng.gen_range(1..=2);
    let parts: Vec<FdModule> = (0..k).map(|_| m.generator(rng.gen_range(0..m.len())).clone()).collect();
    FdModule::sum_of(&parts, m.catalog().algebra())
}

pub type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Rank–nullity, `A · null(A) = 0`, row rank = column rank, solving `Ax = Ay`,
/// `(AB)ᵀ = BᵀAᵀ`, and `A A⁻¹ = I` for a square `A`.
pub fn check_linalg(a: &Matrix, b: &Matrix, y: &Matrix) -> Check {
    let null = a.nullspace();
    ensure(a.rank() + null.cols() == a.cols(), || format!("rank-nullity fails for {a:?}"))?;
    ensure(a.mul(&null).is_zero(), || "A·null(A) ≠ 0".into())?;
    ensure(a.rank() == a.transpose().rank(), || "row rank ≠ column rank".into())?;
    let rhs = a.mul(y);
    let sol = a.solve(&rhs).map_err(|e| e.to_string())?.ok_or("consistent system unsolved")?;
    ensure(a.mul(&sol) == rhs, || "solution does not solve".into())?;
    if a.cols() == b.rows() {
        ensure(a.mul(b).transpose() == b.transpose().mul(&a.transpose()), || "(AB)ᵀ ≠ BᵀAᵀ".into())?;
    }
    if a.is_square() {
        match a.inverse() {
            Some(inv) => ensure(a.mul(&inv) == Matrix::identity(a.field(), a.rows()), || "A·A⁻¹ ≠ I".into())?,
            None => ensure(a.rank() < a.rows(), || "full-rank matrix without inverse".into())?,
        }
    }
    Ok(())
}

/// Decomposing the sum of the summands returns the same summands.
pub fn check_krull_schmidt(x: &FdModule) -> Check {
    let parts = decompose(x).map_err(|e| e.to_string())?.modules();
    ensure(parts.iter().map(FdModule::dim).sum::<usize>() == x.dim(), || "summand dimensions".into())?;
    for part in &parts {
        ensure(decompose(part).map_err(|e| e.to_string())?.len() == 1, || "summand decomposes".into())?;
    }
    let again = FdModule::sum_of(&parts, x.algebra());
    ensure(is_isomorphic(&again, x).map_err(|e| e.to_string())?, || "sum of summands is not X".into())?;
    ensure(decompose(&again).map_err(|e| e.to_string())?.len() == parts.len(), || "summand count changes".into())
}

/// `τ⁻τ Y ≅ Y` for every non-projective indecomposable summand `Y`.
pub fn check_translate(x: &FdModule) -> Check {
    for y in decompose(x).map_err(|e| e.to_string())?.modules() {
        if !is_projective(&y) {
            let back = ar_translate_inv(&ar_translate(&y));
            ensure(is_isomorphic(&back, &y).map_err(|e| e.to_string())?, || format!("τ⁻τ Y ≠ Y for dims {:?}", y.dims()))?;
        }
    }
    Ok(())
}

/// `0 -> K -> v_λ v F -> F -> C -> 0` with `K`, `C` vanishing at the projective
/// generators, `C ≅ i i_λ F`, and `v` unchanged, for `F = M(-, X)` and a random cokernel functor.
pub fn check_recollement(m: &ClusterSubcat, seed: u64) -> Check {
    let cats = FunctorCats::new(m);
    let (plain, stable) = (cats.plain().map_err(|e| e.to_string())?, cats.stable().map_err(|e| e.to_string())?);
    let mut r = rng(seed);
    let x = random_module(m.catalog().algebra(), &mut r);
    let (a, b) = (random_object(m, &mut r), random_object(m, &mut r));
    let g = random_hom(&a, &b, &mut r);
    for f in [yoneda(&plain, &x), functor_coker(&plain, &g)] {
        let (src, eta) = counit(&f).map_err(|e| e.to_string())?;
        let (ker, _) = eta.kernel();
        let (cok, _) = eta.cokernel();
        ensure(ker.dim() + f.carrier().dim() == src.carrier().dim() + cok.dim(), || "dimensions".into())?;
        let il = inflate(&i_lambda(&f, &stable).map_err(|e| e.to_string())?, &plain);
        ensure(is_isomorphic(&cok, il.carrier()).map_err(|e| e.to_string())?, || "coker ε ≠ i i_λ F".into())?;
        for k in 0..m.len() {
            if m.is_projective_generator(k) {
                let v = plain.vertex_of(k).expect("object");
                ensure(ker.dims()[v] == 0 && cok.dims()[v] == 0, || "kernel or cokernel meets a projective".into())?;
            }
        }
        let (vf, vs) = (v(&f).map_err(|e| e.to_string())?, v(&src).map_err(|e| e.to_string())?);
        ensure(is_isomorphic(&vf, &vs).map_err(|e| e.to_string())?, || "v changes along ε".into())?;
    }
    Ok(())
}

use std::sync::Arc;

use super::hom::{hom_space, HomSpace};
use super::module::{FdModule, ModuleHom};
use crate::algebra::FdAlgebra;
use crate::linalg::Matrix;

/// Position of basis element `b` within its corner list.
fn corner_position(alg: &FdAlgebra, b: usize) -> usize {
    let (a, c) = alg.corner(b);
    alg.corner_basis(a, c).iter().position(|&x| x == b).expect("element lies in its corner")
}

/// `P_i = e_i A`.
pub fn indecomposable_projective(alg: &Arc<FdAlgebra>, i: usize) -> FdModule {
    let p = alg.field();
    let nv = alg.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|c| alg.corner_basis(i, c).len()).collect();
    let action = (0..alg.dim())
        .map(|b| {
            let (a, c) = alg.corner(b);
            let mut m = Matrix::zeros(p, dims[c], dims[a]);
            for (col, &x) in alg.corner_basis(i, a).iter().enumerate() {
                for &(y, z) in alg.product(x, b) {
                    m.set(corner_position(alg, y), col, z);
                }
            }
            m
        })
        .collect();
    FdModule::new_unchecked(alg.clone(), dims, action)
}

pub fn indecomposable_projectives(alg: &Arc<FdAlgebra>) -> Vec<FdModule> {
    (0..alg.num_vertices()).map(|i| indecomposable_projective(alg, i)).collect()
}

/// `I_i = D(e_i A^op)`.
pub fn indecomposable_injective(alg: &Arc<FdAlgebra>, i: usize) -> FdModule {
    indecomposable_projective(&alg.opposite(), i).dual_to(alg)
}

pub fn indecomposable_injectives(alg: &Arc<FdAlgebra>) -> Vec<FdModule> {
    (0..alg.num_vertices()).map(|i| indecomposable_injective(alg, i)).collect()
}

/// `⊕_l P_{vertices[l]}` in standard layout.
pub fn free_module(alg: &Arc<FdAlgebra>, vertices: &[usize]) -> FdModule {
    let parts: Vec<FdModule> = vertices.iter().map(|&v| indecomposable_projective(alg, v)).collect();
    FdModule::sum_of(&parts, alg)
}

/// Coordinate vector (at vertex `vertices[l]`) of the generator `e_{vertices[l]}` of summand `l`.
pub fn generator_vector(alg: &FdAlgebra, vertices: &[usize], l: usize) -> Vec<u32> {
    let v = vertices[l];
    let size: usize = vertices.iter().map(|&u| alg.corner_basis(u, v).len()).sum();
    let off: usize = vertices[..l].iter().map(|&u| alg.corner_basis(u, v).len()).sum();
    let mut g = vec![0u32; size];
    g[off + corner_position(alg, alg.idempotent(v))] = 1;
    g
}

/// The map `⊕ P_{v_l} -> T` sending the generator of summand `l` to `images[l] ∈ T e_{v_l}`.
pub fn hom_from_generators(free: &FdModule, vertices: &[usize], target: &FdModule, images: &[Vec<u32>]) -> ModuleHom {
    let alg = free.algebra();
    let p = alg.field();
    let blocks = (0..alg.num_vertices())
        .map(|c| {
            let mut cols: Vec<Vec<u32>> = Vec::new();
            for (l, &v) in vertices.iter().enumerate() {
                let g = Matrix::column_vector(p, &images[l]);
                for &x in alg.corner_basis(v, c) {
                    cols.push(target.act(x).mul(&g).flatten());
                }
            }
            Matrix::from_columns(p, target.dims()[c], &cols)
        })
        .collect();
    ModuleHom::new_unchecked(free.clone(), target.clone(), blocks)
}

/// Projective cover `π: P -> X` with `P = ⊕ P_{vertices[l]}`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: FdModule,
    pub vertices: Vec<usize>,
    pub map: ModuleHom,
}

pub fn projective_cover(x: &FdModule) -> Cover {
    let alg = x.algebra();
    let rad = x.radical_spans();
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let comp = r.complement_basis();
        for g in comp.columns() {
            vertices.push(v);
            images.push(g);
        }
    }
    let module = free_module(alg, &vertices);
    let map = hom_from_generators(&module, &vertices, x, &images);
    Cover { module, vertices, map }
}

/// `0 -> ΩX -> P -> X -> 0`: returns `ΩX`, its inclusion, and the cover.
pub fn syzygy_sequence(x: &FdModule) -> (FdModule, ModuleHom, Cover) {
    let cover = projective_cover(x);
    let (k, incl) = cover.map.kernel();
    (k, incl, cover)
}

pub fn syzygy(x: &FdModule) -> FdModule {
    syzygy_sequence(x).0
}

pub fn syzygy_n(x: &FdModule, n: usize) -> FdModule {
    (0..n).fold(x.clone(), |m, _| syzygy(&m))
}

/// Injective envelope `ι: X -> I` with `I = ⊕ I_{vertices[l]}`.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub module: FdModule,
    pub vertices: Vec<usize>,
    pub map: ModuleHom,
}

pub fn injective_envelope(x: &FdModule) -> Envelope {
    let home = x.algebra();
    let cover = projective_cover(&x.dual());
    let module = cover.module.dual_to(home);
    let map = cover.map.dual_between(x, &module);
    Envelope { module, vertices: cover.vertices, map }
}

/// `0 -> X -> I -> Ω⁻X -> 0`: returns `Ω⁻X`, the projection, and the envelope.
pub fn cosyzygy_sequence(x: &FdModule) -> (FdModule, ModuleHom, Envelope) {
    let env = injective_envelope(x);
    let (c, proj) = env.map.cokernel();
    (c, proj, env)
}

pub fn cosyzygy(x: &FdModule) -> FdModule {
    cosyzygy_sequence(x).0
}

pub fn cosyzygy_n(x: &FdModule, n: usize) -> FdModule {
    (0..n).fold(x.clone(), |m, _| cosyzygy(&m))
}

pub fn is_projective(x: &FdModule) -> bool {
    projective_cover(x).module.dim() == x.dim()
}

pub fn is_injective(x: &FdModule) -> bool {
    injective_envelope(x).module.dim() == x.dim()
}

/// Every indecomposable projective is injective.
pub fn is_self_injective(alg: &Arc<FdAlgebra>) -> bool {
    indecomposable_projectives(alg).iter().all(is_injective)
}

/// `dim Ext^i(X, Y)` from a minimal projective resolution of `X`.
pub fn ext_dim(i: usize, x: &FdModule, y: &FdModule) -> usize {
    if i == 0 {
        return hom_space(x, y).dim();
    }
    let w = syzygy_n(x, i - 1);
    let (omega, incl, cover) = syzygy_sequence(&w);
    let target = hom_space(&omega, y);
    if target.dim() == 0 {
        return 0;
    }
    let restricted: Vec<ModuleHom> = hom_space(&cover.module, y).basis().iter().map(|h| h.compose(&incl)).collect();
    target.dim() - target.span_rank(&restricted)
}

/// Spanning set of the maps `X -> Y` factoring through a projective.
pub fn projective_ideal(x: &FdModule, y: &FdModule) -> Vec<ModuleHom> {
    let cover = projective_cover(y);
    hom_space(x, &cover.module).basis().iter().map(|g| cover.map.compose(g)).collect()
}

/// Spanning set of the maps `X -> Y` factoring through an injective.
pub fn injective_ideal(x: &FdModule, y: &FdModule) -> Vec<ModuleHom> {
    let env = injective_envelope(x);
    hom_space(&env.module, y).basis().iter().map(|h| h.compose(&env.map)).collect()
}

/// `Hom(X, Y)` together with the dimension of the projective-factoring subspace.
pub fn stable_hom(x: &FdModule, y: &FdModule) -> (HomSpace, usize) {
    let space = hom_space(x, y);
    let r = space.span_rank(&projective_ideal(x, y));
    (space, r)
}

pub fn stable_hom_dim(x: &FdModule, y: &FdModule) -> usize {
    let (space, r) = stable_hom(x, y);
    space.dim() - r
}

pub fn costable_hom_dim(x: &FdModule, y: &FdModule) -> usize {
    let space = hom_space(x, y);
    space.dim() - space.span_rank(&injective_ideal(x, y))
}

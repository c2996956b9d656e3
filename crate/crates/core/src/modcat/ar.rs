use std::sync::Arc;

use super::decompose::local_radical;
use super::hom::hom_space;
use super::module::{FdModule, ModuleHom};
use super::proj::{free_module, generator_vector, hom_from_generators, syzygy_sequence};
use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A map `⊕ P_{src[l]} -> ⊕ P_{tgt[k]}` as a matrix of algebra elements,
/// `entries[k][l] ∈ e_{tgt[k]} A e_{src[l]}` (dense coordinates).
#[derive(Clone, Debug)]
pub struct FreeMap {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub entries: Vec<Vec<Vec<u32>>>,
}

impl FreeMap {
    /// Reads off the matrix of a hom between standard free modules.
    pub fn from_hom(alg: &FdAlgebra, src: &[usize], tgt: &[usize], h: &ModuleHom) -> FreeMap {
        let mut entries = vec![vec![vec![0u32; alg.dim()]; src.len()]; tgt.len()];
        for (l, &s) in src.iter().enumerate() {
            let g = generator_vector(alg, src, l);
            let img = h.block(s).mul(&Matrix::column_vector(alg.field(), &g)).flatten();
            let mut off = 0;
            for (k, &t) in tgt.iter().enumerate() {
                for &b in alg.corner_basis(t, s) {
                    entries[k][l][b] = img[off];
                    off += 1;
                }
            }
        }
        FreeMap { src: src.to_vec(), tgt: tgt.to_vec(), entries }
    }

    /// Realizes the matrix as a hom over `alg` (which must share the basis).
    pub fn to_hom(&self, alg: &Arc<FdAlgebra>) -> ModuleHom {
        let source = free_module(alg, &self.src);
        let target = free_module(alg, &self.tgt);
        let images: Vec<Vec<u32>> = (0..self.src.len())
            .map(|l| {
                let s = self.src[l];
                let mut g = Vec::new();
                for (k, &t) in self.tgt.iter().enumerate() {
                    for &b in alg.corner_basis(t, s) {
                        g.push(self.entries[k][l][b]);
                    }
                }
                g
            })
            .collect();
        hom_from_generators(&source, &self.src, &target, &images)
    }

    /// `Hom_A(-, A)` applied to the map, read over `A^op`.
    pub fn transpose(&self) -> FreeMap {
        let entries = (0..self.src.len())
            .map(|l| (0..self.tgt.len()).map(|k| self.entries[k][l].clone()).collect())
            .collect();
        FreeMap { src: self.tgt.clone(), tgt: self.src.clone(), entries }
    }
}

/// Minimal presentation `P1 -> P0 -> X -> 0` as a free map.
pub fn minimal_presentation(x: &FdModule) -> FreeMap {
    let alg = x.algebra();
    let (omega, incl, cover0) = syzygy_sequence(x);
    let cover1 = super::proj::projective_cover(&omega);
    let f = incl.compose(&cover1.map);
    FreeMap::from_hom(alg, &cover1.vertices, &cover0.vertices, &f)
}

/// Auslander–Bridger transpose, a module over the opposite algebra.
pub fn transpose(x: &FdModule) -> FdModule {
    let op = x.algebra().opposite();
    let pres = minimal_presentation(x).transpose();
    pres.to_hom(&op).cokernel().0
}

/// `τ = D Tr`.
pub fn ar_translate(x: &FdModule) -> FdModule {
    transpose(x).dual_to(x.algebra())
}

/// `τ⁻ = Tr D`.
pub fn ar_translate_inv(x: &FdModule) -> FdModule {
    transpose(&x.dual()).with_algebra(x.algebra())
}

/// `0 -> τX -> E -> X -> 0`.
#[derive(Clone, Debug)]
pub struct ArSequence {
    pub left: FdModule,
    pub middle: FdModule,
    pub right: FdModule,
    pub incl: ModuleHom,
    pub proj: ModuleHom,
}

/// Almost split sequence ending at an indecomposable non-projective `X`.
pub fn ar_sequence(x: &FdModule) -> Result<ArSequence> {
    let alg = x.algebra();
    let p = x.field();
    let tau = ar_translate(x);
    if tau.is_zero() {
        return Err(Error::Hypothesis("AR sequence requested for a projective module".into()));
    }
    let rad = local_radical(x)
        .ok_or_else(|| Error::Hypothesis("AR sequence requires an indecomposable with split local End".into()))?;
    let (omega, incl, cover) = syzygy_sequence(x);
    let space = hom_space(&omega, &tau);
    let boundary: Vec<ModuleHom> = hom_space(&cover.module, &tau).basis().iter().map(|h| h.compose(&incl)).collect();
    let dim = space.dim();
    let bmat = if boundary.is_empty() { Matrix::zeros(p, dim, 0) } else { space.coordinate_matrix(&boundary) };
    let bbasis = super::module::basis_of(&bmat);
    // projection onto a complement of the boundaries
    let comp = bbasis.complement_basis();
    let full = bbasis.hstack(&comp);
    let quot = full.inverse().expect("complement completes a basis").block(bbasis.cols(), 0, comp.cols(), dim);
    if comp.cols() == 0 {
        return Err(Error::NotAlmostSplit("Ext¹(X, τX) vanishes".into()));
    }
    // lift each radical endomorphism to the syzygy
    let mut stacked = Matrix::zeros(p, 0, dim);
    for r in &rad {
        let images: Vec<Vec<u32>> = (0..cover.vertices.len())
            .map(|l| {
                let v = cover.vertices[l];
                let g = generator_vector(alg, &cover.vertices, l);
                let target = r.block(v).mul(&cover.map.block(v).mul(&Matrix::column_vector(p, &g)));
                cover.map.block(v).solve(&target).expect("shapes agree").expect("cover is surjective").flatten()
            })
            .collect();
        let lift = hom_from_generators(&cover.module, &cover.vertices, &cover.module, &images);
        let moved = lift.compose(&incl);
        let restricted_blocks: Vec<Matrix> = (0..alg.num_vertices())
            .map(|v| {
                if omega.dims()[v] == 0 {
                    return Matrix::zeros(p, 0, 0);
                }
                incl.block(v).solve(moved.block(v)).expect("shapes agree").expect("lift preserves the syzygy")
            })
            .collect();
        let restricted = ModuleHom::new_unchecked(omega.clone(), omega.clone(), restricted_blocks);
        let cols: Vec<Vec<u32>> = space
            .basis()
            .iter()
            .map(|h| space.coords(&h.compose(&restricted)).expect("composite lies in the space"))
            .collect();
        let act = Matrix::from_columns(p, dim, &cols);
        stacked = stacked.vstack(&quot.mul(&act));
    }
    let candidates = if stacked.rows() == 0 { Matrix::identity(p, dim) } else { stacked.nullspace() };
    let xi = candidates
        .columns()
        .into_iter()
        .find(|c| {
            let q = quot.mul(&Matrix::column_vector(p, c));
            !q.is_zero()
        })
        .ok_or_else(|| Error::NotAlmostSplit("no class annihilated by rad End(X)".into()))?;
    let h = space.combine(&xi);
    // pushout of 0 -> ΩX -> P -> X -> 0 along h
    let (sum, sum_incl, sum_proj) = FdModule::direct_sum(&[cover.module.clone(), tau.clone()], alg);
    let stacked_map = incl.vstack(&h.neg(), &sum);
    let (middle, q) = stacked_map.cokernel();
    let left_map = q.compose(&sum_incl[1]);
    // E -> X induced by (π, 0)
    let to_x = cover.map.compose(&sum_proj[0]);
    let right_blocks: Vec<Matrix> = (0..alg.num_vertices())
        .map(|v| {
            let section = q
                .block(v)
                .solve(&Matrix::identity(p, middle.dims()[v]))
                .expect("shapes agree")
                .expect("projection is surjective");
            to_x.block(v).mul(&section)
        })
        .collect();
    let right_map = ModuleHom::new_unchecked(middle.clone(), x.clone(), right_blocks);
    debug_assert!(right_map.compose(&q).sub(&to_x).is_zero());
    Ok(ArSequence { left: tau, middle, right: x.clone(), incl: left_map, proj: right_map })
}

/// Right almost split test against a list of indecomposables: every non-retraction
/// `Z -> X` factors through the middle term.
pub fn is_right_almost_split(seq: &ArSequence, indecomposables: &[FdModule]) -> bool {
    let x = &seq.right;
    let rad_dim = match local_radical(x) {
        Some(r) => r.len(),
        None => return false,
    };
    for z in indecomposables {
        let target = hom_space(z, x);
        let through: Vec<ModuleHom> =
            hom_space(z, &seq.middle).basis().iter().map(|g| seq.proj.compose(g)).collect();
        let rank = target.span_rank(&through);
        let expected = if super::decompose::iso_indecomposable(z, x).is_some() { rad_dim } else { target.dim() };
        if rank != expected {
            return false;
        }
    }
    true
}

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Coordinates, FieldPrime, Matrix};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

struct Inner {
    id: u64,
    algebra: Arc<FdAlgebra>,
    dims: Vec<usize>,
    /// One block per algebra basis element `b` with corner `(a, c)`: a `dims[c] x dims[a]`
    /// matrix sending `v` in `X e_a` to `v b` in `X e_c`.
    action: Vec<Matrix>,
}

/// Finite-dimensional right module, stored vertex by vertex.
#[derive(Clone)]
pub struct FdModule(Arc<Inner>);

impl std::fmt::Debug for FdModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FdModule{:?}", self.0.dims)
    }
}

impl FdModule {
    pub fn new(algebra: Arc<FdAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<FdModule> {
        if dims.len() != algebra.num_vertices() || action.len() != algebra.dim() {
            return Err(Error::Shape("module data does not match the algebra".into()));
        }
        for (b, m) in action.iter().enumerate() {
            let (a, c) = algebra.corner(b);
            if m.shape() != (dims[c], dims[a]) {
                return Err(Error::Shape(format!("action block {b} has shape {:?}", m.shape())));
            }
        }
        Ok(FdModule::new_unchecked(algebra, dims, action))
    }

    pub(crate) fn new_unchecked(algebra: Arc<FdAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> FdModule {
        FdModule(Arc::new(Inner { id: NEXT_ID.fetch_add(1, Ordering::Relaxed), algebra, dims, action }))
    }

    pub fn zero(algebra: &Arc<FdAlgebra>) -> FdModule {
        let p = algebra.field();
        let action = vec![Matrix::zeros(p, 0, 0); algebra.dim()];
        FdModule::new_unchecked(algebra.clone(), vec![0; algebra.num_vertices()], action)
    }

    /// Simple module at vertex `v`.
    pub fn simple(algebra: &Arc<FdAlgebra>, v: usize) -> FdModule {
        let p = algebra.field();
        let mut dims = vec![0; algebra.num_vertices()];
        dims[v] = 1;
        let action = (0..algebra.dim())
            .map(|b| {
                let (a, c) = algebra.corner(b);
                if b == algebra.idempotent(v) {
                    Matrix::identity(p, 1)
                } else {
                    Matrix::zeros(p, dims[c], dims[a])
                }
            })
            .collect();
        FdModule::new_unchecked(algebra.clone(), dims, action)
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra> {
        &self.0.algebra
    }

    pub fn field(&self) -> FieldPrime {
        self.0.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn act(&self, b: usize) -> &Matrix {
        &self.0.action[b]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.action
    }

    /// Action of a general algebra element lying in corner `(a, c)`.
    pub fn act_element(&self, x: &[u32], a: usize, c: usize) -> Matrix {
        let p = self.field();
        let mut m = Matrix::zeros(p, self.dims()[c], self.dims()[a]);
        for &b in self.algebra().corner_basis(a, c) {
            if x[b] != 0 {
                m.add_scaled(self.act(b), x[b]);
            }
        }
        m
    }

    pub fn same_algebra(&self, other: &FdModule) -> bool {
        self.algebra().same_as(other.algebra())
    }

    /// The same module data viewed over an algebra with identical structure constants.
    pub fn with_algebra(&self, algebra: &Arc<FdAlgebra>) -> FdModule {
        assert!(algebra.same_as(self.algebra()), "rebinding to a different algebra");
        if Arc::ptr_eq(algebra, self.algebra()) {
            return self.clone();
        }
        FdModule::new_unchecked(algebra.clone(), self.0.dims.clone(), self.0.action.clone())
    }

    pub fn is_simple(&self) -> bool {
        self.dim() == 1
    }

    /// Vertex carrying a one-dimensional module.
    pub fn simple_vertex(&self) -> Option<usize> {
        if self.dim() == 1 {
            self.dims().iter().position(|&d| d == 1)
        } else {
            None
        }
    }

    /// Right-module axioms on all basis pairs.
    pub fn check_axioms(&self) -> bool {
        let alg = self.algebra();
        let p = self.field();
        for v in 0..alg.num_vertices() {
            if *self.act(alg.idempotent(v)) != Matrix::identity(p, self.dims()[v]) {
                return false;
            }
        }
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                let (a, m) = alg.corner(x);
                let (m2, c) = alg.corner(y);
                if m != m2 {
                    continue;
                }
                let mut lhs = Matrix::zeros(p, self.dims()[c], self.dims()[a]);
                for &(i, z) in alg.product(x, y) {
                    lhs.add_scaled(self.act(i), z);
                }
                if lhs != self.act(y).mul(self.act(x)) {
                    return false;
                }
            }
        }
        true
    }

    /// k-dual: a module over the opposite algebra.
    pub fn dual(&self) -> FdModule {
        let op = self.algebra().opposite();
        let action = self.0.action.iter().map(Matrix::transpose).collect();
        FdModule::new_unchecked(op, self.0.dims.clone(), action)
    }

    /// Dual of a module over `home^op`, landing back over `home`.
    pub fn dual_to(&self, home: &Arc<FdAlgebra>) -> FdModule {
        assert!(self.algebra().is_opposite_of(home), "dual_to expects a module over the opposite");
        let action = self.0.action.iter().map(Matrix::transpose).collect();
        FdModule::new_unchecked(home.clone(), self.0.dims.clone(), action)
    }

    /// Direct sum with inclusions and projections.
    pub fn direct_sum(parts: &[FdModule], algebra: &Arc<FdAlgebra>) -> (FdModule, Vec<ModuleHom>, Vec<ModuleHom>) {
        let p = algebra.field();
        let nv = algebra.num_vertices();
        let mut dims = vec![0; nv];
        for m in parts {
            assert!(m.algebra().same_as(algebra), "direct sum over different algebras");
            for v in 0..nv {
                dims[v] += m.dims()[v];
            }
        }
        let action = (0..algebra.dim())
            .map(|b| {
                let (a, c) = algebra.corner(b);
                let mut m = Matrix::zeros(p, dims[c], dims[a]);
                let (mut r, mut s) = (0, 0);
                for part in parts {
                    m.paste(r, s, part.act(b));
                    r += part.dims()[c];
                    s += part.dims()[a];
                }
                m
            })
            .collect();
        let sum = FdModule::new_unchecked(algebra.clone(), dims.clone(), action);
        let mut incl = Vec::new();
        let mut proj = Vec::new();
        let mut offs = vec![0usize; nv];
        for part in parts {
            let part = part.with_algebra(algebra);
            let mut ib = Vec::with_capacity(nv);
            let mut pb = Vec::with_capacity(nv);
            for v in 0..nv {
                let d = part.dims()[v];
                let mut i = Matrix::zeros(p, dims[v], d);
                i.paste(offs[v], 0, &Matrix::identity(p, d));
                pb.push(i.transpose());
                ib.push(i);
                offs[v] += d;
            }
            incl.push(ModuleHom::new_unchecked(part.clone(), sum.clone(), ib));
            proj.push(ModuleHom::new_unchecked(sum.clone(), part, pb));
        }
        (sum, incl, proj)
    }

    pub fn sum_of(parts: &[FdModule], algebra: &Arc<FdAlgebra>) -> FdModule {
        FdModule::direct_sum(parts, algebra).0
    }

    /// Submodule spanned per vertex by the independent columns of `spans`, assumed closed.
    pub fn submodule(&self, spans: Vec<Matrix>) -> (FdModule, ModuleHom) {
        let alg = self.algebra();
        let coords: Vec<Coordinates> = spans.iter().map(|s| Coordinates::new(s.clone())).collect();
        let dims: Vec<usize> = spans.iter().map(Matrix::cols).collect();
        let p = self.field();
        let action = (0..alg.dim())
            .map(|b| {
                let (a, c) = alg.corner(b);
                if dims[a] == 0 || dims[c] == 0 {
                    return Matrix::zeros(p, dims[c], dims[a]);
                }
                let img = self.act(b).mul(&spans[a]);
                let cols: Vec<Vec<u32>> = img.columns().iter().map(|v| coords[c].coords_unchecked(v)).collect();
                Matrix::from_columns(p, dims[c], &cols)
            })
            .collect();
        let sub = FdModule::new_unchecked(alg.clone(), dims, action);
        let incl = ModuleHom::new_unchecked(sub.clone(), self.clone(), spans);
        (sub, incl)
    }

    /// Smallest submodule containing the given columns at each vertex.
    pub fn generated_submodule(&self, gens: Vec<Matrix>) -> (FdModule, ModuleHom) {
        let alg = self.algebra();
        let nv = alg.num_vertices();
        let mut spans: Vec<Matrix> = gens.into_iter().map(|g| basis_of(&g)).collect();
        loop {
            let mut changed = false;
            for &arrow in alg.arrows() {
                let (a, c) = alg.corner(arrow);
                if spans[a].cols() == 0 || self.dims()[c] == 0 {
                    continue;
                }
                let img = self.act(arrow).mul(&spans[a]);
                let joined = basis_of(&spans[c].hstack(&img));
                if joined.cols() > spans[c].cols() {
                    spans[c] = joined;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        debug_assert_eq!(spans.len(), nv);
        self.submodule(spans)
    }

    /// Quotient by the (closed) subspaces `spans`, with the projection.
    pub fn quotient(&self, spans: &[Matrix]) -> (FdModule, ModuleHom) {
        let alg = self.algebra();
        let p = self.field();
        let nv = alg.num_vertices();
        let mut comps = Vec::with_capacity(nv);
        let mut projs = Vec::with_capacity(nv);
        for v in 0..nv {
            let s = basis_of(&spans[v]);
            let c = s.complement_basis();
            let full = s.hstack(&c);
            let inv = full.inverse().expect("complement completes a basis");
            projs.push(inv.block(s.cols(), 0, c.cols(), self.dims()[v]));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(Matrix::cols).collect();
        let action = (0..alg.dim())
            .map(|b| {
                let (a, c) = alg.corner(b);
                if dims[a] == 0 || dims[c] == 0 {
                    return Matrix::zeros(p, dims[c], dims[a]);
                }
                projs[c].mul(self.act(b)).mul(&comps[a])
            })
            .collect();
        let q = FdModule::new_unchecked(alg.clone(), dims, action);
        let proj = ModuleHom::new_unchecked(self.clone(), q.clone(), projs);
        (q, proj)
    }

    /// Radical `X rad`: at each vertex, the sum of images of arrows.
    pub fn radical_spans(&self) -> Vec<Matrix> {
        let alg = self.algebra();
        let p = self.field();
        let mut spans: Vec<Matrix> = self.dims().iter().map(|&d| Matrix::zeros(p, d, 0)).collect();
        for &arrow in alg.arrows() {
            let (_, c) = alg.corner(arrow);
            spans[c] = spans[c].hstack(self.act(arrow));
        }
        spans.iter().map(basis_of).collect()
    }

    /// Socle: vectors killed by every arrow.
    pub fn socle_spans(&self) -> Vec<Matrix> {
        let alg = self.algebra();
        let p = self.field();
        (0..alg.num_vertices())
            .map(|v| {
                let mut stacked = Matrix::zeros(p, 0, self.dims()[v]);
                for &arrow in alg.arrows() {
                    if alg.corner(arrow).0 == v {
                        stacked = stacked.vstack(self.act(arrow));
                    }
                }
                stacked.nullspace()
            })
            .collect()
    }

    /// Top dimension vector.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spans().iter().zip(self.dims()).map(|(r, d)| d - r.cols()).collect()
    }
}

/// Independent columns spanning the same space.
pub(crate) fn basis_of(m: &Matrix) -> Matrix {
    if m.cols() == 0 || m.rows() == 0 {
        return Matrix::zeros(m.field(), m.rows(), 0);
    }
    m.column_basis()
}

/// Module homomorphism stored as one block per vertex.
#[derive(Clone)]
pub struct ModuleHom {
    source: FdModule,
    target: FdModule,
    blocks: Vec<Matrix>,
}

impl std::fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleHom")
            .field("source", &self.source.dims())
            .field("target", &self.target.dims())
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl ModuleHom {
    pub fn new(source: FdModule, target: FdModule, blocks: Vec<Matrix>) -> Result<ModuleHom> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch);
        }
        if blocks.len() != source.dims().len() {
            return Err(Error::Shape("wrong number of hom blocks".into()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.shape() != (target.dims()[v], source.dims()[v]) {
                return Err(Error::Shape(format!("hom block at vertex {v} has shape {:?}", b.shape())));
            }
        }
        let h = ModuleHom { source, target, blocks };
        if !h.is_intertwiner() {
            return Err(Error::Input("linear map does not commute with the action".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: FdModule, target: FdModule, blocks: Vec<Matrix>) -> ModuleHom {
        ModuleHom { source, target, blocks }
    }

    pub fn zero(source: &FdModule, target: &FdModule) -> ModuleHom {
        let p = source.field();
        let blocks = source.dims().iter().zip(target.dims()).map(|(&s, &t)| Matrix::zeros(p, t, s)).collect();
        ModuleHom::new_unchecked(source.clone(), target.clone(), blocks)
    }

    pub fn identity(m: &FdModule) -> ModuleHom {
        let p = m.field();
        let blocks = m.dims().iter().map(|&d| Matrix::identity(p, d)).collect();
        ModuleHom::new_unchecked(m.clone(), m.clone(), blocks)
    }

    pub fn source(&self) -> &FdModule {
        &self.source
    }

    pub fn target(&self) -> &FdModule {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn is_intertwiner(&self) -> bool {
        let alg = self.source.algebra();
        (0..alg.dim()).all(|b| {
            let (a, c) = alg.corner(b);
            self.blocks[c].mul(self.source.act(b)) == self.target.act(b).mul(&self.blocks[a])
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleHom) -> ModuleHom {
        debug_assert_eq!(self.source.dims(), other.target.dims());
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleHom::new_unchecked(other.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn sub(&self, other: &ModuleHom) -> ModuleHom {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: u32) -> ModuleHom {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn neg(&self) -> ModuleHom {
        let blocks = self.blocks.iter().map(Matrix::neg).collect();
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    /// Linear combination of homs with common source and target.
    pub fn combination(source: &FdModule, target: &FdModule, homs: &[ModuleHom], coeffs: &[u32]) -> ModuleHom {
        let mut out = ModuleHom::zero(source, target);
        for (h, &c) in homs.iter().zip(coeffs) {
            if c != 0 {
                for (o, b) in out.blocks.iter_mut().zip(&h.blocks) {
                    o.add_scaled(b, c);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims() && self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleHom> {
        let blocks: Option<Vec<Matrix>> = self.blocks.iter().map(Matrix::inverse).collect();
        Some(ModuleHom::new_unchecked(self.target.clone(), self.source.clone(), blocks?))
    }

    /// Concatenated block entries, a coordinate vector for the hom.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(Matrix::flatten).collect()
    }

    pub fn from_flat(source: &FdModule, target: &FdModule, v: &[u32]) -> ModuleHom {
        let p = source.field();
        let mut blocks = Vec::with_capacity(source.dims().len());
        let mut off = 0;
        for (&s, &t) in source.dims().iter().zip(target.dims()) {
            blocks.push(Matrix::from_flat(p, t, s, &v[off..off + t * s]));
            off += t * s;
        }
        ModuleHom::new_unchecked(source.clone(), target.clone(), blocks)
    }

    /// Kernel with its inclusion.
    pub fn kernel(&self) -> (FdModule, ModuleHom) {
        self.source.submodule(self.blocks.iter().map(Matrix::nullspace).collect())
    }

    /// Cokernel with its projection.
    pub fn cokernel(&self) -> (FdModule, ModuleHom) {
        self.target.quotient(&self.blocks)
    }

    /// Image with inclusion into the target and the corestriction from the source.
    pub fn image(&self) -> (FdModule, ModuleHom, ModuleHom) {
        let spans: Vec<Matrix> = self.blocks.iter().map(basis_of).collect();
        let (img, incl) = self.target.submodule(spans.clone());
        let p = self.source.field();
        let cores = self
            .blocks
            .iter()
            .zip(&spans)
            .map(|(b, s)| {
                if s.cols() == 0 {
                    return Matrix::zeros(p, 0, b.cols());
                }
                s.solve(b).expect("shapes agree").expect("image contains the columns")
            })
            .collect();
        let corestriction = ModuleHom::new_unchecked(self.source.clone(), img.clone(), cores);
        (img, incl, corestriction)
    }

    /// k-dual `D(f): D(target) -> D(source)` over the opposite algebra.
    pub fn dual(&self) -> ModuleHom {
        self.dual_between(&self.target.dual(), &self.source.dual())
    }

    /// Dual map between given dual modules (whose data must be the transposed actions).
    pub fn dual_between(&self, dual_target: &FdModule, dual_source: &FdModule) -> ModuleHom {
        let blocks = self.blocks.iter().map(Matrix::transpose).collect();
        ModuleHom::new_unchecked(dual_target.clone(), dual_source.clone(), blocks)
    }

    /// `[self other]: source ⊕ other.source -> target`.
    pub fn hstack(&self, other: &ModuleHom, sum_source: &FdModule) -> ModuleHom {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.hstack(b)).collect();
        ModuleHom::new_unchecked(sum_source.clone(), self.target.clone(), blocks)
    }

    /// `[self; other]: source -> target ⊕ other.target`.
    pub fn vstack(&self, other: &ModuleHom, sum_target: &FdModule) -> ModuleHom {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.vstack(b)).collect();
        ModuleHom::new_unchecked(self.source.clone(), sum_target.clone(), blocks)
    }

    /// `self ⊕ other` between given direct sums.
    pub fn direct_sum(&self, other: &ModuleHom, sum_source: &FdModule, sum_target: &FdModule) -> ModuleHom {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.direct_sum(b)).collect();
        ModuleHom::new_unchecked(sum_source.clone(), sum_target.clone(), blocks)
    }

    /// Same blocks between modules with identical data (e.g. after rebinding).
    pub fn retarget(&self, source: &FdModule, target: &FdModule) -> ModuleHom {
        debug_assert_eq!(source.dims(), self.source.dims());
        debug_assert_eq!(target.dims(), self.target.dims());
        ModuleHom::new_unchecked(source.clone(), target.clone(), self.blocks.clone())
    }

    pub fn with_algebra(&self, algebra: &Arc<FdAlgebra>) -> ModuleHom {
        ModuleHom::new_unchecked(
            self.source.with_algebra(algebra),
            self.target.with_algebra(algebra),
            self.blocks.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;

    #[test]
    fn simples_satisfy_axioms() {
        let a = presets::a3r2();
        for v in 0..3 {
            assert!(FdModule::simple(&a, v).check_axioms());
        }
    }

    #[test]
    fn double_dual_has_identical_data() {
        let a = presets::ppa2();
        let s = FdModule::simple(&a, 0);
        let dd = s.dual().dual();
        assert_eq!(dd.dims(), s.dims());
        assert!(dd.same_algebra(&s));
        assert!(s.dual().check_axioms());
    }

    #[test]
    fn direct_sum_projections_split_inclusions() {
        let a = presets::a3r2();
        let parts = [FdModule::simple(&a, 0), FdModule::simple(&a, 0), FdModule::simple(&a, 2)];
        let (sum, incl, proj) = FdModule::direct_sum(&parts, &a);
        assert_eq!(sum.dims(), &[2, 0, 1]);
        for i in 0..3 {
            for j in 0..3 {
                let c = proj[i].compose(&incl[j]);
                assert_eq!(c.is_zero(), i != j);
            }
        }
    }
}

use std::sync::Arc;

use crate::algebra::FdAlgebra;
use crate::cluster::ClusterSubcat;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modcat::{decompose, hom_space, is_projective, FdModule, ModuleHom};

/// An object `f: M₁ -> M₂` of the monomorphism category `S(M)`.
#[derive(Clone, Debug)]
pub struct MonoPair {
    pub f: ModuleHom,
}

/// An object `g: M₁ -> M₂` of the epimorphism category `F(M)`.
#[derive(Clone, Debug)]
pub struct EpiPair {
    pub f: ModuleHom,
}

fn check_endpoints(m: &ClusterSubcat, f: &ModuleHom) -> Result<()> {
    if !m.contains(f.source())? || !m.contains(f.target())? {
        return Err(Error::Hypothesis("endpoints must lie in add M".into()));
    }
    Ok(())
}

impl MonoPair {
    pub fn new(m: &ClusterSubcat, f: ModuleHom) -> Result<MonoPair> {
        if !f.is_injective() {
            return Err(Error::Hypothesis("map is not injective".into()));
        }
        check_endpoints(m, &f)?;
        Ok(MonoPair { f })
    }

    pub fn identity(x: &FdModule) -> MonoPair {
        MonoPair { f: ModuleHom::identity(x) }
    }
}

impl EpiPair {
    pub fn new(m: &ClusterSubcat, f: ModuleHom) -> Result<EpiPair> {
        if !f.is_surjective() {
            return Err(Error::Hypothesis("map is not surjective".into()));
        }
        check_endpoints(m, &f)?;
        Ok(EpiPair { f })
    }

    pub fn identity(x: &FdModule) -> EpiPair {
        EpiPair { f: ModuleHom::identity(x) }
    }
}

/// A commuting square `(α₁, α₂)` from `source` to `target`: `target ∘ α₁ = α₂ ∘ source`.
#[derive(Clone, Debug)]
pub struct SMorphism {
    pub a1: ModuleHom,
    pub a2: ModuleHom,
}

/// Morphisms of modules as modules over the triangular matrix algebra.
#[derive(Clone, Debug)]
pub struct MorphismCat {
    base: Arc<FdAlgebra>,
    t2: Arc<FdAlgebra>,
}

impl MorphismCat {
    pub fn new(base: &Arc<FdAlgebra>) -> MorphismCat {
        MorphismCat { base: base.clone(), t2: Arc::new(base.triangular()) }
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra> {
        &self.t2
    }

    /// The module `(X, Y, f)` over the triangular algebra.
    pub fn to_module(&self, f: &ModuleHom) -> FdModule {
        let (x, y) = (f.source(), f.target());
        let dim = self.base.dim();
        let mut dims = x.dims().to_vec();
        dims.extend_from_slice(y.dims());
        let mut action = Vec::with_capacity(3 * dim);
        for b in 0..dim {
            action.push(x.act(b).clone());
        }
        for b in 0..dim {
            let (_, e) = self.base.corner(b);
            action.push(f.block(e).mul(x.act(b)));
        }
        for b in 0..dim {
            action.push(y.act(b).clone());
        }
        let module = FdModule::new_unchecked(self.t2.clone(), dims, action);
        debug_assert!(module.check_axioms());
        module
    }

    /// Reads a module over the triangular algebra back as a morphism.
    pub fn from_module(&self, m: &FdModule) -> ModuleHom {
        let dim = self.base.dim();
        let nv = self.base.num_vertices();
        let xd = m.dims()[..nv].to_vec();
        let yd = m.dims()[nv..].to_vec();
        let x = FdModule::new_unchecked(self.base.clone(), xd, (0..dim).map(|b| m.act(b).clone()).collect());
        let y = FdModule::new_unchecked(self.base.clone(), yd, (0..dim).map(|b| m.act(2 * dim + b).clone()).collect());
        let blocks = (0..nv).map(|v| m.act(dim + self.base.idempotent(v)).clone()).collect();
        ModuleHom::new_unchecked(x, y, blocks)
    }

    /// Basis of the commuting squares from `f` to `g`.
    pub fn hom_basis(&self, f: &ModuleHom, g: &ModuleHom) -> Vec<SMorphism> {
        let nv = self.base.num_vertices();
        let space = hom_space(&self.to_module(f), &self.to_module(g));
        space
            .basis()
            .iter()
            .map(|h| SMorphism {
                a1: ModuleHom::new_unchecked(f.source().clone(), g.source().clone(), h.blocks()[..nv].to_vec()),
                a2: ModuleHom::new_unchecked(f.target().clone(), g.target().clone(), h.blocks()[nv..].to_vec()),
            })
            .collect()
    }

    /// Indecomposable summands in the morphism category.
    pub fn decompose(&self, f: &ModuleHom) -> Result<Vec<ModuleHom>> {
        Ok(decompose(&self.to_module(f))?.parts.iter().map(|s| self.from_module(&s.module)).collect())
    }

    /// Isomorphism in the morphism category.
    pub fn is_isomorphic(&self, f: &ModuleHom, g: &ModuleHom) -> Result<bool> {
        crate::modcat::is_isomorphic(&self.to_module(f), &self.to_module(g))
    }
}

/// Shape classes of indecomposable objects of the morphism category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `M -> M` isomorphism.
    Iso,
    /// `0 -> M`.
    FromZero,
    /// `M -> 0`.
    ToZero,
    /// `M -> P` with `P` projective (and not of the previous shapes).
    ToProjective,
    Other,
}

pub fn shape(h: &ModuleHom) -> Shape {
    if h.source().is_zero() {
        Shape::FromZero
    } else if h.target().is_zero() {
        Shape::ToZero
    } else if h.is_iso() {
        Shape::Iso
    } else if is_projective(h.target()) {
        Shape::ToProjective
    } else {
        Shape::Other
    }
}

fn all_summands(mc: &MorphismCat, f: &ModuleHom, ok: impl Fn(&ModuleHom) -> bool) -> Result<bool> {
    if f.source().is_zero() && f.target().is_zero() {
        return Ok(true);
    }
    Ok(mc.decompose(f)?.iter().all(ok))
}

/// `add` of the isomorphisms.
pub fn is_k(mc: &MorphismCat, f: &ModuleHom) -> Result<bool> {
    all_summands(mc, f, |h| shape(h) == Shape::Iso)
}

/// `add{M -> M, M -> P}`.
pub fn is_u(mc: &MorphismCat, f: &ModuleHom) -> Result<bool> {
    all_summands(mc, f, |h| matches!(shape(h), Shape::Iso) || is_projective(h.target()))
}

/// `add{M -> M, 0 -> M}`.
pub fn is_v(mc: &MorphismCat, f: &ModuleHom) -> Result<bool> {
    all_summands(mc, f, |h| matches!(shape(h), Shape::Iso | Shape::FromZero))
}

/// `add{M -> M, 0 -> M, M -> P}`.
pub fn is_w(mc: &MorphismCat, f: &ModuleHom) -> Result<bool> {
    all_summands(mc, f, |h| matches!(shape(h), Shape::Iso | Shape::FromZero) || is_projective(h.target()))
}

/// `add{M -> M, M -> 0}`.
pub fn is_vprime(mc: &MorphismCat, f: &ModuleHom) -> Result<bool> {
    all_summands(mc, f, |h| matches!(shape(h), Shape::Iso | Shape::ToZero))
}

/// Caps for populations of the morphism categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCaps {
    /// Largest number of indecomposable summands (counted with multiplicity).
    pub mult_cap: usize,
    /// Largest `dim M₁ + dim M₂`.
    pub max_dim: usize,
}

impl Default for PairCaps {
    fn default() -> Self {
        PairCaps { mult_cap: 2, max_dim: 16 }
    }
}

/// Indecomposable objects of `S(M)`: identities of the generators and the kernels
/// `K -> M_C` of minimal right approximations of the indecomposables `C` of proper
/// `M`-dimension at most one (with `K = 0` when `C ∈ M`).
pub fn indecomposable_monos(m: &ClusterSubcat) -> Result<Vec<MonoPair>> {
    let mut out: Vec<MonoPair> = m.generator_modules().iter().map(MonoPair::identity).collect();
    for c in m.catalog().modules() {
        if !matches!(m.proper_dimension(c)?, Some(d) if d <= 1) {
            continue;
        }
        let approx = m.right_approximation(c);
        let (_, incl) = approx.map.kernel();
        out.push(MonoPair::new(m, incl)?);
    }
    Ok(out)
}

/// Indecomposable objects of `F(M)`: identities and cokernels `M^K -> C` of minimal
/// left approximations of the indecomposables `K` of coproper `M`-dimension at most one.
pub fn indecomposable_epis(m: &ClusterSubcat) -> Result<Vec<EpiPair>> {
    let mut out: Vec<EpiPair> = m.generator_modules().iter().map(EpiPair::identity).collect();
    for k in m.catalog().modules() {
        if !matches!(m.coproper_dimension(k)?, Some(d) if d <= 1) {
            continue;
        }
        let approx = m.left_approximation(k);
        let (_, proj) = approx.map.cokernel();
        out.push(EpiPair::new(m, proj)?);
    }
    Ok(out)
}

/// Direct sum of morphisms.
pub fn sum_of_maps(maps: &[ModuleHom], base: &Arc<FdAlgebra>) -> ModuleHom {
    let sources: Vec<FdModule> = maps.iter().map(|f| f.source().clone()).collect();
    let targets: Vec<FdModule> = maps.iter().map(|f| f.target().clone()).collect();
    let (s, _, s_proj) = FdModule::direct_sum(&sources, base);
    let (t, t_incl, _) = FdModule::direct_sum(&targets, base);
    let mut out = ModuleHom::zero(&s, &t);
    for (k, f) in maps.iter().enumerate() {
        out = out.add(&t_incl[k].compose(f).compose(&s_proj[k]));
    }
    out
}

/// Multisets of at most `mult_cap` indices out of `n`, in lexicographic order.
fn multisets(n: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == cap {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i, n, cap, cur, out);
            cur.pop();
        }
    }
    rec(0, n, cap, &mut cur, &mut out);
    out
}

fn populate(maps: &[ModuleHom], base: &Arc<FdAlgebra>, caps: PairCaps) -> Vec<ModuleHom> {
    multisets(maps.len(), caps.mult_cap)
        .into_iter()
        .filter(|s| s.iter().map(|&i| maps[i].source().dim() + maps[i].target().dim()).sum::<usize>() <= caps.max_dim)
        .map(|s| {
            if s.len() == 1 {
                maps[s[0]].clone()
            } else {
                let parts: Vec<ModuleHom> = s.iter().map(|&i| maps[i].clone()).collect();
                sum_of_maps(&parts, base)
            }
        })
        .collect()
}

/// Representatives of the isomorphism classes of `S(M)` within the caps.
pub fn enumerate_mono_pairs(m: &ClusterSubcat, caps: PairCaps) -> Result<Vec<MonoPair>> {
    let ind: Vec<ModuleHom> = indecomposable_monos(m)?.into_iter().map(|x| x.f).collect();
    Ok(populate(&ind, m.catalog().algebra(), caps).into_iter().map(|f| MonoPair { f }).collect())
}

/// Representatives of the isomorphism classes of `F(M)` within the caps.
pub fn enumerate_epi_pairs(m: &ClusterSubcat, caps: PairCaps) -> Result<Vec<EpiPair>> {
    let ind: Vec<ModuleHom> = indecomposable_epis(m)?.into_iter().map(|x| x.f).collect();
    Ok(populate(&ind, m.catalog().algebra(), caps).into_iter().map(|f| EpiPair { f }).collect())
}

/// Whether `f` has a left inverse.
pub fn is_split_mono(f: &ModuleHom) -> bool {
    let space = hom_space(f.target(), f.source());
    let id = ModuleHom::identity(f.source());
    let homs: Vec<ModuleHom> = space.basis().iter().map(|r| r.compose(f)).collect();
    solves(&homs, &id)
}

/// Whether `f` has a right inverse.
pub fn is_split_epi(f: &ModuleHom) -> bool {
    let space = hom_space(f.target(), f.source());
    let id = ModuleHom::identity(f.target());
    let homs: Vec<ModuleHom> = space.basis().iter().map(|s| f.compose(s)).collect();
    solves(&homs, &id)
}

/// Whether `target` is a linear combination of `homs`.
pub fn solves(homs: &[ModuleHom], target: &ModuleHom) -> bool {
    solve_combination(homs, target).is_some()
}

/// Coefficients expressing `target` through `homs`.
pub fn solve_combination(homs: &[ModuleHom], target: &ModuleHom) -> Option<Vec<u32>> {
    let p = target.source().field();
    let t = target.flatten();
    if homs.is_empty() {
        return t.iter().all(|&z| z == 0).then(Vec::new);
    }
    let cols: Vec<Vec<u32>> = homs.iter().map(ModuleHom::flatten).collect();
    let a = Matrix::from_columns(p, t.len(), &cols);
    a.solve(&Matrix::column_vector(p, &t)).ok().flatten().map(|x| x.flatten())
}

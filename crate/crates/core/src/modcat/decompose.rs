use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_space;
use super::module::{basis_of, FdModule, ModuleHom};
use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, Matrix};

pub const DEFAULT_EXHAUSTIVE_CAP: u64 = 1 << 20;
const RANDOM_TRIALS: usize = 64;
const DEFAULT_SEED: u64 = 0x5eed;

/// One indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: FdModule,
    pub incl: ModuleHom,
    pub proj: ModuleHom,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub parts: Vec<Summand>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn modules(&self) -> Vec<FdModule> {
        self.parts.iter().map(|s| s.module.clone()).collect()
    }

    /// Groups summands into isomorphism classes: `(representative index, multiplicity)`.
    pub fn isotypic(&self) -> Vec<(usize, usize)> {
        let mut classes: Vec<(usize, usize)> = Vec::new();
        for (i, s) in self.parts.iter().enumerate() {
            match classes.iter_mut().find(|(r, _)| iso_indecomposable(&self.parts[*r].module, &s.module).is_some()) {
                Some(c) => c.1 += 1,
                None => classes.push((i, 1)),
            }
        }
        classes
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DecomposeOptions {
    pub exhaustive_cap: u64,
    pub seed: u64,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions { exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP, seed: DEFAULT_SEED }
    }
}

fn shifted(h: &ModuleHom, lambda: u32) -> ModuleHom {
    if lambda == 0 {
        return h.clone();
    }
    h.sub(&ModuleHom::identity(h.source()).scale(lambda))
}

fn is_nilpotent_hom(h: &ModuleHom) -> bool {
    h.blocks().iter().all(|b| b.rows() == 0 || b.is_nilpotent())
}

/// Basis of `rad End(X)` when `End(X)` is local with residue field 𝔽_p, else `None`.
pub fn local_radical(x: &FdModule) -> Option<Vec<ModuleHom>> {
    if x.is_zero() {
        return None;
    }
    let end = hom_space(x, x);
    let p = x.field();
    let mut rad = Vec::new();
    for phi in end.basis() {
        let lambdas: Vec<u32> = p.elements().filter(|&l| is_nilpotent_hom(&shifted(phi, l))).collect();
        if lambdas.len() != 1 {
            return None;
        }
        let n = shifted(phi, lambdas[0]);
        if !n.is_zero() {
            rad.push(n);
        }
    }
    // keep an independent subset
    let mut kept: Vec<ModuleHom> = Vec::new();
    for n in rad {
        let mut trial = kept.clone();
        trial.push(n.clone());
        if end.span_rank(&trial) == trial.len() {
            kept = trial;
        }
    }
    if kept.len() + 1 != end.dim() {
        return None;
    }
    if kept.is_empty() {
        return Some(kept);
    }
    let span = end.coordinate_matrix(&kept);
    let r = span.rank();
    for a in &kept {
        for b in &kept {
            let c = end.coords(&a.compose(b))?;
            if span.hstack(&Matrix::column_vector(p, &c)).rank() != r {
                return None;
            }
        }
    }
    Some(kept)
}

pub fn is_indecomposable(x: &FdModule) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    Ok(decompose(x)?.len() == 1)
}

/// An isomorphism between indecomposables, if one exists.
pub fn iso_indecomposable(x: &FdModule, y: &FdModule) -> Option<ModuleHom> {
    if x.dims() != y.dims() {
        return None;
    }
    hom_space(x, y).basis().iter().find(|h| h.is_iso()).cloned()
}

pub fn decompose(x: &FdModule) -> Result<Decomposition> {
    decompose_with(x, DecomposeOptions::default())
}

pub fn decompose_with(x: &FdModule, opts: DecomposeOptions) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut parts = Vec::new();
    split_rec(x, &ModuleHom::identity(x), &ModuleHom::identity(x), &opts, &mut rng, &mut parts)?;
    Ok(Decomposition { parts })
}

fn split_rec(
    x: &FdModule,
    incl: &ModuleHom,
    proj: &ModuleHom,
    opts: &DecomposeOptions,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Summand>,
) -> Result<()> {
    if x.is_zero() {
        return Ok(());
    }
    if local_radical(x).is_some() {
        out.push(Summand { module: x.clone(), incl: incl.clone(), proj: proj.clone() });
        return Ok(());
    }
    let Some(psi) = find_fitting_element(x, opts, rng)? else {
        // End(X) has no non-unit non-nilpotent element: local, possibly with a larger residue field
        out.push(Summand { module: x.clone(), incl: incl.clone(), proj: proj.clone() });
        return Ok(());
    };
    let (u, iu, pu, v, iv, pv) = fitting_split(x, &psi);
    split_rec(&u, &incl.compose(&iu), &pu.compose(proj), opts, rng, out)?;
    split_rec(&v, &incl.compose(&iv), &pv.compose(proj), opts, rng, out)?;
    Ok(())
}

fn fitting_power(h: &ModuleHom) -> Vec<Matrix> {
    h.blocks().iter().map(|b| if b.rows() == 0 { b.clone() } else { b.pow(b.rows()) }).collect()
}

fn is_fitting_nontrivial(h: &ModuleHom) -> bool {
    let r: usize = fitting_power(h).iter().map(Matrix::rank).sum();
    r > 0 && r < h.source().dim()
}

fn find_fitting_element(x: &FdModule, opts: &DecomposeOptions, rng: &mut ChaCha8Rng) -> Result<Option<ModuleHom>> {
    let end = hom_space(x, x);
    let p: FieldPrime = x.field();
    for phi in end.basis() {
        for l in p.elements() {
            let h = shifted(phi, l);
            if is_fitting_nontrivial(&h) {
                return Ok(Some(h));
            }
        }
    }
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<u32> = (0..end.dim()).map(|_| rng.gen_range(0..p.p())).collect();
        let h = end.combine(&c);
        for l in p.elements() {
            let h = shifted(&h, l);
            if is_fitting_nontrivial(&h) {
                return Ok(Some(h));
            }
        }
    }
    let size = (p.p() as u64).checked_pow(end.dim() as u32).unwrap_or(u64::MAX);
    if size > opts.exhaustive_cap {
        return Err(Error::SearchCapExceeded(format!(
            "End of a module of dimension {} has {} elements",
            x.dim(),
            size
        )));
    }
    let mut c = vec![0u32; end.dim()];
    loop {
        let h = end.combine(&c);
        if is_fitting_nontrivial(&h) {
            return Ok(Some(h));
        }
        let mut i = 0;
        loop {
            if i == c.len() {
                return Ok(None);
            }
            c[i] += 1;
            if c[i] == p.p() {
                c[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

type Split = (FdModule, ModuleHom, ModuleHom, FdModule, ModuleHom, ModuleHom);

/// `X = Im ψ^N ⊕ Ker ψ^N`.
fn fitting_split(x: &FdModule, psi: &ModuleHom) -> Split {
    let f = fitting_power(psi);
    let ims: Vec<Matrix> = f.iter().map(basis_of).collect();
    let kers: Vec<Matrix> = f.iter().map(Matrix::nullspace).collect();
    let (u, iu) = x.submodule(ims.clone());
    let (v, iv) = x.submodule(kers.clone());
    let mut pu = Vec::new();
    let mut pv = Vec::new();
    for (im, ker) in ims.iter().zip(&kers) {
        let full = im.hstack(ker);
        let inv = full.inverse().expect("Fitting decomposition is direct");
        pu.push(inv.block(0, 0, im.cols(), full.rows()));
        pv.push(inv.block(im.cols(), 0, ker.cols(), full.rows()));
    }
    let pu = ModuleHom::new_unchecked(x.clone(), u.clone(), pu);
    let pv = ModuleHom::new_unchecked(x.clone(), v.clone(), pv);
    (u, iu, pu, v, iv, pv)
}

/// An isomorphism `X -> Y`, found by matching indecomposable summands.
pub fn find_iso(x: &FdModule, y: &FdModule) -> Result<Option<ModuleHom>> {
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(ModuleHom::zero(x, y)));
    }
    let dx = decompose(x)?;
    let dy = decompose(y)?;
    if dx.len() != dy.len() {
        return Ok(None);
    }
    let mut used = vec![false; dy.len()];
    let mut total = ModuleHom::zero(x, y);
    for sx in &dx.parts {
        let mut found = false;
        for (j, sy) in dy.parts.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(phi) = iso_indecomposable(&sx.module, &sy.module) {
                used[j] = true;
                total = total.add(&sy.incl.compose(&phi).compose(&sx.proj));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(total))
}

pub fn is_isomorphic(x: &FdModule, y: &FdModule) -> Result<bool> {
    Ok(find_iso(x, y)?.is_some())
}

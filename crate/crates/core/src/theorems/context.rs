use std::sync::OnceLock;

use crate::error::Result;
use crate::functcat::{nat_space, FunctorMod};
use crate::linalg::Matrix;
use crate::modcat::{Caps, Catalog, FdModule, ModuleHom};
use crate::paperfun::{
    enumerate_epi_pairs, enumerate_mono_pairs, indecomposable_epis, indecomposable_monos, EpiPair, Instance,
    MonoPair, PairCaps, SMorphism,
};

use super::report::CheckReport;

/// Caps and switches for a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub pairs: PairCaps,
    /// Caps for enumerating modules over the Auslander algebras.
    pub functors: Caps,
    /// Run the costly objectivity checks and fullness on all population pairs.
    pub deep_check: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { pairs: PairCaps::default(), functors: Caps { max_ind: 256, max_dim: 32 }, deep_check: false }
    }
}

/// Shared, lazily built data of one suite run.
pub struct Suite<'a> {
    pub ins: &'a Instance,
    pub cfg: SuiteConfig,
    pub label: String,
    monos: OnceLock<Result<Vec<MonoPair>>>,
    epis: OnceLock<Result<Vec<EpiPair>>>,
    ind_monos: OnceLock<Result<Vec<MonoPair>>>,
    ind_epis: OnceLock<Result<Vec<EpiPair>>>,
    stable_inds: OnceLock<Result<Vec<FunctorMod>>>,
    costable_inds: OnceLock<Result<Vec<FunctorMod>>>,
}

impl<'a> Suite<'a> {
    pub fn new(ins: &'a Instance, cfg: SuiteConfig) -> Suite<'a> {
        let m = ins.subcat();
        let label = format!("n={} M={{{}}}", m.n(), m.generator_names().join(","));
        Suite {
            ins,
            cfg,
            label,
            monos: OnceLock::new(),
            epis: OnceLock::new(),
            ind_monos: OnceLock::new(),
            ind_epis: OnceLock::new(),
            stable_inds: OnceLock::new(),
            costable_inds: OnceLock::new(),
        }
    }

    pub fn report(&self, id: &str) -> CheckReport {
        CheckReport::new(id, &self.label)
    }

    pub fn catalog(&self) -> &Catalog {
        self.ins.subcat().catalog()
    }

    pub fn monos(&self) -> Result<&[MonoPair]> {
        cached(&self.monos, || enumerate_mono_pairs(self.ins.subcat(), self.cfg.pairs))
    }

    pub fn epis(&self) -> Result<&[EpiPair]> {
        cached(&self.epis, || enumerate_epi_pairs(self.ins.subcat(), self.cfg.pairs))
    }

    pub fn ind_monos(&self) -> Result<&[MonoPair]> {
        cached(&self.ind_monos, || indecomposable_monos(self.ins.subcat()))
    }

    pub fn ind_epis(&self) -> Result<&[EpiPair]> {
        cached(&self.ind_epis, || indecomposable_epis(self.ins.subcat()))
    }

    /// Indecomposable modules over the stable Auslander algebra.
    pub fn stable_inds(&self) -> Result<&[FunctorMod]> {
        cached(&self.stable_inds, || self.ins.indecomposable_functors(&self.ins.stable()?, self.cfg.functors))
    }

    /// Indecomposable modules over the costable covariant Auslander algebra.
    pub fn costable_inds(&self) -> Result<&[FunctorMod]> {
        cached(&self.costable_inds, || self.ins.indecomposable_functors(&self.ins.costable_co()?, self.cfg.functors))
    }

    /// Monos for fullness checks: indecomposables, or the whole population under `deep_check`.
    pub fn fullness_monos(&self) -> Result<&[MonoPair]> {
        if self.cfg.deep_check {
            self.monos()
        } else {
            self.ind_monos()
        }
    }

    pub fn fullness_epis(&self) -> Result<&[EpiPair]> {
        if self.cfg.deep_check {
            self.epis()
        } else {
            self.ind_epis()
        }
    }

    /// `A ⊕ B` in catalog names.
    pub fn module_name(&self, x: &FdModule) -> String {
        if x.is_zero() {
            return "0".into();
        }
        match self.catalog().decompose_indices(x) {
            Ok(idx) => idx.iter().map(|&i| self.catalog().name(i)).collect::<Vec<_>>().join("⊕"),
            Err(_) => format!("{:?}", x.dims()),
        }
    }

    pub fn map_name(&self, f: &ModuleHom) -> String {
        format!("{} -> {}", self.module_name(f.source()), self.module_name(f.target()))
    }

    pub fn functor_name(&self, f: &FunctorMod) -> String {
        let names = f.gamma().subcat().generator_names();
        let parts: Vec<String> =
            names.iter().zip(f.value_dims()).filter(|(_, d)| *d > 0).map(|(n, d)| format!("{n}:{d}")).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            format!("({})", parts.join(","))
        }
    }
}

fn cached<T>(cell: &OnceLock<Result<Vec<T>>>, build: impl FnOnce() -> Result<Vec<T>>) -> Result<&[T]> {
    match cell.get_or_init(build) {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

/// Dimension of the span of a family of homs with a common source and target.
pub fn span_rank(homs: &[ModuleHom]) -> usize {
    let Some(first) = homs.first() else { return 0 };
    let cols: Vec<Vec<u32>> = homs.iter().map(ModuleHom::flatten).collect();
    Matrix::from_columns(first.source().field(), cols[0].len(), &cols).rank()
}

/// Fullness of a functor on a list of objects: the images of a basis of
/// `Hom(x, y)` span `Nat(F x, F y)`.
pub fn check_fullness<X>(
    rep: &mut CheckReport,
    objects: &[X],
    squares: impl Fn(&X, &X) -> Vec<SMorphism>,
    value: impl Fn(&X) -> Result<FunctorMod>,
    on_maps: impl Fn(&X, &X, &SMorphism) -> Result<ModuleHom>,
    name: impl Fn(&X) -> String,
) -> Result<()> {
    let values: Vec<FunctorMod> = objects.iter().map(&value).collect::<Result<_>>()?;
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            let target = nat_space(&values[i], &values[j])?.dim();
            if target == 0 {
                continue;
            }
            let images: Vec<ModuleHom> =
                squares(x, y).iter().map(|a| on_maps(x, y, a)).collect::<Result<_>>()?;
            let rank = span_rank(&images);
            rep.count("fullness_pairs", 1);
            rep.expect(rank == target, || {
                format!("not full at ({}, {}): rank {rank} < dim Nat {target}", name(x), name(y))
            });
        }
    }
    Ok(())
}

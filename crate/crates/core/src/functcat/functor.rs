use std::sync::Arc;

use super::auslander::{flavor_ideal, AuslanderAlgebra, Flavor, Variance};
use super::quot::QuotSpace;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modcat::{
    cosyzygy_n, cosyzygy_sequence, decompose, hom_space, is_isomorphic, is_projective, syzygy_n, syzygy_sequence,
    FdModule, HomSpace, ModuleHom,
};

/// A finitely presented functor on `M` (or its stable/costable quotient),
/// stored as a right module over the matching Auslander algebra.
#[derive(Clone)]
pub struct FunctorMod {
    gamma: Arc<AuslanderAlgebra>,
    carrier: FdModule,
    presentation: Option<ModuleHom>,
    values: Option<Arc<[QuotSpace]>>,
}

impl std::fmt::Debug for FunctorMod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FunctorMod")
            .field("flavor", &self.gamma.flavor())
            .field("variance", &self.gamma.variance())
            .field("value_dims", &self.value_dims())
            .finish()
    }
}

impl FunctorMod {
    /// Wraps a module over `gamma.algebra()`.
    pub fn from_carrier(gamma: &Arc<AuslanderAlgebra>, carrier: FdModule) -> FunctorMod {
        let carrier = carrier.with_algebra(gamma.algebra());
        FunctorMod { gamma: gamma.clone(), carrier, presentation: None, values: None }
    }

    pub fn zero(gamma: &Arc<AuslanderAlgebra>) -> FunctorMod {
        FunctorMod::from_carrier(gamma, FdModule::zero(gamma.algebra()))
    }

    pub fn gamma(&self) -> &Arc<AuslanderAlgebra> {
        &self.gamma
    }

    pub fn carrier(&self) -> &FdModule {
        &self.carrier
    }

    pub fn flavor(&self) -> Flavor {
        self.gamma.flavor()
    }

    pub fn variance(&self) -> Variance {
        self.gamma.variance()
    }

    /// The map `A -> B` whose cokernel functor this is, when known.
    pub fn presentation(&self) -> Option<&ModuleHom> {
        self.presentation.as_ref()
    }

    /// Value spaces, for functors built from hom values.
    pub fn value_spaces(&self) -> Option<&[QuotSpace]> {
        self.values.as_deref()
    }

    /// `dim F(M_k)` for every generator `M_k` (zero off the objects of the flavor).
    pub fn value_dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.gamma.subcat().len()];
        for (v, &k) in self.gamma.objects().iter().enumerate() {
            out[k] = self.carrier.dims()[v];
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero()
    }

    pub fn is_isomorphic(&self, other: &FunctorMod) -> Result<bool> {
        if !self.gamma.algebra().same_as(other.gamma.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        is_isomorphic(&self.carrier, &other.carrier.with_algebra(self.gamma.algebra()))
    }

    /// Indecomposable summands.
    pub fn summands(&self) -> Result<Vec<FunctorMod>> {
        Ok(decompose(&self.carrier)?
            .parts
            .into_iter()
            .map(|s| FunctorMod::from_carrier(&self.gamma, s.module))
            .collect())
    }

    /// Direct sum of the non-projective summands.
    pub fn strip_projectives(&self) -> Result<FunctorMod> {
        let keep: Vec<FdModule> = decompose(&self.carrier)?
            .parts
            .into_iter()
            .map(|s| s.module)
            .filter(|m| !is_projective(m))
            .collect();
        Ok(FunctorMod::from_carrier(&self.gamma, FdModule::sum_of(&keep, self.gamma.algebra())))
    }
}

/// Natural transformation between two functors built from hom values, induced by
/// `β: X -> X'` (contravariant values `Hom(-, X)`) or `β: X' -> X` (covariant values `Hom(X, -)`).
pub fn induced_map(f: &FunctorMod, g: &FunctorMod, beta: &ModuleHom) -> Result<ModuleHom> {
    let (Some(fv), Some(gv)) = (&f.values, &g.values) else {
        return Err(Error::Input("induced maps need functors built from hom values".into()));
    };
    let p = f.carrier.field();
    let contra = f.variance() == Variance::Contravariant;
    let blocks: Vec<Matrix> = (0..f.gamma.num_objects())
        .map(|v| {
            let cols: Vec<Vec<u32>> = fv[v]
                .reps()
                .iter()
                .map(|h| gv[v].coords(&if contra { beta.compose(h) } else { h.compose(beta) }))
                .collect();
            Matrix::from_columns(p, gv[v].dim(), &cols)
        })
        .collect();
    ModuleHom::new(f.carrier.clone(), g.carrier.with_algebra(f.gamma.algebra()), blocks)
}

/// Natural transformations `F -> G`.
pub fn nat_space(f: &FunctorMod, g: &FunctorMod) -> Result<HomSpace> {
    if !f.gamma.algebra().same_as(g.gamma.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(hom_space(f.carrier(), &g.carrier.with_algebra(f.gamma.algebra())))
}

/// Functor whose value at object `v` is the quotient space `values[v]`.
/// Contravariant values are homs `M_v -> X` (acted on by precomposition),
/// covariant values are homs `X -> M_v` (acted on by postcomposition).
pub fn from_values(gamma: &Arc<AuslanderAlgebra>, values: &[QuotSpace]) -> FunctorMod {
    let alg = gamma.algebra();
    let p = alg.field();
    let dims: Vec<usize> = values.iter().map(QuotSpace::dim).collect();
    let contra = gamma.variance() == Variance::Contravariant;
    let action: Vec<Matrix> = (0..alg.dim())
        .map(|b| {
            let (i, j) = gamma.ends(b);
            let lift = gamma.lift(b);
            let (from, to) = if contra { (j, i) } else { (i, j) };
            let cols: Vec<Vec<u32>> = values[from]
                .reps()
                .iter()
                .map(|h| {
                    let moved = if contra { h.compose(lift) } else { lift.compose(h) };
                    values[to].coords(&moved)
                })
                .collect();
            Matrix::from_columns(p, dims[to], &cols)
        })
        .collect();
    let carrier = FdModule::new_unchecked(alg.clone(), dims, action);
    debug_assert!(carrier.check_axioms());
    FunctorMod { gamma: gamma.clone(), carrier, presentation: None, values: Some(values.into()) }
}

/// Cokernel of the Yoneda image of `g: A -> B`: `coker(Hom(-, A) -> Hom(-, B))`
/// for contravariant algebras and `coker(Hom(B, -) -> Hom(A, -))` for covariant ones,
/// taken modulo the ideal of the flavor.
pub fn functor_coker(gamma: &Arc<AuslanderAlgebra>, g: &ModuleHom) -> FunctorMod {
    let flavor = gamma.flavor();
    let values: Vec<QuotSpace> = (0..gamma.num_objects())
        .map(|v| {
            let m = gamma.object_module(v);
            match gamma.variance() {
                Variance::Contravariant => {
                    let space = hom_space(m, g.target());
                    let mut ideal: Vec<ModuleHom> =
                        hom_space(m, g.source()).basis().iter().map(|h| g.compose(h)).collect();
                    ideal.extend(flavor_ideal(flavor, m, g.target()));
                    QuotSpace::new(space, &ideal, &[])
                }
                Variance::Covariant => {
                    let space = hom_space(g.source(), m);
                    let mut ideal: Vec<ModuleHom> =
                        hom_space(g.target(), m).basis().iter().map(|h| h.compose(g)).collect();
                    ideal.extend(flavor_ideal(flavor, g.source(), m));
                    QuotSpace::new(space, &ideal, &[])
                }
            }
        })
        .collect();
    let mut f = from_values(gamma, &values);
    f.presentation = Some(g.clone());
    f
}

/// The (stable, costable) representable functor at `X`:
/// `Hom(-, X)` for contravariant algebras, `Hom(X, -)` for covariant ones.
pub fn yoneda(gamma: &Arc<AuslanderAlgebra>, x: &FdModule) -> FunctorMod {
    let zero = FdModule::zero(x.algebra());
    let g = match gamma.variance() {
        Variance::Contravariant => ModuleHom::zero(&zero, x),
        Variance::Covariant => ModuleHom::zero(x, &zero),
    };
    functor_coker(gamma, &g)
}

/// `Extⁿ(-, X)|_M` (contravariant) or `Extⁿ(X, -)|_M` (covariant), realized by
/// dimension shifting as a cokernel functor.
pub fn ext_functor(gamma: &Arc<AuslanderAlgebra>, n: usize, x: &FdModule) -> Result<FunctorMod> {
    if n == 0 {
        return Err(Error::Input("Ext functors need n ≥ 1".into()));
    }
    Ok(match gamma.variance() {
        Variance::Contravariant => {
            let y = cosyzygy_n(x, n - 1);
            let (_, proj, _) = cosyzygy_sequence(&y);
            functor_coker(gamma, &proj)
        }
        Variance::Covariant => {
            let w = syzygy_n(x, n - 1);
            let (_, incl, _) = syzygy_sequence(&w);
            functor_coker(gamma, &incl)
        }
    })
}

/// Reads a plain functor vanishing on the excluded generators as a functor over `target`.
pub fn restrict(f: &FunctorMod, target: &Arc<AuslanderAlgebra>) -> Result<FunctorMod> {
    let plain = f.gamma();
    if plain.flavor() != Flavor::Plain || plain.variance() != target.variance() {
        return Err(Error::Input("restriction starts from a plain functor of the same variance".into()));
    }
    let dims = f.value_dims();
    for (k, &d) in dims.iter().enumerate() {
        if d != 0 && target.vertex_of(k).is_none() {
            return Err(Error::Hypothesis(format!(
                "functor does not vanish on {}",
                target.subcat().generator_names()[k]
            )));
        }
    }
    let alg = target.algebra();
    let new_dims: Vec<usize> = target.objects().iter().map(|&k| dims[k]).collect();
    let action: Vec<Matrix> = (0..alg.dim())
        .map(|b| {
            let (i, j) = target.ends(b);
            let (gi, gj) = (target.objects()[i], target.objects()[j]);
            let x = plain.element(gi, gj, target.lift(b));
            let (a, c) = plain.corner_of(gi, gj);
            f.carrier.act_element(&x, a, c)
        })
        .collect();
    let carrier = FdModule::new_unchecked(alg.clone(), new_dims, action);
    debug_assert!(carrier.check_axioms());
    Ok(FunctorMod { gamma: target.clone(), carrier, presentation: f.presentation.clone(), values: None })
}

/// Views a functor over a quotient algebra as a plain functor (zero off its objects).
pub fn inflate(f: &FunctorMod, plain: &Arc<AuslanderAlgebra>) -> FunctorMod {
    let src = f.gamma();
    let alg = plain.algebra();
    let p = alg.field();
    let vd = f.value_dims();
    let action: Vec<Matrix> = (0..alg.dim())
        .map(|b| {
            let (i, j) = plain.ends(b);
            let (gi, gj) = (plain.objects()[i], plain.objects()[j]);
            let (from, to) = match plain.variance() {
                Variance::Contravariant => (gj, gi),
                Variance::Covariant => (gi, gj),
            };
            match (src.vertex_of(gi), src.vertex_of(gj)) {
                (Some(si), Some(sj)) => {
                    let x = src.element(si, sj, plain.lift(b));
                    let (a, c) = src.corner_of(si, sj);
                    f.carrier.act_element(&x, a, c)
                }
                _ => Matrix::zeros(p, vd[to], vd[from]),
            }
        })
        .collect();
    let carrier = FdModule::new_unchecked(alg.clone(), vd, action);
    debug_assert!(carrier.check_axioms());
    FunctorMod { gamma: plain.clone(), carrier, presentation: f.presentation.clone(), values: None }
}

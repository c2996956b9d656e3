use crate::error::{Error, Result};
use crate::functcat::{ext_functor, nat_space, presentation, yoneda, FunctorMod};
use crate::modcat::{costable_hom_dim, ext_dim, is_injective, is_projective, stable_hom_dim, FdModule};

use super::context::Suite;
use super::report::CheckReport;

pub fn defect_lemma(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("defect_lemma");
    let ins = s.ins;
    let n = ins.n();
    let (stable, costable) = (ins.stable()?, ins.costable_co()?);
    let cats = ins.cats();
    for x in s.monos()? {
        let seq = ins.n_cokernel(x)?;
        let objs = &seq.objects;
        let (first, last) = (&objs[0], &objs[n + 1]);
        if is_projective(&objs[n]) {
            rep.count("projective_sequences", 1);
            let lower = cats.contravariant_defect(&seq)?;
            let upper = cats.covariant_defect(&seq)?;
            rep.expect(lower.is_isomorphic(&yoneda(&stable, last))?, || {
                format!("δ* of {} is not M̲(-, {})", s.map_name(&x.f), s.module_name(last))
            });
            rep.expect(upper.is_isomorphic(&ext_functor(&costable, n, last)?)?, || {
                format!("δ_* of {} is not Extⁿ({}, -)", s.map_name(&x.f), s.module_name(last))
            });
        }
        if is_injective(&objs[1]) {
            rep.count("injective_sequences", 1);
            let lower = cats.contravariant_defect(&seq)?;
            let upper = cats.covariant_defect(&seq)?;
            rep.expect(upper.is_isomorphic(&yoneda(&costable, first))?, || {
                format!("δ_* of {} is not M̄({}, -)", s.map_name(&x.f), s.module_name(first))
            });
            rep.expect(lower.is_isomorphic(&ext_functor(&stable, n, first)?)?, || {
                format!("δ* of {} is not Extⁿ(-, {})", s.map_name(&x.f), s.module_name(first))
            });
        }
    }
    Ok(rep)
}

pub fn sigma_defects(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("sigma_defects");
    let ins = s.ins;
    let n = ins.n();
    let (stable, costable) = (ins.stable()?, ins.costable_co()?);
    for x in s.monos()? {
        let seq = ins.n_cokernel(x)?;
        let lower = ins.cats().contravariant_defect(&seq)?;
        let upper = ins.cats().covariant_defect(&seq)?;
        rep.count("sequences", 1);
        rep.expect(ins.sigma(&lower)?.is_isomorphic(&upper)?, || format!("Σ(δ*) ≠ δ_* for {}", s.map_name(&x.f)));
    }
    for g in ins.subcat().generator_modules() {
        rep.count("generators", 1);
        let image = ins.sigma(&yoneda(&stable, &g))?;
        rep.expect(image.is_isomorphic(&ext_functor(&costable, n, &g)?)?, || {
            format!("Σ M̲(-, {0}) ≠ Extⁿ({0}, -)", s.module_name(&g))
        });
        let back = ins.sigma_inverse(&yoneda(&costable, &g))?;
        rep.expect(back.is_isomorphic(&ext_functor(&stable, n, &g)?)?, || {
            format!("Σ⁻¹ M̄({0}, -) ≠ Extⁿ(-, {0})", s.module_name(&g))
        });
    }
    Ok(rep)
}

/// Compares `Nat(Extⁿ(X, -), Extⁿ(Y, -))` with `M̲(Y, X)` and
/// `Nat(Extⁿ(-, X), Extⁿ(-, Y))` with `M̄(X, Y)`; counts pairs where the
/// first also differs from `M̲(X, Y)`.
pub fn hilton_rees(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("hilton_rees");
    let ins = s.ins;
    let n = ins.n();
    let (stable, costable) = (ins.stable()?, ins.costable_co()?);
    let gens = ins.subcat().generator_modules();
    let co: Vec<FunctorMod> = gens.iter().map(|g| ext_functor(&costable, n, g)).collect::<Result<_>>()?;
    let contra: Vec<FunctorMod> = gens.iter().map(|g| ext_functor(&stable, n, g)).collect::<Result<_>>()?;
    rep.count("literal_form_mismatches", 0);
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            rep.count("pairs", 1);
            let nat = nat_space(&co[i], &co[j])?.dim();
            let (yx, xy) = (stable_hom_dim(y, x), stable_hom_dim(x, y));
            rep.expect(nat == yx, || {
                format!("dim Nat(Extⁿ({0}, -), Extⁿ({1}, -)) = {nat}, dim M̲({1}, {0}) = {yx}", s.module_name(x), s.module_name(y))
            });
            if nat != xy {
                rep.count("literal_form_mismatches", 1);
            }
            let nat = nat_space(&contra[i], &contra[j])?.dim();
            let bar = costable_hom_dim(x, y);
            rep.expect(nat == bar, || {
                format!("dim Nat(Extⁿ(-, {0}), Extⁿ(-, {1})) = {nat}, dim M̄({0}, {1}) = {bar}", s.module_name(x), s.module_name(y))
            });
        }
    }
    Ok(rep)
}

/// Multisets of `0..k` with between one and `cap` elements, in lexicographic order.
fn multisets(k: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
    for _ in 0..cap {
        out.extend(frontier.iter().cloned());
        frontier = frontier
            .iter()
            .flat_map(|m| (*m.last().expect("nonempty")..k).map(move |i| [m.as_slice(), &[i]].concat()))
            .collect();
    }
    out
}

pub fn direct_summand(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("direct_summand");
    let ins = s.ins;
    let n = ins.n();
    let costable = ins.costable_co()?;
    let gens = ins.subcat().generator_modules();
    let exts: Vec<FunctorMod> = gens
        .iter()
        .map(|g| ext_functor(&costable, n, g))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|f| !f.is_zero())
        .collect();
    for idx in multisets(gens.len(), s.cfg.pairs.mult_cap) {
        let parts: Vec<FdModule> = idx.iter().map(|&i| gens[i].clone()).collect();
        let a = FdModule::sum_of(&parts, ins.base());
        rep.count("objects", 1);
        for summand in ext_functor(&costable, n, &a)?.summands()? {
            rep.count("summands", 1);
            let mut matched = false;
            for e in &exts {
                if e.is_isomorphic(&summand)? {
                    matched = true;
                    break;
                }
            }
            rep.expect(matched, || {
                format!("summand {} of Extⁿ({}, -) is not Extⁿ(B, -)", s.functor_name(&summand), s.module_name(&a))
            });
        }
    }
    Ok(rep)
}

pub fn tau_n_thm(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("tau_n_thm");
    let ins = s.ins;
    let m = ins.subcat();
    let n = ins.n();
    let gens = m.generator_modules();
    let mut images = Vec::new();
    for (k, x) in gens.iter().enumerate() {
        if m.is_projective_generator(k) {
            continue;
        }
        let direct = match ins.tau_n_direct(x) {
            Ok(t) => t,
            Err(e) => {
                rep.fail(format!("τₙ {} undefined: {e}", s.module_name(x)));
                continue;
            }
        };
        let t = m.position_of(&direct).expect("generator");
        rep.count("translates", 1);
        rep.note(format!("τₙ {} = {}", s.module_name(x), s.module_name(&direct)));
        rep.expect(!m.is_injective_generator(t), || format!("τₙ {} is injective", s.module_name(x)));
        images.push(t);
        match ins.tau_n_via_sigma(x) {
            Ok(via) => rep.expect(m.position_of(&via) == Some(t), || {
                format!("τₙ {}: direct {} but via Σ {}", s.module_name(x), s.module_name(&direct), s.module_name(&via))
            }),
            Err(e) => rep.fail(format!("τₙ {} via Σ failed: {e}", s.module_name(x))),
        }
        for y in &gens {
            let (e, c) = (ext_dim(n, x, y), costable_hom_dim(y, &direct));
            rep.count("ext_pairs", 1);
            rep.expect(e == c, || {
                format!("dim Extⁿ({0}, {1}) = {e}, dim M̄({1}, τₙ{0}) = {c}", s.module_name(x), s.module_name(y))
            });
        }
    }
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let targets = (0..gens.len()).filter(|&k| !m.is_injective_generator(k)).count();
    rep.expect(sorted.len() == images.len() && sorted.len() == targets, || {
        format!("τₙ is not a bijection: {} images onto {targets} non-injectives", sorted.len())
    });
    Ok(rep)
}

pub fn prop_2_10_counts(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("prop_2_10_counts");
    let ins = s.ins;
    let m = ins.subcat();
    let plain = ins.plain()?;
    let plain_co = ins.cats().get(crate::functcat::Flavor::Plain, crate::functcat::Variance::Covariant)?;
    let (mut proj_side, mut inj_side) = (0, 0);
    for x in s.catalog().modules() {
        if matches!(m.proper_dimension(x)?, Some(d) if d <= 1) {
            let f = yoneda(&plain, x);
            rep.expect(presentation(&f)?.map.is_injective(), || {
                format!("M(-, {}) has projective dimension above one", s.module_name(x))
            });
            if !is_projective(f.carrier()) {
                proj_side += 1;
            }
        }
        if matches!(m.coproper_dimension(x)?, Some(d) if d <= 1) {
            let f = yoneda(&plain_co, x);
            rep.expect(presentation(&f)?.map.is_surjective(), || {
                format!("M({}, -) has projective dimension above one", s.module_name(x))
            });
            if !is_projective(f.carrier()) {
                inj_side += 1;
            }
        }
    }
    let (st, co) = (s.stable_inds()?.len(), s.costable_inds()?.len());
    rep.count("stable_pd_le_one", proj_side);
    rep.count("mod_stable", st);
    rep.count("stable_id_le_one", inj_side);
    rep.count("costable_mod", co);
    rep.expect(proj_side == st, || format!("{proj_side} stable indecomposables of pd ≤ 1, {st} in mod-M̲"));
    rep.expect(inj_side == co, || format!("{inj_side} transported indecomposables of id ≤ 1, {co} in M̄-mod"));
    Ok(rep)
}

pub fn finite_type(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("finite_type");
    match s.stable_inds() {
        Ok(v) => rep.count("indecomposables", v.len()),
        Err(e @ Error::EnumerationCapExceeded(_)) => rep.fail(format!("enumeration of mod-M̲ stopped: {e}")),
        Err(e) => return Err(e),
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::multisets;

    #[test]
    fn multisets_up_to_two() {
        assert_eq!(multisets(2, 2), vec![vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets(3, 1).len(), 3);
    }
}

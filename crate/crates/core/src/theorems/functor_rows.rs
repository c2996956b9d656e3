use crate::error::Result;
use crate::functcat::{nat_space, v, yoneda, FunctorMod};
use crate::linalg::Matrix;
use crate::modcat::{cosyzygy_n, hom_dim, injective_envelope, is_isomorphic, syzygy_n, FdModule, ModuleHom};
use crate::paperfun::{is_k, is_split_epi, is_split_mono, is_u, is_v, is_vprime, MonoPair, SMorphism};

use super::context::{check_fullness, span_rank, Suite};
use super::report::CheckReport;

/// Indecomposables of proper `M`-dimension at most one.
fn proper_le_one(s: &Suite) -> Result<Vec<FdModule>> {
    let m = s.ins.subcat();
    let mut out = Vec::new();
    for x in s.catalog().modules() {
        if matches!(m.proper_dimension(x)?, Some(d) if d <= 1) {
            out.push(x.clone());
        }
    }
    Ok(out)
}

pub fn yoneda_equiv(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("yoneda_equiv");
    let plain = s.ins.plain()?;
    let objs = proper_le_one(s)?;
    let ys: Vec<FunctorMod> = objs.iter().map(|x| yoneda(&plain, x)).collect();
    for (i, x) in objs.iter().enumerate() {
        for (j, y) in objs.iter().enumerate() {
            let (h, n) = (hom_dim(x, y), nat_space(&ys[i], &ys[j])?.dim());
            rep.count("pairs", 1);
            rep.expect(h == n, || {
                format!("dim Hom({}, {}) = {h} but dim Nat = {n}", s.module_name(x), s.module_name(y))
            });
        }
        let back = v(&ys[i])?;
        rep.count("round_trips", 1);
        rep.expect(is_isomorphic(&back, x)?, || format!("v(Y {}) = {}", s.module_name(x), s.module_name(&back)));
    }
    Ok(rep)
}

pub fn upsilon_suite(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("upsilon_suite");
    let (ins, mc) = (s.ins, s.ins.morphism_cat());
    for x in s.monos()? {
        let zero = ins.upsilon(x)?.is_zero();
        rep.count("kernel_objects", 1);
        rep.expect(zero == is_k(mc, &x.f)?, || format!("Υ({}) = 0 is {zero}, iso-sum is {}", s.map_name(&x.f), !zero));
    }
    check_fullness(
        &mut rep,
        s.fullness_monos()?,
        |x, y| mc.hom_basis(&x.f, &y.f),
        |x| ins.upsilon(x),
        |x, y, a| ins.upsilon_map(x, y, a),
        |x| s.map_name(&x.f),
    )?;
    let plain = ins.plain()?;
    for x in proper_le_one(s)? {
        let f = yoneda(&plain, &x);
        rep.count("preimages", 1);
        if let Err(e) = ins.upsilon_preimage(&f) {
            rep.fail(format!("no Υ-preimage of Y {}: {e}", s.module_name(&x)));
        }
    }
    Ok(rep)
}

pub fn phi_suite(s: &Suite) -> Result<CheckReport> {
    let ins = s.ins;
    if !ins.is_self_injective() {
        return Ok(CheckReport::skipped("phi_suite", &s.label, "self-injective base algebra"));
    }
    let mut rep = s.report("phi_suite");
    let mc = ins.morphism_cat();
    for x in s.monos()? {
        let zero = ins.phi(x)?.is_zero();
        let u = is_u(mc, &x.f)?;
        rep.count("kernel_objects", 1);
        rep.expect(zero == u, || format!("Φ({}) = 0 is {zero}, in add{{M→M, M→P}} is {u}", s.map_name(&x.f)));
    }
    check_fullness(
        &mut rep,
        s.fullness_monos()?,
        |x, y| mc.hom_basis(&x.f, &y.f),
        |x| ins.phi(x),
        |x, y, a| ins.phi_map(x, y, a),
        |x| s.map_name(&x.f),
    )?;
    for f in s.stable_inds()? {
        rep.count("preimages", 1);
        if let Err(e) = ins.phi_preimage(f) {
            rep.fail(format!("no Φ-preimage of {}: {e}", s.functor_name(f)));
        }
    }
    if s.cfg.deep_check {
        objectivity(s, &mut rep)?;
    }
    Ok(rep)
}

fn square_vec(a: &SMorphism) -> Vec<u32> {
    let mut v = a.a1.flatten();
    v.extend(a.a2.flatten());
    v
}

fn compose_squares(b: &SMorphism, c: &SMorphism) -> SMorphism {
    SMorphism { a1: b.a1.compose(&c.a1), a2: b.a2.compose(&c.a2) }
}

/// The squares killed by `Φ` are exactly those factoring through objects of `U`.
fn objectivity(s: &Suite, rep: &mut CheckReport) -> Result<()> {
    let (ins, mc) = (s.ins, s.ins.morphism_cat());
    let inds = s.ind_monos()?;
    let us: Vec<&MonoPair> = inds.iter().filter(|u| is_u(mc, &u.f).unwrap_or(false)).collect();
    for x in inds {
        for y in inds {
            let basis = mc.hom_basis(&x.f, &y.f);
            if basis.is_empty() {
                continue;
            }
            let images: Vec<ModuleHom> = basis.iter().map(|a| ins.phi_map(x, y, a)).collect::<Result<_>>()?;
            let kernel_dim = basis.len() - span_rank(&images);
            let mut factoring = Vec::new();
            for u in &us {
                let into = mc.hom_basis(&x.f, &u.f);
                let out = mc.hom_basis(&u.f, &y.f);
                for c in &into {
                    for b in &out {
                        let sq = compose_squares(b, c);
                        rep.expect(ins.phi_map(x, y, &sq)?.flatten().iter().all(|&z| z == 0), || {
                            format!("Φ is nonzero on a square {} -> {} through U", s.map_name(&x.f), s.map_name(&y.f))
                        });
                        factoring.push(square_vec(&sq));
                    }
                }
            }
            let p = x.f.source().field();
            let len = square_vec(&basis[0]).len();
            let rank = if factoring.is_empty() { 0 } else { Matrix::from_columns(p, len, &factoring).rank() };
            rep.count("objectivity_pairs", 1);
            rep.expect(rank == kernel_dim, || {
                format!(
                    "ker Φ on ({}, {}) has dim {kernel_dim}, squares through U span {rank}",
                    s.map_name(&x.f),
                    s.map_name(&y.f)
                )
            });
        }
    }
    Ok(())
}

pub fn psi_suite(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("psi_suite");
    let (ins, mc) = (s.ins, s.ins.morphism_cat());
    for x in s.monos()? {
        let zero = ins.psi(x)?.is_zero();
        let split = is_split_mono(&x.f);
        rep.count("kernel_objects", 1);
        rep.expect(zero == split, || format!("Ψ({}) = 0 is {zero}, split is {split}", s.map_name(&x.f)));
        rep.expect(split == is_v(mc, &x.f).unwrap_or(!split), || {
            format!("{} split is {split} but add{{M→M, 0→M}} disagrees", s.map_name(&x.f))
        });
    }
    check_fullness(
        &mut rep,
        s.fullness_monos()?,
        |x, y| mc.hom_basis(&x.f, &y.f),
        |x| ins.psi(x),
        |x, y, a| ins.psi_map(x, y, a),
        |x| s.map_name(&x.f),
    )?;
    for f in s.stable_inds()? {
        rep.count("preimages", 1);
        if let Err(e) = ins.psi_preimage(f) {
            rep.fail(format!("no Ψ-preimage of {}: {e}", s.functor_name(f)));
        }
    }
    Ok(rep)
}

pub fn theta_suite(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("theta_suite");
    let (ins, mc) = (s.ins, s.ins.morphism_cat());
    for x in s.epis()? {
        let split = is_split_epi(&x.f);
        let zero = ins.theta(x)?.is_zero();
        rep.count("kernel_objects", 1);
        rep.expect(zero == split, || format!("Θ({}) = 0 is {zero}, split is {split}", s.map_name(&x.f)));
        let zero_dual = ins.psi_prime(x)?.is_zero();
        let vprime = is_vprime(mc, &x.f)?;
        rep.expect(zero_dual == vprime, || {
            format!("Ψ′({}) = 0 is {zero_dual}, in add{{M→M, M→0}} is {vprime}", s.map_name(&x.f))
        });
    }
    check_fullness(
        &mut rep,
        s.fullness_epis()?,
        |x, y| mc.hom_basis(&x.f, &y.f),
        |x| ins.theta(x),
        |x, y, a| ins.theta_map(x, y, a),
        |x| s.map_name(&x.f),
    )?;
    for f in s.stable_inds()? {
        rep.count("preimages", 1);
        if let Err(e) = ins.theta_preimage(f) {
            rep.fail(format!("no Θ-preimage of {}: {e}", s.functor_name(f)));
        }
    }
    Ok(rep)
}

pub fn equiv_chain(s: &Suite) -> Result<CheckReport> {
    let mut rep = s.report("equiv_chain");
    let (ins, mc) = (s.ins, s.ins.morphism_cat());
    let mut monos = Vec::new();
    for x in s.ind_monos()? {
        if !is_v(mc, &x.f)? {
            monos.push(x);
        }
    }
    let mut epis = 0;
    for x in s.ind_epis()? {
        if !is_vprime(mc, &x.f)? {
            epis += 1;
        }
    }
    let stable = s.stable_inds()?;
    let costable = s.costable_inds()?;
    let counts = [monos.len(), stable.len(), costable.len(), epis];
    for (k, c) in ["S(M)/V", "mod-M̲", "M̄-mod", "F(M)/V′"].iter().zip(counts) {
        rep.count(k, c);
    }
    rep.expect(counts.iter().all(|&c| c == counts[0]), || format!("indecomposable counts differ: {counts:?}"));
    let mut hit = vec![false; stable.len()];
    for x in monos {
        let f = ins.psi(x)?;
        let found = stable.iter().position(|g| g.is_isomorphic(&f).unwrap_or(false));
        match found {
            Some(i) if !hit[i] => hit[i] = true,
            Some(_) => rep.fail(format!("Ψ({}) repeats an indecomposable", s.map_name(&x.f))),
            None => rep.fail(format!("Ψ({}) = {} is not indecomposable", s.map_name(&x.f), s.functor_name(&f))),
        }
    }
    Ok(rep)
}

pub fn comparison(s: &Suite) -> Result<CheckReport> {
    let ins = s.ins;
    if !ins.is_self_injective() {
        return Ok(CheckReport::skipped("comparison", &s.label, "self-injective base algebra"));
    }
    if !ins.subcat().is_nz()? {
        return Ok(CheckReport::skipped("comparison", &s.label, "nZ cluster tilting subcategory"));
    }
    let mut rep = s.report("comparison");
    let stable = ins.stable()?;
    let n = ins.n();
    for g in ins.subcat().generator_modules() {
        let zero = ModuleHom::zero(&FdModule::zero(g.algebra()), &g);
        let phi = ins.phi(&MonoPair { f: zero })?;
        rep.count("w_objects", 1);
        rep.expect(phi.is_isomorphic(&yoneda(&stable, &g))?, || format!("Φ(0 -> {}) ≠ M̲(-, M)", s.module_name(&g)));
        let env = injective_envelope(&g);
        let psi = ins.psi(&MonoPair { f: env.map })?;
        let shifted = cosyzygy_n(&g, n);
        rep.expect(psi.is_isomorphic(&yoneda(&stable, &shifted))?, || {
            format!("Ψ({} -> I) ≠ M̲(-, Ω^-n M)", s.module_name(&g))
        });
    }
    for x in s.monos()? {
        let phi = ins.phi(x)?.strip_projectives()?;
        let psi = ins.psi(x)?;
        let shifted = FunctorMod::from_carrier(&stable, syzygy_n(psi.carrier(), n)).strip_projectives()?;
        rep.count("objects", 1);
        rep.expect(phi.is_isomorphic(&shifted)?, || {
            format!(
                "Φ({}) = {} but Ωⁿ Ψ = {}",
                s.map_name(&x.f),
                s.functor_name(&phi),
                s.functor_name(&shifted)
            )
        });
    }
    Ok(rep)
}

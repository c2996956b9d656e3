use crate::modcat::{hom_space, FdModule, ModuleHom};

/// A map between `X` and a direct sum of generators, with the generator of each summand.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// Positions (into the generator list) of the summands, in order.
    pub parts: Vec<usize>,
    /// The direct sum of the listed generators.
    pub module: FdModule,
    /// `module -> X` for right approximations, `X -> module` for left ones.
    pub map: ModuleHom,
    /// Component maps, one per summand.
    pub components: Vec<ModuleHom>,
}

fn spans_for_right(gens: &[FdModule], x: &FdModule, comps: &[(usize, ModuleHom)], skip: Option<usize>) -> bool {
    for g in gens {
        let target = hom_space(g, x);
        if target.dim() == 0 {
            continue;
        }
        let mut homs = Vec::new();
        for (k, (i, h)) in comps.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            for u in hom_space(g, &gens[*i]).basis() {
                homs.push(h.compose(u));
            }
        }
        if target.span_rank(&homs) < target.dim() {
            return false;
        }
    }
    true
}

fn spans_for_left(gens: &[FdModule], x: &FdModule, comps: &[(usize, ModuleHom)], skip: Option<usize>) -> bool {
    for g in gens {
        let target = hom_space(x, g);
        if target.dim() == 0 {
            continue;
        }
        let mut homs = Vec::new();
        for (k, (i, h)) in comps.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            for u in hom_space(&gens[*i], g).basis() {
                homs.push(u.compose(h));
            }
        }
        if target.span_rank(&homs) < target.dim() {
            return false;
        }
    }
    true
}

fn assemble(gens: &[FdModule], x: &FdModule, comps: Vec<(usize, ModuleHom)>, right: bool) -> Approximation {
    let alg = x.algebra();
    let parts: Vec<usize> = comps.iter().map(|(i, _)| *i).collect();
    let mods: Vec<FdModule> = parts.iter().map(|&i| gens[i].clone()).collect();
    let (sum, incl, proj) = FdModule::direct_sum(&mods, alg);
    let mut map = if right { ModuleHom::zero(&sum, x) } else { ModuleHom::zero(x, &sum) };
    let mut components = Vec::new();
    for (k, (_, h)) in comps.into_iter().enumerate() {
        if right {
            let h = h.retarget(&mods[k], x);
            map = map.add(&h.compose(&proj[k]));
            components.push(h);
        } else {
            let h = h.retarget(x, &mods[k]);
            map = map.add(&incl[k].compose(&h));
            components.push(h);
        }
    }
    Approximation { parts, module: sum, map, components }
}

/// Minimal right approximation `⊕ M_i -> X` by the generators.
pub fn right_approximation(gens: &[FdModule], x: &FdModule) -> Approximation {
    let mut comps: Vec<(usize, ModuleHom)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for h in hom_space(g, x).basis() {
            comps.push((i, h.clone()));
        }
    }
    let mut k = comps.len();
    while k > 0 {
        k -= 1;
        if spans_for_right(gens, x, &comps, Some(k)) {
            comps.remove(k);
        }
    }
    assemble(gens, x, comps, true)
}

/// Minimal left approximation `X -> ⊕ M_i` by the generators.
pub fn left_approximation(gens: &[FdModule], x: &FdModule) -> Approximation {
    let mut comps: Vec<(usize, ModuleHom)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for h in hom_space(x, g).basis() {
            comps.push((i, h.clone()));
        }
    }
    let mut k = comps.len();
    while k > 0 {
        k -= 1;
        if spans_for_left(gens, x, &comps, Some(k)) {
            comps.remove(k);
        }
    }
    assemble(gens, x, comps, false)
}

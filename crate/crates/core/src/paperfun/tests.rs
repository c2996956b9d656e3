use std::sync::Arc;

use super::*;
use crate::algebra::presets;
use crate::cluster::{search_n_cluster_tilting, ClusterSubcat};
use crate::error::Error;
use crate::functcat::{yoneda, FunctorMod};
use crate::modcat::{hom_space, Caps, Catalog, FdModule, ModuleHom};

fn a3r2() -> Instance {
    let cat = Arc::new(Catalog::enumerate(&presets::a3r2(), Caps::default()).unwrap());
    Instance::new(&ClusterSubcat::from_names(cat, &["P1", "P2", "S1", "S3"], 2).unwrap())
}

fn ppa2() -> Instance {
    let cat = Arc::new(Catalog::enumerate(&presets::ppa2(), Caps::default()).unwrap());
    Instance::new(&search_n_cluster_tilting(&cat, 2).unwrap().remove(0))
}

fn module(ins: &Instance, name: &str) -> FdModule {
    let cat = ins.subcat().catalog();
    cat.module(cat.resolve(name).unwrap()).clone()
}

fn first_hom(x: &FdModule, y: &FdModule) -> ModuleHom {
    hom_space(x, y).basis()[0].clone()
}

fn name(ins: &Instance, x: &FdModule) -> String {
    let cat = ins.subcat().catalog();
    cat.name(cat.index_of(x).unwrap()).to_string()
}

fn nonzero_values(f: &FunctorMod) -> Vec<(String, usize)> {
    let names = f.gamma().subcat().generator_names();
    names.into_iter().zip(f.value_dims()).filter(|(_, d)| *d > 0).collect()
}

fn at(name: &str, d: usize) -> Vec<(String, usize)> {
    vec![(name.to_string(), d)]
}

fn mono(ins: &Instance, a: &str, b: &str) -> MonoPair {
    MonoPair::new(ins.subcat(), first_hom(&module(ins, a), &module(ins, b))).unwrap()
}

fn epi(ins: &Instance, a: &str, b: &str) -> EpiPair {
    EpiPair::new(ins.subcat(), first_hom(&module(ins, a), &module(ins, b))).unwrap()
}

#[test]
fn worked_values() {
    let ins = a3r2();
    let x = mono(&ins, "S3", "P2");
    assert_eq!(nonzero_values(&ins.upsilon(&x).unwrap()), at("P2", 1));
    assert_eq!(nonzero_values(&ins.psi(&x).unwrap()), at("S1", 1));
    let g = epi(&ins, "P1", "S1");
    assert_eq!(nonzero_values(&ins.theta(&g).unwrap()), at("S1", 1));
    assert_eq!(nonzero_values(&ins.psi_prime(&g).unwrap()), at("S3", 1));
    let s = ins.sigma(&yoneda(&ins.stable().unwrap(), &module(&ins, "S1"))).unwrap();
    assert_eq!(nonzero_values(&s), at("S3", 1));
}

#[test]
fn phi_needs_self_injective_base() {
    let ins = a3r2();
    assert!(matches!(ins.phi(&mono(&ins, "S3", "P2")), Err(Error::NotSelfInjective)));
}

#[test]
fn sigma_round_trip() {
    for ins in [a3r2(), ppa2()] {
        let stable = ins.stable().unwrap();
        for k in stable.objects().to_vec() {
            let f = yoneda(&stable, ins.subcat().generator(k));
            let s = ins.sigma(&f).unwrap();
            assert!(!s.is_zero());
            assert!(ins.sigma_inverse(&s).unwrap().is_isomorphic(&f).unwrap());
        }
    }
}

#[test]
fn higher_translate() {
    let ins = a3r2();
    let s1 = module(&ins, "S1");
    assert_eq!(name(&ins, &ins.tau_n_direct(&s1).unwrap()), "S3");
    assert_eq!(name(&ins, &ins.tau_n_via_sigma(&s1).unwrap()), "S3");
    let cat = Arc::new(Catalog::enumerate(&presets::ppa2(), Caps::default()).unwrap());
    let hits = search_n_cluster_tilting(&cat, 2).unwrap();
    let m = hits.iter().find(|m| m.generator_names().iter().any(|n| n == "S1")).unwrap();
    let ins = Instance::new(m);
    let s1 = module(&ins, "S1");
    assert_eq!(name(&ins, &ins.tau_n_direct(&s1).unwrap()), "S1");
    assert_eq!(name(&ins, &ins.tau_n_via_sigma(&s1).unwrap()), "S1");
}

#[test]
fn preimages_hit_every_indecomposable() {
    let ins = a3r2();
    let stable = ins.stable().unwrap();
    for k in stable.objects().to_vec() {
        let f = yoneda(&stable, ins.subcat().generator(k));
        ins.theta_preimage(&f).unwrap();
        ins.psi_preimage(&f).unwrap();
    }
    let ins = ppa2();
    let stable = ins.stable().unwrap();
    for k in stable.objects().to_vec() {
        let f = yoneda(&stable, ins.subcat().generator(k));
        ins.phi_preimage(&f).unwrap();
        ins.psi_preimage(&f).unwrap();
    }
}

#[test]
fn morphism_modules_round_trip() {
    let ins = a3r2();
    let mc = ins.morphism_cat();
    let f = mono(&ins, "S3", "P2").f;
    let back = mc.from_module(&mc.to_module(&f));
    assert_eq!(back.blocks(), f.blocks());
    assert!(mc.is_isomorphic(&f, &back).unwrap());
    assert_eq!(mc.decompose(&f).unwrap().len(), 1);
}

#[test]
fn identity_squares_map_to_identities() {
    let ins = a3r2();
    let x = mono(&ins, "S3", "P2");
    let id = SMorphism { a1: ModuleHom::identity(x.f.source()), a2: ModuleHom::identity(x.f.target()) };
    let psi = ins.psi_map(&x, &x, &id).unwrap();
    assert!(psi.is_iso());
    let up = ins.upsilon_map(&x, &x, &id).unwrap();
    assert!(up.is_iso());
    let basis = ins.morphism_cat().hom_basis(&x.f, &x.f);
    assert!(!basis.is_empty());
    for a in &basis {
        assert_eq!(x.f.compose(&a.a1).blocks(), a.a2.compose(&x.f).blocks());
    }
}

#[test]
fn kernel_objects_on_indecomposables() {
    let ins = a3r2();
    let mc = ins.morphism_cat();
    for x in indecomposable_monos(ins.subcat()).unwrap() {
        let psi0 = ins.psi(&x).unwrap().is_zero();
        assert_eq!(psi0, is_split_mono(&x.f), "{:?}", shape(&x.f));
        assert_eq!(ins.upsilon(&x).unwrap().is_zero(), is_k(mc, &x.f).unwrap());
    }
    for x in indecomposable_epis(ins.subcat()).unwrap() {
        assert_eq!(ins.theta(&x).unwrap().is_zero(), is_split_epi(&x.f));
    }
}

#[test]
fn shapes() {
    let ins = a3r2();
    let mc = ins.morphism_cat();
    let p2 = module(&ins, "P2");
    let zero = FdModule::zero(p2.algebra());
    let from_zero = ModuleHom::zero(&zero, &p2);
    assert_eq!(shape(&from_zero), Shape::FromZero);
    assert!(is_v(mc, &from_zero).unwrap() && is_w(mc, &from_zero).unwrap());
    assert!(!is_k(mc, &from_zero).unwrap());
    let to_proj = mono(&ins, "S3", "P2").f;
    assert_eq!(shape(&to_proj), Shape::ToProjective);
    assert!(is_u(mc, &to_proj).unwrap() && !is_v(mc, &to_proj).unwrap());
    let to_zero = ModuleHom::zero(&p2, &zero);
    assert!(is_vprime(mc, &to_zero).unwrap() && !is_v(mc, &to_zero).unwrap());
    assert!(is_k(mc, &ModuleHom::identity(&p2)).unwrap());
}

#[test]
fn populations_respect_caps() {
    let ins = a3r2();
    let caps = PairCaps { mult_cap: 2, max_dim: 8 };
    let pop = enumerate_mono_pairs(ins.subcat(), caps).unwrap();
    assert!(!pop.is_empty());
    for x in &pop {
        assert!(x.f.is_injective());
        assert!(x.f.source().dim() + x.f.target().dim() <= 8);
    }
    let epis = enumerate_epi_pairs(ins.subcat(), caps).unwrap();
    assert!(epis.iter().all(|x| x.f.is_surjective()));
}

use std::sync::Arc;

use super::*;
use crate::algebra::presets;
use crate::cluster::{search_n_cluster_tilting, ClusterSubcat};
use crate::modcat::{
    ext_dim, hom_dim, hom_space, is_isomorphic, stable_hom_dim, Caps, Catalog, FdModule, ModuleHom,
};

fn a3r2_m3() -> ClusterSubcat {
    let cat = Arc::new(Catalog::enumerate(&presets::a3r2(), Caps::default()).unwrap());
    ClusterSubcat::from_names(cat, &["P1", "P2", "S1", "S3"], 2).unwrap()
}

fn ppa2_first() -> ClusterSubcat {
    let cat = Arc::new(Catalog::enumerate(&presets::ppa2(), Caps::default()).unwrap());
    search_n_cluster_tilting(&cat, 2).unwrap().remove(0)
}

fn module(m: &ClusterSubcat, name: &str) -> FdModule {
    m.catalog().module(m.catalog().resolve(name).unwrap()).clone()
}

fn first_hom(x: &FdModule, y: &FdModule) -> ModuleHom {
    hom_space(x, y).basis()[0].clone()
}

/// Values listed by generator name.
fn values(f: &FunctorMod) -> Vec<(String, usize)> {
    let names = f.gamma().subcat().generator_names();
    names.into_iter().zip(f.value_dims()).collect()
}

fn value_at(f: &FunctorMod, name: &str) -> usize {
    values(f).into_iter().find(|(n, _)| n == name).unwrap().1
}

#[test]
fn yoneda_values_match_hom_table() {
    let m = a3r2_m3();
    let cats = FunctorCats::new(&m);
    let plain = cats.plain().unwrap();
    let s1 = module(&m, "S1");
    let y = yoneda(&plain, &s1);
    assert_eq!(value_at(&y, "S1"), 1);
    assert_eq!(value_at(&y, "P1"), 1);
    assert_eq!(value_at(&y, "P2"), 0);
    assert_eq!(value_at(&y, "S3"), 0);
    for x in m.catalog().modules() {
        let y = yoneda(&plain, x);
        let expect: Vec<usize> = m.generator_modules().iter().map(|g| hom_dim(g, x)).collect();
        assert_eq!(y.value_dims(), expect);
        assert!(y.carrier().check_axioms());
    }
    let stable = cats.stable().unwrap();
    assert!(yoneda(&stable, &module(&m, "P2")).is_zero());
}

#[test]
fn yoneda_is_fully_faithful() {
    let m = a3r2_m3();
    let cats = FunctorCats::new(&m);
    let plain = cats.plain().unwrap();
    let mods = m.catalog().modules();
    for x in mods {
        for y in mods {
            let nat = nat_space(&yoneda(&plain, x), &yoneda(&plain, y)).unwrap();
            assert_eq!(nat.dim(), hom_dim(x, y));
        }
    }
    let g = functor_coker(&plain, &first_hom(&module(&m, "P1"), &module(&m, "S1")));
    for (k, x) in m.generator_modules().iter().enumerate() {
        assert_eq!(nat_space(&yoneda(&plain, x), &g).unwrap().dim(), g.value_dims()[k]);
    }
}

#[test]
fn cokernel_functors() {
    let m = a3r2_m3();
    let cats = FunctorCats::new(&m);
    let plain = cats.plain().unwrap();
    let p1 = module(&m, "P1");
    assert!(functor_coker(&plain, &ModuleHom::identity(&p1)).is_zero());
    let top = functor_coker(&plain, &first_hom(&p1, &module(&m, "S1")));
    assert_eq!(values(&top).iter().map(|v| v.1).sum::<usize>(), 1);
    assert_eq!(value_at(&top, "S1"), 1);
    let zero = FdModule::zero(p1.algebra());
    let y = functor_coker(&plain, &ModuleHom::zero(&zero, &p1));
    assert!(y.is_isomorphic(&yoneda(&plain, &p1)).unwrap());
}

#[test]
fn ext_functors_match_ext_table() {
    let m = a3r2_m3();
    let cats = FunctorCats::new(&m);
    let co = cats.get(Flavor::Costable, Variance::Covariant).unwrap();
    let contra = cats.get(Flavor::Stable, Variance::Contravariant).unwrap();
    let e = ext_functor(&co, 2, &module(&m, "S1")).unwrap();
    assert_eq!(value_at(&e, "S3"), 1);
    assert_eq!(e.value_dims().iter().sum::<usize>(), 1);
    let e = ext_functor(&contra, 2, &module(&m, "S3")).unwrap();
    assert_eq!(value_at(&e, "S1"), 1);
    assert_eq!(e.value_dims().iter().sum::<usize>(), 1);
    assert!(ext_functor(&co, 2, &module(&m, "P1")).unwrap().is_zero());
    let plain_co = cats.get(Flavor::Plain, Variance::Covariant).unwrap();
    let plain = cats.plain().unwrap();
    for x in m.catalog().modules() {
        for n in 1..=2 {
            let cov = ext_functor(&plain_co, n, x).unwrap();
            let expect: Vec<usize> = m.generator_modules().iter().map(|g| ext_dim(n, x, g)).collect();
            assert_eq!(cov.value_dims(), expect);
            let con = ext_functor(&plain, n, x).unwrap();
            let expect: Vec<usize> = m.generator_modules().iter().map(|g| ext_dim(n, g, x)).collect();
            assert_eq!(con.value_dims(), expect);
        }
    }
    let e = ext_functor(&co, 2, &module(&m, "S1")).unwrap();
    assert_eq!(nat_space(&e, &e).unwrap().dim(), 1);
    assert_eq!(nat_space(&FunctorMod::zero(&co), &e).unwrap().dim(), 0);
}

#[test]
fn defects_of_the_worked_sequence() {
    let m = a3r2_m3();
    let cats = FunctorCats::new(&m);
    let f = first_hom(&module(&m, "S3"), &module(&m, "P2"));
    let seq = m.n_cokernel(&f).unwrap();
    let upper = cats.contravariant_defect(&seq).unwrap();
    assert_eq!(value_at(&upper, "S1"), 1);
    assert_eq!(upper.value_dims().iter().sum::<usize>(), 1);
    let lower = cats.covariant_defect(&seq).unwrap();
    assert_eq!(value_at(&lower, "S3"), 1);
    assert_eq!(lower.value_dims().iter().sum::<usize>(), 1);
    for (k, _) in m.generator_modules().iter().enumerate() {
        if m.is_projective_generator(k) {
            assert_eq!(upper.value_dims()[k], 0);
        }
        if m.is_injective_generator(k) {
            assert_eq!(lower.value_dims()[k], 0);
        }
    }
}

#[test]
fn recollement_identities() {
    for m in [a3r2_m3(), ppa2_first()] {
        let cats = FunctorCats::new(&m);
        let plain = cats.plain().unwrap();
        let stable = cats.stable().unwrap();
        for x in m.catalog().modules() {
            let y = yoneda(&plain, x);
            assert!(is_isomorphic(&v(&y).unwrap(), x).unwrap());
            let vl = v_lambda(&plain, x);
            assert!(is_isomorphic(&v(&vl).unwrap(), x).unwrap());
            assert!(i_lambda(&vl, &stable).unwrap().is_zero());
            let il = i_lambda(&y, &stable).unwrap();
            assert!(il.is_isomorphic(&kill_projectives(&y, &stable).unwrap()).unwrap());
            if m.contains(x).unwrap() {
                assert!(il.is_isomorphic(&yoneda(&stable, x)).unwrap());
            }
            let (src, eta) = counit(&y).unwrap();
            let (ker, _) = eta.kernel();
            let (cok, _) = eta.cokernel();
            assert_eq!(ker.dim() + y.carrier().dim(), src.carrier().dim() + cok.dim());
        }
        for x in m.generator_modules() {
            for z in m.generator_modules() {
                for h in hom_space(&x, &z).basis() {
                    let f = functor_coker(&plain, h);
                    let il = i_lambda(&f, &stable).unwrap();
                    assert!(il.is_isomorphic(&kill_projectives(&f, &stable).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn stable_yoneda_matches_stable_homs() {
    let m = ppa2_first();
    let cats = FunctorCats::new(&m);
    let stable = cats.stable().unwrap();
    for x in m.catalog().modules() {
        let y = yoneda(&stable, x);
        let expect: Vec<usize> = m
            .generator_modules()
            .iter()
            .enumerate()
            .map(|(k, g)| if m.is_projective_generator(k) { 0 } else { stable_hom_dim(g, x) })
            .collect();
        assert_eq!(y.value_dims(), expect);
    }
}

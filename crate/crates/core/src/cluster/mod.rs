//! Approximations, n-kernels and n-cokernels, and n-cluster tilting
//! subcategories of a representation-finite module category.

mod approx;

use std::sync::Arc;

pub use approx::{left_approximation, right_approximation, Approximation};

use crate::error::{Error, Result};
use crate::modcat::{
    cosyzygy_n, ext_dim, hom_space, is_isomorphic, syzygy_n, Catalog, FdModule, HomSpace, ModuleHom,
};

/// `add M` for a set of catalog indecomposables, with a fixed `n`.
#[derive(Clone, Debug)]
pub struct ClusterSubcat {
    catalog: Arc<Catalog>,
    generators: Vec<usize>,
    n: usize,
}

impl ClusterSubcat {
    /// Generators are catalog indices; they are deduplicated and sorted.
    pub fn new(catalog: Arc<Catalog>, generators: &[usize], n: usize) -> Result<ClusterSubcat> {
        if n < 2 {
            return Err(Error::Input("n must be at least 2".into()));
        }
        let mut g = generators.to_vec();
        g.sort_unstable();
        g.dedup();
        if g.iter().any(|&i| i >= catalog.len()) {
            return Err(Error::Input("generator index outside the catalog".into()));
        }
        Ok(ClusterSubcat { catalog, generators: g, n })
    }

    /// Generators by catalog name (aliases allowed).
    pub fn from_names(catalog: Arc<Catalog>, names: &[&str], n: usize) -> Result<ClusterSubcat> {
        let idx: Result<Vec<usize>> = names
            .iter()
            .map(|s| catalog.resolve(s).ok_or_else(|| Error::Input(format!("unknown module name `{s}`"))))
            .collect();
        ClusterSubcat::new(catalog, &idx?, n)
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.catalog
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Catalog indices of the generators (sorted).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator(&self, k: usize) -> &FdModule {
        self.catalog.module(self.generators[k])
    }

    pub fn generator_modules(&self) -> Vec<FdModule> {
        self.generators.iter().map(|&i| self.catalog.module(i).clone()).collect()
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|&i| self.catalog.name(i).to_string()).collect()
    }

    pub fn is_projective_generator(&self, k: usize) -> bool {
        self.catalog.is_projective(self.generators[k])
    }

    pub fn is_injective_generator(&self, k: usize) -> bool {
        self.catalog.is_injective(self.generators[k])
    }

    /// Position among the generators of a catalog index.
    pub fn position(&self, catalog_index: usize) -> Option<usize> {
        self.generators.iter().position(|&g| g == catalog_index)
    }

    /// Position of an indecomposable module among the generators.
    pub fn position_of(&self, x: &FdModule) -> Option<usize> {
        self.catalog.index_of(x).and_then(|i| self.position(i))
    }

    /// Generator positions of the summands of `x`, or `None` if `x ∉ add M`.
    pub fn summands_in(&self, x: &FdModule) -> Result<Option<Vec<usize>>> {
        let idx = self.catalog.decompose_indices(x)?;
        Ok(idx.iter().map(|&i| self.position(i)).collect())
    }

    pub fn contains(&self, x: &FdModule) -> Result<bool> {
        Ok(self.summands_in(x)?.is_some())
    }

    pub fn right_approximation(&self, x: &FdModule) -> Approximation {
        right_approximation(&self.generator_modules(), x)
    }

    pub fn left_approximation(&self, x: &FdModule) -> Approximation {
        left_approximation(&self.generator_modules(), x)
    }

    /// Shortest resolution by minimal right approximations; `None` when longer than `n`.
    pub fn proper_dimension(&self, x: &FdModule) -> Result<Option<usize>> {
        let mut cur = x.clone();
        for d in 0..=self.n {
            if self.contains(&cur)? {
                return Ok(Some(d));
            }
            let a = self.right_approximation(&cur);
            if !a.map.is_surjective() {
                return Ok(None);
            }
            cur = a.map.kernel().0;
        }
        Ok(None)
    }

    /// Dual of [`ClusterSubcat::proper_dimension`] with left approximations.
    pub fn coproper_dimension(&self, x: &FdModule) -> Result<Option<usize>> {
        let mut cur = x.clone();
        for d in 0..=self.n {
            if self.contains(&cur)? {
                return Ok(Some(d));
            }
            let a = self.left_approximation(&cur);
            if !a.map.is_injective() {
                return Ok(None);
            }
            cur = a.map.cokernel().0;
        }
        Ok(None)
    }

    /// `Ω^n` and `Ω^{-n}` of every generator stay in `add M`.
    pub fn is_nz(&self) -> Result<bool> {
        for g in self.generator_modules() {
            if !self.contains(&syzygy_n(&g, self.n))? || !self.contains(&cosyzygy_n(&g, self.n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// n-cokernel `0 -> M⁰ -> M¹ -> ... -> M^{n+1} -> 0` of a monomorphism in `add M`.
    pub fn n_cokernel(&self, f: &ModuleHom) -> Result<NExactSeq> {
        if !f.is_injective() {
            return Err(Error::Input("n-cokernel needs a monomorphism".into()));
        }
        let mut objects = vec![f.source().clone(), f.target().clone()];
        let mut maps = vec![f.clone()];
        let (mut c, mut pi) = f.cokernel();
        for _ in 1..self.n {
            let a = self.left_approximation(&c);
            if !a.map.is_injective() {
                return Err(Error::ApproximationNotMono);
            }
            maps.push(a.map.compose(&pi));
            objects.push(a.module.clone());
            let (c2, pi2) = a.map.cokernel();
            c = c2;
            pi = pi2;
        }
        if !self.contains(&c)? {
            return Err(Error::LastTermNotInM);
        }
        maps.push(pi);
        objects.push(c);
        Ok(NExactSeq { objects, maps })
    }

    /// n-kernel `0 -> M⁰ -> ... -> M^{n-1} -> M^n -> M^{n+1} -> 0` of an epimorphism in `add M`.
    pub fn n_kernel(&self, g: &ModuleHom) -> Result<NExactSeq> {
        if !g.is_surjective() {
            return Err(Error::Input("n-kernel needs an epimorphism".into()));
        }
        let mut objects = vec![g.target().clone(), g.source().clone()];
        let mut maps = vec![g.clone()];
        let (mut k, mut iota) = g.kernel();
        for _ in 1..self.n {
            let a = self.right_approximation(&k);
            if !a.map.is_surjective() {
                return Err(Error::ApproximationNotEpi);
            }
            maps.push(iota.compose(&a.map));
            objects.push(a.module.clone());
            let (k2, iota2) = a.map.kernel();
            k = k2;
            iota = iota2;
        }
        if !self.contains(&k)? {
            return Err(Error::LastTermNotInM);
        }
        maps.push(iota);
        objects.push(k);
        objects.reverse();
        maps.reverse();
        Ok(NExactSeq { objects, maps })
    }

    /// Checks the defining conditions of an n-cluster tilting subcategory.
    pub fn certify(&self) -> Result<ClusterCertificate> {
        let cat = &self.catalog;
        let alg = cat.algebra();
        for v in 0..alg.num_vertices() {
            for (kind, idx) in [("projective", cat.projective_index(v)), ("injective", cat.injective_index(v))] {
                if self.position(idx).is_none() {
                    return Ok(ClusterCertificate::negative(format!("{kind} {} missing", cat.name(idx))));
                }
            }
        }
        let table = ExtTable::new(cat, self.n);
        for &a in &self.generators {
            for &b in &self.generators {
                for i in 1..self.n {
                    if table.get(i, a, b) != 0 {
                        return Ok(ClusterCertificate::negative(format!(
                            "Ext^{i}({}, {}) ≠ 0",
                            cat.name(a),
                            cat.name(b)
                        )));
                    }
                }
            }
        }
        for x in 0..cat.len() {
            if self.position(x).is_some() {
                continue;
            }
            let left = self.generators.iter().any(|&m| (1..self.n).any(|i| table.get(i, m, x) != 0));
            let right = self.generators.iter().any(|&m| (1..self.n).any(|i| table.get(i, x, m) != 0));
            if !left || !right {
                return Ok(ClusterCertificate::negative(format!("maximality fails at {}", cat.name(x))));
            }
        }
        Ok(ClusterCertificate { positive: true, violation: None })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterCertificate {
    pub positive: bool,
    pub violation: Option<String>,
}

impl ClusterCertificate {
    fn negative(msg: String) -> Self {
        ClusterCertificate { positive: false, violation: Some(msg) }
    }
}

/// `dim Ext^i(X_a, X_b)` for catalog indecomposables and `1 ≤ i ≤ n`.
#[derive(Clone, Debug)]
pub struct ExtTable {
    n: usize,
    size: usize,
    data: Vec<usize>,
}

impl ExtTable {
    pub fn new(cat: &Catalog, n: usize) -> ExtTable {
        let size = cat.len();
        let mut data = vec![0; n * size * size];
        for a in 0..size {
            for b in 0..size {
                for i in 1..=n {
                    data[((i - 1) * size + a) * size + b] = ext_dim(i, cat.module(a), cat.module(b));
                }
            }
        }
        ExtTable { n, size, data }
    }

    pub fn get(&self, i: usize, a: usize, b: usize) -> usize {
        assert!(i >= 1 && i <= self.n);
        self.data[((i - 1) * self.size + a) * self.size + b]
    }

    fn rigid_pair(&self, a: usize, b: usize, n: usize) -> bool {
        (1..n).all(|i| self.get(i, a, b) == 0 && self.get(i, b, a) == 0)
    }
}

/// Every n-cluster tilting subcategory: maximal rigid sets containing projectives
/// and injectives, then the maximality condition.
pub fn search_n_cluster_tilting(catalog: &Arc<Catalog>, n: usize) -> Result<Vec<ClusterSubcat>> {
    if n < 2 {
        return Err(Error::Input("n must be at least 2".into()));
    }
    let table = ExtTable::new(catalog, n);
    let size = catalog.len();
    let alg = catalog.algebra();
    let mut required: Vec<usize> = (0..alg.num_vertices())
        .flat_map(|v| [catalog.projective_index(v), catalog.injective_index(v)])
        .collect();
    required.sort_unstable();
    required.dedup();
    for &a in &required {
        for &b in &required {
            if !table.rigid_pair(a, b, n) {
                return Ok(Vec::new());
            }
        }
    }
    let candidates: Vec<usize> = (0..size)
        .filter(|x| !required.contains(x))
        .filter(|&x| table.rigid_pair(x, x, n) && required.iter().all(|&r| table.rigid_pair(x, r, n)))
        .collect();
    let adj = |a: usize, b: usize| table.rigid_pair(a, b, n);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    bron_kerbosch(Vec::new(), candidates.clone(), Vec::new(), &adj, &mut cliques);
    let mut out = Vec::new();
    for clique in cliques {
        let mut gens = required.clone();
        gens.extend(clique);
        let m = ClusterSubcat::new(catalog.clone(), &gens, n)?;
        if m.certify()?.positive {
            out.push(m);
        }
    }
    out.sort_by(|a, b| a.generators.cmp(&b.generators));
    Ok(out)
}

fn bron_kerbosch(
    r: Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    adj: &dyn Fn(usize, usize) -> bool,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let mut p = p;
    let mut x = x;
    while let Some(&v) = p.first() {
        let mut r2 = r.clone();
        r2.push(v);
        let p2: Vec<usize> = p.iter().copied().filter(|&u| u != v && adj(u, v)).collect();
        let x2: Vec<usize> = x.iter().copied().filter(|&u| adj(u, v)).collect();
        bron_kerbosch(r2, p2, x2, adj, out);
        p.remove(0);
        x.push(v);
    }
}

/// `0 -> M⁰ -> M¹ -> ... -> M^{n+1} -> 0` with `maps[k]: M^k -> M^{k+1}`.
#[derive(Clone, Debug)]
pub struct NExactSeq {
    pub objects: Vec<FdModule>,
    pub maps: Vec<ModuleHom>,
}

fn induced_rank(source: &HomSpace, target: &HomSpace, f: impl Fn(&ModuleHom) -> ModuleHom) -> usize {
    let images: Vec<ModuleHom> = source.basis().iter().map(f).collect();
    target.span_rank(&images)
}

impl NExactSeq {
    pub fn n(&self) -> usize {
        self.objects.len() - 2
    }

    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[1].compose(&w[0]).is_zero())
    }

    /// Exact as a sequence of vector spaces (including the zero ends).
    pub fn is_exact(&self) -> bool {
        if !self.is_complex() {
            return false;
        }
        let ranks: Vec<usize> = self.maps.iter().map(ModuleHom::rank).collect();
        (0..self.objects.len()).all(|k| {
            let incoming = if k == 0 { 0 } else { ranks[k - 1] };
            let outgoing = if k < ranks.len() { ranks[k] } else { 0 };
            self.objects[k].dim() == incoming + outgoing
        })
    }

    /// `0 -> (G, M⁰) -> ... -> (G, M^{n+1})` exact except at the last term, and dually.
    pub fn is_n_exact_for(&self, gens: &[FdModule]) -> bool {
        if !self.is_exact() {
            return false;
        }
        let len = self.objects.len();
        for g in gens {
            let cov: Vec<HomSpace> = self.objects.iter().map(|m| hom_space(g, m)).collect();
            let ranks: Vec<usize> = (0..len - 1)
                .map(|k| induced_rank(&cov[k], &cov[k + 1], |h| self.maps[k].compose(h)))
                .collect();
            for k in 0..len - 1 {
                let incoming = if k == 0 { 0 } else { ranks[k - 1] };
                if cov[k].dim() != incoming + ranks[k] {
                    return false;
                }
            }
            let contra: Vec<HomSpace> = self.objects.iter().map(|m| hom_space(m, g)).collect();
            let ranks: Vec<usize> = (0..len - 1)
                .map(|k| induced_rank(&contra[k + 1], &contra[k], |h| h.compose(&self.maps[k])))
                .collect();
            for k in 1..len {
                let incoming = if k == len - 1 { 0 } else { ranks[k] };
                if contra[k].dim() != incoming + ranks[k - 1] {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `M^{k}` agrees up to isomorphism with the given modules.
    pub fn objects_isomorphic(&self, other: &[FdModule]) -> Result<bool> {
        if other.len() != self.objects.len() {
            return Ok(false);
        }
        for (a, b) in self.objects.iter().zip(other) {
            if !is_isomorphic(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::modcat::{indecomposable_projective, Caps, FdModule};

    fn catalog(alg: Arc<crate::algebra::FdAlgebra>) -> Arc<Catalog> {
        Arc::new(Catalog::enumerate(&alg, Caps::default()).unwrap())
    }

    #[test]
    fn a3r2_search_finds_m3() {
        let cat = catalog(presets::a3r2());
        let found = search_n_cluster_tilting(&cat, 2).unwrap();
        assert_eq!(found.len(), 1);
        let mut names = found[0].generator_names();
        names.sort();
        assert_eq!(names, vec!["P1", "P2", "S1", "S3"]);
        assert!(found[0].is_nz().unwrap());
    }

    #[test]
    fn ppa2_search_finds_two() {
        let cat = catalog(presets::ppa2());
        let found = search_n_cluster_tilting(&cat, 2).unwrap();
        assert_eq!(found.len(), 2);
        for m in &found {
            assert!(m.is_nz().unwrap());
        }
    }

    #[test]
    fn dual_numbers_have_none() {
        let cat = catalog(presets::truncated_polynomial(2));
        assert!(search_n_cluster_tilting(&cat, 2).unwrap().is_empty());
        let m = ClusterSubcat::from_names(cat, &["P1"], 2).unwrap();
        let cert = m.certify().unwrap();
        assert!(!cert.positive);
        assert!(cert.violation.unwrap().contains("maximality"));
    }

    #[test]
    fn regular_module_is_not_cluster_tilting_over_a3r2() {
        let cat = catalog(presets::a3r2());
        let m = ClusterSubcat::from_names(cat, &["P1", "P2", "P3"], 2).unwrap();
        assert!(!m.certify().unwrap().positive);
    }

    #[test]
    fn left_approximation_of_s2() {
        let cat = catalog(presets::a3r2());
        let m = ClusterSubcat::from_names(cat.clone(), &["P1", "P2", "S1", "S3"], 2).unwrap();
        let s2 = cat.module(cat.resolve("S2").unwrap()).clone();
        let a = m.left_approximation(&s2);
        assert!(a.map.is_injective());
        assert!(is_isomorphic(&a.module, &indecomposable_projective(cat.algebra(), 0)).unwrap());
        let (c, _) = a.map.cokernel();
        assert!(is_isomorphic(&c, &FdModule::simple(cat.algebra(), 0)).unwrap());
        assert_eq!(m.proper_dimension(&s2).unwrap(), Some(1));
    }

    #[test]
    fn n_cokernel_of_s3_in_p2() {
        let cat = catalog(presets::a3r2());
        let m = ClusterSubcat::from_names(cat.clone(), &["P1", "P2", "S1", "S3"], 2).unwrap();
        let s3 = cat.module(cat.resolve("S3").unwrap()).clone();
        let p2 = cat.module(cat.resolve("P2").unwrap()).clone();
        let f = hom_space(&s3, &p2).basis()[0].clone();
        let seq = m.n_cokernel(&f).unwrap();
        let names: Vec<String> =
            seq.objects.iter().map(|x| cat.name(cat.index_of(x).unwrap()).to_string()).collect();
        assert_eq!(names, vec!["S3", "P2", "P1", "S1"]);
        assert!(seq.is_n_exact_for(&m.generator_modules()));
        let p1 = cat.module(cat.resolve("P1").unwrap()).clone();
        let s1 = cat.module(cat.resolve("S1").unwrap()).clone();
        let g = hom_space(&p1, &s1).basis()[0].clone();
        let k = m.n_kernel(&g).unwrap();
        assert!(k.objects_isomorphic(&seq.objects).unwrap());
        assert!(k.is_n_exact_for(&m.generator_modules()));
    }

    #[test]
    fn split_mono_has_split_n_cokernel() {
        let cat = catalog(presets::a3r2());
        let m = ClusterSubcat::from_names(cat.clone(), &["P1", "P2", "S1", "S3"], 2).unwrap();
        let s1 = cat.module(cat.resolve("S1").unwrap()).clone();
        let seq = m.n_cokernel(&ModuleHom::identity(&s1)).unwrap();
        assert!(seq.objects[2..].iter().all(FdModule::is_zero));
    }
}

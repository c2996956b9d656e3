use std::sync::Arc;

use super::quot::QuotSpace;
use crate::algebra::{FdAlgebra, RawAlgebra};
use crate::cluster::ClusterSubcat;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::modcat::{hom_space, injective_ideal, projective_ideal, FdModule, ModuleHom};

/// Which ideal of `M` is factored out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Flavor {
    Plain,
    /// Modulo maps factoring through projectives; objects are the non-projective generators.
    Stable,
    /// Modulo maps factoring through injectives; objects are the non-injective generators.
    Costable,
}

/// Contravariant functors are right modules over the composition algebra,
/// covariant functors are right modules over its opposite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Variance {
    Contravariant,
    Covariant,
}

struct Pair {
    quot: QuotSpace,
    /// Basis elements of the algebra lying over this pair.
    elements: Vec<usize>,
    /// Ambient hom coordinates to algebra coordinates of `elements`.
    to_gamma: Matrix,
}

/// The (stable, costable) Auslander algebra of `M` in a fixed variance.
///
/// Vertex `v` stands for the generator at position `objects[v]`. Basis element
/// `b` is represented by the hom `lift(b): M_i -> M_j` where `ends(b) = (i, j)`;
/// for contravariant functors `b` lies in corner `(j, i)` and products are
/// compositions `g * f = g ∘ f`, for covariant ones the corner is `(i, j)`.
pub struct AuslanderAlgebra {
    m: ClusterSubcat,
    flavor: Flavor,
    variance: Variance,
    objects: Vec<usize>,
    algebra: Arc<FdAlgebra>,
    lifts: Vec<ModuleHom>,
    ends: Vec<(usize, usize)>,
    pairs: Vec<Pair>,
}

impl std::fmt::Debug for AuslanderAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AuslanderAlgebra")
            .field("flavor", &self.flavor)
            .field("variance", &self.variance)
            .field("objects", &self.objects)
            .field("dim", &self.algebra.dim())
            .finish()
    }
}

/// Spanning set of the ideal of the flavor inside `Hom(X, Y)`.
pub fn flavor_ideal(flavor: Flavor, x: &FdModule, y: &FdModule) -> Vec<ModuleHom> {
    match flavor {
        Flavor::Plain => Vec::new(),
        Flavor::Stable => projective_ideal(x, y),
        Flavor::Costable => injective_ideal(x, y),
    }
}

impl AuslanderAlgebra {
    /// Builds the contravariant algebra of the flavor.
    pub fn new(m: &ClusterSubcat, flavor: Flavor) -> Result<AuslanderAlgebra> {
        let objects: Vec<usize> = (0..m.len())
            .filter(|&k| match flavor {
                Flavor::Plain => true,
                Flavor::Stable => !m.is_projective_generator(k),
                Flavor::Costable => !m.is_injective_generator(k),
            })
            .collect();
        let nv = objects.len();
        let alg_field = m.catalog().algebra().field();
        let gens: Vec<FdModule> = objects.iter().map(|&k| m.generator(k).clone()).collect();
        let names: Vec<String> = objects.iter().map(|&k| m.generator_names()[k].clone()).collect();
        // quotient hom spaces, with identities preferred on the diagonal
        let mut quots = Vec::with_capacity(nv * nv);
        for i in 0..nv {
            for j in 0..nv {
                let space = hom_space(&gens[i], &gens[j]);
                let ideal = flavor_ideal(flavor, &gens[i], &gens[j]);
                let preferred = if i == j { vec![ModuleHom::identity(&gens[i])] } else { Vec::new() };
                quots.push(QuotSpace::new(space, &ideal, &preferred));
            }
        }
        let mut offset = vec![0usize; nv * nv + 1];
        for k in 0..nv * nv {
            offset[k + 1] = offset[k] + quots[k].dim();
        }
        let dim = offset[nv * nv];
        let mut labels = Vec::with_capacity(dim);
        let mut corner = Vec::with_capacity(dim);
        let mut raw_ends = Vec::with_capacity(dim);
        for i in 0..nv {
            for j in 0..nv {
                for t in 0..quots[i * nv + j].dim() {
                    labels.push(format!("{}>{}#{}", names[i], names[j], t));
                    corner.push((j, i));
                    raw_ends.push((i, j, t));
                }
            }
        }
        let mut idempotents = Vec::with_capacity(nv);
        for i in 0..nv {
            if quots[i * nv + i].dim() == 0 {
                return Err(crate::error::Error::Internal(format!("identity of {} lies in the ideal", names[i])));
            }
            idempotents.push(offset[i * nv + i]);
        }
        let mut products = vec![Vec::new(); dim * dim];
        for x in 0..dim {
            let (j, k, tx) = raw_ends[x];
            let g = &quots[j * nv + k].reps()[tx];
            for i in 0..nv {
                let pair = i * nv + j;
                for ty in 0..quots[pair].dim() {
                    let y = offset[pair] + ty;
                    let f = &quots[pair].reps()[ty];
                    let c = quots[i * nv + k].coords(&g.compose(f));
                    if c.iter().all(|&z| z == 0) {
                        continue;
                    }
                    let mut dense = vec![0u32; dim];
                    dense[offset[i * nv + k]..offset[i * nv + k + 1]].copy_from_slice(&c);
                    products[x * dim + y] = dense;
                }
            }
        }
        let raw = RawAlgebra { field: alg_field, vertex_names: names, labels, corner, products, idempotents };
        let (algebra, t) = FdAlgebra::normalize(raw)?;
        let p = alg_field;
        let mut lifts = Vec::with_capacity(dim);
        let mut ends = Vec::with_capacity(dim);
        for b in 0..dim {
            let (j, i) = algebra.corner(b);
            let pair = i * nv + j;
            let coeffs: Vec<u32> = (offset[pair]..offset[pair + 1]).map(|r| t.get(r, b)).collect();
            lifts.push(ModuleHom::combination(&gens[i], &gens[j], quots[pair].reps(), &coeffs));
            ends.push((i, j));
        }
        let mut pairs = Vec::with_capacity(nv * nv);
        for (pair, quot) in quots.into_iter().enumerate() {
            let (i, j) = (pair / nv, pair % nv);
            let elements: Vec<usize> = algebra.corner_basis(j, i).to_vec();
            let rows: Vec<usize> = (offset[pair]..offset[pair + 1]).collect();
            let w = t.select_rows(&rows).select_columns(&elements);
            let to_gamma = if elements.is_empty() {
                Matrix::zeros(p, 0, quot.space().dim())
            } else {
                w.inverse().expect("change of basis is block diagonal").mul(quot.projection())
            };
            pairs.push(Pair { quot, elements, to_gamma });
        }
        Ok(AuslanderAlgebra {
            m: m.clone(),
            flavor,
            variance: Variance::Contravariant,
            objects,
            algebra: Arc::new(algebra),
            lifts,
            ends,
            pairs,
        })
    }

    /// The same algebra read in the other variance (opposite structure constants).
    pub fn flipped(&self) -> AuslanderAlgebra {
        let variance = match self.variance {
            Variance::Contravariant => Variance::Covariant,
            Variance::Covariant => Variance::Contravariant,
        };
        AuslanderAlgebra {
            m: self.m.clone(),
            flavor: self.flavor,
            variance,
            objects: self.objects.clone(),
            algebra: self.algebra.opposite(),
            lifts: self.lifts.clone(),
            ends: self.ends.clone(),
            pairs: self
                .pairs
                .iter()
                .map(|q| Pair { quot: q.quot.clone(), elements: q.elements.clone(), to_gamma: q.to_gamma.clone() })
                .collect(),
        }
    }

    pub fn subcat(&self) -> &ClusterSubcat {
        &self.m
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra> {
        &self.algebra
    }

    /// Generator positions of the vertices.
    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    /// Vertex of a generator position, if it is an object of this flavor.
    pub fn vertex_of(&self, generator: usize) -> Option<usize> {
        self.objects.iter().position(|&k| k == generator)
    }

    pub fn object_module(&self, v: usize) -> &FdModule {
        self.m.generator(self.objects[v])
    }

    pub fn lift(&self, b: usize) -> &ModuleHom {
        &self.lifts[b]
    }

    pub fn ends(&self, b: usize) -> (usize, usize) {
        self.ends[b]
    }

    /// Corner of the algebra holding homs `M_i -> M_j`.
    pub fn corner_of(&self, i: usize, j: usize) -> (usize, usize) {
        match self.variance {
            Variance::Contravariant => (j, i),
            Variance::Covariant => (i, j),
        }
    }

    /// Dense algebra coordinates of (the class of) a hom `M_i -> M_j`.
    pub fn element(&self, i: usize, j: usize, h: &ModuleHom) -> Vec<u32> {
        let pair = &self.pairs[i * self.objects.len() + j];
        let mut out = vec![0u32; self.algebra.dim()];
        if pair.elements.is_empty() {
            return out;
        }
        let c = pair.quot.space().coords(h).expect("hom between the objects");
        let g = pair.to_gamma.mul(&Matrix::column_vector(h.source().field(), &c)).flatten();
        for (&b, &z) in pair.elements.iter().zip(&g) {
            out[b] = z;
        }
        out
    }

    /// Algebra coordinates of the class of `h` restricted to the elements of its corner.
    pub fn element_in_corner(&self, i: usize, j: usize, h: &ModuleHom) -> Vec<u32> {
        let dense = self.element(i, j, h);
        let (a, c) = self.corner_of(i, j);
        self.algebra.corner_basis(a, c).iter().map(|&b| dense[b]).collect()
    }

    /// Dimension of `Hom(M_i, M_j)` modulo the ideal.
    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.pairs[i * self.objects.len() + j].quot.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::modcat::{Caps, Catalog};

    fn a3r2_m3() -> ClusterSubcat {
        let cat = Arc::new(Catalog::enumerate(&presets::a3r2(), Caps::default()).unwrap());
        ClusterSubcat::from_names(cat, &["P1", "P2", "S1", "S3"], 2).unwrap()
    }

    #[test]
    fn plain_dimension_is_total_hom_dimension() {
        let m = a3r2_m3();
        let g = AuslanderAlgebra::new(&m, Flavor::Plain).unwrap();
        let mut total = 0;
        for x in m.generator_modules() {
            for y in m.generator_modules() {
                total += crate::modcat::hom_dim(&x, &y);
            }
        }
        assert_eq!(g.algebra().dim(), total);
        assert!(g.algebra().check_associative());
        assert!(g.algebra().check_unital());
    }

    #[test]
    fn stable_algebras_of_anchors_are_one_dimensional() {
        let m = a3r2_m3();
        let g = AuslanderAlgebra::new(&m, Flavor::Stable).unwrap();
        assert_eq!(g.algebra().dim(), 1);
        assert_eq!(m.generator_names()[g.objects()[0]], "S1");
        let cat = Arc::new(Catalog::enumerate(&presets::ppa2(), Caps::default()).unwrap());
        let hits = crate::cluster::search_n_cluster_tilting(&cat, 2).unwrap();
        for m in hits {
            assert_eq!(AuslanderAlgebra::new(&m, Flavor::Stable).unwrap().algebra().dim(), 1);
        }
    }

    #[test]
    fn lifts_have_their_own_coordinates() {
        let m = a3r2_m3();
        for flavor in [Flavor::Plain, Flavor::Costable] {
            let g = AuslanderAlgebra::new(&m, flavor).unwrap();
            for b in 0..g.algebra().dim() {
                let (i, j) = g.ends(b);
                let mut expect = vec![0u32; g.algebra().dim()];
                expect[b] = 1;
                assert_eq!(g.element(i, j, g.lift(b)), expect);
            }
            let op = g.flipped();
            assert!(op.algebra().is_opposite_of(g.algebra()));
        }
    }
}

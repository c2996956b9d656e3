//! Finite-dimensional basic algebras given by structure constants.
//!
//! Every algebra carries a basis adapted to its complete set of primitive
//! orthogonal idempotents: each basis element `b` satisfies `b = e_a b e_c`
//! for a single pair of vertices `(a, c)` (its *corner*), the idempotents are
//! themselves basis elements, and every non-idempotent basis element lies in
//! the radical. A subset of the radical basis (the *arrows*) spans a
//! complement of `rad²`, so idempotents and arrows generate the algebra.
//!
//! Multiplication follows path composition: `a * b` means "a first, then b".

mod parse;
pub mod presets;
mod quiver;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

pub use parse::parse_presentation;
pub use quiver::{build_algebra, Arrow, QuiverPresentation, Relation, DEFAULT_PATH_CAP};

use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, Matrix};

/// Sparse element: list of `(basis index, coefficient)`.
pub type Sparse = Vec<(usize, u32)>;

pub struct FdAlgebra {
    field: FieldPrime,
    vertex_names: Vec<String>,
    labels: Vec<String>,
    corner: Vec<(usize, usize)>,
    /// `products[a * dim + b]`, nonempty only for composable corners.
    products: Vec<Sparse>,
    idempotents: Vec<usize>,
    arrows: Vec<usize>,
    corner_index: Vec<Vec<usize>>,
    fingerprint: u64,
    op_fingerprint: u64,
    op_cache: OnceLock<Arc<FdAlgebra>>,
}

impl std::fmt::Debug for FdAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FdAlgebra")
            .field("p", &self.field.p())
            .field("vertices", &self.vertex_names)
            .field("dim", &self.dim())
            .field("fingerprint", &format_args!("{:016x}", self.fingerprint))
            .finish()
    }
}

/// Raw structure data before radical normalization.
pub struct RawAlgebra {
    pub field: FieldPrime,
    pub vertex_names: Vec<String>,
    pub labels: Vec<String>,
    pub corner: Vec<(usize, usize)>,
    /// Dense product coefficients, `products[a * dim + b]` of length `dim` (empty = zero).
    pub products: Vec<Vec<u32>>,
    pub idempotents: Vec<usize>,
}

fn fingerprint_of(field: FieldPrime, nv: usize, corner: &[(usize, usize)], products: &[Sparse], opposite: bool) -> u64 {
    let dim = corner.len();
    let mut h = DefaultHasher::new();
    field.p().hash(&mut h);
    nv.hash(&mut h);
    for &(a, c) in corner {
        if opposite {
            (c, a).hash(&mut h);
        } else {
            (a, c).hash(&mut h);
        }
    }
    for a in 0..dim {
        for b in 0..dim {
            let entry = if opposite { &products[b * dim + a] } else { &products[a * dim + b] };
            if !entry.is_empty() {
                (a, b).hash(&mut h);
                entry.hash(&mut h);
            }
        }
    }
    h.finish()
}

impl FdAlgebra {
    /// Assembles an algebra whose basis is already adapted (see module docs).
    pub(crate) fn from_parts(
        field: FieldPrime,
        vertex_names: Vec<String>,
        labels: Vec<String>,
        corner: Vec<(usize, usize)>,
        products: Vec<Sparse>,
        idempotents: Vec<usize>,
        arrows: Vec<usize>,
    ) -> FdAlgebra {
        let nv = vertex_names.len();
        let mut corner_index = vec![Vec::new(); nv * nv];
        for (b, &(a, c)) in corner.iter().enumerate() {
            corner_index[a * nv + c].push(b);
        }
        let fingerprint = fingerprint_of(field, nv, &corner, &products, false);
        let op_fingerprint = fingerprint_of(field, nv, &corner, &products, true);
        FdAlgebra {
            field,
            vertex_names,
            labels,
            corner,
            products,
            idempotents,
            arrows,
            corner_index,
            fingerprint,
            op_fingerprint,
            op_cache: OnceLock::new(),
        }
    }

    /// Normalizes a raw basis: per corner, the new basis is the idempotent,
    /// then arrows spanning a complement of `rad²`, then a basis of `rad²`.
    /// Returns the algebra and the change of basis (columns = new elements in raw coordinates).
    pub fn normalize(raw: RawAlgebra) -> Result<(FdAlgebra, Matrix)> {
        let p = raw.field;
        let dim = raw.labels.len();
        let nv = raw.vertex_names.len();
        let raw_mul = |x: &[u32], y: &[u32]| -> Vec<u32> {
            let mut out = vec![0u32; dim];
            for (a, &xa) in x.iter().enumerate() {
                if xa == 0 {
                    continue;
                }
                for (b, &yb) in y.iter().enumerate() {
                    if yb == 0 {
                        continue;
                    }
                    let prod = &raw.products[a * dim + b];
                    if prod.is_empty() {
                        continue;
                    }
                    let c = p.mul(xa, yb);
                    for (o, &z) in out.iter_mut().zip(prod) {
                        *o = p.add(*o, p.mul(c, z));
                    }
                }
            }
            out
        };
        let unit = |i: usize| -> Vec<u32> {
            let mut v = vec![0u32; dim];
            v[i] = 1;
            v
        };
        let mut corner_members = vec![Vec::new(); nv * nv];
        for (b, &(a, c)) in raw.corner.iter().enumerate() {
            corner_members[a * nv + c].push(b);
        }

        // radical vectors per basis element (None for idempotents)
        let mut rad_vec: Vec<Option<Vec<u32>>> = vec![None; dim];
        for (b, &(a, c)) in raw.corner.iter().enumerate() {
            if raw.idempotents.contains(&b) {
                continue;
            }
            if a != c {
                rad_vec[b] = Some(unit(b));
                continue;
            }
            let members = &corner_members[a * nv + a];
            let e = raw.idempotents[a];
            // left multiplication by b on the local corner
            let cols: Vec<Vec<u32>> = members
                .iter()
                .map(|&x| {
                    let prod = raw_mul(&unit(b), &unit(x));
                    members.iter().map(|&m| prod[m]).collect()
                })
                .collect();
            let lb = Matrix::from_columns(p, members.len(), &cols);
            let lambdas: Vec<u32> = p
                .elements()
                .filter(|&l| !lb.sub(&Matrix::scalar(p, members.len(), l)).is_invertible())
                .collect();
            if lambdas.len() != 1 {
                return Err(Error::Internal(format!(
                    "corner at vertex {} is not split local (element {} has {} eigenvalues)",
                    raw.vertex_names[a],
                    raw.labels[b],
                    lambdas.len()
                )));
            }
            let mut v = unit(b);
            v[e] = p.sub(v[e], lambdas[0]);
            rad_vec[b] = Some(v);
        }

        let mut new_cols: Vec<Vec<u32>> = Vec::with_capacity(dim);
        let mut new_labels = Vec::with_capacity(dim);
        let mut new_corner = Vec::with_capacity(dim);
        let mut new_idem = vec![0usize; nv];
        let mut arrows = Vec::new();
        for a in 0..nv {
            for c in 0..nv {
                let members = &corner_members[a * nv + c];
                if members.is_empty() {
                    continue;
                }
                if a == c {
                    new_idem[a] = new_cols.len();
                    new_cols.push(unit(raw.idempotents[a]));
                    new_labels.push(raw.labels[raw.idempotents[a]].clone());
                    new_corner.push((a, a));
                }
                let rads: Vec<(usize, Vec<u32>)> =
                    members.iter().filter_map(|&b| rad_vec[b].clone().map(|v| (b, v))).collect();
                // rad² in this corner: products of radical elements through any middle vertex
                let mut sq: Vec<Vec<u32>> = Vec::new();
                for mid in 0..nv {
                    for &x in &corner_members[a * nv + mid] {
                        let Some(rx) = &rad_vec[x] else { continue };
                        for &y in &corner_members[mid * nv + c] {
                            let Some(ry) = &rad_vec[y] else { continue };
                            let prod = raw_mul(rx, ry);
                            if prod.iter().any(|&z| z != 0) {
                                sq.push(prod);
                            }
                        }
                    }
                }
                let sq_basis: Vec<Vec<u32>> = if sq.is_empty() {
                    Vec::new()
                } else {
                    Matrix::from_columns(p, dim, &sq).column_basis().columns()
                };
                let sq_rank = sq_basis.len();
                let in_sq = |v: &[u32]| -> bool {
                    if sq_rank == 0 {
                        return v.iter().all(|&z| z == 0);
                    }
                    let m = Matrix::from_columns(p, dim, &sq_basis);
                    m.hstack(&Matrix::column_vector(p, v)).rank() == sq_rank
                };
                // arrows: greedy complement of rad² among radical vectors
                let mut span: Vec<Vec<u32>> = sq_basis.clone();
                let mut chosen_arrows = Vec::new();
                for (b, v) in &rads {
                    let before = if span.is_empty() { 0 } else { Matrix::from_columns(p, dim, &span).rank() };
                    let mut trial = span.clone();
                    trial.push(v.clone());
                    if Matrix::from_columns(p, dim, &trial).rank() > before {
                        span = trial;
                        chosen_arrows.push((*b, v.clone()));
                    }
                }
                // rad² basis: prefer radical vectors lying in rad²
                let mut sq_chosen: Vec<(Option<usize>, Vec<u32>)> = Vec::new();
                for (b, v) in &rads {
                    if sq_chosen.len() == sq_rank {
                        break;
                    }
                    if in_sq(v) {
                        let mut trial: Vec<Vec<u32>> = sq_chosen.iter().map(|x| x.1.clone()).collect();
                        trial.push(v.clone());
                        if Matrix::from_columns(p, dim, &trial).rank() == trial.len() {
                            sq_chosen.push((Some(*b), v.clone()));
                        }
                    }
                }
                if sq_chosen.len() < sq_rank {
                    sq_chosen = sq_basis.iter().map(|v| (None, v.clone())).collect();
                }
                for (b, v) in chosen_arrows {
                    arrows.push(new_cols.len());
                    new_labels.push(if v == unit(b) { raw.labels[b].clone() } else { format!("{}'", raw.labels[b]) });
                    new_cols.push(v);
                    new_corner.push((a, c));
                }
                for (k, (b, v)) in sq_chosen.into_iter().enumerate() {
                    let label = match b {
                        Some(b) if v == unit(b) => raw.labels[b].clone(),
                        Some(b) => format!("{}'", raw.labels[b]),
                        None => format!("r2[{},{}]#{}", raw.vertex_names[a], raw.vertex_names[c], k),
                    };
                    new_labels.push(label);
                    new_cols.push(v);
                    new_corner.push((a, c));
                }
            }
        }
        if new_cols.len() != dim {
            return Err(Error::Internal(format!(
                "radical normalization produced {} elements for dimension {dim}",
                new_cols.len()
            )));
        }
        let t = Matrix::from_columns(p, dim, &new_cols);
        let t_inv = t.inverse().ok_or_else(|| Error::Internal("normalized basis is singular".into()))?;
        let identity_change = t == Matrix::identity(p, dim);
        let mut products = vec![Vec::new(); dim * dim];
        for x in 0..dim {
            for y in 0..dim {
                if new_corner[x].1 != new_corner[y].0 {
                    continue;
                }
                let prod = if identity_change {
                    raw.products[x * dim + y].clone()
                } else {
                    let v = raw_mul(&new_cols[x], &new_cols[y]);
                    if v.iter().all(|&z| z == 0) {
                        Vec::new()
                    } else {
                        t_inv.mul(&Matrix::column_vector(p, &v)).flatten()
                    }
                };
                products[x * dim + y] =
                    prod.iter().enumerate().filter(|(_, &z)| z != 0).map(|(i, &z)| (i, z)).collect();
            }
        }
        let alg = FdAlgebra::from_parts(p, raw.vertex_names, new_labels, new_corner, products, new_idem, arrows);
        alg.check_radical()?;
        Ok((alg, t))
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|v| v == name)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn corner(&self, b: usize) -> (usize, usize) {
        self.corner[b]
    }

    /// Basis elements `b` with `b = e_a b e_c`.
    pub fn corner_basis(&self, a: usize, c: usize) -> &[usize] {
        &self.corner_index[a * self.num_vertices() + c]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn is_idempotent_index(&self, b: usize) -> bool {
        let (a, c) = self.corner[b];
        a == c && self.idempotents[a] == b
    }

    /// Radical basis: all non-idempotent basis elements.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| !self.is_idempotent_index(b)).collect()
    }

    pub fn product(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.products[a * self.dim() + b]
    }

    pub fn mul_dense(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.field;
        let mut out = vec![0u32; self.dim()];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                let c = p.mul(xa, yb);
                for &(i, z) in self.product(a, b) {
                    out[i] = p.add(out[i], p.mul(c, z));
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, b: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        v[b] = 1;
        v
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn op_fingerprint(&self) -> u64 {
        self.op_fingerprint
    }

    pub fn same_as(&self, other: &FdAlgebra) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    pub fn is_opposite_of(&self, other: &FdAlgebra) -> bool {
        self.fingerprint == other.op_fingerprint
    }

    /// Same basis, reversed multiplication. Cached per instance.
    pub fn opposite(&self) -> Arc<FdAlgebra> {
        self.op_cache
            .get_or_init(|| {
                let dim = self.dim();
                let mut products = vec![Vec::new(); dim * dim];
                for a in 0..dim {
                    for b in 0..dim {
                        products[a * dim + b] = self.products[b * dim + a].clone();
                    }
                }
                let corner = self.corner.iter().map(|&(a, c)| (c, a)).collect();
                Arc::new(FdAlgebra::from_parts(
                    self.field,
                    self.vertex_names.clone(),
                    self.labels.clone(),
                    corner,
                    products,
                    self.idempotents.clone(),
                    self.arrows.clone(),
                ))
            })
            .clone()
    }

    /// The algebra of upper triangular 2x2 matrices over `self`, whose right
    /// modules are morphisms `X -> Y` of right modules. Vertex `i` of the
    /// source copy is `i`, of the target copy `nv + i`. Basis index
    /// `slot * dim + b` with slot 0 = E11, 1 = E12, 2 = E22.
    pub fn triangular(&self) -> FdAlgebra {
        let dim = self.dim();
        let nv = self.num_vertices();
        let slots = [(0usize, 0usize), (0, 1), (1, 1)];
        let mut labels = Vec::with_capacity(3 * dim);
        let mut corner = Vec::with_capacity(3 * dim);
        for (s, &(r, c)) in slots.iter().enumerate() {
            for b in 0..dim {
                labels.push(format!("{}[{}]", self.labels[b], ["11", "12", "22"][s]));
                let (a, e) = self.corner[b];
                corner.push((a + r * nv, e + c * nv));
            }
        }
        let mut products = vec![Vec::new(); 9 * dim * dim];
        for (s1, &(r1, c1)) in slots.iter().enumerate() {
            for (s2, &(r2, c2)) in slots.iter().enumerate() {
                if c1 != r2 {
                    continue;
                }
                let s3 = slots.iter().position(|&x| x == (r1, c2)).expect("triangular slot");
                for a in 0..dim {
                    for b in 0..dim {
                        let prod = &self.products[a * dim + b];
                        if prod.is_empty() {
                            continue;
                        }
                        products[(s1 * dim + a) * 3 * dim + s2 * dim + b] =
                            prod.iter().map(|&(i, z)| (s3 * dim + i, z)).collect();
                    }
                }
            }
        }
        let mut idempotents = vec![0; 2 * nv];
        for v in 0..nv {
            idempotents[v] = self.idempotents[v];
            idempotents[nv + v] = 2 * dim + self.idempotents[v];
        }
        let mut arrows: Vec<usize> = self.arrows.clone();
        arrows.extend(self.arrows.iter().map(|&a| 2 * dim + a));
        arrows.extend(self.idempotents.iter().map(|&e| dim + e));
        let mut names: Vec<String> = self.vertex_names.iter().map(|v| format!("{v}.s")).collect();
        names.extend(self.vertex_names.iter().map(|v| format!("{v}.t")));
        FdAlgebra::from_parts(self.field, names, labels, corner, products, idempotents, arrows)
    }

    /// Associativity on all basis triples.
    pub fn check_associative(&self) -> bool {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let ab = self.mul_dense(&self.unit_vector(a), &self.unit_vector(b));
                for c in 0..dim {
                    let left = self.mul_dense(&ab, &self.unit_vector(c));
                    let bc = self.mul_dense(&self.unit_vector(b), &self.unit_vector(c));
                    let right = self.mul_dense(&self.unit_vector(a), &bc);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Idempotents are orthogonal idempotents acting as identities on their corners.
    pub fn check_unital(&self) -> bool {
        for b in 0..self.dim() {
            let (a, c) = self.corner[b];
            let left = self.mul_dense(&self.unit_vector(self.idempotents[a]), &self.unit_vector(b));
            let right = self.mul_dense(&self.unit_vector(b), &self.unit_vector(self.idempotents[c]));
            if left != self.unit_vector(b) || right != self.unit_vector(b) {
                return false;
            }
            for (v, &e) in self.idempotents.iter().enumerate() {
                if v != a && !self.product(e, b).is_empty() {
                    return false;
                }
                if v != c && !self.product(b, e).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// The radical basis spans an ideal that is nilpotent within `dim` steps.
    pub fn check_radical(&self) -> Result<()> {
        let rad = self.radical_basis();
        let rad_set: std::collections::BTreeSet<usize> = rad.iter().copied().collect();
        for &r in &rad {
            for b in 0..self.dim() {
                for &(i, _) in self.product(r, b).iter().chain(self.product(b, r)) {
                    if !rad_set.contains(&i) {
                        return Err(Error::Internal(format!("radical not closed at {}", self.labels[r])));
                    }
                }
            }
        }
        // powers of the radical as spans of basis-vector products
        let p = self.field;
        let dim = self.dim();
        let mut power: Vec<Vec<u32>> = rad.iter().map(|&r| self.unit_vector(r)).collect();
        for _ in 0..=dim {
            if power.is_empty() {
                return Ok(());
            }
            let mut next = Vec::new();
            for x in &power {
                for &r in &rad {
                    let v = self.mul_dense(x, &self.unit_vector(r));
                    if v.iter().any(|&z| z != 0) {
                        next.push(v);
                    }
                }
            }
            power = if next.is_empty() { next } else { Matrix::from_columns(p, dim, &next).column_basis().columns() };
        }
        Err(Error::Internal("radical is not nilpotent".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::presets;

    #[test]
    fn anchors_have_expected_dimensions() {
        assert_eq!(presets::a3r2().dim(), 5);
        assert_eq!(presets::ppa2().dim(), 4);
        assert_eq!(presets::truncated_polynomial(3).dim(), 3);
    }

    #[test]
    fn anchors_are_associative_and_unital() {
        for alg in [presets::a3r2(), presets::ppa2(), presets::truncated_polynomial(3)] {
            assert!(alg.check_associative());
            assert!(alg.check_unital());
            alg.check_radical().unwrap();
        }
    }

    #[test]
    fn opposite_is_an_involution() {
        let a = presets::ppa2();
        let opop = a.opposite().opposite();
        assert_eq!(opop.fingerprint(), a.fingerprint());
        assert!(a.opposite().is_opposite_of(&a));
        let n = presets::truncated_polynomial(3);
        assert_eq!(n.opposite().fingerprint(), n.fingerprint());
    }

    #[test]
    fn opposite_reverses_arrows() {
        let a = presets::a3r2();
        let op = a.opposite();
        let arrow = a.labels().iter().position(|l| l == "a").unwrap();
        assert_eq!(a.corner(arrow), (0, 1));
        assert_eq!(op.corner(arrow), (1, 0));
        // the relation a*b = 0 becomes b*a = 0 in the opposite
        let b = a.labels().iter().position(|l| l == "b").unwrap();
        assert!(op.product(b, arrow).is_empty());
        assert!(op.check_associative());
    }

    #[test]
    fn triangular_algebra_is_associative() {
        let t = presets::a3r2().triangular();
        assert_eq!(t.dim(), 15);
        assert!(t.check_associative());
        assert!(t.check_unital());
        t.check_radical().unwrap();
    }
}

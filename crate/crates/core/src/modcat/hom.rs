use super::module::{FdModule, ModuleHom};
use crate::linalg::{Coordinates, Matrix};

/// A basis of `Hom(X, Y)` with a coordinate solver.
#[derive(Clone)]
pub struct HomSpace {
    source: FdModule,
    target: FdModule,
    basis: Vec<ModuleHom>,
    coords: Option<Coordinates>,
}

impl HomSpace {
    pub fn source(&self) -> &FdModule {
        &self.source
    }

    pub fn target(&self) -> &FdModule {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ModuleHom] {
        &self.basis
    }

    /// Coordinates of `h`, or `None` if `h` is not in the space.
    pub fn coords(&self, h: &ModuleHom) -> Option<Vec<u32>> {
        let v = h.flatten();
        match &self.coords {
            Some(c) => c.coords(&v),
            None => v.iter().all(|&z| z == 0).then(Vec::new),
        }
    }

    pub fn combine(&self, c: &[u32]) -> ModuleHom {
        ModuleHom::combination(&self.source, &self.target, &self.basis, c)
    }

    /// Matrix whose columns are the coordinates of the given homs.
    pub fn coordinate_matrix(&self, homs: &[ModuleHom]) -> Matrix {
        let p = self.source.field();
        let cols: Vec<Vec<u32>> =
            homs.iter().map(|h| self.coords(h).expect("hom lies in the space")).collect();
        Matrix::from_columns(p, self.dim(), &cols)
    }

    /// Dimension of the span of the given homs.
    pub fn span_rank(&self, homs: &[ModuleHom]) -> usize {
        if homs.is_empty() || self.dim() == 0 {
            return 0;
        }
        self.coordinate_matrix(homs).rank()
    }
}

/// Solves the intertwining equations for the arrows (idempotents and arrows generate).
pub fn hom_space(x: &FdModule, y: &FdModule) -> HomSpace {
    assert!(x.same_algebra(y), "hom between modules over different algebras");
    let alg = x.algebra();
    let p = x.field();
    let nv = alg.num_vertices();
    let mut offs = vec![0usize; nv + 1];
    for v in 0..nv {
        offs[v + 1] = offs[v] + x.dims()[v] * y.dims()[v];
    }
    let n = offs[nv];
    if n == 0 {
        return HomSpace { source: x.clone(), target: y.clone(), basis: Vec::new(), coords: None };
    }
    let var = |v: usize, r: usize, s: usize| offs[v] + r * x.dims()[v] + s;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &arrow in alg.arrows() {
        let (a, c) = alg.corner(arrow);
        let ax = x.act(arrow);
        let ay = y.act(arrow);
        // ay * F_a - F_c * ax = 0, entry (r, s) with r < dim Y_c, s < dim X_a
        for r in 0..y.dims()[c] {
            for s in 0..x.dims()[a] {
                let mut row = vec![0u32; n];
                for k in 0..y.dims()[a] {
                    let z = ay.get(r, k);
                    if z != 0 {
                        let i = var(a, k, s);
                        row[i] = p.add(row[i], z);
                    }
                }
                for k in 0..x.dims()[c] {
                    let z = ax.get(k, s);
                    if z != 0 {
                        let i = var(c, r, k);
                        row[i] = p.sub(row[i], z);
                    }
                }
                if row.iter().any(|&z| z != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let null = if rows.is_empty() {
        Matrix::identity(p, n)
    } else {
        let m = Matrix::from_fn(p, rows.len(), n, |i, j| rows[i][j]);
        m.nullspace()
    };
    let basis: Vec<ModuleHom> = null.columns().iter().map(|v| ModuleHom::from_flat(x, y, v)).collect();
    let coords = (null.cols() > 0).then(|| Coordinates::new(null));
    HomSpace { source: x.clone(), target: y.clone(), basis, coords }
}

pub fn hom_basis(x: &FdModule, y: &FdModule) -> Vec<ModuleHom> {
    hom_space(x, y).basis
}

pub fn hom_dim(x: &FdModule, y: &FdModule) -> usize {
    hom_space(x, y).dim()
}

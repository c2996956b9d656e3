use crate::modcat::{HomSpace, ModuleHom};
use crate::linalg::Matrix;

/// `Hom(X, Y)` modulo a subspace, with chosen representatives of a quotient basis.
#[derive(Clone)]
pub struct QuotSpace {
    space: HomSpace,
    proj: Matrix,
    reps: Vec<ModuleHom>,
}

impl QuotSpace {
    /// Quotient of `space` by the span of `ideal`; `preferred` representatives
    /// are tried before standard ones when completing a basis.
    pub fn new(space: HomSpace, ideal: &[ModuleHom], preferred: &[ModuleHom]) -> QuotSpace {
        let p = space.source().field();
        let d = space.dim();
        if d == 0 {
            return QuotSpace { space, proj: Matrix::zeros(p, 0, 0), reps: Vec::new() };
        }
        let mut chosen = if ideal.is_empty() {
            Matrix::zeros(p, d, 0)
        } else {
            let m = space.coordinate_matrix(ideal);
            if m.is_zero() {
                Matrix::zeros(p, d, 0)
            } else {
                m.column_basis()
            }
        };
        let ideal_dim = chosen.cols();
        let mut candidates: Vec<Vec<u32>> =
            preferred.iter().filter_map(|h| space.coords(h)).collect();
        candidates.extend((0..d).map(|i| {
            let mut e = vec![0u32; d];
            e[i] = 1;
            e
        }));
        let mut comp: Vec<Vec<u32>> = Vec::new();
        for c in candidates {
            if chosen.cols() == d {
                break;
            }
            let trial = chosen.hstack(&Matrix::column_vector(p, &c));
            if trial.rank() == trial.cols() {
                chosen = trial;
                comp.push(c);
            }
        }
        let proj = chosen.inverse().expect("completed basis").block(ideal_dim, 0, comp.len(), d);
        let reps = comp.iter().map(|c| space.combine(c)).collect();
        QuotSpace { space, proj, reps }
    }

    pub fn space(&self) -> &HomSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[ModuleHom] {
        &self.reps
    }

    /// Quotient coordinates of a hom lying in the ambient space.
    pub fn coords(&self, h: &ModuleHom) -> Vec<u32> {
        if self.dim() == 0 {
            return Vec::new();
        }
        let c = self.space.coords(h).expect("hom lies in the ambient space");
        self.proj.mul(&Matrix::column_vector(h.source().field(), &c)).flatten()
    }

    /// Projection from ambient coordinates to quotient coordinates.
    pub fn projection(&self) -> &Matrix {
        &self.proj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::modcat::{hom_space, indecomposable_projective, projective_ideal, FdModule};

    #[test]
    fn quotient_by_projective_ideal() {
        let a = presets::a3r2();
        let p2 = indecomposable_projective(&a, 1);
        let s3 = FdModule::simple(&a, 2);
        let q = QuotSpace::new(hom_space(&s3, &p2), &projective_ideal(&s3, &p2), &[]);
        assert_eq!(q.space().dim(), 1);
        assert_eq!(q.dim(), 0);
        let id = ModuleHom::identity(&p2);
        let q = QuotSpace::new(hom_space(&p2, &p2), &[], std::slice::from_ref(&id));
        assert_eq!(q.coords(&id), vec![1]);
    }
}

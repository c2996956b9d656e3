use std::collections::HashMap;

use super::{FdAlgebra, Sparse};
use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, Matrix};

pub const DEFAULT_PATH_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Linear combination of paths; each path is a list of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(u32, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: FieldPrime,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(field: FieldPrime, vertices: &[&str]) -> Self {
        QuiverPresentation {
            field,
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: Vec::new(),
            relations: Vec::new(),
        }
    }

    pub fn arrow(mut self, name: &str, source: &str, target: &str) -> Self {
        let s = self.vertices.iter().position(|v| v == source).expect("unknown source vertex");
        let t = self.vertices.iter().position(|v| v == target).expect("unknown target vertex");
        self.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
        self
    }

    /// Adds a relation from `(coefficient, "a*b*c")` terms.
    pub fn relation(mut self, terms: &[(i64, &str)]) -> Self {
        let p = self.field;
        let terms = terms
            .iter()
            .map(|(c, path)| {
                let arrows = path
                    .split('*')
                    .map(|a| self.arrows.iter().position(|x| x.name == a.trim()).expect("unknown arrow"))
                    .collect();
                (p.reduce(*c), arrows)
            })
            .collect();
        self.relations.push(Relation { terms });
        self
    }

    /// Checks arrow-name uniqueness and relation composability/length.
    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Input(format!("duplicate arrow name {}", a.name)));
            }
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::Input(format!("arrow {} has an unknown endpoint", a.name)));
            }
        }
        for r in &self.relations {
            let mut ends = None;
            for (_, path) in &r.terms {
                if path.len() < 2 {
                    return Err(Error::Input("relation paths must have length at least 2".into()));
                }
                for w in path.windows(2) {
                    if self.arrows[w[0]].target != self.arrows[w[1]].source {
                        return Err(Error::Input("relation path is not composable".into()));
                    }
                }
                let e = (self.arrows[path[0]].source, self.arrows[*path.last().unwrap()].target);
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Input("relation terms have different endpoints".into()));
                }
            }
        }
        Ok(())
    }
}

struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

fn enumerate_paths(pres: &QuiverPresentation, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> =
        (0..pres.vertices.len()).map(|v| Path { start: v, end: v, arrows: Vec::new() }).collect();
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &i in &frontier {
            for (a, arrow) in pres.arrows.iter().enumerate() {
                if arrow.source == all[i].end {
                    let mut arrows = all[i].arrows.clone();
                    arrows.push(a);
                    let start = all[i].start;
                    next.push(all.len());
                    all.push(Path { start, end: arrow.target, arrows });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    all
}

/// Builds the bound quiver algebra `kQ / I`.
pub fn build_algebra(pres: &QuiverPresentation) -> Result<FdAlgebra> {
    build_algebra_with_cap(pres, DEFAULT_PATH_CAP)
}

pub fn build_algebra_with_cap(pres: &QuiverPresentation, cap: usize) -> Result<FdAlgebra> {
    pres.validate()?;
    let p = pres.field;
    for m in 1..=cap {
        // work in kQ / J^{m+1}
        let paths = enumerate_paths(pres, m);
        let index: HashMap<(usize, Vec<usize>), usize> =
            paths.iter().enumerate().map(|(i, q)| ((q.start, q.arrows.clone()), i)).collect();
        let np = paths.len();
        // column order: longest paths first
        let mut order: Vec<usize> = (0..np).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(paths[i].arrows.len()), i));
        let col_of: Vec<usize> = {
            let mut c = vec![0; np];
            for (k, &i) in order.iter().enumerate() {
                c[i] = k;
            }
            c
        };
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for r in &pres.relations {
            let (s, t) = {
                let (_, path) = &r.terms[0];
                (pres.arrows[path[0]].source, pres.arrows[*path.last().unwrap()].target)
            };
            for u in paths.iter().filter(|u| u.end == s) {
                for v in paths.iter().filter(|v| v.start == t) {
                    let mut row = vec![0u32; np];
                    let mut any = false;
                    for (c, path) in &r.terms {
                        let len = u.arrows.len() + path.len() + v.arrows.len();
                        if len > m {
                            continue;
                        }
                        let mut full = u.arrows.clone();
                        full.extend(path);
                        full.extend(&v.arrows);
                        let k = col_of[index[&(u.start, full)]];
                        row[k] = p.add(row[k], *c);
                        any = true;
                    }
                    if any && row.iter().any(|&z| z != 0) {
                        gens.push(row);
                    }
                }
            }
        }
        let (reduced, pivots) = if gens.is_empty() {
            (Matrix::zeros(p, 0, np), Vec::new())
        } else {
            let rows: Vec<Vec<i64>> = gens.iter().map(|r| r.iter().map(|&z| z as i64).collect()).collect();
            let rr = Matrix::from_rows(p, &rows).rref();
            (rr.reduced, rr.pivots)
        };
        let reduce = |v: &mut Vec<u32>| {
            for (r, &pc) in pivots.iter().enumerate() {
                let c = v[pc];
                if c != 0 {
                    let row = reduced.row(r);
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = p.sub(*x, p.mul(c, y));
                    }
                }
            }
        };
        // every path of length m must lie in the ideal
        let all_top_in_ideal = paths.iter().filter(|q| q.arrows.len() == m).all(|q| pivots.contains(&col_of[index[&(q.start, q.arrows.clone())]]));
        if !all_top_in_ideal {
            continue;
        }
        let basis_paths: Vec<usize> = (0..np).filter(|&i| !pivots.contains(&col_of[i])).collect();
        let pos_in_basis: HashMap<usize, usize> = basis_paths.iter().enumerate().map(|(k, &i)| (col_of[i], k)).collect();
        let dim = basis_paths.len();
        let mut products: Vec<Sparse> = vec![Vec::new(); dim * dim];
        for (x, &i) in basis_paths.iter().enumerate() {
            for (y, &j) in basis_paths.iter().enumerate() {
                if paths[i].end != paths[j].start || paths[i].arrows.len() + paths[j].arrows.len() > m {
                    continue;
                }
                let mut full = paths[i].arrows.clone();
                full.extend(&paths[j].arrows);
                let mut v = vec![0u32; np];
                v[col_of[index[&(paths[i].start, full)]]] = 1;
                reduce(&mut v);
                products[x * dim + y] =
                    v.iter().enumerate().filter(|(_, &z)| z != 0).map(|(k, &z)| (pos_in_basis[&k], z)).collect();
            }
        }
        let labels: Vec<String> = basis_paths
            .iter()
            .map(|&i| {
                let q = &paths[i];
                if q.arrows.is_empty() {
                    format!("e{}", pres.vertices[q.start])
                } else {
                    q.arrows.iter().map(|&a| pres.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        let corner = basis_paths.iter().map(|&i| (paths[i].start, paths[i].end)).collect();
        let idempotents = (0..pres.vertices.len()).map(|v| basis_paths.iter().position(|&i| i == v).unwrap()).collect();
        let arrows = basis_paths
            .iter()
            .enumerate()
            .filter(|(_, &i)| paths[i].arrows.len() == 1)
            .map(|(k, _)| k)
            .collect();
        return Ok(FdAlgebra::from_parts(p, pres.vertices.clone(), labels, corner, products, idempotents, arrows));
    }
    Err(Error::NotAdmissible { cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_admissible_loop_is_rejected() {
        let pres = QuiverPresentation::new(FieldPrime::TWO, &["1"]).arrow("t", "1", "1");
        assert_eq!(build_algebra_with_cap(&pres, 6).unwrap_err(), Error::NotAdmissible { cap: 6 });
    }

    #[test]
    fn commutative_square_has_expected_dimension() {
        let pres = QuiverPresentation::new(FieldPrime::new(3).unwrap(), &["1", "2", "3", "4"])
            .arrow("a", "1", "2")
            .arrow("b", "2", "4")
            .arrow("c", "1", "3")
            .arrow("d", "3", "4")
            .relation(&[(1, "a*b"), (-1, "c*d")]);
        let alg = build_algebra(&pres).unwrap();
        // 4 idempotents, 4 arrows, one surviving length-two path
        assert_eq!(alg.dim(), 9);
        assert!(alg.check_associative());
        assert_eq!(alg.arrows().len(), 4);
    }

    #[test]
    fn radical_is_spanned_by_nontrivial_paths() {
        let alg = super::super::presets::ppa2();
        for b in alg.radical_basis() {
            assert!(!alg.labels()[b].starts_with('e'));
        }
        assert_eq!(alg.radical_basis().len(), 2);
    }
}

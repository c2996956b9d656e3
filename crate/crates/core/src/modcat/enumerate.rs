use std::collections::VecDeque;
use std::sync::Arc;

use super::ar::{ar_sequence, ar_translate, ar_translate_inv};
use super::decompose::{decompose, iso_indecomposable};
use super::module::FdModule;
use super::proj::{cosyzygy, indecomposable_injectives, indecomposable_projectives, is_injective, is_projective, syzygy};
use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_ind: usize,
    pub max_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_ind: 512, max_dim: 64 }
    }
}

/// All indecomposables of a representation-finite algebra, in canonical order
/// (projectives by vertex, then discovery order).
#[derive(Clone, Debug)]
pub struct Catalog {
    algebra: Arc<FdAlgebra>,
    modules: Vec<FdModule>,
    names: Vec<String>,
    projective_of: Vec<usize>,
    injective_of: Vec<usize>,
    projective: Vec<bool>,
    injective: Vec<bool>,
}

impl Catalog {
    pub fn enumerate(alg: &Arc<FdAlgebra>, caps: Caps) -> Result<Catalog> {
        let mut modules: Vec<FdModule> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        let insert = |m: FdModule, modules: &mut Vec<FdModule>, queue: &mut VecDeque<usize>| -> Result<usize> {
            if let Some(i) = modules.iter().position(|n| iso_indecomposable(n, &m).is_some()) {
                return Ok(i);
            }
            if m.dim() > caps.max_dim {
                return Err(Error::EnumerationCapExceeded(format!("indecomposable of dimension {}", m.dim())));
            }
            if modules.len() >= caps.max_ind {
                return Err(Error::EnumerationCapExceeded(format!("more than {} indecomposables", caps.max_ind)));
            }
            modules.push(m);
            queue.push_back(modules.len() - 1);
            Ok(modules.len() - 1)
        };
        let mut projective_of = Vec::new();
        for p in indecomposable_projectives(alg) {
            projective_of.push(insert(p, &mut modules, &mut queue)?);
        }
        let mut injective_of = Vec::new();
        for i in indecomposable_injectives(alg) {
            injective_of.push(insert(i, &mut modules, &mut queue)?);
        }
        while let Some(i) = queue.pop_front() {
            let m = modules[i].clone();
            let proj = projective_of.contains(&i);
            let inj = injective_of.contains(&i);
            let mut found: Vec<FdModule> = Vec::new();
            if proj {
                let (rad, _) = m.submodule(m.radical_spans());
                found.push(rad);
            } else {
                found.push(ar_translate(&m));
                found.push(ar_sequence(&m)?.middle);
                found.push(syzygy(&m));
            }
            if inj {
                let (q, _) = m.quotient(&m.socle_spans());
                found.push(q);
            } else {
                found.push(ar_translate_inv(&m));
                found.push(cosyzygy(&m));
            }
            for x in found {
                if x.is_zero() {
                    continue;
                }
                for part in decompose(&x)?.parts {
                    insert(part.module, &mut modules, &mut queue)?;
                }
            }
        }
        let projective: Vec<bool> = (0..modules.len()).map(|i| projective_of.contains(&i)).collect();
        let injective: Vec<bool> = (0..modules.len()).map(|i| injective_of.contains(&i)).collect();
        debug_assert!(modules.iter().zip(&projective).all(|(m, &p)| is_projective(m) == p));
        debug_assert!(modules.iter().zip(&injective).all(|(m, &p)| is_injective(m) == p));
        let mut names = Vec::with_capacity(modules.len());
        let mut extra = 0;
        for (i, m) in modules.iter().enumerate() {
            let vname = |v: usize| alg.vertex_names()[v].clone();
            let name = if let Some(v) = m.simple_vertex() {
                format!("S{}", vname(v))
            } else if let Some(v) = projective_of.iter().position(|&j| j == i) {
                format!("P{}", vname(v))
            } else if let Some(v) = injective_of.iter().position(|&j| j == i) {
                format!("I{}", vname(v))
            } else {
                extra += 1;
                format!("X{extra}")
            };
            names.push(name);
        }
        Ok(Catalog { algebra: alg.clone(), modules, names, projective_of, injective_of, projective, injective })
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[FdModule] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &FdModule {
        &self.modules[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_projective(&self, i: usize) -> bool {
        self.projective[i]
    }

    pub fn is_injective(&self, i: usize) -> bool {
        self.injective[i]
    }

    pub fn projective_index(&self, v: usize) -> usize {
        self.projective_of[v]
    }

    pub fn injective_index(&self, v: usize) -> usize {
        self.injective_of[v]
    }

    /// Looks up a name, accepting aliases `P<v>`, `I<v>`, `S<v>` (optionally with `_`).
    pub fn resolve(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Some(i);
        }
        let (kind, rest) = name.split_at(name.char_indices().nth(1).map(|(i, _)| i).unwrap_or(name.len()));
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let v = self.algebra.vertex_index(rest)?;
        match kind {
            "P" => Some(self.projective_of[v]),
            "I" => Some(self.injective_of[v]),
            "S" => self.modules.iter().position(|m| m.simple_vertex() == Some(v)),
            _ => None,
        }
    }

    /// Catalog index of an indecomposable module.
    pub fn index_of(&self, x: &FdModule) -> Option<usize> {
        self.modules.iter().position(|m| iso_indecomposable(m, x).is_some())
    }

    /// Catalog indices of the indecomposable summands (with repetition), sorted.
    pub fn decompose_indices(&self, x: &FdModule) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for part in decompose(x)?.parts {
            let i = self
                .index_of(&part.module)
                .ok_or_else(|| Error::Internal(format!("summand {:?} missing from the catalog", part.module.dims())))?;
            out.push(i);
        }
        out.sort_unstable();
        Ok(out)
    }
}

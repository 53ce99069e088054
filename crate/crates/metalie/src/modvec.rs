//! Elements of the free module `R^t` as sparse component lists.

use std::fmt;

use crate::field::FieldSpec;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// A vector in `R^t`: nonzero polynomial components only, sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeModuleVector {
    width: usize,
    entries: Vec<(usize, Polynomial)>,
}

impl FreeModuleVector {
    pub fn zero(width: usize) -> Self {
        FreeModuleVector { width, entries: Vec::new() }
    }

    pub fn from_entries(width: usize, entries: Vec<(usize, Polynomial)>) -> Self {
        let mut v = Self::zero(width);
        for (idx, p) in entries {
            v.add_to_component(idx, &p);
        }
        v
    }

    /// `p * e_idx`.
    pub fn unit(width: usize, idx: usize, p: Polynomial) -> Self {
        assert!(idx < width);
        if p.is_zero() {
            return Self::zero(width);
        }
        FreeModuleVector { width, entries: vec![(idx, p)] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Polynomial)] {
        &self.entries
    }

    pub fn component(&self, idx: usize) -> Option<&Polynomial> {
        self.entries
            .binary_search_by_key(&idx, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn add_to_component(&mut self, idx: usize, p: &Polynomial) {
        assert!(idx < self.width);
        if p.is_zero() {
            return;
        }
        match self.entries.binary_search_by_key(&idx, |e| e.0) {
            Ok(i) => {
                let s = self.entries[i].1.add(p);
                if s.is_zero() {
                    self.entries.remove(i);
                } else {
                    self.entries[i].1 = s;
                }
            }
            Err(i) => self.entries.insert(i, (idx, p.clone())),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "module width mismatch");
        let mut out = self.clone();
        for (idx, p) in &other.entries {
            out.add_to_component(*idx, p);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FreeModuleVector {
            width: self.width,
            entries: self.entries.iter().map(|(i, p)| (*i, p.neg())).collect(),
        }
    }

    pub fn scale(&self, c: u64, field: FieldSpec) -> Self {
        if field.reduce_u64(c) == 0 {
            return Self::zero(self.width);
        }
        FreeModuleVector {
            width: self.width,
            entries: self.entries.iter().map(|(i, p)| (*i, p.scale(c))).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        if p.is_zero() {
            return Self::zero(self.width);
        }
        FreeModuleVector {
            width: self.width,
            entries: self
                .entries
                .iter()
                .map(|(i, q)| (*i, q.mul(p)))
                .filter(|(_, q)| !q.is_zero())
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &[u32], c: u64) -> Self {
        FreeModuleVector {
            width: self.width,
            entries: self
                .entries
                .iter()
                .map(|(i, q)| (*i, q.mul_term(m, c)))
                .filter(|(_, q)| !q.is_zero())
                .collect(),
        }
    }

    /// Leading module term `(component, monomial, coeff)` under `order`.
    pub fn lead(&self, order: MonomialOrder) -> Option<(usize, Monomial, u64)> {
        let mut best: Option<(usize, &Monomial, u64)> = None;
        for (idx, p) in &self.entries {
            for (m, c) in p.terms() {
                match best {
                    None => best = Some((*idx, m, *c)),
                    Some((bi, bm, _)) => {
                        if order.cmp_module((*idx, m), (bi, bm)) == std::cmp::Ordering::Greater {
                            best = Some((*idx, m, *c));
                        }
                    }
                }
            }
        }
        best.map(|(i, m, c)| (i, m.clone(), c))
    }

    pub fn max_degree(&self) -> u64 {
        self.entries
            .iter()
            .filter_map(|(_, p)| p.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Widen with `extra` zero components appended.
    pub fn extend_width(&self, extra: usize) -> Self {
        FreeModuleVector { width: self.width + extra, entries: self.entries.clone() }
    }

    /// Shift component indices by `offset` inside a wider module.
    pub fn shift(&self, offset: usize, new_width: usize) -> Self {
        let entries: Vec<_> = self
            .entries
            .iter()
            .map(|(i, p)| {
                assert!(i + offset < new_width);
                (i + offset, p.clone())
            })
            .collect();
        FreeModuleVector { width: new_width, entries }
    }

    /// Re-embed every component polynomial into a ring with extra variables.
    pub fn extend_vars(&self, extra: usize) -> Self {
        FreeModuleVector {
            width: self.width,
            entries: self.entries.iter().map(|(i, p)| (*i, p.extend_vars(extra))).collect(),
        }
    }

    pub fn shrink_vars(&self, extra: usize) -> Self {
        FreeModuleVector {
            width: self.width,
            entries: self.entries.iter().map(|(i, p)| (*i, p.shrink_vars(extra))).collect(),
        }
    }

    pub fn uses_var(&self, idx: usize) -> bool {
        self.entries.iter().any(|(_, p)| p.uses_var(idx))
    }
}

impl fmt::Display for FreeModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, p)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*e{}", p, idx + 1)?;
        }
        Ok(())
    }
}

//! Finitely presented modules over the polynomial ring: rank over the
//! fraction field, the torsion submodule by saturation at a maximal minor,
//! embeddings of torsion-free modules into free modules, and linear systems
//! whose unknowns range over a quotient module.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{self, monomials_up_to};
use crate::modvec::FreeModuleVector;
use crate::poly::{MonomialOrder, Polynomial};
use crate::polymat::PolyMatrix;

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

/// `R^n / <relations>`. The Groebner basis of the relation submodule and the
/// rank are computed once on demand.
#[derive(Debug)]
pub struct ModulePresentation {
    field: FieldSpec,
    nvars: usize,
    ngens: usize,
    relations: Vec<FreeModuleVector>,
    gb: OnceLock<Vec<FreeModuleVector>>,
    rank: OnceLock<usize>,
}

impl Clone for ModulePresentation {
    fn clone(&self) -> Self {
        ModulePresentation {
            field: self.field,
            nvars: self.nvars,
            ngens: self.ngens,
            relations: self.relations.clone(),
            gb: self.gb.clone(),
            rank: self.rank.clone(),
        }
    }
}

impl PartialEq for ModulePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.nvars == other.nvars
            && self.ngens == other.ngens
            && self.relations == other.relations
    }
}

/// Outcome of a linear system over a quotient module.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    NoSolution,
    Solution {
        /// One value per unknown.
        particular: Vec<FreeModuleVector>,
        /// Generating set of the homogeneous solution module; each entry is
        /// one tuple of values for all unknowns.
        homogeneous: Vec<Vec<FreeModuleVector>>,
    },
}

impl ModulePresentation {
    pub fn new(
        field: FieldSpec,
        nvars: usize,
        ngens: usize,
        relations: Vec<FreeModuleVector>,
    ) -> Result<Self> {
        for rel in &relations {
            if rel.width() != ngens {
                return Err(Error::WidthMismatch { expected: ngens, got: rel.width() });
            }
            for (_, p) in rel.entries() {
                if p.field() != field || p.nvars() != nvars {
                    return Err(Error::ConfigMismatch(
                        "relation polynomial has a different modulus or variable count".into(),
                    ));
                }
            }
        }
        Ok(ModulePresentation {
            field,
            nvars,
            ngens,
            relations,
            gb: OnceLock::new(),
            rank: OnceLock::new(),
        })
    }

    pub fn free(field: FieldSpec, nvars: usize, ngens: usize) -> Self {
        Self::new(field, nvars, ngens, Vec::new()).unwrap()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &[FreeModuleVector] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &[FreeModuleVector] {
        self.gb.get_or_init(|| groebner::groebner(&self.relations, ORDER))
    }

    /// Normal form and membership of `v` modulo the relation submodule.
    pub fn reduce(&self, v: &FreeModuleVector) -> Result<(FreeModuleVector, bool)> {
        if v.width() != self.ngens {
            return Err(Error::WidthMismatch { expected: self.ngens, got: v.width() });
        }
        let nf = groebner::reduce(v, self.groebner_basis(), ORDER);
        let member = nf.is_zero();
        Ok((nf, member))
    }

    /// Relation matrix: one row per relation, one column per generator.
    pub fn relation_matrix(&self) -> PolyMatrix {
        let zero = Polynomial::zero(self.field, self.nvars);
        let rows: Vec<Vec<Polynomial>> = self
            .relations
            .iter()
            .map(|rel| {
                (0..self.ngens)
                    .map(|j| rel.component(j).cloned().unwrap_or_else(|| zero.clone()))
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            PolyMatrix::zero(self.field, self.nvars, 0, self.ngens)
        } else {
            PolyMatrix::from_rows(self.field, self.nvars, rows)
        }
    }

    /// Rank of the module over the fraction field of R.
    pub fn rank(&self) -> usize {
        *self.rank.get_or_init(|| self.ngens - self.relation_matrix().rank())
    }

    /// A nonzero maximal minor of the relation matrix, together with the row
    /// and column sets that realise it. `None` when the matrix has rank 0.
    pub fn maximal_minor(&self) -> Option<(Polynomial, Vec<usize>, Vec<usize>)> {
        let a = self.relation_matrix();
        let (rho, rows, cols) = a.rank_with_minor();
        if rho == 0 {
            return None;
        }
        let h = a.submatrix(&rows, &cols).det();
        debug_assert!(!h.is_zero());
        Some((h, rows, cols))
    }

    /// Generators (inside `R^n`) of the preimage of the torsion submodule:
    /// the saturation of the relation submodule at a nonzero maximal minor.
    /// Independent of the minor chosen.
    pub fn torsion_submodule(&self) -> Vec<FreeModuleVector> {
        match self.maximal_minor() {
            None => self.groebner_basis().to_vec(),
            Some((h, _, _)) => groebner::saturate(&self.relations, &h, self.ngens),
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        let gb = self.groebner_basis();
        self.torsion_submodule()
            .iter()
            .all(|v| groebner::is_member(v, gb, ORDER))
    }

    /// Quotient by the torsion submodule; always torsion-free.
    pub fn torsion_quotient(&self) -> ModulePresentation {
        ModulePresentation::new(self.field, self.nvars, self.ngens, self.torsion_submodule())
            .expect("widths preserved")
    }

    /// Injective module map into a free module of width `s = rank`.
    ///
    /// Pivot columns of the relation matrix are expressed over the free ones
    /// by Cramer's rule, clearing denominators by the maximal minor `h`: free
    /// generators map to `h e_q`, pivot generators to the corresponding row
    /// of `-adj(A_J) A_free`. The kernel of the induced map on `R^n` is
    /// certified to lie inside the relation submodule.
    pub fn embed_into_free(&self) -> Result<(usize, Vec<FreeModuleVector>)> {
        if !self.is_torsion_free() {
            return Err(Error::TorsionInput);
        }
        let s = self.rank();
        let n = self.ngens;
        let zero = Polynomial::zero(self.field, self.nvars);
        let images: Vec<FreeModuleVector> = match self.maximal_minor() {
            None => (0..n)
                .map(|i| FreeModuleVector::unit(n, i, Polynomial::one(self.field, self.nvars)))
                .collect(),
            Some((h, rows, cols)) => {
                let a = self.relation_matrix();
                let free_cols: Vec<usize> =
                    (0..n).filter(|j| !cols.contains(j)).collect();
                debug_assert_eq!(free_cols.len(), s);
                let a_j = a.submatrix(&rows, &cols);
                let a_free = a.submatrix(&rows, &free_cols);
                let pivot_images = a_j.adjugate().mul(&a_free); // rho x s
                let mut images = vec![FreeModuleVector::zero(s); n];
                for (q, &j) in free_cols.iter().enumerate() {
                    images[j] = FreeModuleVector::unit(s, q, h.clone());
                }
                for (c, &j) in cols.iter().enumerate() {
                    let entries: Vec<(usize, Polynomial)> = (0..s)
                        .map(|q| (q, pivot_images.get(c, q).neg()))
                        .filter(|(_, p)| !p.is_zero())
                        .collect();
                    images[j] = FreeModuleVector::from_entries(s, entries);
                }
                let _ = zero;
                images
            }
        };

        // every relation must map to zero in R^s
        for rel in &self.relations {
            let mut acc = FreeModuleVector::zero(images.first().map_or(s, |v| v.width()));
            for (j, p) in rel.entries() {
                acc = acc.add(&images[*j].mul_poly(p));
            }
            if !acc.is_zero() {
                return Err(Error::Malformed("embedding does not kill a relation".into()));
            }
        }
        // kernel of the induced map must be contained in the relations
        let gb = self.groebner_basis();
        let kernel = groebner::syzygies(&images, self.field, self.nvars, ORDER);
        for row in &kernel {
            let v = FreeModuleVector::from_entries(n, row.iter().cloned().enumerate().collect());
            if !groebner::is_member(&v, gb, ORDER) {
                return Err(Error::Malformed("embedding kernel escapes the relations".into()));
            }
        }
        Ok((s, images))
    }

    /// Every element of `R^n` with all component degrees at most `bound`,
    /// reduced to normal form modulo the relations, deduplicated. Order is
    /// deterministic (coefficient odometer over component-major monomials).
    pub fn enumerate_elements(&self, bound: u64) -> Vec<FreeModuleVector> {
        let monos = monomials_up_to(self.nvars, bound);
        let slots = self.ngens * monos.len();
        let p = self.field.p();
        let gb = self.groebner_basis();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; slots];
        loop {
            let mut v = FreeModuleVector::zero(self.ngens);
            for (slot, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    let comp = slot / monos.len();
                    let m = &monos[slot % monos.len()];
                    v.add_to_component(comp, &Polynomial::monomial(self.field, m.clone(), c));
                }
            }
            let nf = groebner::reduce(&v, gb, ORDER);
            if seen.insert(nf.clone()) {
                out.push(nf);
            }
            // odometer step
            let mut k = 0usize;
            loop {
                if k == slots {
                    return out;
                }
                coeffs[k] += 1;
                if coeffs[k] < p {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
    }
}

/// Solve `sum_j y_j f_ij = c_i (i = 1..m)` for unknowns `y_j` in `R^t / J`.
///
/// Everything is stacked into `R^{t m}`: one generator per (unknown,
/// component) pair, one shifted copy of J per equation. Solvability is
/// submodule membership of the stacked right-hand side; the homogeneous
/// solutions are the unknown-coordinates of the syzygies of the stack.
pub fn solve_linear_over_module(
    coeffs: &[Vec<Polynomial>],
    rhs: &[FreeModuleVector],
    width: usize,
    j_relations: &[FreeModuleVector],
    field: FieldSpec,
    nvars: usize,
) -> Result<SolveOutcome> {
    let m = coeffs.len();
    if rhs.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "{} equations but {} right-hand sides",
            m,
            rhs.len()
        )));
    }
    let l = coeffs.first().map_or(0, |row| row.len());
    for row in coeffs {
        if row.len() != l {
            return Err(Error::DimensionMismatch("ragged coefficient matrix".into()));
        }
    }
    for c in rhs {
        if c.width() != width {
            return Err(Error::WidthMismatch { expected: width, got: c.width() });
        }
    }
    for w in j_relations {
        if w.width() != width {
            return Err(Error::WidthMismatch { expected: width, got: w.width() });
        }
    }
    let total = width * m;

    // generators: v_{j,s} with block i equal to f_ij * e_s
    let mut gens: Vec<FreeModuleVector> = Vec::with_capacity(l * width + m * j_relations.len());
    for j in 0..l {
        for s in 0..width {
            let mut v = FreeModuleVector::zero(total.max(1));
            if total > 0 {
                for i in 0..m {
                    v.add_to_component(i * width + s, &coeffs[i][j]);
                }
            }
            gens.push(v);
        }
    }
    for i in 0..m {
        for w in j_relations {
            gens.push(w.shift(i * width, total.max(width)));
        }
    }
    let mut stacked = FreeModuleVector::zero(total.max(1));
    for (i, c) in rhs.iter().enumerate() {
        stacked = stacked.add(&c.shift(i * width, total.max(1)));
    }

    let (gb, reprs) = groebner::groebner_tracked(&gens, ORDER);
    let (nf, quot) = groebner::reduce_tracked(&stacked, &gb, ORDER);
    if !nf.is_zero() {
        return Ok(SolveOutcome::NoSolution);
    }

    // pull the quotients back to the original generators
    let mut gen_coeffs = vec![Polynomial::zero(field, nvars); gens.len()];
    for (k, q) in quot.iter().enumerate() {
        if !q.is_zero() {
            for g in 0..gens.len() {
                gen_coeffs[g] = gen_coeffs[g].add(&q.mul(&reprs[k][g]));
            }
        }
    }
    let mut particular = vec![FreeModuleVector::zero(width); l];
    for j in 0..l {
        for s in 0..width {
            let q = &gen_coeffs[j * width + s];
            if !q.is_zero() {
                particular[j].add_to_component(s, q);
            }
        }
    }

    let syz = groebner::syzygies(&gens, field, nvars, ORDER);
    let mut homogeneous = Vec::new();
    for row in &syz {
        let mut tuple = vec![FreeModuleVector::zero(width); l];
        let mut nonzero = false;
        for j in 0..l {
            for s in 0..width {
                let q = &row[j * width + s];
                if !q.is_zero() {
                    tuple[j].add_to_component(s, q);
                    nonzero = true;
                }
            }
        }
        if nonzero {
            homogeneous.push(tuple);
        }
    }
    homogeneous.dedup();
    Ok(SolveOutcome::Solution { particular, homogeneous })
}

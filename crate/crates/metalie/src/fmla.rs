//! The free metabelian Lie algebra F_r over GF(p): elements as (linear part,
//! commutant part), the commutant as a finitely presented module over
//! R = k[x1..xr], and the membership / independence formulas.
//!
//! Conventions fixed here and used everywhere: e_{ij} = [a_i, a_j] for
//! i > j, and the module action is u * x_k = [u, a_k].

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{evaluate_expr, LieAlgebraOps, LieExpr};
use crate::field::FieldSpec;
use crate::gflin::GfMatrix;
use crate::modvec::FreeModuleVector;
use crate::poly::Polynomial;
use crate::presentation::ModulePresentation;

/// Modes for the commutant-membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FittingMode {
    /// Linear part is zero.
    Structural,
    /// `[[u, y], u] = 0` over the generator probe set, general algebras.
    FormulaL,
    /// `[[u, a_i], u] = 0` for every generator, specialized to F_r.
    FormulaLFr,
}

#[derive(Clone)]
pub struct AlgebraContext {
    field: FieldSpec,
    r: usize,
    fitting: ModulePresentation,
}

impl AlgebraContext {
    pub fn new(field: FieldSpec, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::ConfigMismatch(format!("rank must be at least 2, got {r}")));
        }
        let t = r * (r - 1) / 2;
        let mut relations = Vec::new();
        // x_k e_{ij} - x_j e_{ik} + x_i e_{jk} for i > j > k (1-based)
        for i in 3..=r {
            for j in 2..i {
                for k in 1..j {
                    let mut rel = FreeModuleVector::zero(t);
                    rel.add_to_component(pair_index(i, j), &Polynomial::var(field, r, k - 1));
                    rel.add_to_component(
                        pair_index(i, k),
                        &Polynomial::var(field, r, j - 1).neg(),
                    );
                    rel.add_to_component(pair_index(j, k), &Polynomial::var(field, r, i - 1));
                    relations.push(rel);
                }
            }
        }
        let fitting = ModulePresentation::new(field, r, t, relations)?;
        Ok(AlgebraContext { field, r, fitting })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn pair_count(&self) -> usize {
        self.r * (self.r - 1) / 2
    }

    /// Presentation of the commutant as an R-module on the e_{ij}.
    pub fn fitting_presentation(&self) -> &ModulePresentation {
        &self.fitting
    }

    pub fn zero(&self) -> LieElement {
        LieElement {
            linear: vec![0; self.r],
            fitting: FreeModuleVector::zero(self.pair_count()),
        }
    }

    /// The free generator a_{idx+1}.
    pub fn gen_a(&self, idx: usize) -> Result<LieElement> {
        if idx >= self.r {
            return Err(Error::ConfigMismatch(format!(
                "generator a{} outside rank {}",
                idx + 1,
                self.r
            )));
        }
        let mut linear = vec![0; self.r];
        linear[idx] = 1;
        Ok(LieElement { linear, fitting: FreeModuleVector::zero(self.pair_count()) })
    }

    /// `e_{ij} = [a_i, a_j]`, 1-based, i > j.
    pub fn gen_e(&self, i: usize, j: usize) -> Result<LieElement> {
        if !(j >= 1 && j < i && i <= self.r) {
            return Err(Error::ConfigMismatch(format!("e{i}{j} is not a commutant generator")));
        }
        Ok(self.from_fitting(FreeModuleVector::unit(
            self.pair_count(),
            pair_index(i, j),
            Polynomial::one(self.field, self.r),
        )))
    }

    /// Element of the commutant, reduced to normal form.
    pub fn from_fitting(&self, v: FreeModuleVector) -> LieElement {
        let (nf, _) = self.fitting.reduce(&v).expect("width fixed by context");
        LieElement { linear: vec![0; self.r], fitting: nf }
    }

    pub fn from_parts(&self, linear: Vec<u64>, fitting: FreeModuleVector) -> LieElement {
        assert_eq!(linear.len(), self.r);
        let linear = linear.iter().map(|&c| self.field.reduce_u64(c)).collect();
        let (nf, _) = self.fitting.reduce(&fitting).expect("width fixed by context");
        LieElement { linear, fitting: nf }
    }

    /// The linear form `sum u_i x_i` of an element's linear part.
    pub fn lambda(&self, u: &LieElement) -> Polynomial {
        let mut acc = Polynomial::zero(self.field, self.r);
        for (i, &c) in u.linear.iter().enumerate() {
            if c != 0 {
                acc = acc.add(&Polynomial::var(self.field, self.r, i).scale(c));
            }
        }
        acc
    }

    pub fn add(&self, u: &LieElement, v: &LieElement) -> LieElement {
        let linear = u
            .linear
            .iter()
            .zip(&v.linear)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        // normal forms are closed under k-linear combinations
        LieElement { linear, fitting: u.fitting.add(&v.fitting) }
    }

    pub fn neg(&self, u: &LieElement) -> LieElement {
        LieElement {
            linear: u.linear.iter().map(|&a| self.field.neg(a)).collect(),
            fitting: u.fitting.neg(),
        }
    }

    pub fn scale(&self, c: u64, u: &LieElement) -> LieElement {
        let c = self.field.reduce_u64(c);
        LieElement {
            linear: u.linear.iter().map(|&a| self.field.mul(a, c)).collect(),
            fitting: u.fitting.scale(c, self.field),
        }
    }

    /// The Lie bracket. The result lies in the commutant: the bilinear
    /// expansion of the linear parts lands in the e_{ij}, and each commutant
    /// part is acted on by the other element's linear form.
    pub fn bracket(&self, u: &LieElement, v: &LieElement) -> LieElement {
        let t = self.pair_count();
        let mut acc = FreeModuleVector::zero(t);
        // [a_i, a_j] terms
        for (i, &ci) in u.linear.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for (j, &cj) in v.linear.iter().enumerate() {
                if cj == 0 || i == j {
                    continue;
                }
                let c = self.field.mul(ci, cj);
                let (idx, c) = if i > j {
                    (pair_index(i + 1, j + 1), c)
                } else {
                    (pair_index(j + 1, i + 1), self.field.neg(c))
                };
                acc.add_to_component(
                    idx,
                    &Polynomial::monomial(self.field, vec![0; self.r], c),
                );
            }
        }
        // commutant parts: w * x = [w, a], so u.fitting moves by lambda(v)
        acc = acc.add(&u.fitting.mul_poly(&self.lambda(v)));
        acc = acc.sub(&v.fitting.mul_poly(&self.lambda(u)));
        self.from_fitting(acc)
    }

    /// Evaluate a variable-free expression to a normal form.
    pub fn normal_form(&self, expr: &LieExpr) -> Result<LieElement> {
        if expr.arity() != 0 {
            return Err(Error::ArityMismatch { expected: 0, got: expr.arity() });
        }
        self.evaluate(expr, &[])
    }

    /// Evaluate an expression at a point (values for its variables).
    pub fn evaluate(&self, expr: &LieExpr, point: &[LieElement]) -> Result<LieElement> {
        if point.len() < expr.arity() {
            return Err(Error::ArityMismatch { expected: expr.arity(), got: point.len() });
        }
        evaluate_expr(self, expr, point)
    }

    /// Commutant membership, by structure or by the defining formulas.
    pub fn in_fitting(&self, u: &LieElement, mode: FittingMode) -> bool {
        match mode {
            FittingMode::Structural => u.linear.iter().all(|&c| c == 0),
            FittingMode::FormulaL | FittingMode::FormulaLFr => (0..self.r).all(|i| {
                let a = self.gen_a(i).unwrap();
                self.bracket(&self.bracket(u, &a), u).is_zero()
            }),
        }
    }

    /// Linear independence of the tuple modulo the commutant: rank of the
    /// matrix of linear parts equals the tuple length.
    pub fn phi_eval(&self, tuple: &[LieElement]) -> Result<bool> {
        let n = tuple.len();
        if n > self.r {
            return Err(Error::DimensionExceeded(n, self.r));
        }
        let rows: Vec<Vec<u64>> = tuple.iter().map(|u| u.linear.clone()).collect();
        if n == 0 {
            return Ok(true);
        }
        Ok(GfMatrix::from_rows(self.field, rows).rank() == n)
    }
}

impl LieAlgebraOps for AlgebraContext {
    type Elt = LieElement;

    fn zero_elt(&self) -> LieElement {
        self.zero()
    }

    fn constant(&self, idx: usize) -> Result<LieElement> {
        self.gen_a(idx)
    }

    fn add_elt(&self, a: &LieElement, b: &LieElement) -> LieElement {
        self.add(a, b)
    }

    fn neg_elt(&self, a: &LieElement) -> LieElement {
        self.neg(a)
    }

    fn scale_elt(&self, c: u64, a: &LieElement) -> LieElement {
        self.scale(c, a)
    }

    fn bracket_elt(&self, a: &LieElement, b: &LieElement) -> LieElement {
        self.bracket(a, b)
    }
}

/// Index of the pair (i, j), 1-based with i > j, in ascending
/// lexicographic order: (2,1) (3,1) (3,2) (4,1) ...
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i > j && j >= 1);
    (i - 1) * (i - 2) / 2 + (j - 1)
}

/// Inverse of `pair_index`.
pub fn pair_of(idx: usize) -> (usize, usize) {
    let mut i = 2;
    while i * (i - 1) / 2 <= idx {
        i += 1;
    }
    let j = idx - (i - 1) * (i - 2) / 2 + 1;
    (i, j)
}

/// An element of F_r: linear part over the free generators plus a normal-form
/// commutant part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    linear: Vec<u64>,
    fitting: FreeModuleVector,
}

impl LieElement {
    pub fn linear(&self) -> &[u64] {
        &self.linear
    }

    pub fn fitting(&self) -> &FreeModuleVector {
        &self.fitting
    }

    pub fn is_zero(&self) -> bool {
        self.linear.iter().all(|&c| c == 0) && self.fitting.is_zero()
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.linear.iter().enumerate() {
            if c == 1 {
                parts.push(format!("a{}", i + 1));
            } else if c != 0 {
                parts.push(format!("{}*a{}", c, i + 1));
            }
        }
        for (idx, p) in self.fitting.entries() {
            let (i, j) = pair_of(*idx);
            parts.push(format!("({})*e{}{}", p, i, j));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

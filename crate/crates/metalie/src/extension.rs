//! Direct module extensions F_n ⊕ M: the base algebra acts on M through the
//! linear forms of its elements, M is central inside the commutant, and the
//! commutant of the whole algebra splits as a block direct sum.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{evaluate_expr, LieAlgebraOps, LieExpr};
use crate::field::FieldSpec;
use crate::fmla::{AlgebraContext, LieElement};
use crate::modvec::FreeModuleVector;
use crate::presentation::ModulePresentation;

#[derive(Clone)]
pub struct ExtensionAlgebra {
    base: AlgebraContext,
    module: ModulePresentation,
}

/// Element of F_n ⊕ M: a base element plus a module part in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElement {
    pub lie: LieElement,
    pub module: FreeModuleVector,
}

impl ExtElement {
    pub fn is_zero(&self) -> bool {
        self.lie.is_zero() && self.module.is_zero()
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lie.is_zero(), self.module.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.lie),
            (true, false) => write!(f, "{}", self.module),
            (false, false) => write!(f, "{} + {}", self.lie, self.module),
        }
    }
}

/// Injective map of a torsion-free extension F_n ⊕ M into F_n ⊕ T_s.
pub struct ExtensionEmbedding {
    pub s: usize,
    /// Image of each module generator inside T_s.
    pub images: Vec<FreeModuleVector>,
}

impl ExtensionAlgebra {
    pub fn new(base: AlgebraContext, module: ModulePresentation) -> Result<Self> {
        if module.field() != base.field() {
            return Err(Error::ConfigMismatch("module and algebra moduli differ".into()));
        }
        if module.nvars() != base.rank() {
            return Err(Error::ConfigMismatch(format!(
                "module over {} variables but algebra has rank {}",
                module.nvars(),
                base.rank()
            )));
        }
        Ok(ExtensionAlgebra { base, module })
    }

    /// F_n ⊕ T_s.
    pub fn free_extension(base: AlgebraContext, s: usize) -> Self {
        let module = ModulePresentation::free(base.field(), base.rank(), s);
        ExtensionAlgebra { base, module }
    }

    pub fn base(&self) -> &AlgebraContext {
        &self.base
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field()
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement {
            lie: self.base.zero(),
            module: FreeModuleVector::zero(self.module.ngens()),
        }
    }

    pub fn from_lie(&self, lie: LieElement) -> ExtElement {
        ExtElement { lie, module: FreeModuleVector::zero(self.module.ngens()) }
    }

    pub fn from_module(&self, v: FreeModuleVector) -> Result<ExtElement> {
        let (nf, _) = self.module.reduce(&v)?;
        Ok(ExtElement { lie: self.base.zero(), module: nf })
    }

    pub fn add(&self, u: &ExtElement, v: &ExtElement) -> ExtElement {
        ExtElement {
            lie: self.base.add(&u.lie, &v.lie),
            module: u.module.add(&v.module),
        }
    }

    pub fn neg(&self, u: &ExtElement) -> ExtElement {
        ExtElement { lie: self.base.neg(&u.lie), module: u.module.neg() }
    }

    pub fn scale(&self, c: u64, u: &ExtElement) -> ExtElement {
        ExtElement {
            lie: self.base.scale(c, &u.lie),
            module: u.module.scale(self.field().reduce_u64(c), self.field()),
        }
    }

    /// Bracket: base bracket on the lie parts; module parts move by the
    /// opposite linear form, and [M, M] = [M, Fit] = 0.
    pub fn bracket(&self, u: &ExtElement, v: &ExtElement) -> ExtElement {
        let lie = self.base.bracket(&u.lie, &v.lie);
        let m = u
            .module
            .mul_poly(&self.base.lambda(&v.lie))
            .sub(&v.module.mul_poly(&self.base.lambda(&u.lie)));
        let (nf, _) = self.module.reduce(&m).expect("width fixed by algebra");
        ExtElement { lie, module: nf }
    }

    pub fn evaluate(&self, expr: &LieExpr, point: &[ExtElement]) -> Result<ExtElement> {
        if point.len() < expr.arity() {
            return Err(Error::ArityMismatch { expected: expr.arity(), got: point.len() });
        }
        evaluate_expr(self, expr, point)
    }

    /// Linear independence modulo the commutant, lifted: only lie linear
    /// parts matter since M sits inside the commutant.
    pub fn phi_eval(&self, tuple: &[ExtElement]) -> Result<bool> {
        let lies: Vec<LieElement> = tuple.iter().map(|u| u.lie.clone()).collect();
        self.base.phi_eval(&lies)
    }

    /// The commutant of F_n ⊕ M as one presented module: block direct sum of
    /// the base commutant presentation and M.
    pub fn fitting_of(&self) -> ModulePresentation {
        let t = self.base.pair_count();
        let m = self.module.ngens();
        let total = t + m;
        let mut relations: Vec<FreeModuleVector> = Vec::new();
        for rel in self.base.fitting_presentation().relations() {
            relations.push(rel.extend_width(m));
        }
        for rel in self.module.relations() {
            relations.push(rel.shift(t, total));
        }
        ModulePresentation::new(self.field(), self.base.rank(), total, relations)
            .expect("widths consistent by construction")
    }

    /// Embedding into F_n ⊕ T_s for torsion-free M, with s = rank(M).
    /// Bracket compatibility is verified on all (module generator, a_i)
    /// pairs.
    pub fn embed(&self) -> Result<ExtensionEmbedding> {
        let (s, images) = self.module.embed_into_free()?;
        let map = |v: &FreeModuleVector| -> FreeModuleVector {
            let mut acc = FreeModuleVector::zero(s);
            for (q, p) in v.entries() {
                acc = acc.add(&images[*q].mul_poly(p));
            }
            acc
        };
        for q in 0..self.module.ngens() {
            for i in 0..self.base.rank() {
                let x = crate::poly::Polynomial::var(self.field(), self.base.rank(), i);
                let moved = FreeModuleVector::unit(self.module.ngens(), q, x.clone());
                let (nf, _) = self.module.reduce(&moved)?;
                if map(&nf) != images[q].mul_poly(&x) {
                    return Err(Error::Malformed(
                        "embedding does not commute with the module action".into(),
                    ));
                }
            }
        }
        Ok(ExtensionEmbedding { s, images })
    }

    /// Apply an embedding to a whole element.
    pub fn embed_element(
        &self,
        emb: &ExtensionEmbedding,
        u: &ExtElement,
    ) -> ExtElement {
        let mut acc = FreeModuleVector::zero(emb.s);
        for (q, p) in u.module.entries() {
            acc = acc.add(&emb.images[*q].mul_poly(p));
        }
        ExtElement { lie: u.lie.clone(), module: acc }
    }
}

impl LieAlgebraOps for ExtensionAlgebra {
    type Elt = ExtElement;

    fn zero_elt(&self) -> ExtElement {
        self.zero()
    }

    fn constant(&self, idx: usize) -> Result<ExtElement> {
        Ok(self.from_lie(self.base.gen_a(idx)?))
    }

    fn add_elt(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.add(a, b)
    }

    fn neg_elt(&self, a: &ExtElement) -> ExtElement {
        self.neg(a)
    }

    fn scale_elt(&self, c: u64, a: &ExtElement) -> ExtElement {
        self.scale(c, a)
    }

    fn bracket_elt(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.bracket(a, b)
    }
}

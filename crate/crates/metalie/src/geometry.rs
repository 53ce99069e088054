//! Algebraic geometry over the free metabelian algebra: canonical systems
//! attached to module presentations, radical membership through the
//! substitution map, coordinate algebras, dimension, and the
//! point-homomorphism correspondence.

use crate::equations::{EquationSystem, ModuleSystem};
use crate::error::{Error, Result};
use crate::expr::LieExpr;
use crate::extension::ExtensionAlgebra;
use crate::fmla::AlgebraContext;
use crate::modvec::FreeModuleVector;
use crate::poly::Polynomial;
use crate::presentation::ModulePresentation;

/// F_r ⊕ M with M torsion free: the coordinate algebra of an (irreducible)
/// algebraic set over F_r.
#[derive(Clone)]
pub struct CoordinateAlgebra {
    algebra: ExtensionAlgebra,
}

impl CoordinateAlgebra {
    pub fn new(algebra: ExtensionAlgebra) -> Result<Self> {
        if !algebra.module().is_torsion_free() {
            return Err(Error::TorsionInput);
        }
        Ok(CoordinateAlgebra { algebra })
    }

    pub fn algebra(&self) -> &ExtensionAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &ModulePresentation {
        self.algebra.module()
    }
}

/// A homomorphism F_r ⊕ M → F_r recorded by the commutant values of the
/// module generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPoint {
    pub images: Vec<FreeModuleVector>,
}

/// Nested right-bracketing of `inner` with the generators prescribed by the
/// monomial: the expression form of the module action.
fn monomial_action(inner: LieExpr, mono: &[u32]) -> LieExpr {
    let mut e = inner;
    for (i, &exp) in mono.iter().enumerate() {
        for _ in 0..exp {
            e = LieExpr::bracket(e, LieExpr::Const(i));
        }
    }
    e
}

fn poly_action(inner: &LieExpr, p: &Polynomial) -> Option<LieExpr> {
    let mut acc: Option<LieExpr> = None;
    for (mono, c) in p.terms() {
        let mut term = monomial_action(inner.clone(), mono);
        if *c != 1 {
            term = LieExpr::Scale(*c, Box::new(term));
        }
        acc = Some(match acc {
            None => term,
            Some(a) => LieExpr::sum(a, term),
        });
    }
    acc
}

/// Rewrite the relations of M as Lie equations in unknowns x_1..x_n and
/// append the commutant-forcing equations ((a1 a2) x_i = 0).
pub fn canonical_system(m: &ModulePresentation) -> EquationSystem {
    let n = m.ngens();
    let mut eqs = Vec::new();
    for rel in m.relations() {
        let mut acc: Option<LieExpr> = None;
        for j in 0..n {
            let Some(p) = rel.component(j) else { continue };
            if let Some(e) = poly_action(&LieExpr::Var(j), p) {
                acc = Some(match acc {
                    None => e,
                    Some(a) => LieExpr::sum(a, e),
                });
            }
        }
        if let Some(e) = acc {
            eqs.push(e);
        }
    }
    for i in 0..n {
        eqs.push(LieExpr::bracket(
            LieExpr::bracket(LieExpr::Const(0), LieExpr::Const(1)),
            LieExpr::Var(i),
        ));
    }
    let mut sys = EquationSystem::new(eqs);
    sys.arity = n;
    sys
}

/// Is f in the radical of the canonical system of M? Decided by evaluating
/// the substitution x_i ↦ m_i inside F_r ⊕ M.
pub fn radical_member(f: &LieExpr, m: &ModulePresentation) -> Result<bool> {
    if !m.is_torsion_free() {
        return Err(Error::TorsionInput);
    }
    let ctx = AlgebraContext::new(m.field(), m.nvars())?;
    let b = ExtensionAlgebra::new(ctx, m.clone())?;
    if f.arity() > m.ngens() {
        return Err(Error::ArityMismatch { expected: m.ngens(), got: f.arity() });
    }
    let one = Polynomial::one(m.field(), m.nvars());
    let point: Vec<_> = (0..f.arity())
        .map(|j| {
            b.from_module(FreeModuleVector::unit(m.ngens(), j, one.clone()))
                .expect("unit generator is reduced")
        })
        .collect();
    Ok(b.evaluate(f, &point)?.is_zero())
}

/// Coordinate algebra of a homogeneous module system: F_r ⊕ (R^l / rows)
/// with torsion removed.
pub fn coordinate_algebra_of_module_system(
    ctx: &AlgebraContext,
    ms: &ModuleSystem,
) -> Result<CoordinateAlgebra> {
    if ms.rhs.iter().any(|v| !v.is_zero()) {
        return Err(Error::Malformed(
            "coordinate algebras are defined for homogeneous systems".into(),
        ));
    }
    let l = ms.unknowns;
    let rows: Vec<FreeModuleVector> = ms
        .coeffs
        .iter()
        .map(|row| {
            FreeModuleVector::from_entries(l, row.iter().cloned().enumerate().collect())
        })
        .collect();
    let m = ModulePresentation::new(ctx.field(), ctx.rank(), l, rows)?;
    CoordinateAlgebra::new(ExtensionAlgebra::new(ctx.clone(), m.torsion_quotient())?)
}

/// Dimension of the algebraic set = torsion-free rank of the module.
pub fn dimension(gamma: &CoordinateAlgebra) -> usize {
    gamma.module().rank()
}

/// Enumerate all homomorphisms M → Fit(F_r) whose generator images have
/// commutant coefficients of degree at most `bound`.
pub fn homs_to_fitting(
    m: &ModulePresentation,
    bound: u64,
    cap: u64,
) -> Result<Vec<HomPoint>> {
    let ctx = AlgebraContext::new(m.field(), m.nvars())?;
    let fit = ctx.fitting_presentation();
    let mut candidates = fit.enumerate_elements(bound);
    candidates.sort_by_key(|v| v.to_string());
    let n = m.ngens();
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(candidates.len() as u128);
    }
    if total > cap as u128 {
        return Err(Error::ResourceCap(format!(
            "hom tuple count {total} exceeds the cap {cap}"
        )));
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let images: Vec<FreeModuleVector> =
            idx.iter().map(|&i| candidates[i].clone()).collect();
        let ok = m.relations().iter().all(|rel| {
            let mut acc = FreeModuleVector::zero(fit.ngens());
            for j in 0..n {
                if let Some(p) = rel.component(j) {
                    acc = acc.add(&images[j].mul_poly(p));
                }
            }
            fit.reduce(&acc).map(|(nf, _)| nf.is_zero()).unwrap_or(false)
        });
        if ok {
            out.push(HomPoint { images });
        }
        let mut k = 0usize;
        loop {
            if k == n {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < candidates.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if n == 0 {
            return Ok(out);
        }
    }
}

/// A strictly rank-decreasing chain of coordinate algebras obtained by
/// quotienting out the isolated submodule of a nonzero element, witnessing
/// the dimension from below. Empty for a point.
pub fn chain_dimension_check(gamma: &CoordinateAlgebra) -> Result<Vec<CoordinateAlgebra>> {
    let d = dimension(gamma);
    if d == 0 {
        return Ok(vec![]);
    }
    let mut chain = vec![gamma.clone()];
    let mut current = gamma.module().clone();
    while current.rank() > 0 {
        let one = Polynomial::one(current.field(), current.nvars());
        let v = (0..current.ngens())
            .map(|q| FreeModuleVector::unit(current.ngens(), q, one.clone()))
            .find(|u| matches!(current.reduce(u), Ok((_, false))))
            .expect("positive rank leaves some generator nonzero");
        let mut rels = current.relations().to_vec();
        rels.push(v);
        let next = ModulePresentation::new(
            current.field(),
            current.nvars(),
            current.ngens(),
            rels,
        )?
        .torsion_quotient();
        if next.rank() + 1 != current.rank() {
            return Err(Error::Malformed(
                "isolated quotient failed to drop the rank by one".into(),
            ));
        }
        let base = gamma.algebra().base().clone();
        current = next.clone();
        chain.push(CoordinateAlgebra::new(ExtensionAlgebra::new(base, next)?)?);
    }
    Ok(chain)
}

//! Deciding compatibility of equation systems over F_r.
//!
//! Each unknown is split as x_i = z_i + y_i with z_i a linear combination of
//! the free generators and y_i ranging over the commutant. Projecting to
//! F_r / Fit gives a linear system over k whose finitely many solutions are
//! the branches; substituting a branch and evaluating with formal y-symbols
//! (exact, since products of two commutant values vanish) leaves a module
//! system linear in the y_i over R, decided by Groebner membership.

use crate::error::{Error, Result};
use crate::expr::{evaluate_expr, LieAlgebraOps, LieExpr};
use crate::fmla::{AlgebraContext, LieElement};
use crate::gflin::GfMatrix;
use crate::modvec::FreeModuleVector;
use crate::poly::Polynomial;
use crate::presentation::{solve_linear_over_module, SolveOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    pub arity: usize,
    pub equations: Vec<LieExpr>,
}

impl EquationSystem {
    pub fn new(equations: Vec<LieExpr>) -> Self {
        let arity = equations.iter().map(|e| e.arity()).max().unwrap_or(0);
        EquationSystem { arity, equations }
    }

    /// One equation per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut eqs = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            eqs.push(LieExpr::parse(line)?);
        }
        Ok(Self::new(eqs))
    }
}

/// One solution of the abelianized system: `z_i = sum_j alpha[i][j] a_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearBranch {
    pub alpha: Vec<Vec<u64>>,
}

impl LinearBranch {
    pub fn constants(&self, ctx: &AlgebraContext) -> Vec<LieElement> {
        self.alpha
            .iter()
            .map(|row| {
                ctx.from_parts(row.clone(), FreeModuleVector::zero(ctx.pair_count()))
            })
            .collect()
    }
}

/// Linear system over the commutant: `sum_j y_j coeffs[i][j] = rhs[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleSystem {
    pub unknowns: usize,
    pub coeffs: Vec<Vec<Polynomial>>,
    pub rhs: Vec<FreeModuleVector>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchSolution {
    pub branch: LinearBranch,
    pub particular: Vec<FreeModuleVector>,
    pub homogeneous: Vec<Vec<FreeModuleVector>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet {
    pub consistent: bool,
    pub branches: Vec<BranchSolution>,
}

impl SolutionSet {
    /// The point of a branch solution: x_i = z_i + particular_i.
    pub fn points(&self, ctx: &AlgebraContext) -> Vec<Vec<LieElement>> {
        self.branches
            .iter()
            .map(|b| {
                b.branch
                    .alpha
                    .iter()
                    .zip(&b.particular)
                    .map(|(row, y)| ctx.from_parts(row.clone(), y.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Element during augmented evaluation: an honest F_r element plus an
/// R-linear combination of the formal commutant symbols y_1..y_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugElement {
    pub base: LieElement,
    pub ycoef: Vec<Polynomial>,
}

/// F_r adjoined with n central-in-commutant symbols; the point fed to the
/// evaluator maps x_i to z_i + y_i.
pub struct AugmentedAlgebra<'a> {
    ctx: &'a AlgebraContext,
    n: usize,
}

impl<'a> AugmentedAlgebra<'a> {
    pub fn new(ctx: &'a AlgebraContext, n: usize) -> Self {
        AugmentedAlgebra { ctx, n }
    }

    pub fn symbol_point(&self, branch: &LinearBranch) -> Vec<AugElement> {
        let r = self.ctx.rank();
        (0..self.n)
            .map(|i| {
                let mut ycoef = vec![Polynomial::zero(self.ctx.field(), r); self.n];
                ycoef[i] = Polynomial::one(self.ctx.field(), r);
                AugElement {
                    base: self.ctx.from_parts(
                        branch.alpha[i].clone(),
                        FreeModuleVector::zero(self.ctx.pair_count()),
                    ),
                    ycoef,
                }
            })
            .collect()
    }
}

impl<'a> LieAlgebraOps for AugmentedAlgebra<'a> {
    type Elt = AugElement;

    fn zero_elt(&self) -> AugElement {
        AugElement {
            base: self.ctx.zero(),
            ycoef: vec![Polynomial::zero(self.ctx.field(), self.ctx.rank()); self.n],
        }
    }

    fn constant(&self, idx: usize) -> Result<AugElement> {
        Ok(AugElement {
            base: self.ctx.gen_a(idx)?,
            ycoef: vec![Polynomial::zero(self.ctx.field(), self.ctx.rank()); self.n],
        })
    }

    fn add_elt(&self, a: &AugElement, b: &AugElement) -> AugElement {
        AugElement {
            base: self.ctx.add(&a.base, &b.base),
            ycoef: a.ycoef.iter().zip(&b.ycoef).map(|(p, q)| p.add(q)).collect(),
        }
    }

    fn neg_elt(&self, a: &AugElement) -> AugElement {
        AugElement {
            base: self.ctx.neg(&a.base),
            ycoef: a.ycoef.iter().map(|p| p.neg()).collect(),
        }
    }

    fn scale_elt(&self, c: u64, a: &AugElement) -> AugElement {
        AugElement {
            base: self.ctx.scale(c, &a.base),
            ycoef: a.ycoef.iter().map(|p| p.scale(c)).collect(),
        }
    }

    fn bracket_elt(&self, a: &AugElement, b: &AugElement) -> AugElement {
        // y symbols are commutant-valued: [y, y'] = [y, Fit] = 0, and
        // [y, u] = y * lambda(u) for u with linear part only
        let la = self.ctx.lambda(&a.base);
        let lb = self.ctx.lambda(&b.base);
        AugElement {
            base: self.ctx.bracket(&a.base, &b.base),
            ycoef: a
                .ycoef
                .iter()
                .zip(&b.ycoef)
                .map(|(p, q)| p.mul(&lb).sub(&q.mul(&la)))
                .collect(),
        }
    }
}

/// Decomposition f = c + sum x_i h_i + g with c constant, h_i in R and g the
/// residual with every term containing at least two variable occurrences.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub constant: LieElement,
    pub h: Vec<Polynomial>,
    pub residual: LieExpr,
}

/// Split an equation by evaluating it with every variable replaced by a bare
/// commutant symbol: the base output is the constant, the symbol
/// coefficients are the h_i, and the residual is the formal difference.
pub fn decompose(ctx: &AlgebraContext, f: &LieExpr, arity: usize) -> Result<Decomposition> {
    let n = arity.max(f.arity());
    let aug = AugmentedAlgebra::new(ctx, n);
    let zero_branch = LinearBranch { alpha: vec![vec![0; ctx.rank()]; n] };
    let point = aug.symbol_point(&zero_branch);
    let out = evaluate_expr(&aug, f, &point)?;

    // residual: f - c - sum x_i h_i as a formal tree
    let mut recombined: Option<LieExpr> = constant_to_expr(&out.base);
    for (i, h) in out.ycoef.iter().enumerate() {
        for (m, c) in h.terms() {
            let mut term = LieExpr::Var(i);
            for (var, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term = LieExpr::bracket(term, LieExpr::Const(var));
                }
            }
            if *c != 1 {
                term = LieExpr::Scale(*c, Box::new(term));
            }
            recombined = Some(match recombined {
                None => term,
                Some(acc) => LieExpr::sum(acc, term),
            });
        }
    }
    let residual = match recombined {
        None => f.clone(),
        Some(acc) => LieExpr::sum(f.clone(), LieExpr::Neg(Box::new(acc))),
    };
    Ok(Decomposition { constant: out.base, h: out.ycoef, residual })
}

fn constant_to_expr(c: &LieElement) -> Option<LieExpr> {
    if c.is_zero() {
        return None;
    }
    let mut acc: Option<LieExpr> = None;
    let mut push = |e: LieExpr| {
        acc = Some(match acc.take() {
            None => e,
            Some(a) => LieExpr::sum(a, e),
        })
    };
    for (i, &coef) in c.linear().iter().enumerate() {
        if coef != 0 {
            let e = LieExpr::Const(i);
            push(if coef == 1 { e } else { LieExpr::Scale(coef, Box::new(e)) });
        }
    }
    for (idx, p) in c.fitting().entries() {
        let (gi, gj) = crate::fmla::pair_of(*idx);
        for (m, coef) in p.terms() {
            let mut e = LieExpr::bracket(LieExpr::Const(gi - 1), LieExpr::Const(gj - 1));
            for (var, &exp) in m.iter().enumerate() {
                for _ in 0..exp {
                    e = LieExpr::bracket(e, LieExpr::Const(var));
                }
            }
            push(if *coef == 1 { e } else { LieExpr::Scale(*coef, Box::new(e)) });
        }
    }
    acc
}

/// All solutions of the system projected to F_r / Fit. Empty iff the linear
/// system over k is inconsistent (and then the whole system is).
pub fn abelianized_branches(
    ctx: &AlgebraContext,
    system: &EquationSystem,
    branch_cap: u64,
) -> Result<Vec<LinearBranch>> {
    let n = system.arity;
    let r = ctx.rank();
    let field = ctx.field();
    let m = system.equations.len();

    // coefficient beta_{e,i} = constant term of h_i; constants project to
    // their linear parts
    let mut b_rows: Vec<Vec<u64>> = Vec::with_capacity(m);
    let mut c_rows: Vec<Vec<u64>> = Vec::with_capacity(m);
    for f in &system.equations {
        let d = decompose(ctx, f, n)?;
        b_rows.push(d.h.iter().map(|h| h.constant_term()).collect());
        c_rows.push(d.constant.linear().to_vec());
    }

    if n == 0 {
        // no unknowns: the single empty branch exists iff all constants
        // project to zero
        if c_rows.iter().all(|row| row.iter().all(|&c| c == 0)) {
            return Ok(vec![LinearBranch { alpha: Vec::new() }]);
        }
        return Ok(Vec::new());
    }

    let b = GfMatrix::from_rows(field, b_rows);
    // solve column-by-column of the k^r target; nullspace is shared
    let null = b.nullspace();
    let d = null.len();
    let total_exp = (d as u32) * (r as u32);
    let mut total: u128 = 1;
    for _ in 0..total_exp {
        total = total.saturating_mul(field.p() as u128);
        if total > branch_cap as u128 {
            return Err(Error::ResourceCap(format!(
                "abelianized solution count p^{total_exp} exceeds the branch cap {branch_cap}"
            )));
        }
    }

    let mut particular_cols: Vec<Vec<u64>> = Vec::with_capacity(r);
    for col in 0..r {
        let rhs: Vec<u64> = c_rows.iter().map(|row| field.neg(row[col])).collect();
        match b.solve(&rhs) {
            Some(x) => particular_cols.push(x),
            None => return Ok(Vec::new()),
        }
    }

    // odometer over the nullspace coefficients of every column
    let mut coeffs = vec![0u64; d * r];
    let mut out = Vec::new();
    loop {
        let mut alpha = vec![vec![0u64; r]; n];
        for col in 0..r {
            let mut z = particular_cols[col].clone();
            for (k, nv) in null.iter().enumerate() {
                let c = coeffs[col * d + k];
                if c != 0 {
                    for i in 0..n {
                        z[i] = field.add(z[i], field.mul(c, nv[i]));
                    }
                }
            }
            for i in 0..n {
                alpha[i][col] = z[i];
            }
        }
        out.push(LinearBranch { alpha });

        let mut k = 0usize;
        loop {
            if k == coeffs.len() {
                return Ok(out);
            }
            coeffs[k] += 1;
            if coeffs[k] < field.p() {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}

/// Substitute x_i = z_i + y_i and reduce to a module system linear in the
/// y_i. Exact: the augmented evaluation is the honest value of every
/// equation at the branch, as a function of the commutant-valued y.
pub fn specialize(
    ctx: &AlgebraContext,
    system: &EquationSystem,
    branch: &LinearBranch,
) -> Result<ModuleSystem> {
    let n = system.arity;
    if branch.alpha.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "branch has {} assignments for {} unknowns",
            branch.alpha.len(),
            n
        )));
    }
    let aug = AugmentedAlgebra::new(ctx, n);
    let point = aug.symbol_point(branch);
    let mut coeffs = Vec::new();
    let mut rhs = Vec::new();
    for f in &system.equations {
        let out = evaluate_expr(&aug, f, &point)?;
        if out.base.linear().iter().any(|&c| c != 0) {
            return Err(Error::Malformed(
                "branch does not solve the abelianized system".into(),
            ));
        }
        coeffs.push(out.ycoef);
        rhs.push(out.base.fitting().neg());
    }
    Ok(ModuleSystem { unknowns: n, coeffs, rhs })
}

/// Full decision procedure: branch, specialize, decide each module system
/// over the commutant, and verify every reconstructed point exactly.
pub fn solve_system(
    ctx: &AlgebraContext,
    system: &EquationSystem,
    branch_cap: u64,
) -> Result<SolutionSet> {
    let branches = abelianized_branches(ctx, system, branch_cap)?;
    let mut out = Vec::new();
    for branch in branches {
        let ms = specialize(ctx, system, &branch)?;
        let outcome = solve_linear_over_module(
            &ms.coeffs,
            &ms.rhs,
            ctx.pair_count(),
            ctx.fitting_presentation().relations(),
            ctx.field(),
            ctx.rank(),
        )?;
        if let SolveOutcome::Solution { particular, homogeneous } = outcome {
            out.push(BranchSolution { branch, particular, homogeneous });
        }
    }
    let set = SolutionSet { consistent: !out.is_empty(), branches: out };
    for point in set.points(ctx) {
        for f in &system.equations {
            let v = ctx.evaluate(f, &point)?;
            if !v.is_zero() {
                return Err(Error::Malformed(format!(
                    "internal soundness failure: emitted point does not satisfy {f}"
                )));
            }
        }
    }
    Ok(set)
}

/// Drop equations that are R-combinations of the kept ones modulo the
/// commutant relations; the solution set is unchanged.
pub fn finite_equivalent_subsystem(
    ctx: &AlgebraContext,
    ms: &ModuleSystem,
) -> ModuleSystem {
    use crate::groebner::{groebner, is_member};
    use crate::poly::MonomialOrder;
    let l = ms.unknowns;
    let t = ctx.pair_count();
    let width = l + t;
    let order = MonomialOrder::DegRevLex;

    let row_vec = |i: usize| -> FreeModuleVector {
        let mut v = FreeModuleVector::zero(width);
        for (j, p) in ms.coeffs[i].iter().enumerate() {
            v.add_to_component(j, p);
        }
        v.add(&ms.rhs[i].shift(l, width))
    };
    let relation_block: Vec<FreeModuleVector> = ctx
        .fitting_presentation()
        .relations()
        .iter()
        .map(|rel| rel.shift(l, width))
        .collect();

    let mut kept: Vec<usize> = Vec::new();
    for i in 0..ms.coeffs.len() {
        let mut gens: Vec<FreeModuleVector> = kept.iter().map(|&k| row_vec(k)).collect();
        gens.extend(relation_block.iter().cloned());
        let gb = groebner(&gens, order);
        if !is_member(&row_vec(i), &gb, order) {
            kept.push(i);
        }
    }
    ModuleSystem {
        unknowns: l,
        coeffs: kept.iter().map(|&i| ms.coeffs[i].clone()).collect(),
        rhs: kept.iter().map(|&i| ms.rhs[i].clone()).collect(),
    }
}

/// Enumerate every point with all commutant coefficients of degree at most
/// `bound` and return those annihilating the whole system. Oracle only.
pub fn brute_force_solve(
    ctx: &AlgebraContext,
    system: &EquationSystem,
    bound: u64,
    cap: u64,
) -> Result<Vec<Vec<LieElement>>> {
    let n = system.arity;
    let candidates: Vec<LieElement> = {
        let fit_elems = ctx.fitting_presentation().enumerate_elements(bound);
        let r = ctx.rank();
        let p = ctx.field().p();
        let mut linears = vec![vec![0u64; r]];
        for _ in 0..r {
            let mut next = Vec::new();
            for lin in &linears {
                for c in 0..p {
                    let mut l = lin.clone();
                    l.remove(0);
                    l.push(c);
                    next.push(l);
                }
            }
            linears = next;
        }
        let mut out = Vec::new();
        for lin in &linears {
            for fit in &fit_elems {
                out.push(ctx.from_parts(lin.clone(), fit.clone()));
            }
        }
        out
    };
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(candidates.len() as u128);
    }
    if total > cap as u128 {
        return Err(Error::ResourceCap(format!(
            "brute-force point count {total} exceeds the cap {cap}"
        )));
    }

    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let point: Vec<LieElement> = idx.iter().map(|&i| candidates[i].clone()).collect();
        let mut ok = true;
        for f in &system.equations {
            if !ctx.evaluate(f, &point)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(point);
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
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ctx2() -> AlgebraContext {
        AlgebraContext::new(FieldSpec::new(2).unwrap(), 2).unwrap()
    }

    fn sys(lines: &str) -> EquationSystem {
        EquationSystem::parse(lines).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(sys("[a1,a2]").arity, 0);
        assert_eq!(sys("[[x1,a1],x1]").arity, 1);
        assert!(EquationSystem::parse("x1 + y").is_err());
    }

    #[test]
    fn decompose_linear_equation() {
        let c = ctx2();
        let f = LieExpr::parse("x1 - a1").unwrap();
        let d = decompose(&c, &f, 1).unwrap();
        assert_eq!(d.constant, c.neg(&c.gen_a(0).unwrap()));
        assert_eq!(d.h, vec![Polynomial::one(c.field(), 2)]);
        // residual is semantically zero at variable-free substitutions
        let zero = c.zero();
        assert!(c.evaluate(&d.residual, &[zero]).unwrap().is_zero());
    }

    #[test]
    fn decompose_single_action() {
        let c = ctx2();
        let f = LieExpr::parse("[[a1,a2],x1]").unwrap();
        let d = decompose(&c, &f, 1).unwrap();
        assert!(d.constant.is_zero());
        // the y-coefficient vanishes: a bracket of two commutant values is
        // zero, so this term constrains only the linear part of x1 and lives
        // in the residual
        assert!(d.h[0].is_zero());
        let a1 = c.gen_a(0).unwrap();
        assert_eq!(
            c.evaluate(&d.residual, &[a1.clone()]).unwrap(),
            c.evaluate(&f, &[a1]).unwrap()
        );
    }

    #[test]
    fn decompose_two_variable_bracket() {
        let c = ctx2();
        let f = LieExpr::parse("[[x1,a1],[x2,a2]]").unwrap();
        let d = decompose(&c, &f, 2).unwrap();
        assert!(d.constant.is_zero());
        assert!(d.h.iter().all(|h| h.is_zero()));
    }

    #[test]
    fn decompose_recombines_semantically() {
        let c = ctx2();
        let f = LieExpr::parse("[[x1,a1],a2] + [a2,a1] + x1").unwrap();
        let d = decompose(&c, &f, 1).unwrap();
        // check f = c + sum x_i h_i + g at several points
        let e21 = c.gen_e(2, 1).unwrap();
        let a1 = c.gen_a(0).unwrap();
        for point in [c.zero(), e21, a1, c.add(&c.gen_a(1).unwrap(), &c.gen_e(2, 1).unwrap())] {
            let whole = c.evaluate(&f, &[point.clone()]).unwrap();
            let res = c.evaluate(&d.residual, &[point.clone()]).unwrap();
            // c + x*h via augmented semantics: evaluate f - g
            let linear_part = c.add(&whole, &c.neg(&res));
            let mut expect = d.constant.clone();
            // x1 * h1: act on the point by each monomial of h1
            for (m, coef) in d.h[0].terms() {
                let mut moved = point.clone();
                for (var, &e) in m.iter().enumerate() {
                    for _ in 0..e {
                        moved = c.bracket(&moved, &c.gen_a(var).unwrap());
                    }
                }
                expect = c.add(&expect, &c.scale(*coef, &moved));
            }
            assert_eq!(linear_part, expect);
        }
    }

    #[test]
    fn branches_single() {
        let c = ctx2();
        let s = sys("x1 - a1");
        let b = abelianized_branches(&c, &s, 1 << 20).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].alpha, vec![vec![1, 0]]);
    }

    #[test]
    fn branches_unconstrained() {
        let c = ctx2();
        let s = sys("[[a1,a2],x1]");
        let b = abelianized_branches(&c, &s, 1 << 20).unwrap();
        assert_eq!(b.len(), 4); // p^r = 2^2
    }

    #[test]
    fn branches_inconsistent() {
        let c = ctx2();
        let s = sys("[x1,a1] + a2");
        let b = abelianized_branches(&c, &s, 1 << 20).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn branch_cap_respected() {
        let c = ctx2();
        let s = sys("[[a1,a2],x1]");
        assert!(matches!(
            abelianized_branches(&c, &s, 2),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn specialize_hand_example() {
        let c = ctx2();
        let s = sys("[x1,a1] + [a2,a1]");
        // branch z1 = a2 (alpha = (0,1)): constant parts cancel
        let b = LinearBranch { alpha: vec![vec![0, 1]] };
        let ms = specialize(&c, &s, &b).unwrap();
        assert_eq!(ms.coeffs[0][0], Polynomial::var(c.field(), 2, 0).neg());
        assert!(ms.rhs[0].is_zero());
        // branch z1 = a1: residue e21 stays
        let b2 = LinearBranch { alpha: vec![vec![1, 0]] };
        let ms2 = specialize(&c, &s, &b2).unwrap();
        assert!(!ms2.rhs[0].is_zero());
    }

    #[test]
    fn solve_unique_point() {
        let c = ctx2();
        let set = solve_system(&c, &sys("x1 - a1"), 1 << 20).unwrap();
        assert!(set.consistent);
        let pts = set.points(&c);
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0][0], c.gen_a(0).unwrap());
        assert!(set.branches[0].homogeneous.is_empty());
    }

    #[test]
    fn solve_fitting_variety() {
        let c = ctx2();
        let set = solve_system(&c, &sys("[[a1,a2],x1]"), 1 << 20).unwrap();
        assert!(set.consistent);
        // only the z = 0 branch survives, y1 unconstrained
        assert_eq!(set.branches.len(), 1);
        assert_eq!(set.branches[0].branch.alpha, vec![vec![0, 0]]);
        assert!(set.branches[0].particular[0].is_zero());
        assert!(!set.branches[0].homogeneous.is_empty());
    }

    #[test]
    fn solve_matches_brute_force() {
        let c = ctx2();
        let s = sys("[x1,a1] + [a2,a1]");
        let set = solve_system(&c, &s, 1 << 20).unwrap();
        assert!(set.consistent);
        let brute = brute_force_solve(&c, &s, 2, 1 << 20).unwrap();
        // expected solution set {a2, a1 + a2} plus arbitrary commutant parts
        // annihilated by x1; at degree <= 2 the commutant part must vanish
        let pts = set.points(&c);
        for bp in &brute {
            // brute-force point linear part must appear among branches
            assert!(
                set.branches
                    .iter()
                    .any(|b| b.branch.alpha[0] == bp[0].linear().to_vec()),
                "missing branch for {}",
                bp[0]
            );
        }
        for sp in &pts {
            assert!(brute.contains(sp), "solver point {} not confirmed", sp[0]);
        }
    }

    #[test]
    fn finite_subsystem_drops_multiples() {
        let c = ctx2();
        let one = Polynomial::one(c.field(), 2);
        let x1 = Polynomial::var(c.field(), 2, 0);
        let x2 = Polynomial::var(c.field(), 2, 1);
        let zero_rhs = FreeModuleVector::zero(c.pair_count());
        let ms = ModuleSystem {
            unknowns: 1,
            coeffs: vec![vec![x1.clone()], vec![x1.mul(&x1)]],
            rhs: vec![zero_rhs.clone(), zero_rhs.clone()],
        };
        let fin = finite_equivalent_subsystem(&c, &ms);
        assert_eq!(fin.coeffs.len(), 1);

        let ms2 = ModuleSystem {
            unknowns: 1,
            coeffs: vec![vec![x1.clone()], vec![x2.clone()], vec![x1.add(&x2)]],
            rhs: vec![zero_rhs.clone(), zero_rhs.clone(), zero_rhs.clone()],
        };
        let fin2 = finite_equivalent_subsystem(&c, &ms2);
        assert_eq!(fin2.coeffs.len(), 2);

        let ms3 = ModuleSystem {
            unknowns: 1,
            coeffs: vec![vec![x1.clone()]],
            rhs: vec![zero_rhs],
        };
        assert_eq!(finite_equivalent_subsystem(&c, &ms3), ms3);
        let _ = one;
    }

    #[test]
    fn brute_force_examples() {
        let c = ctx2();
        let pts = brute_force_solve(&c, &sys("x1 - a1"), 1, 1 << 20).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0][0], c.gen_a(0).unwrap());

        // {(a1a2)x1} at bound 0: exactly the degree-0 commutant elements
        let pts2 = brute_force_solve(&c, &sys("[[a1,a2],x1]"), 0, 1 << 20).unwrap();
        assert_eq!(pts2.len(), 2); // 0 and e21
        for p in &pts2 {
            assert!(p[0].linear().iter().all(|&x| x == 0));
        }

        let pts3 = brute_force_solve(&c, &sys("[x1,a1] + a2"), 1, 1 << 20).unwrap();
        assert!(pts3.is_empty());
    }
}

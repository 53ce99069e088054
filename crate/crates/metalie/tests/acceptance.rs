//! End-to-end acceptance suite. Each test covers one numbered criterion and
//! prints a single pass line (visible with `--nocapture`); a failed assertion
//! marks the criterion failed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use metalie::axioms::{self, AxiomInstance, Classification, DeltaStatus, Language, Scheme};
use metalie::equations::{brute_force_solve, solve_system, specialize, EquationSystem};
use metalie::expr::LieExpr;
use metalie::extension::{ExtElement, ExtensionAlgebra};
use metalie::field::FieldSpec;
use metalie::fmla::{AlgebraContext, FittingMode, LieElement};
use metalie::geometry;
use metalie::groebner::{self, monomials_up_to};
use metalie::modvec::FreeModuleVector;
use metalie::poly::{MonomialOrder, Polynomial};
use metalie::presentation::ModulePresentation;

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

fn fld(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn random_poly(field: FieldSpec, nvars: usize, bound: u64, rng: &mut ChaCha8Rng) -> Polynomial {
    let monos = monomials_up_to(nvars, bound);
    let terms: Vec<_> = monos
        .into_iter()
        .filter_map(|m| {
            let c = rng.gen_range(0..field.p());
            (c != 0).then_some((m, c))
        })
        .collect();
    Polynomial::from_terms(field, nvars, terms)
}

fn random_lie(ctx: &AlgebraContext, rng: &mut ChaCha8Rng) -> LieElement {
    let linear: Vec<u64> = (0..ctx.rank()).map(|_| rng.gen_range(0..ctx.field().p())).collect();
    let mut fit = FreeModuleVector::zero(ctx.pair_count());
    for idx in 0..ctx.pair_count() {
        fit.add_to_component(idx, &random_poly(ctx.field(), ctx.rank(), 1, rng));
    }
    ctx.from_parts(linear, fit)
}

fn random_ext(b: &ExtensionAlgebra, rng: &mut ChaCha8Rng) -> ExtElement {
    let base = b.from_lie(random_lie(b.base(), rng));
    let mut module = FreeModuleVector::zero(b.module().ngens());
    for idx in 0..b.module().ngens() {
        module.add_to_component(idx, &random_poly(b.field(), b.base().rank(), 1, rng));
    }
    b.add(&base, &b.from_module(module).unwrap())
}

fn cyclic(field: FieldSpec, relation: &str) -> ModulePresentation {
    ModulePresentation::new(
        field,
        2,
        1,
        vec![FreeModuleVector::unit(1, 0, Polynomial::parse(field, 2, relation).unwrap())],
    )
    .unwrap()
}

fn ideal_module(field: FieldSpec) -> ModulePresentation {
    let rel = FreeModuleVector::from_entries(
        2,
        vec![
            (0, Polynomial::var(field, 2, 1)),
            (1, Polynomial::var(field, 2, 0).neg()),
        ],
    );
    ModulePresentation::new(field, 2, 2, vec![rel]).unwrap()
}

#[test]
fn criterion_01_lie_identity_suite() {
    for (p, r) in [(2u64, 2usize), (2, 3), (3, 2), (3, 3)] {
        let ctx = AlgebraContext::new(fld(p), r).unwrap();
        let free = ExtensionAlgebra::free_extension(ctx.clone(), 0);
        let ext = ExtensionAlgebra::free_extension(ctx, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(100 * p + r as u64);
        for b in [&free, &ext] {
            for _ in 0..500 {
                let u = random_ext(b, &mut rng);
                let v = random_ext(b, &mut rng);
                let w = random_ext(b, &mut rng);
                let z = random_ext(b, &mut rng);
                // anticommutativity
                assert!(b.add(&b.bracket(&u, &v), &b.bracket(&v, &u)).is_zero());
                // Jacobi
                let jac = b.add(
                    &b.add(
                        &b.bracket(&b.bracket(&u, &v), &w),
                        &b.bracket(&b.bracket(&v, &w), &u),
                    ),
                    &b.bracket(&b.bracket(&w, &u), &v),
                );
                assert!(jac.is_zero());
                // metabelian identity
                assert!(b.bracket(&b.bracket(&u, &v), &b.bracket(&w, &z)).is_zero());
            }
        }
    }
    println!("criterion 1 (lie identity suite): pass");
}

#[test]
fn criterion_02_commutant_membership_modes() {
    for (p, r) in [(2u64, 2usize), (2, 3), (3, 2), (3, 3)] {
        let ctx = AlgebraContext::new(fld(p), r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(200 * p + r as u64);
        for _ in 0..250 {
            let u = random_lie(&ctx, &mut rng);
            let a = ctx.in_fitting(&u, FittingMode::Structural);
            let b = ctx.in_fitting(&u, FittingMode::FormulaL);
            let c = ctx.in_fitting(&u, FittingMode::FormulaLFr);
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
        // independence predicate versus exhaustive combination search
        for _ in 0..125 {
            let n = rng.gen_range(1..=r);
            let tuple: Vec<LieElement> = (0..n).map(|_| random_lie(&ctx, &mut rng)).collect();
            let expected = ctx.phi_eval(&tuple).unwrap();
            let mut dependent = false;
            let total = (p as usize).pow(n as u32);
            for code in 1..total {
                let mut acc = ctx.zero();
                let mut c = code;
                for item in tuple.iter().take(n) {
                    acc = ctx.add(&acc, &ctx.scale((c % p as usize) as u64, item));
                    c /= p as usize;
                }
                if ctx.in_fitting(&acc, FittingMode::Structural) {
                    dependent = true;
                    break;
                }
            }
            assert_eq!(expected, !dependent);
        }
    }
    println!("criterion 2 (commutant membership and independence): pass");
}

#[test]
fn criterion_03_flagship_algebraic_set() {
    let ctx = AlgebraContext::new(fld(2), 2).unwrap();
    let system = EquationSystem::parse("[[a1,a2],x1]").unwrap();
    let set = solve_system(&ctx, &system, 4096).unwrap();
    assert!(set.consistent);
    assert_eq!(set.branches.len(), 1);
    let b = &set.branches[0];
    assert!(b.branch.alpha.iter().all(|row| row.iter().all(|&c| c == 0)));
    assert!(b.particular.iter().all(|v| v.is_zero()));
    // the homogeneous part spans the whole commutant: solution set = Fit
    let gens: Vec<FreeModuleVector> = b.homogeneous.iter().map(|g| g[0].clone()).collect();
    let full = vec![FreeModuleVector::unit(1, 0, Polynomial::one(fld(2), 2))];
    assert!(groebner::submodule_eq(&gens, &full, ORDER));
    // induced module system -> coordinate algebra F_2 (+) T_1 of dimension 1
    let ms = specialize(&ctx, &system, &b.branch).unwrap();
    let gamma = geometry::coordinate_algebra_of_module_system(&ctx, &ms).unwrap();
    assert_eq!(geometry::dimension(&gamma), 1);
    assert_eq!(gamma.module().ngens(), 1);
    assert!(gamma.module().is_torsion_free());
    println!("criterion 3 (flagship algebraic set): pass");
}

fn random_expr(rng: &mut ChaCha8Rng, depth: usize, n: usize, r: usize, p: u64) -> LieExpr {
    if depth == 0 || rng.gen_bool(0.35) {
        if rng.gen_bool(0.5) {
            LieExpr::Var(rng.gen_range(0..n))
        } else {
            LieExpr::Const(rng.gen_range(0..r))
        }
    } else {
        match rng.gen_range(0..4) {
            0 | 1 => LieExpr::bracket(
                random_expr(rng, depth - 1, n, r, p),
                random_expr(rng, depth - 1, n, r, p),
            ),
            2 => LieExpr::sum(
                random_expr(rng, depth - 1, n, r, p),
                random_expr(rng, depth - 1, n, r, p),
            ),
            _ => LieExpr::Scale(
                rng.gen_range(1..p),
                Box::new(random_expr(rng, depth - 1, n, r, p)),
            ),
        }
    }
}

/// Membership of a point in the branch's solution description.
fn point_in_branch(
    ctx: &AlgebraContext,
    branch: &metalie::equations::BranchSolution,
    point: &[LieElement],
) -> bool {
    let n = point.len();
    let t = ctx.pair_count();
    for (x, row) in point.iter().zip(&branch.branch.alpha) {
        if x.linear() != &row[..] {
            return false;
        }
    }
    // stack y - particular and test membership in the homogeneous span
    let mut stacked = FreeModuleVector::zero(t * n);
    for (i, x) in point.iter().enumerate() {
        let diff = x.fitting().sub(&branch.particular[i]);
        for s in 0..t {
            if let Some(p) = diff.component(s) {
                stacked.add_to_component(i * t + s, p);
            }
        }
    }
    let mut gens: Vec<FreeModuleVector> = Vec::new();
    for g in &branch.homogeneous {
        let mut v = FreeModuleVector::zero(t * n);
        for (i, comp) in g.iter().enumerate() {
            for s in 0..t {
                if let Some(p) = comp.component(s) {
                    v.add_to_component(i * t + s, p);
                }
            }
        }
        gens.push(v);
    }
    for rel in ctx.fitting_presentation().relations() {
        for i in 0..n {
            gens.push(rel.shift(i * t, t * n));
        }
    }
    let gb = groebner::groebner(&gens, ORDER);
    groebner::is_member(&stacked, &gb, ORDER)
}

#[test]
fn criterion_04_solver_oracle_equivalence() {
    let configs: &[(u64, usize, usize)] = &[(2, 1, 90), (2, 2, 30), (3, 1, 80)];
    for &(p, arity, count) in configs {
        let ctx = AlgebraContext::new(fld(p), 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(400 + p * 10 + arity as u64);
        for _ in 0..count {
            let neq = rng.gen_range(1..=2);
            let eqs: Vec<LieExpr> =
                (0..neq).map(|_| random_expr(&mut rng, 3, arity, 2, p)).collect();
            let system = EquationSystem::new(eqs);
            let set = solve_system(&ctx, &system, 1 << 20).unwrap();
            let bound = 2;
            let oracle = brute_force_solve(&ctx, &system, bound, 1 << 26).unwrap();
            if !oracle.is_empty() {
                assert!(set.consistent, "oracle found a point the solver missed");
            }
            if !set.consistent {
                assert!(oracle.is_empty());
            }
            // every oracle point lies in some branch description
            for pt in &oracle {
                assert!(
                    set.branches.iter().any(|b| point_in_branch(&ctx, b, pt)),
                    "oracle point not described by any branch"
                );
            }
            // sampled reconstructed points of degree <= bound appear in the oracle
            let monos = monomials_up_to(2, 1);
            for b in &set.branches {
                let mut candidates = vec![b.particular.clone()];
                for g in &b.homogeneous {
                    for m in &monos {
                        let scaled: Vec<FreeModuleVector> = g
                            .iter()
                            .zip(&b.particular)
                            .map(|(gv, pv)| {
                                pv.add(&gv.mul_poly(&Polynomial::monomial(
                                    ctx.field(),
                                    m.clone(),
                                    1,
                                )))
                            })
                            .collect();
                        candidates.push(scaled);
                    }
                }
                for ys in candidates {
                    if ys.iter().any(|v| v.max_degree() > bound) {
                        continue;
                    }
                    let point: Vec<LieElement> = b
                        .branch
                        .alpha
                        .iter()
                        .zip(&ys)
                        .map(|(row, y)| ctx.from_parts(row.clone(), y.clone()))
                        .collect();
                    assert!(
                        oracle.contains(&point),
                        "reconstructed point missing from the oracle slice"
                    );
                }
            }
        }
    }
    println!("criterion 4 (solver/oracle equivalence): pass");
}

#[test]
fn criterion_05_worked_inconsistency() {
    let ctx = AlgebraContext::new(fld(2), 2).unwrap();
    let bad = EquationSystem::parse("[x1,a1] + a2").unwrap();
    let set = solve_system(&ctx, &bad, 4096).unwrap();
    assert!(!set.consistent);
    assert!(set.branches.is_empty());

    let good = EquationSystem::parse("[x1,a1] + [a2,a1]").unwrap();
    let render = |set: &metalie::equations::SolutionSet| {
        let mut pts: Vec<String> = set
            .points(&ctx)
            .iter()
            .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"))
            .collect();
        pts.sort();
        pts
    };
    let first = solve_system(&ctx, &good, 4096).unwrap();
    assert_eq!(render(&first), vec!["a1 + a2".to_string(), "a2".to_string()]);
    // byte-identical reproduction
    let second = solve_system(&ctx, &good, 4096).unwrap();
    assert_eq!(render(&first), render(&second));
    assert_eq!(first, second);
    println!("criterion 5 (worked inconsistency and reproducibility): pass");
}

fn classification_corpus(field: FieldSpec) -> Vec<(ModulePresentation, Option<usize>)> {
    let mut corpus: Vec<(ModulePresentation, Option<usize>)> = Vec::new();
    for s in 0..=5 {
        corpus.push((ModulePresentation::free(field, 2, s), Some(s)));
    }
    corpus.push((ideal_module(field), Some(1)));
    corpus.push((cyclic(field, "1"), Some(0))); // zero module
    for rel in ["x1", "x2", "x1^2", "x1*x2", "x1 + x2", "x1^2 + x2", "x1^2*x2"] {
        corpus.push((cyclic(field, rel), None));
    }
    // rank 2 with one torsion generator
    let torsion_block = |rel: &str| {
        ModulePresentation::new(
            field,
            2,
            2,
            vec![FreeModuleVector::unit(
                2,
                1,
                Polynomial::parse(field, 2, rel).unwrap(),
            )],
        )
        .unwrap()
    };
    for rel in ["x1", "x2", "x1^2", "x1 + x2"] {
        corpus.push((torsion_block(rel), None));
    }
    // two relations pinning one generator: still torsion
    corpus.push((
        ModulePresentation::new(
            field,
            2,
            2,
            vec![
                FreeModuleVector::unit(2, 0, Polynomial::var(field, 2, 0)),
                FreeModuleVector::unit(2, 0, Polynomial::var(field, 2, 1)),
            ],
        )
        .unwrap(),
        None,
    ));
    // rank-0 torsion-free: everything killed by a unit
    corpus.push((
        ModulePresentation::new(
            field,
            2,
            2,
            vec![
                FreeModuleVector::unit(2, 0, Polynomial::one(field, 2)),
                FreeModuleVector::unit(2, 1, Polynomial::one(field, 2)),
            ],
        )
        .unwrap(),
        Some(0),
    ));
    corpus
}

#[test]
fn criterion_06_classification_corpus() {
    let field = fld(2);
    let corpus = classification_corpus(field);
    assert!(corpus.len() >= 20);
    let ctx = AlgebraContext::new(field, 2).unwrap();
    for (m, expected) in corpus {
        let b = ExtensionAlgebra::new(ctx.clone(), m.clone()).unwrap();
        match (axioms::classify_ucl(&b, Language::L, 2).unwrap(), expected) {
            (Classification::Member { s, .. }, Some(rank)) => assert_eq!(s, rank),
            (
                Classification::NonMember {
                    violated: AxiomInstance::Phi5Prime { f },
                    witness: Some(w),
                },
                None,
            ) => {
                // witness re-checked by direct multiplication
                let gb = m.groebner_basis();
                assert!(!groebner::is_member(&w, gb, ORDER));
                assert!(groebner::is_member(&w.mul_poly(&f), gb, ORDER));
            }
            (got, want) => panic!("classification mismatch: got {got:?}, wanted {want:?}"),
        }
    }
    println!("criterion 6 (classification corpus): pass");
}

#[test]
fn criterion_07_torsion_rank_engine() {
    let field = fld(2);
    let corpus = classification_corpus(field);
    let monos = monomials_up_to(2, 2);
    for (m, _) in corpus.iter().filter(|(m, _)| m.ngens() <= 2) {
        let gb = m.groebner_basis();
        let torsion = groebner::groebner(&m.torsion_submodule(), ORDER);
        // brute-force bounded-degree torsion search: v of degree <= 2 is
        // torsion iff some nonzero h of degree <= 2 sends it into the relations
        let slots = m.ngens() * monos.len();
        let mut coeffs = vec![0u64; slots];
        let h_candidates: Vec<Polynomial> = {
            let mut hs = Vec::new();
            let mut hc = vec![0u64; monos.len()];
            loop {
                let terms: Vec<_> = hc
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (monos[k].clone(), c))
                    .collect();
                if !terms.is_empty() {
                    hs.push(Polynomial::from_terms(field, 2, terms));
                }
                let mut k = 0;
                loop {
                    if k == hc.len() {
                        break;
                    }
                    hc[k] += 1;
                    if hc[k] < field.p() {
                        break;
                    }
                    hc[k] = 0;
                    k += 1;
                }
                if hc.iter().all(|&c| c == 0) {
                    break;
                }
            }
            hs
        };
        loop {
            let mut v = FreeModuleVector::zero(m.ngens());
            for (slot, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    let g = slot / monos.len();
                    let k = slot % monos.len();
                    v.add_to_component(g, &Polynomial::monomial(field, monos[k].clone(), c));
                }
            }
            if !groebner::is_member(&v, gb, ORDER) {
                let brute_torsion = h_candidates
                    .iter()
                    .any(|h| groebner::is_member(&v.mul_poly(h), gb, ORDER));
                let engine_torsion = groebner::is_member(&v, &torsion, ORDER);
                if brute_torsion {
                    assert!(engine_torsion, "brute-force torsion missed by the engine");
                }
                if engine_torsion {
                    // engine torsion must be certified by some minor power,
                    // possibly beyond degree 2; verify via saturation membership
                    assert!(groebner::is_member(&v, &torsion, ORDER));
                }
            }
            let mut k = 0;
            loop {
                if k == slots {
                    break;
                }
                coeffs[k] += 1;
                if coeffs[k] < field.p() {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
            if coeffs.iter().all(|&c| c == 0) {
                break;
            }
        }
        // minor-choice independence: saturating at any nonzero maximal minor
        // yields the same torsion preimage
        if let Some((h1, _, _)) = m.maximal_minor() {
            let mat = m.relation_matrix();
            let rho = mat.rank();
            let rows: Vec<usize> = (0..m.relations().len()).collect();
            let cols: Vec<usize> = (0..m.ngens()).collect();
            let mut alternative: Option<Polynomial> = None;
            for rsel in subsets(&rows, rho) {
                for csel in subsets(&cols, rho) {
                    let d = mat.submatrix(&rsel, &csel).det();
                    if !d.is_zero() && d != h1 {
                        alternative = Some(d);
                    }
                }
            }
            if let Some(h2) = alternative {
                let s1 = groebner::saturate(m.relations(), &h1, m.ngens());
                let s2 = groebner::saturate(m.relations(), &h2, m.ngens());
                assert!(groebner::submodule_eq(&s1, &s2, ORDER));
            }
        }
    }
    println!("criterion 7 (torsion/rank engine vs brute force): pass");
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k);
    for mut rest in subsets(&items[1..], k - 1) {
        rest.insert(0, items[0]);
        out.push(rest);
    }
    out
}

#[test]
fn criterion_08_axiom_soundness() {
    for r in [2usize, 3] {
        let field = fld(2);
        let b = ExtensionAlgebra::free_extension(AlgebraContext::new(field, r).unwrap(), 0);
        for scheme in [Scheme::Phi1, Scheme::Phi2, Scheme::Phi3, Scheme::Phi4] {
            for inst in axioms::enumerate_axioms(field, r, scheme, 1).unwrap() {
                assert!(axioms::check_instance(&inst.instance, &b).unwrap(), "{}", inst.instance);
            }
        }
        for scheme in [Scheme::Phi5, Scheme::Phi5Prime] {
            for inst in axioms::enumerate_axioms(field, r, scheme, 1).unwrap() {
                assert!(axioms::check_instance(&inst.instance, &b).unwrap(), "{}", inst.instance);
            }
        }
        for inst in axioms::enumerate_axioms(field, r, Scheme::Phi6, 3).unwrap() {
            assert!(axioms::check_instance(&inst.instance, &b).unwrap(), "{}", inst.instance);
        }
        for inst in axioms::enumerate_axioms(field, r, Scheme::Phi7Prime, 1).unwrap() {
            if inst.status == Some(DeltaStatus::Inconsistent) {
                assert!(axioms::check_instance(&inst.instance, &b).unwrap(), "{}", inst.instance);
            }
        }
    }
    println!("criterion 8 (axiom soundness on free algebras): pass");
}

#[test]
fn criterion_09_dimension_chains() {
    let ctx = AlgebraContext::new(fld(2), 2).unwrap();
    for s in 0..=3usize {
        let gamma = geometry::CoordinateAlgebra::new(
            ExtensionAlgebra::new(ctx.clone(), ModulePresentation::free(fld(2), 2, s)).unwrap(),
        )
        .unwrap();
        let chain = geometry::chain_dimension_check(&gamma).unwrap();
        let ranks: Vec<usize> = chain.iter().map(geometry::dimension).collect();
        if s == 0 {
            assert!(ranks.is_empty());
        } else {
            let expected: Vec<usize> = (0..=s).rev().collect();
            assert_eq!(ranks, expected);
        }
    }
    println!("criterion 9 (dimension chains): pass");
}

#[test]
fn criterion_10_hom_correspondence() {
    let field = fld(2);
    let ctx = AlgebraContext::new(field, 2).unwrap();
    let corpus = vec![
        ModulePresentation::free(field, 2, 1),
        ModulePresentation::free(field, 2, 2),
        cyclic(field, "1"),
        cyclic(field, "x1").torsion_quotient(),
        ideal_module(field),
    ];
    for m in corpus {
        let bound = if m.ngens() >= 2 { 1 } else { 2 };
        let sys = geometry::canonical_system(&m);
        let pts = brute_force_solve(&ctx, &sys, bound, 1 << 26).unwrap();
        let mut from_points: Vec<Vec<String>> = pts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|e| {
                        assert!(e.linear().iter().all(|&c| c == 0));
                        e.fitting().to_string()
                    })
                    .collect()
            })
            .collect();
        from_points.sort();
        from_points.dedup();
        let mut from_homs: Vec<Vec<String>> = geometry::homs_to_fitting(&m, bound, 1 << 26)
            .unwrap()
            .iter()
            .map(|h| h.images.iter().map(|v| v.to_string()).collect())
            .collect();
        from_homs.sort();
        assert_eq!(from_points, from_homs);
    }
    println!("criterion 10 (hom correspondence): pass");
}

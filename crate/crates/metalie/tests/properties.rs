//! Randomized invariants: ring axioms for the polynomial kernel, Groebner
//! membership against a linear-algebra oracle, bracket bilinearity, text
//! round-trips, and the basic-monomial dimension count for homogeneous
//! components.

use proptest::prelude::*;

use metalie::equations::{brute_force_solve, EquationSystem};
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;
use metalie::geometry;
use metalie::gflin::GfMatrix;
use metalie::groebner::{self, monomials_up_to};
use metalie::io;
use metalie::modvec::FreeModuleVector;
use metalie::poly::{MonomialOrder, Polynomial};
use metalie::presentation::ModulePresentation;

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

fn fld(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn poly_strategy(p: u64, nvars: usize, bound: u64) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_up_to(nvars, bound);
    let len = monos.len();
    proptest::collection::vec(0..p, len).prop_map(move |coeffs| {
        let terms: Vec<_> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (monos[k].clone(), c))
            .collect();
        Polynomial::from_terms(fld(p), nvars, terms)
    })
}

fn vec_strategy(p: u64, nvars: usize, width: usize, bound: u64) -> impl Strategy<Value = FreeModuleVector> {
    proptest::collection::vec(poly_strategy(p, nvars, bound), width).prop_map(move |polys| {
        FreeModuleVector::from_entries(
            width,
            polys
                .into_iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(3, 2, 2), b in poly_strategy(3, 2, 2), c in poly_strategy(3, 2, 2)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_roundtrip(a in poly_strategy(3, 2, 2), b in poly_strategy(3, 2, 1)) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        let q = prod.exact_div(&b);
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn parse_print_roundtrip(a in poly_strategy(3, 2, 2)) {
        let printed = a.to_string();
        let back = Polynomial::parse(fld(3), 2, &printed).unwrap();
        prop_assert_eq!(a, back);
    }

    #[test]
    fn groebner_membership_matches_oracle(
        gens in proptest::collection::vec(vec_strategy(2, 2, 2, 1), 1..4),
        probe in vec_strategy(2, 2, 2, 1),
    ) {
        let gb = groebner::groebner(&gens, ORDER);
        let expected = groebner::brute_force_member(&probe, &gens, 3, fld(2), 2);
        prop_assert_eq!(groebner::is_member(&probe, &gb, ORDER), expected);
    }

    #[test]
    fn groebner_reduction_is_canonical(
        gens in proptest::collection::vec(vec_strategy(2, 2, 2, 1), 1..4),
        a in vec_strategy(2, 2, 2, 1),
        b in vec_strategy(2, 2, 2, 1),
    ) {
        // congruent vectors reduce to the same normal form
        let gb = groebner::groebner(&gens, ORDER);
        let shifted = a.add(&gens[0].mul_poly(&Polynomial::var(fld(2), 2, 0)));
        prop_assert_eq!(
            groebner::reduce(&shifted, &gb, ORDER),
            groebner::reduce(&a, &gb, ORDER)
        );
        let sum_nf = groebner::reduce(&a.add(&b), &gb, ORDER);
        let nf_sum = groebner::reduce(&a, &gb, ORDER).add(&groebner::reduce(&b, &gb, ORDER));
        prop_assert_eq!(sum_nf, groebner::reduce(&nf_sum, &gb, ORDER));
    }

    #[test]
    fn bracket_bilinearity(
        ua in poly_strategy(3, 2, 1), va in poly_strategy(3, 2, 1),
        lu in proptest::collection::vec(0u64..3, 2),
        lv in proptest::collection::vec(0u64..3, 2),
        c in 0u64..3,
    ) {
        let ctx = AlgebraContext::new(fld(3), 2).unwrap();
        let u = ctx.from_parts(lu, FreeModuleVector::unit(1, 0, ua));
        let v = ctx.from_parts(lv, FreeModuleVector::unit(1, 0, va));
        // anticommutativity
        prop_assert!(ctx.add(&ctx.bracket(&u, &v), &ctx.bracket(&v, &u)).is_zero());
        // homogeneity
        prop_assert_eq!(
            ctx.bracket(&ctx.scale(c, &u), &v),
            ctx.scale(c, &ctx.bracket(&u, &v))
        );
        // additivity
        let w = ctx.add(&u, &v);
        prop_assert_eq!(
            ctx.bracket(&w, &v),
            ctx.add(&ctx.bracket(&u, &v), &ctx.bracket(&v, &v))
        );
    }
}

/// Count of basic left-normed monomials [a_{i1},...,a_{id}] with
/// i1 > i2 <= i3 <= ... <= id: the dimension of the degree-d homogeneous
/// component, independent of the coefficient field.
fn basic_monomial_count(r: usize, d: usize) -> usize {
    let mut count = 0;
    let mut seq = vec![0usize; d];
    loop {
        let ok = seq[0] > seq[1] && seq.windows(2).skip(1).all(|w| w[0] <= w[1]);
        if ok {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == d {
                return count;
            }
            seq[k] += 1;
            if seq[k] < r {
                break;
            }
            seq[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn homogeneous_dimension_matches_basic_monomials() {
    for p in [2u64, 3] {
        for r in [2usize, 3] {
            let ctx = AlgebraContext::new(fld(p), r).unwrap();
            for d in 2..=4usize {
                // flatten the normal forms of all left-normed degree-d words
                // and compare the GF(p) rank with the combinatorial count
                let monos = monomials_up_to(r, (d - 2) as u64);
                let col_of = |comp: usize, m: &[u32]| -> usize {
                    comp * monos.len()
                        + monos.iter().position(|q| q[..] == m[..]).unwrap()
                };
                let mut rows: Vec<Vec<u64>> = Vec::new();
                let mut seq = vec![0usize; d];
                loop {
                    let mut elt = ctx.gen_a(seq[0]).unwrap();
                    for &i in &seq[1..] {
                        elt = ctx.bracket(&elt, &ctx.gen_a(i).unwrap());
                    }
                    let mut row = vec![0u64; ctx.pair_count() * monos.len()];
                    for comp in 0..ctx.pair_count() {
                        if let Some(poly) = elt.fitting().component(comp) {
                            for (m, c) in poly.terms() {
                                row[col_of(comp, m)] = *c;
                            }
                        }
                    }
                    rows.push(row);
                    let mut k = 0;
                    loop {
                        if k == d {
                            break;
                        }
                        seq[k] += 1;
                        if seq[k] < r {
                            break;
                        }
                        seq[k] = 0;
                        k += 1;
                    }
                    if seq.iter().all(|&i| i == 0) {
                        break;
                    }
                }
                let rank = GfMatrix::from_rows(fld(p), rows).rank();
                assert_eq!(rank, basic_monomial_count(r, d), "p={p} r={r} d={d}");
            }
        }
    }
}

#[test]
fn presentation_file_roundtrip_corpus() {
    let field = fld(2);
    let samples = [
        ModulePresentation::free(field, 2, 3),
        ModulePresentation::new(
            field,
            2,
            2,
            vec![FreeModuleVector::from_entries(
                2,
                vec![
                    (0, Polynomial::var(field, 2, 1)),
                    (1, Polynomial::var(field, 2, 0)),
                ],
            )],
        )
        .unwrap(),
    ];
    for m in samples {
        let text = io::print_presentation(&m);
        let back = io::parse_presentation(&text).unwrap();
        assert_eq!(io::print_presentation(&back), text);
        assert_eq!(back.rank(), m.rank());
    }
}

#[test]
fn reduced_system_has_same_solutions() {
    let ctx = AlgebraContext::new(fld(2), 2).unwrap();
    let field = fld(2);
    let x1 = Polynomial::var(field, 2, 0);
    let x2 = Polynomial::var(field, 2, 1);
    let systems = vec![
        metalie::equations::ModuleSystem {
            unknowns: 1,
            coeffs: vec![vec![x1.clone()], vec![x1.mul(&x2)], vec![x1.clone()]],
            rhs: vec![
                FreeModuleVector::zero(1),
                FreeModuleVector::zero(1),
                FreeModuleVector::zero(1),
            ],
        },
        metalie::equations::ModuleSystem {
            unknowns: 2,
            coeffs: vec![
                vec![x1.clone(), x2.clone()],
                vec![x1.mul(&x1), x1.mul(&x2)],
            ],
            rhs: vec![FreeModuleVector::zero(1), FreeModuleVector::zero(1)],
        },
    ];
    for ms in systems {
        let reduced = metalie::equations::finite_equivalent_subsystem(&ctx, &ms);
        assert!(reduced.coeffs.len() < ms.coeffs.len());
        let d1 = geometry::dimension(
            &geometry::coordinate_algebra_of_module_system(&ctx, &ms).unwrap(),
        );
        let d2 = geometry::dimension(
            &geometry::coordinate_algebra_of_module_system(&ctx, &reduced).unwrap(),
        );
        assert_eq!(d1, d2);
    }
}

#[test]
fn normal_form_agrees_with_bounded_oracle() {
    // a closed expression and its normal form are indistinguishable inside
    // larger expressions
    let ctx = AlgebraContext::new(fld(2), 2).unwrap();
    let sys = EquationSystem::parse("[[a1,a2],x1]").unwrap();
    let direct = brute_force_solve(&ctx, &sys, 1, 1 << 16).unwrap();
    let rewritten = EquationSystem::parse("[[a2,a1],x1]").unwrap();
    let swapped = brute_force_solve(&ctx, &rewritten, 1, 1 << 16).unwrap();
    assert_eq!(direct, swapped);
}

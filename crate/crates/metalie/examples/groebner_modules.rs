//! The module kernel: Groebner bases of submodules of R^n, membership,
//! quotient by a polynomial, saturation, and torsion of a presentation.

use metalie::field::FieldSpec;
use metalie::groebner;
use metalie::modvec::FreeModuleVector;
use metalie::poly::{MonomialOrder, Polynomial};
use metalie::presentation::ModulePresentation;

fn main() {
    let field = FieldSpec::new(2).unwrap();
    let order = MonomialOrder::DegRevLex;
    let x1 = Polynomial::var(field, 2, 0);
    let x2 = Polynomial::var(field, 2, 1);

    // the rank-1 ideal module (e1, e2 | x2 e1 - x1 e2)
    let rel = FreeModuleVector::from_entries(
        2,
        vec![(0, x2.clone()), (1, x1.clone().neg())],
    );
    let gb = groebner::groebner(&[rel.clone()], order);
    println!("groebner basis:");
    for g in &gb {
        println!("  {g}");
    }

    let probe = rel.mul_poly(&x1);
    println!("x1 * relation in submodule: {}", groebner::is_member(&probe, &gb, order));
    let unit = FreeModuleVector::unit(2, 0, Polynomial::one(field, 2));
    println!("e1 in submodule: {}", groebner::is_member(&unit, &gb, order));

    // quotient and saturation of <x1^2 e1> by x1
    let gens = vec![FreeModuleVector::unit(1, 0, x1.mul(&x1))];
    let quot = groebner::colon(&gens, &x1, 1);
    println!("(<x1^2 e1> : x1) = {:?}", quot.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    let sat = groebner::saturate(&gens, &x1, 1);
    println!("saturation at x1 = {:?}", sat.iter().map(|v| v.to_string()).collect::<Vec<_>>());

    // torsion of R/<x1 x2>: everything is killed by a polynomial
    let m = ModulePresentation::new(
        field,
        2,
        1,
        vec![FreeModuleVector::unit(1, 0, x1.mul(&x2))],
    )
    .unwrap();
    println!("rank(R/<x1*x2>) = {}", m.rank());
    println!("torsion free: {}", m.is_torsion_free());
    for t in m.torsion_submodule() {
        println!("torsion preimage generator: {t}");
    }
}

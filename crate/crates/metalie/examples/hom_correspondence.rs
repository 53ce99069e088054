//! The point-homomorphism correspondence: solutions of the canonical system
//! of a presentation are exactly the generator images of homomorphisms into
//! the commutant.

use metalie::equations::brute_force_solve;
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;
use metalie::geometry::{canonical_system, homs_to_fitting, radical_member};
use metalie::modvec::FreeModuleVector;
use metalie::poly::Polynomial;
use metalie::presentation::ModulePresentation;

fn main() {
    let field = FieldSpec::new(2).unwrap();
    let ctx = AlgebraContext::new(field, 2).unwrap();
    let m = ModulePresentation::free(field, 2, 1);

    let sys = canonical_system(&m);
    println!("canonical system of the rank-1 free module:");
    for e in &sys.equations {
        println!("  {e} = 0");
    }

    let homs = homs_to_fitting(&m, 1, 1 << 20).unwrap();
    println!("homomorphisms with degree <= 1 images: {}", homs.len());
    for h in &homs {
        let images: Vec<String> = h.images.iter().map(|v| v.to_string()).collect();
        println!("  m1 -> {}", images.join(" ; "));
    }

    let points = brute_force_solve(&ctx, &sys, 1, 1 << 20).unwrap();
    println!("brute-force solutions at the same bound: {}", points.len());

    // radical membership through the substitution map
    for text in ["[[a1,a2],x1]", "[x1,a1]", "[[x1,a1],[x1,a2]]"] {
        let f = metalie::expr::LieExpr::parse(text).unwrap();
        println!("{text} in the radical: {}", radical_member(&f, &m).unwrap());
    }

    // a torsion quotient has only the zero homomorphism
    let killed = ModulePresentation::new(
        field,
        2,
        1,
        vec![FreeModuleVector::unit(1, 0, Polynomial::var(field, 2, 0))],
    )
    .unwrap();
    let homs = homs_to_fitting(&killed, 2, 1 << 20).unwrap();
    println!("homs out of R/<x1>: {} (commutant has no x1-torsion)", homs.len());
}

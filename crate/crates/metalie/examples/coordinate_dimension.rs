//! Coordinate algebras of module systems and the dimension of the attached
//! algebraic sets.

use metalie::equations::ModuleSystem;
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;
use metalie::geometry::{coordinate_algebra_of_module_system, dimension};
use metalie::modvec::FreeModuleVector;
use metalie::poly::Polynomial;

fn main() {
    let field = FieldSpec::new(2).unwrap();
    let ctx = AlgebraContext::new(field, 2).unwrap();
    let x1 = Polynomial::var(field, 2, 0);
    let x2 = Polynomial::var(field, 2, 1);

    let cases: Vec<(&str, ModuleSystem)> = vec![
        (
            "no constraints on one unknown (the whole commutant)",
            ModuleSystem { unknowns: 1, coeffs: vec![], rhs: vec![] },
        ),
        (
            "y x1 = 0 (a single point)",
            ModuleSystem {
                unknowns: 1,
                coeffs: vec![vec![x1.clone()]],
                rhs: vec![FreeModuleVector::zero(1)],
            },
        ),
        (
            "y1 x2 = y2 x1 (a curve)",
            ModuleSystem {
                unknowns: 2,
                coeffs: vec![vec![x2.clone(), x1.clone().neg()]],
                rhs: vec![FreeModuleVector::zero(1)],
            },
        ),
        (
            "two free unknowns (a surface)",
            ModuleSystem { unknowns: 2, coeffs: vec![], rhs: vec![] },
        ),
    ];

    for (name, ms) in cases {
        let gamma = coordinate_algebra_of_module_system(&ctx, &ms).unwrap();
        println!("{name}:");
        println!("  coordinate module rank = {}", gamma.module().rank());
        println!("  dimension = {}", dimension(&gamma));
    }
}

//! Enumerating axiom-scheme instances and checking them on candidate
//! algebras, including the localized-consistency status of the module-system
//! scheme.

use metalie::axioms::{self, Scheme};
use metalie::extension::ExtensionAlgebra;
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;

fn main() {
    let field = FieldSpec::new(2).unwrap();
    let free = ExtensionAlgebra::free_extension(AlgebraContext::new(field, 2).unwrap(), 0);

    for scheme in [
        Scheme::Phi1,
        Scheme::Phi2,
        Scheme::Phi3,
        Scheme::Phi4,
        Scheme::Phi5Prime,
        Scheme::Phi6,
        Scheme::Phi7Prime,
    ] {
        let bound = match scheme {
            Scheme::Phi6 => 3,
            _ => 1,
        };
        let insts = axioms::enumerate_axioms(field, 2, scheme, bound).unwrap();
        println!("scheme {scheme}: {} instances at bound {bound}", insts.len());
        for inst in insts.iter().take(5) {
            let verdict = axioms::check_instance(&inst.instance, &free).unwrap();
            match &inst.status {
                Some(status) => println!("  {} -> {verdict} ({status:?})", inst.instance),
                None => println!("  {} -> {verdict}", inst.instance),
            }
        }
        if insts.len() > 5 {
            println!("  ... {} more", insts.len() - 5);
        }
    }
}

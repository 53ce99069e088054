//! Classifying extensions F_r (+) M against the universal theory of the free
//! algebra: torsion-free modules embed (with certificate), torsion modules
//! are rejected with a concrete annihilated witness.

use metalie::axioms::{classify_ucl, Classification, Language};
use metalie::extension::ExtensionAlgebra;
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;
use metalie::modvec::FreeModuleVector;
use metalie::poly::Polynomial;
use metalie::presentation::ModulePresentation;

fn main() {
    let field = FieldSpec::new(2).unwrap();
    let ctx = AlgebraContext::new(field, 2).unwrap();

    let mut corpus: Vec<(String, ModulePresentation)> = vec![
        ("free of rank 0".into(), ModulePresentation::free(field, 2, 0)),
        ("free of rank 1".into(), ModulePresentation::free(field, 2, 1)),
        ("free of rank 2".into(), ModulePresentation::free(field, 2, 2)),
    ];
    for rel in ["x1", "x1^2", "x1*x2", "x1 + x2"] {
        corpus.push((
            format!("R/<{rel}>"),
            ModulePresentation::new(
                field,
                2,
                1,
                vec![FreeModuleVector::unit(1, 0, Polynomial::parse(field, 2, rel).unwrap())],
            )
            .unwrap(),
        ));
    }
    corpus.push((
        "ideal module (e1,e2 | x2 e1 - x1 e2)".into(),
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
    ));

    for (name, m) in corpus {
        let b = ExtensionAlgebra::new(ctx.clone(), m).unwrap();
        match classify_ucl(&b, Language::L, 2).unwrap() {
            Classification::Member { s, images } => {
                println!("{name}: member, embeds into the rank-{s} free module");
                for (i, v) in images.iter().enumerate() {
                    println!("  m{} -> {}", i + 1, v);
                }
            }
            Classification::NonMember { violated, witness } => {
                println!("{name}: non-member, violates {violated}");
                if let Some(w) = witness {
                    println!("  annihilated witness: {w}");
                }
            }
        }
    }
}

//! Witnessing dimension from below: strictly rank-decreasing chains of
//! coordinate algebras obtained by quotienting out isolated submodules.

use metalie::extension::ExtensionAlgebra;
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;
use metalie::geometry::{chain_dimension_check, dimension, CoordinateAlgebra};
use metalie::presentation::ModulePresentation;

fn main() {
    let field = FieldSpec::new(2).unwrap();
    let ctx = AlgebraContext::new(field, 2).unwrap();

    for s in 0..=3usize {
        let gamma = CoordinateAlgebra::new(
            ExtensionAlgebra::new(ctx.clone(), ModulePresentation::free(field, 2, s)).unwrap(),
        )
        .unwrap();
        let chain = chain_dimension_check(&gamma).unwrap();
        let ranks: Vec<usize> = chain.iter().map(dimension).collect();
        println!("free module of rank {s}: chain ranks {ranks:?}");
    }
}

//! Element arithmetic in the free metabelian algebra: generators, brackets,
//! normal forms of nested expressions, and commutant membership.

use metalie::expr::LieExpr;
use metalie::field::FieldSpec;
use metalie::fmla::{AlgebraContext, FittingMode};

fn main() {
    let ctx = AlgebraContext::new(FieldSpec::new(3).unwrap(), 3).unwrap();

    let a1 = ctx.gen_a(0).unwrap();
    let a2 = ctx.gen_a(1).unwrap();
    let a3 = ctx.gen_a(2).unwrap();

    println!("[a2, a1]            = {}", ctx.bracket(&a2, &a1));
    println!("[[a2, a1], a3]      = {}", ctx.bracket(&ctx.bracket(&a2, &a1), &a3));
    println!("[a1, [a2, a3]]      = {}", ctx.bracket(&a1, &ctx.bracket(&a2, &a3)));

    // the metabelian identity collapses brackets of commutant elements
    let c = ctx.bracket(&ctx.bracket(&a2, &a1), &ctx.bracket(&a3, &a1));
    println!("[[a2,a1],[a3,a1]]   = {c}");

    // normal forms straight from expression text
    for text in ["[a3,[a2,a1]]", "2*[a2,a1] + [a1,a2]", "[[a3,a2],a1] + [[a1,a3],a2]"] {
        let e = LieExpr::parse(text).unwrap();
        println!("nf({text}) = {}", ctx.normal_form(&e).unwrap());
    }

    // commutant membership, three equivalent definitions
    let u = ctx.bracket(&a2, &a1);
    let v = ctx.add(&a1, &u);
    for (name, elt) in [("[a2,a1]", &u), ("a1 + [a2,a1]", &v)] {
        println!(
            "{name}: structural={} formula={} formula-with-constants={}",
            ctx.in_fitting(elt, FittingMode::Structural),
            ctx.in_fitting(elt, FittingMode::FormulaL),
            ctx.in_fitting(elt, FittingMode::FormulaLFr),
        );
    }
}

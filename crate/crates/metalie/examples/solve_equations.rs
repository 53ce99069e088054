//! The equation decision procedure: a consistent system whose solution set
//! is the whole commutant, a finite solution set, and an inconsistency
//! detected by abelianization.

use metalie::equations::{solve_system, EquationSystem};
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;

fn report(ctx: &AlgebraContext, text: &str) {
    let system = EquationSystem::parse(text).unwrap();
    let set = solve_system(ctx, &system, 4096).unwrap();
    println!("system: {}", text.replace('\n', " and "));
    println!("  verdict: {}", if set.consistent { "consistent" } else { "inconsistent" });
    for (i, (branch, point)) in set.branches.iter().zip(set.points(ctx)).enumerate() {
        let xs: Vec<String> = point.iter().map(|x| x.to_string()).collect();
        println!("  branch {}: point {}", i + 1, xs.join(" ; "));
        for (k, gen) in branch.homogeneous.iter().enumerate() {
            let ys: Vec<String> = gen.iter().map(|v| v.to_string()).collect();
            println!("  branch {}: free direction {}: {}", i + 1, k + 1, ys.join(" ; "));
        }
    }
}

fn main() {
    let ctx = AlgebraContext::new(FieldSpec::new(2).unwrap(), 2).unwrap();

    // solution set = the whole commutant
    report(&ctx, "[[a1,a2],x1]");

    // two isolated points
    report(&ctx, "[x1,a1] + [a2,a1]");

    // no solution: the linear part cannot cancel
    report(&ctx, "[x1,a1] + a2");

    // two unknowns sharing a constraint
    report(&ctx, "[x1,a1] + [x2,a2]");
}

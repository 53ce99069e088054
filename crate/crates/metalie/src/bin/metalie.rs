//! Command-line front end. Every subcommand prints a deterministic report on
//! standard output (stable key order, canonical element formatting) and the
//! elapsed time on standard error, so repeated runs on the same input are
//! byte-identical on stdout.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use metalie::axioms::{self, AxiomInstance, Classification, DeltaStatus, Language, Scheme};
use metalie::equations::{brute_force_solve, solve_system, EquationSystem};
use metalie::error::Error;
use metalie::expr::LieExpr;
use metalie::field::FieldSpec;
use metalie::fmla::AlgebraContext;
use metalie::geometry;
use metalie::io;

#[derive(Parser)]
#[command(name = "metalie", about = "Exact computation in free metabelian Lie algebras over GF(p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LanguageArg {
    L,
    #[value(name = "LFr")]
    LFr,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a closed Lie expression over the generators a1..ar
    Nf {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: usize,
        expr: String,
    },
    /// Bracket of two closed Lie expressions
    Bracket {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: usize,
        left: String,
        right: String,
    },
    /// Decide compatibility of an equation system file and describe all solutions
    Solve {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 4096)]
        branch_cap: u64,
        file: String,
    },
    /// Brute-force bounded-degree solutions of a system file (cross-check)
    Oracle {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 2)]
        oracle_bound: u64,
        #[arg(long, default_value_t = 4096)]
        branch_cap: u64,
        file: String,
    },
    /// Classify an extension-algebra file against the universal theory
    Classify {
        #[arg(long, value_enum)]
        language: LanguageArg,
        #[arg(long)]
        r: Option<usize>,
        file: String,
    },
    /// Axiom-scheme instance streams
    Axioms {
        #[command(subcommand)]
        action: AxiomsAction,
    },
    /// Coordinate algebra and dimension of a module presentation file
    Coord { file: String },
    /// Radical membership of a Lie expression for a presentation file
    RadicalMember { expr: String, file: String },
    /// Enumerate bounded-degree homomorphisms into the commutant
    Homs {
        #[arg(long, default_value_t = 1)]
        degree_bound: u64,
        #[arg(long, default_value_t = 4096)]
        branch_cap: u64,
        file: String,
    },
    /// Dimension of the algebraic set attached to a presentation file
    Dim { file: String },
}

#[derive(Subcommand)]
enum AxiomsAction {
    /// Stream instances of one scheme up to a size bound
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        scheme: String,
        #[arg(long, default_value_t = 1)]
        bound: u64,
    },
}

fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    format!("{:x}", h.finalize())
}

fn read_input(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(Error::from)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Nf { p, r, expr } => {
            let ctx = AlgebraContext::new(FieldSpec::new(p)?, r)?;
            let e = LieExpr::parse(&expr)?;
            let nf = ctx.normal_form(&e)?;
            println!("command: nf");
            println!("input-digest: {}", digest(&[&expr]));
            println!("p: {p}");
            println!("r: {r}");
            println!("normal-form: {nf}");
        }
        Command::Bracket { p, r, left, right } => {
            let ctx = AlgebraContext::new(FieldSpec::new(p)?, r)?;
            let u = ctx.normal_form(&LieExpr::parse(&left)?)?;
            let v = ctx.normal_form(&LieExpr::parse(&right)?)?;
            println!("command: bracket");
            println!("input-digest: {}", digest(&[&left, &right]));
            println!("p: {p}");
            println!("r: {r}");
            println!("bracket: {}", ctx.bracket(&u, &v));
        }
        Command::Solve { p, r, branch_cap, file } => {
            let text = read_input(&file)?;
            let ctx = AlgebraContext::new(FieldSpec::new(p)?, r)?;
            let system = EquationSystem::parse(&text)?;
            let set = solve_system(&ctx, &system, branch_cap)?;
            println!("command: solve");
            println!("input-digest: {}", digest(&[&text]));
            println!("p: {p}");
            println!("r: {r}");
            println!("arity: {}", system.arity);
            println!(
                "verdict: {}",
                if set.consistent { "Consistent" } else { "Inconsistent" }
            );
            println!("branches: {}", set.branches.len());
            let points = set.points(&ctx);
            for (i, (b, pt)) in set.branches.iter().zip(&points).enumerate() {
                let zs: Vec<String> = b
                    .branch
                    .constants(&ctx)
                    .iter()
                    .map(|z| z.to_string())
                    .collect();
                println!("branch {}: z = {}", i + 1, zs.join(" ; "));
                let xs: Vec<String> = pt.iter().map(|x| x.to_string()).collect();
                println!("branch {}: point = {}", i + 1, xs.join(" ; "));
                for (k, gen) in b.homogeneous.iter().enumerate() {
                    let ys: Vec<String> = gen.iter().map(|v| v.to_string()).collect();
                    println!(
                        "branch {}: homogeneous {} = {}",
                        i + 1,
                        k + 1,
                        ys.join(" ; ")
                    );
                }
            }
        }
        Command::Oracle { p, r, oracle_bound, branch_cap, file } => {
            let text = read_input(&file)?;
            let ctx = AlgebraContext::new(FieldSpec::new(p)?, r)?;
            let system = EquationSystem::parse(&text)?;
            let mut pts: Vec<String> = brute_force_solve(&ctx, &system, oracle_bound, branch_cap)?
                .iter()
                .map(|pt| {
                    pt.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ; ")
                })
                .collect();
            pts.sort();
            println!("command: oracle");
            println!("input-digest: {}", digest(&[&text]));
            println!("p: {p}");
            println!("r: {r}");
            println!("bound: {oracle_bound}");
            println!("points: {}", pts.len());
            for (i, pt) in pts.iter().enumerate() {
                println!("point {}: {}", i + 1, pt);
            }
        }
        Command::Classify { language, r, file } => {
            let text = read_input(&file)?;
            let b = io::parse_extension(&text)?;
            let r = r.unwrap_or_else(|| b.base().rank());
            let lang = match language {
                LanguageArg::L => Language::L,
                LanguageArg::LFr => Language::LFr,
            };
            let result = axioms::classify_ucl(&b, lang, r)?;
            println!("command: classify");
            println!("input-digest: {}", digest(&[&text]));
            println!("p: {}", b.field().p());
            println!("r: {r}");
            println!(
                "language: {}",
                match lang {
                    Language::L => "L",
                    Language::LFr => "LFr",
                }
            );
            match result {
                Classification::Member { s, images } => {
                    println!("verdict: Member");
                    println!("s: {s}");
                    for (i, v) in images.iter().enumerate() {
                        println!("image {}: {}", i + 1, v);
                    }
                }
                Classification::NonMember { violated, witness } => {
                    println!("verdict: NonMember");
                    println!("violated: {violated}");
                    if let Some(w) = witness {
                        println!("witness: {w}");
                    }
                }
            }
        }
        Command::Axioms { action } => {
            let AxiomsAction::Enumerate { p, r, scheme, bound } = action;
            let scheme = Scheme::parse(&scheme)?;
            let field = FieldSpec::new(p)?;
            let insts = axioms::enumerate_axioms(field, r, scheme, bound)?;
            println!("command: axioms-enumerate");
            println!("input-digest: {}", digest(&[&scheme.to_string(), &bound.to_string()]));
            println!("p: {p}");
            println!("r: {r}");
            println!("scheme: {scheme}");
            println!("bound: {bound}");
            println!("instances: {}", insts.len());
            for (i, inst) in insts.iter().enumerate() {
                let status = match &inst.status {
                    Some(DeltaStatus::Inconsistent) => " status=inconsistent",
                    Some(DeltaStatus::Consistent) => " status=consistent",
                    Some(DeltaStatus::Unknown) => " status=unknown",
                    None => "",
                };
                if let AxiomInstance::Phi7 { system } | AxiomInstance::Phi7Prime { system } =
                    &inst.instance
                {
                    let rows: Vec<String> = system
                        .coeffs
                        .iter()
                        .zip(&system.rhs)
                        .map(|(row, rhs)| {
                            let lhs: Vec<String> = row
                                .iter()
                                .enumerate()
                                .map(|(j, f)| format!("y{}*({})", j + 1, f))
                                .collect();
                            format!("{} = {}", lhs.join(" + "), rhs)
                        })
                        .collect();
                    println!(
                        "instance {}: {} [{}]{}",
                        i + 1,
                        inst.instance,
                        rows.join(" | "),
                        status
                    );
                } else {
                    println!("instance {}: {}{}", i + 1, inst.instance, status);
                }
            }
        }
        Command::Coord { file } => {
            let text = read_input(&file)?;
            let m = io::parse_presentation(&text)?;
            let ctx = AlgebraContext::new(m.field(), m.nvars())?;
            let quotient = m.torsion_quotient();
            let gamma = geometry::CoordinateAlgebra::new(
                metalie::extension::ExtensionAlgebra::new(ctx, quotient)?,
            )?;
            println!("command: coord");
            println!("input-digest: {}", digest(&[&text]));
            println!("p: {}", m.field().p());
            println!("r: {}", m.nvars());
            println!("dimension: {}", geometry::dimension(&gamma));
            for line in io::print_presentation(gamma.module()).lines() {
                println!("module: {line}");
            }
        }
        Command::RadicalMember { expr, file } => {
            let text = read_input(&file)?;
            let m = io::parse_presentation(&text)?;
            let e = LieExpr::parse(&expr)?;
            let member = geometry::radical_member(&e, &m)?;
            println!("command: radical-member");
            println!("input-digest: {}", digest(&[&expr, &text]));
            println!("p: {}", m.field().p());
            println!("r: {}", m.nvars());
            println!("member: {member}");
        }
        Command::Homs { degree_bound, branch_cap, file } => {
            let text = read_input(&file)?;
            let m = io::parse_presentation(&text)?;
            let homs = geometry::homs_to_fitting(&m, degree_bound, branch_cap)?;
            println!("command: homs");
            println!("input-digest: {}", digest(&[&text]));
            println!("p: {}", m.field().p());
            println!("r: {}", m.nvars());
            println!("bound: {degree_bound}");
            println!("homs: {}", homs.len());
            for (i, h) in homs.iter().enumerate() {
                let images: Vec<String> = h.images.iter().map(|v| v.to_string()).collect();
                println!("hom {}: {}", i + 1, images.join(" ; "));
            }
        }
        Command::Dim { file } => {
            let text = read_input(&file)?;
            let m = io::parse_presentation(&text)?;
            println!("command: dim");
            println!("input-digest: {}", digest(&[&text]));
            println!("p: {}", m.field().p());
            println!("r: {}", m.nvars());
            println!("dimension: {}", m.rank());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(cli);
    eprintln!("elapsed-ms: {}", start.elapsed().as_millis());
    match result {
        Ok(()) => ExitCode::from(0),
        Err(e @ (Error::ResourceCap(_) | Error::DimensionExceeded(_, _))) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

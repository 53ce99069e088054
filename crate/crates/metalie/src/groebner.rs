//! Groebner bases for submodules of free modules `R^t`, with division,
//! representation tracking, syzygies, module quotients and saturation.
//!
//! Buchberger pairs are processed without the coprimality shortcut: it is not
//! valid for module elements, and all inputs here are desk-scale.

use crate::field::FieldSpec;
use crate::modvec::FreeModuleVector;
use crate::poly::{mono_degree, Monomial, MonomialOrder, Polynomial};

fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_div(b: &[u32], a: &[u32]) -> Monomial {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn mono_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full normal form of `v` modulo the elements of `basis`.
pub fn reduce(v: &FreeModuleVector, basis: &[FreeModuleVector], order: MonomialOrder) -> FreeModuleVector {
    reduce_tracked(v, basis, order).0
}

/// Normal form together with quotients: `v = sum q_i basis_i + nf`.
pub fn reduce_tracked(
    v: &FreeModuleVector,
    basis: &[FreeModuleVector],
    order: MonomialOrder,
) -> (FreeModuleVector, Vec<Polynomial>) {
    let width = v.width();
    let mut work = v.clone();
    let mut rest = FreeModuleVector::zero(width);
    let (field, nvars) = match v.entries().first() {
        Some((_, p)) => (p.field(), p.nvars()),
        None => match basis.iter().find_map(|g| g.entries().first()) {
            Some((_, p)) => (p.field(), p.nvars()),
            None => return (work, Vec::new()),
        },
    };
    let mut quot = vec![Polynomial::zero(field, nvars); basis.len()];

    'outer: while let Some((comp, mono, coeff)) = work.lead(order) {
        for (k, g) in basis.iter().enumerate() {
            if let Some((gc, gm, gcf)) = g.lead(order) {
                if gc == comp && mono_divides(&gm, &mono) {
                    let q = mono_div(&mono, &gm);
                    let c = field.mul(coeff, field.inv(gcf));
                    work = work.sub(&g.mul_term(&q, c));
                    quot[k] = quot[k].add(&Polynomial::monomial(field, q, c));
                    continue 'outer;
                }
            }
        }
        // lead is irreducible: move it to the remainder
        let t = FreeModuleVector::unit(width, comp, Polynomial::monomial(field, mono, coeff));
        rest = rest.add(&t);
        work = work.sub(&t);
    }
    (rest, quot)
}

pub fn is_member(v: &FreeModuleVector, gb: &[FreeModuleVector], order: MonomialOrder) -> bool {
    reduce(v, gb, order).is_zero()
}

struct RawGb {
    basis: Vec<FreeModuleVector>,
    /// Representation of every basis element over the original generators.
    reprs: Vec<Vec<Polynomial>>,
    /// Syzygies among the basis elements, one row per zero reduction.
    basis_syzygies: Vec<Vec<Polynomial>>,
}

fn buchberger_raw(
    gens: &[FreeModuleVector],
    field: FieldSpec,
    nvars: usize,
    order: MonomialOrder,
) -> RawGb {
    let ng = gens.len();
    let zero = || Polynomial::zero(field, nvars);
    let mut basis: Vec<FreeModuleVector> = Vec::new();
    let mut reprs: Vec<Vec<Polynomial>> = Vec::new();
    let mut syz: Vec<Vec<Polynomial>> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let push = |basis: &mut Vec<FreeModuleVector>,
                    reprs: &mut Vec<Vec<Polynomial>>,
                    pairs: &mut Vec<(usize, usize)>,
                    v: FreeModuleVector,
                    r: Vec<Polynomial>| {
        let n = basis.len();
        for k in 0..n {
            pairs.push((k, n));
        }
        basis.push(v);
        reprs.push(r);
    };

    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut r = vec![zero(); ng];
        r[i] = Polynomial::one(field, nvars);
        push(&mut basis, &mut reprs, &mut pairs, g.clone(), r);
    }

    while let Some((i, j)) = pairs.pop() {
        let (ci, mi, cfi) = basis[i].lead(order).expect("nonzero basis element");
        let (cj, mj, cfj) = basis[j].lead(order).expect("nonzero basis element");
        if ci != cj {
            continue;
        }
        let lcm = mono_lcm(&mi, &mj);
        let ui = Polynomial::monomial(field, mono_div(&lcm, &mi), field.inv(cfi));
        let uj = Polynomial::monomial(field, mono_div(&lcm, &mj), field.inv(cfj));
        let s = basis[i].mul_poly(&ui).sub(&basis[j].mul_poly(&uj));
        let (nf, quot) = reduce_tracked(&s, &basis, order);
        if nf.is_zero() {
            let mut z = vec![zero(); basis.len()];
            z[i] = z[i].add(&ui);
            z[j] = z[j].sub(&uj);
            for (k, q) in quot.iter().enumerate() {
                z[k] = z[k].sub(q);
            }
            syz.push(z);
        } else {
            let mut r = vec![zero(); ng];
            for g in 0..ng {
                r[g] = reprs[i][g]
                    .mul(&ui)
                    .sub(&reprs[j][g].mul(&uj));
            }
            for (k, q) in quot.iter().enumerate() {
                if !q.is_zero() {
                    for g in 0..ng {
                        r[g] = r[g].sub(&reprs[k][g].mul(q));
                    }
                }
            }
            push(&mut basis, &mut reprs, &mut pairs, nf, r);
        }
    }

    // pad syzygy rows to the final basis length
    let n = basis.len();
    for z in &mut syz {
        z.resize(n, zero());
    }
    RawGb { basis, reprs, basis_syzygies: syz }
}

fn field_of(gens: &[FreeModuleVector]) -> Option<(FieldSpec, usize)> {
    gens.iter()
        .find_map(|g| g.entries().first())
        .map(|(_, p)| (p.field(), p.nvars()))
}

/// Reduced Groebner basis of the submodule generated by `gens`: leads are
/// pairwise irreducible, tails are fully reduced, lead coefficients are 1 and
/// the result is sorted descending by leading term. Idempotent.
pub fn groebner(gens: &[FreeModuleVector], order: MonomialOrder) -> Vec<FreeModuleVector> {
    let (field, nvars) = match field_of(gens) {
        Some(fc) => fc,
        None => return Vec::new(),
    };
    let raw = buchberger_raw(gens, field, nvars, order);
    let mut basis = raw.basis;

    // minimalise: drop elements whose lead is divisible by another lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (ci, mi, _) = basis[i].lead(order).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (cj, mj, _) = basis[j].lead(order).unwrap();
            if ci == cj && mono_divides(&mj, &mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<FreeModuleVector> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(v, k)| if k { Some(v) } else { None })
        .collect();

    // tail-reduce each element by the others
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<FreeModuleVector> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v.clone())
                .collect();
            let r = reduce(&minimal[i], &others, order);
            if r != minimal[i] {
                changed = true;
                minimal[i] = r;
            }
        }
        minimal.retain(|v| !v.is_zero());
        if !changed {
            break;
        }
    }

    for v in &mut minimal {
        let (_, _, c) = v.lead(order).unwrap();
        *v = v.scale(field.inv(c), field);
    }
    minimal.sort_by(|a, b| {
        let (ca, ma, _) = a.lead(order).unwrap();
        let (cb, mb, _) = b.lead(order).unwrap();
        order.cmp_module((cb, &mb), (ca, &ma))
    });
    minimal
}

/// Does `a` and `b` generate the same submodule?
pub fn submodule_eq(a: &[FreeModuleVector], b: &[FreeModuleVector], order: MonomialOrder) -> bool {
    let ga = groebner(a, order);
    let gb = groebner(b, order);
    a.iter().all(|v| is_member(v, &gb, order))
        && b.iter().all(|v| is_member(v, &ga, order))
        && ga.iter().all(|v| is_member(v, &gb, order))
        && gb.iter().all(|v| is_member(v, &ga, order))
}

/// Groebner basis together with representations over the input generators
/// (`basis[i] = sum reprs[i][j] * gens[j]`). The basis is inter-reduced.
pub fn groebner_tracked(
    gens: &[FreeModuleVector],
    order: MonomialOrder,
) -> (Vec<FreeModuleVector>, Vec<Vec<Polynomial>>) {
    let (field, nvars) = match field_of(gens) {
        Some(fc) => fc,
        None => return (Vec::new(), Vec::new()),
    };
    let raw = buchberger_raw(gens, field, nvars, order);
    let mut basis = raw.basis;
    let mut reprs = raw.reprs;

    // drop redundant leads, then tail-reduce with representation updates
    let mut i = 0;
    while i < basis.len() {
        let (ci, mi, _) = basis[i].lead(order).unwrap();
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if i == j {
                return false;
            }
            let (cj, mj, _) = g.lead(order).unwrap();
            ci == cj && mono_divides(&mj, &mi) && (mj != mi || j < i)
        });
        if redundant {
            basis.remove(i);
            reprs.remove(i);
        } else {
            i += 1;
        }
    }
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let mut others = basis.clone();
            others.remove(i);
            let (nf, quot) = reduce_tracked(&basis[i], &others, order);
            if nf != basis[i] {
                changed = true;
                let mut new_r = reprs[i].clone();
                for (k, q) in quot.iter().enumerate() {
                    let src = if k < i { k } else { k + 1 };
                    if !q.is_zero() {
                        for g in 0..new_r.len() {
                            new_r[g] = new_r[g].sub(&reprs[src][g].mul(q));
                        }
                    }
                }
                basis[i] = nf;
                reprs[i] = new_r;
            }
        }
        let mut j = 0;
        while j < basis.len() {
            if basis[j].is_zero() {
                basis.remove(j);
                reprs.remove(j);
            } else {
                j += 1;
            }
        }
        if !changed {
            break;
        }
    }
    for (v, r) in basis.iter_mut().zip(reprs.iter_mut()) {
        let (_, _, c) = v.lead(order).unwrap();
        let inv = field.inv(c);
        *v = v.scale(inv, field);
        for p in r.iter_mut() {
            *p = p.scale(inv);
        }
    }
    (basis, reprs)
}

/// Generating set of the syzygy module of `gens` inside `R^{gens.len()}`:
/// all polynomial rows `(q_1..q_k)` with `sum q_i gens[i] = 0`.
pub fn syzygies(
    gens: &[FreeModuleVector],
    field: FieldSpec,
    nvars: usize,
    order: MonomialOrder,
) -> Vec<Vec<Polynomial>> {
    let ng = gens.len();
    let zero = || Polynomial::zero(field, nvars);
    let mut out: Vec<Vec<Polynomial>> = Vec::new();

    // unit syzygies for zero generators
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            let mut z = vec![zero(); ng];
            z[i] = Polynomial::one(field, nvars);
            out.push(z);
        }
    }
    if gens.iter().all(|g| g.is_zero()) {
        return out;
    }

    let raw = buchberger_raw(gens, field, nvars, order);
    let nb = raw.basis.len();

    // B: each original generator over the basis
    let mut b_rows: Vec<Vec<Polynomial>> = Vec::with_capacity(ng);
    for g in gens {
        let (nf, quot) = reduce_tracked(g, &raw.basis, order);
        assert!(nf.is_zero(), "generator must reduce to zero over its own basis");
        b_rows.push(quot);
    }

    // rows of I - B*A
    for i in 0..ng {
        let mut row = vec![zero(); ng];
        row[i] = Polynomial::one(field, nvars);
        for k in 0..nb {
            if b_rows[i][k].is_zero() {
                continue;
            }
            for g in 0..ng {
                row[g] = row[g].sub(&b_rows[i][k].mul(&raw.reprs[k][g]));
            }
        }
        if row.iter().any(|p| !p.is_zero()) {
            out.push(row);
        }
    }

    // basis syzygies transported to the generators
    for z in &raw.basis_syzygies {
        let mut row = vec![zero(); ng];
        for k in 0..nb {
            if z[k].is_zero() {
                continue;
            }
            for g in 0..ng {
                row[g] = row[g].add(&z[k].mul(&raw.reprs[k][g]));
            }
        }
        if row.iter().any(|p| !p.is_zero()) {
            out.push(row);
        }
    }
    out.dedup();
    out
}

/// Module quotient `(N : h) = { v | h v ∈ R^t : h v ∈ N }`, computed from
/// syzygies of `gens ∪ {h e_1, .., h e_t}`: a relation
/// `sum a_i g_i - sum v_s (h e_s) = 0` says exactly that `h v ∈ N`, and the
/// `e_s`-projections of a syzygy generating set generate the quotient.
pub fn colon(gens: &[FreeModuleVector], h: &Polynomial, width: usize) -> Vec<FreeModuleVector> {
    assert!(!h.is_zero());
    let field = h.field();
    let nvars = h.nvars();
    if h.total_degree() == Some(0) {
        return groebner(gens, MonomialOrder::DegRevLex);
    }
    let mut combined: Vec<FreeModuleVector> = gens.to_vec();
    for s in 0..width {
        combined.push(FreeModuleVector::unit(width, s, h.clone()));
    }
    let syz = syzygies(&combined, field, nvars, MonomialOrder::DegRevLex);
    let projected: Vec<FreeModuleVector> = syz
        .iter()
        .map(|row| {
            FreeModuleVector::from_entries(
                width,
                row[gens.len()..].iter().cloned().enumerate().collect(),
            )
        })
        .collect();
    groebner(&projected, MonomialOrder::DegRevLex)
}

/// Saturation `(N : h^∞)`: iterate the module quotient until it stabilises.
pub fn saturate(gens: &[FreeModuleVector], h: &Polynomial, width: usize) -> Vec<FreeModuleVector> {
    let mut current = groebner(gens, MonomialOrder::DegRevLex);
    loop {
        let next = colon(&current, h, width);
        if next.iter().all(|v| is_member(v, &current, MonomialOrder::DegRevLex)) {
            return current;
        }
        current = next;
    }
}

/// Degree-bounded membership oracle: search for a representation
/// `v = sum q_i gens[i]` with `deg q_i <= bound` by GF(p) linear algebra.
/// Independent of the Groebner path; test support.
pub fn brute_force_member(
    v: &FreeModuleVector,
    gens: &[FreeModuleVector],
    bound: u64,
    field: FieldSpec,
    nvars: usize,
) -> bool {
    use crate::gflin::GfMatrix;
    let monos = monomials_up_to(nvars, bound);
    // columns: (gen, multiplier monomial); rows: (component, monomial) of products
    let mut columns: Vec<FreeModuleVector> = Vec::new();
    for g in gens {
        for m in &monos {
            columns.push(g.mul_term(m, 1));
        }
    }
    let mut row_index: std::collections::HashMap<(usize, Monomial), usize> =
        std::collections::HashMap::new();
    let mut row_count = 0usize;
    let mut index_of = |key: (usize, Monomial)| -> usize {
        *row_index.entry(key).or_insert_with(|| {
            row_count += 1;
            row_count - 1
        })
    };
    let mut col_entries: Vec<Vec<(usize, u64)>> = Vec::new();
    for cvec in columns.iter().chain(std::iter::once(v)) {
        let mut entries = Vec::new();
        for (idx, p) in cvec.entries() {
            for (m, c) in p.terms() {
                entries.push((index_of((*idx, m.clone())), *c));
            }
        }
        col_entries.push(entries);
    }
    let ncols = columns.len();
    let mut mat = GfMatrix::zero(field, row_count, ncols);
    let mut rhs = vec![0u64; row_count];
    for (j, entries) in col_entries.iter().enumerate() {
        for &(r, c) in entries {
            if j < ncols {
                mat.set(r, j, c);
            } else {
                rhs[r] = c;
            }
        }
    }
    mat.solve(&rhs).is_some()
}

/// All monomials in `nvars` variables of total degree at most `bound`.
pub fn monomials_up_to(nvars: usize, bound: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, left: u64) {
        if var == current.len() {
            out.push(current.clone());
            return;
        }
        for e in 0..=left {
            current[var] = e as u32;
            rec(out, current, var + 1, left - e);
        }
        current[var] = 0;
    }
    rec(&mut out, &mut current, 0, bound);
    out.sort_by(|a, b| crate::poly::cmp_degrevlex(a, b));
    out
}

/// Max total degree of any monomial appearing in the vector; used by
/// enumeration bounds.
pub fn vector_degree(v: &FreeModuleVector) -> u64 {
    v.entries()
        .iter()
        .flat_map(|(_, p)| p.terms().iter().map(|(m, _)| mono_degree(m)))
        .max()
        .unwrap_or(0)
}

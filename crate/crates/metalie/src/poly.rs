//! Sparse multivariate polynomials over GF(p) with a fixed degrevlex term
//! order, plus the elimination order used by the saturation machinery.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

pub type Monomial = Vec<u32>;

pub fn mono_degree(m: &[u32]) -> u64 {
    m.iter().map(|&e| e as u64).sum()
}

/// Degree reverse lexicographic order.
pub fn cmp_degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    match mono_degree(a).cmp(&mono_degree(b)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing position wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// Monomial orders used by the Groebner engine. `ElimLast` makes the last
/// variable dominate everything; it is used to eliminate the auxiliary
/// variable in module intersections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    ElimLast,
}

impl MonomialOrder {
    pub fn cmp_mono(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
            MonomialOrder::ElimLast => {
                let n = a.len();
                match a[n - 1].cmp(&b[n - 1]) {
                    Ordering::Equal => cmp_degrevlex(&a[..n - 1], &b[..n - 1]),
                    ord => ord,
                }
            }
        }
    }

    /// Position-over-term extension: smaller component index is greater; for
    /// `ElimLast` the auxiliary variable still dominates the position.
    pub fn cmp_module(&self, a: (usize, &[u32]), b: (usize, &[u32])) -> Ordering {
        if let MonomialOrder::ElimLast = self {
            let n = a.1.len();
            match a.1[n - 1].cmp(&b.1[n - 1]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        match b.0.cmp(&a.0) {
            Ordering::Equal => self.cmp_mono(a.1, b.1),
            ord => ord,
        }
    }
}

/// A polynomial in `k[x1..x_nvars]` over GF(p). Terms are kept sorted in
/// descending degrevlex order with nonzero canonical coefficients; equality
/// is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Polynomial { field, nvars, terms: Vec::new() }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: u64) -> Self {
        let c = field.reduce_u64(c);
        let mut p = Self::zero(field, nvars);
        if c != 0 {
            p.terms.push((vec![0; nvars], c));
        }
        p
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    /// The variable `x_{idx+1}`.
    pub fn var(field: FieldSpec, nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut m = vec![0u32; nvars];
        m[idx] = 1;
        Polynomial { field, nvars, terms: vec![(m, 1)] }
    }

    pub fn monomial(field: FieldSpec, m: Monomial, c: u64) -> Self {
        let nvars = m.len();
        let c = field.reduce_u64(c);
        let mut p = Self::zero(field, nvars);
        if c != 0 {
            p.terms.push((m, c));
        }
        p
    }

    pub fn from_terms(field: FieldSpec, nvars: usize, terms: Vec<(Monomial, u64)>) -> Self {
        let mut map: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), nvars);
            let e = map.entry(m).or_insert(0);
            *e = field.add(*e, field.reduce_u64(c));
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        Polynomial { field, nvars, terms }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| mono_degree(m)).max()
    }

    pub fn constant_term(&self) -> u64 {
        self.terms
            .iter()
            .find(|(m, _)| mono_degree(m) == 0)
            .map(|&(_, c)| c)
            .unwrap_or(0)
    }

    /// Leading term in the given order.
    pub fn lead(&self, order: MonomialOrder) -> Option<(&Monomial, u64)> {
        match order {
            MonomialOrder::DegRevLex => self.terms.first().map(|(m, c)| (m, *c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp_mono(&a.0, &b.0))
                .map(|(m, c)| (m, *c)),
        }
    }

    fn check_compat(&self, other: &Self) {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compat(other);
        merge(self, other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compat(other);
        merge(self, other, true)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for (_, c) in &mut out.terms {
            *c = self.field.neg(*c);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = self.field.reduce_u64(c);
        if c == 0 {
            return Self::zero(self.field, self.nvars);
        }
        let mut out = self.clone();
        for (_, k) in &mut out.terms {
            *k = self.field.mul(*k, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compat(other);
        let mut map: HashMap<Monomial, u64> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                let e = map.entry(m).or_insert(0);
                *e = self.field.add(*e, self.field.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        Polynomial { field: self.field, nvars: self.nvars, terms }
    }

    pub fn mul_term(&self, m: &[u32], c: u64) -> Self {
        let c = self.field.reduce_u64(c);
        if c == 0 {
            return Self::zero(self.field, self.nvars);
        }
        let mut out = self.clone();
        for (mm, cc) in &mut out.terms {
            for (e, d) in mm.iter_mut().zip(m) {
                *e += d;
            }
            *cc = self.field.mul(*cc, c);
        }
        out.terms.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        out
    }

    /// Exact division; returns `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        self.check_compat(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dm, dc) = {
            let (m, c) = d.lead(MonomialOrder::DegRevLex)?;
            (m.clone(), c)
        };
        let dcinv = self.field.inv(dc);
        let mut rem = self.clone();
        let mut quo = Self::zero(self.field, self.nvars);
        while let Some((rm, rc)) = rem.lead(MonomialOrder::DegRevLex) {
            let mut q = Vec::with_capacity(self.nvars);
            for (a, b) in rm.iter().zip(&dm) {
                if a < b {
                    return None;
                }
                q.push(a - b);
            }
            let qc = self.field.mul(rc, dcinv);
            quo.terms.push((q.clone(), qc));
            rem = rem.sub(&d.mul_term(&q, qc));
        }
        quo.terms.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        Some(quo)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Re-embed into a ring with `extra` more variables appended.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let nvars = self.nvars + extra;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mm = m.clone();
                mm.resize(nvars, 0);
                (mm, *c)
            })
            .collect();
        Self::from_terms(self.field, nvars, terms)
    }

    /// Drop the trailing `extra` variables; every term must be free of them.
    pub fn shrink_vars(&self, extra: usize) -> Self {
        let nvars = self.nvars - extra;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert!(m[nvars..].iter().all(|&e| e == 0));
                (m[..nvars].to_vec(), *c)
            })
            .collect();
        Self::from_terms(self.field, nvars, terms)
    }

    pub fn uses_var(&self, idx: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[idx] != 0)
    }

    /// Evaluate at the origin: the constant term as a scalar.
    pub fn eval_zero(&self) -> u64 {
        self.constant_term()
    }

    pub fn parse(field: FieldSpec, nvars: usize, text: &str) -> Result<Self> {
        parse_poly(field, nvars, text)
    }
}

fn merge(a: &Polynomial, b: &Polynomial, subtract: bool) -> Polynomial {
    let field = a.field;
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = if i >= a.terms.len() {
            false
        } else if j >= b.terms.len() {
            true
        } else {
            match cmp_degrevlex(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let bc = if subtract {
                        field.neg(b.terms[j].1)
                    } else {
                        b.terms[j].1
                    };
                    let c = field.add(a.terms[i].1, bc);
                    if c != 0 {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
            }
        };
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else {
            let c = if subtract {
                field.neg(b.terms[j].1)
            } else {
                b.terms[j].1
            };
            out.push((b.terms[j].0.clone(), c));
            j += 1;
        }
    }
    Polynomial { field, nvars: a.nvars, terms: out }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let is_const = mono_degree(m) == 0;
            let mut wrote = false;
            if *c != 1 || is_const {
                write!(f, "{}", c)?;
                wrote = true;
            }
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "x{}", v + 1)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

fn parse_poly(field: FieldSpec, nvars: usize, text: &str) -> Result<Polynomial> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut terms: Vec<(Monomial, u64)> = Vec::new();
    let mut sign: i64 = 1;
    let mut expect_term = true;

    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };

    while pos < bytes.len() {
        let ch = bytes[pos] as char;
        if ch.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if expect_term {
            // term := factor (`*` factor)*
            let mut coeff: i64 = sign;
            let mut mono = vec![0u32; nvars];
            let mut any = false;
            loop {
                while pos < bytes.len() && (bytes[pos] as char).is_ascii_whitespace() {
                    pos += 1;
                }
                if pos >= bytes.len() {
                    break;
                }
                let c = bytes[pos] as char;
                if c.is_ascii_digit() {
                    let start = pos;
                    while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                        pos += 1;
                    }
                    let n: i64 = text[start..pos]
                        .parse()
                        .map_err(|_| err(start, "integer overflow"))?;
                    coeff = coeff
                        .checked_mul(n.rem_euclid(field.p() as i64))
                        .ok_or_else(|| err(start, "integer overflow"))?;
                    any = true;
                } else if c == 'x' {
                    let start = pos;
                    pos += 1;
                    let ds = pos;
                    while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                        pos += 1;
                    }
                    if ds == pos {
                        return Err(err(start, "expected variable index after 'x'"));
                    }
                    let idx: usize =
                        text[ds..pos].parse().map_err(|_| err(ds, "bad variable index"))?;
                    if idx == 0 || idx > nvars {
                        return Err(err(start, "variable index out of range"));
                    }
                    let mut exp = 1u32;
                    if pos < bytes.len() && bytes[pos] as char == '^' {
                        pos += 1;
                        let es = pos;
                        while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                            pos += 1;
                        }
                        if es == pos {
                            return Err(err(pos, "expected exponent after '^'"));
                        }
                        exp = text[es..pos].parse().map_err(|_| err(es, "bad exponent"))?;
                    }
                    mono[idx - 1] += exp;
                    any = true;
                } else {
                    return Err(err(pos, "expected coefficient or variable"));
                }
                // optional `*`
                let mut look = pos;
                while look < bytes.len() && (bytes[look] as char).is_ascii_whitespace() {
                    look += 1;
                }
                if look < bytes.len() && bytes[look] as char == '*' {
                    pos = look + 1;
                } else {
                    break;
                }
            }
            if !any {
                return Err(err(pos, "empty term"));
            }
            terms.push((mono, field.reduce(coeff)));
            expect_term = false;
            sign = 1;
        } else {
            match ch {
                '+' => {
                    sign = 1;
                    expect_term = true;
                    pos += 1;
                }
                '-' => {
                    sign = -1;
                    expect_term = true;
                    pos += 1;
                }
                _ => return Err(err(pos, "expected '+' between terms")),
            }
        }
    }
    if expect_term && !terms.is_empty() {
        return Err(err(bytes.len(), "dangling operator"));
    }
    if terms.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    Ok(Polynomial::from_terms(field, nvars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn char_two_cancellation() {
        // (x1 + x2) + (x1 + x2) = 0 over GF(2)
        let f = gf(2);
        let a = Polynomial::var(f, 2, 0).add(&Polynomial::var(f, 2, 1));
        assert!(a.add(&a).is_zero());
    }

    #[test]
    fn single_term_product() {
        let f = gf(5);
        let x1 = Polynomial::var(f, 2, 0);
        let x2 = Polynomial::var(f, 2, 1);
        let p = x1.mul(&x2);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.to_string(), "x1*x2");
    }

    #[test]
    fn frobenius_square_gf2() {
        // (x1+1)^2 = x1^2 + 1 over GF(2)
        let f = gf(2);
        let a = Polynomial::var(f, 1, 0).add(&Polynomial::one(f, 1));
        let sq = a.mul(&a);
        let expected = Polynomial::parse(f, 1, "x1^2 + 1").unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn parse_display_roundtrip() {
        let f = gf(3);
        let p = Polynomial::parse(f, 2, "x1^2*x2 + 2*x2").unwrap();
        assert_eq!(p.to_string(), "x1^2*x2 + 2*x2");
        assert_eq!(Polynomial::parse(f, 2, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn exact_division() {
        let f = gf(2);
        let a = Polynomial::parse(f, 2, "x1^2 + 1").unwrap();
        let d = Polynomial::parse(f, 2, "x1 + 1").unwrap();
        let q = a.exact_div(&d).unwrap();
        assert_eq!(q, d);
        let b = Polynomial::parse(f, 2, "x1^2 + x2").unwrap();
        assert!(b.exact_div(&d).is_none());
    }

    #[test]
    fn degrevlex_sorting() {
        let f = gf(7);
        let p = Polynomial::parse(f, 2, "x2 + x1 + x1*x2 + 3").unwrap();
        assert_eq!(p.to_string(), "x1*x2 + x1 + x2 + 3");
    }
}

//! Formal Lie expressions: trees over constants `a1..ar` and variables
//! `x1..xn`, with brackets, sums and integer scalars. Parsing reports byte
//! positions; evaluation is generic over any algebra providing the ring of
//! operations.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieExpr {
    /// `a{i+1}`
    Const(usize),
    /// `x{i+1}`
    Var(usize),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Sum(Box<LieExpr>, Box<LieExpr>),
    Neg(Box<LieExpr>),
    Scale(u64, Box<LieExpr>),
}

impl LieExpr {
    pub fn bracket(a: LieExpr, b: LieExpr) -> LieExpr {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn sum(a: LieExpr, b: LieExpr) -> LieExpr {
        LieExpr::Sum(Box::new(a), Box::new(b))
    }

    /// Number of distinct variables: 1 + max index used, 0 if none.
    pub fn arity(&self) -> usize {
        match self {
            LieExpr::Const(_) => 0,
            LieExpr::Var(i) => i + 1,
            LieExpr::Bracket(a, b) | LieExpr::Sum(a, b) => a.arity().max(b.arity()),
            LieExpr::Neg(a) | LieExpr::Scale(_, a) => a.arity(),
        }
    }

    /// Largest constant index used, as 1 + max, 0 if none.
    pub fn max_const(&self) -> usize {
        match self {
            LieExpr::Const(i) => i + 1,
            LieExpr::Var(_) => 0,
            LieExpr::Bracket(a, b) | LieExpr::Sum(a, b) => a.max_const().max(b.max_const()),
            LieExpr::Neg(a) | LieExpr::Scale(_, a) => a.max_const(),
        }
    }

    /// Substitute expressions for the variables.
    pub fn substitute(&self, args: &[LieExpr]) -> Result<LieExpr> {
        Ok(match self {
            LieExpr::Const(i) => LieExpr::Const(*i),
            LieExpr::Var(i) => args
                .get(*i)
                .cloned()
                .ok_or(Error::ArityMismatch { expected: i + 1, got: args.len() })?,
            LieExpr::Bracket(a, b) => {
                LieExpr::bracket(a.substitute(args)?, b.substitute(args)?)
            }
            LieExpr::Sum(a, b) => LieExpr::sum(a.substitute(args)?, b.substitute(args)?),
            LieExpr::Neg(a) => LieExpr::Neg(Box::new(a.substitute(args)?)),
            LieExpr::Scale(c, a) => LieExpr::Scale(*c, Box::new(a.substitute(args)?)),
        })
    }

    pub fn parse(text: &str) -> Result<LieExpr> {
        let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
        p.skip_ws();
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }
}

/// Operations an algebra must provide to evaluate expressions.
pub trait LieAlgebraOps {
    type Elt: Clone;
    fn zero_elt(&self) -> Self::Elt;
    fn constant(&self, idx: usize) -> Result<Self::Elt>;
    fn add_elt(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn neg_elt(&self, a: &Self::Elt) -> Self::Elt;
    fn scale_elt(&self, c: u64, a: &Self::Elt) -> Self::Elt;
    fn bracket_elt(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
}

/// Evaluate `expr` at `point` (values for `x1..xn`) inside `alg`.
pub fn evaluate_expr<A: LieAlgebraOps>(
    alg: &A,
    expr: &LieExpr,
    point: &[A::Elt],
) -> Result<A::Elt> {
    Ok(match expr {
        LieExpr::Const(i) => alg.constant(*i)?,
        LieExpr::Var(i) => point
            .get(*i)
            .cloned()
            .ok_or(Error::ArityMismatch { expected: i + 1, got: point.len() })?,
        LieExpr::Bracket(a, b) => {
            let u = evaluate_expr(alg, a, point)?;
            let v = evaluate_expr(alg, b, point)?;
            alg.bracket_elt(&u, &v)
        }
        LieExpr::Sum(a, b) => {
            let u = evaluate_expr(alg, a, point)?;
            let v = evaluate_expr(alg, b, point)?;
            alg.add_elt(&u, &v)
        }
        LieExpr::Neg(a) => {
            let u = evaluate_expr(alg, a, point)?;
            alg.neg_elt(&u)
        }
        LieExpr::Scale(c, a) => {
            let u = evaluate_expr(alg, a, point)?;
            alg.scale_elt(*c, &u)
        }
    })
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| self.err("number out of range"))
    }

    fn index(&mut self) -> Result<usize> {
        let n = self.number()?;
        if n == 0 {
            return Err(self.err("indices start at 1"));
        }
        Ok((n - 1) as usize)
    }

    fn expr(&mut self) -> Result<LieExpr> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = LieExpr::sum(acc, t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = LieExpr::sum(acc, LieExpr::Neg(Box::new(t)));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LieExpr> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let t = self.term()?;
                Ok(LieExpr::Neg(Box::new(t)))
            }
            Some(b) if b.is_ascii_digit() => {
                let c = self.number()?;
                self.skip_ws();
                self.expect(b'*')?;
                self.skip_ws();
                let a = self.atom()?;
                Ok(LieExpr::Scale(c, Box::new(a)))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<LieExpr> {
        self.skip_ws();
        match self.peek() {
            Some(b'a') => {
                self.pos += 1;
                Ok(LieExpr::Const(self.index()?))
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(LieExpr::Var(self.index()?))
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.expr()?;
                self.skip_ws();
                self.expect(b',')?;
                let v = self.expr()?;
                self.skip_ws();
                self.expect(b']')?;
                Ok(LieExpr::bracket(u, v))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                self.expect(b')')?;
                Ok(e)
            }
            _ => Err(self.err("expected 'a<i>', 'x<i>', '[' or '('")),
        }
    }
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Const(i) => write!(f, "a{}", i + 1),
            LieExpr::Var(i) => write!(f, "x{}", i + 1),
            LieExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            LieExpr::Sum(a, b) => match b.as_ref() {
                LieExpr::Neg(inner) => write!(f, "{a} - {inner}"),
                _ => write!(f, "{a} + {b}"),
            },
            LieExpr::Neg(a) => write!(f, "-{a}"),
            LieExpr::Scale(c, a) => write!(f, "{c}*{a}"),
        }
    }
}

//! Evaluation of parsed expressions in a configured algebra.

use std::fmt;
use std::str::FromStr;

use crate::coeffs::{FieldSpec, Scalar};
use crate::cohn::{AlgebraContext, CohnElement, Monomial};
use crate::error::{Error, Result};
use crate::expr::{parse, Expr, Generator};
use crate::leavitt::LeavittElement;
use crate::matrix::{Algebra, Matrix};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Cohn,
    Leavitt,
    Matrix,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "cohn" => Ok(Mode::Cohn),
            "leavitt" => Ok(Mode::Leavitt),
            "matrix" => Ok(Mode::Matrix),
            other => Err(Error::Malformed(format!(
                "unknown mode {other:?} (expected cohn, leavitt, or matrix)"
            ))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cohn => "cohn",
            Mode::Leavitt => "leavitt",
            Mode::Matrix => "matrix",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SessionConfig {
    pub n: usize,
    pub d: usize,
    pub spec: FieldSpec,
    pub mode: Mode,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig { n: 2, d: 1, spec: FieldSpec::rationals(), mode: Mode::Leavitt }
    }
}

impl SessionConfig {
    pub fn new(n: usize, d: usize, spec: FieldSpec, mode: Mode) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidAlphabet(n));
        }
        if d == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(SessionConfig { n, d, spec, mode })
    }

    pub fn context(&self) -> AlgebraContext {
        AlgebraContext::new(self.spec, self.n).expect("validated at construction")
    }
}

/// The result of evaluating an expression in one of the three modes.
/// Matrix mode embeds the element as `ℓ · I_d`.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Cohn(CohnElement),
    Leavitt(LeavittElement),
    Matrix(Matrix<LeavittElement>),
}

impl Value {
    /// `T` in Cohn mode, `τ` in Leavitt mode, `τ_d` in matrix mode.
    pub fn trace(&self) -> Result<Scalar> {
        match self {
            Value::Cohn(c) => Ok(c.trace()),
            Value::Leavitt(l) => l.tau(),
            Value::Matrix(m) => m.tau_d(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Cohn(c) => c.is_zero(),
            Value::Leavitt(l) => l.is_zero(),
            Value::Matrix(m) => m.is_zero(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Cohn(c) => c.fmt(f),
            Value::Leavitt(l) => l.fmt(f),
            Value::Matrix(m) => m.fmt(f),
        }
    }
}

fn word(ctx: AlgebraContext, letters: &[usize]) -> Result<Word> {
    Word::new(ctx.n(), letters.to_vec())
}

/// Evaluates `e` in the algebra `A`. Leavitt evaluation projects after every
/// operation, so intermediate results stay in normal form.
pub fn evaluate_in<A: Algebra>(e: &Expr, ctx: AlgebraContext) -> Result<A> {
    let spec = ctx.spec();
    Ok(match e {
        Expr::Int(i) => A::from_cohn(&CohnElement::constant(ctx, Scalar::from_bigint(i, spec))?),
        Expr::Fraction(a, b) => {
            A::from_cohn(&CohnElement::constant(ctx, Scalar::from_fraction(a, b, spec)?)?)
        }
        Expr::Gen(g, i) => {
            let w = word(ctx, &[*i])?;
            let m = match g {
                Generator::X => Monomial::new(w, Word::empty(ctx.n()))?,
                Generator::Y => Monomial::new(Word::empty(ctx.n()), w)?,
            };
            A::from_cohn(&CohnElement::monomial(ctx, m))
        }
        Expr::Word(g, letters) => {
            let w = word(ctx, letters)?;
            let m = match g {
                Generator::X => Monomial::new(w, Word::empty(ctx.n()))?,
                Generator::Y => Monomial::new(Word::empty(ctx.n()), w)?,
            };
            A::from_cohn(&CohnElement::monomial(ctx, m))
        }
        Expr::Neg(a) => evaluate_in::<A>(a, ctx)?.neg(),
        Expr::Add(a, b) => evaluate_in::<A>(a, ctx)?.add(&evaluate_in(b, ctx)?)?,
        Expr::Sub(a, b) => evaluate_in::<A>(a, ctx)?.sub(&evaluate_in(b, ctx)?)?,
        Expr::Mul(a, b) => evaluate_in::<A>(a, ctx)?.mul(&evaluate_in(b, ctx)?)?,
        Expr::Bracket(a, b) => evaluate_in::<A>(a, ctx)?.bracket(&evaluate_in(b, ctx)?)?,
        Expr::Pow(a, k) => {
            let base: A = evaluate_in(a, ctx)?;
            let mut acc = base.clone();
            for _ in 1..*k {
                acc = acc.mul(&base)?;
            }
            acc
        }
        Expr::Group(a) => evaluate_in(a, ctx)?,
    })
}

pub fn evaluate(e: &Expr, cfg: &SessionConfig) -> Result<Value> {
    let ctx = cfg.context();
    Ok(match cfg.mode {
        Mode::Cohn => Value::Cohn(evaluate_in(e, ctx)?),
        Mode::Leavitt => Value::Leavitt(evaluate_in(e, ctx)?),
        Mode::Matrix => {
            let l: LeavittElement = evaluate_in(e, ctx)?;
            Value::Matrix(Matrix::scalar_matrix(&l, cfg.d)?)
        }
    })
}

/// Parses and evaluates `text` in `A`.
pub fn parse_element<A: Algebra>(text: &str, ctx: AlgebraContext) -> Result<A> {
    evaluate_in(&parse(text)?, ctx)
}

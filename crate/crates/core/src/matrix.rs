//! Square matrices over a Cohn or Leavitt algebra.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::coeffs::Scalar;
use crate::cohn::{element_binop, AlgebraContext, CohnElement};
use crate::error::{Error, Result};
use crate::leavitt::{normal_form, LeavittElement};

/// The ring operations a matrix entry needs.
pub trait Algebra: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero(ctx: AlgebraContext) -> Self;
    fn one(ctx: AlgebraContext) -> Self;
    /// Image of a Cohn element: the element itself, or its class mod `M`.
    fn from_cohn(c: &CohnElement) -> Self;
    fn context(&self) -> AlgebraContext;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn scale(&self, s: &Scalar) -> Result<Self>;
    fn neg(&self) -> Self;

    fn bracket(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }
}

impl Algebra for CohnElement {
    fn zero(ctx: AlgebraContext) -> Self {
        CohnElement::zero(ctx)
    }
    fn one(ctx: AlgebraContext) -> Self {
        CohnElement::one(ctx)
    }
    fn from_cohn(c: &CohnElement) -> Self {
        c.clone()
    }
    fn context(&self) -> AlgebraContext {
        CohnElement::context(self)
    }
    fn is_zero(&self) -> bool {
        CohnElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)
    }
    fn scale(&self, s: &Scalar) -> Result<Self> {
        CohnElement::scale(self, s)
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Algebra for LeavittElement {
    fn zero(ctx: AlgebraContext) -> Self {
        LeavittElement::zero(ctx)
    }
    fn one(ctx: AlgebraContext) -> Self {
        LeavittElement::one(ctx)
    }
    fn from_cohn(c: &CohnElement) -> Self {
        normal_form(c)
    }
    fn context(&self) -> AlgebraContext {
        LeavittElement::context(self)
    }
    fn is_zero(&self) -> bool {
        LeavittElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)
    }
    fn scale(&self, s: &Scalar) -> Result<Self> {
        LeavittElement::scale(self, s)
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// A dense `d x d` matrix, stored row-major. Indices are 1-based in the
/// public API.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<A> {
    ctx: AlgebraContext,
    d: usize,
    entries: Vec<A>,
}

impl<A: Algebra> Matrix<A> {
    pub fn zero(ctx: AlgebraContext, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(Matrix { ctx, d, entries: vec![A::zero(ctx); d * d] })
    }

    pub fn identity(ctx: AlgebraContext, d: usize) -> Result<Self> {
        Self::scalar_matrix(&A::one(ctx), d)
    }

    /// `ℓ` on the diagonal, zero elsewhere.
    pub fn scalar_matrix(value: &A, d: usize) -> Result<Self> {
        let mut m = Self::zero(value.context(), d)?;
        for i in 0..d {
            m.entries[i * d + i] = value.clone();
        }
        Ok(m)
    }

    /// The matrix `ℓ ε_{i,j}`: `value` at `(i, j)`, zero elsewhere.
    pub fn unit(value: &A, i: usize, j: usize, d: usize) -> Result<Self> {
        let mut m = Self::zero(value.context(), d)?;
        let idx = m.index(i, j)?;
        m.entries[idx] = value.clone();
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<A>>) -> Result<Self> {
        let d = rows.len();
        let first = rows
            .first()
            .and_then(|r| r.first())
            .ok_or(Error::InvalidDimension)?;
        let ctx = first.context();
        let mut entries = Vec::with_capacity(d * d);
        for row in rows {
            if row.len() != d {
                return Err(Error::DimensionMismatch(d, row.len()));
            }
            for entry in row {
                ctx.check(&entry.context())?;
                entries.push(entry);
            }
        }
        Ok(Matrix { ctx, d, entries })
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    fn index(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || j == 0 || i > self.d || j > self.d {
            return Err(Error::IndexOutOfRange { i, j, d: self.d });
        }
        Ok((i - 1) * self.d + (j - 1))
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&A> {
        Ok(&self.entries[self.index(i, j)?])
    }

    pub fn rows(&self) -> impl Iterator<Item = &[A]> {
        self.entries.chunks(self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(A::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch(self.d, other.d));
        }
        self.ctx.check(&other.ctx)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&A, &A) -> Result<A>) -> Result<Self> {
        self.check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(Matrix { ctx: self.ctx, d: self.d, entries })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, A::add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, A::sub)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.d;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = A::zero(self.ctx);
                for k in 0..d {
                    let (a, b) = (&self.entries[i * d + k], &other.entries[k * d + j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { ctx: self.ctx, d, entries })
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        let entries = self.entries.iter().map(|a| a.scale(s)).collect::<Result<_>>()?;
        Ok(Matrix { ctx: self.ctx, d: self.d, entries })
    }

    /// `Σ_i tr(B_ii)` for an entry-level trace `tr`.
    pub fn trace_by(&self, tr: impl Fn(&A) -> Result<Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::zero(self.ctx.spec());
        for i in 0..self.d {
            acc = acc.checked_add(&tr(&self.entries[i * self.d + i])?)?;
        }
        Ok(acc)
    }

    pub fn map<B: Algebra>(&self, f: impl Fn(&A) -> B) -> Matrix<B> {
        Matrix {
            ctx: self.ctx,
            d: self.d,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl Matrix<LeavittElement> {
    /// `τ_d(B) = Σ_i τ(B_ii)`; requires `char K | n - 1`.
    pub fn tau_d(&self) -> Result<Scalar> {
        self.trace_by(LeavittElement::tau)
    }
}

impl Matrix<CohnElement> {
    /// `T_d(B) = Σ_i T(B_ii)`, defined for every field.
    pub fn trace_t(&self) -> Scalar {
        self.trace_by(|a| Ok(a.trace())).expect("T is total")
    }
}

pub fn tau_d(b: &Matrix<LeavittElement>) -> Result<Scalar> {
    b.tau_d()
}

impl<A: Algebra> fmt::Display for Matrix<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, entry) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{entry}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

element_binop!(Matrix<CohnElement>, Add, add, checked_add);
element_binop!(Matrix<CohnElement>, Sub, sub, checked_sub);
element_binop!(Matrix<CohnElement>, Mul, mul, checked_mul);
element_binop!(Matrix<LeavittElement>, Add, add, checked_add);
element_binop!(Matrix<LeavittElement>, Sub, sub, checked_sub);
element_binop!(Matrix<LeavittElement>, Mul, mul, checked_mul);

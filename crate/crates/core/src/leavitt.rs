//! The Leavitt algebra `L_K(n) = C_K(n) / M`, where `M` is the ideal generated
//! by `1 - Σ x_i y_i`.
//!
//! Cosets are represented by their normal form: the unique representative
//! in which no monomial `x_I y_J` has `I` ending in `n` and `J` starting in
//! `n`. The rewrite rule
//!
//! ```text
//! x_{I'n} y_{nJ'}  ->  x_{I'} y_{J'} - Σ_{i<n} x_{I'i} y_{iJ'}
//! ```
//!
//! is the relation `x_n y_n = 1 - Σ_{i<n} x_i y_i` applied at the junction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::coeffs::{FieldSpec, Scalar};
use crate::cohn::{accumulate, element_binop, ideal_generator, AlgebraContext, CohnElement, Monomial};
use crate::error::{Error, Result};
use crate::words::Word;

fn has_junction(m: &Monomial, n: usize) -> bool {
    m.xs().last() == Some(n) && m.ys().first() == Some(n)
}

/// Splits a junction monomial `x_{I'n} y_{nJ'}` into `(I', J')`.
fn strip_junction(m: &Monomial) -> (Word, Word) {
    let n = m.xs().alphabet_size();
    let xs = m.xs().letters();
    let ys = m.ys().letters();
    let prefix = Word::new(n, xs[..xs.len() - 1].to_vec()).expect("letters already valid");
    let suffix = Word::new(n, ys[1..].to_vec()).expect("letters already valid");
    (prefix, suffix)
}

/// The replacement terms for `c * x_{I'n} y_{nJ'}`: the shorter monomial
/// `x_{I'} y_{J'}` (which may itself carry a junction) and the junction-free
/// terms `-c * x_{I'i} y_{iJ'}` for `i < n`.
fn rewrite(m: &Monomial, c: &Scalar) -> (Monomial, Vec<(Monomial, Scalar)>) {
    let n = m.xs().alphabet_size();
    let (prefix, suffix) = strip_junction(m);
    let shorter = Monomial::new(prefix.clone(), suffix.clone()).expect("same alphabet");
    let minus = -c;
    let rest = (1..n)
        .map(|i| {
            let letter = Word::letter(n, i).expect("i < n");
            let xs = prefix.concat(&letter).expect("same alphabet");
            let ys = letter.concat(&suffix).expect("same alphabet");
            (Monomial::new(xs, ys).expect("same alphabet"), minus.clone())
        })
        .collect();
    (shorter, rest)
}

/// One application of the junction rule: `coeff * x_{left} (1 - Σ x_i y_i) y_{right}`
/// is what the rewrite added to the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub coeff: Scalar,
    pub left: Word,
    pub right: Word,
}

/// Re-expands a rewrite trace to `Σ coeff · x_left · m0 · y_right` in `C_K(n)`.
pub fn expand_certificate(ctx: AlgebraContext, steps: &[RewriteStep]) -> Result<CohnElement> {
    let m0 = ideal_generator(ctx);
    let mut acc = CohnElement::zero(ctx);
    for step in steps {
        let left = CohnElement::monomial(ctx, Monomial::new(step.left.clone(), Word::empty(ctx.n()))?);
        let right = CohnElement::monomial(ctx, Monomial::new(Word::empty(ctx.n()), step.right.clone())?);
        let term = left.checked_mul(&m0)?.checked_mul(&right)?.scale(&step.coeff)?;
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

fn reduce(c: &CohnElement, mut trace: Option<&mut Vec<RewriteStep>>) -> CohnElement {
    let ctx = c.context();
    let n = ctx.n();
    let mut done = BTreeMap::new();
    let mut pending: Vec<(Monomial, Scalar)> = c.terms().map(|(m, s)| (m.clone(), s.clone())).collect();
    while let Some((m, s)) = pending.pop() {
        if !has_junction(&m, n) {
            accumulate(&mut done, m, s);
            continue;
        }
        let (shorter, rest) = rewrite(&m, &s);
        if let Some(steps) = trace.as_deref_mut() {
            let (left, right) = (shorter.xs().clone(), shorter.ys().clone());
            steps.push(RewriteStep { coeff: s.clone(), left, right });
        }
        for (m, s) in rest {
            accumulate(&mut done, m, s);
        }
        pending.push((shorter, s));
    }
    CohnElement::from_map(ctx, done)
}

/// Projects `c` onto its Leavitt normal form.
pub fn normal_form(c: &CohnElement) -> LeavittElement {
    LeavittElement(reduce(c, None))
}

/// Normal form together with the rewrite trace; `nf - c` equals
/// [`expand_certificate`] of the returned steps.
pub fn normal_form_with_certificate(c: &CohnElement) -> (LeavittElement, Vec<RewriteStep>) {
    let mut steps = Vec::new();
    let nf = reduce(c, Some(&mut steps));
    (LeavittElement(nf), steps)
}

/// Rewrites the whole element in place, picking a uniformly random junction
/// term at every step. Terms are merged after each step, so cancellations
/// happen at different times than in [`normal_form`].
pub fn normal_form_randomized<R: Rng + ?Sized>(c: &CohnElement, rng: &mut R) -> LeavittElement {
    let ctx = c.context();
    let n = ctx.n();
    let mut terms: BTreeMap<Monomial, Scalar> = c.clone().into_terms();
    loop {
        let junctions: Vec<&Monomial> = terms.keys().filter(|m| has_junction(m, n)).collect();
        if junctions.is_empty() {
            break;
        }
        let pick = junctions[rng.gen_range(0..junctions.len())].clone();
        let s = terms.remove(&pick).expect("picked from keys");
        let (shorter, rest) = rewrite(&pick, &s);
        accumulate(&mut terms, shorter, s);
        for (m, s) in rest {
            accumulate(&mut terms, m, s);
        }
    }
    LeavittElement(CohnElement::from_map(ctx, terms))
}

/// An element of `L_K(n)`, stored as its normal-form representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeavittElement(CohnElement);

impl LeavittElement {
    pub fn zero(ctx: AlgebraContext) -> Self {
        LeavittElement(CohnElement::zero(ctx))
    }

    pub fn one(ctx: AlgebraContext) -> Self {
        LeavittElement(CohnElement::one(ctx))
    }

    pub fn constant(ctx: AlgebraContext, c: Scalar) -> Result<Self> {
        Ok(LeavittElement(CohnElement::constant(ctx, c)?))
    }

    pub fn x(ctx: AlgebraContext, i: usize) -> Result<Self> {
        Ok(normal_form(&CohnElement::x(ctx, i)?))
    }

    pub fn y(ctx: AlgebraContext, i: usize) -> Result<Self> {
        Ok(normal_form(&CohnElement::y(ctx, i)?))
    }

    /// The class of `x_I y_J`.
    pub fn basis(ctx: AlgebraContext, xs: &[usize], ys: &[usize]) -> Result<Self> {
        Ok(normal_form(&CohnElement::basis(ctx, xs, ys)?))
    }

    pub fn rep(&self) -> &CohnElement {
        &self.0
    }

    pub fn into_rep(self) -> CohnElement {
        self.0
    }

    pub fn context(&self) -> AlgebraContext {
        self.0.context()
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Whether the representative is junction-free.
    pub fn is_normal(&self) -> bool {
        let n = self.n();
        self.0.terms().all(|(m, _)| !has_junction(m, n))
    }

    pub fn checked_add(&self, other: &LeavittElement) -> Result<LeavittElement> {
        // Sums of junction-free terms stay junction-free.
        Ok(LeavittElement(self.0.checked_add(&other.0)?))
    }

    pub fn checked_sub(&self, other: &LeavittElement) -> Result<LeavittElement> {
        Ok(LeavittElement(self.0.checked_sub(&other.0)?))
    }

    pub fn checked_mul(&self, other: &LeavittElement) -> Result<LeavittElement> {
        Ok(normal_form(&self.0.checked_mul(&other.0)?))
    }

    pub fn scale(&self, s: &Scalar) -> Result<LeavittElement> {
        Ok(LeavittElement(self.0.scale(s)?))
    }

    pub fn pow(&self, exp: u32) -> LeavittElement {
        let mut acc = LeavittElement::one(self.context());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn bracket(&self, other: &LeavittElement) -> Result<LeavittElement> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// The trace `τ(c + M) = T(c)`, defined only when `char K` divides `n - 1`.
    pub fn tau(&self) -> Result<Scalar> {
        let ctx = self.context();
        if !ctx.spec().divides(ctx.n() as i64 - 1) {
            return Err(Error::TraceUndefined {
                characteristic: ctx.spec().characteristic(),
                n: ctx.n(),
            });
        }
        Ok(self.0.trace())
    }
}

pub fn tau(a: &LeavittElement) -> Result<Scalar> {
    a.tau()
}

impl From<&CohnElement> for LeavittElement {
    fn from(c: &CohnElement) -> Self {
        normal_form(c)
    }
}

impl fmt::Display for LeavittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Neg for &LeavittElement {
    type Output = LeavittElement;
    fn neg(self) -> LeavittElement {
        LeavittElement(-&self.0)
    }
}

impl Neg for LeavittElement {
    type Output = LeavittElement;
    fn neg(self) -> LeavittElement {
        -&self
    }
}

element_binop!(LeavittElement, Add, add, checked_add);
element_binop!(LeavittElement, Sub, sub, checked_sub);
element_binop!(LeavittElement, Mul, mul, checked_mul);

/// Row reduction over the monomial support: whether `elements` are linearly
/// independent over their common field.
pub fn linearly_independent(elements: &[CohnElement]) -> Result<bool> {
    let Some(first) = elements.first() else {
        return Ok(true);
    };
    let ctx = first.context();
    // Each pivot row has its largest monomial as the pivot, with coefficient 1.
    let mut pivots: BTreeMap<Monomial, BTreeMap<Monomial, Scalar>> = BTreeMap::new();
    for e in elements {
        ctx.check(&e.context())?;
        let mut row: BTreeMap<Monomial, Scalar> = e.clone().into_terms();
        loop {
            let Some((lead, c)) = row.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
                return Ok(false);
            };
            match pivots.get(&lead) {
                Some(pivot_row) => {
                    for (m, pc) in pivot_row {
                        accumulate(&mut row, m.clone(), -(&c * pc));
                    }
                }
                None => {
                    let inv = c.inv()?;
                    let normalized = row.into_iter().map(|(m, s)| (m, &s * &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    Ok(true)
}

/// Whether the classes of `x_I` for the given distinct words are linearly
/// independent in `L_K(n)`.
pub fn independence_check(ctx: AlgebraContext, words: &[Word]) -> Result<bool> {
    let mut seen = std::collections::BTreeSet::new();
    for w in words {
        if w.alphabet_size() != ctx.n() {
            return Err(Error::AlphabetMismatch(ctx.n(), w.alphabet_size()));
        }
        if !seen.insert(w.clone()) {
            return Err(Error::DuplicateWord(w.to_string()));
        }
    }
    let classes: Vec<CohnElement> = words
        .iter()
        .map(|w| {
            let m = Monomial::new(w.clone(), Word::empty(ctx.n()))?;
            Ok(normal_form(&CohnElement::monomial(ctx, m)).into_rep())
        })
        .collect::<Result<_>>()?;
    linearly_independent(&classes)
}

/// The elements `[x_1, x_2^j]` for `1 <= j <= count`.
pub fn commutator_family(ctx: AlgebraContext, count: u32) -> Result<Vec<LeavittElement>> {
    let x1 = LeavittElement::x(ctx, 1)?;
    let x2 = LeavittElement::x(ctx, 2)?;
    let mut power = x2.clone();
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        out.push(x1.bracket(&power)?);
        power = power.checked_mul(&x2)?;
    }
    Ok(out)
}

/// Whether `{[x_1, x_2^j] : 1 <= j <= count}` is linearly independent.
pub fn dim_probe(count: u32, ctx: AlgebraContext) -> Result<bool> {
    if count == 0 {
        return Err(Error::Malformed("dim_probe needs at least one element".into()));
    }
    let family: Vec<CohnElement> = commutator_family(ctx, count)?
        .into_iter()
        .map(LeavittElement::into_rep)
        .collect();
    linearly_independent(&family)
}

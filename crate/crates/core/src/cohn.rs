//! The Cohn algebra `C_K(n)`: generators `x_i`, `y_i` subject to
//! `y_i x_j = δ_ij`, with free basis `{ x_I y_J }`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::words::{PrefixOrder, Word};

/// Coefficient field and alphabet size shared by every element of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    spec: FieldSpec,
    n: usize,
}

impl AlgebraContext {
    pub fn new(spec: FieldSpec, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidAlphabet(n));
        }
        Ok(AlgebraContext { spec, n })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn check(&self, other: &AlgebraContext) -> Result<()> {
        if self.spec != other.spec {
            Err(Error::FieldMismatch(self.spec, other.spec))
        } else if self.n != other.n {
            Err(Error::AlphabetMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn scalar(&self, m: i64) -> Scalar {
        Scalar::from_int(m, self.spec)
    }
}

/// The basis element `x_I y_J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    xs: Word,
    ys: Word,
}

impl Monomial {
    pub fn new(xs: Word, ys: Word) -> Result<Self> {
        if xs.alphabet_size() != ys.alphabet_size() {
            return Err(Error::AlphabetMismatch(xs.alphabet_size(), ys.alphabet_size()));
        }
        Ok(Monomial { xs, ys })
    }

    pub fn one(n: usize) -> Self {
        Monomial { xs: Word::empty(n), ys: Word::empty(n) }
    }

    pub fn xs(&self) -> &Word {
        &self.xs
    }

    pub fn ys(&self) -> &Word {
        &self.ys
    }

    pub fn is_one(&self) -> bool {
        self.xs.is_empty() && self.ys.is_empty()
    }

    /// `|I| - |J|` under `deg x_i = 1`, `deg y_i = -1`.
    pub fn degree(&self) -> i64 {
        self.xs.len() as i64 - self.ys.len() as i64
    }

    pub fn len(&self) -> usize {
        self.xs.len() + self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Product of two basis elements: zero or another basis element.
    ///
    /// With `J' = rev(J)`, `(x_I y_J)(x_K y_L)` is `x_{IM} y_L` when
    /// `K = J'M`, `x_I y_{rev(N) L}` when `J' = KN`, and zero otherwise.
    pub fn mul(&self, other: &Monomial) -> Result<Option<Monomial>> {
        let n = self.xs.alphabet_size();
        if n != other.xs.alphabet_size() {
            return Err(Error::AlphabetMismatch(n, other.xs.alphabet_size()));
        }
        let j_rev = self.ys.rev();
        Ok(match j_rev.compare(&other.xs)? {
            PrefixOrder::Incomparable => None,
            PrefixOrder::Equal => Some(Monomial {
                xs: self.xs.clone(),
                ys: other.ys.clone(),
            }),
            PrefixOrder::LeftPrefixOfRight(m) => Some(Monomial {
                xs: self.xs.concat(&m)?,
                ys: other.ys.clone(),
            }),
            PrefixOrder::RightPrefixOfLeft(rest) => Some(Monomial {
                xs: self.xs.clone(),
                ys: rest.rev().concat(&other.ys)?,
            }),
        })
    }

    /// `T(x_I y_J)`: whether `I = rev(J)`.
    pub fn is_trace_one(&self) -> bool {
        self.xs.len() == self.ys.len()
            && self.xs.letters().iter().eq(self.ys.letters().iter().rev())
    }
}

/// Canonical term order: degree, then the x-word, then the y-word, each
/// length-lexicographic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.xs.cmp(&other.xs))
            .then_with(|| self.ys.cmp(&other.ys))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.xs.is_empty(), self.ys.is_empty()) {
            (true, true) => f.write_str("1"),
            (false, true) => write!(f, "x{}", self.xs),
            (true, false) => write!(f, "y{}", self.ys),
            (false, false) => write!(f, "x{}*y{}", self.xs, self.ys),
        }
    }
}

/// A finite linear combination of basis monomials with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohnElement {
    ctx: AlgebraContext,
    terms: BTreeMap<Monomial, Scalar>,
}

pub(crate) fn accumulate(terms: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl CohnElement {
    pub fn zero(ctx: AlgebraContext) -> Self {
        CohnElement { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: AlgebraContext) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.n))
    }

    pub fn constant(ctx: AlgebraContext, c: Scalar) -> Result<Self> {
        Self::from_terms(ctx, [(Monomial::one(ctx.n), c)])
    }

    pub fn monomial(ctx: AlgebraContext, m: Monomial) -> Self {
        assert_eq!(m.xs.alphabet_size(), ctx.n, "monomial alphabet differs from context");
        let mut terms = BTreeMap::new();
        terms.insert(m, Scalar::one(ctx.spec));
        CohnElement { ctx, terms }
    }

    pub fn from_terms(
        ctx: AlgebraContext,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            if c.spec() != ctx.spec {
                return Err(Error::FieldMismatch(ctx.spec, c.spec()));
            }
            if m.xs.alphabet_size() != ctx.n {
                return Err(Error::AlphabetMismatch(ctx.n, m.xs.alphabet_size()));
            }
            accumulate(&mut acc, m, c);
        }
        Ok(CohnElement { ctx, terms: acc })
    }

    /// `x_I y_J` as an element.
    pub fn basis(ctx: AlgebraContext, xs: &[usize], ys: &[usize]) -> Result<Self> {
        let m = Monomial::new(Word::new(ctx.n, xs.to_vec())?, Word::new(ctx.n, ys.to_vec())?)?;
        Ok(Self::monomial(ctx, m))
    }

    /// The generator `x_i`.
    pub fn x(ctx: AlgebraContext, i: usize) -> Result<Self> {
        Self::basis(ctx, &[i], &[])
    }

    /// The generator `y_i`.
    pub fn y(ctx: AlgebraContext, i: usize) -> Result<Self> {
        Self::basis(ctx, &[], &[i])
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn spec(&self) -> FieldSpec {
        self.ctx.spec
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ctx.spec))
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub(crate) fn from_map(ctx: AlgebraContext, terms: BTreeMap<Monomial, Scalar>) -> Self {
        CohnElement { ctx, terms }
    }

    pub fn checked_add(&self, other: &CohnElement) -> Result<CohnElement> {
        self.ctx.check(&other.ctx)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(CohnElement { ctx: self.ctx, terms })
    }

    pub fn checked_sub(&self, other: &CohnElement) -> Result<CohnElement> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, s: &Scalar) -> Result<CohnElement> {
        if s.spec() != self.ctx.spec {
            return Err(Error::FieldMismatch(self.ctx.spec, s.spec()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut terms, m.clone(), c * s);
        }
        Ok(CohnElement { ctx: self.ctx, terms })
    }

    pub fn checked_mul(&self, other: &CohnElement) -> Result<CohnElement> {
        self.ctx.check(&other.ctx)?;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(m) = a.mul(b)? {
                    accumulate(&mut terms, m, ca * cb);
                }
            }
        }
        Ok(CohnElement { ctx: self.ctx, terms })
    }

    pub fn pow(&self, exp: u32) -> CohnElement {
        let mut acc = CohnElement::one(self.ctx);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The Lie bracket `ab - ba`.
    pub fn bracket(&self, other: &CohnElement) -> Result<CohnElement> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// The trace `T`: the sum of coefficients on monomials `x_I y_J` with
    /// `I = rev(J)`.
    pub fn trace(&self) -> Scalar {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_trace_one())
            .fold(Scalar::zero(self.ctx.spec), |acc, (_, c)| &acc + c)
    }

    /// Homogeneous components keyed by degree; only nonzero components appear.
    pub fn degree_split(&self) -> BTreeMap<i64, CohnElement> {
        let mut parts: BTreeMap<i64, CohnElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| CohnElement::zero(self.ctx))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_split().len() <= 1
    }
}

/// Trace `T` on `C_K(n)`.
pub fn trace_t(a: &CohnElement) -> Scalar {
    a.trace()
}

/// The generator `1 - Σ x_i y_i` of the ideal `M`.
pub fn ideal_generator(ctx: AlgebraContext) -> CohnElement {
    let n = ctx.n;
    let minus_one = -Scalar::one(ctx.spec);
    let terms = std::iter::once((Monomial::one(n), Scalar::one(ctx.spec))).chain((1..=n).map(|i| {
        let w = Word::from_raw(n, vec![i]);
        (Monomial { xs: w.clone(), ys: w }, minus_one.clone())
    }));
    CohnElement::from_terms(ctx, terms).expect("terms built in context")
}

/// A reproducible pseudo-random element with at most `max_terms` terms whose
/// words have length at most `max_word_len`.
pub fn random_element(
    ctx: AlgebraContext,
    max_word_len: usize,
    max_terms: usize,
    seed: u64,
) -> CohnElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_element_with(&mut rng, ctx, max_word_len, max_terms)
}

pub fn random_element_with<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: AlgebraContext,
    max_word_len: usize,
    max_terms: usize,
) -> CohnElement {
    let mut terms = BTreeMap::new();
    for _ in 0..max_terms {
        let m = random_monomial_with(rng, ctx.n, max_word_len);
        accumulate(&mut terms, m, random_nonzero_scalar(rng, ctx.spec));
    }
    CohnElement { ctx, terms }
}

pub fn random_monomial_with<R: Rng + ?Sized>(rng: &mut R, n: usize, max_word_len: usize) -> Monomial {
    let word = |rng: &mut R| {
        let len = rng.gen_range(0..=max_word_len);
        Word::from_raw(n, (0..len).map(|_| rng.gen_range(1..=n)).collect())
    };
    let xs = word(rng);
    let ys = word(rng);
    Monomial { xs, ys }
}

pub fn random_nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, spec: FieldSpec) -> Scalar {
    match spec.characteristic() {
        0 => {
            let mut numer = rng.gen_range(1..=4i64);
            if rng.gen_bool(0.5) {
                numer = -numer;
            }
            let denom = if rng.gen_bool(0.25) { 2 } else { 1 };
            Scalar::from_fraction(&numer.into(), &denom.into(), spec).expect("nonzero denominator")
        }
        p => Scalar::from_int(rng.gen_range(1..p.min(1 << 31)) as i64, spec),
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Monomial, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if m.is_one() {
            f.write_str(&magnitude.value_string())?;
        } else if magnitude.is_one() {
            write!(f, "{m}")?;
        } else {
            write!(f, "{}*{m}", magnitude.value_string())?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for CohnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter())
    }
}

impl Neg for &CohnElement {
    type Output = CohnElement;
    fn neg(self) -> CohnElement {
        CohnElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for CohnElement {
    type Output = CohnElement;
    fn neg(self) -> CohnElement {
        -&self
    }
}

macro_rules! element_binop {
    ($ty:ty, $trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}
pub(crate) use element_binop;

element_binop!(CohnElement, Add, add, checked_add);
element_binop!(CohnElement, Sub, sub, checked_sub);
element_binop!(CohnElement, Mul, mul, checked_mul);

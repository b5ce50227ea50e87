//! Exact coefficient fields: the rationals and the prime fields `F_p`.
//!
//! Every [`Scalar`] carries its [`FieldSpec`]. Mixing scalars from different
//! fields is an error for the checked methods and a panic for the operator
//! impls.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field, identified by its characteristic (0 for `Q`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::NotPrime(characteristic))
        }
    }

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::NotPrime(0));
        }
        Self::new(p)
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    /// Whether the characteristic divides `m`, i.e. whether `m * 1_K = 0`.
    ///
    /// In characteristic 0 this holds only for `m = 0`.
    pub fn divides(&self, m: i64) -> bool {
        char_divides(*self, m)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.characteristic)
        }
    }
}

/// Deterministic Miller-Rabin; the witness set is exact for all `u64`.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if m % p == 0 {
            return m == p;
        }
    }
    let mut d = m - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, m);
        if x == 1 || x == m - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, m);
            if x == m - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue(u64),
}

/// An exact element of a [`FieldSpec`].
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// `num-rational` invariant); residues are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    spec: FieldSpec,
    value: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b` in their common field.
pub fn field_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// The image of `m` under the canonical ring map `Z -> K`.
pub fn from_int(m: i64, spec: FieldSpec) -> Scalar {
    Scalar::from_bigint(&BigInt::from(m), spec)
}

pub fn char_divides(spec: FieldSpec, m: i64) -> bool {
    match spec.characteristic {
        0 => m == 0,
        p => (m as i128).rem_euclid(p as i128) == 0,
    }
}

impl Scalar {
    pub fn zero(spec: FieldSpec) -> Self {
        Self::from_bigint(&BigInt::zero(), spec)
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::from_bigint(&BigInt::one(), spec)
    }

    pub fn from_int(m: i64, spec: FieldSpec) -> Self {
        from_int(m, spec)
    }

    pub fn from_bigint(m: &BigInt, spec: FieldSpec) -> Self {
        let value = match spec.characteristic {
            0 => Value::Rational(BigRational::from_integer(m.clone())),
            p => Value::Residue(
                m.mod_floor(&BigInt::from(p))
                    .to_u64()
                    .expect("residue fits in u64"),
            ),
        };
        Scalar { spec, value }
    }

    /// `numer / denom` in `spec`; fails when `denom` vanishes in the field.
    pub fn from_fraction(numer: &BigInt, denom: &BigInt, spec: FieldSpec) -> Result<Self> {
        Self::from_bigint(numer, spec).checked_div(&Self::from_bigint(denom, spec))
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_one(),
            Value::Residue(r) => *r == 1,
        }
    }

    /// The canonical residue in `[0, p)`, or `None` over `Q`.
    pub fn residue(&self) -> Option<u64> {
        match self.value {
            Value::Residue(r) => Some(r),
            Value::Rational(_) => None,
        }
    }

    /// The reduced rational value, or `None` over `F_p`.
    pub fn rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            Value::Residue(_) => None,
        }
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(&self.value, Value::Rational(r) if r.is_negative())
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.spec, other.spec))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Residue(a), Value::Residue(b)) => {
                let p = self.spec.characteristic;
                Value::Residue(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => unreachable!("field spec fixes the representation"),
        };
        Ok(Scalar { spec: self.spec, value })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Residue(a), Value::Residue(b)) => {
                Value::Residue(mul_mod(*a, *b, self.spec.characteristic))
            }
            _ => unreachable!("field spec fixes the representation"),
        };
        Ok(Scalar { spec: self.spec, value })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.spec));
        }
        let value = match &self.value {
            Value::Rational(r) => Value::Rational(r.recip()),
            // Fermat: a^(p-2) = a^-1 for a != 0.
            Value::Residue(a) => {
                let p = self.spec.characteristic;
                Value::Residue(pow_mod(*a, p - 2, p))
            }
        };
        Ok(Scalar { spec: self.spec, value })
    }

    fn neg_ref(&self) -> Scalar {
        let value = match &self.value {
            Value::Rational(r) => Value::Rational(-r),
            Value::Residue(0) => Value::Residue(0),
            Value::Residue(a) => Value::Residue(self.spec.characteristic - a),
        };
        Scalar { spec: self.spec, value }
    }

    /// Parses `"a/b"`, `"a"`, `"r mod p"`, or a bare residue.
    pub fn parse(text: &str, spec: FieldSpec) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Malformed(format!("scalar {text:?}"));
        if let Some((r, p)) = text.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            if p != spec.characteristic {
                return Err(Error::FieldMismatch(FieldSpec::new(p)?, spec));
            }
            let r = BigInt::from_str(r.trim()).map_err(|_| bad())?;
            return Ok(Scalar::from_bigint(&r, spec));
        }
        match text.split_once('/') {
            Some((a, b)) => {
                let a = BigInt::from_str(a.trim()).map_err(|_| bad())?;
                let b = BigInt::from_str(b.trim()).map_err(|_| bad())?;
                Scalar::from_fraction(&a, &b, spec)
            }
            None => Ok(Scalar::from_bigint(
                &BigInt::from_str(text).map_err(|_| bad())?,
                spec,
            )),
        }
    }

    /// The bare value without the field suffix: `"5/6"`, `"-2"`, or `"3"`.
    pub fn value_string(&self) -> String {
        match &self.value {
            Value::Rational(r) if r.is_integer() => r.numer().to_string(),
            Value::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Value::Residue(a) => a.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Value::Rational(_) => f.write_str(&self.value_string()),
            Value::Residue(a) => write!(f, "{} mod {}", a, self.spec.characteristic),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

//! Simplicity of the Lie algebra `[M_d(L_K(n))⁻, M_d(L_K(n))⁻]`.
//!
//! The derived algebra is simple exactly when `char K | n - 1` and
//! `char K ∤ d`. Otherwise the identity matrix is a sum of brackets, and
//! [`build_witness`] writes one down. When it is simple, `τ_d` kills every
//! bracket but not the identity, so no such witness exists.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeffs::{FieldSpec, Scalar};
use crate::cohn::AlgebraContext;
use crate::error::{Error, Result};
use crate::eval::parse_element;
use crate::leavitt::LeavittElement;
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictReason {
    CharDividesN1AndNotD,
    CharNotDividesN1,
    CharDividesD,
}

impl fmt::Display for VerdictReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub simple: bool,
    pub reason: VerdictReason,
    pub spec: FieldSpec,
    pub n: usize,
    pub d: usize,
}

fn check_params(n: usize, d: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidAlphabet(n));
    }
    if d == 0 {
        return Err(Error::InvalidDimension);
    }
    Ok(())
}

pub fn is_simple(spec: FieldSpec, n: usize, d: usize) -> Result<SimplicityVerdict> {
    check_params(n, d)?;
    let divides_n1 = spec.divides(n as i64 - 1);
    let divides_d = spec.divides(d as i64);
    let reason = if !divides_n1 {
        VerdictReason::CharNotDividesN1
    } else if divides_d {
        VerdictReason::CharDividesD
    } else {
        VerdictReason::CharDividesN1AndNotD
    };
    Ok(SimplicityVerdict { simple: divides_n1 && !divides_d, reason, spec, n, d })
}

/// Matrix pairs `(A_i, A'_i)` claimed to satisfy `Σ [A_i, A'_i] = I_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketWitness {
    pub ctx: AlgebraContext,
    pub d: usize,
    pub pairs: Vec<(Matrix<LeavittElement>, Matrix<LeavittElement>)>,
}

/// Builds the identity witness for a non-simple configuration.
///
/// When `char K ∤ n - 1` the pairs are `((n-1)^{-1} y_i ε_jj, x_i ε_jj)`,
/// using `Σ_i [y_i, x_i] = (n - 1)·1`. Otherwise `char K | d` and the pairs
/// are `(j·ε_{j,j+1}, ε_{j+1,j})` for `j < d`, whose brackets sum to
/// `diag(1, ..., 1, -(d-1)) = I_d`.
pub fn build_witness(spec: FieldSpec, n: usize, d: usize) -> Result<BracketWitness> {
    let verdict = is_simple(spec, n, d)?;
    if verdict.simple {
        return Err(Error::NoWitness { spec, n, d });
    }
    let ctx = AlgebraContext::new(spec, n)?;
    let mut pairs = Vec::new();
    match verdict.reason {
        VerdictReason::CharNotDividesN1 => {
            let inv = Scalar::from_int(n as i64 - 1, spec).inv()?;
            for j in 1..=d {
                for i in 1..=n {
                    let left = LeavittElement::y(ctx, i)?.scale(&inv)?;
                    let right = LeavittElement::x(ctx, i)?;
                    pairs.push((Matrix::unit(&left, j, j, d)?, Matrix::unit(&right, j, j, d)?));
                }
            }
        }
        VerdictReason::CharDividesD => {
            assert!(d >= 2, "characteristic dividing d forces d >= 2");
            let one = LeavittElement::one(ctx);
            for j in 1..d {
                let left = LeavittElement::constant(ctx, Scalar::from_int(j as i64, spec))?;
                pairs.push((Matrix::unit(&left, j, j + 1, d)?, Matrix::unit(&one, j + 1, j, d)?));
            }
        }
        VerdictReason::CharDividesN1AndNotD => unreachable!("simple verdicts return early"),
    }
    Ok(BracketWitness { ctx, d, pairs })
}

/// `Σ [A_i, A'_i]` over the witness pairs.
pub fn bracket_sum(w: &BracketWitness) -> Result<Matrix<LeavittElement>> {
    let mut acc = Matrix::zero(w.ctx, w.d)?;
    for (a, b) in &w.pairs {
        for m in [a, b] {
            if m.dim() != w.d {
                return Err(Error::DimensionMismatch(w.d, m.dim()));
            }
            w.ctx.check(&m.context())?;
        }
        acc = acc.checked_add(&a.bracket(b)?)?;
    }
    Ok(acc)
}

/// Whether the witness brackets sum to exactly `I_d`.
pub fn verify_witness(w: &BracketWitness) -> Result<bool> {
    Ok(bracket_sum(w)? == Matrix::identity(w.ctx, w.d)?)
}

/// The element `[[x_1, x_2], [x_1, x_2^2]]`.
pub fn nested_commutator(ctx: AlgebraContext) -> Result<LeavittElement> {
    let x1 = LeavittElement::x(ctx, 1)?;
    let x2 = LeavittElement::x(ctx, 2)?;
    x1.bracket(&x2)?.bracket(&x1.bracket(&x2.pow(2))?)
}

/// Whether `[[x_1, x_2], [x_1, x_2^2]] ε_{1,1}` is nonzero in `M_d(L_K(n))`.
/// The bracket is formed at matrix level.
pub fn nontriviality_probe(spec: FieldSpec, n: usize, d: usize) -> Result<bool> {
    check_params(n, d)?;
    let ctx = AlgebraContext::new(spec, n)?;
    let x1 = Matrix::unit(&LeavittElement::x(ctx, 1)?, 1, 1, d)?;
    let x2 = Matrix::unit(&LeavittElement::x(ctx, 2)?, 1, 1, d)?;
    let x2sq = x2.checked_mul(&x2)?;
    let probe = x1.bracket(&x2)?.bracket(&x1.bracket(&x2sq)?)?;
    Ok(!probe.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDocument {
    pub characteristic: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDocument {
    pub left: Vec<Vec<String>>,
    pub right: Vec<Vec<String>>,
}

/// Serialized witness: the field, `n`, `d`, and each pair as matrices of
/// element strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub field: FieldDocument,
    pub n: usize,
    pub d: usize,
    pub pairs: Vec<PairDocument>,
}

pub fn matrix_to_strings(m: &Matrix<LeavittElement>) -> Vec<Vec<String>> {
    m.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

pub fn matrix_from_strings(rows: &[Vec<String>], ctx: AlgebraContext) -> Result<Matrix<LeavittElement>> {
    let rows = rows
        .iter()
        .map(|row| row.iter().map(|s| parse_element(s, ctx)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// Reads a JSON array of arrays of element strings as a matrix over `L_K(n)`.
pub fn matrix_from_json(text: &str, ctx: AlgebraContext) -> Result<Matrix<LeavittElement>> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("matrix file: {e}")))?;
    matrix_from_strings(&rows, ctx)
}

pub fn matrix_to_json(m: &Matrix<LeavittElement>) -> String {
    serde_json::to_string(&matrix_to_strings(m)).expect("strings serialize")
}

impl BracketWitness {
    pub fn to_document(&self) -> WitnessDocument {
        WitnessDocument {
            field: FieldDocument { characteristic: self.ctx.spec().characteristic() },
            n: self.ctx.n(),
            d: self.d,
            pairs: self
                .pairs
                .iter()
                .map(|(a, b)| PairDocument { left: matrix_to_strings(a), right: matrix_to_strings(b) })
                .collect(),
        }
    }

    pub fn from_document(doc: &WitnessDocument) -> Result<Self> {
        let spec = FieldSpec::new(doc.field.characteristic)?;
        let ctx = AlgebraContext::new(spec, doc.n)?;
        if doc.d == 0 {
            return Err(Error::InvalidDimension);
        }
        let mut pairs = Vec::with_capacity(doc.pairs.len());
        for p in &doc.pairs {
            let a = matrix_from_strings(&p.left, ctx)?;
            let b = matrix_from_strings(&p.right, ctx)?;
            for m in [&a, &b] {
                if m.dim() != doc.d {
                    return Err(Error::DimensionMismatch(doc.d, m.dim()));
                }
            }
            pairs.push((a, b));
        }
        Ok(BracketWitness { ctx, d: doc.d, pairs })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: WitnessDocument =
            serde_json::from_str(text).map_err(|e| Error::Malformed(format!("witness: {e}")))?;
        Self::from_document(&doc)
    }
}

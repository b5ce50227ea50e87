use thiserror::Error;

use crate::coeffs::FieldSpec;
use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero in {0}")]
    DivisionByZero(FieldSpec),
    #[error("alphabet size must be at least 2, got {0}")]
    InvalidAlphabet(usize),
    #[error("alphabet mismatch: n = {0} vs n = {1}")]
    AlphabetMismatch(usize, usize),
    #[error("letter {letter} outside the alphabet 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("matrix dimension must be at least 1")]
    InvalidDimension,
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix index ({i}, {j}) outside 1..={d}")]
    IndexOutOfRange { i: usize, j: usize, d: usize },
    #[error("trace on L(n) is undefined: characteristic {characteristic} does not divide n - 1 = {}", n - 1)]
    TraceUndefined { characteristic: u64, n: usize },
    #[error("duplicate word {0}")]
    DuplicateWord(String),
    #[error("the Lie algebra is simple for {spec}, n = {n}, d = {d}; no identity witness exists")]
    NoWitness { spec: FieldSpec, n: usize, d: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

//! Exact arithmetic in the Cohn algebras `C_K(n)`, the Leavitt algebras
//! `L_K(n)`, and matrix rings `M_d(L_K(n))` over `Q` and prime fields, with
//! a decision procedure and explicit bracket witnesses for the simplicity
//! of the Lie algebra `[M_d(L_K(n))⁻, M_d(L_K(n))⁻]`.

pub mod coeffs;
pub mod cohn;
pub mod error;
pub mod eval;
pub mod expr;
pub mod leavitt;
pub mod matrix;
pub mod simplicity;
pub mod words;

pub use coeffs::{char_divides, field_arith, from_int, ArithOp, FieldSpec, Scalar};
pub use cohn::{ideal_generator, random_element, trace_t, AlgebraContext, CohnElement, Monomial};
pub use error::{Error, Result};
pub use eval::{evaluate, evaluate_in, parse_element, Mode, SessionConfig, Value};
pub use expr::{parse, Expr, ParseError};
pub use leavitt::{dim_probe, independence_check, normal_form, tau, LeavittElement};
pub use matrix::{tau_d, Algebra, Matrix};
pub use simplicity::{
    build_witness, is_simple, nontriviality_probe, verify_witness, BracketWitness,
    SimplicityVerdict, VerdictReason,
};
pub use words::{PrefixOrder, Word};

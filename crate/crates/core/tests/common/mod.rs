//! Test-only oracles, independent of the library's product and trace code.

#![allow(dead_code)]

use leavitt_core::{AlgebraContext, CohnElement, Monomial, Scalar, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    X(usize),
    Y(usize),
}

/// The generator string `x_{i1} .. x_{it} y_{j1} .. y_{js}` of `x_I y_J`.
pub fn spell(m: &Monomial) -> Vec<Gen> {
    m.xs()
        .letters()
        .iter()
        .map(|&i| Gen::X(i))
        .chain(m.ys().letters().iter().map(|&j| Gen::Y(j)))
        .collect()
}

/// Rewrites `y_i x_j -> δ_ij` anywhere in the string until no `y x` pair is
/// left. `None` means the string collapsed to zero.
pub fn rewrite_string(mut s: Vec<Gen>) -> Option<Vec<Gen>> {
    loop {
        let hit = s
            .windows(2)
            .position(|w| matches!(w, [Gen::Y(_), Gen::X(_)]));
        let Some(k) = hit else {
            return Some(s);
        };
        match (s[k], s[k + 1]) {
            (Gen::Y(i), Gen::X(j)) if i == j => {
                s.drain(k..k + 2);
            }
            _ => return None,
        }
    }
}

/// Reads an `x..x y..y` string back as a basis monomial.
pub fn unspell(n: usize, s: &[Gen]) -> Monomial {
    let split = s.iter().position(|g| matches!(g, Gen::Y(_))).unwrap_or(s.len());
    let xs = s[..split]
        .iter()
        .map(|g| match g {
            Gen::X(i) => *i,
            Gen::Y(_) => panic!("x after y in a reduced string"),
        })
        .collect();
    let ys = s[split..]
        .iter()
        .map(|g| match g {
            Gen::Y(j) => *j,
            Gen::X(_) => panic!("x after y in a reduced string"),
        })
        .collect();
    Monomial::new(Word::new(n, xs).unwrap(), Word::new(n, ys).unwrap()).unwrap()
}

pub fn oracle_mul_monomials(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let n = a.xs().alphabet_size();
    let mut s = spell(a);
    s.extend(spell(b));
    rewrite_string(s).map(|r| unspell(n, &r))
}

pub fn oracle_mul(a: &CohnElement, b: &CohnElement) -> CohnElement {
    let ctx = a.context();
    let mut terms = Vec::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            if let Some(m) = oracle_mul_monomials(ma, mb) {
                terms.push((m, ca * cb));
            }
        }
    }
    CohnElement::from_terms(ctx, terms).unwrap()
}

/// `T` straight from its definition on the spelled-out string: the x-letters
/// read forwards equal the y-letters read backwards.
pub fn oracle_trace(a: &CohnElement) -> Scalar {
    let mut acc = Scalar::zero(a.spec());
    for (m, c) in a.terms() {
        let s = spell(m);
        let xs: Vec<usize> = s.iter().filter_map(|g| if let Gen::X(i) = g { Some(*i) } else { None }).collect();
        let mut ys: Vec<usize> = s.iter().filter_map(|g| if let Gen::Y(j) = g { Some(*j) } else { None }).collect();
        ys.reverse();
        if xs == ys {
            acc = &acc + c;
        }
    }
    acc
}

pub fn ctx(p: u64, n: usize) -> AlgebraContext {
    AlgebraContext::new(leavitt_core::FieldSpec::new(p).unwrap(), n).unwrap()
}

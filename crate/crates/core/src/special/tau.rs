use std::collections::HashMap;


use crate::error::{Error, Result};
use crate::invariants::SymFnQT;
use crate::qsym::{Basis, QSymFn, Word};
use crate::rational::{binomial, factorial, Rational};
use crate::schur::SymFn;

/// Memo table for the prefix recursion behind `tau`, keyed by word.
#[derive(Debug, Default)]
pub struct TauCache {
    memo: HashMap<Word, SymFn>,
}

impl TauCache {
    pub fn new() -> Self {
        TauCache::default()
    }

    /// The symmetric function `P(a)` attached to a `U` word.
    ///
    /// `P(()) = 1`; for `d = len(a) > 0` it is `(-1)^(d+1)` times the degree
    /// `< d` part of `sum_{i<d} C(d,i) (-1)^i P(a[..i]) sigma^(|a| - |a[..i]|)`.
    pub fn p_vector(&mut self, word: &Word) -> SymFn {
        if let Some(f) = self.memo.get(word) {
            return f.clone();
        }
        let d = word.len();
        let value = if d == 0 {
            SymFn::one()
        } else {
            let top = d - 1;
            let mut acc = SymFn::zero().with_bound(Some(top));
            for i in 0..d {
                let prefix = word.prefix(i);
                let gap = (word.weight() - prefix.weight()) as i64;
                let term = self.p_vector(&prefix).mul_sigma_pow(gap, top);
                let mut c = Rational::from_integer(binomial(d, i));
                if i % 2 == 1 {
                    c = -c;
                }
                acc.add_scaled(&term, &c);
            }
            if d % 2 == 0 {
                acc = acc.neg();
            }
            acc.into_exact()
        };
        self.memo.insert(word.clone(), value.clone());
        value
    }

    /// `tau(U_a) = sum_i P(a[..i]) q^|a[..i]| t^i / (i! (d-i)!)`.
    pub fn tau_word(&mut self, word: &Word) -> SymFnQT {
        let d = word.len();
        let mut out = SymFnQT::zero();
        for i in 0..=d {
            let prefix = word.prefix(i);
            let c = Rational::new(1.into(), factorial(i) * factorial(d - i));
            out.add_slice(prefix.weight(), i as u64, &self.p_vector(&prefix).scale(&c));
        }
        out
    }
}

/// `P(a)` with a fresh cache.
pub fn tau_p_vector(word: &Word) -> SymFn {
    TauCache::new().p_vector(word)
}

fn require_u(f: &QSymFn) -> Result<()> {
    if f.basis() != Basis::U {
        return Err(Error::BasisMismatch {
            expected: "U",
            found: f.basis().name(),
        });
    }
    Ok(())
}

/// The linear map `QSym -> Sym[q,t]` taking `G[X]` to `H[X]`.
pub fn tau(f: &QSymFn) -> Result<SymFnQT> {
    require_u(f)?;
    let mut cache = TauCache::new();
    let mut out = SymFnQT::zero();
    for (w, c) in f.terms() {
        out = out.add(&cache.tau_word(w).scale(c));
    }
    Ok(out)
}

/// Recovers `P` from a combination of 0/1 `U` words: for each word, the
/// `t^len` coefficient of `tau` at `q = 1`.
pub fn xi(f: &QSymFn) -> Result<SymFn> {
    require_u(f)?;
    let mut cache = TauCache::new();
    let mut out = SymFn::zero();
    for (w, c) in f.terms() {
        if w.letters().iter().any(|&a| a > 1) {
            return Err(Error::InvalidWord {
                word: w.letters().iter().map(|&a| a as u64).collect(),
                reason: "xi is defined on 0/1 words only",
            });
        }
        let top = cache
            .tau_word(w)
            .at_q_one()
            .remove(&(w.len() as u64))
            .unwrap_or_else(SymFn::zero);
        out.add_scaled(&top, c);
    }
    Ok(out)
}

/// Checks `tau(U_a U_b) = tau(U_a) tau(U_b)`; returns the defect.
pub fn tau_product_defect(a: &Word, b: &Word) -> Result<SymFnQT> {
    let fa = QSymFn::basis_element(Basis::U, a.clone())?;
    let fb = QSymFn::basis_element(Basis::U, b.clone())?;
    let lhs = tau(&crate::qsym::p_product(&fa, &fb))?;
    let rhs = tau(&fa)?.mul(&tau(&fb)?);
    Ok(lhs.sub(&rhs))
}

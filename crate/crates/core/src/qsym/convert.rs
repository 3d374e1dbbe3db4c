//! `P <-> M` transitions, dual to the exponential/logarithm relations
//! between noncommutative `h` and `p`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

use super::qsymfn::{Basis, QSymFn};
use super::word::Word;

fn block_word(blocks: &[&[u32]]) -> Word {
    Word(blocks.iter().map(|b| b.iter().sum()).collect())
}

/// `P_b = sum over cuts b = b_1...b_r of M_{(|b_1|,...,|b_r|)} / prod l(b_i)!`.
pub fn p_to_m(f: &QSymFn) -> Result<QSymFn> {
    if f.basis() != Basis::P {
        return Err(Error::BasisMismatch {
            expected: "P",
            found: f.basis().name(),
        });
    }
    let mut out = QSymFn::zero(Basis::M);
    for (w, c) in f.terms() {
        for blocks in w.block_cuts() {
            let den: BigInt = blocks.iter().map(|b| factorial(b.len())).product();
            out.add_term_unchecked(block_word(&blocks), c / Rational::from_integer(den));
        }
    }
    Ok(out)
}

/// `M_b = sum over cuts of (-1)^{l(b)-r} P_{(|b_1|,...,|b_r|)} / prod l(b_i)`.
pub fn m_to_p(f: &QSymFn) -> Result<QSymFn> {
    if f.basis() != Basis::M {
        return Err(Error::BasisMismatch {
            expected: "M",
            found: f.basis().name(),
        });
    }
    let mut out = QSymFn::zero(Basis::P);
    for (w, c) in f.terms() {
        for blocks in w.block_cuts() {
            let den: BigInt = blocks.iter().map(|b| BigInt::from(b.len())).product();
            let sign = if (w.len() - blocks.len()) % 2 == 0 { 1 } else { -1 };
            out.add_term_unchecked(block_word(&blocks), c * Rational::new(sign.into(), den));
        }
    }
    Ok(out)
}

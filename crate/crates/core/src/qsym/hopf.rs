//! Shuffle product, deconcatenation coproduct and antipode.

use crate::error::Result;
use crate::rational::{int, Rational};

use super::qsymfn::{Basis, QSymFn, Tensor};
use super::word::Word;

/// Brings both operands to a common basis: `U` and `P` stay put when they
/// agree, anything else goes through `P`.
fn common(f: &QSymFn, g: &QSymFn) -> (QSymFn, QSymFn) {
    match (f.basis(), g.basis()) {
        (a, b) if a == b && a != Basis::M => (f.clone(), g.clone()),
        _ => (f.to_p(), g.to_p()),
    }
}

/// `P_a P_b = sum over shuffles`. Works verbatim on `U` words since the
/// index shift commutes with shuffling.
pub fn p_product(f: &QSymFn, g: &QSymFn) -> QSymFn {
    let (f, g) = common(f, g);
    let mut out = QSymFn::zero(f.basis());
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            let cab = ca * cb;
            for (w, m) in a.shuffles(b) {
                out.add_term_unchecked(w, &cab * int(m as i64));
            }
        }
    }
    out
}

/// `Delta(P_a) = sum_{bc = a} P_b (x) P_c`.
pub fn p_coproduct(f: &QSymFn) -> Tensor {
    let mut out = Tensor::zero(f.basis());
    for (w, c) in f.terms() {
        for (l, r) in w.deconcatenations() {
            out.add_term(l, r, c.clone());
        }
    }
    out
}

/// Which antipode formula to apply on the `P` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AntipodeConvention {
    /// `P_a -> (-1)^{l(a)} P_a`, no reversal.
    #[default]
    Unreversed,
    /// `P_a -> (-1)^{l(a)} P_{reverse(a)}`, the convention satisfying the
    /// antipode axiom for the shuffle/deconcatenation bialgebra.
    Reversed,
}

pub fn p_antipode(f: &QSymFn) -> QSymFn {
    p_antipode_with(f, AntipodeConvention::default())
}

pub fn p_antipode_with(f: &QSymFn, convention: AntipodeConvention) -> QSymFn {
    let f = if f.basis() == Basis::M { f.to_p() } else { f.clone() };
    let mut out = QSymFn::zero(f.basis());
    for (w, c) in f.terms() {
        let sign = if w.len() % 2 == 0 { int(1) } else { int(-1) };
        let target = match convention {
            AntipodeConvention::Unreversed => w.clone(),
            AntipodeConvention::Reversed => w.reversed(),
        };
        out.add_term_unchecked(target, c * sign);
    }
    out
}

/// Componentwise product `(a (x) b)(c (x) d) = ac (x) bd`.
pub fn tensor_product(x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::zero(x.basis);
    for ((a, b), c1) in &x.terms {
        for ((c, d), c2) in &y.terms {
            let c12 = c1 * c2;
            for (l, ml) in a.shuffles(c) {
                for (r, mr) in b.shuffles(d) {
                    out.add_term(l.clone(), r, &c12 * int((ml * mr) as i64));
                }
            }
        }
    }
    out
}

/// `(counit (x) id)`.
pub fn counit_left(t: &Tensor) -> QSymFn {
    let mut out = QSymFn::zero(t.basis);
    for ((l, r), c) in &t.terms {
        if l.is_empty() {
            out.add_term_unchecked(r.clone(), c.clone());
        }
    }
    out
}

/// `(id (x) counit)`.
pub fn counit_right(t: &Tensor) -> QSymFn {
    let mut out = QSymFn::zero(t.basis);
    for ((l, r), c) in &t.terms {
        if r.is_empty() {
            out.add_term_unchecked(l.clone(), c.clone());
        }
    }
    out
}

/// `m . (S (x) id) . Delta` applied to `f`.
pub fn antipode_convolution(f: &QSymFn, convention: AntipodeConvention) -> QSymFn {
    let delta = p_coproduct(f);
    let mut out = QSymFn::zero(f.basis());
    for ((l, r), c) in &delta.terms {
        let sl = p_antipode_with(&QSymFn::from_terms(f.basis(), [(l.clone(), Rational::from_integer(1.into()))]).expect("same basis"), convention);
        let right = QSymFn::from_terms(f.basis(), [(r.clone(), c.clone())]).expect("same basis");
        for (w, v) in p_product(&sl, &right).terms() {
            out.add_term_unchecked(w.clone(), v.clone());
        }
    }
    out
}

/// Product of a list of factors, unit for the empty list.
pub fn product_all<'a>(basis: Basis, fs: impl IntoIterator<Item = &'a QSymFn>) -> Result<QSymFn> {
    Ok(fs.into_iter().fold(QSymFn::one(basis), |acc, f| p_product(&acc, f)))
}

/// `P_w` or `U_w` as a single term.
pub fn single(basis: Basis, w: Word) -> QSymFn {
    let mut f = QSymFn::zero(basis);
    f.add_term_unchecked(w, Rational::from_integer(1.into()));
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QSymFn {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(p_product(&q("P[1]"), &q("P[2]")), q("P[1,2] + P[2,1]"));
        assert_eq!(p_product(&q("P[1]"), &q("P[1]")), q("2*P[1,1]"));
        assert_eq!(p_product(&q("U[1]"), &q("U[1,0]")), q("2*U[1,1,0] + U[1,0,1]"));
    }

    #[test]
    fn coproduct_of_two_letters() {
        let t = p_coproduct(&q("P[2,1]"));
        assert_eq!(t.len(), 3);
        assert!(t.terms.contains_key(&(Word(vec![2]), Word(vec![1]))));
        assert!(t.terms.contains_key(&(Word::empty(), Word(vec![2, 1]))));
    }

    #[test]
    fn antipode_single_letter() {
        assert_eq!(p_antipode(&q("P[3]")), q("-P[3]"));
    }

    #[test]
    fn counit_identity() {
        let f = q("P[2,1] + 3*P[1] - 1/2*P[]");
        assert_eq!(counit_left(&p_coproduct(&f)), f);
        assert_eq!(counit_right(&p_coproduct(&f)), f);
    }

    #[test]
    fn mixed_bases_go_through_p() {
        let got = p_product(&q("U[0]"), &q("P[2]"));
        assert_eq!(got, q("P[1,2] + P[2,1]"));
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, push_term, serde_rational, Rational};
use crate::text::{parse_index_list, parse_terms};

use super::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    M,
    P,
    U,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::P => "P",
            Basis::U => "U",
        }
    }

    fn admits(self, w: &Word) -> bool {
        match self {
            Basis::U => true,
            Basis::M | Basis::P => w.letters().iter().all(|&a| a >= 1),
        }
    }
}

/// Finitely supported quasi-symmetric function in one of the `M`, `P`, `U`
/// bases. `U_a = P_{a+1}` letterwise.
#[derive(Clone, PartialEq, Eq)]
pub struct QSymFn {
    basis: Basis,
    terms: BTreeMap<Word, Rational>,
}

impl QSymFn {
    pub fn zero(basis: Basis) -> Self {
        QSymFn {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit, indexed by the empty word.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Word::empty()).expect("empty word fits every basis")
    }

    pub fn basis_element(basis: Basis, w: impl Into<Word>) -> Result<Self> {
        let mut f = Self::zero(basis);
        f.try_add_term(w.into(), Rational::one())?;
        Ok(f)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Word, Rational)>) -> Result<Self> {
        let mut f = Self::zero(basis);
        for (w, c) in terms {
            f.try_add_term(w, c)?;
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn try_add_term(&mut self, w: Word, c: Rational) -> Result<()> {
        if !self.basis.admits(&w) {
            return Err(Error::InvalidWord {
                word: w.letters().iter().map(|&a| a as u64).collect(),
                reason: "M and P words need letters >= 1",
            });
        }
        self.add_term_unchecked(w, c);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn same_basis(&self, other: &QSymFn) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.name(),
                found: other.basis.name(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &QSymFn) -> Result<QSymFn> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term_unchecked(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QSymFn) -> Result<QSymFn> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> QSymFn {
        let mut out = QSymFn::zero(self.basis);
        for (w, v) in &self.terms {
            out.add_term_unchecked(w.clone(), v * c);
        }
        out
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// `U -> P`: adds one to every letter.
    pub fn u_to_p(&self) -> Result<QSymFn> {
        match self.basis {
            Basis::U => Ok(QSymFn {
                basis: Basis::P,
                terms: self.terms.iter().map(|(w, c)| (w.shifted_up(), c.clone())).collect(),
            }),
            b => Err(Error::BasisMismatch {
                expected: "U",
                found: b.name(),
            }),
        }
    }

    /// `P -> U`: subtracts one from every letter.
    pub fn p_to_u(&self) -> Result<QSymFn> {
        if self.basis != Basis::P {
            return Err(Error::BasisMismatch {
                expected: "P",
                found: self.basis.name(),
            });
        }
        let mut out = QSymFn::zero(Basis::U);
        for (w, c) in &self.terms {
            out.add_term_unchecked(unshift(w)?, c.clone());
        }
        Ok(out)
    }

    /// Expresses `self` in the `P` basis.
    pub fn to_p(&self) -> QSymFn {
        match self.basis {
            Basis::P => self.clone(),
            Basis::U => self.u_to_p().expect("U basis"),
            Basis::M => super::convert::m_to_p(self).expect("M basis"),
        }
    }

    pub fn to_m(&self) -> QSymFn {
        match self.basis {
            Basis::M => self.clone(),
            _ => super::convert::p_to_m(&self.to_p()).expect("P basis"),
        }
    }

    /// Coefficient of the empty word (the counit).
    pub fn counit(&self) -> Rational {
        self.coeff(&Word::empty())
    }
}

/// `(a_1, ..., a_d) -> (a_1 - 1, ..., a_d - 1)`; every letter must be `>= 1`.
pub fn unshift(w: &Word) -> Result<Word> {
    w.letters()
        .iter()
        .map(|&a| a.checked_sub(1))
        .collect::<Option<Vec<_>>>()
        .map(Word)
        .ok_or_else(|| Error::InvalidWord {
            word: w.letters().iter().map(|&a| a as u64).collect(),
            reason: "shift below 1",
        })
}

impl fmt::Debug for QSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            push_term(&mut out, c, &format!("{}{w}", self.basis.name()), i == 0);
        }
        f.write_str(&out)
    }
}

impl FromStr for QSymFn {
    type Err = Error;

    /// Reads `c*U[...] + ...`; all terms must share a basis letter.
    fn from_str(s: &str) -> Result<Self> {
        let mut basis = None;
        let mut terms = Vec::new();
        for (c, body) in parse_terms(s)? {
            let b = match body.chars().next() {
                Some('M') => Basis::M,
                Some('P') => Basis::P,
                Some('U') => Basis::U,
                _ => return Err(Error::Parse(format!("expected M[..], P[..] or U[..], got `{body}`"))),
            };
            if basis.replace(b).is_some_and(|old| old != b) {
                return Err(Error::Parse("mixed bases in one expression".into()));
            }
            let w = parse_index_list(&body[1..])?.into_iter().map(|a| a as u32).collect::<Vec<_>>();
            terms.push((Word(w), c));
        }
        let basis = basis.ok_or_else(|| Error::Parse("no basis letter in expression".into()))?;
        QSymFn::from_terms(basis, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct QSymTerm {
    word: Vec<u32>,
    #[serde(with = "serde_rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct QSymDoc {
    basis: Basis,
    terms: Vec<QSymTerm>,
}

impl Serialize for QSymFn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QSymDoc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| QSymTerm {
                    word: w.0.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSymFn {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = QSymDoc::deserialize(d)?;
        QSymFn::from_terms(doc.basis, doc.terms.into_iter().map(|t| (Word(t.word), t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// Element of `QSym (x) QSym`, both factors in one basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    pub basis: Basis,
    pub terms: BTreeMap<(Word, Word), Rational>,
}

impl Tensor {
    pub fn zero(basis: Basis) -> Self {
        Tensor {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let v = self.terms.remove(&key).unwrap_or_else(Rational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render() {
        let f: QSymFn = "648*U[1,1,1,0,0,0] + 72*U[1,1,0,1,0,0]".parse().unwrap();
        assert_eq!(f.to_string(), "72*U[1,1,0,1,0,0] + 648*U[1,1,1,0,0,0]");
        assert_eq!(QSymFn::basis_element(Basis::U, vec![0]).unwrap().to_string(), "U[0]");
        assert_eq!(QSymFn::one(Basis::U).to_string(), "U[]");
    }

    #[test]
    fn positivity_enforced() {
        assert!(QSymFn::basis_element(Basis::P, vec![0]).is_err());
        assert!("P[1] + U[0]".parse::<QSymFn>().is_err());
    }

    #[test]
    fn shift_round_trip() {
        let u: QSymFn = "U[0] + 2*U[1,1,0]".parse().unwrap();
        let p = u.u_to_p().unwrap();
        assert_eq!(p.to_string(), "P[1] + 2*P[2,2,1]");
        assert_eq!(p.p_to_u().unwrap(), u);
        assert!(unshift(&Word(vec![0])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f: QSymFn = "1/2*M[2] + M[1,1]".parse().unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<QSymFn>(&text).unwrap(), f);
    }
}

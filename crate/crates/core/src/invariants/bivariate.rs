use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{binomial, push_term, Rational};
use crate::text::parse_terms;

/// Integer Laurent polynomial in two named variables.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    vars: [String; 2],
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePoly {
    pub fn zero(vars: [&str; 2]) -> Self {
        BivariatePoly {
            vars: [vars[0].to_string(), vars[1].to_string()],
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> [&str; 2] {
        [&self.vars[0], &self.vars[1]]
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.remove(&(a, b)).unwrap_or_else(BigInt::zero) + c;
        if !v.is_zero() {
            self.terms.insert((a, b), v);
        }
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivariatePoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &other.terms {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }

    /// `p(y, x)` with the variable names kept in place.
    pub fn swapped(&self) -> Self {
        BivariatePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn renamed(&self, vars: [&str; 2]) -> Self {
        BivariatePoly {
            vars: [vars[0].to_string(), vars[1].to_string()],
            terms: self.terms.clone(),
        }
    }

    /// Substitutes `first = new1 + shift1`, `second = new2 + shift2` by the
    /// binomial theorem. Only valid for nonnegative exponents.
    pub fn shift(&self, shifts: (i64, i64), vars: [&str; 2]) -> Result<Self> {
        if !self.is_polynomial() {
            return Err(Error::Malformed("cannot re-expand a Laurent polynomial".into()));
        }
        let mut out = BivariatePoly::zero(vars);
        for (&(a, b), c) in &self.terms {
            for i in 0..=a {
                let ci = binomial(a as usize, i as usize) * BigInt::from(shifts.0).pow((a - i) as u32);
                for j in 0..=b {
                    let cj = binomial(b as usize, j as usize) * BigInt::from(shifts.1).pow((b - j) as u32);
                    out.add_term(i, j, c * &ci * cj);
                }
            }
        }
        Ok(out)
    }

    /// Evaluates at a rational point; negative exponents need nonzero values.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let pow = |v: &Rational, e: i64| -> Rational {
            if e >= 0 {
                num_traits::pow(v.clone(), e as usize)
            } else {
                num_traits::pow(v.recip(), (-e) as usize)
            }
        };
        self.terms.iter().fold(Rational::zero(), |acc, (&(a, b), c)| {
            acc + Rational::from_integer(c.clone()) * pow(x, a) * pow(y, b)
        })
    }

    pub fn parse(text: &str, vars: [&str; 2]) -> Result<Self> {
        let mut out = BivariatePoly::zero(vars);
        if text.trim() == "0" {
            return Ok(out);
        }
        for (c, body) in parse_terms(text)? {
            if !c.is_integer() {
                return Err(Error::Parse(format!("non-integer coefficient in `{text}`")));
            }
            let (mut a, mut b) = (0i64, 0i64);
            for factor in body.split('*').map(str::trim).filter(|f| !f.is_empty()) {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n.trim(),
                        e.trim()
                            .trim_matches(|ch| ch == '(' || ch == ')')
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                if name == vars[0] {
                    a += exp;
                } else if name == vars[1] {
                    b += exp;
                } else {
                    return Err(Error::Parse(format!("unknown variable `{name}`")));
                }
            }
            out.add_term(a, b, c.to_integer());
        }
        Ok(out)
    }

    fn monomial(&self, a: i64, b: i64) -> String {
        let mut parts = Vec::new();
        for (v, e) in [(&self.vars[0], a), (&self.vars[1], b)] {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                e => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for BivariatePoly {
    /// Descending total degree, ties by descending first exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(i64, i64)> = self.terms.keys().collect();
        keys.sort_by(|x, y| (y.0 + y.1).cmp(&(x.0 + x.1)).then(y.0.cmp(&x.0)));
        let mut out = String::new();
        for (i, &&(a, b)) in keys.iter().enumerate() {
            let c = Rational::from_integer(self.terms[&(a, b)].clone());
            push_term(&mut out, &c, &self.monomial(a, b), i == 0);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct BiTerm {
    exp: [i64; 2],
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct BiDoc {
    vars: [String; 2],
    terms: Vec<BiTerm>,
}

impl Serialize for BivariatePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiDoc {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| BiTerm {
                    exp: [a, b],
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = BiDoc::deserialize(d)?;
        let mut out = BivariatePoly {
            vars: doc.vars,
            terms: BTreeMap::new(),
        };
        for t in doc.terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            out.add_term(t.exp[0], t.exp[1], c);
        }
        Ok(out)
    }
}

impl BivariatePoly {
    pub fn one(vars: [&str; 2]) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(0, 0, BigInt::one());
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_order() {
        let p = BivariatePoly::parse("x + y + x^2", ["x", "y"]).unwrap();
        assert_eq!(p.to_string(), "x^2 + x + y");
        let l = BivariatePoly::parse("u*v^-1 + 2", ["u", "v"]).unwrap();
        assert!(!l.is_polynomial());
        assert_eq!(l.to_string(), "u*v^-1 + 2");
    }

    #[test]
    fn shift_expands() {
        // (u)^2 with u = x - 1
        let p = BivariatePoly::parse("u^2", ["u", "v"]).unwrap();
        let q = p.shift((-1, -1), ["x", "y"]).unwrap();
        assert_eq!(q, BivariatePoly::parse("x^2 - 2*x + 1", ["x", "y"]).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = BivariatePoly::parse("3*q^2*t - t^-1", ["q", "t"]).unwrap();
        let back: BivariatePoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
    }
}

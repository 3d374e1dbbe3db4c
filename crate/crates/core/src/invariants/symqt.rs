use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{push_term, serde_rational, Rational};
use crate::schur::{Partition, SymFn};
use crate::text::{parse_index_list, parse_terms};

use super::bivariate::BivariatePoly;

/// Element of `Sym[q, t]`: a symmetric function for each monomial `q^a t^b`.
///
/// Stored by `(t, q)` exponent so iteration follows the rendering order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SymFnQT {
    slices: BTreeMap<(u64, u64), SymFn>,
}

impl SymFnQT {
    pub fn zero() -> Self {
        SymFnQT::default()
    }

    pub fn one() -> Self {
        let mut h = SymFnQT::zero();
        h.add_slice(0, 0, &SymFn::one());
        h
    }

    /// `f * q^q_exp * t^t_exp`.
    pub fn monomial(f: &SymFn, q_exp: u64, t_exp: u64) -> Self {
        let mut h = SymFnQT::zero();
        h.add_slice(q_exp, t_exp, f);
        h
    }

    pub fn is_zero(&self) -> bool {
        self.slices.is_empty()
    }

    /// Adds `f * q^q_exp * t^t_exp`.
    pub fn add_slice(&mut self, q_exp: u64, t_exp: u64, f: &SymFn) {
        let key = (t_exp, q_exp);
        let f = f.clone().into_exact();
        let sum = match self.slices.remove(&key) {
            Some(g) => g.add(&f),
            None => f,
        };
        if !sum.is_zero() {
            self.slices.insert(key, sum);
        }
    }

    pub fn add_term(&mut self, lambda: Partition, q_exp: u64, t_exp: u64, c: Rational) {
        let mut f = SymFn::zero();
        f.add_term(lambda, c);
        self.add_slice(q_exp, t_exp, &f);
    }

    /// The symmetric function multiplying `q^q_exp t^t_exp`.
    pub fn slice(&self, q_exp: u64, t_exp: u64) -> SymFn {
        self.slices.get(&(t_exp, q_exp)).cloned().unwrap_or_default()
    }

    /// `(q_exp, t_exp, coefficient)` for every nonzero slice.
    pub fn slices(&self) -> impl Iterator<Item = (u64, u64, &SymFn)> {
        self.slices.iter().map(|(&(t, q), f)| (q, t, f))
    }

    pub fn coeff(&self, lambda: &Partition, q_exp: u64, t_exp: u64) -> Rational {
        self.slices
            .get(&(t_exp, q_exp))
            .map(|f| f.coeff(lambda))
            .unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (q, t, f) in other.slices() {
            out.add_slice(q, t, f);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (q, t, f) in other.slices() {
            out.add_slice(q, t, &f.neg());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = SymFnQT::zero();
        for (q, t, f) in self.slices() {
            out.add_slice(q, t, &f.scale(c));
        }
        out
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymFnQT::zero();
        for (q1, t1, f) in self.slices() {
            for (q2, t2, g) in other.slices() {
                out.add_slice(q1 + q2, t1 + t2, &f.mul(g, None));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(SymFnQT::one(), |acc, _| acc.mul(self))
    }

    /// Evaluates the symmetric part at `q = 1`, leaving a polynomial in `t`.
    pub fn at_q_one(&self) -> BTreeMap<u64, SymFn> {
        let mut out: BTreeMap<u64, SymFn> = BTreeMap::new();
        for (_, t, f) in self.slices() {
            let e = out.entry(t).or_default();
            *e = e.add(f);
        }
        out.retain(|_, f| !f.is_zero());
        out
    }

    /// Applies the unit-coefficient functional to every slice.
    pub fn theta(&self) -> BivariatePoly {
        let mut out = BivariatePoly::zero(["q", "t"]);
        for (q, t, f) in self.slices() {
            let c = f.theta();
            if !c.is_zero() {
                assert!(c.is_integer(), "non-integral unit coefficient");
                out.add_term(q as i64, t as i64, c.to_integer());
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.slices.values().all(SymFn::is_integral)
    }

    /// Every `(partition, q, t, coefficient)` in rendering order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64, u64, &Rational)> {
        self.slices()
            .flat_map(|(q, t, f)| f.terms().map(move |(p, c)| (p, q, t, c)))
    }
}

fn qt_body(p: &Partition, q: u64, t: u64) -> String {
    let mut parts = Vec::new();
    for (v, e) in [("q", q), ("t", t)] {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            e => parts.push(format!("{v}^{e}")),
        }
    }
    if !p.is_empty() {
        parts.push(format!("s{p}"));
    }
    parts.join("*")
}

impl fmt::Display for SymFnQT {
    /// Ascending `t`, then ascending `q`, then canonical partition order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (p, q, t, c)) in self.terms().enumerate() {
            push_term(&mut out, c, &qt_body(p, q, t), i == 0);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for SymFnQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SymFnQT {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut h = SymFnQT::zero();
        if s.trim() == "0" {
            return Ok(h);
        }
        for (c, body) in parse_terms(s)? {
            let (mut q, mut t) = (0u64, 0u64);
            let mut lambda = Partition::empty();
            for factor in body.split('*').map(str::trim).filter(|f| !f.is_empty()) {
                if let Some(idx) = factor.strip_prefix('s') {
                    let parts = parse_index_list(idx)?.into_iter().map(|p| p as u32).collect();
                    lambda = Partition::new(parts)?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                match name {
                    "q" => q += exp,
                    "t" => t += exp,
                    _ => return Err(Error::Parse(format!("unknown factor `{factor}`"))),
                }
            }
            h.add_term(lambda, q, t, c);
        }
        Ok(h)
    }
}

#[derive(Serialize, Deserialize)]
struct QtTerm {
    partition: Vec<u32>,
    q: u64,
    t: u64,
    #[serde(with = "serde_rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct QtDoc {
    basis: String,
    terms: Vec<QtTerm>,
}

impl Serialize for SymFnQT {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QtDoc {
            basis: "s[q,t]".into(),
            terms: self
                .terms()
                .map(|(p, q, t, c)| QtTerm {
                    partition: p.parts().to_vec(),
                    q,
                    t,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFnQT {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = QtDoc::deserialize(d)?;
        if doc.basis != "s[q,t]" {
            return Err(serde::de::Error::custom(format!("expected basis `s[q,t]`, got `{}`", doc.basis)));
        }
        let mut h = SymFnQT::zero();
        for t in doc.terms {
            let p = Partition::new(t.partition).map_err(serde::de::Error::custom)?;
            h.add_term(p, t.q, t.t, t.coeff);
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let h: SymFnQT = "1 + 2*q*t + q*t^2 - q*t^2*s[1]".parse().unwrap();
        assert_eq!(h.to_string(), "1 + 2*q*t + q*t^2 - q*t^2*s[1]");
        let back: SymFnQT = serde_json::from_str(&serde_json::to_string(&h).unwrap()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn product_and_theta() {
        let h: SymFnQT = "1 + q*t".parse().unwrap();
        assert_eq!(h.pow(2), "1 + 2*q*t + q^2*t^2".parse().unwrap());
        let r = "1 + t + q*t*s[1]".parse::<SymFnQT>().unwrap().theta();
        assert_eq!(r.to_string(), "t + 1");
    }
}

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, push_term, serde_rational, Rational};
use crate::text::{parse_index_list, parse_terms};

use super::lr::{LittlewoodRichardson, ProductRule};
use super::partition::{for_each_horizontal_strip, for_each_vertical_strip, Partition};

/// Symmetric function in the Schur basis.
///
/// `bound = Some(d)` means every term of degree `> d` has been dropped and the
/// value is only meaningful through degree `d`. `None` is an exact polynomial.
/// Equality compares terms only.
#[derive(Clone, Default)]
pub struct SymFn {
    terms: BTreeMap<Partition, Rational>,
    bound: Option<usize>,
}

pub(crate) fn min_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn within(deg: usize, bound: Option<usize>) -> bool {
    bound.is_none_or(|b| deg <= b)
}

impl PartialEq for SymFn {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for SymFn {}

impl SymFn {
    pub fn zero() -> Self {
        SymFn::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = SymFn::zero();
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut f = SymFn::zero();
        f.add_term(lambda, Rational::one());
        f
    }

    /// `h_k = s_(k)`.
    pub fn h(k: u32) -> Self {
        Self::schur(Partition::row(k))
    }

    /// `e_k = s_(1^k)`.
    pub fn e(k: u32) -> Self {
        Self::schur(Partition::column(k))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = SymFn::zero();
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn with_bound(mut self, bound: Option<usize>) -> Self {
        self.bound = min_bound(self.bound, bound);
        if let Some(b) = self.bound {
            self.terms.retain(|p, _| p.weight() <= b);
        }
        self
    }

    /// Declares the value exact; callers guarantee no dropped term mattered.
    pub fn into_exact(mut self) -> Self {
        self.bound = None;
        self
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest weight present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || !within(lambda.weight(), self.bound) {
            return;
        }
        match self.terms.entry(lambda) {
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

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SymFn, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.bound = min_bound(self.bound, other.bound);
        if let Some(b) = self.bound {
            self.terms.retain(|p, _| p.weight() <= b);
        }
        for (p, v) in &other.terms {
            self.add_term(p.clone(), v * c);
        }
    }

    pub fn add(&self, other: &SymFn) -> SymFn {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &SymFn) -> SymFn {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> SymFn {
        if c.is_zero() {
            return SymFn {
                terms: BTreeMap::new(),
                bound: self.bound,
            };
        }
        SymFn {
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
            bound: self.bound,
        }
    }

    pub fn neg(&self) -> SymFn {
        self.scale(&int(-1))
    }

    /// Drops every term of degree `> max_degree`.
    pub fn truncate(&self, max_degree: usize) -> SymFn {
        self.clone().with_bound(Some(max_degree))
    }

    /// Coefficient of `s_()`, the functional that is 1 on the unit and 0 on
    /// every other Schur function.
    pub fn theta(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    fn mapped(&self, bound: Option<usize>, mut each: impl FnMut(&Partition, &Rational, Option<usize>, &mut SymFn)) -> SymFn {
        let mut out = SymFn {
            terms: BTreeMap::new(),
            bound,
        };
        for (p, c) in &self.terms {
            each(p, c, bound, &mut out);
        }
        out
    }

    /// `self * h_k`, horizontal `k`-strips, truncated at `max_degree`.
    pub fn mul_h(&self, k: u32, max_degree: usize) -> SymFn {
        let bound = min_bound(self.bound, Some(max_degree));
        self.mapped(bound, |p, c, bound, out| {
            if within(p.weight() + k as usize, bound) {
                for_each_horizontal_strip(p, k as usize, k as usize, &mut |mu, _| {
                    out.add_term(mu, c.clone())
                });
            }
        })
    }

    /// `self * e_k`, vertical `k`-strips, truncated at `max_degree`.
    pub fn mul_e(&self, k: u32, max_degree: usize) -> SymFn {
        let bound = min_bound(self.bound, Some(max_degree));
        self.mapped(bound, |p, c, bound, out| {
            if within(p.weight() + k as usize, bound) {
                for_each_vertical_strip(p, k as usize, &mut |mu| out.add_term(mu, c.clone()));
            }
        })
    }

    /// `self * sigma` where `sigma = 1 + h_1 + h_2 + ...`.
    pub fn mul_sigma(&self, max_degree: usize) -> SymFn {
        let bound = min_bound(self.bound, Some(max_degree));
        let top = bound.unwrap_or(max_degree);
        self.mapped(bound, |p, c, _, out| {
            let w = p.weight();
            if w <= top {
                for_each_horizontal_strip(p, 0, top - w, &mut |mu, _| out.add_term(mu, c.clone()));
            }
        })
    }

    /// `self * sigma^{-1}` where `sigma^{-1} = 1 - e_1 + e_2 - ...`.
    pub fn mul_sigma_inv(&self, max_degree: usize) -> SymFn {
        let bound = min_bound(self.bound, Some(max_degree));
        let top = bound.unwrap_or(max_degree);
        self.mapped(bound, |p, c, _, out| {
            let w = p.weight();
            let neg = -c.clone();
            for k in 0..=top.saturating_sub(w) {
                if w + k > top {
                    break;
                }
                let sign = if k % 2 == 0 { c } else { &neg };
                for_each_vertical_strip(p, k, &mut |mu| out.add_term(mu, sign.clone()));
            }
        })
    }

    /// `self * sigma^k` for any integer `k`.
    pub fn mul_sigma_pow(&self, k: i64, max_degree: usize) -> SymFn {
        let mut out = self.truncate(max_degree);
        for _ in 0..k.unsigned_abs() {
            out = if k > 0 {
                out.mul_sigma(max_degree)
            } else {
                out.mul_sigma_inv(max_degree)
            };
        }
        out
    }

    /// Product with the default Littlewood-Richardson rule. `max_degree` of
    /// `None` keeps everything the operands' bounds allow.
    pub fn mul(&self, other: &SymFn, max_degree: Option<usize>) -> SymFn {
        self.mul_with(other, max_degree, &LittlewoodRichardson)
    }

    pub fn mul_with(&self, other: &SymFn, max_degree: Option<usize>, rule: &dyn ProductRule) -> SymFn {
        let bound = min_bound(min_bound(self.bound, other.bound), max_degree);
        let mut out = SymFn {
            terms: BTreeMap::new(),
            bound,
        };
        let top = bound.unwrap_or(usize::MAX);
        let mut cache: HashMap<(&Partition, &Partition), Vec<(Partition, i64)>> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.weight() + b.weight() > top {
                    continue;
                }
                let expansion = cache
                    .entry((a, b))
                    .or_insert_with(|| rule.expand(a, b, top));
                let cab = ca * cb;
                for (nu, m) in expansion.iter() {
                    out.add_term(nu.clone(), &cab * int(*m));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize, max_degree: Option<usize>) -> SymFn {
        let mut out = SymFn::one().with_bound(min_bound(self.bound, max_degree));
        for _ in 0..k {
            out = out.mul(self, max_degree);
        }
        out
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

/// `sigma^k` through degree `max_degree`.
pub fn sigma_pow(k: i64, max_degree: usize) -> SymFn {
    SymFn::one().mul_sigma_pow(k, max_degree)
}

impl fmt::Debug for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")?;
        if let Some(b) = self.bound {
            write!(f, " (deg <= {b})")?;
        }
        Ok(())
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let body = if p.is_empty() { String::new() } else { format!("s{p}") };
            push_term(&mut out, c, &body, i == 0);
        }
        f.write_str(&out)
    }
}

impl FromStr for SymFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut f = SymFn::zero();
        if s.trim() == "0" {
            return Ok(f);
        }
        for (c, body) in parse_terms(s)? {
            let lambda = if body.is_empty() {
                Partition::empty()
            } else {
                let idx = body
                    .strip_prefix('s')
                    .ok_or_else(|| Error::Parse(format!("expected s[...], got `{body}`")))?;
                let parts = parse_index_list(idx)?.into_iter().map(|p| p as u32).collect();
                Partition::new(parts)?
            };
            f.add_term(lambda, c);
        }
        Ok(f)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SchurTerm {
    pub partition: Vec<u32>,
    #[serde(with = "serde_rational")]
    pub coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct SymFnDoc {
    basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bound: Option<usize>,
    terms: Vec<SchurTerm>,
}

impl Serialize for SymFn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFnDoc {
            basis: "s".into(),
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| SchurTerm {
                    partition: p.parts().to_vec(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFn {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = SymFnDoc::deserialize(d)?;
        if doc.basis != "s" {
            return Err(serde::de::Error::custom(format!("expected Schur basis `s`, got `{}`", doc.basis)));
        }
        let mut f = SymFn {
            terms: BTreeMap::new(),
            bound: doc.bound,
        };
        for t in doc.terms {
            let p = Partition::new(t.partition).map_err(serde::de::Error::custom)?;
            f.add_term(p, t.coeff);
        }
        Ok(f)
    }
}

/// Signs `(-1)^{|lambda|}` times a nonnegative number, for every term.
pub fn has_alternating_signs(f: &SymFn) -> bool {
    f.terms().all(|(p, c)| {
        if p.weight() % 2 == 0 {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    })
}

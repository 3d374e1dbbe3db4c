use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::invariants::g_invariant;
use crate::pmcore::{parse_polymatroid, to_document, Limits, Polymatroid};
use crate::qsym::QSymFn;
use crate::rational::{parse_rational, render_rational, Rational};

use super::base::contains_scaled;

/// A claimed identity `[Q(target)] = sum_i a_i [Q(piece_i)]` between indicator
/// functions of base polytopes.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedDecomposition {
    pub target: Polymatroid,
    pub pieces: Vec<(Polymatroid, Rational)>,
}

impl SignedDecomposition {
    /// Every polymatroid must satisfy the axioms and share the target's ground set.
    pub fn new(target: Polymatroid, pieces: Vec<(Polymatroid, Rational)>) -> Result<Self> {
        target.validate().map_err(Error::Invalid)?;
        for (pm, _) in &pieces {
            pm.validate().map_err(Error::Invalid)?;
            if pm.n() != target.n() {
                return Err(Error::Malformed(format!(
                    "piece on {} elements, target on {}",
                    pm.n(),
                    target.n()
                )));
            }
        }
        Ok(SignedDecomposition { target, pieces })
    }

    /// Reads `{"target": doc, "pieces": [{"pm": doc, "coeff": "p/q"}, ...]}`.
    pub fn from_document(doc: &Value) -> Result<Self> {
        let target = parse_polymatroid(doc.get("target").ok_or_else(|| Error::Malformed("missing `target`".into()))?)?;
        let pieces = doc
            .get("pieces")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("`pieces` must be an array".into()))?
            .iter()
            .map(|p| {
                let pm = parse_polymatroid(p.get("pm").ok_or_else(|| Error::Malformed("piece without `pm`".into()))?)?;
                let coeff = match p.get("coeff") {
                    None => Rational::one(),
                    Some(Value::String(s)) => parse_rational(s)?,
                    Some(Value::Number(n)) => n
                        .as_i64()
                        .map(|v| Rational::from_integer(v.into()))
                        .ok_or_else(|| Error::Malformed(format!("bad coefficient {n}")))?,
                    Some(other) => return Err(Error::Malformed(format!("bad coefficient {other}"))),
                };
                Ok((pm, coeff))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(target, pieces)
    }

    pub fn to_document(&self) -> Value {
        serde_json::json!({
            "target": to_document(&self.target),
            "pieces": self.pieces.iter().map(|(pm, c)| serde_json::json!({
                "pm": to_document(pm),
                "coeff": render_rational(c),
            })).collect::<Vec<_>>(),
        })
    }

    fn value_at(&self, point: &[u64], denom: u64) -> Rational {
        let mut v = if contains_scaled(&self.target, point, denom) {
            Rational::one()
        } else {
            Rational::zero()
        };
        for (pm, c) in &self.pieces {
            if contains_scaled(pm, point, denom) {
                v -= c;
            }
        }
        v
    }
}

/// Outcome of [`check_indicator_relation`].
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorCheck {
    pub holds: bool,
    /// First grid point where the relation fails, with the nonzero value there.
    pub witness: Option<(Vec<Rational>, Rational)>,
    pub points_checked: u64,
}

/// Evaluates `[Q(target)] - sum a_i [Q_i]` on every point of
/// `(1/denom) Z^n` inside `[0, max singleton rank]^n` on each hyperplane
/// `sum v = r` occupied by some polytope. Sound as a refutation; a pass
/// certifies the identity only at this grid resolution.
pub fn check_indicator_relation(dec: &SignedDecomposition, denom: u64) -> Result<IndicatorCheck> {
    if denom == 0 {
        return Err(Error::Malformed("grid denominator must be positive".into()));
    }
    let all = std::iter::once(&dec.target).chain(dec.pieces.iter().map(|(pm, _)| pm));
    let n = dec.target.n();
    let side = all.clone().flat_map(|pm| (0..n).map(move |i| pm.rank(1 << i))).max().unwrap_or(0) * denom;
    let mut totals: Vec<u64> = all.map(|pm| pm.total_rank() * denom).collect();
    totals.sort_unstable();
    totals.dedup();

    let mut checked = 0u64;
    let mut point = vec![0u64; n];
    for total in totals {
        let mut failure = None;
        for_each_point(&mut point, 0, total, side, &mut |p| {
            checked += 1;
            let v = dec.value_at(p, denom);
            if v.is_zero() {
                return true;
            }
            failure = Some((p.iter().map(|&w| Rational::new(w.into(), denom.into())).collect(), v));
            false
        });
        if let Some(w) = failure {
            return Ok(IndicatorCheck {
                holds: false,
                witness: Some(w),
                points_checked: checked,
            });
        }
    }
    Ok(IndicatorCheck {
        holds: true,
        witness: None,
        points_checked: checked,
    })
}

/// Visits points with `point[i..]` summing to `left`, entries in `0..=side`,
/// in lexicographic order. Stops when `f` returns false.
fn for_each_point(point: &mut [u64], i: usize, left: u64, side: u64, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
    if i + 1 == point.len() {
        if left > side {
            return true;
        }
        point[i] = left;
        return f(point);
    }
    if point.is_empty() {
        return left != 0 || f(point);
    }
    for w in 0..=left.min(side) {
        point[i] = w;
        if !for_each_point(point, i + 1, left - w, side, f) {
            return false;
        }
    }
    true
}

/// Outcome of [`check_valuative_g`].
#[derive(Debug, Clone, PartialEq)]
pub struct ValuativeCheck {
    pub holds: bool,
    /// `sum a_i G[piece_i] - G[target]`.
    pub residue: QSymFn,
}

pub fn check_valuative_g(dec: &SignedDecomposition, limits: &Limits) -> Result<ValuativeCheck> {
    let mut residue = g_invariant(&dec.target, limits)?.scale(&-Rational::one());
    for (pm, c) in &dec.pieces {
        residue = residue.add(&g_invariant(pm, limits)?.scale(c))?;
    }
    Ok(ValuativeCheck {
        holds: residue.is_zero(),
        residue,
    })
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::polymatroid::{elements, Polymatroid, ABSOLUTE_MAX_N};

/// For each ground element, a list of generators of a subspace of `Q^dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorConfig {
    pub dim: usize,
    pub subspaces: Vec<Vec<Vec<Rational>>>,
}

impl VectorConfig {
    pub fn new(dim: usize, subspaces: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        for (x, gens) in subspaces.iter().enumerate() {
            if let Some(v) = gens.iter().find(|v| v.len() != dim) {
                return Err(Error::Malformed(format!(
                    "generator of element {x} has length {}, ambient dimension is {dim}",
                    v.len()
                )));
            }
        }
        Ok(VectorConfig { dim, subspaces })
    }

    /// One generator per element, from integer coordinates.
    pub fn points(dim: usize, pts: &[&[i64]]) -> Result<Self> {
        let subspaces = pts
            .iter()
            .map(|p| vec![p.iter().map(|&c| Rational::from_integer(c.into())).collect()])
            .collect();
        Self::new(dim, subspaces)
    }

    /// `rk(A) = dim span(U_{x in A} Z_x)`.
    pub fn to_polymatroid(&self) -> Result<Polymatroid> {
        let n = self.subspaces.len();
        if n > ABSOLUTE_MAX_N {
            return Err(Error::CapExceeded {
                what: "rank table size",
                limit: ABSOLUTE_MAX_N,
                got: n,
            });
        }
        let scaled: Vec<Vec<Vec<BigInt>>> = self
            .subspaces
            .iter()
            .map(|gens| gens.iter().map(|v| clear_denominators(v)).collect())
            .collect();
        Polymatroid::from_fn(n, |a| {
            let rows: Vec<Vec<BigInt>> = elements(a).flat_map(|x| scaled[x].iter().cloned()).collect();
            integer_rank(rows, self.dim) as u64
        })
    }
}

pub fn from_vectors(cfg: &VectorConfig) -> Result<Polymatroid> {
    cfg.to_polymatroid()
}

fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    v.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// Rank by fraction-free (Bareiss) elimination.
pub(crate) fn integer_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col].clone();
            for c in col..cols {
                let v = &pivot * &rows[r][c] - &factor * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::pmcore::{elements, Polymatroid, Subset};
use crate::rational::Rational;

/// The base polytope `{v : sum v = rk(X), sum_{i in A} v_i <= rk(A) for all A}`,
/// kept implicit in the rank table.
#[derive(Debug, Clone, Copy)]
pub struct BasePolytope<'a> {
    pm: &'a Polymatroid,
}

impl<'a> BasePolytope<'a> {
    pub fn new(pm: &'a Polymatroid) -> Self {
        BasePolytope { pm }
    }

    pub fn polymatroid(&self) -> &'a Polymatroid {
        self.pm
    }

    pub fn contains(&self, point: &[Rational]) -> Result<bool> {
        contains(self.pm, point)
    }

    pub fn vertex(&self, perm: &[usize]) -> Result<Vec<u64>> {
        vertex_of_permutation(self.pm, perm)
    }
}

fn check_len(pm: &Polymatroid, len: usize) -> Result<()> {
    if len != pm.n() {
        return Err(Error::Malformed(format!(
            "point has {len} coordinates, ground set has {}",
            pm.n()
        )));
    }
    Ok(())
}

/// Exact membership in the base polytope.
pub fn contains(pm: &Polymatroid, point: &[Rational]) -> Result<bool> {
    check_len(pm, point.len())?;
    let sum_over = |a: Subset| elements(a).fold(Rational::zero(), |acc, i| acc + &point[i]);
    if sum_over(pm.full()) != Rational::from_integer(pm.total_rank().into()) {
        return Ok(false);
    }
    Ok((1..pm.full()).all(|a| sum_over(a) <= Rational::from_integer(pm.rank(a).into())))
}

/// Integer-scaled membership: `point / denom` in the base polytope.
pub(crate) fn contains_scaled(pm: &Polymatroid, point: &[u64], denom: u64) -> bool {
    let sum_over = |a: Subset| elements(a).map(|i| point[i]).sum::<u64>();
    sum_over(pm.full()) == denom * pm.total_rank()
        && (1..pm.full()).all(|a| sum_over(a) <= denom * pm.rank(a))
}

fn check_permutation(n: usize, perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Malformed(format!("permutation of length {} on {n} elements", perm.len())));
    }
    for &x in perm {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::Malformed(format!("{perm:?} is not a permutation")));
        }
    }
    Ok(())
}

/// `v[perm[i]] = rk(perm[..=i]) - rk(perm[..i])`.
pub fn vertex_of_permutation(pm: &Polymatroid, perm: &[usize]) -> Result<Vec<u64>> {
    check_permutation(pm.n(), perm)?;
    let mut v = vec![0; pm.n()];
    let mut prefix: Subset = 0;
    for &x in perm {
        let next = prefix | 1 << x;
        v[x] = pm.rank(next) - pm.rank(prefix);
        prefix = next;
    }
    Ok(v)
}

/// Number of orderings of the ground set whose successive rank increments
/// equal `seq`.
pub fn rank_seq_multiplicity(pm: &Polymatroid, seq: &[i64]) -> u64 {
    if seq.len() != pm.n() || seq.iter().any(|&r| r < 0) {
        return 0;
    }
    // ways[A]: orderings of A whose increments match seq[..|A|]
    let mut ways = vec![0u64; 1usize << pm.n()];
    ways[0] = 1;
    for a in 0..pm.full() {
        let count = ways[a as usize];
        if count == 0 {
            continue;
        }
        let want = seq[a.count_ones() as usize] as u64;
        for x in 0..pm.n() {
            let next = a | 1 << x;
            if next != a && pm.rank(next) - pm.rank(a) == want {
                ways[next as usize] += count;
            }
        }
    }
    ways[pm.full() as usize]
}

use num_traits::One;
use rayon::prelude::*;

use crate::error::Result;
use crate::pmcore::{full, size, Limits, Polymatroid, Subset};
use crate::rational::{int, Rational};
use crate::schur::SymFn;

use super::symqt::SymFnQT;

/// `P` of every restriction, indexed by subset bitmask.
#[derive(Debug, Clone)]
pub struct PTable {
    values: Vec<SymFn>,
}

impl PTable {
    pub fn build(pm: &Polymatroid, limits: &Limits) -> Result<Self> {
        limits.check_n(pm.n())?;
        let n = pm.n();
        let mut values = vec![SymFn::zero(); 1usize << n];
        values[0] = SymFn::one();
        let mut levels: Vec<Vec<Subset>> = vec![Vec::new(); n + 1];
        for a in 1..=full(n) {
            levels[size(a)].push(a);
        }
        for level in levels.iter().skip(1) {
            let computed: Vec<SymFn> = level.par_iter().map(|&a| p_step(pm, &values, a)).collect();
            for (&a, f) in level.iter().zip(computed) {
                values[a as usize] = f;
            }
        }
        Ok(PTable { values })
    }

    /// `P[X|_A]`.
    pub fn get(&self, a: Subset) -> &SymFn {
        &self.values[a as usize]
    }

    pub fn full(&self) -> &SymFn {
        self.values.last().expect("table has the empty set")
    }
}

/// One step of the subset recursion for `A`, given all proper subsets.
fn p_step(pm: &Polymatroid, values: &[SymFn], a: Subset) -> SymFn {
    let top = size(a) - 1;
    let rank_a = pm.rank(a);
    // buckets[k] collects signed P[B] with rk(A) - rk(B) = k
    let mut buckets = vec![SymFn::zero(); rank_a as usize + 1];
    let (plus, minus) = (Rational::one(), int(-1));
    let mut b = (a - 1) & a;
    loop {
        let sign = if (size(a) - size(b)) % 2 == 0 { &plus } else { &minus };
        buckets[(rank_a - pm.rank(b)) as usize].add_scaled(&values[b as usize], sign);
        if b == 0 {
            break;
        }
        b = (b - 1) & a;
    }
    let mut acc = buckets.pop().expect("nonempty").truncate(top);
    while let Some(bucket) = buckets.pop() {
        acc = acc.mul_sigma(top);
        acc.add_scaled(&bucket, &plus);
    }
    acc.neg().into_exact()
}

/// The symmetric-function invariant `P[X]`.
pub fn p_invariant(pm: &Polymatroid, limits: &Limits) -> Result<SymFn> {
    Ok(PTable::build(pm, limits)?.full().clone())
}

/// `H[X](q,t) = sum over A of P[X|_A] q^rk(A) t^|A|`.
pub fn h_invariant(pm: &Polymatroid, limits: &Limits) -> Result<SymFnQT> {
    Ok(h_from_table(pm, &PTable::build(pm, limits)?))
}

pub fn h_from_table(pm: &Polymatroid, table: &PTable) -> SymFnQT {
    let mut h = SymFnQT::zero();
    for a in 0..=pm.full() {
        h.add_slice(pm.rank(a), size(a) as u64, table.get(a));
    }
    h
}

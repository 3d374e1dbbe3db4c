use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pmcore::{size, Limits, Polymatroid, Subset};
use crate::qsym::{Basis, QSymFn, Word};
use crate::rational::Rational;

use super::characters::minor_splits;

/// `F[X] = sum over compositions a of n of zeta_a(X) M_a`, where `zeta_a`
/// counts chains of subsets with block sizes `a` whose successive minors all
/// split into loops and coloops.
pub fn bjr_f(pm: &Polymatroid, limits: &Limits) -> Result<QSymFn> {
    if !pm.is_matroid() {
        return Err(Error::NotMatroid);
    }
    limits.check_n(pm.n())?;
    // chains[A]: composition -> number of split chains from the empty set to A
    let mut chains: Vec<BTreeMap<Vec<u32>, u64>> = vec![BTreeMap::new(); 1usize << pm.n()];
    chains[0].insert(Vec::new(), 1);
    for upper in 1..=pm.full() {
        let mut here = BTreeMap::new();
        let mut lower: Subset = (upper - 1) & upper;
        loop {
            if !chains[lower as usize].is_empty() && minor_splits(pm, lower, upper) {
                let block = (size(upper) - size(lower)) as u32;
                for (comp, count) in &chains[lower as usize] {
                    let mut next = comp.clone();
                    next.push(block);
                    *here.entry(next).or_insert(0) += count;
                }
            }
            if lower == 0 {
                break;
            }
            lower = (lower - 1) & upper;
        }
        chains[upper as usize] = here;
    }
    let top = std::mem::take(&mut chains[pm.full() as usize]);
    QSymFn::from_terms(
        Basis::M,
        top.into_iter().map(|(c, k)| (Word(c), Rational::from_integer(k.into()))),
    )
}

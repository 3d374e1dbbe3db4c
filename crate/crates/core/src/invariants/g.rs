use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::Result;
use crate::pmcore::{Limits, Polymatroid, Subset};
use crate::qsym::{Basis, QSymFn, Word};
use crate::rational::Rational;

/// Number of maximal chains (orderings of the ground set) realizing each rank
/// sequence. Orderings are visited depth-first in lexicographic order.
pub fn rank_sequence_counts(pm: &Polymatroid, limits: &Limits) -> Result<BTreeMap<Word, u64>> {
    limits.check_chains(pm.n())?;
    let n = pm.n();
    if n == 0 {
        return Ok(BTreeMap::from([(Word::empty(), 1)]));
    }
    let partial: Vec<HashMap<Vec<u32>, u64>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = HashMap::new();
            let start: Subset = 1 << first;
            let mut seq = vec![pm.rank(start) as u32];
            extend_chain(pm, start, &mut seq, &mut acc);
            acc
        })
        .collect();
    let mut out = BTreeMap::new();
    for part in partial {
        for (seq, c) in part {
            *out.entry(Word(seq)).or_insert(0) += c;
        }
    }
    Ok(out)
}

fn extend_chain(pm: &Polymatroid, prefix: Subset, seq: &mut Vec<u32>, acc: &mut HashMap<Vec<u32>, u64>) {
    if prefix == pm.full() {
        *acc.entry(seq.clone()).or_insert(0) += 1;
        return;
    }
    let base = pm.rank(prefix);
    for e in 0..pm.n() {
        let bit = 1 << e;
        if prefix & bit != 0 {
            continue;
        }
        let next = prefix | bit;
        seq.push((pm.rank(next) - base) as u32);
        extend_chain(pm, next, seq, acc);
        seq.pop();
    }
}

/// The quasi-symmetric invariant `G[X]` in the `U` basis.
pub fn g_invariant(pm: &Polymatroid, limits: &Limits) -> Result<QSymFn> {
    let counts = rank_sequence_counts(pm, limits)?;
    QSymFn::from_terms(
        Basis::U,
        counts.into_iter().map(|(w, c)| (w, Rational::from_integer(c.into()))),
    )
}

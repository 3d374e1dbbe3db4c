//! `P[X]`, `H[X](q,t)`, `G[X]`, the rank generating function, the Tutte
//! invariant, and the Rees series.

pub mod bivariate;
pub mod g;
pub mod p;
pub mod symqt;
pub mod tutte;

pub use bivariate::BivariatePoly;
pub use g::{g_invariant, rank_sequence_counts};
pub use p::{h_from_table, h_invariant, p_invariant, PTable};
pub use symqt::SymFnQT;
pub use tutte::{rank_gen, tutte, tutte_uv, Tutte};

use crate::error::Result;
use crate::pmcore::{Limits, Polymatroid};

/// `[H[X^0], H[X^1], ..., H[X^k]]` where `X^i` is the `i`-fold direct sum,
/// computed as powers of `H[X]`.
pub fn rees_series(pm: &Polymatroid, k: usize, limits: &Limits) -> Result<Vec<SymFnQT>> {
    limits.check_n(pm.n().saturating_mul(k))?;
    let h = h_invariant(pm, limits)?;
    let mut out = Vec::with_capacity(k + 1);
    let mut acc = SymFnQT::one();
    for _ in 0..=k {
        out.push(acc.clone());
        acc = acc.mul(&h);
    }
    Ok(out)
}

use num_bigint::BigInt;
use num_traits::One;

use crate::pmcore::{size, Polymatroid};

use super::bivariate::BivariatePoly;

/// `R[X](q,t) = sum over A of q^rk(A) t^|A|`.
pub fn rank_gen(pm: &Polymatroid) -> BivariatePoly {
    let mut r = BivariatePoly::zero(["q", "t"]);
    for a in 0..=pm.full() {
        r.add_term(pm.rank(a) as i64, size(a) as i64, BigInt::one());
    }
    r
}

/// The Tutte invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tutte {
    /// In `x, y` when `laurent` is false, otherwise in `u = x - 1, v = y - 1`.
    pub poly: BivariatePoly,
    pub laurent: bool,
}

/// `sum over A of u^(rk X - rk A) v^(|A| - rk A)`.
pub fn tutte_uv(pm: &Polymatroid) -> BivariatePoly {
    let total = pm.total_rank() as i64;
    let mut t = BivariatePoly::zero(["u", "v"]);
    for a in 0..=pm.full() {
        let r = pm.rank(a) as i64;
        t.add_term(total - r, size(a) as i64 - r, BigInt::one());
    }
    t
}

/// Re-expands in `x, y` whenever every exponent is nonnegative, which holds
/// exactly for matroids.
pub fn tutte(pm: &Polymatroid) -> Tutte {
    let uv = tutte_uv(pm);
    match uv.shift((-1, -1), ["x", "y"]) {
        Ok(poly) => Tutte { poly, laurent: false },
        Err(_) => Tutte { poly: uv, laurent: true },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmcore::Graph;

    #[test]
    fn rank_gen_small() {
        assert_eq!(rank_gen(&Polymatroid::loop_matroid()).to_string(), "t + 1");
        assert_eq!(rank_gen(&Polymatroid::coloop()).to_string(), "q*t + 1");
        let u12 = Polymatroid::uniform(1, 2).unwrap();
        assert_eq!(rank_gen(&u12), BivariatePoly::parse("1 + 2*q*t + q*t^2", ["q", "t"]).unwrap());
    }

    #[test]
    fn triangle() {
        let t = tutte(&Graph::polygon(3).to_polymatroid().unwrap());
        assert!(!t.laurent);
        assert_eq!(t.poly.to_string(), "x^2 + x + y");
    }

    #[test]
    fn polymatroid_is_laurent() {
        let pm = Polymatroid::from_table(1, vec![0, 2]).unwrap();
        let t = tutte(&pm);
        assert!(t.laurent);
        assert_eq!(t.poly.to_string(), "u^2 + v^-1");
    }
}

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pmcore::{elements, Polymatroid, Subset};
use crate::qsym::QSymFn;
use crate::rational::{factorial, Rational};

/// Value of a character on one basis element.
pub type CharValue = Rational;

/// True when the minor `(X|_upper) / lower` is a direct sum of loops and
/// coloops, i.e. its rank is additive over single elements. `lower` must be
/// contained in `upper`.
pub(crate) fn minor_splits(pm: &Polymatroid, lower: Subset, upper: Subset) -> bool {
    let base = pm.rank(lower);
    let gains: u64 = elements(upper & !lower).map(|x| pm.rank(lower | 1 << x) - base).sum();
    pm.rank(upper) - base == gains
}

/// The matroid character: 1 when `X` splits into loops and coloops, else 0.
pub fn zeta_mat(pm: &Polymatroid) -> Result<CharValue> {
    if !pm.is_matroid() {
        return Err(Error::NotMatroid);
    }
    let additive = (0..=pm.full()).all(|a| pm.rank(a) == elements(a).map(|x| pm.rank(1 << x)).sum::<u64>());
    Ok(if additive { Rational::one() } else { Rational::zero() })
}

/// `gamma(P_a) = 1 / (k_1! k_2! ...)` for weakly increasing `a` with value
/// multiplicities `k_i`, and 0 otherwise.
pub fn gamma_char(word: &[u32]) -> CharValue {
    if word.windows(2).any(|w| w[0] > w[1]) {
        return Rational::zero();
    }
    let mut denom = num_bigint::BigInt::one();
    let mut run = 0usize;
    for (i, a) in word.iter().enumerate() {
        run += 1;
        if word.get(i + 1) != Some(a) {
            denom *= factorial(run);
            run = 0;
        }
    }
    Rational::new(1.into(), denom)
}

/// Linear extension of [`gamma_char`] through the `P` basis.
pub fn gamma(f: &QSymFn) -> CharValue {
    f.to_p()
        .terms()
        .map(|(w, c)| c * gamma_char(w.letters()))
        .fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmcore::Graph;
    use crate::rational::frac;

    #[test]
    fn zeta_values() {
        let split = Polymatroid::loop_matroid().direct_sum(&Polymatroid::coloop()).unwrap();
        assert_eq!(zeta_mat(&split).unwrap(), Rational::one());
        assert!(zeta_mat(&Polymatroid::uniform(1, 2).unwrap()).unwrap().is_zero());
        assert!(zeta_mat(&Graph::polygon(3).to_polymatroid().unwrap()).unwrap().is_zero());
        assert!(zeta_mat(&Polymatroid::from_table(1, vec![0, 2]).unwrap()).is_err());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_char(&[1, 2]), Rational::one());
        assert!(gamma_char(&[2, 1]).is_zero());
        assert_eq!(gamma_char(&[1, 1]), frac(1, 2));
        assert_eq!(gamma_char(&[1, 1, 2, 2, 2]), frac(1, 12));
        assert_eq!(gamma_char(&[]), Rational::one());
    }
}

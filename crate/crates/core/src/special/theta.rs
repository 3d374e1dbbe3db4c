use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymFn, Word};

use super::characters::gamma_char;

/// The morphism to `(QSym, zeta)` on the subalgebra spanned by `P` words with
/// letters in {1, 2}, graded by word length: `P_w` goes to the sum over cuts
/// of `w` into consecutive blocks of `prod gamma(P_block) M_(block lengths)`.
pub fn theta_map(f: &QSymFn) -> Result<QSymFn> {
    let p = f.to_p();
    let mut out = QSymFn::zero(Basis::M);
    for (w, c) in p.terms() {
        if w.letters().iter().any(|&a| !(1..=2).contains(&a)) {
            return Err(Error::InvalidWord {
                word: w.letters().iter().map(|&a| a as u64).collect(),
                reason: "theta needs P letters in {1, 2}",
            });
        }
        for blocks in w.block_cuts() {
            let weight = blocks.iter().fold(c.clone(), |acc, b| acc * gamma_char(b));
            if weight.is_zero() {
                continue;
            }
            let shape = Word(blocks.iter().map(|b| b.len() as u32).collect());
            out.try_add_term(shape, weight)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn u(v: &[u32]) -> QSymFn {
        QSymFn::basis_element(Basis::U, Word(v.to_vec())).unwrap()
    }

    #[test]
    fn kernel_generator() {
        let f = u(&[1]).sub(&u(&[0])).unwrap();
        assert!(theta_map(&f).unwrap().is_zero());
    }

    #[test]
    fn single_letters() {
        assert_eq!(theta_map(&u(&[0])).unwrap().to_string(), "M[1]");
        assert_eq!(theta_map(&u(&[1, 0])).unwrap().to_string(), "M[1,1]");
        let twice = theta_map(&u(&[0, 0]).scale(&int(2))).unwrap();
        assert_eq!(twice.to_string(), "M[2] + 2*M[1,1]");
    }

    #[test]
    fn rejects_large_letters() {
        assert!(theta_map(&u(&[2])).is_err());
    }
}

mod common;

use common::*;
use proptest::prelude::*;

use polyinv::invariants::{g_invariant, h_invariant, p_invariant};
use polyinv::pmcore::{Limits, Polymatroid};
use polyinv::qsym::{p_product, Basis, QSymFn, Word};
use polyinv::rational::frac;
use polyinv::special::{bjr_f, gamma, gamma_char, tau, tau_p_vector, tau_product_defect, theta_map, xi, zeta_mat};

fn lim() -> Limits {
    Limits::default()
}

fn word(max_letter: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..=max_letter, 0..=max_len).prop_map(Word)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tau_takes_g_to_h(pm in polymatroid_strategy(5)) {
        let g = g_invariant(&pm, &lim()).unwrap();
        prop_assert_eq!(tau(&g).unwrap(), h_invariant(&pm, &lim()).unwrap());
    }

    #[test]
    fn xi_takes_g_to_p(m in matroid_strategy(6)) {
        let g = g_invariant(&m, &lim()).unwrap();
        prop_assert_eq!(xi(&g).unwrap(), p_invariant(&m, &lim()).unwrap());
    }

    #[test]
    fn theta_takes_g_to_f(m in matroid_strategy(6)) {
        let g = g_invariant(&m, &lim()).unwrap();
        prop_assert_eq!(theta_map(&g).unwrap(), bjr_f(&m, &lim()).unwrap());
    }

    #[test]
    fn gamma_is_multiplicative(
        a in prop::collection::vec(1u32..=3, 0..=3),
        b in prop::collection::vec(1u32..=3, 0..=3),
    ) {
        let pa = QSymFn::basis_element(Basis::P, Word(a.clone())).unwrap();
        let pb = QSymFn::basis_element(Basis::P, Word(b.clone())).unwrap();
        prop_assert_eq!(gamma(&p_product(&pa, &pb)), gamma_char(&a) * gamma_char(&b));
    }

    #[test]
    fn zeta_is_multiplicative(a in matroid_strategy(3), b in matroid_strategy(3)) {
        let s = a.direct_sum(&b).unwrap();
        prop_assert_eq!(zeta_mat(&s).unwrap(), zeta_mat(&a).unwrap() * zeta_mat(&b).unwrap());
    }

    #[test]
    fn f_is_multiplicative_and_label_free(
        a in matroid_strategy(3),
        (b, perm) in matroid_strategy(3).prop_flat_map(|m| { let n = m.n(); (Just(m), permutation_strategy(n)) }),
    ) {
        let s = a.direct_sum(&b).unwrap();
        let product = p_product(&bjr_f(&a, &lim()).unwrap(), &bjr_f(&b, &lim()).unwrap());
        prop_assert_eq!(bjr_f(&s, &lim()).unwrap().to_p(), product.to_p());
        prop_assert_eq!(bjr_f(&b.permute(&perm).unwrap(), &lim()).unwrap(), bjr_f(&b, &lim()).unwrap());
    }

    #[test]
    fn tau_is_multiplicative(a in word(2, 3), b in word(2, 3)) {
        let defect = tau_product_defect(&a, &b).unwrap();
        prop_assert!(defect.is_zero(), "tau(U_a U_b) - tau(U_a) tau(U_b) = {}", defect);
    }

    #[test]
    fn theta_kills_the_kernel_generator(w in word(1, 3)) {
        // theta((U_1 - U_0) * U_w) = 0 since theta is an algebra map
        let gen = QSymFn::basis_element(Basis::U, Word(vec![1])).unwrap()
            .sub(&QSymFn::basis_element(Basis::U, Word(vec![0])).unwrap()).unwrap();
        let f = p_product(&gen, &QSymFn::basis_element(Basis::U, w).unwrap());
        prop_assert!(theta_map(&f).unwrap().is_zero());
    }
}

#[test]
fn spec_examples() {
    let w = |v: &[u32]| Word(v.to_vec());
    assert_eq!(tau_p_vector(&w(&[1, 0])).to_string(), "1 - s[1]");
    assert_eq!(tau_p_vector(&w(&[1, 1])).to_string(), "1");
    assert_eq!(gamma_char(&[1, 2]), frac(1, 1));
    assert_eq!(gamma_char(&[2, 1]), frac(0, 1));
    assert_eq!(gamma_char(&[1, 1]), frac(1, 2));
    let l = lim();
    let coloop = g_invariant(&Polymatroid::coloop(), &l).unwrap();
    assert_eq!(xi(&coloop).unwrap().to_string(), "1");
    let tri = polyinv::pmcore::Graph::polygon(3).to_polymatroid().unwrap();
    assert_eq!(xi(&g_invariant(&tri, &l).unwrap()).unwrap().to_string(), "1 - s[1] + s[1,1]");
    assert_eq!(bjr_f(&Polymatroid::loop_matroid(), &l).unwrap(), bjr_f(&Polymatroid::coloop(), &l).unwrap());
}

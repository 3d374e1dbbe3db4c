mod common;

use proptest::prelude::*;

use polyinv::qsym::{
    antipode_convolution, counit_left, counit_right, m_to_p, p_antipode, p_coproduct, p_product, p_to_m,
    tensor_product, AntipodeConvention, Basis, QSymFn, Word,
};
use polyinv::rational::{binomial, Rational};

fn word_strategy(min_letter: u32, max_letter: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(min_letter..=max_letter, 0..=max_len).prop_map(Word)
}

fn p_strategy() -> impl Strategy<Value = QSymFn> {
    prop::collection::vec((word_strategy(1, 3, 3), -2i64..=2), 1..4).prop_map(|terms| {
        QSymFn::from_terms(Basis::P, terms.into_iter().map(|(w, c)| (w, Rational::from_integer(c.into())))).unwrap()
    })
}

fn single(w: &Word) -> QSymFn {
    QSymFn::basis_element(Basis::P, w.clone()).unwrap()
}

/// Every composition of `n`.
fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn shuffle_mass_is_binomial(a in word_strategy(1, 3, 4), b in word_strategy(1, 3, 4)) {
        let prod = p_product(&single(&a), &single(&b));
        let mass = Rational::from_integer(binomial(a.len() + b.len(), a.len()));
        prop_assert_eq!(prod.coefficient_sum(), mass);
    }

    #[test]
    fn product_commutes_and_associates(f in p_strategy(), g in p_strategy(), h in p_strategy()) {
        prop_assert_eq!(p_product(&f, &g), p_product(&g, &f));
        prop_assert_eq!(p_product(&p_product(&f, &g), &h), p_product(&f, &p_product(&g, &h)));
    }

    #[test]
    fn coproduct_is_multiplicative(f in p_strategy(), g in p_strategy()) {
        let lhs = p_coproduct(&p_product(&f, &g));
        let rhs = tensor_product(&p_coproduct(&f), &p_coproduct(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_a_counit(f in p_strategy()) {
        prop_assert_eq!(counit_left(&p_coproduct(&f)), f.clone());
        prop_assert_eq!(counit_right(&p_coproduct(&f)), f);
    }

    #[test]
    fn u_shift_round_trips(w in word_strategy(0, 4, 5)) {
        let u = QSymFn::basis_element(Basis::U, w.clone()).unwrap();
        let p = u.u_to_p().unwrap();
        prop_assert_eq!(p.coeff(&w.shifted_up()), Rational::from_integer(1.into()));
        prop_assert_eq!(p.p_to_u().unwrap(), u);
    }
}

/// `m . (S (x) id) . Delta = unit . counit` on every `P_a` with letters up to
/// 3 and length up to 4.
fn antipode_axiom_holds(convention: AntipodeConvention) -> Vec<Word> {
    let mut failures = Vec::new();
    for len in 0..=4 {
        for code in 0..3u32.pow(len) {
            let w = Word((0..len).map(|i| code / 3u32.pow(i) % 3 + 1).collect());
            let f = single(&w);
            let expected = QSymFn::one(Basis::P).scale(&f.counit());
            if antipode_convolution(&f, convention) != expected {
                failures.push(w);
            }
        }
    }
    failures
}

#[test]
fn reversed_antipode_satisfies_the_axiom() {
    assert!(antipode_axiom_holds(AntipodeConvention::Reversed).is_empty());
}

#[test]
fn unreversed_antipode_fails_on_unsymmetric_words() {
    let failures = antipode_axiom_holds(AntipodeConvention::Unreversed);
    // length-one words and constant words are fixed by reversal and pass
    assert!(failures.iter().all(|w| w.len() >= 2 && w.letters().windows(2).any(|p| p[0] != p[1])));
    assert!(failures.contains(&Word(vec![1, 2])));
    let w = single(&Word(vec![1, 2]));
    let got = antipode_convolution(&w, AntipodeConvention::Unreversed);
    assert_eq!(got, "P[1,2] - P[2,1]".parse().unwrap());
    assert_eq!(p_antipode(&single(&Word(vec![3]))), "-P[3]".parse().unwrap());
}

#[test]
fn m_and_p_are_inverse() {
    for n in 0..=6 {
        for c in compositions(n) {
            let w = Word(c);
            let p = single(&w);
            assert_eq!(m_to_p(&p_to_m(&p).unwrap()).unwrap(), p, "{w}");
            let m = QSymFn::basis_element(Basis::M, w.clone()).unwrap();
            assert_eq!(p_to_m(&m_to_p(&m).unwrap()).unwrap(), m, "{w}");
        }
    }
    let half = p_to_m(&"P[1,1]".parse().unwrap()).unwrap();
    assert_eq!(half, "M[1,1] + 1/2*M[2]".parse().unwrap());
    assert_eq!(p_to_m(&"P[1]".parse().unwrap()).unwrap(), "M[1]".parse().unwrap());
}

#[test]
fn spec_products() {
    let q = |s: &str| -> QSymFn { s.parse().unwrap() };
    assert_eq!(p_product(&q("P[1]"), &q("P[2]")), q("P[1,2] + P[2,1]"));
    assert_eq!(p_product(&q("P[1]"), &q("P[1]")), q("2*P[1,1]"));
    assert_eq!(p_product(&q("U[1]"), &q("U[1,0]")), q("2*U[1,1,0] + U[1,0,1]"));
    assert_eq!(p_coproduct(&q("P[2,1]")).len(), 3);
}
